"""Derivation trees for the inductive ordering on CNF ordinals.

Six clauses generate the order: reflexivity, transitivity, the
successor step ``a <= a+1``, the collapse ``w^a * k <= w^(a+1)``,
monotonicity of addition on Cantor sums, and monotonicity of
omega-exponentiation.  ``derive_le`` constructs a tree for any pair
``a <= b`` below epsilon_0; ``check_derivation`` validates a tree node
by node.  Trees are the input language of the term synthesizer, so the
checker accepts nothing the synthesizer cannot compile.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ordinals import (
    ONE,
    ZERO,
    Ordering,
    Ordinal,
    cantor_add,
    compare_ordinals,
    is_cantor_sum,
    omega_pow,
    omega_times,
    print_ordinal,
    successor,
)

__all__ = [
    "LeDerivation",
    "Refl",
    "Trans",
    "Succ",
    "OmegaStep",
    "SumMono",
    "ExpMono",
    "refl",
    "trans",
    "succ",
    "omega_step",
    "sum_mono",
    "exp_mono",
    "derive_le",
    "check_derivation",
    "derivation_fault",
    "Fault",
]


class LeDerivation:
    """A proof tree for ``lhs <= rhs``; every node carries its endpoints."""

    __slots__ = ()
    clause_name = "?"

    lhs: Ordinal
    rhs: Ordinal

    def children(self) -> tuple[LeDerivation, ...]:
        return ()

    def __str__(self) -> str:
        return f"{self.clause_name}: {print_ordinal(self.lhs)} <= {print_ordinal(self.rhs)}"


@dataclass(frozen=True)
class Refl(LeDerivation):
    a: Ordinal
    lhs: Ordinal
    rhs: Ordinal
    clause_name = "refl"


@dataclass(frozen=True)
class Trans(LeDerivation):
    d1: LeDerivation
    d2: LeDerivation
    lhs: Ordinal
    rhs: Ordinal
    clause_name = "trans"

    def children(self):
        return (self.d1, self.d2)


@dataclass(frozen=True)
class Succ(LeDerivation):
    a: Ordinal
    lhs: Ordinal
    rhs: Ordinal
    clause_name = "succ"


@dataclass(frozen=True)
class OmegaStep(LeDerivation):
    a: Ordinal
    k: int
    lhs: Ordinal
    rhs: Ordinal
    clause_name = "omega-step"


@dataclass(frozen=True)
class SumMono(LeDerivation):
    g: Ordinal
    d: LeDerivation
    lhs: Ordinal
    rhs: Ordinal
    clause_name = "sum-mono"

    def children(self):
        return (self.d,)


@dataclass(frozen=True)
class ExpMono(LeDerivation):
    d: LeDerivation
    lhs: Ordinal
    rhs: Ordinal
    clause_name = "exp-mono"

    def children(self):
        return (self.d,)


def refl(a: Ordinal) -> Refl:
    return Refl(a, a, a)


def trans(d1: LeDerivation, d2: LeDerivation) -> Trans:
    if d1.rhs != d2.lhs:
        raise ValueError(f"trans endpoints do not meet: {d1.rhs} vs {d2.lhs}")
    return Trans(d1, d2, d1.lhs, d2.rhs)


def succ(a: Ordinal) -> Succ:
    return Succ(a, a, successor(a))


def omega_step(a: Ordinal, k: int) -> OmegaStep:
    if k < 0:
        raise ValueError("k must be a natural number")
    return OmegaStep(a, k, omega_times(a, k), omega_pow(successor(a)))


def sum_mono(g: Ordinal, d: LeDerivation) -> SumMono:
    if g.is_zero:
        raise ValueError("sum-mono with empty prefix is disallowed")
    for side in (d.lhs, d.rhs):
        if side.is_zero or not is_cantor_sum(g, side):
            raise ValueError(
                f"{print_ordinal(g)} + {print_ordinal(side)} is not a Cantor sum"
            )
    return SumMono(g, d, cantor_add(g, d.lhs), cantor_add(g, d.rhs))


def exp_mono(d: LeDerivation) -> ExpMono:
    return ExpMono(d, omega_pow(d.lhs), omega_pow(d.rhs))


@dataclass(frozen=True)
class Fault:
    """Where and why a derivation is invalid; path is child indices."""

    path: tuple[int, ...]
    reason: str


def derivation_fault(d: LeDerivation) -> Fault | None:
    """The first invalid node in leftmost-innermost order, or None."""
    for i, child in enumerate(d.children()):
        fault = derivation_fault(child)
        if fault is not None:
            return Fault((i,) + fault.path, fault.reason)
    reason = _node_fault(d)
    if reason is not None:
        return Fault((), reason)
    if compare_ordinals(d.lhs, d.rhs) is Ordering.GREATER:
        return Fault((), f"endpoints out of order: {d.lhs} > {d.rhs}")
    return None


def _node_fault(d: LeDerivation) -> str | None:
    match d:
        case Refl(a, lhs, rhs):
            if lhs != a or rhs != a:
                return "refl endpoints differ from its ordinal"
        case Trans(d1, d2, lhs, rhs):
            if d1.rhs != d2.lhs:
                return f"trans endpoints do not meet: {d1.rhs} vs {d2.lhs}"
            if lhs != d1.lhs or rhs != d2.rhs:
                return "trans endpoints differ from its children's"
        case Succ(a, lhs, rhs):
            if lhs != a:
                return "succ lhs differs from its ordinal"
            if rhs != successor(a):
                return f"succ rhs is not {a} + 1"
        case OmegaStep(a, k, lhs, rhs):
            if not isinstance(k, int) or k < 0:
                return "omega-step multiplicity is not a natural"
            if lhs != omega_times(a, k):
                return f"omega-step lhs is not w^({a}) * {k}"
            if rhs != omega_pow(successor(a)):
                return f"omega-step rhs is not w^({a} + 1)"
        case SumMono(g, sub, lhs, rhs):
            if g.is_zero:
                return "sum-mono with empty prefix"
            if sub.lhs.is_zero or sub.rhs.is_zero:
                return "sum-mono over a zero summand"
            if not is_cantor_sum(g, sub.lhs) or not is_cantor_sum(g, sub.rhs):
                return f"sum-mono prefix {g} does not form Cantor sums"
            if lhs != cantor_add(g, sub.lhs) or rhs != cantor_add(g, sub.rhs):
                return "sum-mono endpoints differ from the sums"
        case ExpMono(sub, lhs, rhs):
            if lhs != omega_pow(sub.lhs) or rhs != omega_pow(sub.rhs):
                return "exp-mono endpoints are not the omega-powers of its child's"
        case _:
            return f"unknown node {type(d).__name__}"
    return None


def check_derivation(d: LeDerivation) -> bool:
    """True iff every node satisfies its side conditions and endpoints."""
    return derivation_fault(d) is None


def derive_le(a: Ordinal, b: Ordinal) -> LeDerivation:
    """Construct a derivation of ``a <= b``; rejects ``a > b``.

    When both endpoints are >= 1 the tree never mentions the ordinal 0,
    so it can always be compiled to encoder/decoder terms.
    """
    if compare_ordinals(a, b) is Ordering.GREATER:
        raise ValueError(
            f"not derivable: {print_ordinal(a)} > {print_ordinal(b)}"
        )
    return _derive(a, b)


def _derive(a: Ordinal, b: Ordinal) -> LeDerivation:
    # complete induction on b
    if a == b:
        return refl(a)
    prefix = Ordinal(b.exponents[:-1])
    d = b.exponents[-1]
    if d.is_zero:
        # successor: b = prefix + 1
        step = succ(prefix)
        base = _derive(a, prefix)
        return step if isinstance(base, Refl) else trans(base, step)
    if d.exponents[-1].is_zero:
        # limit with successor exponent d = z+1: approach along w^z * k
        z = Ordinal(d.exponents[:-1])
        k = 1
        while compare_ordinals(a, cantor_add(prefix, omega_times(z, k))) is Ordering.GREATER:
            k += 1
        core: LeDerivation = omega_step(z, k)
    else:
        # limit exponent: approach along the fundamental sequence of d
        k = 1
        while True:
            dk = _fundamental(d, k)
            if compare_ordinals(a, cantor_add(prefix, omega_pow(dk))) is not Ordering.GREATER:
                break
            k += 1
        core = exp_mono(_derive(dk, d))
    step = core if prefix.is_zero else sum_mono(prefix, core)
    base = _derive(a, step.lhs)
    return step if isinstance(base, Refl) else trans(base, step)


def _fundamental(d: Ordinal, k: int) -> Ordinal:
    """k-th element (k >= 1) of a fixed sequence with limit d."""
    head = d.exponents[:-1]
    e = d.exponents[-1]
    if e.is_zero:
        raise ValueError(f"{d} is not a limit ordinal")
    if e.exponents[-1].is_zero:
        z = Ordinal(e.exponents[:-1])
        tail = (z,) * k
    else:
        tail = (_fundamental(e, k),)
    return Ordinal(head + tail)
