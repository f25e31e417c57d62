"""Compile order derivations into encoder/decoder pairs.

Each derivation clause has a term-level reading: reflexivity is the
identity, transitivity composes, the successor step pads with a
literal and projects it away, the ``w^a * k <= w^(a+1)`` step tabulates
k functions inside one function of a paired domain (dispatching on the
extra N component with conditionals), sum monotonicity acts on a block
of product factors, and exponent monotonicity lifts a retraction
contravariantly through the domain of a function type.  Composing with
canonical-form coercions at both ends turns any rank comparison into a
retraction between the original types.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .canonical import compare_types, nest_product, rank, type_of_ordinal
from .coercions import IsoWitness, iso_witness, project, tuple_term, _Fresh
from .derivations import (
    ExpMono,
    LeDerivation,
    OmegaStep,
    Refl,
    SumMono,
    Succ,
    Trans,
    check_derivation,
    derivation_fault,
    derive_le,
)
from .normalize import equal_terms, normalize
from .ordinals import Ordering, Ordinal, print_ordinal
from .terms import App, Fst, IfN, Lam, Num, Pair, Snd, Term, Var
from .typesyntax import Arrow, N, Prod, SimpleType

__all__ = [
    "Retraction",
    "FromDerivation",
    "FromIso",
    "Composite",
    "NotEncodable",
    "synth_clause",
    "synth_retraction",
]


class NotEncodable(ValueError):
    """The source type strictly exceeds the target in rank; no witness
    exists, so synthesis refuses rather than emit anything."""

    def __init__(self, source_rank: Ordinal, target_rank: Ordinal):
        self.source_rank = source_rank
        self.target_rank = target_rank
        super().__init__(
            "no retraction exists: source rank exceeds target rank: "
            f"{print_ordinal(source_rank)} > {print_ordinal(target_rank)}"
        )


@dataclass(frozen=True)
class FromDerivation:
    derivation: LeDerivation


@dataclass(frozen=True)
class FromIso:
    witness: IsoWitness


@dataclass(frozen=True)
class Composite:
    parts: tuple["Provenance", ...]


Provenance = Union[FromDerivation, FromIso, Composite]


@dataclass(frozen=True)
class Retraction:
    """Encoder/decoder pair with ``dec . enc`` equal to the identity."""

    source: SimpleType
    target: SimpleType
    enc: Term
    dec: Term
    provenance: Provenance


def _mentions_zero(d: LeDerivation) -> bool:
    if d.lhs.is_zero or d.rhs.is_zero:
        return True
    return any(_mentions_zero(c) for c in d.children())


def synth_clause(d: LeDerivation) -> Retraction:
    """Retraction between the canonical types of the derivation endpoints.

    Requires a valid derivation in which every endpoint is >= 1 (the
    trees produced by derive_le on nonzero ordinals qualify).
    """
    fault = derivation_fault(d)
    if fault is not None:
        raise ValueError(f"invalid derivation at {list(fault.path)}: {fault.reason}")
    if _mentions_zero(d):
        raise ValueError("derivation mentions ordinal 0, which no type realizes")
    fresh = _Fresh()
    enc, dec = _compile(d, fresh)
    return Retraction(
        source=type_of_ordinal(d.lhs),
        target=type_of_ordinal(d.rhs),
        enc=enc,
        dec=dec,
        provenance=FromDerivation(d),
    )


def _identity(ty: SimpleType, fresh: _Fresh) -> Term:
    x = fresh("i")
    return normalize(Lam(x, ty, Var(x)), Arrow(ty, ty))


def _compile(d: LeDerivation, fresh: _Fresh) -> tuple[Term, Term]:
    match d:
        case Refl(a, _, _):
            ident = _identity(type_of_ordinal(a), fresh)
            return ident, ident
        case Trans(d1, d2, lhs, rhs):
            e1, p1 = _compile(d1, fresh)
            e2, p2 = _compile(d2, fresh)
            src = type_of_ordinal(lhs)
            tgt = type_of_ordinal(rhs)
            x = fresh("x")
            z = fresh("z")
            enc = Lam(x, src, App(e2, App(e1, Var(x))))
            dec = Lam(z, tgt, App(p1, App(p2, Var(z))))
            return enc, dec
        case Succ(a, _, _):
            src = type_of_ordinal(a)
            x = fresh("x")
            p = fresh("p")
            enc = Lam(x, src, Pair(Var(x), Num(0)))
            dec = Lam(p, Prod(src, N), Fst(Var(p)))
            return enc, dec
        case OmegaStep(a, k, _, _):
            return _compile_omega_step(a, k, fresh)
        case SumMono(g, sub, lhs, rhs):
            return _compile_sum_mono(g, sub, lhs, rhs, fresh)
        case ExpMono(sub, _, _):
            sub_enc, sub_dec = _compile(sub, fresh)
            dom_small = type_of_ordinal(sub.lhs)
            dom_big = type_of_ordinal(sub.rhs)
            f = fresh("f")
            y = fresh("y")
            g = fresh("g")
            x = fresh("x")
            enc = Lam(
                f, Arrow(dom_small, N),
                Lam(y, dom_big, App(Var(f), App(sub_dec, Var(y)))),
            )
            dec = Lam(
                g, Arrow(dom_big, N),
                Lam(x, dom_small, App(Var(g), App(sub_enc, Var(x)))),
            )
            return enc, dec
    raise TypeError(f"unknown derivation node {type(d).__name__}")


def _compile_omega_step(a: Ordinal, k: int, fresh: _Fresh) -> tuple[Term, Term]:
    # k >= 1 is guaranteed by the zero scan (k = 0 would give lhs 0)
    fv = fresh("F")
    g = fresh("g")
    if a.is_zero:
        # k literals tabulated into one function N -> N
        src = nest_product((N,) * k)
        z = fresh("z")
        chain: Term = Num(0)
        for j in reversed(range(k)):
            chain = IfN(j, Var(z), project(k, j, Var(fv)), chain)
        enc = Lam(fv, src, Lam(z, N, chain))
        dec = Lam(g, Arrow(N, N), tuple_term([App(Var(g), Num(j)) for j in range(k)]))
        return enc, dec
    dom = type_of_ordinal(a)
    factor = Arrow(dom, N)
    src = nest_product((factor,) * k)
    paired = Prod(dom, N)
    p = fresh("p")
    chain = Num(0)
    for j in reversed(range(k)):
        chain = IfN(j, Snd(Var(p)), App(project(k, j, Var(fv)), Fst(Var(p))), chain)
    enc = Lam(fv, src, Lam(p, paired, chain))
    x = fresh("x")
    dec = Lam(
        g, Arrow(paired, N),
        tuple_term(
            [Lam(x, dom, App(Var(g), Pair(Var(x), Num(j)))) for j in range(k)]
        ),
    )
    return enc, dec


def _compile_sum_mono(
    g: Ordinal, sub: LeDerivation, lhs: Ordinal, rhs: Ordinal, fresh: _Fresh
) -> tuple[Term, Term]:
    sub_enc, sub_dec = _compile(sub, fresh)
    block = len(g.exponents)
    n_small = len(sub.lhs.exponents)
    n_big = len(sub.rhs.exponents)
    src = type_of_ordinal(lhs)
    tgt = type_of_ordinal(rhs)

    def transport(coercion: Term, n_from: int, n_to: int, whole: SimpleType, v: str) -> Term:
        # identity on the leading block, the coercion on the trailing factors
        arity_in = block + n_from
        kept = [project(arity_in, i, Var(v)) for i in range(block)]
        moved_in = tuple_term(
            [project(arity_in, block + i, Var(v)) for i in range(n_from)]
        )
        moved_out = App(coercion, moved_in)
        parts = kept + [project(n_to, j, moved_out) for j in range(n_to)]
        return Lam(v, whole, tuple_term(parts))

    enc = transport(sub_enc, n_small, n_big, src, fresh("x"))
    dec = transport(sub_dec, n_big, n_small, tgt, fresh("z"))
    return enc, dec


def _roundtrip_is_identity(r: Retraction) -> bool:
    x = "rt_probe"
    composite = Lam(x, r.source, App(r.dec, App(r.enc, Var(x))))
    return equal_terms(composite, Lam(x, r.source, Var(x)), Arrow(r.source, r.source))


def synth_retraction(s: SimpleType, t: SimpleType, verify: bool = True) -> Retraction:
    """End-to-end retraction ``s`` into ``t`` whenever ``s`` does not
    exceed ``t`` in rank; refuses (NotEncodable) otherwise.

    The result's terms are eta-long beta-normal.  With ``verify`` the
    round trip is re-checked before returning (skippable when callers
    verify separately).
    """
    relation = compare_types(s, t)
    if relation is Ordering.GREATER:
        raise NotEncodable(rank(s), rank(t))
    if relation is Ordering.EQUAL:
        witness = iso_witness(s, t)
        result = Retraction(s, t, witness.fwd, witness.bwd, FromIso(witness))
    else:
        derivation = derive_le(rank(s), rank(t))
        core = synth_clause(derivation)
        into = iso_witness(s, core.source)
        outof = iso_witness(core.target, t)
        x = "v_in"
        z = "v_out"
        enc = Lam(x, s, App(outof.fwd, App(core.enc, App(into.fwd, Var(x)))))
        dec = Lam(z, t, App(into.bwd, App(core.dec, App(outof.bwd, Var(z)))))
        result = Retraction(
            source=s,
            target=t,
            enc=normalize(enc, Arrow(s, t)),
            dec=normalize(dec, Arrow(t, s)),
            provenance=Composite(
                (FromIso(into), FromDerivation(derivation), FromIso(outof))
            ),
        )
    if verify and not _roundtrip_is_identity(result):
        raise RuntimeError(
            "internal error: synthesized retraction failed verification"
        )
    return result
