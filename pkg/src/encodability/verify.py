"""Independent validation of retractions.

Two routes: a symbolic check that the decode-encode composite is
beta-eta-equal to the identity, and a semantic oracle that runs seeded
random inhabitants of the source type through the composite and
compares ground observations.  Soundness of the equality means the
symbolic route passing implies the semantic route never fails; the
semantic route exists to catch the symbolic route lying.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .normalize import equal_terms, normalize
from .synthesis import Retraction
from .terms import App, Fst, IfN, Lam, Num, Pair, Snd, Term, Var, print_term
from .typesyntax import Arrow, Base, Prod, SimpleType, N

__all__ = [
    "SemanticFailure",
    "VerifyReport",
    "verify_symbolic",
    "generate_inhabitant",
    "verify_semantic",
]

_MIX = 0x9E3779B97F4A7C15  # odd constant for cheap seed splitting


def _derive_seed(seed: int, *indices: int) -> int:
    out = seed & 0xFFFFFFFFFFFFFFFF
    for i in indices:
        out = (out * _MIX + i + 1) & 0xFFFFFFFFFFFFFFFF
    return out


def verify_symbolic(r: Retraction) -> bool:
    """Does decode-after-encode normalize to the identity on the source?"""
    x = "v_probe"
    composite = Lam(x, r.source, App(r.dec, App(r.enc, Var(x))))
    identity = Lam(x, r.source, Var(x))
    return equal_terms(composite, identity, Arrow(r.source, r.source))


def generate_inhabitant(
    ty: SimpleType,
    seed: int,
    fuel: int,
    use_var_probability: float = 0.75,
) -> Term:
    """A closed well-typed term of ``ty``, deterministic in all arguments.

    Numerals are drawn from [0, fuel].  Function bodies are biased (by
    ``use_var_probability``) toward consulting their argument through
    ground observations, so that generated functions are rarely
    constant.
    """
    if fuel < 1:
        raise ValueError("fuel must be >= 1")
    rng = random.Random(_derive_seed(seed, fuel))
    return _gen(ty, rng, fuel, (), use_var_probability)


def _gen(
    ty: SimpleType,
    rng: random.Random,
    fuel: int,
    observations: tuple[Term, ...],
    p_use: float,
) -> Term:
    match ty:
        case Base():
            if observations and fuel > 0 and rng.random() < p_use:
                scrut = observations[rng.randrange(len(observations))]
                n = rng.randint(0, fuel)
                return IfN(
                    n,
                    scrut,
                    _gen(N, rng, fuel - 1, observations, p_use),
                    _gen(N, rng, fuel - 1, observations, p_use),
                )
            return Num(rng.randint(0, max(fuel, 0)))
        case Prod(left, right):
            first = _gen(left, rng, fuel, observations, p_use)
            second = _gen(right, rng, fuel, observations, p_use)
            return Pair(first, second)
        case Arrow(domain, codomain):
            name = f"a{rng.randrange(1_000_000)}"
            new_obs = observations + tuple(
                _observations_of(Var(name), domain, rng, fuel)
            )
            body = _gen(codomain, rng, fuel, new_obs, p_use)
            return Lam(name, domain, body)
    raise TypeError(f"not a SimpleType: {ty!r}")


def _observations_of(
    v: Term, ty: SimpleType, rng: random.Random, fuel: int, limit: int = 4
) -> list[Term]:
    """Ground (type N) observations of a variable of the given type."""
    out: list[Term] = []

    def go(term: Term, t: SimpleType) -> None:
        if len(out) >= limit:
            return
        match t:
            case Base():
                out.append(term)
            case Prod(left, right):
                go(Fst(term), left)
                go(Snd(term), right)
            case Arrow(domain, codomain):
                argument = _gen(domain, rng, max(fuel - 1, 1), (), 0.0)
                go(App(term, argument), codomain)

    go(v, ty)
    return out


@dataclass(frozen=True)
class SemanticFailure:
    """One observed disagreement between a value and its round trip."""

    inhabitant: Term
    observation_args: tuple[Term, ...]
    expected: int
    got: int

    def as_dict(self) -> dict:
        return {
            "inhabitant": print_term(self.inhabitant),
            "observation_args": [print_term(a) for a in self.observation_args],
            "expected": self.expected,
            "got": self.got,
        }


@dataclass(frozen=True)
class VerifyReport:
    symbolic_ok: bool
    semantic_samples: int
    semantic_failures: tuple[SemanticFailure, ...] = field(default=())
    seed: int = 0

    @property
    def ok(self) -> bool:
        return self.symbolic_ok and not self.semantic_failures

    def as_dict(self) -> dict:
        return {
            "symbolic_ok": self.symbolic_ok,
            "semantic_samples": self.semantic_samples,
            "semantic_failures": [f.as_dict() for f in self.semantic_failures],
            "seed": self.seed,
        }


def _ground_numeral(t: Term) -> int:
    nf = normalize(t, N)
    assert isinstance(nf, Num), f"closed ground term stuck: {print_term(nf)}"
    return nf.value


def verify_semantic(
    r: Retraction, samples: int, seed: int, fuel: int = 5
) -> VerifyReport:
    """Run seeded inhabitants through decode-after-encode and compare
    ground observations; failures are reported, never raised.

    Deterministic in (retraction, samples, seed, fuel); samples are
    aggregated in index order.
    """
    symbolic_ok = verify_symbolic(r)
    failures: list[SemanticFailure] = []
    for index in range(samples):
        inhabitant = generate_inhabitant(r.source, _derive_seed(seed, index), fuel)
        round_trip = App(r.dec, App(r.enc, inhabitant))
        rng = random.Random(_derive_seed(seed, index, 1))
        args: list[Term] = []
        probe_a: Term = inhabitant
        probe_b: Term = round_trip
        ty = r.source
        while not isinstance(ty, Base):
            if isinstance(ty, Arrow):
                argument = generate_inhabitant(
                    ty.domain, _derive_seed(seed, index, 2 + len(args)), fuel
                )
                args.append(argument)
                probe_a = App(probe_a, argument)
                probe_b = App(probe_b, argument)
                ty = ty.codomain
            else:
                assert isinstance(ty, Prod)
                if rng.random() < 0.5:
                    probe_a, probe_b, ty = Fst(probe_a), Fst(probe_b), ty.left
                else:
                    probe_a, probe_b, ty = Snd(probe_a), Snd(probe_b), ty.right
        expected = _ground_numeral(probe_a)
        got = _ground_numeral(probe_b)
        if expected != got:
            failures.append(
                SemanticFailure(inhabitant, tuple(args), expected, got)
            )
    return VerifyReport(
        symbolic_ok=symbolic_ok,
        semantic_samples=samples,
        semantic_failures=tuple(failures),
        seed=seed,
    )
