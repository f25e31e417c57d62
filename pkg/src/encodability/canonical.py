"""Canonical forms and ordinal ranks for simple types.

Every type is equivalent, up to the congruence generated by currying,
arrow-over-product distribution, product associativity and product
commutativity, to a unique *canonical* type: an uncurried type
(``rho ::= N | theta -> N``, ``theta ::= rho | theta * rho``) whose
product factors are sorted by non-increasing rank.  Ranks are ordinals
below epsilon_0: N has rank 1, a sorted product adds the ranks of its
factors, and ``theta -> N`` has rank omega to the rank of theta.  On
canonical types the rank map is a bijection onto the nonzero ordinals,
which makes the induced preorder on all types total and decidable.
"""

from __future__ import annotations

from functools import reduce

from .ordinals import (
    ONE,
    Ordering,
    Ordinal,
    cantor_add,
    compare_ordinals,
    omega_pow,
)
from .typesyntax import Arrow, Base, N, Prod, SimpleType

__all__ = [
    "canonicalize",
    "rank",
    "type_of_ordinal",
    "compare_types",
    "trivially_isomorphic",
    "is_canonical",
    "canonical_factors",
    "product_factors",
    "nest_product",
]

_factor_rank_cache: dict[SimpleType, Ordinal] = {}
_canon_cache: dict[SimpleType, tuple[SimpleType, ...]] = {}


def product_factors(t: SimpleType) -> tuple[SimpleType, ...]:
    """Flatten a left-nested product into its factor list."""
    out = []
    while isinstance(t, Prod):
        out.append(t.right)
        t = t.left
    out.append(t)
    out.reverse()
    return tuple(out)


def nest_product(factors: tuple[SimpleType, ...]) -> SimpleType:
    """Left-nest a non-empty factor list back into a type."""
    if not factors:
        raise ValueError("empty products do not exist here")
    return reduce(Prod, factors)


def factor_rank(f: SimpleType) -> Ordinal:
    """Rank of a canonical factor (N or an uncurried arrow)."""
    cached = _factor_rank_cache.get(f)
    if cached is not None:
        return cached
    if isinstance(f, Base):
        r = ONE
    else:
        assert isinstance(f, Arrow)
        domain_rank = _sum_ranks(product_factors(f.domain))
        r = omega_pow(domain_rank)
    _factor_rank_cache[f] = r
    return r


def _sum_ranks(factors: tuple[SimpleType, ...]) -> Ordinal:
    # factors arrive sorted by non-increasing rank, so the running
    # ordinal sums never absorb anything
    return reduce(cantor_add, (factor_rank(f) for f in factors))


def _merge_factors(
    a: tuple[SimpleType, ...], b: tuple[SimpleType, ...]
) -> tuple[SimpleType, ...]:
    """Merge two rank-sorted factor lists, stably, left list first on ties."""
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if compare_ordinals(factor_rank(a[i]), factor_rank(b[j])) is Ordering.LESS:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def canonical_factors(t: SimpleType) -> tuple[SimpleType, ...]:
    """Factor list of the canonical form of ``t``, sorted by rank, descending."""
    cached = _canon_cache.get(t)
    if cached is not None:
        return cached
    match t:
        case Base():
            fs: tuple[SimpleType, ...] = (N,)
        case Prod(left, right):
            fs = _merge_factors(canonical_factors(left), canonical_factors(right))
        case Arrow(domain, codomain):
            dom = canonical_factors(domain)
            mapped = []
            for f in canonical_factors(codomain):
                if isinstance(f, Base):
                    new_dom = dom
                else:
                    new_dom = _merge_factors(dom, product_factors(f.domain))
                mapped.append(Arrow(nest_product(new_dom), N))
            mapped.sort(key=factor_rank, reverse=True)
            fs = tuple(mapped)
        case _:
            raise TypeError(f"not a SimpleType: {t!r}")
    _canon_cache[t] = fs
    return fs


def canonicalize(t: SimpleType) -> SimpleType:
    """The canonical representative of ``t``'s isomorphism class."""
    return nest_product(canonical_factors(t))


def rank(t: SimpleType) -> Ordinal:
    """Ordinal rank of a type; always >= 1."""
    return _sum_ranks(canonical_factors(t))


def type_of_ordinal(a: Ordinal) -> SimpleType:
    """The unique canonical type of rank ``a``; requires ``a >= 1``."""
    if a.is_zero:
        raise ValueError("no type has rank 0: empty products do not exist here")
    factors = tuple(
        N if e.is_zero else Arrow(type_of_ordinal(e), N) for e in a.exponents
    )
    return nest_product(factors)


def compare_types(s: SimpleType, t: SimpleType) -> Ordering:
    """Total preorder on types: the order of their ranks."""
    return compare_ordinals(rank(s), rank(t))


def trivially_isomorphic(s: SimpleType, t: SimpleType) -> bool:
    """True iff the two types have the same canonical form."""
    return canonicalize(s) == canonicalize(t)


def is_canonical(t: SimpleType) -> bool:
    """Does ``t`` match the uncurried grammar with rank-sorted factors?"""
    return _sorted_factor_ranks(product_factors(t)) is not None


def _sorted_factor_ranks(factors: tuple[SimpleType, ...]) -> tuple[Ordinal, ...] | None:
    ranks = []
    for f in factors:
        if isinstance(f, Base):
            ranks.append(ONE)
        elif isinstance(f, Arrow) and isinstance(f.codomain, Base):
            sub = _sorted_factor_ranks(product_factors(f.domain))
            if sub is None:
                return None
            ranks.append(omega_pow(reduce(cantor_add, sub)))
        else:
            return None
    for prev, cur in zip(ranks, ranks[1:]):
        if compare_ordinals(prev, cur) is Ordering.LESS:
            return None
    return tuple(ranks)
