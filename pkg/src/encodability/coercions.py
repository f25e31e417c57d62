"""Coercion terms between trivially isomorphic types.

For every type there are closed terms converting to and from its
canonical form, built from lambdas, pairs and projections only (no
literals, no conditionals).  Composing the two directions through the
shared canonical form yields an isomorphism witness for any pair of
trivially isomorphic types; both round trips are beta-eta-equal to the
identity, which ``iso_witness`` callers re-check rather than trust.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .canonical import canonical_factors, canonicalize, factor_rank, nest_product, product_factors, trivially_isomorphic
from .normalize import normalize
from .ordinals import Ordering, compare_ordinals
from .terms import App, Fst, Lam, Pair, Snd, Term, Var
from .typesyntax import Arrow, Base, N, Prod, SimpleType, print_type

__all__ = ["IsoWitness", "iso_witness", "to_canonical_term", "from_canonical_term"]


@dataclass(frozen=True)
class IsoWitness:
    """Mutually inverse coercions between two isomorphic types."""

    source: SimpleType
    target: SimpleType
    fwd: Term
    bwd: Term


def tuple_term(parts: list[Term]) -> Term:
    """Left-nested tuple of one or more components."""
    if not parts:
        raise ValueError("empty products do not exist here")
    return reduce(Pair, parts)


def project(arity: int, index: int, value: Term) -> Term:
    """Select component ``index`` from a left-nested product of ``arity``."""
    for _ in range(arity - 1 - index):
        value = Fst(value)
    return value if index == 0 else Snd(value)


class _Fresh:
    def __init__(self):
        self.counter = 0

    def __call__(self, prefix: str = "x") -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"


def _merge_layout(
    a: tuple[SimpleType, ...], b: tuple[SimpleType, ...]
) -> tuple[tuple[str, int], ...]:
    """Provenance tags of the stable rank merge of two factor lists;
    mirrors the merge used by canonical_factors exactly."""
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if compare_ordinals(factor_rank(a[i]), factor_rank(b[j])) is Ordering.LESS:
            out.append(("B", j))
            j += 1
        else:
            out.append(("A", i))
            i += 1
    out.extend(("A", k) for k in range(i, len(a)))
    out.extend(("B", k) for k in range(j, len(b)))
    return tuple(out)


def _arrow_layout(domain: SimpleType, codomain: SimpleType):
    """Per-factor domain layouts and the sort permutation for an arrow.

    Returns (domain factors, codomain factors, per-factor (layout,
    merged domain type, codomain-factor domain arity), order) where
    ``order[j]`` is the codomain factor providing sorted position j.
    """
    df = canonical_factors(domain)
    cf = canonical_factors(codomain)
    per = []
    for f in cf:
        bdom = () if isinstance(f, Base) else product_factors(f.domain)
        layout = _merge_layout(df, bdom)
        merged = tuple(df[k] if side == "A" else bdom[k] for side, k in layout)
        per.append((layout, nest_product(merged), len(bdom)))
    # mirrors list.sort(key=factor_rank, reverse=True): stable on ties
    order = sorted(
        range(len(cf)),
        key=lambda i: factor_rank(Arrow(per[i][1], N)),
        reverse=True,
    )
    return df, cf, per, order


def _to_canon(t: SimpleType, x: Term, fresh: _Fresh) -> Term:
    """Term of type canonicalize(t), given ``x`` of type t."""
    match t:
        case Base():
            return x
        case Prod(left, right):
            lf = canonical_factors(left)
            rf = canonical_factors(right)
            vl = _to_canon(left, Fst(x), fresh)
            vr = _to_canon(right, Snd(x), fresh)
            parts = [
                project(len(lf), k, vl) if side == "A" else project(len(rf), k, vr)
                for side, k in _merge_layout(lf, rf)
            ]
            return tuple_term(parts)
        case Arrow(domain, codomain):
            df, cf, per, order = _arrow_layout(domain, codomain)
            components = []
            for i in order:
                layout, merged_ty, bdom_arity = per[i]
                p = fresh("p")
                a_parts = [
                    project(len(layout), pos, Var(p))
                    for pos, (side, _) in enumerate(layout)
                    if side == "A"
                ]
                xd = _from_canon(domain, tuple_term(a_parts), fresh)
                vc = _to_canon(codomain, App(x, xd), fresh)
                comp = project(len(cf), i, vc)
                if isinstance(cf[i], Base):
                    body = comp
                else:
                    b_parts = [
                        project(len(layout), pos, Var(p))
                        for pos, (side, _) in enumerate(layout)
                        if side == "B"
                    ]
                    body = App(comp, tuple_term(b_parts))
                components.append(Lam(p, merged_ty, body))
            return tuple_term(components)
    raise TypeError(f"not a SimpleType: {t!r}")


def _from_canon(t: SimpleType, y: Term, fresh: _Fresh) -> Term:
    """Term of type t, given ``y`` of type canonicalize(t)."""
    match t:
        case Base():
            return y
        case Prod(left, right):
            lf = canonical_factors(left)
            rf = canonical_factors(right)
            layout = _merge_layout(lf, rf)
            arity = len(layout)
            l_parts = [
                project(arity, pos, y)
                for pos, (side, _) in enumerate(layout)
                if side == "A"
            ]
            r_parts = [
                project(arity, pos, y)
                for pos, (side, _) in enumerate(layout)
                if side == "B"
            ]
            return Pair(
                _from_canon(left, tuple_term(l_parts), fresh),
                _from_canon(right, tuple_term(r_parts), fresh),
            )
        case Arrow(domain, codomain):
            df, cf, per, order = _arrow_layout(domain, codomain)
            position = {i: j for j, i in enumerate(order)}
            xv = fresh("x")
            va = _to_canon(domain, Var(xv), fresh)
            components = []
            for i, f in enumerate(cf):
                layout, _, bdom_arity = per[i]
                gi = project(len(cf), position[i], y)
                if isinstance(f, Base):
                    parts = [project(len(df), k, va) for _, k in layout]
                    components.append(App(gi, tuple_term(parts)))
                else:
                    zi = fresh("z")
                    parts = [
                        project(len(df), k, va)
                        if side == "A"
                        else project(bdom_arity, k, Var(zi))
                        for side, k in layout
                    ]
                    components.append(Lam(zi, f.domain, App(gi, tuple_term(parts))))
            vc = tuple_term(components)
            return Lam(xv, domain, _from_canon(codomain, vc, fresh))
    raise TypeError(f"not a SimpleType: {t!r}")


def to_canonical_term(t: SimpleType) -> Term:
    """Closed coercion ``t -> canonicalize(t)``, literal- and conditional-free."""
    fresh = _Fresh()
    x = fresh("x")
    return Lam(x, t, _to_canon(t, Var(x), fresh))


def from_canonical_term(t: SimpleType) -> Term:
    """Closed coercion ``canonicalize(t) -> t``."""
    fresh = _Fresh()
    y = fresh("y")
    return Lam(y, canonicalize(t), _from_canon(t, Var(y), fresh))


def iso_witness(s: SimpleType, t: SimpleType) -> IsoWitness:
    """Coercion pair between trivially isomorphic types, eta-long normal.

    Both composites are beta-eta-equal to the identity; the terms use
    no numeric literals and no conditionals.
    """
    if not trivially_isomorphic(s, t):
        raise ValueError(
            f"{print_type(s)} and {print_type(t)} are not trivially isomorphic"
        )
    fresh = _Fresh()
    x = fresh("x")
    fwd = Lam(x, s, _from_canon(t, _to_canon(s, Var(x), fresh), fresh))
    y = fresh("y")
    bwd = Lam(y, t, _from_canon(s, _to_canon(t, Var(y), fresh), fresh))
    return IsoWitness(
        source=s,
        target=t,
        fwd=normalize(fwd, Arrow(s, t)),
        bwd=normalize(bwd, Arrow(t, s)),
    )
