"""Shared test machinery: exhaustive type enumeration, a polynomial
ordinal oracle below w^3, and a naive substitution-based reducer that is
independent of the package's normalization-by-evaluation kernel."""

from __future__ import annotations

from functools import lru_cache

from encodability.ordinals import ONE, ZERO, Ordinal, from_int
from encodability.typesyntax import Arrow, N, Prod, SimpleType


@lru_cache(maxsize=None)
def types_with_leaves(n: int) -> tuple[SimpleType, ...]:
    if n == 1:
        return (N,)
    out = []
    for i in range(1, n):
        for left in types_with_leaves(i):
            for right in types_with_leaves(n - i):
                out.append(Arrow(left, right))
                out.append(Prod(left, right))
    return tuple(out)


def enumerate_types(max_nodes: int) -> list[SimpleType]:
    """All types with at most max_nodes AST nodes (node counts are odd)."""
    out: list[SimpleType] = []
    leaves = 1
    while 2 * leaves - 1 <= max_nodes:
        out.extend(types_with_leaves(leaves))
        leaves += 1
    return out


# --- polynomial oracle for ordinals below w^3 -------------------------------

TWO = from_int(2)


def poly_ordinal(a: int, b: int, c: int) -> Ordinal:
    """w^2*a + w*b + c as a CNF Ordinal."""
    return Ordinal((TWO,) * a + (ONE,) * b + (ZERO,) * c)


def poly_cmp(x: tuple[int, int, int], y: tuple[int, int, int]) -> int:
    return (x > y) - (x < y)


def poly_add(x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int]:
    a1, b1, c1 = x
    a2, b2, c2 = y
    if a2 > 0:
        return (a1 + a2, b2, c2)
    if b2 > 0:
        return (a1, b1 + b2, c2)
    return (a1, b1, c1 + c2)


def poly_range(limit: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, c)
        for a in range(limit + 1)
        for b in range(limit + 1)
        for c in range(limit + 1)
    ]


# --- naive reducer on kernel term tuples (beta, projections, if; no eta) ----
#
# This is a deliberately different algorithm from the package's
# normalization-by-evaluation: explicit de Bruijn shifting and
# substitution, one visible redex contracted per step, selectable
# strategy.  It serves as the independent oracle for ground evaluation
# and as a confluence cross-check.


def shift(t, d, cutoff=0):
    tag = t[0]
    if tag == 0:
        return (0, t[1] + d) if t[1] >= cutoff else t
    if tag == 1:
        return (1, t[1], shift(t[2], d, cutoff + 1))
    if tag == 2:
        return (2, shift(t[1], d, cutoff), shift(t[2], d, cutoff))
    if tag == 3:
        return (3, shift(t[1], d, cutoff), shift(t[2], d, cutoff))
    if tag in (4, 5):
        return (tag, shift(t[1], d, cutoff))
    if tag == 6:
        return t
    return (7, t[1], shift(t[2], d, cutoff), shift(t[3], d, cutoff), shift(t[4], d, cutoff))


def subst(t, j, s):
    """t[j := s], decrementing the indices above j."""
    tag = t[0]
    if tag == 0:
        if t[1] == j:
            return s
        return (0, t[1] - 1) if t[1] > j else t
    if tag == 1:
        return (1, t[1], subst(t[2], j + 1, shift(s, 1)))
    if tag == 2:
        return (2, subst(t[1], j, s), subst(t[2], j, s))
    if tag == 3:
        return (3, subst(t[1], j, s), subst(t[2], j, s))
    if tag in (4, 5):
        return (tag, subst(t[1], j, s))
    if tag == 6:
        return t
    return (7, t[1], subst(t[2], j, s), subst(t[3], j, s), subst(t[4], j, s))


def contract(t):
    """The contractum if t is itself a redex, else None."""
    tag = t[0]
    if tag == 2 and t[1][0] == 1:
        return subst(t[1][2], 0, t[2])
    if tag == 4 and t[1][0] == 3:
        return t[1][1]
    if tag == 5 and t[1][0] == 3:
        return t[1][2]
    if tag == 7 and t[2][0] == 6:
        return t[3] if t[2][1] == t[1] else t[4]
    return None


def _children(t):
    tag = t[0]
    if tag == 1:
        return ((2, t[2]),)
    if tag in (2, 3):
        return ((1, t[1]), (2, t[2]))
    if tag in (4, 5):
        return ((1, t[1]),)
    if tag == 7:
        return ((2, t[2]), (3, t[3]), (4, t[4]))
    return ()


def _rebuild(t, slot, new):
    return t[:slot] + (new,) + t[slot + 1 :]


def step(t, strategy: str):
    """One reduction step under the given strategy, or None if normal."""
    if strategy == "outermost":
        reduced = contract(t)
        if reduced is not None:
            return reduced
        for slot, child in _children(t):
            stepped = step(child, strategy)
            if stepped is not None:
                return _rebuild(t, slot, stepped)
        return None
    if strategy == "innermost":
        for slot, child in reversed(_children(t)):
            stepped = step(child, strategy)
            if stepped is not None:
                return _rebuild(t, slot, stepped)
        return contract(t)
    raise ValueError(f"unknown strategy {strategy!r}")


def reduce_beta(t, strategy: str = "outermost", max_steps: int = 2_000_000):
    """Beta/projection/conditional normal form (no eta)."""
    for _ in range(max_steps):
        stepped = step(t, strategy)
        if stepped is None:
            return t
        t = stepped
    raise RuntimeError("reduction did not terminate within the step budget")
