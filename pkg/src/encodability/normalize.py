"""Eta-long beta-normalization and decidable term equality.

The traversal kernel lives in ``_nf`` (pure Python); installing the
package also builds a Cython-compiled twin ``_nf_c`` when a compiler is
available.  The faster kernel is picked at import time; set
``ENCODABILITY_PURE=1`` to force the pure one.
"""

from __future__ import annotations

import os
from typing import Sequence

from .terms import App, Fst, IfN, Lam, Num, Pair, Snd, Term, TypeCheckError, Var, typecheck
from .typesyntax import Arrow, Base, Prod, SimpleType, print_type

if os.environ.get("ENCODABILITY_PURE"):
    from . import _nf as _kernel
else:
    try:
        from . import _nf_c as _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _nf as _kernel

__all__ = [
    "normalize",
    "equal_terms",
    "kernel_name",
    "type_to_kernel",
    "type_from_kernel",
    "term_to_kernel",
    "term_from_kernel",
]

Context = Sequence[tuple[str, SimpleType]]


def kernel_name() -> str:
    """Which normalization kernel is active: 'compiled' or 'pure'."""
    return "compiled" if _kernel.__name__.endswith("_nf_c") else "pure"


def type_to_kernel(t: SimpleType):
    match t:
        case Base():
            return 0
        case Arrow(domain, codomain):
            return (1, type_to_kernel(domain), type_to_kernel(codomain))
        case Prod(left, right):
            return (2, type_to_kernel(left), type_to_kernel(right))
    raise TypeError(f"not a SimpleType: {t!r}")


def type_from_kernel(k) -> SimpleType:
    if k == 0:
        return Base()
    if k[0] == 1:
        return Arrow(type_from_kernel(k[1]), type_from_kernel(k[2]))
    return Prod(type_from_kernel(k[1]), type_from_kernel(k[2]))


def term_to_kernel(t: Term, names: tuple[str, ...] = ()):
    """Convert to the nameless tuple form; ``names`` lists the binders in
    scope, innermost first."""
    match t:
        case Var(name):
            try:
                return (0, names.index(name))
            except ValueError:
                raise ValueError(f"unbound variable {name!r}") from None
        case Lam(name, annot, body):
            return (1, type_to_kernel(annot), term_to_kernel(body, (name,) + names))
        case App(fun, arg):
            return (2, term_to_kernel(fun, names), term_to_kernel(arg, names))
        case Pair(left, right):
            return (3, term_to_kernel(left, names), term_to_kernel(right, names))
        case Fst(arg):
            return (4, term_to_kernel(arg, names))
        case Snd(arg):
            return (5, term_to_kernel(arg, names))
        case Num(value):
            return (6, value)
        case IfN(n, scrut, then_, else_):
            return (
                7,
                n,
                term_to_kernel(scrut, names),
                term_to_kernel(then_, names),
                term_to_kernel(else_, names),
            )
    raise TypeError(f"not a Term: {t!r}")


_NICE_NAMES = ("x", "y", "z", "u", "v", "p", "q", "r", "s", "t")


def term_from_kernel(k, free_names: tuple[str, ...] = ()) -> Term:
    """Convert back to named form, choosing fresh binder names that avoid
    the free names."""
    avoid = frozenset(free_names)

    def pick(depth: int) -> str:
        base = _NICE_NAMES[depth] if depth < len(_NICE_NAMES) else f"x{depth}"
        name = base
        tick = 0
        while name in avoid:
            tick += 1
            name = f"{base}{tick}"
        return name

    def go(k, binders: tuple[str, ...]) -> Term:
        tag = k[0]
        if tag == 0:
            idx = k[1]
            if idx < len(binders):
                return Var(binders[idx])
            return Var(free_names[idx - len(binders)])
        if tag == 1:
            name = pick(len(binders))
            return Lam(name, type_from_kernel(k[1]), go(k[2], (name,) + binders))
        if tag == 2:
            return App(go(k[1], binders), go(k[2], binders))
        if tag == 3:
            return Pair(go(k[1], binders), go(k[2], binders))
        if tag == 4:
            return Fst(go(k[1], binders))
        if tag == 5:
            return Snd(go(k[1], binders))
        if tag == 6:
            return Num(k[1])
        return IfN(k[1], go(k[2], binders), go(k[3], binders), go(k[4], binders))

    return go(k, ())


def _check_expected(t: Term, ty: SimpleType, context: Context) -> None:
    actual = typecheck(context, t)
    if actual != ty:
        raise TypeCheckError((), "term does not have the stated type", ty, actual)


def _nf_kernel(t: Term, ty: SimpleType, context: Context):
    names = tuple(name for name, _ in reversed(context))
    ctx_tys = tuple(type_to_kernel(cty) for _, cty in reversed(context))
    return _kernel.normalize(term_to_kernel(t, names), type_to_kernel(ty), ctx_tys)


def normalize(t: Term, ty: SimpleType, context: Context = ()) -> Term:
    """Eta-long beta-normal form of ``t`` at ``ty``.

    Free variables must be covered by ``context``.  Type errors are
    rejected before any reduction happens.  The result is deterministic
    and the procedure always terminates.
    """
    _check_expected(t, ty, context)
    nf = _nf_kernel(t, ty, context)
    return term_from_kernel(nf, tuple(name for name, _ in reversed(context)))


def equal_terms(a: Term, b: Term, ty: SimpleType, context: Context = ()) -> bool:
    """Beta-eta equality at a type: compare eta-long normal forms."""
    _check_expected(a, ty, context)
    _check_expected(b, ty, context)
    return _nf_kernel(a, ty, context) == _nf_kernel(b, ty, context)
