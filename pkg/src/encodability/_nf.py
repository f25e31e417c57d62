"""Normalization-by-evaluation kernel over nameless tuple terms.

This module is the hot loop of the package.  It is deliberately free of
imports and package types so the build can compile an identical copy
with Cython (as ``encodability._nf_c``); keep it that way.

Types are tuples: ``0`` for the base type, ``(1, dom, cod)`` for
arrows, ``(2, left, right)`` for products.

Terms are tuples with de Bruijn indices::

    (0, i)              variable
    (1, ty, body)       lambda (annotated with its domain)
    (2, fun, arg)       application
    (3, left, right)    pair
    (4, t) / (5, t)     first / second projection
    (6, n)              numeral
    (7, n, s, a, b)     conditional testing s against the literal n

Values are ``(0, n)`` numerals, ``(1, l, r)`` pairs, ``(2, f)``
closures, and ``(3, ty, ne)`` neutrals, where a neutral spine is
``(0, level)``, ``(1, ne, argval, argty)``, ``(2, ne)`` fst,
``(3, ne)`` snd, or ``(4, n, ne, thenval, elseval)``.

``normalize`` returns the eta-long beta-normal form: every subterm of
arrow type is a lambda, every subterm of product type a pair, except
under a neutral head, and no beta/projection/conditional redex remains.
Equal results (plain ``==`` on tuples) mean beta-eta-equal inputs.
"""


def eval_term(t, env):
    """Evaluate a term tuple in an environment (innermost binding first)."""
    tag = t[0]
    if tag == 0:
        return env[t[1]]
    if tag == 1:
        body = t[2]
        return (2, lambda v, _b=body, _e=env: eval_term(_b, (v,) + _e))
    if tag == 2:
        return apply_value(eval_term(t[1], env), eval_term(t[2], env))
    if tag == 3:
        return (1, eval_term(t[1], env), eval_term(t[2], env))
    if tag == 4:
        return first_value(eval_term(t[1], env))
    if tag == 5:
        return second_value(eval_term(t[1], env))
    if tag == 6:
        return (0, t[1])
    # conditional
    n = t[1]
    scrut = eval_term(t[2], env)
    if scrut[0] == 0:
        return eval_term(t[3], env) if scrut[1] == n else eval_term(t[4], env)
    # stuck on a neutral scrutinee: keep both branches as values
    return (3, 0, (4, n, scrut[2], eval_term(t[3], env), eval_term(t[4], env)))


def apply_value(f, a):
    if f[0] == 2:
        return f[1](a)
    ty = f[1]  # (1, dom, cod)
    return (3, ty[2], (1, f[2], a, ty[1]))


def first_value(v):
    if v[0] == 1:
        return v[1]
    ty = v[1]  # (2, left, right)
    return (3, ty[1], (2, v[2]))


def second_value(v):
    if v[0] == 1:
        return v[2]
    ty = v[1]
    return (3, ty[2], (3, v[2]))


def reify(ty, v, depth):
    """Read a value back as an eta-long normal term; depth counts binders."""
    if ty == 0:
        if v[0] == 0:
            return (6, v[1])
        return reify_neutral(v[2], depth)
    if ty[0] == 1:
        dom = ty[1]
        fresh = (3, dom, (0, depth))
        return (1, dom, reify(ty[2], apply_value(v, fresh), depth + 1))
    return (3, reify(ty[1], first_value(v), depth), reify(ty[2], second_value(v), depth))


def reify_neutral(ne, depth):
    tag = ne[0]
    if tag == 0:
        return (0, depth - 1 - ne[1])  # level back to index
    if tag == 1:
        return (2, reify_neutral(ne[1], depth), reify(ne[3], ne[2], depth))
    if tag == 2:
        return (4, reify_neutral(ne[1], depth))
    if tag == 3:
        return (5, reify_neutral(ne[1], depth))
    return (
        7,
        ne[1],
        reify_neutral(ne[2], depth),
        reify(0, ne[3], depth),
        reify(0, ne[4], depth),
    )


def normalize(term, ty, ctx_types=()):
    """Eta-long beta-normal form of a well-typed term.

    ``ctx_types`` are the types of the free indices, innermost first;
    free variables reappear under the same indices.
    """
    n = len(ctx_types)
    env = tuple((3, ctx_types[i], (0, n - 1 - i)) for i in range(n))
    return reify(ty, eval_term(term, env), n)
