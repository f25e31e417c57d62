"""Lambda terms with binary products, numeric literals, and the
family of equality-test conditionals ``if n``.

Terms are compared up to renaming of bound variables: ``==`` on terms
is alpha-equivalence.  Concrete syntax::

    Term ::= "\\" Ident ":" Type "." Term | App
    App  ::= App Prim | Prim
    Prim ::= Ident | Nat | "<" Term "," Term ">"
           | "fst" Prim | "snd" Prim | "if" Nat Prim Prim Prim
           | "(" Term ")"
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .typesyntax import Arrow, Base, N, ParseError, Prod, SimpleType, parse_type, print_type

__all__ = [
    "Term",
    "Var",
    "Lam",
    "App",
    "Pair",
    "Fst",
    "Snd",
    "Num",
    "IfN",
    "TypeCheckError",
    "typecheck",
    "parse_term",
    "print_term",
    "alpha_key",
    "free_names",
    "subterms",
]

_KEYWORDS = frozenset({"fst", "snd", "if"})


class Term:
    """A lambda term; ``==`` compares up to bound-variable renaming."""

    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return alpha_key(self) == alpha_key(other)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(alpha_key(self))

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str


@dataclass(frozen=True, eq=False)
class Lam(Term):
    name: str
    annot: SimpleType
    body: Term


@dataclass(frozen=True, eq=False)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True, eq=False)
class Pair(Term):
    left: Term
    right: Term


@dataclass(frozen=True, eq=False)
class Fst(Term):
    arg: Term


@dataclass(frozen=True, eq=False)
class Snd(Term):
    arg: Term


@dataclass(frozen=True, eq=False)
class Num(Term):
    value: int


@dataclass(frozen=True, eq=False)
class IfN(Term):
    n: int
    scrut: Term
    then_: Term
    else_: Term


def alpha_key(t: Term, bound: tuple[str, ...] = ()) -> tuple:
    """Nameless structural key; equal keys iff alpha-equivalent terms."""
    match t:
        case Var(name):
            for i, b in enumerate(reversed(bound)):
                if b == name:
                    return ("bv", i)
            return ("fv", name)
        case Lam(name, annot, body):
            return ("lam", annot, alpha_key(body, bound + (name,)))
        case App(fun, arg):
            return ("app", alpha_key(fun, bound), alpha_key(arg, bound))
        case Pair(left, right):
            return ("pair", alpha_key(left, bound), alpha_key(right, bound))
        case Fst(arg):
            return ("fst", alpha_key(arg, bound))
        case Snd(arg):
            return ("snd", alpha_key(arg, bound))
        case Num(value):
            return ("num", value)
        case IfN(n, scrut, then_, else_):
            return (
                "if",
                n,
                alpha_key(scrut, bound),
                alpha_key(then_, bound),
                alpha_key(else_, bound),
            )
    raise TypeError(f"not a Term: {t!r}")


def free_names(t: Term, bound: frozenset[str] = frozenset()) -> set[str]:
    match t:
        case Var(name):
            return set() if name in bound else {name}
        case Lam(name, _, body):
            return free_names(body, bound | {name})
        case App(fun, arg):
            return free_names(fun, bound) | free_names(arg, bound)
        case Pair(left, right):
            return free_names(left, bound) | free_names(right, bound)
        case Fst(arg) | Snd(arg):
            return free_names(arg, bound)
        case Num(_):
            return set()
        case IfN(_, scrut, then_, else_):
            return free_names(scrut, bound) | free_names(then_, bound) | free_names(else_, bound)
    raise TypeError(f"not a Term: {t!r}")


def subterms(t: Term) -> Iterator[Term]:
    """All subterms, the term itself included, preorder."""
    yield t
    match t:
        case Lam(_, _, body):
            yield from subterms(body)
        case App(fun, arg):
            yield from subterms(fun)
            yield from subterms(arg)
        case Pair(left, right):
            yield from subterms(left)
            yield from subterms(right)
        case Fst(arg) | Snd(arg):
            yield from subterms(arg)
        case IfN(_, scrut, then_, else_):
            yield from subterms(scrut)
            yield from subterms(then_)
            yield from subterms(else_)


class TypeCheckError(Exception):
    """A typing failure, with a path of child indices to the subterm."""

    def __init__(
        self,
        path: tuple[int, ...],
        message: str,
        expected: SimpleType | None = None,
        actual: SimpleType | None = None,
    ):
        detail = message
        if expected is not None and actual is not None:
            detail += f": expected {print_type(expected)}, got {print_type(actual)}"
        super().__init__(f"at path {list(path)}: {detail}")
        self.path = path
        self.message = message
        self.expected = expected
        self.actual = actual


def typecheck(context: Sequence[tuple[str, SimpleType]], t: Term) -> SimpleType:
    """Simple-type assignment; raises TypeCheckError at the first failure
    in leftmost-innermost order."""
    return _check(list(context), t, ())


def _check(ctx: list[tuple[str, SimpleType]], t: Term, path: tuple[int, ...]) -> SimpleType:
    match t:
        case Var(name):
            for bname, bty in reversed(ctx):
                if bname == name:
                    return bty
            raise TypeCheckError(path, f"unbound variable {name!r}")
        case Lam(name, annot, body):
            ctx.append((name, annot))
            try:
                body_ty = _check(ctx, body, path + (0,))
            finally:
                ctx.pop()
            return Arrow(annot, body_ty)
        case App(fun, arg):
            fun_ty = _check(ctx, fun, path + (0,))
            arg_ty = _check(ctx, arg, path + (1,))
            if not isinstance(fun_ty, Arrow):
                raise TypeCheckError(
                    path + (0,), f"not a function: has type {print_type(fun_ty)}"
                )
            if fun_ty.domain != arg_ty:
                raise TypeCheckError(
                    path + (1,), "argument type mismatch", fun_ty.domain, arg_ty
                )
            return fun_ty.codomain
        case Pair(left, right):
            return Prod(_check(ctx, left, path + (0,)), _check(ctx, right, path + (1,)))
        case Fst(arg):
            arg_ty = _check(ctx, arg, path + (0,))
            if not isinstance(arg_ty, Prod):
                raise TypeCheckError(
                    path + (0,), f"not a pair: has type {print_type(arg_ty)}"
                )
            return arg_ty.left
        case Snd(arg):
            arg_ty = _check(ctx, arg, path + (0,))
            if not isinstance(arg_ty, Prod):
                raise TypeCheckError(
                    path + (0,), f"not a pair: has type {print_type(arg_ty)}"
                )
            return arg_ty.right
        case Num(value):
            if value < 0:
                raise TypeCheckError(path, "negative literal")
            return N
        case IfN(n, scrut, then_, else_):
            if n < 0:
                raise TypeCheckError(path, "negative conditional index")
            for i, sub in enumerate((scrut, then_, else_)):
                sub_ty = _check(ctx, sub, path + (i,))
                if sub_ty != N:
                    raise TypeCheckError(path + (i,), "conditional part", N, sub_ty)
            return N
    raise TypeCheckError(path, f"not a Term: {t!r}")


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip_ws()

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _eat(self, token: str) -> None:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            self._skip_ws()
        else:
            raise ParseError(self.pos, f"expected {token!r}")

    def _ident(self) -> str:
        start = self.pos
        c = self._peek()
        if not (c.isalpha() or c == "_"):
            raise ParseError(start, "expected an identifier")
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        name = self.text[start : self.pos]
        self._skip_ws()
        return name

    def _nat(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "expected a natural number")
        n = int(self.text[start : self.pos])
        self._skip_ws()
        return n

    def _annot(self) -> SimpleType:
        # a type annotation runs to the next '.'; types never contain dots
        end = self.text.find(".", self.pos)
        if end < 0:
            raise ParseError(len(self.text), "expected '.' after the annotation")
        src = self.text[self.pos : end]
        try:
            ty = parse_type(src)
        except ParseError as exc:
            raise ParseError(self.pos + exc.position, exc.message) from None
        self.pos = end + 1
        self._skip_ws()
        return ty

    def term(self, depth: int = 0) -> Term:
        if depth > 400:
            raise ParseError(self.pos, "nesting too deep")
        if self._peek() == "\\":
            self._eat("\\")
            name = self._ident()
            if name in _KEYWORDS:
                raise ParseError(self.pos, f"{name!r} is a keyword")
            self._eat(":")
            annot = self._annot()
            return Lam(name, annot, self.term(depth + 1))
        return self.app(depth)

    def app(self, depth: int) -> Term:
        t = self.prim(depth)
        while self._starts_prim():
            t = App(t, self.prim(depth))
        return t

    def _starts_prim(self) -> bool:
        c = self._peek()
        return c.isalpha() or c.isdigit() or c in ("_", "<", "(")

    def prim(self, depth: int) -> Term:
        if depth > 400:
            raise ParseError(self.pos, "nesting too deep")
        c = self._peek()
        if c == "(":
            self._eat("(")
            t = self.term(depth + 1)
            self._eat(")")
            return t
        if c == "<":
            self._eat("<")
            left = self.term(depth + 1)
            self._eat(",")
            right = self.term(depth + 1)
            self._eat(">")
            return Pair(left, right)
        if c.isdigit():
            return Num(self._nat())
        if c.isalpha() or c == "_":
            name = self._ident()
            if name == "fst":
                return Fst(self.prim(depth + 1))
            if name == "snd":
                return Snd(self.prim(depth + 1))
            if name == "if":
                n = self._nat()
                scrut = self.prim(depth + 1)
                then_ = self.prim(depth + 1)
                else_ = self.prim(depth + 1)
                return IfN(n, scrut, then_, else_)
            return Var(name)
        if c == "":
            raise ParseError(self.pos, "unexpected end of input, expected a term")
        raise ParseError(self.pos, f"unexpected {c!r}")


def parse_term(text: str) -> Term:
    """Parse the term syntax; raises ParseError on malformed input."""
    p = _TermParser(text)
    t = p.term()
    if p.pos != len(text):
        raise ParseError(p.pos, f"trailing input {text[p.pos:]!r}")
    return t


# printing levels: 0 = anywhere, 1 = function position, 2 = argument position
def print_term(t: Term) -> str:
    """Render with minimal parenthesization; parses back alpha-equal."""
    return _print(t, 0)


def _print(t: Term, level: int) -> str:
    match t:
        case Var(name):
            return name
        case Num(value):
            return str(value)
        case Pair(left, right):
            return f"<{_print(left, 0)}, {_print(right, 0)}>"
        case Lam(name, annot, body):
            s = f"\\{name}:{print_type(annot)}. {_print(body, 0)}"
            return f"({s})" if level > 0 else s
        case App(fun, arg):
            s = f"{_print(fun, 1)} {_print(arg, 2)}"
            return f"({s})" if level > 1 else s
        case Fst(arg):
            return f"fst {_print(arg, 2)}"
        case Snd(arg):
            return f"snd {_print(arg, 2)}"
        case IfN(n, scrut, then_, else_):
            return f"if {n} {_print(scrut, 2)} {_print(then_, 2)} {_print(else_, 2)}"
    raise TypeError(f"not a Term: {t!r}")
