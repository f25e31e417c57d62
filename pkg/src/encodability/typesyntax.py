"""Simple types over the base type N: AST, parser, printer, level.

Surface grammar (whitespace between tokens is ignored)::

    Type   ::= ProdTy ("->" Type)?
    ProdTy ::= Atom ("*" Atom)*
    Atom   ::= "N" | "(" Type ")"

``->`` is right-associative, ``*`` is left-associative and binds
tighter than ``->``.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "SimpleType",
    "Base",
    "Arrow",
    "Prod",
    "N",
    "ParseError",
    "parse_type",
    "print_type",
    "level",
    "type_size",
]

_MAX_NESTING = 100


class ParseError(Exception):
    """Rejected input, with the character offset of the failure."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at offset {position}: {message}")
        self.position = position
        self.message = message


class SimpleType:
    """A simple type: exactly Base, Arrow and Prod exist."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_type(self)


@dataclass(frozen=True, repr=False)
class Base(SimpleType):
    def __repr__(self) -> str:
        return "N"


@dataclass(frozen=True, repr=False)
class Arrow(SimpleType):
    domain: SimpleType
    codomain: SimpleType

    def __repr__(self) -> str:
        return f"Arrow({self.domain!r}, {self.codomain!r})"


@dataclass(frozen=True, repr=False)
class Prod(SimpleType):
    left: SimpleType
    right: SimpleType

    def __repr__(self) -> str:
        return f"Prod({self.left!r}, {self.right!r})"


N = Base()


def level(t: SimpleType) -> int:
    """Type level: 0 for N, bumped by one on the left of each arrow."""
    match t:
        case Base():
            return 0
        case Arrow(domain, codomain):
            return max(level(domain) + 1, level(codomain))
        case Prod(left, right):
            return max(level(left), level(right))
    raise TypeError(f"not a SimpleType: {t!r}")


def type_size(t: SimpleType) -> int:
    """Number of AST nodes."""
    match t:
        case Base():
            return 1
        case Arrow(domain, codomain):
            return 1 + type_size(domain) + type_size(codomain)
        case Prod(left, right):
            return 1 + type_size(left) + type_size(right)
    raise TypeError(f"not a SimpleType: {t!r}")


class _TypeParser:
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

    def type_(self, depth: int = 0) -> SimpleType:
        if depth > _MAX_NESTING:
            raise ParseError(self.pos, "nesting too deep")
        left = self.prod(depth)
        if self.text.startswith("->", self.pos):
            self._eat("->")
            return Arrow(left, self.type_(depth + 1))
        return left

    def prod(self, depth: int) -> SimpleType:
        t = self.atom(depth)
        while self._peek() == "*":
            self._eat("*")
            t = Prod(t, self.atom(depth))
        return t

    def atom(self, depth: int) -> SimpleType:
        c = self._peek()
        if c == "N":
            self._eat("N")
            return N
        if c == "(":
            self._eat("(")
            t = self.type_(depth + 1)
            self._eat(")")
            return t
        if c == "":
            raise ParseError(self.pos, "unexpected end of input, expected a type")
        raise ParseError(self.pos, f"unexpected {c!r}, expected 'N' or '('")


def parse_type(text: str) -> SimpleType:
    """Parse the ASCII type syntax; raises ParseError on any other input."""
    p = _TypeParser(text)
    t = p.type_()
    if p.pos != len(text):
        raise ParseError(p.pos, f"trailing input {text[p.pos:]!r}")
    return t


def print_type(t: SimpleType) -> str:
    """Render with minimal parenthesization; inverse of parse_type."""
    match t:
        case Base():
            return "N"
        case Arrow(domain, codomain):
            return f"{_print_prod(domain)}->{print_type(codomain)}"
        case Prod(left, right):
            return f"{_print_prod(left)}*{_print_atom(right)}"
    raise TypeError(f"not a SimpleType: {t!r}")


def _print_prod(t: SimpleType) -> str:
    # arrow under a product or on the left of an arrow needs parens
    if isinstance(t, Arrow):
        return f"({print_type(t)})"
    return print_type(t)


def _print_atom(t: SimpleType) -> str:
    if isinstance(t, Base):
        return "N"
    return f"({print_type(t)})"
