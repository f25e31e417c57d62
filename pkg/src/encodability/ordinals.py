"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a finite non-increasing sequence of exponent ordinals,
denoting the sum of omega-powers ``w^e0 + w^e1 + ...``; the empty
sequence is 0 and ``(0,)`` is 1.  The representation is canonical:
denotational equality coincides with structural equality.

Surface grammar::

    Ord    ::= Term ("+" Term)*
    Term   ::= Nat | "w" ("^" Factor)? ("*" Nat)?
    Factor ::= "w" | Nat | "(" Ord ")"

``0`` is legal only as a complete ordinal.  The parser folds "+" with
ordinal addition, so any well-formed input normalizes to CNF.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import total_ordering

from .typesyntax import ParseError

__all__ = [
    "Ordinal",
    "Ordering",
    "ZERO",
    "ONE",
    "OMEGA",
    "from_int",
    "compare_ordinals",
    "cantor_add",
    "omega_pow",
    "omega_times",
    "successor",
    "is_cantor_sum",
    "parse_ordinal",
    "print_ordinal",
]


class Ordering(enum.Enum):
    LESS = "<"
    EQUAL = "~"
    GREATER = ">"


@total_ordering
@dataclass(frozen=True, repr=False)
class Ordinal:
    """Cantor normal form: non-increasing tuple of exponent ordinals."""

    exponents: tuple[Ordinal, ...] = field(default=())

    def __post_init__(self):
        es = self.exponents
        for i, e in enumerate(es):
            if not isinstance(e, Ordinal):
                raise TypeError(f"exponent {e!r} is not an Ordinal")
            if i and _cmp(es[i - 1], e) < 0:
                raise ValueError(
                    f"exponents not non-increasing at position {i}: "
                    f"{print_ordinal(es[i - 1])} < {print_ordinal(e)}"
                )

    @property
    def is_zero(self) -> bool:
        return not self.exponents

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e in self.exponents)

    def as_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return len(self.exponents)

    def __lt__(self, other: Ordinal) -> bool:
        return _cmp(self, other) < 0

    def __str__(self) -> str:
        return print_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal[{print_ordinal(self)}]"


ZERO = Ordinal()
ONE = Ordinal((ZERO,))
OMEGA = Ordinal((ONE,))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return Ordinal((ZERO,) * n)


def _cmp(a: Ordinal, b: Ordinal) -> int:
    # lexicographic on the exponent sequences, recursively; a proper
    # prefix denotes a smaller ordinal
    for ea, eb in zip(a.exponents, b.exponents):
        c = _cmp(ea, eb)
        if c:
            return c
    return (len(a.exponents) > len(b.exponents)) - (len(a.exponents) < len(b.exponents))


def compare_ordinals(a: Ordinal, b: Ordinal) -> Ordering:
    """Order of the denoted ordinals; EQUAL iff structurally equal."""
    c = _cmp(a, b)
    return Ordering.LESS if c < 0 else Ordering.GREATER if c > 0 else Ordering.EQUAL


def cantor_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition, normalized: terms of a below b's head are absorbed."""
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    head = b.exponents[0]
    keep = len(a.exponents)
    while keep > 0 and _cmp(a.exponents[keep - 1], head) < 0:
        keep -= 1
    return Ordinal(a.exponents[:keep] + b.exponents)


def omega_pow(a: Ordinal) -> Ordinal:
    """w raised to a, as a single-term CNF."""
    return Ordinal((a,))


def omega_times(a: Ordinal, k: int) -> Ordinal:
    """w^a times a natural k (k copies of the term)."""
    if k < 0:
        raise ValueError("k must be a natural number")
    return Ordinal((a,) * k)


def successor(a: Ordinal) -> Ordinal:
    return cantor_add(a, ONE)


def is_cantor_sum(g: Ordinal, a: Ordinal) -> bool:
    """True iff concatenating the CNFs of g and a is already normal."""
    if g.is_zero or a.is_zero:
        raise ValueError("is_cantor_sum requires both arguments > 0")
    return _cmp(a.exponents[0], g.exponents[-1]) <= 0


class _OrdinalParser:
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

    def nat(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "expected a natural number")
        n = int(self.text[start : self.pos])
        self._skip_ws()
        return n

    def ord_(self, depth: int = 0) -> Ordinal:
        if depth > 200:
            raise ParseError(self.pos, "nesting too deep")
        total = self.term(depth, first=True)
        while self._peek() == "+":
            self._eat("+")
            total = cantor_add(total, self.term(depth, first=False))
        return total

    def term(self, depth: int, first: bool) -> Ordinal:
        if self._peek() == "w":
            self._eat("w")
            exponent = ONE
            if self._peek() == "^":
                self._eat("^")
                exponent = self.factor(depth)
            k = 1
            if self._peek() == "*":
                self._eat("*")
                at = self.pos
                k = self.nat()
                if k == 0:
                    raise ParseError(at, "zero multiplicity")
            return omega_times(exponent, k)
        at = self.pos
        n = self.nat()
        if n == 0 and not (first and self.pos == len(self.text)):
            raise ParseError(at, "'0' is legal only as a complete ordinal")
        return from_int(n)

    def factor(self, depth: int) -> Ordinal:
        c = self._peek()
        if c == "w":
            self._eat("w")
            return OMEGA
        if c == "(":
            self._eat("(")
            a = self.ord_(depth + 1)
            self._eat(")")
            return a
        return from_int(self.nat())


def parse_ordinal(text: str) -> Ordinal:
    """Parse the ordinal syntax; raises ParseError on malformed input."""
    p = _OrdinalParser(text)
    a = p.ord_()
    if p.pos != len(text):
        raise ParseError(p.pos, f"trailing input {text[p.pos:]!r}")
    return a


def print_ordinal(a: Ordinal) -> str:
    """Render the CNF with `*k` run-length sugar; inverse of parse_ordinal."""
    if a.is_zero:
        return "0"
    parts = []
    i = 0
    es = a.exponents
    while i < len(es):
        e = es[i]
        k = 1
        while i + k < len(es) and es[i + k] == e:
            k += 1
        i += k
        if e.is_zero:
            parts.append(str(k))
            continue
        if e == ONE:
            head = "w"
        elif e == OMEGA:
            head = "w^w"
        elif e.is_finite:
            head = f"w^{e.as_int()}"
        else:
            head = f"w^({print_ordinal(e)})"
        parts.append(head if k == 1 else f"{head}*{k}")
    return " + ".join(parts)
