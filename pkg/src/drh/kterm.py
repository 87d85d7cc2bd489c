"""Abstract syntax for kappa-bar terms: letters, products and (omega+q)-powers.

Concrete syntax::

    term   := "I" | factor+
    factor := atom power*
    atom   := LETTER | "(" term ")"
    power  := "^(w" SIGN INT ")" | "^w"

``^w`` is the omega-power (q = 0) and ``^(w-1)`` the (omega-1)-power.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

RESERVED = frozenset("0#")


class KTermSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ReservedLetterError(KTermSyntaxError):
    pass


@dataclass(frozen=True)
class Empty:
    def __repr__(self):
        return "Empty()"


@dataclass(frozen=True)
class Letter:
    name: str


@dataclass(frozen=True)
class Concat:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("Concat needs at least two parts; use concat()")
        for p in self.parts:
            if isinstance(p, (Empty, Concat)):
                raise ValueError("Concat parts must be flattened and nonempty")


@dataclass(frozen=True)
class Power:
    base: "KTerm"
    q: int

    def __post_init__(self):
        if isinstance(self.base, Empty):
            raise ValueError("Power of the empty term")


KTerm = Union[Empty, Letter, Concat, Power]
EMPTY = Empty()


def concat(*terms: KTerm) -> KTerm:
    """Product of ``terms``, flattened, with empty factors dropped."""
    parts = []
    for t in terms:
        if isinstance(t, Concat):
            parts.extend(t.parts)
        elif not isinstance(t, Empty):
            parts.append(t)
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Concat(tuple(parts))


def power(base: KTerm, q: int) -> KTerm:
    # I^{omega+q} = I in a monoid
    if isinstance(base, Empty):
        return EMPTY
    return Power(base, q)


def factors(w: KTerm) -> tuple:
    if isinstance(w, Empty):
        return ()
    if isinstance(w, Concat):
        return w.parts
    return (w,)


def content(w: KTerm) -> frozenset:
    out = set()
    stack = [w]
    while stack:
        t = stack.pop()
        if isinstance(t, Letter):
            out.add(t.name)
        elif isinstance(t, Concat):
            stack.extend(t.parts)
        elif isinstance(t, Power):
            stack.append(t.base)
    return frozenset(out)


def _nodes(w: KTerm) -> int:
    if isinstance(w, Empty):
        return 0
    if isinstance(w, Letter):
        return 1
    if isinstance(w, Power):
        return 1 + _nodes(w.base)
    # a left-associated chain of k factors has k - 1 product nodes
    return sum(_nodes(p) for p in w.parts) + len(w.parts) - 1


def length(w: KTerm) -> int:
    """Node count of the binary tree of ``w``, plus one."""
    return _nodes(w) + 1


def letter_count(w: KTerm) -> int:
    if isinstance(w, Letter):
        return 1
    if isinstance(w, Power):
        return letter_count(w.base)
    if isinstance(w, Concat):
        return sum(letter_count(p) for p in w.parts)
    return 0


def is_kappa(w: KTerm) -> bool:
    if isinstance(w, Power):
        return w.q == -1 and is_kappa(w.base)
    if isinstance(w, Concat):
        return all(is_kappa(p) for p in w.parts)
    return True


def _format_q(q: int) -> str:
    if q == 0:
        return "^w"
    return f"^(w{q:+d})"


def _format_atom(w: KTerm) -> str:
    if isinstance(w, Letter):
        return w.name
    return "(" + print_kterm(w) + ")"


def print_kterm(w: KTerm) -> str:
    if isinstance(w, Empty):
        return "I"
    if isinstance(w, Letter):
        return w.name
    if isinstance(w, Power):
        return _format_atom(w.base) + _format_q(w.q)
    return " ".join(print_kterm(p) for p in w.parts)


class _Parser:
    def __init__(self, text: str, kbar: bool):
        self.text = text
        self.pos = 0
        self.kbar = kbar

    def error(self, msg, pos=None):
        raise KTermSyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> KTerm:
        t = self.term()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return t

    def term(self) -> KTerm:
        if self.peek() == "I":
            self.pos += 1
            nxt = self.peek()
            if nxt and nxt != ")":
                self.error("'I' must stand alone")
            return EMPTY
        parts = []
        while True:
            c = self.peek()
            if not c or c == ")":
                break
            parts.append(self.factor())
        if not parts:
            self.error("expected a term")
        return concat(*parts)

    def factor(self) -> KTerm:
        start = self.pos
        t = self.atom()
        while self.peek() == "^":
            q = self.power()
            if isinstance(t, Empty):
                self.error("power of the empty term", start)
            t = Power(t, q)
        return t

    def atom(self) -> KTerm:
        c = self.peek()
        if c == "(":
            self.pos += 1
            t = self.term()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return t
        if c in RESERVED:
            raise ReservedLetterError(f"reserved symbol {c!r}", self.pos)
        if "a" <= c <= "z":
            self.pos += 1
            return Letter(c)
        self.error(f"unexpected {c!r}" if c else "unexpected end of input")

    def power(self) -> int:
        start = self.pos
        self.pos += 1  # '^'
        rest = self.text[self.pos:]
        if rest.startswith("(w"):
            self.pos += 2
            j = self.pos
            if j < len(self.text) and self.text[j] in "+-":
                j += 1
            k = j
            while k < len(self.text) and self.text[k].isdigit():
                k += 1
            if k == j or k >= len(self.text) or self.text[k] != ")":
                self.error("malformed power, expected ^(w-1)", start)
            q = int(self.text[self.pos:k])
            if self.text[self.pos] not in "+-":
                self.error("power offset needs a sign", start)
            self.pos = k + 1
        elif rest.startswith("w"):
            self.pos += 1
            q = 0
        else:
            self.error("malformed power", start)
        if q != -1 and not self.kbar:
            self.error(f"(w{q:+d})-power is not a kappa operation (use kbar)", start)
        return q


def parse_kterm(text: str, kbar: bool = False) -> KTerm:
    return _Parser(text, kbar).parse()
