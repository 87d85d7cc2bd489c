"""Well-parenthesized words over indexed alphabets.

A word is held as a forest of blocks: a block is either a letter
``Lit(letter, idx)`` or a parenthesized ``Group(q, body)`` standing for
``[^q body ]^q``.  Groups are immutable and freely shared, so tails, which
duplicate whole subwords, cost time proportional to the nesting depth rather
than the length of what they copy.

Debug syntax: ``0 [-1 a1 b2 ]-1 #3`` (the leading ``0`` carries index 0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .kterm import Empty, KTerm, Letter, Power, concat, power

SPECIAL = ("0", "#")


class Lit(NamedTuple):
    letter: str
    idx: int | None = None

    def __str__(self):
        if self.letter == "0" and self.idx == 0:
            return "0"
        return self.letter if self.idx is None else f"{self.letter}{self.idx}"


class Marker(NamedTuple):
    letter: str
    idx: int


@dataclass(frozen=True)
class Open:
    q: int

    def __str__(self):
        return f"[{self.q:+d}" if self.q else "[0"


@dataclass(frozen=True)
class Close:
    q: int

    def __str__(self):
        return f"]{self.q:+d}" if self.q else "]0"


class Group:
    __slots__ = ("q", "body", "letters", "indices", "size", "_first", "_hash", "hcache")

    def __init__(self, q, body, letters=None, indices=None, size=None, hcache=None):
        if not body:
            raise ValueError("empty parenthesized group")
        self.q = q
        self.body = body
        if letters is None:
            letters, indices, size = _scan(body)
            size += 2
        self.letters = letters
        self.indices = indices
        self.size = size
        self._first = None
        self._hash = None
        # evaluation caches keyed by variety tag; depends on body only
        self.hcache = {} if hcache is None else hcache

    def with_q(self, q: int) -> "Group":
        g = Group(q, self.body, self.letters, self.indices, self.size, self.hcache)
        g._first = self._first
        return g

    def first(self) -> list:
        if self._first is None:
            self._first = _first_occurrences(self.body)
        return self._first

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not Group:
            return NotImplemented
        return (
            self.q == other.q
            and self.size == other.size
            and hash(self) == hash(other)
            and self.body == other.body
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.q, self.body))
        return self._hash

    def __repr__(self):
        return f"Group({self.q}, {self.body!r})"


def _scan(blocks):
    letters = set()
    indices = set()
    size = 0
    for b in blocks:
        if type(b) is Lit:
            letters.add(b.letter)
            if b.idx is not None:
                indices.add(b.idx)
            size += 1
        else:
            letters |= b.letters
            indices |= b.indices
            size += b.size
    return frozenset(letters), frozenset(indices), size


class PWord:
    """An immutable well-parenthesized word."""

    __slots__ = ("blocks", "_meta", "_hash")

    def __init__(self, blocks: Sequence = ()):
        self.blocks = tuple(blocks)
        self._meta = None
        self._hash = None

    def _scan(self):
        if self._meta is None:
            self._meta = _scan(self.blocks)
        return self._meta

    @property
    def letters(self) -> frozenset:
        """Letter content ``c_A``."""
        return self._scan()[0]

    @property
    def indices(self) -> frozenset:
        """Index content ``c_N``."""
        return self._scan()[1]

    def __len__(self):
        return self._scan()[2]

    def __bool__(self):
        return bool(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, PWord):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.blocks)
        return self._hash

    def __add__(self, other: "PWord") -> "PWord":
        return PWord(self.blocks + other.blocks)

    def symbols(self) -> list:
        out = []
        _emit(self.blocks, out)
        return out

    def __str__(self):
        return " ".join(str(s) for s in self.symbols()) if self.blocks else "ε"

    def __repr__(self):
        return f"PWord({str(self)!r})"

    def is_b1(self) -> bool:
        return all(q == -1 for q in _exponents(self.blocks))

    def is_b2(self) -> bool:
        return all(q in (-1, -2) for q in _exponents(self.blocks))


EPSILON = PWord()


def _emit(blocks, out):
    for b in blocks:
        if type(b) is Lit:
            out.append(b)
        else:
            out.append(Open(b.q))
            _emit(b.body, out)
            out.append(Close(b.q))


def _exponents(blocks):
    for b in blocks:
        if type(b) is Group:
            yield b.q
            yield from _exponents(b.body)


def from_symbols(symbols: Iterable) -> PWord:
    """Build a word from a flat symbol sequence, checking it is well-parenthesized."""
    stack = [(None, [])]
    for s in symbols:
        if isinstance(s, Open):
            stack.append((s.q, []))
        elif isinstance(s, Close):
            if len(stack) == 1:
                raise ValueError(f"unmatched {s}")
            q, body = stack.pop()
            if q != s.q:
                raise ValueError(f"mismatched parentheses [{q} and {s}")
            if not body:
                raise ValueError(f"empty group [{q} ]{q}")
            stack[-1][1].append(Group(q, tuple(body)))
        else:
            letter, idx = s
            stack[-1][1].append(Lit(letter, idx))
    if len(stack) != 1:
        raise ValueError("unclosed parenthesis")
    return PWord(stack[0][1])


_TOKEN = re.compile(r"\[([+-]?\d+)|\]([+-]?\d+)|([a-z0#])(\d*)")


def parse_pword(text: str) -> PWord:
    """Parse the debug syntax, e.g. ``0 [-1 a1 b2 ]-1 #3``."""
    syms = []
    text = text.strip()
    if text in ("", "ε"):
        return EPSILON
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        if m.group(1) is not None:
            syms.append(Open(int(m.group(1))))
        elif m.group(2) is not None:
            syms.append(Close(int(m.group(2))))
        else:
            letter, digits = m.group(3), m.group(4)
            if digits:
                idx = int(digits)
            else:
                idx = 0 if letter == "0" else None
            syms.append(Lit(letter, idx))
    return from_symbols(syms)


def format_pword(x: PWord) -> str:
    return str(x)


def strip_indices(x: PWord) -> PWord:
    return PWord(_strip(x.blocks))


def _strip(blocks):
    return tuple(
        Lit(b.letter) if type(b) is Lit else Group(b.q, _strip(b.body)) for b in blocks
    )


# -- encoding and annotation ------------------------------------------------


def word_encoding(w: KTerm) -> PWord:
    """The unindexed word of a term; powers become parenthesized groups."""
    return PWord(_encode(w))


def _encode(w):
    if isinstance(w, Empty):
        return ()
    if isinstance(w, Letter):
        return (Lit(w.name),)
    if isinstance(w, Power):
        return (Group(w.q, _encode(w.base)),)
    out = []
    for p in w.parts:
        out.extend(_encode(p))
    return tuple(out)


def annotate(x: PWord, start: int = 1) -> PWord:
    """Number the letters ``start, start+1, ...`` from left to right."""
    counter = [start]

    def walk(blocks):
        out = []
        for b in blocks:
            if type(b) is Lit:
                out.append(Lit(b.letter, counter[0]))
                counter[0] += 1
            else:
                out.append(Group(b.q, walk(b.body)))
        return tuple(out)

    return PWord(walk(x.blocks))


def build_overline(w: KTerm) -> PWord:
    body = annotate(PWord(_encode(w) + (Lit("#"),)))
    return PWord((Lit("0", 0),) + body.blocks)


def eta(x: PWord) -> KTerm:
    """Read a word back as a term, dropping indices."""
    return _eta(x.blocks)


def _eta(blocks) -> KTerm:
    parts = []
    for b in blocks:
        if type(b) is Lit:
            parts.append(Letter(b.letter))
        else:
            parts.append(power(_eta(b.body), b.q))
    return concat(*parts)


# -- tails, prefixes, factors -----------------------------------------------


def _tail(blocks, i):
    for j, b in enumerate(blocks):
        if type(b) is Lit:
            if b.idx == i:
                return blocks[j + 1:]
        elif i in b.indices:
            return _tail(b.body, i) + (b.with_q(b.q - 1),) + blocks[j + 1:]
    return ()


def tail(x: PWord, i: int) -> PWord:
    """The tail from position ``i``; empty when ``i`` does not occur."""
    return PWord(_tail(x.blocks, i))


def _prefix(blocks, a):
    for j, b in enumerate(blocks):
        if type(b) is Lit:
            if b.letter == a:
                return blocks[:j]
        elif a in b.letters:
            return blocks[:j] + _prefix(b.body, a)
    return blocks


def prefix(x: PWord, a: str) -> PWord:
    """The prefix before the first occurrence of ``a``; ``x`` if ``a`` is absent."""
    if a not in x.letters:
        return x
    return PWord(_prefix(x.blocks, a))


def factor(x: PWord, i: int, a: str) -> PWord:
    return PWord(_prefix(_tail(x.blocks, i), a))


def _first_occurrences(blocks) -> list:
    seen = set()
    out = []
    for b in blocks:
        if type(b) is Lit:
            if b.letter not in seen:
                seen.add(b.letter)
                out.append(Marker(b.letter, b.idx))
        elif not b.letters <= seen:
            for m in b.first():
                if m.letter not in seen:
                    seen.add(m.letter)
                    out.append(m)
    return out


def first_occurrences(x: PWord) -> list:
    return _first_occurrences(x.blocks)


def principal_marker(x: PWord) -> Marker:
    """The last first occurrence of a letter."""
    if not x.blocks:
        raise ValueError("the empty word has no principal marker")
    return _first_occurrences(x.blocks)[-1]


def is_marker(x: PWord, letter: str, idx: int) -> bool:
    return Marker(letter, idx) in first_occurrences(x)


def satisfies_h(x: PWord) -> bool:
    """Each index carries a single letter."""
    seen = {}
    for s in x.symbols():
        if isinstance(s, Lit) and s.idx is not None:
            if seen.setdefault(s.idx, s.letter) != s.letter:
                return False
    return True


# -- expansion and linearization --------------------------------------------


def _check_exp(q):
    if q not in (-1, -2):
        raise ValueError(f"exponent {q} outside {{-1, -2}}")


def _expand(blocks):
    out = []
    for b in blocks:
        if type(b) is Lit:
            out.append(b)
            continue
        _check_exp(b.q)
        inner = Group(-1, _expand(b.body))
        out.append(inner)
        if b.q == -2:
            out.append(inner)
    return tuple(out)


def expand(x: PWord) -> PWord:
    """Rewrite every ``[-2 y ]-2`` into ``[-1 y ]-1 [-1 y ]-1``."""
    return PWord(_expand(x.blocks))


def invert_word(s: str) -> str:
    return s[::-1].swapcase()


def _lin(blocks) -> str:
    out = []
    for b in blocks:
        if type(b) is Lit:
            if b.letter in SPECIAL:
                raise ValueError(f"cannot linearize the marker {b.letter!r}")
            out.append(b.letter)
        else:
            _check_exp(b.q)
            inv = invert_word(_lin(b.body))
            out.append(inv if b.q == -1 else inv + inv)
    return "".join(out)


def linearize(x: PWord) -> str:
    """Unreduced group word of ``x``; an uppercase letter is an inverse."""
    return _lin(x.blocks)


# -- fixtures ---------------------------------------------------------------


def mu_xi(xs, ys, qs, n: int) -> tuple[PWord, PWord]:
    """The nested words ``mu_n`` and ``xi_n`` built from sequences of words.

    ``mu_0 = x0 y0``, ``mu_{k+1} = x_{k+1} [^{q_k} mu_k ]^{q_k} y_{k+1}`` and
    ``xi_n = [^{q_n - 1} mu_n ]^{q_n - 1} y_{n+1}``.  Missing sequence entries
    are read as the empty word.
    """

    def get(seq, k):
        return seq[k] if k < len(seq) else EPSILON

    if len(qs) <= n:
        raise ValueError(f"need at least {n + 1} exponents")
    if not (get(xs, 0) + get(ys, 0)):
        raise ValueError("x0 y0 must be nonempty")
    seen = set()
    for k in range(max(len(xs), len(ys))):
        for s in (get(xs, k) + get(ys, k)).symbols():
            if isinstance(s, Lit) and s.idx is not None:
                if s.idx in seen:
                    raise ValueError(f"index {s.idx} occurs more than once")
                seen.add(s.idx)
    mu = get(xs, 0) + get(ys, 0)
    for k in range(n):
        mu = PWord(get(xs, k + 1).blocks + (Group(qs[k], mu.blocks),) + get(ys, k + 1).blocks)
    xi = PWord((Group(qs[n] - 1, mu.blocks),) + get(ys, n + 1).blocks)
    return mu, xi


def u_family(n: int) -> PWord:
    """``u_{2n+1}``: ``a1`` nested in ``n`` pairs of (omega-1)-parentheses."""
    x = PWord((Lit("a", 1),))
    mu, _ = mu_xi([x], [], [-1] * (n + 1), n)
    return mu
