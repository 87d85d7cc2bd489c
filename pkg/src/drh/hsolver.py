"""Group back-ends: projections of terms and words onto a pseudovariety of groups.

Three solvers ship, selected by tag:

* ``triv``: the trivial group, every value is the unit;
* ``ab``: free abelian groups, values are exponent vectors;
* ``g``: free groups, values are reduced words where an uppercase letter
  stands for the inverse of its lowercase counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .kterm import EMPTY, Empty, KTerm, Letter, Power, concat
from .pword import SPECIAL, Lit, PWord


@dataclass(frozen=True)
class HElement:
    variety: str
    value: Any

    def __str__(self):
        return get_solver(self.variety).format(self)


class VarietyMismatch(ValueError):
    pass


class HSolver:
    tag = ""

    # subclasses supply: _unit, _gen, _mul, _pow, _letters, _render, format

    def identity(self) -> HElement:
        return HElement(self.tag, self._unit)

    def letter(self, a: str) -> HElement:
        return HElement(self.tag, self._gen(a))

    def mul(self, x: HElement, y: HElement) -> HElement:
        return HElement(self.tag, self._mul(x.value, y.value))

    def power(self, x: HElement, q: int) -> HElement:
        return HElement(self.tag, self._pow(x.value, q))

    def is_identity(self, x: HElement) -> bool:
        return x.value == self._unit

    def letters(self, x: HElement) -> frozenset:
        """Letters needed to write ``x``; it lies in the subgroup they generate."""
        return frozenset(self._letters(x.value))

    def eval_h(self, w: KTerm) -> HElement:
        return HElement(self.tag, self._eval(w))

    def _eval(self, w):
        if isinstance(w, Empty):
            return self._unit
        if isinstance(w, Letter):
            return self._gen(w.name)
        if isinstance(w, Power):
            return self._pow(self._eval(w.base), w.q)
        v = self._unit
        for p in w.parts:
            v = self._mul(v, self._eval(p))
        return v

    def eval_h_pword(self, x: PWord) -> HElement:
        return HElement(self.tag, self._eval_blocks(x.blocks))

    def _eval_blocks(self, blocks):
        v = self._unit
        for b in blocks:
            v = self._mul(v, self._eval_block(b))
        return v

    def _eval_block(self, b):
        if type(b) is Lit:
            if b.letter in SPECIAL:
                raise ValueError(f"the marker {b.letter!r} has no group value")
            return self._gen(b.letter)
        key = (self.tag, b.q)
        cache = b.hcache
        if key not in cache:
            body = cache.get(self.tag)
            if body is None:
                body = cache[self.tag] = self._eval_blocks(b.body)
            cache[key] = self._pow(body, b.q)
        return cache[key]

    def equal_h(self, x: HElement, y: HElement) -> bool:
        if x.variety != self.tag or y.variety != self.tag:
            raise VarietyMismatch(f"cannot compare {x.variety} with {y.variety} in {self.tag}")
        return x.value == y.value

    def key(self, x: HElement):
        """A hashable canonical key; equal keys iff ``equal_h``."""
        return x.value

    def cf_h(self, x: HElement) -> KTerm:
        return self._render(x.value)


class TrivialSolver(HSolver):
    tag = "triv"
    _unit = ()

    def _gen(self, a):
        return ()

    def _mul(self, x, y):
        return ()

    def _pow(self, x, q):
        return ()

    def _letters(self, x):
        return ()

    def _render(self, x):
        return EMPTY

    def format(self, x):
        return "1"


class AbelianSolver(HSolver):
    """Values are sorted tuples of ``(letter, exponent)`` with nonzero exponents."""

    tag = "ab"
    _unit = ()

    def _gen(self, a):
        return ((a, 1),)

    def _mul(self, x, y):
        if not x:
            return y
        if not y:
            return x
        d = dict(x)
        for a, k in y:
            d[a] = d.get(a, 0) + k
        return tuple(sorted((a, k) for a, k in d.items() if k))

    def _pow(self, x, q):
        if q == 0:
            return ()
        return tuple((a, k * q) for a, k in x)

    def _letters(self, x):
        return (a for a, _ in x)

    def _render(self, x):
        parts = []
        for a, k in x:
            atom = Letter(a) if k > 0 else Power(Letter(a), -1)
            parts.extend([atom] * abs(k))
        return concat(*parts)

    def format(self, x):
        if not x.value:
            return "1"
        return " ".join(a if k == 1 else f"{a}^{k}" for a, k in x.value)


def invert(w: str) -> str:
    return w[::-1].swapcase()


def reduce_word(w: str) -> str:
    """Free reduction with a single left-to-right pass over a stack."""
    out = []
    for c in w:
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def reduce_naive(w: str) -> str:
    """Reference reduction by repeatedly deleting cancelling pairs."""
    pairs = [c + c.swapcase() for c in set(w)]
    while True:
        nxt = w
        for p in pairs:
            nxt = nxt.replace(p, "")
        if nxt == w:
            return w
        w = nxt


class FreeGroupSolver(HSolver):
    tag = "g"
    _unit = ""

    def _gen(self, a):
        return a

    def _mul(self, x, y):
        if not x:
            return y
        if not y:
            return x
        n = min(len(x), len(y))
        k = 0
        while k < n and x[-1 - k] == y[k].swapcase():
            k += 1
        return x[: len(x) - k] + y[k:]

    def _pow(self, x, q):
        if q == 0 or not x:
            return ""
        if q < 0:
            x, q = invert(x), -q
        # conjugate to a cyclically reduced core so that core^q is reduced
        k = 0
        while 2 * k + 1 < len(x) and x[k] == x[-1 - k].swapcase():
            k += 1
        u, core = x[:k], x[k: len(x) - k]
        return u + core * q + invert(u)

    def _letters(self, x):
        return set(x.lower())

    def _render(self, x):
        return concat(*(Letter(c) if c.islower() else Power(Letter(c.lower()), -1) for c in x))

    def format(self, x):
        return "".join(c if c.islower() else c.lower() + "⁻¹" for c in x.value) or "1"


_REGISTRY: dict[str, HSolver] = {}


def register_solver(solver: HSolver) -> None:
    _REGISTRY[solver.tag] = solver


def get_solver(tag: str | HSolver) -> HSolver:
    if isinstance(tag, HSolver):
        return tag
    try:
        return _REGISTRY[tag]
    except KeyError:
        raise ValueError(f"unknown variety {tag!r}; known: {sorted(_REGISTRY)}") from None


def varieties() -> list[str]:
    return list(_REGISTRY)


for _s in (TrivialSolver(), AbelianSolver(), FreeGroupSolver()):
    register_solver(_s)
