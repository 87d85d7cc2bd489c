"""Finite semigroups as an independent check on equalities of terms.

Semigroups are given by Cayley tables over ``0..n-1``.  File format::

    3
    # names: e g g2
    0 1 2
    1 2 0
    2 0 1
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .kterm import Concat, Empty, KTerm, Letter, Power, content


class SemigroupError(ValueError):
    pass


@dataclass
class FiniteSemigroup:
    table: np.ndarray
    names: Optional[list] = None
    label: str = ""
    _cycles: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise SemigroupError("table must be a nonempty square")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise SemigroupError("table entries out of range")
        # (xy)z against x(yz) for all triples at once
        left = t[t, :]  # left[x, y, z] = (xy)z
        right = t[:, t]  # right[x, y, z] = x(yz)
        if not np.array_equal(left, right):
            x, y, z = np.argwhere(left != right)[0]
            raise SemigroupError(f"not associative at ({x}, {y}, {z})")
        self.table = t
        if self.names is not None and len(self.names) != n:
            raise SemigroupError("wrong number of element names")

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def is_identity(self, e: int) -> bool:
        r = np.arange(self.size)
        return bool((self.table[e] == r).all() and (self.table[:, e] == r).all())

    def cycle(self, s: int) -> tuple[int, int, list]:
        """Index, period and the powers ``s, s^2, ...`` up to the repeat."""
        if s not in self._cycles:
            powers = [s]
            pos = {s: 1}
            while True:
                nxt = self.mul(powers[-1], s)
                if nxt in pos:
                    i = pos[nxt]
                    self._cycles[s] = (i, len(powers) + 1 - i, powers)
                    break
                pos[nxt] = len(powers) + 1
                powers.append(nxt)
        return self._cycles[s]

    def power(self, s: int, k: int) -> int:
        """``s^k`` for ``k >= 1``."""
        i, p, powers = self.cycle(s)
        if k > len(powers):
            k = i + (k - i) % p
        return powers[k - 1]

    def omega_power(self, s: int, q: int) -> int:
        i, p, _ = self.cycle(s)
        m = p * math.ceil((i + abs(q) + p) / p)
        return self.power(s, m + q)

    def idempotents(self) -> list:
        return [x for x in range(self.size) if self.table[x, x] == x]


def load_semigroup(text: str, label: str = "") -> FiniteSemigroup:
    names = None
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("names:"):
                names = body[len("names:"):].split()
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise SemigroupError(f"malformed line {raw!r}") from None
    if not rows or len(rows[0]) != 1:
        raise SemigroupError("first line must be the size")
    n = rows[0][0]
    body = rows[1:]
    if len(body) != n or any(len(r) != n for r in body):
        raise SemigroupError(f"expected {n} rows of {n} entries")
    return FiniteSemigroup(np.array(body), names, label)


def dump_semigroup(S: FiniteSemigroup) -> str:
    lines = [str(S.size)]
    if S.names:
        lines.append("# names: " + " ".join(S.names))
    lines += [" ".join(str(int(x)) for x in row) for row in S.table]
    return "\n".join(lines) + "\n"


# -- evaluation -------------------------------------------------------------


def eval_term(S: FiniteSemigroup, w: KTerm, asg: dict) -> int:
    if isinstance(w, Empty):
        if not S.is_identity(0):
            raise SemigroupError("the empty term needs element 0 to be an identity")
        return 0
    if isinstance(w, Letter):
        return asg[w.name]
    if isinstance(w, Power):
        return S.omega_power(eval_term(S, w.base, asg), w.q)
    assert isinstance(w, Concat)
    v = eval_term(S, w.parts[0], asg)
    for p in w.parts[1:]:
        v = S.mul(v, eval_term(S, p, asg))
    return v


# -- Green's structure ------------------------------------------------------


def right_ideals(S: FiniteSemigroup) -> list:
    """``aS^1`` for each element ``a``."""
    return [frozenset(S.table[a].tolist()) | {a} for a in range(S.size)]


def r_classes(S: FiniteSemigroup) -> list:
    groups: dict = {}
    for a, ideal in enumerate(right_ideals(S)):
        groups.setdefault(ideal, []).append(a)
    return sorted(groups.values())


def regular(S: FiniteSemigroup) -> set:
    t = S.table
    return {x for x in range(S.size) if (t[t[x], x] == x).any()}


def _as_group(S: FiniteSemigroup, cls: list) -> Optional[np.ndarray]:
    """The multiplication table of ``cls`` if it is a subgroup, else ``None``."""
    members = set(cls)
    sub = S.table[np.ix_(cls, cls)]
    if not set(sub.flatten().tolist()) <= members:
        return None
    ids = [e for e in cls if all(S.mul(e, x) == x and S.mul(x, e) == x for x in cls)]
    if not ids:
        return None
    e = ids[0]
    for x in cls:
        if not any(S.mul(x, y) == e and S.mul(y, x) == e for y in cls):
            return None
    return sub


def group_ok(sub: np.ndarray, variety: str) -> bool:
    if variety == "triv":
        return sub.shape[0] == 1
    if variety == "ab":
        return bool((sub == sub.T).all())
    if variety == "g":
        return True
    raise ValueError(f"unknown variety {variety!r}")


def is_in_drh(S: FiniteSemigroup, variety: str) -> bool:
    """Every regular R-class is a subgroup lying in the given group variety."""
    reg = regular(S)
    for cls in r_classes(S):
        if cls[0] not in reg:
            continue
        sub = _as_group(S, cls)
        if sub is None or not group_ok(sub, variety):
            return False
    return True


# -- counterexamples --------------------------------------------------------


def assignments(S: FiniteSemigroup, letters: Iterable[str]) -> Iterable[dict]:
    letters = sorted(letters)
    for values in itertools.product(range(S.size), repeat=len(letters)):
        yield dict(zip(letters, values))


def find_counterexample(
    S: FiniteSemigroup,
    u: KTerm,
    v: KTerm,
    variety: str = "g",
    budget: int = 100_000,
) -> Optional[dict]:
    """First assignment (lexicographic) separating ``u`` and ``v`` in ``S``."""
    if not is_in_drh(S, variety):
        raise SemigroupError(f"{S.label or 'semigroup'} is not in DR{variety}")
    letters = content(u) | content(v)
    for n, asg in enumerate(assignments(S, letters)):
        if n >= budget:
            break
        if eval_term(S, u, asg) != eval_term(S, v, asg):
            return asg
    return None


# -- battery ----------------------------------------------------------------


def cyclic(n: int) -> FiniteSemigroup:
    t = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteSemigroup(np.array(t), [f"g{i}" for i in range(n)], f"C{n}")


def symmetric3() -> FiniteSemigroup:
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    t = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    return FiniteSemigroup(np.array(t), ["".join(map(str, p)) for p in perms], "S3")


def left_zero(n: int = 2) -> FiniteSemigroup:
    t = [[i for _ in range(n)] for i in range(n)]
    return FiniteSemigroup(np.array(t), None, f"LZ{n}")


def right_zero(n: int = 2) -> FiniteSemigroup:
    t = [[j for j in range(n)] for _ in range(n)]
    return FiniteSemigroup(np.array(t), None, f"RZ{n}")


def semilattice2() -> FiniteSemigroup:
    # 0 is the identity, 1 is a zero
    return FiniteSemigroup(np.array([[0, 1], [1, 1]]), ["1", "0"], "SL2")


def nil_monoid(k: int = 3) -> FiniteSemigroup:
    """``{1, a, ..., a^(k-1), 0}`` with ``a^k = 0``; element 0 is the identity."""
    zero = k

    def mul(i, j):
        if i == zero or j == zero:
            return zero
        return i + j if i + j < k else zero

    t = [[mul(i, j) for j in range(k + 1)] for i in range(k + 1)]
    names = ["1"] + [f"a{i}" for i in range(1, k)] + ["0"]
    return FiniteSemigroup(np.array(t), names, f"Nil{k}")


def trivial() -> FiniteSemigroup:
    return FiniteSemigroup(np.array([[0]]), ["e"], "trivial")


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    n, m = S.size, T.size
    t = np.empty((n * m, n * m), dtype=np.int64)
    for a, b, c, d in itertools.product(range(n), range(m), range(n), range(m)):
        t[a * m + b, c * m + d] = S.mul(a, c) * m + T.mul(b, d)
    return FiniteSemigroup(t, None, f"{S.label}x{T.label}")


def battery() -> dict:
    out = {}
    for S in (
        trivial(),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        symmetric3(),
        left_zero(2),
        direct_product(left_zero(2), cyclic(3)),
        right_zero(2),
        semilattice2(),
        nil_monoid(3),
    ):
        out[S.label] = S
    return out


def battery_for(variety: str) -> list:
    """Battery members lying in DR of the given group variety."""
    return [S for S in battery().values() if is_in_drh(S, variety)]
