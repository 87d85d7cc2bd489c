"""Finite DRH-automata and the graph of a term.

An automaton has integer states, transitions ``t0``/``t1`` over the alphabet
{0, 1}, a letter label per state (``""`` on the terminal state) and a group
label per state.  The group label ``None`` stands for the adjoined identity
``I``; it is distinct from the identity element of the group, which is what a
regular part with trivial projection carries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .hsolver import HElement, HSolver, get_solver
from .kterm import KTerm, print_kterm
from .pword import PWord, _prefix, build_overline, principal_marker, tail

INF = math.inf


@dataclass
class DrhAutomaton:
    root: int
    terminal: int
    t0: list
    t1: list
    label: list
    hlabel: list
    variety: str
    keys: list = field(default_factory=list)
    _closure: Optional[list] = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.label)

    @property
    def states(self) -> range:
        return range(len(self.label))

    @property
    def solver(self) -> HSolver:
        return get_solver(self.variety)

    def letters_from(self, v: int) -> frozenset:
        """Letters labelling states reachable from ``v``."""
        if self._closure is None:
            self._closure = letter_closure(self)
        return self._closure[v]

    def hkey(self, v: int):
        h = self.hlabel[v]
        return None if h is None else ("h", self.solver.key(h))

    def one_path(self, v: int) -> tuple[list, Optional[int]]:
        """States on the 1-path from ``v`` before the terminal, and the index
        where the path re-enters itself (``None`` if it reaches the terminal)."""
        path = []
        seen = {}
        while v != self.terminal:
            if v in seen:
                return path, seen[v]
            seen[v] = len(path)
            path.append(v)
            v = self.t1[v]
        return path, None

    def describe(self, v: int) -> str:
        if v == self.terminal:
            return "ε"
        key = self.keys[v] if self.keys else None
        where = f"{key[0]},{key[1]}" if key else str(v)
        h = self.hlabel[v]
        hs = "I" if h is None else print_kterm(self.solver.cf_h(h))
        return f"{where} | {self.label[v]} | {hs}"


def trivial_automaton(variety: str = "triv") -> DrhAutomaton:
    return DrhAutomaton(0, 0, [None], [None], [""], [None], variety, [None])


def letter_closure(A: DrhAutomaton) -> list:
    g = nx.DiGraph()
    g.add_nodes_from(A.states)
    for v in A.states:
        if v != A.terminal:
            g.add_edge(v, A.t0[v])
            g.add_edge(v, A.t1[v])
    cond = nx.condensation(g)
    members = cond.graph["mapping"]
    comp_letters = {}
    for c in reversed(list(nx.topological_sort(cond))):
        acc = {A.label[v] for v in cond.nodes[c]["members"] if A.label[v]}
        for d in cond.successors(c):
            acc |= comp_letters[d]
        comp_letters[c] = frozenset(acc)
    return [comp_letters[members[v]] for v in A.states]


@dataclass(frozen=True)
class Measures:
    norm: float
    regi: float
    cum: frozenset
    # least index of the 1-path lying on its cycle, when there is one
    cycle: Optional[int] = None


def measures(A: DrhAutomaton, v: int) -> Measures:
    path, start = A.one_path(v)
    if start is None:
        return Measures(len(path), INF, frozenset())
    cum = A.letters_from(path[start])
    regi = next(m for m in range(len(path)) if A.letters_from(path[m]) == cum)
    return Measures(INF, regi, cum, start)


def validate(A: DrhAutomaton) -> list[str]:
    """Violations of the DRH-automaton conditions; empty when valid."""
    bad = []
    n = len(A)
    for v in A.states:
        term = v == A.terminal
        if (A.label[v] == "") != term:
            bad.append(f"state {v}: empty letter label iff terminal")
        if term:
            if A.t0[v] is not None or A.t1[v] is not None:
                bad.append(f"terminal {v} has outgoing transitions")
            if A.hlabel[v] is not None:
                bad.append(f"terminal {v} has a group label")
            continue
        if A.t0[v] is None or A.t1[v] is None:
            bad.append(f"state {v}: missing transition")
            continue
        if not (0 <= A.t0[v] < n and 0 <= A.t1[v] < n):
            bad.append(f"state {v}: transition out of range")
            continue
        below = A.letters_from(A.t0[v])
        if A.label[v] in below or A.letters_from(v) != below | {A.label[v]}:
            bad.append(f"state {v}: letters are not those of its 0-child plus its label")
        m0 = measures(A, A.t0[v])
        if (A.hlabel[v] is None) != (m0.norm < INF):
            bad.append(f"state {v}: group label is I iff the 0-child has finite norm")
        if A.hlabel[v] is not None and m0.norm == INF:
            if not A.solver.letters(A.hlabel[v]) <= m0.cum:
                bad.append(f"state {v}: group label outside the cumulative content")
    seen = {A.root}
    stack = [A.root]
    while stack:
        v = stack.pop()
        for t in (A.t0[v], A.t1[v]):
            if t is not None and t not in seen:
                seen.add(t)
                stack.append(t)
    if len(seen) != n:
        bad.append(f"{n - len(seen)} states unreachable from the root")
    return bad


class GraphBuilder:
    """Memoized factors, markers and regular parts of the overlined word."""

    def __init__(self, w: KTerm, solver: HSolver | str = "triv"):
        self.term = w
        self.solver = get_solver(solver)
        self.wbar = build_overline(w)
        self._tails: dict = {}
        self._factors: dict = {}
        self._markers: dict = {}

    def tail(self, i: int) -> PWord:
        t = self._tails.get(i)
        if t is None:
            t = self._tails[i] = tail(self.wbar, i)
        return t

    def factor(self, i: int, a: str) -> PWord:
        key = (i, a)
        f = self._factors.get(key)
        if f is None:
            t = self.tail(i)
            f = t if a not in t.letters else PWord(_prefix(t.blocks, a))
            self._factors[key] = f
        return f

    def marker(self, i: int, a: str):
        key = (i, a)
        if key not in self._markers:
            f = self.factor(i, a)
            self._markers[key] = principal_marker(f) if f else None
        return self._markers[key]

    def regular_part(self, i: int, a: str, trace: Optional[list] = None) -> Optional[int]:
        """Index ``k`` with ``reg w(i,a) = w(k,a)``, or ``None`` when the
        cumulative content is empty (the regular part is ``I``)."""
        if not self.factor(i, a):
            raise ValueError(f"factor ({i},{a}) is empty")
        seen = set()
        j = i
        while j not in seen and self.factor(j, a):
            # record j before stepping, so the loop stops on the first revisit
            seen.add(j)
            j = self.marker(j, a).idx
            if trace is not None:
                trace.append(("walk", j))
        if not self.factor(j, a):
            return None
        cum = self.factor(j, a).letters
        k = i
        while self.factor(k, a).letters != cum:
            k = self.marker(k, a).idx
            if trace is not None:
                trace.append(("march", k))
        return k

    def group_label(self, i: int, b: str) -> Optional[HElement]:
        if not self.factor(i, b):
            return None
        k = self.regular_part(i, b)
        return None if k is None else self.solver.eval_h_pword(self.factor(k, b))

    def build(self) -> DrhAutomaton:
        t0, t1, label, hlabel, keys = [None], [None], [""], [None], [None]
        ids = {}

        def state(key):
            if not self.factor(*key):
                return 0
            s = ids.get(key)
            if s is None:
                s = ids[key] = len(label)
                t0.append(None)
                t1.append(None)
                label.append(None)
                hlabel.append(None)
                keys.append(key)
                todo.append(key)
            return s

        todo: list = []
        root = state((0, "#"))
        while todo:
            i, a = key = todo.pop()
            s = ids[key]
            m = self.marker(i, a)
            label[s] = m.letter
            hlabel[s] = self.group_label(i, m.letter)
            t0[s] = state((i, m.letter))
            t1[s] = state((m.idx, a))
        A = DrhAutomaton(root, 0, t0, t1, label, hlabel, self.solver.tag, keys)
        return renumber(A)

    def memo_table(self) -> list[tuple]:
        return sorted(((i, a), f) for (i, a), f in self._factors.items())


def build_graph(w: KTerm, solver: HSolver | str = "triv") -> DrhAutomaton:
    return GraphBuilder(w, solver).build()


def canonical_order(A: DrhAutomaton) -> list[int]:
    """States in breadth-first order from the root, 0-child before 1-child,
    with the terminal last."""
    order = [A.root]
    seen = {A.root}
    for v in order:
        if v == A.terminal:
            continue
        for t in (A.t0[v], A.t1[v]):
            if t not in seen:
                seen.add(t)
                order.append(t)
    if A.terminal in seen:
        order.remove(A.terminal)
        order.append(A.terminal)
    return order


def renumber(A: DrhAutomaton) -> DrhAutomaton:
    """Relabel states in canonical order; unreachable states are dropped."""
    order = canonical_order(A)
    new = {v: n for n, v in enumerate(order)}

    def move(t):
        return None if t is None else new[t]

    return DrhAutomaton(
        new[A.root],
        new.get(A.terminal, len(order)),
        [move(A.t0[v]) for v in order],
        [move(A.t1[v]) for v in order],
        [A.label[v] for v in order],
        [A.hlabel[v] for v in order],
        A.variety,
        [A.keys[v] if A.keys else None for v in order],
    )


def shape(A: DrhAutomaton) -> tuple:
    """Isomorphism invariant: equal shapes iff the automata are isomorphic."""
    B = renumber(A)
    return (
        B.root,
        B.terminal,
        tuple(B.t0),
        tuple(B.t1),
        tuple(B.label),
        tuple(B.hkey(v) for v in B.states),
    )


def isomorphic(A: DrhAutomaton, B: DrhAutomaton) -> bool:
    return shape(A) == shape(B)


def to_dot(A: DrhAutomaton, name: str = "drh") -> str:
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for v in A.states:
        shape_ = "doublecircle" if v == A.terminal else "box"
        caption = A.describe(v).replace('"', '\\"')
        extra = ", penwidth=2" if v == A.root else ""
        lines.append(f'  s{v} [shape={shape_}, label="{caption}"{extra}];')
    for v in A.states:
        if v != A.terminal:
            lines.append(f'  s{v} -> s{A.t0[v]} [label="0"];')
            lines.append(f'  s{v} -> s{A.t1[v]} [label="1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "DrhAutomaton",
    "GraphBuilder",
    "INF",
    "Measures",
    "build_graph",
    "canonical_order",
    "isomorphic",
    "letter_closure",
    "measures",
    "renumber",
    "shape",
    "to_dot",
    "trivial_automaton",
    "validate",
]
