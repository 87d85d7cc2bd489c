"""Canonical forms over DRH: wrapping, the product expression of an automaton,
and the canonical form of a term."""

from __future__ import annotations

from dataclasses import dataclass

from .drhgraph import DrhAutomaton, GraphBuilder, canonical_order, renumber
from .hsolver import HSolver, get_solver
from .kterm import EMPTY, Concat, KTerm, Letter, Power, concat, power


@dataclass
class WrappedAutomaton:
    automaton: DrhAutomaton
    class_of: list  # original state -> state of the quotient

    def __len__(self):
        return len(self.automaton)


def _partition(A: DrhAutomaton) -> list:
    """Coarsest partition compatible with labels and both transitions."""
    ids: dict = {}
    cls = [ids.setdefault((A.label[v], A.hkey(v)), len(ids)) for v in A.states]
    count = len(ids)
    while True:
        ids = {}
        nxt = []
        for v in A.states:
            if v == A.terminal:
                sig = (cls[v],)
            else:
                sig = (cls[v], cls[A.t0[v]], cls[A.t1[v]])
            nxt.append(ids.setdefault(sig, len(ids)))
        if len(ids) == count:
            return nxt
        cls, count = nxt, len(ids)


def wrap(A: DrhAutomaton) -> WrappedAutomaton:
    """Quotient ``A`` by equivalence of states (equal unfoldings)."""
    cls = _partition(A)
    n = max(cls) + 1
    t0 = [None] * n
    t1 = [None] * n
    label = [""] * n
    hlabel = [None] * n
    keys = [None] * n
    filled = [False] * n
    for v in A.states:
        c = cls[v]
        if v == A.terminal or filled[c]:
            continue
        filled[c] = True
        label[c] = A.label[v]
        hlabel[c] = A.hlabel[v]
        keys[c] = A.keys[v] if A.keys else None
        t0[c] = cls[A.t0[v]]
        t1[c] = cls[A.t1[v]]
    Q = DrhAutomaton(cls[A.root], cls[A.terminal], t0, t1, label, hlabel, A.variety, keys)
    new = {c: m for m, c in enumerate(canonical_order(Q))}
    return WrappedAutomaton(renumber(Q), [new[c] for c in cls])


def _factor(A: DrhAutomaton, s: int, memo: dict, h: HSolver) -> KTerm:
    g = A.hlabel[s]
    return concat(
        _pi(A, A.t0[s], memo, h),
        EMPTY if g is None else h.cf_h(g),
        Letter(A.label[s]),
    )


def _pi(A: DrhAutomaton, v: int, memo: dict, h: HSolver) -> KTerm:
    if v in memo:
        return memo[v]
    if v == A.terminal:
        memo[v] = EMPTY
        return EMPTY
    path, start = A.one_path(v)
    parts = [_factor(A, s, memo, h) for s in path]
    if start is None:
        out = concat(*parts)
    else:
        cum = A.letters_from(path[start])
        regi = next(m for m in range(len(path)) if A.letters_from(path[m]) == cum)
        # the least cycle position at or after regi is the cycle entry itself
        ell = max(start, regi)
        inner = power(concat(*parts[ell:]), 0)
        out = concat(*parts[:regi], power(concat(*parts[regi:ell], inner), 0))
    memo[v] = out
    return out


def pi_cf(W: WrappedAutomaton | DrhAutomaton, solver: HSolver | str | None = None) -> KTerm:
    A = W.automaton if isinstance(W, WrappedAutomaton) else W
    h = get_solver(solver or A.variety)
    return _pi(A, A.root, {}, h)


def strict_kappa(w: KTerm) -> KTerm:
    """Rewrite each ``x^w`` as ``x^(w-1) x`` so only (omega-1)-powers remain."""
    if isinstance(w, Power):
        base = strict_kappa(w.base)
        if w.q == 0:
            return concat(Power(base, -1), base)
        return Power(base, w.q)
    if isinstance(w, Concat):
        return concat(*(strict_kappa(p) for p in w.parts))
    return w


def canonical_form(w: KTerm, solver: HSolver | str = "triv", kappa_only: bool = False) -> KTerm:
    h = get_solver(solver)
    builder = GraphBuilder(w, h)
    A = builder.build()
    out = pi_cf(wrap(A), h)
    if builder.factor(0, "#"):
        k = builder.regular_part(0, "#")
        if k is not None:
            out = concat(out, h.cf_h(h.eval_h_pword(builder.factor(k, "#"))))
    return strict_kappa(out) if kappa_only else out
