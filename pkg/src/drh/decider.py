"""Equivalence of DRH-automata and equality of terms over DRH."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .drhgraph import DrhAutomaton, build_graph
from .hsolver import HSolver, get_solver
from .kterm import KTerm, content


@dataclass(frozen=True)
class Verdict:
    equal: bool
    witness: Optional[str] = None
    address: Optional[str] = None

    def __bool__(self):
        return self.equal


EQUAL = Verdict(True)


def _labels(A: DrhAutomaton, v: int):
    return A.label[v], A.hkey(v)


def _show(A: DrhAutomaton, v: int) -> str:
    return A.describe(v).split(" | ", 1)[-1] if v != A.terminal else "ε"


def _mismatch(A, B, p, q, address) -> Verdict:
    shown = address or "ε"
    return Verdict(
        False,
        f"labels differ at address {shown}: {_show(A, p)} vs {_show(B, q)}",
        address,
    )


def _pairs(A: DrhAutomaton, B: DrhAutomaton) -> Verdict:
    # breadth-first so the reported address is a shortest one
    start = (A.root, B.root)
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        (p, q), address = queue.popleft()
        if _labels(A, p) != _labels(B, q):
            return _mismatch(A, B, p, q, address)
        if p == A.terminal:
            continue
        for bit, nxt in (("0", (A.t0[p], B.t0[q])), ("1", (A.t1[p], B.t1[q]))):
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, address + bit))
    return EQUAL


def _states(A: DrhAutomaton, B: DrhAutomaton) -> Verdict:
    """Per-state marking: a pair is expanded when either side is fresh."""
    seen_a: set = set()
    seen_b: set = set()
    stack = [(A.root, B.root, "")]
    while stack:
        p, q, address = stack.pop()
        if p == A.terminal:
            if q != B.terminal:
                return _mismatch(A, B, p, q, address)
            continue
        if _labels(A, p) != _labels(B, q):
            return _mismatch(A, B, p, q, address)
        if p in seen_a and q in seen_b:
            continue
        seen_a.add(p)
        seen_b.add(q)
        # pushed in reverse so the 0-branch is explored first
        stack.append((A.t1[p], B.t1[q], address + "1"))
        stack.append((A.t0[p], B.t0[q], address + "0"))
    return EQUAL


def equivalent(A: DrhAutomaton, B: DrhAutomaton, mode: str = "pairs") -> Verdict:
    """Whether the unfoldings of ``A`` and ``B`` carry the same labels everywhere.

    ``mode="pairs"`` marks visited pairs of states; ``mode="states"`` marks
    states on each side separately and stops as soon as both are known.
    """
    if A.variety != B.variety:
        raise ValueError(f"automata over different varieties: {A.variety}, {B.variety}")
    if mode == "pairs":
        return _pairs(A, B)
    if mode == "states":
        return _states(A, B)
    raise ValueError(f"unknown mode {mode!r}")


def equal_drh(u: KTerm, v: KTerm, solver: HSolver | str = "triv", mode: str = "pairs") -> Verdict:
    h = get_solver(solver)
    cu, cv = content(u), content(v)
    if cu != cv:
        extra = sorted(cu ^ cv)
        return Verdict(False, f"contents differ on {', '.join(extra)}")
    verdict = equivalent(build_graph(u, h), build_graph(v, h), mode)
    if not verdict:
        return verdict
    x, y = h.eval_h(u), h.eval_h(v)
    if not h.equal_h(x, y):
        return Verdict(False, f"group projections differ: {x} vs {y}")
    return EQUAL
