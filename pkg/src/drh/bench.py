"""Timing of equality decisions on random terms of growing length."""

from __future__ import annotations

import io
import csv
import random
import time
from dataclasses import dataclass

import numpy as np

from .decider import equal_drh
from .randterm import TermConfig, random_term, rewrite_once


@dataclass
class BenchConfig:
    sizes: tuple = (100, 200, 400, 800, 1600)
    variety: str = "g"
    seed: int = 0
    alphabet: str = "abc"
    power_density: float = 0.25
    repeats: int = 1


@dataclass
class BenchRow:
    m: int
    seed: int
    millis: float
    verdict: bool


def bench_pair(m: int, seed: int, cfg: BenchConfig):
    """A term of length ``m`` and a rewritten copy of it, equal by construction."""
    rng = random.Random(seed * 1_000_003 + m)
    u = random_term(rng, TermConfig(cfg.alphabet, m, cfg.power_density))
    v = rewrite_once(rng, u)
    return u, v


def run_bench(cfg: BenchConfig) -> list[BenchRow]:
    rows = []
    for m in cfg.sizes:
        for r in range(cfg.repeats):
            seed = cfg.seed + r
            u, v = bench_pair(m, seed, cfg)
            t = time.perf_counter()
            verdict = equal_drh(u, v, cfg.variety).equal
            rows.append(BenchRow(m, seed, 1000 * (time.perf_counter() - t), verdict))
    return rows


def fitted_slope(rows: list[BenchRow]):
    """Least-squares slope of log(time) against log(m); ``None`` if undefined."""
    ms = sorted({r.m for r in rows})
    if len(ms) < 2:
        return None
    x = np.log([r.m for r in rows])
    y = np.log([max(r.millis, 1e-3) for r in rows])
    return float(np.polyfit(x, y, 1)[0])


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["m", "seed", "millis", "verdict"])
    for r in rows:
        out.writerow([r.m, r.seed, f"{r.millis:.3f}", "equal" if r.verdict else "unequal"])
    return buf.getvalue()
