"""Random terms, words and equal-by-construction pairs for tests and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .kterm import Concat, KTerm, Letter, Power, concat, content, factors, length
from .pword import Group, Lit, PWord


@dataclass
class TermConfig:
    alphabet: str = "abc"
    length: int = 20
    power_density: float = 0.25
    q_choices: tuple = (-1,)


@dataclass
class PairConfig:
    alphabet: str = "ab"
    max_length: int = 14
    rewrite_share: float = 0.6
    rewrite_steps: int = 2
    power_density: float = 0.3


def random_term(rng: random.Random, cfg: TermConfig) -> KTerm:
    """A random term whose binary tree has ``cfg.length - 1`` nodes."""
    return _tree(rng, max(cfg.length - 1, 1), cfg)


def _tree(rng, nodes, cfg):
    if nodes == 1:
        return Letter(rng.choice(cfg.alphabet))
    if nodes == 2 or rng.random() < cfg.power_density:
        return Power(_tree(rng, nodes - 1, cfg), rng.choice(cfg.q_choices))
    left = rng.randint(1, nodes - 2)
    return concat(_tree(rng, left, cfg), _tree(rng, nodes - 1 - left, cfg))


def random_terms(seed: int, count: int, cfg: TermConfig) -> list:
    rng = random.Random(seed)
    return [random_term(rng, cfg) for _ in range(count)]


# -- value-preserving rewrites ----------------------------------------------
#
# nest, split and rotate hold in every finite semigroup.  With r_only the
# generator also uses absorb (valid in R) and swap (valid over DRAb), so those
# pairs are only likely to be equal; verdicts always come from the decider.


def _nest(y: Power) -> KTerm:
    # y^(w-1) = ((y^(w-1))^(w-1))^(w-1)
    return Power(Power(y, -1), -1)


def _split(y: Power) -> KTerm:
    # y^(w-1) = y^(w-1) y^(w-1) y
    return concat(y, y, y.base)


def rewrite_once(rng: random.Random, w: KTerm, r_only: bool = False) -> KTerm:
    """Apply one rewrite at a random position; ``w`` if none applies."""
    sites = list(_sites(w, r_only))
    if not sites:
        return w
    path, rule = rng.choice(sites)
    return _replace(w, path, rule)


def _sites(w, r_only, path=()):
    if isinstance(w, Power):
        if w.q == -1:
            yield path, "nest"
            yield path, "split"
            if r_only:
                yield path, "absorb"
        yield from _sites(w.base, r_only, path + (0,))
    elif isinstance(w, Concat):
        parts = w.parts
        for k, p in enumerate(parts):
            yield from _sites(p, r_only, path + (k,))
            if isinstance(p, Power) and k + 1 < len(parts):
                yield path + (k,), "rotate"
                if r_only and k + 2 < len(parts):
                    yield path + (k,), "swap"


def _replace(w, path, rule):
    if isinstance(w, Concat) and rule in ("rotate", "swap") and len(path) == 1:
        return _concat_rule(w, path[0], rule)
    if not path:
        if rule == "nest":
            return _nest(w)
        if rule == "split":
            return _split(w)
        if rule == "absorb":
            # y^(w-1) = y^(w-1) y in R, where group parts are trivial
            return concat(w, w.base)
        return w
    k, rest = path[0], path[1:]
    if isinstance(w, Power):
        return Power(_replace(w.base, rest, rule), w.q)
    parts = list(w.parts)
    parts[k] = _replace(parts[k], rest, rule)
    return concat(*parts)


def _concat_rule(w: Concat, k: int, rule: str) -> KTerm:
    parts = list(w.parts)
    p = parts[k]
    if rule == "rotate":
        # (p0 ... pk)^(w+q) p0 = p0 (p1 ... pk p0)^(w+q)
        inner = factors(p.base)
        nxt = parts[k + 1]
        if inner[0] != nxt:
            return w
        rotated = Power(concat(*inner[1:], inner[0]), p.q)
        parts[k: k + 2] = [nxt, rotated]
        return concat(*parts)
    # swap: y^(w+q) u v = y^(w+q) v u over DRAb when c(u), c(v) lie in c(y)
    u, v = parts[k + 1], parts[k + 2]
    c = content(p.base)
    if content(u) <= c and content(v) <= c:
        parts[k + 1], parts[k + 2] = v, u
    return concat(*parts)


def rewrite(rng: random.Random, w: KTerm, steps: int, r_only: bool = False) -> KTerm:
    for _ in range(steps):
        w = rewrite_once(rng, w, r_only)
    return w


def random_pairs(seed: int, count: int, cfg: PairConfig) -> list:
    """Pairs mixing rewritten copies (mostly equal) with unrelated short terms."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, cfg.max_length)
        tcfg = TermConfig(cfg.alphabet, n, cfg.power_density)
        u = random_term(rng, tcfg)
        if rng.random() < cfg.rewrite_share:
            v = rewrite(rng, u, cfg.rewrite_steps, r_only=rng.random() < 0.3)
        else:
            v = random_term(rng, TermConfig(cfg.alphabet, rng.randint(2, cfg.max_length), cfg.power_density))
        if length(v) > 4 * cfg.max_length:
            v = u
        out.append((u, v))
    return out


# -- random parenthesized words ---------------------------------------------


@dataclass
class WordConfig:
    alphabet: str = "abc"
    max_letters: int = 12
    exponents: tuple = (-1,)
    open_prob: float = 0.3
    close_prob: float = 0.3


def random_pword(rng: random.Random, cfg: WordConfig, start: int = 1) -> PWord:
    """A word with distinct consecutive indices and no empty groups."""
    counter = [start]
    budget = [rng.randint(1, cfg.max_letters)]

    def forest(depth):
        blocks = []
        while budget[0] > 0:
            if depth and blocks and rng.random() < cfg.close_prob:
                break
            if rng.random() < cfg.open_prob:
                body = forest(depth + 1)
                if body:
                    blocks.append(Group(rng.choice(cfg.exponents), body))
                continue
            blocks.append(Lit(rng.choice(cfg.alphabet), counter[0]))
            counter[0] += 1
            budget[0] -= 1
        return tuple(blocks)

    return PWord(forest(0))
