import random

from drh import oracle
from drh.kterm import content, is_kappa, length
from drh.decider import equal_drh
from drh.randterm import (
    PairConfig,
    TermConfig,
    WordConfig,
    random_pairs,
    random_pword,
    random_term,
    random_terms,
    rewrite,
)
from drh.pword import satisfies_h


def test_exact_length():
    rng = random.Random(0)
    for m in (2, 3, 10, 57, 300):
        w = random_term(rng, TermConfig("abc", m))
        assert length(w) == m and is_kappa(w)


def test_deterministic():
    cfg = TermConfig("ab", 30)
    assert random_terms(5, 20, cfg) == random_terms(5, 20, cfg)
    assert random_pairs(5, 20, PairConfig()) == random_pairs(5, 20, PairConfig())


def test_general_rewrites_preserve_value():
    # these rewrites hold in every finite semigroup
    rng = random.Random(1)
    battery = list(oracle.battery().values())
    for _ in range(60):
        u = random_term(rng, TermConfig("ab", rng.randint(3, 12), 0.4))
        v = rewrite(rng, u, 2)
        assert content(u) == content(v)
        for h in ("triv", "ab", "g"):
            assert equal_drh(u, v, h)
        for S in battery:
            for asg in oracle.assignments(S, content(u)):
                assert oracle.eval_term(S, u, asg) == oracle.eval_term(S, v, asg)


def test_random_pword_indices():
    rng = random.Random(2)
    for _ in range(100):
        x = random_pword(rng, WordConfig(exponents=(-1, -2)))
        assert x and satisfies_h(x)
        idx = [s.idx for s in x.symbols() if hasattr(s, "idx")]
        assert idx == list(range(1, len(idx) + 1))
