import random

import pytest

from bettibound.errors import AmbientTooLarge, TooManyGenerators
from bettibound.ideal import MonomialIdeal, classify, ek_betti, minimalize
from bettibound.oracle import (
    borel_ideal_corpus,
    enumerate_borel_sets,
    exact_rank,
    random_borel_ideal,
    taylor_betti,
    taylor_report,
)

from bruteforce import rank_fraction, rank_mod_p

PRIMES = (1_000_000_007, 998_244_353, 2_147_483_647)


@pytest.mark.parametrize("m, r", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
    ([[0, 0], [0, 0]], 0),
    ([[1, 1], [1, 1]], 1),
    ([[2, 4], [1, 2], [3, 7]], 2),
])
def test_exact_rank_examples(m, r):
    assert exact_rank(m) == r


def test_exact_rank_matches_fraction_elimination():
    rng = random.Random(3)
    for _ in range(200):
        rows, cols = rng.randint(1, 12), rng.randint(1, 12)
        m = [[rng.choice((-1, 0, 0, 1, 2)) for _ in range(cols)] for _ in range(rows)]
        # plant dependencies
        if rows > 2:
            m[-1] = [a - 2 * b for a, b in zip(m[0], m[1])]
        assert exact_rank(m) == rank_fraction(m)


@pytest.mark.parametrize("shape", [(40, 40), (120, 80), (200, 200)])
def test_exact_rank_matches_modular_ranks(shape):
    rng = random.Random(hash(shape) & 0xFFFF)
    rows, cols = shape
    m = [[rng.choice((-1, 0, 0, 0, 1)) for _ in range(cols)] for _ in range(rows)]
    for k in range(rows // 4):
        m[rows - 1 - k] = [a + b for a, b in zip(m[k], m[k + 1])]
    r = exact_rank(m)
    assert all(rank_mod_p(m, p) == r for p in PRIMES)


def test_taylor_examples():
    assert taylor_betti(minimalize([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)).betas == (3, 3, 1)
    assert taylor_betti(minimalize([(0, 2, 1)], 3)).betas == (1, 0, 0)
    rep = taylor_report(minimalize([(1, 1, 0), (0, 1, 1)], 3))
    assert rep.betas == (2, 1) and rep.table.betas == (2, 1, 0)
    assert taylor_betti(MonomialIdeal(3)).betas == (0, 0, 0)


def test_taylor_report_invariants(borel_ideals):
    for ideal in borel_ideals[:80]:
        rep = taylor_report(ideal)
        r = rep.generator_count
        for q in range(r):
            ranks_next = rep.ranks[q + 1] if q + 1 < r else 0
            assert rep.betas[q] == rep.chain_dims[q] - rep.ranks[q] - ranks_next
        assert sum((-1) ** q * b for q, b in enumerate(rep.betas)) == sum(
            (-1) ** (p - 1) * c for p, c in enumerate(rep.chain_dims, start=1)
        )
        assert rep.betas[0] == r
        assert all(b == 0 for b in rep.betas[ideal.vars:])


def test_taylor_is_permutation_invariant(borel_ideals):
    rng = random.Random(11)
    for ideal in borel_ideals[:40]:
        gens = list(ideal.generators)
        rng.shuffle(gens)
        shuffled = MonomialIdeal.__new__(MonomialIdeal)
        object.__setattr__(shuffled, "vars", ideal.vars)
        object.__setattr__(shuffled, "generators", tuple(gens))
        assert taylor_betti(shuffled) == taylor_betti(ideal)


def test_taylor_size_guard():
    gens = [(a, 5 - a, 0) for a in range(6)]
    ideal = minimalize(gens, 3)
    with pytest.raises(TooManyGenerators):
        taylor_betti(ideal, size_guard=5)
    assert taylor_betti(ideal, size_guard=6) == ek_betti(ideal)


def test_enumeration_guard():
    with pytest.raises(AmbientTooLarge):
        list(enumerate_borel_sets(3, 4))


def test_random_borel_ideal_properties():
    assert random_borel_ideal(3, 4, seed=1, density=0.0).generators == ()
    assert random_borel_ideal(4, 3, seed=9, density=0.2) == random_borel_ideal(4, 3, seed=9, density=0.2)
    for seed in range(50):
        ideal = random_borel_ideal(3 + seed % 3, 1 + seed % 4, seed=seed, density=0.15)
        assert classify(ideal).is_borel


def test_corpus_is_deterministic_and_bounded():
    a = borel_ideal_corpus(20, seed=5)
    assert a == borel_ideal_corpus(20, seed=5)
    assert all(1 <= len(i.generators) <= 12 for i in a)
