import math
from itertools import permutations

import pytest

from revcube import perm


def test_identity():
    assert perm.identity(4) == (0, 1, 2, 3)
    assert perm.identity(0) == ()


def test_compose_hand_checked():
    # p(q(i)) with q applied first
    assert perm.compose((1, 0, 2), (0, 2, 1)) == (1, 2, 0)
    assert perm.compose((0, 2, 1), (1, 0, 2)) == (2, 0, 1)


def test_inverse_hand_checked():
    assert perm.inverse((1, 2, 3, 0)) == (3, 0, 1, 2)
    assert perm.inverse((0, 1, 2)) == (0, 1, 2)


def test_compose_inverse_random(make_rng):
    rng = make_rng(101)
    for _ in range(200):
        n = int(rng.integers(1, 30))
        p = perm.random_perm(n, rng)
        q = perm.random_perm(n, rng)
        assert perm.compose(p, perm.inverse(p)) == perm.identity(n)
        assert perm.compose(perm.inverse(p), p) == perm.identity(n)
        assert perm.inverse(perm.compose(p, q)) == perm.compose(
            perm.inverse(q), perm.inverse(p)
        )


def test_associativity_random(make_rng):
    rng = make_rng(102)
    for _ in range(100):
        n = int(rng.integers(1, 20))
        p = perm.random_perm(n, rng)
        q = perm.random_perm(n, rng)
        r = perm.random_perm(n, rng)
        assert perm.compose(perm.compose(p, q), r) == perm.compose(
            p, perm.compose(q, r)
        )


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        perm.compose((0, 1), (0, 1, 2))


def test_is_perm_and_check():
    assert perm.is_perm((2, 0, 1))
    assert not perm.is_perm((0, 0, 1))
    assert not perm.is_perm((0, 1, 3))
    with pytest.raises(ValueError):
        perm.check_perm((1, 1))


def _sign_by_inversions(p):
    # brute force count of out-of-order pairs
    inv = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return -1 if inv % 2 else 1


def test_sign_matches_inversion_count_exhaustive():
    for n in range(1, 6):
        for p in permutations(range(n)):
            assert perm.sign(p) == _sign_by_inversions(p)


def test_sign_multiplicative(make_rng):
    rng = make_rng(103)
    for _ in range(100):
        n = int(rng.integers(2, 25))
        p = perm.random_perm(n, rng)
        q = perm.random_perm(n, rng)
        assert perm.sign(perm.compose(p, q)) == perm.sign(p) * perm.sign(q)
    assert perm.sign(perm.transposition(8, 2, 5)) == -1


def test_cycles_and_cycle_type():
    p = (1, 2, 0, 4, 3, 5)
    assert perm.cycles(p) == [(0, 1, 2), (3, 4)]
    assert perm.cycle_type(p) == (3, 2)
    assert perm.cycle_type(perm.identity(6)) == ()


def test_from_cycles():
    assert perm.from_cycles(5, [(0, 1, 2), (3, 4)]) == (1, 2, 0, 4, 3)
    assert perm.from_cycles(3, []) == (0, 1, 2)
    with pytest.raises(ValueError):
        perm.from_cycles(3, [(0, 1), (1, 2)])  # reused point


def test_from_cycles_round_trip(make_rng):
    rng = make_rng(104)
    for _ in range(100):
        n = int(rng.integers(1, 20))
        p = perm.random_perm(n, rng)
        assert perm.from_cycles(n, perm.cycles(p)) == p


def test_random_perm_pinned(make_rng):
    rng = make_rng(42)
    assert perm.random_perm(10, rng) == (1, 8, 7, 9, 4, 2, 3, 5, 6, 0)
    assert perm.random_perm(10, rng) == (2, 9, 1, 6, 3, 8, 5, 7, 4, 0)
    assert perm.random_perm(10, rng) == (6, 0, 5, 3, 7, 1, 2, 9, 4, 8)


def test_random_perm_uniform_on_s3(make_rng):
    # 1e5 draws over the 6 elements of S3, each within 5 sigma of the mean
    rng = make_rng(105)
    draws = 100_000
    counts = {}
    for _ in range(draws):
        p = perm.random_perm(3, rng)
        counts[p] = counts.get(p, 0) + 1
    assert len(counts) == 6
    mean = draws / 6
    sigma = math.sqrt(draws * (1 / 6) * (5 / 6))
    for got in counts.values():
        assert abs(got - mean) < 5 * sigma
