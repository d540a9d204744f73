import math
from fractions import Fraction

import pytest

from revcube import counting, cube


def test_assembly_counts():
    f = math.factorial
    assert counting.num_assemblies() == 2**24 * f(24) * 3**8 * f(8) * f(24)
    assert counting.num_mechanical_assemblies() == f(24) * 3**8 * f(8) * f(24)
    assert counting.num_assemblies() == counting.num_mechanical_assemblies() << 24


def test_licit_count_is_one_sixth_of_flip_free():
    assert counting.num_licit() * 6 == counting.num_mechanical_assemblies()


def test_relabeling_counts():
    assert counting.num_relabelings() == 2**12 * 24**6
    assert counting.num_relabelings_mechanical() == 24**6
    assert counting.num_relabelings_licit() * 2 == 24**6


def test_class_counts():
    assert counting.num_classes_marked() == 1_594_323
    assert counting.num_classes_marked() == 3**13
    assert counting.edge_pair_class_count() == 3**12
    assert counting.num_classes_mechanical() == 3


def test_class_count_times_solvable_size():
    # marked classes have unequal sizes, so count * |solvable| exceeds |T|
    solvable = (
        counting.num_relabelings()
        * counting.num_licit()
        // counting.num_relabelings_licit()
    )
    assert solvable * counting.num_classes_marked() > counting.num_assemblies()
    # mechanical classes are equal-sized, three of them tile everything
    mech = counting.num_relabelings_mechanical() * counting.num_licit() // (
        counting.num_relabelings_mechanical() // 2
    )
    assert mech * 3 == counting.num_mechanical_assemblies()


def test_exact_probabilities():
    assert counting.exact_probability("marked") == Fraction(1, 12288)
    assert counting.exact_probability("mechanical") == Fraction(1, 3)
    with pytest.raises(ValueError):
        counting.exact_probability("painted")


def test_reciprocal_class_count_comparison():
    # naive 1/classes is wrong for marked, right for mechanical
    assert Fraction(1, counting.num_classes_marked()) != counting.exact_probability(
        "marked"
    )
    assert Fraction(
        1, counting.num_classes_mechanical()
    ) == counting.exact_probability("mechanical")


def test_probability_denominator_structure():
    p = counting.exact_probability("marked")
    assert p.numerator == 1
    assert p.denominator == 3 * 2**12


def test_estimate_deterministic_per_seed():
    a = counting.estimate_probability("mechanical", 150_000, seed=7)
    b = counting.estimate_probability("mechanical", 150_000, seed=7)
    c = counting.estimate_probability("mechanical", 150_000, seed=8)
    assert a == b
    assert a[0] != c[0]


def test_estimate_worker_invariant():
    for mode in counting.MODES:
        a = counting.estimate_probability(mode, 200_000, seed=11, workers=1)
        b = counting.estimate_probability(mode, 200_000, seed=11, workers=3)
        d = counting.estimate_probability(mode, 200_000, seed=11, workers=8)
        assert a == b == d


def test_estimate_pinned():
    est, err = counting.estimate_probability("mechanical", 200_000, seed=7)
    assert est == Fraction(66743, 200_000)
    assert f"{err:.6e}" == "1.054394e-03"
    est, err = counting.estimate_probability("marked", 100_000, seed=5, workers=2)
    assert est == Fraction(1, 25_000)
    assert f"{err:.6e}" == "1.999960e-05"


def test_estimate_close_to_exact():
    n = 300_000
    p = float(counting.exact_probability("mechanical"))
    est, err = counting.estimate_probability("mechanical", n, seed=13)
    sigma = math.sqrt(p * (1 - p) / n)
    assert abs(float(est) - p) < 4 * sigma
    assert abs(err - sigma) < sigma / 10


def test_estimate_partial_stream():
    # n below one stream and n not a multiple of the stream size both work
    est, _ = counting.estimate_probability("mechanical", 1000, seed=3)
    assert 0 <= est <= 1
    assert 1000 % est.denominator == 0
    a = counting.estimate_probability("mechanical", 70_000, seed=3)
    b = counting.estimate_probability("mechanical", 70_000, seed=3, workers=2)
    assert a == b


def test_estimate_rejects_bad_args():
    with pytest.raises(ValueError):
        counting.estimate_probability("mechanical", 0, seed=1)
    with pytest.raises(ValueError):
        counting.estimate_probability("painted", 100, seed=1)


def test_flip_rate_matches_pair_condition(make_rng):
    # fraction of assemblies whose flips alone pass is 2^-12
    rng = make_rng(501)
    hits = 0
    n = 40_000
    for _ in range(n):
        bits = rng.integers(0, 2, size=24)
        if all(bits[2 * k] == bits[2 * k + 1] for k in range(12)):
            hits += 1
    p = 2.0**-12
    sigma = math.sqrt(p * (1 - p) / n)
    assert abs(hits / n - p) < 5 * sigma


def test_stream_hits_match_scalar_predicate():
    # rebuild one stream's exact draws and judge each row with CubeState,
    # so the vectorized predicate cannot drift from the scalar one
    import numpy as np

    from revcube.counting import _stream_hits
    from revcube.wreath import WreathElem

    count, seed = 4096, 31

    def fresh():
        return np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(0,)))
        )

    def perm_rows(rng, n):
        tile = np.broadcast_to(np.arange(n, dtype=np.int8), (count, n)).copy()
        return rng.permuted(tile, axis=1)

    for mode in counting.MODES:
        rng = fresh()
        if mode == "marked":
            bits = rng.integers(0, 2, size=(count, 24), dtype=np.int8)
        else:
            bits = np.zeros((count, 24), dtype=np.int8)
        eperm = perm_rows(rng, 24)
        twists = rng.integers(0, 3, size=(count, 8), dtype=np.int8)
        cperm = perm_rows(rng, 8)
        zperm = perm_rows(rng, 24)

        hits = 0
        for r in range(count):
            t = cube.CubeState(
                WreathElem(2, tuple(map(int, bits[r])), tuple(map(int, eperm[r]))),
                WreathElem(3, tuple(map(int, twists[r])), tuple(map(int, cperm[r]))),
                tuple(map(int, zperm[r])),
            )
            if mode == "marked":
                hits += cube.is_solvable(t)
            else:
                hits += cube.is_solvable_mechanical(t)
        assert hits == _stream_hits(mode, seed, 0, count)


def test_sampled_states_obey_exact_probability(make_rng):
    # library-level sampler agrees with the closed form at 4 sigma
    rng = make_rng(502)
    n = 30_000
    hits = sum(
        cube.is_solvable_mechanical(cube.random_mechanical_assembly(rng))
        for _ in range(n)
    )
    p = 1 / 3
    sigma = math.sqrt(p * (1 - p) / n)
    assert abs(hits / n - p) < 4 * sigma
