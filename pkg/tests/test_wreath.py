import pytest

from revcube import perm
from revcube.wreath import WreathElem


def random_elem(k, n, rng):
    twists = tuple(int(rng.integers(0, k)) for _ in range(n))
    return WreathElem(k, twists, perm.random_perm(n, rng))


def test_validation():
    with pytest.raises(ValueError):
        WreathElem(4, (0, 0), (0, 1))  # unsupported modulus
    with pytest.raises(ValueError):
        WreathElem(2, (0, 2), (0, 1))  # twist out of range
    with pytest.raises(ValueError):
        WreathElem(2, (0, 0, 0), (0, 1))
    with pytest.raises(ValueError):
        WreathElem(3, (0, 0), (0, 0))


def test_identity_and_degree():
    e = WreathElem.identity(3, 8)
    assert e.degree == 8
    assert e.twists == (0,) * 8
    assert e * e == e


def test_squared_flip_swap_is_identity():
    g = WreathElem(2, (1, 1), (1, 0))
    assert g * g == WreathElem.identity(2, 2)


def test_action_hand_checked():
    g = WreathElem(2, (1, 1), (1, 0))
    # swap both slots, then add one flip to each
    assert g.act((0, 0)) == (1, 1)
    assert g.act((0, 1)) == (0, 1)
    assert g.act((1, 0)) == (1, 0)


def test_inverse_random(make_rng):
    rng = make_rng(201)
    for k in (2, 3):
        for _ in range(100):
            n = int(rng.integers(1, 12))
            g = random_elem(k, n, rng)
            e = WreathElem.identity(k, n)
            assert g * g.inverse() == e
            assert g.inverse() * g == e


def test_associativity_random(make_rng):
    rng = make_rng(202)
    for k in (2, 3):
        for _ in range(60):
            n = int(rng.integers(1, 10))
            a = random_elem(k, n, rng)
            b = random_elem(k, n, rng)
            c = random_elem(k, n, rng)
            assert (a * b) * c == a * (b * c)


def test_action_is_compatible_with_product(make_rng):
    # (g*h).act == g.act(h.act(.)) pins the product order
    rng = make_rng(203)
    for k in (2, 3):
        for _ in range(100):
            n = int(rng.integers(1, 10))
            g = random_elem(k, n, rng)
            h = random_elem(k, n, rng)
            v = tuple(int(rng.integers(0, k)) for _ in range(n))
            assert (g * h).act(v) == g.act(h.act(v))


def test_twist_sum_additive(make_rng):
    rng = make_rng(204)
    for _ in range(100):
        n = int(rng.integers(1, 10))
        g = random_elem(3, n, rng)
        h = random_elem(3, n, rng)
        assert (g * h).twist_sum() == (g.twist_sum() + h.twist_sum()) % 3


def test_to_point_perm_is_homomorphism(make_rng):
    rng = make_rng(205)
    for k in (2, 3):
        for _ in range(100):
            n = int(rng.integers(1, 8))
            g = random_elem(k, n, rng)
            h = random_elem(k, n, rng)
            assert perm.is_perm(g.to_point_perm())
            assert (g * h).to_point_perm() == perm.compose(
                g.to_point_perm(), h.to_point_perm()
            )


def test_to_point_perm_faithful(make_rng):
    rng = make_rng(206)
    seen = {}
    for _ in range(300):
        g = random_elem(3, 4, rng)
        pts = g.to_point_perm()
        if pts in seen:
            assert seen[pts] == g
        seen[pts] = g
    # identity maps to identity, nothing else does
    e = WreathElem.identity(3, 4)
    assert e.to_point_perm() == perm.identity(12)
    g = WreathElem(3, (1, 0, 0, 0), perm.identity(4))
    assert g.to_point_perm() != perm.identity(12)
