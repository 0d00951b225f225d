import math
import random
from fractions import Fraction

import pytest

from equitau.gradedring import (
    BundleRingElement,
    GradedSeries,
    bernoulli_number,
    compose,
    exp,
    hyperplane_class,
    odd_part_quotient,
    pushforward,
    reduce,
    todd_coefficient,
    todd_factor,
)

P1 = ((1,), (-1,))


# ---------------------------------------------------------------------------
# oracles


def bernoulli_akiyama_tanigawa(n):
    """B_0..B_n in the B_1 = +1/2 convention, by the Akiyama-Tanigawa scheme."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def series_coeff(s, k):
    return s.coefficient((k,))


# ---------------------------------------------------------------------------
# series arithmetic


def test_geometric_inverse():
    n = 10
    one_plus_t = GradedSeries.one(1, n) + GradedSeries.variable(1, n)
    expected = GradedSeries(1, n, {(k,): (-1) ** k for k in range(n + 1)})
    assert one_plus_t.inverse() == expected
    assert one_plus_t * expected == GradedSeries.one(1, n)


def test_exp_product_is_one():
    t = GradedSeries.variable(1, 12)
    assert exp(t) * exp(-t) == GradedSeries.one(1, 12)


def test_exp_coefficients_against_factorials():
    t = GradedSeries.variable(1, 9)
    e = exp(t * 3)
    for k in range(10):
        assert series_coeff(e, k) == Fraction(3**k, math.factorial(k))


def test_invert_nonunit_raises():
    with pytest.raises(ValueError):
        GradedSeries.variable(1, 5).inverse()


def test_rank_truncation_mismatch():
    with pytest.raises(ValueError):
        GradedSeries.variable(1, 5) * GradedSeries.variable(1, 6)
    with pytest.raises(ValueError):
        GradedSeries.variable(1, 5) + GradedSeries.variable(2, 5)


def test_compose_geometric():
    n = 8
    # outer = 1/(1-t), inner = t^2 => sum t^{2k}
    outer = GradedSeries(1, n, {(k,): 1 for k in range(n + 1)})
    inner = GradedSeries.variable(1, n) ** 2
    expected = GradedSeries(1, n, {(2 * k,): 1 for k in range(n // 2 + 1)})
    assert compose(outer, inner) == expected
    with pytest.raises(ValueError):
        compose(outer, GradedSeries.one(1, n))  # constant term present


def test_ring_laws_random():
    rng = random.Random(99)

    def rand_series(rank):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            e = tuple(rng.randint(0, 4) for _ in range(rank))
            terms[e] = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        return GradedSeries(rank, 10, terms)

    for _ in range(60):
        rank = rng.choice((1, 2, 3))
        a, b, c = rand_series(rank), rand_series(rank), rand_series(rank)
        assert (a * b) * c == a * (b * c)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a


def test_truncation_discards_high_degrees():
    t = GradedSeries.variable(1, 3)
    assert (t**2 * t**2).is_zero()
    assert t**3 == GradedSeries(1, 3, {(3,): 1})


# ---------------------------------------------------------------------------
# Bernoulli numbers and the Todd factor


def test_bernoulli_against_akiyama_tanigawa():
    at = bernoulli_akiyama_tanigawa(12)
    for k in range(13):
        expected = at[k] if k != 1 else -at[k]  # recurrence convention has B_1 = -1/2
        assert bernoulli_number(k) == expected
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(3) == 0


def test_todd_coefficients_by_series_division():
    # x/(1 - e^{-x}) is the inverse of sum_k (-x)^k/(k+1)!
    n = 12
    denom = GradedSeries(
        1, n, {(k,): Fraction((-1) ** k, math.factorial(k + 1)) for k in range(n + 1)}
    )
    inv = denom.inverse()
    for k in range(n + 1):
        assert todd_coefficient(k) == series_coeff(inv, k)


def test_todd_factor_of_zero_is_one():
    assert todd_factor(GradedSeries.zero(1, 6)) == GradedSeries.one(1, 6)


def test_todd_factor_frozen_values():
    t = GradedSeries.variable(1, 4)
    expected = GradedSeries(
        1, 4, {(0,): 1, (1,): Fraction(1, 2), (2,): Fraction(1, 12), (4,): Fraction(-1, 720)}
    )
    assert todd_factor(t) == expected
    # the doubled form used for the tangent class of P^1
    expected2 = GradedSeries(
        1, 4, {(0,): 1, (1,): 1, (2,): Fraction(1, 3), (4,): Fraction(-1, 45)}
    )
    assert todd_factor(t * 2) == expected2


def test_todd_factor_rejects_inhomogeneous_input():
    t = GradedSeries.variable(1, 4)
    with pytest.raises(ValueError):
        todd_factor(t + t * t)


# ---------------------------------------------------------------------------
# reduction modulo the defining relation


def make_h(truncation=8):
    return hyperplane_class(P1, 1, truncation)


def test_reduce_h_squared_is_t_squared():
    h = make_h()
    t = GradedSeries.variable(1, 8)
    assert h * h == BundleRingElement(P1, [t * t, GradedSeries.zero(1, 8)])


def test_reduce_left_alone_below_degree():
    h = make_h()
    zero = GradedSeries.zero(1, 8)
    one = GradedSeries.one(1, 8)
    assert reduce([zero, one], P1) == h


def test_reduce_h_cubed():
    h = make_h()
    t = GradedSeries.variable(1, 8)
    assert h**3 == BundleRingElement(P1, [GradedSeries.zero(1, 8), t * t])


def test_reduce_is_idempotent_and_multiplicative():
    rng = random.Random(5)
    trunc = 8

    def rand_poly(deg):
        return [
            GradedSeries(1, trunc, {(rng.randint(0, 2),): rng.randint(-4, 4)})
            for _ in range(deg + 1)
        ]

    for _ in range(25):
        p = rand_poly(rng.randint(0, 6))
        q = rand_poly(rng.randint(0, 6))
        rp, rq = reduce(p, P1), reduce(q, P1)
        assert reduce(list(rp.coeffs), P1) == rp
        # convolve then reduce == reduce then multiply
        conv = [GradedSeries.zero(1, trunc) for _ in range(len(p) + len(q) - 1)]
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                conv[i + j] = conv[i + j] + a * b
        assert reduce(conv, P1) == rp * rq


def test_repeated_weights_allowed():
    # trivial action on P^2: relation is h^3
    weights = ((0,), (0,), (0,))
    t = GradedSeries.variable(1, 6)
    r = reduce([t * 0, t * 0, t * 0, GradedSeries.one(1, 6)], weights)
    assert r.is_zero()


# ---------------------------------------------------------------------------
# pushforward


def test_pushforward_examples():
    h = make_h()
    one = GradedSeries.one(1, 8)
    t = GradedSeries.variable(1, 8)
    assert pushforward(h) == one
    assert pushforward(h._one()) == GradedSeries.zero(1, 8)
    assert pushforward(h**3) == t * t


def test_pushforward_rejects_raw_polynomials():
    with pytest.raises(ValueError):
        pushforward([GradedSeries.one(1, 8)])


def test_pushforward_agrees_with_odd_part_closed_form():
    rng = random.Random(17)
    trunc = 16
    for _ in range(40):
        deg = rng.randint(0, 10)
        # polynomial coefficients of degree <= 3 keep everything exact
        coeffs = [
            GradedSeries(1, trunc, {(rng.randint(0, 3),): rng.randint(-5, 5)})
            for _ in range(deg + 1)
        ]
        assert pushforward(reduce(coeffs, P1)) == odd_part_quotient(coeffs, trunc)


def test_pushforward_degree_shift():
    trunc = 10
    t = GradedSeries.variable(1, trunc)
    h = make_h(trunc)
    for a in range(3):
        for k in range(2):
            cls = h**k * t**a
            result = pushforward(cls)
            if not result.is_zero():
                degrees = {sum(e) for e in result.terms}
                assert degrees == {a + k - 1}


def test_trivial_action_point_class():
    for m in (1, 2, 3):
        weights = tuple((0,) for _ in range(m + 1))
        h = hyperplane_class(weights, 1, 6)
        assert pushforward(h**m) == GradedSeries.one(1, 6)
        for k in range(m):
            assert pushforward(h**k).is_zero()


def test_bundle_inverse():
    h = make_h()
    unit = h._one() + h
    assert unit * unit.inverse() == h._one()
    with pytest.raises(ValueError):
        h.inverse()


def test_bundle_exp_homomorphism():
    h = make_h()
    t = GradedSeries.variable(1, 8)
    x = h * 2
    y = h._one() * t - h  # t - h, degree 1, no constant term
    assert exp(x) * exp(y) == exp(x + y)
