"""Smoke tests for the _hadfrac extension module."""

import math

import _hadfrac as h


def test_constant_operator():
    z = h.constant(1.0, math.e ** 2)
    r = h.hadamard_left(z, math.e, 0.5, 1.0)
    assert abs(r.value - 2 / math.sqrt(math.pi)) < 1e-10
    assert r.converged
    assert r.err_est < 1e-8


def test_closed_form_identity():
    x = math.e ** 2
    for alpha, beta, lam in [(0.3, 0.25, 1.0), (1.0, 0.5, 2.0), (1.7, 1.0, 2.5)]:
        z = h.power_input(lam, beta, x)
        got = h.hadamard_left(z, x, alpha, beta).value
        want = h.closed_form_power_image(x, alpha, beta, lam)
        assert abs(got - want) <= 1e-8 * abs(want)


def test_right_and_rl_operators_run():
    z = h.constant(1.0, math.e ** 2)
    assert h.hadamard_right(z, math.e, math.e ** 2, 0.8, 0.5).value > 0
    assert h.rl_left(z, 2.0, 0.8, 0.5).value > 0
    assert h.rl_right(z, 1.5, 0.8, 0.5, b=3.0).value > 0


def test_spline_serialization_round_trip():
    f = h.make_function([0.0, 1.0, 2.0], [0.0, 0.4, -0.2])
    g = h.deserialize(f.serialize())
    for t in (1.0, 2.0, 5.0, math.e ** 2):
        assert f.value(t) == g.value(t)


def test_combine_and_sum():
    f = h.make_function([0.0, 1.0, 2.0], [0.1, 0.3, -0.1])
    g = h.make_function([0.0, 0.8, 2.0], [-0.2, 0.2, 0.4])
    prod = h.combine([f, g], [1.0, 1.0])
    sq = h.pow_fn(f, 2.0)
    s = h.combine_add(f, g)
    t = 2.5
    assert abs(prod.value(t) - f.value(t) * g.value(t)) < 1e-12
    assert abs(sq.value(t) - f.value(t) ** 2) < 1e-12
    assert abs(s.value(t) - (f.value(t) + g.value(t))) < 1e-7 * s.value(t)


def test_semigroup():
    z = h.constant(1.0, math.e ** 2)
    nested, direct = h.semigroup_compose(z, math.e, 0.6, 0.9, 0.5)
    assert abs(nested.value - direct.value) <= 1e-6 * abs(direct.value)


def test_inequality_checker():
    f, g = h.corridor_pair(0.5, 2.0, 2024)
    lhs, rhs, margin, verdict = h.check_t3_1(
        f, g, 0.5, 2.0, 2.0, math.e, 0.5, 0.5
    )
    assert lhs > 0 and rhs > 0
    assert margin >= -1e-9
    assert verdict in ("holds", "inconclusive")


def test_domain_errors_surface_as_exceptions():
    z = h.constant(1.0, 2.0)
    try:
        h.hadamard_left(z, 5.0, 0.5, 0.5)
    except ValueError:
        pass
    else:  # pragma: no cover
        raise AssertionError("expected a ValueError for out-of-domain x")
