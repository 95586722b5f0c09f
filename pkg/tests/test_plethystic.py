import random
from fractions import Fraction

import pytest

from quotmotives.rings import ExactnessError, LaurentPoly, projective_class
from quotmotives.series import TruncatedSeries, geometric_series
from quotmotives.plethystic import (exp_pleth, exp_pleth_product, log_pleth,
                                    power_structure, symmetric_power,
                                    verify_power_axioms)

L = LaurentPoly.lefschetz()


def brute_product(factors, order):
    """Independent expansion of a product of geometric factors
    1/(1 - c t^step), used as the oracle for Exp identities."""
    out = TruncatedSeries.constant(1, order)
    for coeff, step in factors:
        out = out * geometric_series(coeff, order, step=step)
    return out


class TestExp:
    def test_exp_t_is_geometric(self):
        s = exp_pleth(TruncatedSeries.variable(9))
        assert s == geometric_series(1, 9)

    def test_exp_Lt(self):
        s = exp_pleth(TruncatedSeries.variable(7, coeff=L))
        assert s == geometric_series(L, 7)

    def test_exp_p1_t_gives_projective_spaces(self):
        # oracle: 1/((1-t)(1-Lt)) expanded directly
        oracle = brute_product([(1, 1), (L, 1)], 5)
        s = exp_pleth(TruncatedSeries.variable(5, coeff=projective_class(1)))
        assert s == oracle
        assert s.coefficient(2) == projective_class(2)

    def test_exp_is_homomorphism(self):
        rng = random.Random(7)
        for _ in range(10):
            f = _random_zero_series(rng, 8)
            g = _random_zero_series(rng, 8)
            assert exp_pleth(f + g) == exp_pleth(f) * exp_pleth(g)

    def test_exp_commutes_with_variable_power(self):
        rng = random.Random(11)
        for n in (2, 3):
            f = _random_zero_series(rng, 9)
            assert exp_pleth(f.substitute_power(n)) == \
                exp_pleth(f).substitute_power(n)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError):
            exp_pleth(TruncatedSeries.constant(1, 4))

    def test_integrality_of_exp(self):
        rng = random.Random(23)
        for _ in range(20):
            s = exp_pleth(_random_zero_series(rng, 7))
            assert all(c.is_integral for _, c in s.coefficients())

    def test_two_paths_agree(self):
        rng = random.Random(5)
        for _ in range(15):
            f = _random_zero_series(rng, 8)
            assert exp_pleth(f) == exp_pleth_product(f)

    def test_two_paths_agree_multivariate(self):
        f = TruncatedSeries({(1, 0): L, (0, 1): 1, (1, 1): L.dual()}, 5, arity=2)
        assert exp_pleth(f) == exp_pleth_product(f)


class TestLog:
    def test_log_geometric(self):
        assert log_pleth(geometric_series(1, 8)) == TruncatedSeries.variable(8)

    def test_log_round_trip(self):
        f = TruncatedSeries({(1,): L, (3,): LaurentPoly.one()}, 10)
        assert log_pleth(exp_pleth(f)) == f

    def test_log_of_product_formula(self):
        # oracle: Exp(t + t^2) = 1/((1-t)(1-t^2)) by the product formula
        g = brute_product([(1, 1), (1, 2)], 10)
        assert log_pleth(g) == TruncatedSeries({(1,): 1, (2,): 1}, 10)

    def test_log_requires_one(self):
        with pytest.raises(ValueError):
            log_pleth(TruncatedSeries.variable(4))


class TestPowerStructure:
    def test_geometric_power_is_motivic_sigma(self):
        # (1-t)^{-L} = 1/(1 - Lt): symmetric powers of the affine line
        one_minus_t_inv = geometric_series(1, 8)
        assert power_structure(one_minus_t_inv, L) == geometric_series(L, 8)

    def test_linear_jet(self):
        one_plus_t = TruncatedSeries({(0,): 1, (1,): 1}, 6)
        a = LaurentPoly({2: 3, -1: 1})
        p = power_structure(one_plus_t, a)
        assert p.coefficient(0) == 1
        assert p.coefficient(1) == a

    def test_power_zero(self):
        rng = random.Random(3)
        for _ in range(5):
            f = _random_one_series(rng, 6)
            assert power_structure(f, 0) == TruncatedSeries.constant(1, 6)

    def test_constant_term_must_be_one(self):
        with pytest.raises(ValueError):
            power_structure(TruncatedSeries.constant(2, 4), L)

    def test_axiom_suite(self):
        report = verify_power_axioms(samples=12, order=6, seed=99)
        assert report.passed, report.detail


class TestSymmetricPower:
    def test_point_powers(self):
        assert symmetric_power(LaurentPoly.one(), 5) == 1

    def test_k_zero(self):
        assert symmetric_power(LaurentPoly({3: 4, -1: 2}), 0) == 1

    def test_p1_cube(self):
        # oracle: expand 1/((1-t)(1-Lt)) to order 3
        oracle = brute_product([(1, 1), (L, 1)], 3)
        assert symmetric_power(projective_class(1), 3) == oracle.coefficient(3)
        assert symmetric_power(projective_class(1), 3) == projective_class(3)

    def test_affine_plane_square(self):
        # t^2 coefficient of Exp(L^2 t) = 1/(1 - L^2 t)
        oracle = geometric_series(LaurentPoly.lefschetz(2), 2)
        assert symmetric_power(LaurentPoly.lefschetz(2), 2) == oracle.coefficient(2)
        assert symmetric_power(LaurentPoly.lefschetz(2), 2) == LaurentPoly.lefschetz(4)

    def test_sigma_one_is_identity(self):
        x = LaurentPoly({2: 5, 0: -1})
        assert symmetric_power(x, 1) == x


def _random_zero_series(rng, order):
    coeffs = {}
    for d in range(1, order + 1):
        t = {rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(rng.randint(0, 2))}
        c = LaurentPoly(t)
        if c:
            coeffs[(d,)] = c
    return TruncatedSeries(coeffs, order)


def _random_one_series(rng, order):
    s = _random_zero_series(rng, order)
    return s + TruncatedSeries.constant(1, order)


class TestIntegralityGuard:
    def test_lower_integral_raises_on_fraction(self):
        from quotmotives.plethystic import _lower_integral
        s = TruncatedSeries({(1,): Fraction(1, 2)}, 3)
        with pytest.raises(ExactnessError):
            _lower_integral(s)
