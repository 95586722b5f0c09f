"""Plethystic exponential, its inverse, and power structures.

``Exp`` is the group isomorphism from series with zero constant term
(additive) to series with constant term 1 (multiplicative) determined by
Exp(t) = 1/(1-t) and the symmetric-power pre-lambda-structure on
Z[L, L^-1], in which S^k(A^1) = A^k.  Two independent evaluation paths
are implemented:

* the Adams path  Exp(f) = exp(sum_{k>=1} psi_k(f)/k)  with exact
  rational intermediates and a final integrality assertion, and
* the product path  Exp(sum_m f_m x^m) = prod_m sigma_{x^m}(f_m)  built
  from geometric series only, entirely in integer arithmetic.

``Log`` inverts Exp via Moebius inversion of the Adams sum, and the
power structure is f^a = Exp(a Log f).  The Adams path also works for
series with RationalFn coefficients (where psi_k sends q to q^k), which
is what q-series identities like the Heine formula need.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .rings import ExactnessError, LaurentPoly, RationalFn
from .report import CheckReport
from .series import TruncatedSeries, series_exp, series_log, geometric_series


def _mobius(n: int) -> int:
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def _lower_integral(s: TruncatedSeries) -> TruncatedSeries:
    """Convert rational intermediates back to exact integral coefficients.

    Raises ExactnessError when a coefficient fails to be integral, which
    signals an implementation bug rather than bad input.
    """
    out = {}
    for m, c in s._coeffs.items():
        if isinstance(c, LaurentPoly):
            if not c.is_integral:
                raise ExactnessError(f"non-integral plethystic coefficient {c} at {m}")
        elif isinstance(c, Fraction):
            if c.denominator != 1:
                raise ExactnessError(f"non-integral plethystic coefficient {c} at {m}")
            c = LaurentPoly({0: int(c)})
        elif isinstance(c, int):
            c = LaurentPoly({0: c})
        out[m] = c
    return TruncatedSeries(out, s.order, s.arity)


def _coerce_laurent_coeffs(f: TruncatedSeries) -> TruncatedSeries:
    return f.map_coefficients(
        lambda c: c if isinstance(c, (LaurentPoly, RationalFn)) else LaurentPoly({0: c}))


def exp_pleth(f: TruncatedSeries) -> TruncatedSeries:
    """Plethystic exponential of a series with zero constant term.

    Coefficients may be LaurentPoly (or plain integers, which are
    promoted) or RationalFn.  The computation runs exp(sum psi_k(f)/k)
    exactly; for Laurent coefficients the result is assert-checked to be
    integral again.
    """
    if not (f.constant_term() == 0):
        raise ValueError("plethystic exponential requires zero constant term")
    f = _coerce_laurent_coeffs(f)
    rational = any(isinstance(c, RationalFn) for _, c in f._coeffs.items())
    g = TruncatedSeries.constant(RationalFn.zero() if rational else 0,
                                 f.order, f.arity)
    for k in range(1, f.order + 1):
        g = g + f.adams(k).map_coefficients(lambda c, k=k: c / k)
    return _lower_integral(series_exp(g)) if not rational else series_exp(g)


def log_pleth(g: TruncatedSeries) -> TruncatedSeries:
    """Inverse of :func:`exp_pleth`, for series with constant term 1."""
    if not (g.constant_term() == 1):
        raise ValueError("plethystic logarithm requires constant term 1")
    g = _coerce_laurent_coeffs(g)
    rational = any(isinstance(c, RationalFn) for _, c in g._coeffs.items())
    h = series_log(g)
    f = TruncatedSeries.constant(RationalFn.zero() if rational else 0,
                                 g.order, g.arity)
    for k in range(1, g.order + 1):
        mu = _mobius(k)
        if mu:
            f = f + h.adams(k).map_coefficients(lambda c, k=k, mu=mu: (c * mu) / k)
    return _lower_integral(f) if not rational else f


def exp_pleth_product(f: TruncatedSeries) -> TruncatedSeries:
    """Product-form plethystic exponential, prod_m sigma_{x^m}(f_m).

    Independent of the Adams path: built entirely from geometric series,
    integer powers and series inversion, with no rational intermediates.
    Requires integral LaurentPoly (or integer) coefficients.
    """
    if not (f.constant_term() == 0):
        raise ValueError("plethystic exponential requires zero constant term")
    f = _coerce_laurent_coeffs(f)
    out = TruncatedSeries.constant(1, f.order, f.arity)
    for m, c in f.coefficients():
        if not isinstance(c, LaurentPoly) or not c.is_integral:
            raise ExactnessError("product form needs integral Laurent coefficients")
        step = sum(m)
        index = next(i for i, e in enumerate(m) if e)
        if len([e for e in m if e]) == 1 and m[index] == step:
            # single-variable monomial: sigma along x_index^step
            for e, a in c.terms():
                geo = geometric_series(LaurentPoly.lefschetz(e), f.order,
                                       step=step, arity=f.arity, index=index)
                out = out * geo.pow_int(a)
        else:
            # genuinely mixed monomial x^m: substitute u = x^m into sigma_u
            for e, a in c.terms():
                geo_coeffs = {}
                acc = LaurentPoly.one()
                for j in range(0, f.order // step + 1):
                    geo_coeffs[tuple(j * mi for mi in m)] = acc
                    acc = acc * LaurentPoly.lefschetz(e)
                geo = TruncatedSeries(geo_coeffs, f.order, f.arity)
                out = out * geo.pow_int(a)
    return out


def power_structure(f: TruncatedSeries, a) -> TruncatedSeries:
    """The power f^a = Exp(a Log f) for a series f with constant term 1
    and an exponent a in Z[L, L^-1] (or a plain integer)."""
    if not (f.constant_term() == 1):
        raise ValueError("power structure requires constant term 1")
    if isinstance(a, int):
        a = LaurentPoly({0: a})
    return exp_pleth(log_pleth(f) * a)


def symmetric_power(x: LaurentPoly, k: int) -> LaurentPoly:
    """k-th symmetric power of a class: the t^k coefficient of Exp(x t)."""
    if k < 0:
        raise ValueError("symmetric powers are indexed by non-negative integers")
    if k == 0:
        return LaurentPoly.one()
    s = exp_pleth(TruncatedSeries.variable(k, coeff=x))
    c = s.coefficient(k)
    return c if isinstance(c, LaurentPoly) else LaurentPoly({0: c})


# ---------------------------------------------------------------------------
# Randomized verification of the power-structure axioms
# ---------------------------------------------------------------------------

def _random_laurent(rng: random.Random, allow_zero: bool = True) -> LaurentPoly:
    n = rng.randint(0 if allow_zero else 1, 3)
    terms = {}
    for _ in range(n):
        terms[rng.randint(-3, 3)] = rng.randint(-4, 4)
    return LaurentPoly(terms)


def _random_one_series(rng: random.Random, order: int) -> TruncatedSeries:
    coeffs = {(0,): LaurentPoly.one()}
    for d in range(1, order + 1):
        c = _random_laurent(rng)
        if c:
            coeffs[(d,)] = c
    return TruncatedSeries(coeffs, order)


def verify_power_axioms(samples: int = 50, order: int = 8,
                        seed: int = 20240) -> CheckReport:
    """Check the eight power-structure axioms, Exp/Log round trips and the
    two-path Exp cross-check on randomized inputs."""
    rng = random.Random(seed)
    one = TruncatedSeries.constant(1, order)
    failures = []
    for i in range(samples):
        f = _random_one_series(rng, order)
        g = _random_one_series(rng, order)
        a = _random_laurent(rng)
        b = _random_laurent(rng)
        checks = {
            "f^0 = 1": power_structure(f, 0) == one,
            "f^(a+b) = f^a f^b":
                power_structure(f, a + b) == power_structure(f, a) * power_structure(f, b),
            "f^1 = f": power_structure(f, 1) == f,
            "f^(ab) = (f^a)^b":
                power_structure(f, a * b) == power_structure(power_structure(f, a), b),
            "(fg)^a = f^a g^a":
                power_structure(f * g, a) ==
                power_structure(f, a) * power_structure(g, a),
            "(1+t)^a = 1 + a t + O(t^2)": (lambda p: p.coefficient(0) == 1
                                           and p.coefficient(1) == a)(
                power_structure(one + TruncatedSeries.variable(order), a)),
            "f(t^2)^a = f^a at t^2":
                power_structure(f.substitute_power(2), a) ==
                power_structure(f, a).substitute_power(2),
            "jet continuity": _jet_check(f, a, order),
            "Log(Exp) round trip": _roundtrip_check(rng, order),
            "two-path Exp agreement": _two_path_check(rng, order),
        }
        for name, ok in checks.items():
            if not ok:
                failures.append(f"sample {i}: {name}")
    detail = "; ".join(failures[:5]) if failures else f"{samples} samples, order {order}"
    return CheckReport("power-axioms", not failures, detail)


def _jet_check(f: TruncatedSeries, a, order: int) -> bool:
    # the (order-1)-jet of f^a must not depend on the degree-`order` term of f
    bumped = f + TruncatedSeries.variable(order).pow_int(order)
    lhs = power_structure(f, a).truncate(order - 1)
    rhs = power_structure(bumped, a).truncate(order - 1)
    return lhs == rhs


def _roundtrip_check(rng: random.Random, order: int) -> bool:
    coeffs = {}
    for d in range(1, order + 1):
        c = _random_laurent(rng)
        if c:
            coeffs[(d,)] = c
    f = TruncatedSeries(coeffs, order)
    return log_pleth(exp_pleth(f)) == f


def _two_path_check(rng: random.Random, order: int) -> bool:
    coeffs = {}
    for d in range(1, order + 1):
        c = _random_laurent(rng)
        if c:
            coeffs[(d,)] = c
    f = TruncatedSeries(coeffs, order)
    return exp_pleth(f) == exp_pleth_product(f)
