import math
from fractions import Fraction

import mpmath as mp
import pytest

from akzeta.errors import (DomainError, NonAlternatingError,
                           IllConditionedFitError)
from akzeta.numerics import (PrecisionContext, DEFAULT_CTX, RIGOROUS,
                             ESTIMATED, beta_factor, beta_factor_exact,
                             zeta_em, clausen, accelerate_alternating,
                             tail_fit, compensated_sum)


def test_precision_context_defaults_and_cutoff():
    ctx = PrecisionContext()
    assert ctx.digits == 50
    ctx2 = ctx.with_cutoff(1234)
    assert ctx2.default_cutoff == 1234
    assert ctx.default_cutoff != 1234  # frozen original untouched


def test_beta_factor_exact_and_float():
    # B(n, 1+x) by the recurrence against the Gamma definition
    for n in (1, 2, 7, 40):
        for x in (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3)):
            exact = beta_factor_exact(n, x)
            ref = mp.beta(n, 1 + mp.mpf(x.numerator) / x.denominator)
            assert abs(float(exact) - float(ref)) < 1e-14
            assert abs(beta_factor(n, float(x)) - float(exact)) < 1e-14


def test_beta_factor_central_binomial():
    # 4^n / C(2n, n) = n * B(n, 1/2)
    for n in (1, 3, 10):
        assert n * beta_factor_exact(n, Fraction(-1, 2)) == \
            Fraction(4**n, math.comb(2 * n, n))


def test_zeta_em_against_mpmath():
    ctx = PrecisionContext(default_cutoff=20000)
    for s, x in [(2, 0.0), (3, 0.0), (2, -0.5), (1.5, 0.25), (7, 0.0),
                 (2.5, -0.5)]:
        ev = zeta_em(s, x, ctx)
        ref = float(mp.zeta(s, 1 + x))
        assert abs(float(ev.value) - ref) <= max(ev.bound, 1e-14)
        assert ev.bound_kind == RIGOROUS


def test_zeta_em_domain():
    with pytest.raises(DomainError):
        zeta_em(1.0, 0.0)
    with pytest.raises(DomainError):
        zeta_em(2.0, -1.5)


def test_clausen_values():
    ctx = DEFAULT_CTX
    th = math.pi / 3
    cl2 = clausen(2, th, ctx)
    assert abs(float(cl2.value) - float(mp.clsin(2, th))) <= max(cl2.bound, 1e-12)
    cl3 = clausen(3, th, ctx)
    assert abs(float(cl3.value) - float(mp.clcos(3, th))) <= max(cl3.bound, 1e-12)
    # odd symmetry of the order-2 function
    assert abs(float(clausen(2, -th, ctx).value) + float(cl2.value)) < 1e-10


def test_clausen_rejects_bad_order():
    with pytest.raises(DomainError):
        clausen(4, 1.0, DEFAULT_CTX)


def test_accelerate_alternating_log2():
    ev = accelerate_alternating(lambda n: (-1) ** (n + 1) / n)
    assert abs(float(ev.value) - math.log(2)) < 1e-14
    assert ev.bound_kind == ESTIMATED
    assert abs(float(ev.value) - math.log(2)) <= max(ev.bound, 1e-14)


def test_accelerate_alternating_eta2():
    ev = accelerate_alternating(lambda n: (-1) ** (n + 1) / n**2)
    assert abs(float(ev.value) - math.pi**2 / 12) < 1e-13


def test_accelerate_rejects_non_alternating():
    with pytest.raises(NonAlternatingError):
        accelerate_alternating(lambda n: 1.0 / n)


def test_tail_fit_logarithmic_decay():
    from akzeta.logasym import LogSeries, ztail
    gamma = 2.5

    def a(n):
        return (3.0 * math.log(n) + 2.0) / n**gamma

    N = 600
    samples = [(n, a(n)) for n in range(N - 120, N + 1)]
    est = tail_fit(samples, gamma)
    ref_series, _ = ztail(LogSeries({(1, gamma): 3.0, (0, gamma): 2.0}))
    ref = ref_series(N)
    assert est.bound_kind == ESTIMATED
    assert abs(est.value - ref) < 0.03 * abs(ref)


def test_tail_fit_ill_conditioned():
    # a tiny window at huge n makes the two model columns collinear
    base = 10**12

    def a(n):
        return (3.0 * math.log(n) + 2.0) / n**2.5

    samples = [(n, a(n)) for n in range(base, base + 10)]
    with pytest.raises(IllConditionedFitError):
        tail_fit(samples, 2.5)


def test_compensated_sum():
    xs = [1e16, 1.0, -1e16, 1.0] * 100
    assert compensated_sum(xs) == 200.0
