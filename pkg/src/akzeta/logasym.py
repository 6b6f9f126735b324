"""Asymptotic log-Laurent series and exact Euler-Maclaurin tails for nested
prefix sums.

A series here is a finite sum of terms  c * ln(n)^j * n^(-s)  stored as a
mapping (j, s) -> c.  Weight functions of the summation engine (shifted power
weights, beta factors, harmonic numbers, Bell polynomials thereof) all admit
asymptotic expansions in this ring, which lets the tail of a nested sum

    sum_{n > M} S_{q-1}(n) g_q(n),   S_i(n) = sum_{j < n} S_{i-1}(j) g_i(j)

be peeled level by level:

    T_i(M) = S_{i-1}(M+1) * Z_i(M) + T_{i-1}(M),

where Z_i = tail-sum of the current weight and the next level's weight picks
up the symbolic factor Z_i.  Every tail-sum of a single term is done with
Euler-Maclaurin corrections, so the result is exact up to the (tiny) EM and
truncation remainders, which are tracked and reported as the error estimate.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import mpmath as mp

from .errors import DomainError
from .numerics import PrecisionContext, DEFAULT_CTX, zeta_em
from .powerseries import bernoulli_numbers

__all__ = ["LogSeries", "pow_shift", "log_shift", "ztail", "nested_tail_sum",
           "beta_model", "harmonic_model", "bell_p_models"]

ORDER = 10  # kept Laurent depth beyond the leading exponent
_KEY_ROUND = 9

_BFRAC = bernoulli_numbers(12)
_EM_COEFF = [float(_BFRAC[2 * k]) / math.factorial(2 * k) for k in range(1, 6)]


def _rkey(s: float) -> float:
    return round(s, _KEY_ROUND)


class LogSeries:
    """Finite sum of terms c * ln(n)^j * n^(-s)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, float], float] = dict(terms or {})

    @classmethod
    def const(cls, c: float) -> "LogSeries":
        return cls({(0, 0.0): float(c)})

    def copy(self) -> "LogSeries":
        return LogSeries(self.terms)

    @property
    def lead(self) -> float:
        if not self.terms:
            return math.inf
        return min(s for (_, s) in self.terms)

    def add_term(self, j: int, s: float, c: float):
        if c == 0.0:
            return
        key = (j, _rkey(s))
        self.terms[key] = self.terms.get(key, 0.0) + c
        if self.terms[key] == 0.0:
            del self.terms[key]

    def __add__(self, other: "LogSeries") -> "LogSeries":
        out = self.copy()
        for (j, s), c in other.terms.items():
            out.add_term(j, s, c)
        return out

    def scaled(self, factor: float) -> "LogSeries":
        return LogSeries({k: c * factor for k, c in self.terms.items()})

    def __mul__(self, other: "LogSeries") -> "LogSeries":
        cap = self.lead + other.lead + ORDER
        out = LogSeries()
        for (j1, s1), c1 in self.terms.items():
            for (j2, s2), c2 in other.terms.items():
                s = s1 + s2
                if s > cap:
                    continue
                out.add_term(j1 + j2, s, c1 * c2)
        return out

    def truncate(self, cap: float) -> "LogSeries":
        return LogSeries({(j, s): c for (j, s), c in self.terms.items() if s <= cap})

    def deriv(self) -> "LogSeries":
        out = LogSeries()
        for (j, s), c in self.terms.items():
            out.add_term(j, s + 1, -c * s)
            if j > 0:
                out.add_term(j - 1, s + 1, c * j)
        return out

    def __call__(self, M: float) -> float:
        logM = math.log(M)
        total = 0.0
        for (j, s), c in self.terms.items():
            total += c * logM**j * M ** (-s)
        return total

    def band_magnitude(self, M: float, width: float = 1.0) -> float:
        """Sum of |term| values in the deepest kept exponent band at M."""
        if not self.terms:
            return 0.0
        smax = max(s for (_, s) in self.terms)
        logM = math.log(M)
        return sum(
            abs(c) * logM**j * M ** (-s)
            for (j, s), c in self.terms.items()
            if s >= smax - width
        )

    def __repr__(self) -> str:
        parts = sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        body = " + ".join(f"{c:.6g}*ln^{j}*n^-{s:g}" for (j, s), c in parts)
        return f"LogSeries({body or '0'})"


def pow_shift(s: float, a: float, K: int = ORDER + 2) -> LogSeries:
    """(n+a)^(-s) expanded around n = infinity."""
    out = LogSeries()
    coef = 1.0
    for k in range(K + 1):
        if k > 0:
            coef *= (-s - k + 1) / k * a
        out.add_term(0, s + k, coef)
    return out


def log_shift(a: float, K: int = ORDER + 2) -> LogSeries:
    """ln(n+a) expanded around n = infinity."""
    out = LogSeries({(1, 0.0): 1.0})
    for k in range(1, K + 1):
        out.add_term(0, float(k), (-1) ** (k + 1) * a**k / k)
    return out


def ztail(series: LogSeries) -> tuple[LogSeries, LogSeries]:
    """Symbolic sum_{n > M} series(n) as a LogSeries in M.

    Returns (tail, err) where err collects the magnitude of the first omitted
    Euler-Maclaurin correction of every term.
    """
    lead = series.lead
    if lead <= 1.0:
        raise DomainError(f"tail sum requires decay exponent > 1, got {lead}")
    cap = lead - 1 + ORDER
    tail = LogSeries()
    err = LogSeries()
    for (j, s), c in series.terms.items():
        if s - 1 > cap:
            continue
        # integral_M^inf: downward recurrence over the log power
        coef = c / (s - 1.0)
        for i in range(j, -1, -1):
            tail.add_term(i, s - 1.0, coef * _falling(j, j - i) / (s - 1.0) ** (j - i))
        # -f(M)/2
        term = LogSeries({(j, _rkey(s)): c})
        tail.add_term(j, s, -0.5 * c)
        # - sum_k B_2k/(2k)! f^(2k-1)(M)
        d = term
        for k in range(1, 5):
            d = d.deriv()
            for (jj, ss), cc in d.terms.items():
                if ss <= cap:
                    tail.add_term(jj, ss, -_EM_COEFF[k - 1] * cc)
            d = d.deriv()
        # first omitted correction (k = 5)
        d = d.deriv()
        for (jj, ss), cc in d.terms.items():
            err.add_term(jj, ss, abs(_EM_COEFF[4] * cc))
    return tail, err


def _falling(j: int, k: int) -> float:
    out = 1.0
    for i in range(k):
        out *= j - i
    return out


def exp_series(series: LogSeries) -> LogSeries:
    """exp of a log-free series with strictly positive decay exponents."""
    if any(j != 0 or s <= 0 for (j, s) in series.terms):
        raise DomainError("exp_series needs a log-free, decaying argument")
    out = LogSeries.const(1.0)
    power = LogSeries.const(1.0)
    fact = 1.0
    lead = series.lead
    nmax = int(math.ceil((ORDER + 1) / lead))
    for m in range(1, nmax + 1):
        power = power * series
        power = power.truncate(ORDER + 1.0)
        fact *= m
        out = out + power.scaled(1.0 / fact)
    return out.truncate(ORDER + 1.0)


def _stirling_lgamma(a: float, K: int) -> LogSeries:
    """ln Gamma(n + a) as a log-Laurent series (exponents down to n^1)."""
    # (n + a - 1/2) ln(n+a) - (n+a) + ln sqrt(2 pi) + sum B_2k/(2k(2k-1)) (n+a)^{1-2k}
    lin = LogSeries({(0, -1.0): 1.0, (0, 0.0): a - 0.5})
    out = lin * log_shift(a, K)
    out.add_term(0, -1.0, -1.0)
    out.add_term(0, 0.0, -a + 0.5 * math.log(2 * math.pi))
    for k in range(1, 6):
        coef = float(_BFRAC[2 * k]) / (2 * k * (2 * k - 1))
        for (j, s), c in pow_shift(2.0 * k - 1.0, a, K).terms.items():
            out.add_term(j, s, coef * c)
    return out.truncate(float(ORDER + 1))


def beta_model(x: float) -> LogSeries:
    """Asymptotics of B(n, 1+x) = Gamma(1+x) Gamma(n) / Gamma(n+1+x)."""
    if x <= -1:
        raise DomainError("require x > -1")
    a = 1.0 + x
    K = ORDER + 2
    diff = LogSeries()
    for (j, s), c in _stirling_lgamma(0.0, K).terms.items():
        diff.add_term(j, s, c)
    for (j, s), c in _stirling_lgamma(a, K).terms.items():
        diff.add_term(j, s, -c)
    # diff = -a ln n + const + sum c_k n^{-k}; peel the first two pieces off
    log_coef = diff.terms.pop((1, 0.0), 0.0)
    if abs(log_coef + a) > 1e-9:
        raise AssertionError(f"Stirling bookkeeping drift: {log_coef} vs {-a}")
    const = diff.terms.pop((0, 0.0), 0.0)
    rest = LogSeries({k: c for k, c in diff.terms.items()})
    if any(j != 0 or s <= 0 for (j, s) in rest.terms):
        raise AssertionError("unexpected terms in beta asymptotics")
    amp = math.gamma(a) * math.exp(const)
    out = LogSeries()
    for (j, s), c in exp_series(rest).terms.items():
        out.add_term(j, s + a, amp * c)
    return out


def harmonic_model(k: int, x: float, ctx: PrecisionContext = DEFAULT_CTX) -> LogSeries:
    """Asymptotics of H_n^(k)(x) = sum_{j<=n} (j+x)^{-k}."""
    if x <= -1:
        raise DomainError("require x > -1")
    if k == 1:
        # psi(n+1+x) - psi(1+x)
        a = 1.0 + x
        out = log_shift(a)
        out.add_term(0, 0.0, -float(mp.digamma(a)))
        for (j, s), c in pow_shift(1.0, a).terms.items():
            out.add_term(j, s, -0.5 * c)
        for i in range(1, 6):
            coef = -float(_BFRAC[2 * i]) / (2 * i)
            for (j, s), c in pow_shift(2.0 * i, a).terms.items():
                if s <= ORDER + 1:
                    out.add_term(j, s, coef * c)
        return out.truncate(float(ORDER + 1))
    # H_n^(k)(x) = zeta(k, 1+x) - sum_{m > n} (m+x)^{-k}
    const = float(zeta_em(k, x, ctx).value)
    tail, _ = ztail(pow_shift(float(k), x))
    out = tail.scaled(-1.0)
    out.add_term(0, 0.0, const)
    return out.truncate(float(ORDER + 1))


def bell_p_models(m: int, x: float, ctx: PrecisionContext = DEFAULT_CTX) -> list[LogSeries]:
    """Asymptotic models of P_0..P_m evaluated on (H_n^(1)(x),..,H_n^(m)(x))."""
    hs = [harmonic_model(k, x, ctx) for k in range(1, m + 1)]
    P = [LogSeries.const(1.0)]
    for j in range(1, m + 1):
        acc = LogSeries()
        for k in range(1, j + 1):
            acc = acc + (hs[k - 1] * P[j - k])
        P.append(acc.scaled(1.0 / j))
    return P


def nested_tail_sum(S_vals: Sequence[float], models: Sequence[LogSeries],
                    M: int) -> tuple[float, float]:
    """Tail sum_{n > M} S_{q-1}(n) g_q(n) of a nested prefix sum.

    S_vals[i] must be the exact S_i(M+1) (S_0 = 1); models[i] the asymptotic
    expansion of the level-(i+1) weight.  Returns (tail, error_estimate).
    """
    q = len(models)
    if len(S_vals) != q:
        raise DomainError("need S_0..S_{q-1} at the cutoff")
    Mf = float(M)
    total = 0.0
    err = 0.0
    G = models[-1]
    for i in range(q - 1, 0, -1):
        Z, zerr = ztail(G)
        total += S_vals[i] * Z(Mf)
        err += abs(S_vals[i]) * (zerr(Mf) + Z.band_magnitude(Mf))
        G = models[i - 1] * Z
    Z, zerr = ztail(G)
    total += Z(Mf)
    err += zerr(Mf) + Z.band_magnitude(Mf)
    return total, err
