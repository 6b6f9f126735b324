"""High-precision evaluation of nested Euler-type sums.

Every public entry point returns a :class:`~akzeta.numerics.Evaluation`
carrying the value, an error bound, and how the bound was obtained.  The
workhorse is a prefix-sum dynamic program over numpy extended-precision
arrays combined with symbolic Euler-Maclaurin tails from :mod:`.logasym`,
which makes even deep, slowly-converging sums exact to near machine
precision at modest cutoffs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import mpmath as mp
import numpy as np

from .combinatorics import Composition, weak_compositions, m_coeff, binomial
from .errors import DomainError, DivergenceError
from .harmonic_bell import harmonic_table, bell_modified
from .logasym import (LogSeries, pow_shift, nested_tail_sum, beta_model,
                      bell_p_models)
from .numerics import (PrecisionContext, DEFAULT_CTX, Evaluation, RIGOROUS,
                       ESTIMATED, beta_factor_exact, accelerate_alternating,
                       zeta_em)

__all__ = [
    "eval_hurwitz_mzv",
    "eval_t",
    "eval_li",
    "eval_ak_lhs",
    "eval_ak_rhs",
    "eval_euler_transform",
    "eval_prop2_series",
    "ak_lhs_partial_exact",
    "clear_caches",
]

_LD = np.longdouble
_LD_EPS = float(np.finfo(_LD).eps)

_mzv_cache: dict[tuple, Evaluation] = {}


def clear_caches():
    _mzv_cache.clear()


def _as_parts(c) -> tuple[int, ...]:
    if isinstance(c, Composition):
        return c.parts
    return tuple(int(p) for p in c)


def _dp_nested(weights: list[np.ndarray]) -> tuple[float, list[float]]:
    """Prefix-sum DP for sum over n_1 < ... < n_q of prod_i w_i[n_i].

    Returns the partial sum over n_q <= N together with the exact
    S_i(N+1) values needed by the symbolic tail recursion.
    """
    N = len(weights[0])
    S = np.ones(N, dtype=_LD)
    S_at = [1.0]
    for w in weights[:-1]:
        prod = S * w
        cs = np.cumsum(prod)
        S = np.concatenate((np.zeros(1, dtype=_LD), cs[:-1]))
        S_at.append(float(cs[-1]))
    partial = float(np.sum(S * weights[-1]))
    return partial, S_at


def _roundoff(N: int, q: int, scale: float) -> float:
    # accumulated extended-precision cumsum error, with margin
    return 4.0 * _LD_EPS * N * (q + 1) * (1.0 + abs(scale))


def eval_hurwitz_mzv(parts, x: float = 0.0, ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """Shifted multiple zeta value over n_1 < ... < n_q of prod (n_i+x)^{-e_i}.

    ``parts`` is the exponent tuple, innermost first; the last exponent must
    be at least 2 for convergence.
    """
    e = _as_parts(parts)
    xf = float(x)
    if xf <= -1:
        raise DomainError("require x > -1")
    if e[-1] < 2:
        raise DivergenceError(f"outer exponent must exceed 1: {e}")
    N = ctx.default_cutoff
    key = (e, round(xf, 12), N)
    hit = _mzv_cache.get(key)
    if hit is not None:
        return hit
    n = np.arange(1, N + 1, dtype=_LD) + _LD(xf)
    weights = [n ** _LD(-ei) for ei in e]
    partial, S_at = _dp_nested(weights)
    models = [pow_shift(float(ei), xf) for ei in e]
    tail, terr = nested_tail_sum(S_at, models, N)
    value = partial + tail
    bound = 10.0 * terr + _roundoff(N, len(e), value)
    out = Evaluation(value=value, bound=bound, bound_kind=RIGOROUS,
                     method="dp+em-tail", cutoff_used=N)
    _mzv_cache[key] = out
    return out


def eval_t(parts, ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """Odd-denominator analogue: sum over n_1 < ... < n_q of prod (2 n_i - 1)^{-e_i}."""
    e = _as_parts(parts)
    if e[-1] < 2:
        raise DivergenceError(f"outer exponent must exceed 1: {e}")
    N = ctx.default_cutoff
    n = np.arange(1, N + 1, dtype=_LD)
    weights = [(2 * n - 1) ** _LD(-ei) for ei in e]
    partial, S_at = _dp_nested(weights)
    # (2n-1)^{-e} = 2^{-e} (n - 1/2)^{-e}
    models = [pow_shift(float(ei), -0.5).scaled(2.0 ** (-ei)) for ei in e]
    tail, terr = nested_tail_sum(S_at, models, N)
    value = partial + tail
    bound = 10.0 * terr + _roundoff(N, len(e), value)
    return Evaluation(value=value, bound=bound, bound_kind=RIGOROUS,
                      method="dp+em-tail", cutoff_used=N)


def _geom_row_bound(N: int, p: float, A: float, K: float, c: float) -> float:
    """Rigorous bound for sum_{n > N} K (c + ln n)^A p^{-n}.

    Uses (c + ln n) <= (c + ln N)(n/N) for n >= N when c + ln N >= 1, then
    (1 + j/N)^A <= exp(A j / N).
    """
    cl = c + math.log(N)
    if cl < 1.0:
        raise DomainError("cutoff too small for the logarithmic majorant")
    rho = math.exp(A / N) / p
    if rho >= 1.0:
        raise DomainError("cutoff too small for a geometric majorant")
    return K * cl**A * p ** (-N) * rho / (1.0 - rho)


def eval_li(parts, z: float, ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """Multiple polylogarithm: sum over n_1 < ... < n_q of z^{n_q} / prod n_i^{e_i}."""
    e = _as_parts(parts)
    zf = float(z)
    if zf == 1.0:
        return eval_hurwitz_mzv(e, 0.0, ctx)
    if abs(zf) >= 1.0:
        raise DivergenceError(f"need |z| < 1 or z = 1, got {z}")
    digits_goal = 10.0 ** (-(ctx.digits + 6))
    N = min(ctx.default_cutoff,
            max(64, int(math.ceil((ctx.digits + 10) * math.log(10) / -math.log(abs(zf)))) + 32))
    n = np.arange(1, N + 1, dtype=_LD)
    weights = [n ** _LD(-ei) for ei in e]
    weights[-1] = weights[-1] * _LD(zf) ** n
    partial, _ = _dp_nested(weights)
    # tail: |S_{q-1}(n)| <= (1 + ln n)^{q-1}, n^{-e_q} <= 1
    tail_bd = _geom_row_bound(N, 1.0 / abs(zf), len(e) - 1, 1.0, 1.0)
    bound = tail_bd + _roundoff(N, len(e), partial) + digits_goal
    return Evaluation(value=partial, bound=bound, bound_kind=RIGOROUS,
                      method="dp+geom-tail", cutoff_used=N)


def _outer_arrays(N: int, m: int, x: float) -> tuple[np.ndarray, np.ndarray]:
    """B(n,1+x) and P_m(H_n^(1)(x),..,H_n^(m)(x)) for n = 1..N, extended precision."""
    xl = _LD(x)
    n = np.arange(1, N + 1, dtype=_LD)
    # B(1,1+x) = 1/(1+x), B(n+1,1+x) = B(n,1+x) * n/(n+1+x)
    B = np.empty(N, dtype=_LD)
    B[0] = 1 / (1 + xl)
    np.multiply.accumulate(n[:-1] / (n[1:] + xl), out=B[1:])
    B[1:] *= B[0]
    if m == 0:
        return B, np.ones(N, dtype=_LD)
    H = [np.cumsum((n + xl) ** _LD(-k)) for k in range(1, m + 1)]
    P = [np.ones(N, dtype=_LD)]
    for j in range(1, m + 1):
        acc = np.zeros(N, dtype=_LD)
        for k in range(1, j + 1):
            acc += H[k - 1] * P[j - k]
        P.append(acc / j)
    return B, P[m]


def eval_ak_lhs(alpha, p: float, m: int, x: float,
                ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """Nested beta-weighted sum

        sum_{n_1 < ... < n_r} B(n_r,1+x) P_m(H-row(n_r)) p^{-n_r}
                              / (n_1^{a_1} ... n_r^{a_r}).
    """
    a = _as_parts(alpha)
    xf = float(x)
    pf = float(p)
    if xf <= -1:
        raise DomainError("require x > -1")
    if m < 0:
        raise DomainError("require m >= 0")
    if pf < 1:
        raise DomainError("require p >= 1")
    if pf == 1.0 and xf + a[-1] <= 0:
        raise DivergenceError(f"needs x + a_r > 0 at p = 1, got {xf + a[-1]}")
    r = len(a)
    if pf == 1.0:
        N = ctx.default_cutoff
        n = np.arange(1, N + 1, dtype=_LD)
        B, Pm = _outer_arrays(N, m, xf)
        weights = [n ** _LD(-ai) for ai in a[:-1]]
        weights.append(B * Pm * n ** _LD(-a[-1]))
        partial, S_at = _dp_nested(weights)
        models = [pow_shift(float(ai), 0.0) for ai in a[:-1]]
        outer = beta_model(xf) * bell_p_models(m, xf, ctx)[m] * pow_shift(float(a[-1]), 0.0)
        models.append(outer)
        tail, terr = nested_tail_sum(S_at, models, N)
        value = partial + tail
        bound = 10.0 * terr + _roundoff(N, r + m + 1, value)
        return Evaluation(value=value, bound=bound, bound_kind=RIGOROUS,
                          method="dp+em-tail", cutoff_used=N)
    # p > 1: plain geometric convergence
    N = min(ctx.default_cutoff,
            max(80, int(math.ceil((ctx.digits + 12) * math.log(10) / math.log(pf))) + 40))
    n = np.arange(1, N + 1, dtype=_LD)
    B, Pm = _outer_arrays(N, m, xf)
    weights = [n ** _LD(-ai) for ai in a[:-1]]
    weights.append(B * Pm * n ** _LD(-a[-1]) * _LD(pf) ** (-n))
    partial, _ = _dp_nested(weights)
    # majorant constants: H_n^(k)(x) <= g^{k-1} H_n^(1)(x), H_n^(1)(x) <= c + ln n,
    # P_m on arguments <= X is at most (X+m)^m / m!
    c = max(1.0, 1.0 / (1.0 + xf))
    g = max(2.0, 1.0 / (1.0 + xf))
    D = (g ** max(m - 1, 0) + m) ** m / math.factorial(m)
    BN = float(B[-1])
    K = BN * N ** (-float(a[-1])) * D
    A = float(m + r - 1)
    tail_bd = _geom_row_bound(N, pf, A, K, c)
    bound = tail_bd + _roundoff(N, r + m + 1, partial)
    return Evaluation(value=partial, bound=bound, bound_kind=RIGOROUS,
                      method="dp+geom-tail", cutoff_used=N)


def eval_ak_rhs(alpha, m: int, x: float,
                ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """Linear combination of shifted multiple zeta values equal to the
    beta-weighted nested sum at p = 1:

        sum_{|d| = m} M(a_1..a_{q-1}, d_1..d_{q-1}) C(a_q + d_q, d_q)
                      * zeta(a_1+d_1, ..., a_q+d_q+1; x).
    """
    a = _as_parts(alpha)
    q = len(a)
    total = 0.0
    bound = 0.0
    cutoff = 0
    for d in weak_compositions(m, q):
        dj = d.parts
        coef = m_coeff(a[:-1], dj[:-1]) * binomial(a[-1] + dj[-1], dj[-1])
        idx = tuple(ai + di for ai, di in zip(a, dj))
        ev = eval_hurwitz_mzv(Composition.from_alpha(idx), x, ctx)
        total += coef * ev.value
        bound += coef * ev.bound
        cutoff = max(cutoff, ev.cutoff_used)
    return Evaluation(value=total, bound=bound, bound_kind=RIGOROUS,
                      method="mzv-combination", cutoff_used=cutoff)


def eval_euler_transform(p: float, s: int, x: float,
                         ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """sum_{n >= 1} (-1)^{n+1} H_n^{(s)}(x) / (n (p-1)^n), valid for p >= 2."""
    pf = float(p)
    xf = float(x)
    if pf < 2:
        raise DivergenceError("alternating transform needs p >= 2")
    if xf <= -1:
        raise DomainError("require x > -1")
    if pf == 2.0:
        wp = ctx.digits + 10

        def term(n: int):
            h = mp.fsum(mp.mpf(1) / mp.mpf(j + xf) ** s for j in range(1, n + 1))
            return (-1) ** (n + 1) * h / n

        return accelerate_alternating(term, ctx)
    q = pf - 1.0
    N = max(60, int(math.ceil((ctx.digits + 12) * math.log(10) / math.log(q))) + 40)
    with mp.workdps(ctx.digits + 10):
        xm = mp.mpf(xf)
        h = mp.mpf(0)
        total = mp.mpf(0)
        qm = mp.mpf(q)
        for n in range(1, N + 1):
            h += (n + xm) ** (-s)
            total += (-1) ** (n + 1) * h / (n * qm**n)
        value = float(total)
    c = max(1.0, 1.0 / (1.0 + xf))
    # H_n^{(s)}(x) <= g^{s-1}(c + ln n) with g as in eval_ak_lhs
    g = max(2.0, 1.0 / (1.0 + xf))
    K = g ** (s - 1) / N
    tail_bd = _geom_row_bound(N, q, 1.0, K, c)
    bound = tail_bd + 10.0 ** (-(ctx.digits + 2))
    return Evaluation(value=value, bound=bound, bound_kind=RIGOROUS,
                      method="direct+geom-tail", cutoff_used=N)


def eval_prop2_series(alpha, x: float, z: float, m_terms: int = 24,
                      ctx: PrecisionContext = DEFAULT_CTX) -> Evaluation:
    """Power-series evaluation of the shifted value zeta(alpha; x - z).

    ``alpha`` is the displayed admissible exponent tuple; the coefficient of
    z^m is the beta-weighted nested sum at p = 1 indexed by the dual tuple.
    Valid for |z| < 1 + x; the truncation remainder is a geometric estimate.
    """
    from .combinatorics import dual
    c = alpha if isinstance(alpha, Composition) else Composition(_as_parts(alpha))
    xf, zf = float(x), float(z)
    if abs(zf) >= 1.0 + xf:
        raise DomainError(f"need |z| < 1 + x, got |{zf}| vs {1.0 + xf}")
    beta = dual(c).alpha()
    total = 0.0
    bound = 0.0
    last = 0.0
    cutoff = 0
    for m in range(m_terms):
        ev = eval_ak_lhs(beta, 1.0, m, xf, ctx)
        term = zf**m * ev.value
        total += term
        bound += abs(zf) ** m * ev.bound
        last = abs(term)
        cutoff = max(cutoff, ev.cutoff_used)
    ratio = abs(zf) / (1.0 + xf)
    trunc = 3.0 * last * ratio / (1.0 - ratio) if ratio > 0 else 0.0
    return Evaluation(value=total, bound=bound + trunc, bound_kind=ESTIMATED,
                      method="z-power-series", cutoff_used=cutoff)


def ak_lhs_partial_exact(alpha, p: int, m: int, x, N: int) -> Fraction:
    """Exact rational truncation of the beta-weighted nested sum.

    Test-oriented: O(N^2)-ish with exact arithmetic, keep N small.
    """
    a = _as_parts(alpha)
    x = Fraction(x)
    if x <= -1:
        raise DomainError("require x > -1")
    tab = harmonic_table(N, max(m, 1), x, mode="exact") if m > 0 else None
    r = len(a)
    S = [Fraction(1)] * (N + 2)  # S_0(n) = 1
    for level in range(r - 1):
        nxt = [Fraction(0)] * (N + 2)
        acc = Fraction(0)
        for n in range(1, N + 2):
            nxt[n] = acc
            if n <= N:
                acc += S[n] * Fraction(1, n ** a[level])
        S = nxt
        S[0] = Fraction(0)
    total = Fraction(0)
    for n in range(1, N + 1):
        B = beta_factor_exact(n, x)
        P = bell_modified(tab.row(n))[m] if m > 0 else Fraction(1)
        total += S[n] * B * P / (Fraction(p) ** n * n ** a[-1])
    return total
