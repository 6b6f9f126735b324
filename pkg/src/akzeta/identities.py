"""Catalog of nested-sum identities and a numerical verification engine.

Each catalog entry names an identity, its default parameter grid, and a
tolerance class.  ``verify`` computes both sides through the evaluator (or
in exact rational arithmetic) and reports the residual against the combined
error bound; ``verify_all`` sweeps the catalog.

A case passes when |lhs - rhs| <= max(combined bound, class tolerance).
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from .combinatorics import (Composition, dual, weak_compositions, m_coeff,
                            binomial, admissible_compositions)
from .errors import DomainError
from .evaluator import (eval_hurwitz_mzv, eval_t, eval_ak_lhs, eval_ak_rhs,
                        eval_euler_transform, eval_prop2_series)
from .harmonic_bell import harmonic_table, bell_modified, d_operator
from .numerics import (PrecisionContext, DEFAULT_CTX, Evaluation, RIGOROUS,
                       ESTIMATED, zeta_em, clausen, beta_factor_exact)
from .powerseries import (TruncSeries, series_inverse, ak_bernoulli_polys,
                          classical_bernoulli_polynomial)

__all__ = ["IdentityCase", "IdentityReport", "catalog", "verify",
           "verify_all", "VerifySummary"]

EXACT = "exact"

TOL_SLOW = 1e-6        # inverse-binomial / Bell-weighted families
TOL_GEOM = 1e-10       # geometric convergence, p > 2
TOL_ALT = 1e-8         # accelerated alternating, p = 2


@dataclass(frozen=True)
class IdentityCase:
    """One identity: its id, tolerance class, and default parameter grid."""

    id: str
    description: str
    tolerance_class: str  # "rigorous" | "estimated" | "exact"
    grid: tuple = ()


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: dict
    lhs: float
    rhs: float
    abs_diff: float
    bound: float
    bound_kind: str
    passed: bool
    seconds: float = 0.0

    def to_json(self) -> str:
        return json.dumps({
            "id": self.id,
            "params": {k: str(v) for k, v in self.params.items()},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "bound": self.bound,
            "bound_kind": self.bound_kind,
            "pass": self.passed,
        })


@dataclass
class VerifySummary:
    reports: list = field(default_factory=list)

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.reports)

    @property
    def n_fail(self) -> int:
        return len(self.reports) - self.n_pass

    @property
    def worst(self) -> float:
        return max((r.abs_diff for r in self.reports), default=0.0)

    @property
    def all_passed(self) -> bool:
        return self.n_fail == 0


def _comps(max_weight: int) -> list[Composition]:
    return list(admissible_compositions(max_weight))


def _exact_report(id_: str, params: dict, equal: bool, value: float,
                  dt: float) -> IdentityReport:
    return IdentityReport(id=id_, params=params, lhs=value, rhs=value,
                          abs_diff=0.0 if equal else math.nan, bound=0.0,
                          bound_kind=EXACT, passed=equal, seconds=dt)


def _pair_report(id_: str, params: dict, lhs: Evaluation, rhs: Evaluation,
                 tol: float, dt: float, scale_l: float = 1.0,
                 scale_r: float = 1.0) -> IdentityReport:
    lv = float(scale_l * lhs.value)
    rv = float(scale_r * rhs.value)
    bound = float(abs(scale_l) * lhs.bound + abs(scale_r) * rhs.bound)
    kind = ESTIMATED if ESTIMATED in (lhs.bound_kind, rhs.bound_kind) else RIGOROUS
    diff = abs(lv - rv)
    return IdentityReport(id=id_, params=params, lhs=lv, rhs=rv, abs_diff=diff,
                          bound=bound, bound_kind=kind,
                          passed=diff <= max(bound, tol), seconds=dt)


def _oracle_report(id_: str, params: dict, lhs: Evaluation, oracle: float,
                   oracle_bound: float, tol: float, dt: float,
                   scale_l: float = 1.0) -> IdentityReport:
    lv = float(scale_l * lhs.value)
    oracle = float(oracle)
    bound = float(abs(scale_l) * lhs.bound + oracle_bound)
    diff = abs(lv - oracle)
    return IdentityReport(id=id_, params=params, lhs=lv, rhs=oracle,
                          abs_diff=diff, bound=bound, bound_kind=lhs.bound_kind,
                          passed=diff <= max(bound, tol), seconds=dt)


# ---------------------------------------------------------------- recipes

def _do_dual(params, ctx):
    c = params["alpha"]
    lhs = eval_hurwitz_mzv(c, 0.0, ctx)
    rhs = eval_hurwitz_mzv(dual(c), 0.0, ctx)
    return lhs, rhs, TOL_ALT


def _do_thm3(params, ctx):
    c = params["alpha"]
    m, x = params["m"], params["x"]
    beta = dual(c).alpha()
    lhs = eval_ak_lhs(beta, 1.0, m, x, ctx)
    rhs = eval_ak_rhs(c.alpha(), m, x, ctx)
    return lhs, rhs, TOL_SLOW


def _do_xi_q(params, ctx):
    q, m = params["q"], params["m"]
    displayed = Composition.of(q + 1)
    lhs = eval_ak_lhs((q,), 1.0, m, 0.0, ctx)
    rhs = eval_ak_rhs(dual(displayed).alpha(), m, 0.0, ctx)
    return lhs, rhs, TOL_ALT


def _do_eq53(params, ctx):
    c = params["alpha"]
    m = params["m"]
    a = c.alpha()
    q = len(a)
    beta = dual(c).alpha()
    lhs = eval_ak_lhs(beta, 1.0, m, -0.5, ctx)
    total, bound, cut = 0.0, 0.0, 0
    for d in weak_compositions(m, q):
        dj = d.parts
        coef = m_coeff(a[:-1], dj[:-1]) * binomial(a[-1] + dj[-1], dj[-1])
        parts = tuple(ai + di for ai, di in zip(a[:-1], dj[:-1])) + (a[-1] + dj[-1] + 1,)
        ev = eval_t(parts, ctx)
        total += coef * ev.value
        bound += coef * ev.bound
        cut = max(cut, ev.cutoff_used)
    rhs = Evaluation(value=total, bound=bound, bound_kind=RIGOROUS,
                     method="t-combination", cutoff_used=cut)
    return lhs, rhs, TOL_SLOW, 2.0 ** (-m), 2.0 ** (sum(a) + 1)


def _do_cor2(params, ctx):
    r, m = params["r"], params["m"]
    lhs = eval_ak_lhs((1,) * r, 1.0, m, -0.5, ctx)
    scale = 1.0 / (binomial(r + m, m) * (2.0 ** (r + m + 1) - 1))
    oracle = zeta_em(r + m + 1, 0.0, ctx)
    return lhs, oracle, TOL_SLOW, scale, 1.0


def _do_apery(params, ctx):
    lhs = eval_ak_lhs((1,), 1.0, 1, -0.5, ctx)
    oracle = zeta_em(3, 0.0, ctx)
    return lhs, oracle, TOL_SLOW, 0.5, 7.0


def _do_cor3(params, ctx):
    m = params["m"]
    lhs = eval_ak_lhs((1, 1), 1.0, m, -0.5, ctx)
    scale = 2.0 ** (-m) * 2.0 ** (m + 1) / ((m + 1) * (m + 2) * (2.0 ** (m + 3) - 1))
    oracle = zeta_em(m + 3, 0.0, ctx)
    return lhs, oracle, TOL_SLOW, scale, 1.0


def _do_cor4(params, ctx):
    q, m = params["q"], params["m"]
    lhs = eval_ak_lhs((q,), 1.0, m, -0.5, ctx)
    total, bound, cut = 0.0, 0.0, 0
    for d in weak_compositions(m, q):
        dj = d.parts
        parts = tuple(di + 1 for di in dj[:-1]) + (dj[-1] + 2,)
        ev = eval_t(parts, ctx)
        total += (dj[-1] + 1) * ev.value
        bound += (dj[-1] + 1) * ev.bound
        cut = max(cut, ev.cutoff_used)
    rhs = Evaluation(value=total, bound=bound, bound_kind=RIGOROUS,
                     method="t-combination", cutoff_used=cut)
    return lhs, rhs, TOL_SLOW, 2.0 ** (-(q + 1) - m), 1.0


def _do_eq62(params, ctx):
    p, m, x = params["p"], params["m"], params["x"]
    lhs = eval_ak_lhs((1,), p, m, x, ctx)
    rhs = eval_euler_transform(p, m + 1, x, ctx)
    return lhs, rhs, (TOL_ALT if p == 2 else TOL_GEOM)


def _do_eq63(params, ctx):
    p, m = params["p"], params["m"]
    lhs = eval_ak_lhs((1,), p, m, -0.5, ctx)
    rhs = eval_euler_transform(p, m + 1, -0.5, ctx)
    tol = TOL_ALT if p == 2 else TOL_GEOM
    return lhs, rhs, tol, 2.0 ** (-1 - m), 2.0 ** (-(m + 1))


_ARCSIN_TABLE = [
    (4.0, 36),
    (2.0, 16),
    (8.0 + 4.0 * math.sqrt(3.0), 144),
    (6.0 + 2.0 * math.sqrt(5.0), 100),
    (2.0 * (5.0 + math.sqrt(5.0)) / 5.0, 25),
]


def _do_arcsin(params, ctx):
    p, denom = params["p"], params["denom"]
    lhs = eval_euler_transform(p, 1, -0.5, ctx)
    oracle = math.pi**2 / denom
    tol = TOL_ALT if p == 2.0 else TOL_GEOM
    ev = Evaluation(value=oracle, bound=1e-15, bound_kind=RIGOROUS,
                    method="closed-form", cutoff_used=0)
    return lhs, ev, tol, 0.5, 1.0


def _do_clausen_m1(params, ctx):
    p = params.get("p", 4.0)
    theta = 2.0 * math.asin(1.0 / math.sqrt(p))
    lhs = eval_ak_lhs((1,), p, 1, -0.5, ctx)
    cl2a = clausen(2, theta, ctx)
    cl2b = clausen(2, math.pi - theta, ctx)
    cl3a = clausen(3, theta, ctx)
    cl3b = clausen(3, math.pi - theta, ctx)
    z3 = zeta_em(3, 0.0, ctx)
    value = (-2.0 * cl3a.value + 2.0 * cl3b.value - theta * cl2b.value
             - theta * cl2a.value + 3.5 * z3.value)
    bound = (2.0 * cl3a.bound + 2.0 * cl3b.bound + theta * cl2b.bound
             + theta * cl2a.bound + 3.5 * z3.bound)
    rhs = Evaluation(value=value, bound=bound, bound_kind=RIGOROUS,
                     method="clausen-combination", cutoff_used=0)
    return lhs, rhs, TOL_SLOW, 0.5, 1.0


def _do_prop2(params, ctx):
    c = params["alpha"]
    x, z = params["x"], params["z"]
    lhs = eval_hurwitz_mzv(c, x - z, ctx)
    rhs = eval_prop2_series(c, x, z, params.get("m_terms", 24), ctx)
    return lhs, rhs, TOL_SLOW


def _do_trelation(params, ctx):
    c = params["alpha"]
    lhs = eval_t(c.parts, ctx)
    rhs = eval_hurwitz_mzv(c, -0.5, ctx)
    return lhs, rhs, TOL_ALT, 1.0, 2.0 ** (-c.weight)


def _betaratio_exact(n: int, m: int, x: Fraction) -> bool:
    """Taylor coefficients of B(n,1+x-z)/B(n,1+x) vs modified Bell values."""
    denom = TruncSeries.one(m)
    for j in range(1, n + 1):
        denom = denom * TruncSeries([Fraction(1), Fraction(-1, 1) / (j + x)], m)
    ratio = series_inverse(denom)
    tab = harmonic_table(n, max(m, 1), x, mode="exact")
    P = bell_modified(tab.row(n))
    return all(ratio.coeffs[k] == P[k] for k in range(m + 1))


def _do_betaratio(params, ctx):
    n_max = params.get("n_max", 12)
    m_max = params.get("m_max", 6)
    xs = params.get("xs", (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3)))
    ok = all(_betaratio_exact(n, m_max, Fraction(x))
             for x in xs for n in range(1, n_max + 1))
    return ok, float(n_max)


def _do_prop7(params, ctx):
    n_max = params.get("n_max", 12)
    m_max = params.get("m_max", 4)
    xs = params.get("xs", (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3)))
    ok = True
    for x in xs:
        x = Fraction(x)
        for n in range(1, n_max + 1):
            tab = harmonic_table(n, max(m_max, 1), x, mode="exact")
            B = beta_factor_exact(n, x)
            P = bell_modified(tab.row(n))
            for m in range(m_max + 1):
                if d_operator(n, m + 1, x) != B * P[m]:
                    ok = False
    return ok, float(n_max)


def _do_bern_classic(params, ctx):
    m_max = params.get("m_max", 10)
    polys = ak_bernoulli_polys(Composition.of(1), 1, m_max)
    ok = all(polys[m] == classical_bernoulli_polynomial(m)
             for m in range(m_max + 1))
    return ok, float(m_max)


def _do_genfun_b(params, ctx):
    v = params.get("v", Composition.of(1, 2))
    p = params.get("p", 2)
    x = params.get("x", Fraction(1, 3))
    t0 = params.get("t0", Fraction(1, 10))
    m_max = params.get("m_max", 30)
    polys = ak_bernoulli_polys(v, p, m_max)
    with mp.workdps(60):
        t = mp.mpf(t0.numerator) / t0.denominator
        xm = mp.mpf(x.numerator) / x.denominator
        lhs = mp.mpf(0)
        for m in range(m_max + 1):
            c = polys[m](x)
            lhs += mp.mpf(c.numerator) / c.denominator * t**m / mp.factorial(m)
        w = (1 - mp.e**(-t)) / p
        # direct nested summation of the polylogarithm at small argument
        rhs_li = mp.mpf(0)
        H = mp.mpf(0)
        for n in range(1, 80):
            if n > 1:
                H += mp.mpf(1) / (n - 1)
            rhs_li += w**n / n**v.parts[-1] * (H if len(v.parts) == 2 else 1)
        rhs = mp.e**(xm * t) / (mp.e**t - 1) * rhs_li
        diff = abs(lhs - rhs)
    return float(diff), float(lhs), float(rhs)


# ---------------------------------------------------------------- catalog

def _grid_thm3(max_weight=4):
    return tuple({"alpha": c, "m": m, "x": x}
                 for c in _comps(max_weight)
                 for m in (0, 1, 2)
                 for x in (0.0, 0.5, -0.5))


def catalog() -> list[IdentityCase]:
    return [
        IdentityCase("DUAL", "equality of a nested zeta value and its dual",
                     "rigorous",
                     tuple({"alpha": c} for c in _comps(6))),
        IdentityCase("THM3", "Bell-weighted beta sum vs shifted zeta combination",
                     "rigorous", _grid_thm3(4)),
        IdentityCase("EQ13_X0", "x = 0 specialization of THM3",
                     "rigorous",
                     tuple({"alpha": c, "m": m, "x": 0.0}
                           for c in _comps(5) for m in (0, 1, 2))),
        IdentityCase("XI_Q", "single-index Bell-weighted sum vs zeta combination",
                     "rigorous",
                     tuple({"q": q, "m": m} for q in (1, 2, 3) for m in (0, 1, 2))),
        IdentityCase("EQ53", "inverse-binomial sum vs odd-zeta combination",
                     "estimated",
                     tuple({"alpha": c, "m": m}
                           for c in _comps(4) for m in (0, 1, 2))),
        IdentityCase("COR2", "zeta(r+m+1) from an inverse-binomial sum",
                     "estimated",
                     tuple({"r": r, "m": m}
                           for (r, m) in ((1, 0), (1, 1), (1, 2), (2, 1), (3, 0)))),
        IdentityCase("APERY", "classical inverse-binomial series for zeta(3)",
                     "estimated", ({},)),
        IdentityCase("COR3_M0", "7 zeta(3) from a harmonic-weighted binomial sum",
                     "estimated", ({"m": 0},)),
        IdentityCase("COR3_M1", "45 zeta(4) from a harmonic-weighted binomial sum",
                     "estimated", ({"m": 1},)),
        IdentityCase("COR3_M2", "93 zeta(5) from a harmonic-weighted binomial sum",
                     "estimated", ({"m": 2},)),
        IdentityCase("COR4_M0", "odd-zeta values from central-binomial sums, m = 0",
                     "estimated", tuple({"q": q, "m": 0} for q in (1, 2, 3))),
        IdentityCase("COR4_M1", "odd-zeta values from central-binomial sums, m = 1",
                     "estimated", tuple({"q": q, "m": 1} for q in (1, 2))),
        IdentityCase("EQ62", "geometric Bell sum vs alternating harmonic sum",
                     "rigorous",
                     tuple({"p": p, "m": m, "x": x}
                           for p in (2.0, 3.0, 4.0) for m in (0, 1, 2)
                           for x in (0.0, -0.5))),
        IdentityCase("EQ63", "x = -1/2 variant of the transform identity",
                     "rigorous",
                     tuple({"p": p, "m": m} for p in (2.0, 3.0, 4.0) for m in (0, 1))),
        IdentityCase("ARCSIN", "alternating odd-harmonic sums equal to pi^2/k",
                     "rigorous",
                     tuple({"p": p, "denom": d} for (p, d) in _ARCSIN_TABLE)),
        IdentityCase("CLAUSEN_M1", "m = 1 inverse-binomial sum via Clausen values",
                     "estimated", ({"p": 4.0},)),
        IdentityCase("BETARATIO", "exact beta-ratio Taylor coefficients",
                     "exact", ({},)),
        IdentityCase("PROP7", "exact alternating-binomial kernel factorization",
                     "exact", ({},)),
        IdentityCase("PROP2", "power-series expansion of the shifted zeta value",
                     "estimated",
                     ({"alpha": Composition.of(2), "x": 0.5, "z": 0.25},
                      {"alpha": Composition.of(1, 2), "x": 0.5, "z": 0.25},
                      {"alpha": Composition.of(3), "x": 0.25, "z": -0.25})),
        IdentityCase("GENFUN_B", "numeric generating-function consistency",
                     "exact", ({},)),
        IdentityCase("BERN_CLASSIC", "collapse to classical Bernoulli polynomials",
                     "exact", ({},)),
        IdentityCase("TRELATION", "odd nested sums as rescaled shifted zeta values",
                     "rigorous", tuple({"alpha": c} for c in _comps(5))),
    ]


def _case(id_: str) -> IdentityCase:
    for c in catalog():
        if c.id == id_:
            return c
    raise DomainError(f"unknown identity id {id_!r}")


def verify(id_: str, params: dict | None = None,
           ctx: PrecisionContext = DEFAULT_CTX) -> IdentityReport:
    case = _case(id_)
    params = dict(params) if params else (dict(case.grid[0]) if case.grid else {})
    if "alpha" in params and not isinstance(params["alpha"], Composition):
        params["alpha"] = Composition(tuple(params["alpha"]))
    t0 = time.perf_counter()
    if id_ == "BETARATIO":
        ok, val = _do_betaratio(params, ctx)
        return _exact_report(id_, params, ok, val, time.perf_counter() - t0)
    if id_ == "PROP7":
        ok, val = _do_prop7(params, ctx)
        return _exact_report(id_, params, ok, val, time.perf_counter() - t0)
    if id_ == "BERN_CLASSIC":
        ok, val = _do_bern_classic(params, ctx)
        return _exact_report(id_, params, ok, val, time.perf_counter() - t0)
    if id_ == "GENFUN_B":
        diff, lv, rv = _do_genfun_b(params, ctx)
        return IdentityReport(id=id_, params=params, lhs=lv, rhs=rv,
                              abs_diff=diff, bound=1e-25, bound_kind=ESTIMATED,
                              passed=diff <= 1e-25,
                              seconds=time.perf_counter() - t0)
    recipe = {
        "DUAL": _do_dual, "THM3": _do_thm3, "EQ13_X0": _do_thm3,
        "XI_Q": _do_xi_q, "EQ53": _do_eq53, "COR2": _do_cor2,
        "APERY": _do_apery, "COR3_M0": _do_cor3, "COR3_M1": _do_cor3,
        "COR3_M2": _do_cor3, "COR4_M0": _do_cor4, "COR4_M1": _do_cor4,
        "EQ62": _do_eq62, "EQ63": _do_eq63, "ARCSIN": _do_arcsin,
        "CLAUSEN_M1": _do_clausen_m1, "PROP2": _do_prop2,
        "TRELATION": _do_trelation,
    }[id_]
    out = recipe(params, ctx)
    dt = time.perf_counter() - t0
    if len(out) == 3:
        lhs, rhs, tol = out
        return _pair_report(id_, params, lhs, rhs, tol, dt)
    lhs, rhs, tol, sl, sr = out
    if id_ in ("COR2", "APERY", "COR3_M0", "COR3_M1", "COR3_M2", "COR4_M0",
               "COR4_M1", "ARCSIN"):
        return _oracle_report(id_, params, lhs, sr * float(rhs.value),
                              abs(sr) * float(rhs.bound), tol, dt, scale_l=sl)
    return _pair_report(id_, params, lhs, rhs, tol, dt, scale_l=sl, scale_r=sr)


def verify_all(filter_prefix: str | None = None,
               ctx: PrecisionContext = DEFAULT_CTX,
               tolerance_class: str | None = None) -> VerifySummary:
    summary = VerifySummary()
    for case in catalog():
        if filter_prefix and not case.id.startswith(filter_prefix):
            continue
        if tolerance_class and case.tolerance_class != tolerance_class:
            continue
        grids = case.grid or ({},)
        for params in grids:
            summary.reports.append(verify(case.id, dict(params), ctx))
    return summary
