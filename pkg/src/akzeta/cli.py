"""Command-line front end: evaluation, duality, polynomial generation, and
identity verification with machine-readable output.

Exit codes: 0 on success (and all verifications passing), 1 when a
verification case fails, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import mpmath as mp

from .combinatorics import Composition, dual
from .errors import DomainError
from .evaluator import (eval_hurwitz_mzv, eval_t, eval_li, eval_ak_lhs,
                        eval_euler_transform)
from .identities import catalog, verify, verify_all
from .numerics import DEFAULT_CTX, Evaluation, PrecisionContext
from .powerseries import ak_bernoulli_polys

__all__ = ["main", "CliConfig"]


@dataclass(frozen=True)
class CliConfig:
    digits: int = 50
    cutoff: int | None = None
    json_output: bool = False
    tolerance_class: str | None = None
    parallel: bool = False

    def __post_init__(self):
        if self.digits < 15:
            raise DomainError("precision must be at least 15 digits")

    def context(self) -> PrecisionContext:
        ctx = PrecisionContext(digits=self.digits, parallel=self.parallel)
        if self.cutoff is not None:
            ctx = ctx.with_cutoff(self.cutoff)
        return ctx


def _print_eval(ev: Evaluation, config: CliConfig):
    if config.json_output:
        print(json.dumps({
            "value": float(ev.value),
            "bound": float(ev.bound),
            "bound_kind": ev.bound_kind,
            "method": ev.method,
            "cutoff": ev.cutoff_used,
        }))
        return
    digits = min(config.digits, 17 if isinstance(ev.value, float) else config.digits)
    print(f"value      = {mp.nstr(mp.mpf(ev.value), digits)}")
    print(f"bound      = {float(ev.bound):.3e} ({ev.bound_kind})")
    print(f"method     = {ev.method}")
    print(f"cutoff     = {ev.cutoff_used}")


def _cmd_dual(args, config: CliConfig) -> int:
    c = Composition.parse(args.composition)
    d = dual(c)
    if config.json_output:
        print(json.dumps({"input": str(c), "dual": str(d),
                          "weight": c.weight, "depth": c.depth,
                          "dual_depth": d.depth}))
    else:
        print(f"dual({c}) = {d}")
        print(f"weight = {c.weight}, depth = {c.depth} -> {d.depth}")
    return 0


def _cmd_eval(args, config: CliConfig) -> int:
    ctx = config.context()
    kind = args.kind
    if kind == "zeta":
        ev = eval_hurwitz_mzv(Composition.parse(args.index), args.x, ctx)
    elif kind == "t":
        ev = eval_t(Composition.parse(args.index).parts, ctx)
    elif kind == "li":
        ev = eval_li(Composition.parse(args.index), args.z, ctx)
    elif kind == "ak":
        if args.v is None:
            raise DomainError("kind 'ak' requires --v")
        ev = eval_ak_lhs(Composition.parse(args.v), args.p, args.m, args.x, ctx)
    elif kind == "euler":
        ev = eval_euler_transform(args.p, args.s, args.x, ctx)
    else:
        raise DomainError(f"unknown eval kind {kind!r}")
    _print_eval(ev, config)
    return 0


def _cmd_bpoly(args, config: CliConfig) -> int:
    v = Composition.parse(args.v)
    if args.p < 1:
        raise DomainError("require p >= 1")
    polys = ak_bernoulli_polys(v, args.p, args.m)
    for m, poly in enumerate(polys):
        if config.json_output:
            print(json.dumps({"m": m, "poly": str(poly)}))
        else:
            print(f"B_{m}(x) = {poly}")
    return 0


def _cmd_verify(args, config: CliConfig) -> int:
    ctx = config.context()
    if args.id is None and not args.all:
        raise DomainError("give an identity id or --all")
    if args.id is not None:
        known = {c.id for c in catalog()}
        if args.id not in known:
            raise DomainError(f"unknown identity id {args.id!r}")
        summary = verify_all(filter_prefix=args.id, ctx=ctx,
                             tolerance_class=config.tolerance_class)
    else:
        summary = verify_all(ctx=ctx, tolerance_class=config.tolerance_class)
    for r in summary.reports:
        if config.json_output:
            print(r.to_json())
        else:
            status = "pass" if r.passed else "FAIL"
            print(f"{status}  {r.id:12s} {r.params}  |diff| = {r.abs_diff:.3e}"
                  f"  bound = {r.bound:.3e} ({r.bound_kind})")
    if not config.json_output:
        print(f"{summary.n_pass} passed, {summary.n_fail} failed, "
              f"worst residual {summary.worst:.3e}")
    return 0 if summary.all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="akzeta",
        description="Evaluate nested zeta-type sums and verify their identities.",
        allow_abbrev=False)
    parser.add_argument("--precision", type=int, default=50,
                        help="working precision in decimal digits (>= 15)")
    parser.add_argument("--cutoff", type=int, default=None,
                        help="summation cutoff override")
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--parallel", action="store_true",
                        help="allow deterministic parallel evaluation")
    sub = parser.add_subparsers(dest="command", required=True)

    p_dual = sub.add_parser("dual", help="dual of an admissible composition")
    p_dual.add_argument("composition", help="comma-separated exponents, e.g. 1,2")

    p_eval = sub.add_parser("eval", help="evaluate a sum")
    p_eval.add_argument("kind", choices=["zeta", "t", "li", "ak", "euler"])
    p_eval.add_argument("index", nargs="?", default=None,
                        help="composition literal for zeta/t/li")
    p_eval.add_argument("--x", type=float, default=0.0)
    p_eval.add_argument("--z", type=float, default=0.5)
    p_eval.add_argument("--p", type=float, default=1.0)
    p_eval.add_argument("--m", type=int, default=0)
    p_eval.add_argument("--s", type=int, default=1)
    p_eval.add_argument("--v", "--alpha", dest="v", default=None,
                        help="composition literal for the ak kind")

    p_bpoly = sub.add_parser("bpoly", help="Bernoulli-type polynomials")
    p_bpoly.add_argument("--v", required=True, help="composition literal")
    p_bpoly.add_argument("--p", type=int, default=1)
    p_bpoly.add_argument("--m", type=int, default=5, help="largest degree")

    p_verify = sub.add_parser("verify", help="verify catalog identities")
    p_verify.add_argument("id", nargs="?", default=None)
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument("--tolerance-class", dest="tolerance_class",
                          choices=["rigorous", "estimated", "exact"], default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig(
            digits=args.precision,
            cutoff=args.cutoff,
            json_output=args.json,
            tolerance_class=getattr(args, "tolerance_class", None),
            parallel=args.parallel,
        )
        if args.command == "dual":
            return _cmd_dual(args, config)
        if args.command == "eval":
            if args.kind in ("zeta", "t", "li") and args.index is None:
                raise DomainError(f"kind {args.kind!r} requires a composition")
            return _cmd_eval(args, config)
        if args.command == "bpoly":
            return _cmd_bpoly(args, config)
        if args.command == "verify":
            return _cmd_verify(args, config)
        raise DomainError(f"unknown command {args.command!r}")
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
