"""Command-line front end: ``rootzeta VERB [options]``.

Exit codes: 0 when every result passes, 1 on a failed or crashed
computation, 2 on a usage error.  Configuration precedence is
flag > --config file > ROOTZETA_* environment variable > built-in default.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import asdict
from fractions import Fraction

import mpmath

from . import __version__
from .exact import ZetaExpression
from .genfunc import get_generating_function, p_coefficient
from .identities import (
    canonicalize_double,
    evaluate,
    reduce_double,
    reduce_sharp_double,
    reduce_triple,
    restricted_sum,
    shen_cai_rhs,
    volume_formula,
)
from .roots import build_root_datum
from .series import AccuracyError, EvalConfig, ez_mzv, phi2, riemann_zeta, sharp_mzv
from .suites import Check, ball_check, run_suite

ENV_PREFIX = "ROOTZETA_"
CONFIG_KEYS = ("precision_bits", "cutoff", "em_order", "digits")


class UsageError(Exception):
    pass


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty tuple")
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, help="required correct decimal digits")
    common.add_argument("--precision-bits", type=int, dest="precision_bits")
    common.add_argument("--cutoff", type=int, help="direct-summation cutoff M")
    common.add_argument("--em-order", type=int, dest="em_order", help="Euler-Maclaurin order p")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--config", help="key=value file with EvalConfig defaults")

    p = argparse.ArgumentParser(prog="rootzeta", description="Zeta values attached to root systems of type B and C.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("eval", parents=[common], help="numeric value with a certified bound")
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--mzv", type=_int_tuple, help="Euler-Zagier value, innermost argument first")
    g.add_argument("--sharp", type=_int_tuple, help="type B partial-sum value")
    g.add_argument("--zeta", type=int, help="Riemann zeta value")
    g.add_argument("--phi2", type=_int_tuple, help="alternating double sum")

    r = sub.add_parser("reduce", parents=[common], help="parity reduction to lower depth")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--double", type=_int_tuple)
    g.add_argument("--sharp", type=_int_tuple)
    g.add_argument("--triple", type=_int_tuple)
    r.add_argument("--canonical", action="store_true", help="rewrite double values of odd weight via reduce_double")

    v = sub.add_parser("volume", parents=[common], help="equal-argument value from the volume formula")
    v.add_argument("--family", choices=("B", "C"), default="C")
    v.add_argument("--depth", type=int, required=True)
    v.add_argument("--k", type=int, required=True, help="half of the common argument")

    s = sub.add_parser("sums", parents=[common], help="restricted sum over even arguments")
    s.add_argument("--family", choices=("B", "C"), default="C")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--N", type=int, required=True)

    c = sub.add_parser("pcoeff", parents=[common], help="P coefficient of the generating function")
    c.add_argument("--family", choices=("B", "C"), default="C")
    c.add_argument("--depth", type=int, required=True)
    c.add_argument("--k", type=_int_tuple, help="exponent vector")
    c.add_argument("--trunc", type=int, help="dump the whole series through this total degree")

    f = sub.add_parser("verify", parents=[common], help="run a verification suite")
    f.add_argument("suite", choices=("all", "paper-values", "relations", "oracles"))
    return p


# ------------------------------------------------------------------ config


def read_config_file(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key=value")
            key, val = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise UsageError(f"{path}:{n}: unknown key {key!r}")
            try:
                out[key] = int(val)
            except ValueError:
                raise UsageError(f"{path}:{n}: {key} must be an integer") from None
    return out


def resolve_config(args, depth: int | None = None, environ=None) -> EvalConfig:
    environ = os.environ if environ is None else environ
    merged: dict = {}
    for key in CONFIG_KEYS:
        raw = environ.get(ENV_PREFIX + key.upper())
        if raw is not None:
            try:
                merged[key] = int(raw)
            except ValueError:
                raise UsageError(f"{ENV_PREFIX + key.upper()} must be an integer") from None
    if args.config:
        try:
            merged.update(read_config_file(args.config))
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    overrides = {}
    digits = merged.pop("digits", None)
    if digits is not None:
        if digits < 1:
            raise UsageError("--digits must be positive")
        overrides["target_digits"] = digits
        overrides["precision_bits"] = max(256, math.ceil(digits * math.log2(10)) + 32)
    overrides.update({k: v for k, v in merged.items()})
    try:
        return EvalConfig.for_depth(depth or 1, **overrides)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ------------------------------------------------------------------ verbs


def _ball(label: str, x, extra=None) -> Check:
    return Check(label, "pass", numeric=mpmath.nstr(x.value, 50), bound=mpmath.nstr(x.err, 4), extra=extra or {})


def _idx(t) -> str:
    return ",".join(map(str, t))


def do_eval(args) -> list[Check]:
    if args.zeta is not None:
        if args.zeta < 2:
            raise UsageError("--zeta needs s >= 2")
        cfg = resolve_config(args, 1)
        label, fn = f"zeta({args.zeta})", lambda: riemann_zeta(args.zeta, cfg)
    elif args.phi2 is not None:
        if len(args.phi2) != 2:
            raise UsageError("--phi2 takes two arguments")
        cfg = resolve_config(args, 2)
        label, fn = f"phi2({_idx(args.phi2)})", lambda: phi2(*args.phi2, cfg)
    elif args.mzv is not None:
        if not 1 <= len(args.mzv) <= 4 or args.mzv[-1] < 2 or min(args.mzv) < 1:
            raise UsageError("--mzv needs 1..4 positive arguments with the last >= 2")
        cfg = resolve_config(args, len(args.mzv))
        label, fn = f"zeta_{len(args.mzv)}({_idx(args.mzv)})", lambda: ez_mzv(args.mzv, cfg)
    else:
        if not 1 <= len(args.sharp) <= 3 or args.sharp[-1] < 2 or min(args.sharp) < 1:
            raise UsageError("--sharp needs 1..3 positive arguments with the last >= 2")
        cfg = resolve_config(args, len(args.sharp))
        label, fn = f"zeta#_{len(args.sharp)}({_idx(args.sharp)})", lambda: sharp_mzv(args.sharp, cfg)
    args._cfg = cfg
    return [_ball(label, fn())]


def do_reduce(args) -> list[Check]:
    cfg = resolve_config(args, 3)
    args._cfg = cfg
    if args.double is not None:
        t = args.double
        if len(t) != 2:
            raise UsageError("--double takes two arguments")
        if sum(t) % 2 == 0 or t[1] < 2 or t[0] < 1:
            raise UsageError("--double needs odd weight, q >= 2 and p >= 1")
        label, expr, num = f"zeta_2({_idx(t)})", reduce_double(*t), lambda: ez_mzv(t, cfg)
    elif args.sharp is not None:
        t = args.sharp
        if len(t) != 2 or min(t) < 2 or sum(t) % 2 == 0:
            raise UsageError("--sharp needs two arguments >= 2 of odd weight")
        label, expr, num = f"zeta#_2({_idx(t)})", reduce_sharp_double(*t), lambda: sharp_mzv(t, cfg)
    else:
        t = args.triple
        if len(t) != 3 or min(t) < 2 or sum(t) % 2:
            raise UsageError("--triple needs three arguments >= 2 of even weight")
        expr = reduce_triple(*t)
        if args.canonical:
            expr = canonicalize_double(expr)
        label, num = f"zeta_3({_idx(t)})", lambda: ez_mzv(t, cfg)
    with cfg.workprec():
        diff = num() - evaluate(expr, cfg)
    chk = ball_check(label, diff, cfg.digits_for(3) if cfg.target_digits else 30)
    return [Check(label, chk.status, value=expr.to_text(), numeric=chk.numeric, bound=chk.bound)]


def _check_depth(depth: int, hi: int = 4):
    if not 1 <= depth <= hi:
        raise UsageError(f"--depth must be between 1 and {hi}")


def do_volume(args) -> list[Check]:
    _check_depth(args.depth)
    if args.k < 1:
        raise UsageError("--k must be positive")
    args._cfg = resolve_config(args, args.depth)
    expr = volume_formula(args.family, args.depth, args.k)
    name = "zeta" if args.family == "C" else "zeta#"
    label = f"{name}_{args.depth}({_idx([2 * args.k] * args.depth)})"
    return [Check(label, "pass", value=expr.to_text())]


def do_sums(args) -> list[Check]:
    _check_depth(args.depth)
    if args.d < 1 or args.N < args.depth:
        raise UsageError("need d >= 1 and N >= depth")
    args._cfg = resolve_config(args, args.depth)
    expr = restricted_sum(args.family, args.depth, args.d, args.N)
    label = f"restricted_sum({args.family},{args.depth},{args.d},{args.N})"
    chk = Check(label, "pass", value=expr.to_text())
    if args.family == "C" and args.d == 1 and 2 <= args.depth <= 4:
        known = shen_cai_rhs(args.depth, args.N)
        chk.expected = known.to_text()
        chk.extra["decomposition"] = _decomposition(args.depth, args.N)
        chk.status = "pass" if known == expr else "fail"
    return [chk]


def _decomposition(r: int, N: int) -> str:
    coef = {2: ("3/4", None), 3: ("5/8", "1/4"), 4: ("35/64", "5/16")}[r]
    text = f"{coef[0]}*zeta({2 * N})"
    if coef[1]:
        text += f" - {coef[1]}*zeta(2)*zeta({2 * N - 2})"
    return text


def do_pcoeff(args) -> list[Check]:
    _check_depth(args.depth, 3)
    args._cfg = resolve_config(args, args.depth)
    datum = build_root_datum(args.family, args.depth)
    out = []
    if args.k is None and args.trunc is None:
        raise UsageError("pcoeff needs --k or --trunc")
    if args.k is not None:
        if len(args.k) != args.depth or min(args.k) < 0:
            raise UsageError("--k must have one nonnegative entry per rank")
        val = p_coefficient(datum, None, args.k)
        out.append(Check(f"P_{args.family}{args.depth}({_idx(args.k)})", "pass", value=_q(val)))
    if args.trunc is not None:
        if not 0 <= args.trunc <= 40:
            raise UsageError("--trunc must be in 0..40")
        series = get_generating_function(datum).series(args.trunc)
        out.append(Check(f"F_{args.family}{args.depth} through degree {args.trunc}", "pass",
                         value=series.dump().rstrip("\n")))
    return out


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def do_verify(args) -> list[Check]:
    cfg = resolve_config(args, 3)
    args._cfg = cfg
    return run_suite(args.suite, cfg)


VERBS = {"eval": do_eval, "reduce": do_reduce, "volume": do_volume, "sums": do_sums, "pcoeff": do_pcoeff,
         "verify": do_verify}


# ------------------------------------------------------------------ report


def _config_snapshot(cfg: EvalConfig | None) -> dict:
    return asdict(cfg) if cfg is not None else {}


def render_text(report: dict) -> str:
    lines = [f"# rootzeta {report['command']['verb']}  status={report['status']}"]
    for rec in report["results"]:
        head = f"[{rec['status'].upper()}] {rec['label']}"
        parts = []
        if "value" in rec:
            parts.append(f"= {rec['value']}")
        if "expected" in rec:
            parts.append(f"(expected {rec['expected']})")
        if "numeric" in rec:
            parts.append(f"~ {rec['numeric']} ± {rec['bound']}")
        for k, v in rec.items():
            if k not in ("label", "status", "value", "expected", "numeric", "bound"):
                parts.append(f"{k}: {v}")
        lines.append(head + ("  " + "  ".join(parts) if parts else ""))
    passed = sum(1 for r in report["results"] if r["status"] == "pass")
    lines.append(f"# {passed}/{len(report['results'])} passed in {report['wall_time']:.2f}s")
    return "\n".join(lines) + "\n"


def run(argv=None) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    start = time.perf_counter()
    args._cfg = None
    try:
        results = VERBS[args.verb](args)
        code = 0 if all(c.passed for c in results) else 1
    except UsageError as exc:
        print(f"rootzeta: error: {exc}", file=sys.stderr)
        return 2, None
    except (AccuracyError, ArithmeticError, ValueError) as exc:
        print(f"rootzeta: computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        results = [Check(args.verb, "fail", extra={"error": f"{type(exc).__name__}: {exc}"})]
        code = 1
    echo = {k: v for k, v in sorted(vars(args).items()) if not k.startswith("_") and k not in ("out", "format")}
    echo = {k: list(v) if isinstance(v, tuple) else v for k, v in echo.items()}
    report = {
        "command": echo,
        "config": _config_snapshot(args._cfg),
        "status": "pass" if code == 0 else "fail",
        "results": [c.as_record() for c in results],
        "wall_time": round(time.perf_counter() - start, 3),
    }
    text = json.dumps(report, indent=2) + "\n" if args.format == "json" else render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code, report


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
