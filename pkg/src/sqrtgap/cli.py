"""Command-line interface: every operation, machine-readable output.

Reports go to stdout as JSON (default) or CSV; progress goes to stderr.
Exit codes: 0 success, 1 input error, 2 computation failure (no
certificate within the iteration budget, enumeration cap exceeded,
precision cap exhausted).  Integers that can exceed native JSON number
range are serialized as decimal strings, enclosures as exact decimal
dyadic endpoints, so every report re-parses losslessly.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import bounds, oracle, squarefree
from .exactnum import (
    DEFAULT_PRECISION_CAP,
    Enclosure,
    PrecisionExhausted,
    RadicalSum,
    dyadic_decimal,
    enclose_radical_sum,
)
from .reduction import ReductionError, ReductionParams

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COMPUTE = 2


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); remap to input error
        raise _InputError(message)


def _parse_bigint(text: str) -> int:
    """Accept plain decimal or base^exponent (e.g. 10^50)."""
    text = text.strip()
    if "^" in text:
        base, _, exp = text.partition("^")
        return int(base) ** int(exp)
    return int(text)


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sqrtgap", description=__doc__)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--sieve-cache", metavar="PATH", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_reduction_flags(p):
        p.add_argument("--delta", type=_parse_fraction, default=None,
                       help="Lovasz parameter as a fraction, e.g. 99/100")
        p.add_argument("--block-size", type=int, default=None)
        p.add_argument("--max-rounds", type=int, default=None)

    p = sub.add_parser("sigma", help="i-th square-free integer (from 2)")
    p.add_argument("--i", type=int, required=True)

    p = sub.add_parser("brute-force", help="exhaustive minimum for tiny instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=oracle.VARIANTS, required=True)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)

    p = sub.add_parser("root-separation", help="root-separation baseline, log10")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=("r1", "R"), default="R")

    p = sub.add_parser("qian-wang", help="alternating binomial upper-bound instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=_parse_bigint, required=True)
    p.add_argument("--precision-bits", type=int, default=128)

    p = sub.add_parser("certify", help="attempt a lower-bound certificate at one scale")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=_parse_bigint, required=True, dest="scale")
    add_reduction_flags(p)

    p = sub.add_parser("lower-bound", help="grow the scale until a bound certifies")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--step", type=_parse_bigint, default=bounds.DEFAULT_STEP)
    p.add_argument("--n-start", type=_parse_bigint, default=None, dest="start_scale")
    p.add_argument("--max-iters", type=int, default=bounds.DEFAULT_MAX_ITERS)
    add_reduction_flags(p)

    p = sub.add_parser("upper-bound", help="constructive upper-bound witness")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=_parse_bigint, required=True, dest="scale")
    add_reduction_flags(p)

    p = sub.add_parser("ratio-scan", help="lambda*/N^(1/(k+1)) over a (k, N) grid")
    p.add_argument("--k", type=_parse_int_list, required=True, dest="k_list",
                   help="comma-separated k values")
    p.add_argument("--log10n", type=_parse_int_list, required=True, dest="log10_list",
                   help="comma-separated log10(N) values")
    add_reduction_flags(p)

    return parser


def _reduction_params(args) -> ReductionParams:
    kwargs = {}
    if getattr(args, "delta", None) is not None:
        kwargs["delta"] = args.delta
    if getattr(args, "block_size", None) is not None:
        kwargs["block_size"] = args.block_size
    if getattr(args, "max_rounds", None) is not None:
        kwargs["max_rounds"] = args.max_rounds
    return ReductionParams(**kwargs)


def _ser_enclosure(enc: Enclosure) -> dict:
    return {
        "lo": dyadic_decimal(enc.lo),
        "hi": dyadic_decimal(enc.hi),
        "precision_bits": enc.precision_bits,
    }


def _ser_fraction(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _ser_radical_sum(v: RadicalSum) -> dict:
    return {
        "terms": [{"coefficient": str(c), "radicand": str(s)} for c, s in v.terms],
        "offset": str(v.offset),
        "display": str(v),
    }


def _ser_params(params: ReductionParams) -> dict:
    return {
        "delta": f"{params.delta.numerator}/{params.delta.denominator}",
        "block_size": params.block_size,
        "max_rounds": params.max_rounds,
    }


def _run_sigma(args) -> dict:
    return {"i": args.i, "value": str(squarefree.nth_squarefree(args.i))}


def _run_brute_force(args) -> dict:
    res = oracle.brute_force(args.n, args.k, args.variant, cap=args.cap)
    return {
        "n": args.n,
        "k": args.k,
        "variant": args.variant,
        "value": _ser_enclosure(res.value),
        "value_approx": res.value.approx(),
        "witness": _ser_radical_sum(res.witness),
        "instance_count": res.instance_count,
    }


def _run_root_separation(args) -> dict:
    bound = bounds.root_separation_log10(args.n, args.k, args.variant)
    return {"n": args.n, "k": args.k, "variant": args.variant, "log10_bound": bound.log10}


def _run_qian_wang(args) -> dict:
    inst = bounds.qian_wang_instance(args.k, args.t)
    enc = enclose_radical_sum(inst.value, args.precision_bits).abs()
    return {
        "k": args.k,
        "t": str(args.t),
        "sum": _ser_radical_sum(inst.value),
        "abs_value": _ser_enclosure(enc),
        "rhs_log10": inst.rhs_log10.log10,
        "rhs_sq": _ser_fraction(inst.rhs_sq),
        "inequality_holds": inst.satisfied(),
    }


def _ser_certificate(cert: bounds.LowerBoundCertificate) -> dict:
    return {
        "k": cert.k,
        "sigma_k": str(cert.sigma_k),
        "N": str(cert.scale),
        "min_gs_norm_sq": _ser_fraction(cert.min_gs_norm_sq),
        "min_gs_norm_sq_approx": float(cert.min_gs_norm_sq),
        "threshold_sq_approx": cert.threshold.approx(),
        "threshold_rational_part": _ser_fraction(cert.threshold.rational_part),
        "threshold_radical": f"{cert.threshold.radical_coeff}*sqrt({cert.threshold.radicand})",
        "difference": _ser_fraction(cert.difference),
        "threshold_passed": cert.threshold_passed,
        "claimed_lower_bound_log10": cert.claimed_bound.log10 if cert.threshold_passed else None,
    }


def _run_certify(args) -> tuple[dict, int]:
    cert = bounds.certify_lower_bound(args.k, args.scale, _reduction_params(args))
    return _ser_certificate(cert), EXIT_OK if cert.threshold_passed else EXIT_COMPUTE


def _run_lower_bound(args) -> dict:
    def progress(cert):
        print(
            f"scale 10^{len(str(cert.scale)) - 1}: min GS norm^2 ~ "
            f"{float(cert.min_gs_norm_sq):.4g} vs {cert.threshold.approx():.4g} "
            f"-> {'pass' if cert.threshold_passed else 'fail'}",
            file=sys.stderr,
        )

    cert = bounds.find_lower_bound(
        args.k,
        step=args.step,
        start_scale=args.start_scale,
        max_iters=args.max_iters,
        params=_reduction_params(args),
        progress=progress,
    )
    return _ser_certificate(cert)


def _run_upper_bound(args) -> dict:
    witness = bounds.upper_bound_from_reduction(args.k, args.scale, _reduction_params(args))
    return {
        "k": args.k,
        "N": str(args.scale),
        "coefficients": [str(a) for a in witness.coefficients],
        "offset_b": str(witness.offset),
        "first_coord": str(witness.first_coord),
        "n_effective": str(witness.n_effective),
        "value": _ser_radical_sum(witness.value),
        "abs_value": _ser_enclosure(witness.bound),
        "abs_value_log10": _log10_of(witness.bound),
        "row_inequality_rhs": _ser_fraction(witness.row_inequality_rhs()),
    }


def _log10_of(enc: Enclosure) -> float | None:
    import math

    hi = enc.hi
    if hi <= 0:
        return None
    return (math.log(hi.numerator) - math.log(hi.denominator)) / math.log(10)


def _run_ratio_scan(args, threads: int) -> dict:
    cells = bounds.ratio_scan(
        args.k_list, args.log10_list, _reduction_params(args), threads=threads
    )
    rows = []
    for c in cells:
        if c.error is not None:
            rows.append({"k": c.k, "log10N": c.log10_scale, "error": c.error})
            continue
        rows.append(
            {
                "k": c.k,
                "log10N": c.log10_scale,
                "l_sq": str(c.shortest_row_norm_sq),
                "lambda_star_sq": float(c.min_gs_norm_sq),
                "ratio": round(c.ratio, 4),
                "conjecture_violation": c.conjecture_violation,
            }
        )
    return {"cells": rows}


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return
    # CSV: ratio-scan emits one row per cell; other commands one flat row.
    result = report["result"]
    rows = result["cells"] if "cells" in result else [_flatten(result)]
    if not rows:
        return
    fieldnames: list[str] = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def _flatten(obj: dict, prefix: str = "") -> dict:
    flat: dict = {}
    for key, value in obj.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value)
        else:
            flat[name] = value
    return flat


_DISPATCH = {
    "sigma": lambda args, threads: (_run_sigma(args), EXIT_OK),
    "brute-force": lambda args, threads: (_run_brute_force(args), EXIT_OK),
    "root-separation": lambda args, threads: (_run_root_separation(args), EXIT_OK),
    "qian-wang": lambda args, threads: (_run_qian_wang(args), EXIT_OK),
    "certify": lambda args, threads: _run_certify(args),
    "lower-bound": lambda args, threads: (_run_lower_bound(args), EXIT_OK),
    "upper-bound": lambda args, threads: (_run_upper_bound(args), EXIT_OK),
    "ratio-scan": lambda args, threads: (_run_ratio_scan(args, threads), EXIT_OK),
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _InputError as exc:
        print(f"sqrtgap: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.sieve_cache and os.path.exists(args.sieve_cache):
        try:
            squarefree.load_sieve(args.sieve_cache)
        except ValueError as exc:
            print(f"sqrtgap: bad sieve cache: {exc}", file=sys.stderr)
            return EXIT_INPUT

    try:
        result, code = _DISPATCH[args.command](args, args.threads)
    except (bounds.NoCertificateError, oracle.EnumerationCapError,
            PrecisionExhausted, ReductionError) as exc:
        print(f"sqrtgap: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (_InputError, ValueError) as exc:
        print(f"sqrtgap: {exc}", file=sys.stderr)
        return EXIT_INPUT

    defaults = {
        "format": args.format,
        "threads": args.threads,
        "precision_cap_bits": DEFAULT_PRECISION_CAP,
        "reduction": _ser_params(_reduction_params(args)),
    }
    report = {"command": args.command, "defaults": defaults, "result": result}
    _emit(report, args.format)

    if args.sieve_cache:
        squarefree.save_sieve(args.sieve_cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
