"""Command-line interface.

Exit codes: 0 success, 1 certificate verification failure, 2 bad input,
3 search inconclusive within the height bound.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import oracle
from .descentsearch import classify, search_points
from .errors import FactoringLimit, NonPositive, NotAWitness, NotPythagorean, PythaError
from .exactnum import frac_to_json
from .gammabuild import build, torsion_table
from .pythagoras import make_pair, primitive_pairs, same_ratio
from .pythapotent import generate_family, point_from_pair, verify_certificate

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3

DEFAULTS = {
    "height": 30,
    "bound": 50,
    "count": 3,
    "max_primes": 16,
    "max_digits": 4000,
    "workers": 1,
}

CSV_HEADER = [
    "pair_a", "pair_b", "hyp", "mode", "torsion", "audit",
    "verdict", "witnesses_curve", "witnesses_oracle",
]


class InputError(Exception):
    pass


def _settings(args) -> dict:
    conf = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                loaded = json.load(fh)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read config {args.config}: {exc}")
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        conf.update(loaded)
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            conf[key] = value
    return conf


def _pair(args):
    try:
        return make_pair(args.a, args.b)
    except (NotPythagorean, NonPositive) as exc:
        raise InputError(str(exc))


def _point_json(p) -> dict:
    return {"x": frac_to_json(p.x), "y": frac_to_json(p.y)}


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def cmd_analyze(args, out) -> int:
    pair = _pair(args)
    gamma = build(pair, args.mode)
    table = torsion_table(gamma)
    audit = oracle.torsion_square_audit(pair, args.mode)
    if args.format == "text":
        out.write(f"pair ({pair.a}, {pair.b}), hypotenuse {pair.c}, "
                  f"lambda={pair.lam}, (m, n)=({pair.m}, {pair.n})\n")
        out.write(f"mode {gamma.mode}: {gamma.curve}\n")
        out.write(f"torsion {table.structure}, {len(table)} points\n")
        for p, order in table.points:
            out.write(f"  {str(p):<40} order {order}\n")
        out.write(f"square audit: {'pass' if audit.ok else 'FAIL'}\n")
        return EXIT_OK
    _dump({
        "pair": {"a": str(pair.a), "b": str(pair.b), "c": str(pair.c),
                 "lambda": str(pair.lam), "m": str(pair.m), "n": str(pair.n)},
        "mode": gamma.mode,
        "curve": {"A": str(gamma.curve.A), "B": str(gamma.curve.B)},
        "torsion": {
            "structure": table.structure,
            "count": len(table),
            "points": [
                {"point": "O"} if p.is_infinity else {"point": _point_json(p), "order": o}
                for p, o in table.points
            ],
        },
        "audit": {"pass": audit.ok, "findings": audit.findings},
    }, out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    conf = _settings(args)
    pair = _pair(args)
    if conf["height"] < 1 or conf["count"] < 0:
        raise InputError("height must be >= 1 and count >= 0")
    if conf["count"] == 0:
        _dump([], out)
        return EXIT_OK
    gamma = build(pair, args.mode)
    try:
        report = search_points(gamma.curve, conf["height"], gamma.label, conf["max_primes"])
    except FactoringLimit as exc:
        raise InputError(str(exc))
    if report.generator is None:
        print(f"verdict: {report.verdict} (height {conf['height']})", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    certs = generate_family(gamma, report.generator, conf["count"], conf["max_digits"])
    _dump([c.to_json() for c in certs], out)
    return EXIT_OK


def cmd_from_pair(args, out) -> int:
    conf = _settings(args)
    pair = _pair(args)
    gamma = build(pair, args.mode)
    if args.k <= 0 or args.l <= 0:
        raise InputError("k and l must be positive")
    if same_ratio(args.k, args.l, pair.a, pair.b):
        raise InputError(
            f"({args.k}, {args.l}) is a multiple of ({pair.a}, {pair.b}); "
            "such pairs come from torsion points and do not witness positive rank"
        )
    try:
        X = point_from_pair(gamma, args.k, args.l)
    except NotAWitness as exc:
        raise InputError(str(exc))
    result = {
        "pair": [str(pair.a), str(pair.b)],
        "mode": gamma.mode,
        "witness": [str(args.k), str(args.l)],
        "point": _point_json(X),
        "classification": str(classify(gamma.curve, X)),
    }
    if args.family:
        fam = generate_family(gamma, X, args.family, conf["max_digits"])
        result["family"] = [c.to_json() for c in fam]
    _dump(result, out)
    return EXIT_OK


def sweep_row(pair, mode: str, height: int, bound: int, count: int) -> list:
    gamma = build(pair, mode)
    row = [pair.a, pair.b, pair.c, mode]
    try:
        row.append(torsion_table(gamma).structure)
    except PythaError as exc:
        row.append(f"error:{type(exc).__name__}")
    try:
        row.append("pass" if oracle.torsion_square_audit(pair, mode).ok else "fail")
    except PythaError as exc:
        row.append(f"error:{type(exc).__name__}")
    try:
        report = search_points(gamma.curve, height, gamma.label)
        row.append(report.verdict)
        fam = generate_family(gamma, report.generator, count) if report.generator else []
        row.append(len(fam))
    except PythaError as exc:
        row += [f"error:{type(exc).__name__}", 0]
    row.append(len(oracle.brute_force_witness(pair, mode, bound)))
    return row


def _sweep_job(job):
    return sweep_row(*job)


def sweep_csv(max_hyp: int, modes, height: int, bound: int, count: int, workers: int = 1) -> str:
    jobs = [(p, m, height, bound, count) for p in primitive_pairs(max_hyp) for m in modes]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_sweep_job, jobs))
    else:
        rows = [_sweep_job(j) for j in jobs]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_sweep(args, out) -> int:
    conf = _settings(args)
    if args.max_hyp < 1 or conf["height"] < 1 or conf["bound"] < 2:
        raise InputError("max-hyp and height must be >= 1, bound >= 2")
    modes = ("24", "28") if args.mode == "both" else (args.mode,)
    text = sweep_csv(args.max_hyp, modes, conf["height"], conf["bound"],
                     conf["count"], conf["workers"])
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def load_certificates(path: str) -> list[dict]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except ValueError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}")
    if isinstance(data, dict) and "family" in data:
        data = data["family"]
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not all(isinstance(c, dict) for c in data):
        raise InputError(f"{path} does not hold certificate objects")
    return data


def cmd_verify(args, out) -> int:
    certs = load_certificates(args.path)
    failed = 0
    for i, cert in enumerate(certs):
        problems = verify_certificate(cert)
        if problems:
            failed += 1
            out.write(f"certificate {i}: FAIL: {'; '.join(problems)}\n")
        else:
            out.write(f"certificate {i}: ok\n")
    out.write(f"{len(certs) - failed}/{len(certs)} certificates verified\n")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pythapair",
        description="Pythagorean pairs, their elliptic curves, and witness certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p, with_mode=True):
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        if with_mode:
            p.add_argument("--mode", choices=["24", "28"], default="28")
        p.add_argument("--config", help="JSON file with default settings")

    p = sub.add_parser("analyze", help="curve, torsion table and square audit")
    pair_args(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("witness", help="search for a generator and emit certificates")
    pair_args(p)
    p.add_argument("--height", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--max-primes", dest="max_primes", type=int)
    p.add_argument("--max-digits", dest="max_digits", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("from-pair", help="lift a witness (k, l) to a curve point")
    pair_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--family", type=int, default=0, help="also emit this many certificates")
    p.add_argument("--max-digits", dest="max_digits", type=int)
    p.set_defaults(func=cmd_from_pair)

    p = sub.add_parser("sweep", help="CSV summary over primitive pairs")
    p.add_argument("--max-hyp", dest="max_hyp", type=int, required=True)
    p.add_argument("--mode", choices=["24", "28", "both"], default="both")
    p.add_argument("--height", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--output", help="write CSV here instead of stdout")
    p.add_argument("--config", help="JSON file with default settings")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="re-check certificates in a JSON file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
