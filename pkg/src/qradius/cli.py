"""Command-line interface: ``qradius {radius,estimate,range,profile,verify}``.

Exit codes: 0 success, 1 property violation (``verify``), 2 usage or parse
error, 3 degenerate input (zero vector where a nonzero one is required).
"""
from __future__ import annotations

import argparse
import sys

from . import rankone as ro
from .core import GramWeight, random_orthonormal_pairs, substream
from .errors import DegenerateInputError, QRadiusError
from .formats import FormatError, dumps, fmt_real, load_matrix, load_vector, vector_doc
from .oracle import OracleConfig, cloud_values, estimate_radius
from .verify import SUITES

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

RANGE_CHUNK = 50_000


class UsageError(Exception):
    pass


def _parse_q_complex(text):
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise UsageError(f"--q must be 're' or 're,im', got {text!r}")
    try:
        vals = [float(v) for v in parts]
    except ValueError:
        raise UsageError(f"--q must be numeric, got {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _gram_from_file(path):
    G, inner_gram = load_matrix(path)
    # a MatrixFile passed as --gram may carry the weight in "rows" or in "gram"
    return GramWeight(inner_gram if inner_gram is not None else G)


def _matrix_in_standard_coords(path):
    A, G = load_matrix(path)
    g = GramWeight(G) if G is not None else GramWeight.identity(A.shape[0])
    return g.to_standard(A), g


def cmd_radius(args, out):
    a, b = load_vector(args.a), load_vector(args.b)
    g = _gram_from_file(args.gram) if args.gram else None
    p = ro.RankOnePair(a, b, g)
    q = args.q
    report = {"q": q, "radius": ro.evaluate_radius(p, q)}
    if not args.radius_only:
        report["lambda_q"] = ro.lambda_factor(p, q)
        report["q_star"] = ro.q_star(p)
    if args.witness:
        y, t = ro.witness_vectors(p, q)
        report["witness_y"] = vector_doc(y)
        report["witness_t"] = vector_doc(t)
    if args.check_oracle is not None:
        cfg = OracleConfig(restarts=args.check_oracle, seed=args.seed, workers=args.workers)
        est = estimate_radius(p.g.to_standard(ro.as_matrix(p)), q, cfg)
        report["oracle_estimate"] = est.estimate
        report["oracle_gap"] = report["radius"] - est.estimate
    out.write(dumps(report) + "\n")
    return EXIT_OK


def cmd_estimate(args, out):
    A, g = _matrix_in_standard_coords(args.matrix)
    cfg = OracleConfig(restarts=args.restarts, seed=args.seed, workers=args.workers,
                       samples_per_restart=args.samples_per_restart)
    est = estimate_radius(A, args.q, cfg)
    doc = {
        "estimate": est.estimate,
        "witness_y": vector_doc(g.from_coords(est.witness_y)),
        "witness_t": vector_doc(g.from_coords(est.witness_t)),
    }
    out.write(dumps(doc) + "\n")
    return EXIT_OK


def cmd_range(args, out):
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    q = _parse_q_complex(args.q)
    A, _ = _matrix_in_standard_coords(args.matrix)
    n = A.shape[0]
    rng = substream(args.seed, 0)
    lines = ["re,im"]
    remaining = args.samples
    while remaining:
        m = min(remaining, RANGE_CHUNK)
        Y, T = random_orthonormal_pairs(m, n, rng)
        vals = cloud_values(A, q, Y, T)
        lines.extend(f"{fmt_real(v.real)},{fmt_real(v.imag)}" for v in vals)
        remaining -= m
    _write_text(args.out, out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_profile(args, out):
    if args.grid < 3:
        raise UsageError("--grid must be >= 3")
    p = ro.RankOnePair(load_vector(args.a), load_vector(args.b))
    if p.is_zero:
        raise DegenerateInputError("the profile needs nonzero a and b")
    lines = ["q,f,f1,f2"]
    K = args.grid
    for k in range(K):
        q = k / (K - 1)
        interior = 0 < k < K - 1
        f, f1, f2 = ro.profile(p, q, derivatives=interior)
        d = f"{fmt_real(f1)},{fmt_real(f2)}" if interior else ","
        lines.append(f"{fmt_real(q)},{fmt_real(f)},{d}")
    _write_text(args.out, out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be >= 1")
    kwargs = {}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    fn = SUITES[args.suite]
    if args.dim is not None:
        kwargs["dim"] = args.dim
    report = fn(seed=args.seed, workers=args.workers, **kwargs)
    out.write(dumps(report.to_dict(timing=args.timing)) + "\n")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _write_text(path, out, text):
    if path in (None, "-"):
        out.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def build_parser():
    parser = argparse.ArgumentParser(prog="qradius", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("radius", help="closed-form q-numerical radius of a (x) b")
    r.add_argument("--a", required=True, help="VectorFile for a")
    r.add_argument("--b", required=True, help="VectorFile for b")
    r.add_argument("--q", type=float, required=True)
    r.add_argument("--gram", help="MatrixFile holding a Gram weight")
    r.add_argument("--witness", action="store_true", help="include extremal vectors y, t")
    r.add_argument("--check-oracle", type=int, metavar="N", help="compare with the oracle at N restarts")
    r.add_argument("--radius-only", action="store_true", help="omit lambda_q and q_star (allows zero vectors)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--workers", type=int, default=1)
    r.set_defaults(func=cmd_radius)

    e = sub.add_parser("estimate", help="oracle estimate of the q-numerical radius of a matrix")
    e.add_argument("--matrix", required=True)
    e.add_argument("--q", type=float, required=True)
    e.add_argument("--restarts", type=int, default=32)
    e.add_argument("--samples-per-restart", type=int, default=1)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_estimate)

    g = sub.add_parser("range", help="random points of the q-numerical range as CSV")
    g.add_argument("--matrix", required=True)
    g.add_argument("--q", required=True, help="'re' or 're,im'")
    g.add_argument("--samples", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="CSV path (default stdout)")
    g.set_defaults(func=cmd_range)

    f = sub.add_parser("profile", help="q -> w_q(a (x) b) with derivatives as CSV")
    f.add_argument("--a", required=True)
    f.add_argument("--b", required=True)
    f.add_argument("--grid", type=int, default=101)
    f.add_argument("--out", help="CSV path (default stdout)")
    f.set_defaults(func=cmd_profile)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", required=True, help=f"one of: {', '.join(SUITES)}")
    v.add_argument("--trials", type=int)
    v.add_argument("--dim", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include elapsed seconds (breaks byte-identical output)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DegenerateInputError as exc:
        print(f"qradius: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, FormatError, QRadiusError) as exc:
        print(f"qradius: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
