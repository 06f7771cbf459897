"""Command-line front end.

Exit codes: 0 success (and agreement for cross-checked runs), 1 verified
disagreement between routes, 2 usage or input error, 3 resource limit.
All output is deterministic for a fixed invocation; JSON payloads carry
a ``schema`` version key.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import characters, enumeration, kron_ops, symfunc, tableaux
from .partitions import parse_partition, partitions_of, weight

SCHEMA = "kronlab/1"

DEFAULT_MAX_N = 8
DEFAULT_MAX_K = 10
DEFAULT_LIST_LIMIT = 100000


def _emit(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}))


def _schur_json(f: symfunc.SchurSum) -> dict:
    return symfunc.schur_sum_to_json(f)


def _default_format() -> str:
    fmt = os.environ.get("KRONLAB_FORMAT", "json")
    return fmt if fmt in ("json", "ascii") else "json"


def cmd_kron(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if weight(lam) != weight(mu):
        print(f"error: weight mismatch {lam} vs {mu}", file=sys.stderr)
        return 2
    results = {}
    if args.method in ("operator", "both"):
        results["operator"] = kron_ops.kron_product_via_operator(lam, mu)
    if args.method in ("character", "both"):
        results["character"] = characters.kron_product_via_characters(lam, mu)
    if args.method == "both":
        if results["operator"] != results["character"]:
            _emit(
                {
                    "disagreement": True,
                    "operator": _schur_json(results["operator"]),
                    "character": _schur_json(results["character"]),
                }
            )
            return 1
    _emit(_schur_json(next(iter(results.values()))))
    return 0


def cmd_power(args) -> int:
    n, k = args.n, args.k
    if n < 2:
        print("error: n must be at least 2", file=sys.stderr)
        return 2
    if n > args.max_n or k > args.max_k:
        print(
            f"error: resource limit (n <= {args.max_n}, k <= {args.max_k}); "
            "raise --max-n/--max-k to proceed",
            file=sys.stderr,
        )
        return 3
    routes = {}
    wanted = {
        "operator": args.method in ("operator", "both", "all"),
        "character": args.method in ("character", "both", "all"),
        "tableaux": args.method in ("tableaux", "all"),
    }
    if wanted["operator"]:
        routes["operator"] = kron_ops.kron_power_nm1(n, k)
    if wanted["character"]:
        routes["character"] = characters.kron_power_oracle(n, k)
    if wanted["tableaux"]:
        counts = {
            lam: tableaux.count_kronecker_tableaux((n,), lam, k)
            for lam in partitions_of(n)
        }
        routes["tableaux"] = symfunc.SchurSum(n, counts)
    values = list(routes.values())
    if any(v != values[0] for v in values[1:]):
        _emit(
            {
                "disagreement": True,
                **{name: _schur_json(v) for name, v in routes.items()},
            }
        )
        return 1
    _emit(_schur_json(values[0]))
    return 0


def cmd_chartable(args) -> int:
    table = characters.character_table(args.n)
    if args.format == "ascii":
        print(table.ascii_render())
    else:
        _emit(
            {
                "n": table.n,
                "partitions": [list(p) for p in table.partitions],
                "values": [[str(v) for v in row] for row in table.values],
            }
        )
    return 0


def cmd_tableaux(args) -> int:
    mu = parse_partition(args.mu)
    lam = parse_partition(args.lam)
    if weight(mu) != weight(lam):
        print(f"error: weight mismatch {mu} vs {lam}", file=sys.stderr)
        return 2
    if args.limit <= 0:
        print("error: --limit must be positive", file=sys.stderr)
        return 2
    if args.action == "count":
        print(tableaux.count_kronecker_tableaux(mu, lam, args.k))
        return 0
    try:
        walks = tableaux.list_kronecker_tableaux(mu, lam, args.k, limit=args.limit)
    except tableaux.EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for walk in walks:
        print(tableaux.format_walk(walk))
    return 0


def cmd_bijection(args) -> int:
    if args.walkfile in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.walkfile, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    status = 0
    for line in lines:
        if not line.strip():
            continue
        try:
            walk = tableaux.parse_walk(line)
            n = weight(walk.initial)
            if walk.initial != (n,):
                raise ValueError("bijection requires a one-row initial shape")
            k = walk.length
            T, pi = tableaux.to_pair(walk, n, k, require_regime=False)
        except (ValueError, tableaux.BijectionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(
            {
                "n": n,
                "k": k,
                "shape": list(T.shape),
                "rows": [list(r) for r in T.rows],
                "cycles": [list(c) for c in pi.cycles],
                "regime_ok": tableaux.bijection_regime_ok(n, k, walk.final),
            }
        )
    return status


def cmd_formula(args) -> int:
    lam = parse_partition(args.lam)
    try:
        value = enumeration.multiplicity_formula(args.n, args.k, lam)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(
        {
            "n": args.n,
            "k": args.k,
            "lambda": list(lam),
            "multiplicity": str(value),
        }
    )
    return 0


def cmd_egf(args) -> int:
    lb = parse_partition(args.lambda_bar)
    if args.order < weight(lb):
        print(
            f"error: --order must be at least the weight {weight(lb)} of {lb}",
            file=sys.stderr,
        )
        return 2
    if args.check:
        rows = enumeration.egf_check(lb, args.order)
        _emit({"lambda_bar": list(lb), "order": args.order, "rows": rows})
        return 0 if all(r["ok"] for r in rows) else 1
    series = enumeration.egf_rhs(lb, args.order)
    _emit(
        {
            "lambda_bar": list(lb),
            "order": args.order,
            "coefficients": [str(c) for c in series.coeffs],
        }
    )
    return 0


def cmd_verify(args) -> int:
    if args.n > args.max_n or args.k > args.max_k:
        print(
            f"error: resource limit (n <= {args.max_n}, k <= {args.max_k}); "
            "raise --max-n/--max-k to proceed",
            file=sys.stderr,
        )
        return 3
    rows = []
    all_ok = True
    for n in range(2, args.n + 1):
        for k in range(0, args.k + 1):
            op = kron_ops.kron_power_nm1(n, k)
            ch = characters.kron_power_oracle(n, k)
            ok = op == ch
            for lam in partitions_of(n):
                if tableaux.count_kronecker_tableaux((n,), lam, k) != op.coefficient(lam):
                    ok = False
            rows.append({"n": n, "k": k, "ok": ok})
            all_ok = all_ok and ok
    _emit({"nmax": args.n, "kmax": args.k, "rows": rows, "ok": all_ok})
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronlab",
        description=(
            "Exact Kronecker products and powers of symmetric-group "
            "characters by independent routes, with cross-validation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", help="Kronecker product of two irreducibles")
    p.add_argument("lam", metavar="lambda", help="partition, e.g. [3,1]")
    p.add_argument("mu", help="partition of the same weight")
    p.add_argument(
        "--method",
        choices=["operator", "character", "both"],
        default="both",
    )
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("power", help="Kronecker power of the (n-1,1) irreducible")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument(
        "--method",
        choices=["operator", "character", "tableaux", "both", "all"],
        default="both",
    )
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("chartable", help="character table of the symmetric group")
    p.add_argument("n", type=int)
    p.add_argument(
        "--format", choices=["json", "ascii"], default=_default_format()
    )
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("tableaux", help="count or list corner-move walks")
    p.add_argument("action", choices=["count", "list"])
    p.add_argument("mu", help="initial shape, e.g. [5]")
    p.add_argument("lam", metavar="lambda", help="final shape")
    p.add_argument("k", type=int)
    p.add_argument("--limit", type=int, default=DEFAULT_LIST_LIMIT)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser(
        "bijection",
        help="map walks (one per line; file or stdin) to (tableau, permutation)",
    )
    p.add_argument("walkfile", nargs="?", default=None)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("formula", help="closed-form multiplicity, in regime")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", metavar="lambda")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("egf", help="exact truncated generating function")
    p.add_argument("lambda_bar")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_egf)

    p = sub.add_parser("verify", help="three-route agreement sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
