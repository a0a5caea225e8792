"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain or
computation error (bad input ranges, exhausted budgets, and the like).

Large counts are printed as decimal strings in JSON output so nothing
downstream has to parse big integers.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time

from . import verify as verify_mod
from .coefficients import (
    c_from_product,
    c_from_recurrence,
    e_from_recurrence,
    euler_seq,
    integrated_f,
)
from .codes import (
    code_of_path,
    decode_path,
    enumerate_Bj,
    from_strict_partition,
    involution,
    lemma51,
    pentagonal_codes,
    polarity,
    to_strict_partition,
    valuation,
)
from .dag import (
    build_dag,
    emit_dot,
    enumerate_terminating_paths,
    extract_from_dag,
    signed_multiplicities,
)
from .engines import EngineKind, make_engine
from .errors import PartlabError
from .oracle import p_oracle
from .rewrite import BUILTIN_NAMES, Primary, builtin_system, eval_atom
from .verify import VerifyConfig


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(str(cell) for cell in row))


# ---------------------------------------------------------------- count

COUNT_METHODS = (
    tuple(str(k) for k in EngineKind)
    + ("all", "oracle")
    + tuple(f"rewrite:{name}" for name in BUILTIN_NAMES)
)


def _cmd_count(args) -> int:
    method = args.method
    if method == "all":
        results = [(str(kind), make_engine(kind).p(args.n)) for kind in EngineKind]
    elif method == "oracle":
        results = [("oracle", p_oracle(args.n))]
    elif method.startswith("rewrite:"):
        system = builtin_system(method.removeprefix("rewrite:"))
        results = [(method, eval_atom(system, Primary(args.n)))]
    else:
        results = [(method, make_engine(method).p(args.n))]
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "counts": {name: str(value) for name, value in results},
            }
        )
    elif len(results) == 1:
        print(results[0][1])
    else:
        for name, value in results:
            print(f"{name} {value}")
    return 0


# ---------------------------------------------------------------- coeffs

_SERIES_KINDS = {
    "e": euler_seq,
    "f": integrated_f,
    "c-product": c_from_product,
    "c-recurrence": c_from_recurrence,
    "e-recurrence": e_from_recurrence,
}
_DAG_KINDS = {"dag-minpart": "minpart", "dag-maxpart": "maxpart"}
COEFF_KINDS = tuple(_SERIES_KINDS) + tuple(_DAG_KINDS)


def _cmd_coeffs(args) -> int:
    if (args.upto is None) == (args.upto_opt is None):
        print("error: give the bound exactly once, positionally or as --upto",
              file=sys.stderr)
        return 2
    upto = args.upto if args.upto is not None else args.upto_opt
    if args.kind in _SERIES_KINDS:
        seq = _SERIES_KINDS[args.kind](upto)
        indexed = list(enumerate(seq.values))
        constant = None
    else:
        system = builtin_system(_DAG_KINDS[args.kind])
        extracted = extract_from_dag(build_dag(system, upto))
        indexed = [(j, extracted.coeffs[j]) for j in range(1, upto + 1)]
        constant = extracted.constant
    if args.format == "csv":
        _emit_csv(["index", "value"], [[i, v] for i, v in indexed])
    elif args.format == "plain":
        if constant is not None:
            print(f"constant {constant}")
        for i, v in indexed:
            print(f"{i} {v}")
    else:
        payload = {"kind": args.kind, "upto": upto, "values": dict()}
        payload["values"] = {str(i): v for i, v in indexed}
        if constant is not None:
            payload["constant"] = constant
        _emit_json(payload)
    return 0


# ---------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    config = None
    if args.upto is not None:
        defaults = VerifyConfig()
        config = dataclasses.replace(
            defaults,
            oracle_limit=min(args.upto, 80),
            engine_limit=args.upto,
            series_limit=args.upto,
            dag_limit=min(args.upto, 60),
            involution_limit=args.upto,
            region_bound=args.upto,
        )
        raised = any(
            getattr(config, field) > getattr(defaults, field)
            for field in (
                "oracle_limit",
                "engine_limit",
                "series_limit",
                "dag_limit",
                "involution_limit",
                "region_bound",
            )
        )
        if raised:
            print(
                "warning: bound raised above its default; this may take a while",
                file=sys.stderr,
            )
    report = verify_mod.run(args.suite, config)
    if args.format == "json":
        _emit_json(
            {
                "suite": args.suite,
                "ok": report.ok,
                "checks": [
                    {
                        "suite": c.suite,
                        "name": c.name,
                        "passed": c.passed,
                        "detail": c.detail,
                    }
                    for c in report.checks
                ],
            }
        )
    else:
        for line in report.lines():
            print(line)
    return 0 if report.ok else 1


# ---------------------------------------------------------------- dag

def _cmd_dag(args) -> int:
    if (args.system is None) == (args.system_opt is None):
        print("error: give the system exactly once, positionally or as --system",
              file=sys.stderr)
        return 2
    if (args.n_tilde is None) == (args.n_opt is None):
        print("error: give the root index exactly once, positionally or as --n",
              file=sys.stderr)
        return 2
    system_name = args.system if args.system is not None else args.system_opt
    n_tilde = args.n_tilde if args.n_tilde is not None else args.n_opt
    if args.completion and system_name != "maxpart":
        print("error: --completion applies to the maxpart system only", file=sys.stderr)
        return 2
    system = builtin_system(system_name, completion=args.completion)
    dag = build_dag(system, n_tilde)
    if args.format == "dot":
        print(emit_dot(dag), end="")
        return 0
    extracted = extract_from_dag(dag)
    if args.format == "plain":
        mult = signed_multiplicities(dag)
        print(f"system {system.name}  n~ {n_tilde}")
        print(
            f"vertices {len(dag.vertices)}  edges {len(dag.edges)}  "
            f"constant {extracted.constant}"
        )
        for vertex in dag.vertices:
            print(f"  {vertex.dot_name()}  multiplicity {mult[vertex]}")
        return 0
    payload = {
        "system": system.name,
        "n_tilde": n_tilde,
        "vertices": [
            {
                "name": v.dot_name(),
                "constant": dag.constant_at(v),
            }
            for v in dag.vertices
        ],
        "edges": [
            {
                "source": e.source.dot_name(),
                "target": e.target.dot_name(),
                "sign": e.sign,
                "rule": e.rule,
            }
            for e in dag.edges
        ],
        "constant": extracted.constant,
        "coefficients": {
            str(j): extracted.coeffs[j] for j in range(1, n_tilde + 1)
        },
    }
    if args.paths:
        payload["paths"] = [
            {
                "vertices": [v.dot_name() for v in path.vertices],
                "sign": path.sign,
                "j": path.j,
            }
            for path in enumerate_terminating_paths(system, n_tilde)
        ]
    _emit_json(payload)
    return 0


# ---------------------------------------------------------------- involution

def _relation(code, image) -> str:
    if image == code:
        return "fixed"
    if valuation(image) != valuation(code):
        return "same-sign-pair"
    return "opposite-sign-pair"


def _cmd_involution(args) -> int:
    j = args.j
    rows = []
    for code in enumerate_Bj(j) + enumerate_Bj(j - 1):
        image = involution(j, code)
        rows.append(
            {
                "code": code.bits,
                "valuation": valuation(code),
                "polarity": polarity(code),
                "image": image.bits,
                "relation": _relation(code, image),
            }
        )
    sum_here = sum(r["polarity"] for r in rows if r["valuation"] == j)
    sum_prev = sum(r["polarity"] for r in rows if r["valuation"] == j - 1)
    if args.format == "csv":
        _emit_csv(
            ["code", "valuation", "polarity", "image", "relation"],
            [[r["code"], r["valuation"], r["polarity"], r["image"], r["relation"]] for r in rows],
        )
    elif args.format == "json":
        _emit_json(
            {
                "j": j,
                "pairs": rows,
                "signed_sum_j": sum_here,
                "signed_sum_prev": sum_prev,
                "difference": sum_here - sum_prev,
            }
        )
    else:
        for r in rows:
            sign = "+" if r["polarity"] > 0 else "-"
            print(f"{r['code']:>12}  v={r['valuation']:<3} {sign}  ->  "
                  f"{r['image']:>12}  {r['relation']}")
        print(f"signed sums: {sum_here} - {sum_prev} = {sum_here - sum_prev}")
    return 0


# ---------------------------------------------------------------- codes

def _cmd_codes_pentagonal(args) -> int:
    codes = pentagonal_codes(args.count)
    if args.format == "json":
        _emit_json(
            [
                {"code": c.bits, "valuation": valuation(c), "polarity": polarity(c)}
                for c in codes
            ]
        )
    else:
        for c in codes:
            print(f"{c.bits}  valuation {valuation(c)}  polarity {polarity(c):+d}")
    return 0


def _cmd_codes_decode(args) -> int:
    walked = decode_path(args.n_tilde, args.bits)
    report = lemma51(args.n_tilde, args.bits)
    payload = {
        "n_tilde": args.n_tilde,
        "code": args.bits,
        "valuation": valuation(args.bits),
        "polarity": polarity(args.bits),
        "walk": [[n, k] for n, k in walked.walk],
        "classification": walked.classification.value,
        "terminating": report.terminating,
        "strictly_below": report.strictly_below,
        "at_boundary": report.at_boundary,
        "leftmost_one": report.leftmost_one,
        "partition": list(to_strict_partition(args.bits)),
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        walk = " -> ".join(f"({n},{k})" for n, k in walked.walk)
        print(f"walk: {walk}")
        print(f"classification: {walked.classification.value}")
        print(
            f"valuation {payload['valuation']}  polarity {payload['polarity']:+d}  "
            f"partition {payload['partition']}"
        )
        print(
            f"terminating={report.terminating} strictly_below={report.strictly_below} "
            f"at_boundary={report.at_boundary} leftmost_one={report.leftmost_one}"
        )
    return 0


def _cmd_codes_encode(args) -> int:
    code = from_strict_partition(args.parts)
    if args.format == "json":
        _emit_json({"parts": args.parts, "code": code.bits, "valuation": valuation(code)})
    else:
        print(code.bits)
    return 0


def _cmd_codes_bj(args) -> int:
    codes = enumerate_Bj(args.j)
    if args.format == "json":
        _emit_json(
            [
                {
                    "code": c.bits,
                    "polarity": polarity(c),
                    "partition": list(to_strict_partition(c)),
                }
                for c in codes
            ]
        )
    else:
        for c in codes:
            print(f"{c.bits}  polarity {polarity(c):+d}  parts {list(to_strict_partition(c))}")
    return 0


# ---------------------------------------------------------------- bench

def _cmd_bench(args) -> int:
    if (args.max is None) == (args.upto is None):
        print("error: give the sweep bound exactly once, positionally or as --upto",
              file=sys.stderr)
        return 2
    max_n = args.max if args.max is not None else args.upto
    names = list(args.engine or [])
    for chunk in args.methods or []:
        names.extend(part.strip() for part in chunk.split(",") if part.strip())
    if not names or "all" in names:
        kinds = list(EngineKind)
    else:
        try:
            kinds = [EngineKind(name) for name in names]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    rows = []
    for kind in kinds:
        engine = make_engine(kind)
        start = time.perf_counter()
        value = 0
        for n in range(max_n + 1):
            value = engine.p(n)
        elapsed = time.perf_counter() - start
        rows.append(
            {
                "engine": str(kind),
                "n": max_n,
                "terms": engine.recurrent_terms,
                "seconds": round(elapsed, 6),
                "p": str(value),
            }
        )
    if args.format == "json":
        _emit_json(rows)
    elif args.format == "csv":
        _emit_csv(
            ["engine", "n", "terms", "seconds"],
            [[r["engine"], r["n"], r["terms"], r["seconds"]] for r in rows],
        )
    else:
        for r in rows:
            print(
                f"{r['engine']:<9} n={r['n']}  terms={r['terms']:<12} "
                f"seconds={r['seconds']:.4f}"
            )
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plab",
        description="Exact partition counting, coefficient series, rewrite-"
        "system reductions, and the path-code combinatorics behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of partitions of n")
    p.add_argument("n", type=_nonneg)
    p.add_argument(
        "--method",
        "--engine",
        dest="method",
        choices=list(COUNT_METHODS),
        default="euler",
    )
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("coeffs", help="coefficient series, exact")
    p.add_argument("kind", choices=COEFF_KINDS)
    p.add_argument("upto", nargs="?", type=_positive, default=None)
    p.add_argument("--upto", dest="upto_opt", type=_positive, default=None)
    p.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=sorted(verify_mod.SUITES) + ["all"],
    )
    p.add_argument(
        "--upto",
        type=_positive,
        default=None,
        help="override the size-indexed bounds (length-indexed ones keep "
        "their defaults)",
    )
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dag", help="reduction graph of a built-in system")
    p.add_argument("system", nargs="?", choices=sorted(BUILTIN_NAMES), default=None)
    p.add_argument(
        "--system", dest="system_opt", choices=sorted(BUILTIN_NAMES), default=None
    )
    p.add_argument("n_tilde", nargs="?", type=_nonneg, default=None)
    p.add_argument("--n", "--n-tilde", dest="n_opt", type=_nonneg, default=None)
    p.add_argument("--format", choices=["dot", "json", "plain"], default="dot")
    p.add_argument("--paths", action="store_true", help="include terminating paths (json)")
    p.add_argument(
        "--completion",
        action="store_true",
        help="maxpart only: add the optional completion rules",
    )
    p.set_defaults(func=_cmd_dag)

    p = sub.add_parser("involution", help="sign-cancelling pairing at valuation j")
    p.add_argument("j", type=_positive)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=_cmd_involution)

    p = sub.add_parser("codes", help="path-code utilities")
    codes_sub = p.add_subparsers(dest="codes_command", required=True)

    q = codes_sub.add_parser("pentagonal", help="the (100)*(1+011) language")
    q.add_argument("count", type=_nonneg)
    q.add_argument("--format", choices=["plain", "json"], default="plain")
    q.set_defaults(func=_cmd_codes_pentagonal)

    q = codes_sub.add_parser("decode", help="replay a code against n~")
    q.add_argument("n_tilde", type=_positive)
    q.add_argument("bits")
    q.add_argument("--format", choices=["plain", "json"], default="plain")
    q.set_defaults(func=_cmd_codes_decode)

    q = codes_sub.add_parser("encode", help="code of a strict partition (parts >= 2)")
    q.add_argument("parts", type=_positive, nargs="+")
    q.add_argument("--format", choices=["plain", "json"], default="plain")
    q.set_defaults(func=_cmd_codes_encode)

    q = codes_sub.add_parser("bj", help="all leading-1 codes of valuation j")
    q.add_argument("j", type=_nonneg)
    q.add_argument("--format", choices=["plain", "json"], default="plain")
    q.set_defaults(func=_cmd_codes_bj)

    p = sub.add_parser("bench", help="work counters and wall time per engine")
    p.add_argument("max", nargs="?", type=_nonneg, default=None)
    p.add_argument("--upto", dest="upto", type=_nonneg, default=None)
    p.add_argument(
        "--engine",
        action="append",
        choices=[str(k) for k in EngineKind] + ["all"],
        default=None,
    )
    p.add_argument(
        "--methods",
        action="append",
        default=None,
        metavar="NAME[,NAME...]",
        help="comma-separated engine names (same set as --engine)",
    )
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    try:
        return args.func(args)
    except (PartlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    raise SystemExit(main())
