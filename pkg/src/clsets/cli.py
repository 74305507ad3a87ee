"""Command-line front end emitting deterministic JSON.

Exit codes: 0 property holds, 1 property fails, 2 input or resource error,
3 the characterizations disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .classify import classify
from .clkernel import Family, anti_pencil, full_check, point_pencil
from .errors import DomainError, InconsistencyError, ResourceError
from .exactla import ExactVector
from .setcore import KSubset, UniformPartition, count_partitions, partition_masks, MAX_N
from .spectral import DEFAULT_MAX_SIZE, predicted_spectrum, verify_spectrum

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3

# integers beyond double precision are written as decimal strings
_SAFE = 1 << 53


def num(v: int):
    v = int(v)
    return v if -_SAFE < v < _SAFE else str(v)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit(obj, out) -> None:
    out.write(dumps(obj) + "\n")


def _error(kind: str, message: str, out) -> int:
    _emit({"error": {"type": kind, "message": message}}, out)
    return EXIT_INPUT


def parse_family_document(doc) -> Family:
    """Validate a ``{"n", "k", "sets"}`` document and build the family."""
    if not isinstance(doc, dict):
        raise DomainError("document must be a JSON object")
    missing = {"n", "k", "sets"} - doc.keys()
    if missing:
        raise DomainError(f"missing fields: {sorted(missing)}")
    n, k, sets = doc["n"], doc["k"], doc["sets"]
    for name, v in (("n", n), ("k", k)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"{name} must be an integer")
    if not 1 <= k <= n <= MAX_N:
        raise DomainError(f"need 1 <= k <= n <= {MAX_N}, got n={n}, k={k}")
    if not isinstance(sets, list):
        raise DomainError("sets must be a list")
    for i, s in enumerate(sets):
        if not isinstance(s, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in s):
            raise DomainError(f"sets[{i}] must be a list of integers")
        if len(s) != k:
            raise DomainError(f"sets[{i}] has {len(s)} elements, expected {k}")
        if any(a >= b for a, b in zip(s, s[1:])):
            raise DomainError(f"sets[{i}] is not strictly increasing")
        if s and not (0 <= s[0] and s[-1] < n):
            raise DomainError(f"sets[{i}] has elements outside [0, {n})")
    return Family.from_subsets(n, k, sets)


def family_document(f: Family) -> dict:
    return {"n": f.n, "k": f.k, "sets": sorted(f.as_lists())}


def _witness_json(w) -> Optional[dict]:
    if isinstance(w, UniformPartition):
        return {"kind": "partition", "value": w.as_lists()}
    if isinstance(w, KSubset):
        return {"kind": "k-subset", "value": list(w.elements)}
    if isinstance(w, ExactVector):
        return {"kind": "kernel-vector", "value": [num(x) for x in w]}
    return None


def cmd_check(args, out) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            doc = json.load(fh)
        f = parse_family_document(doc)
    except (OSError, json.JSONDecodeError, DomainError) as exc:
        return _error(type(exc).__name__, str(exc), out)
    rep = full_check(f)
    result = {
        "n": f.n,
        "k": f.k,
        "size": num(rep.size),
        "parameter": {"num": num(rep.parameter.numerator), "den": num(rep.parameter.denominator)},
        "verdicts": rep.verdicts,
        "consistent": rep.consistent,
    }
    w = _witness_json(rep.witness)
    if w is not None:
        result["witness"] = w
    if rep.notes:
        result["notes"] = rep.notes
    _emit(result, out)
    if not rep.consistent:
        return EXIT_INCONSISTENT
    return EXIT_OK if rep.all_true else EXIT_FAIL


def cmd_partitions(args, out) -> int:
    try:
        expected = count_partitions(args.n, args.k)
    except DomainError as exc:
        return _error(type(exc).__name__, str(exc), out)
    if args.count_only:
        out.write(f"{expected}\n")
        return EXIT_OK
    total = 0
    for masks in partition_masks(args.n, args.k):
        blocks = [[e for e in range(args.n) if m >> e & 1] for m in masks]
        out.write(json.dumps(blocks, separators=(",", ":")) + "\n")
        total += 1
    if total != expected:
        sys.stderr.write(f"streamed {total} partitions, formula gives {expected}\n")
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    try:
        pred = predicted_spectrum(args.n, args.k)
        rep = verify_spectrum(args.n, args.k, max_size=args.max_size)
    except (DomainError, ResourceError) as exc:
        return _error(type(exc).__name__, str(exc), out)
    _emit(
        {
            "n": args.n,
            "k": args.k,
            "predicted": [[num(lam), num(m)] for lam, m in pred.pairs],
            "verified": {
                "annihilation": rep.annihilation,
                "ranks": [
                    {"eigenvalue": num(r["eigenvalue"]), "rank": num(r["rank"]), "expected": num(r["expected"])}
                    for r in rep.ranks
                ],
                "traces": rep.traces,
            },
            "passed": rep.passed,
        },
        out,
    )
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_classify(args, out) -> int:
    try:
        res = classify(args.n, args.k, up_to_iso=args.up_to_iso, threads=args.threads)
    except (DomainError, ResourceError) as exc:
        return _error(type(exc).__name__, str(exc), out)
    except InconsistencyError as exc:
        _emit({"error": {"type": "InconsistencyError", "message": str(exc)}}, out)
        return EXIT_INCONSISTENT
    result = {
        "n": args.n,
        "k": args.k,
        "counts_by_parameter": {str(x): c for x, c in res.counts_by_parameter.items()},
        "total": res.total,
    }
    if res.matches_theorem is not None:
        result["matches_theorem"] = res.matches_theorem
    if res.orbits_by_parameter is not None:
        result["orbits"] = {
            str(x): {
                "count": len(reps),
                "representatives": [
                    {"canonical_bits": c.canonical_bits, "orbit_size": c.orbit_size} for c in reps
                ],
            }
            for x, reps in res.orbits_by_parameter.items()
        }
    _emit(result, out)
    return EXIT_FAIL if res.matches_theorem is False else EXIT_OK


_GENERATORS = {
    "pencil": lambda n, k, p: point_pencil(n, k, p),
    "anti": lambda n, k, p: anti_pencil(n, k, p),
    "empty": lambda n, k, p: Family.empty(n, k),
    "full": lambda n, k, p: Family.full(n, k),
}


def cmd_generate(args, out) -> int:
    try:
        f = _GENERATORS[args.kind](args.n, args.k, args.p)
    except DomainError as exc:
        return _error(type(exc).__name__, str(exc), out)
    out.write(json.dumps(family_document(f)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clsets", description="Cameron-Liebler classes of k-subsets"
    )
    parser.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every characterization on a family file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("partitions", help="list or count k-uniform partitions")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("spectrum", help="verify the Kneser matrix spectrum exactly")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="enumerate all classes by brute force")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--up-to-iso", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="write an example family document")
    p.add_argument("kind", choices=sorted(_GENERATORS))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-p", type=int, default=0, help="point for pencil/anti (default 0)")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
