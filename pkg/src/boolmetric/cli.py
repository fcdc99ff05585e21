"""Batch front end: ``boolmetric <command> --input job.json``.

Every report is one JSON document on stdout (``--pretty`` renders text
instead).  Exit status: 0 on success, 1 when ``verify`` finds a failing
check, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle, polynomials, span
from .errors import BoolMetricError, LimitExceededError
from .metric import Point, PointedSpace
from .polynomials import Polynomial
from .serialize import (
    ParseError,
    invariants_to_json,
    loads,
    object_from_json,
    point_from_json,
    point_to_json,
    poly_to_json,
    refmap_to_json,
    space_to_json,
    spec_from_json,
)

class Job:
    """A parsed job file: one ring plus named objects."""

    def __init__(self, data: dict):
        if not isinstance(data, dict):
            raise ParseError("a job file must be a JSON object")
        if "ring" not in data:
            raise ParseError('missing "ring"')
        self.raw = data
        self.spec = spec_from_json(data["ring"])
        self.n = int(data.get("n", 1))
        objs = data.get("objects", {})
        if not isinstance(objs, dict):
            raise ParseError("objects must be a name -> object mapping", "objects")
        self.objects = {name: object_from_json(v, self.spec, self.n, f"objects.{name}") for name, v in objs.items()}

    def named(self, key: str, kind) -> list[tuple[str, object]]:
        names = self.raw.get(key)
        if names is None:
            return [(k, v) for k, v in self.objects.items() if isinstance(v, kind)]
        out = []
        for name in names:
            if name not in self.objects:
                raise ParseError(f"unknown object {name!r}", key)
            if not isinstance(self.objects[name], kind):
                raise ParseError(f"{name!r} is not a {kind.__name__}", key)
            out.append((name, self.objects[name]))
        return out


def _members(space: PointedSpace, limit: int):
    try:
        return [point_to_json(x) for x in oracle.enumerate_members(space, limit)]
    except LimitExceededError:
        return None


def cmd_classify(job: Job, args) -> dict:
    spaces = job.named("spaces", PointedSpace)
    if not 1 <= len(spaces) <= 2:
        raise ParseError(f"classify takes one or two spaces, got {len(spaces)}", "spaces")
    report = {"ring": job.spec.to_dict(), "spaces": {name: {"alphas": invariants_to_json(span.alpha_invariants(X))} for name, X in spaces}}
    if len(spaces) == 2:
        (_, X), (_, Y) = spaces
        same, f = span.classify_isometric(X, Y)
        report["isometric"] = same
        if f is not None:
            report["mapping"] = refmap_to_json(f)
    return report


def cmd_solve(job: Job, args) -> dict:
    polys = [q for _, q in job.named("polynomials", Polynomial)]
    n = polys[0].n_vars if polys else job.n
    V = polynomials.space_from_polys(polys, job.spec, n)
    report = {"ring": job.spec.to_dict(), "n": n, "variety": space_to_json(V)}
    members = _members(V, args.limit)
    if members is not None:
        report["members"] = members
    return report


def _table_from_job(job: Job) -> tuple[dict, int]:
    raw = job.raw
    if "table" in raw:
        table = {}
        for i, pair in enumerate(raw["table"]):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ParseError("table rows are [point, value] pairs", f"table[{i}]")
            x = point_from_json(pair[0], job.spec, f"table[{i}][0]")
            table[x] = point_from_json(pair[1], job.spec, f"table[{i}][1]")
        n = next(iter(table)).n if table else job.n
        return table, n
    if "values" in raw:
        # values listed in the lexicographic order of A^n; bare residues mean constants
        pts = oracle.enumerate_points(job.spec, job.n)
        vals = raw["values"]
        if len(vals) != len(pts):
            raise ParseError(f"expected {len(pts)} values, got {len(vals)}", "values")
        table = {}
        for i, (x, v) in enumerate(zip(pts, vals)):
            if isinstance(v, int):
                table[x] = Point.const(job.spec, [v])
            elif v and isinstance(v[0], int):
                table[x] = point_from_json([v], job.spec, f"values[{i}]")
            else:
                table[x] = point_from_json(v, job.spec, f"values[{i}]")
        return table, job.n
    raise ParseError('interpolate needs "table" or "values"')


def cmd_interpolate(job: Job, args) -> dict:
    table, n = _table_from_job(job)
    polys = polynomials.interp_multi(table, job.spec, n)
    return {"ring": job.spec.to_dict(), "n": n, "polynomials": [poly_to_json(q) for q in polys], "text": [repr(q) for q in polys]}


def _space_report(job: Job, build) -> dict:
    out = {}
    for name, X in job.named("spaces", PointedSpace):
        ref = build(X)
        out[name] = {"base": point_to_json(X.base), "elements": [point_to_json(x) for x in ref.elements], "norms": [a.to_list() for a in ref.norms]}
    return {"ring": job.spec.to_dict(), "spaces": out}


def cmd_orthogonalize(job: Job, args) -> dict:
    return _space_report(job, span.orthogonalize)


def cmd_base(job: Job, args) -> dict:
    report = _space_report(job, span.build_base)
    for name, X in job.named("spaces", PointedSpace):
        report["spaces"][name]["alphas"] = invariants_to_json(span.alpha_invariants(X))
    return report


def cmd_verify(job: Job | None, args) -> oracle.OracleReport:
    limit = args.limit or oracle.DEFAULT_LIMIT
    samples = args.samples
    if job is None:
        return oracle.run_envelope(limit=limit, seed=args.seed, samples=samples)
    return oracle.run_theorem_suite(job.spec, job.n, limit=limit, seed=args.seed, samples=samples)


COMMANDS = {
    "classify": cmd_classify,
    "solve": cmd_solve,
    "interpolate": cmd_interpolate,
    "orthogonalize": cmd_orthogonalize,
    "base": cmd_base,
    "verify": cmd_verify,
}


def _pretty(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(f"{pad}- {json.dumps(v)}" if _is_flat(v) else f"{pad}-\n{_pretty(v, indent + 1)}" for v in value)
    return f"{pad}{json.dumps(value)}"


def _is_flat(v) -> bool:
    return not isinstance(v, (dict, list)) or (isinstance(v, list) and all(not isinstance(x, dict) for x in v) and len(json.dumps(v)) < 80)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolmetric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", "-i", type=Path, required=name != "verify", help="job file (JSON)")
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT, help="enumeration cap")
        p.add_argument("--seed", type=int, default=0, help="sampling seed")
        if name == "verify":
            p.add_argument("--samples", type=int, default=10, help="random instances per check")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = Job(loads(args.input.read_text(encoding="utf-8"))) if args.input else None
        result = COMMANDS[args.command](job, args)
    except (BoolMetricError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    if isinstance(result, oracle.OracleReport):
        body = result.to_json()
        text = "\n".join(
            f"{'PASS' if c.passed else 'FAIL'}{' (skipped)' if c.skipped else ''} {c.name} universe={c.universe}"
            + (f" counterexample={c.counterexample}" if c.counterexample else "")
            for c in result.checks
        )
        print(text if args.pretty else json.dumps(body))
        return 0 if result.ok else 1
    print(_pretty(result) if args.pretty else json.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
