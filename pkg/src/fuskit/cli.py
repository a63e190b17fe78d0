"""Command-line front end.

Exit codes: 0 success, 1 a verification/validation check failed,
2 usage or input-parsing errors.  JSON is the contract surface; the
text format is a human-readable rendering of the same data.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    category_type,
    cd_set,
    check_rank_dim,
    gng_type,
    is_gng,
    is_gty,
    is_near_group,
    cosine_square_solutions,
)
from .core import FusionRing, fpdim_ring, fpdim_simple, validate
from .errors import FuskitError, PointedInput
from .families import FAMILY_IDS, build_family, deligne_product
from .structure import (
    adjoint_subring,
    graded_component_dims,
    invertibles,
    pointed_subring,
    subring_closure,
    universal_grading,
)
from .verify import CHECKS, run_verify


class UsageError(Exception):
    pass


def _read_ring(path: str) -> FusionRing:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return FusionRing.from_json_str(text)
    except (json.JSONDecodeError, KeyError, ValueError, IndexError) as exc:
        raise UsageError(f"malformed ring file {path}: {exc}") from exc


def _emit(payload, args, as_text):
    if getattr(args, "format", "json") == "text":
        out = as_text(payload)
    else:
        out = json.dumps(payload, indent=2)
    stream = open(args.output, "w") if getattr(args, "output", None) else sys.stdout
    try:
        stream.write(out if out.endswith("\n") else out + "\n")
    finally:
        if stream is not sys.stdout:
            stream.close()


def _kv_text(d: dict, indent: str = "") -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_kv_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    ring = _read_ring(args.ring)
    report = validate(ring)
    payload = {"name": ring.name, **report.to_json()}
    _emit(payload, args, _kv_text)
    return 0 if report.passed else 1


def cmd_info(args) -> int:
    ring = _read_ring(args.ring)
    report = validate(ring)
    if not report.passed:
        raise UsageError(f"ring {ring.name!r} fails validation; run `validate`")
    group, _ = invertibles(ring)
    payload = {
        "name": ring.name,
        "rank": ring.rank,
        "basis": list(ring.basis),
        "unit": ring.basis[ring.unit],
        "fpdim": fpdim_ring(ring).to_json(),
        "dims": {ring.basis[i]: fpdim_simple(ring, i).to_json() for i in range(ring.rank)},
        "invertibles": list(group.elements),
        "pointed": group.order == ring.rank,
    }
    _emit(payload, args, _kv_text)
    return 0


def cmd_classify(args) -> int:
    ring = _read_ring(args.ring)
    report = validate(ring)
    if not report.passed:
        raise UsageError(f"ring {ring.name!r} fails validation; run `validate`")
    payload = {"name": ring.name, "rank": ring.rank}
    try:
        gng = is_gng(ring)
    except PointedInput:
        payload["pointed"] = True
        payload["is_gng"] = None
        _emit(payload, args, _kv_text)
        return 0
    payload["pointed"] = False
    payload["is_gng"] = gng
    payload["is_near_group"] = is_near_group(ring)
    payload["cd"] = cd_set(ring).to_json()
    payload["category_type"] = [[d.to_json(), c] for d, c in category_type(ring)]
    if gng:
        t = gng_type(ring)
        payload["type"] = t.to_json_dict()
        payload["is_gty"] = is_gty(ring)
        payload["rank_dimension"] = check_rank_dim(ring, t)["pass"]
    _emit(payload, args, _kv_text)
    return 0


def cmd_grading(args) -> int:
    ring = _read_ring(args.ring)
    report = validate(ring)
    if not report.passed:
        raise UsageError(f"ring {ring.name!r} fails validation; run `validate`")
    grading = universal_grading(ring)
    payload = grading.to_json_dict()
    payload["component_dims"] = {
        label: v.to_json() for label, v in sorted(graded_component_dims(grading).items())
    }
    _emit(payload, args, _kv_text)
    return 0


def cmd_construct(args) -> int:
    spec = args.family.strip()
    if spec.startswith("{"):
        try:
            spec_dict = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed family spec: {exc}") from exc
    else:
        spec_dict = {"family": spec}
    try:
        ring = build_family(spec_dict)
    except (KeyError, ValueError, FuskitError) as exc:
        raise UsageError(f"cannot build family: {exc}") from exc
    out = ring.to_json_str()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_product(args) -> int:
    r1 = _read_ring(args.ring1)
    r2 = _read_ring(args.ring2)
    ring = deligne_product(r1, r2)
    out = ring.to_json_str()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_factorize(args) -> int:
    from .classify import exact_factorization

    ring = _read_ring(args.ring)
    report = validate(ring)
    if not report.passed:
        raise UsageError(f"ring {ring.name!r} fails validation; run `validate`")
    if args.left:
        left = subring_closure(ring, args.left.split(","))
    else:
        left = adjoint_subring(ring)
    if args.right:
        right = subring_closure(ring, args.right.split(","))
    else:
        right = pointed_subring(ring)
    ok = exact_factorization(ring, left, right)
    payload = {
        "name": ring.name,
        "left": list(left.labels()),
        "right": list(right.labels()),
        "exact_factorization": ok,
    }
    _emit(payload, args, _kv_text)
    return 0 if ok else 1


def cmd_solve_lemma41(args) -> int:
    pairs, triples = cosine_square_solutions(args.bound)
    payload = {"pairs": [list(p) for p in pairs], "triples": [list(t) for t in triples]}
    _emit(payload, args, _kv_text)
    return 0


def cmd_verify(args) -> int:
    try:
        result = run_verify(only=args.only, jobs=args.jobs)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc

    def as_text(payload) -> str:
        lines = []
        for c in payload["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(f"{status:4}  {c['check']}")
            if not c["pass"] and c["witness"] is not None:
                lines.append(f"      witness: {json.dumps(c['witness'])}")
        lines.append(
            f"{payload['counts']['total'] - payload['counts']['failed']}"
            f"/{payload['counts']['total']} checks passed"
        )
        return "\n".join(lines)

    _emit(result, args, as_text)
    return 0 if result["pass"] else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuskit",
        description="Exact computational toolkit for fusion rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", help="write the report to a file")

    p = sub.add_parser("validate", help="check the axioms of a ring file")
    p.add_argument("ring", help="ring JSON path, or - for stdin")
    add_format(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="basis, dimensions and invertibles")
    p.add_argument("ring")
    add_format(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", help="near-group detection and typing")
    p.add_argument("ring")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("grading", help="universal grading and component dims")
    p.add_argument("ring")
    add_format(p)
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("construct", help="build a named family ring")
    p.add_argument(
        "--family",
        required=True,
        help=f"family id ({', '.join(FAMILY_IDS)}) or a JSON family spec",
    )
    p.add_argument("--output", help="write the ring to a file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("product", help="componentwise product of two rings")
    p.add_argument("ring1")
    p.add_argument("ring2")
    p.add_argument("--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("factorize", help="test an exact factorization")
    p.add_argument("ring")
    p.add_argument("--left", help="comma-separated generating labels (default: adjoint)")
    p.add_argument("--right", help="comma-separated generating labels (default: pointed)")
    add_format(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser(
        "solve-lemma41",
        help="integer solutions of the two cosine-square sum equations",
    )
    p.add_argument("--bound", type=int, default=10)
    add_format(p)
    p.set_defaults(func=cmd_solve_lemma41)

    p = sub.add_parser("verify", help="run the theorem-verification suite")
    p.add_argument("--only", help=f"run one check ({', '.join(sorted(CHECKS))})")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fuskit: {exc}", file=sys.stderr)
        return 2
    except FuskitError as exc:
        print(f"fuskit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"fuskit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
