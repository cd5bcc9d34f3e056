"""Command-line interface: build representations, run verification suites,
print characteristic roots and classify gl(m|n) highest weights.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Identical jobs produce byte-identical JSON (fixed key order, floats
rendered with %.17g); the verify report's duration_ms field is the one
documented exception.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .kernel import DimensionError, DomainError, Surd, Tolerance, to_rational
from .glrep import Representation
from .charident import KIND_A, KIND_ABAR, char_roots
from .superglmn import (
    SuperWeight,
    classify_type1_star,
    super_char_roots,
    super_vector_weight,
    vector_rep,
)
from .verify import SUITE_NAMES, run_suite

SCHEMA_VERSION = 1
_ALGEBRA_RE = re.compile(r"^gl(\d+)(?:\|(\d+))?$")


@dataclass(frozen=True)
class JobSpec:
    """One parsed CLI job; round-trips through its dict form."""

    command: str
    algebra: str
    weight: str
    kind: str | None = None
    suite: str | None = None
    tolerance: float | None = None
    output: str | None = None
    format: str = "json"

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(data: dict) -> "JobSpec":
        return JobSpec(**data)


def parse_algebra(text: str):
    """'gl3' -> ('gl', (3,)); 'gl2|1' -> ('glmn', (2, 1))."""
    match = _ALGEBRA_RE.match(text.strip())
    if not match:
        raise DomainError(f"cannot parse algebra {text!r} (expected glN or glM|N)")
    first = int(match.group(1))
    if match.group(2) is None:
        if first < 1:
            raise DomainError("algebra size must be at least 1")
        return "gl", (first,)
    second = int(match.group(2))
    if first < 1 or second < 1:
        raise DomainError("both parity blocks must be non-empty")
    return "glmn", (first, second)


def parse_weight(text: str, family: str, sizes) -> tuple:
    """Comma-separated labels; super weights accept 'a,b|c' or a flat list
    split by the algebra's even block size."""
    text = text.strip()
    if family == "gl":
        labels = tuple(to_rational(x.strip()) for x in text.split(","))
        if len(labels) != sizes[0]:
            raise DomainError(
                f"expected {sizes[0]} labels for gl{sizes[0]}, got {len(labels)}")
        return labels
    m, n = sizes
    if "|" in text:
        even_text, odd_text = text.split("|", 1)
        even = tuple(to_rational(x.strip()) for x in even_text.split(","))
        odd = tuple(to_rational(x.strip()) for x in odd_text.split(","))
    else:
        labels = [to_rational(x.strip()) for x in text.split(",")]
        if len(labels) != m + n:
            raise DomainError(
                f"expected {m + n} labels for gl{m}|{n}, got {len(labels)}")
        even, odd = tuple(labels[:m]), tuple(labels[m:])
    if len(even) != m or len(odd) != n:
        raise DomainError(
            f"weight blocks ({len(even)}|{len(odd)}) do not match gl{m}|{n}")
    return SuperWeight(even, odd)


def resolve_tolerance(value: float | None) -> Tolerance:
    if value is None:
        env = os.environ.get("CHARID_TOLERANCE")
        if env is not None:
            value = float(env)
    if value is None:
        return Tolerance()
    return Tolerance(abs_eps=value, rel_eps=value)


def render_json(value) -> str:
    """Deterministic JSON: insertion-ordered keys, floats as %.17g."""
    parts: list[str] = []

    def emit(v):
        if isinstance(v, dict):
            parts.append("{")
            for idx, (key, item) in enumerate(v.items()):
                if idx:
                    parts.append(", ")
                parts.append(json.dumps(str(key)))
                parts.append(": ")
                emit(item)
            parts.append("}")
        elif isinstance(v, (list, tuple)):
            parts.append("[")
            for idx, item in enumerate(v):
                if idx:
                    parts.append(", ")
                emit(item)
            parts.append("]")
        elif isinstance(v, (bool, np.bool_)) or v is None:
            parts.append(json.dumps(bool(v) if v is not None else None))
        elif isinstance(v, (int, np.integer)):
            parts.append(str(int(v)))
        elif isinstance(v, (float, np.floating)):
            parts.append("%.17g" % float(v))
        elif isinstance(v, Fraction):
            parts.append(json.dumps(str(v)))
        elif isinstance(v, str):
            parts.append(json.dumps(v))
        else:
            raise DomainError(f"cannot serialize {type(v).__name__}")

    emit(value)
    parts.append("\n")
    return "".join(parts)


def _write_output(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _matrix_triplets(matrix, exact: dict | None = None) -> list[list]:
    """Sparse (row, col, value) triplets; exact entries override decimals."""
    out = []
    rows, cols = matrix.shape
    for r in range(rows):
        for c in range(cols):
            if exact is not None:
                surd = exact.get((r, c))
                if surd is not None:
                    out.append([r, c, str(surd)])
                continue
            value = matrix[r, c]
            if value != 0.0:
                out.append([r, c, float(value)])
    return out


def _rational_triplets(matrix, values) -> list[list]:
    out = []
    for idx, value in enumerate(values):
        if value != 0:
            out.append([idx, idx, str(value)])
    return out


def _gl_rep_payload(spec: JobSpec, rep: Representation) -> dict:
    from .gtbasis import pattern_weight

    basis = [{"ordinal": i, "rows": [[str(x) for x in row] for row in p.rows]}
             for i, p in enumerate(rep.patterns)]
    generators = []
    for i, j in rep.generator_labels():
        mat = rep.gen(i, j)
        if i == j:
            values = [pattern_weight(p)[i - 1] for p in rep.patterns]
            triplets = _rational_triplets(mat, values)
            kind = "diagonal"
        elif abs(i - j) == 1:
            k = min(i, j)
            surds = rep.raising_surds[k]
            if j == i + 1:
                exact = surds
            else:
                exact = {(c, r): s for (r, c), s in surds.items()}
            triplets = sorted(_matrix_triplets(mat, exact=exact))
            kind = "elementary"
        else:
            triplets = _matrix_triplets(mat)
            kind = "nonelementary"
        generators.append({
            "name": f"a_{i}_{j}",
            "kind": kind,
            "rows": mat.shape[0],
            "cols": mat.shape[1],
            "triplets": triplets,
        })
    return {
        "schema": SCHEMA_VERSION,
        "command": "rep",
        "algebra": spec.algebra,
        "weight": [str(x) for x in rep.weight],
        "dimension": rep.dim,
        "basis": basis,
        "generators": generators,
    }


def _super_rep_payload(spec: JobSpec, m: int, n: int) -> dict:
    gens = vector_rep(m, n)
    generators = []
    for p, q in sorted(gens):
        mat = gens[(p, q)]
        triplets = [[r, c, int(mat[r, c])]
                    for r in range(m + n) for c in range(m + n)
                    if mat[r, c] != 0]
        generators.append({
            "name": f"a_{p}_{q}",
            "kind": "vector",
            "rows": m + n,
            "cols": m + n,
            "triplets": triplets,
        })
    return {
        "schema": SCHEMA_VERSION,
        "command": "rep",
        "algebra": spec.algebra,
        "weight": [str(x) for x in super_vector_weight(m, n).labels()],
        "dimension": m + n,
        "generators": generators,
    }


def _payload_to_csv(payload: dict) -> str:
    lines = ["generator,row,col,value"]
    for gen in payload["generators"]:
        for r, c, value in gen["triplets"]:
            rendered = "%.17g" % value if isinstance(value, float) else str(value)
            lines.append(f"{gen['name']},{r},{c},{rendered}")
    return "\n".join(lines) + "\n"


def cmd_rep(spec: JobSpec) -> int:
    family, sizes = parse_algebra(spec.algebra)
    parsed = parse_weight(spec.weight, family, sizes)
    if family == "gl":
        payload = _gl_rep_payload(spec, Representation(parsed))
    else:
        if parsed != super_vector_weight(*sizes):
            raise DomainError(
                "representation export for gl(m|n) covers the vector weight only")
        payload = _super_rep_payload(spec, *sizes)
    if spec.format == "csv":
        _write_output(_payload_to_csv(payload), spec.output)
    else:
        _write_output(render_json(payload), spec.output)
    return 0


def cmd_verify(spec: JobSpec) -> int:
    family, sizes = parse_algebra(spec.algebra)
    parsed = parse_weight(spec.weight, family, sizes)
    tol = resolve_tolerance(spec.tolerance)
    if spec.suite == "super":
        if family != "glmn":
            raise DomainError("suite super needs a gl(m|n) algebra")
        report = run_suite("super", super_mn=sizes, super_weight=parsed, tol=tol)
    else:
        if family != "gl":
            raise DomainError(f"suite {spec.suite} needs a gl(n) algebra")
        report = run_suite(spec.suite, rep=Representation(parsed), tol=tol)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "algebra": spec.algebra,
        "weight": spec.weight,
        "suite": spec.suite,
        "tolerance": {"abs_eps": tol.abs_eps, "rel_eps": tol.rel_eps},
    }
    payload.update(report.to_dict())
    _write_output(render_json(payload), spec.output)
    return 0 if report.passed else 1


def cmd_roots(spec: JobSpec) -> int:
    family, sizes = parse_algebra(spec.algebra)
    parsed = parse_weight(spec.weight, family, sizes)
    kind = spec.kind or KIND_A
    if kind not in (KIND_A, KIND_ABAR):
        raise DomainError(f"roots command supports kinds A and Abar, got {kind!r}")
    if family == "gl":
        spectrum = char_roots(parsed, kind)
    else:
        spectrum = super_char_roots(parsed, kind)
    _write_output(", ".join(str(root.value) for root in spectrum) + "\n",
                  spec.output)
    return 0


def cmd_classify(spec: JobSpec) -> int:
    family, sizes = parse_algebra(spec.algebra)
    if family != "glmn":
        raise DomainError("classification applies to gl(m|n) weights")
    verdict = classify_type1_star(parse_weight(spec.weight, family, sizes))
    if verdict.witness is None:
        _write_output(f"{verdict.verdict}\n", spec.output)
    else:
        _write_output(f"{verdict.verdict}, witness mu={verdict.witness}\n",
                      spec.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charid",
        description="Characteristic identities and Gelfand-Tsetlin "
                    "representations for gl(n) and gl(m|n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind=False, suite=False, fmt=False):
        p.add_argument("--algebra", required=True,
                       help="glN for gl(n), glM|N for gl(m|n)")
        p.add_argument("--weight", required=True,
                       help="comma-separated labels; super weights may use 'a,b|c'")
        p.add_argument("--tolerance", type=float, default=None,
                       help="override abs/rel tolerance (env CHARID_TOLERANCE)")
        p.add_argument("--output", default=None, help="write to file instead of stdout")
        if kind:
            p.add_argument("--kind", choices=(KIND_A, KIND_ABAR), default=KIND_A)
        if suite:
            p.add_argument("--suite", choices=SUITE_NAMES, required=True)
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    common(sub.add_parser("rep", help="emit basis and generator matrices"), fmt=True)
    common(sub.add_parser("verify", help="run a verification suite"), suite=True)
    common(sub.add_parser("roots", help="print exact characteristic roots"), kind=True)
    common(sub.add_parser("classify", help="type 1 star classification"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    spec = JobSpec(
        command=args.command,
        algebra=args.algebra,
        weight=args.weight,
        kind=getattr(args, "kind", None),
        suite=getattr(args, "suite", None),
        tolerance=args.tolerance,
        output=args.output,
        format=getattr(args, "format", "json"),
    )
    handlers = {
        "rep": cmd_rep,
        "verify": cmd_verify,
        "roots": cmd_roots,
        "classify": cmd_classify,
    }
    try:
        return handlers[spec.command](spec)
    except (DomainError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
