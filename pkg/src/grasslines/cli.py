"""Command-line interface.

Exit codes: 0 pass, 1 input error, 2 theorem or locus violation,
3 too few one-dimensional samples in ``verify-theorem``.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import secrets
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .exactfield import ExactMatrix, FieldSpec
from .families import (
    SklyaninParams,
    planted_instance,
    random_R,
    sklyanin,
    skew,
    theta_twist,
    twisted_sklyanin,
)
from .grassmann import plucker_from_span
from .groebner import buchberger
from .linescheme import (
    RelationSpace,
    compute_line_scheme,
    line_scheme_ideal,
    point_scheme_ideal,
    rank_loci_ideals,
)
from .oracle import cross_validate

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_SHORTFALL = 0, 1, 2, 3
FAMILIES = ("skew", "sklyanin", "twisted-sklyanin", "theta", "random", "planted")
MIN_DIM1_FRACTION = 0.8


class InputError(Exception):
    pass


# -- file formats ---------------------------------------------------------------------


def load_relation_space(path: str | Path, field: FieldSpec | None = None) -> RelationSpace:
    """Read a RelationSpaceFile; ``field`` overrides the file's field."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read relation space: {exc}") from exc
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise InputError("relation space file needs a 'matrix' entry")
    if doc.get("convention", "4i+j") != "4i+j":
        raise InputError("unsupported convention (only '4i+j')")
    try:
        F = field or FieldSpec.parse(doc.get("field", "fp:32003"))
        rows = [[F(str(x)) for x in row] for row in doc["matrix"]]
        if len(rows) != 6 or any(len(r) != 16 for r in rows):
            raise InputError("matrix must be 6 rows of 16 entries")
        return RelationSpace.from_rows(F, rows)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def dump_relation_space(R: RelationSpace) -> dict:
    F = R.field
    return {"field": str(F), "convention": "4i+j",
            "matrix": [[F.to_str(x) for x in row] for row in R.rows()]}


def _load_theta(path: str, field: FieldSpec) -> ExactMatrix:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read theta: {exc}") from exc
    rows = doc["matrix"] if isinstance(doc, dict) else doc
    return ExactMatrix.from_rows(field, [[str(x) for x in r] for r in rows])


def _parse_alpha(text: str | None, field: FieldSpec) -> SklyaninParams:
    if not text:
        text = "2,3"
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 2:
        raise InputError("--alpha takes two values a1,a2 (a3 is derived)")
    return SklyaninParams.from_pair(Fraction(parts[0]), Fraction(parts[1]), field)


def resolve_input(args) -> tuple[RelationSpace, dict]:
    """Build the relation space named by --input or --family."""
    field = FieldSpec.parse(args.field) if args.field else None
    if args.input:
        return load_relation_space(args.input, field), {"input": str(args.input)}
    family = args.family
    if not family:
        raise InputError("give --input PATH or --family NAME")
    F = field or FieldSpec.prime()
    meta: dict = {"family": family}
    if family == "skew":
        return skew(F), meta
    if family in ("sklyanin", "twisted-sklyanin"):
        params = _parse_alpha(args.alpha, F)
        meta["alpha"] = [F.to_str(a) for a in params.alpha]
        ctor = sklyanin if family == "sklyanin" else twisted_sklyanin
        return ctor(params), meta
    if family == "theta":
        if not args.theta:
            raise InputError("--family theta needs --theta PATH")
        return theta_twist(_load_theta(args.theta, F)), meta
    if family in ("random", "planted"):
        seed = _seed(args)
        meta["seed"] = seed
        if family == "random":
            return random_R(seed, F), meta
        R, u, v = planted_instance(seed, F)
        meta["planted_u"] = [F.to_str(x) for x in u]
        meta["planted_v"] = [F.to_str(x) for x in v]
        return R, meta
    raise InputError(f"unknown family {family!r}")


def _seed(args) -> int:
    if args.seed is None:
        args.seed = secrets.randbelow(2**31)
        print(f"seed: {args.seed}", file=sys.stderr)
    return int(args.seed)


# -- reports --------------------------------------------------------------------------


def _digest(body: dict) -> str:
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


def _strip_timings(obj):
    # argv only carries presentation flags beyond what result already records
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k not in ("timings", "wall_clock", "argv")}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def build_report(command: str, argv: list[str], result: dict, timings: dict | None) -> dict:
    body = {"schema": SCHEMA, "tool": "grasslines", "version": __version__,
            "command": command, "argv": argv, "result": result}
    body["digest"] = _digest(_strip_timings(body))
    if timings is not None:
        body["wall_clock"] = {k: round(v, 4) for k, v in timings.items()}
    return body


def _emit(args, report: dict, summary: str):
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n")
    if args.json:
        print(text)
    else:
        print(summary)


# -- commands -------------------------------------------------------------------------


def cmd_compute(args, argv) -> int:
    t0 = time.perf_counter()
    R, meta = resolve_input(args)
    rep = compute_line_scheme(R, seed=meta.get("seed"))
    result = {"input": meta, **rep.to_dict(timings=not args.no_timings)}
    status = EXIT_VIOLATION if rep.theorem_check == "fail" else EXIT_OK
    result["status"] = "violation" if status else "ok"
    timings = None if args.no_timings else {"total": time.perf_counter() - t0}
    _emit(args, build_report("compute", argv, result, timings),
          f"line scheme: projdim {rep.projdim}, degree {rep.degree}, "
          f"{rep.quartics} quartics, theorem check: {rep.theorem_check}")
    return status


def cmd_point_scheme(args, argv) -> int:
    t0 = time.perf_counter()
    R, meta = resolve_input(args)
    ideal = point_scheme_ideal(R)
    gb = buchberger(ideal)
    hd = gb.hilbert()
    result = {"input": meta, "field": str(R.field), "minors": 15, "nonzero_minors": len(ideal),
              "gb_size": len(gb), "projdim": hd.projdim, "degree": hd.degree, "hilbert": hd.to_dict()}
    timings = None if args.no_timings else {"total": time.perf_counter() - t0}
    _emit(args, build_report("point-scheme", argv, result, timings),
          f"point scheme: projdim {hd.projdim}, degree {hd.degree}")
    return EXIT_OK


def cmd_rank_loci(args, argv) -> int:
    t0 = time.perf_counter()
    R, meta = resolve_input(args)
    I1, I2 = rank_loci_ideals(R)
    out = {"input": meta, "field": str(R.field)}
    lines = []
    for name, ideal, total in (("rank1", I1, 36), ("rank2", I2, 16)):
        hd = buchberger(ideal).hilbert()
        out[name] = {"minors": total, "nonzero_minors": len(ideal),
                     "projdim": hd.projdim, "degree": hd.degree, "hilbert": hd.to_dict()}
        lines.append(f"{name}: {total} minors, projdim {hd.projdim}, degree {hd.degree}")
    timings = None if args.no_timings else {"total": time.perf_counter() - t0}
    _emit(args, build_report("rank-loci", argv, out, timings), "\n".join(lines))
    return EXIT_OK


def cmd_oracle_check(args, argv) -> int:
    t0 = time.perf_counter()
    R, meta = resolve_input(args)
    res = cross_validate(R)
    out = {"input": meta, **res.to_dict()}
    timings = None if args.no_timings else {"total": time.perf_counter() - t0}
    _emit(args, build_report("oracle-check", argv, out, timings),
          f"oracle: {res.agree}/{res.subspaces} agree, {res.members} on the locus")
    return EXIT_OK if res.ok else EXIT_VIOLATION


def sample_seeds(seed: int, samples: int) -> list[int]:
    """Per-sample seeds; each can be replayed with ``compute --family random --seed``."""
    return [int(s) for s in np.random.default_rng(seed).integers(0, 2**31, size=samples)]


def _run_sample(task):
    s, field_text, planted = task
    F = FieldSpec.parse(field_text)
    row = {"seed": s}
    if planted:
        R, u, v = planted_instance(s, F)
        ideal = line_scheme_ideal(R)
        pt = plucker_from_span(u, v, F)
        row["planted_ok"] = all(not g.eval(list(pt.coords)) for g in ideal.generators)
    else:
        R = random_R(s, F)
    rep = compute_line_scheme(R, seed=s)
    ok = rep.theorem_check != "fail" and row.get("planted_ok", True)
    row.update(projdim=rep.projdim, degree=rep.degree, gb_size=rep.gb_size,
               quartics=rep.quartics, theorem_check=rep.theorem_check, in_U=rep.projdim == 1)
    row["pass"] = ok
    return row, rep.timings


def cmd_verify_theorem(args, argv) -> int:
    if args.samples < 1:
        raise InputError("--samples must be at least 1")
    t0 = time.perf_counter()
    seed = _seed(args)
    F = FieldSpec.parse(args.field or "fp:32003")
    seeds = sample_seeds(seed, args.samples)
    tasks = [(s, str(F), args.planted) for s in seeds]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_sample, tasks))
    else:
        results = [_run_sample(t) for t in tasks]
    rows = []
    for row, timings in results:
        if not args.no_timings:
            row["timings"] = {k: round(v, 4) for k, v in timings.items()}
        rows.append(row)
    dim1 = sum(r["projdim"] == 1 for r in rows)
    violations = [r["seed"] for r in rows if not r["pass"]]
    frac = dim1 / len(rows)
    if violations:
        status = EXIT_VIOLATION
    elif frac < MIN_DIM1_FRACTION:
        status = EXIT_SHORTFALL
    else:
        status = EXIT_OK
    out = {"field": str(F), "seed": seed, "samples": len(rows), "planted": bool(args.planted),
           "dim1_samples": dim1, "dim1_fraction": frac, "min_dim1_fraction": MIN_DIM1_FRACTION,
           "degree20_among_dim1": sum(r["projdim"] == 1 and r["degree"] == 20 for r in rows),
           "violations": violations, "outside_U": [r["seed"] for r in rows if r["projdim"] != 1],
           "status": {0: "pass", 2: "degree violation", 3: "too few dim-1 samples"}[status],
           "table": rows}
    timings = None if args.no_timings else {"total": time.perf_counter() - t0}
    _emit(args, build_report("verify-theorem", argv, out, timings),
          f"verify-theorem: {dim1}/{len(rows)} samples with projdim 1, "
          f"{out['degree20_among_dim1']} of them degree 20; status {out['status']}")
    return status


# -- entry point ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; here 2 means a violation
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grasslines",
                                     description="Line schemes of 6-dimensional subspaces of 4x4 matrices.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--input", metavar="PATH")
            p.add_argument("--family", choices=FAMILIES)
            p.add_argument("--alpha", metavar="A1,A2")
            p.add_argument("--theta", metavar="PATH")
        p.add_argument("--field", metavar="qq|fp:P")
        p.add_argument("--seed", type=int)
        p.add_argument("--output", metavar="PATH")
        p.add_argument("--json", action="store_true", help="print the report to stdout")
        p.add_argument("--no-timings", action="store_true",
                       help="omit wall-clock data so reports are byte-reproducible")

    for name, helptext in (("compute", "line scheme dimension and degree"),
                           ("point-scheme", "point scheme in P^3"),
                           ("rank-loci", "rank <= 1 and <= 2 loci in P(R)"),
                           ("oracle-check", "brute-force locus check over F_q, q <= 7")):
        common(sub.add_parser(name, help=helptext))
    vt = sub.add_parser("verify-theorem", help="sample random R and check degree 20")
    common(vt, with_input=False)
    vt.add_argument("--samples", type=int, default=25)
    vt.add_argument("--planted", action="store_true")
    vt.add_argument("--jobs", type=int, default=1)
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "point-scheme": cmd_point_scheme,
    "rank-loci": cmd_rank_loci,
    "oracle-check": cmd_oracle_check,
    "verify-theorem": cmd_verify_theorem,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
