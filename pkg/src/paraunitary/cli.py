"""Command-line interface with JSON payloads on stdin-free file arguments.

Exit codes: 0 success, 1 verification or numerical failure, 2 usage or
input error.  All randomness flows from --seed through SeedSequence and
the PCG64 generator, and stdout is byte-identical for identical inputs,
flags and seed.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import axioms
from .jsonio import (
    algebra_from_json,
    canonical_dumps,
    factor_list_to_json,
    laurent_from_json,
    laurent_to_json,
    matrix_to_json,
)
from .laurent import PpuElement
from .numfield import (
    InputError,
    NumericalError,
    Tolerances,
    frob,
    set_tolerances,
    tolerances,
)
from .ppu import FactorList, factor_positive, join, leq, meet, random_ppu


@dataclasses.dataclass(frozen=True)
class CliConfig:
    tol_rank: float
    tol_eq: float
    tol_trim: float
    seed: int
    samples: int
    out: str | None

    def tolerances(self) -> Tolerances:
        return Tolerances(rank=self.tol_rank, eq=self.tol_eq, trim=self.tol_trim)


def _add_common(parser: argparse.ArgumentParser) -> None:
    defaults = Tolerances()
    parser.add_argument("--tol-rank", type=float, default=defaults.rank,
                        help="relative singular-value cutoff")
    parser.add_argument("--tol-eq", type=float, default=defaults.eq,
                        help="matrix-equality tolerance")
    parser.add_argument("--tol-trim", type=float, default=defaults.trim,
                        help="Laurent coefficient trim threshold")
    parser.add_argument("--seed", type=int, default=0, help="root PRNG seed")
    parser.add_argument("--samples", type=int, default=100,
                        help="sample count for verification checks")
    parser.add_argument("--out", default=None, help="write the payload to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paraunitary",
        description="Factor, order, and verify pure paraunitary operator polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor an element into elementary factors")
    p.add_argument("algebra")
    p.add_argument("element")
    _add_common(p)

    p = sub.add_parser("lattice", help="meet, join, or compare two elements")
    p.add_argument("op", choices=("meet", "join", "leq"))
    p.add_argument("algebra")
    p.add_argument("a")
    p.add_argument("b")
    _add_common(p)

    p = sub.add_parser("verify", help="run the axiom checks on an algebra")
    p.add_argument("algebra")
    p.add_argument("--checks", default=None,
                   help="comma-separated subset of: " + ", ".join(axioms.CHECK_NAMES))
    p.add_argument("--points", type=int, default=4,
                   help="point count for the commutative model check")
    _add_common(p)

    p = sub.add_parser("random", help="emit a seeded random group element")
    p.add_argument("algebra")
    p.add_argument("--factors", type=int, default=3)
    p.add_argument("--shift", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("commutant", help="emit a basis of the commutant")
    p.add_argument("algebra")
    _add_common(p)

    p = sub.add_parser("eval", help="evaluate an element at a unit-circle point")
    p.add_argument("element")
    p.add_argument("--z", default="1", help="evaluation point, Python complex syntax")
    _add_common(p)

    return parser


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _emit(payload, out_path: str | None) -> None:
    text = canonical_dumps(payload) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _config(args) -> CliConfig:
    if args.seed < 0:
        raise InputError("seed must be non-negative")
    if args.samples < 0:
        raise InputError("sample count must be non-negative")
    return CliConfig(args.tol_rank, args.tol_eq, args.tol_trim,
                     args.seed, args.samples, args.out)


def _cmd_factor(args, cfg: CliConfig) -> int:
    algebra = algebra_from_json(_load_json(args.algebra))
    op = laurent_from_json(_load_json(args.element))
    shift = max(0, -op.lo)
    element = PpuElement(op.shifted(shift), algebra)
    peeled = factor_positive(element)
    result = FactorList(shift, peeled.factors)
    residual_op = result.assemble(algebra).op - op
    residual = max((frob(c) for c in residual_op.coeffs.values()), default=0.0)
    _emit(factor_list_to_json(result), cfg.out)
    sys.stderr.write(canonical_dumps({"reconstruction_residual": residual}) + "\n")
    return 0


def _cmd_lattice(args, cfg: CliConfig) -> int:
    algebra = algebra_from_json(_load_json(args.algebra))
    a = PpuElement(laurent_from_json(_load_json(args.a)), algebra)
    b = PpuElement(laurent_from_json(_load_json(args.b)), algebra)
    if args.op == "leq":
        _emit(leq(a, b), cfg.out)
    else:
        result = meet(a, b) if args.op == "meet" else join(a, b)
        _emit(laurent_to_json(result.op), cfg.out)
    return 0


def _cmd_verify(args, cfg: CliConfig) -> int:
    algebra = algebra_from_json(_load_json(args.algebra))
    checks = None
    if args.checks is not None:
        checks = [name.strip() for name in args.checks.split(",") if name.strip()]
    reports = axioms.run_suite(algebra, checks, samples=cfg.samples,
                               seed=cfg.seed, n_points=args.points)
    _emit([r.to_json() for r in reports], cfg.out)
    ok = all(r.passed for r in reports) and not any(r.inconclusive for r in reports)
    return 0 if ok else 1


def _cmd_random(args, cfg: CliConfig) -> int:
    algebra = algebra_from_json(_load_json(args.algebra))
    if args.factors < 0:
        raise InputError("factor count must be non-negative")
    element = random_ppu(algebra, args.factors, args.shift, cfg.seed)
    _emit(laurent_to_json(element.op), cfg.out)
    return 0


def _cmd_commutant(args, cfg: CliConfig) -> int:
    algebra = algebra_from_json(_load_json(args.algebra))
    comm = algebra.commutant
    _emit({"dim": comm.dim, "generators": [matrix_to_json(b) for b in comm.basis]},
          cfg.out)
    return 0


def _cmd_eval(args, cfg: CliConfig) -> int:
    op = laurent_from_json(_load_json(args.element))
    try:
        z = complex(args.z)
    except ValueError as exc:
        raise InputError(f"cannot parse evaluation point {args.z!r}") from exc
    _emit(matrix_to_json(op.eval_at(z)), cfg.out)
    return 0


_COMMANDS = {
    "factor": _cmd_factor,
    "lattice": _cmd_lattice,
    "verify": _cmd_verify,
    "random": _cmd_random,
    "commutant": _cmd_commutant,
    "eval": _cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    previous = tolerances()
    try:
        cfg = _config(args)
        set_tolerances(cfg.tolerances())
        return _COMMANDS[args.command](args, cfg)
    except InputError as exc:
        sys.stderr.write(canonical_dumps({"error": str(exc), "kind": "input"}) + "\n")
        return 2
    except NumericalError as exc:
        sys.stderr.write(canonical_dumps({"error": str(exc), "kind": "numerical"}) + "\n")
        return 1
    finally:
        set_tolerances(previous)


def console_main() -> None:
    raise SystemExit(main())
