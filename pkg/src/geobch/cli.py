"""``geobch`` command line: compose, exponentiate and take logs of Lorentz transformations.

Generators are JSON objects ``{"xi": [x, y, z], "theta": [x, y, z]}`` with an
optional ``"label"``.  Matrices are row-major lists of 16 reals (a nested 4x4
list is accepted too).  Exit codes: 0 success, 2 malformed input, 3
mathematical singularity, 4 domain violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bench, kinematics
from .errors import DomainError, GeometricAlgebraError, NotALorentzMatrixError, SingularityError
from .pauli import generator_to_matrix2, matrix2_to_generator, matrix_bch
from .rotors import bch, biv_exp, rotor_log
from .spacetime import (
    LorentzGenerator,
    bivector_to_generator,
    generator_matrix,
    generator_to_bivector,
    is_lorentz_matrix,
    lorentz_defect,
    matrix_exp_so13,
    matrix_to_rotor,
    rotor_to_matrix,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SINGULAR = 3
EXIT_DOMAIN = 4


class InputError(ValueError):
    """Malformed JSON or a record that does not match the schema."""


# -- parsing ------------------------------------------------------------------

def _triple(obj, key) -> tuple:
    value = obj.get(key, [0.0, 0.0, 0.0])
    if not isinstance(value, list) or len(value) != 3:
        raise InputError(f"{key!r} must be a list of 3 numbers")
    out = []
    for x in value:
        if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
            raise InputError(f"{key!r} must hold finite numbers, got {x!r}")
        out.append(float(x))
    return tuple(out)


def parse_generator(obj) -> LorentzGenerator:
    if not isinstance(obj, dict):
        raise InputError(f"a generator must be a JSON object, got {type(obj).__name__}")
    unknown = set(obj) - {"xi", "theta", "label"}
    if unknown:
        raise InputError(f"unknown generator fields {sorted(unknown)}")
    if "label" in obj and not isinstance(obj["label"], str):
        raise InputError("'label' must be a string")
    return LorentzGenerator(_triple(obj, "xi"), _triple(obj, "theta"))


def parse_generators(doc) -> list:
    if isinstance(doc, dict) and "generators" in doc:
        doc = doc["generators"]
    if not isinstance(doc, list):
        raise InputError("compose expects a list of generators")
    return [parse_generator(item) for item in doc]


def parse_matrix(doc) -> np.ndarray:
    if isinstance(doc, dict):
        doc = doc.get("matrix")
    try:
        m = np.array(doc, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"matrix must be numeric: {exc}") from None
    if m.size != 16 or m.shape not in ((16,), (4, 4)):
        raise InputError(f"matrix needs 16 entries, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise InputError("matrix has non-finite entries")
    return m.reshape(4, 4)


def parse_velocities(doc):
    if not isinstance(doc, dict) or not {"beta1", "beta2"} <= set(doc):
        raise InputError("velocity expects an object with 'beta1' and 'beta2'")
    return np.array(_triple(doc, "beta1")), np.array(_triple(doc, "beta2"))


def generator_record(g: LorentzGenerator) -> dict:
    return {"xi": list(g.xi), "theta": list(g.theta)}


def _matrix_list(m) -> list:
    return [float(x) for x in np.asarray(m).ravel()]


# -- commands -----------------------------------------------------------------

def _fold(gens, backend):
    """Left fold of BCH; singularities are re-raised naming the pair index."""
    if backend == "pauli":
        acc = generator_to_matrix2(gens[0])
        step = lambda a, g: matrix_bch(a, generator_to_matrix2(g))  # noqa: E731
        finish = matrix2_to_generator
    elif backend == "ga":
        acc = generator_to_bivector(gens[0])
        step = lambda a, g: bch(a, generator_to_bivector(g))  # noqa: E731
        finish = bivector_to_generator
    else:
        raise ValueError(f"unknown backend {backend!r}")
    for k, g in enumerate(gens[1:], start=1):
        try:
            acc = step(acc, g)
        except SingularityError as exc:
            raise type(exc)(f"composing input {k} onto the result of inputs 0..{k - 1}: {exc}") from exc
    return finish(acc)


def _rotation_angle(gens) -> float:
    """Wigner angle of the composite of pure boosts."""
    if len(gens) == 2:
        w1 = kinematics.rapidity_to_half_velocity(gens[0].xi)
        w2 = kinematics.rapidity_to_half_velocity(gens[1].xi)
        return kinematics.wigner_angle(w1, w2)[0]
    rotor = kinematics.boost_rotor(gens[0].xi)
    for g in gens[1:]:
        rotor = rotor * kinematics.boost_rotor(g.xi)
    _, rot = kinematics.boost_rotation_split(rotor)
    return 2.0 * math.atan2(rot.grade(2).norm(), abs(rot.coeffs[0]))


def cmd_compose(gens, backend: str = "pauli") -> dict:
    if len(gens) < 2:
        raise InputError("compose needs at least two generators")
    composed = _fold(gens, backend)
    matrix = matrix_exp_so13(generator_matrix(composed))
    oracle = np.eye(4)
    for g in gens:
        oracle = oracle @ matrix_exp_so13(generator_matrix(g))
    report = {
        "backend": backend,
        "inputs": [generator_record(g) for g in gens],
        "composed": generator_record(composed),
        "matrix": _matrix_list(matrix),
        "wigner_angle": _rotation_angle(gens) if all(g.is_pure_boost() for g in gens) else None,
        "residual": float(np.abs(matrix - oracle).max()),
    }
    return report


def cmd_exp(g: LorentzGenerator) -> dict:
    rotor = biv_exp(generator_to_bivector(g))
    rotor_matrix = rotor_to_matrix(rotor)
    oracle = matrix_exp_so13(generator_matrix(g))
    return {
        "generator": generator_record(g),
        "rotor": [float(x) for x in rotor.coeffs],
        "matrix": _matrix_list(rotor_matrix),
        "oracle_matrix": _matrix_list(oracle),
        "residual": float(np.abs(rotor_matrix - oracle).max()),
    }


def cmd_log(m) -> dict:
    m = np.asarray(m, dtype=float)
    if not is_lorentz_matrix(m):
        raise NotALorentzMatrixError(
            f"not a proper orthochronous Lorentz matrix (eta defect {lorentz_defect(m):.3g}, "
            f"det {np.linalg.det(m):.6g}, L00 {m[0, 0]:.6g})"
        )
    g = bivector_to_generator(rotor_log(matrix_to_rotor(m)))
    back = matrix_exp_so13(generator_matrix(g))
    return {"generator": generator_record(g), "residual": float(np.abs(back - m).max())}


def cmd_velocity(beta1, beta2) -> dict:
    r = kinematics.compose_velocities(beta1, beta2)
    plane = r["plane"]
    return {
        "beta": r["beta"].tolist(),
        "speed": float(np.linalg.norm(r["beta"])),
        "w1": r["w1"].tolist(),
        "w2": r["w2"].tolist(),
        "w": r["w"].tolist(),
        "wigner_angle": r["wigner_angle"],
        # unit bivector of the Wigner rotation by blade; null for parallel boosts
        "plane": None if plane is None else {k: plane[k] for k in ("e12", "e13", "e23")},
    }


def cmd_bench(n: int, seed: int) -> bench.BenchResult:
    return bench.run(n, seed)


# -- entry point --------------------------------------------------------------

def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _text(report: dict, indent: str = "") -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geobch", description="Compose Lorentz transformations through their generators.")
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="human-readable output")
    common.set_defaults(fmt="json")
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--input", default="-", help="JSON input file, '-' for stdin (default)")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("compose", parents=[common, io], help="left-fold BCH over a list of generators")
    p.add_argument("--backend", choices=("ga", "pauli"), default="pauli")
    sub.add_parser("exp", parents=[common, io], help="4x4 matrix of a generator, rotor path and oracle")
    sub.add_parser("log", parents=[common, io], help="generator of a proper orthochronous Lorentz matrix")
    sub.add_parser("velocity", parents=[common, io], help="compose two 3-velocities")
    p = sub.add_parser("bench", parents=[common], help="time the matrix, multivector and dense paths")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _dispatch(args):
    if args.command == "bench":
        if args.n < 1:
            raise InputError("--n must be at least 1")
        if args.seed < 0:
            raise InputError("--seed must be non-negative")
        result = cmd_bench(args.n, args.seed)
        return result.as_dict() if args.fmt == "json" else result.table()
    doc = _read_json(args.input)
    if args.command == "compose":
        return cmd_compose(parse_generators(doc), args.backend)
    if args.command == "exp":
        return cmd_exp(parse_generator(doc))
    if args.command == "log":
        return cmd_log(parse_matrix(doc))
    return cmd_velocity(*parse_velocities(doc))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularityError as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except DomainError as exc:
        print(f"domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except GeometricAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(out, str):
        print(out)
    elif args.fmt == "json":
        print(json.dumps(out))
    else:
        print(_text(out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
