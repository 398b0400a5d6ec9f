"""Timing harness: 2x2 matrix BCH vs 16-coefficient BCH vs dense 4x4 matrices.

All three paths compose the same seeded random generator pairs, and the
largest disagreement between their composite generators is reported next
to the timings.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .pauli import generators_to_matrices, matrices_to_generators, matrix_bch
from .rotors import bch, rotor_log
from .spacetime import (
    LorentzGenerator,
    SPACETIME,
    bivector_to_generator,
    generator_matrix,
    generator_to_bivector,
    matrix_exp_so13,
    matrix_to_rotor,
)


@dataclass
class BenchResult:
    n: int
    seed: int
    rows: list = field(default_factory=list)  # (label, median ns/op)
    residual: float = 0.0

    def speedup(self, slow: str, fast: str) -> float:
        times = dict(self.rows)
        return times[slow] / times[fast]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "backend": kernels.BACKEND,
            "median_ns_per_op": dict(self.rows),
            "max_residual": self.residual,
        }

    def table(self) -> str:
        width = max(len(label) for label, _ in self.rows)
        lines = [f"n={self.n} seed={self.seed} kernels={kernels.BACKEND}", f"{'path':<{width}}  median ns/op"]
        lines += [f"{label:<{width}}  {ns:12.0f}" for label, ns in self.rows]
        lines.append(f"max residual across paths: {self.residual:.3e}")
        return "\n".join(lines)


def random_generators(n: int, rng: np.random.Generator):
    """``(xi, theta)`` arrays of shape ``(n, 3)`` with components uniform in [-1, 1]."""
    return rng.uniform(-1.0, 1.0, (n, 3)), rng.uniform(-1.0, 1.0, (n, 3))


def dense_compose(g1: LorentzGenerator, g2: LorentzGenerator) -> LorentzGenerator:
    """Baseline: exponentiate both 4x4 generators, multiply, and take the log back via a rotor."""
    m = matrix_exp_so13(generator_matrix(g1)) @ matrix_exp_so13(generator_matrix(g2))
    return bivector_to_generator(rotor_log(matrix_to_rotor(m)))


def _time_each(fn, args) -> tuple:
    times = np.empty(len(args))
    out = []
    clock = time.perf_counter_ns
    for i, a in enumerate(args):
        t0 = clock()
        r = fn(*a)
        times[i] = clock() - t0
        out.append(r)
    return float(np.median(times)), out


def _time_batch(fn, *args, repeats: int = 5) -> float:
    fn(*(a[:1] for a in args))  # compile / warm up
    n = len(args[0])
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        fn(*args)
        best.append((time.perf_counter_ns() - t0) / n)
    return float(np.median(best))


def run(n: int, seed: int = 0, dense_limit: int | None = 2000) -> BenchResult:
    """Run the benchmark on ``n`` pairs.

    The dense baseline is by far the slowest path, so it only runs on the
    first ``dense_limit`` pairs (all of them when ``None``).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.default_rng(seed)
    xi1, th1 = random_generators(n, rng)
    xi2, th2 = random_generators(n, rng)
    m1 = generators_to_matrices(xi1, th1)
    m2 = generators_to_matrices(xi2, th2)
    gens1 = [LorentzGenerator(a, b) for a, b in zip(xi1, th1)]
    gens2 = [LorentzGenerator(a, b) for a, b in zip(xi2, th2)]
    biv1 = [generator_to_bivector(g) for g in gens1]
    biv2 = [generator_to_bivector(g) for g in gens2]

    matrix_bch(m1[0], m2[0])
    bch(biv1[0], biv2[0])
    t_pauli, out_pauli = _time_each(matrix_bch, list(zip(m1, m2)))
    t_ga, out_ga = _time_each(bch, list(zip(biv1, biv2)))
    n_dense = n if dense_limit is None else min(n, dense_limit)
    t_dense, out_dense = _time_each(dense_compose, list(zip(gens1[:n_dense], gens2[:n_dense])))

    xi_p, th_p = matrices_to_generators(np.array(out_pauli))
    ga_coeffs = np.array([s.coeffs for s in out_ga])
    ref = np.array([generator_to_bivector(LorentzGenerator(a, b)).coeffs for a, b in zip(xi_p, th_p)])
    residual = float(np.abs(ref - ga_coeffs).max())
    dense_coeffs = np.array([generator_to_bivector(g).coeffs for g in out_dense])
    residual = max(residual, float(np.abs(dense_coeffs - ga_coeffs[:n_dense]).max()))

    rows = [
        ("pauli matrix_bch", t_pauli),
        ("ga bch", t_ga),
        ("dense 4x4 exp/multiply/log", t_dense),
    ]
    rows += kernel_rows(m1, m2, ga_coeffs)
    return BenchResult(n=n, seed=seed, rows=rows, residual=residual)


def kernel_rows(m1, m2, coeffs) -> list:
    """Per-element cost of the batched kernels under each available backend."""
    sign = SPACETIME.sign_table
    a = np.ascontiguousarray(coeffs)
    b = np.ascontiguousarray(coeffs[::-1])
    rows = []
    variants = [("numpy", kernels.pauli_bch_batch_numpy, kernels.geometric_product_batch_numpy)]
    if kernels.pauli_bch_batch_numba is not None:
        variants.append(("numba", kernels.pauli_bch_batch_numba, kernels.geometric_product_batch_numba))
    for name, bch_kernel, gp_kernel in variants:
        rows.append((f"batched pauli bch [{name}]", _time_batch(bch_kernel, m1, m2)))
        rows.append((f"batched geometric product [{name}]", _time_batch(lambda x, y: gp_kernel(x, y, sign), a, b)))
    return rows
