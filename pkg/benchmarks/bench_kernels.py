"""Compare the numba kernels against their pure-numpy fallbacks.

    python benchmarks/bench_kernels.py --n 100000

Both variants are imported side by side, so no environment flag is needed
here; GEOBCH_DISABLE_NUMBA only changes which one the library dispatches to.
"""

import argparse
import time

import numpy as np

from geobch import kernels
from geobch.algebra import Signature
from geobch.pauli import generators_to_matrices


def timed(fn, *args, repeat=5):
    fn(*(a[:2] for a in args))  # warm up (and compile)
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        runs.append(time.perf_counter() - t0)
    return float(np.median(runs)), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    sign = Signature(1, 3).sign_table
    a = rng.uniform(-1, 1, (args.n, 16))
    b = rng.uniform(-1, 1, (args.n, 16))
    m1 = generators_to_matrices(rng.uniform(-1, 1, (args.n, 3)), rng.uniform(-1, 1, (args.n, 3)))
    m2 = generators_to_matrices(rng.uniform(-1, 1, (args.n, 3)), rng.uniform(-1, 1, (args.n, 3)))

    if kernels.pauli_bch_batch_numba is None:
        print("numba is not installed; only the numpy kernels can run")

    print(f"n={args.n}  dispatch backend={kernels.BACKEND}")
    print(f"{'kernel':<28}{'numpy ns/op':>14}{'numba ns/op':>14}{'speedup':>10}{'max diff':>12}")
    cases = [
        ("geometric_product_batch", kernels.geometric_product_batch_numpy, kernels.geometric_product_batch_numba,
         lambda f: timed(lambda x, y: f(x, y, sign), a, b, repeat=args.repeat)),
        ("pauli_bch_batch", kernels.pauli_bch_batch_numpy, kernels.pauli_bch_batch_numba,
         lambda f: timed(f, m1, m2, repeat=args.repeat)),
    ]
    for name, np_fn, nb_fn, run in cases:
        t_np, out_np = run(np_fn)
        if nb_fn is None:
            print(f"{name:<28}{t_np / args.n * 1e9:>14.1f}{'-':>14}{'-':>10}{'-':>12}")
            continue
        t_nb, out_nb = run(nb_fn)
        if isinstance(out_np, tuple):
            out_np, out_nb = out_np[0], out_nb[0]
        diff = float(np.nanmax(np.abs(out_np - out_nb)))
        print(f"{name:<28}{t_np / args.n * 1e9:>14.1f}{t_nb / args.n * 1e9:>14.1f}{t_np / t_nb:>10.1f}{diff:>12.2e}")


if __name__ == "__main__":
    main()
