"""Compare the numba kernels with their pure-numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times one activation-jet forward and backward pass at desk-scale batch
size, one full kinetic loss+gradient evaluation (toggling the dispatch),
and the finite-difference PNP stepper.
"""

import argparse
import time

import numpy as np

from vpfp_pinn import kernels
from vpfp_pinn.network import FieldNetPair, init_params
from vpfp_pinn.numerics import make_rng, trapezoid_weights
from vpfp_pinn.sampling import Domain, SampleCounts, sample_batch
from vpfp_pinn.vpfp import VpfpProblem, loss_and_grad_vpfp


def best_of(fn, repeat):
    fn()  # warm-up / compile
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def swap_dispatch(use_numba):
    kernels.act_forward = kernels.act_forward_numba if use_numba else kernels.act_forward_numpy
    kernels.act_backward = kernels.act_backward_numba if use_numba else kernels.act_backward_numpy


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n-v", type=int, default=100)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        print("numba not installed; only the numpy path is available")
        return

    rng = np.random.default_rng(0)
    Z = rng.standard_normal((5, 15000, 32))
    pi, pj = np.array([2]), np.array([2])
    rows = []
    for name, fwd, bwd in (
        ("numba", kernels.act_forward_numba, kernels.act_backward_numba),
        ("numpy", kernels.act_forward_numpy, kernels.act_backward_numpy),
    ):
        rows.append((f"jet forward  [{name}]", best_of(lambda: fwd(kernels.TANH, Z, 3, pi, pj), args.repeat)))
        rows.append((f"jet backward [{name}]", best_of(lambda: bwd(kernels.TANH, Z, Z, 3, pi, pj), args.repeat)))

    problem = VpfpProblem()
    nets = FieldNetPair(init_params(1, (3, 32, 32, 32, 32, 1), "softplus"), init_params(2, (2, 32, 32, 32, 32, 1)))
    batch = sample_batch(make_rng(0, 0), Domain(), SampleCounts(10, 10, args.n_v))
    for use in (True, False):
        swap_dispatch(use)
        label = "numba" if use else "numpy"
        rows.append((f"kinetic loss+grad, n_v={args.n_v} [{label}]", best_of(lambda: loss_and_grad_vpfp(nets, batch, problem), args.repeat)))
    swap_dispatch(kernels.USE_NUMBA)

    x = np.linspace(-1, 1, 201)
    w = trapezoid_weights(x)
    rho0 = 8 * np.exp(x - 1)
    h = float(w @ rho0) / 2
    dx = x[1] - x[0]
    for name, fn in (("numba", kernels.pnp_fd_run_numba), ("numpy", kernels.pnp_fd_run_numpy)):
        rows.append((f"FD stepper 10k steps [{name}]", best_of(lambda: fn(rho0.copy(), h, dx, 0.4 * dx * dx, 10000, w), args.repeat)))

    width = max(len(r[0]) for r in rows)
    for label, sec in rows:
        print(f"{label:<{width}}  {sec * 1e3:9.2f} ms")


if __name__ == "__main__":
    main()
