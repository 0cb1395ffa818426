"""Compare the numba and pure-numpy backends of the convolution kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times col2im (the only kernel with two implementations) and one forward/backward conv step at the shapes of the
MNIST classifier (batch 64, 28x28 input, 5x5 kernels, stride 2).
"""
import argparse
import timeit

import numpy as np

from jarn import _kernels
from jarn.autodiff import Record, gradient, ops


def conv_step(x, w, backend):
    saved = _kernels.BACKEND
    _kernels.BACKEND = backend
    try:
        rec = Record()
        xl, wl = rec.leaf(x), rec.leaf(w)
        loss = ops.sum(ops.conv2d(xl, wl, 2, 2))
        gradient(rec, loss, [xl, wl])
        rec.clear()
    finally:
        _kernels.BACKEND = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    rng = np.random.default_rng(0)
    cases = {"28x28x1 -> 64": (rng.random((64, 32, 32, 1)), 14, rng.random((5, 5, 1, 64))),
             "14x14x64 -> 128": (rng.random((64, 18, 18, 64)), 7, rng.random((5, 5, 64, 128)))}
    backends = ["numpy"] + (["numba"] if _kernels.njit is not None else [])
    print(f"{'kernel':<10} {'shape':<16} " + " ".join(f"{b:>12}" for b in backends) + "  speedup")
    for label, (xp, o, w) in cases.items():
        cols = _kernels.im2col(xp, 5, 5, 2, o, o)
        rows = {
            "col2im": lambda b: _kernels.col2im(cols, xp.shape[1], xp.shape[2], 2, backend=b),
            "conv f+b": lambda b: conv_step(xp[:, 2:-2, 2:-2], w, b),
        }
        for name, fn in rows.items():
            for b in backends:
                fn(b)  # warm up (and compile)
            times = [min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for b in backends]
            speed = f"{times[0] / times[-1]:7.2f}x" if len(times) > 1 else "   n/a"
            print(f"{name:<10} {label:<16} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
