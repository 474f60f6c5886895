"""Compiled vs pure-Python kernel timings, plus one forward/backward pass of each backend.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from atta import _kernels
from atta._kernels import _pykernels


def cases(rng):
    x = rng.random((128, 28, 28, 8), dtype=np.float32)
    cols = _pykernels.im2col(x, 3, 3, 1)
    pool_in = rng.random((128, 24, 24, 16), dtype=np.float32)
    _, idx = _pykernels.maxpool2x2(pool_in)
    g = rng.random((128, 12, 12, 16), dtype=np.float32)
    nat = rng.random((128, 28, 28, 1), dtype=np.float32)
    adv = np.clip(nat + rng.uniform(-0.3, 0.3, nat.shape).astype(np.float32), 0, 1)
    d = rng.standard_normal(nat.shape).astype(np.float32)
    return {
        "im2col 128x28x28x8": lambda k: k.im2col(x, 3, 3, 1),
        "col2im 128x26x26x8": lambda k: k.col2im(cols, 28, 28, 1),
        "maxpool2x2 128x24x24x16": lambda k: k.maxpool2x2(pool_in),
        "maxpool2x2_backward": lambda k: k.maxpool2x2_backward(g, idx),
        "linf_step 128x28x28": lambda k: k.linf_step(adv, d, nat, 0.01, 0.3),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=20)
    a = ap.parse_args(argv)
    backends = [("python", _kernels.python_backend)]
    if _kernels.compiled_backend is not None:
        backends.append(("cython", _kernels.compiled_backend))
    else:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'kernel':<26}" + "".join(f"{n + ' ms':>12}" for n, _ in backends) + f"{'speedup':>10}")
    for name, fn in cases(np.random.default_rng(0)).items():
        ms = [min(timeit.repeat(lambda: fn(k), number=1, repeat=a.repeat)) * 1e3 for _, k in backends]
        speed = f"{ms[0] / ms[1]:9.2f}x" if len(ms) == 2 else ""
        print(f"{name:<26}" + "".join(f"{m:12.3f}" for m in ms) + speed)


if __name__ == "__main__":
    main()
