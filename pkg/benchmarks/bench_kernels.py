"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Shapes follow the encoder's convolution stage (16 channels x 16 positions)
and the leakage oracle on a 2^16-entry codebook.
"""

import argparse
import timeit

import numpy as np

from wiretap_learn import _kernels_py

try:
    from wiretap_learn import _ckernels
except ImportError:
    _ckernels = None


def cases(rng, batch):
    xpad = rng.normal(size=(batch, 16, 19))
    w1 = rng.normal(size=(32, 16, 4))
    b1 = rng.normal(size=32)
    gout = rng.normal(size=(batch, 32, 16))
    book = rng.choice([-1.0, 1.0], size=(2 ** 16, 16))
    y = book[rng.integers(0, len(book), 500)] + rng.normal(0, 1.2, size=(500, 16))
    return {
        "conv1d_forward": lambda mod: mod.conv1d_forward(xpad, w1, b1, 1),
        "conv1d_backward": lambda mod: mod.conv1d_backward(xpad, w1, gout, 1),
        "coset_loglik": lambda mod: mod.coset_loglik(y, book, 32, 1.5),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--batch", type=int, default=512)
    args = parser.parse_args(argv)
    rng = np.random.default_rng(0)
    backends = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<18}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in cases(rng, args.batch).items():
        times = []
        for _, mod in backends:
            fn(mod)
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<18}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
