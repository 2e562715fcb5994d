"""Compare the compiled and pure-Python arithmetic kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Micro benchmarks call the two kernel classes side by side; the end-to-end
row times a CLI sweep in a subprocess with and without FQSTRUCT_PURE_PYTHON.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from fqstruct.field import make_field
from fqstruct.kernel import CFieldKernel, PyFieldKernel


def kernels(p, n):
    F = make_field(p, n)
    args = (p, n, F.modulus or (), F.delta)
    return F, CFieldKernel(*args), PyFieldKernel(*args)


def micro_cases():
    rng = random.Random(0)
    for name, p, n in (("1009", 1009, 1), ("3", 3, 6), ("2^61-1", 2**61 - 1, 1)):
        F, c, py = kernels(p, n)
        xs = [(rng.randrange(F.q), rng.randrange(F.q)) for _ in range(200)]
        es = [rng.randrange(F.q * F.q) for _ in range(200)]
        label = f"p={name} n={n}"

        def mul(k, xs=xs):
            for a, b in xs:
                k.mul(a, b)

        def ext_pow(k, xs=xs, es=es):
            for x, e in zip(xs, es):
                k.ext_pow(x, e)

        yield label, "200 x mul", mul, c, py
        yield label, "200 x ext_pow", ext_pow, c, py
        if F.q <= 2000:
            yield label, "legendre_table", lambda k: k.legendre_table(), c, py


def end_to_end(repeat):
    argv = [sys.executable, "-m", "fqstruct", "verify", "all", "--q-range", "3..60"]
    times = {}
    for name, extra in (("cython", {}), ("python", {"FQSTRUCT_PURE_PYTHON": "1"})):
        env = dict(os.environ, **extra)
        times[name] = min(
            timeit.repeat(lambda: subprocess.run(argv, env=env, capture_output=True, check=True), number=1, repeat=repeat)
        )
    return times


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if CFieldKernel is None:
        sys.exit("compiled kernel not built; reinstall with Cython available")

    print(f"{'field':<22}{'case':<18}{'cython ms':>12}{'python ms':>12}{'speedup':>10}")
    for label, case, fn, c, py in micro_cases():
        tc = min(timeit.repeat(lambda: fn(c), number=1, repeat=args.repeat)) * 1000
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat)) * 1000
        print(f"{label:<22}{case:<18}{tc:>12.3f}{tp:>12.3f}{tp / tc:>9.1f}x")

    t = end_to_end(max(1, args.repeat // 2))
    print(f"{'cli verify all':<22}{'q in 3..60':<18}{t['cython'] * 1000:>12.1f}{t['python'] * 1000:>12.1f}"
          f"{t['python'] / t['cython']:>9.1f}x")


if __name__ == "__main__":
    main()
