"""Time the compiled series summation against the pure-Python fallback.

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import timeit

from alpharm._backend import available_backends


def cases():
    return {
        "2F1 x=0.5": ((1.0, 1.0), (2.0,), 0.5),
        "2F1 x=0.99": ((0.5, -0.75), (1.0,), 0.99),
        "3F2 x=0.99": ((1.0, 1.5, 2.0), (1.5, 1.5), 0.99),
        "3F2 x=0.9999": ((1.0, 1.5, 2.0), (1.5, 1.5), 0.9999),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = available_backends()
    names = sorted(backends)
    print(f"{'case':32s}" + "".join(f"{n:>14s}" for n in names) + "   speedup")
    for label, (upper, lower, x) in cases().items():
        def call(mod):
            return mod.series_sum(upper, lower, x, 1e-15, 2_000_000, 3)

        best = {}
        for name in names:
            mod = backends[name]
            number = max(1, int(0.2 / max(timeit.timeit(lambda: call(mod), number=1), 1e-6)))
            t = min(timeit.repeat(lambda: call(mod), number=number, repeat=args.repeat)) / number
            best[name] = t
        row = f"{label:32s}" + "".join(f"{best[n] * 1e6:12.1f}us" for n in names)
        if "cython" in best:
            row += f"   {best['python'] / best['cython']:7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
