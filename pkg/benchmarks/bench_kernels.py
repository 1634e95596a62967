"""Time the compiled and pure-Python search loops on identical inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from pythapair import _kernels_py as pure

try:
    from pythapair import _ckernels as compiled
except ImportError:
    compiled = None

CASES = [
    ("witness_scan (7, 24), r <= 200", "witness_scan", (7, 24, 200)),
    ("witness_scan (441, 400), r <= 200", "witness_scan", (441, 400, 200)),
    ("curve_search A=337 B=20736 d=1, h <= 200", "curve_search", (337, 20736, 1, 200)),
    ("curve_search A=625 B=28224 d=-7, h <= 200", "curve_search", (625, 28224, -7, 200)),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        print("compiled extension not built; only the pure-Python timings are shown")
    print(f"{'case':<45}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn, argv in CASES:
        t_py = min(timeit.repeat(lambda: getattr(pure, fn)(*argv), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{name:<45}{t_py:>12.4f}")
            continue
        assert getattr(compiled, fn)(*argv) == getattr(pure, fn)(*argv)
        t_c = min(timeit.repeat(lambda: getattr(compiled, fn)(*argv), number=1, repeat=args.repeat))
        print(f"{name:<45}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
