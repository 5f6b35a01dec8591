"""Compare the compiled kernels with the pure Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Part one times the kernels on random integer matrices.  The tracked Smith
form of a random dense matrix quickly needs transforms beyond 64 bits; the
compiled kernel then falls back to Python, which shows up as no speedup.  Part two times a few
library workloads end to end, once per backend, each in a fresh interpreter
(the backend is chosen at import through SCHURKIT_PURE_PYTHON).
"""
import argparse
import copy
import os
import random
import subprocess
import sys
import timeit

from schurkit import _pykernels

try:
    from schurkit import _kernels
except ImportError:
    _kernels = None

WORKLOADS = {
    "homology of S^(3,2,1)(random 2x3)": (
        "from schurkit.schur_complexes import schur_complex, random_map\n"
        "import random\n"
        "sc = schur_complex('3,2,1', random_map(2, 3, random.Random(1)))\n"
        "sc.homology()"),
    "dense box-map cokernel S^(2,2,1)(Z^3)": (
        "from schurkit.schur_weyl import direct_cokernel\n"
        "direct_cokernel('2,2,1', 3)"),
    "Plucker ring (5,2) degree 3": (
        "from schurkit.schur_weyl import plucker_graded_piece\n"
        "plucker_graded_piece(5, 2, 3)"),
    "Schur complex suite (criterion 5)": (
        "import os\nos.environ['SCHURKIT_QUIET'] = '1'\n"
        "from schurkit.suites import suite_schur_complex\n"
        "suite_schur_complex()"),
}


def random_matrix(rng, rows, cols, bound, density):
    return [[rng.randint(-bound, bound) if rng.random() < density else 0
             for _ in range(cols)] for _ in range(rows)]


def bench_kernels(repeat):
    rng = random.Random(0)
    print(f"{'kernel':<28}{'size':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for rows, cols, bound, density in [(10, 10, 5, 0.6), (30, 30, 3, 0.3),
                                       (60, 40, 2, 0.2), (80, 80, 1, 0.1)]:
        A = random_matrix(rng, rows, cols, bound, density)
        for name, fn in (("snf (tracked)", "snf"), ("snf (invariants only)", "snf0"),
                         ("bareiss rank", "bareiss_rank")):
            def run(mod):
                B = copy.deepcopy(A)
                if fn == "snf":
                    mod.snf(B, rows, cols, True, True)
                elif fn == "snf0":
                    mod.snf(B, rows, cols, False, False)
                else:
                    mod.bareiss_rank(B, rows, cols)
            tp = min(timeit.repeat(lambda: run(_pykernels), number=1, repeat=repeat))
            if _kernels is not None:
                tc = min(timeit.repeat(lambda: run(_kernels), number=1, repeat=repeat))
                print(f"{name:<28}{f'{rows}x{cols}':>10}{tp:>12.4f}{tc:>12.4f}"
                      f"{tp / tc:>9.1f}x")
            else:
                print(f"{name:<28}{f'{rows}x{cols}':>10}{tp:>12.4f}{'n/a':>12}")


def bench_workloads(repeat):
    print(f"\n{'workload':<40}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, code in WORKLOADS.items():
        times = {}
        for backend in ("python", "cython"):
            env = dict(os.environ)
            env.pop("SCHURKIT_PURE_PYTHON", None)
            if backend == "python":
                env["SCHURKIT_PURE_PYTHON"] = "1"
            prog = ("import time\nt = time.perf_counter()\n" + code +
                    "\nprint(time.perf_counter() - t)")
            best = None
            for _ in range(repeat):
                out = subprocess.run([sys.executable, "-c", prog], env=env,
                                     capture_output=True, text=True, check=True)
                t = float(out.stdout.strip().splitlines()[-1])
                best = t if best is None else min(best, t)
            times[backend] = best
        print(f"{name:<40}{times['python']:>12.3f}{times['cython']:>12.3f}"
              f"{times['python'] / times['cython']:>9.1f}x")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--kernels-only", action="store_true")
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    bench_kernels(args.repeat)
    if not args.kernels_only and _kernels is not None:
        bench_workloads(args.repeat)


if __name__ == "__main__":
    main()
