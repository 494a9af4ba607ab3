"""Compare the compiled and pure-Python term kernels.

Times the raw kernels on synthetic data, then end-to-end workloads
(a Schur determinant sweep and a characteristic-number batch) in fresh
interpreters with the backend pinned through SCHURHR_PURE_PYTHON.

Run:  python benchmarks/bench_kernels.py
"""

import os
import random
import statistics
import subprocess
import sys
import time
from fractions import Fraction


def _rand_terms(rng, nvars, nterms, rational=False):
    out = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, 6) for _ in range(nvars))
        c = (
            Fraction(rng.randint(-9, 9), rng.randint(1, 7))
            if rational
            else rng.randint(-9, 9)
        )
        if c:
            out[e] = c
    return out


def bench_kernels(mod, label, repeats=5):
    rng = random.Random(0)
    pairs = [
        (_rand_terms(rng, 4, 60), _rand_terms(rng, 4, 60))
        for _ in range(40)
    ]
    rpairs = [
        (_rand_terms(rng, 4, 40, True), _rand_terms(rng, 4, 40, True))
        for _ in range(40)
    ]
    caps = (6, 6, 6, 6)
    rows = []
    for name, fn in [
        ("mul_terms/int", lambda: [mod.mul_terms(a, b) for a, b in pairs]),
        ("mul_terms/frac", lambda: [mod.mul_terms(a, b) for a, b in rpairs]),
        ("mul_capped/int", lambda: [mod.mul_terms_capped(a, b, caps) for a, b in pairs]),
    ]:
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
        rows.append((name, min(times)))
    print(f"--- kernel micro ({label}) ---")
    for name, t in rows:
        print(f"  {name:18s} {t * 1000:8.2f} ms")
    return dict(rows)


END_TO_END = r"""
import time
import schurhr
from schurhr import schur_jt, partitions_up_to
from schurhr.acceptance import crit_fl_positivity
from schurhr.schur import clear_caches

t0 = time.perf_counter()
for lam in partitions_up_to(8):
    for e in (2, 3, 4):
        schur_jt(lam, e)
t1 = time.perf_counter()
crit_fl_positivity(42, workers=1)
t2 = time.perf_counter()
print(f"{schurhr.KERNEL_BACKEND} schur_sweep={t1 - t0:.3f}s positivity_batch={t2 - t1:.3f}s")
"""


def bench_end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["SCHURHR_PURE_PYTHON"] = "1"
    else:
        env.pop("SCHURHR_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True
    )
    print(out.stdout.strip() or out.stderr.strip())


def main():
    from schurhr.kernels import _ref

    ref = bench_kernels(_ref, "python")
    try:
        from schurhr.kernels import _fast
    except ImportError:
        print("compiled kernel not built; micro comparison skipped")
    else:
        fast = bench_kernels(_fast, "cython")
        print("--- speedups (python / cython) ---")
        for name in ref:
            print(f"  {name:18s} {ref[name] / fast[name]:6.2f}x")
    print("--- end to end (fresh interpreters) ---")
    bench_end_to_end(pure=False)
    bench_end_to_end(pure=True)


if __name__ == "__main__":
    main()
