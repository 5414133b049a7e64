"""Compare the compiled convolution kernels against the pure-Python twins.

Usage: python benchmarks/bench_ring.py [repeats]

Times mul_trunc / pow_trunc / invert_trunc on dense random elements at two
sizes, plus an end-to-end characteristic-number workload routed through
whichever backend each call names explicitly.
"""

from __future__ import annotations

import random
import sys
import time

from symchar import _ring_py

try:
    from symchar import _ring_core
except ImportError:
    _ring_core = None

from symchar.charclass import pontrjagin_numbers, quaternionic_projective


def _time(fn, repeats: int) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return time.perf_counter() - start


def _bench_kernels(repeats: int) -> None:
    rng = random.Random(4242)
    for top, coeff_bound in [(8, 9), (16, 10**6)]:
        a = [rng.randint(-coeff_bound, coeff_bound) for _ in range(top + 1)]
        b = [rng.randint(-coeff_bound, coeff_bound) for _ in range(top + 1)]
        unit = [1] + a[1:]
        cases = [
            ("mul_trunc", lambda mod: mod.mul_trunc(a, b, top)),
            ("pow_trunc(k=12)", lambda mod: mod.pow_trunc(a, 12, top)),
            ("invert_trunc", lambda mod: mod.invert_trunc(unit, top)),
        ]
        print(f"\nT = {top}, |coeff| <= {coeff_bound}:")
        for name, call in cases:
            py_time = _time(lambda: call(_ring_py), repeats)
            line = f"  {name:<18} python {py_time * 1e6 / repeats:9.2f} us/op"
            if _ring_core is not None:
                core_time = _time(lambda: call(_ring_core), repeats)
                line += (
                    f"   compiled {core_time * 1e6 / repeats:9.2f} us/op"
                    f"   speedup {py_time / core_time:5.2f}x"
                )
            print(line)


def _bench_pipeline(repeats: int) -> None:
    # whole-table workload; backend here is whichever symchar.ring chose
    # at import (set SYMCHAR_PURE_PYTHON=1 and rerun to compare).
    from symchar.ring import kernel_backend

    space = quaternionic_projective(8)
    elapsed = _time(lambda: pontrjagin_numbers(space), repeats)
    print(
        f"\npontrjagin_numbers(HP^8) via {kernel_backend()} backend: "
        f"{elapsed * 1e3 / repeats:.3f} ms/call"
    )


def main() -> None:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    if _ring_core is None:
        print("compiled kernels not available; timing pure Python only")
    _bench_kernels(repeats)
    _bench_pipeline(max(repeats // 10, 1))


if __name__ == "__main__":
    main()
