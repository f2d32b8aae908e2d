"""Time the numba kernels against the numpy fallback on growing algebras.

    python benchmarks/bench_kernels.py [--repeat 5]

The numba timings exclude the first (compiling) call; outputs of the two
backends are compared for equality on every case.
"""

import argparse
import time

import numpy as np

from bcc import _kernels
from bcc.algebra import build_table
from bcc.center import d1_star_matrix
from bcc.exactla import FieldSpec
from bcc.families import cycle, two5
from bcc.quiver import build_quiver

CASES = [
    ("cycle:3,2", lambda: cycle(3, 2)),
    ("two5", two5),
    ("cycle:5,3", lambda: cycle(5, 3)),
    ("cycle:8,4", lambda: cycle(8, 4)),
    ("cycle:12,5", lambda: cycle(12, 5)),
]
P = 1_000_003


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"{'case':<12}{'dim':>6}  {'kernel':<14}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for name, make in CASES:
        table = build_table(build_quiver(make()))
        d1 = d1_star_matrix(table, FieldSpec(P)).matrix
        mat = np.array(d1.entries, dtype=np.int64) % P

        def product(q=table.quiver):
            return build_table(q).product

        kernels = [
            ("product", product),
            ("assoc", lambda t=table: _kernels.associativity_defects(t.product)),
            ("rref mod p", lambda m=mat: _kernels.rref_mod_p(m, P)[1]),
        ]
        for kname, fn in kernels:
            _kernels.set_backend("numba")
            fn()  # compile / load cache
            t_jit, out_jit = best_of(fn, args.repeat)
            _kernels.set_backend("numpy")
            t_np, out_np = best_of(fn, args.repeat)
            assert np.array_equal(np.asarray(out_jit), np.asarray(out_np)), (name, kname)
            print(f"{name:<12}{table.dim:>6}  {kname:<14}{t_jit * 1e3:>10.2f}{t_np * 1e3:>10.2f}{t_np / t_jit:>8.1f}x")
    _kernels.set_backend("numba")


if __name__ == "__main__":
    main()
