"""Compare the compiled kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``. The end-to-end rows run
``convert`` in a subprocess per backend so the import-time dispatch is honored.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from unarynfa import _kernels_py
from unarynfa.fuzz import random_nfa

try:
    from unarynfa import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = """
import random, time
from unarynfa import convert, BACKEND
from unarynfa.fuzz import random_nfa
rng = random.Random({seed})
cases = [random_nfa(rng, {states}) for _ in range({count})]
start = time.perf_counter()
for a in cases:
    convert(a)
print(BACKEND, time.perf_counter() - start)
"""


def csr_args(a, upto):
    indptr, indices, finals = a._csr
    return (a.state_count, indptr, indices, a.initial, finals, upto)


def dense(size, density, rng):
    flat = bytearray(size * size)
    for i in range(size):
        flat[i * size + (i + 1) % size] = 1
        for j in range(size):
            if rng.random() < density:
                flat[i * size + j] = 1
    return bytes(flat)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_rows(repeat):
    rng = random.Random(7)
    rows = []
    for states, upto in ((50, 2_000), (200, 20_000), (1000, 50_000)):
        a = random_nfa(rng, states)
        args = csr_args(a, upto)
        rows.append((f"accepting_lengths n={a.state_count} upto={upto}",
                     lambda m, args=args: m.accepting_lengths(*args)))
    for size in (8, 16, 32):
        flat = dense(size, 0.15, rng)
        rows.append((f"closed_walk_lengths size={size}",
                     lambda m, size=size, flat=flat: m.closed_walk_lengths(size, flat, size)))
    for label, call in rows:
        py = best(lambda: call(_kernels_py), repeat)
        if _ckernels is None:
            print(f"{label:45s} python {py * 1e3:9.2f} ms   cython  unavailable")
            continue
        cy = best(lambda: call(_ckernels), repeat)
        print(f"{label:45s} python {py * 1e3:9.2f} ms   cython {cy * 1e3:9.2f} ms   x{py / cy:6.1f}")


def end_to_end(states, count):
    code = END_TO_END.format(seed=11, states=states, count=count)
    for backend in ("python", "auto"):
        env = dict(os.environ)
        env.pop("UNARYNFA_KERNELS", None)
        if backend == "python":
            env["UNARYNFA_KERNELS"] = "python"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True).stdout.split()
        print(f"convert x{count} (n<={states}) backend={out[0]:7s} {float(out[1]):8.3f} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--states", type=int, default=20)
    parser.add_argument("--count", type=int, default=100)
    args = parser.parse_args()
    kernel_rows(args.repeat)
    end_to_end(args.states, args.count)


if __name__ == "__main__":
    main()
