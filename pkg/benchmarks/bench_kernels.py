"""Compiled vs pure-Python kernels on the two hot paths.

    python benchmarks/bench_kernels.py [--quick] [--json out.json]

Characters: every chi^lam(2,...,2) for |lam| = n (the bracket's inner loop).
Covers: product-one enumeration for a pillowcase profile at degree 6.
"""

import argparse
import json
import sys
import time

from qdvolumes import kernels, oracle
from qdvolumes.partitions import partitions_of
from qdvolumes.strata import ProfilePair


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_characters(backend, n, repeat):
    rho = (2,) * (n // 2)
    lams = partitions_of(n)

    def run():
        backend.clear_caches()
        return sum(backend.character(lam, rho) ** 2 for lam in lams)

    return _time(run, repeat)


def bench_covers(backend, n, repeat):
    p = ProfilePair((2,), (1, 1))
    invol = oracle._class(n, (2,) * (n // 2))
    hs = [list(oracle._class(n, oracle._padded((m,), n, 1))) for m in p.mu]
    mask = oracle._mask(n, oracle._padded(p.nu, n, 2))
    rep = invol[0]

    def run():
        return backend.count_product_one(n, rep, [list(invol)] * 2 + hs, mask, (rep,))

    return _time(run, repeat)


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    if kernels.compiled_backend is None:
        print("compiled backend not built; nothing to compare", file=sys.stderr)
        return 1
    backends = {"python": kernels.python_backend, "cython": kernels.compiled_backend}
    sizes = (12, 16) if args.quick else (12, 16, 20, 24)
    repeat = 1 if args.quick else 3
    results = []
    for n in sizes:
        row = {"case": f"characters n={n}"}
        vals = set()
        for name, b in backends.items():
            t, v = _time(lambda: bench_characters(b, n, 1)[1], repeat)
            row[name] = t
            vals.add(v)
        row["agree"] = len(vals) == 1
        results.append(row)
    for n in (4, 6):
        row = {"case": f"covers deg={n}"}
        vals = set()
        for name, b in backends.items():
            t, v = bench_covers(b, n, repeat)
            row[name] = t
            vals.add(v)
        row["agree"] = len(vals) == 1
        results.append(row)
    print(f"{'case':22s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}  agree")
    for r in results:
        sp = r["python"] / r["cython"] if r["cython"] > 0 else float("inf")
        r["speedup"] = sp
        print(f"{r['case']:22s} {r['python']:11.4f} {r['cython']:11.4f} {sp:8.1f}  {r['agree']}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2)
    return 0 if all(r["agree"] for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
