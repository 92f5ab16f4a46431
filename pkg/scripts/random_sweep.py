"""Sampled lemma checks plus Menger/oracle agreement on seeded random webs.

    python3 scripts/random_sweep.py --count 2000 --max-n 9 --seed 0

Each web is drawn from ``random_web(n, p, seed + i)`` with n and p taken from
a generator seeded by ``seed + i``, so any reported failure is reproducible
with ``webcalc gen``.
"""

import argparse
import collections
import json
import random
import sys
import time

from webcalc import oracle
from webcalc.io import random_web
from webcalc.lemmas import run_suite
from webcalc.menger import menger_certificate_check, menger_structure


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-cases", type=int, default=300)
    opts = ap.parse_args()

    t0 = time.perf_counter()
    fails = collections.Counter()
    first = {}
    for i in range(opts.count):
        s = opts.seed + i
        rng = random.Random(s)
        n, p = rng.randint(1, opts.max_n), round(rng.uniform(0.1, 0.45), 3)
        w = random_web(n, p, s)
        st = menger_structure(w)
        if not (menger_certificate_check(w, st) and st.nu == oracle.brute_nu(w)):
            fails["menger"] += 1
            first.setdefault("menger", {"n": n, "p": p, "seed": s})
        budget = oracle.EnumerationBudget(max_vertices=max(opts.max_n, 1), max_cases=opts.max_cases, seed=s)
        for r in run_suite(w, budget).failures:
            fails[r.name] += 1
            first.setdefault(r.name, {"n": n, "p": p, "seed": s, "witness": r.witness})
    report = {
        "count": opts.count,
        "seconds": round(time.perf_counter() - t0, 1),
        "failures": dict(sorted(fails.items())),
        "first_failures": first,
    }
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    print()
    return 1 if fails else 0


if __name__ == "__main__":
    sys.exit(main())
