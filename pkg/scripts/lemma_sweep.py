"""Run the full lemma registry exhaustively on every web with at most N vertices.

    python3 scripts/lemma_sweep.py --max-n 4 --jobs 8

Prints per-check case and failure counts as JSON, with the first witness of
each failing check. Exits 1 if any check fails.
"""

import argparse
import collections
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from webcalc import oracle
from webcalc.io import web_document
from webcalc.lemmas import run_suite


def _sweep(args):
    n, shard, shards, max_cases = args
    budget = oracle.EnumerationBudget(max_vertices=n, max_cases=max_cases)
    cases, fails, first = collections.Counter(), collections.Counter(), {}
    count = 0
    for i, w in enumerate(oracle.all_webs(n)):
        if i % shards != shard:
            continue
        count += 1
        for r in run_suite(w, budget, exhaustive=True).results:
            cases[r.name] += r.cases
            if not r.passed:
                fails[r.name] += 1
                first.setdefault(r.name, {"web": web_document(w), "witness": r.witness})
    return count, cases, fails, first


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--max-cases", type=int, default=10**6)
    opts = ap.parse_args()

    t0 = time.perf_counter()
    tasks = [(n, s, opts.jobs, opts.max_cases) for n in range(1, opts.max_n + 1) for s in range(opts.jobs)]
    with ProcessPoolExecutor(max_workers=opts.jobs) as ex:
        parts = list(ex.map(_sweep, tasks))
    webs = sum(p[0] for p in parts)
    cases, fails, first = collections.Counter(), collections.Counter(), {}
    for _, c, f, w in parts:
        cases.update(c)
        fails.update(f)
        for k, v in w.items():
            first.setdefault(k, v)
    report = {
        "max_n": opts.max_n,
        "webs": webs,
        "seconds": round(time.perf_counter() - t0, 1),
        "checks": {k: {"cases": cases[k], "failing_webs": fails[k]} for k in sorted(cases)},
        "first_failures": first,
    }
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    print()
    return 1 if fails else 0


if __name__ == "__main__":
    sys.exit(main())
