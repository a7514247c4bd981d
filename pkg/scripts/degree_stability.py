"""Recompute degree profiles under several seeds and primes, and time each stage.

    python3 scripts/degree_stability.py --max-order 600 --seeds 3 --primes 2

Any disagreement between runs is printed; the stage timings (closure, classes,
degrees) are summed per series.
"""
import argparse
import sys
import time
from collections import defaultdict

from u3atlas import catalog
from u3atlas.chardeg import character_degrees, choose_prime, next_admissible_prime


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=600)
    ap.add_argument("--series", default=None)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--primes", type=int, default=2)
    args = ap.parse_args()

    series = args.series.split(",") if args.series else None
    stage = defaultdict(lambda: [0.0, 0.0, 0.0])
    bad = 0
    for entry in catalog.enumerate(args.max_order, series=series):
        t0 = time.perf_counter()
        G = catalog.build(entry.spec)
        t1 = time.perf_counter()
        G.classes
        t2 = time.perf_counter()
        p = choose_prime(G)
        primes = [p]
        for _ in range(args.primes - 1):
            primes.append(next_admissible_prime(G, primes[-1]))
        seen = {}
        for q in primes:
            for seed in range(args.seeds):
                seen[(q, seed)] = character_degrees(G, p=q, seed=seed)
        t3 = time.perf_counter()
        acc = stage[entry.spec.series]
        acc[0] += t1 - t0
        acc[1] += t2 - t1
        acc[2] += (t3 - t2) / len(seen)
        if len(set(map(str, seen.values()))) > 1:
            bad += 1
            print("DISAGREE %s %s" % (entry.spec, {k: str(v) for k, v in seen.items()}))

    print("%-16s %9s %9s %9s" % ("series", "closure", "classes", "degrees"))
    for name, (a, b, c) in sorted(stage.items(), key=lambda kv: -sum(kv[1])):
        print("%-16s %8.2fs %8.2fs %8.2fs" % (name, a, b, c))
    print("%d disagreements" % bad)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
