#!/usr/bin/env python3
"""Measure invariant drift and class stability under random motions.

Prints one summary line per arithmetic mode. Exact mode should report zero
drift and zero class changes; float mode reports the worst error relative to
max(1, |I|).
"""

import argparse
import random
import time

from pe_conics import classify, invariants, transform
from pe_conics.synthesis import random_conic, random_motion


def run(n_conics: int, n_motions: int, exact: bool, seed: int) -> dict:
    rng = random.Random(seed)
    worst = [0.0] * 3
    changed = 0
    t0 = time.perf_counter()
    for _ in range(n_conics):
        c = random_conic(rng, exact=exact)
        base = invariants(c).as_tuple()[:3]
        cid = classify(c).class_id
        for _ in range(n_motions):
            moved = transform(c, random_motion(rng, exact=exact))
            got = invariants(moved).as_tuple()[:3]
            for k in range(3):
                worst[k] = max(worst[k], abs(float(got[k] - base[k])) / max(1.0, abs(float(base[k]))))
            if exact:
                changed += classify(moved).class_id != cid
    return {"worst": worst, "changed": changed, "seconds": time.perf_counter() - t0}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--conics", type=int, default=200)
    ap.add_argument("--motions", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for exact in (True, False):
        r = run(args.conics, args.motions, exact, args.seed)
        label = "exact" if exact else "float"
        drift = " ".join(f"I{k + 1}={w:.2e}" for k, w in enumerate(r["worst"]))
        extra = f" class changes={r['changed']}" if exact else ""
        print(f"{label}: {args.conics}x{args.motions} motions, worst drift {drift}{extra} ({r['seconds']:.2f}s)")


if __name__ == "__main__":
    main()
