#!/usr/bin/env python3
"""Run every registered claim and print one verdict row per claim.

Typical use:

    python3 scripts/run_claims.py            # all claims at n <= 3
    python3 scripts/run_claims.py --n 2      # faster desk pass
    python3 scripts/run_claims.py --claim DUALITY_PRINCIPLE --n 3 --show-witness
"""

import argparse
import sys
import time

from biposet import CLAIM_DESCRIPTIONS, CLAIM_IDS, replay_finding, verify_claim


def run(claims, n_max, budget, seed, show_witness):
    any_counterexample = False
    width = max(len(c) for c in claims)
    for claim in claims:
        start = time.perf_counter()
        finding = verify_claim(claim, n_max, budget=budget, seed=seed)
        elapsed = time.perf_counter() - start
        replay = "replays" if replay_finding(finding) else "REPLAY FAILED"
        print(f"{claim:<{width}}  {finding.verdict:<22} "
              f"scale={','.join(str(v) for v in finding.scale):<6} "
              f"instances={finding.instances_checked:<12,} "
              f"{elapsed:6.2f}s  {replay}")
        for note in finding.notes:
            print(f"{'':<{width}}  note: {note}")
        if not finding.verified:
            any_counterexample = True
            if show_witness and finding.witness:
                for key, value in finding.witness.items():
                    print(f"{'':<{width}}  witness {key}:")
                    text = value if isinstance(value, str) else repr(value) + "\n"
                    for line in text.rstrip("\n").split("\n"):
                        print(f"{'':<{width}}    {line}")
    return any_counterexample


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--claim", choices=list(CLAIM_IDS), default=None,
                        help="run a single claim (default: all)")
    parser.add_argument("--n", type=int, default=3, help="largest ground-set size")
    parser.add_argument("--budget", type=int, default=None,
                        help="sample budget where exhaustion is off the table")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--show-witness", action="store_true",
                        help="print the stored witness of any counterexample")
    parser.add_argument("--describe", action="store_true",
                        help="list claim descriptions and exit")
    args = parser.parse_args(argv)

    if args.describe:
        for claim in CLAIM_IDS:
            print(f"{claim}: {CLAIM_DESCRIPTIONS[claim]}")
        return 0

    claims = [args.claim] if args.claim else list(CLAIM_IDS)
    any_counterexample = run(claims, args.n, args.budget, args.seed, args.show_witness)
    return 1 if any_counterexample else 0


if __name__ == "__main__":
    sys.exit(main())
