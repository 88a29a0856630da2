"""Reproduce the evens/odds/ends experiment and print a comparison table.

    python scripts/evens_odds_ends.py --n 1000000
"""

import argparse

from fairjoin.bench import BenchConfig, bench_cases, generate_workload, run_case


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--skip-naive-left", action="store_true", help="skip the slow unfair nesting")
    args = ap.parse_args()

    workload = generate_workload(args.n)
    cfg = BenchConfig(n=args.n, repeat=1, pairs=False)
    print(f"{'case':<24}{'mode':<7}{'probes':>10}{'seeks':>10}{'ms':>12}")
    for mode in ("naive", "fair"):
        for label, arrays, assoc in bench_cases(cfg, workload):
            if args.skip_naive_left and mode == "naive" and assoc == "left":
                continue
            row = run_case(label, arrays, mode, assoc)
            print(f"{label:<24}{mode:<7}{row.probes:>10}{row.seeks:>10}{row.wall_seconds * 1000:>12.3f}")


if __name__ == "__main__":
    main()
