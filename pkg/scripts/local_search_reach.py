"""How often does the mass-shifting local search land on the global maximum?

Starts the search from every admissible sequence of each large-degree profile
and reports the share of starts whose fixed point attains the oracle maximum.
"""

import argparse

from quadgenus.extremal import improve
from quadgenus.gamma import genus_functional, large_profile
from quadgenus.oracle import enumerate_admissible, oracle_max


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=4)
    parser.add_argument("--d-max", type=int, default=80)
    args = parser.parse_args()
    for k in range(1, args.k_max + 1):
        starts = hits = 0
        worst = 0
        for d in range(2 * k * (k - 1) + 1, args.d_max + 1):
            profile = large_profile(d, k)
            best = oracle_max(profile).max_value
            for seq in enumerate_admissible(profile):
                gap = best - genus_functional(improve(seq, profile))
                starts += 1
                hits += gap == 0
                worst = max(worst, gap)
        print(f"k={k}: {hits}/{starts} starts reach the maximum, worst shortfall {worst}")


if __name__ == "__main__":
    main()
