"""Tabulate pi - capital_pi and whether the two extremal sequences coincide, per residue eps.

Within one k the gap depends only on eps, so one degree per residue suffices.
"""

import argparse

from quadgenus.bounds import capital_pi, pi, xi
from quadgenus.extremal import build_hat_gamma, build_tilde_gamma_large
from quadgenus.invariants import n0_and_eps


def rows(k):
    seen = {}
    d = 2 * k * (k - 1) + 1
    while len(seen) < 2 * k:
        eps = n0_and_eps(d, k)[1]
        if eps not in seen:
            same = build_tilde_gamma_large(d, k).sequence == build_hat_gamma(d, k).sequence
            seen[eps] = (d, pi(d, k) - capital_pi(d, k), xi(d, k), same)
        d += 1
    return sorted(seen.items())


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=8)
    args = parser.parse_args()
    for k in range(1, args.k_max + 1):
        print(f"k = {k}")
        print("  eps    d  pi-Pi  xi  coincide")
        for eps, (d, gap, x, same) in rows(k):
            flag = "  <- Pi > pi - xi" if gap < x else ""
            print(f"  {eps:3d} {d:4d}  {gap:5d}  {x:2d}  {'yes' if same else 'no':>8}{flag}")


if __name__ == "__main__":
    main()
