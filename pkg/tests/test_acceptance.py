"""Exit criteria. Each test records a one-line PASS/FAIL in the terminal summary."""

import csv
import io
import time

import pytest

from quadgenus.bounds import (
    CSV_HEADER,
    bound_no_small_curve,
    capital_pi,
    genus_bound,
    pi,
)
from quadgenus.cli import main
from quadgenus.extremal import (
    build_hat_gamma,
    build_tilde_gamma_large,
    build_tilde_gamma_small,
    build_tilde_gamma_theta_k,
    improve,
)
from quadgenus.gamma import genus_functional, large_profile, plateau_end, small_profile, theta_k_profile
from quadgenus.invariants import n0_and_eps, theta0_and_eps_prime
from quadgenus.oracle import enumerate_admissible, oracle_max
from tests.acceptance_log import record


def large_grid():
    for k in range(1, 7):
        for d in range(2 * k * (k - 1) + 1, 201):
            yield d, k


def theta_k_grid():
    for k in range(2, 7):
        for d in range(k * k + 1, 2 * k * (k - 1) + 1):
            yield d, k


def small_grid():
    for k in range(2, 7):
        for d in range(1, 2 * k * (k - 1) + 1):
            yield d, k


def _finish(number, title, failures, detail=""):
    record(number, title, not failures, detail if not failures else f"first failure: {failures[0]}")
    assert not failures, failures[:5]


def test_criterion_1_large_degree_oracle_equivalence():
    start = time.perf_counter()
    results = {(d, k): oracle_max(large_profile(d, k)).max_value for d, k in large_grid()}
    elapsed = time.perf_counter() - start
    failures = [(d, k, v, pi(d, k)) for (d, k), v in results.items() if v != pi(d, k)]
    anchors = {(4, 1): 0, (9, 2): 5, (14, 3): 15, (15, 3): 18}
    failures += [(cell, results[cell], v) for cell, v in anchors.items() if results[cell] != v]
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    _finish(1, "oracle == pi on the large-degree grid", failures, f"{len(results)} cells, {elapsed:.2f}s")


def test_criterion_2_theta_k_oracle_equivalence():
    start = time.perf_counter()
    results = {(d, k): oracle_max(theta_k_profile(d, k)).max_value for d, k in theta_k_grid()}
    elapsed = time.perf_counter() - start
    failures = [(d, k, v, bound_no_small_curve(d, k)) for (d, k), v in results.items()
                if v != bound_no_small_curve(d, k)]
    failures += [(cell, results[cell], v) for cell, v in {(10, 3): 6, (12, 3): 10}.items() if results[cell] != v]
    if elapsed >= 30:
        failures.append(f"runtime {elapsed:.1f}s >= 30s")
    _finish(2, "theta=k oracle == closed form", failures, f"{len(results)} cells, {elapsed:.2f}s")


def test_criterion_3_small_degree_dispatch():
    failures = []
    for d, k in small_grid():
        theta0, eps_prime = theta0_and_eps_prime(d, k)
        xi_prime = 0 if eps_prime in {0, 1, 2, 2 * theta0 - 1} else 1
        if genus_bound(d, k).bound_g_minus_1 != pi(d, theta0) - xi_prime:
            failures.append(("dispatch", d, k))
        if d > k * k and not bound_no_small_curve(d, k) < pi(d, theta0):
            failures.append(("strict", d, k))
    _finish(3, "small-degree dispatch and strict theta=k inequality", failures)


def test_criterion_4_template_certification():
    failures = []
    for d, k in large_grid():
        eps = n0_and_eps(d, k)[1]
        tilde, hat = build_tilde_gamma_large(d, k), build_hat_gamma(d, k)
        if genus_functional(tilde.sequence) != pi(d, k):
            failures.append(("tilde", d, k))
        if genus_functional(hat.sequence) != capital_pi(d, k):
            failures.append(("hat", d, k))
        if tilde.repaired != (k + 1 <= eps <= 2 * k - 1):
            failures.append(("repaired flag", d, k))
        if sum(tilde.sequence) != d or sum(hat.sequence) != d:
            failures.append(("mass", d, k))
    for d, k in small_grid():
        theta0 = theta0_and_eps_prime(d, k)[0]
        tilde, hat = build_tilde_gamma_small(d, k), build_hat_gamma(d, theta0)
        if genus_functional(tilde.sequence) != pi(d, theta0) or sum(tilde.sequence) != d:
            failures.append(("small tilde", d, k))
        if genus_functional(hat.sequence) != capital_pi(d, theta0) or sum(hat.sequence) != d:
            failures.append(("small hat", d, k))
    for d, k in theta_k_grid():
        t = build_tilde_gamma_theta_k(d, k)
        if genus_functional(t.sequence) != bound_no_small_curve(d, k) or sum(t.sequence) != d:
            failures.append(("theta=k", d, k))
    _finish(4, "template functionals equal closed forms", failures)


def test_criterion_5_sharpness_table():
    failures = []
    for d, k in large_grid():
        eps = n0_and_eps(d, k)[1]
        first = {0, 1, 2, 2 * k - 1}
        coincide = build_tilde_gamma_large(d, k).sequence == build_hat_gamma(d, k).sequence
        if coincide != (eps in first):
            failures.append(("coincide", d, k, eps, coincide))
        if eps in {3, 2 * k - 2} - first and capital_pi(d, k) != pi(d, k) - 1:
            failures.append(("pi - 1", d, k, eps, pi(d, k) - capital_pi(d, k)))
    _finish(5, "hat == tilde iff eps in {0,1,2,2k-1}; capital_pi == pi - 1 on {3,2k-2}", failures)


def test_criterion_6_integrality():
    start = time.perf_counter()
    count = 0
    for k in range(1, 9):
        for d in range(1, 401):
            if d > 2 * k * (k - 1):
                values = [pi(d, k), capital_pi(d, k)]
            else:
                theta0 = theta0_and_eps_prime(d, k)[0]
                values = [pi(d, theta0), capital_pi(d, theta0)]
                if d > k * k:
                    values.append(bound_no_small_curve(d, k))
            assert all(type(v) is int for v in values)
            count += len(values)
    elapsed = time.perf_counter() - start
    failures = [] if elapsed < 10 else [f"runtime {elapsed:.1f}s >= 10s"]
    _finish(6, "closed forms integral for k <= 8, d <= 400", failures, f"{count} values, {elapsed:.2f}s")


def test_criterion_7_quadric_surface_cross_check():
    failures = [d for d in range(2, 401) if pi(d, 1) + 1 != (-(-d // 2) - 1) * (d // 2 - 1)]
    _finish(7, "pi(d,1) + 1 == (ceil(d/2)-1)(floor(d/2)-1)", failures)


def test_criterion_8_local_search():
    start = time.perf_counter()
    failures = []
    starts = 0
    for k in range(1, 4):
        for d in range(1, 41):
            cases = []
            if d > 2 * k * (k - 1):
                cases.append((large_profile(d, k), build_tilde_gamma_large(d, k).sequence))
            else:
                cases.append((small_profile(d, k), build_tilde_gamma_small(d, k).sequence))
                if d > k * k:
                    cases.append((theta_k_profile(d, k), build_tilde_gamma_theta_k(d, k).sequence))
            for profile, tilde in cases:
                best = oracle_max(profile).max_value
                optimal_fixed_points = set()
                for seq in enumerate_admissible(profile):
                    starts += 1
                    out = improve(seq, profile)
                    if genus_functional(out) < genus_functional(seq):
                        failures.append(("decreased", d, k, seq.render()))
                    if improve(out, profile) != out:
                        failures.append(("not a fixed point", d, k, out.render()))
                    if plateau_end(out, profile) != profile.n_min:
                        failures.append(("n != n_min", d, k, out.render()))
                    if genus_functional(out) == best:
                        optimal_fixed_points.add(out)
                if improve(tilde, profile) != tilde or tilde not in optimal_fixed_points:
                    failures.append(("tilde missing", d, k))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    _finish(8, "improve terminates, is monotone, fixes tilde", failures, f"{starts} starts, {elapsed:.2f}s")


def _exit_code(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_criterion_9_cli_contract(capsys):
    expected = [
        (["compute", "--d", "15", "--k", "3", "--format", "csv"], 0),
        (["compute", "--d", "9", "--k", "2"], 0),
        (["compute", "--d", "0", "--k", "2"], 1),
        (["sweep", "--k", "1", "--d-from", "2", "--d-to", "6"], 0),
        (["sweep", "--k", "3", "--d-from", "13", "--d-to", "18"], 0),
        (["sweep", "--k", "2", "--d-from", "5", "--d-to", "4"], 1),
        (["extremal", "--d", "9", "--k", "2"], 0),
        (["extremal", "--d", "15", "--k", "3"], 0),
        (["extremal", "--d", "4", "--k", "1"], 0),
        (["verify", "--k-max", "3", "--d-max", "60"], 0),
        (["verify", "--k-max", "1", "--d-max", "10"], 0),
        (["verify", "--k-max", "0", "--d-max", "10"], 1),
    ]
    failures = []
    for argv, code in expected:
        got = _exit_code(argv)
        if got != code:
            failures.append((argv, got, code))
    capsys.readouterr()

    assert main(["sweep", "--k", "6", "--d-from", "1", "--d-to", "500", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    if len(rows) != 500:
        failures.append(f"{len(rows)} rows")
    for row in rows:
        d, k = int(row["d"]), int(row["k"])
        recomputed = tuple(str(v) for v in genus_bound(d, k).csv_row())
        if tuple(row[h] for h in CSV_HEADER) != recomputed:
            failures.append(("round trip", d, k))
    _finish(9, "CLI exit codes and 500-row CSV round trip", failures)
