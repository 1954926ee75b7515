"""Exhaustive maximisation of the genus functional over a constraint profile.

The prefix is forced and the plateau is a run of equal entries, so an
admissible sequence is determined by the plateau end ``n`` and a tail: a list
of parts below the plateau height, each at least 2 smaller than the one
before. The enumerator walks ``n`` upward and recurses over tails, pruning
any branch whose largest reachable tail sum falls short of the remaining mass.
The enumerator never consults the closed forms or the templates; only
``verify`` brings them in, to compare against it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from collections.abc import Iterator

from quadgenus import bounds, extremal
from quadgenus.errors import BudgetExceededError
from quadgenus.gamma import (
    ConstraintProfile,
    GammaSequence,
    genus_functional,
    is_admissible,
    large_profile,
    small_profile,
    theta_k_profile,
)
from quadgenus.invariants import CurveParams, Regime, regime, theta0_and_eps_prime

DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV = "QUADGENUS_NODE_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class OracleResult:
    max_value: int
    argmax_sequences: tuple[GammaSequence, ...]
    search_space_size: int
    max_support: int


def _staircase_sum(top: int) -> int:
    # top + (top - 2) + ... over positive terms
    if top <= 0:
        return 0
    r = (top + 1) // 2
    return r * top - r * (r - 1)


class _Counter:
    def __init__(self, budget: int) -> None:
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"enumeration exceeded {self.budget} nodes; use smaller instance"
            )


def _tails(remaining: int, cap: int, counter: _Counter) -> Iterator[tuple[int, ...]]:
    """Gap-2 descending tails summing to ``remaining`` with first part <= cap, ascending lex order."""
    counter.tick()
    if remaining == 0:
        yield ()
        return
    for first in range(1, min(cap, remaining) + 1):
        rest = remaining - first
        if rest > _staircase_sum(first - 2):
            continue
        for tail in _tails(rest, first - 2, counter):
            yield (first,) + tail


def enumerate_admissible(
    profile: ConstraintProfile, node_budget: int | None = None
) -> Iterator[GammaSequence]:
    """Yield every admissible sequence once, in increasing lexicographic order."""
    counter = _Counter(default_budget() if node_budget is None else node_budget)
    p, h = profile.prefix_length, profile.plateau_height
    prefix = tuple(2 * l + 1 for l in range(p))
    n = p
    while p * p + h * (n - p) <= profile.mass:
        if n >= profile.n_min:
            head = prefix + (h,) * (n - p)
            for tail in _tails(profile.mass - sum(head), h - 1, counter):
                yield GammaSequence(head + tail)
        n += 1


def oracle_max(profile: ConstraintProfile, node_budget: int | None = None) -> OracleResult:
    best = None
    argmax: list[GammaSequence] = []
    size = support = 0
    for seq in enumerate_admissible(profile, node_budget):
        size += 1
        support = max(support, len(seq))
        value = genus_functional(seq)
        if best is None or value > best:
            best, argmax = value, [seq]
        elif value == best:
            argmax.append(seq)
    if best is None:
        raise ValueError(f"no admissible sequence for {profile}")
    return OracleResult(best, tuple(argmax), size, support)


@dataclass(frozen=True)
class Check:
    name: str
    expected: int | bool
    actual: int | bool
    witness: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerificationReport:
    d: int
    k: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "expected": c.expected, "actual": c.actual,
                 "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"(d={self.d}, k={self.k})"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  {mark} {c.name:<{width}}  expected={c.expected} actual={c.actual}"
            if c.witness and not c.passed:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)


def _check_template(report: VerificationReport, label: str, template, target: int) -> None:
    seq = template.sequence
    report.checks.append(Check(f"{label} functional", target, genus_functional(seq), seq.render()))
    report.checks.append(Check(f"{label} admissible", True, bool(is_admissible(seq, template.profile)), seq.render()))


def verify(d: int, k: int, node_budget: int | None = None) -> VerificationReport:
    """Compare every applicable closed form and template against the oracle."""
    CurveParams(d, k)
    report = VerificationReport(d, k)
    checks = report.checks
    if regime(d, k) is Regime.LARGE:
        profile, d_eff, k_eff, tag = large_profile(d, k), d, k, "large"
        tilde = extremal.build_tilde_gamma_large(d, k)
    else:
        theta0 = theta0_and_eps_prime(d, k)[0]
        profile, d_eff, k_eff, tag = small_profile(d, k), d, theta0, "small"
        tilde = extremal.build_tilde_gamma_small(d, k)

    result = oracle_max(profile, node_budget)
    pi_value = bounds.pi(d_eff, k_eff)
    checks.append(Check(f"{tag} oracle == pi", result.max_value, pi_value,
                        result.argmax_sequences[0].render()))
    checks.append(Check(f"{tag} support <= n_min + prefix", True,
                        result.max_support <= profile.n_min + profile.prefix_length))
    _check_template(report, "tilde", tilde, pi_value)
    _check_template(report, "hat", extremal.build_hat_gamma(d_eff, k_eff), bounds.capital_pi(d_eff, k_eff))

    report_bound = bounds.genus_bound(d, k)
    checks.append(Check("bound == pi - xi", pi_value - bounds.xi(d_eff, k_eff), report_bound.bound_g_minus_1))

    if k == 1 and d >= 2:
        balanced = (-(-d // 2) - 1) * (d // 2 - 1)
        checks.append(Check("quadric surface genus", balanced, pi_value + 1))

    if regime(d, k) is Regime.SMALL and d > k * k:
        no_small = bounds.bound_no_small_curve(d, k)
        tk = oracle_max(theta_k_profile(d, k), node_budget)
        checks.append(Check("theta=k oracle == closed form", tk.max_value, no_small,
                            tk.argmax_sequences[0].render()))
        _check_template(report, "theta=k template", extremal.build_tilde_gamma_theta_k(d, k), no_small)
        checks.append(Check("theta=k bound < pi(d, theta0)", True, no_small < pi_value))
    return report
