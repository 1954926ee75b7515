"""Candidate extremal sequences and the mass-shifting local search.

The large-degree template with ``eps > k`` evaluates to ``-1`` in its last
slot when read literally. ``build_tilde_gamma_large`` keeps that literal
evaluation in ``raw_template`` and repairs it: the negative entry is dropped
and the resulting unit of surplus mass is removed at the smallest tail index
where a decrement keeps the sequence admissible. The oracle module certifies
that the repaired sequence is optimal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from quadgenus.errors import InadmissibleError, RegimeError
from quadgenus.gamma import (
    ConstraintProfile,
    GammaSequence,
    genus_functional,
    is_admissible,
    large_profile,
    plateau_end,
    theta_k_profile,
)
from quadgenus.invariants import (
    CurveParams,
    Regime,
    n0_and_eps,
    nu_decomposition,
    regime,
    theta0_and_eps_prime,
)


@dataclass(frozen=True)
class TemplateReport:
    sequence: GammaSequence
    repaired: bool
    raw_template: tuple[int, ...]
    profile: ConstraintProfile
    note: str = ""

    @property
    def functional(self) -> int:
        return genus_functional(self.sequence)

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "repaired": self.repaired,
            "raw_template": list(self.raw_template),
            "functional": self.functional,
            "note": self.note,
        }


def _strip(values: list[int]) -> tuple[int, ...]:
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _head(k: int, n0: int) -> list[int]:
    # forced prefix then full plateau up to n0 - 1
    return [2 * l + 1 for l in range(k)] + [2 * k] * (n0 - k)


def _require_large(d: int, k: int) -> None:
    CurveParams(d, k)
    if regime(d, k) is not Regime.LARGE:
        raise RegimeError(f"(d={d}, k={k}) is small-degree: d <= 2k(k-1)")


def _require_small(d: int, k: int) -> None:
    CurveParams(d, k)
    if regime(d, k) is not Regime.SMALL:
        raise RegimeError(f"(d={d}, k={k}) is large-degree: d > 2k(k-1)")


def _repair(raw: tuple[int, ...], profile: ConstraintProfile) -> GammaSequence:
    kept = list(raw)
    while kept and kept[-1] < 0:
        kept.pop()
    if min(kept, default=0) < 0:
        raise InadmissibleError(f"negative entry inside template {raw}")
    surplus = sum(kept) - profile.mass
    if surplus < 0:
        raise InadmissibleError(f"template {raw} has a mass deficit")
    start = plateau_end(kept, profile)
    while surplus:
        for i in range(start, len(kept)):
            candidate = kept.copy()
            candidate[i] -= 1
            if is_admissible(candidate, replace(profile, mass=profile.mass + surplus - 1)):
                kept = list(_strip(candidate))
                surplus -= 1
                break
        else:
            raise InadmissibleError(f"cannot repair template {raw}")
    return GammaSequence(tuple(kept))


def build_tilde_gamma_large(d: int, k: int) -> TemplateReport:
    """Maximising sequence for d > 2k(k-1).

    The tail starts from the staircase ``2(k + n0 - l) - 1`` on
    ``[n0, n0 + k - 1]`` and deletes ``eps`` units from it: one unit from each
    of the last ``eps`` steps when ``eps <= k``, otherwise one unit from every
    step and a second unit from the last ``eps - k``.
    """
    _require_large(d, k)
    n0, eps = n0_and_eps(d, k)
    profile = large_profile(d, k)
    values = _head(k, n0)
    for l in range(n0, n0 + k):
        stair = 2 * (k + n0 - l) - 1
        if eps <= k:
            values.append(stair - (1 if l >= n0 + k - eps else 0))
        else:
            tau = eps - k
            values.append(stair - (2 if l >= n0 + k - tau else 1))
    raw = _strip(values)
    if min(raw) >= 0:
        seq = GammaSequence(raw)
        if not is_admissible(seq, profile):
            raise InadmissibleError(f"template {raw} is not admissible")
        return TemplateReport(seq, False, raw, profile)
    seq = _repair(raw, profile)
    return TemplateReport(
        seq, True, raw, profile,
        note="negative tail entry dropped; surplus unit removed at the lowest admissible tail index",
    )


def build_tilde_gamma_small(d: int, k: int) -> TemplateReport:
    """Small-degree template: the large-degree template at ``(d, theta0)``."""
    _require_small(d, k)
    theta0, _ = theta0_and_eps_prime(d, k)
    return build_tilde_gamma_large(d, theta0)


def build_tilde_gamma_theta_k(d: int, k: int) -> TemplateReport:
    """Template when the section is on no curve of degree k - 1 (k^2 < d <= 2k(k-1))."""
    CurveParams(d, k)
    if regime(d, k) is Regime.LARGE:
        raise RegimeError(f"(d={d}, k={k}) is large-degree: d > 2k(k-1)")
    nu, eps_hat = nu_decomposition(d, k)
    values = [2 * l + 1 for l in range(k)]
    for l in range(k, k + nu):
        stair = 2 * (k + nu - l) - 1
        if eps_hat <= nu:
            values.append(stair + (1 if l < k + eps_hat else 0))
        else:
            tau = eps_hat - nu
            values.append(stair + (2 if l < k + tau else 1))
    raw = _strip(values)
    seq = GammaSequence(raw)
    profile = theta_k_profile(d, k)
    if not is_admissible(seq, profile):
        raise InadmissibleError(f"template {raw} is not admissible")
    return TemplateReport(seq, False, raw, profile)


def hat_delta(eps: int) -> int:
    return 1 if eps >= 2 and eps % 2 == 0 else 0


def build_hat_gamma(d: int, k: int) -> TemplateReport:
    """Sequence of a curve linked in a (k, n0) complete intersection to a
    degree-eps curve on a quadric surface.

    Entries below n0 are the forced prefix and the full plateau. From n0 on,
    with ``alpha = ceil(eps / 2)``, the tail is the staircase, lowered by
    ``hat_delta(eps)`` at ``n0 + k - alpha - 1`` and by 2 on
    ``[n0 + k - alpha, n0 + k - 2]``; everything from ``n0 + k - 1`` is zero.
    Rules are tried in that order, so for eps = 0 the slot ``n0 + k - 1``
    keeps its staircase value 1.
    """
    _require_large(d, k)
    n0, eps = n0_and_eps(d, k)
    alpha = (eps + 1) // 2
    delta = hat_delta(eps)
    values = _head(k, n0)
    for l in range(n0, n0 + k):
        stair = 2 * (n0 + k - l) - 1
        if l <= n0 + k - alpha - 2:
            values.append(stair)
        elif l == n0 + k - alpha - 1:
            values.append(stair - delta)
        elif l <= n0 + k - 2:
            values.append(stair - 2)
        else:
            values.append(0)
    raw = _strip(values)
    seq = GammaSequence(raw)
    profile = large_profile(d, k)
    if not is_admissible(seq, profile):
        raise InadmissibleError(f"template {raw} is not admissible")
    return TemplateReport(
        seq, False, raw, profile,
        note="zero range read as starting at n0 + k - 1; entries below n0 filled with prefix and plateau",
    )


class Move(NamedTuple):
    """Shift one unit of mass from ``source`` to the later index ``target``."""

    label: str
    source: int
    target: int


def _label(span: int) -> str:
    return "abcd"[min(span, 4) - 1]


def _shifted(values: tuple[int, ...], move: Move) -> tuple[int, ...]:
    out = list(values) + [0] * (move.target + 1 - len(values))
    out[move.source] -= 1
    out[move.target] += 1
    return _strip(out)


def applicable_moves(gamma: GammaSequence, profile: ConstraintProfile) -> list[Move]:
    """Every admissibility-preserving unit shift, in application order.

    Labels grade moves by span: ``a`` is an adjacent shift, ``b``/``c`` span
    two/three steps and ``d`` anything longer. Order is label, then source,
    then target. The source may be the last plateau entry, which is how a
    move shortens the plateau.
    """
    values = gamma.values
    moves = []
    for source in range(profile.prefix_length, len(values)):
        if values[source] == 0:
            continue
        for target in range(source + 1, len(values) + 1):
            move = Move(_label(target - source), source, target)
            if is_admissible(_shifted(values, move), profile):
                moves.append(move)
    moves.sort()
    return moves


def improve(gamma: GammaSequence, profile: ConstraintProfile) -> GammaSequence:
    """Apply unit mass shifts until none applies.

    Each shift raises the genus functional by ``target - source`` and the
    functional is bounded over admissible sequences, so this terminates.
    """
    if not isinstance(gamma, GammaSequence):
        gamma = GammaSequence(tuple(gamma))
    verdict = is_admissible(gamma, profile)
    if not verdict:
        raise InadmissibleError(f"clauses {','.join(verdict.violations)} violated by {gamma}")
    while True:
        moves = applicable_moves(gamma, profile)
        if not moves:
            return gamma
        gamma = GammaSequence(_shifted(gamma.values, moves[0]))
