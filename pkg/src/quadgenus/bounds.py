"""Closed-form genus bounds, evaluated over the rationals.

Every formula is computed with :class:`fractions.Fraction` and must come out
integral; a fractional value means a transcription bug and raises
``ArithmeticError`` rather than being rounded.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from quadgenus.errors import RegimeError
from quadgenus.invariants import (
    CurveParams,
    InvariantSet,
    Regime,
    invariants,
    n0_and_eps,
    nu_decomposition,
    regime,
    theta0_and_eps_prime,
)

CSV_HEADER = (
    "d", "k", "regime", "n0", "eps", "theta0", "eps_prime", "pi", "xi",
    "bound", "capital_pi", "sharp", "ci_a", "ci_b", "residual_degree",
)


class Sharpness(enum.Enum):
    SHARP_ATTAINED_BY_S = "sharp_attained_by_s"
    SHARP_POSSIBLY_OTHER = "sharp_possibly_other"
    UNKNOWN_CONJECTURAL_PI = "unknown_conjectural_pi"


@dataclass(frozen=True)
class LinkageDescriptor:
    """Complete intersection type and the degree of the residual curve."""

    ci_type: tuple[int, int]
    residual_degree: int
    residual_on_quadric_surface: bool = True
    acm_residual: bool = True


@dataclass(frozen=True)
class BoundReport:
    d: int
    k: int
    regime: Regime
    invariants: InvariantSet
    pi_value: int
    xi_value: int
    bound_g_minus_1: int
    capital_pi: int
    sharp: Sharpness
    linkage: LinkageDescriptor

    def to_dict(self) -> dict:
        return {
            "params": {"d": self.d, "k": self.k},
            "regime": self.regime.value,
            "invariants": asdict(self.invariants),
            "pi_value": self.pi_value,
            "xi_value": self.xi_value,
            "bound_g_minus_1": self.bound_g_minus_1,
            "capital_pi": self.capital_pi,
            "sharp": self.sharp.value,
            "linkage": {
                "ci_type": list(self.linkage.ci_type),
                "residual_degree": self.linkage.residual_degree,
                "residual_on_quadric_surface": self.linkage.residual_on_quadric_surface,
                "acm_residual": self.linkage.acm_residual,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> tuple:
        inv = self.invariants
        return (
            self.d, self.k, self.regime.value, inv.n0, inv.eps, inv.theta0,
            "" if inv.eps_prime is None else inv.eps_prime,
            self.pi_value, self.xi_value, self.bound_g_minus_1, self.capital_pi,
            self.sharp.value, self.linkage.ci_type[0], self.linkage.ci_type[1],
            self.linkage.residual_degree,
        )


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return int(value)


def _require_large(d: int, k: int) -> None:
    CurveParams(d, k)
    if regime(d, k) is not Regime.LARGE:
        raise RegimeError(f"(d={d}, k={k}) is small-degree; substitute (d, theta0)")


def pi(d: int, k: int) -> int:
    _require_large(d, k)
    _, eps = n0_and_eps(d, k)
    head = Fraction(d * d, 4 * k) + Fraction(k - 3, 2) * d
    if eps <= k:
        value = head - Fraction(eps * eps, 4 * k) - eps * Fraction(k - eps, 2)
    else:
        t = eps - k
        value = head - (k - t) * (Fraction(t, 2) - Fraction(t, 4 * k) + Fraction(1, 4))
    return _exact(value, f"pi({d},{k})")


def _xi_from_residue(eps: int, k: int) -> int:
    return 0 if eps in {0, 1, 2, 2 * k - 1} else 1


def xi(d: int, k: int) -> int:
    _require_large(d, k)
    return _xi_from_residue(n0_and_eps(d, k)[1], k)


def capital_pi(d: int, k: int) -> int:
    """Genus minus one of the linked curves described by the hat template."""
    _require_large(d, k)
    _, eps = n0_and_eps(d, k)
    value = (
        Fraction(d * d, 4 * k)
        + Fraction(k - 3, 2) * d
        - Fraction(eps, 2) * ((k - 1) * (1 - Fraction(eps, 2 * k)))
    )
    if eps % 2:
        value -= Fraction(1, 4)
    return _exact(value, f"capital_pi({d},{k})")


def bound_no_small_curve(d: int, k: int) -> int:
    """Bound on g - 1 when the general hyperplane section lies on no curve of degree k - 1.

    With ``d = k^2 + nu^2 + e`` the value is
    ``(k - 3/2) d - (k^3 - nu^3)/3 - (k - nu)/6`` plus ``e^2/2`` when
    ``e <= nu`` and ``nu^2/2 + (e - nu)^2/2`` otherwise.
    """
    CurveParams(d, k)
    if regime(d, k) is Regime.LARGE:
        raise RegimeError(f"(d={d}, k={k}) is large-degree: d > 2k(k-1)")
    nu, e = nu_decomposition(d, k)
    value = (k - Fraction(3, 2)) * d - Fraction(k**3 - nu**3, 3) - Fraction(k - nu, 6)
    if e <= nu:
        value += Fraction(e * e, 2)
    else:
        value += Fraction(nu * nu, 2) + Fraction((e - nu) ** 2, 2)
    return _exact(value, f"bound_no_small_curve({d},{k})")


def _effective(d: int, k: int) -> tuple[int, int]:
    """The (degree, k) pair the large-degree formulas are evaluated at."""
    if regime(d, k) is Regime.LARGE:
        return d, k
    return d, theta0_and_eps_prime(d, k)[0]


def sharpness(d: int, k: int) -> Sharpness:
    CurveParams(d, k)
    d_eff, k_eff = _effective(d, k)
    eps = n0_and_eps(d_eff, k_eff)[1]
    if eps in {0, 1, 2, 2 * k_eff - 1}:
        return Sharpness.SHARP_ATTAINED_BY_S
    if eps in {3, 2 * k_eff - 2}:
        return Sharpness.SHARP_POSSIBLY_OTHER
    return Sharpness.UNKNOWN_CONJECTURAL_PI


def linkage_descriptor(d: int, k: int) -> LinkageDescriptor:
    """Complete intersection ``(k, n0)`` for large degree, ``(theta0, k)`` otherwise.

    The residual degree is ``2ab - d``. For large degree this is eps; in the
    small-degree regime it is ``2 theta0 k - d`` and differs from eps_prime
    whenever ``d`` is not ``-eps_prime`` modulo ``2k`` as well.
    """
    CurveParams(d, k)
    if regime(d, k) is Regime.LARGE:
        a, b = k, n0_and_eps(d, k)[0]
    else:
        a, b = theta0_and_eps_prime(d, k)[0], k
    residual = 2 * a * b - d
    assert 0 <= residual < 2 * k, (d, k, residual)
    return LinkageDescriptor(ci_type=(a, b), residual_degree=residual)


def genus_bound(d: int, k: int) -> BoundReport:
    CurveParams(d, k)
    d_eff, k_eff = _effective(d, k)
    pi_value = pi(d_eff, k_eff)
    xi_value = xi(d_eff, k_eff)
    return BoundReport(
        d=d,
        k=k,
        regime=regime(d, k),
        invariants=invariants(d, k),
        pi_value=pi_value,
        xi_value=xi_value,
        bound_g_minus_1=pi_value - xi_value,
        capital_pi=capital_pi(d_eff, k_eff),
        sharp=sharpness(d, k),
        linkage=linkage_descriptor(d, k),
    )
