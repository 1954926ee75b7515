"""Arithmetic invariants of a degree/surface pair (d, k).

Everything here is integer arithmetic. The curve has degree ``d`` and lies on
a surface in ``|O(k)|`` on the quadric threefold, i.e. a surface of degree 2k.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from quadgenus.errors import DomainError


class Regime(enum.Enum):
    LARGE = "large"  # d > 2k(k-1)
    SMALL = "small"  # d <= 2k(k-1)


@dataclass(frozen=True)
class CurveParams:
    d: int
    k: int

    def __post_init__(self) -> None:
        for name in ("d", "k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True)
class InvariantSet:
    """Division data of ``d`` by ``2k`` plus the square decomposition over k^2.

    ``eps_prime`` is only set in the small-degree regime and ``nu``/``eps_hat``
    only when ``d > k^2``.
    """

    n0: int
    eps: int
    theta0: int
    eps_prime: int | None
    nu: int | None
    eps_hat: int | None


def _params(d: int | CurveParams, k: int | None = None) -> CurveParams:
    if isinstance(d, CurveParams):
        return d
    return CurveParams(d, k)


def regime(d: int | CurveParams, k: int | None = None) -> Regime:
    p = _params(d, k)
    return Regime.LARGE if p.d > 2 * p.k * (p.k - 1) else Regime.SMALL


def n0_and_eps(d: int | CurveParams, k: int | None = None) -> tuple[int, int]:
    """Return ``(n0, eps)`` with ``d + eps == 2 * n0 * k`` and ``0 <= eps < 2k``."""
    p = _params(d, k)
    n0 = (p.d - 1) // (2 * p.k) + 1
    return n0, 2 * n0 * p.k - p.d


def theta0_and_eps_prime(d: int | CurveParams, k: int | None = None) -> tuple[int, int]:
    """Return ``(theta0, eps_prime)``, the residue being taken modulo ``2 * theta0``.

    theta0 uses the same floor formula as n0; the two are kept apart because
    downstream code substitutes them into different slots.
    """
    p = _params(d, k)
    theta0 = (p.d - 1) // (2 * p.k) + 1
    return theta0, (-p.d) % (2 * theta0)


def nu_decomposition(d: int | CurveParams, k: int | None = None) -> tuple[int, int]:
    """Write ``d = k^2 + nu^2 + eps_hat`` with ``0 <= eps_hat <= 2 nu``."""
    p = _params(d, k)
    excess = p.d - p.k * p.k
    if excess <= 0:
        raise DomainError(
            f"d={p.d} <= k^2={p.k * p.k}: the hyperplane section cannot avoid "
            "all curves of degree k-1, so the theta=k case is empty"
        )
    nu = isqrt(excess)
    return nu, excess - nu * nu


def invariants(d: int | CurveParams, k: int | None = None) -> InvariantSet:
    p = _params(d, k)
    n0, eps = n0_and_eps(p)
    theta0, eps_prime = theta0_and_eps_prime(p)
    nu = eps_hat = None
    if p.d > p.k * p.k:
        nu, eps_hat = nu_decomposition(p)
    return InvariantSet(
        n0=n0,
        eps=eps,
        theta0=theta0,
        eps_prime=eps_prime if regime(p) is Regime.SMALL else None,
        nu=nu,
        eps_hat=eps_hat,
    )
