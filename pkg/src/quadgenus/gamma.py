"""Second-difference sequences of the hyperplane-section Hilbert function.

A gamma sequence is indexed from ``l = 0``. The upper bound on ``g - 1`` is
the linear functional ``sum (l - 1) * gamma_l``, maximised over sequences that
satisfy a :class:`ConstraintProfile`:

    (a) gamma_l = 2l + 1                 for l < prefix_length
    (b) gamma_l = plateau_height         for prefix_length <= l < n
    (c) n >= n_min
    (d) gamma_n <= plateau_height - 1
    (e) gamma_l - gamma_{l+1} >= 2       for n <= l <= m - 2
    (f) gamma_{m-1} >= 1
    (g) no zero entries before m
    (h) sum gamma_l = mass

where ``n`` is the first index >= prefix_length whose entry is below the
plateau height and ``m`` is the length of the support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable, Iterator, Sequence

from quadgenus.errors import DomainError, InadmissibleError
from quadgenus.invariants import CurveParams, n0_and_eps, theta0_and_eps_prime

DESCENT_GAP = 2
CLAUSES = "abcdefgh"


@dataclass(frozen=True)
class GammaSequence:
    """Immutable nonnegative integer sequence, stored without trailing zeros."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"gamma entries must be integers, got {v!r}")
            if v < 0:
                raise ValueError(f"gamma entries must be nonnegative, got {values}")
        end = len(values)
        while end and values[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "values", values[:end])

    @classmethod
    def parse(cls, text: str) -> GammaSequence:
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(part) for part in text.split(",")))

    def render(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.render()

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def at(self, l: int) -> int:
        """Entry at index ``l``; zero past the support."""
        return self.values[l] if 0 <= l < len(self.values) else 0


@dataclass(frozen=True)
class ConstraintProfile:
    prefix_length: int
    plateau_height: int
    n_min: int
    mass: int
    descent_gap: int = field(default=DESCENT_GAP)

    def __post_init__(self) -> None:
        if self.prefix_length < 1 or self.n_min < 1 or self.mass < 1:
            raise DomainError(f"profile fields must be positive: {self}")
        if self.plateau_height != 2 * self.prefix_length:
            raise DomainError("plateau height must be twice the prefix length")
        if self.mass < self.prefix_length**2:
            raise DomainError("mass is smaller than the forced prefix")
        if self.descent_gap != DESCENT_GAP:
            raise DomainError("descent gap is fixed at 2")


def large_profile(d: int, k: int) -> ConstraintProfile:
    """Profile for d > 2k(k-1): prefix of length k, plateau 2k, n >= n0."""
    CurveParams(d, k)
    n0, _ = n0_and_eps(d, k)
    return ConstraintProfile(prefix_length=k, plateau_height=2 * k, n_min=n0, mass=d)


def small_profile(d: int, k: int) -> ConstraintProfile:
    """Profile for d <= 2k(k-1): the large-degree profile at (d, theta0)."""
    theta0, _ = theta0_and_eps_prime(d, k)
    return large_profile(d, theta0)


def theta_k_profile(d: int, k: int) -> ConstraintProfile:
    """Profile when the section lies on no curve of degree k-1: n >= k only."""
    CurveParams(d, k)
    return ConstraintProfile(prefix_length=k, plateau_height=2 * k, n_min=k, mass=d)


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.admissible


def _entries(gamma: GammaSequence | Sequence[int]) -> tuple[int, ...]:
    if isinstance(gamma, GammaSequence):
        return gamma.values
    return GammaSequence(tuple(gamma)).values


def plateau_end(gamma: GammaSequence | Sequence[int], profile: ConstraintProfile) -> int:
    """First index ``n >= prefix_length`` with an entry below the plateau height."""
    values = _entries(gamma)
    n = profile.prefix_length
    while n < len(values) and values[n] >= profile.plateau_height:
        n += 1
    return n


def is_admissible(gamma: GammaSequence | Sequence[int], profile: ConstraintProfile) -> Verdict:
    values = _entries(gamma)
    p, h = profile.prefix_length, profile.plateau_height
    m = len(values)

    def at(l: int) -> int:
        return values[l] if l < m else 0

    violated = []
    if any(at(l) != 2 * l + 1 for l in range(p)):
        violated.append("a")
    n = plateau_end(values, profile)
    if any(values[l] != h for l in range(p, n)):
        violated.append("b")
    if n < profile.n_min:
        violated.append("c")
    if at(n) > h - 1:
        violated.append("d")
    if any(values[l] - values[l + 1] < profile.descent_gap for l in range(n, m - 1)):
        violated.append("e")
    if m == 0 or values[m - 1] < 1:
        violated.append("f")
    if 0 in values:
        violated.append("g")
    if sum(values) != profile.mass:
        violated.append("h")
    return Verdict(not violated, tuple(violated))


def genus_functional(gamma: Iterable[int]) -> int:
    """``sum (l - 1) * gamma_l``; accepts raw integer lists as well."""
    return sum((l - 1) * g for l, g in enumerate(gamma))


def beta_from_gamma(gamma: Iterable[int]) -> list[int]:
    """Running partial sums ``beta_t = gamma_0 + ... + gamma_t``."""
    out, total = [], 0
    for g in gamma:
        total += g
        out.append(total)
    return out


def indices(gamma: GammaSequence | Sequence[int], profile: ConstraintProfile) -> tuple[int, int]:
    """Return ``(n, m)`` for an admissible sequence."""
    verdict = is_admissible(gamma, profile)
    if not verdict:
        raise InadmissibleError(f"clauses {','.join(verdict.violations)} violated by {list(_entries(gamma))}")
    return plateau_end(gamma, profile), len(_entries(gamma))
