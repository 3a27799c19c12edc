"""Schwarz-class functions, Schur parameters, and Caratheodory conversions.

The Schwarz class B0 consists of analytic self-maps of the unit disk fixing
the origin, ``w(z) = b1 z + b2 z**2 + ...`` with |w| < 1.  Every such
function is generated by a sequence of Schur parameters, complex numbers in
the closed unit disk, through the chain of disk automorphisms

    w(z) = z * phi(z),    phi = tau_g0(z * tau_g1(z * tau_g2(...))),
    tau_g(u) = (g + u) / (1 + conj(g) * u).

Expanding the chain shows the first coefficients in terms of the parameters
(g0, g1, g2) = (b1, x, y):

    b1 = g0,
    b2 = (1 - |g0|**2) * g1,
    b3 = (1 - |g0|**2) * ((1 - |g1|**2) * g2 - conj(g0) * g1**2),

which for real b1 is exactly the classical (b1, x, y) parameterization of the
first three Schwarz coefficients; :func:`schwarz_b2b3` evaluates it directly.
A unit-modulus parameter makes tau constant, so the chain terminates there: a
finite Blaschke-type function, and in particular b1 = 1 forces w(z) = z.

The Caratheodory class P (p(0) = 1, Re p > 0) is linked to B0 through the
Cayley-type transform p = (1 + w)/(1 - w); comparing coefficients,

    2 b1 = p1,   4 b2 = 2 p2 - p1**2,   8 b3 = 4 p3 - 4 p1 p2 + p1**3.

:func:`caratheodory_p2p3` carries the matching disk parameterization of
(p2, p3) in terms of (p1, x, y) with p1 in [0, 2].
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, InvalidSchwarz, OutOfRange
from .series import PowerSeries

#: |gamma| within this of 1 terminates the Schur chain.
UNIT_TOL = 1e-12

#: Disk-membership tolerance for parameters and coefficients.
DISK_TOL = 1e-12

#: schur_test margins above -MARGIN_TOL count as acceptable.
MARGIN_TOL = 1e-9


@dataclass(frozen=True)
class SchurParams:
    """A finite Schur-parameter sequence, each entry in the closed unit disk.

    If some parameter has unit modulus the chain terminates there and all
    later entries are ignored by construction.
    """

    gammas: tuple

    def __post_init__(self):
        gammas = tuple(complex(g) for g in self.gammas)
        if not gammas:
            raise InvalidParams("at least one Schur parameter is required")
        for k, g in enumerate(gammas):
            if abs(g) > 1.0 + DISK_TOL:
                raise InvalidParams(f"|gamma_{k}| = {abs(g)} exceeds 1")
        object.__setattr__(self, "gammas", gammas)

    def effective(self) -> tuple:
        """The prefix actually used: up to the first unit-modulus parameter."""
        out = []
        for g in self.gammas:
            out.append(g)
            if abs(g) >= 1.0 - UNIT_TOL:
                break
        return tuple(out)

    def __len__(self):
        return len(self.gammas)


@dataclass(frozen=True)
class SchwarzSeries:
    """A truncated expansion of a Schwarz-class function (c0 = 0, |b1| <= 1)."""

    series: PowerSeries
    provenance: str = "raw"

    def __post_init__(self):
        if self.series.coeffs[0] != 0:
            raise InvalidSchwarz(f"w(0) = {self.series.coeffs[0]} must be 0")
        if self.series.order >= 1 and abs(self.series.coeffs[1]) > 1.0 + DISK_TOL:
            raise InvalidSchwarz(f"|b1| = {abs(self.series.coeffs[1])} exceeds 1")
        if self.provenance not in ("schur", "canonical", "raw"):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def order(self) -> int:
        return self.series.order

    def coeff(self, n: int) -> complex:
        return self.series.coeffs[n]


@dataclass(frozen=True)
class CaratheodorySeries:
    """A truncated expansion of a positive-real-part function (c0 = 1)."""

    series: PowerSeries

    def __post_init__(self):
        if self.series.coeffs[0] != 1:
            raise OutOfRange(f"p(0) = {self.series.coeffs[0]} must be 1")
        if self.series.order >= 1 and abs(self.series.coeffs[1]) > 2.0 + 1e-9:
            raise OutOfRange(f"|p1| = {abs(self.series.coeffs[1])} exceeds 2")

    @property
    def order(self) -> int:
        return self.series.order

    def coeff(self, n: int) -> complex:
        return self.series.coeffs[n]


def schur_expand(params: SchurParams, order: int) -> SchwarzSeries:
    """Expand the Schur chain of ``params`` to a truncated Schwarz series.

    Guarantees b1 = g0, b2 = (1-|g0|^2) g1 and the b3 formula quoted in the
    module docstring; a single unit-modulus parameter gives the rotation
    ``w(z) = g0 * z`` exactly.
    """
    if order < 1:
        raise OutOfRange(f"order = {order} must be >= 1")
    if not isinstance(params, SchurParams):
        params = SchurParams(tuple(params))
    gammas = params.effective()
    phi = PowerSeries.constant(gammas[-1], order)
    for g in reversed(gammas[:-1]):
        u = phi.shift(1)
        num = u + PowerSeries.constant(g, order)
        den = u * g.conjugate() + PowerSeries.constant(1.0, order)
        phi = num / den
    return SchwarzSeries(phi.shift(1), provenance="schur")


def schur_test(w) -> tuple:
    """Run the Schur recursion on a truncated series; report the parameters.

    Returns ``(gammas, margin)`` with ``margin = 1 - max_k |gamma_k|``.  A
    margin >= -MARGIN_TOL is the acceptance threshold used downstream.  On
    truncated data this is a necessary condition for membership in B0 only:
    the tail of the true function is invisible at finite order.

    Never raises on bad input; an out-of-disk parameter simply produces a
    negative margin (e.g. ``w = 2z`` reports margin -1).
    """
    series = w.series if isinstance(w, SchwarzSeries) else w
    if abs(series.coeffs[0]) > 1e-14:
        raise InvalidSchwarz(f"w(0) = {series.coeffs[0]} must be 0")
    if series.order == 0:
        return (0j,), 1.0
    phi = PowerSeries(series.coeffs[1:])
    gammas = []
    worst = 0.0
    while True:
        g = phi.coeffs[0]
        gammas.append(g)
        worst = max(worst, abs(g))
        if abs(g) >= 1.0 - UNIT_TOL:
            break  # chain terminated (or invalid); transform would be singular
        if phi.order == 0:
            break
        num = phi - PowerSeries.constant(g, phi.order)
        den = phi * (-g.conjugate()) + PowerSeries.constant(1.0, phi.order)
        phi = (num / den).shift(-1)
    return tuple(gammas), 1.0 - worst


def schwarz_b2b3(b1: float, x, y) -> tuple:
    """(b2, b3) of a Schwarz function from the triple (b1, x, y).

    b2 = x (1 - b1^2),  b3 = (1 - b1^2) ((1 - |x|^2) y - b1 x^2),
    valid for real b1 in [0, 1] and |x| <= 1, |y| <= 1.
    """
    b1 = _real_in(b1, 0.0, 1.0, "b1")
    x = _disk(x, "x")
    y = _disk(y, "y")
    one_m = 1.0 - b1 * b1
    b2 = x * one_m
    b3 = one_m * ((1.0 - abs(x) ** 2) * y - b1 * x * x)
    return b2, b3


def caratheodory_p2p3(p1: float, x, y) -> tuple:
    """(p2, p3) of a Caratheodory function from (p1, x, y), p1 in [0, 2].

    2 p2 = p1^2 + x (4 - p1^2),
    4 p3 = p1^3 + 2 (4 - p1^2) p1 x - p1 (4 - p1^2) x^2
           + 2 (4 - p1^2)(1 - |x|^2) y.

    p1 = 0 is accepted as the boundary case of the usual p1 > 0 assumption.
    """
    p1 = _real_in(p1, 0.0, 2.0, "p1")
    x = _disk(x, "x")
    y = _disk(y, "y")
    s = 4.0 - p1 * p1
    p2 = (p1 * p1 + x * s) / 2.0
    p3 = (p1**3 + 2.0 * s * p1 * x - p1 * s * x * x + 2.0 * s * (1.0 - abs(x) ** 2) * y) / 4.0
    return p2, p3


def schwarz_to_caratheodory(w: SchwarzSeries) -> CaratheodorySeries:
    """p = (1 + w) / (1 - w)."""
    s = w.series
    one = PowerSeries.constant(1.0, s.order)
    return CaratheodorySeries((one + s) / (one - s))


def caratheodory_to_schwarz(p: CaratheodorySeries) -> SchwarzSeries:
    """w = (p - 1) / (p + 1); round trip with the forward map is identity."""
    s = p.series
    one = PowerSeries.constant(1.0, s.order)
    return SchwarzSeries((s - one) / (s + one))


def canonical_schwarz(kind: str, order: int, *, x=None, b1=None) -> SchwarzSeries:
    """Named Schwarz functions used as extremal witnesses.

    kind = "identity":        w(z) = z.
    kind = "x_zsquared":      w(z) = x z**2 for |x| <= 1.
    kind = "blaschke_remark": w(z) = z (z - b1) / (b1 z - 1) for b1 in [0, 1];
        has b1(w) = b1 and b2 = -(1 - b1^2), the x = -1 case of the triple
        parameterization.  (The function z (2z - p1) / (p1 z - 2) with
        p1 = 2 b1 realizes the same Caratheodory data and is the other
        admissible choice; it is not constructed here.)
    """
    if order < 1:
        raise OutOfRange(f"order = {order} must be >= 1")
    if kind == "identity":
        return SchwarzSeries(PowerSeries.identity(order), provenance="canonical")
    if kind == "x_zsquared":
        if x is None:
            raise OutOfRange("x_zsquared requires the parameter x")
        x = _disk(x, "x")
        if order < 2:
            raise OutOfRange("x_zsquared needs order >= 2")
        return SchwarzSeries(
            PowerSeries.monomial(2, order, x), provenance="canonical"
        )
    if kind == "blaschke_remark":
        if b1 is None:
            raise OutOfRange("blaschke_remark requires the parameter b1")
        b1 = _real_in(b1, 0.0, 1.0, "b1")
        num = PowerSeries.from_coeffs([0.0, -b1, 1.0], order)
        den = PowerSeries.from_coeffs([-1.0, b1], order)
        return SchwarzSeries((num / den).resize(order), provenance="canonical")
    raise OutOfRange(f"unknown canonical kind {kind!r}")


def _real_in(value, lo, hi, name) -> float:
    value = complex(value)
    if abs(value.imag) > DISK_TOL:
        raise OutOfRange(f"{name} = {value} must be real")
    v = value.real
    if not lo - DISK_TOL <= v <= hi + DISK_TOL:
        raise OutOfRange(f"{name} = {v} outside [{lo}, {hi}]")
    return min(max(v, lo), hi)


def _disk(value, name) -> complex:
    value = complex(value)
    if abs(value) > 1.0 + DISK_TOL:
        raise OutOfRange(f"|{name}| = {abs(value)} exceeds 1")
    return value


__all__ = [
    "SchurParams",
    "SchwarzSeries",
    "CaratheodorySeries",
    "schur_expand",
    "schur_test",
    "schwarz_b2b3",
    "caratheodory_p2p3",
    "schwarz_to_caratheodory",
    "caratheodory_to_schwarz",
    "canonical_schwarz",
    "UNIT_TOL",
    "MARGIN_TOL",
]
