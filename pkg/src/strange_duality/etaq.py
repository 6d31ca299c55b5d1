"""Numerical Dedekind eta products and the Saito identity residual.

Double precision is plenty here: residuals come out near 1e-13 and the
checks use 1e-8.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .checks import Check, check
from .errors import DomainError, NonPositiveD
from .frameshape import FrameShape, degree, saito_dual

# Evaluating eta_pi(-1/(N tau)) at tau = i with N = 42 already lands at
# Im = 1/42, so the guard sits below that.
IM_GUARD = 0.01
TRUNCATION = 1e-18


@dataclass(frozen=True)
class UpperHalfPoint:
    re: float
    im: float

    def __post_init__(self):
        if not self.im >= IM_GUARD:
            raise DomainError(f"Im(tau) = {self.im} is below the guard {IM_GUARD}")

    @classmethod
    def of(cls, z: complex) -> "UpperHalfPoint":
        return cls(z.real, z.imag)

    @classmethod
    def parse(cls, text: str) -> "UpperHalfPoint":
        re, im = (float(x) for x in text.split(","))
        return cls(re, im)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)


def _point(tau) -> UpperHalfPoint:
    return tau if isinstance(tau, UpperHalfPoint) else UpperHalfPoint.of(complex(tau))


def eta(tau) -> complex:
    """q^(1/24) prod (1 - q^n), with q = exp(2 pi i tau) and the principal q^(1/24)."""
    z = _point(tau).z
    q = cmath.exp(2j * math.pi * z)
    acc = 1 + 0j
    qn = q
    while abs(qn) >= TRUNCATION:
        acc *= 1 - qn
        qn *= q
    return cmath.exp(2j * math.pi * z / 24) * acc


def eta_pentagonal(tau) -> complex:
    """Independent evaluation through Euler's pentagonal number series."""
    z = _point(tau).z
    q = cmath.exp(2j * math.pi * z)
    total = 1 + 0j
    k = 1
    while True:
        e1, e2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        t1, t2 = q ** e1, q ** e2
        total += (-1) ** k * (t1 + t2)
        if abs(t1) < TRUNCATION:
            break
        k += 1
    return cmath.exp(2j * math.pi * z / 24) * total


def eta_product(shape: FrameShape, tau) -> complex:
    """prod eta(m tau)^chi_m."""
    z = _point(tau).z
    value = 1 + 0j
    for m, e in shape.items():
        value *= eta(m * z) ** e
    return value


def discriminant_value(shape: FrameShape) -> Fraction:
    value = Fraction(1)
    for m, e in shape.items():
        value *= Fraction(m) ** e
    return value


def saito_identity_residual(shape: FrameShape, tau, d=None) -> float:
    """|eta_pi(-1/(N tau)) * eta_pi*(tau) * sqrt(d) - 1| with d = prod m^chi_m.

    An explicit ``d`` (for instance a signed discriminant from the catalog)
    replaces the product.
    """
    d = discriminant_value(shape) if d is None else Fraction(d)
    if d <= 0:
        raise NonPositiveD(f"prod m^chi_m = {d} for {shape}")
    z = _point(tau).z
    n = shape.order
    left = eta_product(shape, -1 / (n * z))
    right = eta_product(saito_dual(shape), z)
    return abs(left * right * math.sqrt(d) - 1)


SAMPLE_TAUS = (1j, 0.3 + 1.7j, -0.4 + 0.9j)


def identity_shapes(cat) -> list[tuple[str, FrameShape]]:
    """Hypersurface shapes and reduced ICIS shapes with positive prod m^chi_m."""
    return [(rec.name, rec.duality_frame) for rec in cat if discriminant_value(rec.duality_frame) > 0]


def verify_eta(cat=None, taus=SAMPLE_TAUS, tol: float = 1e-8) -> list[Check]:
    from .catalog import default_catalog

    cat = cat or default_catalog()
    out = []
    for name, shape in identity_shapes(cat):
        worst = max(saito_identity_residual(shape, t) for t in taus)
        out.append(check(f"eta/saito/{name}", worst < tol, f"max residual {worst:.2e}"))
    for name, shape in ((r.name, r.duality_frame) for r in cat):
        phase = cmath.exp(2j * math.pi * degree(shape) / 24)
        a = eta_product(shape, 0.3 + 1.7j)
        b = eta_product(shape, 1.3 + 1.7j)
        err = abs(b - phase * a) / abs(a)
        out.append(check(f"eta/periodicity/{name}", err < 1e-9, f"relative error {err:.2e}"))
    exact = math.gamma(0.25) / (2 * math.pi ** 0.75)
    out.append(check("eta/closed-form-at-i", abs(eta(1j) - exact) < 1e-12, f"{eta(1j).real:.12f}"))
    for t in SAMPLE_TAUS:
        a, b = eta(t), eta_pentagonal(t)
        out.append(check(f"eta/pentagonal/{t}", abs(a - b) <= 1e-12 * abs(a), f"{abs(a - b):.1e}"))
    return out
