"""Weight systems, Milnor numbers and monodromy Frame shapes of weighted
homogeneous surface singularities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateWeightSystem,
    NonIntegerMilnorNumber,
    NonIntegralExponent,
    WrongClass,
)
from .frameshape import FrameShape


def representable(n: int, weights) -> bool:
    """True if ``n`` lies in the numerical semigroup generated by ``weights``."""
    if n < 0:
        return False
    reach = [False] * (n + 1)
    reach[0] = True
    for k in range(1, n + 1):
        reach[k] = any(w <= k and reach[k - w] for w in weights)
    return reach[n]


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "degrees", tuple(int(n) for n in self.degrees))
        if len(self.weights) not in (3, 4) or len(self.degrees) not in (1, 2):
            raise ValueError(f"unsupported weight system {self.weights};{self.degrees}")
        if min(self.weights) <= 0 or min(self.degrees) <= 0:
            raise ValueError("weights and degrees must be positive")

    @classmethod
    def parse(cls, text: str) -> "WeightSystem":
        """Parse ``w1,w2,w3;N`` or ``w1,w2,w3,w4;N1,N2``."""
        try:
            ws, ns = text.replace(" ", "").split(";")
            return cls(tuple(int(w) for w in ws.split(",")), tuple(int(n) for n in ns.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed weight system {text!r}: {exc}") from None

    def __str__(self):
        return ",".join(map(str, self.weights)) + ";" + ",".join(map(str, self.degrees))

    @property
    def is_reduced(self) -> bool:
        return math.gcd(*self.weights) == 1

    @property
    def degrees_representable(self) -> bool:
        return all(representable(n, self.weights) for n in self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def is_hypersurface(self) -> bool:
        return len(self.weights) == 3 and len(self.degrees) == 1


def _require_surface(ws: WeightSystem) -> int:
    if not ws.is_hypersurface:
        raise WrongClass(f"{ws} is not a three-variable hypersurface weight system")
    return ws.degrees[0]


def milnor_number(ws: WeightSystem) -> int:
    """Milnor number prod (N - w_i) / w_i."""
    n = _require_surface(ws)
    mu = Fraction(1)
    for w in ws.weights:
        mu *= Fraction(n - w, w)
    if mu.denominator != 1 or mu <= 0:
        raise NonIntegerMilnorNumber(f"{ws} gives Milnor number {mu}")
    return int(mu)


def _lambda_mul(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    # Lambda_p * Lambda_q = gcd(p, q) * Lambda_lcm(p, q)
    out: dict[int, Fraction] = {}
    for p, x in a.items():
        for q, y in b.items():
            key = math.lcm(p, q)
            out[key] = out.get(key, Fraction(0)) + x * y * math.gcd(p, q)
    return {k: v for k, v in out.items() if v}


def monodromy_frame(ws: WeightSystem) -> FrameShape:
    """Frame shape of the classical monodromy, via the Milnor-Orlik divisor.

    Each weight contributes a factor ``Lambda_v / u - Lambda_1`` where
    ``N / w = v / u`` in lowest terms.  The shape has order ``N``.
    """
    n = _require_surface(ws)
    div: dict[int, Fraction] = {1: Fraction(1)}
    for w in ws.weights:
        r = Fraction(n, w)
        factor: dict[int, Fraction] = {}
        factor[r.numerator] = Fraction(1, r.denominator)
        factor[1] = factor.get(1, Fraction(0)) - 1
        div = _lambda_mul(div, {k: v for k, v in factor.items() if v})
    if not div:
        raise DegenerateWeightSystem(f"{ws} has zero Milnor number")
    chi = {}
    for m, c in div.items():
        if c.denominator != 1:
            raise NonIntegralExponent(f"{ws}: exponent of {m} is {c}")
        chi[m] = int(c)
    return FrameShape(chi, n)


def monodromy_order(record) -> int:
    """Order of the monodromy: N for hypersurfaces, N2 for ICIS."""
    return record.weights.degrees[-1]


def virtual_dual_order(record) -> int:
    """Order lcm(N1, N2) of the Coxeter element of the virtual dual of a triangle ICIS."""
    if record.family != "triangle-ICIS":
        raise WrongClass(f"{record.name} is not a triangle ICIS")
    return math.lcm(*record.weights.degrees)
