"""Frame shapes and the characteristic polynomials they encode.

A Frame shape ``prod m^chi_m`` stands for the polynomial
``prod (x^m - 1)^chi_m``.  Shapes carry an explicit order ``h`` (the order
of the operator), which Saito duality needs as data.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import FrameParseError, NonPolynomial, NotCyclotomicProduct, PoleAtOne


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class IntPolynomial:
    """Exact integer polynomial, coefficients stored constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x_power_minus_one(cls, m: int) -> "IntPolynomial":
        return cls([-1] + [0] * (m - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Synthetic division by a monic polynomial."""
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial([]), IntPolynomial(rem)
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k]
            if q:
                quot[k - dd] = q
                for j, b in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


_cyclotomic_cache: dict[int, IntPolynomial] = {}


def cyclotomic(n: int) -> IntPolynomial:
    if n not in _cyclotomic_cache:
        p = IntPolynomial.x_power_minus_one(n)
        for d in divisors(n)[:-1]:
            p, r = p.divmod_monic(cyclotomic(d))
            assert r.is_zero()
        _cyclotomic_cache[n] = p
    return _cyclotomic_cache[n]


class FrameShape:
    """Canonical Frame shape: nonzero exponents keyed by positive ``m``, plus order ``h``.

    Keys are kept sorted; zero exponents are dropped.  Equality compares the
    exponent map and the order.
    """

    __slots__ = ("_items", "order")

    def __init__(self, exponents: Mapping[int, int] | None = None, order: int | None = None):
        items = {}
        for m, e in (exponents or {}).items():
            m, e = int(m), int(e)
            if m <= 0:
                raise ValueError(f"Frame shape base must be positive, got {m}")
            if e:
                items[m] = items.get(m, 0) + e
        self._items = tuple(sorted((m, e) for m, e in items.items() if e))
        if order is None:
            order = max((m for m, _ in self._items), default=1)
        order = int(order)
        if order <= 0:
            raise ValueError("order must be positive")
        for m, _ in self._items:
            if order % m:
                raise ValueError(f"key {m} does not divide order {order}")
        self.order = order

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._items)

    def chi(self, m: int) -> int:
        return self.exponents.get(m, 0)

    def items(self):
        return self._items

    def with_order(self, order: int) -> "FrameShape":
        return FrameShape(self.exponents, order)

    def __eq__(self, other):
        if isinstance(other, FrameShape):
            return self._items == other._items and self.order == other.order
        return NotImplemented

    def __hash__(self):
        return hash((self._items, self.order))

    def __repr__(self):
        return f"FrameShape({format_frame(self)!r})"

    def __str__(self):
        return format_frame(self)

    def __bool__(self):
        return bool(self._items)


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def _parse_product(text: str, sign: int, acc: dict[int, int]) -> None:
    for raw in text.split("*"):
        term = raw.strip()
        match = _TERM.match(term)
        if not match:
            raise FrameParseError(f"malformed term {raw!r}")
        m = int(match.group(1))
        e = int(match.group(2)) if match.group(2) is not None else 1
        if m <= 0:
            raise FrameParseError(f"base must be positive, got {m}")
        if e <= 0:
            raise FrameParseError(f"exponent must be positive, got {e}")
        acc[m] = acc.get(m, 0) + sign * e


def parse_frame(text: str) -> FrameShape:
    """Parse ``num[/den][@h]``, e.g. ``"2*3*7*42/1*6*14*21"`` or ``"2^2*18/1^2*9@18"``."""
    if not isinstance(text, str) or not text.strip():
        raise FrameParseError("empty frame shape")
    body = "".join(text.split())
    order = None
    if "@" in body:
        body, _, h = body.partition("@")
        if not h.isdigit() or int(h) <= 0:
            raise FrameParseError(f"order must be a positive integer, got {h!r}")
        order = int(h)
    if body.count("/") > 1:
        raise FrameParseError("at most one '/' allowed")
    num, _, den = body.partition("/")
    if not num or (body.endswith("/")):
        raise FrameParseError(f"malformed frame shape {text!r}")
    acc: dict[int, int] = {}
    _parse_product(num, 1, acc)
    if den:
        _parse_product(den, -1, acc)
    if not any(acc.values()):
        raise FrameParseError(f"frame shape {text!r} has no nonzero exponent")
    try:
        return FrameShape(acc, order)
    except ValueError as exc:
        raise FrameParseError(str(exc)) from None


def _format_terms(pairs) -> str:
    return "*".join(str(m) if e == 1 else f"{m}^{e}" for m, e in pairs)


def format_frame(shape: FrameShape) -> str:
    pos = [(m, e) for m, e in shape.items() if e > 0]
    neg = [(m, -e) for m, e in shape.items() if e < 0]
    if not pos:
        # numerator "1" absorbed by one extra power of 1 in the denominator
        neg = [(m, e + 1) if m == 1 else (m, e) for m, e in neg]
        if not neg or neg[0][0] != 1:
            neg.insert(0, (1, 1))
        pos = [(1, 1)]
    text = _format_terms(pos)
    if neg:
        text += "/" + _format_terms(neg)
    default = max((m for m, _ in shape.items()), default=1)
    if shape.order != default:
        text += f"@{shape.order}"
    return text


def degree(shape: FrameShape) -> int:
    return sum(m * e for m, e in shape.items())


def to_char_poly(shape: FrameShape) -> IntPolynomial:
    num = IntPolynomial([1])
    den = IntPolynomial([1])
    for m, e in shape.items():
        factor = IntPolynomial.x_power_minus_one(m)
        for _ in range(abs(e)):
            if e > 0:
                num = num * factor
            else:
                den = den * factor
    quot, rem = num.divmod_monic(den)
    if not rem.is_zero():
        raise NonPolynomial(f"{shape} is not a polynomial")
    return quot


def euler_phi(n: int) -> int:
    result, k, m = n, 2, n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


def _strip_cyclotomic(poly: IntPolynomial, indices) -> tuple[dict[int, int], IntPolynomial]:
    mult: dict[int, int] = {}
    rest = poly
    for d in indices:
        if euler_phi(d) > rest.degree:
            continue
        phi = cyclotomic(d)
        k = 0
        while rest.degree >= phi.degree:
            q, r = rest.divmod_monic(phi)
            if not r.is_zero():
                break
            rest = q
            k += 1
        if k:
            mult[d] = k
    return mult, rest


def cyclotomic_factorization(poly: IntPolynomial) -> dict[int, int] | None:
    """Multiplicities of cyclotomic factors, or None if ``poly`` is not a product of them."""
    if poly.is_zero() or poly.coeffs[-1] != 1:
        return None
    # euler_phi(d) >= sqrt(d / 2), so larger indices cannot divide
    bound = 2 * poly.degree ** 2 + 2
    mult, rest = _strip_cyclotomic(poly, range(1, bound + 1))
    return mult if rest == IntPolynomial([1]) else None


def from_char_poly(poly: IntPolynomial, order: int) -> FrameShape:
    """Recover the Frame shape of ``poly`` whose roots are ``order``-th roots of unity."""
    if poly.is_zero() or poly.coeffs[-1] != 1:
        raise NotCyclotomicProduct("polynomial must be monic")
    divs = divisors(order)
    mult, rest = _strip_cyclotomic(poly, divs)
    if rest != IntPolynomial([1]):
        raise NotCyclotomicProduct(f"{poly} has roots that are not {order}-th roots of unity")
    mult = {d: mult.get(d, 0) for d in divs}
    # x^m - 1 = prod_{d | m} Phi_d, so mult[d] = sum_{d | m | order} chi_m
    chi: dict[int, int] = {}
    for m in reversed(divs):
        chi[m] = mult[m] - sum(chi[k] for k in chi if k % m == 0 and k != m)
    return FrameShape(chi, order)


def saito_dual(shape: FrameShape) -> FrameShape:
    h = shape.order
    return FrameShape({h // m: -e for m, e in shape.items()}, h)


def concatenate(a: FrameShape, b: FrameShape) -> FrameShape:
    acc = a.exponents
    for m, e in b.items():
        acc[m] = acc.get(m, 0) + e
    return FrameShape(acc, math.lcm(a.order, b.order))


def trace_power(shape: FrameShape, k: int) -> int:
    """Trace of c^k: sum of m * chi_m over m dividing k."""
    if k <= 0:
        raise ValueError("k must be positive")
    return sum(m * e for m, e in shape.items() if k % m == 0)


def value_at_one(shape: FrameShape) -> Fraction:
    net = sum(e for _, e in shape.items())
    if net > 0:
        return Fraction(0)
    if net < 0:
        raise PoleAtOne(f"{shape} has a pole of order {-net} at 1")
    value = Fraction(1)
    for m, e in shape.items():
        value *= Fraction(m) ** e
    return value


def is_self_dual(shape: FrameShape) -> bool:
    return saito_dual(shape) == shape
