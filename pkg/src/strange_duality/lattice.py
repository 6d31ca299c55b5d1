"""Integer symmetric bilinear forms: graph lattices, determinants, Smith
invariants, signatures and Coxeter elements.  Everything is exact."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegenerateForm, DiagonalNotMinusTwo, UnknownSymbol
from .frameshape import (
    FrameShape,
    IntPolynomial,
    concatenate,
    cyclotomic_factorization,
    from_char_poly,
)

Matrix = tuple[tuple[int, ...], ...]

MAX_COXETER_ORDER = 10_000


@dataclass(frozen=True)
class GramLattice:
    gram: Matrix
    labels: tuple[str, ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(gram)
        if len(self.labels) != n or any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square and match the labels")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges, labels=None, diagonal: int = -2, weight: int = 1):
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = diagonal
        for i, j in edges:
            g[i][j] = g[j][i] = weight
        return cls(tuple(map(tuple, g)), tuple(labels or (f"e{i + 1}" for i in range(n))))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def scaled(self, k: int) -> "GramLattice":
        return GramLattice(tuple(tuple(k * x for x in row) for row in self.gram), self.labels)

    def __neg__(self):
        return self.scaled(-1)

    def __add__(self, other: "GramLattice") -> "GramLattice":
        return direct_sum(self, other)


@dataclass(frozen=True)
class LatticeAutomorphismReport:
    char_poly: IntPolynomial
    frame: Optional[FrameShape]
    order: Optional[int]


def direct_sum(a: GramLattice, b: GramLattice) -> GramLattice:
    n, m = a.rank, b.rank
    rows = [tuple(row) + (0,) * m for row in a.gram]
    rows += [(0,) * n + tuple(row) for row in b.gram]
    return GramLattice(tuple(rows), a.labels + b.labels)


def _star(arms: Sequence[int], prefix: str) -> GramLattice:
    """Tree of chains of lengths b_i - 1 meeting at a centre vertex (listed last)."""
    if any(b < 2 for b in arms):
        raise ValueError(f"arm parameters must be >= 2, got {tuple(arms)}")
    edges, labels = [], []
    idx = 0
    ends = []
    for a, b in enumerate(arms, 1):
        for k in range(b - 1):
            labels.append(f"{prefix}{a}.{k + 1}")
            if k > 0:
                edges.append((idx - 1, idx))
            idx += 1
        ends.append(idx - 1)
    centre = idx
    labels.append("centre")
    edges += [(e, centre) for e in ends]
    return GramLattice.from_edges(centre + 1, edges, labels)


def star3(b1: int, b2: int, b3: int) -> GramLattice:
    return _star((b1, b2, b3), "arm")


def star4(b1: int, b2: int, b3: int, b4: int) -> GramLattice:
    return _star((b1, b2, b3, b4), "arm")


def hyperbolic_u() -> GramLattice:
    return GramLattice(((0, 1), (1, 0)), ("e", "f"))


def minus_e8() -> GramLattice:
    # E8 diagram: chain 1-2-3-4-5-6-7 with vertex 8 attached to vertex 5
    edges = [(i, i + 1) for i in range(6)] + [(4, 7)]
    return GramLattice.from_edges(8, edges, [f"E8.{i + 1}" for i in range(8)])


def k3_lattice() -> GramLattice:
    out = minus_e8()
    for part in (minus_e8(), hyperbolic_u(), hyperbolic_u(), hyperbolic_u()):
        out = direct_sum(out, part)
    return out


def k24() -> GramLattice:
    return direct_sum(k3_lattice(), hyperbolic_u())


def empty_lattice() -> GramLattice:
    return GramLattice((), ())


def bareiss_determinant(matrix) -> int:
    """Fraction-free Gaussian elimination on exact integers."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(lat: GramLattice) -> int:
    return bareiss_determinant(lat.gram)


def smith_invariants(lat: GramLattice) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of the Gram matrix (the discriminant group)."""
    if determinant(lat) == 0:
        raise DegenerateForm("Smith invariants need a nondegenerate form")
    return smith_diagonal(lat.gram)


def smith_diagonal(matrix) -> list[int]:
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    m = len(a[0]) if n else 0
    diag = []
    for t in range(min(n, m)):
        while True:
            # full pivoting on the smallest nonzero entry
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return diag + [0] * (min(n, m) - t)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, n):
                q = a[i][t] // p
                if q:
                    for j in range(t, m):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, m):
                q = a[t][j] // p
                if q:
                    for i in range(t, n):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, m) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            # pull the offending row into row t so the next pass lowers the pivot
            i = bad[0]
            for j in range(t, m):
                a[t][j] += a[i][j]
        diag.append(abs(a[t][t]))
    return diag


def signature(lat: GramLattice) -> tuple[int, int, int]:
    """Sylvester inertia (positive, negative, zero) by symmetric elimination."""
    a = [[Fraction(x) for x in row] for row in lat.gram]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j gives diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
                a[i][piv] = Fraction(0)
        for i in active:
            a[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg


def _matmul(x, y):
    n, m, p = len(x), len(y), len(y[0]) if y else 0
    return [[sum(x[i][k] * y[k][j] for k in range(m) if x[i][k]) for j in range(p)] for i in range(n)]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matpow(x, e):
    result = _identity(len(x))
    base = x
    while e:
        if e & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        e >>= 1
    return result


def coxeter_matrix(lat: GramLattice) -> list[list[int]]:
    """C = -V^{-1} V^T where A = V + V^T and V is upper triangular with -1 diagonal."""
    a = lat.gram
    n = lat.rank
    if any(a[i][i] != -2 for i in range(n)):
        raise DiagonalNotMinusTwo("Coxeter element needs every diagonal entry equal to -2")
    v = [[a[i][j] if j > i else (-1 if i == j else 0) for j in range(n)] for i in range(n)]
    # V = -(I - S) with S strictly upper triangular; V^{-1} = -(I + S + S^2 + ...)
    s = [[a[i][j] if j > i else 0 for j in range(n)] for i in range(n)]
    inv = _identity(n)
    term = _identity(n)
    for _ in range(n):
        term = _matmul(term, s)
        if not any(any(row) for row in term):
            break
        inv = [[inv[i][j] + term[i][j] for j in range(n)] for i in range(n)]
    vinv = [[-x for x in row] for row in inv]
    vt = [list(col) for col in zip(*v)]
    return [[-x for x in row] for row in _matmul(vinv, vt)]


def characteristic_polynomial(c) -> IntPolynomial:
    """det(xI - C) by the Faddeev-LeVerrier recursion in exact rationals."""
    n = len(c)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    cf = [[Fraction(x) for x in row] for row in c]
    for k in range(1, n + 1):
        m = _matmul(cf, m)
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        cm = _matmul(cf, m)
        coeffs[n - k] = -sum(cm[i][i] for i in range(n)) / k
    assert all(x.denominator == 1 for x in coeffs)
    return IntPolynomial(int(x) for x in coeffs)


def coxeter_element(lat: GramLattice) -> LatticeAutomorphismReport:
    c = coxeter_matrix(lat)
    poly = characteristic_polynomial(c)
    factors = cyclotomic_factorization(poly)
    if factors is None:
        return LatticeAutomorphismReport(poly, None, None)
    h = math.lcm(*factors) if factors else 1
    frame = from_char_poly(poly, h)
    order = None
    if h <= MAX_COXETER_ORDER and _matpow(c, h) == _identity(len(c)):
        order = h
    return LatticeAutomorphismReport(poly, frame, order)


def dynkin(symbol: str) -> GramLattice:
    """Gram matrix (diagonal -2) of a connected simply-laced Dynkin diagram."""
    match = re.fullmatch(r"([ADE])_?(\d+)", symbol.strip())
    if not match:
        raise UnknownSymbol(f"unknown root system {symbol!r}")
    kind, n = match.group(1), int(match.group(2))
    if kind == "A" and n >= 1:
        lat = GramLattice.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    elif kind == "D" and n >= 4:
        lat = star3(2, 2, n - 2)
    elif kind == "E" and n in (6, 7, 8):
        lat = star3(2, 3, n - 3)
    else:
        raise UnknownSymbol(f"unknown root system {symbol!r}")
    return GramLattice(lat.gram, tuple(f"{kind}{n}.{i + 1}" for i in range(n)))


def parse_root_system(text: str) -> list[str]:
    """Split ``"A11+D7+E6"`` or ``"D6^4"`` into component symbols."""
    out = []
    for part in re.split(r"[+,\s]+", text.strip()):
        if not part:
            continue
        match = re.fullmatch(r"([ADE]_?\d+)(?:\^(\d+))?", part)
        if not match:
            raise UnknownSymbol(f"unknown root system component {part!r}")
        out += [match.group(1).replace("_", "")] * int(match.group(2) or 1)
    return out


def coxeter_frame_of_root_system(symbols) -> FrameShape:
    if isinstance(symbols, str):
        symbols = parse_root_system(symbols)
    total = FrameShape()
    for sym in symbols:
        frame = coxeter_element(dynkin(sym)).frame
        if frame is None:
            raise UnknownSymbol(f"Coxeter element of {sym} is not of finite type")
        total = concatenate(total, frame)
    return total


_NAMED = {
    "U": hyperbolic_u,
    "-E8": minus_e8,
    "K3": k3_lattice,
    "K24": k24,
}


def parse_graph(expr: str) -> GramLattice:
    """Build a lattice from ``star:2,3,7+U``, ``-E8``, ``K3``, ``K24``, ``A5`` and sums."""
    out = empty_lattice()
    for part in expr.replace(" ", "").split("+"):
        if part.startswith("star:"):
            nums = [int(x) for x in part[5:].split(",")]
            if len(nums) == 3:
                lat = star3(*nums)
            elif len(nums) == 4:
                lat = star4(*nums)
            else:
                raise ValueError(f"star needs 3 or 4 arms, got {part!r}")
        elif part in _NAMED:
            lat = _NAMED[part]()
        else:
            try:
                lat = dynkin(part)
            except UnknownSymbol:
                raise ValueError(f"unknown lattice term {part!r}") from None
        out = direct_sum(out, lat)
    return out
