import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from strange_duality.errors import DegenerateForm, DiagonalNotMinusTwo, UnknownSymbol
from strange_duality.frameshape import FrameShape, parse_frame
from strange_duality.lattice import (
    GramLattice,
    bareiss_determinant,
    characteristic_polynomial,
    coxeter_element,
    coxeter_frame_of_root_system,
    coxeter_matrix,
    determinant,
    direct_sum,
    dynkin,
    empty_lattice,
    hyperbolic_u,
    k24,
    k3_lattice,
    minus_e8,
    parse_graph,
    parse_root_system,
    signature,
    smith_diagonal,
    smith_invariants,
    star3,
    star4,
)

from strategies import dynkin_trees, gram_lattices, integer_matrices


def fraction_det(m):
    """Plain Gaussian elimination over the rationals, as an independent determinant."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


@pytest.mark.parametrize(
    "arms, det, sig",
    [
        ((2, 3, 7), -1, (1, 9, 0)),
        ((2, 3, 5), 1, (0, 8, 0)),
        ((3, 3, 6), -9, None),
        ((2, 3, 10), 4, None),
    ],
)
def test_star3(arms, det, sig):
    lat = star3(*arms)
    assert lat.rank == sum(arms) - 2
    assert determinant(lat) == det
    if sig:
        assert signature(lat) == sig


def test_star4():
    assert determinant(star4(2, 2, 2, 3)) == -4
    assert smith_invariants(star4(2, 2, 2, 3))[-2:] == [2, 2]
    assert determinant(star4(3, 3, 3, 3)) == 54
    assert determinant(star4(2, 2, 3, 3)) == 12


def test_named_lattices():
    assert determinant(minus_e8()) == 1
    assert signature(minus_e8()) == (0, 8, 0)
    assert determinant(hyperbolic_u()) == -1
    assert k3_lattice().rank == 22 and determinant(k3_lattice()) == -1
    assert signature(k3_lattice()) == (3, 19, 0)
    assert determinant(k24()) == 1 and signature(k24()) == (4, 20, 0)


def test_graph_expressions():
    assert determinant(parse_graph("star:2,3,7+U")) == 1
    assert determinant(parse_graph("star:3,4,4+U")) == -8
    assert determinant(parse_graph("D4")) == 4
    with pytest.raises(ValueError):
        parse_graph("star:2,3")
    with pytest.raises(ValueError):
        parse_graph("X9")


def test_degenerate_snf():
    lat = GramLattice(((0, 0), (0, -2)), ("a", "b"))
    with pytest.raises(DegenerateForm):
        smith_invariants(lat)
    assert smith_diagonal(lat.gram) == [2, 0]
    assert signature(lat) == (0, 1, 1)


def test_gram_validation():
    with pytest.raises(ValueError):
        GramLattice(((1, 2), (3, 1)), ("a", "b"))
    with pytest.raises(ValueError):
        GramLattice(((1,),), ("a", "b"))


def test_empty():
    e = empty_lattice()
    assert e.rank == 0 and determinant(e) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_coxeter_a_n(n):
    rep = coxeter_element(dynkin(f"A{n}"))
    assert rep.frame == FrameShape({n + 1: 1, 1: -1})
    assert rep.order == n + 1


@pytest.mark.parametrize("sym, h", [("D4", 6), ("D5", 8), ("D8", 14), ("E6", 12), ("E7", 18), ("E8", 30)])
def test_coxeter_numbers(sym, h):
    rep = coxeter_element(dynkin(sym))
    assert rep.order == h
    assert rep.frame.order == h


def test_e8_shape():
    assert coxeter_element(dynkin("E8")).frame == parse_frame("2*3*5*30/1*6*10*15")


def test_coxeter_needs_minus_two():
    with pytest.raises(DiagonalNotMinusTwo):
        coxeter_matrix(hyperbolic_u())


def test_unknown_symbols():
    for bad in ("D3", "E9", "F4", "A0"):
        with pytest.raises(UnknownSymbol):
            dynkin(bad)
    with pytest.raises(UnknownSymbol):
        parse_root_system("A5+G2")


def test_root_system_parse():
    assert parse_root_system("D6^4") == ["D6"] * 4
    assert parse_root_system("A11+D7+E6") == ["A11", "D7", "E6"]


@pytest.mark.parametrize(
    "system, frame",
    [
        ("A12^2", "13^2/1^2"),
        ("A11+D7+E6", "2^2*3*12^3/1^3*4*6^2"),
        ("A1^24", "2^24/1^24"),
    ],
)
def test_niemeier_frames(system, frame):
    got = coxeter_frame_of_root_system(system)
    assert sum(m * e for m, e in got.items()) == 24
    assert got == parse_frame(frame)


def test_niemeier_d16_e8():
    got = coxeter_frame_of_root_system("D16+E8")
    d16 = FrameShape({2: 1, 30: 1, 1: -1, 15: -1}, 30)
    e8 = parse_frame("2*3*5*30/1*6*10*15")
    assert got.exponents == {m: d16.chi(m) + e8.chi(m) for m in set(d16.exponents) | set(e8.exponents)
                             if d16.chi(m) + e8.chi(m)}


def test_characteristic_polynomial_small():
    assert characteristic_polynomial([[0, -1], [1, 0]]).coeffs == (1, 0, 1)
    assert characteristic_polynomial([[2]]).coeffs == (-2, 1)


def test_non_finite_tree():
    # star(2,3,7) is hyperbolic; its Coxeter polynomial has a Salem factor
    rep = coxeter_element(star3(2, 3, 7))
    assert rep.frame is None and rep.order is None
    assert rep.char_poly.degree == 10


@settings(max_examples=100)
@given(integer_matrices(4, 4, 9))
def test_bareiss_matches_rational_elimination(m):
    assert bareiss_determinant(m) == fraction_det(m)


@settings(max_examples=100)
@given(gram_lattices())
def test_snf_product_is_abs_det(lat):
    det = determinant(lat)
    diag = smith_diagonal(lat.gram)
    assert math.prod(diag) == abs(det)
    for a, b in zip(diag, diag[1:]):
        assert b == 0 or (a != 0 and b % a == 0)


@settings(max_examples=100)
@given(gram_lattices(max_rank=4), gram_lattices(max_rank=4))
def test_direct_sum_multiplicative(a, b):
    s = direct_sum(a, b)
    assert determinant(s) == determinant(a) * determinant(b)
    assert signature(s) == tuple(x + y for x, y in zip(signature(a), signature(b)))


@settings(max_examples=100)
@given(gram_lattices())
def test_signature_counts(lat):
    p, n, z = signature(lat)
    assert p + n + z == lat.rank
    assert (z > 0) == (determinant(lat) == 0)
    if z == 0:
        assert (-1) ** n * determinant(lat) > 0


@settings(max_examples=100)
@given(dynkin_trees())
def test_coxeter_polynomial_degree_and_det(lat):
    rep = coxeter_element(lat)
    poly = rep.char_poly
    assert poly.degree == lat.rank and poly.coeffs[-1] == 1
    # det(C) = (-1)^n for a product of n reflections, so the constant term is 1
    assert poly.coeffs[0] == 1
