"""Shared hypothesis strategies for small random instances."""

import math

from hypothesis import strategies as st

from strange_duality.frameshape import FrameShape
from strange_duality.lattice import GramLattice


@st.composite
def frame_shapes(draw, max_base=12, max_exp=3):
    keys = draw(st.lists(st.integers(1, max_base), min_size=1, max_size=4, unique=True))
    exps = {m: draw(st.integers(-max_exp, max_exp).filter(bool)) for m in keys}
    mult = draw(st.integers(1, 3))
    return FrameShape(exps, math.lcm(*keys) * mult)


@st.composite
def polynomial_shapes(draw, max_base=10):
    """Shapes prod (x^m - 1)^e with positive exponents, which are always polynomials."""
    keys = draw(st.lists(st.integers(1, max_base), min_size=1, max_size=3, unique=True))
    exps = {m: draw(st.integers(1, 2)) for m in keys}
    return FrameShape(exps, math.lcm(*keys))


@st.composite
def gram_lattices(draw, max_rank=5, bound=3):
    n = draw(st.integers(1, max_rank))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = draw(st.integers(-bound, bound))
    return GramLattice(g, [f"g{i}" for i in range(n)])


@st.composite
def dynkin_trees(draw, max_rank=7):
    """Random trees with -2 diagonal, the Gram matrices of simply-laced graphs."""
    n = draw(st.integers(1, max_rank))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    return GramLattice.from_edges(n, edges)


@st.composite
def integer_matrices(draw, rows=3, cols=3, bound=6):
    return [[draw(st.integers(0, bound)) for _ in range(cols)] for _ in range(rows)]
