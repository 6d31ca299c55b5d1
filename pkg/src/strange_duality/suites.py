"""Named verification suites and the registry behind ``verify``."""

from __future__ import annotations

from typing import Callable

from .catalog import (
    Catalog,
    default_catalog,
    quad_determinant_formula,
    validate,
    verify_arnold,
    verify_extension,
)
from .checks import Check, check
from .errors import NoFormula
from .etaq import verify_eta
from .frameshape import (
    FrameShape,
    concatenate,
    from_char_poly,
    saito_dual,
    to_char_poly,
    value_at_one,
)
from .lattice import (
    GramLattice,
    coxeter_element,
    determinant,
    direct_sum,
    hyperbolic_u,
    k24,
    k3_lattice,
    minus_e8,
    signature,
    smith_invariants,
    star3,
    star4,
)
from .magicsquare import verify_kobayashi
from .moonshine import classify_pairings, verify_niemeier, verify_search
from .weights import milnor_number, monodromy_frame

QUAD_FAMILIES = ("quadrilateral-hypersurface", "quadrilateral-ICIS")


def star_of(arms) -> GramLattice:
    return star3(*arms) if len(arms) == 3 else star4(*arms)


def verify_lattices(cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    out = [
        check("lattice/-E8/det", determinant(minus_e8()) == 1),
        check("lattice/K3/det", determinant(k3_lattice()) == -1),
        check("lattice/K3/signature", signature(k3_lattice()) == (3, 19, 0), str(signature(k3_lattice()))),
        check("lattice/K24/signature", signature(k24()) == (4, 20, 0), str(signature(k24()))),
    ]
    for r in cat:
        s = star_of(r.dol)
        tag = f"lattice/pinkham/{r.name}"
        out.append(check(f"{tag}/rank+mu=22", s.rank + r.mu == 22, f"{s.rank}+{r.mu}"))
        det = determinant(s)
        out.append(check(f"{tag}/|det|=|d|", abs(det) == abs(r.d), f"{det} vs {r.d}"))
        inv = smith_invariants(s)
        prod = 1
        for a in inv:
            prod *= a
        out.append(check(f"{tag}/snf-product", prod == abs(det), f"{inv}"))
        if r.family == "exceptional-unimodal":
            got = determinant(direct_sum(star3(*r.gab), hyperbolic_u()))
            out.append(check(f"lattice/milnor/{r.name}/det", got == r.d, f"{got} vs {r.d}"))
        if r.family == "quadrilateral-hypersurface":
            got = determinant(direct_sum(s, hyperbolic_u()))
            for name in r.duals:
                want = cat.lookup(name).d_flat
                out.append(check(f"lattice/flat/{r.name}->{name}/det", got == want, f"{got} vs {want}"))
    for r in cat:
        if r.family not in QUAD_FAMILIES:
            continue
        for g in r.gab_variants:
            tag = f"lattice/quad-formula/{r.name}/{g}"
            try:
                got = quad_determinant_formula(g)
            except NoFormula:
                out.append(check(tag, r.name == "I1,0", "no formula"))
                continue
            out.append(check(tag, got == abs(r.d), f"{got} vs |{r.d}|"))
    return out


def verify_fixture(cat: Catalog | None = None, name: str = "I1,0") -> list[Check]:
    """Coxeter element of the transcribed generator Gram against the catalog shape of c."""
    cat = cat or default_catalog()
    rec = cat.lookup(name)
    lat = cat.fixtures[name]
    rep = coxeter_element(lat)
    tag = f"fixture/{name}"
    out = [check(f"{tag}/rank=nu", lat.rank == rec.nu, f"{lat.rank} vs {rec.nu}")]
    if rep.frame is None:
        out.append(check(f"{tag}/cyclotomic", False,
                         f"characteristic polynomial {rep.char_poly} is not a product of cyclotomics; "
                         "the transcribed intersection numbers are inconsistent"))
        return out
    # c on the nu generators carries nu - mu extra eigenvalues 1
    unit = FrameShape({1: rec.nu - rec.mu}, 1)
    expected = concatenate(rec.frame_full, unit)
    out.append(check(f"{tag}/frame", rep.frame == expected,
                     f"computed {rep.frame}, catalog {rec.frame_full} times 1^{rec.nu - rec.mu}"))
    out.append(check(f"{tag}/order", rep.order == rec.h, f"{rep.order} vs {rec.h}"))
    return out


def verify_frames(cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    out = list(validate(cat))
    for r in cat:
        if r.is_icis:
            sign = (-1) ** r.mu_flat
            got = sign * value_at_one(r.frame_flat)
            out.append(check(f"frames/{r.name}/d_flat", got == r.d_flat, f"{got} vs {r.d_flat}"))
            continue
        tag = f"frames/{r.name}"
        mo = monodromy_frame(r.weights)
        out.append(check(f"{tag}/milnor-orlik", mo == r.frame, f"{mo} vs {r.frame}"))
        out.append(check(f"{tag}/milnor-number", milnor_number(r.weights) == r.mu))
        got = (-1) ** r.mu * value_at_one(r.frame)
        out.append(check(f"{tag}/d", got == r.d, f"{got} vs {r.d}"))
        poly = to_char_poly(r.frame)
        out.append(check(f"{tag}/char-poly-roundtrip", from_char_poly(poly, r.frame.order) == r.frame))
        out.append(check(f"{tag}/saito-involution", saito_dual(saito_dual(r.frame)) == r.frame))
    out += verify_fixture(cat)
    return out


def verify_moonshine(cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    return verify_search(119, cat) + classify_pairings(cat) + verify_niemeier(cat)


SUITES: dict[str, Callable[[Catalog | None], list[Check]]] = {
    "arnold": verify_arnold,
    "extension": verify_extension,
    "lattices": verify_lattices,
    "frames": verify_frames,
    "eta": verify_eta,
    "kobayashi": verify_kobayashi,
    "moonshine": verify_moonshine,
}


def run_suite(name: str, cat: Catalog | None = None) -> list[Check]:
    if name == "all":
        out = []
        for fn in SUITES.values():
            out += fn(cat)
        return out
    return SUITES[name](cat)
