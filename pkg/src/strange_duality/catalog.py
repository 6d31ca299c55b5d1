"""The 33 singularities of the strange duality and its extension, with
the list of self-dual Leech-lattice Frame shapes.

Data ship as ``data/catalog.json`` and are validated on load; a file that
violates any invariant is rejected with :class:`CatalogError`.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional

from .checks import Check, check
from .errors import CatalogError, NoFormula, UnknownName
from .frameshape import (
    FrameShape,
    concatenate,
    degree,
    is_self_dual,
    parse_frame,
    saito_dual,
    trace_power,
    value_at_one,
)
from .lattice import GramLattice
from .weights import WeightSystem

FAMILIES = ("exceptional-unimodal", "triangle-ICIS", "quadrilateral-hypersurface", "quadrilateral-ICIS")
ICIS_FAMILIES = ("triangle-ICIS", "quadrilateral-ICIS")
HYPERSURFACE_FAMILIES = ("exceptional-unimodal", "quadrilateral-hypersurface")


@dataclass(frozen=True)
class GabVariant:
    p: tuple[int, ...]
    underline: str  # one character per entry, "1" marks an underlined entry

    @property
    def formula_type(self) -> Optional[str]:
        return _FORMULA_TYPES.get((len(self.p), self.underline))

    def __str__(self):
        return " ".join(f"_{x}_" if u == "1" else str(x) for x, u in zip(self.p, self.underline))


_FORMULA_TYPES = {
    (3, "001"): "hypersurface-1",
    (3, "011"): "hypersurface-2",
    (4, "0001"): "icis-1",
    (4, "0011"): "icis-2",
    (4, "0101"): "icis-3",
}


@dataclass(frozen=True)
class SeriesDual:
    names: tuple[str, ...]
    h_star: Optional[int]
    mu_star: int


@dataclass(frozen=True)
class SingularityRecord:
    name: str
    family: str
    equations: tuple[str, ...]
    weights: WeightSystem
    dol: tuple[int, ...]
    gab_variants: tuple[GabVariant, ...]
    mu: int
    d: int
    h: int
    duals: tuple[str, ...]
    frame: Optional[FrameShape] = None
    mu1: Optional[int] = None
    nu: Optional[int] = None
    mu_flat: Optional[int] = None
    d_flat: Optional[int] = None
    frame_flat: Optional[FrameShape] = None
    frame_full: Optional[FrameShape] = None
    series_dual: Optional[SeriesDual] = None
    discriminant_form: Optional[str] = None
    dual_form: Optional[str] = None
    restrictions: Optional[str] = None

    @property
    def is_icis(self) -> bool:
        return self.family in ICIS_FAMILIES

    @property
    def gab(self) -> tuple[int, ...]:
        return self.gab_variants[0].p

    @property
    def duality_frame(self) -> FrameShape:
        """Shape entering the duality: the reduced shape for ICIS, the monodromy otherwise."""
        return self.frame_flat if self.is_icis else self.frame

    @property
    def duality_mu(self) -> int:
        return self.mu_flat if self.is_icis else self.mu

    @property
    def duality_d(self) -> int:
        return self.d_flat if self.is_icis else self.d

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "family": self.family,
            "equations": list(self.equations),
            "weights": list(self.weights.weights),
            "degrees": list(self.weights.degrees),
            "dol": list(self.dol),
            "gab_variants": [{"p": list(g.p), "underline": g.underline} for g in self.gab_variants],
            "mu": self.mu,
            "d": self.d,
            "h": self.h,
            "duals": list(self.duals),
        }
        for key in ("mu1", "nu", "mu_flat", "d_flat", "discriminant_form", "dual_form", "restrictions"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        for key in ("frame", "frame_flat", "frame_full"):
            if getattr(self, key) is not None:
                out[key] = str(getattr(self, key))
        if self.series_dual is not None:
            out["series_dual"] = {
                "names": list(self.series_dual.names),
                "h_star": self.series_dual.h_star,
                "mu_star": self.series_dual.mu_star,
            }
        return out


@dataclass(frozen=True)
class SelfDualRow:
    atlas_label: str
    frame: FrameShape
    mukai_star: bool
    niemeier: Optional[tuple[str, ...]]
    duality_pairs: tuple[tuple[str, str], ...]

    def to_json(self) -> dict:
        return {
            "atlas": self.atlas_label,
            "frame": str(self.frame),
            "mukai_star": self.mukai_star,
            "niemeier": "+".join(self.niemeier) if self.niemeier else None,
            "duality_pairs": [list(p) for p in self.duality_pairs],
        }


@dataclass(frozen=True)
class Catalog:
    records: dict[str, SingularityRecord]
    self_dual: tuple[SelfDualRow, ...]
    kondo_extras: tuple[tuple[FrameShape, str], ...]
    fixtures: dict[str, GramLattice] = field(default_factory=dict)
    version: int = 1

    def __iter__(self):
        return iter(self.records.values())

    def __len__(self):
        return len(self.records)

    def family(self, fam: str) -> list[SingularityRecord]:
        return [r for r in self if r.family == fam]

    def lookup(self, name: str) -> SingularityRecord:
        try:
            return self.records[normalize_name(name)]
        except KeyError:
            raise UnknownName(f"unknown singularity {name!r}") from None

    def dual_of(self, name: str) -> list[SingularityRecord]:
        return [self.records[n] for n in self.lookup(name).duals]

    def dual_pairs(self) -> list[tuple[str, str]]:
        """Unordered dual pairs in catalog order (a self-dual record pairs with itself)."""
        seen, out = set(), []
        for rec in self:
            for other in rec.duals:
                key = frozenset((rec.name, other))
                if key not in seen:
                    seen.add(key)
                    out.append((rec.name, other))
        return out

    def self_dual_match(self, shape: FrameShape) -> Optional[SelfDualRow]:
        for row in self.self_dual:
            if row.frame == shape:
                return row
        return None

    def self_dual_row(self, label: str) -> SelfDualRow:
        for row in self.self_dual:
            if row.atlas_label == label:
                return row
        raise UnknownName(f"no self-dual row {label!r}")


_TYPOGRAPHY = {"′": "'", "’": "'", "_": "", " ": "", "{": "", "}": ""}


def normalize_name(name: str) -> str:
    """``J'_{9}``, ``J′9`` and ``j'9`` all map to ``J'9``."""
    out = name
    for a, b in _TYPOGRAPHY.items():
        out = out.replace(a, b)
    return out[:1].upper() + out[1:]


def _frame(text: Optional[str], order: int) -> Optional[FrameShape]:
    if text is None:
        return None
    return parse_frame(text).with_order(order)


def _build_record(raw: dict) -> SingularityRecord:
    h = int(raw["h"])
    sd = raw.get("series_dual")
    return SingularityRecord(
        name=raw["name"],
        family=raw["family"],
        equations=tuple(raw["equations"]),
        weights=WeightSystem(tuple(raw["weights"]), tuple(raw["degrees"])),
        dol=tuple(raw["dol"]),
        gab_variants=tuple(GabVariant(tuple(g["p"]), g["underline"]) for g in raw["gab_variants"]),
        mu=raw["mu"],
        d=raw["d"],
        h=h,
        duals=tuple(raw["duals"]),
        frame=_frame(raw.get("frame"), h),
        mu1=raw.get("mu1"),
        nu=raw.get("nu"),
        mu_flat=raw.get("mu_flat"),
        d_flat=raw.get("d_flat"),
        frame_flat=_frame(raw.get("frame_flat"), h),
        frame_full=_frame(raw.get("frame_full"), h),
        series_dual=SeriesDual(tuple(sd["names"]), sd["h_star"], sd["mu_star"]) if sd else None,
        discriminant_form=raw.get("discriminant_form"),
        dual_form=raw.get("dual_form"),
        restrictions=raw.get("restrictions"),
    )


def _build_row(raw: dict) -> SelfDualRow:
    frame = parse_frame(raw["frame"])
    niemeier = tuple(raw["niemeier"].split("+")) if raw.get("niemeier") else None
    return SelfDualRow(
        atlas_label=raw["atlas"],
        frame=frame,
        mukai_star=bool(raw["mukai_star"]),
        niemeier=niemeier,
        duality_pairs=tuple(tuple(p) for p in raw["duality_pairs"]),
    )


def from_json(doc: dict, strict: bool = True) -> Catalog:
    """Build a catalog; ``strict`` runs the structural validation as well."""
    try:
        records = [_build_record(r) for r in doc["singularities"]]
        rows = tuple(_build_row(r) for r in doc["self_dual"])
        extras = tuple((parse_frame(e["frame"]), e.get("kondo_ref", "")) for e in doc["kondo_extras"])
        fixtures = {
            name: GramLattice(tuple(map(tuple, fx["gram"])), tuple(fx["labels"]))
            for name, fx in doc.get("fixtures", {}).items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed catalog: {exc!r}") from None
    by_name = {}
    for rec in records:
        if rec.name in by_name:
            raise CatalogError(f"duplicate record {rec.name}")
        by_name[rec.name] = rec
    cat = Catalog(by_name, rows, extras, fixtures, int(doc.get("version", 1)))
    bad = [c for c in validate(cat) if not c.ok] if strict else []
    if bad:
        raise CatalogError("catalog failed validation:\n" + "\n".join(c.line() for c in bad))
    return cat


def load(path: str | Path | None = None) -> Catalog:
    if path is None:
        return default_catalog()
    with open(path, encoding="utf-8") as fh:
        return from_json(json.load(fh))


def catalog_json_text() -> str:
    return resources.files("strange_duality").joinpath("data/catalog.json").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return from_json(json.loads(catalog_json_text()))


def lookup(name: str) -> SingularityRecord:
    return default_catalog().lookup(name)


def dual_of(name: str) -> list[SingularityRecord]:
    return default_catalog().dual_of(name)


def self_dual_match(shape: FrameShape) -> Optional[SelfDualRow]:
    return default_catalog().self_dual_match(shape)


def validate(cat: Catalog) -> list[Check]:
    """Structural invariants checked at load time."""
    out: list[Check] = []
    arity = {
        "exceptional-unimodal": (3, 3, 3),
        "triangle-ICIS": (3, 4, 4),
        "quadrilateral-hypersurface": (4, 3, 3),
        "quadrilateral-ICIS": (4, 4, 4),
    }
    for r in cat:
        tag = f"catalog/{r.name}"
        out.append(check(f"{tag}/family", r.family in FAMILIES, r.family))
        if r.family not in FAMILIES:
            continue
        n_dol, n_gab, n_w = arity[r.family]
        arity_ok = (
            len(r.dol) == n_dol
            and len(r.weights.weights) == n_w
            and bool(r.gab_variants)
            and all(len(g.p) == n_gab and len(g.underline) == n_gab for g in r.gab_variants)
        )
        out.append(check(f"{tag}/arity", arity_ok))
        out.append(check(f"{tag}/weights", r.weights.is_reduced and r.weights.degrees_representable, str(r.weights)))
        out.append(check(f"{tag}/h", r.h == r.weights.degrees[-1], f"h={r.h}"))
        out.append(check(f"{tag}/duals", all(n in cat.records for n in r.duals), ",".join(r.duals)))
        out.append(check(f"{tag}/dual-symmetry", all(r.name in cat.records[n].duals for n in r.duals if n in cat.records)))
        if r.frame is not None:
            out.append(check(f"{tag}/mu=deg(frame)", degree(r.frame) == r.mu, f"{degree(r.frame)} vs {r.mu}"))
        if r.is_icis:
            ok = None not in (r.mu1, r.nu, r.mu_flat, r.d_flat, r.frame_flat, r.frame_full)
            out.append(check(f"{tag}/icis-fields", ok))
            if not ok:
                continue
            out.append(check(f"{tag}/nu=mu+mu1", r.nu == r.mu + r.mu1))
            out.append(check(f"{tag}/mu_flat=mu-1", r.mu_flat == r.mu - 1))
            out.append(check(f"{tag}/mu_flat=deg(frame_flat)", degree(r.frame_flat) == r.mu_flat))
            out.append(check(f"{tag}/mu=deg(frame_full)", degree(r.frame_full) == r.mu))
            out.append(check(f"{tag}/trace(c_flat)=-2", trace_power(r.frame_flat, 1) == -2))
            sign = (-1) ** r.mu_flat
            out.append(check(f"{tag}/d_flat", sign * value_at_one(r.frame_flat) == r.d_flat,
                             f"{sign * value_at_one(r.frame_flat)} vs {r.d_flat}"))
        else:
            out.append(check(f"{tag}/frame", r.frame is not None))
            if r.frame is not None:
                out.append(check(f"{tag}/trace(c)=-1", trace_power(r.frame, 1) == -1))
        if r.family == "triangle-ICIS":
            sd = r.series_dual
            out.append(check(f"{tag}/h_star", sd is not None and sd.h_star == math.lcm(*r.weights.degrees)))
    labels = Counter(row.atlas_label for row in cat.self_dual)
    out.append(check("catalog/self_dual/labels-unique", max(labels.values(), default=1) == 1))
    for row in cat.self_dual:
        tag = f"catalog/self_dual/{row.atlas_label}"
        out.append(check(f"{tag}/degree", degree(row.frame) == 24, str(degree(row.frame))))
        out.append(check(f"{tag}/self-dual", is_self_dual(row.frame)))
        out.append(check(f"{tag}/trace", row.frame.chi(1) in (-2, -3, -4), str(row.frame.chi(1))))
        out.append(check(f"{tag}/pairs-known", all(a in cat.records and b in cat.records for a, b in row.duality_pairs)))
    empty = [row.atlas_label for row in cat.self_dual if not row.duality_pairs]
    out.append(check("catalog/self_dual/unmatched-rows", len(empty) == 3, ",".join(empty)))
    return out


def quad_determinant_formula(variant: GabVariant) -> int:
    """|d| from the Gabrielov numbers of a quadrilateral diagram, selected by the underline pattern."""
    p = variant.p
    kind = variant.formula_type
    if kind == "hypersurface-1":
        return 4 * (p[0] * p[1] - p[0] - p[1])
    if kind == "hypersurface-2":
        return (p[0] - 1) * (p[1] + p[2])
    if kind == "icis-1":
        return 4 * (p[0] * p[1] * p[2] - p[0] - p[2])
    if kind == "icis-2":
        return p[0] * p[1] * (p[2] + p[3] + 2) - sum(p)
    if kind == "icis-3":
        return p[0] * p[2] * (p[1] + p[3])
    raise NoFormula(f"no determinant formula for the diagram ({variant})")


def verify_arnold(cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    out = []
    for x in cat.family("exceptional-unimodal"):
        for name in x.duals:
            y = cat.records[name]
            tag = f"arnold/{x.name}<->{y.name}"
            out.append(check(f"{tag}/Dol=Gab*", x.dol == y.gab, f"{x.dol} vs {y.gab}"))
            out.append(check(f"{tag}/Gab=Dol*", x.gab == y.dol, f"{x.gab} vs {y.dol}"))
            out.append(check(f"{tag}/N=N*", x.weights.degrees == y.weights.degrees))
            out.append(check(f"{tag}/mu+mu*=24", x.mu + y.mu == 24, f"{x.mu}+{y.mu}"))
            out.append(check(f"{tag}/d=d*", x.d == y.d, f"{x.d} vs {y.d}"))
    return out


def _multisets(rec: SingularityRecord) -> list[Counter]:
    return [Counter(g.p) for g in rec.gab_variants]


def verify_extension(cat: Catalog | None = None) -> list[Check]:
    """Dol/Gab exchange, Milnor number sums, discriminants and Saito duality for the extension."""
    cat = cat or default_catalog()
    out = []
    for x in cat:
        if x.family == "exceptional-unimodal":
            continue
        for name in x.duals:
            y = cat.records[name]
            tag = f"extension/{x.name}<->{y.name}"
            out.append(check(f"{tag}/Dol in Gab*", Counter(x.dol) in _multisets(y),
                             f"{x.dol} vs {[g.p for g in y.gab_variants]}"))
            if x.family == "quadrilateral-ICIS":
                raw = 26
            else:
                raw = 25
            out.append(check(f"{tag}/mu+mu*={raw}", x.mu + y.mu == raw, f"{x.mu}+{y.mu}"))
            out.append(check(f"{tag}/flat mu+mu*=24", x.duality_mu + y.duality_mu == 24,
                             f"{x.duality_mu}+{y.duality_mu}"))
            out.append(check(f"{tag}/flat d=d*", x.duality_d == y.duality_d, f"{x.duality_d} vs {y.duality_d}"))
            out.append(check(f"{tag}/saito", saito_dual(x.duality_frame) == y.duality_frame,
                             f"{saito_dual(x.duality_frame)} vs {y.duality_frame}"))
    return out


def pairing_shape(cat: Catalog, a: str, b: str) -> FrameShape:
    """The degree-24 shape pi * pi^* of a dual pair (reduced shapes on ICIS sides)."""
    x, y = cat.records[a], cat.records[b]
    return concatenate(x.duality_frame, y.duality_frame)


def default_catalog_path() -> Path:
    return Path(str(resources.files("strange_duality").joinpath("data/catalog.json")))
