"""Exhaustive search for self-dual degree-24 Frame shapes, and the matching
of catalog dualities against the self-dual Leech Frame shapes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .catalog import Catalog, default_catalog, pairing_shape
from .checks import Check, check
from .frameshape import FrameShape, degree, divisors, is_self_dual, trace_power
from .lattice import coxeter_frame_of_root_system

TRACES = (-2, -3, -4)
TARGET_DEGREE = 24


def _shapes_of_order(n: int) -> list[FrameShape]:
    # chi is antisymmetric under m -> n/m, so only divisors below sqrt(n) are free;
    # chi_1 = -chi_n fixes the first pair.
    low = [m for m in divisors(n) if m * m < n]
    if not low:
        return []
    free = low[1:]
    # contribution of the pair (m, n/m) to the degree is chi_m * (m - n/m)
    weight = {m: m - n // m for m in low}
    found = []
    for chi1 in TRACES:
        bound = abs(chi1)
        need = TARGET_DEGREE - chi1 * weight[1]
        # suffix bounds on the reachable degree for pruning
        reach = [0] * (len(free) + 1)
        for i in range(len(free) - 1, -1, -1):
            reach[i] = reach[i + 1] + bound * abs(weight[free[i]])

        def rec(i: int, rest: int, chosen: list[int]):
            if abs(rest) > reach[i]:
                return
            if i == len(free):
                if rest == 0:
                    found.append([chi1] + chosen)
                return
            w = weight[free[i]]
            for c in range(-bound, bound + 1):
                chosen.append(c)
                rec(i + 1, rest - c * w, chosen)
                chosen.pop()

        rec(0, need, [])
    shapes = []
    for values in found:
        chi = {}
        for m, c in zip(low, values):
            if c:
                chi[m] = c
                chi[n // m] = -c
        shape = FrameShape(chi, n)
        # prod m^chi_m must be a positive integer
        value = Fraction(1)
        for m, c in shape.items():
            value *= Fraction(m) ** c
        if value.denominator == 1 and value >= 1:
            shapes.append(shape)
    return shapes


def search_sequences(max_n: int) -> list[FrameShape]:
    """All sequences (chi_1, ..., chi_N), N <= max_n, meeting the seven conditions.

    Results carry order N and come sorted by (N, exponent map).
    """
    out = []
    for n in range(1, max_n + 1):
        out += sorted(_shapes_of_order(n), key=lambda s: s.items())
    return out


def search_collisions(shapes: list[FrameShape]) -> list[tuple[int, ...]]:
    """Exponent maps that occur for more than one order N."""
    seen: dict[tuple, list[int]] = {}
    for s in shapes:
        seen.setdefault(s.items(), []).append(s.order)
    return [tuple(v) for v in seen.values() if len(v) > 1]


@dataclass(frozen=True)
class Pairing:
    pair: tuple[str, str]
    shape: FrameShape
    row: Optional[str]


def pairings(cat: Catalog | None = None) -> list[Pairing]:
    cat = cat or default_catalog()
    out = []
    for a, b in cat.dual_pairs():
        shape = pairing_shape(cat, a, b)
        row = cat.self_dual_match(shape)
        out.append(Pairing((a, b), shape, row.atlas_label if row else None))
    return out


def unmatched_rows(cat: Catalog | None = None) -> list[str]:
    cat = cat or default_catalog()
    hit = {p.row for p in pairings(cat)}
    return [row.atlas_label for row in cat.self_dual if row.atlas_label not in hit]


def classify_pairings(cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    out = []
    by_row: dict[str, set] = {}
    for p in pairings(cat):
        tag = f"pairing/{p.pair[0]}<->{p.pair[1]}"
        s = p.shape
        out.append(check(f"{tag}/degree24", degree(s) == TARGET_DEGREE, str(degree(s))))
        out.append(check(f"{tag}/self-dual", is_self_dual(s), str(s)))
        out.append(check(f"{tag}/trace", trace_power(s, 1) in TRACES, str(trace_power(s, 1))))
        out.append(check(f"{tag}/in-self_dual", p.row is not None, f"{s} -> {p.row}"))
        if p.row:
            by_row.setdefault(p.row, set()).add(frozenset(p.pair))
    for row in cat.self_dual:
        listed = {frozenset(pair) for pair in row.duality_pairs}
        got = by_row.get(row.atlas_label, set())
        out.append(check(f"pairing/self_dual/{row.atlas_label}/pairs", listed == got,
                         f"listed {sorted(map(sorted, listed))} computed {sorted(map(sorted, got))}"))
    missing = unmatched_rows(cat)
    out.append(check("pairing/unmatched=10A,15A,12A", sorted(missing) == sorted(["10A", "15A", "12A"]),
                     ",".join(missing)))
    traces = sorted(cat.self_dual_row(label).frame.chi(1) for label in missing)
    out.append(check("pairing/one-missing-per-trace", traces == [-4, -3, -2], str(traces)))
    return out


def verify_niemeier(cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    out = []
    for row in cat.self_dual:
        if not row.niemeier:
            continue
        got = coxeter_frame_of_root_system("+".join(row.niemeier))
        out.append(check(f"niemeier/{row.atlas_label}/{'+'.join(row.niemeier)}", got == row.frame,
                         f"{got} vs {row.frame}"))
    return out


def verify_search(max_n: int = 119, cat: Catalog | None = None) -> list[Check]:
    cat = cat or default_catalog()
    found = search_sequences(max_n)
    expected = {row.frame for row in cat.self_dual} | {shape for shape, _ in cat.kondo_extras}
    found_set = set(found)
    out = [
        check(f"moonshine/N<={max_n}/count", len(found) == len(expected), f"{len(found)} found"),
        check(f"moonshine/N<={max_n}/equals-self_dual+extras", found_set == expected,
              f"extra {sorted(map(str, found_set - expected))} missing {sorted(map(str, expected - found_set))}"),
        check("moonshine/no-order-collisions", not search_collisions(found)),
    ]
    for s in found:
        ok = is_self_dual(s) and trace_power(s, 1) in TRACES and degree(s) == TARGET_DEGREE
        if not ok:
            out.append(check(f"moonshine/{s}/conditions", False))
    return out


def label_of(shape: FrameShape, cat: Catalog | None = None) -> str:
    cat = cat or default_catalog()
    row = cat.self_dual_match(shape)
    return row.atlas_label if row else "extra"
