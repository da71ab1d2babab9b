"""Counts of two- and three-block fragments.

Fragment names follow the usual triple-system labels:

* A1 disjoint pair, A2 intersecting pair;
* B1 3-PPC ``abc def ghi``, B2 hut ``abc def dgh``, B3 3-star
  ``abc ade afg``, B4 3-path ``abc cde efg``, B5 triangle ``abf ace bcd``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

from .core import Configuration
from .errors import InfeasiblePair

FIELDS = ("v", "t", "a1", "a2", "b1", "b2", "b3", "b4", "b5")


@dataclass(frozen=True)
class FragmentCensus:
    v: int
    t: int
    a1: int
    a2: int
    b1: int
    b2: int
    b3: int
    b4: int
    b5: int

    def as_dict(self):
        return asdict(self)


def _masks(cfg):
    masks = []
    for block in cfg.blocks:
        m = 0
        for p in block:
            m |= 1 << p
        masks.append(m)
    return masks


def count_triangles(cfg: Configuration) -> int:
    """Block triples that meet pairwise in three distinct points."""
    masks = _masks(cfg)
    nb = len(masks)
    meets = [[j for j in range(i + 1, nb) if masks[i] & masks[j]] for i in range(nb)]
    t = 0
    for i in range(nb):
        later = meets[i]
        for x, j in enumerate(later):
            for k in later[x + 1:]:
                if masks[j] & masks[k] and not masks[i] & masks[j] & masks[k]:
                    t += 1
    return t


def count_fragments_direct(cfg: Configuration) -> FragmentCensus:
    """Classify every block pair and block triple by intersection pattern."""
    masks = _masks(cfg)
    nb = len(masks)
    meet = [[bool(masks[i] & masks[j]) for j in range(nb)] for i in range(nb)]
    a = [0, 0]
    for i, j in combinations(range(nb), 2):
        a[meet[i][j]] += 1
    b = [0] * 6
    for i, j, k in combinations(range(nb), 3):
        n = meet[i][j] + meet[i][k] + meet[j][k]
        if n == 0:
            b[1] += 1
        elif n == 1:
            b[2] += 1
        elif n == 2:
            b[4] += 1
        elif masks[i] & masks[j] & masks[k]:
            b[3] += 1
        else:
            b[5] += 1
    return FragmentCensus(cfg.v, b[5], a[0], a[1], b[1], b[2], b[3], b[4], b[5])


def census_from_formulas(v: int, t: int) -> FragmentCensus:
    """Fragment counts implied by ``v`` and the triangle count ``t`` alone."""
    if v < 7 or not 0 <= t <= 4 * v:
        raise InfeasiblePair(f"(v={v}, t={t}) outside v >= 7, 0 <= t <= 4v")
    num = v**3 - 21 * v**2 + 122 * v - 6 * t
    if num % 6:
        raise InfeasiblePair(f"b1 = {num}/6 is not an integer")
    census = FragmentCensus(
        v=v,
        t=t,
        a1=v * (v - 7) // 2,
        a2=3 * v,
        b1=num // 6,
        b2=3 * (v * (v - 11) + t),
        b3=v,
        b4=3 * (4 * v - t),
        b5=t,
    )
    negative = [name for name, value in census.as_dict().items() if value < 0]
    if negative:
        raise InfeasiblePair(f"(v={v}, t={t}) gives negative {', '.join(negative)}")
    return census


def verify_census(cfg: Configuration) -> bool:
    direct = count_fragments_direct(cfg)
    try:
        formula = census_from_formulas(cfg.v, count_triangles(cfg))
    except InfeasiblePair:
        return False
    return direct == formula
