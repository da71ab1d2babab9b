"""Isomorph-free generation of all configurations v_3 for small v.

Orderly generation: block lists are grown in increasing lexicographic
order, point by point, and a partial list survives only while it is the
least sorted block list among all of its relabelings (:func:`is_lex_min`).
Any prefix of a least list is itself least, so every isomorphism class is
reached exactly once, through its canonical block list.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .census import count_triangles
from .core import Configuration, is_connected, is_lex_min
from .errors import VTooSmall

# Configuration counts for v = 7..14; reference only, not used by the search.
KNOWN_TOTALS = {7: 1, 8: 1, 9: 3, 10: 10, 11: 31, 12: 229, 13: 2036, 14: 21399}

LONG_RUN_V = 13


@dataclass(frozen=True)
class TriangleDistribution:
    v: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self):
        return sorted(self.counts.items())


class _Search:
    def __init__(self, v, prefix=(), max_depth=None):
        self.v = v
        self.blocks = []
        self.deg = [0] * v
        self.nbr = [0] * v
        self.max_depth = max_depth
        for b in prefix:
            self.push(tuple(b))

    def push(self, b):
        p, x, y = b
        self.blocks.append(b)
        for a in b:
            self.deg[a] += 1
        self.nbr[p] |= (1 << x) | (1 << y)
        self.nbr[x] |= (1 << p) | (1 << y)
        self.nbr[y] |= (1 << p) | (1 << x)

    def pop(self):
        p, x, y = self.blocks.pop()
        for a in (p, x, y):
            self.deg[a] -= 1
        self.nbr[p] &= ~((1 << x) | (1 << y))
        self.nbr[x] &= ~((1 << p) | (1 << y))
        self.nbr[y] &= ~((1 << p) | (1 << x))

    def run(self):
        used = 1 + max((a for b in self.blocks for a in b), default=0)
        yield from self._rec(used)

    def _rec(self, used):
        v, deg, nbr, blocks = self.v, self.deg, self.nbr, self.blocks
        if self.max_depth is not None and len(blocks) == self.max_depth:
            yield list(blocks)
            return
        p = 0
        while p < v and deg[p] == 3:
            p += 1
        if p == v:
            yield list(blocks)
            return
        # p unused means every introduced point is full: start a new component
        used = max(used, p + 1)
        last = blocks[-1] if blocks else (-1, -1, -1)
        for x in range(p + 1, min(used + 1, v)):
            if deg[x] == 3 or nbr[p] >> x & 1:
                continue
            ytop = min(used + 2 if x == used else used + 1, v)
            for y in range(x + 1, ytop):
                if deg[y] == 3 or nbr[p] >> y & 1 or nbr[x] >> y & 1:
                    continue
                b = (p, x, y)
                if b <= last:
                    continue
                self.push(b)
                if is_lex_min(blocks):
                    yield from self._rec(max(used, y + 1))
                self.pop()


def _leaves(v, prefix):
    return list(_Search(v, prefix).run())


def enumerate_all(v: int, connected_only: bool = True, threads: int = 1, split_depth: int = 5):
    """Yield one configuration per isomorphism class, in canonical form.

    Output order is the lexicographic order of the canonical block lists,
    whatever the number of worker processes.
    """
    if v < 7:
        raise VTooSmall(f"no configuration v_3 exists for v={v} < 7")
    if threads <= 1:
        leaves = _Search(v).run()
    else:
        prefixes = list(_Search(v, max_depth=split_depth).run())
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_leaves, [v] * len(prefixes), prefixes)
            leaves = sorted(leaf for part in parts for leaf in part)
    for blocks in leaves:
        if len(blocks) != v:
            continue
        cfg = Configuration(v, tuple(blocks))
        if connected_only and not is_connected(cfg):
            continue
        yield cfg


def triangle_distribution(v: int, connected_only: bool = True, threads: int = 1) -> TriangleDistribution:
    counts = Counter(count_triangles(cfg) for cfg in enumerate_all(v, connected_only, threads))
    return TriangleDistribution(v, dict(sorted(counts.items())))
