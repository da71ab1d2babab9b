"""Triangle-free configurations for every admissible v, and the
many-triangle family built from edge-deleted Heawood graphs.

A configuration has no triangles exactly when its Levi graph has girth at
least 8.  Starting graphs of orders 30, 34, 36, 38 and 42 are grown by 10
vertices at a time with :func:`extend_plus_five`, which needs a 10-cycle and
hands back a new one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import core
from .census import count_triangles
from .core import Configuration
from .errors import (
    BadCycle,
    NoSuchConfiguration,
    NoSuchSeed,
    NoTenCycle,
    NTooSmall,
    PostconditionFailed,
)
from .graphs import (
    BLOCK,
    POINT,
    LeviGraph,
    configuration_from_levi,
    girth_at_most,
    levi_graph,
)

# Girth-8 cubic bipartite graphs of orders 34, 36 (three of them), 38 and 42,
# each with a 10-cycle, written as configurations.
SEEDS = {
    17: (
        "012 034 056 178 19a 2bc 2de 37b 39d 48e 4af 58c 5df 6ab 6eg 7fg 9cg",
    ),
    18: (
        "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 58g 5ae 6ch 6df 7eh 9gh bfg",
        "012 034 056 178 19a 2bc 2de 37b 39d 48c 4fg 58e 59f 6ch 6dg 7fh abg aeh",
        "012 034 056 178 19a 2bc 2de 37b 39d 48e 4af 57g 5df 68c 69h acg bfh egh",
    ),
    19: (
        "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 57e 5ag 68h 69i bfh cgi dgh efi",
    ),
    21: (
        "012 034 056 178 19a 2bc 2de 37b 39d 48c 4af 57e 5gh 68i 6fj 9gk ahi bfg cjk dhj eik",
    ),
}

# base order for each residue of v mod 5
_BASE_FOR_RESIDUE = {0: 15, 2: 17, 3: 18, 4: 19, 1: 21}

# order in which the ten new vertices are joined into a cycle
_NEW_CYCLE_ORDER = (0, 3, 4, 7, 8, 1, 2, 5, 6, 9)

HEAWOOD_EDGES = (
    (0, 7), (0, 11), (0, 13), (1, 7), (1, 8), (1, 12), (2, 8),
    (2, 9), (2, 13), (3, 7), (3, 9), (3, 10), (4, 8), (4, 10),
    (4, 11), (5, 9), (5, 11), (5, 12), (6, 10), (6, 12), (6, 13),
)
HEAWOOD_SIDE = (POINT,) * 7 + (BLOCK,) * 7


@dataclass(frozen=True)
class ExtensionTrace:
    base_v: int
    steps: int
    cycle_history: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def v(self):
        return self.base_v + 5 * self.steps

    def to_json(self):
        return {
            "base_v": self.base_v,
            "steps": self.steps,
            "v": self.v,
            "cycle_history": [list(c) for c in self.cycle_history],
        }


def cremona_richmond() -> Configuration:
    """Points: the 15 pairs from a 6-set.  Blocks: its 15 perfect matchings."""
    pairs = list(combinations(range(6), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    blocks = []
    for first in pairs:
        if first[0] != 0:
            continue
        rest = [x for x in range(6) if x not in first]
        for second in combinations(rest, 2):
            if second[0] != rest[0]:
                continue
            third = tuple(x for x in rest if x not in second)
            blocks.append((index[first], index[second], index[third]))
    return Configuration(15, tuple(blocks))


def seed_triangle_free(v: int, index: int = 0) -> Configuration:
    try:
        text = SEEDS[v][index]
    except (KeyError, IndexError):
        raise NoSuchSeed(f"no embedded girth-8 seed for v={v}, index={index}") from None
    return core.parse_compact(text)


def find_ten_cycle(g: LeviGraph) -> tuple[int, ...]:
    """Lexicographically least 10-cycle, started at its smallest vertex."""
    adj = g.adjacency
    for start in range(g.n):
        path = [start]
        on_path = {start}

        def extend():
            last = path[-1]
            if len(path) == 10:
                return start in adj[last]
            for nxt in adj[last]:
                if nxt > start and nxt not in on_path:
                    path.append(nxt)
                    on_path.add(nxt)
                    if extend():
                        return True
                    on_path.discard(path.pop())
            return False

        if extend():
            return tuple(path)
    raise NoTenCycle("graph has no 10-cycle")


def _check_extension(g: LeviGraph):
    if not g.is_cubic():
        raise PostconditionFailed("extension is not cubic")
    if g.colouring() is None:
        raise PostconditionFailed("extension is not bipartite")
    gi = girth_at_most(g, 8)
    if gi != 8:
        raise PostconditionFailed(f"extension has girth {gi}, expected 8")
    if not g.has_cycle(g.designated_cycle) or len(g.designated_cycle) != 10:
        raise PostconditionFailed("designated cycle is not a 10-cycle")


def extend_plus_five(g: LeviGraph, cycle) -> LeviGraph:
    """Grow a girth-8 cubic bipartite graph by ten vertices along a 10-cycle.

    Edges ``v1v2, v3v4, v5v6, v7v8, v9v0`` of the cycle are removed, new
    vertices ``u0..u9`` are joined in the cycle ``u0 u3 u4 u7 u8 u1 u2 u5
    u6 u9`` and each ``ui`` is tied to ``vi``.  The new cycle becomes the
    designated cycle of the result.
    """
    cycle = tuple(cycle)
    if len(cycle) != 10 or not g.has_cycle(cycle):
        raise BadCycle(f"{cycle} is not a 10-cycle of the graph")
    side = g.colouring()
    if side is None:
        raise BadCycle("input graph is not bipartite")
    n = g.n
    adj = [set(nb) for nb in g.adjacency] + [set() for _ in range(10)]

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for i in range(1, 10, 2):
        a, b = cycle[i], cycle[(i + 1) % 10]
        adj[a].discard(b)
        adj[b].discard(a)
    new_cycle = tuple(n + i for i in _NEW_CYCLE_ORDER)
    for i in range(10):
        link(new_cycle[i], new_cycle[(i + 1) % 10])
        link(n + i, cycle[i])
    new_side = tuple(side) + tuple(1 - side[cycle[i]] for i in range(10))
    result = LeviGraph(n + 10, tuple(tuple(sorted(s)) for s in adj), new_side, new_cycle)
    _check_extension(result)
    return result


def triangle_free(v: int, index: int = 0) -> tuple[Configuration, ExtensionTrace]:
    """A connected triangle-free v_3, for v = 15 and every v >= 17."""
    base = _BASE_FOR_RESIDUE[v % 5]
    if v < base:
        if v == 16:
            reason = "no cubic bipartite graph of order 32 has girth 8"
        else:
            reason = "every v_3 with v <= 14 contains a triangle"
        raise NoSuchConfiguration(f"no triangle-free configuration {v}_3: {reason}")
    seed = cremona_richmond() if base == 15 else seed_triangle_free(base, index if base == 18 else 0)
    g = levi_graph(seed)
    cycle = find_ten_cycle(g)
    history = []
    for _ in range((v - base) // 5):
        history.append(cycle)
        g = extend_plus_five(g, cycle)
        cycle = g.designated_cycle
    cfg = configuration_from_levi(g)
    if not (core.validate(cfg).valid and core.is_connected(cfg) and count_triangles(cfg) == 0):
        raise PostconditionFailed(f"triangle_free({v}) produced a bad configuration")
    return cfg, ExtensionTrace(base, len(history), tuple(history))


def heawood(copies: int = 1) -> LeviGraph:
    edges = [(a + 14 * k, b + 14 * k) for k in range(copies) for a, b in HEAWOOD_EDGES]
    return LeviGraph.from_edges(14 * copies, edges, side=HEAWOOD_SIDE * copies)


def heawood_minus_edge() -> LeviGraph:
    """The Heawood graph without its first edge ``(0, 7)``."""
    return LeviGraph.from_edges(14, HEAWOOD_EDGES[1:], side=HEAWOOD_SIDE)


def heawood_chain_graph(n: int) -> tuple[LeviGraph, list[tuple[int, int]]]:
    """``n`` edge-deleted Heawood graphs joined in a ring, plus the joining edges.

    Copy ``k`` occupies vertices ``14k..14k+13``; its exposed block vertex
    ``14k+7`` is joined to the exposed point vertex of copy ``k+1``.
    """
    if n < 2:
        raise NTooSmall(f"heawood_chain needs n >= 2, got {n}")
    u, v = HEAWOOD_EDGES[0]
    edges = [(a + 14 * k, b + 14 * k) for k in range(n) for a, b in HEAWOOD_EDGES[1:]]
    joins = [(14 * ((k + 1) % n) + u, 14 * k + v) for k in range(n)]
    g = LeviGraph.from_edges(14 * n, edges + joins, side=HEAWOOD_SIDE * n)
    return g, sorted(joins)


def heawood_chain(n: int) -> Configuration:
    """Configuration on 7n points with exactly 20n triangles."""
    g, _ = heawood_chain_graph(n)
    return configuration_from_levi(g)
