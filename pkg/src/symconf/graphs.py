"""Levi and incidence graphs, girth, and 6-cycle counting."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .core import Configuration
from .errors import GirthTooSmall, NotBipartite, NotCubic, UnequalSides

INFINITE = math.inf

POINT = 0
BLOCK = 1


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n, edges):
        adj = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            adj[a].add(b)
            adj[b].add(a)
        return cls(n, tuple(tuple(sorted(s)) for s in adj))

    def edges(self):
        return [(a, b) for a in range(self.n) for b in self.adjacency[a] if a < b]

    def degrees(self):
        return [len(nb) for nb in self.adjacency]


@dataclass(frozen=True)
class LeviGraph(SimpleGraph):
    """Bipartite point-block graph.

    ``side[x]`` is :data:`POINT` or :data:`BLOCK`; it may be ``None`` for a
    graph read from an edge list, in which case a 2-colouring is computed on
    demand.  ``designated_cycle`` optionally records a 10-cycle used by the
    +5 extension.
    """

    side: tuple[int, ...] | None = None
    designated_cycle: tuple[int, ...] | None = None

    @classmethod
    def from_edges(cls, n, edges, side=None, designated_cycle=None):
        g = SimpleGraph.from_edges(n, edges)
        return cls(
            n,
            g.adjacency,
            None if side is None else tuple(side),
            None if designated_cycle is None else tuple(designated_cycle),
        )

    def is_cubic(self):
        return all(len(nb) == 3 for nb in self.adjacency)

    def colouring(self):
        """Side per vertex, checked against every edge; None if not bipartite."""
        side = list(self.side) if self.side is not None else _two_colouring(self.adjacency)
        if side is None:
            return None
        for a in range(self.n):
            for b in self.adjacency[a]:
                if side[a] == side[b]:
                    return None
        return side

    def has_cycle(self, cycle):
        cycle = list(cycle)
        if len(set(cycle)) != len(cycle) or len(cycle) < 3:
            return False
        if any(not 0 <= x < self.n for x in cycle):
            return False
        return all(cycle[i - 1] in self.adjacency[cycle[i]] for i in range(len(cycle)))


def _two_colouring(adjacency):
    side = [-1] * len(adjacency)
    for root in range(len(adjacency)):
        if side[root] >= 0:
            continue
        side[root] = POINT
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in adjacency[a]:
                if side[b] < 0:
                    side[b] = 1 - side[a]
                    queue.append(b)
                elif side[b] == side[a]:
                    return None
    return side


def levi_graph(cfg: Configuration) -> LeviGraph:
    """Points are vertices ``0..v-1``, block ``i`` is vertex ``v + i``."""
    v = cfg.v
    nb = len(cfg.blocks)
    adj = [[] for _ in range(v + nb)]
    for i, block in enumerate(cfg.blocks):
        for p in block:
            adj[p].append(v + i)
            adj[v + i].append(p)
    side = (POINT,) * v + (BLOCK,) * nb
    return LeviGraph(v + nb, tuple(tuple(sorted(a)) for a in adj), side)


def incidence_graph(cfg: Configuration) -> SimpleGraph:
    edges = set()
    for a, b, c in cfg.blocks:
        edges.update({(a, b), (a, c), (b, c)})
    return SimpleGraph.from_edges(cfg.v, edges)


def _shortest_cycle(adjacency, cutoff=None):
    """Girth by BFS from every vertex; cycles longer than ``cutoff`` are ignored."""
    best = INFINITE if cutoff is None else cutoff + 1
    n = len(adjacency)
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        touched = [root]
        dist[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            if 2 * dist[a] + 1 >= best:
                break
            for b in adjacency[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    parent[b] = a
                    touched.append(b)
                    queue.append(b)
                elif b != parent[a]:
                    best = min(best, dist[a] + dist[b] + 1)
        for x in touched:
            dist[x] = -1
            parent[x] = -1
    if cutoff is not None and best > cutoff:
        return INFINITE
    return best


def girth(g: SimpleGraph):
    """Length of a shortest cycle, or :data:`INFINITE` for a forest."""
    return _shortest_cycle(g.adjacency)


def girth_at_most(g: SimpleGraph, bound: int):
    """Exact girth if it is at most ``bound``, else :data:`INFINITE`."""
    return _shortest_cycle(g.adjacency, cutoff=bound)


def edge_six_cycle_counts(g: SimpleGraph) -> dict[tuple[int, int], int]:
    """6-cycles through each edge ``ab``.

    With girth at least 6 a 6-cycle through ``ab`` is ``a a' x y b' b`` with
    ``x`` two steps from ``a`` away from ``b`` and ``y`` two steps from ``b``
    away from ``a``, so the count is the number of edges joining those two
    vertex sets.
    """
    adj = g.adjacency
    counts = {}
    for a in range(g.n):
        for b in adj[a]:
            if b < a:
                continue
            far_a = [x for a1 in adj[a] if a1 != b for x in adj[a1] if x != a]
            far_b = {y for b1 in adj[b] if b1 != a for y in adj[b1] if y != b}
            counts[(a, b)] = sum(1 for x in far_a for y in adj[x] if y in far_b)
    return counts


def count_six_cycles(g: SimpleGraph) -> int:
    total = sum(edge_six_cycle_counts(g).values())
    if total % 6:
        raise ValueError("per-edge 6-cycle counts do not sum to a multiple of 6; girth < 6?")
    return total // 6


def configuration_from_levi(g: LeviGraph) -> Configuration:
    """Read a configuration off a cubic bipartite graph of girth at least 6.

    The side holding vertex 0 becomes the points, numbered in vertex order;
    the other side becomes the blocks, also in vertex order.
    """
    if not g.is_cubic():
        bad = next(x for x in range(g.n) if len(g.adjacency[x]) != 3)
        raise NotCubic(f"vertex {bad} has degree {len(g.adjacency[bad])}")
    side = g.colouring()
    if side is None:
        raise NotBipartite("graph has an odd cycle or an edge inside one side")
    points = [x for x in range(g.n) if side[x] == side[0]]
    blocks = [x for x in range(g.n) if side[x] != side[0]]
    if len(points) != len(blocks):  # unreachable for a cubic bipartite graph
        raise UnequalSides(f"sides have {len(points)} and {len(blocks)} vertices")
    gi = girth_at_most(g, 4)
    if gi != INFINITE:
        raise GirthTooSmall(f"girth {gi} < 6: some pair of points shares two blocks")
    index = {x: i for i, x in enumerate(points)}
    return Configuration(len(points), tuple(tuple(index[p] for p in g.adjacency[b]) for b in blocks))


def to_dot(g: SimpleGraph, name="G") -> str:
    lines = [f"graph {name} {{"]
    side = getattr(g, "side", None)
    for x in range(g.n):
        if side is not None:
            shape = "circle" if side[x] == POINT else "box"
            lines.append(f"  {x} [shape={shape}];")
        else:
            lines.append(f"  {x};")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_text(g: SimpleGraph) -> str:
    return "".join(f"{x}: {' '.join(map(str, g.adjacency[x]))}\n" for x in range(g.n))


def parse_adjacency_text(text: str) -> SimpleGraph:
    adj = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        head, _, tail = line.partition(":")
        adj[int(head)] = tuple(int(t) for t in tail.split())
    n = len(adj)
    if sorted(adj) != list(range(n)):
        raise ValueError("vertex ids must be 0..n-1")
    edges = {(min(a, b), max(a, b)) for a, nb in adj.items() for b in nb}
    g = SimpleGraph.from_edges(n, edges)
    if g.adjacency != tuple(tuple(sorted(adj[x])) for x in range(n)):
        raise ValueError("adjacency lists are not symmetric")
    return g
