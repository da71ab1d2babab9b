"""Cyclic configurations generated by a starter block ``{0, a, a+b}``."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from .census import count_triangles
from .core import Configuration, canonical_form, is_connected
from .errors import Disconnected, InvalidTriple, UnsupportedV


@dataclass(frozen=True, order=True)
class CyclicTriple:
    """Cyclically ordered ``<a, b, c>`` with ``a + b + c = v``."""

    v: int
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, v, a, b, c=None):
        return cls(v, a, b, v - a - b if c is None else c)

    @property
    def parts(self):
        return (self.a, self.b, self.c)

    @property
    def connection_set(self):
        """The signed differences ``{+-a, +-b, +-c}`` mod v."""
        return frozenset(x % self.v for d in self.parts for x in (d, -d))

    def problems(self) -> list[str]:
        v, parts = self.v, self.parts
        out = []
        if sum(parts) != v:
            out.append(f"a+b+c = {sum(parts)} != v = {v}")
        if any(not 1 <= x <= v - 3 for x in parts):
            out.append("each of a, b, c must lie in 1..v-3")
        if len(set(parts)) != 3:
            out.append("a, b, c must be pairwise distinct")
        if v % 2 == 0 and v // 2 in parts:
            out.append("v/2 may not occur when v is even")
        return out

    def check(self):
        problems = self.problems()
        if problems:
            raise InvalidTriple(f"<{self.a},{self.b},{self.c}> mod {self.v}: " + "; ".join(problems))
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise Disconnected(f"gcd(a, b, c) = {gcd(gcd(self.a, self.b), self.c)} > 1")

    def rotations_and_reversals(self):
        a, b, c = self.parts
        return [CyclicTriple(self.v, *p) for p in ((a, b, c), (b, c, a), (c, a, b), (c, b, a), (b, a, c), (a, c, b))]

    def __str__(self):
        return f"<{self.a},{self.b},{self.c}>"


def orbit_blocks(t: CyclicTriple):
    v = t.v
    return tuple((i, (i + t.a) % v, (i + t.a + t.b) % v) for i in range(v))


def cyclic_configuration(t: CyclicTriple) -> Configuration:
    t.check()
    cfg = Configuration(t.v, orbit_blocks(t))
    shifted = cfg.relabel([(i + 1) % t.v for i in range(t.v)])
    assert shifted == cfg, "i -> i+1 is not an automorphism"
    assert is_connected(cfg)
    return cfg


def doubling(t: CyclicTriple) -> bool:
    """Some ``s`` in the connection set has ``2s`` in it too, ``3s != 0``."""
    v, conn = t.v, t.connection_set
    return any((2 * s) % v in conn and (3 * s) % v for s in conn)


def third_of_v(t: CyclicTriple) -> bool:
    return t.v % 3 == 0 and t.v // 3 in t.connection_set


def predict_cyclic_triangles(t: CyclicTriple) -> int:
    """Triangle count for v >= 10: ``v``, plus ``v`` for a doubled
    difference, plus ``v/3`` when ``v/3`` is a difference."""
    t.check()
    if t.v < 10:
        raise UnsupportedV(f"prediction covers v >= 10 only; count v={t.v} directly")
    dbl, third = doubling(t), third_of_v(t)
    assert not (dbl and third), f"{t} mod {t.v} meets both extra-triangle conditions"
    return t.v + (t.v if dbl else 0) + (t.v // 3 if third else 0)


def enumerate_cyclic(v: int, up_to_isomorphism: bool = False) -> list[CyclicTriple]:
    """Valid connected triples, one per rotation/reversal class.

    Each class is represented by its least member, which is the sorted
    triple.  With ``up_to_isomorphism`` classes giving isomorphic
    configurations are merged as well, keeping the first.
    """
    reps = []
    for a in range(1, v):
        for b in range(a + 1, v - a):
            c = v - a - b
            if c <= b:
                continue
            t = CyclicTriple(v, a, b, c)
            if t.problems() or gcd(gcd(a, b), c) != 1:
                continue
            reps.append(t)
    reps.sort()
    if up_to_isomorphism:
        seen = set()
        merged = []
        for t in reps:
            key = canonical_form(cyclic_configuration(t)).canonical_blocks
            if key not in seen:
                seen.add(key)
                merged.append(t)
        reps = merged
    return reps


def classify_cyclic(v: int) -> dict[int, list[CyclicTriple]]:
    """Representatives of each class grouped by their direct triangle count."""
    if v < 10:
        raise UnsupportedV(f"classification covers v >= 10 only, got {v}")
    out = defaultdict(list)
    for t in enumerate_cyclic(v):
        n = count_triangles(cyclic_configuration(t))
        predicted = predict_cyclic_triangles(t)
        if n != predicted:
            raise AssertionError(f"{t} mod {v}: direct {n} != predicted {predicted}")
        out[n].append(t)
    return dict(sorted(out.items()))
