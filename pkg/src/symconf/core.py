"""Configuration data model, validation, text I/O and canonical forms."""

from __future__ import annotations

import hashlib
import json
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import (
    PointCountMismatch,
    TokenLength,
    TooManyPoints,
    UnknownSymbol,
    ValidationFailed,
)

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
_SYMBOL_INDEX = {ch: i for i, ch in enumerate(ALPHABET)}

BLOCK_SIZE = "BlockSize"
POINT_DEGREE = "PointDegree"
PAIR_ONCE = "PairOnce"
RANGE = "Range"


@dataclass(frozen=True, eq=False)
class Configuration:
    """``v`` points and a list of blocks (3-sets of point ids in ``0..v-1``).

    Blocks are stored as sorted tuples in input order.  Equality is multiset
    equality of blocks, so two configurations that differ only in block order
    compare equal.  Construction does not validate; see :func:`validate`.
    """

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.v == other.v and sorted(self.blocks) == sorted(other.blocks)

    def __hash__(self):
        return hash((self.v, tuple(sorted(self.blocks))))

    def __len__(self):
        return len(self.blocks)

    def point_blocks(self) -> list[list[int]]:
        """For each point, the indices of the blocks through it."""
        through = [[] for _ in range(self.v)]
        for i, block in enumerate(self.blocks):
            for p in block:
                if 0 <= p < self.v:
                    through[p].append(i)
        return through

    def relabel(self, perm) -> "Configuration":
        """Image of the configuration under the point map ``p -> perm[p]``."""
        return Configuration(self.v, tuple(tuple(perm[p] for p in b) for b in self.blocks))

    def to_json(self) -> dict:
        return {"v": self.v, "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {rule for rule, _ in self.violations}


@dataclass(frozen=True)
class CanonicalForm:
    canonical_blocks: tuple[tuple[int, int, int], ...]
    hash: str = field(compare=False)


def validate(cfg: Configuration) -> ValidationReport:
    """Check the v_3 axioms and report every violation found.

    Violations are ``(rule, ids)`` pairs: ``BlockSize`` carries a block
    index, ``Range`` a ``(block index, point)`` pair, ``PointDegree`` a point
    and its degree, ``PairOnce`` the repeated pair.
    """
    violations = []
    v = cfg.v
    for i, block in enumerate(cfg.blocks):
        if len(block) != 3 or len(set(block)) != 3:
            violations.append((BLOCK_SIZE, i))
        for p in block:
            if not isinstance(p, int) or p < 0 or p >= v:
                violations.append((RANGE, (i, p)))
    degree = Counter(p for b in cfg.blocks for p in set(b))
    for p in range(v):
        if degree[p] != 3:
            violations.append((POINT_DEGREE, (p, degree[p])))
    pairs = Counter(pair for b in cfg.blocks for pair in combinations(sorted(set(b)), 2))
    for pair, n in sorted(pairs.items()):
        if n > 1:
            violations.append((PAIR_ONCE, pair))
    return ValidationReport(tuple(violations))


def is_connected(cfg: Configuration) -> bool:
    if cfg.v == 0:
        return True
    through = cfg.point_blocks()
    seen = {0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for i in through[p]:
            for q in cfg.blocks[i]:
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
    return len(seen) == cfg.v


def parse_compact(text: str) -> Configuration:
    """Parse whitespace-separated 3-symbol tokens such as ``"012 034 056"``.

    Symbols run 0-9, a-z, A-Z and map to their alphabet position.
    """
    tokens = text.split()
    blocks = []
    symbols = set()
    for tok in tokens:
        if len(tok) != 3:
            raise TokenLength(f"token {tok!r} has length {len(tok)}, expected 3")
        try:
            block = tuple(_SYMBOL_INDEX[ch] for ch in tok)
        except KeyError as exc:
            raise UnknownSymbol(f"unknown symbol {exc.args[0]!r} in token {tok!r}") from None
        symbols.update(block)
        blocks.append(block)
    cfg = Configuration(len(symbols), tuple(blocks))
    report = validate(cfg)
    if len(symbols) != len(tokens):
        raise PointCountMismatch(
            report, f"{len(symbols)} distinct symbols but {len(tokens)} blocks"
        )
    if not report.valid:
        raise ValidationFailed(report)
    return cfg


def format_compact(cfg: Configuration) -> str:
    if cfg.v > len(ALPHABET):
        raise TooManyPoints(f"v={cfg.v} exceeds the {len(ALPHABET)}-symbol alphabet; use JSON")
    return " ".join("".join(ALPHABET[p] for p in sorted(b)) for b in cfg.blocks)


def parse_json(text: str | dict) -> Configuration:
    data = json.loads(text) if isinstance(text, str) else text
    cfg = Configuration(int(data["v"]), tuple(tuple(int(p) for p in b) for b in data["blocks"]))
    report = validate(cfg)
    if not report.valid:
        raise ValidationFailed(report)
    return cfg


def format_json(cfg: Configuration) -> str:
    return json.dumps(cfg.to_json())


def read_configuration(text: str) -> Configuration:
    """JSON if the first non-space character is ``{``, compact otherwise."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_compact(text)


# --- canonical form -------------------------------------------------------


class _Smaller(Exception):
    pass


def _lex_min(blocks, bound=None, stop_if_smaller=False):
    """Lexicographically least sorted block list over all point relabelings.

    Labels are handed out in order of first use: the next emitted block
    always contains the smallest label that still has unemitted blocks, so
    only ties between candidate blocks need branching.  ``bound`` prunes any
    branch whose prefix exceeds it; with ``stop_if_smaller`` the search
    raises :class:`_Smaller` as soon as a strictly smaller prefix appears.

    Two leaves with equal lists give an automorphism.  The search then jumps
    back to where the two paths split, and later siblings that a known
    automorphism (fixing the labelled points) maps onto an explored sibling
    are skipped; both only drop subtrees whose leaves were already seen.
    """
    nb = len(blocks)
    npts = 1 + max((p for b in blocks for p in b), default=-1)
    through = [[] for _ in range(npts)]
    for i, b in enumerate(blocks):
        for p in b:
            through[p].append(i)
    label = [-1] * npts
    inv = []
    used = [False] * nb
    remaining = [len(t) for t in through]
    path = []
    choices = []
    best = [list(bound) if bound is not None else None]
    best_inv = [None]
    best_choices = [None]
    automorphisms = []

    def emit(i):
        used[i] = True
        for p in blocks[i]:
            remaining[p] -= 1

    def unemit(i):
        used[i] = False
        for p in blocks[i]:
            remaining[p] += 1

    def leaf():
        if best[0] is None or path < best[0]:
            if stop_if_smaller and best[0] is not None:
                raise _Smaller
            best[0] = list(path)
            best_inv[0], best_choices[0] = list(inv), list(choices)
            return None
        if path != best[0]:
            return None
        if best_inv[0] is None:
            best_inv[0], best_choices[0] = list(inv), list(choices)
            return None
        gamma = list(range(npts))
        for src, dst in zip(best_inv[0], inv):
            gamma[src] = dst
        automorphisms.append(gamma)
        for d, (mine, theirs) in enumerate(zip(choices, best_choices[0])):
            if mine != theirs:
                return d
        return None

    def stabilising():
        return [g for g in automorphisms if all(g[p] == p for p in inv)]

    def rec(cur):
        depth = len(path)
        if depth == nb:
            return leaf()
        fresh = len(inv)
        while cur < fresh and remaining[inv[cur]] == 0:
            cur += 1
        # each option: (key, points that receive fresh labels in order, block index)
        options = []
        if cur == fresh:
            key = (fresh, fresh + 1, fresh + 2)
            for i in range(nb):
                if not used[i]:
                    for order in permutations(blocks[i]):
                        options.append((key, order, i))
        else:
            o = inv[cur]
            for i in through[o]:
                if used[i]:
                    continue
                x, y = (p for p in blocks[i] if p != o)
                lx, ly = label[x], label[y]
                if lx >= 0 and ly >= 0:
                    options.append(((cur, min(lx, ly), max(lx, ly)), (), i))
                elif lx >= 0:
                    options.append(((cur, lx, fresh), (y,), i))
                elif ly >= 0:
                    options.append(((cur, ly, fresh), (x,), i))
                else:
                    options.append(((cur, fresh, fresh + 1), (x, y), i))
                    options.append(((cur, fresh, fresh + 1), (y, x), i))
        key = min(opt[0] for opt in options)
        options = [opt for opt in options if opt[0] == key]
        explored = set()
        for _, fresh_pts, i in options:
            ref = best[0]
            # path never exceeds ref[:depth]; only a tied prefix can be pruned
            if ref is not None and path == ref[:depth]:
                if key > ref[depth]:
                    return None
                if key < ref[depth] and stop_if_smaller:
                    raise _Smaller
            if len(options) > 1 and explored and automorphisms:
                if fresh_pts in _orbit(explored, stabilising()):
                    continue
            explored.add(fresh_pts)
            for p in fresh_pts:
                label[p] = len(inv)
                inv.append(p)
            emit(i)
            path.append(key)
            choices.append((i, fresh_pts))
            jump = rec(cur)
            choices.pop()
            path.pop()
            unemit(i)
            for p in reversed(fresh_pts):
                label[p] = -1
                inv.pop()
            if jump is not None and jump < depth:
                return jump
        return None

    rec(0)
    return best[0]


def _orbit(seeds, generators):
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        pts = frontier.pop()
        for g in generators:
            img = tuple(g[p] for p in pts)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return seen


def lex_min_blocks(blocks) -> list[tuple[int, int, int]]:
    return _lex_min([tuple(b) for b in blocks])


def is_lex_min(blocks) -> bool:
    """True iff the sorted block list is minimal over all relabelings."""
    blocks = sorted(tuple(sorted(b)) for b in blocks)
    try:
        _lex_min(blocks, bound=blocks, stop_if_smaller=True)
    except _Smaller:
        return False
    return True


def canonical_form(cfg: Configuration) -> CanonicalForm:
    canon = tuple(_lex_min(list(cfg.blocks)))
    text = " ".join(",".join(map(str, b)) for b in canon)
    return CanonicalForm(canon, hashlib.sha256(f"{cfg.v}:{text}".encode()).hexdigest())


def are_isomorphic(a: Configuration, b: Configuration) -> bool:
    if a.v != b.v or len(a.blocks) != len(b.blocks):
        return False
    return canonical_form(a).canonical_blocks == canonical_form(b).canonical_blocks


def disjoint_union(a: Configuration, b: Configuration) -> Configuration:
    """Configuration on ``a.v + b.v`` points with ``b`` shifted past ``a``."""
    shifted = tuple(tuple(p + a.v for p in blk) for blk in b.blocks)
    return Configuration(a.v + b.v, a.blocks + shifted)


def relabel_random(cfg: Configuration, rng) -> Configuration:
    """Random relabeling of points and shuffle of block order."""
    perm = list(range(cfg.v))
    rng.shuffle(perm)
    blocks = list(cfg.relabel(perm).blocks)
    rng.shuffle(blocks)
    return Configuration(cfg.v, tuple(blocks))
