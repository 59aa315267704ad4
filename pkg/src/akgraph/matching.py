"""Maximum matchings, perfect-matching tests and Tutte-condition witnesses."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .exceptions import GraphError, OrderTooLargeError
from .graph import component_masks, to_mask

TUTTE_WITNESS_MAX_ORDER = 20


@dataclass(frozen=True)
class Matching:
    """A set of pairwise non-adjacent edges of a graph on ``n`` vertices."""

    n: int
    edges: frozenset

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u in seen or v in seen or u == v:
                raise GraphError(f"edges of a matching must be disjoint: {sorted(self.edges)}")
            seen.update((u, v))

    @classmethod
    def from_pairs(cls, n, pairs):
        return cls(n, frozenset((min(u, v), max(u, v)) for u, v in pairs))

    @property
    def covered(self):
        return frozenset(x for e in self.edges for x in e)

    @property
    def size(self):
        return len(self.edges)

    @property
    def is_perfect(self):
        return 2 * len(self.edges) == self.n

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class TutteWitness:
    """A vertex set ``s`` whose removal leaves more than ``|s|`` odd components."""

    s: tuple
    odd_count: int


class EdgeClass(str, enum.Enum):
    FIXED_DOUBLE = "FixedDouble"
    FIXED_SINGLE = "FixedSingle"
    FREE = "Free"
    NO_PERFECT_MATCHING = "NoPerfectMatching"


def _mate_array(g):
    """Edmonds' blossom algorithm; returns ``mate[v]`` (``-1`` if exposed)."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for w in nbrs[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    def find_augmenting(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = find_augmenting(root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def maximum_matching(g):
    """Maximum-cardinality matching of a general graph (blossom algorithm)."""
    mate = _mate_array(g)
    return Matching.from_pairs(g.n, [(v, w) for v, w in enumerate(mate) if w > v])


def has_perfect_matching(g):
    if g.n % 2:
        return False
    return all(w != -1 for w in _mate_array(g))


def tutte_witness(g):
    """Smallest (then lexicographically least) ``s`` with ``c_o(g - s) > |s|``.

    Returns ``None`` when ``g`` has a perfect matching.  Brute force over
    vertex subsets, so the order is capped at 20.
    """
    if g.n > TUTTE_WITNESS_MAX_ORDER:
        raise OrderTooLargeError(f"tutte_witness supports order <= {TUTTE_WITNESS_MAX_ORDER}")
    if has_perfect_matching(g):
        return None
    adj, full = g.masks, g.all_mask
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            alive = full & ~to_mask(s)
            odd = sum(c.bit_count() & 1 for c in component_masks(adj, alive))
            if odd > k:
                return TutteWitness(s, odd)
    raise AssertionError("Tutte's theorem guarantees a witness")  # pragma: no cover


def classify_edge(g, e):
    """Classify ``e`` as fixed double, fixed single or free w.r.t. the perfect matchings of ``g``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{tuple(e)} is not an edge")
    if not has_perfect_matching(g):
        return EdgeClass.NO_PERFECT_MATCHING
    if not has_perfect_matching(g.remove_edges([(u, v)])):
        return EdgeClass.FIXED_DOUBLE
    if not has_perfect_matching(g.delete_vertices((u, v))[0]):
        return EdgeClass.FIXED_SINGLE
    return EdgeClass.FREE


def classify_edges(g):
    return {e: classify_edge(g, e) for e in g.edges}
