"""Independent brute-force oracles.

Nothing here calls the package's algorithms; graphs are read only through
``g.n`` and ``g.edges``.
"""
from itertools import combinations

import numpy as np


def _adjacency(g):
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def components_bf(n, edges, removed=()):
    """Components of the graph on range(n) minus ``removed`` (plain DFS)."""
    removed = set(removed)
    adj = {v: set() for v in range(n) if v not in removed}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].add(v)
            adj[v].add(u)
    seen, comps = set(), []
    for s in adj:
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def connected_bf(n, edges):
    return n >= 1 and len(components_bf(n, edges)) == 1


def all_matchings(g):
    """Every matching of ``g`` (as frozensets of edges)."""
    edges = list(g.edges)
    out = []

    def rec(i, used, cur):
        if i == len(edges):
            out.append(frozenset(cur))
            return
        rec(i + 1, used, cur)
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, cur + [edges[i]])

    rec(0, frozenset(), [])
    return out


def perfect_matchings_bf(g):
    """All perfect matchings: always match the least unmatched vertex."""
    adj = _adjacency(g)
    out = []

    def rec(free, cur):
        if not free:
            out.append(frozenset(cur))
            return
        v = min(free)
        for w in sorted(adj[v] & free):
            rec(free - {v, w}, cur + [(min(v, w), max(v, w))])

    rec(frozenset(range(g.n)), [])
    return out


def max_matching_size_bf(g):
    return max(len(m) for m in all_matchings(g))


def tutte_condition_bf(g):
    """True iff c_o(g - S) <= |S| for every vertex subset S."""
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            odd = sum(len(c) % 2 for c in components_bf(g.n, g.edges, s))
            if odd > k:
                return False
    return True


def spanning_trees_bf(g):
    """All spanning trees as sorted edge tuples, by (n-1)-subset filtering."""
    out = []
    for sub in combinations(g.edges, g.n - 1):
        if connected_bf(g.n, sub):
            out.append(tuple(sorted(sub)))
    return out


def all_trees_have_pm_bf(g):
    from akgraph.graph import Graph

    if g.n % 2:
        return False
    return all(perfect_matchings_bf(Graph(g.n, t)) for t in spanning_trees_bf(g))


def ak_table(n):
    """ak for every labeled graph on ``n`` vertices, indexed by edge bitmask.

    Returns an int array: -1 where no anti-Kekule set exists, else the
    minimum size.  Superset DP: best[mask] is the largest bad submask
    (connected, spanning, no perfect matching) measured in edges.
    """
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    size = 1 << m
    bad = np.zeros(size, dtype=bool)
    pop = np.array([bin(x).count("1") for x in range(size)], dtype=np.int64)
    for mask in range(size):
        edges = [pairs[i] for i in range(m) if mask >> i & 1]
        if not connected_bf(n, edges):
            continue
        bad[mask] = not _has_pm_edges(n, edges)
    best = np.where(bad, pop, -1)
    idx = np.arange(size)
    for i in range(m):
        bit = 1 << i
        has = (idx & bit) != 0
        best[has] = np.maximum(best[has], best[idx[has] ^ bit])
    return np.where(best >= 0, pop - best, -1), pairs


def _has_pm_edges(n, edges):
    if n % 2:
        return False
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def rec(free):
        if not free:
            return True
        v = min(free)
        return any(rec(free - {v, w}) for w in adj[v] & free)

    return rec(frozenset(range(n)))


def edge_mask(g, pairs):
    index = {p: i for i, p in enumerate(pairs)}
    return sum(1 << index[e] for e in g.edges)
