"""Named graph families and the constructions used to build family members.

Labeling conventions
--------------------
* ``complete_graph(n)``, ``path_graph(n)``: vertices ``0..n-1``; the path
  runs ``0-1-...-(n-1)``.
* ``cycle_graph(n)``: ``0-1-...-(n-1)-0``.
* ``star_graph(k)``: ``K_{1,k}`` with center ``0`` and leaves ``1..k``.
* ``corona(g)``: the pendant of vertex ``i`` is ``n + i``.
* ``join(g, h)``: ``g`` keeps its ids, ``h``'s vertex ``j`` becomes ``g.n + j``.
* ``compose(h, attachments)``: host vertices first in ``h`` order, then the
  remaining vertices of each ``F_i`` in ascending order, ``F_1`` first.
"""
from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .exceptions import GraphError, PreconditionError
from .graph import Graph, is_connected


def empty_graph(n):
    return Graph(n)


def complete_graph(n):
    if n < 1:
        raise GraphError(f"K_n needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def path_graph(n):
    if n < 1:
        raise GraphError(f"P_n needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise GraphError(f"C_n needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(k):
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(g, h):
    return Graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])


def corona(g):
    """``g o K1``: every vertex ``i`` gains a pendant neighbor ``n + i``."""
    n = g.n
    return Graph(2 * n, list(g.edges) + [(i, n + i) for i in range(n)])


def join(g, h):
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, list(disjoint_union(g, h).edges) + cross)


class Composition(NamedTuple):
    """Result of :func:`compose`.

    ``maps[i][x]`` is the id in ``graph`` of vertex ``x`` of the i-th
    attached graph; the attach vertex maps onto host vertex ``i``.
    """

    graph: Graph
    maps: list


def compose(h, attachments):
    """Build ``H[F_1, ..., F_p]``: fuse vertex ``v_i`` of ``F_i`` onto host vertex ``i``.

    ``attachments`` is a list of ``(F_i, v_i)`` pairs, one per host vertex.
    """
    p = h.n
    if len(attachments) != p:
        raise PreconditionError(f"host has {p} vertices but {len(attachments)} attachments")
    if p < 2:
        raise PreconditionError("host must have order >= 2")
    if not is_connected(h):
        raise PreconditionError("host graph is disconnected")
    edges = list(h.edges)
    maps = []
    nxt = p
    for i, (f, vi) in enumerate(attachments):
        if not 0 <= vi < f.n:
            raise PreconditionError(f"attach vertex {vi} not in F_{i + 1} (order {f.n})")
        mp = {vi: i}
        for x in range(f.n):
            if x != vi:
                mp[x] = nxt
                nxt += 1
        edges.extend((mp[a], mp[b]) for a, b in f.edges)
        maps.append(mp)
    return Composition(Graph(nxt, edges), maps)


def pendant_replace(g, v, f, w):
    """Replace pendant vertex ``v`` of ``g`` by ``f``, fusing ``w`` onto v's neighbor.

    The result has order ``g.n + f.n - 2``.  Vertices of ``g`` other than
    ``v`` keep their relative order and come first; the remaining vertices of
    ``f`` follow in ascending order.
    """
    if not 0 <= v < g.n or g.degree(v) != 1:
        raise PreconditionError(f"vertex {v} is not a pendant vertex")
    if not 0 <= w < f.n:
        raise PreconditionError(f"vertex {w} not in f")
    (u,) = g.neighbors(v)
    gmap = {x: x - (x > v) for x in range(g.n) if x != v}
    base = g.n - 1
    fmap = {w: gmap[u]}
    for x in range(f.n):
        if x != w:
            fmap[x] = base
            base += 1
    edges = [(gmap[a], gmap[b]) for a, b in g.edges if v not in (a, b)]
    edges += [(fmap[a], fmap[b]) for a, b in f.edges]
    return Graph(base, edges)


def theta_graph(a, b, c):
    """Two branch vertices ``0`` and ``1`` joined by internally disjoint paths of lengths a, b, c."""
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)
