"""Spanning trees: enumeration, perfect matchings of trees, and witness trees.

The witness-tree construction turns a 2-connected graph that is neither
K2 nor a cycle into a spanning tree with no perfect matching.  It routes
through a minimally 2-connected spanning subgraph: if that subgraph is a
cycle it is a Hamilton cycle and a chord gives the witness, otherwise the
degree-2/forest structure of minimally 2-connected graphs does.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DisconnectedGraphError, NotATreeError, PreconditionError, StructureError, TreeCapExceeded
from .graph import (
    Graph,
    component_masks,
    is_biconnected,
    is_cycle,
    is_spanning_tree_of,
    is_tree,
    iter_bits,
    mask_biconnected,
    mask_connected,
    mask_to_set,
    odd_component_count,
    reach_mask,
    require_connected,
    to_mask,
)
from .matching import Matching

DEFAULT_TREE_CAP = 10**6


class _DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def any_spanning_tree(g):
    """Kruskal over edges in ascending order: the lowest-index spanning tree."""
    ds = _DisjointSet(g.n)
    edges = [e for e in g.edges if ds.union(*e)]
    if len(edges) != g.n - 1:
        raise DisconnectedGraphError(f"graph of order {g.n} is not connected")
    return Graph.from_masks(_masks_of(g.n, edges))


def _masks_of(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def enumerate_spanning_trees(g, cap=DEFAULT_TREE_CAP):
    """Yield every spanning tree of ``g`` once, as a tuple of edges.

    Backtracks over the edges in ascending order, trying inclusion before
    exclusion.  An edge may be excluded only if the graph stays connected
    without it, so every branch reaches a tree.  Raises
    :class:`TreeCapExceeded` once more than ``cap`` trees would be produced.
    """
    require_connected(g)
    count = 0
    for tree in _spanning_trees(g):
        count += 1
        if count > cap:
            raise TreeCapExceeded(count - 1, cap)
        yield tree


def _spanning_trees(g):
    n = g.n
    if n == 1:
        yield ()
        return
    edges = g.edges
    m = len(edges)
    adj = list(g.masks)
    full = g.all_mask
    label = list(range(n))
    chosen = []

    def rec(i):
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        u, v = edges[i]
        lu, lv = label[u], label[v]
        if lu != lv:
            saved = label[:]
            for x in range(n):
                if label[x] == lv:
                    label[x] = lu
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            label[:] = saved
        if m - i - 1 < n - 1 - len(chosen):
            return
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        # an edge closing a cycle with chosen edges is never a bridge
        if lu == lv or mask_connected(adj, full):
            yield from rec(i + 1)
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    yield from rec(0)


def _require_tree(t):
    if not is_tree(t):
        raise NotATreeError(f"graph with {t.n} vertices and {t.size} edges is not a tree")


def tree_perfect_matching(t):
    """The unique perfect matching of tree ``t``, or ``None``.

    Repeatedly matches the least remaining vertex of degree <= 1 to its
    neighbor; an isolated remaining vertex means no perfect matching.
    """
    _require_tree(t)
    adj = t.masks
    alive = t.all_mask
    pairs = []
    while alive:
        for x in iter_bits(alive):
            nb = adj[x] & alive
            if nb.bit_count() <= 1:
                break
        if not nb:
            return None
        y = nb.bit_length() - 1
        pairs.append((x, y))
        alive &= ~((1 << x) | (1 << y))
    return Matching.from_pairs(t.n, pairs)


def tree_pm_criterion(t):
    """True iff ``t - v`` has exactly one odd component for every vertex ``v``."""
    _require_tree(t)
    if t.n % 2:
        # t - v has even order, so its odd components come in pairs
        return False
    return all(odd_component_count(t, (v,)) == 1 for v in range(t.n))


def is_minimally_2connected(h):
    if not is_biconnected(h):
        return False
    adj = list(h.masks)
    full = h.all_mask
    for u, v in h.edges:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        still = mask_biconnected(adj, full)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if still:
            return False
    return True


def minimally_2connected_spanning(g):
    """Spanning subgraph that is 2-connected but loses that on any edge removal.

    One greedy pass in ascending edge order suffices: an edge kept because
    its removal broke 2-connectivity stays unremovable once further edges
    are gone.
    """
    if not is_biconnected(g):
        raise PreconditionError("minimally_2connected_spanning needs a 2-connected graph")
    adj = list(g.masks)
    full = g.all_mask
    for u, v in g.edges:
        # a degree-2 endpoint would drop to degree 1
        if adj[u].bit_count() == 2 or adj[v].bit_count() == 2:
            continue
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if not _still_biconnected(adj, full, u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph.from_masks(adj)


def _still_biconnected(adj, full, u, v):
    """Whether a 2-connected graph stays 2-connected after losing edge uv.

    ``adj`` already lacks uv.  A cut vertex of the smaller graph must
    separate u from v, hence lie inside every u-v path, so only the
    interior of one shortest path needs testing.
    """
    layers = [1 << u]
    seen = 1 << u
    while not seen >> v & 1:
        frontier = 0
        for x in iter_bits(layers[-1]):
            frontier |= adj[x]
        frontier &= full & ~seen
        if not frontier:
            return False
        layers.append(frontier)
        seen |= frontier
    x = v
    for layer in reversed(layers[1:-1]):
        x = (adj[x] & layer).bit_length() - 1
        alive = full & ~(1 << x)
        if not reach_mask(adj, u, alive) >> v & 1:
            return False
    return True


@dataclass(frozen=True)
class BollobasStructure:
    """Degree-2 vertices of a minimally 2-connected non-cycle graph and the forest left without them.

    ``forest`` lives on the same vertex ids as the input; vertices of
    ``degree_two`` are isolated in it and not part of the forest.
    """

    degree_two: frozenset
    forest_vertices: frozenset
    forest: Graph
    trees: list


def bollobas_structure(h):
    """Split ``h`` into its degree-2 vertices and the forest ``h - V2``.

    Checks that the forest has at least two trees and that every component
    of ``h[V2]`` is a path whose two ends attach to different trees; a
    failed check raises :class:`StructureError`.
    """
    if is_cycle(h):
        raise PreconditionError("bollobas_structure needs a graph that is not a cycle")
    if not is_minimally_2connected(h):
        raise PreconditionError("bollobas_structure needs a minimally 2-connected graph")
    return _bollobas_structure(h)


def _bollobas_structure(h):
    adj = h.masks
    v2 = to_mask(v for v in range(h.n) if adj[v].bit_count() == 2)
    rest = h.all_mask & ~v2
    forest = Graph.from_masks([adj[v] & rest if rest >> v & 1 else 0 for v in range(h.n)])
    trees = component_masks(adj, rest)
    forest_edge_count = sum((adj[v] & rest).bit_count() for v in iter_bits(rest)) // 2
    if forest_edge_count != rest.bit_count() - len(trees):
        raise StructureError("h - V2 contains a cycle")
    if len(trees) < 2:
        raise StructureError(f"h - V2 has {len(trees)} component(s), expected >= 2")
    tree_of = {}
    for i, t in enumerate(trees):
        for v in iter_bits(t):
            tree_of[v] = i
    for comp in component_masks(adj, v2):
        inner = sum((adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
        size = comp.bit_count()
        if inner != size - 1 or any((adj[v] & comp).bit_count() > 2 for v in iter_bits(comp)):
            raise StructureError(f"component {sorted(iter_bits(comp))} of h[V2] is not a path")
        outside = []
        for v in iter_bits(comp):
            outside.extend(iter_bits(adj[v] & ~comp))
        if len(outside) != 2:
            raise StructureError(f"path {sorted(iter_bits(comp))} has {len(outside)} outside attachments")
        a, b = outside
        if tree_of[a] == tree_of[b]:
            raise StructureError(f"path {sorted(iter_bits(comp))} has both ends on one tree")
    return BollobasStructure(
        mask_to_set(v2), mask_to_set(rest), forest, [mask_to_set(t) for t in trees]
    )


def _cycle_order(h, start):
    """Vertices of the cycle ``h`` starting at ``start``, heading to its smaller neighbor first."""
    order = [start]
    prev, cur = start, min(h.neighbors(start))
    while cur != start:
        order.append(cur)
        a, b = h.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return order


def lemma23_witness_tree(g, spanning=None):
    """Spanning tree of ``g`` without a perfect matching.

    ``g`` must be 2-connected and not a cycle.  The returned tree has a
    vertex adjacent to two leaves.  ``spanning`` may supply an already
    computed minimally 2-connected spanning subgraph of ``g`` to build on.
    """
    if not is_biconnected(g):
        raise PreconditionError("witness construction needs a 2-connected graph")
    if is_cycle(g):
        raise PreconditionError("witness construction does not apply to cycles")
    if spanning is None:
        h = minimally_2connected_spanning(g)
    else:
        h = spanning
        if h.n != g.n or any(not g.has_edge(*e) for e in h.edges):
            raise PreconditionError("spanning must be a spanning subgraph of g")
    if is_cycle(h):
        tree = _hamiltonian_chord_tree(g, h)
    else:
        tree = _degree_two_tree(h)
    if not is_spanning_tree_of(tree.edges, g):
        raise StructureError("constructed witness is not a spanning tree")
    return tree


def _hamiltonian_chord_tree(g, cycle):
    n = g.n
    chord = next(e for e in g.edges if not cycle.has_edge(*e))
    a, b = chord
    order = _cycle_order(cycle, a)
    k = order.index(b)  # zero-based position of b, i.e. v_{k+1}

    def vtx(i):
        return order[i % n]

    drop = {
        tuple(sorted((vtx(k - 2), vtx(k - 1)))),
        tuple(sorted((vtx(k + 1), vtx(k + 2)))),
    }
    if len(drop) != 2:
        raise StructureError(f"removed cycle edges coincide at order {n}")
    edges = [e for e in cycle.edges if e not in drop] + [chord]
    return Graph(n, edges)


def _degree_two_tree(h):
    st = _bollobas_structure(h)
    forest = st.forest
    v = min(x for x in st.forest_vertices if forest.degree(x) <= 1)
    u, w = sorted(x for x in h.neighbors(v) if x in st.degree_two)[:2]
    sub, old = h.delete_vertices((u, w))
    if not mask_connected(sub.masks, sub.all_mask):
        raise StructureError("h - u - w is disconnected")
    rest = [(old[x], old[y]) for x, y in any_spanning_tree(sub).edges]
    return Graph(h.n, rest + [(min(u, v), max(u, v)), (min(v, w), max(v, w))])
