"""Simple undirected graphs on dense integer vertices, plus connectivity tools.

Vertices are ``0 .. n-1``.  Adjacency is stored as one integer bitmask per
vertex, which keeps the small-graph workloads this package is built for
(exhaustive sweeps over every labeled graph of order 7) fast in pure Python
while still working for any order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import DisconnectedGraphError, GraphError, OrderTooLargeError

ISOMORPHISM_MAX_ORDER = 10


def iter_bits(mask):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    n : int
        Number of vertices; vertices are ``range(n)``.
    edges : iterable of pairs
        Each pair ``(u, v)`` with ``u != v``.  Duplicates (in either
        orientation) are rejected.
    """

    __slots__ = ("n", "_adj", "_edges", "_hash")

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError(f"negative order {n}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge {(min(u, v), max(u, v))}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = None
        self._hash = None

    @classmethod
    def from_masks(cls, masks):
        """Build from per-vertex neighbor bitmasks (trusted, symmetric, loop-free)."""
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        g._edges = None
        g._hash = None
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def masks(self):
        """Tuple of neighbor bitmasks, one per vertex."""
        return self._adj

    @property
    def edges(self):
        """All edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        if self._edges is None:
            out = []
            for u, mask in enumerate(self._adj):
                mask >>= u + 1
                v = u + 1
                while mask:
                    if mask & 1:
                        out.append((u, v))
                    mask >>= 1
                    v += 1
            self._edges = tuple(out)
        return self._edges

    @property
    def order(self):
        return self.n

    @property
    def size(self):
        return sum(m.bit_count() for m in self._adj) // 2

    @property
    def vertices(self):
        return range(self.n)

    @property
    def all_mask(self):
        return (1 << self.n) - 1

    def neighbors(self, v):
        return list(iter_bits(self._adj[v]))

    def degree(self, v):
        return self._adj[v].bit_count()

    def degrees(self):
        return [m.bit_count() for m in self._adj]

    def has_edge(self, u, v):
        return 0 <= u < self.n and 0 <= v < self.n and bool(self._adj[u] >> v & 1)

    # -- derived graphs --------------------------------------------------

    def remove_edges(self, edges):
        """Return a copy on the same vertex set without ``edges``."""
        adj = list(self._adj)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"edge {(u, v)} not in graph")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph.from_masks(adj)

    def add_edges(self, edges):
        return Graph(self.n, list(self.edges) + [tuple(e) for e in edges])

    def induced(self, vertices):
        """Induced subgraph relabeled densely in ascending vertex order.

        Returns ``(subgraph, old_ids)`` where ``old_ids[i]`` is the vertex of
        ``self`` that became vertex ``i``.
        """
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        sub = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), sub), old

    def delete_vertices(self, vertices):
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def add_vertices(self, k=1):
        return Graph(self.n + k, self.edges)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)!r})"


# -- bitmask kernels ------------------------------------------------------


def reach_mask(adj, start, alive):
    """Bitmask of vertices reachable from ``start`` inside the vertex set ``alive``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def component_masks(adj, alive):
    """Connected components of the subgraph induced by ``alive``, as bitmasks."""
    out = []
    while alive:
        low = alive & -alive
        comp = reach_mask(adj, low.bit_length() - 1, alive)
        out.append(comp)
        alive &= ~comp
    return out


def mask_connected(adj, alive):
    if not alive:
        return False
    low = alive & -alive
    return reach_mask(adj, low.bit_length() - 1, alive) == alive


def mask_biconnected(adj, alive):
    """True iff the subgraph induced by ``alive`` is 2-connected (order >= 3).

    Single iterative lowpoint DFS; returns at the first articulation point.
    """
    if alive.bit_count() < 3:
        return False
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    pending = [0] * n
    root = (alive & -alive).bit_length() - 1
    disc[root] = 0
    pending[root] = adj[root] & alive
    t = 1
    root_children = 0
    stack = [root]
    while stack:
        v = stack[-1]
        r = pending[v]
        if r:
            b = r & -r
            pending[v] = r ^ b
            w = b.bit_length() - 1
            if disc[w] < 0:
                parent[w] = v
                disc[w] = low[w] = t
                t += 1
                if v == root:
                    root_children += 1
                    if root_children > 1:
                        return False
                pending[w] = adj[w] & alive
                stack.append(w)
            elif w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            p = parent[v]
            if p >= 0:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    return False
    return t == alive.bit_count()


def to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_to_set(mask):
    return frozenset(iter_bits(mask))


# -- connectivity ---------------------------------------------------------


def components(g):
    """Vertex sets of the connected components, ordered by least vertex."""
    return [mask_to_set(c) for c in component_masks(g.masks, g.all_mask)]


def is_connected(g):
    return mask_connected(g.masks, g.all_mask)


def require_connected(g):
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph of order {g.n} is not connected")


def odd_component_count(g, s=()):
    """Number of odd-order components of ``g - s``."""
    alive = g.all_mask & ~to_mask(s)
    return sum(c.bit_count() & 1 for c in component_masks(g.masks, alive))


def cut_vertices(g):
    """Vertices whose removal increases the number of components."""
    adj, full = g.masks, g.all_mask
    base = len(component_masks(adj, full))
    return frozenset(
        v for v in range(g.n) if len(component_masks(adj, full & ~(1 << v))) > base
    )


def is_nonseparable(g):
    """Connected and without cut vertices; K1 and K2 qualify."""
    return is_connected(g) and not cut_vertices(g)


def is_biconnected(g):
    """2-connected: order at least 3, connected, no cut vertex."""
    return mask_biconnected(g.masks, g.all_mask)


def is_cycle(g):
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_tree(g):
    return g.n >= 1 and g.size == g.n - 1 and is_connected(g)


def is_spanning_tree_of(tree_edges, g):
    """True iff ``tree_edges`` is the edge set of a spanning tree of ``g``."""
    tree_edges = [tuple(sorted(e)) for e in tree_edges]
    if len(tree_edges) != g.n - 1 or len(set(tree_edges)) != len(tree_edges):
        return False
    if not all(g.has_edge(u, v) for u, v in tree_edges):
        return False
    return is_connected(Graph(g.n, tree_edges))


# -- blocks ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockCutDecomposition:
    """Blocks (maximal nonseparable subgraphs) and cut vertices of a connected graph.

    ``incidence`` maps every cut vertex to the indices of the blocks holding it.
    """

    blocks: list
    block_edges: list
    cut_vertices: frozenset
    incidence: dict = field(default_factory=dict)

    def end_blocks(self):
        """Indices of blocks containing exactly one cut vertex."""
        return [
            i for i, b in enumerate(self.blocks) if len(b & self.cut_vertices) == 1
        ]


def block_cut_decomposition(g):
    """Hopcroft-Tarjan biconnected components (iterative)."""
    require_connected(g)
    n = g.n
    if n == 1:
        return BlockCutDecomposition([frozenset({0})], [()], frozenset(), {})
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    edge_stack = []
    blocks, block_edges = [], []
    counter = 0
    root = 0
    disc[root] = low[root] = counter
    counter += 1
    stack = [(root, -1, iter(nbrs[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(nbrs[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                es = []
                while True:
                    e = edge_stack.pop()
                    es.append(tuple(sorted(e)))
                    if e == (parent, v):
                        break
                blocks.append(frozenset(x for e in es for x in e))
                block_edges.append(tuple(sorted(es)))
    order = sorted(range(len(blocks)), key=lambda i: sorted(blocks[i]))
    blocks = [blocks[i] for i in order]
    block_edges = [block_edges[i] for i in order]
    incidence = {}
    for i, b in enumerate(blocks):
        for v in b:
            incidence.setdefault(v, []).append(i)
    cuts = frozenset(v for v, bs in incidence.items() if len(bs) >= 2)
    incidence = {v: incidence[v] for v in sorted(cuts)}
    return BlockCutDecomposition(blocks, block_edges, cuts, incidence)


# -- isomorphism ----------------------------------------------------------


def is_isomorphic(g, h):
    """Naive backtracking isomorphism test with degree pruning (order <= 10)."""
    if max(g.n, h.n) > ISOMORPHISM_MAX_ORDER:
        raise OrderTooLargeError(
            f"is_isomorphic supports order <= {ISOMORPHISM_MAX_ORDER}"
        )
    if g.n != h.n or g.size != h.size:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    n = g.n
    # map high-degree vertices first: fewer candidates survive early
    order = sorted(range(n), key=lambda v: (-dg[v], v))
    gadj, hadj = g.masks, h.masks
    image = [-1] * n
    used = 0

    def extend(i):
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (gadj[v] >> u & 1) != (hadj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)


# -- exhaustive enumeration ------------------------------------------------


def labeled_graphs(n, connected=False):
    """Every labeled graph on ``n`` vertices (``2**C(n,2)`` of them).

    Edge subsets are visited in increasing bitmask order over the
    lexicographic edge list of ``K_n``.  With ``connected=True`` only
    connected graphs are yielded.
    """
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    lo_bits = m // 2
    lo_pairs, hi_pairs = pairs[:lo_bits], pairs[lo_bits:]

    def table(ps):
        rows = []
        for mask in range(1 << len(ps)):
            adj = [0] * n
            for i, (u, v) in enumerate(ps):
                if mask >> i & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            rows.append(adj)
        return rows

    lo, hi = table(lo_pairs), table(hi_pairs)
    full = (1 << n) - 1
    for h in hi:
        for l in lo:
            adj = [a | b for a, b in zip(l, h)]
            if connected and not mask_connected(adj, full):
                continue
            yield Graph.from_masks(adj)
