"""Recognize graphs all of whose spanning trees have a perfect matching.

These are exactly the graphs without an anti-Kekule set.  They form the
family built from K2 and even cycles by repeatedly hanging one member off
every vertex of a connected host graph.  :func:`recognize` decides
membership and returns either a replayable construction certificate or a
witness spanning tree with no perfect matching.

Certificate nodes
-----------------
``BaseEdge(u, v)``
    the single edge ``uv``.
``BaseCycle(cycle)``
    an even cycle given by its cyclic vertex sequence.
``Corona(host, host_edges, pairing)``
    a connected host with one pendant leaf per host vertex.
``Glue(attach, pendant, left, right)``
    ``left`` certifies ``G[V1]`` plus the virtual leaf ``pendant`` hung on
    ``attach``; ``right`` certifies ``G[V2]``; ``V1 & V2 == {attach}``.
    Virtual pendant ids start at ``2**30``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import count
from typing import Optional, Union

from .exceptions import PreconditionError, StructureError
from .generators import complete_graph, compose, cycle_graph, pendant_replace  # noqa: F401
from .graph import (
    Graph,
    component_masks,
    cut_vertices,
    is_cycle,
    is_spanning_tree_of,
    iter_bits,
    mask_connected,
    mask_to_set,
    odd_component_count,
    require_connected,
    to_mask,
)
from .matching import has_perfect_matching
from .spanning import (
    DEFAULT_TREE_CAP,
    _cycle_order,
    any_spanning_tree,
    enumerate_spanning_trees,
    lemma23_witness_tree,
    tree_pm_criterion,
)

VIRTUAL_BASE = 1 << 30
FALLBACK_TREE_CAP = 10**6


@dataclass(frozen=True)
class BaseEdge:
    u: int
    v: int


@dataclass(frozen=True)
class BaseCycle:
    cycle: tuple


@dataclass(frozen=True)
class Corona:
    host: tuple
    host_edges: tuple
    pairing: tuple  # (host vertex, leaf) pairs


@dataclass(frozen=True)
class Glue:
    attach: int
    pendant: int
    left: "Certificate"
    right: "Certificate"


Certificate = Union[BaseEdge, BaseCycle, Corona, Glue]


@dataclass(frozen=True)
class Witness:
    """Spanning tree without a perfect matching.

    For even order ``bad_vertex`` is a vertex whose removal leaves at
    least three odd components of the tree.
    """

    tree: tuple
    bad_vertex: Optional[int]
    odd_order_flag: bool


@dataclass(frozen=True)
class Recognition:
    member: bool
    certificate: Optional[Certificate] = None
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.member


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok


# -- witnesses ---------------------------------------------------------------


def _norm(edges):
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def make_witness(g, tree_edges):
    """Wrap a bad spanning tree of ``g``, locating a failing vertex by scan."""
    tree_edges = _norm(tree_edges)
    if g.n % 2:
        return Witness(tree_edges, None, True)
    t = Graph(g.n, tree_edges)
    for v in range(g.n):
        if odd_component_count(t, (v,)) >= 3:
            return Witness(tree_edges, v, False)
    raise StructureError("tree has a perfect matching; it is not a witness")


def check_witness(g, w):
    """True iff ``w`` is a valid witness tree for ``g``."""
    if not is_spanning_tree_of(w.tree, g):
        return False
    t = Graph(g.n, w.tree)
    if tree_pm_criterion(t):
        return False
    if g.n % 2:
        return w.odd_order_flag
    return w.bad_vertex is not None and odd_component_count(t, (w.bad_vertex,)) >= 3


def lift_witness(parent, part_witness, which, v):
    """Turn a witness for one side of a separation into one for ``parent``.

    ``part_witness.tree`` must use ``parent``'s vertex ids.  For
    ``which="right"`` the tree spans ``V2`` (the side without the virtual
    pendant); for ``which="left"`` it spans ``V1`` plus exactly one vertex id
    outside ``range(parent.n)``: the virtual pendant hung on ``v``.
    The other side is completed by its lowest-index spanning tree.
    """
    n = parent.n
    tree = _norm(part_witness.tree)
    verts = {x for e in tree for x in e}
    if v not in verts:
        raise PreconditionError(f"attach vertex {v} not in the part's tree")
    if which == "right":
        if any(not 0 <= x < n for x in verts):
            raise PreconditionError("right-part tree uses vertices outside the parent")
        part = verts
        kept = list(tree)
    elif which == "left":
        virtual = [x for x in verts if not 0 <= x < n]
        if len(virtual) != 1:
            raise PreconditionError("left-part tree must hold exactly one virtual pendant")
        (z,) = virtual
        pend = [e for e in tree if z in e]
        if pend != [(min(v, z), max(v, z))]:
            raise PreconditionError("virtual pendant must be a leaf on the attach vertex")
        part = verts - {z}
        kept = [e for e in tree if z not in e]
    else:
        raise PreconditionError(f"which must be 'left' or 'right', got {which!r}")
    other = [x for x in range(n) if x not in part or x == v]
    sub, old = parent.induced(other)
    rest = [(old[a], old[b]) for a, b in any_spanning_tree(sub).edges]
    lifted = _norm(kept + rest)
    if not is_spanning_tree_of(lifted, parent):
        raise PreconditionError("part tree does not combine into a spanning tree of the parent")
    return make_witness(parent, lifted)


# -- recognition ------------------------------------------------------------


def separating_group(g, v):
    """Components of ``g - v`` to split off at cut vertex ``v``, or ``None``.

    The group is a proper subset of the components with odd total order
    at least 3, chosen as (a) the unique odd component if it has order
    >= 3, else (b) a singleton odd component plus the smallest even one,
    else (c) the three smallest singletons.  Components are ranked by
    (order, sorted vertex list).
    """
    comps = component_masks(g.masks, g.all_mask & ~(1 << v))
    if len(comps) < 2:
        return None
    comps.sort(key=lambda c: (c.bit_count(), sorted(iter_bits(c))))
    odd = [c for c in comps if c.bit_count() % 2]
    even = [c for c in comps if c.bit_count() % 2 == 0]
    if len(odd) == 1 and odd[0].bit_count() >= 3:
        return mask_to_set(odd[0])
    if len(odd) == 1 and odd[0].bit_count() == 1 and even and len(comps) >= 3:
        return mask_to_set(odd[0] | even[0])
    singles = [c for c in comps if c.bit_count() == 1]
    if len(singles) >= 3 and len(comps) > 3:
        return mask_to_set(singles[0] | singles[1] | singles[2])
    return None


def recognize(g):
    """Decide whether every spanning tree of connected ``g`` has a perfect matching.

    Returns a :class:`Recognition` carrying a certificate for members and a
    witness tree for non-members.
    """
    require_connected(g)
    member, cert, tree = _recognize(g, list(range(g.n)), count(VIRTUAL_BASE))
    if member:
        return Recognition(True, cert, None)
    return Recognition(False, None, make_witness(g, tree))


def _recognize(g, label, fresh):
    n = g.n
    if n % 2 or not has_perfect_matching(g):
        return False, None, any_spanning_tree(g).edges
    cuts = cut_vertices(g)
    if not cuts:
        if n == 2:
            return True, BaseEdge(label[0], label[1]), None
        if is_cycle(g):
            return True, BaseCycle(tuple(label[x] for x in _cycle_order(g, 0))), None
        return False, None, lemma23_witness_tree(g).edges
    for v in sorted(cuts):
        group = separating_group(g, v)
        if group is not None:
            break
    else:
        return _recognize_corona(g, label, cuts)

    right_side = group | {v}
    g2, old2 = g.induced(right_side)
    g1, old1 = g.induced(x for x in range(n) if x not in group)
    v1 = old1.index(v)
    g1p = Graph(g1.n + 1, list(g1.edges) + [(v1, g1.n)])
    if not (4 <= g2.n < n and g1p.n < n):
        raise StructureError(f"separation at {v} does not shrink the instance")
    pendant = next(fresh)

    ok2, cert2, tree2 = _recognize(g2, [label[x] for x in old2], fresh)
    if not ok2:
        part = Witness(tuple((old2[a], old2[b]) for a, b in tree2), None, False)
        return False, None, lift_witness(g, part, "right", v).tree
    ok1, cert1, tree1 = _recognize(g1p, [label[x] for x in old1] + [pendant], fresh)
    if not ok1:
        back = old1 + [n]
        part = Witness(tuple((back[a], back[b]) for a, b in tree1), None, False)
        return False, None, lift_witness(g, part, "left", v).tree
    return True, Glue(label[v], pendant, cert1, cert2), None


def _recognize_corona(g, label, cuts):
    """Every cut vertex leaves one leaf and one other component: ``g`` must be a corona."""
    n, adj = g.n, g.masks
    leaves = to_mask(x for x in range(n) if adj[x].bit_count() == 1)
    host = g.all_mask & ~leaves
    pairing = []
    ok = leaves.bit_count() == host.bit_count() >= 2
    if ok:
        for x in iter_bits(host):
            mine = adj[x] & leaves
            if mine.bit_count() != 1:
                ok = False
                break
            pairing.append((x, mine.bit_length() - 1))
    if ok and mask_connected(adj, host):
        host_edges = tuple(
            (label[a], label[b]) for a, b in g.edges if host >> a & 1 and host >> b & 1
        )
        return True, Corona(
            tuple(label[x] for x in iter_bits(host)),
            host_edges,
            tuple((label[x], label[y]) for x, y in pairing),
        ), None

    # a cut vertex v with leaf u next to a non-leaf, non-cut w: u and w
    # can both hang from v as leaves of one spanning tree
    for v in sorted(cuts):
        u = (adj[v] & leaves).bit_length() - 1
        if u < 0:
            continue
        for w in iter_bits(adj[v] & ~leaves):
            if w in cuts:
                continue
            sub, old = g.delete_vertices((u, w))
            if not mask_connected(sub.masks, sub.all_mask):
                continue
            rest = [(old[a], old[b]) for a, b in any_spanning_tree(sub).edges]
            return False, None, rest + [(v, w), (u, v)]

    for tree in enumerate_spanning_trees(g, cap=FALLBACK_TREE_CAP):
        if not tree_pm_criterion(Graph(n, tree)):
            return False, None, tree
    raise StructureError("corona test failed but every spanning tree has a perfect matching")


def recognize_oracle(g, cap=DEFAULT_TREE_CAP):
    """Brute force: check every spanning tree against the odd-component criterion."""
    for tree in enumerate_spanning_trees(g, cap):
        if not tree_pm_criterion(Graph(g.n, tree)):
            return False
    return True


# -- certificates -------------------------------------------------------------


class _Invalid(Exception):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


def _edge(u, v):
    if u == v:
        raise _Invalid("loop")
    return (u, v) if u < v else (v, u)


def _replay(c):
    if isinstance(c, BaseEdge):
        return {c.u, c.v}, {_edge(c.u, c.v)}
    if isinstance(c, BaseCycle):
        cyc = list(c.cycle)
        if len(cyc) < 4:
            raise _Invalid("short_cycle")
        if len(cyc) % 2:
            raise _Invalid("odd_cycle")
        if len(set(cyc)) != len(cyc):
            raise _Invalid("repeated_vertex")
        return set(cyc), {_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    if isinstance(c, Corona):
        host = list(c.host)
        hs = set(host)
        if len(hs) != len(host) or len(hs) < 2:
            raise _Invalid("bad_host")
        edges = set()
        for u, v in c.host_edges:
            e = _edge(u, v)
            if u not in hs or v not in hs or e in edges:
                raise _Invalid("bad_host_edges")
            edges.add(e)
        idx = {x: i for i, x in enumerate(host)}
        hg = Graph(len(host), [(idx[u], idx[v]) for u, v in edges])
        if not mask_connected(hg.masks, hg.all_mask):
            raise _Invalid("host_disconnected")
        keys = [x for x, _ in c.pairing]
        leaves = [y for _, y in c.pairing]
        if sorted(keys) != sorted(host) or len(set(leaves)) != len(leaves) or hs & set(leaves):
            raise _Invalid("bad_pairing")
        for x, y in c.pairing:
            edges.add(_edge(x, y))
        return hs | set(leaves), edges
    if isinstance(c, Glue):
        v1, e1 = _replay(c.left)
        v2, e2 = _replay(c.right)
        a, z = c.attach, c.pendant
        if z < VIRTUAL_BASE:
            raise _Invalid("pendant_not_virtual")
        if z not in v1 or {e for e in e1 if z in e} != {_edge(a, z)}:
            raise _Invalid("pendant_invalid")
        if (v1 - {z}) & v2 != {a}:
            raise _Invalid("overlap")
        return (v1 - {z}) | v2, (e1 - {_edge(a, z)}) | e2
    raise _Invalid("unknown_node")


def verify_certificate(g, c):
    """Replay certificate ``c`` and compare with ``g``.

    Returns a :class:`CertificateCheck` (truthy iff valid) whose ``reason`` is
    ``"ok"`` or a short machine-readable failure code.
    """
    try:
        verts, edges = _replay(c)
    except _Invalid as exc:
        return CertificateCheck(False, exc.reason)
    except RecursionError:
        return CertificateCheck(False, "too_deep")
    if verts != set(range(g.n)):
        return CertificateCheck(False, "vertex_mismatch")
    if edges != set(g.edges):
        return CertificateCheck(False, "edge_mismatch")
    return CertificateCheck(True, "ok")


def certificate_to_dict(c):
    if isinstance(c, BaseEdge):
        return {"kind": "edge", "vertices": [c.u, c.v]}
    if isinstance(c, BaseCycle):
        return {"kind": "cycle", "vertices": list(c.cycle)}
    if isinstance(c, Corona):
        return {
            "kind": "corona",
            "host": list(c.host),
            "host_edges": [list(e) for e in c.host_edges],
            "pairing": [list(p) for p in c.pairing],
        }
    if isinstance(c, Glue):
        return {
            "kind": "glue",
            "attach": c.attach,
            "pendant": c.pendant,
            "left": certificate_to_dict(c.left),
            "right": certificate_to_dict(c.right),
        }
    raise TypeError(f"not a certificate node: {c!r}")


def certificate_from_dict(d):
    kind = d["kind"]
    if kind == "edge":
        u, v = d["vertices"]
        return BaseEdge(u, v)
    if kind == "cycle":
        return BaseCycle(tuple(d["vertices"]))
    if kind == "corona":
        return Corona(
            tuple(d["host"]),
            tuple(tuple(e) for e in d["host_edges"]),
            tuple(tuple(p) for p in d["pairing"]),
        )
    if kind == "glue":
        return Glue(
            d["attach"], d["pendant"],
            certificate_from_dict(d["left"]), certificate_from_dict(d["right"]),
        )
    raise ValueError(f"unknown certificate kind {kind!r}")


def witness_to_dict(w):
    return {
        "tree": [list(e) for e in w.tree],
        "bad_vertex": w.bad_vertex,
        "odd_order": w.odd_order_flag,
    }


# -- samplers -------------------------------------------------------------------


def _relabel(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def _random_connected(p, rng):
    edges = {(min(i, j), max(i, j)) for i in range(1, p) for j in [rng.randrange(i)]}
    density = rng.random()
    for i in range(p):
        for j in range(i + 1, p):
            if rng.random() < density:
                edges.add((i, j))
    return Graph(p, edges)


def _random_parts(total, parts, rng):
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def _sample_member(k, rng):
    if k == 1:
        return complete_graph(2)
    if rng.random() < 0.25:
        return cycle_graph(2 * k)
    p = rng.randint(2, k)
    host = _random_connected(p, rng)
    blocks = []
    for part in _random_parts(k, p, rng):
        f = _sample_member(part, rng)
        blocks.append((f, rng.randrange(f.n)))
    return compose(host, blocks).graph


def sample_member(half_order, seed=None):
    """Pseudorandom member of order ``2 * half_order``, deterministic for a fixed seed.

    Built top-down: either an even cycle or a random connected host with a
    recursively sampled member hung on each host vertex.
    """
    if half_order < 1:
        raise PreconditionError("half_order must be >= 1")
    rng = random.Random(seed)
    return _relabel(_sample_member(half_order, rng), rng)


def _sample_pm_tree(k, rng):
    if k == 1:
        return complete_graph(2)
    a = rng.randint(1, k - 1)
    t1, t2 = _sample_pm_tree(a, rng), _sample_pm_tree(k - a, rng)
    edges = list(t1.edges) + [(u + t1.n, v + t1.n) for u, v in t2.edges]
    edges.append((rng.randrange(t1.n), t1.n + rng.randrange(t2.n)))
    return Graph(t1.n + t2.n, edges)


def sample_pm_tree(half_order, seed=None):
    """Pseudorandom tree of order ``2 * half_order`` with a perfect matching.

    Joins two smaller such trees by one edge, recursively, starting from K2.
    """
    if half_order < 1:
        raise PreconditionError("half_order must be >= 1")
    rng = random.Random(seed)
    return _relabel(_sample_pm_tree(half_order, rng), rng)
