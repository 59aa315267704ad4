"""Exact anti-Kekule numbers by bounded edge-subset search.

An anti-Kekule set of a connected graph is an edge set whose removal keeps
the graph connected but destroys every perfect matching.  Graphs whose
spanning trees all have perfect matchings have none, so
:func:`anti_kekule_number` asks :func:`~akgraph.kekule.recognize` first and
only searches when a set is guaranteed to exist.  Full enumeration is
practical up to roughly 24 edges.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .exceptions import BoundExhausted, GraphError, StructureError
from .graph import Graph, is_connected, mask_connected, require_connected
from .kekule import recognize
from .matching import EdgeClass, classify_edge, has_perfect_matching


class AkKind(str, enum.Enum):
    NUMBER = "number"
    NONE_EXISTS = "none"
    ZERO = "zero"


@dataclass(frozen=True)
class AkResult:
    """Outcome of :func:`anti_kekule_number`.

    ``value`` is ``k`` for ``NUMBER``, ``0`` for ``ZERO`` and ``None`` when no
    anti-Kekule set exists.  ``sets`` lists every minimum set when requested.
    """

    kind: AkKind
    value: Optional[int] = None
    sets: Optional[list] = None

    def as_json_value(self):
        return "none" if self.kind is AkKind.NONE_EXISTS else self.value


def is_anti_kekule_set(g, s):
    """True iff ``g - s`` is connected and has no perfect matching."""
    s = [tuple(e) for e in s]
    for u, v in s:
        if not g.has_edge(u, v):
            raise GraphError(f"{(u, v)} is not an edge of the graph")
    rest = g.remove_edges(s)
    return is_connected(rest) and not has_perfect_matching(rest)


def anti_kekule_number(g, max_k=None, all_min_sets=False):
    """Size of a minimum anti-Kekule set of connected ``g``.

    Search is iterative deepening over ``k = 1 .. max_k`` (default: the
    number of edges).  Removals that would disconnect the residual graph,
    i.e. bridges of it, are never tried.
    """
    require_connected(g)
    if not has_perfect_matching(g):
        return AkResult(AkKind.ZERO, 0, [()] if all_min_sets else None)
    if recognize(g).member:
        return AkResult(AkKind.NONE_EXISTS, None, None)
    m = g.size
    if max_k is None:
        max_k = m
    if not all_min_sets:
        # a fixed double edge that is not a bridge is a one-edge answer
        for e in g.edges:
            if classify_edge(g, e) is EdgeClass.FIXED_DOUBLE:
                rest = g.remove_edges([e])
                if is_connected(rest) and max_k >= 1:
                    return AkResult(AkKind.NUMBER, 1, None)
    for k in range(1, min(max_k, m) + 1):
        found = _sets_of_size(g, k, first_only=not all_min_sets)
        if found:
            return AkResult(AkKind.NUMBER, k, found if all_min_sets else None)
    if max_k >= m:
        raise StructureError("non-member without an anti-Kekule set")
    raise BoundExhausted(max_k)


def _sets_of_size(g, k, first_only):
    edges = g.edges
    m = len(edges)
    adj = list(g.masks)
    full = g.all_mask
    chosen = []
    found = []

    def rec(start):
        if len(chosen) == k:
            if not has_perfect_matching(Graph.from_masks(adj)):
                found.append(tuple(chosen))
                return first_only
            return False
        for i in range(start, m - (k - len(chosen)) + 1):
            u, v = edges[i]
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            stop = False
            if mask_connected(adj, full):
                chosen.append(edges[i])
                stop = rec(i + 1)
                chosen.pop()
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            if stop:
                return True
        return False

    rec(0)
    return found
