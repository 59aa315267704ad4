"""Largest edge count of an order-2n graph whose spanning trees all have perfect matchings."""
from __future__ import annotations

from .exceptions import GraphError, PreconditionError
from .generators import complete_graph, corona, cycle_graph
from .graph import is_isomorphic
from .kekule import recognize

EXTREMAL_MAX_HALF_ORDER = 10


def f(n):
    """Edge bound: 1, 4, then ``n(n+1)/2`` from ``n = 3`` on."""
    if n < 1:
        raise PreconditionError(f"half order must be >= 1, got {n}")
    if n == 1:
        return 1
    if n == 2:
        return 4
    return n * (n + 1) // 2


def extremal_graphs(n):
    """Published equality cases for the bound ``f(n)``, 1 <= n <= 10."""
    if not 1 <= n <= EXTREMAL_MAX_HALF_ORDER:
        raise PreconditionError(f"extremal_graphs supports 1 <= n <= {EXTREMAL_MAX_HALF_ORDER}")
    if n == 1:
        return [complete_graph(2)]
    if n == 2:
        return [cycle_graph(4)]
    if n == 3:
        return [cycle_graph(6), corona(complete_graph(3))]
    return [corona(complete_graph(n))]


def max_size_search(graphs, n):
    """Maximum size among members in ``graphs`` (all of order ``2n``).

    Returns ``(max_size, extremal)`` where ``extremal`` holds one
    representative per isomorphism class attaining the maximum, in order of
    first appearance.  ``max_size`` is ``None`` if no input is a member.
    """
    best = None
    reps = []
    for g in graphs:
        if g.n != 2 * n:
            raise GraphError(f"expected order {2 * n}, got {g.n}")
        m = g.size
        if best is not None and m < best:
            continue
        if not recognize(g).member:
            continue
        if best is None or m > best:
            best, reps = m, [g]
        elif not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return best, reps


def single_edge_augmentations(g):
    """Yield ``(edge, g + edge)`` for every non-edge of ``g``."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                yield (u, v), g.add_edges([(u, v)])


def matches_published(n, found):
    """True iff ``found`` equals the published extremal list up to isomorphism."""
    expected = extremal_graphs(n)
    if len(found) != len(expected):
        return False
    return all(any(is_isomorphic(a, b) for b in found) for a in expected)
