"""Oriented graph core: arc sets, directed distances, path orientation tools.

An oriented graph is a simple digraph with no loops and at most one arc
between any two vertices (no opposite pairs).  Vertices are the ints
0..n-1 internally; the serialize module translates to 1-based ids for
every external format.

Directed distance d(u, v) is the length of a shortest directed path and
is unreachable (None) when no such path exists.  The partial diameter is
the largest finite distance that occurs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    InvalidDistanceSetError,
    InvalidParameterError,
    NotAPathError,
)

# classification labels for path orientations
UNIDIRECTIONAL = "unidirectional"
THETA_PRIME = "theta-prime"
THETA_DOUBLE_PRIME = "theta-double-prime"
OTHER = "other"


@dataclass(frozen=True)
class OrientedGraph:
    """Immutable oriented graph on vertices 0..n-1."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidParameterError(
                f"vertex count must be a positive int, got {n!r}")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arc_set:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(
                    f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            if (v, u) in arc_set:
                raise InvalidParameterError(
                    f"opposite arcs between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arc_set)

    # ---- adjacency ----

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inc[v].append(u)
        return tuple(tuple(sorted(us)) for us in inc)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_degree(self, v: int) -> int:
        return len(self.successors[v])

    def in_degree(self, v: int) -> int:
        return len(self.predecessors[v])

    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.successors[v])

    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.predecessors[v])


@dataclass(frozen=True)
class DistanceMatrix:
    """All directed distances of a graph; rows[v][u] is d(v, u), None if unreachable."""

    rows: tuple[tuple[int | None, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def distance(self, u: int, v: int) -> int | None:
        return self.rows[u][v]

    @cached_property
    def partial_diameter(self) -> int:
        # diagonal entries are 0, so the max is well defined even with no arcs
        return max(d for row in self.rows for d in row if d is not None)


def all_pairs_distances(g: OrientedGraph) -> DistanceMatrix:
    """BFS from every vertex; unreachable pairs stay None."""
    succ = g.successors
    rows = []
    for s in range(g.n):
        dist: list[int | None] = [None] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            assert dv is not None
            for w in succ[v]:
                if dist[w] is None:
                    dist[w] = dv + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(tuple(rows))


def partial_diameter(g: OrientedGraph) -> int:
    return all_pairs_distances(g).partial_diameter


def is_strongly_connected(g: OrientedGraph) -> bool:
    for adjacency in (g.successors, g.predecessors):
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != g.n:
            return False
    return True


def weak_components(g: OrientedGraph) -> tuple[frozenset[int], ...]:
    """Vertex sets of the weakly connected components, ordered by smallest member."""
    und: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.arcs:
        und[u].append(v)
        und[v].append(u)
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in und[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return tuple(comps)


# ---- path orientation tools ----


def path_vertex_order(g: OrientedGraph) -> tuple[int, ...]:
    """Vertices of an underlying path in traversal order.

    Starts from the endpoint with the smaller index so the result is
    deterministic.  Raises NotAPathError when the underlying undirected
    graph is not a path.
    """
    n = g.n
    if n == 1:
        if g.arcs:
            raise NotAPathError("single vertex with arcs")
        return (0,)
    if g.arc_count != n - 1:
        raise NotAPathError(
            f"a path on {n} vertices has {n - 1} edges, got {g.arc_count}")
    und: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.arcs:
        und[u].append(v)
        und[v].append(u)
    degrees = [len(nb) for nb in und]
    if max(degrees) > 2:
        raise NotAPathError("a vertex has more than two neighbors")
    ends = [v for v in range(n) if degrees[v] == 1]
    if len(ends) != 2:
        raise NotAPathError("underlying graph does not have two endpoints")
    order = [min(ends)]
    prev = -1
    while len(order) < n:
        cur = order[-1]
        step = [w for w in und[cur] if w != prev]
        if not step:
            raise NotAPathError("underlying graph is disconnected")
        prev = cur
        order.append(step[0])
    return tuple(order)


def _direction_bits(g: OrientedGraph, order: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        1 if (order[i], order[i + 1]) in g.arcs else 0
        for i in range(len(order) - 1))


def classify_path_orientation(g: OrientedGraph) -> str:
    """One of unidirectional, theta-prime, theta-double-prime, other.

    Classification is up to path reversal.  Theta-prime reverses only the
    first arc of a one-way path; theta-double-prime reverses all arcs but
    the first.  Both classes are fixed under reversal, so they stay
    distinguishable at every order, including 3.
    """
    order = path_vertex_order(g)
    if g.n == 1:
        return UNIDIRECTIONAL
    bits = _direction_bits(g, order)
    # reading the path from the far end reverses the edge order and flips
    # every direction bit
    mirrored = tuple(1 - b for b in reversed(bits))
    readings = {bits, mirrored}
    k = len(bits)
    if (1,) * k in readings:
        return UNIDIRECTIONAL
    if g.n >= 3 and (0,) + (1,) * (k - 1) in readings:
        return THETA_PRIME
    if g.n >= 3 and (1,) + (0,) * (k - 1) in readings:
        return THETA_DOUBLE_PRIME
    return OTHER


@dataclass(frozen=True)
class OrientationCensus:
    """Sink and source counts plus the kinds of the two path ends."""

    sink_count: int
    source_count: int
    end_kinds: tuple[str, ...]


def orientation_census(g: OrientedGraph) -> OrientationCensus:
    """Census of a path orientation.

    Every end vertex of an oriented path with n >= 2 is either a sink or
    a source.  When both ends are sinks the graph has one more sink than
    sources, when both are sources the opposite, and with one of each the
    counts agree.
    """
    order = path_vertex_order(g)
    sink_count = len(g.sinks())
    source_count = len(g.sources())
    if g.n == 1:
        return OrientationCensus(1, 1, ("isolated",))
    kinds = tuple(
        "sink" if g.out_degree(e) == 0 else "source"
        for e in (order[0], order[-1]))
    return OrientationCensus(sink_count, source_count, kinds)


def is_unidirectional_path(g: OrientedGraph) -> bool:
    """True when the whole graph is a single one-way path.

    Works on any graph, not only underlying paths, so tree and forest
    sweeps can use it as a predicate.
    """
    if g.arc_count != g.n - 1:
        return False
    if any(len(s) > 1 for s in g.successors):
        return False
    if any(len(p) > 1 for p in g.predecessors):
        return False
    return len(weak_components(g)) == 1


# ---- distance sets ----


def normalize_distance_set(values: Iterable[int]) -> tuple[int, ...]:
    """Sorted duplicate-free tuple; must be non-empty with entries >= 0."""
    try:
        ds = sorted({int(d) for d in values})
    except (TypeError, ValueError) as exc:
        raise InvalidDistanceSetError(f"bad distance set: {exc}") from None
    if not ds:
        raise InvalidDistanceSetError("distance set must be non-empty")
    if ds[0] < 0:
        raise InvalidDistanceSetError(
            f"distances must be non-negative, got {ds[0]}")
    return tuple(ds)


def validate_distance_set(
    values: Iterable[int],
    partial_diam: int,
    clamp: bool = False,
) -> tuple[int, ...]:
    """Normalize and bound-check a distance set against a partial diameter.

    With clamp=True entries beyond the partial diameter are dropped
    instead of rejected; the clamped set must stay non-empty.
    """
    ds = normalize_distance_set(values)
    if ds[-1] > partial_diam:
        if not clamp:
            raise InvalidDistanceSetError(
                f"max distance {ds[-1]} exceeds partial diameter "
                f"{partial_diam}")
        ds = tuple(d for d in ds if d <= partial_diam)
        if not ds:
            raise InvalidDistanceSetError(
                "clamping left the distance set empty")
    return ds
