"""Vertex labelings, distance-set weights, and the antimagic/magic verifiers.

A labeling is a bijection from the n vertices onto the labels 1..n,
stored as a tuple indexed by vertex.  The D-neighborhood of v collects
every vertex whose directed distance from v lies in the distance set D,
and the D-weight of v adds up the labels over that neighborhood (an
empty neighborhood weighs 0).  A labeling is D-antimagic when all
weights differ and D-magic when they all agree.

For a strongly connected graph the distance sets D and its complement
D* inside {0..partial diameter} split every row of the distance matrix,
so the two weights of a vertex always add up to the label total
n(n+1)/2.  check_duality packages that identity and its corollaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .digraph import (
    DistanceMatrix,
    OrientedGraph,
    all_pairs_distances,
    is_strongly_connected,
    normalize_distance_set,
    validate_distance_set,
)
from .errors import (
    InvalidDistanceSetError,
    InvalidParameterError,
    TheoremPreconditionError,
)


def check_labeling(labels: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a bijection onto 1..n and return it as a tuple."""
    values = tuple(int(x) for x in labels)
    if len(values) != n or sorted(values) != list(range(1, n + 1)):
        raise InvalidParameterError(
            f"labeling must be a bijection onto 1..{n}, got {labels!r}")
    return values


@dataclass(frozen=True)
class WeightProfile:
    """Per-vertex weights plus every colliding pair, sorted lexicographically."""

    weights: tuple[int, ...]
    collisions: tuple[tuple[int, int], ...]

    @property
    def distinct(self) -> bool:
        return not self.collisions


def _resolve_dm(g: OrientedGraph, dm: DistanceMatrix | None) -> DistanceMatrix:
    if dm is None:
        return all_pairs_distances(g)
    if dm.n != g.n:
        raise InvalidParameterError(
            f"distance matrix is {dm.n}x{dm.n} but the graph has {g.n} vertices")
    return dm


def d_neighborhood(
    g: OrientedGraph,
    v: int,
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
    clamp: bool = False,
) -> tuple[int, ...]:
    """Vertices whose distance from v lies in d_set, ascending."""
    dm = _resolve_dm(g, dm)
    ds = validate_distance_set(d_set, dm.partial_diameter, clamp)
    if not 0 <= v < g.n:
        raise InvalidParameterError(f"vertex {v} out of range")
    wanted = set(ds)
    row = dm.rows[v]
    return tuple(u for u in range(g.n) if row[u] in wanted)


def neighborhood_table(
    g: OrientedGraph,
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
    clamp: bool = False,
) -> tuple[tuple[int, ...], ...]:
    """d_neighborhood for every vertex at once."""
    dm = _resolve_dm(g, dm)
    ds = validate_distance_set(d_set, dm.partial_diameter, clamp)
    wanted = set(ds)
    return tuple(
        tuple(u for u in range(g.n) if row[u] in wanted)
        for row in dm.rows)


def _collisions(weights: Sequence[int]) -> tuple[tuple[int, int], ...]:
    by_weight: dict[int, list[int]] = {}
    for v, w in enumerate(weights):
        by_weight.setdefault(w, []).append(v)
    pairs = []
    for vs in by_weight.values():
        if len(vs) > 1:
            pairs.extend(combinations(vs, 2))
    return tuple(sorted(pairs))


def weight_profile(
    g: OrientedGraph,
    labels: Sequence[int],
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
    clamp: bool = False,
) -> WeightProfile:
    values = check_labeling(labels, g.n)
    table = neighborhood_table(g, d_set, dm=dm, clamp=clamp)
    weights = tuple(sum(values[u] for u in nb) for nb in table)
    return WeightProfile(weights, _collisions(weights))


def is_d_antimagic(
    g: OrientedGraph,
    labels: Sequence[int],
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
    clamp: bool = False,
) -> bool:
    return weight_profile(g, labels, d_set, dm=dm, clamp=clamp).distinct


def is_d_magic(
    g: OrientedGraph,
    labels: Sequence[int],
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
    clamp: bool = False,
) -> int | None:
    """The magic constant when every weight agrees, else None."""
    profile = weight_profile(g, labels, d_set, dm=dm, clamp=clamp)
    first = profile.weights[0]
    if all(w == first for w in profile.weights):
        return first
    return None


def complement_distance_set(
    d_set: Iterable[int], partial_diam: int
) -> tuple[int, ...]:
    """The complement of d_set in {0..partial_diam}.

    d_set must be a proper non-empty subset of that range so both the set
    and its complement remain valid distance sets.
    """
    ds = normalize_distance_set(d_set)
    if ds[-1] > partial_diam:
        raise InvalidDistanceSetError(
            f"max distance {ds[-1]} exceeds partial diameter {partial_diam}")
    comp = tuple(d for d in range(partial_diam + 1) if d not in set(ds))
    if not comp:
        raise InvalidDistanceSetError(
            "distance set covers the whole range, its complement is empty")
    return comp


@dataclass(frozen=True)
class DualityReport:
    """Joint facts about a labeling under a distance set and its complement."""

    d_set: tuple[int, ...]
    complement_set: tuple[int, ...]
    label_total: int
    weight_sums: tuple[int, ...]
    antimagic_d: bool
    antimagic_complement: bool
    magic_d: int | None
    magic_complement: int | None

    @property
    def sums_ok(self) -> bool:
        return all(s == self.label_total for s in self.weight_sums)

    @property
    def flags_agree(self) -> bool:
        return self.antimagic_d == self.antimagic_complement

    @property
    def magic_ok(self) -> bool:
        if (self.magic_d is None) != (self.magic_complement is None):
            return False
        if self.magic_d is None or self.magic_complement is None:
            return True
        return self.magic_d + self.magic_complement == self.label_total

    @property
    def ok(self) -> bool:
        return self.sums_ok and self.flags_agree and self.magic_ok


def check_duality(
    g: OrientedGraph,
    labels: Sequence[int],
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
) -> DualityReport:
    """Weights under d_set and its complement, with the identities they satisfy.

    Needs a strongly connected graph: only then is every distance finite,
    so the two neighborhoods of a vertex partition the whole vertex set
    and the paired weights add up to n(n+1)/2.
    """
    if not is_strongly_connected(g):
        raise TheoremPreconditionError(
            "duality needs a strongly connected graph")
    dm = _resolve_dm(g, dm)
    ds = validate_distance_set(d_set, dm.partial_diameter)
    comp = complement_distance_set(ds, dm.partial_diameter)
    profile_d = weight_profile(g, labels, ds, dm=dm)
    profile_c = weight_profile(g, labels, comp, dm=dm)
    n = g.n
    magic_d = is_d_magic(g, labels, ds, dm=dm)
    magic_c = is_d_magic(g, labels, comp, dm=dm)
    return DualityReport(
        d_set=ds,
        complement_set=comp,
        label_total=n * (n + 1) // 2,
        weight_sums=tuple(
            a + b for a, b in zip(profile_d.weights, profile_c.weights)),
        antimagic_d=profile_d.distinct,
        antimagic_complement=profile_c.distinct,
        magic_d=magic_d,
        magic_complement=magic_c,
    )


def necessary_condition_distinct_neighborhoods(
    g: OrientedGraph,
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
    clamp: bool = False,
) -> tuple[int, int] | None:
    """A vertex pair sharing one D-neighborhood, or None when all differ.

    Two vertices with the same neighborhood get the same weight under
    every labeling, so a witness pair rules out every D-antimagic
    labeling at once.  Scans vertices in ascending order and reports the
    first repeat against its earliest predecessor.
    """
    table = neighborhood_table(g, d_set, dm=dm, clamp=clamp)
    seen: dict[tuple[int, ...], int] = {}
    for v, nb in enumerate(table):
        if nb in seen:
            return (seen[nb], v)
        seen[nb] = v
    return None
