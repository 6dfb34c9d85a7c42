"""Builders and enumerators for oriented paths, cycles, linear forests, trees.

Path vertices sit at indices 0..n-1 in path order.  A bitmask orientation
assigns one bit per edge: bit i (counting from the least significant bit)
directs the edge between vertices i and i+1, with 1 meaning the arc runs
from i to i+1 and 0 the reverse.

A linear forest spec lists components as (multiplicity, order) pairs with
strictly increasing orders.  build_forest lays vertices out in component
blocks in spec order, copies in order s = 1..m_j inside a block, and
vertices in order i = 1..n_j inside a copy, so the global index of vertex
(j, s, i) is block_offset(j) + (s - 1) * n_j + (i - 1).  Under the phi
orientation every arc runs from vertex i+1 to vertex i of its copy.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .digraph import OrientedGraph
from .errors import InvalidParameterError

FORWARD = "forward"
PHI = "phi"
THETA_PRIME_ORIENTATION = "theta-prime"
THETA_DOUBLE_PRIME_ORIENTATION = "theta-double-prime"
EXPLICIT = "explicit"

MAX_TREE_ORDER = 8

_FOREST_ORIENTATIONS = (
    FORWARD,
    PHI,
    THETA_PRIME_ORIENTATION,
    THETA_DOUBLE_PRIME_ORIENTATION,
    EXPLICIT,
)


def _mask_to_bits(orientation: int | str, width: int) -> tuple[int, ...]:
    if isinstance(orientation, str):
        text = orientation[2:] if orientation.startswith("0b") else orientation
        if len(text) != width or set(text) - {"0", "1"}:
            raise InvalidParameterError(
                f"orientation bitmask {orientation!r} must be {width} binary digits")
        # text reads most significant bit first
        return tuple(int(c) for c in reversed(text))
    if not isinstance(orientation, int) or isinstance(orientation, bool):
        raise InvalidParameterError(f"bad orientation {orientation!r}")
    if not 0 <= orientation < (1 << width) or (width == 0 and orientation != 0):
        raise InvalidParameterError(
            f"orientation bitmask {orientation} out of range for {width} edges")
    return tuple((orientation >> i) & 1 for i in range(width))


def _path_arcs_from_bits(bits: tuple[int, ...], offset: int = 0) -> list[tuple[int, int]]:
    arcs = []
    for i, b in enumerate(bits):
        u, v = offset + i, offset + i + 1
        arcs.append((u, v) if b else (v, u))
    return arcs


def build_path(n: int, orientation: int | str = FORWARD) -> OrientedGraph:
    """Oriented path on n vertices.

    orientation is "forward" (all arcs i -> i+1), "theta-prime",
    "theta-double-prime" (both need n >= 3), or an edge-direction bitmask
    given as an int or a binary string of exactly n-1 digits.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"path order must be >= 1, got {n!r}")
    if orientation == FORWARD:
        bits: tuple[int, ...] = (1,) * (n - 1)
    elif orientation == THETA_PRIME_ORIENTATION:
        if n < 3:
            raise InvalidParameterError("theta-prime needs n >= 3")
        bits = (0,) + (1,) * (n - 2)
    elif orientation == THETA_DOUBLE_PRIME_ORIENTATION:
        if n < 3:
            raise InvalidParameterError("theta-double-prime needs n >= 3")
        bits = (1,) + (0,) * (n - 2)
    else:
        bits = _mask_to_bits(orientation, n - 1)
    return OrientedGraph(n, _path_arcs_from_bits(bits))


def build_cycle(n: int) -> OrientedGraph:
    """One-way cycle 0 -> 1 -> ... -> n-1 -> 0; needs n >= 3 to stay oriented."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise InvalidParameterError(f"cycle order must be >= 3, got {n!r}")
    return OrientedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def enumerate_path_orientations(n: int) -> Iterator[OrientedGraph]:
    """All 2^(n-1) orientations of the n-path, in bitmask order."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"path order must be >= 1, got {n!r}")
    for mask in range(1 << (n - 1)):
        yield build_path(n, mask)


# ---- linear forests ----


@dataclass(frozen=True)
class LinearForestSpec:
    """Disjoint union of path copies: components are (multiplicity, order) pairs.

    Orders must be strictly increasing; merge equal orders into one
    multiplicity first (from_lengths does this).  The theta orientations
    are only meaningful for a single path, so they require exactly one
    copy of one component with order >= 3.  orientation "explicit" takes
    one direction bit per path edge, in layout order, via edge_bits.
    """

    components: tuple[tuple[int, int], ...]
    orientation: str = PHI
    edge_bits: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        comps = tuple((int(m), int(n)) for m, n in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise InvalidParameterError("forest spec needs at least one component")
        for m, n in comps:
            if m < 1 or n < 1:
                raise InvalidParameterError(
                    f"component ({m}, {n}) must have multiplicity and order >= 1")
        orders = [n for _, n in comps]
        if any(a >= b for a, b in zip(orders, orders[1:])):
            raise InvalidParameterError(
                "component orders must be strictly increasing; merge equal "
                "orders into one multiplicity")
        if self.orientation not in _FOREST_ORIENTATIONS:
            raise InvalidParameterError(
                f"unknown forest orientation {self.orientation!r}")
        if self.orientation in (THETA_PRIME_ORIENTATION,
                                THETA_DOUBLE_PRIME_ORIENTATION):
            if len(comps) != 1 or comps[0][0] != 1 or comps[0][1] < 3:
                raise InvalidParameterError(
                    "theta orientations apply only to a single path of order >= 3")
        if self.orientation == EXPLICIT:
            if self.edge_bits is None:
                raise InvalidParameterError("explicit orientation needs edge_bits")
            bits = tuple(int(b) for b in self.edge_bits)
            if len(bits) != self.total_edges or set(bits) - {0, 1}:
                raise InvalidParameterError(
                    f"edge_bits must be {self.total_edges} bits of 0 or 1")
            object.__setattr__(self, "edge_bits", bits)
        elif self.edge_bits is not None:
            raise InvalidParameterError(
                "edge_bits only apply to the explicit orientation")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int], orientation: str = PHI,
                     edge_bits: Iterable[int] | None = None) -> "LinearForestSpec":
        """Build a spec from a plain list of path orders, merging duplicates."""
        counts: dict[int, int] = {}
        for n in lengths:
            counts[int(n)] = counts.get(int(n), 0) + 1
        comps = tuple((m, n) for n, m in sorted(counts.items()))
        return cls(comps, orientation,
                   None if edge_bits is None else tuple(edge_bits))

    @property
    def total_order(self) -> int:
        return sum(m * n for m, n in self.components)

    @property
    def total_edges(self) -> int:
        return sum(m * (n - 1) for m, n in self.components)

    @property
    def copy_count(self) -> int:
        return sum(m for m, _ in self.components)


def mpn_spec(m: int, n: int, orientation: str = PHI,
             edge_bits: Iterable[int] | None = None) -> LinearForestSpec:
    """Spec for m disjoint copies of the n-path."""
    return LinearForestSpec(((m, n),), orientation,
                            None if edge_bits is None else tuple(edge_bits))


def forest_vertex_index(spec: LinearForestSpec, j: int, s: int, i: int) -> int:
    """Global 0-based index of vertex i of copy s of component j (all 1-based)."""
    if not 1 <= j <= len(spec.components):
        raise InvalidParameterError(f"component index {j} out of range")
    m, n = spec.components[j - 1]
    if not 1 <= s <= m or not 1 <= i <= n:
        raise InvalidParameterError(f"vertex (j={j}, s={s}, i={i}) out of range")
    offset = sum(mm * nn for mm, nn in spec.components[:j - 1])
    return offset + (s - 1) * n + (i - 1)


def forest_vertex_coords(spec: LinearForestSpec, index: int) -> tuple[int, int, int]:
    """Inverse of forest_vertex_index: (j, s, i), all 1-based."""
    if not 0 <= index < spec.total_order:
        raise InvalidParameterError(f"vertex index {index} out of range")
    rest = index
    for j, (m, n) in enumerate(spec.components, start=1):
        block = m * n
        if rest < block:
            return j, rest // n + 1, rest % n + 1
        rest -= block
    raise AssertionError("unreachable")


def build_forest(spec: LinearForestSpec) -> OrientedGraph:
    """Oriented linear forest laid out as documented on the module."""
    arcs: list[tuple[int, int]] = []
    if spec.orientation in (THETA_PRIME_ORIENTATION, THETA_DOUBLE_PRIME_ORIENTATION):
        return build_path(spec.components[0][1], spec.orientation)
    offset = 0
    edge_cursor = 0
    for m, n in spec.components:
        for _ in range(m):
            for i in range(n - 1):
                u, v = offset + i, offset + i + 1
                if spec.orientation == FORWARD:
                    arcs.append((u, v))
                elif spec.orientation == PHI:
                    arcs.append((v, u))
                else:  # EXPLICIT
                    assert spec.edge_bits is not None
                    bit = spec.edge_bits[edge_cursor]
                    arcs.append((u, v) if bit else (v, u))
                    edge_cursor += 1
            offset += n
    return OrientedGraph(spec.total_order, arcs)


def parse_forest_spec(text: str, orientation: str = PHI) -> LinearForestSpec:
    """Parse a spec like "2x3,1x5,1x7" (multiplicity x order per component)."""
    lengths: list[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            m_text, n_text = part.lower().split("x")
            m, n = int(m_text), int(n_text)
        except ValueError:
            raise InvalidParameterError(
                f"bad forest component {part!r}, expected MxN") from None
        if m < 1 or n < 1:
            raise InvalidParameterError(f"bad forest component {part!r}")
        lengths.extend([n] * m)
    if not lengths:
        raise InvalidParameterError("empty forest spec")
    return LinearForestSpec.from_lengths(lengths, orientation)


# ---- labeled trees ----


def _prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def enumerate_trees(n: int) -> Iterator[OrientedGraph]:
    """All oriented labeled trees on n vertices.

    Iterates the n^(n-2) Prufer sequences in lexicographic order and, for
    each tree, all 2^(n-1) edge orientations in bitmask order over the
    lexicographically sorted edge list.  Each labeled tree appears exactly
    once.  Guarded to n <= 8; the space explodes past that.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"tree order must be >= 1, got {n!r}")
    if n > MAX_TREE_ORDER:
        raise InvalidParameterError(
            f"tree enumeration is capped at order {MAX_TREE_ORDER}")
    if n == 1:
        yield OrientedGraph(1, [])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = sorted(_prufer_edges(seq, n))
        for mask in range(1 << (n - 1)):
            arcs = [
                (u, v) if (mask >> k) & 1 else (v, u)
                for k, (u, v) in enumerate(edges)
            ]
            yield OrientedGraph(n, arcs)
