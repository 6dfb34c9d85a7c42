"""Exhaustive searches and theorem sweeps over small oriented graphs.

Searches walk label bijections in lexicographic order, so every result
is deterministic: the witness of a successful search is the lex-least
antimagic labeling, and candidates_examined is its 1-based rank.  A
failed search reports the number of candidates it actually scanned
(the whole space, or the budget).  Splitting work across processes
never changes any of those numbers; jobs only buys wall-clock time.

The pruning shortcut rests on a necessary condition: two vertices with
the same distance neighborhood get the same weight under every
labeling, so the search can report exhausted-none without scanning.
Such reports carry shortcut=True and candidates_examined=0.

Sweep helpers re-check the characterization theorems mechanically.
Each returns a CharacterizationCheck whose counterexamples tuple must
stay empty; swept = checked + skipped, where skipped counts candidate
distance sets that are invalid for the graph at hand (max beyond its
partial diameter).
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import chain, combinations, islice, permutations, product
from math import factorial
from typing import Iterable, Iterator

from .digraph import (
    THETA_DOUBLE_PRIME,
    THETA_PRIME,
    UNIDIRECTIONAL,
    DistanceMatrix,
    OrientedGraph,
    all_pairs_distances,
    classify_path_orientation,
    is_strongly_connected,
    is_unidirectional_path,
    normalize_distance_set,
    validate_distance_set,
)
from .errors import InvalidParameterError
from .generators import (
    EXPLICIT,
    LinearForestSpec,
    build_cycle,
    build_forest,
    build_path,
    enumerate_trees,
    mpn_spec,
)
from .labeling import (
    check_duality,
    necessary_condition_distinct_neighborhoods,
    neighborhood_table,
)

FOUND = "found"
EXHAUSTED_NONE = "exhausted-none"
ABORTED_BUDGET = "aborted-budget"

MAX_EXHAUSTIVE_ORDER = 10
MAX_MAGIC_ORDER = 8
MAX_GRAPH_HUNT_ORDER = 5
MAX_DUALITY_ORDER = 4
MAX_SURVEY_ORDER = 4

PATH_MIN_ONE = "path-min-1"
PATH_MIN_TWO_PLUS = "path-min-2-plus"
PATH_TOP_DISTANCE = "path-top-distance"
PATH_ZERO_PENULTIMATE = "path-zero-penultimate"
TREE_DEPTH_ONE = "tree-depth-1"
FOREST_MIN_ONE_MULTI = "forest-min-1-multi"
FOREST_MIN_TWO_PLUS = "forest-min-2-plus"
FOREST_COPIES_MIN_ZERO = "forest-copies-min-zero"
FOREST_MIXED_ZERO_ONE = "forest-mixed-zero-one"
FOREST_UNIFORM_ZERO_TOP = "forest-uniform-zero-top"
COMPLEMENT_DUALITY = "complement-duality"
MAGIC_WINDOW = "magic-constant-window"


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one search run; see the module docstring for the counting."""

    outcome: str
    witness: tuple[int, ...] | None
    candidates_examined: int
    elapsed: float
    shortcut: bool = False
    witness_graph: OrientedGraph | None = None
    magic_constant: int | None = None

    @property
    def found(self) -> bool:
        return self.outcome == FOUND


def _scan_range(
    args: tuple[tuple[tuple[int, ...], ...], int, int, int],
) -> tuple[int, tuple[int, ...]] | None:
    """Scan one contiguous block of the bijection sequence (worker body)."""
    nbhd, n, start, stop = args
    source = islice(permutations(range(1, n + 1)), start, stop)
    for rank, labels in enumerate(source, start=start):
        seen = set()
        for hood in nbhd:
            w = 0
            for u in hood:
                w += labels[u]
            if w in seen:
                break
            seen.add(w)
        else:
            return rank, labels
    return None


def _split_range(total: int, jobs: int) -> list[tuple[int, int]]:
    base, extra = divmod(total, jobs)
    chunks = []
    start = 0
    for idx in range(jobs):
        size = base + (1 if idx < extra else 0)
        if size == 0:
            break
        chunks.append((start, start + size))
        start += size
    return chunks


def exhaustive_labeling_search(
    g: OrientedGraph,
    d_set: Iterable[int],
    *,
    budget: int | None = None,
    jobs: int = 1,
    use_pruning: bool = True,
    dm: DistanceMatrix | None = None,
) -> SearchReport:
    """Hunt for the lex-least antimagic labeling by brute force."""
    started = time.perf_counter()
    if dm is None:
        dm = all_pairs_distances(g)
    elif dm.n != g.n:
        raise InvalidParameterError(
            "distance matrix size does not match the graph")
    ds = validate_distance_set(d_set, dm.partial_diameter)
    if budget is not None and (
            not isinstance(budget, int) or isinstance(budget, bool)
            or budget < 1):
        raise InvalidParameterError(
            f"budget must be a positive integer, got {budget!r}")
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise InvalidParameterError(
            f"jobs must be a positive integer, got {jobs!r}")
    n = g.n
    if budget is None and n > MAX_EXHAUSTIVE_ORDER:
        raise InvalidParameterError(
            f"unbudgeted search is capped at order {MAX_EXHAUSTIVE_ORDER}; "
            "pass budget= to scan a prefix of the space")
    if use_pruning and necessary_condition_distinct_neighborhoods(
            g, ds, dm=dm) is not None:
        return SearchReport(EXHAUSTED_NONE, None, 0,
                            time.perf_counter() - started, shortcut=True)
    space = factorial(n)
    total = space if budget is None else min(budget, space)
    nbhd = neighborhood_table(g, ds, dm=dm)
    if jobs == 1:
        hit = _scan_range((nbhd, n, 0, total))
    else:
        hit = None
        chunks = _split_range(total, jobs)
        work = [(nbhd, n, a, b) for a, b in chunks]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for result in pool.map(_scan_range, work):
                if result is not None:
                    hit = result
                    break
    elapsed = time.perf_counter() - started
    if hit is not None:
        rank, labels = hit
        return SearchReport(FOUND, labels, rank + 1, elapsed)
    outcome = ABORTED_BUDGET if total < space else EXHAUSTED_NONE
    return SearchReport(outcome, None, total, elapsed)


def exhaustive_magic_search(
    g: OrientedGraph,
    d_set: Iterable[int],
    *,
    dm: DistanceMatrix | None = None,
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (labels, constant) pairs with every weight equal, in lex order."""
    if g.n > MAX_MAGIC_ORDER:
        raise InvalidParameterError(
            f"the magic scan is capped at order {MAX_MAGIC_ORDER}")
    if dm is None:
        dm = all_pairs_distances(g)
    nbhd = neighborhood_table(g, d_set, dm=dm)
    hits = []
    for labels in permutations(range(1, g.n + 1)):
        lam = None
        for hood in nbhd:
            w = 0
            for u in hood:
                w += labels[u]
            if lam is None:
                lam = w
            elif w != lam:
                lam = -1
                break
        if lam != -1:
            hits.append((labels, lam))
    return tuple(hits)


def enumerate_oriented_graphs(n: int) -> Iterator[OrientedGraph]:
    """Every oriented graph on vertices 0..n-1, in a fixed documented order.

    Vertex pairs are listed lexicographically; each pair independently
    carries no arc, the low-to-high arc, or the high-to-low arc, with
    the last pair varying fastest.  That is 3 ** (n choose 2) graphs.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"order must be a positive integer, got {n!r}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for digits in product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), digit in zip(pairs, digits):
            if digit == 1:
                arcs.append((u, v))
            elif digit == 2:
                arcs.append((v, u))
        yield OrientedGraph(n, arcs)


def find_magic_graph(
    n: int,
    d_set: Iterable[int],
    target: int | None = None,
) -> SearchReport:
    """First strongly connected graph and labeling with all weights equal.

    Scans enumerate_oriented_graphs order by order, keeping only the
    strongly connected graphs whose partial diameter covers the distance
    set, and walks each one's bijections lexicographically.  With target
    set, only that magic constant counts as a hit.  candidates_examined
    totals the labelings tried across qualifying graphs.
    """
    started = time.perf_counter()
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_GRAPH_HUNT_ORDER:
        raise InvalidParameterError(
            f"the graph hunt covers orders 1 to {MAX_GRAPH_HUNT_ORDER}, got {n!r}")
    ds = normalize_distance_set(d_set)
    examined = 0
    for g in enumerate_oriented_graphs(n):
        if not is_strongly_connected(g):
            continue
        dm = all_pairs_distances(g)
        if ds[-1] > dm.partial_diameter:
            continue
        nbhd = neighborhood_table(g, ds, dm=dm)
        for labels in permutations(range(1, n + 1)):
            examined += 1
            lam = None
            for hood in nbhd:
                w = 0
                for u in hood:
                    w += labels[u]
                if lam is None:
                    lam = w
                elif w != lam:
                    lam = -1
                    break
            if lam == -1:
                continue
            if target is None or lam == target:
                return SearchReport(
                    FOUND, labels, examined, time.perf_counter() - started,
                    witness_graph=g, magic_constant=lam)
    return SearchReport(EXHAUSTED_NONE, None, examined,
                        time.perf_counter() - started)


# ---- theorem sweeps ----


@dataclass(frozen=True)
class CharacterizationCheck:
    """Tally of one theorem re-checked mechanically over a swept domain."""

    theorem_tag: str
    swept: int
    checked: int
    skipped: int
    counterexamples: tuple[tuple, ...]

    @property
    def agree(self) -> bool:
        return not self.counterexamples


def _powerset(pool: Iterable[int]) -> Iterator[tuple[int, ...]]:
    items = tuple(pool)
    return chain.from_iterable(
        combinations(items, r) for r in range(len(items) + 1))


def _sweep_path_mask(
    args: tuple[int, int],
) -> tuple[tuple[str, int, int, tuple], ...]:
    """Check all four path families on one oriented path (worker body)."""
    n, mask = args
    g = build_path(n, mask)
    dm = all_pairs_distances(g)
    pd = dm.partial_diameter
    kind = classify_path_orientation(g)
    memo: dict[tuple[int, ...], bool] = {}

    def exists(ds: tuple[int, ...]) -> bool:
        if ds not in memo:
            memo[ds] = exhaustive_labeling_search(g, ds, dm=dm).found
        return memo[ds]

    families = (
        (PATH_MIN_ONE,
         ((1,) + extra for extra in _powerset(range(2, n))),
         lambda ds: kind == UNIDIRECTIONAL),
        (PATH_MIN_TWO_PLUS,
         (ds for ds in _powerset(range(2, n)) if ds),
         lambda ds: False),
        (PATH_TOP_DISTANCE,
         (base + (n - 1,) for base in _powerset(range(n - 1))),
         lambda ds: kind == UNIDIRECTIONAL and ds[0] <= 1),
        (PATH_ZERO_PENULTIMATE,
         ((0,) + mid + (n - 2,) for mid in _powerset(range(1, n - 2))),
         lambda ds: kind in (UNIDIRECTIONAL, THETA_PRIME, THETA_DOUBLE_PRIME)),
    )
    out = []
    for tag, domain, predict in families:
        checked = skipped = 0
        cexs = []
        for ds in domain:
            if ds[-1] > pd:
                skipped += 1
                continue
            predicted = predict(ds)
            found = exists(ds)
            checked += 1
            if found != predicted:
                cexs.append((n, mask, ds, predicted, found))
        out.append((tag, checked, skipped, tuple(cexs)))
    return tuple(out)


def _merge_family_rows(
    results: Iterable[tuple[tuple[str, int, int, tuple], ...]],
) -> tuple[CharacterizationCheck, ...]:
    order: list[str] = []
    acc: dict[str, list] = {}
    for rows in results:
        for tag, checked, skipped, cexs in rows:
            if tag not in acc:
                acc[tag] = [0, 0, []]
                order.append(tag)
            slot = acc[tag]
            slot[0] += checked
            slot[1] += skipped
            slot[2].extend(cexs)
    return tuple(
        CharacterizationCheck(tag, acc[tag][0] + acc[tag][1], acc[tag][0],
                              acc[tag][1], tuple(acc[tag][2]))
        for tag in order)


def check_path_characterizations(
    n_max: int,
    *,
    jobs: int = 1,
) -> tuple[CharacterizationCheck, ...]:
    """Re-check the four path antimagic characterizations up to order n_max.

    For every orientation of every path order 3..n_max and every
    candidate distance set of each family, compare what the theorem
    predicts against a brute-force search.  The families:

    * min distance 1: antimagic exactly for the one-way path
    * min distance 2 or more: never antimagic
    * longest distance present: antimagic exactly when one-way with
      min distance at most 1
    * 0 and the next-to-longest distance present, nothing longer:
      antimagic exactly for the one-way and the two theta orientations
    """
    if not isinstance(n_max, int) or isinstance(n_max, bool) or not 3 <= n_max <= 7:
        raise InvalidParameterError(
            f"path sweeps cover orders 3 to 7, got {n_max!r}")
    work = [(n, mask)
            for n in range(3, n_max + 1)
            for mask in range(2 ** (n - 1))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_path_mask, work))
    else:
        results = [_sweep_path_mask(item) for item in work]
    return _merge_family_rows(results)


def check_tree_characterization(n_max: int) -> CharacterizationCheck:
    """Trees with D = {1} are antimagic exactly when they are one-way paths."""
    if not isinstance(n_max, int) or isinstance(n_max, bool) or not 2 <= n_max <= 6:
        raise InvalidParameterError(
            f"tree sweeps cover orders 2 to 6, got {n_max!r}")
    checked = 0
    cexs = []
    for n in range(2, n_max + 1):
        for g in enumerate_trees(n):
            predicted = is_unidirectional_path(g)
            found = exhaustive_labeling_search(g, (1,)).found
            checked += 1
            if found != predicted:
                cexs.append((n, tuple(sorted(g.arcs)), (1,), predicted, found))
    return CharacterizationCheck(TREE_DEPTH_ONE, checked, checked, 0,
                                 tuple(cexs))


def _partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def check_forest_lemmas(
    max_total_order: int = 6,
) -> tuple[CharacterizationCheck, ...]:
    """Re-check the linear forest lemmas on every shape up to a total order.

    Five families:

    * two or more components with min distance 1: never antimagic,
      whatever the orientation
    * two or more components with min distance 2 or more: never
    * copies of one path, tail-to-head orientation, min distance 0:
      always antimagic
    * any multi-component forest, tail-to-head orientation, D = {0, 1}:
      always antimagic
    * copies of one path, the same orientation in every copy,
      D = {0, order - 1}: antimagic exactly when the copies are one-way
      (any other uniform orientation cannot even pose the question, so
      those rows count as skipped)
    """
    if not isinstance(max_total_order, int) or isinstance(max_total_order, bool) \
            or not 2 <= max_total_order <= 8:
        raise InvalidParameterError(
            f"forest sweeps cover total orders 2 to 8, got {max_total_order!r}")
    fam1: list = [0, 0, []]
    fam2: list = [0, 0, []]
    for total in range(2, max_total_order + 1):
        for parts in _partitions(total):
            if len(parts) < 2:
                continue
            lengths = tuple(sorted(parts))
            edges = total - len(parts)
            top = parts[0]
            for mask in range(2 ** edges):
                bits = tuple((mask >> b) & 1 for b in range(edges))
                spec = LinearForestSpec.from_lengths(lengths, EXPLICIT, bits)
                g = build_forest(spec)
                dm = all_pairs_distances(g)
                pd = dm.partial_diameter
                domains = (
                    (fam1, ((1,) + extra for extra in _powerset(range(2, top)))),
                    (fam2, (ds for ds in _powerset(range(2, top)) if ds)),
                )
                for slot, domain in domains:
                    for ds in domain:
                        if ds[-1] > pd:
                            slot[1] += 1
                            continue
                        found = exhaustive_labeling_search(g, ds, dm=dm).found
                        slot[0] += 1
                        if found:
                            slot[2].append((lengths, bits, ds, False, True))

    fam3: list = [0, 0, []]
    fam5: list = [0, 0, []]
    for n in range(2, max_total_order + 1):
        for m in range(2, max_total_order // n + 1):
            g = build_forest(mpn_spec(m, n))
            dm = all_pairs_distances(g)
            for extra in _powerset(range(1, n)):
                ds = (0,) + extra
                found = exhaustive_labeling_search(g, ds, dm=dm).found
                fam3[0] += 1
                if not found:
                    fam3[2].append(((m, n), "tail-to-head", ds, True, False))
            for copy_mask in range(2 ** (n - 1)):
                copy_bits = tuple((copy_mask >> b) & 1 for b in range(n - 1))
                uniform = build_forest(mpn_spec(m, n, EXPLICIT, copy_bits * m))
                udm = all_pairs_distances(uniform)
                ds = (0, n - 1)
                if udm.partial_diameter < n - 1:
                    fam5[1] += 1
                    continue
                predicted = copy_mask in (0, 2 ** (n - 1) - 1)
                found = exhaustive_labeling_search(uniform, ds, dm=udm).found
                fam5[0] += 1
                if found != predicted:
                    fam5[2].append(((m, n), copy_bits, ds, predicted, found))

    fam4: list = [0, 0, []]
    for total in range(2, max_total_order + 1):
        for parts in _partitions(total):
            if len(parts) < 2:
                continue
            lengths = tuple(sorted(parts))
            spec = LinearForestSpec.from_lengths(lengths)
            g = build_forest(spec)
            dm = all_pairs_distances(g)
            if dm.partial_diameter < 1:
                fam4[1] += 1
                continue
            found = exhaustive_labeling_search(g, (0, 1), dm=dm).found
            fam4[0] += 1
            if not found:
                fam4[2].append((lengths, "tail-to-head", (0, 1), True, False))

    return tuple(
        CharacterizationCheck(tag, slot[0] + slot[1], slot[0], slot[1],
                              tuple(slot[2]))
        for tag, slot in (
            (FOREST_MIN_ONE_MULTI, fam1),
            (FOREST_MIN_TWO_PLUS, fam2),
            (FOREST_COPIES_MIN_ZERO, fam3),
            (FOREST_MIXED_ZERO_ONE, fam4),
            (FOREST_UNIFORM_ZERO_TOP, fam5),
        ))


@dataclass(frozen=True)
class UnionBreakdown:
    """The four-cycle shows two good singleton distance sets whose union fails."""

    singleton_zero: SearchReport
    singleton_two: SearchReport
    union_pruned: SearchReport
    union_full: SearchReport

    @property
    def ok(self) -> bool:
        return (self.singleton_zero.found
                and self.singleton_two.found
                and self.union_pruned.outcome == EXHAUSTED_NONE
                and self.union_pruned.shortcut
                and self.union_full.outcome == EXHAUSTED_NONE
                and not self.union_full.shortcut
                and self.union_full.candidates_examined == 24)


def check_union_counterexample() -> UnionBreakdown:
    """Antimagic for {0} and for {2} does not survive taking {0, 2}."""
    g = build_cycle(4)
    dm = all_pairs_distances(g)
    return UnionBreakdown(
        exhaustive_labeling_search(g, (0,), dm=dm),
        exhaustive_labeling_search(g, (2,), dm=dm),
        exhaustive_labeling_search(g, (0, 2), dm=dm),
        exhaustive_labeling_search(g, (0, 2), dm=dm, use_pruning=False))


def _label_iter(
    n: int, trials: int | None, seed: int,
) -> Iterator[tuple[int, ...]]:
    if trials is None:
        yield from permutations(range(1, n + 1))
        return
    rng = random.Random(seed)
    base = list(range(1, n + 1))
    for _ in range(trials):
        rng.shuffle(base)
        yield tuple(base)


def duality_sweep_graph(
    g: OrientedGraph,
    *,
    trials: int | None = None,
    seed: int = 0,
) -> CharacterizationCheck:
    """Check the complement identity on one strongly connected graph.

    Every proper non-empty distance set with non-empty complement is
    paired with every labeling (all of them, or trials random ones):
    the two weights at each vertex must add up to the label total, the
    antimagic verdicts must agree, and magic constants must be dual.
    """
    if trials is None and g.n > 6:
        raise InvalidParameterError(
            "exhaustive duality checks are capped at order 6; pass trials=")
    dm = all_pairs_distances(g)
    pd = dm.partial_diameter
    checked = 0
    cexs = []
    for ds in _powerset(range(pd + 1)):
        if not ds or len(ds) == pd + 1:
            continue
        for labels in _label_iter(g.n, trials, seed):
            report = check_duality(g, labels, ds, dm=dm)
            checked += 1
            if not report.ok:
                cexs.append((tuple(sorted(g.arcs)), ds, labels))
    return CharacterizationCheck(COMPLEMENT_DUALITY, 1, checked, 0,
                                 tuple(cexs))


def duality_sweep(
    order: int,
    *,
    trials: int | None = None,
    seed: int = 0,
) -> CharacterizationCheck:
    """Complement identity over every strongly connected graph of one order."""
    if not isinstance(order, int) or isinstance(order, bool) \
            or not 2 <= order <= MAX_DUALITY_ORDER:
        raise InvalidParameterError(
            f"duality sweeps cover orders 2 to {MAX_DUALITY_ORDER}, got {order!r}")
    swept = checked = 0
    cexs: list[tuple] = []
    for g in enumerate_oriented_graphs(order):
        if not is_strongly_connected(g):
            continue
        swept += 1
        sub = duality_sweep_graph(g, trials=trials, seed=seed)
        checked += sub.checked
        cexs.extend(sub.counterexamples)
    return CharacterizationCheck(COMPLEMENT_DUALITY, swept, checked, 0,
                                 tuple(cexs))


def magic_bound_sweep(order: int) -> CharacterizationCheck:
    """Every magic constant over strongly connected graphs sits in a window.

    For order n at least 3 and proper non-empty distance sets, the
    constant can never dip below 5 nor rise above n(n + 1)/2 - 5.
    checked counts (graph, distance set) pairs whose magic labelings
    were enumerated.
    """
    if not isinstance(order, int) or isinstance(order, bool) \
            or not 3 <= order <= MAX_GRAPH_HUNT_ORDER:
        raise InvalidParameterError(
            f"the magic window sweep covers orders 3 to "
            f"{MAX_GRAPH_HUNT_ORDER}, got {order!r}")
    low = 5
    high = order * (order + 1) // 2 - 5
    swept = checked = 0
    cexs = []
    for g in enumerate_oriented_graphs(order):
        if not is_strongly_connected(g):
            continue
        swept += 1
        dm = all_pairs_distances(g)
        for ds in _powerset(range(dm.partial_diameter + 1)):
            if not ds or len(ds) == dm.partial_diameter + 1:
                continue
            checked += 1
            for labels, lam in exhaustive_magic_search(g, ds, dm=dm):
                if not low <= lam <= high:
                    cexs.append((tuple(sorted(g.arcs)), ds, labels, lam))
    return CharacterizationCheck(MAGIC_WINDOW, swept, checked, 0, tuple(cexs))


@dataclass(frozen=True)
class NeighborhoodSurvey:
    """How far distinct neighborhoods sit from implying antimagic."""

    order: int
    pairs: int
    necessary_ok: int
    antimagic: int
    gap: int


def survey_neighborhood_sufficiency(order: int) -> NeighborhoodSurvey:
    """Tabulate the necessary condition against actual existence.

    Over every oriented graph of the order and every valid non-empty
    distance set: pairs counts the combinations, necessary_ok those
    with all neighborhoods distinct, antimagic those where a labeling
    exists, and gap those passing the necessary condition yet failing
    the search.  At small orders the gap is zero; nothing here proves
    it stays zero, hence a survey rather than a theorem sweep.
    """
    if not isinstance(order, int) or isinstance(order, bool) \
            or not 1 <= order <= MAX_SURVEY_ORDER:
        raise InvalidParameterError(
            f"the survey covers orders 1 to {MAX_SURVEY_ORDER}, got {order!r}")
    pairs = necessary_ok = antimagic = gap = 0
    for g in enumerate_oriented_graphs(order):
        dm = all_pairs_distances(g)
        for ds in _powerset(range(dm.partial_diameter + 1)):
            if not ds:
                continue
            pairs += 1
            necessary = necessary_condition_distinct_neighborhoods(
                g, ds, dm=dm) is None
            found = exhaustive_labeling_search(g, ds, dm=dm).found
            if necessary:
                necessary_ok += 1
            if found:
                antimagic += 1
            if necessary and not found:
                gap += 1
    return NeighborhoodSurvey(order, pairs, necessary_ok, antimagic, gap)


def render_checks_table(checks: Iterable[CharacterizationCheck]) -> str:
    """Plain text summary table, one row per sweep family."""
    rows = [("family", "swept", "checked", "skipped", "counterexamples",
             "status")]
    for check in checks:
        rows.append((check.theorem_tag, str(check.swept), str(check.checked),
                     str(check.skipped), str(len(check.counterexamples)),
                     "ok" if check.agree else "FAIL"))
    widths = [max(len(row[col]) for row in rows) for col in range(6)]
    lines = [
        "  ".join(cell.ljust(widths[col])
                  for col, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    return "\n".join(lines)
