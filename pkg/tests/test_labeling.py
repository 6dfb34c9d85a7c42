"""Neighborhoods, weights, verification, and complement duality."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from antimagic import (
    InvalidDistanceSetError,
    InvalidParameterError,
    TheoremPreconditionError,
    all_pairs_distances,
    build_cycle,
    build_forest,
    build_path,
    check_duality,
    check_labeling,
    complement_distance_set,
    d_neighborhood,
    is_d_antimagic,
    is_d_magic,
    mpn_spec,
    necessary_condition_distinct_neighborhoods,
    neighborhood_table,
    weight_profile,
)
from strategies import graphs_with_distance_sets, labelings


# ---- labeling validation ----


def test_check_labeling_accepts_any_order():
    assert check_labeling([3, 1, 2], 3) == (3, 1, 2)


def test_check_labeling_rejects_non_bijections():
    with pytest.raises(InvalidParameterError):
        check_labeling([1, 2], 3)
    with pytest.raises(InvalidParameterError):
        check_labeling([1, 1, 3], 3)
    with pytest.raises(InvalidParameterError):
        check_labeling([0, 1, 2], 3)
    with pytest.raises(InvalidParameterError):
        check_labeling([1, 2, True], 3)


# ---- neighborhoods ----


def test_neighborhood_examples():
    g = build_path(5)
    assert d_neighborhood(g, 0, (0, 2)) == (0, 2)
    assert d_neighborhood(g, 3, (0, 2)) == (3,)
    assert d_neighborhood(g, 4, (1,)) == ()
    star = build_path(3, "theta-prime")
    assert d_neighborhood(star, 1, (1,)) == (0, 2)


def test_neighborhood_clamp():
    g = build_path(3)
    with pytest.raises(InvalidDistanceSetError):
        d_neighborhood(g, 0, (0, 9))
    assert d_neighborhood(g, 0, (0, 9), clamp=True) == (0,)


@given(graphs_with_distance_sets(max_n=6))
def test_neighborhood_table_matches_oracle(case):
    g, ds = case
    table = neighborhood_table(g, ds)
    for v in range(g.n):
        assert list(table[v]) == oracles.neighborhood(g.n, g.arcs, v, ds)


def test_neighborhood_rejects_mismatched_matrix():
    g = build_path(4)
    dm = all_pairs_distances(build_path(3))
    with pytest.raises(InvalidParameterError):
        neighborhood_table(g, (1,), dm=dm)


# ---- weights ----


def test_weight_profile_frozen_examples():
    profile = weight_profile(build_path(4), (4, 3, 2, 1), (0, 1))
    assert profile.weights == (7, 5, 3, 1)
    assert profile.distinct
    profile = weight_profile(build_path(5), (5, 4, 3, 2, 1), (0, 2))
    assert profile.weights == (8, 6, 4, 2, 1)


def test_empty_neighborhood_weighs_zero():
    profile = weight_profile(build_path(3), (1, 2, 3), (2,))
    assert profile.weights == (3, 0, 0)
    assert not profile.distinct


def test_collisions_are_sorted_pairs():
    g = build_path(5, "theta-prime")
    profile = weight_profile(g, (1, 2, 3, 4, 5), (1,))
    assert profile.collisions == ((0, 4), (1, 2))


@given(graphs_with_distance_sets(max_n=5), st.data())
def test_weights_match_oracle(case, data):
    g, ds = case
    labels = data.draw(labelings(g.n))
    profile = weight_profile(g, labels, ds)
    assert list(profile.weights) == oracles.weights(g.n, g.arcs, labels, ds)


def test_is_d_antimagic_and_magic():
    g = build_cycle(4)
    assert is_d_magic(g, (1, 2, 4, 3), (1, 3)) == 5
    assert not is_d_antimagic(g, (1, 2, 4, 3), (1, 3))
    assert is_d_antimagic(g, (1, 2, 3, 4), (1,))
    assert is_d_magic(g, (1, 2, 3, 4), (1,)) is None
    assert is_d_magic(build_cycle(3), (1, 2, 3), (0, 1, 2)) == 6


# ---- complement duality ----


def test_complement_distance_set():
    assert complement_distance_set((0, 2), 3) == (1, 3)
    assert complement_distance_set((1,), 2) == (0, 2)
    with pytest.raises(InvalidDistanceSetError):
        complement_distance_set((0, 4), 3)
    with pytest.raises(InvalidDistanceSetError):
        complement_distance_set((0, 1, 2), 2)


def test_duality_needs_strong_connectivity():
    with pytest.raises(TheoremPreconditionError):
        check_duality(build_path(4), (1, 2, 3, 4), (1,))


def test_duality_on_a_cycle():
    g = build_cycle(4)
    report = check_duality(g, (2, 4, 1, 3), (1,))
    assert report.complement_set == (0, 2, 3)
    assert report.label_total == 10
    assert report.sums_ok
    assert report.flags_agree
    assert report.magic_ok
    assert report.ok


def test_duality_magic_constants_add_up():
    g = build_cycle(4)
    report = check_duality(g, (1, 2, 4, 3), (1, 3))
    assert report.magic_d == 5
    assert report.magic_complement == 5
    assert report.ok


@given(st.sampled_from([3, 4, 5]), st.data())
def test_duality_identity_on_cycles(n, data):
    g = build_cycle(n)
    pd = n - 1
    ds = data.draw(st.sets(st.integers(0, pd), min_size=1, max_size=pd))
    labels = data.draw(labelings(n))
    report = check_duality(g, labels, tuple(sorted(ds)))
    assert report.ok
    total = n * (n + 1) // 2
    assert report.weight_sums == (total,) * n


# ---- necessary condition ----


def test_necessary_condition_finds_equal_neighborhoods():
    assert necessary_condition_distinct_neighborhoods(
        build_cycle(4), (0, 2)) == (0, 2)
    g = build_path(5, "theta-prime")
    assert necessary_condition_distinct_neighborhoods(g, (1,)) == (0, 4)
    assert necessary_condition_distinct_neighborhoods(
        build_path(4), (0, 1)) is None


def test_necessary_condition_on_forests():
    g = build_forest(mpn_spec(2, 3))
    assert necessary_condition_distinct_neighborhoods(g, (1,)) is not None
    assert necessary_condition_distinct_neighborhoods(g, (0, 1)) is None


@given(graphs_with_distance_sets(max_n=5), st.data())
def test_equal_neighborhoods_force_equal_weights(case, data):
    g, ds = case
    pair = necessary_condition_distinct_neighborhoods(g, ds)
    if pair is None:
        return
    labels = data.draw(labelings(g.n))
    profile = weight_profile(g, labels, ds)
    u, v = pair
    assert profile.weights[u] == profile.weights[v]
