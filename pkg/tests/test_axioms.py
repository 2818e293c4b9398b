"""Axiom and filter-property checks against documented cases."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limattn import (
    ChoiceCorrespondence,
    FilterKind,
    FilterOrder,
    LinearOrder,
    Relation,
    art,
    axiom_alpha,
    corr_axiom,
    is_filter,
    optimal_filter_conditions,
    simulate,
)
from limattn.core import max_elements
from limattn.errors import MissingOrderError
from limattn.fixtures import (
    c4_pi_filter,
    c4_pi_order,
    ground_n,
    remark_gamma,
    remark_gamma_double_prime,
    remark_gamma_prime,
)

from oracles import art_literal, random_choice_function


def _rationalizable(ground, labels):
    order = LinearOrder.from_labels(ground, labels)
    return simulate(FilterOrder(ChoiceCorrespondence.identity(ground), order))


def test_axiom_alpha_rationalizable(ground4):
    assert axiom_alpha(_rationalizable(ground4, ("b", "d", "a", "c")))


def test_axiom_alpha_fixtures(c2, c7):
    assert not axiom_alpha(c7)
    assert not axiom_alpha(c2)


def test_art_rationalizable(ground4):
    assert art(_rationalizable(ground4, ("d", "c", "b", "a")))


def test_art_c2_true_c1_false(c1, c2):
    # The salient class contains c2 but not c1; the temptation axiom
    # must match, by direct evaluation.
    assert art(c2)
    assert not art(c1)


def test_art_matches_literal_quantifier_exhaustive_n3():
    from limattn.census import enumerate_choice_functions

    for c in enumerate_choice_functions(3):
        assert art(c) == art_literal(c)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_art_matches_literal_quantifier_random_n4(seed):
    rng = random.Random(seed)
    c = random_choice_function(ground_n(4), rng)
    assert art(c) == art_literal(c)


def test_corr_axioms_identity(ground3):
    corr = ChoiceCorrespondence.identity(ground3)
    assert corr_axiom(corr, "alpha")
    assert corr_axiom(corr, "gamma")
    assert corr_axiom(corr, "delta")


def test_corr_axioms_partial_order_maxima(ground3):
    # Maxima of a strict partial order satisfy all three axioms.
    rel = Relation.from_label_pairs(ground3, [("c", "b")])
    images = [0] + [max_elements(m, rel) for m in range(1, 8)]
    corr = ChoiceCorrespondence(ground3, tuple(images))
    for which in ("alpha", "gamma", "delta"):
        assert corr_axiom(corr, which)


def test_corr_axioms_remark_double_prime():
    # Direct evaluation of the four-element remark table: contraction
    # and expansion hold, the dominance axiom fails (w alone survives a
    # menu whose submenu keeps w and y together).
    corr = remark_gamma_double_prime()
    assert corr_axiom(corr, "alpha")
    assert corr_axiom(corr, "gamma")
    assert not corr_axiom(corr, "delta")


def test_corr_axiom_unknown_name(ground3):
    with pytest.raises(ValueError):
        corr_axiom(ChoiceCorrespondence.identity(ground3), "beta")


def test_identity_passes_every_filter_kind(ground3):
    corr = ChoiceCorrespondence.identity(ground3)
    order = LinearOrder.from_labels(ground3, ("a", "b", "c"))
    for kind in FilterKind:
        check = is_filter(corr, kind, order)
        assert check.ok, kind


def test_order_required():
    corr = ChoiceCorrespondence.identity(ground_n(3))
    with pytest.raises(MissingOrderError):
        is_filter(corr, FilterKind.SALIENT)


def test_remark_gamma_fails_exactly_b():
    conds = optimal_filter_conditions(remark_gamma())
    assert conds["a"].ok and conds["c"].ok and not conds["b"].ok
    overall = is_filter(remark_gamma(), FilterKind.OPTIMAL_ATTENTION)
    assert not overall.ok and overall.condition == "b"
    g = remark_gamma().ground
    # The witness names the full menu and the dropped alternative x.
    assert overall.witness.menus[0] == g.full_mask
    assert g.labels[overall.witness.elements[1]] == "x"


def test_remark_gamma_prime_fails_exactly_c():
    conds = optimal_filter_conditions(remark_gamma_prime())
    assert conds["a"].ok and conds["b"].ok and not conds["c"].ok
    check = is_filter(remark_gamma_prime(), FilterKind.OPTIMAL_ATTENTION)
    assert not check.ok and check.condition == "c"
    g = remark_gamma_prime().ground
    assert g.labels[check.witness.elements[1]] == "y"


def test_remark_gamma_double_prime_fails_exactly_a():
    conds = optimal_filter_conditions(remark_gamma_double_prime())
    assert not conds["a"].ok and conds["b"].ok and conds["c"].ok
    check = is_filter(remark_gamma_double_prime(), FilterKind.OPTIMAL_ATTENTION)
    assert not check.ok and check.condition == "a"


def test_pi_filter_documented_checks(c4):
    corr = c4_pi_filter()
    order = c4_pi_order()
    assert is_filter(corr, FilterKind.PATH_INDEPENDENT).ok
    comp = is_filter(corr, FilterKind.COMPETITIVE, order)
    assert not comp.ok and comp.condition == "b"
    g = corr.ground
    assert comp.witness.menus[0] == g.mask_of(("w", "x", "y"))
    assert comp.witness.menus[1] == g.mask_of(("w", "y"))
    assert g.labels[comp.witness.elements[0]] == "y"
    assert g.labels[comp.witness.elements[1]] == "w"
    # Path independence implies both the persistence property and the
    # plain attention property.
    assert is_filter(corr, FilterKind.COMPETITION).ok
    assert is_filter(corr, FilterKind.ATTENTION).ok


def test_c3_triangle_filter_not_path_independent(c3):
    # The documented competitive explanation of the competitive-only
    # benchmark is neither path independent nor persistence-satisfying.
    from limattn import gamma_triangle
    from limattn.fixtures import c3_documented_list

    corr = gamma_triangle(c3, c3_documented_list())
    assert not is_filter(corr, FilterKind.PATH_INDEPENDENT).ok
    assert not is_filter(corr, FilterKind.COMPETITION).ok


def test_optimal_implies_attention_exhaustive_n3():
    from oracles import all_correspondences

    for corr in all_correspondences(ground_n(3)):
        if is_filter(corr, FilterKind.OPTIMAL_ATTENTION).ok:
            assert is_filter(corr, FilterKind.ATTENTION).ok


def test_path_independent_implies_competition_and_attention_exhaustive_n3():
    from oracles import all_correspondences

    for corr in all_correspondences(ground_n(3)):
        if is_filter(corr, FilterKind.PATH_INDEPENDENT).ok:
            assert is_filter(corr, FilterKind.COMPETITION).ok
            assert is_filter(corr, FilterKind.ATTENTION).ok


def _random_correspondence(ground, rng):
    from limattn.core import submenus

    images = [0] * (1 << ground.n)
    for i in range(ground.n):
        images[1 << i] = 1 << i
    for mask in range(1, 1 << ground.n):
        if mask.bit_count() >= 2:
            images[mask] = rng.choice(list(submenus(mask)))
    return ChoiceCorrespondence(ground, tuple(images))


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_optimal_implies_attention_random_n4(seed):
    rng = random.Random(seed)
    corr = _random_correspondence(ground_n(4), rng)
    if is_filter(corr, FilterKind.OPTIMAL_ATTENTION).ok:
        assert is_filter(corr, FilterKind.ATTENTION).ok


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_path_independence_implications_random_n4(seed):
    rng = random.Random(seed)
    corr = _random_correspondence(ground_n(4), rng)
    if is_filter(corr, FilterKind.PATH_INDEPENDENT).ok:
        assert is_filter(corr, FilterKind.COMPETITION).ok
        assert is_filter(corr, FilterKind.ATTENTION).ok


def test_art_iff_salience_asymmetric_exhaustive_n3():
    from limattn import RevealedKind, relation_props, reveal
    from limattn.census import enumerate_choice_functions

    for c in enumerate_choice_functions(3):
        asym = relation_props(reveal(c, RevealedKind.SALIENCE)).asymmetric
        assert art(c) == asym


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_art_iff_salience_asymmetric_random_n4(seed):
    from limattn import RevealedKind, relation_props, reveal

    rng = random.Random(seed)
    c = random_choice_function(ground_n(4), rng)
    asym = relation_props(reveal(c, RevealedKind.SALIENCE)).asymmetric
    assert art(c) == asym
