"""Properties of preclusion and of both degrees over seeded random models."""
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from respdeg import bitset
from respdeg.cgs import Coalition
from respdeg.degrees import INFINITE, sdr, fdr
from respdeg.generator import random_model
from respdeg.responsibility import (PreclusionSemantics, can_preclude, safe_region, responsible_coalitions,
                                    minimal_responsible_coalitions, upward_closure)


@st.composite
def instances(draw):
    """A small random model with one of its states and a preclusion semantics."""
    seed = draw(st.integers(0, 2 ** 32 - 1))
    agents = draw(st.integers(1, 3))
    states = draw(st.integers(1, 4))
    model = random_model(seed, agents=agents, states=states, actions=2, max_available=2)
    state = draw(st.integers(0, states - 1))
    semantics = draw(st.sampled_from(list(PreclusionSemantics)))
    return model, state, model.affairs['bad'], semantics


def coalition_pairs(num_agents):
    masks = bitset.subsets_by_cardinality(num_agents, include_empty=True)
    for small in masks:
        for large in masks:
            if bitset.is_subset(small, large):
                yield Coalition(small), Coalition(large)


class TestPreclusionProperties:

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_monotone_in_coalition(self, instance):
        model, state, bad, semantics = instance
        for small, large in coalition_pairs(model.num_agents):
            if can_preclude(model, small, state, bad, semantics):
                assert can_preclude(model, large, state, bad, semantics)

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_safe_region_avoids_affairs(self, instance):
        model, state, bad, semantics = instance
        for mask in bitset.subsets_by_cardinality(model.num_agents, include_empty=True):
            assert safe_region(model, Coalition(mask), bad) & bad.mask == 0

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_include_initial_rejects_states_in_affairs(self, instance):
        model, state, bad, semantics = instance
        if state in bad:
            assert not any(can_preclude(model, Coalition(mask), state, bad, PreclusionSemantics.INCLUDE_INITIAL)
                           for mask in bitset.subsets_by_cardinality(model.num_agents, include_empty=True))

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_responsible_set_is_upward_closed(self, instance):
        model, state, bad, semantics = instance
        responsible = responsible_coalitions(model, state, bad, semantics)
        assert Coalition(0) not in responsible
        for small, large in coalition_pairs(model.num_agents):
            if small in responsible:
                assert large in responsible


class TestDegreeProperties:

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_monotone_in_query(self, instance):
        model, state, bad, semantics = instance
        responsible = responsible_coalitions(model, state, bad, semantics)
        for small, large in coalition_pairs(model.num_agents):
            low = sdr(model, state, bad, small, semantics, responsible=responsible)
            high = sdr(model, state, bad, large, semantics, responsible=responsible)
            if low.defined:
                assert low.value <= high.value
            assert fdr(model, state, bad, small, semantics).value <= fdr(model, state, bad, large, semantics).value

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_sdr_shape(self, instance):
        model, state, bad, semantics = instance
        responsible = responsible_coalitions(model, state, bad, semantics)
        for mask in bitset.subsets_by_cardinality(model.num_agents, include_empty=True):
            query = Coalition(mask)
            result = sdr(model, state, bad, query, semantics, responsible=responsible)
            assert result.defined == bool(len(responsible))
            if result.defined:
                assert 0 <= result.value <= 1
                assert result.witness in responsible
                assert result.value == 1 - Fraction(len(result.witness - query), len(result.witness))
                assert (result.value == 1) == any(c.issubset(query) for c in responsible)

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_fdr_shape(self, instance):
        model, state, bad, semantics = instance
        for mask in bitset.subsets_by_cardinality(model.num_agents, include_empty=True):
            query = Coalition(mask)
            result = fdr(model, state, bad, query, semantics)
            responsible = can_preclude(model, query, state, bad, semantics)
            assert (result.value == 1) == responsible
            assert (result.distance == 0) == responsible
            if result.distance == INFINITE:
                assert result.value == 0
                assert result.witness is None
            else:
                assert result.value == Fraction(1, result.distance + 1)
                if not responsible:
                    assert 0 < result.value < 1
                    assert len(result.witness) == result.distance
                    assert result.witness.states[0] == state
                    assert result.witness.replay(model) == result.witness.target
                    assert can_preclude(model, query, result.witness.target, bad, semantics)

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_sdr_over_antichain_closure(self, instance):
        model, state, bad, semantics = instance
        responsible = responsible_coalitions(model, state, bad, semantics)
        closure = upward_closure(minimal_responsible_coalitions(responsible), model.num_agents)
        for mask in bitset.subsets_by_cardinality(model.num_agents, include_empty=True):
            query = Coalition(mask)
            assert sdr(model, state, bad, query, semantics, responsible=responsible).value == \
                sdr(model, state, bad, query, semantics, responsible=closure).value
