"""Structural and functional degrees of responsibility, as exact fractions."""
import collections
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from respdeg.cgs import outcome
from respdeg.responsibility import (PreclusionSemantics, ResponsibleSet, responsible_coalitions,
                                    minimal_responsible_coalitions, winning_region)

logger = logging.getLogger(__name__)

INFINITE = math.inf


@dataclass(frozen=True)
class SdrResult:
    value: Fraction = None      # None when no coalition is responsible
    witness: object = None

    @property
    def defined(self):
        return self.value is not None


@dataclass(frozen=True)
class PowerAcquisitionSequence:
    states: tuple
    profiles: tuple

    def __len__(self):
        return len(self.profiles)

    @property
    def target(self):
        return self.states[-1]

    def replay(self, model):
        state = self.states[0]
        for profile in self.profiles:
            state = outcome(model, state, profile)
        return state


@dataclass(frozen=True)
class FdrResult:
    value: Fraction
    distance: object            # int or INFINITE
    witness: PowerAcquisitionSequence = None


def power_difference(responsible, query):
    return len(responsible - query)


def _best_value(minimal, query):
    # W is upward closed: the best member above M is M | query, scoring |query| / |M | query|
    return max(Fraction(len(query), len(m | query)) for m in minimal)


def sdr(model, state, affairs, query, semantics=PreclusionSemantics.FUTURE, responsible=None):
    """Max over responsible R of 1 - |R - query| / |R|.

    ``responsible`` must be upward closed. The witness is the first R in
    (cardinality, bitset) order attaining the max.
    """
    if responsible is None:
        responsible = responsible_coalitions(model, state, affairs, semantics)
    if isinstance(responsible, ResponsibleSet):
        minimal = responsible.minimal
    else:
        minimal = minimal_responsible_coalitions(responsible)
    if not minimal:
        return SdrResult()
    best = _best_value(minimal, query)
    for coalition in responsible:
        if 1 - Fraction(power_difference(coalition, query), len(coalition)) == best:
            return SdrResult(best, coalition)
    raise ValueError('responsible coalitions are not upward closed')


def power_acquisition_distance(model, state, affairs, query, semantics=PreclusionSemantics.FUTURE):
    """Shortest power acquisition length from ``state`` and one witness sequence.

    Successors are expanded in ascending state index, each reached by its
    smallest profile code. (0, None) when ``query`` is already responsible,
    (INFINITE, None) when no such state is reachable.
    """
    target = winning_region(model, query, affairs, semantics)
    parents = {state: None}
    queue = collections.deque([state])
    while queue:
        current = queue.popleft()
        if target >> current & 1:
            return _unwind(model, parents, current)
        for successor, code in model.edges[current]:
            if successor not in parents:
                parents[successor] = (current, code)
                queue.append(successor)
    logger.debug('No state where {} is responsible is reachable from `{}` ({} visited).'.format(
        model.describe_coalition(query), model.states[state], len(parents)))
    return INFINITE, None


def _unwind(model, parents, state):
    states = [state]
    profiles = []
    while parents[state] is not None:
        state, code = parents[state]
        states.append(state)
        profiles.append(model.decode_profile(state, code))
    if not profiles:
        return 0, None
    sequence = PowerAcquisitionSequence(tuple(reversed(states)), tuple(reversed(profiles)))
    return len(sequence), sequence


def fdr(model, state, affairs, query, semantics=PreclusionSemantics.FUTURE):
    distance, witness = power_acquisition_distance(model, state, affairs, query, semantics)
    if distance == INFINITE:
        return FdrResult(Fraction(0), INFINITE, None)
    return FdrResult(Fraction(1, distance + 1), distance, witness)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
