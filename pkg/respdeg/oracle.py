"""Brute-force preclusion and distance checks for small models."""
import logging
from dataclasses import dataclass

from respdeg import config
from respdeg.cgs import joint_actions, completions, outcome
from respdeg.degrees import INFINITE
from respdeg.exceptions import BudgetExceeded
from respdeg.responsibility import PreclusionSemantics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PositionalStrategy:
    """One joint action of the coalition per state (``choices[q]`` is a JointAction)."""
    choices: tuple

    def describe(self, model):
        lines = []
        for q, joint in enumerate(self.choices):
            actions = ', '.join('{}:{}'.format(model.agents[i], model.actions[a]) for i, a in joint.items())
            lines.append('{} -> {}'.format(model.states[q], actions or '-'))
        return lines


def strategy_count(model, coalition):
    count = 1
    for q in range(model.num_states):
        for i in coalition.members:
            count *= len(model.available[q][i])
    return count


def _check_budget(count, budget):
    if budget is None:
        budget = config.ORACLE_BUDGET
    if count > budget:
        raise BudgetExceeded(count)


def _successors(model, state, joint):
    return {outcome(model, state, profile) for profile in completions(model, state, joint)}


def oracle_strategy(model, coalition, state, affairs, semantics=PreclusionSemantics.FUTURE, budget=None):
    """A positional strategy keeping every play from ``state`` out of ``affairs``, or None."""
    semantics = PreclusionSemantics(semantics)
    _check_budget(strategy_count(model, coalition), budget)
    if semantics is PreclusionSemantics.INCLUDE_INITIAL and state in affairs:
        return None

    def search(assigned, pending):
        if not pending:
            return assigned
        q = min(pending)
        rest = pending - {q}
        for joint in joint_actions(model, q, coalition):
            successors = _successors(model, q, joint)
            if any(s in affairs for s in successors):
                continue
            extended = dict(assigned)
            extended[q] = joint
            found = search(extended, rest | {s for s in successors if s not in extended and s != q})
            if found is not None:
                return found
        return None

    assigned = search({}, frozenset([state]))
    if assigned is None:
        return None
    choices = tuple(assigned[q] if q in assigned else joint_actions(model, q, coalition)[0]
                    for q in range(model.num_states))
    return PositionalStrategy(choices)


def oracle_can_preclude(model, coalition, state, affairs, semantics=PreclusionSemantics.FUTURE, budget=None):
    return oracle_strategy(model, coalition, state, affairs, semantics, budget) is not None


def _paths(model, state, length):
    if length == 0:
        yield state
        return
    for profile in model.profiles(state):
        yield from _paths(model, outcome(model, state, profile), length - 1)


def oracle_distance(model, coalition, state, affairs, semantics=PreclusionSemantics.FUTURE, budget=None):
    # a shortest path never repeats a state, so |Q| steps suffice
    if budget is None:
        budget = config.ORACLE_BUDGET
    responsible = {}
    enumerated = 0
    for length in range(model.num_states + 1):
        for end in _paths(model, state, length):
            enumerated += 1
            if enumerated > budget:
                raise BudgetExceeded(enumerated)
            if end not in responsible:
                responsible[end] = oracle_can_preclude(model, coalition, end, affairs, semantics, budget)
            if responsible[end]:
                return length
    logger.debug('Oracle enumerated {} path(s) from `{}` without success.'.format(enumerated, model.states[state]))
    return INFINITE

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
