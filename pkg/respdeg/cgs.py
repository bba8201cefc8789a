"""Concurrent game structures.

A profile at state q is encoded in mixed radix: the digit of agent i is the
position of its action inside ``available[q][i]``, agent 0 most significant,
so code order is lexicographic profile order.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy

from respdeg import bitset
from respdeg.exceptions import (ModelValidationError, EmptyAvailableSet, MissingTransition,
                                DuplicateTransition, IncompleteProfile, UnknownName, DuplicateName,
                                UnknownQueryName, UnavailableAction)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coalition:
    mask: int = 0

    @classmethod
    def of(cls, agents):
        return cls(bitset.from_indices(agents))

    @property
    def members(self):
        return bitset.to_indices(self.mask)

    def __len__(self):
        return bitset.popcount(self.mask)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, agent):
        return bool(self.mask >> agent & 1)

    def __or__(self, other):
        return Coalition(self.mask | other.mask)

    def __sub__(self, other):
        return Coalition(self.mask & ~other.mask)

    def issubset(self, other):
        return bitset.is_subset(self.mask, other.mask)

    def sort_key(self):
        return bitset.sort_key(self.mask)


@dataclass(frozen=True)
class StateOfAffairs:
    mask: int = 0

    @classmethod
    def of(cls, states):
        return cls(bitset.from_indices(states))

    def __len__(self):
        return bitset.popcount(self.mask)

    def __contains__(self, state):
        return bool(self.mask >> state & 1)


@dataclass(frozen=True)
class JointAction:
    # choices: one action per member, ascending agent order
    coalition: Coalition
    choices: tuple = ()

    def items(self):
        return zip(self.coalition.members, self.choices)


class Cgs:

    def __init__(self, agents, states, actions, available, successors, affairs=None):
        self.agents = tuple(agents)
        self.states = tuple(states)
        self.actions = tuple(actions)
        # available[q][i]: ascending action indices of agent i at state q
        self.available = tuple(tuple(tuple(acts) for acts in row) for row in available)
        # successors[q][code]: successor of the profile with that code at state q
        self.successors = tuple(tuple(row) for row in successors)
        self.affairs = dict(sorted((affairs or {}).items()))

        self._agent_index = {name: i for i, name in enumerate(self.agents)}
        self._state_index = {name: i for i, name in enumerate(self.states)}
        self._action_index = {name: i for i, name in enumerate(self.actions)}

        self.radices = tuple(tuple(len(acts) for acts in row) for row in self.available)
        self.weights = tuple(_place_values(radices) for radices in self.radices)
        self._positions = tuple(tuple({action: pos for pos, action in enumerate(acts)} for acts in row)
                                for row in self.available)

        self.edges = tuple(self._build_edges(q) for q in range(self.num_states))
        self.table, self.padding = self._build_table()

        self._key = (self.agents, self.states, self.actions, self.available, self.successors,
                     tuple((label, affair.mask) for label, affair in self.affairs.items()))
        self._hash = hash(self._key)

    def __eq__(self, other):
        if not isinstance(other, Cgs):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return '<Cgs agents={} states={} actions={}>'.format(self.num_agents, self.num_states, self.num_actions)

    @property
    def num_agents(self):
        return len(self.agents)

    @property
    def num_states(self):
        return len(self.states)

    @property
    def num_actions(self):
        return len(self.actions)

    @property
    def grand_coalition(self):
        return Coalition(bitset.full(self.num_agents))

    def num_transitions(self):
        return sum(len(row) for row in self.successors)

    # Names

    def agent_index(self, name):
        try:
            return self._agent_index[name]
        except KeyError:
            raise UnknownQueryName('agent', name)

    def state_index(self, name):
        try:
            return self._state_index[name]
        except KeyError:
            raise UnknownQueryName('state', name)

    def coalition_names(self, coalition):
        return [self.agents[i] for i in coalition.members]

    def describe_coalition(self, coalition):
        return '{' + ','.join(self.coalition_names(coalition)) + '}'

    def state_names(self, stateset):
        if isinstance(stateset, StateOfAffairs):
            stateset = stateset.mask
        return [self.states[q] for q in bitset.to_indices(stateset)]

    def profile_names(self, profile):
        return tuple(self.actions[a] for a in profile)

    def describe_profile(self, profile):
        return '(' + ','.join(self.profile_names(profile)) + ')'

    # Profiles

    def profile_code(self, state, profile):
        positions = self._positions[state]
        return sum(positions[i][action] * weight for i, (action, weight) in enumerate(zip(profile, self.weights[state])))

    def decode_profile(self, state, code):
        profile = []
        for acts, weight in zip(self.available[state], self.weights[state]):
            pos, code = divmod(code, weight)
            profile.append(acts[pos])
        return tuple(profile)

    def profiles(self, state):
        return itertools.product(*self.available[state])

    def _build_edges(self, state):
        # successor -> smallest profile code reaching it
        edges = {}
        for code, successor in enumerate(self.successors[state]):
            edges.setdefault(successor, code)
        return tuple(sorted(edges.items()))

    def _build_table(self):
        """Pad every state's transition table to a common shape.

        ``table[q, p_0, ..., p_{k-1}]`` is the successor when agent i plays its
        ``p_i``-th available action; ``padding[i][q, p]`` marks positions beyond
        the available actions of agent i at q.
        """
        shape = tuple(max(radices[i] for radices in self.radices) for i in range(self.num_agents))
        table = numpy.zeros((self.num_states,) + shape, dtype=numpy.int32)
        padding = []
        for i, width in enumerate(shape):
            positions = numpy.arange(width)
            limits = numpy.array([radices[i] for radices in self.radices])
            padding.append(positions[None, :] >= limits[:, None])
        for q, radices in enumerate(self.radices):
            block = numpy.array(self.successors[q], dtype=numpy.int32).reshape(radices)
            table[(q,) + tuple(slice(0, r) for r in radices)] = block
        return table, tuple(padding)


def _place_values(radices):
    weights = []
    weight = 1
    for radix in reversed(radices):
        weights.append(weight)
        weight *= radix
    return tuple(reversed(weights))


def _unique_names(kind, names, errors):
    index = {}
    for name in names:
        if name in index:
            errors.append(DuplicateName(kind, name))
        else:
            index[name] = len(index)
    return index


def validate_model(document):
    """Build the :class:`Cgs`; every violation is raised together in one ModelValidationError."""
    errors = []
    agent_index = _unique_names('agent', document.agents, errors)
    state_index = _unique_names('state', document.states, errors)
    action_index = _unique_names('action', document.actions, errors)
    agents = list(agent_index)
    states = list(state_index)
    actions = list(action_index)

    # d(q, i)
    for state_name, row in document.available.items():
        if state_name not in state_index:
            errors.append(UnknownName('state', state_name))
        for agent_name, action_names in row.items():
            if agent_name not in agent_index:
                errors.append(UnknownName('agent', agent_name))
            seen = set()
            for action_name in action_names:
                if action_name not in action_index:
                    errors.append(UnknownName('action', action_name))
                elif action_name in seen:
                    errors.append(DuplicateName('available action', action_name))
                seen.add(action_name)

    available = []
    for state_name in states:
        row = []
        for agent_name in agents:
            names = document.available.get(state_name, {}).get(agent_name, [])
            acts = sorted({action_index[name] for name in names if name in action_index})
            if not acts:
                errors.append(EmptyAvailableSet(state_name, agent_name))
            row.append(tuple(acts))
        available.append(tuple(row))

    radices = [tuple(len(acts) for acts in row) for row in available]
    weights = [_place_values(r) for r in radices]
    table = [dict() for _ in states]

    # o(q, profile)
    for record in document.transitions:
        source, target = record.source, record.to
        ok = True
        for kind, name, index in (('state', source, state_index), ('state', target, state_index)):
            if name not in index:
                errors.append(UnknownName(kind, name))
                ok = False
        for agent_name, action_name in record.profile.items():
            if agent_name not in agent_index:
                errors.append(UnknownName('agent', agent_name))
                ok = False
            if action_name not in action_index:
                errors.append(UnknownName('action', action_name))
                ok = False
        if not ok:
            continue
        if set(record.profile) != set(agents):
            errors.append(IncompleteProfile(source, record.profile))
            continue
        q = state_index[source]
        code = 0
        for i, agent_name in enumerate(agents):
            action = action_index[record.profile[agent_name]]
            if action not in available[q][i]:
                errors.append(UnavailableAction(agent_name, record.profile[agent_name], source))
                ok = False
                break
            code += available[q][i].index(action) * weights[q][i]
        if not ok:
            continue
        if code in table[q]:
            errors.append(DuplicateTransition(source, [record.profile[a] for a in agents]))
            continue
        table[q][code] = state_index[target]

    successors = []
    for q, state_name in enumerate(states):
        if not all(available[q]):
            successors.append(())
            continue
        row = []
        for code, profile in enumerate(itertools.product(*available[q])):
            if code not in table[q]:
                errors.append(MissingTransition(state_name, [actions[a] for a in profile]))
                row.append(None)
            else:
                row.append(table[q][code])
        successors.append(tuple(row))

    affairs = {}
    for label, state_names in document.affairs.items():
        members = []
        for name in state_names:
            if name not in state_index:
                errors.append(UnknownName('state', name))
            else:
                members.append(state_index[name])
        affairs[label] = StateOfAffairs.of(members)

    if errors:
        logger.debug('Model rejected with {} diagnostic(s).'.format(len(errors)))
        raise ModelValidationError(errors)

    model = Cgs(agents, states, actions, available, successors, affairs)
    logger.debug('Validated model with {} agents, {} states, {} transitions.'.format(
        model.num_agents, model.num_states, model.num_transitions()))
    return model


def _resolve_profile(model, state, profile):
    if isinstance(profile, dict):
        resolved = []
        for agent_name in model.agents:
            action_name = profile.get(agent_name)
            if action_name not in model._action_index:
                raise UnavailableAction(agent_name, action_name, model.states[state])
            resolved.append(model._action_index[action_name])
        return tuple(resolved)
    return tuple(profile)


def outcome(model, state, profile):
    """o(q, profile); ``profile`` is a tuple of action indices or a mapping agent name -> action name."""
    profile = _resolve_profile(model, state, profile)
    if len(profile) != model.num_agents:
        raise ValueError('profile must assign one action to each of the {} agents'.format(model.num_agents))
    for i, action in enumerate(profile):
        if action not in model._positions[state][i]:
            action_name = model.actions[action] if 0 <= action < model.num_actions else str(action)
            raise UnavailableAction(model.agents[i], action_name, model.states[state])
    return model.successors[state][model.profile_code(state, profile)]


def joint_actions(model, state, coalition):
    members = coalition.members
    choices = itertools.product(*(model.available[state][i] for i in members))
    return tuple(JointAction(coalition, tuple(choice)) for choice in choices)


def completions(model, state, joint):
    fixed = dict(joint.items())
    options = [(fixed[i],) if i in fixed else model.available[state][i] for i in range(model.num_agents)]
    return tuple(itertools.product(*options))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
