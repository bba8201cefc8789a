"""Seeded random models for agreement and property checks."""
import itertools
import logging
import random

from respdeg.cgs import validate_model
from respdeg.parser import ModelDocument, TransitionRecord

logger = logging.getLogger(__name__)


def random_document(seed, agents=2, states=3, actions=2, density=0.5, max_available=None, affair_density=0.3):
    """A random :class:`ModelDocument`; identical arguments give identical documents.

    Every agent gets a non-empty set of at most ``max_available`` actions at
    every state, each action kept with probability ``density``. The affair
    labelled ``bad`` holds each state with probability ``affair_density``.
    """
    rng = random.Random(seed)
    if max_available is None:
        max_available = actions
    agent_names = ['a{}'.format(i + 1) for i in range(agents)]
    state_names = ['q{}'.format(i) for i in range(states)]
    action_names = ['x{}'.format(i) for i in range(actions)]

    available = {}
    for state in state_names:
        row = {}
        for agent in agent_names:
            acts = [a for a in action_names if rng.random() < density]
            if not acts:
                acts = [rng.choice(action_names)]
            if len(acts) > max_available:
                acts = sorted(rng.sample(acts, max_available), key=action_names.index)
            row[agent] = acts
        available[state] = row

    transitions = []
    for state in state_names:
        options = [available[state][agent] for agent in agent_names]
        for profile in itertools.product(*options):
            transitions.append(TransitionRecord(source=state, profile=dict(zip(agent_names, profile)),
                                                to=rng.choice(state_names)))

    bad = [state for state in state_names if rng.random() < affair_density]
    return ModelDocument(agents=agent_names, states=state_names, actions=action_names,
                         available=available, transitions=transitions, affairs={'bad': bad})


def random_model(seed, agents=2, states=3, actions=2, density=0.5, max_available=None, affair_density=0.3):
    document = random_document(seed, agents, states, actions, density, max_available, affair_density)
    model = validate_model(document)
    logger.debug('Generated model from seed {}: {!r}.'.format(seed, model))
    return model

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
