"""Preclusive power of coalitions.

A coalition C can preclude a state of affairs S at q when it has a joint
strategy such that no play from q ever enters S: from step 1 onwards under
the ``future`` semantics, from step 0 under ``include-initial``. This is a
safety objective, so it is decided with the controllable predecessor and its
greatest fixpoint; positional strategies suffice.
"""
import functools
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy

from respdeg import bitset
from respdeg.cgs import Coalition, StateOfAffairs

logger = logging.getLogger(__name__)


class PreclusionSemantics(str, Enum):
    FUTURE = 'future'
    INCLUDE_INITIAL = 'include-initial'


@dataclass(frozen=True)
class ResponsibleSet:
    """All non-empty coalitions that can preclude ``affairs`` at ``state``.

    Upward closed; ``coalitions`` is ordered by (cardinality, bitset value).
    """
    coalitions: tuple
    state: int
    affairs: StateOfAffairs
    semantics: PreclusionSemantics = PreclusionSemantics.FUTURE

    def __iter__(self):
        return iter(self.coalitions)

    def __len__(self):
        return len(self.coalitions)

    @functools.cached_property
    def masks(self):
        return frozenset(c.mask for c in self.coalitions)

    @functools.cached_property
    def minimal(self):
        return minimal_responsible_coalitions(self.coalitions)

    def __contains__(self, coalition):
        return coalition.mask in self.masks


@functools.lru_cache(maxsize=1024)
def _coalition_masks(model, coalition):
    """Broadcast masks over ``model.table`` for one coalition.

    Returns (free_padding, member_valid, free_axes): padded positions of
    non-members never constrain the outcome; padded positions of members are
    not playable.
    """
    members = set(coalition.members)
    ndim = model.num_agents + 1
    free_padding = numpy.zeros((model.num_states,) + (1,) * model.num_agents, dtype=bool)
    member_valid = numpy.ones_like(free_padding)
    for i, padding in enumerate(model.padding):
        shape = [1] * ndim
        shape[0] = model.num_states
        shape[i + 1] = padding.shape[1]
        padding = padding.reshape(shape)
        if i in members:
            member_valid = member_valid & ~padding
        else:
            free_padding = free_padding | padding
    free_axes = tuple(i + 1 for i in range(model.num_agents) if i not in members)
    return free_padding, member_valid, free_axes


def _cpre(model, coalition, target):
    free_padding, member_valid, free_axes = _coalition_masks(model, coalition)
    good = target[model.table] | free_padding
    if free_axes:
        good = good.all(axis=free_axes, keepdims=True)
    good = good & member_valid
    return good.reshape(model.num_states, -1).any(axis=1)


def _safe_region(model, coalition, affairs):
    region = ~bitset.to_bool_array(affairs.mask, model.num_states)
    iterations = 0
    while True:
        iterations += 1
        shrunk = region & _cpre(model, coalition, region)
        if numpy.array_equal(shrunk, region):
            break
        region = shrunk
    logger.debug('Safe region of {} reached after {} iteration(s).'.format(
        model.describe_coalition(coalition), iterations))
    return region


def cpre(model, coalition, target):
    """States from which ``coalition`` can force the next state into ``target`` (a state bitset)."""
    target = bitset.to_bool_array(target, model.num_states)
    return bitset.from_bool_array(_cpre(model, coalition, target))


def safe_region(model, coalition, affairs):
    """Greatest X inside Q minus S with X contained in cpre(coalition, X), as a state bitset."""
    return bitset.from_bool_array(_safe_region(model, coalition, affairs))


@functools.lru_cache(maxsize=4096)
def _winning_region(model, coalition, affairs, semantics):
    region = _safe_region(model, coalition, affairs)
    if semantics is PreclusionSemantics.FUTURE:
        region = _cpre(model, coalition, region)
    return bitset.from_bool_array(region)


def winning_region(model, coalition, affairs, semantics=PreclusionSemantics.FUTURE):
    """Every state at which ``coalition`` can preclude ``affairs``, as a state bitset.

    Memoized per (model, coalition, affairs, semantics).
    """
    return _winning_region(model, coalition, affairs, PreclusionSemantics(semantics))


def can_preclude(model, coalition, state, affairs, semantics=PreclusionSemantics.FUTURE):
    return bool(winning_region(model, coalition, affairs, semantics) >> state & 1)


def responsible_coalitions(model, state, affairs, semantics=PreclusionSemantics.FUTURE, threads=1):
    """The set W of non-empty coalitions that can preclude ``affairs`` at ``state``.

    Coalitions are visited by increasing cardinality. A coalition containing
    an already responsible one is responsible without a fixpoint check; the
    remaining ones of a level are independent and may be checked concurrently.
    """
    semantics = PreclusionSemantics(semantics)
    responsible = []
    minimal = []
    checked = 0

    def check(mask):
        return can_preclude(model, Coalition(mask), state, affairs, semantics)

    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for size in range(1, model.num_agents + 1):
            level = sorted(bitset.from_indices(c) for c in itertools.combinations(range(model.num_agents), size))
            todo = []
            for mask in level:
                if any(bitset.is_subset(m, mask) for m in minimal):
                    responsible.append(mask)
                else:
                    todo.append(mask)
            results = executor.map(check, todo) if executor else map(check, todo)
            found = [mask for mask, ok in zip(todo, results) if ok]
            checked += len(todo)
            minimal.extend(found)
            responsible.extend(found)
    finally:
        if executor:
            executor.shutdown()

    logger.debug('{} responsible coalition(s) at `{}`; {} fixpoint check(s), {} pruned.'.format(
        len(responsible), model.states[state], checked, len(responsible) - len(minimal)))
    coalitions = tuple(Coalition(mask) for mask in sorted(responsible, key=bitset.sort_key))
    return ResponsibleSet(coalitions, state, affairs, semantics)


def minimal_responsible_coalitions(responsible):
    """The subset-minimal elements of a responsible set."""
    minimal = []
    for coalition in sorted(responsible, key=Coalition.sort_key):
        if not any(m.issubset(coalition) for m in minimal):
            minimal.append(coalition)
    return tuple(minimal)


def upward_closure(coalitions, num_agents):
    """All non-empty coalitions over ``num_agents`` agents containing one of ``coalitions``."""
    closure = [Coalition(mask) for mask in bitset.subsets_by_cardinality(num_agents)
               if any(bitset.is_subset(c.mask, mask) for c in coalitions)]
    return tuple(closure)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
