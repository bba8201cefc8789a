"""Model file format.

A model file is a JSON object with the keys ``agents``, ``states``,
``actions``, ``available``, ``transitions`` and optionally ``affairs``.
The parser checks structure only; names are resolved by
:func:`respdeg.cgs.validate_model`.
"""
import functools
import itertools
import json
import logging
from typing import Annotated, Dict, List

from pydantic import BaseModel, ConfigDict, Field, StringConstraints, ValidationError

from respdeg import bitset
from respdeg.cgs import Coalition, StateOfAffairs
from respdeg.util import content_hash
from respdeg.exceptions import (ModelParseError, ModelSyntaxError, SchemaError,
                                UnknownQueryName, DuplicateMember)

logger = logging.getLogger(__name__)

Name = Annotated[str, StringConstraints(min_length=1)]

AFFAIR_PREFIX = '@'


class TransitionRecord(BaseModel):
    model_config = ConfigDict(strict=True, extra='forbid', populate_by_name=True, frozen=True)

    source: Name = Field(alias='from')
    profile: Dict[Name, Name]
    to: Name


class ModelDocument(BaseModel):
    model_config = ConfigDict(strict=True, extra='forbid', frozen=True)

    agents: List[Name] = Field(min_length=1)
    states: List[Name] = Field(min_length=1)
    actions: List[Name] = Field(min_length=1)
    available: Dict[Name, Dict[Name, List[Name]]]
    transitions: List[TransitionRecord]
    affairs: Dict[Name, List[Name]] = Field(default_factory=dict)


def _schema_path(loc):
    path = '$'
    for part in loc:
        if isinstance(part, int):
            path += '[{}]'.format(part)
        else:
            path += '.{}'.format(part)
    return path


def parse_model(text):
    """Decode a model document from ``str`` or UTF-8 ``bytes``.

    Raises :class:`ModelParseError` carrying every syntax or schema error found.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode('utf-8')
        except UnicodeDecodeError as e:
            line = text[:e.start].count(b'\n') + 1
            column = e.start - (text[:e.start].rfind(b'\n') + 1) + 1
            raise ModelParseError([ModelSyntaxError(line, column, 'valid UTF-8')])
    if text.startswith('\ufeff'):
        text = text[1:]

    if not text.strip():
        raw = {}
    else:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ModelParseError([ModelSyntaxError(e.lineno, e.colno, e.msg)])
        except ValueError as e:
            raise ModelParseError([ModelSyntaxError(1, 1, str(e))])
        except RecursionError:
            raise ModelParseError([ModelSyntaxError(1, 1, 'nesting within the recursion limit')])

    if not isinstance(raw, dict):
        raise ModelParseError([SchemaError('$', 'expected an object')])

    try:
        document = ModelDocument.model_validate(raw)
    except ValidationError as e:
        errors = [SchemaError(_schema_path(error['loc']), error['msg']) for error in e.errors()]
        raise ModelParseError(errors)
    except RecursionError:
        raise ModelParseError([SchemaError('$', 'nesting too deep')])

    logger.debug('Parsed model document: {} agents, {} states, {} transitions.'.format(
        len(document.agents), len(document.states), len(document.transitions)))
    return document


def canonical_data(model, affairs=None):
    """Plain JSON-ready dict of a validated model; transitions by (from, profile code)."""
    if affairs is None:
        affairs = model.affairs
    available = {}
    transitions = []
    for q, state in enumerate(model.states):
        acts = model.available[q]
        available[state] = {agent: [model.actions[a] for a in acts[i]] for i, agent in enumerate(model.agents)}
        for profile, successor in zip(itertools.product(*acts), model.successors[q]):
            transitions.append({
                'from': state,
                'profile': {agent: model.actions[a] for agent, a in zip(model.agents, profile)},
                'to': model.states[successor],
            })
    named = {}
    for label, affair in affairs.items():
        mask = affair.mask if isinstance(affair, StateOfAffairs) else bitset.from_indices(affair)
        named[label] = model.state_names(mask)
    return {'agents': list(model.agents), 'states': list(model.states), 'actions': list(model.actions),
            'available': available, 'transitions': transitions, 'affairs': named}


def serialize_model(model, affairs=None):
    data = canonical_data(model, affairs)
    return (json.dumps(data, sort_keys=True, indent=4, ensure_ascii=False) + '\n').encode('utf-8')


@functools.lru_cache(maxsize=16)
def model_digest(model):
    """SHA-256 of the compact canonical form; equal for models that serialize identically."""
    data = canonical_data(model)
    return content_hash(json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False).encode('utf-8'))


def _split_names(text):
    text = text.strip()
    if not text:
        return []
    return [name.strip() for name in text.split(',')]


def parse_coalition(text, model):
    """``"a1,a2"`` -> Coalition; the empty string is the empty coalition."""
    members = []
    for name in _split_names(text):
        agent = model.agent_index(name)
        if agent in members:
            raise DuplicateMember(name)
        members.append(agent)
    return Coalition.of(members)


def parse_affairs(text, model):
    """``"q1,q2"`` or ``"@label"`` -> StateOfAffairs."""
    text = text.strip()
    if text.startswith(AFFAIR_PREFIX):
        label = text[len(AFFAIR_PREFIX):]
        if label not in model.affairs:
            raise UnknownQueryName('affair', label)
        return model.affairs[label]
    members = []
    for name in _split_names(text):
        state = model.state_index(name)
        if state in members:
            raise DuplicateMember(name)
        members.append(state)
    return StateOfAffairs.of(members)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
