import os
import logging

from respdeg import config, util
from respdeg.cgs import validate_model
from respdeg.degrees import sdr as compute_sdr, fdr as compute_fdr
from respdeg.exceptions import ConfigurationError, ModelFileError, QueryError
from respdeg.generator import random_model
from respdeg.oracle import oracle_strategy, oracle_distance
from respdeg.parser import parse_model, serialize_model, model_digest, parse_coalition, parse_affairs
from respdeg.report import build_report, report_view, sequence_view
from respdeg.responsibility import PreclusionSemantics, responsible_coalitions, minimal_responsible_coalitions

logger = logging.getLogger(__name__)


def initialize(semantics=config.DEFAULT_SEMANTICS, precision=config.DEFAULT_PRECISION,
               threads=config.DEFAULT_THREADS, oracle_budget=config.DEFAULT_ORACLE_BUDGET,
               max_agents=config.DEFAULT_MAX_AGENTS, force=False):

    # Preclusion semantics
    try:
        config.SEMANTICS = PreclusionSemantics(semantics)
    except ValueError:
        raise ConfigurationError('invalid semantics `{}` (expected one of: {})'.format(
            semantics, ', '.join(s.value for s in PreclusionSemantics)))

    # Decimal places when rendering degrees
    try:
        config.PRECISION = int(precision)
        if config.PRECISION < 0:
            raise ConfigurationError('invalid precision')
    except (TypeError, ValueError):
        raise ConfigurationError('Please specify a non-negative number of decimal places for precision')

    # Worker threads for per-coalition work
    try:
        config.THREADS = int(threads)
        if config.THREADS < 1:
            raise ConfigurationError('invalid number of threads')
    except (TypeError, ValueError):
        raise ConfigurationError('Please specify a positive number of threads')

    # Oracle strategy/path budget
    try:
        config.ORACLE_BUDGET = int(oracle_budget)
        if config.ORACLE_BUDGET < 1:
            raise ConfigurationError('invalid oracle budget')
    except (TypeError, ValueError):
        raise ConfigurationError('Please specify a positive oracle budget')

    # Report guardrail
    try:
        config.MAX_AGENTS = int(max_agents)
        if config.MAX_AGENTS < 1:
            raise ConfigurationError('invalid agent limit')
    except (TypeError, ValueError):
        raise ConfigurationError('Please specify a positive agent limit for reports')
    config.FORCE = bool(force)


def load_model(path):
    try:
        with open(path, 'rb') as fp:
            data = fp.read()
    except OSError as e:
        raise ModelFileError(['cannot read model file `{}`: {}'.format(path, e.strerror or e)])
    return validate_model(parse_model(data))


def _query(model, state=None, affairs=None, coalition=None):
    resolved = {}
    if state is not None:
        resolved['state'] = model.state_index(state)
    if affairs is not None:
        resolved['affairs'] = parse_affairs(affairs, model)
    if coalition is not None:
        resolved['coalition'] = parse_coalition(coalition, model)
    return resolved


def validate(model):
    cgs = load_model(model)
    return {
        'model': os.path.basename(model),
        'sha256': model_digest(cgs),
        'agents': cgs.num_agents,
        'states': cgs.num_states,
        'actions': cgs.num_actions,
        'transitions': cgs.num_transitions(),
        'affairs': sorted(cgs.affairs),
    }


def responsible(model, state, affairs, minimal_only=False):
    cgs = load_model(model)
    query = _query(cgs, state, affairs)
    result = responsible_coalitions(cgs, query['state'], query['affairs'], config.SEMANTICS, threads=config.THREADS)
    coalitions = minimal_responsible_coalitions(result) if minimal_only else tuple(result)
    return {
        'state': state,
        'affairs': cgs.state_names(query['affairs']),
        'semantics': config.SEMANTICS.value,
        'minimal_only': bool(minimal_only),
        'coalitions': [cgs.describe_coalition(c) for c in coalitions],
    }


def sdr(model, state, affairs, coalition):
    cgs = load_model(model)
    query = _query(cgs, state, affairs, coalition)
    result = compute_sdr(cgs, query['state'], query['affairs'], query['coalition'], config.SEMANTICS)
    return {
        'state': state,
        'affairs': cgs.state_names(query['affairs']),
        'semantics': config.SEMANTICS.value,
        'coalition': cgs.describe_coalition(query['coalition']),
        'sdr': util.degree_view(result.value),
        'text': util.format_degree(result.value),
        'witness': cgs.describe_coalition(result.witness) if result.defined else None,
    }


def fdr(model, state, affairs, coalition):
    cgs = load_model(model)
    query = _query(cgs, state, affairs, coalition)
    result = compute_fdr(cgs, query['state'], query['affairs'], query['coalition'], config.SEMANTICS)
    return {
        'state': state,
        'affairs': cgs.state_names(query['affairs']),
        'semantics': config.SEMANTICS.value,
        'coalition': cgs.describe_coalition(query['coalition']),
        'fdr': util.degree_view(result.value),
        'text': util.format_degree(result.value),
        'distance': util.distance_view(result.distance),
        'witness': sequence_view(cgs, result.witness),
    }


def report(model, state, affairs, include_empty=False, timings=False):
    cgs = load_model(model)
    query = _query(cgs, state, affairs)
    result = build_report(cgs, query['state'], query['affairs'], config.SEMANTICS,
                          model_id=os.path.basename(model), threads=config.THREADS,
                          include_empty=include_empty, timings=timings)
    view = report_view(result)
    return view


def oracle(model, state, affairs, coalition):
    cgs = load_model(model)
    query = _query(cgs, state, affairs, coalition)
    strategy = oracle_strategy(cgs, query['coalition'], query['state'], query['affairs'], config.SEMANTICS)
    distance = oracle_distance(cgs, query['coalition'], query['state'], query['affairs'], config.SEMANTICS)
    return {
        'state': state,
        'affairs': cgs.state_names(query['affairs']),
        'semantics': config.SEMANTICS.value,
        'coalition': cgs.describe_coalition(query['coalition']),
        'can_preclude': strategy is not None,
        'strategy': strategy.describe(cgs) if strategy is not None else None,
        'distance': util.distance_view(distance),
    }


def generate(seed, agents, states, actions, density=1.0, max_available=None):
    for name, value in (('agents', agents), ('states', states), ('actions', actions), ('max-available', max_available)):
        if value is not None and value < 1:
            raise QueryError('--{} must be at least 1 (got {})'.format(name, value))
    if not 0 <= density <= 1:
        raise QueryError('--density must lie between 0 and 1 (got {})'.format(density))
    cgs = random_model(seed, agents, states, actions, density, max_available)
    return serialize_model(cgs)


def canonical_form(model):
    return serialize_model(load_model(model))


API_METHODS = {
    'validate': validate,
    'responsible': responsible,
    'sdr': sdr,
    'fdr': fdr,
    'report': report,
    'oracle': oracle,
    'generate': generate,
    'format': canonical_form,
}


def call(method, args):
    """
        Unified function to call the analysis methods
        Should be used by applications embedding respdeg

        :Example:

        from respdeg import clientapi
        clientapi.initialize(semantics='future', precision=4)
        view = clientapi.call('sdr', {'model': 'e1.json', 'state': 'q0', 'affairs': '@bad', 'coalition': 'a1'})
        print(view['text'])
    """
    if method not in API_METHODS:
        raise QueryError('Invalid method name `{}`'.format(method))
    return API_METHODS[method](**args)


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
