#! /usr/bin/env python3

import sys
import argparse
import logging

from respdeg import log
logger = logging.getLogger(__name__)

from respdeg import APP_VERSION, config, util, console, clientapi
from respdeg.exceptions import ModelError, QueryError, ConfigurationError, BudgetExceeded
from respdeg.report import report_csv
from respdeg.setup import generate_config_files

APP_NAME = config.APP_NAME

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_USAGE = 2
EXIT_MODEL = 3

CONFIG_ARGS = [
    [('-v', '--verbose'), {'dest': 'verbose', 'action': 'store_true', 'default': False, 'help': 'sets log level to DEBUG instead of WARNING'}],
    [('--log-file',), {'default': None, 'help': 'also log to the specified file'}],

    [('--semantics',), {'choices': [config.SEMANTICS_FUTURE, config.SEMANTICS_INCLUDE_INITIAL], 'default': config.DEFAULT_SEMANTICS, 'help': 'whether the initial state counts when precluding (default: {})'.format(config.DEFAULT_SEMANTICS)}],
    [('--format',), {'choices': list(config.FORMATS), 'default': config.DEFAULT_FORMAT, 'help': 'output format (default: {})'.format(config.DEFAULT_FORMAT)}],
    [('--precision',), {'type': int, 'default': config.DEFAULT_PRECISION, 'help': 'decimal places when rendering degrees (default: {})'.format(config.DEFAULT_PRECISION)}],
    [('--threads',), {'type': int, 'default': config.DEFAULT_THREADS, 'help': 'worker threads for per-coalition work (default: {})'.format(config.DEFAULT_THREADS)}],
    [('--max-agents',), {'type': int, 'default': config.DEFAULT_MAX_AGENTS, 'help': 'largest number of agents a report accepts without --force (default: {})'.format(config.DEFAULT_MAX_AGENTS)}],
    [('--oracle-budget',), {'type': int, 'default': config.DEFAULT_ORACLE_BUDGET, 'help': 'largest number of strategies or paths the oracle enumerates (default: {})'.format(config.DEFAULT_ORACLE_BUDGET)}],
    [('--strict',), {'action': 'store_true', 'default': False, 'help': 'exit with status 1 when the result is undefined or empty'}],
]

VISIBLE_ACTIONS = ['validate', 'responsible', 'sdr', 'fdr', 'report', 'generate', 'format']


def build_parser(argv=None):
    # Options shared by every subcommand, with defaults from the config file.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config-file', help='the location of the configuration file')
    config_file = common.parse_known_args(argv)[0].config_file
    util.add_config_arguments(common, CONFIG_ARGS, config_file)

    parser = argparse.ArgumentParser(prog=APP_NAME, description='Degrees of responsibility of coalitions in concurrent game structures')
    parser.add_argument('-V', '--version', action='version', version='{} v{}'.format(APP_NAME, APP_VERSION))

    subparsers = parser.add_subparsers(dest='action', metavar='{' + ','.join(VISIBLE_ACTIONS) + '}', help='the action to be taken')

    parser_validate = subparsers.add_parser('validate', parents=[common], help='check a model file')
    parser_validate.add_argument('--model', required=True, help='the model file')

    def add_query_arguments(subparser, coalition=False):
        subparser.add_argument('--model', required=True, help='the model file')
        subparser.add_argument('--state', required=True, help='the state at which responsibility is assessed')
        subparser.add_argument('--affairs', required=True, help='the state of affairs: comma-separated state names, or @label')
        if coalition:
            subparser.add_argument('--coalition', required=True, help='comma-separated agent names ("" for the empty coalition)')

    parser_responsible = subparsers.add_parser('responsible', parents=[common], help='list the coalitions that can preclude the state of affairs')
    add_query_arguments(parser_responsible)
    parser_responsible.add_argument('--minimal-only', action='store_true', default=False, help='list only the minimal responsible coalitions')

    parser_sdr = subparsers.add_parser('sdr', parents=[common], help='structural degree of responsibility of a coalition')
    add_query_arguments(parser_sdr, coalition=True)

    parser_fdr = subparsers.add_parser('fdr', parents=[common], help='functional degree of responsibility of a coalition')
    add_query_arguments(parser_fdr, coalition=True)

    parser_report = subparsers.add_parser('report', parents=[common], help='verdicts and degrees of every coalition')
    add_query_arguments(parser_report)
    parser_report.add_argument('--include-empty', action='store_true', default=False, help='add a row for the empty coalition')
    parser_report.add_argument('--timings', action='store_true', default=False, help='include elapsed times in the report')
    parser_report.add_argument('--force', action='store_true', default=False, help='accept models with more agents than --max-agents')

    parser_oracle = subparsers.add_parser('oracle', parents=[common])
    add_query_arguments(parser_oracle, coalition=True)

    parser_generate = subparsers.add_parser('generate', parents=[common], help='write a seeded random model')
    parser_generate.add_argument('--seed', type=int, required=True, help='the random seed')
    parser_generate.add_argument('--agents', type=int, default=2, help='number of agents (default: 2)')
    parser_generate.add_argument('--states', type=int, default=3, help='number of states (default: 3)')
    parser_generate.add_argument('--actions', type=int, default=2, help='number of actions (default: 2)')
    parser_generate.add_argument('--density', type=float, default=1.0, help='probability that an action is available (default: 1.0)')
    parser_generate.add_argument('--max-available', type=int, help='most actions available to an agent at a state')
    parser_generate.add_argument('--output', help='write to this file instead of standard output')

    parser_format = subparsers.add_parser('format', parents=[common], help='rewrite a model file in canonical form')
    parser_format.add_argument('--model', required=True, help='the model file')
    parser_format.add_argument('--output', help='write to this file instead of standard output')

    return parser


def is_empty_outcome(action, view):
    if action == 'responsible':
        return not view['coalitions']
    if action == 'sdr':
        return view['sdr'] == util.UNDEFINED
    if action == 'fdr':
        return view['distance'] == util.INFINITE
    if action == 'report':
        return not view['minimal_responsible']
    if action == 'oracle':
        return not view['can_preclude']
    return False


def write_output(data, output):
    if output:
        with open(output, 'wb') as fp:
            fp.write(data)
    else:
        sys.stdout.write(data.decode('utf-8'))


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    # Post installation tasks
    generate_config_files()

    # Parse command-line arguments.
    try:
        parser = build_parser(argv)
        args = parser.parse_args(argv)
    except ConfigurationError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return e.code

    if not args.action:
        parser.print_help()
        return EXIT_USAGE

    # Logging
    log.set_up(log.ROOT_LOGGER, verbose=args.verbose, logfile=args.log_file)
    logger.info('Running v{} of {}.'.format(APP_VERSION, APP_NAME))

    # Configuration
    try:
        clientapi.initialize(semantics=args.semantics, precision=args.precision, threads=args.threads,
                             oracle_budget=args.oracle_budget, max_agents=args.max_agents,
                             force=getattr(args, 'force', False))
    except ConfigurationError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    try:
        # MODEL FILES
        if args.action == 'generate':
            data = clientapi.call('generate', {'seed': args.seed, 'agents': args.agents, 'states': args.states,
                                               'actions': args.actions, 'density': args.density,
                                               'max_available': args.max_available})
            write_output(data, args.output)
            return EXIT_OK

        elif args.action == 'format':
            write_output(clientapi.call('format', {'model': args.model}), args.output)
            return EXIT_OK

        # VIEWING
        view = console.get_view(args.action, args)

    except ModelError as e:
        for error in e.errors:
            print('error: {}'.format(error), file=sys.stderr)
        return EXIT_MODEL
    except (QueryError, BudgetExceeded) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE

    print_method = getattr(console, 'print_{}'.format(args.action), None)
    if args.format == 'json' or print_method is None:
        util.json_print(view)
    elif args.format == 'csv' and args.action == 'report':
        sys.stdout.write(report_csv(view))
    else:
        print_method(view)

    if args.strict and is_empty_outcome(args.action, view):
        return EXIT_EMPTY
    return EXIT_OK

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
