import os
import json
import codecs
import hashlib
import logging
import configparser
import decimal
from fractions import Fraction

import appdirs

from respdeg import config
from respdeg.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

D = decimal.Decimal

UNDEFINED = 'undefined'
INFINITE = 'inf'


class JsonDecimalEncoder(json.JSONEncoder):
    def default(self, o):
        if isinstance(o, (D, Fraction)):
            return str(o)
        return super(JsonDecimalEncoder, self).default(o)

json_dump = lambda x: json.dumps(x, sort_keys=True, indent=4, cls=JsonDecimalEncoder)
json_print = lambda x: print(json_dump(x))


def decimal_string(value, precision=None):
    """Decimal rendering of an exact rational, rounded half to even."""
    if precision is None:
        precision = config.PRECISION
    scaled = round(Fraction(value) * 10 ** precision)   # Fraction rounds half to even
    return format(D(scaled).scaleb(-precision), 'f')

def format_degree(value, precision=None):
    if value is None:
        return UNDEFINED
    return '{} ({})'.format(value, decimal_string(value, precision))

def degree_view(value, precision=None):
    if value is None:
        return UNDEFINED
    return {'fraction': str(value), 'decimal': decimal_string(value, precision)}

def distance_view(distance):
    return distance if isinstance(distance, int) else INFINITE


def content_hash(data):
    return hashlib.sha256(data).hexdigest()


def user_config_file():
    config_dir = appdirs.user_config_dir(appauthor=config.APP_AUTHOR, appname=config.APP_NAME, roaming=True)
    return os.path.join(config_dir, config.CONFIG_FILE_NAME)


# Set default values of command line arguments with config file
def add_config_arguments(arg_parser, config_args, config_file=None):
    if not config_file:
        config_file = user_config_file()

    configfile = configparser.ConfigParser(allow_no_value=True, inline_comment_prefixes=('#', ';'))
    if os.path.exists(config_file):
        logger.debug('Loading configuration file: `{}`'.format(config_file))
        try:
            with codecs.open(config_file, 'r', encoding='utf-8-sig') as fp:
                configfile.read_file(fp)
        except (OSError, ValueError, configparser.Error) as e:
            raise ConfigurationError('cannot read configuration file `{}`: {}'.format(config_file, e))
    else:
        logger.debug('No configuration file at `{}`.'.format(config_file))

    if not 'Default' in configfile:
        configfile['Default'] = {}

    # Initialize default values with the config file.
    for arg in config_args:
        key = arg[0][-1].replace('--', '')
        options = dict(arg[1])
        try:
            value = configfile['Default'].get(key)
            if value and options.get('action') == 'store_true':
                options['default'] = configfile['Default'].getboolean(key)
            elif value:
                value = options['type'](value) if 'type' in options else value
                if 'choices' in options and value not in options['choices']:
                    raise ValueError('expected one of: {}'.format(', '.join(options['choices'])))
                options['default'] = value
        except (ValueError, configparser.Error) as e:
            raise ConfigurationError('invalid value for `{}` in configuration file `{}`: {}'.format(key, config_file, e))
        arg_parser.add_argument(*arg[0], **options)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
