#!/usr/bin/env python

import os
import logging

from respdeg import config, util

logger = logging.getLogger(__name__)

def config_key(arg):
    return arg[0][-1].lstrip('-')

def config_value(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return '1' if value else '0'
    return str(value)

# Commented [Default] section listing every shared option (client.CONFIG_ARGS) with its default.
def generate_config_file(filename, config_args, overwrite=False):
    if not overwrite and os.path.exists(filename):
        return False

    os.makedirs(os.path.dirname(os.path.abspath(filename)), mode=0o755, exist_ok=True)

    lines = ['# {} configuration; values become the defaults of the matching options.'.format(config.APP_NAME),
             '[Default]',
             '']
    for arg in config_args:
        options = arg[1]
        note = options.get('help', '')
        if 'choices' in options:
            note = '{} [{}]'.format(note, '|'.join(str(c) for c in options['choices']))
        lines.append('# {}'.format(note))
        lines.append('# {} = {}'.format(config_key(arg), config_value(options.get('default'))))
        lines.append('')

    with open(filename, 'w', encoding='utf8') as config_file:
        config_file.write('\n'.join(lines))
    os.chmod(filename, 0o660)
    logger.debug('Wrote configuration template `{}`.'.format(filename))
    return True

def generate_config_files():
    from respdeg.client import CONFIG_ARGS
    return generate_config_file(util.user_config_file(), CONFIG_ARGS)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
