import logging

from colorlog import ColoredFormatter

ROOT_LOGGER = 'respdeg'

CONSOLE_FORMAT = '%(log_color)s[%(levelname)s] %(name)s: %(message)s'
FILE_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
LOG_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}

def set_up(logger, verbose=False, logfile=None):
    if isinstance(logger, str):
        logger = logging.getLogger(logger)
    log_level = logging.DEBUG if verbose else logging.WARNING
    logger.setLevel(log_level)

    # Replace handlers from a previous call (the CLI may be invoked repeatedly in-process).
    for handler in list(logger.handlers):
        if getattr(handler, '_respdeg', False):
            logger.removeHandler(handler)
            handler.close()

    console = logging.StreamHandler()
    console.setLevel(log_level)
    console.setFormatter(ColoredFormatter(CONSOLE_FORMAT, log_colors=LOG_COLORS))
    console._respdeg = True
    logger.addHandler(console)

    if logfile:
        fileh = logging.FileHandler(logfile, encoding='utf8')
        fileh.setLevel(logging.DEBUG)
        fileh.setFormatter(logging.Formatter(FILE_FORMAT))
        fileh._respdeg = True
        logger.addHandler(fileh)

    return logger

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
