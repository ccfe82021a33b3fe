"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import configparser
import logging
import os
import typing


FORMATTER = '%(asctime)s - %(name)s - %(levelname)s - [%(module)s] - %(message)s'
LOGNAME = 'camocodec_debug.log'
OPTIONS_FILE = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'resources', 'options.ini'))


def load_log_options(filepath : str = OPTIONS_FILE) -> typing.Tuple[str, str]:
    """
    Reads level and log file name from the [Logging] section of options.ini
    :param filepath: path of the ini file
    :return: (level name, log file name)
    """
    config = configparser.ConfigParser()
    if os.path.exists(filepath):
        try:
            config.read(filepath)
        except configparser.Error as e:
            logging.error('Loading options.ini file failed: {}'.format(e))
    if not config.has_section('Logging'):
        config.add_section('Logging')
    section = config['Logging']
    return section.get('level', 'INFO'), section.get('logfile', LOGNAME)


def InitLogSystem(level : typing.Optional[str] = None, logfile : typing.Optional[str] = None):
    """
    Init the log system
    :param level: logging level name, falls back to options.ini
    :param logfile: log file name, falls back to options.ini. Empty string disables the file handler
    :return:
    """
    default_level, default_logfile = load_log_options()
    level = (level or default_level).upper()
    logfile = default_logfile if logfile is None else logfile

    numeric_level = getattr(logging, level, None)
    if not isinstance(numeric_level, int):
        raise ValueError('Unknown log level: {}'.format(level))

    # set up logger system
    logger = logging.getLogger()
    logger.setLevel(numeric_level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    formatter = logging.Formatter(FORMATTER)
    if logfile:
        fh = logging.FileHandler(logfile, mode='w')
        fh.setLevel(numeric_level)
        fh.setFormatter(formatter)
        logger.addHandler(fh)
    ch = logging.StreamHandler()
    ch.setLevel(numeric_level)
    ch.setFormatter(formatter)
    logger.addHandler(ch)
