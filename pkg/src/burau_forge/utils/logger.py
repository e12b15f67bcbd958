import logging

from .. import APP_LOGGER_NAME


def setup_logger(level=logging.INFO):
    """Set up the logger for the application"""
    logger = logging.getLogger(APP_LOGGER_NAME)

    # If logger already has handlers, only adjust the levels
    if logger.handlers:
        for target in (logger, logging.getLogger('burau_forge')):
            target.setLevel(level)
            for handler in target.handlers:
                handler.setLevel(level)
        return logger

    logger.setLevel(level)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # Library modules log under burau_forge.*; route them to the same handler
    package_logger = logging.getLogger('burau_forge')
    package_logger.setLevel(level)
    if console_handler not in package_logger.handlers:
        package_logger.addHandler(console_handler)

    return logger
