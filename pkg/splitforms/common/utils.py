import logging
import logging.config

import os
import yaml

PACKAGE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_LOGGING_CONFIG = os.path.join(PACKAGE_DIR, 'logging.yaml')
DEFAULT_SETTINGS_FILE = os.path.join(PACKAGE_DIR, 'splitforms.cfg')


def setup_logging(
    default_path=DEFAULT_LOGGING_CONFIG,
    default_level=logging.WARNING,
    env_key='SPLITFORMS_LOG_CFG'
):
    """
    Setup logging configuration from a YAML dictConfig file; records go to stderr.
    """
    path = os.getenv(env_key, None) or default_path
    if os.path.exists(path):
        with open(path, 'rt') as f:
            config = yaml.safe_load(f.read())
        logging.config.dictConfig(config)
    else:
        logging.basicConfig(level=default_level)


def set_verbose(verbose):
    # type: (bool) -> None
    if verbose:
        logging.getLogger('splitforms').setLevel(logging.DEBUG)
