"""
gpkit utilities

Settings and logging setup, presentation config I/O, DOT export and the
brute-force oracles the test suite and the invariant suite compare against.
"""

import functools
import logging

from models.errors import GraphProductError

from .config_utils import (
    DEFAULT_SETTINGS,
    configure_logging,
    create_default_settings,
    load_settings,
    thread_cap,
)
from .presentation_io import (
    ConfigError,
    format_presentation,
    parse_config,
    parse_config_text,
    parse_presentation,
    save_presentation,
)

__all__ = [
    # Settings
    'DEFAULT_SETTINGS',
    'configure_logging',
    'create_default_settings',
    'load_settings',
    'thread_cap',

    # Presentations
    'ConfigError',
    'format_presentation',
    'parse_config',
    'parse_config_text',
    'parse_presentation',
    'save_presentation',

    'handle_cli_errors',
    'EXIT_OK',
    'EXIT_CHECK_FAILED',
    'EXIT_USAGE',
]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


# Error handling
def handle_cli_errors(func):
    """Decorator turning toolkit and config errors into exit code 2."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (GraphProductError, ConfigError) as e:
            logging.getLogger('gpkit.cli').error("%s in %s: %s", type(e).__name__, func.__name__, e)
            return EXIT_USAGE
    return wrapper
