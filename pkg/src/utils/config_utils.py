import json
import logging
import os
from typing import Optional

import psutil
from dotenv import load_dotenv

logger = logging.getLogger('gpkit.config')

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

DEFAULT_SETTINGS = {
    'infinite_cyclic_span': 2,
    'oracle_radius': 3,
    'window_radius': 2,
    'strong_separation_radius': 2,
    'coneoff_depth_bound': 6,
    'bottleneck_path_samples': 12,
    'root_bound': None,
    'suite_sample_pairs': 50,
    'normal_form_length': 5,
    'median_radius': 2,
    'delta_estimate_radius': 3,
    'delta_estimate_min_pairs': 200,
    'coneoff_word_length': 12,
    'wpd_radius': 4,
    'verdict_table_vertices': 5,
    'seed': 0,
    'log_level': 'INFO',
    'log_file': 'gpkit.log',
}


def load_settings(path: str) -> dict:
    """Load settings, falling back to (and writing) the defaults when the file is missing."""
    try:
        with open(path, 'r') as f:
            settings = json.load(f)
    except FileNotFoundError:
        logger.info("Settings file not found at %s. Creating default settings...", path)
        return create_default_settings(path)
    merged = dict(DEFAULT_SETTINGS)
    merged.update(settings)
    return merged


def create_default_settings(path: str) -> dict:
    settings = dict(DEFAULT_SETTINGS)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w') as f:
        json.dump(settings, f, indent=2)
    return settings


def configure_logging(settings: dict, level: Optional[str] = None):
    """Root handlers for the gpkit logger: a log file plus stderr, leaving stdout to the reports."""
    handlers = [logging.StreamHandler()]
    if settings.get('log_file'):
        handlers.insert(0, logging.FileHandler(settings['log_file']))
    logging.basicConfig(
        level=getattr(logging, (level or settings.get('log_level', 'INFO')).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def thread_cap() -> int:
    """GPKIT_THREADS from the environment or a .env file, else the physical core count."""
    load_dotenv()
    value = os.getenv('GPKIT_THREADS')
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            logger.warning("Ignoring non-numeric GPKIT_THREADS=%r", value)
    return psutil.cpu_count(logical=False) or 1
