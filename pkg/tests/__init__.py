"""
gpkit Test Suite

Tests are organized by module and use the pytest framework, with
hypothesis for property tests over random syllable lists.
"""

import os
import sys
from pathlib import Path

# Add src directory to path for importing
src_path = Path(__file__).parent.parent / 'src'
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

# Test constants
CONFIG_DIR = os.path.join(Path(__file__).parent.parent, 'config')
PRESENTATIONS_DIR = os.path.join(CONFIG_DIR, 'presentations')


def presentation_path(name: str) -> str:
    return os.path.join(PRESENTATIONS_DIR, f"{name}.json")


# Settings used by the tests: small radii keep every search desk-scale
TEST_SETTINGS = {
    'infinite_cyclic_span': 2,
    'oracle_radius': 2,
    'window_radius': 2,
    'strong_separation_radius': None,
    'coneoff_depth_bound': 6,
    'bottleneck_path_samples': 6,
    'root_bound': None,
    'suite_sample_pairs': 20,
    'wpd_radius': 3,
    'normal_form_length': 3,
    'median_radius': 1,
    'delta_estimate_radius': 2,
    'delta_estimate_min_pairs': 10,
    'coneoff_word_length': 6,
    'verdict_table_vertices': 4,
    'seed': 0,
    'log_level': 'WARNING',
    'log_file': os.devnull,
}

from utils.config_utils import DEFAULT_SETTINGS  # noqa: E402

# Shipped radii and sample counts, for the slow full-suite runs
ACCEPTANCE_SETTINGS = dict(DEFAULT_SETTINGS, log_level='WARNING', log_file=os.devnull)
