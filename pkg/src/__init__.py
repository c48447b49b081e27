"""
gpkit

Exact computation in graph products of groups: normal forms, the
quasi-median geometry, crossing graphs, cone-offs and verdicts about
the automorphism group.

Version: 0.1.0
License: MIT
"""

import sys
from pathlib import Path

# Ensure src directory is in path
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

# Application metadata
__version__ = '0.1.0'
__license__ = 'MIT'
