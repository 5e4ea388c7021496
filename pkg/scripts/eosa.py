#!/usr/bin/env python3
"""
EOSA toolkit command-line entry point.

Usage:
    python scripts/eosa.py optimize --function F34 --algo eosa --dim 30 --seed 7
    python scripts/eosa.py experiment config/examples/experiment.yaml --jobs 4
    python scripts/eosa.py --help
"""

import sys
from pathlib import Path

# Add src to path for imports (before other imports)
_project_root = Path(__file__).parent.parent
if str(_project_root) not in sys.path:
    sys.path.insert(0, str(_project_root))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
