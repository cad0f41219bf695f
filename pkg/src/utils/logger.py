"""
Logging configuration
"""

import logging
import os
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(debug: bool = False, log_dir: Optional[Path] = None):
    """Setup application logging configuration

    Reports go to stdout, so the console handler writes to stderr.
    Setting TOPOGALOIS_LOG_DIR to an empty string disables the log file.
    """
    if log_dir is None:
        env_dir = os.getenv("TOPOGALOIS_LOG_DIR", "logs")
        log_dir = Path(env_dir) if env_dir else None

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_dir is not None:
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_dir / "topogalois.log"))

    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    # Set specific loggers
    logging.getLogger("scipy").setLevel(logging.WARNING)
