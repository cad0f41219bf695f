#!/usr/bin/env python3
"""
TopoGalois - topological Galois classification toolkit
Main application entry point
"""

import sys
import logging

from src import APP_NAME, __version__
from src.cli.main import main as cli_main
from src.utils.logger import setup_logging


def main():
    """Main application entry point"""
    # Setup logging
    setup_logging(debug="--debug" in sys.argv[1:])
    logger = logging.getLogger(__name__)
    logger.debug(f"{APP_NAME} {__version__} started with {sys.argv[1:]}")

    # Parse arguments, classify, print the report
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
