import logging
import logging.config
from pathlib import Path

from src.config import config


def setup_logging(path: Path | None = None, verbose: bool = False) -> None:
    """
    The setup_logging function loads the ini-style logging configuration shipped
    with the project. When the file is missing it falls back to a plain stderr handler.

    :param path: Path | None: Alternative ini file
    :param verbose: bool: Lower the project logger to DEBUG
    :return: None
    """
    path = path or config.LOG_CONFIG
    if Path(path).exists():
        logging.config.fileConfig(path, disable_existing_loggers=False)
    else:
        logging.basicConfig(level=logging.INFO, format="%(levelname)-5.5s [%(name)s] %(message)s")
    if verbose:
        logging.getLogger("src").setLevel(logging.DEBUG)
