import sys
from datetime import datetime

from loguru import logger as _logger

from app.config import PROJECT_ROOT, config


_print_level = "INFO"


def define_log_level(
    print_level="INFO", logfile_level="DEBUG", name: str = None, log_to_file=False
):
    """Adjust the log level to above level"""
    global _print_level
    _print_level = print_level

    _logger.remove()
    _logger.add(sys.stderr, level=print_level)
    if log_to_file:
        formatted_date = datetime.now().strftime("%Y%m%d%H%M%S")
        log_name = f"{name}_{formatted_date}" if name else formatted_date
        _logger.add(PROJECT_ROOT / f"logs/{log_name}.log", level=logfile_level)
    return _logger


logger = define_log_level(
    print_level=config.logging.print_level,
    logfile_level=config.logging.logfile_level,
    name="critlab",
    log_to_file=config.logging.log_to_file,
)
