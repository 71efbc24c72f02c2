from __future__ import annotations

__version__ = "1.0.0"
__name__ = "hilbert_depth"

import os
from pathlib import Path

from hilbert_depth.utils.basic_logger import LOG_LEVELS
from hilbert_depth.utils.basic_logger import loguru_logger

DEFAULT_PATH = Path(os.path.realpath(__file__)).parents[1]

# an invalid HDEPTH_LOG_LEVEL is reported by the settings, not at import
_env_level = os.environ.get("HDEPTH_LOG_LEVEL", "WARNING").strip().upper()

LOGGER = loguru_logger(
    __name__,
    stream_level=_env_level if _env_level in LOG_LEVELS else "WARNING",
)


__all__ = ["__version__", "__name__", "loguru_logger", "DEFAULT_PATH", "LOGGER"]
