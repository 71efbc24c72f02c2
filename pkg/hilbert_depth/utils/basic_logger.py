from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional
from typing import Union

from loguru import logger

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")

_SOURCE_FIELDS = ("FILENAME: {file}", "MODULE: {module}", "FUNC: {function}", "LINE: {line}", "THREAD: {thread.name}")


def normalise_level(level: str) -> str:
    name = level.strip().upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"unknown log level {level!r}, expected one of {', '.join(LOG_LEVELS)}")
    return name


def record_format(colour: bool) -> str:
    """``time | level | FILENAME - MODULE - FUNC - LINE - THREAD :: message``, with loguru markup when ``colour``."""
    if colour:
        source = " - ".join(field.replace("{", "<cyan>{").replace("}", "}</cyan>") for field in _SOURCE_FIELDS)
        return (
            "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level}</level> | "
            f"{source} :: <level>{{message}}</level>"
        )
    source = " - ".join(_SOURCE_FIELDS)
    return f"{{time:YYYY-MM-DD HH:mm:ss}} | {{level}} | {source} :: {{message}}\n" + "-" * 100


def loguru_logger(
    name: str,
    stream_level: str = "WARNING",
    file_level: str = "DEBUG",
    filename: Optional[Union[str, Path]] = None,
    enqueue: bool = False,
):
    """
    Reset loguru to one console sink on stderr plus an optional file sink.

    stdout is left to command output, so json and csv stay machine-readable
    whatever the log level. Calling it again replaces the sinks.
    """
    stream_level = normalise_level(stream_level)
    logger.remove()
    logger.add(sys.stderr, level=stream_level, format=record_format(colour=True), colorize=True)

    if filename is not None:
        file_level = normalise_level(file_level)
        logger.add(str(filename), level=file_level, format=record_format(colour=False), enqueue=enqueue)

    logger.debug(f"{name}: console at {stream_level}, file {filename or '-'} at {file_level}")
    return logger


__all__ = ("LOG_LEVELS", "loguru_logger", "normalise_level")
