import functools
import logging
import os
import sys
import threading
import time
from typing import Any, Callable

import psutil
from aws_lambda_powertools.logging import Logger

# Logs go to stderr, stdout carries command output
logger = Logger(service="semcomm", logger_handler=logging.StreamHandler(sys.stderr))


def logging_middleware(command: Callable[..., int]) -> Callable[..., int]:
    """Decorator to log system details, arguments and timing of a CLI command."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> int:
        vm_start = psutil.virtual_memory()
        system_info_start = {
            "cpu_cores": os.cpu_count(),
            "memory_available_mb": vm_start.available // (1024 * 1024),
            "memory_percent_used": vm_start.percent,
            "active_threads": threading.active_count(),
        }
        logger.debug(
            "System details at start", extra={"system_info": system_info_start}
        )
        logger.info(
            "Running command",
            extra={"command": command.__name__, "arguments": _describe(args, kwargs)},
        )

        started = time.perf_counter()
        try:
            exit_code = command(*args, **kwargs)
        except Exception:
            logger.exception("Command failed", extra={"command": command.__name__})
            # Re-raise the exception to be handled by the error handler middleware
            raise

        vm_end = psutil.virtual_memory()
        logger.info(
            "Command finished",
            extra={
                "command": command.__name__,
                "exit_code": exit_code,
                "elapsed_s": round(time.perf_counter() - started, 4),
                "system_info": {
                    "memory_available_mb": vm_end.available // (1024 * 1024),
                    "memory_percent_used": vm_end.percent,
                },
            },
        )
        return exit_code

    return wrapper


def _describe(args: tuple, kwargs: dict) -> dict:
    described = {f"arg{i}": repr(value)[:200] for i, value in enumerate(args)}
    described.update({key: repr(value)[:200] for key, value in kwargs.items()})
    return described
