from typing import Callable, Optional
import json
import logging

import click

from qcartan.exceptions import (
    EXIT_FAILURE,
    EXIT_USAGE,
    BadRequestException,
    CacheException,
    ConsistencyException,
    InternalException,
    NotFoundException,
    QCartanException,
    ValidationException
)

logger = logging.getLogger(__name__)

ExceptionHandler = Callable[[Optional[click.Context], BaseException], int]


def _command_path(ctx: Optional[click.Context]) -> str:
    if ctx is None:
        return "qcartan"
    if ctx.invoked_subcommand:
        return f"{ctx.command_path} {ctx.invoked_subcommand}"
    return ctx.command_path


def _emit(ctx: Optional[click.Context], error: str, message: str, **extra) -> None:
    content = {
        "error": error,
        "message": message,
        "command": _command_path(ctx),
        **extra
    }
    click.echo(json.dumps(content), err=True)


def not_found_exception_handler(ctx: Optional[click.Context], exc: NotFoundException) -> int:
    """Handle NotFoundException (usage error)"""
    logger.warning(f"Not found: {exc.detail}")
    _emit(ctx, "Not Found", exc.detail)
    return exc.exit_code


def bad_request_exception_handler(ctx: Optional[click.Context], exc: BadRequestException) -> int:
    """Handle BadRequestException (refused request)"""
    logger.warning(f"Bad request: {exc.detail}")
    _emit(ctx, "Bad Request", exc.detail)
    return exc.exit_code


def validation_exception_handler(ctx: Optional[click.Context], exc: ValidationException) -> int:
    """Handle ValidationException (invalid mathematical input)"""
    logger.warning(f"Validation error: {exc.detail}")
    _emit(ctx, "Validation Error", exc.detail)
    return exc.exit_code


def consistency_exception_handler(ctx: Optional[click.Context], exc: ConsistencyException) -> int:
    """Handle ConsistencyException (an identity that must hold did not)"""
    logger.error(f"Consistency failure: {exc.detail}")
    _emit(ctx, "Consistency Error", exc.detail)
    return exc.exit_code


def cache_exception_handler(ctx: Optional[click.Context], exc: CacheException) -> int:
    """Handle CacheException"""
    logger.error(f"Cache error: {exc.detail}")
    _emit(ctx, "Cache Error", exc.detail)
    return exc.exit_code


def internal_exception_handler(ctx: Optional[click.Context], exc: InternalException) -> int:
    """Handle InternalException"""
    logger.critical(f"Internal error: {exc.detail}")
    _emit(ctx, "Internal Error", exc.detail)
    return exc.exit_code


def qcartan_exception_handler(ctx: Optional[click.Context], exc: QCartanException) -> int:
    """Handle any other QCartanException"""
    logger.error(f"qcartan error: {exc.detail}")
    _emit(ctx, "Error", exc.detail)
    return exc.exit_code


def usage_exception_handler(ctx: Optional[click.Context], exc: click.UsageError) -> int:
    """Handle click usage errors (bad options, missing arguments)"""
    logger.warning(f"Usage error: {exc.format_message()}")
    _emit(exc.ctx or ctx, "Usage Error", exc.format_message())
    return EXIT_USAGE


def click_exception_handler(ctx: Optional[click.Context], exc: click.ClickException) -> int:
    """Handle other click exceptions (bad files, aborted prompts)"""
    logger.warning(f"Command error: {exc.format_message()}")
    _emit(ctx, "Command Error", exc.format_message())
    return EXIT_USAGE


def general_exception_handler(ctx: Optional[click.Context], exc: BaseException) -> int:
    """Handle all unhandled exceptions"""
    logger.critical(f"Unhandled exception: {str(exc)}", exc_info=exc)
    _emit(ctx, "Internal Error", "An unexpected error occurred.", type=type(exc).__name__)
    return EXIT_FAILURE


def register_exception_handlers(group) -> None:
    """Register all exception handlers on the qcartan click group"""

    # Custom exceptions
    group.add_exception_handler(NotFoundException, not_found_exception_handler)
    group.add_exception_handler(BadRequestException, bad_request_exception_handler)
    group.add_exception_handler(ValidationException, validation_exception_handler)
    group.add_exception_handler(ConsistencyException, consistency_exception_handler)
    group.add_exception_handler(CacheException, cache_exception_handler)
    group.add_exception_handler(InternalException, internal_exception_handler)
    group.add_exception_handler(QCartanException, qcartan_exception_handler)

    # click built-in exceptions
    group.add_exception_handler(click.UsageError, usage_exception_handler)
    group.add_exception_handler(click.ClickException, click_exception_handler)

    # Catch-all for unhandled exceptions
    group.add_exception_handler(Exception, general_exception_handler)

    logger.debug("All exception handlers registered successfully")
