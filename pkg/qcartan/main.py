from pathlib import Path
from typing import Dict, Optional
import logging

import click

from qcartan import __version__
from qcartan.commands import combinatorics, matrices, verification
from qcartan.config import Settings, settings
from qcartan.exception_handlers import ExceptionHandler, general_exception_handler, register_exception_handlers

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class ClickEchoHandler(logging.Handler):
    """Log records to whatever click currently considers stderr"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def configure_logging(level: str) -> None:
    package_logger = logging.getLogger("qcartan")
    if not any(isinstance(h, ClickEchoHandler) for h in package_logger.handlers):
        handler = ClickEchoHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        package_logger.addHandler(handler)
    package_logger.setLevel(level.upper())


class QCartanGroup(click.Group):
    """Click group that turns exceptions into JSON errors and exit codes"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.exception_handlers: Dict[type, ExceptionHandler] = {}

    def add_exception_handler(self, exc_class: type, handler: ExceptionHandler) -> None:
        self.exception_handlers[exc_class] = handler

    def handle_exception(self, ctx: Optional[click.Context], exc: BaseException) -> int:
        """Dispatch to the handler of the nearest registered class in the MRO"""
        for klass in type(exc).__mro__:
            handler = self.exception_handlers.get(klass)
            if handler is not None:
                return handler(ctx, exc)
        return general_exception_handler(ctx, exc)

    def parse_args(self, ctx: click.Context, args):
        if not args and self.no_args_is_help and not ctx.resilient_parsing:
            click.echo(ctx.get_help())
            ctx.exit(0)
        try:
            return super().parse_args(ctx, args)
        except click.UsageError as exc:
            ctx.exit(self.handle_exception(ctx, exc))

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.Abort):
            raise
        except Exception as exc:
            ctx.exit(self.handle_exception(ctx, exc))


@click.group("qcartan", cls=QCartanGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="qcartan")
@click.option(
    "--cache-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Cache root (default: QCARTAN_CACHE_DIR or ./cache)"
)
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None)
@click.option("--no-cache", is_flag=True, help="Neither read nor write the disk cache")
@click.pass_context
def cli(ctx: click.Context, cache_dir: Optional[Path], log_level: Optional[str], no_cache: bool):
    """Exact graded Cartan matrices of Hecke algebras at a p-th root of unity."""
    base: Settings = (ctx.obj or {}).get("settings", settings)
    updates = {}
    if cache_dir is not None:
        updates["cache_dir"] = cache_dir
    if log_level is not None:
        updates["log_level"] = log_level.upper()
    if no_cache:
        updates["cache_enabled"] = False
    run_settings = base.model_copy(update=updates)
    configure_logging(run_settings.log_level)
    ctx.obj = {"settings": run_settings}
    logger.debug(f"Running with cache_dir={run_settings.cache_dir} cache_enabled={run_settings.cache_enabled}")


# Register exception handlers
register_exception_handlers(cli)

# Register commands
for module in (combinatorics, matrices, verification):
    for command in module.commands:
        cli.add_command(command)


def main() -> None:
    cli.main(prog_name="qcartan")
