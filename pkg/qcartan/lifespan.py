from contextlib import asynccontextmanager
from typing import Any, Awaitable, Callable
import logging

import anyio

from qcartan.config import Settings
from qcartan.storage import CacheDirectory

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(settings: Settings):
    """
    Open the cache root for the duration of one command
    """
    logger.debug("Starting qcartan command...")
    if settings.cache_enabled:
        try:
            await CacheDirectory.open_cache(settings.cache_dir)
        except Exception as e:
            logger.critical(f"Failed to open cache directory {settings.cache_dir}: {str(e)}")
            raise

    try:
        yield
    finally:
        await CacheDirectory.close_cache()
        logger.debug("qcartan command finished")


def run_with_lifespan(settings: Settings, function: Callable[..., Awaitable[Any]], *args) -> Any:
    """Run an async service call inside the lifespan on a fresh event loop"""
    async def runner():
        async with lifespan(settings):
            return await function(*args)

    return anyio.run(runner)
