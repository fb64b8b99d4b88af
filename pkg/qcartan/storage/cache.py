from pathlib import Path
from typing import Optional
import logging

import anyio

from qcartan.exceptions import CacheException

logger = logging.getLogger(__name__)


class CacheDirectory:
    _root: Optional[Path] = None

    @classmethod
    async def open_cache(cls, root: Path) -> Path:
        """Create the cache root if needed and make it current"""
        if cls._root is None or cls._root != Path(root):
            try:
                await anyio.Path(root).mkdir(parents=True, exist_ok=True)
            except OSError as e:
                raise CacheException(detail=f"Cannot create cache directory {root}: {str(e)}")
            cls._root = Path(root)
            logger.info(f"Cache directory {root} opened")
        return cls._root

    @classmethod
    async def close_cache(cls):
        """Forget the current cache root"""
        if cls._root is not None:
            logger.info(f"Cache directory {cls._root} closed")
            cls._root = None

    @classmethod
    def is_open(cls) -> bool:
        return cls._root is not None

    @classmethod
    def get_root(cls) -> Path:
        """Get the current cache root"""
        if cls._root is None:
            raise CacheException(detail="Cache directory not opened. Call open_cache() first.")
        return cls._root
