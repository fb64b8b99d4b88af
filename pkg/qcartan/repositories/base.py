from abc import ABC
from pathlib import Path
from typing import Any, Dict, List, Optional
import json
import logging
import uuid

import anyio

from qcartan.exceptions import CacheException
from qcartan.storage import CacheDirectory

logger = logging.getLogger(__name__)


class BaseRepository(ABC):
    """Base repository class for JSON documents stored under the cache root"""

    def __init__(self):
        self.root = CacheDirectory.get_root()

    async def read_document(self, path: Path) -> Optional[Dict[str, Any]]:
        """Read one JSON document; None when it does not exist or cannot be decoded"""
        target = anyio.Path(path)
        if not await target.exists():
            return None
        try:
            text = await target.read_text(encoding="utf-8")
        except OSError as e:
            raise CacheException(detail=f"Cannot read {path}: {str(e)}")
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            logger.warning(f"Discarding undecodable cache document {path}")
            return None

    async def write_document(self, path: Path, content: str) -> None:
        """Write through a temporary file and an atomic rename"""
        target = anyio.Path(path)
        temporary = anyio.Path(f"{path}.{uuid.uuid4().hex}.tmp")
        try:
            await target.parent.mkdir(parents=True, exist_ok=True)
            await temporary.write_text(content, encoding="utf-8")
            await temporary.replace(target)
        except OSError as e:
            raise CacheException(detail=f"Cannot write {path}: {str(e)}")

    async def delete_document(self, path: Path) -> bool:
        target = anyio.Path(path)
        if not await target.exists():
            return False
        try:
            await target.unlink()
        except OSError as e:
            raise CacheException(detail=f"Cannot delete {path}: {str(e)}")
        return True

    async def list_documents(self, directory: Path, pattern: str = "*.json") -> List[Path]:
        target = anyio.Path(directory)
        if not await target.exists():
            return []
        return sorted([Path(path) async for path in target.glob(pattern)])
