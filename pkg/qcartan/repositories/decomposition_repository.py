from pathlib import Path
from typing import List, Optional, Tuple
import logging
import re

from pydantic import ValidationError

from qcartan.domain.fock import DecompositionMatrix
from qcartan.models import CACHE_VERSION, DecompositionDocument
from qcartan.repositories.base import BaseRepository

logger = logging.getLogger(__name__)

_FILE_PATTERN = re.compile(r"^n(\d+)\.json$")
_DIR_PATTERN = re.compile(r"^p(\d+)$")


class DecompositionRepository(BaseRepository):
    """Repository for cached decomposition matrices, one document per (p, n)"""

    @property
    def directory(self) -> Path:
        return self.root / "decomp"

    def path_for(self, p: int, n: int) -> Path:
        return self.directory / f"p{p}" / f"n{n}.json"

    async def get(self, p: int, n: int) -> Optional[DecompositionMatrix]:
        """Cached D_n(q) at p, or None on a miss or a stale document"""
        path = self.path_for(p, n)
        data = await self.read_document(path)
        if data is None:
            logger.info(f"Cache miss for D_{n} at p={p}")
            return None
        if data.get("version") != CACHE_VERSION:
            logger.info(f"Stale cache document {path} (version {data.get('version')}), discarding")
            await self.delete_document(path)
            return None
        try:
            document = DecompositionDocument.model_validate(data)
        except ValidationError as e:
            logger.warning(f"Invalid cache document {path}: {str(e)}")
            await self.delete_document(path)
            return None
        if document.p != p or document.n != n:
            logger.warning(f"Cache document {path} holds p={document.p} n={document.n}, discarding")
            await self.delete_document(path)
            return None
        logger.info(f"Cache hit for D_{n} at p={p}")
        return document.to_matrix()

    async def save(self, matrix: DecompositionMatrix) -> Path:
        path = self.path_for(matrix.p, matrix.n)
        document = DecompositionDocument.from_matrix(matrix)
        await self.write_document(path, document.model_dump_json())
        logger.info(f"Cached D_{matrix.n} at p={matrix.p} in {path}")
        return path

    async def delete(self, p: int, n: int) -> bool:
        return await self.delete_document(self.path_for(p, n))

    async def get_all_keys(self) -> List[Tuple[int, int]]:
        """(p, n) of every cached document"""
        keys = []
        for p_dir in await self.list_documents(self.directory, "p*"):
            p_match = _DIR_PATTERN.match(p_dir.name)
            if not p_match:
                continue
            for path in await self.list_documents(p_dir):
                n_match = _FILE_PATTERN.match(path.name)
                if n_match:
                    keys.append((int(p_match.group(1)), int(n_match.group(1))))
        return sorted(keys)
