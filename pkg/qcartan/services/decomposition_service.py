from typing import Dict, Optional, Tuple
import logging

import anyio
from anyio import CapacityLimiter, to_thread

from qcartan.config import Settings, settings as default_settings
from qcartan.domain.fock import DecompositionMatrix, GradedCartan, canonical_basis, cartan
from qcartan.domain.partitions import BlockIndex, Partition, is_p_core
from qcartan.exceptions import BadRequestException, NotFoundException, ValidationException
from qcartan.repositories import DecompositionRepository
from qcartan.storage import CacheDirectory

logger = logging.getLogger(__name__)


class DecompositionService:
    """Service layer for graded decomposition and Cartan matrices"""

    def __init__(self, settings: Optional[Settings] = None, limiter: Optional[CapacityLimiter] = None):
        self.settings = settings or default_settings
        self.limiter = limiter
        self.repository = (
            DecompositionRepository() if self.settings.cache_enabled and CacheDirectory.is_open() else None
        )
        self._locks: Dict[Tuple[int, int], anyio.Lock] = {}

    def check_limits(self, n: int, p: int) -> None:
        if p < 2:
            raise ValidationException(detail=f"p must be at least 2, got {p}")
        if n < 0:
            raise ValidationException(detail=f"n must be non-negative, got {n}")
        if n > self.settings.max_cartan_n:
            raise BadRequestException(
                detail=f"n={n} exceeds max_cartan_n={self.settings.max_cartan_n} "
                       f"(raise QCARTAN_MAX_CARTAN_N to allow it)"
            )

    async def get_decomposition(self, n: int, p: int) -> DecompositionMatrix:
        """D_n(q) from the cache, or by LLT and then cached"""
        self.check_limits(n, p)
        lock = self._locks.setdefault((p, n), anyio.Lock())
        async with lock:
            if self.repository is not None:
                cached = await self.repository.get(p, n)
                if cached is not None:
                    return cached
            logger.info(f"Computing D_{n} at p={p} by LLT")
            matrix = await to_thread.run_sync(canonical_basis, n, p, limiter=self.limiter)
            if self.repository is not None:
                await self.repository.save(matrix)
            return matrix

    async def get_cartan(self, n: int, p: int) -> GradedCartan:
        decomposition = await self.get_decomposition(n, p)
        return await to_thread.run_sync(cartan, decomposition, limiter=self.limiter)

    async def get_block(self, n: int, p: int, core: Partition) -> GradedCartan:
        """The block of C_n(q) with the given p-core"""
        if not is_p_core(core, p):
            raise ValidationException(detail=f"{core} is not a {p}-core")
        if (n - core.size) % p or core.size > n:
            raise NotFoundException(resource_name="Block", resource_id=f"core={core.key() or '-'} of C_{n} at p={p}")
        index = BlockIndex(core=core, weight=(n - core.size) // p, p=p)
        c = await self.get_cartan(n, p)
        return c.block(index)
