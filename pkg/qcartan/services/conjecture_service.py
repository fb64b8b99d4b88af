from typing import Optional
import logging

from anyio import CapacityLimiter, to_thread

from qcartan.config import Settings, settings as default_settings
from qcartan.domain.partitions import Partition
from qcartan.domain.smith import (
    ConjectureReport,
    DivisorChain,
    check_conjecture,
    check_conjecture_blockwise,
    checked_snf,
)
from qcartan.services.decomposition_service import DecompositionService

logger = logging.getLogger(__name__)


class ConjectureService:
    """Service layer for elementary divisors and their comparison with the weight chains"""

    def __init__(self, settings: Optional[Settings] = None, limiter: Optional[CapacityLimiter] = None):
        self.settings = settings or default_settings
        self.limiter = limiter
        self.decompositions = DecompositionService(self.settings, limiter)

    async def get_divisors(self, n: int, p: int, core: Optional[Partition] = None) -> DivisorChain:
        """Smith form of C_n(q), or of one of its blocks, checked against the determinant"""
        if core is None:
            c = await self.decompositions.get_cartan(n, p)
            label = f"C_{n}"
        else:
            c = await self.decompositions.get_block(n, p, core)
            label = f"block core={core} of C_{n}"
        return await to_thread.run_sync(checked_snf, c, label, limiter=self.limiter)

    async def compare(self, n: int, p: int, blockwise: bool = False) -> ConjectureReport:
        c = await self.decompositions.get_cartan(n, p)
        check = check_conjecture_blockwise if blockwise else check_conjecture
        report = await to_thread.run_sync(check, n, p, c, limiter=self.limiter)
        logger.info(f"Elementary divisor comparison n={n} p={p} blockwise={blockwise}: all_equal={report.all_equal}")
        return report
