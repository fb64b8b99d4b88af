from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import time

import anyio
from anyio import CapacityLimiter, to_thread

from qcartan.config import Settings, settings as default_settings
from qcartan.exceptions import BadRequestException, ConsistencyException, NotFoundException, ValidationException
from qcartan.models import Timing, Verdict, VerificationReport
from qcartan.services import statements
from qcartan.services.decomposition_service import DecompositionService
from qcartan.services.statements import CheckOutcome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Statement:
    name: str
    description: str
    primes: Tuple[int, ...]
    bound: str
    default_bound: int
    limit: str
    reported: bool = False


STATEMENTS: Dict[str, Statement] = {
    s.name: s for s in [
        Statement("graded-part-product", "Π [p]_j^o_p(m//j) = Π [p]_j (j)_[p]", (2, 3, 5, 7), "m", 200, "max_lemma_m"),
        Statement("graded-part-telescoping", "Π (j)_[p] = Π_{j<=m//p} [p]_j (j)_[p]", (2, 3, 5, 7), "m", 200, "max_lemma_m"),
        Statement("cardinalities", "#P^(p)(n) = #P_(p)(n) = #Q_p(n)", (2, 3, 4, 5), "n", 20, "max_enumeration_n"),
        Statement("weight-multisets", "{w_E} = {w_H} over P_(p)(n) and Q_p(n)", (2, 3, 4, 5), "n", 14, "max_enumeration_n"),
        Statement("weight-products", "Π w_E = Π w_H", (2, 3, 4, 5), "n", 14, "max_enumeration_n"),
        Statement("determinant-products", "Δ_{p,n} = Π w_G = Π w_E", (2, 3, 4), "n", 14, "max_enumeration_n"),
        Statement("glaisher-exponents", "Σ m_j // p^k = Σ o_p(m_i // p^k j)", (2, 3, 5), "n", 14, "max_enumeration_n"),
        Statement("block-exponents", "three computations of A_j(d) agree", (2, 3, 4), "d", 8, "max_block_weight"),
        Statement("multiplicity-sums", "Σ m_j = Σ o_p(m_i // j) over P(n)", (2, 3, 5), "n", 20, "max_enumeration_n"),
        Statement("involution", "theta is an involution with E(theta(c)) = G(c)", (2, 3), "n", 20, "max_enumeration_n"),
        Statement("classical-specialization", "q = 1: determinant and integer Smith form", (2, 3), "n", 10, "max_cartan_n"),
        Statement("decomposition-matrix", "D_n(q) invariants and det C_n = Δ_{p,n}", (2, 3), "n", 10, "max_cartan_n"),
        Statement("block-determinants", "det of every block = Δ_{p,n}(d)", (2, 3), "n", 10, "max_cartan_n"),
        Statement("habacus-blocks", "p = 2 block products and block determinants", (2,), "d", 5, "max_block_weight"),
        Statement("elementary-divisors", "Smith form of C_n(q) against the weight chains", (2, 3), "n", 8, "max_cartan_n",
                  reported=True),
        Statement("series", "generating functions against enumeration", (2, 3, 4, 5), "order", 30, "max_enumeration_n"),
    ]
}

# default n for LLT-backed statements at p = 3
_DEFAULT_N_BY_P = {3: 9}

# short statement ids accepted alongside the descriptive names
STATEMENT_ALIASES: Dict[str, str] = {
    "lemma-3.1": "graded-part-product",
    "lemma-3.2": "graded-part-telescoping",
    "thm-3.3": "weight-multisets",
    "cor-3.4": "weight-products",
    "thm-4.1": "determinant-products",
    "cor-4.2": "glaisher-exponents",
    "thm-4.3": "block-exponents",
    "cor-4.4": "multiplicity-sums",
    "thm-7.1": "habacus-blocks",
    "thm-8.1": "block-determinants",
    "conj-8.2": "elementary-divisors",
}


def statement_name(name: str) -> str:
    """Descriptive name for a statement id or alias; unknown ids pass through"""
    return STATEMENT_ALIASES.get(name, name)


@dataclass(frozen=True)
class VerificationJob:
    statement: str
    p: Optional[int] = None
    bound: Optional[int] = None


class VerificationService:
    """Service layer dispatching verification statements"""

    def __init__(self, settings: Optional[Settings] = None, limiter: Optional[CapacityLimiter] = None):
        self.settings = settings or default_settings
        self.limiter = limiter or CapacityLimiter(self.settings.max_workers)
        self.decompositions = DecompositionService(self.settings, self.limiter)

    def get_statement(self, name: str) -> Statement:
        known = STATEMENTS.get(statement_name(name))
        if known is None:
            raise NotFoundException(resource_name="Statement", resource_id=name)
        return known

    def resolve(self, statement: Statement, p: Optional[int], bound: Optional[int]) -> Tuple[List[int], int]:
        """Prime list and bound, refusing anything past the configured limits"""
        if p is not None:
            if p < 2:
                raise ValidationException(detail=f"p must be at least 2, got {p}")
            if statement.name == "habacus-blocks" and p != 2:
                raise ValidationException(detail="habacus-blocks is stated for p = 2 only")
            primes = [p]
        else:
            primes = list(statement.primes)
        value = statement.default_bound if bound is None else bound
        if value < 0:
            raise ValidationException(detail=f"{statement.bound} must be non-negative, got {value}")
        limit = getattr(self.settings, statement.limit)
        if value > limit:
            raise BadRequestException(
                detail=f"{statement.name}: {statement.bound}={value} exceeds {statement.limit}={limit} "
                       f"(raise QCARTAN_{statement.limit.upper()} to allow it)"
            )
        if statement.name == "habacus-blocks" and 2 * value > self.settings.max_cartan_n:
            raise BadRequestException(
                detail=f"habacus-blocks: d={value} needs C_{2 * value}, past max_cartan_n={self.settings.max_cartan_n}"
            )
        return primes, value

    async def run(self, name: str, p: Optional[int] = None, bound: Optional[int] = None) -> VerificationReport:
        """Run one statement over its parameter range"""
        statement = self.get_statement(name)
        name = statement.name
        primes, value = self.resolve(statement, p, bound)
        parameters: Dict[str, Any] = {"p": primes, f"{statement.bound}_max": value}
        if statement.limit == "max_cartan_n":
            parameters["n_max_by_p"] = {str(q): self._n_range(q, value, bound is None) for q in primes}
        logger.info(f"Verifying {name} with {parameters}")
        started_at = datetime.now(timezone.utc)
        start = time.perf_counter()
        try:
            outcome = await self._dispatch(statement, primes, value, bound is None)
        except ConsistencyException as e:
            logger.error(f"{name} failed with an internal inconsistency: {e.detail}")
            outcome = CheckOutcome(checked=0, witness={"error": e.detail})
            verdict = Verdict.FAIL
        else:
            if statement.reported:
                verdict = Verdict.REPORTED
            else:
                verdict = Verdict.PASS if outcome.passed else Verdict.FAIL
        runtime = time.perf_counter() - start
        if verdict == Verdict.FAIL:
            logger.error(f"{name} failed: {outcome.witness}")
        elif verdict == Verdict.REPORTED and outcome.witness is not None:
            logger.warning(f"{name} found a difference: {outcome.witness}")
        logger.info(f"{name} finished in {runtime:.2f}s: {verdict.value} ({outcome.checked} instances)")
        return VerificationReport(
            statement=name,
            parameters=parameters,
            verdict=verdict,
            checked=outcome.checked,
            witness=outcome.witness,
            timing=Timing(started_at=started_at, runtime_seconds=runtime)
        )

    async def run_many(self, jobs: Sequence[VerificationJob]) -> List[VerificationReport]:
        """Run independent jobs concurrently; reports come back in job order"""
        for job in jobs:
            self.resolve(self.get_statement(job.statement), job.p, job.bound)
        reports: List[Optional[VerificationReport]] = [None] * len(jobs)

        async def run_job(index: int, job: VerificationJob) -> None:
            reports[index] = await self.run(job.statement, job.p, job.bound)

        async with anyio.create_task_group() as tg:
            for index, job in enumerate(jobs):
                tg.start_soon(run_job, index, job)
        return [report for report in reports if report is not None]

    async def run_all(self) -> List[VerificationReport]:
        return await self.run_many([VerificationJob(statement=name) for name in STATEMENTS])

    async def _compute(self, function, *args) -> CheckOutcome:
        return await to_thread.run_sync(function, *args, limiter=self.limiter)

    def _n_range(self, p: int, value: int, defaulted: bool) -> int:
        return min(value, _DEFAULT_N_BY_P.get(p, value)) if defaulted else value

    async def _dispatch(self, statement: Statement, primes: List[int], value: int, defaulted: bool) -> CheckOutcome:
        name = statement.name
        simple = {
            "graded-part-product": statements.graded_part_product,
            "graded-part-telescoping": statements.graded_part_telescoping,
            "cardinalities": statements.cardinalities,
            "weight-multisets": statements.weight_multisets,
            "weight-products": statements.weight_products,
            "determinant-products": statements.determinant_products,
            "glaisher-exponents": statements.glaisher_exponents,
            "block-exponents": statements.block_exponents,
            "multiplicity-sums": statements.multiplicity_sums,
            "involution": statements.involution,
        }
        if name in simple:
            return await self._compute(simple[name], primes, value)
        if name == "series":
            return await self._compute(statements.series, primes, value, min(value, self.settings.fiber_order))
        if name == "habacus-blocks":
            return await self._habacus_blocks(value)
        return await self._cartan_statement(name, primes, value, defaulted)

    async def _habacus_blocks(self, d_max: int) -> CheckOutcome:
        total = CheckOutcome()
        for d in range(d_max + 1):
            c = await self.decompositions.get_cartan(2 * d, 2)
            _merge(total, await self._compute(statements.habacus_blocks, d, c))
        return total

    async def _cartan_statement(self, name: str, primes: List[int], value: int, defaulted: bool) -> CheckOutcome:
        total = CheckOutcome()
        for p in primes:
            for n in range(self._n_range(p, value, defaulted) + 1):
                if name == "decomposition-matrix":
                    decomposition = await self.decompositions.get_decomposition(n, p)
                    c = await self.decompositions.get_cartan(n, p)
                    outcome = await self._compute(statements.decomposition_matrix, p, n, decomposition, c)
                else:
                    c = await self.decompositions.get_cartan(n, p)
                    check = {
                        "classical-specialization": statements.classical_specialization,
                        "block-determinants": statements.block_determinants,
                        "elementary-divisors": statements.elementary_divisors,
                    }[name]
                    outcome = await self._compute(check, p, n, c)
                _merge(total, outcome)
        return total


def _merge(total: CheckOutcome, outcome: CheckOutcome) -> None:
    total.checked += outcome.checked
    if total.witness is None:
        total.witness = outcome.witness
