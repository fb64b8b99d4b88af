"""
Smith normal form over Q[q, q^-1], diagonal divisor chains, the integer
Smith form used at q = 1, and the elementary-divisor comparison harness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Optional, Sequence
import logging

from sympy import Matrix, ZZ, isprime
from sympy.matrices.normalforms import invariant_factors

from qcartan.domain.fock import GradedCartan, bareiss_determinant, canonical_basis, cartan
from qcartan.domain.partitions import enumerate_multipartitions, enumerate_p_class_regular
from qcartan.domain.qpoly import (
    LaurentPoly,
    ProductForm,
    laurent_divides,
    laurent_divmod,
    laurent_gcd,
    normalize_unit,
)
from qcartan.domain.weights import w_e, w_g, w_h
from qcartan.exceptions import ConsistencyException, ValidationException

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisorChain:
    divisors: tuple[LaurentPoly, ...]
    rank_deficient: bool = False

    def __len__(self) -> int:
        return len(self.divisors)

    def product(self) -> LaurentPoly:
        return reduce(lambda a, b: a * b, self.divisors, LaurentPoly.one())

    def is_chain(self) -> bool:
        return all(laurent_divides(a, b) for a, b in zip(self.divisors, self.divisors[1:]))

    def first_difference(self, other: DivisorChain) -> Optional[int]:
        for index, (a, b) in enumerate(zip(self.divisors, other.divisors)):
            if a != b:
                return index
        if len(self.divisors) != len(other.divisors):
            return min(len(self.divisors), len(other.divisors))
        return None

    def labels(self) -> list[str]:
        return [str(d) for d in self.divisors]

    def to_json(self) -> list[list[list]]:
        return [d.to_json() for d in self.divisors]


def _pivot_position(a: list[list[LaurentPoly]], t: int) -> Optional[tuple[int, int]]:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if not a[i][j].is_zero() and (best is None or a[i][j].norm < a[best[0]][best[1]].norm):
                best = (i, j)
    return best


def _make_monic_unit_row(a: list[list[LaurentPoly]], t: int) -> None:
    """Scale row t by a unit so the pivot becomes a monic polynomial with nonzero constant term"""
    pivot = a[t][t]
    unit = pivot.exquo(normalize_unit(pivot))
    inverse = LaurentPoly.monomial(-unit.shift, 1 / unit.coefficient(unit.shift))
    a[t] = [inverse * x for x in a[t]]


def snf(matrix: Sequence[Sequence[LaurentPoly]]) -> DivisorChain:
    """Elementary divisors by Euclidean pivoting on the degree of the polynomial part"""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    divisors: list[LaurentPoly] = []
    for t in range(min(rows, cols)):
        while True:
            position = _pivot_position(a, t)
            if position is None:
                break
            i, j = position
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            _make_monic_unit_row(a, t)
            pivot = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t].is_zero():
                    continue
                quotient, remainder = laurent_divmod(a[i][t], pivot)
                a[i] = [x - quotient * y for x, y in zip(a[i], a[t])]
                clean = clean and remainder.is_zero()
            for j in range(t + 1, cols):
                if a[t][j].is_zero():
                    continue
                quotient, remainder = laurent_divmod(a[t][j], pivot)
                for row in a:
                    row[j] = row[j] - quotient * row[t]
                clean = clean and remainder.is_zero()
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols)
                 if not laurent_divides(pivot, a[i][j])),
                None
            )
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        if _pivot_position(a, t) is None:
            break
        divisors.append(normalize_unit(a[t][t]))
        logger.debug(f"SNF pivot {t}: {divisors[-1]}")
    full = min(rows, cols)
    rank_deficient = len(divisors) < full
    divisors.extend(LaurentPoly.zero() for _ in range(full - len(divisors)))
    return DivisorChain(divisors=tuple(divisors), rank_deficient=rank_deficient)


def divisors_of_diagonal(entries: Sequence[ProductForm]) -> DivisorChain:
    """Pairwise (gcd, lcm) refinement of the expanded diagonal entries"""
    if not entries:
        raise ValidationException(detail="divisors_of_diagonal needs at least one entry")
    values = [normalize_unit(form.expand().to_laurent()) for form in entries]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            g = laurent_gcd(values[i], values[j])
            values[i], values[j] = g, normalize_unit((values[i] * values[j]).exquo(g))
    return DivisorChain(divisors=tuple(values))


def laurent_matrix(c: GradedCartan) -> list[list[LaurentPoly]]:
    return [[entry.to_laurent() for entry in row] for row in c.entries]


def laurent_determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    return bareiss_determinant(matrix, LaurentPoly.one())


def product_matches_determinant(chain: DivisorChain, matrix: Sequence[Sequence[LaurentPoly]]) -> bool:
    return normalize_unit(chain.product()) == normalize_unit(laurent_determinant(matrix))


def integer_elementary_divisors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Integer Smith form diagonal, nonnegative"""
    if not matrix:
        return []
    factors = invariant_factors(Matrix(matrix), domain=ZZ)
    return [abs(int(f)) for f in factors]


def integer_divisor_chain(values: Sequence[int]) -> list[int]:
    chain = [abs(v) for v in values]
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            g = gcd(chain[i], chain[j])
            chain[i], chain[j] = g, (chain[i] * chain[j] // g if g else 0)
    return chain


@dataclass(frozen=True)
class Comparison:
    lhs: str
    rhs: str
    lhs_chain: DivisorChain
    rhs_chain: DivisorChain

    @property
    def first_difference(self) -> Optional[int]:
        return self.lhs_chain.first_difference(self.rhs_chain)

    @property
    def equal(self) -> bool:
        return self.first_difference is None


@dataclass
class ConjectureReport:
    p: int
    n: int
    comparisons: list[Comparison] = field(default_factory=list)
    blockwise: bool = False

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.comparisons)


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise ValidationException(
            detail=f"p={p} is not prime; the elementary divisor comparison is stated for prime p only"
        )


def checked_snf(c: GradedCartan, label: str) -> DivisorChain:
    matrix = laurent_matrix(c)
    chain = snf(matrix)
    if not product_matches_determinant(chain, matrix):
        raise ConsistencyException(detail=f"Product of elementary divisors of {label} differs from its determinant")
    return chain


def check_conjecture(n: int, p: int, cartan_matrix: Optional[GradedCartan] = None) -> ConjectureReport:
    """Compare SNF(C_n) with the diagonal chains of {w_E} and {w_G}; the verdict is data"""
    _require_prime(p)
    c = cartan_matrix or cartan(canonical_basis(n, p))
    lams = enumerate_p_class_regular(n, p)
    chain = checked_snf(c, f"C_{n}")
    by_e = divisors_of_diagonal([w_e(lam, p) for lam in lams])
    by_g = divisors_of_diagonal([w_g(lam, p) for lam in lams])
    comparisons = [
        Comparison(lhs="snf", rhs="w_E", lhs_chain=chain, rhs_chain=by_e),
        Comparison(lhs="snf", rhs="w_G", lhs_chain=chain, rhs_chain=by_g),
        Comparison(lhs="w_E", rhs="w_G", lhs_chain=by_e, rhs_chain=by_g),
    ]
    for comparison in comparisons:
        if not comparison.equal:
            logger.warning(
                f"Elementary divisors differ for n={n} p={p}: {comparison.lhs} vs {comparison.rhs} "
                f"at index {comparison.first_difference}"
            )
    return ConjectureReport(p=p, n=n, comparisons=comparisons)


def check_conjecture_block(d: int, p: int, n: int, cartan_matrix: Optional[GradedCartan] = None) -> ConjectureReport:
    """Compare SNF of every weight-d block of C_n with the chain of {w_H(mu^(p-1))}"""
    _require_prime(p)
    if d < 0 or n < p * d:
        raise ValidationException(detail=f"C_{n} has no blocks of weight {d} at p={p}")
    c = cartan_matrix or cartan(canonical_basis(n, p))
    by_h = divisors_of_diagonal([w_h(mu.components[-1], p) for mu in enumerate_multipartitions(d, p - 1)])
    comparisons = []
    for index, block in c.blocks():
        if index.weight != d:
            continue
        chain = checked_snf(block, f"block {index}")
        comparisons.append(Comparison(lhs=f"snf[core={index.core.key()}]", rhs="w_H", lhs_chain=chain, rhs_chain=by_h))
    return ConjectureReport(p=p, n=n, comparisons=comparisons, blockwise=True)


def check_conjecture_blockwise(n: int, p: int, cartan_matrix: Optional[GradedCartan] = None) -> ConjectureReport:
    """Every block of C_n against its w_H chain"""
    _require_prime(p)
    c = cartan_matrix or cartan(canonical_basis(n, p))
    comparisons = []
    for d in sorted({index.weight for index in c.block_indices()}):
        comparisons.extend(check_conjecture_block(d, p, n, c).comparisons)
    return ConjectureReport(p=p, n=n, comparisons=comparisons, blockwise=True)
