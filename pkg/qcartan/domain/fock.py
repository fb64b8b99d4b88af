"""
The level-1 q-Fock space, its divided-power lowering operators and the LLT
algorithm for the graded decomposition matrix D_n(q) and the graded Cartan
matrix C_n(q) = D_n(q)^t D_n(q).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping, Sequence, TypeVar
import logging

from qcartan.domain.partitions import (
    BlockIndex,
    Partition,
    EMPTY,
    enumerate_partitions,
    enumerate_p_regular,
    p_core,
    p_core_and_weight,
)
from qcartan.domain.qpoly import LaurentPoly, QPoly
from qcartan.exceptions import ConsistencyException, NotFoundException, ValidationException

logger = logging.getLogger(__name__)

Ring = TypeVar("Ring")


def residue(row: int, col: int, p: int) -> int:
    if row < 1 or col < 1:
        raise ValidationException(detail=f"Node ({row}, {col}) is not a valid cell")
    return (col - row) % p


class FockVector:
    """Finite combination of partitions of one size with Laurent coefficients"""
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, LaurentPoly] | None = None):
        self.terms: dict[Partition, LaurentPoly] = {
            lam: c for lam, c in (terms or {}).items() if not c.is_zero()
        }
        sizes = {lam.size for lam in self.terms}
        if len(sizes) > 1:
            raise ValidationException(detail=f"FockVector mixes partition sizes {sorted(sizes)}")

    @classmethod
    def basis(cls, lam: Partition) -> FockVector:
        return cls({lam: LaurentPoly.one()})

    @classmethod
    def vacuum(cls) -> FockVector:
        return cls.basis(EMPTY)

    def coefficient(self, lam: Partition) -> LaurentPoly:
        return self.terms.get(lam, LaurentPoly.zero())

    def items(self) -> Iterator[tuple[Partition, LaurentPoly]]:
        return iter(self.terms.items())

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=lambda lam: lam.parts, reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c: LaurentPoly) -> FockVector:
        return FockVector({lam: c * v for lam, v in self.terms.items()})

    def __add__(self, other: FockVector) -> FockVector:
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms[lam] + c if lam in terms else c
        return FockVector(terms)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other.scaled(LaurentPoly.monomial(0, -1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[lam]}){lam}" for lam in self.support())


@lru_cache(maxsize=None)
def _divided_power_on_basis(lam: Partition, i: int, a: int, p: int) -> tuple[tuple[Partition, int], ...]:
    """
    f_i^(a) lam as (mu, exponent) pairs. For each set S of a addable i-nodes the
    exponent is Σ_{γ∈S} (#addable i-nodes not in S above γ - #removable i-nodes above γ).
    """
    addable = [node for node in lam.addable_nodes() if residue(*node, p) == i]
    removable_rows = [row for row, col in lam.removable_nodes() if residue(row, col, p) == i]
    result = []
    for chosen in combinations(addable, a):
        chosen_rows = {row for row, _ in chosen}
        exponent = 0
        for row, _ in chosen:
            exponent += sum(1 for r, _ in addable if r < row and r not in chosen_rows)
            exponent -= sum(1 for r in removable_rows if r < row)
        result.append((lam.add_nodes(chosen), exponent))
    return tuple(result)


def apply_f_divided(v: FockVector, i: int, a: int, p: int) -> FockVector:
    if not 0 <= i < p:
        raise ValidationException(detail=f"Residue {i} out of range for p={p}")
    if a < 1:
        raise ValidationException(detail=f"Divided power exponent must be positive, got {a}")
    result: dict[Partition, LaurentPoly] = {}
    for lam, c in v.items():
        for mu, exponent in _divided_power_on_basis(lam, i, a, p):
            term = c.shifted(exponent)
            result[mu] = result[mu] + term if mu in result else term
    return FockVector(result)


def apply_f(v: FockVector, i: int, p: int) -> FockVector:
    return apply_f_divided(v, i, 1, p)


def ladder_number(row: int, col: int, p: int) -> int:
    return (row - 1) + (p - 1) * (col - 1)


def ladder_sequence(mu: Partition, p: int) -> list[tuple[int, int]]:
    """(residue, multiplicity) per occupied ladder, in increasing ladder order"""
    if not mu.is_p_regular(p):
        raise ValidationException(detail=f"{mu} is not {p}-regular")
    ladders: dict[int, int] = {}
    for row, col in mu.cells():
        number = ladder_number(row, col, p)
        ladders[number] = ladders.get(number, 0) + 1
    return [((-number) % p, count) for number, count in sorted(ladders.items())]


def ladder_vector(mu: Partition, p: int) -> FockVector:
    """A(mu): the ladder sequence of divided powers applied to the empty partition"""
    v = FockVector.vacuum()
    for i, a in ladder_sequence(mu, p):
        v = apply_f_divided(v, i, a, p)
    return v


def _bar_symmetric_part(c: LaurentPoly) -> LaurentPoly:
    """The bar-invariant α with c - α in qZ[q]"""
    terms = c.terms()
    alpha = {0: terms.get(0, 0)}
    for e, coefficient in terms.items():
        if e < 0:
            alpha[e] = coefficient
            alpha[-e] = coefficient
    return LaurentPoly.from_terms(alpha)


@dataclass
class DecompositionMatrix:
    p: int
    n: int
    rows: list[Partition]
    cols: list[Partition]
    columns: dict[Partition, dict[Partition, QPoly]] = field(default_factory=dict)

    def entry(self, lam: Partition, mu: Partition) -> QPoly:
        return self.columns.get(mu, {}).get(lam, QPoly.zero())

    def column(self, mu: Partition) -> dict[Partition, QPoly]:
        if mu not in self.columns:
            raise NotFoundException(resource_name="Column", resource_id=str(mu))
        return self.columns[mu]

    def dense(self) -> list[list[QPoly]]:
        return [[self.entry(lam, mu) for mu in self.cols] for lam in self.rows]

    def at(self, q0) -> list[list[int]]:
        return [[int(self.entry(lam, mu).evaluate(q0)) for mu in self.cols] for lam in self.rows]

    def invariant_violations(self) -> list[str]:
        """Unitriangularity, qZ[q] off the diagonal, nonnegativity and core support"""
        problems = []
        regular = set(self.cols)
        for mu in self.cols:
            column = self.columns.get(mu, {})
            if column.get(mu) != QPoly.one():
                problems.append(f"d[{mu},{mu}] = {column.get(mu)} is not 1")
            core = p_core(mu, self.p)
            for lam, entry in column.items():
                if lam != mu and not entry.in_q_zq():
                    problems.append(f"d[{lam},{mu}] = {entry} is not in qZ[q]")
                if not entry.has_nonnegative_coefficients():
                    problems.append(f"d[{lam},{mu}] = {entry} has a negative coefficient")
                if p_core(lam, self.p) != core:
                    problems.append(f"d[{lam},{mu}] is nonzero across p-cores")
                if lam in regular and lam != mu and entry.evaluate(0) != 0:
                    problems.append(f"d[{lam},{mu}](0) is nonzero")
        return problems


def canonical_basis(n: int, p: int) -> DecompositionMatrix:
    """
    LLT: columns are processed in increasing lexicographic order, which refines
    dominance; within a column the most dominant offending term is cleared first.
    """
    if n < 0:
        raise ValidationException(detail=f"n must be non-negative, got {n}")
    if p < 2:
        raise ValidationException(detail=f"p must be at least 2, got {p}")
    regular = enumerate_p_regular(n, p)
    computed: dict[Partition, FockVector] = {}
    for mu in sorted(regular, key=lambda lam: lam.parts):
        vector = ladder_vector(mu, p)
        if vector.coefficient(mu) != LaurentPoly.one():
            raise ConsistencyException(detail=f"Leading coefficient of A({mu}) is {vector.coefficient(mu)}")
        while True:
            offending = [
                nu for nu, c in vector.items()
                if nu != mu and nu in computed and not c.in_q_zq()
            ]
            if not offending:
                break
            nu = max(offending, key=lambda lam: lam.parts)
            alpha = _bar_symmetric_part(vector.coefficient(nu))
            if not alpha.is_bar_invariant():
                raise ConsistencyException(detail=f"LLT correction {alpha} at column {mu} is not bar invariant")
            logger.debug(f"LLT p={p} n={n}: G({mu}) -= ({alpha}) G({nu})")
            vector = vector - computed[nu].scaled(alpha)
        for lam, c in vector.items():
            if lam != mu and not c.in_q_zq():
                raise ConsistencyException(
                    detail=f"LLT failed to reach qZ[q] form at column {mu}: coefficient {c} on {lam}"
                )
        computed[mu] = vector
    columns = {mu: {lam: c.to_qpoly() for lam, c in computed[mu].items()} for mu in regular}
    return DecompositionMatrix(p=p, n=n, rows=enumerate_partitions(n), cols=regular, columns=columns)


def bareiss_determinant(matrix: Sequence[Sequence[Ring]], one: Ring) -> Ring:
    """
    Fraction-free elimination. Elements need +, -, *, exquo() and is_zero();
    every division is exact or exquo raises.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValidationException(detail="Determinant of a non-square matrix")
    if size == 0:
        return one
    a = [list(row) for row in matrix]
    sign = 1
    previous = one
    for k in range(size - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, size) if not a[r][k].is_zero()), None)
            if swap is None:
                return a[k][k]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exquo(previous)
        previous = a[k][k]
    result = a[size - 1][size - 1]
    return -result if sign < 0 else result


def det_exact(matrix: Sequence[Sequence[QPoly]]) -> QPoly:
    return bareiss_determinant(matrix, QPoly.one())


@dataclass
class GradedCartan:
    p: int
    n: int
    labels: list[Partition]
    entries: list[list[QPoly]]

    @property
    def size(self) -> int:
        return len(self.labels)

    def entry(self, mu: Partition, nu: Partition) -> QPoly:
        return self.entries[self.labels.index(mu)][self.labels.index(nu)]

    def at(self, q0) -> list[list[int]]:
        return [[int(e.evaluate(q0)) for e in row] for row in self.entries]

    def is_symmetric(self) -> bool:
        return all(
            self.entries[a][b] == self.entries[b][a]
            for a in range(self.size) for b in range(a + 1, self.size)
        )

    def is_identity_at_zero(self) -> bool:
        return all(
            self.entries[a][b].coefficient(0) == (1 if a == b else 0)
            for a in range(self.size) for b in range(self.size)
        )

    def determinant(self) -> QPoly:
        return det_exact(self.entries)

    def entry_degrees(self) -> list[list[int]]:
        return [[e.degree for e in row] for row in self.entries]

    def block_index(self, mu: Partition) -> BlockIndex:
        core, weight = p_core_and_weight(mu, self.p)
        return BlockIndex(core=core, weight=weight, p=self.p)

    def block_indices(self) -> list[BlockIndex]:
        """Blocks in order of increasing weight, then by core"""
        indices = {self.block_index(mu) for mu in self.labels}
        return sorted(indices, key=lambda b: (b.weight, b.core.parts))

    def block(self, b: BlockIndex) -> GradedCartan:
        if b.p != self.p or b.n != self.n:
            raise NotFoundException(resource_name="Block", resource_id=f"{b} of C_{self.n} at p={self.p}")
        positions = [k for k, mu in enumerate(self.labels) if p_core(mu, self.p) == b.core]
        if not positions:
            raise NotFoundException(resource_name="Block", resource_id=str(b))
        return GradedCartan(
            p=self.p,
            n=self.n,
            labels=[self.labels[k] for k in positions],
            entries=[[self.entries[r][c] for c in positions] for r in positions],
        )

    def blocks(self) -> list[tuple[BlockIndex, GradedCartan]]:
        return [(b, self.block(b)) for b in self.block_indices()]

    def cross_block_entries_vanish(self) -> bool:
        cores = [p_core(mu, self.p) for mu in self.labels]
        return all(
            self.entries[a][b].is_zero()
            for a in range(self.size) for b in range(self.size) if cores[a] != cores[b]
        )


def cartan(decomposition: DecompositionMatrix) -> GradedCartan:
    """C = D^t D over the rows of D"""
    cols = decomposition.cols
    entries = []
    for mu in cols:
        column_mu = decomposition.columns[mu]
        row = []
        for nu in cols:
            column_nu = decomposition.columns[nu]
            total = QPoly.zero()
            for lam, d in column_mu.items():
                if lam in column_nu:
                    total = total + d * column_nu[lam]
            row.append(total)
        entries.append(row)
    return GradedCartan(p=decomposition.p, n=decomposition.n, labels=list(cols), entries=entries)


def blocks_partition_labels(c: GradedCartan) -> bool:
    seen: list[Partition] = []
    for _, block in c.blocks():
        seen.extend(block.labels)
    return sorted(seen, key=lambda lam: lam.parts) == sorted(c.labels, key=lambda lam: lam.parts)


def block_sizes(c: GradedCartan) -> dict[BlockIndex, int]:
    return {b: block.size for b, block in c.blocks()}
