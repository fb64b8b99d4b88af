"""Block determinant exponents A_j(d), Δ_{p,n}(d), Δ_{p,n} and N_{j,n}."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Mapping

from sympy import multiplicity

from qcartan.domain.partitions import (
    count_p_cores,
    enumerate_multipartitions,
    enumerate_p_class_regular,
    enumerate_partitions,
)
from qcartan.domain.qpoly import ProductForm, factorial_p_part, o_p, product
from qcartan.domain.weights import w_h
from qcartan.exceptions import ConsistencyException, ValidationException


def _validate(j: int, d: int, p: int) -> None:
    if p < 2:
        raise ValidationException(detail=f"p must be at least 2, got {p}")
    if j < 1:
        raise ValidationException(detail=f"j must be positive, got {j}")
    if d < 0:
        raise ValidationException(detail=f"d must be non-negative, got {d}")


def multichoose(n: int, k: int) -> int:
    """Number of k-combinations with repetition from n kinds"""
    if k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return comb(n + k - 1, k)


@lru_cache(maxsize=None)
def block_exponent(j: int, d: int, p: int) -> int:
    """A_j(d) = Σ_{λ∈P(d)} multichoose(p, m_j - 1) Π_{i≠j} multichoose(p - 1, m_i)"""
    _validate(j, d, p)
    if j > d:
        return 0
    total = 0
    for lam in enumerate_partitions(d):
        m_j = lam.multiplicity(j)
        if not m_j:
            continue
        total += multichoose(p, m_j - 1) * prod(
            multichoose(p - 1, m) for i, m in lam.multiplicities.items() if i != j
        )
    return total


def block_exponent_rational(j: int, d: int, p: int) -> int:
    """A_j(d) by Σ_{λ∈P(d)} m_j/(p-1) Π_i binom(p-2+m_i, m_i), checked integral"""
    _validate(j, d, p)
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        total += Fraction(lam.multiplicity(j), p - 1) * prod(
            comb(p - 2 + m, m) for m in lam.multiplicities.values()
        )
    if total.denominator != 1:
        raise ConsistencyException(detail=f"A_{j}({d}) at p={p} is not an integer: {total}")
    return total.numerator


def block_exponent_multiset(j: int, d: int, p: int) -> int:
    """Σ over (p-1)-multipartitions of d of m_j of the last component"""
    _validate(j, d, p)
    return sum(mu.components[-1].multiplicity(j) for mu in enumerate_multipartitions(d, p - 1))


def block_exponent_digits(j: int, d: int, p: int) -> int:
    """Σ over (p-1)-multipartitions of d of Σ_{p∤i} o_p(m_i // j) on the last component"""
    _validate(j, d, p)
    return sum(
        o_p(m // j, p)
        for mu in enumerate_multipartitions(d, p - 1)
        for i, m in mu.components[-1].multiplicities.items() if i % p
    )


@dataclass(frozen=True)
class BlockDeterminant:
    d: int
    p: int
    value: ProductForm
    exponents: Mapping[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "p": self.p,
            "value": self.value.label(),
            "exponents": {str(j): a for j, a in self.exponents.items()},
        }


@lru_cache(maxsize=None)
def delta_block(d: int, p: int) -> BlockDeterminant:
    """Δ_{p,n}(d) = Π_j [p]_j^(A_j(d)); independent of n"""
    _validate(1, d, p)
    exponents = {j: a for j in range(1, d + 1) if (a := block_exponent(j, d, p))}
    return BlockDeterminant(d=d, p=p, value=ProductForm.of(p, exponents), exponents=exponents)


def delta_block_by_w_h(d: int, p: int) -> ProductForm:
    """Π over (p-1)-multipartitions of d of w_H(last component)"""
    _validate(1, d, p)
    return product((w_h(mu.components[-1], p) for mu in enumerate_multipartitions(d, p - 1)), p)


def delta_blocks(n: int, p: int) -> list[tuple[int, int, BlockDeterminant]]:
    """(d, c_p(n - pd), Δ(d)) for 0 <= d <= n // p"""
    if n < 0:
        raise ValidationException(detail=f"n must be non-negative, got {n}")
    return [(d, count_p_cores(n - p * d, p), delta_block(d, p)) for d in range(n // p + 1)]


def delta(n: int, p: int) -> ProductForm:
    """Δ_{p,n} = Π_d Δ(d)^(c_p(n - pd))"""
    return product((block.value ** cores for _, cores, block in delta_blocks(n, p)), p)


def total_exponent(j: int, n: int, p: int) -> int:
    """N_{j,n} = Σ_d c_p(n - dp) A_j(d), the exponent of [p]_j in Δ_{p,n}"""
    _validate(j, n, p)
    return sum(count_p_cores(n - d * p, p) * block_exponent(j, d, p) for d in range(n // p + 1))


def total_exponent_enumerative(j: int, n: int, p: int) -> int:
    """Σ_{λ∈P_(p)(n)} m_a // p^b where j = a p^(b-1), p∤a"""
    _validate(j, n, p)
    b = multiplicity(p, j) + 1
    a = j // p ** (b - 1)
    return sum(lam.multiplicity(a) // p ** b for lam in enumerate_p_class_regular(n, p))


def classical_determinant(n: int, p: int) -> int:
    """Π_{λ∈P_(p)(n)} Π_i (m_i!)_p"""
    return prod(
        factorial_p_part(m, p)
        for lam in enumerate_p_class_regular(n, p)
        for m in lam.multiplicities.values()
    )
