"""
Partition weights w_E, w_H and w_G, the Glaisher correspondence and the
decorated diagrams D_i(lambda) with their tableaux G, E and the involution theta.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Optional, Sequence

from sympy import multiplicity

from qcartan.domain.partitions import (
    Partition,
    QIndex,
    enumerate_p_class_regular,
    enumerate_partitions,
)
from qcartan.domain.qpoly import ProductForm, graded_factorial_p_part, o_p, product
from qcartan.exceptions import ValidationException

StepChooser = Callable[[Sequence[int]], int]


def _require_p(p: int) -> None:
    if p < 2:
        raise ValidationException(detail=f"p must be at least 2, got {p}")


def w_e(lam: Partition, p: int) -> ProductForm:
    """Π_{p∤i} Π_{j=1}^{m_i} (j)_[p]"""
    _require_p(p)
    return product(
        (graded_factorial_p_part(m, p) for i, m in lam.multiplicities.items() if i % p),
        p
    )


def w_h(lam: Partition, p: int) -> ProductForm:
    """Π_{j>=1} Π_{p∤i} [p]_j^(o_p(m_i // j))"""
    _require_p(p)
    exponents: Counter[int] = Counter()
    for i, m in lam.multiplicities.items():
        if i % p == 0:
            continue
        for j in range(1, m + 1):
            exponents[j] += o_p(m // j, p)
    return ProductForm.of(p, exponents)


def w_h_q(qi: QIndex) -> ProductForm:
    """w_H of the last component of the multipartition"""
    return w_h(qi.mu.components[-1], qi.p)


def w_g(lam: Partition, p: int) -> ProductForm:
    """Π_a Π_{b>=1} [p]_(a p^(b-1))^(m_a // p^b) for p-class regular lam"""
    _require_p(p)
    if not lam.is_p_class_regular(p):
        raise ValidationException(detail=f"w_G needs a {p}-class regular partition, got {lam}")
    exponents: Counter[int] = Counter()
    for a, m in lam.multiplicities.items():
        b = 1
        while m // p ** b:
            exponents[a * p ** (b - 1)] += m // p ** b
            b += 1
    return ProductForm.of(p, exponents)


@dataclass(frozen=True)
class GlaisherResult:
    source: Partition
    image: Partition
    step_counts: Mapping[int, int]
    p: int

    @property
    def total_steps(self) -> int:
        return sum(self.step_counts.values())

    def weight(self) -> ProductForm:
        """Π_i [p]_i^(d_i)"""
        return ProductForm.of(self.p, dict(self.step_counts))


def _smallest(applicable: Sequence[int]) -> int:
    return applicable[0]


def glaisher(lam: Partition, p: int, chooser: Optional[StepChooser] = None) -> GlaisherResult:
    """
    Trade p copies of a part i for one part p*i until the partition is
    p-regular. `chooser` picks among the applicable i (sorted ascending);
    the default takes the smallest.
    """
    _require_p(p)
    choose = chooser or _smallest
    counts = Counter(lam.multiplicities)
    steps: Counter[int] = Counter()
    while True:
        applicable = sorted(i for i, m in counts.items() if m >= p)
        if not applicable:
            break
        i = choose(applicable)
        if i not in applicable:
            raise ValidationException(detail=f"Glaisher step g_{i} is not applicable")
        counts[i] -= p
        counts[p * i] += 1
        steps[i] += 1
    image = Partition.from_multiplicities(counts)
    return GlaisherResult(source=lam, image=image, step_counts=dict(sorted(steps.items())), p=p)


def glaisher_weight(lam: Partition, p: int) -> ProductForm:
    return glaisher(lam, p).weight()


@dataclass(frozen=True)
class DiagramCell:
    """A box (j, k) of D_i(partition)"""
    partition: Partition
    i: int
    j: int
    k: int
    p: int

    def __post_init__(self):
        _require_p(self.p)
        if self.i < 1 or self.i % self.p == 0:
            raise ValidationException(detail=f"Diagram index i={self.i} must be positive and prime to p={self.p}")
        if not self.partition.is_p_class_regular(self.p):
            raise ValidationException(detail=f"{self.partition} is not {self.p}-class regular")
        if not 1 <= self.k <= self.partition.multiplicity(self.i) // self.p:
            raise ValidationException(detail=f"k={self.k} out of range for D_{self.i}({self.partition})")
        if self.j < 0 or self.k % self.p ** self.j:
            raise ValidationException(detail=f"p^{self.j} does not divide k={self.k}")

    def g_value(self) -> int:
        return self.i * self.p ** self.j

    def e_value(self) -> int:
        return self.k // self.p ** self.j

    def to_json(self) -> dict:
        return {"partition": self.partition.to_json(), "i": self.i, "j": self.j, "k": self.k}


def diagram(lam: Partition, p: int, i: int) -> list[tuple[int, int]]:
    """D_i(lam) as (j, k) pairs, ordered by k then j"""
    _require_p(p)
    if i < 1 or i % p == 0:
        raise ValidationException(detail=f"Diagram index i={i} must be positive and prime to p={p}")
    cells = []
    for k in range(1, lam.multiplicity(i) // p + 1):
        for j in range(multiplicity(p, k) + 1):
            cells.append((j, k))
    return cells


def diagram_cells_of(lam: Partition, p: int) -> list[DiagramCell]:
    return [
        DiagramCell(lam, i, j, k, p)
        for i in sorted(lam.multiplicities) if i % p
        for j, k in diagram(lam, p, i)
    ]


def diagram_cells(n: int, p: int) -> Iterator[DiagramCell]:
    """Every cell over every p-class regular partition of n"""
    for lam in enumerate_p_class_regular(n, p):
        yield from diagram_cells_of(lam, p)


def g_value(cell: DiagramCell) -> int:
    return cell.g_value()


def e_value(cell: DiagramCell) -> int:
    return cell.e_value()


def theta(cell: DiagramCell) -> DiagramCell:
    """
    Write k = i' p^e with p∤i'. Remove p*k parts i, add p*i*p^e parts i',
    and swap (i, j) with (i', e - j).
    """
    p = cell.p
    e = multiplicity(p, cell.k)
    i_prime = cell.k // p ** e
    k_prime = cell.i * p ** e
    mu = cell.partition.without_parts(cell.i, p * cell.k)
    image = mu + Partition((i_prime,) * (p * k_prime))
    return DiagramCell(image, i_prime, e - cell.j, k_prime, p)


def cell_weight_by_g(lam: Partition, p: int) -> ProductForm:
    """Π over the cells of lam of [p]_G(c); equals w_G(lam)"""
    return ProductForm.of(p, Counter(c.g_value() for c in diagram_cells_of(lam, p)))


def weight_multiset(forms) -> list[ProductForm]:
    """Canonical sorted encoding used for multiset comparison"""
    return sorted(forms)


def glaisher_exponent_sides(n: int, p: int, j: int, k: int) -> tuple[int, int]:
    """
    Σ_λ m_j // p^k against Σ_λ Σ_i o_p(m_i // (p^k j)) over p-class regular
    partitions of n, p∤j.
    """
    if j % p == 0:
        raise ValidationException(detail=f"j={j} must be prime to p={p}")
    lams = enumerate_p_class_regular(n, p)
    lhs = sum(lam.multiplicity(j) // p ** k for lam in lams)
    rhs = sum(o_p(m // (p ** k * j), p) for lam in lams for m in lam.multiplicities.values())
    return lhs, rhs


def multiplicity_sum_sides(n: int, p: int, j: int) -> tuple[int, int]:
    """Σ_{λ∈P(n)} m_j against Σ_λ Σ_{p∤i} o_p(m_i // j)"""
    lams = enumerate_partitions(n)
    lhs = sum(lam.multiplicity(j) for lam in lams)
    rhs = sum(o_p(m // j, p) for lam in lams for i, m in lam.multiplicities.items() if i % p)
    return lhs, rhs
