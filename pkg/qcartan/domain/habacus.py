"""
The H-abacus (4-bar abacus) of a strict partition at p = 2.

Positions lie on three runners: the even runner 2, 4, 6, ... (read downward),
the runner of 1 (1, 5, 9, ...) and the runner of 3 (3, 7, 11, ...).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from qcartan.domain.partitions import Partition, enumerate_partitions, enumerate_p_class_regular
from qcartan.domain.qpoly import ProductForm, product
from qcartan.domain.weights import glaisher, w_e, w_g, w_h
from qcartan.exceptions import ValidationException

Move = tuple[str, int]
MoveChooser = Callable[[Sequence[Move]], Move]

MOVE_EVEN_UP = "even-up"
MOVE_REMOVE_TWO = "remove-2"
MOVE_ODD_UP = "odd-up"
MOVE_REMOVE_ONE_THREE = "remove-1-3"


@dataclass(frozen=True)
class HAbacus:
    beads: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def of(cls, lam: Partition) -> HAbacus:
        if not lam.is_strict():
            raise ValidationException(detail=f"The H-abacus needs a strict partition, got {lam}")
        return cls(frozenset(lam.parts))

    def partition(self) -> Partition:
        return Partition.of(self.beads)

    def moves(self) -> list[Move]:
        """Applicable moves in priority order, lowest position first within a kind"""
        beads = self.beads
        moves: list[Move] = []
        moves += [(MOVE_EVEN_UP, b) for b in sorted(beads) if b % 2 == 0 and b >= 4 and b - 2 not in beads]
        if 2 in beads:
            moves.append((MOVE_REMOVE_TWO, 2))
        moves += [(MOVE_ODD_UP, b) for b in sorted(beads) if b % 2 == 1 and b >= 5 and b - 4 not in beads]
        if 1 in beads and 3 in beads:
            moves.append((MOVE_REMOVE_ONE_THREE, 1))
        return moves

    def apply(self, move: Move) -> HAbacus:
        kind, position = move
        beads = set(self.beads)
        if kind == MOVE_EVEN_UP:
            beads.remove(position)
            beads.add(position - 2)
        elif kind == MOVE_REMOVE_TWO:
            beads.remove(2)
        elif kind == MOVE_ODD_UP:
            beads.remove(position)
            beads.add(position - 4)
        elif kind == MOVE_REMOVE_ONE_THREE:
            beads -= {1, 3}
        else:
            raise ValidationException(detail=f"Unknown H-abacus move {kind}")
        return HAbacus(frozenset(beads))


def _first_move(moves: Sequence[Move]) -> Move:
    return moves[0]


def h_core(lam: Partition, chooser: Optional[MoveChooser] = None) -> Partition:
    """Apply moves until a stalemate is reached"""
    choose = chooser or _first_move
    abacus = HAbacus.of(lam)
    while True:
        moves = abacus.moves()
        if not moves:
            return abacus.partition()
        abacus = abacus.apply(choose(moves))


def h_quotient(lam: Partition) -> Partition:
    """
    Runner of 3 read bottom-up (bead -> 0, gap -> 1) followed by the runner of 1
    read top-down (bead -> 1, gap -> 0); each 1 contributes the number of 0s
    to its left.
    """
    abacus = HAbacus.of(lam)
    levels = max(abacus.beads, default=0) // 4 + 1
    sequence = [0 if 3 + 4 * t in abacus.beads else 1 for t in reversed(range(levels))]
    sequence += [1 if 1 + 4 * t in abacus.beads else 0 for t in range(levels)]
    parts = []
    zeros = 0
    for bit in sequence:
        if bit:
            if zeros:
                parts.append(zeros)
        else:
            zeros += 1
    return Partition.of(parts)


def unfold(lam: Partition) -> Partition:
    """Hook lengths of the diagonal cells"""
    return Partition.of(lam.hook_length(i, i) for i in range(1, lam.length + 1) if lam.parts[i - 1] >= i)


def is_h_core(lam: Partition) -> bool:
    return lam.is_strict() and not HAbacus.of(lam).moves()


def h_cores(up_to_size: int) -> list[Partition]:
    """∅, (1, 5, ..., 4m+1) and (3, 7, ..., 4m+3) of size at most up_to_size"""
    cores = [Partition()]
    for start in (1, 3):
        parts: list[int] = []
        while True:
            parts.append(start + 4 * len(parts))
            if sum(parts) > up_to_size:
                break
            cores.append(Partition.of(parts))
    return sorted(cores, key=lambda c: (c.size, c.parts))


def enumerate_strict(n: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(n) if lam.is_strict()]


def enumerate_odd(n: int) -> list[Partition]:
    return enumerate_p_class_regular(n, 2)


def enumerate_odd_strict(n: int) -> list[Partition]:
    return [lam for lam in enumerate_odd(n) if lam.is_strict()]


def quotient_is_bijective(d: int, core: Partition) -> bool:
    """λ -> λ^H[1] maps the odd strict partitions of 4d+|core| with H-core `core` onto P(d)"""
    if not is_h_core(core):
        raise ValidationException(detail=f"{core} is not an H-core")
    sources = [lam for lam in enumerate_odd_strict(4 * d + core.size) if h_core(lam) == core]
    images = [h_quotient(lam) for lam in sources]
    return len(set(images)) == len(images) and set(images) == set(enumerate_partitions(d))


@dataclass
class HAbacusBlock:
    d: int
    members: list[Partition]
    product_w_g: ProductForm
    product_w_e: ProductForm
    multiset_matches: bool

    @property
    def products_match(self) -> bool:
        return self.product_w_g == self.product_w_e


def habacus_block(d: int) -> HAbacusBlock:
    """
    Odd partitions λ of 2d whose Glaisher image has empty H-core, the products of
    w_G and w_E over them, and the multiset comparison {w_E(λ)} = {w_H(μ): μ∈P(d)}.
    """
    if d < 0:
        raise ValidationException(detail=f"d must be non-negative, got {d}")
    members = [lam for lam in enumerate_odd(2 * d) if h_core(glaisher(lam, 2).image).is_empty()]
    by_e = Counter(w_e(lam, 2) for lam in members)
    by_h = Counter(w_h(mu, 2) for mu in enumerate_partitions(d))
    return HAbacusBlock(
        d=d,
        members=members,
        product_w_g=product((w_g(lam, 2) for lam in members), 2),
        product_w_e=product((w_e(lam, 2) for lam in members), 2),
        multiset_matches=by_e == by_h,
    )
