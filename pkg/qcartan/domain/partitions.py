"""
Integer partitions, multipartitions, p-cores and the index set Q_p(n).

All list-returning enumerations are deterministic. Partitions of a fixed size
come in reverse-lexicographic order on their part lists, e.g. for n = 4:
(4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping
import json
import re

from qcartan.exceptions import ValidationException


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers"""
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any((not isinstance(x, int)) or x < 1 for x in parts):
            raise ValidationException(detail=f"Partition parts must be positive integers, got {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationException(detail=f"Partition parts must be weakly decreasing, got {list(parts)}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from parts in any order"""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> Partition:
        parts: list[int] = []
        for part, count in multiplicities.items():
            if count < 0:
                raise ValidationException(detail=f"Negative multiplicity {count} for part {part}")
            parts.extend([part] * count)
        return cls.of(parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """
        Parse "5,3,1,1", "[5,3,1,1]", "5 3 1 1" or exponent notation "1^9 3 5^3".
        "", "-", "[]" and "()" give the empty partition.
        """
        cleaned = text.strip()
        if cleaned in ("", "-", "[]", "()", "∅"):
            return cls()
        if "^" in cleaned:
            counts: Counter[int] = Counter()
            for token in cleaned.replace(",", " ").split():
                base, _, exponent = token.partition("^")
                try:
                    counts[int(base)] += int(exponent) if exponent else 1
                except ValueError:
                    raise ValidationException(detail=f"Cannot parse partition token {token!r}")
            return cls.from_multiplicities(counts)
        if cleaned.startswith("["):
            try:
                values = json.loads(cleaned)
            except json.JSONDecodeError:
                raise ValidationException(detail=f"Cannot parse partition {text!r}")
            return cls.of(int(v) for v in values)
        tokens = [t for t in re.split(r"[\s,()]+", cleaned) if t]
        try:
            return cls.of(int(t) for t in tokens)
        except ValueError:
            raise ValidationException(detail=f"Cannot parse partition {text!r}")

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> Mapping[int, int]:
        return dict(Counter(self.parts))

    def multiplicity(self, i: int) -> int:
        return self.multiplicities.get(i, 0)

    def is_empty(self) -> bool:
        return not self.parts

    def is_p_regular(self, p: int) -> bool:
        return all(m < p for m in self.multiplicities.values())

    def is_p_class_regular(self, p: int) -> bool:
        return all(part % p != 0 for part in self.multiplicities)

    def is_strict(self) -> bool:
        return self.is_p_regular(2)

    def __add__(self, other: Partition) -> Partition:
        """Concatenation (union of parts)"""
        return Partition.of(self.parts + other.parts)

    def without_parts(self, part: int, count: int) -> Partition:
        """Remove `count` copies of `part`"""
        if self.multiplicity(part) < count:
            raise ValidationException(detail=f"{self} has fewer than {count} parts equal to {part}")
        counts = dict(self.multiplicities)
        counts[part] -= count
        return Partition.from_multiplicities(counts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x >= c) for c in range(1, self.parts[0] + 1)))

    def hook_length(self, row: int, col: int) -> int:
        """Hook length of the cell (row, col), 1-based"""
        arm = self.parts[row - 1] - col
        leg = sum(1 for x in self.parts[row:] if x >= col)
        return arm + leg + 1

    def hook_lengths(self) -> list[int]:
        return [self.hook_length(r, c) for r, c in self.cells()]

    def cells(self) -> Iterator[tuple[int, int]]:
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield row, col

    def beta_numbers(self, length: int | None = None) -> list[int]:
        """First-column hook lengths, padded to `length` beads"""
        beads = self.length if length is None else length
        if beads < self.length:
            raise ValidationException(detail=f"Need at least {self.length} beads for {self}")
        padded = self.parts + (0,) * (beads - self.length)
        return [padded[i] + beads - 1 - i for i in range(beads)]

    @classmethod
    def from_beta_numbers(cls, betas: Iterable[int]) -> Partition:
        ordered = sorted(betas, reverse=True)
        beads = len(ordered)
        return cls(tuple(x for x in (ordered[i] - (beads - 1 - i) for i in range(beads)) if x > 0))

    def addable_nodes(self) -> list[tuple[int, int]]:
        """Addable nodes (row, col), top row first"""
        nodes = []
        padded = self.parts + (0,)
        for row, length in enumerate(padded, start=1):
            if row == 1 or padded[row - 2] > length:
                nodes.append((row, length + 1))
        return nodes

    def removable_nodes(self) -> list[tuple[int, int]]:
        """Removable nodes (row, col), top row first"""
        nodes = []
        padded = self.parts + (0,)
        for row in range(1, self.length + 1):
            if padded[row - 1] > padded[row]:
                nodes.append((row, padded[row - 1]))
        return nodes

    def add_nodes(self, nodes: Iterable[tuple[int, int]]) -> Partition:
        parts = list(self.parts)
        for row, _ in sorted(nodes):
            if row > len(parts):
                parts.append(0)
            parts[row - 1] += 1
        return Partition(tuple(parts))

    def dominates(self, other: Partition) -> bool:
        """Dominance order on partitions of the same size"""
        total_self = total_other = 0
        for i in range(max(self.length, other.length)):
            total_self += self.parts[i] if i < self.length else 0
            total_other += other.parts[i] if i < other.length else 0
            if total_self < total_other:
                return False
        return True

    def exponent_notation(self) -> str:
        """Render as "1^9 3 5^3" (ascending parts)"""
        if not self.parts:
            return "∅"
        return " ".join(
            str(part) if count == 1 else f"{part}^{count}"
            for part, count in sorted(self.multiplicities.items())
        )

    def to_json(self) -> list[int]:
        return list(self.parts)

    def key(self) -> str:
        """Compact string key used in JSON objects"""
        return ",".join(map(str, self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition()


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def r(self) -> int:
        return len(self.components)

    def to_json(self) -> list[list[int]]:
        return [c.to_json() for c in self.components]

    def __str__(self) -> str:
        return "(" + "; ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class BlockIndex:
    core: Partition
    weight: int
    p: int

    def __post_init__(self):
        _require_p(self.p)
        if self.weight < 0:
            raise ValidationException(detail=f"Block weight must be non-negative, got {self.weight}")
        if not is_p_core(self.core, self.p):
            raise ValidationException(detail=f"{self.core} is not a {self.p}-core")

    @property
    def n(self) -> int:
        return self.core.size + self.p * self.weight

    def __str__(self) -> str:
        return f"core={self.core} weight={self.weight}"


@dataclass(frozen=True)
class QIndex:
    mu: Multipartition
    chi: Partition

    @property
    def p(self) -> int:
        return self.mu.r + 1

    @property
    def n(self) -> int:
        return self.p * self.mu.size + self.chi.size

    def __str__(self) -> str:
        return f"{self.mu} x {self.chi}"


def _require_p(p: int) -> None:
    if p < 2:
        raise ValidationException(detail=f"p must be at least 2, got {p}")


def _require_n(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValidationException(detail=f"{name} must be non-negative, got {n}")


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            result.append(Partition((first,) + rest.parts))
    return tuple(result)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order"""
    _require_n(n)
    return list(_partitions_bounded(n, n))


def count_partitions(n: int) -> int:
    return len(_partitions_bounded(n, n)) if n >= 0 else 0


def enumerate_p_regular(n: int, p: int) -> list[Partition]:
    _require_p(p)
    return [lam for lam in enumerate_partitions(n) if lam.is_p_regular(p)]


def enumerate_p_class_regular(n: int, p: int) -> list[Partition]:
    _require_p(p)
    return [lam for lam in enumerate_partitions(n) if lam.is_p_class_regular(p)]


def p_core_and_weight(lam: Partition, p: int) -> tuple[Partition, int]:
    """
    Slide every bead of the beta-number abacus to the top of its runner.

    The resulting core does not depend on the order in which p-hooks are
    removed; the weight is (|lam| - |core|) / p.
    """
    _require_p(p)
    runners: dict[int, int] = Counter(b % p for b in lam.beta_numbers())
    packed = [residue + p * level for residue, count in runners.items() for level in range(count)]
    core = Partition.from_beta_numbers(packed)
    return core, (lam.size - core.size) // p


@lru_cache(maxsize=None)
def _core_and_weight_cached(lam: Partition, p: int) -> tuple[Partition, int]:
    return p_core_and_weight(lam, p)


def p_core(lam: Partition, p: int) -> Partition:
    return _core_and_weight_cached(lam, p)[0]


def is_p_core(lam: Partition, p: int) -> bool:
    return all(h % p != 0 for h in lam.hook_lengths())


@lru_cache(maxsize=None)
def _p_cores(d: int, p: int) -> tuple[Partition, ...]:
    return tuple(lam for lam in _partitions_bounded(d, d) if _core_and_weight_cached(lam, p)[1] == 0)


def enumerate_p_cores(d: int, p: int) -> list[Partition]:
    _require_n(d, "d")
    _require_p(p)
    return list(_p_cores(d, p))


def count_p_cores(d: int, p: int) -> int:
    """c_p(d); zero for negative d"""
    if d < 0:
        return 0
    _require_p(p)
    return len(_p_cores(d, p))


def enumerate_multipartitions(d: int, r: int) -> list[Multipartition]:
    """
    All r-tuples of partitions of total size d. The first component's size
    runs from d down to 0; r = 0 yields the empty tuple for d = 0 only.
    """
    _require_n(d, "d")
    _require_n(r, "r")
    return [Multipartition(c) for c in _multipartitions(d, r)]


@lru_cache(maxsize=None)
def _multipartitions(d: int, r: int) -> tuple[tuple[Partition, ...], ...]:
    if r == 0:
        return ((),) if d == 0 else ()
    result = []
    for k in range(d, -1, -1):
        for first in _partitions_bounded(k, k):
            for rest in _multipartitions(d - k, r - 1):
                result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def count_multipartitions(d: int, r: int) -> int:
    """#M_r(d) by the recursion over the size of the first component"""
    if d < 0 or r < 0:
        return 0
    if r == 0:
        return 1 if d == 0 else 0
    return sum(count_partitions(k) * count_multipartitions(d - k, r - 1) for k in range(d + 1))


def enumerate_q(n: int, p: int) -> list[QIndex]:
    """Q_p(n): (p-1)-multipartitions of d times p-cores of n - pd, d ascending"""
    _require_n(n)
    _require_p(p)
    result = []
    for d in range(n // p + 1):
        cores = _p_cores(n - p * d, p)
        for mu in enumerate_multipartitions(d, p - 1):
            for chi in cores:
                result.append(QIndex(mu, chi))
    return result


def count_q(n: int, p: int) -> int:
    return sum(count_multipartitions(d, p - 1) * count_p_cores(n - p * d, p) for d in range(n // p + 1))


def alpha(lam: Partition, p: int) -> Partition:
    """Multiplicities floor(m_i / p) of a p-class regular partition"""
    _require_p(p)
    if not lam.is_p_class_regular(p):
        raise ValidationException(detail=f"{lam} is not {p}-class regular")
    return Partition.from_multiplicities({i: m // p for i, m in lam.multiplicities.items()})


def beta(qi: QIndex) -> Partition:
    """The last component of the multipartition with all parts divisible by p deleted"""
    p = qi.p
    last = qi.mu.components[-1]
    return Partition(tuple(x for x in last.parts if x % p != 0))
