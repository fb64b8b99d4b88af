"""
Truncated integer power series and the generating-function oracles that
cross-check every enumeration count.

A series of order N holds the coefficients of x^0 .. x^N; higher coefficients
are unknown, never zero, and asking for one is an error.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Sequence

from qcartan.domain.determinants import block_exponent, total_exponent, total_exponent_enumerative
from qcartan.domain.partitions import (
    Partition,
    alpha,
    beta,
    count_multipartitions,
    count_p_cores,
    count_partitions,
    count_q,
    enumerate_p_class_regular,
    enumerate_p_regular,
    enumerate_partitions,
    enumerate_q,
)
from qcartan.exceptions import ValidationException

DEFAULT_ORDER = 40


class TruncatedSeries:
    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[int], order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValidationException(detail=f"Series order must be non-negative, got {order}")
        coefficients = [int(c) for c in coefficients[: order + 1]]
        self.coefficients = coefficients + [0] * (order + 1 - len(coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        if k < 0:
            raise ValidationException(detail=f"Monomial exponent must be non-negative, got {k}")
        return cls([0] * k + [1], order)

    @classmethod
    def from_counts(cls, count: Callable[[int], int], order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls([count(n) for n in range(order + 1)], order)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise ValidationException(detail=f"Coefficient x^{n} lies past the truncation order {self.order}")
        return self.coefficients[n]

    def _common_order(self, other: TruncatedSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = self._common_order(other)
        return TruncatedSeries([self[n] + other[n] for n in range(order + 1)], order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = self._common_order(other)
        return TruncatedSeries([self[n] - other[n] for n in range(order + 1)], order)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = self._common_order(other)
        result = [0] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a:
                for j in range(order + 1 - i):
                    result[i + j] += a * other.coefficients[j]
        return TruncatedSeries(result, order)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant term must be a unit of Z"""
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise ValidationException(detail=f"Series with constant term {c0} is not invertible over Z")
        result = [0] * (self.order + 1)
        result[0] = c0
        for n in range(1, self.order + 1):
            total = sum(self.coefficients[k] * result[n - k] for k in range(1, n + 1))
            result[n] = -total * c0
        return TruncatedSeries(result, self.order)

    def __pow__(self, k: int) -> TruncatedSeries:
        base = self if k >= 0 else self.inverse()
        result = TruncatedSeries.one(self.order)
        for _ in range(abs(k)):
            result = result * base
        return result

    def substitute_xp(self, p: int) -> TruncatedSeries:
        """x -> x^p"""
        if p < 1:
            raise ValidationException(detail=f"Substitution power must be positive, got {p}")
        result = [0] * (self.order + 1)
        for n in range(self.order // p + 1):
            result[n * p] = self.coefficients[n]
        return TruncatedSeries(result, self.order)

    def shifted(self, k: int) -> TruncatedSeries:
        """Multiply by x^k"""
        return self * TruncatedSeries.monomial(k, self.order)

    def first_mismatch(self, values: Sequence[int]) -> Optional[int]:
        for n in range(min(len(values), self.order + 1)):
            if self.coefficients[n] != values[n]:
                return n
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coefficients}, order={self.order})"


def phi(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Π_{n>=1} (1 - x^n) to order N"""
    result = TruncatedSeries.one(order)
    for n in range(1, order + 1):
        result = result * (TruncatedSeries.one(order) - TruncatedSeries.monomial(n, order))
    return result


def geometric(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """1 / (1 - x^k)"""
    return TruncatedSeries([1 if n % k == 0 else 0 for n in range(order + 1)], order)


def class_regular_series(p: int, order: int) -> TruncatedSeries:
    """φ(x^p) / φ(x)"""
    f = phi(order)
    return f.substitute_xp(p) * f.inverse()


def convolve_spaced(a: TruncatedSeries, b: TruncatedSeries, p: int) -> TruncatedSeries:
    """(Σ a(n) x^(pn)) (Σ b(n) x^n): counts of the union over k of A(k) x B(n - pk)"""
    return a.substitute_xp(p) * b


@dataclass
class SeriesIdentity:
    name: str
    p: int
    order: int
    expected: list[int]
    actual: list[int]
    parameters: dict = field(default_factory=dict)

    @property
    def first_failure(self) -> Optional[int]:
        for n, (e, a) in enumerate(zip(self.expected, self.actual)):
            if e != a:
                return n
        return None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def _identity(name: str, p: int, series: TruncatedSeries, counts: Sequence[int], **parameters) -> SeriesIdentity:
    return SeriesIdentity(
        name=name,
        p=p,
        order=series.order,
        expected=list(series.coefficients),
        actual=list(counts),
        parameters=parameters,
    )


def fiber_counts(p: int, order: int) -> tuple[dict[Partition, list[int]], dict[Partition, list[int]]]:
    """#alpha^-1(ν) over P_(p)(n) and #beta^-1(ν) over Q_p(n), for every ν and n <= order"""
    alpha_counts: dict[Partition, list[int]] = defaultdict(lambda: [0] * (order + 1))
    beta_counts: dict[Partition, list[int]] = defaultdict(lambda: [0] * (order + 1))
    for n in range(order + 1):
        for nu, count in Counter(alpha(lam, p) for lam in enumerate_p_class_regular(n, p)).items():
            alpha_counts[nu][n] = count
        for nu, count in Counter(beta(qi) for qi in enumerate_q(n, p)).items():
            beta_counts[nu][n] = count
    return dict(alpha_counts), dict(beta_counts)


def fiber_identities(p: int, order: int) -> list[SeriesIdentity]:
    """Both fiber counts against x^(p|ν|) φ(x^p)^2 / (φ(x) φ(x^(p^2)))"""
    f = phi(order)
    base = f.substitute_xp(p) ** 2 * f.inverse() * f.substitute_xp(p * p).inverse()
    alpha_counts, beta_counts = fiber_counts(p, order)
    identities = []
    for nu in sorted(set(alpha_counts) | set(beta_counts), key=lambda lam: (lam.size, lam.parts)):
        if p * nu.size > order:
            continue
        closed = base.shifted(p * nu.size)
        zeros = [0] * (order + 1)
        identities.append(_identity("alpha-fibers", p, closed, alpha_counts.get(nu, zeros), nu=nu.to_json()))
        identities.append(_identity("beta-fibers", p, closed, beta_counts.get(nu, zeros), nu=nu.to_json()))
    return identities


@lru_cache(maxsize=None)
def _multiplicity_totals(k: int) -> Counter:
    """Σ_{λ∈P(k)} m_i(λ) for every part i"""
    totals: Counter = Counter()
    for lam in enumerate_partitions(k):
        totals.update(lam.multiplicities)
    return totals


def _last_component_multiplicity_sum(j: int, d: int, p: int) -> int:
    """Σ over (p-1)-multipartitions of d of m_j(last component), by the size of that component"""
    return sum(count_multipartitions(d - k, p - 2) * _multiplicity_totals(k)[j] for k in range(j, d + 1))


def oracle_counts(order: int, p: int, fiber_order: Optional[int] = None) -> list[SeriesIdentity]:
    """Every closed-form generating function against direct enumeration"""
    if p < 2:
        raise ValidationException(detail=f"p must be at least 2, got {p}")
    f = phi(order)
    f_inverse = f.inverse()
    ns = range(order + 1)
    cores = TruncatedSeries.from_counts(lambda n: count_p_cores(n, p), order)
    multipartitions = TruncatedSeries.from_counts(lambda n: count_multipartitions(n, p - 1), order)
    identities = [
        _identity("partitions", p, f_inverse, [count_partitions(n) for n in ns]),
        _identity("class-regular", p, class_regular_series(p, order),
                  [len(enumerate_p_class_regular(n, p)) for n in ns]),
        _identity("regular", p, class_regular_series(p, order), [len(enumerate_p_regular(n, p)) for n in ns]),
        _identity("multipartitions", p, f_inverse ** p, [count_multipartitions(n, p) for n in ns]),
        _identity("cores", p, f.substitute_xp(p) ** p * f_inverse, cores.coefficients),
        _identity("q-index", p, convolve_spaced(multipartitions, cores, p), [count_q(n, p) for n in ns]),
        _identity("q-index-closed-form", p, class_regular_series(p, order), [count_q(n, p) for n in ns]),
    ]
    geometric_regular = TruncatedSeries.one(order)
    for k in range(1, order + 1):
        if k % p:
            geometric_regular = geometric_regular * geometric(k, order)
    for j in range(1, order // p + 1):
        closed = (geometric(j * p, order) - TruncatedSeries.one(order)) * geometric_regular
        identities.append(_identity("total-exponent", p, closed, [total_exponent(j, n, p) for n in ns], j=j))
        identities.append(_identity(
            "total-exponent-enumerative", p, closed, [total_exponent_enumerative(j, n, p) for n in ns], j=j
        ))
    for j in range(1, order + 1):
        closed = (geometric(j, order) - TruncatedSeries.one(order)) * f_inverse ** (p - 1)
        identities.append(_identity(
            "block-exponent-multiset", p, closed,
            [_last_component_multiplicity_sum(j, d, p) for d in ns], j=j
        ))
        identities.append(_identity("block-exponent", p, closed, [block_exponent(j, d, p) for d in ns], j=j))
    if fiber_order:
        identities.extend(fiber_identities(p, min(order, fiber_order)))
    return identities
