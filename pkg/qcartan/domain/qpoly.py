"""
Exact polynomial arithmetic in q.

QPoly wraps a sympy ``Poly`` over ZZ, LaurentPoly keeps a power of q apart
from a ``Poly`` over QQ with nonzero constant term. ProductForm carries a
product of q-integers [p]_l by its exponent map and expands only on demand.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping
import operator

from sympy import Poly, QQ, ZZ, Rational, Symbol, multiplicity
from sympy.ntheory import digits
from sympy.polys.polyerrors import ExactQuotientFailed

from qcartan.exceptions import ConsistencyException, ValidationException

q = Symbol("q")


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class QPoly:
    """Polynomial in q with integer coefficients"""
    __slots__ = ("poly",)

    def __init__(self, poly: Poly):
        if poly.get_domain() != ZZ:
            poly = poly.set_domain(ZZ)
        self.poly = poly

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> QPoly:
        filtered = {(e,): int(c) for e, c in terms.items() if c}
        if any(e < 0 for (e,) in filtered):
            raise ValidationException(detail="QPoly exponents must be non-negative")
        if not filtered:
            return cls.zero()
        return cls(Poly.from_dict(filtered, q, domain=ZZ))

    @classmethod
    def zero(cls) -> QPoly:
        return cls(Poly(0, q, domain=ZZ))

    @classmethod
    def one(cls) -> QPoly:
        return cls(Poly(1, q, domain=ZZ))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> QPoly:
        return cls.from_terms({exponent: coefficient})

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> QPoly:
        return cls.from_terms({int(e): int(c) for e, c in data})

    def terms(self) -> dict[int, int]:
        """Exponent to coefficient, zeros never included"""
        return {e: int(c) for (e,), c in self.poly.as_dict().items() if c}

    def coefficient(self, exponent: int) -> int:
        return self.terms().get(exponent, 0)

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def is_one(self) -> bool:
        return self.poly.is_one

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return -1 if self.is_zero() else int(self.poly.degree())

    @property
    def low_degree(self) -> int:
        return min(self.terms()) if not self.is_zero() else -1

    def in_q_zq(self) -> bool:
        """True when every exponent is at least 1 (zero included)"""
        return self.is_zero() or self.low_degree >= 1

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self.terms().values())

    def evaluate(self, q0) -> Fraction:
        value = Fraction(q0)
        return sum((Fraction(c) * value ** e for e, c in self.terms().items()), Fraction(0))

    def exquo(self, other: QPoly) -> QPoly:
        """Exact division; a nonzero remainder is a consistency failure"""
        if other.is_zero():
            raise ValidationException(detail="Division by the zero polynomial")
        try:
            return QPoly(self.poly.exquo(other.poly))
        except ExactQuotientFailed:
            raise ConsistencyException(detail=f"{other} does not divide {self} exactly")

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly.from_terms({e: Fraction(c) for e, c in self.terms().items()})

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self.terms().items())]

    def __add__(self, other: QPoly) -> QPoly:
        return QPoly(self.poly + other.poly)

    def __sub__(self, other: QPoly) -> QPoly:
        return QPoly(self.poly - other.poly)

    def __neg__(self) -> QPoly:
        return QPoly(-self.poly)

    def __mul__(self, other: QPoly) -> QPoly:
        return QPoly(self.poly * other.poly)

    def __pow__(self, exponent: int) -> QPoly:
        return QPoly(self.poly ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms() == ({0: other} if other else {})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms().items())))

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        return _render(self.terms())


class LaurentPoly:
    """
    Laurent polynomial in q with rational coefficients, stored as
    q^shift * poly where poly has nonzero constant term (or is zero, shift 0).
    """
    __slots__ = ("shift", "poly")

    def __init__(self, shift: int, poly: Poly):
        if poly.get_domain() != QQ:
            poly = poly.set_domain(QQ)
        if poly.is_zero:
            shift = 0
        else:
            low = min(e for (e,) in poly.monoms())
            if low:
                poly = poly.exquo(Poly(q ** low, q, domain=QQ))
                shift += low
        self.shift = shift
        self.poly = poly

    @classmethod
    def from_terms(cls, terms: Mapping[int, Fraction | int]) -> LaurentPoly:
        filtered = {e: Fraction(c) for e, c in terms.items() if c}
        if not filtered:
            return cls.zero()
        low = min(filtered)
        rep = {(e - low,): Rational(c.numerator, c.denominator) for e, c in filtered.items()}
        return cls(low, Poly.from_dict(rep, q, domain=QQ))

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(0, Poly(0, q, domain=QQ))

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, Poly(1, q, domain=QQ))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Fraction | int = 1) -> LaurentPoly:
        return cls.from_terms({exponent: coefficient})

    def terms(self) -> dict[int, Fraction]:
        return {
            e + self.shift: _to_fraction(c)
            for (e,), c in self.poly.as_dict().items() if c
        }

    def coefficient(self, exponent: int) -> Fraction:
        return self.terms().get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def is_unit(self) -> bool:
        """Units of Q[q, q^-1] are exactly c*q^k with c nonzero"""
        return not self.is_zero() and self.poly.degree() == 0

    @property
    def norm(self) -> int:
        """Euclidean norm: degree of the polynomial part"""
        return -1 if self.is_zero() else int(self.poly.degree())

    @property
    def low_degree(self) -> int:
        return self.shift

    @property
    def high_degree(self) -> int:
        return self.shift + self.norm

    def bar(self) -> LaurentPoly:
        """q -> q^-1"""
        return LaurentPoly.from_terms({-e: c for e, c in self.terms().items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def in_q_zq(self) -> bool:
        terms = self.terms()
        return all(e >= 1 and c.denominator == 1 for e, c in terms.items())

    def to_qpoly(self) -> QPoly:
        terms = self.terms()
        if any(e < 0 or c.denominator != 1 for e, c in terms.items()):
            raise ConsistencyException(detail=f"{self} is not a polynomial with integer coefficients")
        return QPoly.from_terms({e: c.numerator for e, c in terms.items()})

    def evaluate(self, q0) -> Fraction:
        value = Fraction(q0)
        return sum((c * value ** e for e, c in self.terms().items()), Fraction(0))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return _combine(self, other, operator.add)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return _combine(self, other, operator.sub)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.shift, -self.poly)

    def __mul__(self, other: LaurentPoly | Fraction | int) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.monomial(0, other)
        return LaurentPoly(self.shift + other.shift, self.poly * other.poly)

    __rmul__ = __mul__

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by q^k"""
        return LaurentPoly(self.shift + k, self.poly)

    def exquo(self, other: LaurentPoly) -> LaurentPoly:
        quotient, remainder = laurent_divmod(self, other)
        if not remainder.is_zero():
            raise ConsistencyException(detail=f"{other} does not divide {self} exactly")
        return quotient

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms() == ({0: Fraction(other)} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms().items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return _render(self.terms())

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self.terms().items())]


def _combine(a: LaurentPoly, b: LaurentPoly, op) -> LaurentPoly:
    low = min(a.shift, b.shift)
    pa = a.poly * Poly(q ** (a.shift - low), q, domain=QQ)
    pb = b.poly * Poly(q ** (b.shift - low), q, domain=QQ)
    return LaurentPoly(low, op(pa, pb))


def _render(terms: Mapping[int, Fraction | int]) -> str:
    if not terms:
        return "0"
    pieces = []
    for e, c in sorted(terms.items()):
        if e == 0:
            monomial = ""
        elif e == 1:
            monomial = "q"
        else:
            monomial = f"q^{e}"
        if not monomial:
            body = str(abs(c))
        elif abs(c) == 1:
            body = monomial
        else:
            body = f"{abs(c)}*{monomial}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def normalize_unit(a: LaurentPoly) -> LaurentPoly:
    """The associate of a that is a monic polynomial with nonzero constant term"""
    if a.is_zero():
        return a
    return LaurentPoly(0, a.poly.monic())


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero() and b.is_zero():
        raise ValidationException(detail="gcd(0, 0) is undefined")
    if a.is_zero():
        return normalize_unit(b)
    if b.is_zero():
        return normalize_unit(a)
    return LaurentPoly(0, a.poly.gcd(b.poly).monic())


def laurent_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """a = quotient*b + remainder with remainder.norm < b.norm"""
    if b.is_zero():
        raise ValidationException(detail="Division by the zero Laurent polynomial")
    quotient, remainder = a.poly.div(b.poly)
    return LaurentPoly(a.shift - b.shift, quotient), LaurentPoly(a.shift, remainder)


def laurent_divides(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True when a divides b in Q[q, q^-1]"""
    if a.is_zero():
        return b.is_zero()
    return laurent_divmod(b, a)[1].is_zero()


def _require_p(p: int) -> None:
    if p < 2:
        raise ValidationException(detail=f"p must be at least 2, got {p}")


@lru_cache(maxsize=None)
def qint_p(l: int, p: int) -> QPoly:
    """[p]_l = 1 + q^(2l) + ... + q^(2l(p-1))"""
    _require_p(p)
    if l < 1:
        raise ValidationException(detail=f"q-integer index must be positive, got {l}")
    return QPoly.from_terms({2 * l * k: 1 for k in range(p)})


def o_p(m: int, p: int) -> int:
    """Number of base-p digits of m; o_p(0) = 0"""
    _require_p(p)
    if m < 0:
        raise ValidationException(detail=f"o_p is defined for m >= 0, got {m}")
    if m == 0:
        return 0
    return len(digits(m, p)) - 1


def p_part(k: int, p: int) -> int:
    """Classical p-part p^b of k = a*p^b"""
    _require_p(p)
    return p ** multiplicity(p, k)


def factorial_p_part(m: int, p: int) -> int:
    """(m!)_p"""
    return reduce(operator.mul, (p_part(k, p) for k in range(1, m + 1)), 1)


@dataclass(frozen=True, order=True)
class ProductForm:
    """Π_l [p]_l^(e_l), stored as the sorted tuple of (l, e_l) with e_l >= 1"""
    p: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _require_p(self.p)
        if any(l < 1 or e < 1 for l, e in self.factors):
            raise ValidationException(detail=f"Invalid ProductForm factors {self.factors}")

    @classmethod
    def of(cls, p: int, exponents: Mapping[int, int]) -> ProductForm:
        return cls(p, tuple(sorted((l, e) for l, e in exponents.items() if e)))

    @classmethod
    def identity(cls, p: int) -> ProductForm:
        return cls(p)

    @classmethod
    def qint(cls, l: int, p: int, exponent: int = 1) -> ProductForm:
        return cls.of(p, {l: exponent})

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, l: int) -> int:
        return self.exponents.get(l, 0)

    def is_identity(self) -> bool:
        return not self.factors

    @property
    def total_degree(self) -> int:
        return sum(2 * l * (self.p - 1) * e for l, e in self.factors)

    def multiply(self, other: ProductForm) -> ProductForm:
        if self.p != other.p:
            raise ValidationException(detail=f"Cannot multiply ProductForms over p={self.p} and p={other.p}")
        exponents = self.exponents
        for l, e in other.factors:
            exponents[l] = exponents.get(l, 0) + e
        return ProductForm.of(self.p, exponents)

    __mul__ = multiply

    def __pow__(self, k: int) -> ProductForm:
        if k < 0:
            raise ValidationException(detail="ProductForm powers must be non-negative")
        return ProductForm.of(self.p, {l: e * k for l, e in self.factors})

    def expand(self) -> QPoly:
        return _expand(self.p, self.factors)

    def specialize(self, q0) -> Fraction:
        value = Fraction(q0)
        result = Fraction(1)
        for l, e in self.factors:
            result *= sum(value ** (2 * l * k) for k in range(self.p)) ** e
        return result

    def label(self) -> str:
        """Human-readable form "[2]_1^3 [2]_2"; "1" for the identity"""
        if not self.factors:
            return "1"
        return " ".join(
            f"[{self.p}]_{l}" if e == 1 else f"[{self.p}]_{l}^{e}"
            for l, e in self.factors
        )

    def to_json(self) -> dict:
        return {"p": self.p, "factors": {str(l): e for l, e in self.factors}}

    @classmethod
    def from_json(cls, data: Mapping) -> ProductForm:
        return cls.of(int(data["p"]), {int(l): int(e) for l, e in data["factors"].items()})

    def __str__(self) -> str:
        return self.label()


@lru_cache(maxsize=4096)
def _expand(p: int, factors: tuple[tuple[int, int], ...]) -> QPoly:
    result = QPoly.one()
    for l, e in factors:
        result = result * qint_p(l, p) ** e
    return result


def product(forms: Iterable[ProductForm], p: int) -> ProductForm:
    return reduce(ProductForm.multiply, forms, ProductForm.identity(p))


def graded_p_part(k: int, p: int) -> ProductForm:
    """(k)_[p] = [p]_a [p]_(ap) ... [p]_(ap^(b-1)) for k = a*p^b, p not dividing a"""
    _require_p(p)
    if k < 1:
        raise ValidationException(detail=f"graded p-part needs k >= 1, got {k}")
    b = multiplicity(p, k)
    a = k // p ** b
    return ProductForm.of(p, {a * p ** t: 1 for t in range(b)})


@lru_cache(maxsize=None)
def graded_factorial_p_part(m: int, p: int) -> ProductForm:
    """Π_{j=1}^{m} (j)_[p]"""
    if m <= 0:
        return ProductForm.identity(p)
    return graded_factorial_p_part(m - 1, p).multiply(graded_p_part(m, p))


def _qint_times_graded_parts(m: int, p: int) -> ProductForm:
    """Π_{j<=m} [p]_j (j)_[p]"""
    exponents: Counter[int] = Counter()
    for j in range(1, m + 1):
        exponents[j] += 1
        exponents.update(graded_p_part(j, p).exponents)
    return ProductForm.of(p, exponents)


def graded_part_product_sides(m: int, p: int) -> tuple[ProductForm, ProductForm]:
    """Π_j [p]_j^(o_p(m//j)) against Π_j [p]_j (j)_[p], j = 1..m"""
    lhs = ProductForm.of(p, {j: o_p(m // j, p) for j in range(1, m + 1)})
    return lhs, _qint_times_graded_parts(m, p)


def graded_part_telescoping_sides(m: int, p: int) -> tuple[ProductForm, ProductForm]:
    """Π_{j<=m} (j)_[p] against Π_{j<=m//p} [p]_j (j)_[p]"""
    return graded_factorial_p_part(m, p), _qint_times_graded_parts(m // p, p)
