"""
The individual checks behind every verification statement. Each check walks
its parameter range, counts the instances it compared and keeps the first
counterexample as the witness.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from qcartan.domain.determinants import (
    block_exponent,
    block_exponent_digits,
    block_exponent_multiset,
    block_exponent_rational,
    classical_determinant,
    delta,
    delta_block,
    delta_block_by_w_h,
)
from qcartan.domain.fock import DecompositionMatrix, GradedCartan, det_exact
from qcartan.domain.habacus import habacus_block, h_cores, quotient_is_bijective
from qcartan.domain.partitions import (
    alpha,
    beta,
    count_q,
    enumerate_p_class_regular,
    enumerate_p_regular,
    enumerate_q,
)
from qcartan.domain.qpoly import (
    ProductForm,
    graded_part_product_sides,
    graded_part_telescoping_sides,
    product,
)
from qcartan.domain.series import oracle_counts
from qcartan.domain.smith import (
    check_conjecture,
    check_conjecture_blockwise,
    integer_divisor_chain,
    integer_elementary_divisors,
)
from qcartan.domain.weights import (
    cell_weight_by_g,
    diagram_cells,
    glaisher,
    glaisher_exponent_sides,
    multiplicity_sum_sides,
    theta,
    w_e,
    w_g,
    w_h,
    w_h_q,
    weight_multiset,
)


@dataclass
class CheckOutcome:
    checked: int = 0
    witness: Optional[dict[str, Any]] = None

    def record(self, ok: bool, **witness) -> bool:
        self.checked += 1
        if not ok and self.witness is None:
            self.witness = {key: _jsonable(value) for key, value in witness.items()}
        return ok

    @property
    def passed(self) -> bool:
        return self.witness is None


def _jsonable(value):
    if isinstance(value, ProductForm):
        return value.label()
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def graded_part_product(primes: Sequence[int], m_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for m in range(1, m_max + 1):
            lhs, rhs = graded_part_product_sides(m, p)
            outcome.record(lhs == rhs, p=p, m=m, lhs=lhs, rhs=rhs)
    return outcome


def graded_part_telescoping(primes: Sequence[int], m_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for m in range(1, m_max + 1):
            lhs, rhs = graded_part_telescoping_sides(m, p)
            outcome.record(lhs == rhs, p=p, m=m, lhs=lhs, rhs=rhs)
    return outcome


def cardinalities(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            regular = len(enumerate_p_regular(n, p))
            class_regular = len(enumerate_p_class_regular(n, p))
            q_index = count_q(n, p)
            outcome.record(
                regular == class_regular == q_index == len(enumerate_q(n, p)),
                p=p, n=n, regular=regular, class_regular=class_regular, q_index=q_index
            )
    return outcome


def weight_multisets(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            lams = enumerate_p_class_regular(n, p)
            indices = enumerate_q(n, p)
            for lam in lams:
                outcome.record(w_e(lam, p) == w_h(alpha(lam, p), p), p=p, partition=lam, transfer="alpha")
            for qi in indices:
                outcome.record(w_h_q(qi) == w_h(beta(qi), p), p=p, index=str(qi), transfer="beta")
            by_e = weight_multiset(w_e(lam, p) for lam in lams)
            by_h = weight_multiset(w_h_q(qi) for qi in indices)
            outcome.record(by_e == by_h, p=p, n=n, w_E=by_e, w_H_Q=by_h)
    return outcome


def weight_products(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            by_e = product((w_e(lam, p) for lam in enumerate_p_class_regular(n, p)), p)
            by_h = product((w_h_q(qi) for qi in enumerate_q(n, p)), p)
            outcome.record(by_e == by_h, p=p, n=n, w_E=by_e, w_H_Q=by_h)
    return outcome


def determinant_products(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            lams = enumerate_p_class_regular(n, p)
            for lam in lams:
                g = w_g(lam, p)
                outcome.record(glaisher(lam, p).weight() == g, p=p, partition=lam, glaisher=glaisher(lam, p).weight(), w_G=g)
                outcome.record(cell_weight_by_g(lam, p) == g, p=p, partition=lam, cells=cell_weight_by_g(lam, p), w_G=g)
                lost = lam.length - glaisher(lam, p).image.length
                outcome.record(g.specialize(1) == p ** (lost // (p - 1)), p=p, partition=lam, w_G=g, parts_lost=lost)
            expected = delta(n, p)
            by_g = product((w_g(lam, p) for lam in lams), p)
            by_e = product((w_e(lam, p) for lam in lams), p)
            outcome.record(expected == by_g == by_e, p=p, n=n, delta=expected, w_G=by_g, w_E=by_e)
    return outcome


def glaisher_exponents(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            for j in range(1, n + 1):
                if j % p == 0:
                    continue
                k = 1
                while p ** k * j <= n:
                    lhs, rhs = glaisher_exponent_sides(n, p, j, k)
                    outcome.record(lhs == rhs, p=p, n=n, j=j, k=k, lhs=lhs, rhs=rhs)
                    k += 1
    return outcome


def block_exponents(primes: Sequence[int], d_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for d in range(d_max + 1):
            for j in range(1, d + 1):
                values = [
                    block_exponent(j, d, p),
                    block_exponent_rational(j, d, p),
                    block_exponent_multiset(j, d, p),
                    block_exponent_digits(j, d, p),
                ]
                outcome.record(len(set(values)) == 1, p=p, d=d, j=j, values=values)
            expected = delta_block(d, p).value
            by_h = delta_block_by_w_h(d, p)
            outcome.record(expected == by_h, p=p, d=d, delta=expected, w_H=by_h)
    return outcome


def multiplicity_sums(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            for j in range(1, n + 1):
                lhs, rhs = multiplicity_sum_sides(n, p, j)
                outcome.record(lhs == rhs, p=p, n=n, j=j, lhs=lhs, rhs=rhs)
    return outcome


def involution(primes: Sequence[int], n_max: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for n in range(n_max + 1):
            g_values: Counter[int] = Counter()
            e_values: Counter[int] = Counter()
            for cell in diagram_cells(n, p):
                image = theta(cell)
                outcome.record(theta(image) == cell, p=p, cell=cell, image=image, check="theta twice")
                outcome.record(image.e_value() == cell.g_value(), p=p, cell=cell, image=image, check="E(theta) = G")
                g_values[cell.g_value()] += 1
                e_values[cell.e_value()] += 1
            outcome.record(
                ProductForm.of(p, g_values) == ProductForm.of(p, e_values),
                p=p, n=n, by_g=ProductForm.of(p, g_values), by_e=ProductForm.of(p, e_values)
            )
    return outcome


def classical_specialization(p: int, n: int, c: GradedCartan) -> CheckOutcome:
    outcome = CheckOutcome()
    classical = classical_determinant(n, p)
    specialized = delta(n, p).specialize(1)
    outcome.record(specialized == classical, p=p, n=n, delta_at_1=str(specialized), classical=classical)
    at_one = c.at(1)
    determinant = c.determinant().evaluate(1)
    outcome.record(determinant == classical, p=p, n=n, det_at_1=str(determinant), classical=classical)
    divisors = integer_elementary_divisors(at_one)
    expected = integer_divisor_chain(_classical_factors(n, p))
    outcome.record(sorted(divisors) == sorted(expected), p=p, n=n, snf=divisors, expected=expected)
    return outcome


def _classical_factors(n: int, p: int) -> list[int]:
    """Π_i (m_i!)_p for every p-class regular partition of n"""
    return [int(w_e(lam, p).specialize(1)) for lam in enumerate_p_class_regular(n, p)]


def decomposition_matrix(p: int, n: int, decomposition: DecompositionMatrix, c: GradedCartan) -> CheckOutcome:
    outcome = CheckOutcome()
    violations = decomposition.invariant_violations()
    outcome.record(not violations, p=p, n=n, violations=violations[:5])
    outcome.record(c.is_identity_at_zero(), p=p, n=n, check="C_n(0) = E")
    outcome.record(c.is_symmetric(), p=p, n=n, check="symmetry")
    outcome.record(c.cross_block_entries_vanish(), p=p, n=n, check="block diagonal")
    determinant = c.determinant()
    expected = delta(n, p)
    outcome.record(determinant == expected.expand(), p=p, n=n, det=str(determinant), delta=expected)
    return outcome


def block_determinants(p: int, n: int, c: GradedCartan) -> CheckOutcome:
    outcome = CheckOutcome()
    for index, block in c.blocks():
        determinant = block.determinant()
        expected = delta_block(index.weight, p).value
        outcome.record(
            determinant == expected.expand(),
            p=p, n=n, core=index.core, weight=index.weight, det=str(determinant), delta=expected
        )
    return outcome


def habacus_blocks(d: int, c: Optional[GradedCartan]) -> CheckOutcome:
    """The p = 2 block statement at weight d; `c` is C_(2d) at p = 2"""
    outcome = CheckOutcome()
    block = habacus_block(d)
    expected = delta_block(d, 2).value
    outcome.record(block.products_match, d=d, w_G=block.product_w_g, w_E=block.product_w_e)
    outcome.record(block.multiset_matches, d=d, check="{w_E} = {w_H} over the block")
    outcome.record(block.product_w_g == expected, d=d, w_G=block.product_w_g, delta=expected)
    for core in h_cores(3):
        outcome.record(quotient_is_bijective(d, core), d=d, core=core, check="quotient bijection")
    if c is not None:
        for index, cartan_block in c.blocks():
            if index.weight == d and index.core.is_empty():
                determinant = det_exact(cartan_block.entries)
                outcome.record(determinant == expected.expand(), d=d, det=str(determinant), delta=expected)
    return outcome


def elementary_divisors(p: int, n: int, c: GradedCartan) -> CheckOutcome:
    """Comparisons are recorded as differences, never as failures"""
    outcome = CheckOutcome()
    for report in (check_conjecture(n, p, c), check_conjecture_blockwise(n, p, c)):
        for comparison in report.comparisons:
            outcome.record(
                comparison.equal,
                p=p, n=n, blockwise=report.blockwise, lhs=comparison.lhs, rhs=comparison.rhs,
                index=comparison.first_difference,
                lhs_divisors=comparison.lhs_chain.labels(), rhs_divisors=comparison.rhs_chain.labels()
            )
    return outcome


def series(primes: Sequence[int], order: int, fiber_order: int) -> CheckOutcome:
    outcome = CheckOutcome()
    for p in primes:
        for identity in oracle_counts(order, p, fiber_order if p in (2, 3) else None):
            failure = identity.first_failure
            outcome.record(
                identity.passed,
                p=p, identity=identity.name, parameters=identity.parameters, coefficient=failure,
                expected=identity.expected[failure] if failure is not None else None,
                actual=identity.actual[failure] if failure is not None else None
            )
    return outcome
