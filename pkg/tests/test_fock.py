import pytest

from qcartan.domain.determinants import delta
from qcartan.domain.fock import (
    FockVector,
    apply_f,
    apply_f_divided,
    blocks_partition_labels,
    block_sizes,
    canonical_basis,
    cartan,
    det_exact,
    ladder_sequence,
    ladder_vector,
    residue,
)
from qcartan.domain.partitions import EMPTY, BlockIndex, Partition, enumerate_p_regular
from qcartan.domain.qpoly import LaurentPoly, QPoly
from qcartan.exceptions import NotFoundException, ValidationException


def poly(terms):
    return QPoly.from_terms(terms)


def test_residue():
    assert residue(1, 1, 2) == 0
    assert residue(2, 1, 3) == 2
    assert residue(1, 3, 3) == 2
    with pytest.raises(ValidationException):
        residue(0, 1, 2)


def test_fock_vector_rejects_mixed_sizes():
    with pytest.raises(ValidationException):
        FockVector({Partition((1,)): LaurentPoly.one(), Partition((2,)): LaurentPoly.one()})


def test_fock_vector_arithmetic():
    v = FockVector.basis(Partition((2,)))
    w = FockVector.basis(Partition((1, 1))).scaled(LaurentPoly.monomial(1))
    total = v + w
    assert total.support() == [Partition((2,)), Partition((1, 1))]
    assert (total - w) == v
    assert (v - v).is_zero()


def test_apply_f():
    v = apply_f(FockVector.vacuum(), 0, 2)
    assert v == FockVector.basis(Partition((1,)))
    v = apply_f(v, 1, 2)
    assert v.coefficient(Partition((2,))) == LaurentPoly.one()
    assert v.coefficient(Partition((1, 1))) == LaurentPoly.monomial(1)


def test_divided_power():
    v = apply_f_divided(FockVector.basis(Partition((1,))), 1, 2, 2)
    assert v == FockVector.basis(Partition((2, 1)))
    with pytest.raises(ValidationException):
        apply_f_divided(v, 2, 1, 2)
    with pytest.raises(ValidationException):
        apply_f_divided(v, 0, 0, 2)


def test_ladder_sequences():
    assert ladder_sequence(Partition((2,)), 2) == [(0, 1), (1, 1)]
    assert ladder_sequence(Partition((2, 1)), 2) == [(0, 1), (1, 2)]
    assert ladder_sequence(Partition((3, 1)), 3) == [(0, 1), (2, 1), (1, 1), (2, 1)]
    assert ladder_sequence(EMPTY, 2) == []
    with pytest.raises(ValidationException):
        ladder_sequence(Partition((1, 1)), 2)


def test_ladder_vector_leading_term():
    for mu in enumerate_p_regular(6, 3):
        assert ladder_vector(mu, 3).coefficient(mu) == LaurentPoly.one()


def test_decomposition_two():
    d = canonical_basis(2, 2)
    assert d.cols == [Partition((2,))]
    assert d.entry(Partition((2,)), Partition((2,))) == 1
    assert d.entry(Partition((1, 1)), Partition((2,))) == poly({1: 1})
    assert d.at(1) == [[1], [1]]


def test_decomposition_three():
    d = canonical_basis(3, 2)
    three, two_one, ones = Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))
    assert d.column(three) == {three: QPoly.one(), ones: poly({1: 1})}
    assert d.column(two_one) == {two_one: QPoly.one()}
    assert d.entry(two_one, three).is_zero()
    with pytest.raises(NotFoundException):
        d.column(ones)


def test_decomposition_of_empty_partition():
    d = canonical_basis(0, 3)
    assert d.cols == [EMPTY]
    assert cartan(d).entries == [[QPoly.one()]]


@pytest.mark.parametrize("p,n", [(2, 6), (3, 6), (5, 5)])
def test_decomposition_invariants(p, n):
    assert canonical_basis(n, p).invariant_violations() == []


def test_cartan_two():
    c = cartan(canonical_basis(2, 2))
    assert c.entries == [[poly({0: 1, 2: 1})]]
    assert c.determinant() == delta(2, 2).expand()


@pytest.mark.parametrize("p,n", [(2, 4), (2, 6), (3, 6), (5, 5)])
def test_cartan_determinant_is_delta(p, n):
    c = cartan(canonical_basis(n, p))
    assert c.is_symmetric()
    assert c.is_identity_at_zero()
    assert c.cross_block_entries_vanish()
    assert blocks_partition_labels(c)
    assert c.determinant() == delta(n, p).expand()


def test_cartan_blocks():
    c = cartan(canonical_basis(5, 2))
    indices = c.block_indices()
    assert [(b.core, b.weight) for b in indices] == [(Partition((2, 1)), 1), (Partition((1,)), 2)]
    sizes = block_sizes(c)
    assert sum(sizes.values()) == c.size
    block = c.block(BlockIndex(Partition((1,)), 2, 2))
    assert all(mu.size == 5 for mu in block.labels)
    with pytest.raises(NotFoundException):
        c.block(BlockIndex(Partition((1,)), 1, 2))


def test_det_exact_with_pivoting():
    zero, one = QPoly.zero(), QPoly.one()
    assert det_exact([[zero, one], [one, zero]]) == -1
    assert det_exact([]) == 1
    with pytest.raises(ValidationException):
        det_exact([[one, zero]])
