import pytest

from qcartan.domain.partitions import (
    EMPTY,
    Multipartition,
    Partition,
    QIndex,
    alpha,
    beta,
    count_multipartitions,
    count_p_cores,
    count_partitions,
    count_q,
    enumerate_multipartitions,
    enumerate_p_class_regular,
    enumerate_p_cores,
    enumerate_p_regular,
    enumerate_partitions,
    enumerate_q,
    is_p_core,
    p_core_and_weight,
)
from qcartan.exceptions import ValidationException


def parts(partitions):
    return [lam.parts for lam in partitions]


def test_partitions_of_four_in_reverse_lex_order():
    """Test the enumeration order"""
    assert parts(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_zero():
    assert enumerate_partitions(0) == [EMPTY]


def test_partition_count_thirty():
    assert count_partitions(30) == 5604
    assert len(enumerate_partitions(30)) == 5604


def test_negative_n_rejected():
    with pytest.raises(ValidationException):
        enumerate_partitions(-1)


def test_regular_and_class_regular_five():
    """Test the two partition classes at p = 2"""
    assert set(parts(enumerate_p_regular(5, 2))) == {(5,), (4, 1), (3, 2)}
    assert set(parts(enumerate_p_class_regular(5, 2))) == {(5,), (3, 1, 1), (1, 1, 1, 1, 1)}


def test_classes_of_empty_partition():
    for p in (2, 3, 5):
        assert enumerate_p_regular(0, p) == [EMPTY]
        assert enumerate_p_class_regular(0, p) == [EMPTY]


def test_worked_example_is_class_regular(glaisher_example):
    assert glaisher_example.size == 27
    assert glaisher_example in enumerate_p_class_regular(27, 2)


@pytest.mark.parametrize(
    "lam,p,core,weight",
    [
        ((2, 1), 2, (2, 1), 0),
        ((4, 1, 1), 2, (), 3),
        ((5,), 3, (2,), 1),
    ]
)
def test_core_and_weight(lam, p, core, weight):
    assert p_core_and_weight(Partition(lam), p) == (Partition(core), weight)


def test_core_does_not_depend_on_bead_count():
    lam = Partition((6, 4, 4, 1))
    for p in (2, 3, 4):
        core, weight = p_core_and_weight(lam, p)
        assert is_p_core(core, p)
        assert core.size + p * weight == lam.size


def test_cores():
    assert enumerate_p_cores(0, 2) == [EMPTY]
    assert count_p_cores(0, 3) == 1
    assert enumerate_p_cores(5, 2) == []
    assert count_p_cores(5, 2) == 0
    assert set(parts(enumerate_p_cores(2, 3))) == {(2,), (1, 1)}
    assert count_p_cores(-1, 2) == 0


def test_two_cores_are_staircases():
    for d in range(11):
        expected = 1 if d in (0, 1, 3, 6, 10) else 0
        assert count_p_cores(d, 2) == expected


def test_multipartitions_small():
    assert enumerate_multipartitions(1, 2) == [
        Multipartition((Partition((1,)), EMPTY)),
        Multipartition((EMPTY, Partition((1,)))),
    ]
    assert [mu.components[0] for mu in enumerate_multipartitions(2, 1)] == enumerate_partitions(2)


def test_multipartition_counts():
    assert count_multipartitions(3, 2) == 10
    assert len(enumerate_multipartitions(3, 2)) == 10
    for d in range(7):
        for r in range(4):
            assert count_multipartitions(d, r) == len(enumerate_multipartitions(d, r))


def test_zero_component_multipartitions():
    assert enumerate_multipartitions(0, 0) == [Multipartition(())]
    assert enumerate_multipartitions(2, 0) == []


def test_q_index_three():
    """Test Q_2(3): the 2-core (2,1) and ((1); (1))"""
    indices = enumerate_q(3, 2)
    assert [(qi.mu.to_json(), qi.chi.to_json()) for qi in indices] == [
        ([[]], [2, 1]),
        ([[1]], [1]),
    ]
    assert all(qi.n == 3 for qi in indices)


def test_q_index_empty():
    indices = enumerate_q(0, 3)
    assert len(indices) == 1
    assert indices[0].chi == EMPTY
    assert indices[0].mu.size == 0


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_cardinalities_agree(p):
    for n in range(13):
        assert len(enumerate_p_regular(n, p)) == len(enumerate_p_class_regular(n, p)) == count_q(n, p)


def test_alpha(glaisher_example):
    assert alpha(glaisher_example, 2) == Partition.of([5, 1, 1, 1, 1])
    assert alpha(EMPTY, 2) == EMPTY


def test_alpha_rejects_class_singular():
    with pytest.raises(ValidationException):
        alpha(Partition((2, 1)), 2)


def test_beta_deletes_parts_divisible_by_p():
    qi = QIndex(Multipartition((Partition((4, 2, 1, 1)),)), EMPTY)
    assert qi.p == 2
    assert beta(qi) == Partition((1, 1))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("5,3,1,1", (5, 3, 1, 1)),
        ("[5,3,1,1]", (5, 3, 1, 1)),
        ("1 1 3 5", (5, 3, 1, 1)),
        ("1^2 3 5", (5, 3, 1, 1)),
        ("-", ()),
        ("[]", ()),
        ("", ()),
    ]
)
def test_parse(text, expected):
    assert Partition.parse(text).parts == expected


def test_parse_rejects_garbage():
    with pytest.raises(ValidationException):
        Partition.parse("3,a")
    with pytest.raises(ValidationException):
        Partition.parse("0,1")


def test_parts_must_decrease():
    with pytest.raises(ValidationException):
        Partition((1, 2))


def test_exponent_notation(glaisher_example):
    assert glaisher_example.exponent_notation() == "1^9 3 5^3"
    assert EMPTY.exponent_notation() == "∅"


def test_conjugate_and_hooks():
    lam = Partition((4, 2, 1))
    assert lam.conjugate() == Partition((3, 2, 1, 1))
    assert lam.hook_length(1, 1) == 6
    assert sorted(lam.hook_lengths()) == [1, 1, 1, 2, 3, 4, 6]


def test_beta_numbers_round_trip():
    lam = Partition((4, 2, 1))
    assert lam.beta_numbers() == [6, 3, 1]
    assert Partition.from_beta_numbers(lam.beta_numbers(5)) == lam


def test_addable_and_removable_nodes():
    lam = Partition((2, 1))
    assert lam.addable_nodes() == [(1, 3), (2, 2), (3, 1)]
    assert lam.removable_nodes() == [(1, 2), (2, 1)]


def test_dominance():
    assert Partition((3, 1)).dominates(Partition((2, 2)))
    assert not Partition((2, 2)).dominates(Partition((3, 1)))
    assert not Partition((3, 1, 1, 1)).dominates(Partition((2, 2, 2)))
