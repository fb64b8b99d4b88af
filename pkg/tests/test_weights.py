from collections import Counter
import random

import pytest

from qcartan.domain.partitions import (
    EMPTY,
    Multipartition,
    Partition,
    QIndex,
    alpha,
    enumerate_p_class_regular,
    enumerate_q,
)
from qcartan.domain.qpoly import ProductForm, product
from qcartan.domain.weights import (
    DiagramCell,
    cell_weight_by_g,
    diagram,
    diagram_cells,
    diagram_cells_of,
    glaisher,
    glaisher_exponent_sides,
    glaisher_weight,
    multiplicity_sum_sides,
    theta,
    w_e,
    w_g,
    w_h,
    w_h_q,
    weight_multiset,
)
from qcartan.exceptions import ValidationException

MIXED = Partition.parse("1^4 2^3 4 5^2")


def form(**exponents):
    return ProductForm.of(2, {int(k[1:]): e for k, e in exponents.items()})


def test_w_e():
    assert w_e(MIXED, 2) == form(l1=3, l2=1)
    assert w_e(EMPTY, 2).is_identity()


def test_w_e_worked_example(glaisher_example):
    assert w_e(glaisher_example, 2) == form(l1=4, l2=2, l3=1, l4=1)


def test_w_h():
    assert w_h(MIXED, 2) == form(l1=5, l2=3, l3=1, l4=1)
    assert w_h(Partition((1, 1)), 2) == form(l1=2, l2=1)
    assert w_h(Partition((2, 2)), 2).is_identity()


def test_w_h_of_q_index():
    qi = QIndex(Multipartition((Partition((1, 1)),)), EMPTY)
    assert w_h_q(qi) == form(l1=2, l2=1)


def test_glaisher_worked_example(glaisher_example):
    result = glaisher(glaisher_example, 2)
    assert result.image == Partition((10, 8, 5, 3, 1))
    assert dict(result.step_counts) == {1: 4, 2: 2, 4: 1, 5: 1}
    assert result.total_steps == 8
    assert result.weight() == form(l1=4, l2=2, l4=1, l5=1)


def test_glaisher_order_independent(glaisher_example):
    first = glaisher(glaisher_example, 2)
    last = glaisher(glaisher_example, 2, chooser=lambda applicable: applicable[-1])
    assert first.image == last.image
    assert dict(first.step_counts) == dict(last.step_counts)


def test_glaisher_rejects_inapplicable_step():
    with pytest.raises(ValidationException):
        glaisher(Partition((1, 1)), 2, chooser=lambda applicable: 7)


def test_glaisher_image_is_regular():
    for p in (2, 3):
        for lam in enumerate_p_class_regular(10, p):
            image = glaisher(lam, p).image
            assert image.size == 10
            assert image.is_p_regular(p)


def test_w_g(glaisher_example):
    assert w_g(glaisher_example, 2) == form(l1=4, l2=2, l4=1, l5=1)
    with pytest.raises(ValidationException):
        w_g(Partition((2,)), 2)


def test_w_g_is_glaisher_weight():
    for p in (2, 3):
        for lam in enumerate_p_class_regular(12, p):
            assert w_g(lam, p) == glaisher_weight(lam, p)


def test_w_g_at_one_counts_lost_parts(glaisher_example):
    """Test w_G(1) = p^((l(λ) - l(image)) / (p - 1))"""
    image = glaisher(glaisher_example, 2).image
    assert image.length == 5
    assert w_g(glaisher_example, 2).specialize(1) == 2 ** 8
    for p in (2, 3, 5):
        for lam in enumerate_p_class_regular(10, p):
            lost = lam.length - glaisher(lam, p).image.length
            assert w_g(lam, p).specialize(1) == p ** (lost // (p - 1))


def test_diagram_of_worked_example(glaisher_example):
    cells = diagram(glaisher_example, 2, 1)
    assert cells == [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 4), (2, 4)]
    decorated = [DiagramCell(glaisher_example, 1, j, k, 2) for j, k in cells]
    assert sorted(c.g_value() for c in decorated) == [1, 1, 1, 1, 2, 2, 4]
    assert [c.e_value() for c in decorated] == [1, 2, 1, 3, 4, 2, 1]


def test_diagram_rejects_index_divisible_by_p(glaisher_example):
    with pytest.raises(ValidationException):
        diagram(glaisher_example, 2, 2)


def test_cell_weight_by_g(glaisher_example):
    assert cell_weight_by_g(glaisher_example, 2) == w_g(glaisher_example, 2)


def test_diagram_cell_validation(glaisher_example):
    with pytest.raises(ValidationException):
        DiagramCell(glaisher_example, 1, 0, 5, 2)
    with pytest.raises(ValidationException):
        DiagramCell(glaisher_example, 1, 1, 3, 2)


def test_theta_swaps_labels(glaisher_example):
    cell = DiagramCell(glaisher_example, 5, 0, 1, 2)
    image = theta(cell)
    assert image.partition == Partition.parse("1^19 3 5")
    assert (image.i, image.j, image.k) == (1, 0, 5)
    assert (image.g_value(), image.e_value()) == (cell.e_value(), cell.g_value())
    assert theta(image) == cell


@pytest.mark.parametrize("p", [2, 3])
def test_theta_is_an_involution(p):
    cells = list(diagram_cells(9, p))
    assert cells
    for cell in cells:
        image = theta(cell)
        assert theta(image) == cell
        assert image.partition.size == 9


def test_g_and_e_multisets_agree():
    for p in (2, 3):
        for n in range(1, 11):
            cells = list(diagram_cells(n, p))
            assert Counter(c.g_value() for c in cells) == Counter(c.e_value() for c in cells)


def test_weight_multisets_over_q_index():
    """{w_E} over class regular partitions against {w_H} over Q_p(n)"""
    for p in (2, 3):
        for n in range(10):
            by_e = weight_multiset(w_e(lam, p) for lam in enumerate_p_class_regular(n, p))
            by_h = weight_multiset(w_h_q(qi) for qi in enumerate_q(n, p))
            assert by_e == by_h


def test_glaisher_exponents():
    for p in (2, 3):
        for n in range(1, 10):
            for j in (1, 2, 4, 5):
                if j % p == 0:
                    continue
                for k in (1, 2):
                    lhs, rhs = glaisher_exponent_sides(n, p, j, k)
                    assert lhs == rhs


def test_glaisher_exponents_reject_j_divisible_by_p():
    with pytest.raises(ValidationException):
        glaisher_exponent_sides(4, 2, 2, 1)


def test_multiplicity_sums():
    for p in (2, 3, 5):
        for n in range(1, 12):
            for j in range(1, n + 1):
                lhs, rhs = multiplicity_sum_sides(n, p, j)
                assert lhs == rhs


def test_diagram_cells_of_skips_parts_divisible_by_p():
    lam = Partition.parse("3^3 1")
    assert [(c.i, c.j, c.k) for c in diagram_cells_of(lam, 3)] == []
    assert [(c.i, c.j, c.k) for c in diagram_cells_of(lam, 2)] == [(3, 0, 1)]


def test_alpha_transfer(glaisher_example):
    assert w_e(glaisher_example, 2) == w_h(alpha(glaisher_example, 2), 2)
    for p in (2, 3):
        for lam in enumerate_p_class_regular(9, p):
            assert w_e(lam, p) == w_h(alpha(lam, p), p)


def test_weight_products_agree():
    for p in (2, 3):
        for n in range(11):
            lams = enumerate_p_class_regular(n, p)
            assert product((w_e(lam, p) for lam in lams), p) == product((w_g(lam, p) for lam in lams), p)


@pytest.mark.parametrize("p,n_max", [(2, 30), (3, 20)])
def test_glaisher_random_order(p, n_max):
    """Test random step orders give the same image and step counts"""
    rng = random.Random(20 + p)
    for n in range(n_max + 1):
        for lam in enumerate_p_class_regular(n, p):
            first = glaisher(lam, p)
            shuffled = glaisher(lam, p, chooser=lambda applicable: rng.choice(applicable))
            assert shuffled.image == first.image
            assert dict(shuffled.step_counts) == dict(first.step_counts)
