from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from exactpoly.polyhedron import enumerate_generators, membership_h
from exactpoly.tsp_model import (AssignmentMatrix, InvalidTourError, Tour, TravelLegVector,
                                 ap_index, arc_order, assignment_to_tour, build_ap_hrep,
                                 dummy_extension_collisions, enumerate_tours,
                                 tour_to_assignment, tour_to_tl_vector, verify_theorem1)


@pytest.mark.parametrize("n, order, grid", [
    (4, (2, 1, 3), ((0, 1, 0), (1, 0, 0), (0, 0, 1))),
    (2, (1,), ((1,),)),
    (3, (2, 1), ((0, 1), (1, 0))),
])
def test_tour_to_assignment(n, order, grid):
    w = tour_to_assignment(Tour(n, order))
    assert w.w == grid
    assert w.is_permutation()
    assert assignment_to_tour(w) == Tour(n, order)


def test_invalid_tours():
    with pytest.raises(InvalidTourError):
        Tour(4, (1, 1, 3))
    with pytest.raises(InvalidTourError):
        Tour(3, (0, 1))
    with pytest.raises(InvalidTourError):
        Tour(1, ())


def test_non_permutation_rejected():
    half = Fraction(1, 2)
    with pytest.raises(InvalidTourError):
        assignment_to_tour(AssignmentMatrix(3, ((half, half), (half, half))))
    with pytest.raises(InvalidTourError):
        assignment_to_tour(AssignmentMatrix(3, ((1, 1), (0, 0))))


def test_tour_text_form():
    t = Tour(4, (2, 1, 3))
    assert str(t) == "0 2 1 3 0"
    assert Tour.parse("0 2 1 3 0") == t
    with pytest.raises(InvalidTourError):
        Tour.parse("1 2 0")


@pytest.mark.parametrize("n, vars_, eqs, nonneg", [(3, 4, 4, 4), (2, 1, 2, 1), (5, 16, 8, 16)])
def test_ap_counts(n, vars_, eqs, nonneg):
    h = build_ap_hrep(n)
    assert h.dim == vars_
    assert len(h.equalities) == eqs
    assert len(h.inequalities) == nonneg


def test_ap_n2_single_point():
    assert enumerate_generators(build_ap_hrep(2)).vertices == ((1,),)


def test_ap_rejects_small_n():
    with pytest.raises(ValueError):
        build_ap_hrep(1)


def test_ap_index_row_major():
    assert [ap_index(4, i, s) for i in (1, 2, 3) for s in (1, 2, 3)] == list(range(9))
    assert build_ap_hrep(3).coord_names == ("w1_1", "w1_2", "w2_1", "w2_2")


@pytest.mark.parametrize("n, order, arcs", [
    (3, (1, 2), [(0, 1), (1, 2), (2, 0)]),
    (3, (2, 1), [(0, 2), (1, 0), (2, 1)]),
    (4, (2, 1, 3), [(0, 2), (1, 3), (2, 1), (3, 0)]),
])
def test_travel_legs(n, order, arcs):
    x = tour_to_tl_vector(Tour(n, order))
    assert len(x.x) == n * (n - 1)
    assert x.arcs_used() == arcs


def test_arc_order_lexicographic():
    assert arc_order(3) == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]


@pytest.mark.parametrize("n, count", [(3, 2), (4, 6), (5, 24)])
def test_enumerate_tours(n, count):
    tours = enumerate_tours(n)
    assert len(tours) == count
    assert tours == sorted(tours)


def test_enumerate_tours_cap():
    with pytest.raises(ValueError):
        enumerate_tours(9)
    assert len(enumerate_tours(9, cap=9)) == factorial(8)


@pytest.mark.parametrize("n", range(2, 8))
def test_round_trip_all_tours(n):
    ap = build_ap_hrep(n)
    for t in enumerate_tours(n):
        w = tour_to_assignment(t)
        assert assignment_to_tour(w) == t
        assert membership_h(w.flat(), ap)


@pytest.mark.parametrize("n", range(3, 7))
def test_travel_legs_injective(n):
    vecs = [tour_to_tl_vector(t) for t in enumerate_tours(n)]
    assert len(set(vecs)) == len(vecs)
    for v in vecs:
        assert sum(v.x) == n


@given(st.permutations(list(range(1, 7))))
def test_travel_legs_form_one_cycle(order):
    t = Tour(7, tuple(order))
    succ = dict(tour_to_tl_vector(t).arcs_used())
    seen, city = [], 0
    for _ in range(7):
        seen.append(city)
        city = succ[city]
    assert city == 0 and sorted(seen) == list(range(7))


@pytest.mark.parametrize("n, expected", [(3, 2), (4, 6), (5, 24), (6, 120)])
def test_theorem1(n, expected):
    rep = verify_theorem1(n)
    assert rep.vertex_count == expected
    assert rep.holds


def test_ap_vertices_are_permutation_matrices():
    for p in enumerate_generators(build_ap_hrep(5)).vertices:
        assert all(x.denominator == 1 for x in p)
        assert AssignmentMatrix.from_flat(5, p).is_permutation()


def test_dummy_extension_collides():
    clashes = dummy_extension_collisions(4)
    assert clashes
    # 4! orders of the real cities close into only 3! distinct cycles
    assert len(clashes) == factorial(4) - factorial(3)
    for a, b in clashes:
        assert a != b
        legs_a = set(zip(a, a[1:] + a[:1]))
        legs_b = set(zip(b, b[1:] + b[:1]))
        assert legs_a == legs_b


def test_travel_leg_vector_type():
    v = TravelLegVector(3, (1, 0, 0, 1, 1, 0))
    assert v.arcs_used() == [(0, 1), (1, 2), (2, 0)]
