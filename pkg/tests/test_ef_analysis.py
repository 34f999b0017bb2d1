import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exactpoly import fixtures as fx
from exactpoly.ef_analysis import (EQ_AS_TWO, EQ_SEPARATE, FIORINI_EXISTS, FIORINI_MAP,
                                   STANDARD, LinearMap, count_inequalities, fit_linear_map,
                                   image_under_map, is_degenerate_ef, is_ef_exists,
                                   is_ef_linear_map, is_ef_standard, lifts)
from exactpoly.exact_arith import DimensionError, RatMatrix
from exactpoly.polyhedron import (EmptyPolyhedronError, enumerate_generators, membership_h,
                                  membership_v, polyhedra_equal, remove_redundancy)
from exactpoly.projection import project_v
from exactpoly.representations import HPolyhedron, VPolyhedron, eq, ge, le

from conftest import random_bounded, random_general

R3 = VPolyhedron.whole_space(3)
DIAG = HPolyhedron(2, (eq((1, -1), 0), ge((0, 1), 0), le((0, 1), 1)))
UNIT = VPolyhedron(1, ((0,), (1,)))


def scaled_pi(k):
    return LinearMap(RatMatrix.from_rows([[0, 0, 0, 4 * k], [0, 0, 0, 5 * k], [0, 0, 0, 3 * k]]))


# -- standard ---------------------------------------------------------------------

def test_standard_fails_on_counterexample():
    v = is_ef_standard(fx.Q_H, fx.P_V, fx.Q_X_COORDS)
    assert v.definition == STANDARD and not v.holds
    w = v.witness
    assert lifts(fx.Q_H, fx.Q_X_COORDS, w)
    assert not membership_v(w, fx.P_V)


def test_fixed_witness_lifts_and_breaks_equality():
    assert lifts(fx.Q_H, fx.Q_X_COORDS, fx.WITNESS)
    assert not membership_h(fx.WITNESS, fx.P_H_DISPLAY)
    assert not fx.WITNESS_VIOLATED_ROW.satisfied_by(fx.WITNESS)
    # 3·(-50) - 5·100 = -650
    assert fx.WITNESS_VIOLATED_ROW.coeffs == (0, 3, -5)


def test_standard_holds_on_diagonal():
    assert is_ef_standard(DIAG, UNIT, (0,)).holds


def test_standard_holds_against_whole_space():
    assert is_ef_standard(fx.Q_H, R3, fx.Q_X_COORDS).holds


def test_standard_dimension_mismatch():
    with pytest.raises(DimensionError):
        is_ef_standard(fx.Q_H, fx.P_V, (0, 1))


# -- exists -----------------------------------------------------------------------

def test_exists_fails_on_counterexample():
    v = is_ef_exists(fx.Q_H, fx.P_V, fx.Q_X_COORDS)
    assert v.definition == FIORINI_EXISTS and not v.holds
    assert lifts(fx.Q_H, fx.Q_X_COORDS, v.witness) != membership_v(v.witness, fx.P_V)


def test_exists_trivial_and_derived():
    assert is_ef_exists(DIAG, UNIT, (0,)).holds
    assert is_ef_exists(fx.Q_H, R3, fx.Q_X_COORDS).holds


def test_exists_catches_non_liftable_vertex():
    q = HPolyhedron(2, (eq((1, -1), 0), ge((0, 1), 0), le((0, 1), 1)))
    p = VPolyhedron(1, ((0,), (2,)))
    v = is_ef_exists(q, p, (0,))
    assert not v.holds
    assert membership_v(v.witness, p) and not lifts(q, (0,), v.witness)


def test_exists_catches_non_liftable_ray():
    p = VPolyhedron(1, ((0,),), ((1,),))
    v = is_ef_exists(DIAG, p, (0,))
    assert not v.holds
    assert membership_v(v.witness, p) and not lifts(DIAG, (0,), v.witness)


def _pairs():
    rng = random.Random(11)
    out = [(fx.Q_H, fx.P_V, (0, 1, 2)), (fx.Q_H, R3, (0, 1, 2)), (DIAG, UNIT, (0,)),
           (fx.Q_H, fx.P_H_DISPLAY, (0, 1, 2))]
    for _ in range(20):
        dim = rng.randint(2, 4)
        q = random_general(rng, dim, rng.randint(1, 5)) if rng.random() < 0.4 else random_bounded(rng, dim, 10)
        keep = tuple(sorted(rng.sample(range(dim), rng.randint(1, dim - 1))))
        exact = project_v(enumerate_generators(q), keep)
        # half the time perturb the target so the check should fail
        if rng.random() < 0.5 and not exact.is_empty:
            shift = tuple(Fraction(rng.randint(-2, 2)) for _ in keep)
            exact = VPolyhedron(len(keep), tuple(tuple(a + b for a, b in zip(v, shift)) for v in exact.vertices),
                                exact.rays, exact.lineality)
        out.append((q, exact, keep))
    return out


@pytest.mark.parametrize("q, p, keep", _pairs())
def test_definitions_agree(q, p, keep):
    a = is_ef_standard(q, p, keep)
    b = is_ef_exists(q, p, keep)
    assert a.holds == b.holds
    for w in (a.witness, b.witness):
        if w is not None:
            assert lifts(q, keep, w) != membership_v(w, enumerate_generators(p) if isinstance(p, HPolyhedron) else p)


# -- linear-map images --------------------------------------------------------------

def test_image_of_q_is_p():
    img = image_under_map(fx.PI, fx.Q_H)
    assert img == VPolyhedron(3, fx.P_VERTICES)


def test_identity_image():
    ident = LinearMap(RatMatrix.identity(4))
    assert image_under_map(ident, fx.Q_H) == enumerate_generators(fx.Q_H)


def test_zero_image():
    zero = LinearMap(RatMatrix.zeros(3, 4))
    assert image_under_map(zero, fx.Q_H) == VPolyhedron(3, ((0, 0, 0),))


def test_image_dimension_mismatch():
    with pytest.raises(DimensionError):
        image_under_map(LinearMap(RatMatrix.identity(3)), fx.Q_H)


def test_linear_map_verdicts():
    v = is_ef_linear_map(fx.Q_H, fx.P_V, fx.PI)
    assert v.definition == FIORINI_MAP and v.holds and v.witness is fx.PI
    assert not is_ef_linear_map(fx.Q_H, fx.P_V, LinearMap(RatMatrix.zeros(3, 4))).holds


def test_doubled_map_misses_p():
    img = image_under_map(scaled_pi(2), fx.Q_H)
    assert img == VPolyhedron(3, ((16, 20, 12), (24, 30, 18)))
    assert not is_ef_linear_map(fx.Q_H, fx.P_V, scaled_pi(2)).holds


def test_affine_offset():
    shift = LinearMap(RatMatrix.identity(1), (5,))
    assert image_under_map(shift, UNIT) == VPolyhedron(1, ((5,), (6,)))
    with pytest.raises(DimensionError):
        LinearMap(RatMatrix.identity(2), (1,))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=2, max_size=2),
       st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=2, max_size=2))
def test_image_commutes_with_midpoint(rows, pts):
    m = LinearMap(RatMatrix.from_rows(rows))
    a, b = pts
    mid = tuple(Fraction(x + y, 2) for x, y in zip(a, b))
    img_mid = tuple((x + y) / 2 for x, y in zip(m(a), m(b)))
    assert m(mid) == img_mid
    seg = image_under_map(m, VPolyhedron(3, (tuple(a), tuple(b))))
    assert membership_v(img_mid, seg)


# -- map fitting ----------------------------------------------------------------------

def test_fit_reconstructs_pi():
    pairs = [((0, 0, 0, 2), (8, 10, 6)), ((0, 0, 0, 3), (12, 15, 9)),
             ((1, 0, 0, 0), (0, 0, 0)), ((0, 1, 0, 0), (0, 0, 0)), ((0, 0, 1, 0), (0, 0, 0))]
    m = fit_linear_map(pairs)
    assert m.matrix == fx.PI.matrix


def test_fit_identity():
    assert fit_linear_map([((1, 0), (1, 0)), ((0, 1), (0, 1))]).matrix == RatMatrix.identity(2)


def test_fit_inconsistent():
    assert fit_linear_map([((1,), (1,)), ((2,), (3,))]) is None


def test_fit_empty():
    with pytest.raises(ValueError):
        fit_linear_map([])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
                          st.lists(st.integers(-3, 3), min_size=2, max_size=2)),
                min_size=1, max_size=4))
def test_fit_reproduces_pairs(pairs):
    m = fit_linear_map(pairs)
    if m is not None:
        for s, t in pairs:
            assert m(s) == tuple(Fraction(x) for x in t)


# -- degeneracy and counting ------------------------------------------------------------

def test_q_is_degenerate():
    assert is_degenerate_ef(fx.Q_H, fx.Q_X_COORDS)


def test_diagonal_is_not_degenerate():
    assert not is_degenerate_ef(DIAG, (0,))


def test_control_is_not_degenerate():
    h = HPolyhedron(2, (le((1, 0), 5), le((1, 0), 7), ge((0, 1), 2), le((0, 1), 3)))
    assert not is_degenerate_ef(h, (0,))
    assert le((1, 0), 5) in remove_redundancy(h).rows


def test_degenerate_empty():
    with pytest.raises(EmptyPolyhedronError):
        is_degenerate_ef(HPolyhedron(2, (le((0, 1), 0), ge((0, 1), 1))), (0,))


def test_counts():
    assert count_inequalities(fx.Q_H) == 2
    assert count_inequalities(fx.P_H_DISPLAY, EQ_AS_TWO) == 10
    assert count_inequalities(fx.P_H_DISPLAY, EQ_SEPARATE) == (8, 1)
    assert count_inequalities(HPolyhedron(3)) == 0
    with pytest.raises(ValueError):
        count_inequalities(fx.Q_H, "bogus")


def test_map_image_holds_while_projection_fails_and_counts_shrink():
    minimal_q = remove_redundancy(fx.Q_H)
    assert is_ef_linear_map(fx.Q_H, fx.P_V, fx.PI).holds
    assert not is_ef_standard(fx.Q_H, fx.P_V, fx.Q_X_COORDS).holds
    assert count_inequalities(minimal_q) < count_inequalities(fx.P_H_DISPLAY)
    n_le, _ = count_inequalities(minimal_q, EQ_SEPARATE)
    assert n_le < count_inequalities(fx.P_H_DISPLAY, EQ_SEPARATE)[0]
    assert polyhedra_equal(fx.P_H_DISPLAY, fx.P_V)
