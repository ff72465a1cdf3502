import pytest
from hypothesis import given, strategies as st

from splitloci.ffield import FieldError, make_field
from splitloci.loci import F2_integer, F2_mod5_display
from splitloci.wpoly import (
    UNDEFINED_DEGREE, PolyError, WPolynomial, build_poly, dumps, loads, poly_combine, poly_equal,
    reduce_mod, weighted_degree, wpartial,
)

W = (2, 4, 6, 10)


def gens(f=None, weights=W):
    return [WPolynomial.variable(i, weights, f) for i in range(len(weights))]


def test_build_single_term():
    P = build_poly([((0, 0, 0, 3), -125971200000)], W)
    assert len(P) == 1
    assert weighted_degree(P).degree == 30


def test_build_coalesces_to_zero():
    P = build_poly([((1, 0, 0, 0), 3), ((1, 0, 0, 0), -3)], W)
    assert not P
    assert weighted_degree(P).degree is UNDEFINED_DEGREE
    assert not UNDEFINED_DEGREE


def test_build_errors():
    with pytest.raises(PolyError):
        build_poly([((1, 0), 1), ((1, 0, 0), 1)], (1, 1))
    with pytest.raises(PolyError):
        build_poly([((1, 0), 1)], (1, 0))


def test_weighted_degree_examples():
    x, y, _, _ = gens()
    assert weighted_degree(x * y).degree == 6
    wd = weighted_degree(x + y)
    assert not wd.homogeneous
    assert sorted(wd.degrees) == [2, 4]


def test_reduce_mod_examples():
    f3, f5 = make_field(3), make_field(5)
    F2 = F2_integer()
    assert reduce_mod(F2, f5) == F2_mod5_display()
    x, y, _, _ = gens(f3)
    assert reduce_mod(F2, f3) == x * y ** 4 * (2 * x ** 6 + y ** 3)
    assert not reduce_mod(WPolynomial.zero(W), f5)


def test_eval_examples():
    f5 = make_field(5)
    F = reduce_mod(F2_integer(), f5)
    assert F.eval((1, 0, 0, 0)) == 0
    assert F.eval((0, 1, 0, 0)) == 0
    # oracle: sum of all integer coefficients of F2, reduced mod 5
    assert F.eval((1, 1, 1, 1)) == 3
    assert F.eval((1, 1, 1, 1)) == sum(c for _, c in F2_integer()) % 5


def test_eval_mixed_fields():
    F = reduce_mod(F2_integer(), make_field(5))
    with pytest.raises(FieldError):
        F.eval(tuple(make_field(7)(1) for _ in range(4)))


def test_wpartial_examples():
    P = build_poly([((0, 0, 0, 3), -125971200000)], W)
    assert wpartial(P, 3) == build_poly([((0, 0, 0, 2), -377913600000)], W)
    assert not wpartial(P, 0)
    f5 = make_field(5)
    _, y, _, _ = gens(f5)
    assert not wpartial(y ** 5, 1)
    with pytest.raises(PolyError):
        wpartial(P, 4)


def test_poly_combine_and_equal():
    f3 = make_field(3)
    x, y, _, _ = gens(f3)
    a = poly_combine("mul", poly_combine("mul", x, y ** 4), 2 * x ** 6 + y ** 3)
    assert poly_equal(a, reduce_mod(F2_integer(), f3)) == (True, None)
    big = x ** 2 * y ** 12 * (2 * x ** 2 + y) * (x ** 12 + x ** 6 * y ** 3 + y ** 6)
    assert len(big) == 6
    assert not poly_combine("add", a, a.scale(-1))
    ok, where = poly_equal(a, a + x ** 15)
    assert not ok and where == (15, 0, 0, 0)
    with pytest.raises(PolyError):
        poly_combine("add", x, WPolynomial.variable(0, (1, 1, 1, 1), f3))


def test_serialization_round_trip():
    for P in (F2_integer(), F2_mod5_display(), reduce_mod(F2_integer(), make_field(3, 2))):
        assert loads(dumps(P)) == P


def test_loads_comments_and_errors():
    P = loads("# comment\nweights 1 1\n3 1 0\n-3 1 0\n2 0 1 # trailing\n")
    assert P == build_poly([((0, 1), 2)], (1, 1))
    with pytest.raises(PolyError):
        loads("1 2 3\n")


def test_euler_identity_on_F2():
    F = F2_integer()
    acc = WPolynomial.zero(W)
    for i, w in enumerate(W):
        acc = acc + WPolynomial.variable(i, W) * wpartial(F, i).scale(w)
    assert acc == F.scale(30)


def test_partials_are_homogeneous():
    F = F2_integer()
    for i, w in enumerate(W):
        assert weighted_degree(wpartial(F, i)).degree == 30 - w


small_polys = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 3)] * 4), st.integers(-50, 50)), min_size=0, max_size=6,
).map(lambda ts: build_poly(ts, W))


@given(small_polys, small_polys, st.sampled_from([3, 5, 7]))
def test_reduce_commutes_with_products(a, b, p):
    f = make_field(p)
    assert reduce_mod(a * b, f) == reduce_mod(a, f) * reduce_mod(b, f)
    assert reduce_mod(a + b, f) == reduce_mod(a, f) + reduce_mod(b, f)


@given(st.data())
def test_weighted_scaling_law(data):
    f = make_field(5, 2)
    F = reduce_mod(F2_integer(), f)
    lam = f.from_index(data.draw(st.integers(1, f.q - 1)))
    pt = [f.from_index(data.draw(st.integers(0, f.q - 1))) for _ in range(4)]
    scaled = [lam ** w * c for w, c in zip(W, pt)]
    assert F.eval(scaled) == lam ** 30 * F.eval(pt)


def test_split_last_reassembles():
    F = F2_integer()
    w = WPolynomial.variable(3, W)
    acc = WPolynomial.zero(W)
    for j, G in enumerate(F.split_last()):
        acc = acc + G * w ** j
    assert acc == F
