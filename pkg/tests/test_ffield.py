import pickle

import pytest
from hypothesis import given, strategies as st

from splitloci.ffield import (
    FieldError, all_elements, arith, field_tables, is_irreducible, make_field, reduce_int,
)

FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (5, 3), (3, 4)]


def test_prime_field_size():
    assert make_field(5, 1).q == 5


def test_gf81():
    f = make_field(3, 4)
    assert f.q == 81
    assert is_irreducible(f.modulus, 3)


@pytest.mark.parametrize("p,k", [(4, 1), (1, 1), (2, 1), (5, 0), (5, 5), (9, 2)])
def test_make_field_rejects(p, k):
    with pytest.raises(FieldError):
        make_field(p, k)


def test_modulus_is_deterministic_and_smallest():
    f = make_field(5, 2)
    assert f is make_field(5, 2)
    # t^2 + 2 is the first irreducible in (c1, c0) order over GF(5)
    assert f.modulus == (2, 0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)


def test_arith_examples():
    f = make_field(5)
    assert arith("inv", f(4)) == 4
    assert arith("pow", f(2), 10) == 4
    assert arith("neg", f(1)) == 4
    assert arith("div", f(3), f(2)) == 4
    with pytest.raises(ZeroDivisionError):
        arith("inv", f(0))
    with pytest.raises(ZeroDivisionError):
        arith("div", f(1), f(0))


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        make_field(5)(1) + make_field(7)(1)
    with pytest.raises(FieldError):
        arith("mul", make_field(5, 2).one, make_field(5, 1).one)


def test_inverse_in_gf9():
    f = make_field(3, 2)
    for a in all_elements(f)[1:]:
        assert a * a.inverse() == f.one


@pytest.mark.parametrize("p,k", [(5, 1), (5, 2), (5, 3)])
def test_all_elements(p, k):
    f = make_field(p, k)
    els = all_elements(f)
    assert len(els) == f.q
    assert len({e.coeffs for e in els}) == f.q
    assert els[0].is_zero()
    assert [e.index for e in els] == list(range(f.q))


def test_reduce_int_examples():
    assert reduce_int(make_field(5), -78) == 2
    assert reduce_int(make_field(3), 41472) == 0
    assert reduce_int(make_field(7), 0) == 0
    assert reduce_int(make_field(5), -125971200000).is_zero()


@given(st.sampled_from(FIELDS), st.integers(), st.integers())
def test_reduce_int_is_ring_hom(pk, m, n):
    f = make_field(*pk)
    assert reduce_int(f, m + n) == reduce_int(f, m) + reduce_int(f, n)
    assert reduce_int(f, m * n) == reduce_int(f, m) * reduce_int(f, n)


@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pk, data):
    f = make_field(*pk)
    a, b, c = (f.from_index(data.draw(st.integers(0, f.q - 1))) for _ in range(3))
    assert a ** f.q == a
    assert (a + b) * c == a * c + b * c
    assert a - a == f.zero
    if a:
        assert a * arith("inv", a) == f.one


@pytest.mark.parametrize("p,k", FIELDS)
def test_tables_match_scalar_arithmetic(p, k):
    f = make_field(p, k)
    t = field_tables(f)
    els = all_elements(f)
    for a in els[:: max(1, f.q // 9)]:
        for b in els:
            assert t.add[a.index * f.q + b.index] == (a + b).index
            assert t.mul[a.index * f.q + b.index] == (a * b).index
        assert t.neg[a.index] == (-a).index
    P = t.powers(7)
    assert all(P[7, a.index] == (a ** 7).index for a in els)


def test_generator_has_full_order():
    f = make_field(5, 2)
    g = f.generator
    assert len({(g ** i).index for i in range(f.q - 1)}) == f.q - 1


def test_field_pickles():
    f = make_field(3, 3)
    assert pickle.loads(pickle.dumps(f)) == f


def test_fraction_coercion():
    from fractions import Fraction
    f = make_field(7)
    assert f(Fraction(1, 2)) * 2 == 1
