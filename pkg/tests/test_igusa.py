import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from splitloci import loci
from splitloci.ffield import make_field
from splitloci.igusa import (
    CharacteristicError, Genus2Curve, IgusaTuple, detect, detect_invariants, igusa, normalize_point,
)
from splitloci.wpoly import reduce_mod

F2 = loci.F2_integer()


def smooth_eq1(rng, field=None):
    while True:
        if field is None:
            u, v = Fraction(rng.randint(-40, 40), rng.randint(1, 7)), Fraction(rng.randint(-40, 40), rng.randint(1, 7))
        else:
            u, v = field.from_index(rng.randrange(field.q)), field.from_index(rng.randrange(field.q))
        try:
            c = Genus2Curve(tuple(loci.l2_curve(u, v)), field)
        except (loci.PreconditionError, ValueError):
            continue
        if igusa(c).J10:
            return c


def test_repeated_root_gives_zero_J10():
    # (x - 1)^2 (x^4 + 1) = x^6 - 2x^5 + x^4 + x^2 - 2x + 1
    c = Genus2Curve((1, -2, 1, 0, 1, -2, 1))
    assert igusa(c).J10 == 0
    assert not c.is_smooth


def test_degree_checks():
    with pytest.raises(ValueError):
        Genus2Curve((1, 0, 0, 0, 1, 0, 0))
    with pytest.raises(ValueError):
        Genus2Curve((1, 2, 3))
    assert Genus2Curve((1, 0, 0, 0, 0, 1, 0)).degree == 5


def test_characteristic_guards():
    with pytest.raises(CharacteristicError):
        igusa(Genus2Curve((1, 0, 0, 0, 0, 1, 1), make_field(3)))
    assert detect(Genus2Curve((1, 0, 0, 0, 0, 1, 1), make_field(3)), 2).verdict == "unavailable"


@pytest.mark.parametrize("field", [None, make_field(7), make_field(11), make_field(13), make_field(5, 2)])
def test_eq1_family_lies_on_L2(field):
    rng = random.Random(7)
    F = F2 if field is None else reduce_mod(F2, field)
    for _ in range(100 if field is not None else 60):
        c = smooth_eq1(rng, field)
        assert F.eval(tuple(igusa(c))) == 0


def test_normal_form_lies_on_L2():
    rng = random.Random(3)
    done = 0
    while done < 100:
        a, b = rng.randint(-25, 25), rng.randint(-25, 25)
        t = igusa(Genus2Curve(tuple(loci.l2_normal_form(a, b))))
        if t.J10:
            assert F2.eval(tuple(t)) == 0
            done += 1


def test_detect_eq1_over_gf11():
    f = make_field(11)
    c = smooth_eq1(random.Random(1), f)
    assert detect(c, 2).verdict == "split"


def test_detect_random_sextic_not_split():
    f = make_field(5)
    c = Genus2Curve((1, 2, 0, 3, 1, 4, 1), f)
    d = detect(c, 2)
    assert d.verdict == "not_split"
    assert reduce_mod(F2, f).eval(d.igusa) == d.fn_value != 0


def test_detect_invariants_l3():
    f = make_field(5)
    for chi in (1, 2, 3, 4):
        for psi in (1, 2, 3, 4):
            t = IgusaTuple(*loci.l3_igusa(f(chi), f(psi)))
            assert detect_invariants(t, 3).verdict == "split"


def test_detect_unavailable():
    c = Genus2Curve((1, 2, 0, 3, 1, 4, 1), make_field(7))
    d = detect(c, 3)
    assert d.verdict == "unavailable" and "(3, p=7)" in d.reason


def test_detect_requires_smoothness():
    f = make_field(5)
    t = IgusaTuple(f(0), f(0), f(1), f(0))
    d = detect_invariants(t, 2)
    assert d.verdict == "not_split"


def test_normalize_point_examples():
    f = make_field(5)
    one = IgusaTuple(*[f(1)] * 4)
    other = IgusaTuple(*map(f, (4, 1, 4, 4)))
    assert normalize_point(one) == normalize_point(other)
    for lam in f.elements()[1:]:
        assert normalize_point(IgusaTuple(lam ** 2, f(0), f(0), f(0))) == normalize_point(
            IgusaTuple(f(1), f(0), f(0), f(0)))
    with pytest.raises(ValueError):
        normalize_point(IgusaTuple(f(0), f(0), f(0), f(0)))


def _orbit(t, f):
    return {tuple((lam ** w * c).index for w, c in zip((2, 4, 6, 10), t)) for lam in f.elements()[1:]}


@given(st.data())
def test_normalize_point_matches_orbit_oracle(data):
    f = make_field(5, 2)
    a = IgusaTuple(*[f.from_index(data.draw(st.integers(0, f.q - 1))) for _ in range(4)])
    b = IgusaTuple(*[f.from_index(data.draw(st.integers(0, f.q - 1))) for _ in range(4)])
    if not any(a) or not any(b):
        return
    same = tuple(c.index for c in b) in _orbit(a, f)
    assert (normalize_point(a) == normalize_point(b)) == same


@given(st.data())
def test_scaling_covariance(data):
    f = make_field(7)
    coeffs = [f(data.draw(st.integers(0, 6))) for _ in range(6)] + [f(data.draw(st.integers(1, 6)))]
    c = Genus2Curve(tuple(coeffs), f)
    t = igusa(c)
    if not any(t):
        return
    lam = f(data.draw(st.integers(1, 6)))
    assert normalize_point(igusa(c.twist(lam))) == normalize_point(t)


@given(st.data())
def test_quadratic_twist_invariance(data):
    f = make_field(7)
    coeffs = [f(data.draw(st.integers(0, 6))) for _ in range(6)] + [f(data.draw(st.integers(1, 6)))]
    t = igusa(Genus2Curve(tuple(coeffs), f))
    nonsquare = f(3)
    tw = igusa(Genus2Curve(tuple(nonsquare * c for c in coeffs), f))
    if not any(t):
        return
    assert normalize_point(tw) == normalize_point(t)


def test_detect_is_scaling_stable():
    f = make_field(11)
    c = smooth_eq1(random.Random(5), f)
    t = igusa(c)
    for lam in f.elements()[1:]:
        scaled = IgusaTuple(*(lam ** w * x for w, x in zip((2, 4, 6, 10), t)))
        assert detect_invariants(scaled, 2).verdict == "split"
