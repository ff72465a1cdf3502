"""Acceptance criteria, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.  Published figures that no consistent computation
reproduces are asserted as published and marked ``xfail(strict=True)``, so the
suite stays green only while they keep failing.
"""

import json
import time
import warnings

import pytest

from splitloci import checks, cli, counter, loci, verify, zeta
from splitloci.ffield import make_field
from splitloci.wpoly import reduce_mod

W = (2, 4, 6, 10)


def c(n, title):
    return pytest.mark.criterion(n, title)


# 1 ------------------------------------------------------------------------------------

C1 = c(1, "transcription identities")


@C1
def test_c1_transcriptions():
    start = time.perf_counter()
    F2 = loci.F2_integer()
    assert reduce_mod(F2, make_field(5)) == loci.expected_reduction(2, 5)
    assert reduce_mod(F2, make_field(3)) == loci.expected_reduction(2, 3)
    s = loci.scalar_relation(reduce_mod(loci.uvw_surface(), make_field(5)), loci.uvw_surface_mod5())
    assert s is not None
    assert time.perf_counter() - start < 1.0


# 2 ------------------------------------------------------------------------------------

C2 = c(2, "point counts")


@C2
@pytest.mark.parametrize("n,p,k,points,affine", [
    (2, 5, 1, 64, None), (2, 5, 2, 1304, None), (3, 5, 1, 74, 149), (3, 5, 2, 1294, 15481),
])
def test_c2_counts(n, p, k, points, affine):
    f = make_field(p, k)
    start = time.perf_counter()
    r = counter.count(loci.locus_polynomial(n, f), f)
    assert time.perf_counter() - start < 30
    assert r.total_points == points
    if affine is not None:
        assert r.total_affine_solutions == affine


@C2
def test_c2_count_gf125():
    f = make_field(5, 3)
    start = time.perf_counter()
    r = counter.count(loci.locus_polynomial(2, f), f)
    assert time.perf_counter() - start < 600
    assert r.total_points == 31504


@C2
def test_c2_char3_sequence():
    start = time.perf_counter()
    seq, _ = counter.sequence(loci.F2_integer(), 3, 4)
    assert time.perf_counter() - start < 30
    assert seq == [62, 508, 4430, 39540]


# 3 ------------------------------------------------------------------------------------

C3 = c(3, "singular censuses")
CENSUS_REASON = (
    "published singular counts are not reproduced by any subset of vanishing partials, "
    "with or without the origin"
)


@C3
@pytest.mark.xfail(strict=True, reason=CENSUS_REASON)
@pytest.mark.parametrize("n,p,k,singular,affine", [
    (2, 5, 1, 25, 125), (2, 5, 2, 6241, 15625), (2, 5, 3, 781125, 1953125),
    (3, 5, 1, 99, 149), (3, 5, 2, 10521, 15481),
])
def test_c3_singular_census(n, p, k, singular, affine):
    f = make_field(p, k)
    r = counter.count(loci.locus_polynomial(n, f), f, census=True)
    assert r.total_affine_solutions == affine
    assert r.singular_solutions == singular


# 4 ------------------------------------------------------------------------------------

@c(4, "count equals orbit oracle")
@pytest.mark.parametrize("n,p,k", [(2, 5, 1), (3, 5, 1), (2, 3, 1), (2, 3, 2)])
def test_c4_oracle(n, p, k):
    f = make_field(p, k)
    F = loci.locus_polynomial(n, f)
    assert counter.count(F, f).total_points == counter.orbit_oracle(F, f)


# 5 ------------------------------------------------------------------------------------

@c(5, "zeta fits")
def test_c5_zeta():
    assert zeta.linear_fit([64, 1304, 31504], 5).a == 38
    assert zeta.linear_fit([74, 1294], 5).a == 48
    fit = zeta.general_fit([62, 508, 4430, 39540], [1, 3, 9], 2, q=3)
    assert fit.numerator == [1, 49, 1409]
    diff = zeta.compare_numerator(fit, verify.CHAR3_PUBLISHED_NUMERATOR)
    assert diff == [(2, 1409, -747)]
    warnings.warn(f"published char-3 numerator 1 + 49t - 747t^2 differs from the fit {fit.numerator_str()}")


# 6 ------------------------------------------------------------------------------------

C6 = c(6, "bounds and congruences")
COUNTS = {(2, 5): 64, (2, 25): 1304, (2, 125): 31504, (3, 5): 74, (3, 25): 1294}
DEG = {2: 30, 3: 80}


@C6
@pytest.mark.parametrize("n,q", sorted(COUNTS))
def test_c6_verdicts(n, q):
    cnt, d = COUNTS[(n, q)], DEG[n]
    assert checks.aubry_check(cnt, d, W, q).verdict == checks.HOLDS
    c2 = checks.conj2_check(cnt, q, d, W)
    assert (c2.observed, c2.verdict) == (verify.CONJ2_RESIDUES[(n, q)], checks.VIOLATED)
    assert checks.serre_check(cnt, 5, d, W).verdict == checks.NOT_APPLICABLE


BOUND_REASON = "published value disagrees with (d/w0) q^2 + q + 1 at this q"


@C6
@pytest.mark.parametrize("n,q", [
    (2, 5), (3, 5), (3, 25),
    pytest.param(2, 25, marks=pytest.mark.xfail(strict=True, reason=BOUND_REASON)),
    pytest.param(2, 125, marks=pytest.mark.xfail(strict=True, reason=BOUND_REASON)),
])
def test_c6_bound_values(n, q):
    assert checks.aubry_check(COUNTS[(n, q)], DEG[n], W, q).expected == verify.AUBRY[(n, q)]


# 7 ------------------------------------------------------------------------------------

@c(7, "calibration properties")
def test_c7_calibration():
    outcomes = verify.calibration(seed=0, samples=100)
    assert len(outcomes) == 10
    bad = [o.line() for o in outcomes if o.status != verify.PASS]
    assert not bad


# 8 ------------------------------------------------------------------------------------

C8 = c(8, "determinism")


def _body(capsys, threads):
    assert cli.dispatch(["count", "--locus", "l3", "--p", "5", "--k", "2", "--threads", threads,
                         "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)["report"]
    rep.pop("elapsed")
    rep.pop("partition_count")
    return rep


@C8
def test_c8_threads(capsys):
    assert _body(capsys, "1") == _body(capsys, "2") == _body(capsys, "3")


@C8
def test_c8_seeded_samples():
    assert verify.calibration(seed=7, samples=20) == verify.calibration(seed=7, samples=20)
