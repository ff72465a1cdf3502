"""Golden fixtures: published figures rerun against this implementation.

Each fixture yields ``Outcome(status, name, detail)`` with status PASS, FAIL
or WARN.  WARN marks a published value that is known to disagree with a
correct computation; it is reported without failing the run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import checks, counter, igusa, loci, zeta
from .ffield import make_field
from .wpoly import reduce_mod

PASS, FAIL, WARN = "PASS", "FAIL", "WARN"

# (locus, p, k) -> (points, affine solutions incl. origin, singular)
PUBLISHED = {
    (2, 5, 1): (64, 125, 25),
    (2, 5, 2): (1304, 15625, 6241),
    (2, 5, 3): (31504, 1953125, 781125),
    (3, 5, 1): (74, 149, 99),
    (3, 5, 2): (1294, 15481, 10521),
}
CHAR3_SEQUENCE = [62, 508, 4430, 39540]
CHAR3_PUBLISHED_NUMERATOR = [1, 49, -747]
AUBRY = {(2, 5): 381, (2, 25): 9381, (2, 125): 234376, (3, 5): 1006, (3, 25): 25026}
CONJ2_RESIDUES = {(2, 5): 4, (2, 25): 4, (2, 125): 4, (3, 5): 4, (3, 25): 19}
DEGREE = {2: 30, 3: 80}
WEIGHTS = (2, 4, 6, 10)


@dataclass(frozen=True)
class Outcome:
    status: str
    name: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status:4}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


# Published figures that no consistent computation reproduces; see the README.
KNOWN_UNREPRODUCED = {
    "L2 over GF(5) singular solutions",
    "L2 over GF(25) singular solutions",
    "L2 over GF(125) singular solutions",
    "L3 over GF(5) singular solutions",
    "L3 over GF(25) singular solutions",
    "L2 Aubry bound q=25",
    "L2 Aubry bound q=125",
}


def _fmt(x) -> str:
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    return str(x)


def _cmp(name, got, want, warn=False) -> Outcome:
    if got == want:
        return Outcome(PASS, name, _fmt(got))
    warn = warn or name in KNOWN_UNREPRODUCED
    return Outcome(WARN if warn else FAIL, name, f"got {_fmt(got)}, published {_fmt(want)}")


def transcriptions() -> list[Outcome]:
    f3, f5 = make_field(3), make_field(5)
    F2 = loci.F2_integer()
    out = [
        _cmp("F2 mod 5 equals the mod-5 display", reduce_mod(F2, f5) == loci.expected_reduction(2, 5), True),
        _cmp("F2 mod 3 equals x*y^4*(2x^6 + y^3)", reduce_mod(F2, f3) == loci.expected_reduction(2, 3), True),
    ]
    s = loci.scalar_relation(reduce_mod(loci.uvw_surface(), f5), loci.uvw_surface_mod5())
    out.append(Outcome(PASS if s is not None else FAIL, "w-quadratic mod 5 equals the uvw display",
                       f"scalar {s}"))
    n_terms = len(F2)
    out.append(_cmp("F2 term count", n_terms, 25, warn=True))
    return out


def counts(keys=None, census=True, workers=1) -> list[Outcome]:
    out = []
    for key in keys or sorted(PUBLISHED):
        n, p, k = key
        pts, aff, sing = PUBLISHED[key]
        f = make_field(p, k)
        r = counter.count(loci.locus_polynomial(n, f), f, census=census, workers=workers,
                          partitions=max(1, workers))
        tag = f"L{n} over GF({f.q})"
        out.append(_cmp(f"{tag} points", r.total_points, pts))
        out.append(_cmp(f"{tag} affine solutions", r.total_affine_solutions, aff))
        if census:
            out.append(_cmp(f"{tag} singular solutions", r.singular_solutions, sing))
    return out


def char3() -> list[Outcome]:
    seq, _ = counter.sequence(loci.F2_integer(), 3, 4)
    out = [_cmp("L2 char-3 sequence", seq, CHAR3_SEQUENCE)]
    seq3, _ = counter.sequence(3, 3, 4)
    out.append(_cmp("L3 char-3 sequence equals the L2 one", seq3, CHAR3_SEQUENCE))
    fit = zeta.general_fit(seq, [1, 3, 9], 2)
    out.append(_cmp("char-3 Newton numerator", fit.numerator, [1, 49, 1409]))
    out.append(_cmp("char-3 published numerator", fit.numerator, CHAR3_PUBLISHED_NUMERATOR, warn=True))
    return out


def oracles() -> list[Outcome]:
    out = []
    for n, p, k in [(2, 5, 1), (3, 5, 1), (2, 3, 1), (2, 3, 2)]:
        f = make_field(p, k)
        F = loci.locus_polynomial(n, f)
        out.append(_cmp(f"L{n} over GF({f.q}) count equals orbit oracle",
                        counter.count(F, f).total_points, counter.orbit_oracle(F, f)))
    return out


def zeta_fits() -> list[Outcome]:
    return [
        _cmp("L2 linear fit a", zeta.linear_fit([64, 1304, 31504], 5).a, 38),
        _cmp("L3 linear fit a", zeta.linear_fit([74, 1294], 5).a, 48),
        _cmp("L2 log series", zeta.log_series([64, 1304, 31504]), [64, 652, Fraction(31504, 3)]),
        _cmp("(1+38t)/((1-t)(1-25t)) t^2 coefficient", zeta.series([1, 38], zeta.denominator_poly([1, 25]), 3)[2],
             652, warn=True),
    ]


def bounds() -> list[Outcome]:
    out = []
    counts_ = {(2, 5): 64, (2, 25): 1304, (2, 125): 31504, (3, 5): 74, (3, 25): 1294}
    for (n, q), c in counts_.items():
        rep = checks.aubry_check(c, DEGREE[n], WEIGHTS, q)
        out.append(_cmp(f"L{n} Aubry bound q={q}", (rep.expected, rep.verdict), (AUBRY[(n, q)], checks.HOLDS)))
        c2 = checks.conj2_check(c, q, DEGREE[n], WEIGHTS)
        out.append(_cmp(f"L{n} conjecture-2 residue q={q}", (c2.observed, c2.verdict),
                        (CONJ2_RESIDUES[(n, q)], checks.VIOLATED)))
        s = checks.serre_check(c, 5, DEGREE[n], WEIGHTS)
        out.append(_cmp(f"L{n} Serre q={q}", s.verdict, checks.NOT_APPLICABLE))
    return out


def calibration(seed: int = 0, samples: int = 100) -> list[Outcome]:
    rng = random.Random(seed)
    out = []
    F2 = loci.F2_integer()

    def eq1_ok(field):
        bad = done = 0
        while done < samples:
            if field is None:
                u, v = Fraction(rng.randint(-50, 50), rng.randint(1, 9)), Fraction(rng.randint(-50, 50), rng.randint(1, 9))
            else:
                u, v = field(rng.randrange(field.q)), field(rng.randrange(field.q))
            try:
                c = igusa.Genus2Curve(tuple(loci.l2_curve(u, v)), field)
            except (loci.PreconditionError, ValueError):
                continue
            t = igusa.igusa(c)
            if not t.J10:
                continue
            done += 1
            bad += bool((F2 if field is None else reduce_mod(F2, field)).eval(tuple(t)))
        return bad

    for fld in (None, make_field(7), make_field(11), make_field(13)):
        name = "Q" if fld is None else f"GF({fld.q})"
        out.append(_cmp(f"eq1 family on L2 over {name} (failures)", eq1_ok(fld), 0))
    bad = done = 0
    while done < samples:
        a, b = Fraction(rng.randint(-30, 30)), Fraction(rng.randint(-30, 30))
        t = igusa.igusa(igusa.Genus2Curve(tuple(loci.l2_normal_form(a, b))))
        if not t.J10:
            continue
        done += 1
        bad += bool(F2.eval(tuple(t)))
    out.append(_cmp("normal form on L2 over Q (failures)", bad, 0))
    for k in (1, 2):
        f = make_field(5, k)
        F3 = loci.locus_polynomial(3, f)
        bad = done = 0
        while done < samples:
            chi, psi = f.from_index(rng.randrange(1, f.q)), f.from_index(rng.randrange(1, f.q))
            done += 1
            bad += bool(F3.eval(loci.l3_igusa(chi, psi)))
        out.append(_cmp(f"L3 parametrization on F3 over GF({f.q}) (failures)", bad, 0))
    for p in (7, 11, 13):
        f = make_field(p)
        bad = done = 0
        while done < samples:
            a, b = rng.randrange(p), rng.randrange(1, p)
            if (a + b + 1) % p == 0:
                continue
            zs = loci.l5_z_values(a, b, f)
            if not zs:
                continue
            z = rng.choice(zs)
            u, v, w = loci.l5_uvw(loci.L5Param(f(a), f(b), z))
            c0, c1, c2 = loci.l5_w_quadratic(u, v)
            done += 1
            bad += bool(c2 * w * w + c1 * w + c0)
        out.append(_cmp(f"L5 (a,b,z) samples on the w-quadratic over GF({p}) (failures)", bad, 0))
    return out


SUITES = {
    "quick": [transcriptions, oracles, zeta_fits, bounds],
    "char5": [transcriptions, counts, oracles, zeta_fits, bounds],
    "char3": [char3],
    "calibration": [calibration],
}
SUITES["all"] = SUITES["char5"] + SUITES["char3"] + SUITES["calibration"]


def run(suite: str = "all", seed: int = 0) -> tuple[list[Outcome], float]:
    start = time.perf_counter()
    out = []
    for fn in SUITES[suite]:
        out.extend(fn(seed=seed) if fn is calibration else fn())
    return out, time.perf_counter() - start
