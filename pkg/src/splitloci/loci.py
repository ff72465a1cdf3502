"""Embedded locus equations and parametrizations for L2, L3 and L5.

Coordinates on P(2,4,6,10) are ``(x, y, z, w) = (J2, J4, J6, J10)``, where the
J's are the Igusa-Clebsch invariants computed by :mod:`splitloci.igusa`.

What is available is fixed (see :func:`availability`): the degree-30 L2
equation over Z, the degree-80 L3 equation over GF(5) only, and forward
parametrizations of L3 and L5.  There is no L5 hypersurface equation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .ffield import FieldDesc, FieldElem, make_field
from .wpoly import WPolynomial, build_poly, change_field, loads, reduce_mod

WEIGHTS = (2, 4, 6, 10)

FORMS = ("char0", "mod-p", "param")


class Unavailable(LookupError):
    """The requested locus form is not embedded."""


class PreconditionError(ValueError):
    """A rational formula hit a vanishing denominator (named in ``.denominator``)."""

    def __init__(self, denominator: str, msg: str | None = None):
        self.denominator = denominator
        super().__init__(msg or f"denominator {denominator} vanishes")


@dataclass(frozen=True)
class LocusId:
    n: int
    form: str  # "char0" | "mod-p" | "param"
    p: int | None = None

    def __str__(self):
        return f"L{self.n}/{self.form}" + (f"/p={self.p}" if self.p else "")


def availability(n: int, form: str, p: int | None = None) -> bool:
    if form == "char0":
        return n == 2
    if form == "mod-p":
        return n == 3 and p == 5
    if form == "param":
        return n in (3, 5)
    return False


def _data(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text()


_CACHE: dict[str, WPolynomial] = {}


def _embedded(name: str) -> WPolynomial:
    if name not in _CACHE:
        _CACHE[name] = loads(_data(name))
    return _CACHE[name]


def F2_integer() -> WPolynomial:
    """The L2 equation over Z: 34 terms, weighted degree 30."""
    return _embedded("F2.poly")


def F3_mod5() -> WPolynomial:
    """The L3 equation over GF(5), weighted degree 80."""
    return _embedded("F3_mod5.poly")


def F2_mod5_display() -> WPolynomial:
    """Independently transcribed reduction of the L2 equation mod 5."""
    return _embedded("F2_mod5.poly")


def uvw_surface_mod5() -> WPolynomial:
    """Independently transcribed (u, v, w) surface over GF(5)."""
    return _embedded("uvw_mod5.poly")


EMBEDDED_FILES = ("F2.poly", "F3_mod5.poly", "F2_mod5.poly", "uvw_mod5.poly")


def embedded_checksums() -> dict[str, str]:
    return {name: _embedded(name).checksum() for name in EMBEDDED_FILES}


def checksum_mismatches() -> list[str]:
    """Data files whose canonical serialization differs from the pinned checksum."""
    pinned = json.loads(_data("checksums.json"))
    return sorted(name for name, digest in pinned.items() if _embedded(name).checksum() != digest)


def _gens(f: FieldDesc, weights=WEIGHTS):
    return [WPolynomial.variable(i, weights, f) for i in range(len(weights))]


def expected_reduction(n: int, p: int) -> WPolynomial:
    """Known reduced forms, factored ones expanded.

    (2, 3): x*y^4*(2x^6 + y^3);  (2, 5): the transcribed mod-5 display;
    (3, 3): x^2*y^12*(2x^2 + y)*(x^12 + x^6*y^3 + y^6).
    """
    if (n, p) == (2, 5):
        return F2_mod5_display()
    if (n, p) == (2, 3):
        f = make_field(3)
        x, y, _, _ = _gens(f)
        return x * y ** 4 * (2 * x ** 6 + y ** 3)
    if (n, p) == (3, 3):
        f = make_field(3)
        x, y, _, _ = _gens(f)
        return x ** 2 * y ** 12 * (2 * x ** 2 + y) * (x ** 12 + x ** 6 * y ** 3 + y ** 6)
    raise Unavailable(f"no reduced form of L{n} at p={p} is embedded")


def locus_polynomial(n: int, f: FieldDesc) -> WPolynomial:
    """The equation of L_n over ``f``, or :class:`Unavailable`.

    L2 is available in every odd characteristic; L3 over GF(5^k), and over
    GF(3^k) through its known factored reduction.
    """
    if n == 2:
        return reduce_mod(F2_integer(), f)
    if n == 3 and f.p == 5:
        return change_field(F3_mod5(), f)
    if n == 3 and f.p == 3:
        return change_field(expected_reduction(3, 3), f)
    raise Unavailable(f"locus form unavailable for ({n}, p={f.p})")


# --- generic ring helpers ----------------------------------------------------------

def _q(x):
    return x if isinstance(x, FieldElem) else Fraction(x)


def _is_zero(x) -> bool:
    return not x


# --- L3 ------------------------------------------------------------------------------

def l3_igusa(chi, psi):
    """(J2, J4, J6, J10) on L3 from the cubic-pair invariants (chi, psi).

    Works over Q (ints/Fractions) or any field of odd characteristic.
    """
    c, s = _q(chi), _q(psi)
    inv64 = _q(1) / 64
    inv512 = _q(1) / 512
    J2 = c * (c ** 2 + 96 * c * s - 1152 * s ** 2)
    # the two lower-degree tail terms are part of the equation as given
    J4 = c * inv64 * (c ** 5 + 192 * c ** 4 * s + 13824 * c ** 3 * s ** 2 + 442368 * c ** 2 * s ** 3
                      + 5308416 * c * s ** 4 + 786432 * c * s ** 3 + 9437184 * s ** 4)
    J6 = c * inv512 * (3 * c ** 8 + 864 * c ** 7 * s + 94464 * c ** 6 * s ** 2
                       + 4866048 * c ** 5 * s ** 3 + 111476736 * c ** 4 * s ** 4
                       + 509607936 * c ** 3 * s ** 5 - 12230590464 * c ** 2 * s ** 6
                       + 1310720 * c ** 4 * s ** 3 + 155713536 * c ** 3 * s ** 4
                       - 1358954496 * c ** 2 * s ** 5 - 18119393280 * c * s ** 6
                       + 4831838208 * s ** 6)
    J10 = -(2 ** 30) * c ** 3 * s ** 9
    return (J2, J4, J6, J10)


# --- L2 curve family ---------------------------------------------------------------

def l2_curve(u, v) -> list:
    """Coefficients ``[c0, ..., c6]`` (c_i of x^i) of the L2 curve with parameters (u, v)

        Y^2 = a0 x^6 + a1 x^5 + a2 x^4 + a3 x^3 + t a2 x^2 + t^2 a1 x + t^3 a0,

    t = v^2 - 4u^3.  The curve is defined over the field of (u, v).
    """
    u, v = _q(u), _q(v)
    t = v ** 2 - 4 * u ** 3
    if _is_zero(t):
        raise PreconditionError("v^2 - 4u^3", "degenerate parameters: v^2 = 4u^3")
    a0 = v ** 2 + u ** 2 * v - 2 * u ** 3
    a1 = 2 * (u ** 2 + 3 * v) * t
    a2 = (15 * v ** 2 - u ** 2 * v - 30 * u ** 3) * t
    a3 = 4 * (5 * v - u ** 2) * t ** 2
    return [t ** 3 * a0, t ** 2 * a1, t * a2, a3, a2, a1, a0]


def l2_normal_form(a, b) -> list:
    """``[c0..c6]`` of Y^2 = x^6 - a x^4 + b x^2 - 1 (curves with an extra involution)."""
    a, b = _q(a), _q(b)
    zero = a - a
    one = zero + 1
    return [-one, zero, b, zero, -a, zero, one]


def j_subcover_quadratic(u, v):
    """(s, t) with j^2 + s j + t = 0 having the elliptic-subcover j-invariants as roots."""
    u, v = _q(u), _q(v)
    den = u ** 2 + 18 * u - 4 * v - 27
    if _is_zero(den):
        raise PreconditionError("u^2 + 18u - 4v - 27")
    s = 256 * (2 * u ** 3 - 54 * u ** 2 + 9 * u * v - v ** 2 + 27 * v) / den
    t = 65536 * (u ** 2 + 9 * u - 3 * v) / den ** 2
    return s, t


# --- L5 ------------------------------------------------------------------------------

@dataclass(frozen=True)
class L5Param:
    a: object
    b: object
    z: object

    def check(self):
        a, b, z = self.a, self.b, self.z
        for name, val in (("b", b), ("a + b + 1", a + b + 1), ("z", z), ("z - 1", z - 1)):
            if _is_zero(val):
                raise PreconditionError(name)


def _g3(a, b, z):
    # The constant coefficient as printed contains a symbol y that is not one of
    # the parameters (a, b, z); it is read as z.
    y = z
    a0 = -b ** 4 * (2 * b ** 3 * a + 4 * b ** 3 - 2 * z * a * b ** 2 + 7 * b ** 2 * a ** 2 + 8 * z * b ** 2
                    + 4 * b ** 2 + 16 * a * b ** 2 + 16 * z * b * a + 6 * a ** 3 * b + 8 * b * a
                    + 2 * z * a ** 2 * b + 12 * z * b + 16 * b * a ** 2 + 13 * z * a ** 2 + z * a ** 4
                    + 6 * z * a ** 3 + 4 * z + 12 * y * a)
    a1 = -b ** 2 * (12 * b ** 3 + 12 * b ** 4 * a + 32 * z * b * a - 6 * a ** 4 * b ** 2 + 44 * b ** 2 * a ** 3
                    + 6 * b * a ** 2 + 24 * a * b ** 2 + 10 * a ** 3 * b + 44 * b ** 3 * a ** 2 + 2 * b * a
                    + 52 * b ** 3 * a + 61 * b ** 2 * a ** 2 - 12 * b * a ** 5 - 7 * z * a ** 2 - 2 * z * a
                    + 12 * z * b - 4 * a ** 6 + 12 * b ** 4 - a ** 4 - 40 * z * a ** 3 * b ** 2
                    - 16 * z * b ** 3 * a ** 2 - 12 * z * a ** 5 + 36 * z * b ** 2 - 18 * z * a ** 3
                    - 26 * z * a ** 4 + 56 * z * a * b ** 2 + 4 * a * z * b ** 3 + 2 * z * a ** 2 * b ** 2
                    - 20 * z * a ** 3 * b + 28 * z * a ** 2 * b + 2 * z * a ** 6 + 24 * z * b ** 3
                    + 4 * z * b * a ** 5 - 4 * a ** 5 - 32 * z * a ** 4 * b)
    a2 = (5 * b ** 2 * a ** 6 + 20 * b ** 2 * a ** 5 + 8 * b * a ** 6 - 61 * b ** 4 * a ** 2 - 18 * b ** 5 * a
          - 56 * b ** 4 * a + 4 * z * b * a + 5 * a ** 4 * b ** 2 - 18 * b ** 2 * a ** 3 - 24 * z * b ** 4
          - 14 * z * b ** 4 * a - 4 * a * b ** 2 + 8 * b ** 3 * a ** 4 + 2 * b ** 3 * a ** 5
          - 54 * b ** 3 * a ** 3 - 70 * b ** 3 * a ** 2 - 24 * b ** 3 * a - 14 * b ** 2 * a ** 2
          + 4 * a ** 4 * b + 10 * b * a ** 5 - 6 * z * a ** 7 + 64 * z * a ** 3 * b ** 3
          + 38 * z * a ** 4 * b ** 2 + 54 * z * a ** 3 * b ** 2 + 12 * z * b ** 3 * a ** 2
          - 14 * z * a ** 6 * b - 10 * z * b ** 2 * a ** 5 - 4 * z * a ** 7 * b - 4 * a ** 6 * z * b ** 2
          + 32 * a ** 2 * b ** 4 * z + 2 * a ** 7 * b - z * a ** 8 - 36 * z * b ** 3 - 12 * z * a ** 5
          - 12 * z * b ** 2 - 4 * z * a ** 4 - 28 * z * a * b ** 2 - 64 * a * z * b ** 3
          - 5 * z * a ** 2 * b ** 2 + 16 * z * a ** 2 * b + 28 * z * a ** 4 * b - 4 * z * b * a ** 5
          - 13 * z * a ** 6 - 12 * b ** 5 - 12 * b ** 4 + 34 * z * a ** 3 * b)
    a3 = (2 * a + 1) * (z * a ** 4 - 2 * a ** 3 * b + 4 * z * a ** 3 + 6 * z * a ** 3 * b - 4 * b * a ** 2
                        + 12 * z * a ** 2 * b ** 2 + 10 * z * a ** 2 * b - 9 * b ** 2 * a ** 2 + 5 * z * a ** 2
                        - 2 * b * a + 2 * z * a - 8 * a * b ** 2 - 12 * b ** 3 * a + 8 * a * z * b ** 3
                        - 4 * b ** 3 - 4 * z * b - 4 * b ** 4 - 12 * z * b ** 2 - 8 * z * b ** 3)
    return a0, a1, a2, a3


def l5_curve(pt: L5Param) -> list:
    """``[c0..c6]`` of y^2 = x(x - 1) g3(x); c6 = 0 (a quintic model)."""
    pt.check()
    a, b, z = _q(pt.a), _q(pt.b), _q(pt.z)
    g = _g3(a, b, z)
    zero = a - a
    c = [zero] * 7
    # (x^2 - x) * (g0 + g1 x + g2 x^2 + g3 x^3)
    for i, gi in enumerate(g):
        c[i + 2] = c[i + 2] + gi
        c[i + 1] = c[i + 1] - gi
    return c


def l5_uvw(pt: L5Param):
    pt.check()
    a, b, z = _q(pt.a), _q(pt.b), _q(pt.z)
    den = b * (a + b + 1)
    u = 2 * a * (a * b + b ** 2 + b + a + 1) / den
    v = a ** 3 / den
    w = (z ** 2 - z + 1) ** 3 / (z ** 2 * (z - 1) ** 2)
    return u, v, w


def l5_w_quadratic(u, v):
    """(c0, c1, c2) with c2 w^2 + c1 w + c0 = 0 on the L5 (u, v, w) surface."""
    u, v = _q(u), _q(v)
    c2 = 64 * v ** 2 * (u - 4 * v + 1) ** 2
    c1 = -4 * v * (-272 * v ** 2 * u - 20 * v * u ** 2 + 2592 * v ** 3 - 4672 * v ** 2 + 4 * u ** 3
                   + 16 * v ** 3 * u ** 2 - 15 * v * u ** 4 - 96 * v ** 2 * u ** 2 + 24 * v ** 2 * u ** 3
                   + 2 * u ** 5 - 12 * u ** 4 + 92 * v * u ** 3 + 576 * v * u - 128 * v ** 4
                   - 288 * v ** 3 * u)
    c0 = (u ** 2 + 4 * v * u + 4 * v ** 2 - 48 * v) ** 3
    return c0, c1, c2


def uvw_surface() -> WPolynomial:
    """c2 w^2 + c1 w + c0 as a polynomial over Z in (u, v, w)."""
    wts = (1, 1, 1)
    u, v, w = (WPolynomial.variable(i, wts) for i in range(3))
    c0, c1, c2 = l5_w_quadratic_poly(u, v)
    return c2 * w ** 2 + c1 * w + c0


def l5_w_quadratic_poly(u: WPolynomial, v: WPolynomial):
    one = WPolynomial.constant(1, u.weights)

    def k(n):
        return WPolynomial.constant(n, u.weights)

    c2 = k(64) * v ** 2 * (u - k(4) * v + one) ** 2
    c1 = k(-4) * v * (k(-272) * v ** 2 * u - k(20) * v * u ** 2 + k(2592) * v ** 3 - k(4672) * v ** 2
                      + k(4) * u ** 3 + k(16) * v ** 3 * u ** 2 - k(15) * v * u ** 4
                      - k(96) * v ** 2 * u ** 2 + k(24) * v ** 2 * u ** 3 + k(2) * u ** 5 - k(12) * u ** 4
                      + k(92) * v * u ** 3 + k(576) * v * u - k(128) * v ** 4 - k(288) * v ** 3 * u)
    c0 = (u ** 2 + k(4) * v * u + k(4) * v ** 2 - k(48) * v) ** 3
    return c0, c1, c2


def l5_z_values(a, b, f: FieldDesc) -> list:
    """All z in GF(q) \\ {0, 1} for which (a, b, z) lies on the L5 surface."""
    u, v, _ = l5_uvw(L5Param(f(a), f(b), f(2)))
    c0, c1, c2 = l5_w_quadratic(u, v)
    out = []
    for z in f.elements():
        if z.is_zero() or (z - 1).is_zero():
            continue
        w = (z ** 2 - z + 1) ** 3 / (z ** 2 * (z - 1) ** 2)
        if (c2 * w ** 2 + c1 * w + c0).is_zero():
            out.append(z)
    return out


def scalar_relation(a: WPolynomial, b: WPolynomial):
    """The scalar s with a == s * b over a common field, or None if none exists."""
    if a.field is None or a.field != b.field:
        raise ValueError("scalar_relation needs two polynomials over the same field")
    if not b:
        return None
    lead_e, lead_c = next(iter(b))
    s = a.coefficient(lead_e) / lead_c
    return s if a == b.scale(s) else None


__all__ = [
    "WEIGHTS", "LocusId", "L5Param", "Unavailable", "PreconditionError", "availability",
    "F2_integer", "F3_mod5", "F2_mod5_display", "uvw_surface_mod5", "embedded_checksums",
    "expected_reduction", "locus_polynomial", "l3_igusa", "l2_curve", "l2_normal_form",
    "j_subcover_quadratic", "L5Param", "l5_curve", "l5_uvw", "l5_w_quadratic", "uvw_surface",
    "l5_z_values", "scalar_relation", "build_poly",
]
