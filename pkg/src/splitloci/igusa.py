"""Genus-2 curves, their Igusa-Clebsch invariants, and split-Jacobian detection.

The invariants are the Igusa-Clebsch tuple (I2, I4, I6, I10) of
``y^2 = f(x)``, stored as integer polynomials in the coefficients of f.  This
is the convention under which the embedded L2 equation vanishes on curves with
an extra involution (checked by the calibration tests); it is used as
``(J2, J4, J6, J10)`` throughout the package.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import loci
from .ffield import FieldDesc, FieldElem, FieldError
from .wpoly import WPolynomial, change_field, loads, reduce_mod

WEIGHTS = (2, 4, 6, 10)


class CharacteristicError(FieldError):
    """Invariants or detection requested in an unsupported characteristic."""


@dataclass(frozen=True)
class Genus2Curve:
    """``y^2 = c0 + c1 x + ... + c6 x^6``; ``field`` is None for rational coefficients."""

    coeffs: tuple
    field: FieldDesc | None = None

    def __post_init__(self):
        if len(self.coeffs) != 7:
            raise ValueError("expected 7 coefficients c0..c6 (use c6 = 0 for a quintic)")
        conv = self.field if self.field is not None else Fraction
        object.__setattr__(self, "coeffs", tuple(conv(c) for c in self.coeffs))
        if self.degree not in (5, 6):
            raise ValueError(f"f has degree {self.degree}, expected 5 or 6")

    @classmethod
    def from_high(cls, high_first, field=None) -> "Genus2Curve":
        """Build from ``(c6, c5, ..., c0)``, the order used on the command line."""
        return cls(tuple(reversed(tuple(high_first))), field)

    @property
    def degree(self) -> int:
        for i in range(6, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    @property
    def is_smooth(self) -> bool:
        return bool(igusa(self).J10)

    def twist(self, lam) -> "Genus2Curve":
        """The model obtained by x -> lam * x."""
        return Genus2Curve(tuple(c * lam ** i for i, c in enumerate(self.coeffs)), self.field)


@dataclass(frozen=True)
class IgusaTuple:
    J2: object
    J4: object
    J6: object
    J10: object

    def __iter__(self):
        return iter((self.J2, self.J4, self.J6, self.J10))

    def as_list(self) -> list:
        return list(self)


def _ic_data(name: str) -> WPolynomial:
    text = resources.files(__package__).joinpath("data", f"igusa_clebsch_{name}.poly").read_text()
    return loads(text)


@functools.lru_cache(maxsize=None)
def _ic_polys(f: FieldDesc | None) -> tuple[WPolynomial, ...]:
    polys = tuple(_ic_data(n) for n in ("I2", "I4", "I6", "I10"))
    if f is None:
        return polys
    return tuple(reduce_mod(P, f) for P in polys)


def _check_char(f: FieldDesc | None):
    if f is None:
        return
    if f.p == 2:
        raise CharacteristicError("characteristic 2 is not supported")
    if f.p == 3:
        raise CharacteristicError("invariants of individual curves in characteristic 3 are not supported")


def igusa(curve: Genus2Curve) -> IgusaTuple:
    """The Igusa-Clebsch invariants of ``curve``; a quintic is a sextic with c6 = 0."""
    _check_char(curve.field)
    vals = [P.eval(curve.coeffs) for P in _ic_polys(curve.field)]
    return IgusaTuple(*vals)


def normalize_point(t: IgusaTuple, weights=WEIGHTS) -> tuple:
    """Canonical representative of the weighted orbit of ``t`` over a finite field.

    Scans every lambda != 0 and keeps the image whose index tuple is smallest.
    """
    coords = tuple(t)
    if not coords or not isinstance(coords[0], FieldElem):
        raise TypeError("normalize_point needs coordinates in a finite field")
    if not any(coords):
        raise ValueError("the zero tuple is not a point")
    f = coords[0].field
    best = None
    for lam in f.elements()[1:]:
        img = tuple(c * lam ** w for c, w in zip(coords, weights))
        key = tuple(e.index for e in img)
        if best is None or key < best[0]:
            best = (key, img)
    return best[1]


# --- detection ----------------------------------------------------------------------

@dataclass(frozen=True)
class Detection:
    verdict: str  # "split" | "not_split" | "unavailable"
    igusa: tuple = ()
    fn_value: object = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "igusa": [_plain(c) for c in self.igusa],
            "fn_value": None if self.fn_value is None else _plain(self.fn_value),
            "reason": self.reason,
        }


def _plain(c):
    if isinstance(c, FieldElem):
        return c.index if c.field.k > 1 else c.coeffs[0]
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else c.numerator
    return c


@functools.lru_cache(maxsize=None)
def _locus_for(n: int, f: FieldDesc | None) -> WPolynomial:
    if f is None:
        if n == 2:
            return loci.F2_integer()
        raise loci.Unavailable(f"locus form unavailable for ({n}, p=0)")
    if n == 2:
        return reduce_mod(loci.F2_integer(), f)
    if n == 3 and f.p == 5:
        return change_field(loci.F3_mod5(), f)
    raise loci.Unavailable(f"locus form unavailable for ({n}, p={f.p})")


def detect_invariants(t: IgusaTuple, n: int, f: FieldDesc | None = None) -> Detection:
    """Invariant-level detection: split iff F_n(t) = 0 and J10 != 0."""
    coords = tuple(t)
    if f is None and isinstance(coords[0], FieldElem):
        f = coords[0].field
    if f is not None and f.p in (2, 3):
        return Detection("unavailable", coords, reason=f"detection unavailable in characteristic {f.p}")
    try:
        F = _locus_for(n, f)
    except loci.Unavailable as exc:
        return Detection("unavailable", coords, reason=str(exc))
    val = F.eval(coords)
    if not coords[3]:
        return Detection("not_split", coords, val, reason="J10 = 0: singular curve")
    return Detection("split" if not val else "not_split", coords, val)


def detect(curve: Genus2Curve, n: int) -> Detection:
    f = curve.field
    if f is not None and f.p in (2, 3):
        return Detection("unavailable", reason=f"detection unavailable in characteristic {f.p}")
    return detect_invariants(igusa(curve), n, f)


__all__ = [
    "Genus2Curve", "IgusaTuple", "Detection", "CharacteristicError",
    "igusa", "normalize_point", "detect", "detect_invariants",
]
