"""Sparse multivariate polynomials graded by a weight vector.

Coefficients live either in Z (Python ints, unbounded) or in a finite field
(``FieldElem``).  A polynomial is immutable once built; the arithmetic
operators return new polynomials.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ffield import FieldDesc, FieldElem, make_field, reduce_int


class PolyError(ValueError):
    pass


class _Undefined:
    """Degree of the zero polynomial."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED_DEGREE = _Undefined()


@dataclass(frozen=True)
class WeightedDegree:
    homogeneous: bool
    degree: object  # int, or UNDEFINED_DEGREE for the zero polynomial / inhomogeneous
    degrees: tuple[int, ...] = ()


def _sort_key(exps):
    return (sum(exps), exps)


class WPolynomial:
    __slots__ = ("nvars", "weights", "terms", "field", "_hash")

    def __init__(self, terms: dict, weights: Sequence[int], field: FieldDesc | None = None):
        # trusted constructor: terms already coalesced, zero-free, canonical exponent tuples
        self.nvars = len(weights)
        self.weights = tuple(weights)
        self.field = field
        self.terms = dict(sorted(terms.items(), key=lambda t: _sort_key(t[0]), reverse=True))
        self._hash = None

    # -- construction ----------------------------------------------------------

    @classmethod
    def zero(cls, weights, field=None) -> "WPolynomial":
        return cls({}, weights, field)

    @classmethod
    def variable(cls, i: int, weights, field=None) -> "WPolynomial":
        e = [0] * len(weights)
        e[i] = 1
        one = field.one if field else 1
        return cls({tuple(e): one}, weights, field)

    @classmethod
    def constant(cls, c, weights, field=None) -> "WPolynomial":
        if field is not None:
            c = field(c)
        if not c:
            return cls.zero(weights, field)
        return cls({(0,) * len(weights): c}, weights, field)

    # -- basic protocol ----------------------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, exps) -> object:
        c = self.terms.get(tuple(exps))
        if c is None:
            return self.field.zero if self.field else 0
        return c

    def __eq__(self, other):
        if not isinstance(other, WPolynomial):
            return NotImplemented
        return (self.weights == other.weights and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.weights, self.field, tuple(self.terms.items())))
        return self._hash

    def __repr__(self):
        dom = repr(self.field) if self.field else "ZZ"
        return f"<WPolynomial {len(self)} terms over {dom}, weights {self.weights}>"

    def __str__(self):
        names = "xyzw" if self.nvars == 4 else [f"x{i}" for i in range(self.nvars)]
        out = []
        for e, c in self:
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k)
            out.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(out) or "0"

    # -- arithmetic ---------------------------------------------------------------

    def _check_compatible(self, other: "WPolynomial"):
        if self.weights != other.weights:
            raise PolyError(f"weight mismatch {self.weights} vs {other.weights}")
        if self.field != other.field:
            raise PolyError(f"coefficient domain mismatch {self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return WPolynomial(terms, self.weights, self.field)

    def __neg__(self):
        return WPolynomial({e: -c for e, c in self}, self.weights, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, WPolynomial):
            return self.scale(other)
        self._check_compatible(other)
        terms: dict = {}
        for e1, c1 in self:
            for e2, c2 in other:
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return WPolynomial({e: c for e, c in terms.items() if c}, self.weights, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = WPolynomial.constant(1, self.weights, self.field)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "WPolynomial":
        if self.field is not None:
            c = self.field(c)
        return WPolynomial({e: v * c for e, v in self if v * c}, self.weights, self.field)

    # -- evaluation ---------------------------------------------------------------

    def eval(self, point: Sequence) -> object:
        """Exact value at ``point``; entries may be ints, Fractions or FieldElems.

        Powers of each coordinate are computed once per call.
        """
        if len(point) != self.nvars:
            raise PolyError(f"expected {self.nvars} coordinates, got {len(point)}")
        if self.field is not None:
            point = [self.field(a) for a in point]
        maxexp = [0] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k > maxexp[i]:
                    maxexp[i] = k
        powers = []
        for a, m in zip(point, maxexp):
            pw = [1] * (m + 1)
            for k in range(1, m + 1):
                pw[k] = pw[k - 1] * a if k > 1 else a
            powers.append(pw)
        total = self.field.zero if self.field is not None else 0
        for e, c in self:
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k]
            total = total + t
        return total

    __call__ = eval

    # -- structure ------------------------------------------------------------------

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def split_last(self) -> list["WPolynomial"]:
        """Coefficients G_j with F = sum_j G_j * x_last^j (G_j keeps all variables,
        exponent of the last one set to zero)."""
        n = self.nvars - 1
        parts: dict[int, dict] = {}
        for e, c in self:
            parts.setdefault(e[n], {})[e[:n] + (0,)] = c
        deg = max(parts, default=0)
        return [WPolynomial(parts.get(j, {}), self.weights, self.field) for j in range(deg + 1)]

    def checksum(self) -> str:
        return hashlib.sha256(dumps(self).encode()).hexdigest()


# --- module-level operations ------------------------------------------------------

def build_poly(terms: Iterable[tuple[Sequence[int], object]], weights: Sequence[int],
               field: FieldDesc | None = None) -> WPolynomial:
    """Build from ``(exponents, coefficient)`` pairs, summing duplicates and dropping zeros."""
    weights = tuple(int(w) for w in weights)
    if not weights or any(w <= 0 for w in weights):
        raise PolyError(f"weights must be positive, got {weights}")
    acc: dict = {}
    for exps, c in terms:
        exps = tuple(int(k) for k in exps)
        if len(exps) != len(weights):
            raise PolyError(f"exponent vector {exps} does not match {len(weights)} variables")
        if any(k < 0 for k in exps):
            raise PolyError(f"negative exponent in {exps}")
        if field is not None:
            c = field(c)
        elif not isinstance(c, int):
            raise PolyError(f"integer coefficient expected, got {c!r}")
        acc[exps] = acc.get(exps, 0) + c
    return WPolynomial({e: c for e, c in acc.items() if c}, weights, field)


def weighted_degree(poly: WPolynomial) -> WeightedDegree:
    degs = sorted({sum(w * k for w, k in zip(poly.weights, e)) for e in poly.terms})
    if not degs:
        return WeightedDegree(True, UNDEFINED_DEGREE, ())
    if len(degs) == 1:
        return WeightedDegree(True, degs[0], tuple(degs))
    return WeightedDegree(False, UNDEFINED_DEGREE, tuple(degs))


def homogeneous_degree(poly: WPolynomial) -> int:
    """Weighted degree, raising if ``poly`` is zero or not weighted-homogeneous."""
    wd = weighted_degree(poly)
    if not wd.homogeneous or wd.degree is UNDEFINED_DEGREE:
        raise PolyError(f"polynomial is not weighted-homogeneous (degrees {wd.degrees})")
    return wd.degree


def reduce_mod(poly: WPolynomial, f: FieldDesc) -> WPolynomial:
    if poly.field is not None:
        raise PolyError("reduce_mod expects integer coefficients")
    terms = {}
    for e, c in poly:
        r = reduce_int(f, c)
        if r:
            terms[e] = r
    return WPolynomial(terms, poly.weights, f)


def change_field(poly: WPolynomial, f: FieldDesc) -> WPolynomial:
    """Move a polynomial with prime-subfield coefficients into ``f``.

    Integer polynomials are reduced; field polynomials must share the
    characteristic and have coefficients in GF(p).
    """
    if poly.field is None:
        return reduce_mod(poly, f)
    if poly.field == f:
        return poly
    if poly.field.p != f.p:
        raise PolyError(f"cannot move {poly.field!r} coefficients into {f!r}")
    terms = {}
    for e, c in poly:
        if any(c.coeffs[1:]):
            raise PolyError(f"coefficient {c!r} is not in the prime field")
        terms[e] = reduce_int(f, c.coeffs[0])
    return WPolynomial(terms, poly.weights, f)


def wpartial(poly: WPolynomial, i: int) -> WPolynomial:
    """Formal partial derivative in variable ``i``."""
    if not 0 <= i < poly.nvars:
        raise PolyError(f"variable index {i} out of range")
    terms = {}
    for e, c in poly:
        k = e[i]
        if k:
            d = c * k
            if d:
                e2 = list(e)
                e2[i] = k - 1
                terms[tuple(e2)] = d
    return WPolynomial(terms, poly.weights, poly.field)


def poly_combine(op: str, a: WPolynomial, b: WPolynomial) -> WPolynomial:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_equal(a: WPolynomial, b: WPolynomial) -> tuple[bool, tuple | None]:
    """``(True, None)`` or ``(False, exponents)`` for the first differing term
    in canonical (graded-lex, descending) order."""
    a._check_compatible(b)
    keys = sorted(set(a.terms) | set(b.terms), key=_sort_key, reverse=True)
    for e in keys:
        if a.terms.get(e) != b.terms.get(e):
            return False, e
    return True, None


# --- text format --------------------------------------------------------------------
#
#   # comment
#   weights 2 4 6 10
#   field 5 1            (optional; absent means integer coefficients)
#   <coeff> <e0> <e1> ...
#
# Field coefficients are written as their index (see ffield.FieldElem.index);
# over a prime field any integer is accepted and reduced.

def dumps(poly: WPolynomial) -> str:
    lines = ["weights " + " ".join(map(str, poly.weights))]
    if poly.field is not None:
        lines.append(f"field {poly.field.p} {poly.field.k}")
    for e, c in poly:
        coeff = c.index if poly.field is not None else c
        lines.append(" ".join(map(str, (coeff,) + e)))
    return "\n".join(lines) + "\n"


def loads(text: str) -> WPolynomial:
    weights = None
    field = None
    terms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "weights":
            weights = [int(w) for w in rest]
        elif head == "field":
            field = make_field(int(rest[0]), int(rest[1]) if len(rest) > 1 else 1)
        else:
            if weights is None:
                raise PolyError(f"line {lineno}: term before 'weights' header")
            nums = [int(t) for t in line.split()]
            if len(nums) != len(weights) + 1:
                raise PolyError(f"line {lineno}: expected {len(weights) + 1} fields")
            c = nums[0]
            if field is not None:
                if field.k == 1:
                    c = reduce_int(field, c)
                elif 0 <= c < field.q:
                    c = field.from_index(c)
                else:
                    raise PolyError(f"line {lineno}: element index {c} outside GF({field.q})")
            terms.append((nums[1:], c))
    if weights is None:
        raise PolyError("missing 'weights' header")
    return build_poly(terms, weights, field)
