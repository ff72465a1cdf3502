"""Exact arithmetic in GF(p) and GF(p^k), k <= 4.

Elements are stored in the polynomial basis 1, t, ..., t^(k-1) over GF(p),
reduced modulo a fixed monic irreducible polynomial.  Each element also has an
integer *index* ``sum(c_i * p**i)`` in ``range(q)``; the index order is the
enumeration order used everywhere (zero first), and the numpy tables used by
the point counter are addressed by it.
"""

from __future__ import annotations

import functools
import itertools
import operator
from dataclasses import dataclass, field

import numpy as np

MAX_DEGREE = 4


class FieldError(ValueError):
    """Invalid field parameters or mixed-field arithmetic."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- dense polynomials over GF(p), coefficient lists low -> high ---------------

def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    # m is monic
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm] + [0] * (dm - len(a))


def _divides(d: tuple[int, ...], m: tuple[int, ...], p: int) -> bool:
    return not any(_poly_mod(list(m), d, p))


def is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m) // 2."""
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _divides(tuple(low) + (1,), m, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # lexicographic in (c_{k-1}, ..., c_0): e.g. t^2 + 1 comes before t^2 + t + 2
    for high_first in itertools.product(range(p), repeat=k):
        m = tuple(reversed(high_first)) + (1,)
        if m[0] and is_irreducible(m, p):
            return m
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


# --- field descriptor ---------------------------------------------------------

@dataclass(frozen=True)
class FieldDesc:
    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p ** self.k)

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    # constructors
    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldError(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return reduce_int(self, value)
        if isinstance(value, (tuple, list)):
            if len(value) != self.k:
                raise FieldError(f"expected {self.k} coefficients")
            return FieldElem(self, tuple(int(c) % self.p for c in value))
        # fractions.Fraction and friends
        num, den = getattr(value, "numerator", None), getattr(value, "denominator", None)
        if num is not None and den is not None:
            return reduce_int(self, num) / reduce_int(self, den)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.k)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, (1,) + (0,) * (self.k - 1))

    def from_index(self, i: int) -> "FieldElem":
        coeffs = []
        for _ in range(self.k):
            i, r = divmod(i, self.p)
            coeffs.append(r)
        return FieldElem(self, tuple(coeffs))

    def elements(self) -> list["FieldElem"]:
        return all_elements(self)

    @property
    def generator(self) -> "FieldElem":
        """Smallest-index generator of the multiplicative group."""
        return _generator(self)

    def tables(self) -> "FieldTables":
        return field_tables(self)


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldDesc:
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if not 1 <= k <= MAX_DEGREE:
        raise FieldError(f"extension degree {k} outside [1, {MAX_DEGREE}]")
    return FieldDesc(p, k, _smallest_irreducible(p, k))


def reduce_int(f: FieldDesc, n: int) -> "FieldElem":
    """Image of an integer under Z -> GF(p) inside GF(p^k)."""
    return FieldElem(f, (n % f.p,) + (0,) * (f.k - 1))


@functools.lru_cache(maxsize=None)
def all_elements(f: FieldDesc) -> list["FieldElem"]:
    return [f.from_index(i) for i in range(f.q)]


@functools.lru_cache(maxsize=None)
def _generator(f: FieldDesc) -> "FieldElem":
    n = f.q - 1
    primes = [d for d in range(2, n + 1) if n % d == 0 and is_prime(d)]
    for g in all_elements(f)[1:]:
        if all(g ** (n // r) != f.one for r in primes):
            return g
    raise FieldError("no generator found")  # pragma: no cover


# --- elements -----------------------------------------------------------------

class FieldElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.field.p + c
        return i

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.coeffs[0]}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(f"{c}{'*' if mono else ''}{mono}" if c != 1 or not mono else mono)
        return " + ".join(reversed(terms)) or "0"

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = reduce_int(self.field, other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, int):
            return reduce_int(self.field, other)
        return self.field(other)

    def __add__(self, other):
        o = self._coerce(other)
        p = self.field.p
        return FieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.k == 1:
            return FieldElem(f, ((self.coeffs[0] * o.coeffs[0]) % f.p,))
        prod = [0] * (2 * f.k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return FieldElem(f, tuple(_poly_mod(prod, f.modulus, f.p)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in {self.field!r}")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()


_BINARY = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
    "pow": operator.pow,
}


def arith(op: str, a: FieldElem, b=None) -> FieldElem:
    """Dispatch form of the element operators: add, sub, mul, div, pow, inv, neg."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if op not in _BINARY:
        raise ValueError(f"unknown operation {op!r}")
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError("pow takes a non-negative integer exponent")
        return a ** b
    if not isinstance(b, FieldElem):
        raise TypeError("second operand must be a field element")
    return _BINARY[op](a, a._coerce(b))


# --- lookup tables for vectorized work ------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldTables:
    """Index-addressed operation tables.

    ``add`` and ``mul`` are flat arrays of length q*q: ``add[a * q + b]``.
    """

    field: FieldDesc
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray

    def powers(self, max_exp: int) -> np.ndarray:
        """Array ``P`` with ``P[e, a] = a**e`` (by index), 0 <= e <= max_exp."""
        q = self.field.q
        out = np.zeros((max_exp + 1, q), dtype=np.int64)
        out[0] = 1
        base = np.arange(q, dtype=np.int64)
        for e in range(1, max_exp + 1):
            out[e] = self.mul[out[e - 1] * q + base]
        return out


@functools.lru_cache(maxsize=None)
def field_tables(f: FieldDesc) -> FieldTables:
    q, p, k = f.q, f.p, f.k
    idx = np.arange(q, dtype=np.int64)
    digits = np.stack([(idx // p ** i) % p for i in range(k)])  # (k, q)
    weights = p ** np.arange(k, dtype=np.int64)
    add = ((digits[:, :, None] + digits[:, None, :]) % p * weights[:, None, None]).sum(axis=0)
    neg = ((-digits) % p * weights[:, None]).sum(axis=0)
    # multiplication by the basis element t, as a map on index vectors
    prod = np.zeros((2 * k - 1, q, q), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[i + j] += digits[i][:, None] * digits[j][None, :]
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg] % p
        prod[deg] = 0
        for j in range(k):
            prod[deg - k + j] -= c * f.modulus[j]
    mul = ((prod[:k] % p) * weights[:, None, None]).sum(axis=0)
    return FieldTables(f, add.reshape(-1), mul.reshape(-1), neg)
