"""Bounds and congruences for point counts of weighted projective hypersurfaces."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass

from .wpoly import WPolynomial

HOLDS, VIOLATED, NOT_APPLICABLE = "holds", "violated", "not-applicable"


@dataclass(frozen=True)
class CheckReport:
    name: str
    applicable: bool
    reason: str
    observed: object
    expected: object
    verdict: str

    def to_dict(self) -> dict:
        return asdict(self)


def pn(q: int, n: int) -> int:
    """q^n + ... + q + 1 (the point count of ordinary projective n-space)."""
    if q < 2 or n < 0:
        raise ValueError("need q >= 2 and n >= 0")
    return sum(q ** i for i in range(n + 1))


def mu(weights, d: int) -> int:
    """ceil((sum(weights) - d) / d)."""
    if d < 1:
        raise ValueError("degree must be positive")
    return -((d - sum(weights)) // d)


def min_lcm(weights) -> int:
    """min lcm(w_r, w_s) over pairs r < s."""
    return min(math.lcm(a, b) for a, b in itertools.combinations(weights, 2))


@dataclass(frozen=True)
class AubryBound:
    linear: int  # (d / w0) q^(n-1) + p_(n-2)
    min_form: int  # min(p_n, linear)

    @property
    def bound(self) -> int:
        return self.linear


def aubry_bound(d: int, weights, q: int, n: int | None = None) -> AubryBound:
    n = len(weights) - 1 if n is None else n
    w0 = weights[0]
    if d % w0:
        raise ValueError(f"w0 = {w0} does not divide d = {d}")
    lin = (d // w0) * q ** (n - 1) + (pn(q, n - 2) if n >= 2 else 0)
    return AubryBound(lin, min(pn(q, n), lin))


def aubry_check(count: int, d: int, weights, q: int, n: int | None = None) -> CheckReport:
    b = aubry_bound(d, weights, q, n)
    return CheckReport("aubry", True, f"min-form value {b.min_form}", count, b.bound,
                       HOLDS if count <= b.bound else VIOLATED)


def _residue_report(name, value, modulus, target, applicable, reason) -> CheckReport:
    r = value % modulus
    verdict = (HOLDS if r == target % modulus else VIOLATED) if applicable else NOT_APPLICABLE
    return CheckReport(name, applicable, reason, r, target % modulus, verdict)


def serre_check(count: int, p: int, d: int, weights) -> CheckReport:
    n = len(weights) - 1
    if d > n:
        return CheckReport("serre", False, f"degree {d} > n = {n}", count, None, NOT_APPLICABLE)
    return _residue_report("serre", count, p, 1, True, f"degree {d} <= n = {n}")


def conj2_check(count: int, q: int, d: int, weights) -> CheckReport:
    """Residue of the count mod q against 1; evaluated even outside d <= n, which is
    noted in ``reason``."""
    n = len(weights) - 1
    note = f"degree hypothesis d <= n {'holds' if d <= n else 'fails'} (d = {d}, n = {n})"
    return _residue_report("conjecture-2", count, q, 1, True, note)


def _every_var_appears(F: WPolynomial) -> bool:
    return all(any(e[i] for e in F.terms) for i in range(F.nvars))


def _hyperplane_index(F: WPolynomial) -> int | None:
    """i with V(F) inside {x_i = 0} over the algebraic closure, i.e. F = c * x_i^k."""
    if len(F.terms) != 1:
        return None
    (e,) = F.terms
    nonzero = [i for i, a in enumerate(e) if a]
    return nonzero[0] if len(nonzero) == 1 else None


def prop_checks(count: int, q: int, d: int, weights, F: WPolynomial | None = None,
                affine_zeros: int | None = None) -> list[CheckReport]:
    """Parts (i)-(iii) of the congruences for weighted hypersurfaces.

    (i)   all variables appear in F  ->  |N(F)| = 0 mod q^mu   (N(F): affine zeros)
    (ii)  mu >= 1, X in no coordinate hyperplane  ->  |X| = 1 + ... + q^(mu-1) mod q^mu
    (iii) d < sum(w) <= 2d  ->  |X| = 1 mod q

    The congruences hold for the count of Frobenius-fixed geometric points,
    (|N(F)| - 1) / (q - 1).  The orbit count used elsewhere in this package can
    differ from it when some weight shares a factor with q - 1, so pass
    whichever count is to be tested.
    """
    m = mu(weights, d)
    out = []
    # (i)
    if F is None or affine_zeros is None:
        out.append(CheckReport("prop-i", False, "needs the polynomial and its affine zero count",
                               affine_zeros, None, NOT_APPLICABLE))
    elif not _every_var_appears(F):
        out.append(CheckReport("prop-i", False, "some variable does not appear in F",
                               affine_zeros, None, NOT_APPLICABLE))
    elif m < 1:
        out.append(CheckReport("prop-i", False, f"mu = {m} < 1: congruence is vacuous",
                               affine_zeros, None, NOT_APPLICABLE))
    else:
        out.append(_residue_report("prop-i", affine_zeros, q ** m, 0, True, f"mu = {m}"))
    # (ii)
    if m < 1:
        out.append(CheckReport("prop-ii", False, f"mu = {m} < 1", count, None, NOT_APPLICABLE))
    elif F is None:
        out.append(CheckReport("prop-ii", False, "needs the polynomial", count, None, NOT_APPLICABLE))
    elif (i := _hyperplane_index(F)) is not None:
        out.append(CheckReport("prop-ii", False, f"F is a power of x{i}: X lies in a coordinate hyperplane",
                               count, None, NOT_APPLICABLE))
    else:
        out.append(_residue_report("prop-ii", count, q ** m, pn(q, m - 1), True, f"mu = {m}"))
    # (iii)
    s = sum(weights)
    if d < s <= 2 * d:
        out.append(_residue_report("prop-iii", count, q, 1, True, f"{d} < {s} <= {2 * d}"))
    else:
        out.append(CheckReport("prop-iii", False, f"sum of weights {s} not in ({d}, {2 * d}]",
                               count, None, NOT_APPLICABLE))
    return out


def congruences(count: int, q: int, p: int, d: int, weights, F: WPolynomial | None = None,
                affine_zeros: int | None = None) -> list[CheckReport]:
    return [serre_check(count, p, d, weights), conj2_check(count, q, d, weights),
            *prop_checks(count, q, d, weights, F, affine_zeros)]


__all__ = [
    "CheckReport", "AubryBound", "pn", "mu", "min_lcm", "aubry_bound", "aubry_check",
    "serre_check", "conj2_check", "prop_checks", "congruences", "HOLDS", "VIOLATED", "NOT_APPLICABLE",
]
