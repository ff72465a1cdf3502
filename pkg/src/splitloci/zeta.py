"""Zeta-function fits from point-count sequences, in exact rational arithmetic.

Two conventions are supported.

weil
    Z(t) = P(t) / prod(1 - r t) with P(t) = prod(1 - alpha_i t), so that
    N_k = sum r^k - sum alpha_i^k.  The numerator is recovered from the power
    sums of the alphas with Newton's identities.
ordinary
    The power-series coefficients of P(t) / prod(1 - r t) are matched directly
    against the log-series entries N_k / k.  This is how the rational forms
    printed next to the count tables are compared with the counts; it is kept
    so those comparisons can be reproduced and their residuals reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

CONVENTIONS = ("weil", "ordinary")


class FitError(ValueError):
    """Underdetermined or infeasible fit; ``value`` holds the offending quantity."""

    def __init__(self, msg: str, value=None):
        self.value = value
        super().__init__(msg)


def log_series(counts) -> list[Fraction]:
    """Coefficients N_k / k of log Z(t)."""
    counts = list(counts)
    if not counts:
        raise ValueError("empty count sequence")
    return [Fraction(n, k) for k, n in enumerate(counts, start=1)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def denominator_poly(poles) -> list[Fraction]:
    """Coefficients of prod(1 - r t), constant term first."""
    out = [Fraction(1)]
    for r in poles:
        out = _poly_mul(out, [Fraction(1), Fraction(-r)])
    return out


def series(num, den, n_terms: int) -> list[Fraction]:
    """First ``n_terms`` power-series coefficients of num/den (den[0] != 0)."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    out = []
    for k in range(n_terms):
        c = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            c -= den[j] * out[k - j]
        out.append(c / den[0])
    return out


def exp_series(counts, n_terms: int | None = None) -> list[Fraction]:
    """Power-series coefficients of Z(t) = exp(sum N_k t^k / k)."""
    L = log_series(counts)
    m = n_terms if n_terms is not None else len(L) + 1
    z = [Fraction(1)] + [Fraction(0)] * (m - 1)
    # z' = (log z)' z, coefficientwise
    for k in range(1, m):
        s = sum(j * L[j - 1] * z[k - j] for j in range(1, min(k, len(L)) + 1))
        z[k] = s / k
    return z


@dataclass
class ZetaFit:
    counts: list[int]
    denominator: list[int]  # pole reciprocals
    convention: str
    numerator: list[Fraction]  # constant term first
    predicted: list[Fraction] = field(default_factory=list)  # predicted N_k
    residuals: list[Fraction] = field(default_factory=list)  # observed - predicted
    q: int | None = None

    def to_dict(self) -> dict:
        def js(x):
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else str(x)

        return {
            "counts": list(self.counts), "q": self.q, "denominator": list(self.denominator),
            "convention": self.convention, "numerator": [js(c) for c in self.numerator],
            "predicted": [js(c) for c in self.predicted], "residuals": [js(c) for c in self.residuals],
        }

    def numerator_str(self) -> str:
        parts = []
        for i, c in enumerate(self.numerator):
            if c == 0 and i:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{abs(c)}{mono}" if abs(c) != 1 or not mono else mono))
        s = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        return s + "".join(f" {sg} {body}" for sg, body in parts[1:])


def _newton_e(s, deg):
    """Elementary symmetric functions e_1..e_deg from power sums s_1..s_deg."""
    e = [Fraction(1)]
    for k in range(1, deg + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * s[i - 1] for i in range(1, k + 1))
        e.append(Fraction(acc, 1) / k)
    return e


def _newton_s(e, n):
    """Power sums s_1..s_n from e_0..e_d (e_i = 0 beyond d)."""
    d = len(e) - 1
    s = []
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            acc += (-1) ** (i - 1) * e[i] * s[k - i - 1]
        if k <= d:
            acc += (-1) ** (k - 1) * k * e[k]
        s.append(acc)
    return s


def general_fit(counts, poles, numerator_degree: int, convention: str = "weil",
                q: int | None = None) -> ZetaFit:
    """Fit a degree-``numerator_degree`` numerator over the given poles.

    The first ``numerator_degree`` counts determine the fit; residuals at the
    remaining counts are reported, never absorbed.
    """
    counts = [int(c) for c in counts]
    poles = [int(r) for r in poles]
    d = numerator_degree
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if d < 0 or len(counts) < d:
        raise FitError(f"{len(counts)} counts cannot determine a degree-{d} numerator")
    m = len(counts)
    if convention == "weil":
        s = [sum(Fraction(r) ** k for r in poles) - counts[k - 1] for k in range(1, d + 1)]
        e = _newton_e(s, d)
        for k, ek in enumerate(e):
            if ek.denominator != 1:
                raise FitError(f"e_{k} = {ek} is not an integer: no integral numerator fits", ek)
        numerator = [(-1) ** k * ek for k, ek in enumerate(e)]
        alpha = _newton_s(e, m)
        predicted = [sum(Fraction(r) ** k for r in poles) - alpha[k - 1] for k in range(1, m + 1)]
    else:
        target = [Fraction(1)] + log_series(counts)
        Q = denominator_poly(poles)
        numerator = [sum(Q[j] * target[i - j] for j in range(min(i, len(Q) - 1) + 1))
                     for i in range(d + 1)]
        ser = series(numerator, Q, m + 1)
        predicted = [k * ser[k] for k in range(1, m + 1)]
    residuals = [Fraction(c) - pr for c, pr in zip(counts, predicted)]
    return ZetaFit(counts, poles, convention, numerator, predicted, residuals, q)


@dataclass
class LinearFit:
    a: int
    predicted: list[int]  # weil-convention N_k for k = 1..len(counts)+1
    residuals: list[int]  # observed - predicted where observed exists


def linear_fit(counts, q: int) -> LinearFit:
    """a in P1(t) = 1 + a t over (1 - t)(1 - q^2 t), from N_1 = a + 1 + q^2."""
    counts = list(counts)
    if not counts:
        raise ValueError("empty count sequence")
    a = counts[0] - 1 - q * q
    predicted = [1 + q ** (2 * k) - (-a) ** k for k in range(1, len(counts) + 2)]
    residuals = [c - pr for c, pr in zip(counts, predicted)]
    return LinearFit(a, predicted, residuals)


def compare_numerator(fit: ZetaFit, claimed) -> list[tuple[int, Fraction, Fraction]]:
    """Coefficients where ``fit.numerator`` and ``claimed`` differ, as (degree, ours, claimed)."""
    n = max(len(fit.numerator), len(claimed))
    ours = list(fit.numerator) + [Fraction(0)] * (n - len(fit.numerator))
    theirs = [Fraction(c) for c in claimed] + [Fraction(0)] * (n - len(claimed))
    return [(i, a, b) for i, (a, b) in enumerate(zip(ours, theirs)) if a != b]


__all__ = [
    "ZetaFit", "LinearFit", "FitError", "CONVENTIONS", "log_series", "linear_fit", "general_fit",
    "series", "exp_series", "denominator_poly", "compare_numerator",
]
