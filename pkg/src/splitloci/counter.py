"""Rational points of weighted projective hypersurfaces over GF(q).

The count uses the orbit-stabilizer formula

    |X(F_q)| = sum over nonempty S of  N_S * gcd(k_S, q - 1) / (q - 1),

where N_S is the number of affine solutions whose nonzero coordinates are
exactly the indices in S and k_S is the gcd of the weights indexed by S.
A tuple with support S is fixed by lambda iff lambda^(w_i) = 1 for all i in S,
i.e. iff lambda^(k_S) = 1, and GF(q)^* has gcd(k_S, q - 1) such elements.  So
each orbit of such tuples has (q - 1) / gcd(k_S, q - 1) members.

Enumeration shards over the first coordinate.  Inside a shard, F is split as
sum_j G_j * x_last^j; each G_j is evaluated once on the grid of the middle
coordinates, then Horner's rule runs over all values of the last coordinate.
All arithmetic is done with index-addressed numpy lookup tables.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .ffield import FieldDesc, field_tables, make_field
from .wpoly import PolyError, WPolynomial, change_field, reduce_mod, weighted_degree, wpartial

DEFAULT_GUARD = 250_000_000
ORACLE_GUARD = 2_000_000


class GuardExceeded(RuntimeError):
    """The enumeration is larger than the configured desk-scale limit."""


class CountError(RuntimeError):
    """Internal inconsistency, e.g. a non-integral orbit contribution."""


@dataclass(frozen=True)
class SupportRow:
    S: tuple[int, ...]
    N_S: int
    k_S: int
    contribution: int


@dataclass
class CountReport:
    field: str
    q: int
    weights: tuple[int, ...]
    locus: str
    rows: list[SupportRow]
    total_points: int
    nonzero_solutions: int
    total_affine_solutions: int
    singular_solutions: int | None = None
    singular_percent: float | None = None
    partition_count: int = 1
    elapsed: float = 0.0

    def body(self) -> dict:
        """The report without timing fields; identical across partitionings."""
        d = asdict(self)
        d.pop("elapsed")
        d.pop("partition_count")
        d["rows"] = [asdict(r) for r in self.rows]
        return d

    def to_dict(self) -> dict:
        d = self.body()
        d["partition_count"] = self.partition_count
        d["elapsed"] = self.elapsed
        return d


# --- compiled polynomials -------------------------------------------------------------

@dataclass(frozen=True)
class _Compiled:
    """Terms of a polynomial as (coefficient index, exponent row) arrays."""

    coeffs: np.ndarray  # (t,)
    exps: np.ndarray  # (t, nvars)


def _compile(P: WPolynomial) -> _Compiled:
    if not P:
        return _Compiled(np.zeros(0, dtype=np.int64), np.zeros((0, P.nvars), dtype=np.int64))
    coeffs = np.array([c.index for _, c in P], dtype=np.int64)
    exps = np.array([e for e, _ in P], dtype=np.int64)
    return _Compiled(coeffs, exps)


def _eval_vec(C: _Compiled, coords: list, q: int, mul: np.ndarray, add: np.ndarray,
              powtab: np.ndarray, size: int) -> np.ndarray:
    """Evaluate on index arrays ``coords`` (scalars broadcast); returns an index array."""
    acc = np.zeros(size, dtype=np.int64)
    for c, e in zip(C.coeffs, C.exps):
        v = np.full(size, c, dtype=np.int64)
        for x, k in zip(coords, e):
            if k:
                v = mul[v * q + powtab[k][x]]
        acc = add[acc * q + v]
    return acc


@dataclass(frozen=True)
class _Plan:
    p: int
    k: int
    weights: tuple[int, ...]
    G: tuple[_Compiled, ...]  # coefficients of x_last^j
    partials: tuple[_Compiled, ...]  # empty unless the census is requested
    max_exp: int


def _make_plan(F: WPolynomial, census: bool) -> _Plan:
    f = F.field
    G = tuple(_compile(g) for g in F.split_last()) if F else ()
    partials = tuple(_compile(wpartial(F, i)) for i in range(F.nvars)) if census else ()
    max_exp = max([max(e) for e in F.terms] + [1])
    return _Plan(f.p, f.k, F.weights, G, partials, max_exp)


def _shard(plan: _Plan, x0_values) -> tuple[np.ndarray, int]:
    """Support-mask histogram of solutions and singular tally for the given x0 values."""
    f = make_field(plan.p, plan.k)
    t = field_tables(f)
    q, add, mul = f.q, t.add, t.mul
    n = len(plan.weights)
    powtab = t.powers(plan.max_exp)
    nmid = n - 2
    mid = [a.reshape(-1) for a in np.indices((q,) * nmid, dtype=np.int64)] if nmid else []
    gsize = q ** nmid
    last = np.arange(q, dtype=np.int64)
    hist = np.zeros(1 << n, dtype=np.int64)
    singular = 0
    # support bits of the middle grid and of the last coordinate
    mid_bits = np.zeros(gsize, dtype=np.int64)
    for i, a in enumerate(mid):
        mid_bits |= (a != 0).astype(np.int64) << (i + 1)
    last_bit = (last != 0).astype(np.int64) << (n - 1)
    for x0 in x0_values:
        coords = [np.int64(x0)] + mid
        if plan.G:
            Gv = [_eval_vec(g, coords, q, mul, add, powtab, gsize) for g in plan.G]
            val = np.broadcast_to(Gv[-1][:, None], (gsize, q)).copy()
            for g in reversed(Gv[:-1]):
                val = add[mul[val * q + last[None, :]] * q + g[:, None]]
            sol = val == 0
        else:
            sol = np.ones((gsize, q), dtype=bool)
        masks = (mid_bits[:, None] | last_bit[None, :]) | (1 if x0 else 0)
        hist += np.bincount(masks[sol], minlength=1 << n)
        if plan.partials:
            gi, li = np.nonzero(sol)
            m = len(gi)
            if m:
                pc = [np.int64(x0)] + [a[gi] for a in mid] + [last[li]]
                alive = np.ones(m, dtype=bool)
                for D in plan.partials:
                    alive &= _eval_vec(D, pc, q, mul, add, powtab, m) == 0
                singular += int(alive.sum())
                if x0 == 0:
                    # the origin is among the solutions; only nonzero tuples are counted
                    origin = np.ones(m, dtype=bool)
                    for a in pc[1:]:
                        origin &= a == 0
                    singular -= int((alive & origin).sum())
    return hist, singular


def _chunks(q: int, partitions: int) -> list[list[int]]:
    partitions = max(1, min(partitions, q))
    return [list(range(i, q, partitions)) for i in range(partitions)]


def _check_input(F: WPolynomial, f: FieldDesc, guard: int | None):
    if F.field != f:
        raise PolyError(f"polynomial is over {F.field!r}, not {f!r}")
    wd = weighted_degree(F)
    if F and not wd.homogeneous:
        raise PolyError("polynomial is not weighted-homogeneous; the orbit formula does not apply")
    if F.nvars < 2:
        raise PolyError("need at least two variables")
    if guard is not None and f.q ** F.nvars > guard:
        raise GuardExceeded(f"{f.q}^{F.nvars} = {f.q ** F.nvars} tuples exceeds the guard {guard}")


def support_rows(hist, weights, q: int) -> list[SupportRow]:
    n = len(weights)
    rows = []
    for mask in range(1, 1 << n):
        S = tuple(i for i in range(n) if mask >> i & 1)
        kS = math.gcd(*(weights[i] for i in S))
        N = int(hist[mask])
        contrib = Fraction(N * math.gcd(kS, q - 1), q - 1)
        if contrib.denominator != 1:
            raise CountError(f"non-integral contribution {contrib} for S={S}")
        rows.append(SupportRow(S, N, kS, int(contrib)))
    return rows


def count(F: WPolynomial, f: FieldDesc | None = None, *, partitions: int = 1, workers: int = 1,
          census: bool = False, guard: int | None = DEFAULT_GUARD, locus: str = "") -> CountReport:
    """Orbit-stabilizer point count of V(F) in P(weights) over ``f``.

    Results do not depend on ``partitions`` or ``workers``.
    """
    f = f or F.field
    _check_input(F, f, guard)
    start = time.perf_counter()
    plan = _make_plan(F, census)
    chunks = _chunks(f.q, partitions)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_shard, itertools.repeat(plan), chunks))
    else:
        parts = [_shard(plan, c) for c in chunks]
    hist = sum(h for h, _ in parts)
    singular = sum(s for _, s in parts)
    rows = support_rows(hist, F.weights, f.q)
    nonzero = int(hist[1:].sum())
    origin = int(hist[0])
    total_affine = nonzero + origin
    report = CountReport(
        field=repr(f), q=f.q, weights=F.weights, locus=locus or F.checksum()[:16], rows=rows,
        total_points=sum(r.contribution for r in rows), nonzero_solutions=nonzero,
        total_affine_solutions=total_affine, partition_count=len(chunks),
    )
    if census:
        report.singular_solutions = singular
        report.singular_percent = 100.0 * singular / total_affine if total_affine else 0.0
    report.elapsed = time.perf_counter() - start
    return report


def singular_census(F: WPolynomial, f: FieldDesc | None = None, **kw) -> tuple[int, float]:
    """(nonzero solutions where F and every partial vanish, percent of all affine solutions)."""
    r = count(F, f, census=True, **kw)
    return r.singular_solutions, r.singular_percent


# --- independent oracle ---------------------------------------------------------------

def orbit_oracle(F: WPolynomial, f: FieldDesc | None = None, guard: int | None = ORACLE_GUARD) -> int:
    """Number of weighted orbits among nonzero solutions, by explicit canonical forms.

    Pure Python; shares no code with :func:`count` beyond field arithmetic.
    """
    f = f or F.field
    _check_input(F, f, guard)
    elems = f.elements()
    units = elems[1:]
    # lam^w for every unit and weight, as an index -> index multiplication map
    scal = [[[(lam ** w * e).index for e in elems] for w in F.weights] for lam in units]
    reps = set()
    for tup in itertools.product(elems, repeat=F.nvars):
        if not any(tup):
            continue
        if F.eval(tup):
            continue
        idx = [e.index for e in tup]
        reps.add(min(tuple(s[i][a] for i, a in enumerate(idx)) for s in scal))
    return len(reps)


# --- extension sequences --------------------------------------------------------------

def _poly_over(source: WPolynomial, f: FieldDesc) -> WPolynomial:
    if source.field is None:
        return reduce_mod(source, f)
    return change_field(source, f)


def sequence(source, p: int, k_max: int, *, guard: int | None = DEFAULT_GUARD, **kw) -> tuple[list[int], list[CountReport]]:
    """Point counts over GF(p^k) for k = 1..k_max.

    ``source`` is an integer polynomial (reduced mod p), a polynomial over GF(p)
    (lifted), or a locus number 2 or 3.
    """
    from . import loci

    if k_max > 4:
        raise GuardExceeded("extension degree above 4 is outside desk scale")
    out, reports = [], []
    for k in range(1, k_max + 1):
        f = make_field(p, k)
        F = loci.locus_polynomial(source, f) if isinstance(source, int) else _poly_over(source, f)
        r = count(F, f, guard=guard, **kw)
        out.append(r.total_points)
        reports.append(r)
    return out, reports


__all__ = [
    "SupportRow", "CountReport", "GuardExceeded", "CountError", "count", "singular_census",
    "orbit_oracle", "sequence", "support_rows", "DEFAULT_GUARD", "ORACLE_GUARD",
]
