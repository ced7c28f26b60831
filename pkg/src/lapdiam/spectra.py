"""Laplacian spectra: floating-point Jacobi solver and exact eigenvalue counting.

Exact counts come from the characteristic polynomial ``det(xI - L)``: it is
split into square-free factors ``p_k`` (roots of multiplicity ``k``) and a
Sturm chain per factor counts roots below any rational point. No floating
point is involved on that path.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from . import polynomial as P
from .graph import Graph

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"p/q"`` or an integer string (ints and Fractions pass through)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if not m:
        raise ValueError(f"malformed rational {text!r}; expected 'p/q' or an integer")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class IntervalQuery:
    """Interval with rational endpoints and independent open/closed ends."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", parse_rational(self.lo))
        object.__setattr__(self, "hi", parse_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def closed(cls, lo: RationalLike, hi: RationalLike) -> "IntervalQuery":
        return cls(parse_rational(lo), parse_rational(hi), True, True)

    def contains(self, x: float) -> bool:
        lo_ok = x >= self.lo if self.lo_closed else x > self.lo
        hi_ok = x <= self.hi if self.hi_closed else x < self.hi
        return lo_ok and hi_ok

    def to_json(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "lo_closed": self.lo_closed,
            "hi": format_rational(self.hi),
            "hi_closed": self.hi_closed,
        }

    def __str__(self) -> str:
        return (
            f"{'[' if self.lo_closed else '('}{format_rational(self.lo)}, "
            f"{format_rational(self.hi)}{']' if self.hi_closed else ')'}"
        )


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian ``D - A`` as an ``int64`` array."""
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in g.edges():
        lap[i, j] = lap[j, i] = -1
    for v in range(g.n):
        lap[v, v] = g.degree(v)
    return lap


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing, with an absolute error bound."""

    values: tuple[float, ...]
    tolerance: float

    def __getitem__(self, j: int) -> float:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)

    def mu(self, j: int) -> float:
        """The ``j``-th largest eigenvalue, 1-based."""
        return self.values[j - 1]


def jacobi_eigenvalues(a: np.ndarray, rtol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, float]:
    """Cyclic Jacobi on a symmetric matrix.

    Sweeps row by row over the strict upper triangle until the off-diagonal
    Frobenius norm drops below ``rtol * (1 + ||a||_F)``. Returns the diagonal
    and an error bound (off-diagonal norm plus a rounding allowance).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    scale = 1.0 + float(np.linalg.norm(a))
    target = rtol * scale

    upper = np.triu_indices(n, 1)

    def off_norm() -> float:
        return float(math.sqrt(2.0) * np.linalg.norm(a[upper]))

    off = off_norm()
    for _ in range(max_sweeps):
        if off < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
        off = off_norm()
    tol = float(off + 8.0 * n * np.finfo(float).eps * scale)
    return np.diag(a).copy(), tol


def spectrum_float(g: Graph) -> Spectrum:
    vals, tol = jacobi_eigenvalues(laplacian(g))
    return Spectrum(tuple(float(x) for x in sorted(vals, reverse=True)), tol)


def spectrum_of_matrix(m: np.ndarray) -> Spectrum:
    vals, tol = jacobi_eigenvalues(m)
    return Spectrum(tuple(float(x) for x in sorted(vals, reverse=True)), tol)


def path_eigenvalue(n: int, j: int) -> float:
    """``mu_j(P_n) = 4 sin^2((n-j) pi / (2n))``."""
    if not 1 <= j <= n:
        raise ValueError(f"index j={j} out of range [1, {n}]")
    return 4.0 * math.sin((n - j) * math.pi / (2 * n)) ** 2


def berkowitz(m) -> P.Coeffs:
    """Division-free characteristic polynomial ``det(xI - m)``, lowest degree first."""
    rows = [[int(x) for x in row] for row in m]
    n = len(rows)

    def vector(k: int) -> list[int]:
        # coefficients (highest first) of the char poly of rows[k:, k:]
        size = n - k
        if size == 0:
            return [1]
        if size == 1:
            return [1, -rows[k][k]]
        a = rows[k][k]
        r = rows[k][k + 1:]
        col = [rows[i][k] for i in range(k + 1, n)]
        sub = [row[k + 1:] for row in rows[k + 1:]]
        diags = [1, -a]
        v = col
        for step in range(size - 1):
            diags.append(-sum(x * y for x, y in zip(r, v)))
            if step < size - 2:
                v = [sum(x * y for x, y in zip(srow, v)) for srow in sub]
        inner = vector(k + 1)
        # (size+1) x size lower-triangular Toeplitz times inner
        return [sum(diags[i - j] * inner[j] for j in range(min(i, size - 1) + 1)) for i in range(size + 1)]

    return P.trim(reversed(vector(0)))


def char_poly(g: Graph) -> P.IntegerPolynomial:
    return P.IntegerPolynomial(berkowitz(laplacian(g).tolist()))


class SpectralCounter:
    """Exact eigenvalue counting for one graph (memoised Sturm chains)."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.char_poly = char_poly(g)
        self.factors = P.squarefree_decomposition(self.char_poly.coeffs)
        self._chains = [
            (k, P.sturm_chain(f)) for k, f in enumerate(self.factors, start=1) if P.degree(f) > 0
        ]
        self._at_minus_inf = [P.variations_at_minus_infinity(ch) for _, ch in self._chains]

    def count_le(self, x: Fraction) -> int:
        """Eigenvalues ``<= x`` with multiplicity."""
        total = 0
        for (k, chain), v0 in zip(self._chains, self._at_minus_inf):
            total += k * (v0 - P.variations_at(chain, x))
        return total

    def multiplicity(self, x: Fraction) -> int:
        return sum(k for k, chain in self._chains if P.sign_at(chain[0], x) == 0)

    def count(self, q: IntervalQuery) -> int:
        if q.lo == q.hi:
            return self.multiplicity(q.lo) if (q.lo_closed and q.hi_closed) else 0
        total = self.count_le(q.hi) - self.count_le(q.lo)
        if q.lo_closed:
            total += self.multiplicity(q.lo)
        if not q.hi_closed:
            total -= self.multiplicity(q.hi)
        return total

    def count_above(self, x: Fraction) -> int:
        return self.n - self.count_le(x)


@lru_cache(maxsize=2048)
def spectral_counter(g: Graph) -> SpectralCounter:
    return SpectralCounter(g)


def count_interval_exact(g: Graph, q: IntervalQuery) -> int:
    """Number of Laplacian eigenvalues of ``g`` in ``q``, counted with multiplicity."""
    return spectral_counter(g).count(q)


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def eigenvalue_rank_test(g: Graph, j: int, r: RationalLike) -> Comparison:
    """Decide exactly whether ``mu_j(g)`` is below, at, or above ``r``."""
    if not 1 <= j <= g.n:
        raise ValueError(f"index j={j} out of range [1, {g.n}]")
    r = parse_rational(r)
    counter = spectral_counter(g)
    above = counter.count_above(r)
    at = counter.multiplicity(r)
    if j <= above:
        return Comparison.GREATER
    if j <= above + at:
        return Comparison.EQUAL
    return Comparison.LESS


def pendant_path_profile(length: int) -> tuple[int, ...]:
    """Entries ``(-1)**(i-1) * (2i-1)``: an eigenvalue-4 eigenvector along a pendant path."""
    if length < 1:
        raise ValueError("pendant path length must be at least 1")
    return tuple((-1) ** (i - 1) * (2 * i - 1) for i in range(1, length + 1))
