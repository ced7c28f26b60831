"""Exact univariate integer polynomials: GCD, square-free split, Sturm chains.

Coefficients are stored lowest degree first and trimmed, so the zero
polynomial is the empty tuple. All arithmetic is over Python integers;
rational points are handled by homogeneous evaluation, never by floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Coeffs = tuple[int, ...]


def trim(c: Sequence[int]) -> Coeffs:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(c: Coeffs) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(c) - 1


def content(c: Coeffs) -> int:
    g = 0
    for x in c:
        g = gcd(g, x)
    return g


def primitive(c: Coeffs) -> Coeffs:
    """Divide by the content and make the leading coefficient positive."""
    c = trim(c)
    if not c:
        return c
    g = content(c)
    if c[-1] < 0:
        g = -g
    return tuple(x // g for x in c)


def derivative(c: Coeffs) -> Coeffs:
    return trim(k * c[k] for k in range(1, len(c)))


def sub(a: Coeffs, b: Coeffs) -> Coeffs:
    m = max(len(a), len(b))
    return trim((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(m))


def mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def exact_div(a: Coeffs, b: Coeffs) -> Coeffs:
    """Quotient ``a / b``, which must be exact over the integers."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = degree(b)
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        top = r[k + db]
        if top % lb:
            raise ArithmeticError("polynomial division is not exact")
        coef = top // lb
        q[k] = coef
        if coef:
            for i, y in enumerate(b):
                r[k + i] -= coef * y
    if any(r):
        raise ArithmeticError("polynomial division is not exact")
    return trim(q)


def pseudo_rem(a: Coeffs, b: Coeffs) -> Coeffs:
    """Positive multiple of the remainder of ``a`` by ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = degree(b)
    lb = b[-1]
    scale, sign = abs(lb), (1 if lb > 0 else -1)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [scale * x for x in r]
        for i, y in enumerate(b):
            r[shift + i] -= sign * lr * y
        r = list(trim(r))
    return tuple(r)


def poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Primitive GCD with positive leading coefficient (primitive PRS)."""
    a, b = primitive(a), primitive(b)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        a, b = b, primitive(pseudo_rem(a, b))
    return a


def squarefree_decomposition(f: Coeffs) -> list[Coeffs]:
    """Yun's algorithm: returns ``[p_1, p_2, ...]`` with ``f ~ prod p_k**k``.

    Each ``p_k`` is primitive and square-free and the ``p_k`` are pairwise
    coprime; a constant ``p_k`` (``(1,)``) means no roots of multiplicity k.
    """
    f = primitive(f)
    if degree(f) < 1:
        return []
    df = derivative(f)
    a = poly_gcd(f, df)
    b = exact_div(f, a)
    c = exact_div(df, a)
    d = sub(c, derivative(b))
    out = []
    while degree(b) > 0:
        ai = poly_gcd(b, d) if d else primitive(b)
        b = exact_div(b, ai)
        c = exact_div(d, ai) if d else ()
        d = sub(c, derivative(b))
        out.append(ai)
    return out


def sign_at(c: Coeffs, x: Fraction) -> int:
    """Sign of ``c(x)`` computed as ``q**deg * c(p/q)`` in integers."""
    if not c:
        return 0
    p, q = x.numerator, x.denominator
    h = c[-1]
    qk = 1
    for k in range(len(c) - 2, -1, -1):
        qk *= q
        h = h * p + c[k] * qk
    return (h > 0) - (h < 0)


def evaluate(c: Coeffs, x: Fraction) -> Fraction:
    h = Fraction(0)
    for coef in reversed(c):
        h = h * x + coef
    return h


def sturm_chain(f: Coeffs) -> list[Coeffs]:
    """Sturm sequence of a square-free ``f`` with positive content stripping."""
    f = trim(f)
    chain = [f]
    if degree(f) < 1:
        return chain
    nxt = derivative(f)
    g = content(nxt)
    chain.append(tuple(x // g for x in nxt))
    while degree(chain[-1]) > 0:
        r = pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        g = content(r)
        chain.append(tuple(-x // g for x in r))
    return chain


def _variations(signs: list[int]) -> int:
    v = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def variations_at(chain: list[Coeffs], x: Fraction) -> int:
    return _variations([sign_at(c, x) for c in chain])


def variations_at_minus_infinity(chain: list[Coeffs]) -> int:
    signs = []
    for c in chain:
        s = 1 if c[-1] > 0 else -1
        signs.append(s if degree(c) % 2 == 0 else -s)
    return _variations(signs)


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense integer polynomial ``sum(coeffs[k] * x**k)``."""

    coeffs: Coeffs

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", trim(int(x) for x in self.coeffs))

    @property
    def degree(self) -> int:
        return degree(self.coeffs)

    def __call__(self, x) -> Fraction:
        return evaluate(self.coeffs, Fraction(x))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
                coef = str(c) if (abs(c) != 1 or k == 0) else ("-" if c < 0 else "")
                terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"
