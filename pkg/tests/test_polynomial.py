from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from lapdiam import polynomial as P

x = sp.symbols("x")


def to_sympy(c):
    return sp.Poly(list(reversed(c)) or [0], x)


def from_roots(roots):
    """Integer polynomial with the given integer roots (with repetition)."""
    c = (1,)
    for r in roots:
        c = P.mul(c, (-r, 1))
    return c


def test_trim_and_degree():
    assert P.trim([1, 2, 0, 0]) == (1, 2)
    assert P.degree(()) == -1
    assert P.degree((5,)) == 0


def test_exact_div_roundtrip_and_failure():
    a, b = (1, 2, 1), (1, 1)
    assert P.exact_div(a, b) == (1, 1)
    with pytest.raises(ArithmeticError):
        P.exact_div((1, 0, 1), (1, 1))
    with pytest.raises(ZeroDivisionError):
        P.exact_div(a, ())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7), st.lists(st.integers(-20, 20), min_size=1, max_size=5))
def test_gcd_matches_sympy(a, b):
    a, b = P.trim(a), P.trim(b)
    if not a or not b:
        return
    g = P.poly_gcd(a, b)
    expected = sp.gcd(to_sympy(a), to_sympy(b))
    assert to_sympy(g).monic() == expected.monic()


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-4, 6), min_size=1, max_size=9), st.integers(1, 5))
def test_squarefree_decomposition_matches_sympy(roots, lead):
    f = P.mul((lead,), from_roots(roots))
    parts = P.squarefree_decomposition(f)
    prod = (1,)
    for k, p in enumerate(parts, start=1):
        for _ in range(k):
            prod = P.mul(prod, p)
    assert P.primitive(prod) == P.primitive(f)
    # multiplicity of every root equals the index of the factor it sits in
    for r in set(roots):
        ks = [k for k, p in enumerate(parts, start=1) if P.sign_at(p, Fraction(r)) == 0]
        assert ks == [roots.count(r)]
    _, expected = sp.sqf_list(to_sympy(f))
    expected = {k: e.monic() for e, k in expected}
    for k, p in enumerate(parts, start=1):
        if P.degree(p) > 0:
            assert to_sympy(p).monic() == expected[k]


def test_squarefree_example():
    f = from_roots([0, 3, 3, 5, 5, 5])
    parts = P.squarefree_decomposition(f)
    assert [P.primitive(p) for p in parts] == [(0, 1), (-3, 1), (-5, 1)]


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(-6, 8), min_size=1, max_size=8, unique=True),
    st.fractions(min_value=-8, max_value=9, max_denominator=7),
    st.fractions(min_value=-8, max_value=9, max_denominator=7),
)
def test_sturm_counts_half_open(roots, a, b):
    lo, hi = min(a, b), max(a, b)
    f = from_roots(roots)
    chain = P.sturm_chain(f)
    got = P.variations_at(chain, lo) - P.variations_at(chain, hi)
    assert got == sum(1 for r in roots if lo < r <= hi)


def test_sturm_irrational_roots():
    # x^2 - 2: roots +-sqrt(2)
    chain = P.sturm_chain((-2, 0, 1))
    assert P.variations_at_minus_infinity(chain) - P.variations_at(chain, Fraction(0)) == 1
    assert P.variations_at(chain, Fraction(141, 100)) - P.variations_at(chain, Fraction(142, 100)) == 1
    assert P.variations_at(chain, Fraction(142, 100)) - P.variations_at(chain, Fraction(2)) == 0


def test_sign_at_matches_evaluation():
    c = (3, -7, 0, 2)
    for v in (Fraction(-5, 3), Fraction(0), Fraction(7, 11), Fraction(13, 2)):
        val = P.evaluate(c, v)
        assert P.sign_at(c, v) == (val > 0) - (val < 0)


def test_integer_polynomial_str_and_call():
    p = P.IntegerPolynomial((0, 3, -4, 1))
    assert str(p) == "x^3 - 4x^2 + 3x"
    assert p(1) == 0 and p(3) == 0 and p(2) == -2
    assert p.degree == 3
