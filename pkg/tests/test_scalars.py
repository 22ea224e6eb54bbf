"""Exact-scalar layer: worked examples with known values, then randomized
field-axiom and identity checks."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qweyl.scalars import (
    PoleError,
    QField,
    ScalarFn,
    deserialize,
    evaluate,
    laurent,
    monomial,
    qbinomial,
    qfactorial,
    qint,
    qint_at,
    rational,
    series_at_zero,
    _pgcd,
    _pmul,
    _pdivexact,
)


def q(e=1, c=1):
    return monomial("q", e, c)


# ----------------------------------------------------------------------
# pinned values
# ----------------------------------------------------------------------

def test_qint_small_values():
    assert qint(0).is_zero()
    assert qint(1).is_one()
    assert qint(2) == q(1) + q(-1)
    assert qint(3) == q(2) + 1 + q(-2)
    assert qint(-3) == -qint(3)


def test_qint_symmetrized():
    # [2] in q^3 = q^3 + q^-3
    assert qint(2, 3) == q(3) + q(-3)


def test_qint_at_two():
    assert evaluate(qint(4), 2) == Fraction(85, 8)


def test_qfactorial():
    assert qfactorial(0).is_one()
    assert qfactorial(1).is_one()
    assert qfactorial(2) == qint(2)
    assert qfactorial(3) == qint(2) * qint(3)
    with pytest.raises(ValueError):
        qfactorial(-1)


def test_qbinomial_4_2():
    expected = laurent("q", {4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert qbinomial(4, 2) == expected


def test_qbinomial_edges():
    assert qbinomial(5, 0).is_one()
    assert qbinomial(5, 5).is_one()
    for n in range(7):
        for k in range(n + 1):
            v = qbinomial(n, k)
            assert evaluate(v, 1) == _binom(n, k)


def _binom(n, k):
    r = 1
    for j in range(k):
        r = r * (n - j) // (j + 1)
    return r


def test_evaluate_reduces_before_substituting():
    f = (q(2) - 1) / (q(1) - 1)  # = q + 1 after cancellation
    assert f == q(1) + 1
    assert evaluate(f, 3) == 4
    assert evaluate(f, 1) == 2  # no pole left


def test_pole_detection():
    f = rational(1) / (q(1) - 1)
    with pytest.raises(PoleError):
        evaluate(f, 1)
    assert evaluate(f, 2) == 1


def test_fractional_exponents():
    h = q(Fraction(1, 2))
    assert h * h == q(1)
    assert (h - h.inv()) * (h + h.inv()) == q(1) - q(-1)
    assert evaluate(q(Fraction(1, 2)), 4) == 2
    with pytest.raises(ValueError):
        evaluate(q(Fraction(1, 2)), 2)  # no exact rational sqrt(2)


def test_unit_is_minimal():
    v = q(Fraction(2, 4))
    assert v.unit == 2 and v.shift == 1
    w = q(Fraction(1, 2)) * q(Fraction(1, 2))
    assert w.unit == 1 and w == q(1)


def test_variable_mixing_is_an_error():
    with pytest.raises(ValueError):
        monomial("q", 1) + monomial("z", 1)
    # constants mix freely with anything
    assert (rational(2) * monomial("z", 1)).var == "z"


def test_bar_involution():
    f = (q(3) + 2 * q(1) - q(-2)) / (q(1) + 1)
    assert f.bar().bar() == f
    assert qint(5).bar() == qint(5)
    assert qbinomial(6, 2).bar() == qbinomial(6, 2)


def test_derivative():
    f = q(3) + q(1, 2)
    assert f.derivative() == 3 * q(2) + 2
    g = rational(1) / (q(1) - 1)
    num = -(g * g)
    assert g.derivative() == num
    assert rational(7).derivative().is_zero()


def test_serialization_round_trip():
    f = (3 * q(Fraction(5, 2)) - q(-1, 7)) / (2 * q(2) + 2)
    rec = f.serialize()
    assert deserialize(rec) == f
    assert qint(3).serialize() == {"num": [[-2, "1"], [0, "1"], [2, "1"]],
                                   "den": [[0, "1"]]}


def test_qint_recursion_identity():
    # [n+1] = q [n] + q^{-n}
    for n in range(0, 9):
        assert qint(n + 1) == q(1) * qint(n) + q(-n)


def test_qint_at_matches_qint_on_integers():
    for n in range(-4, 5):
        assert qint_at(Fraction(n)) == qint(n)
    half = qint_at(Fraction(1, 2))
    # [1/2] = (q^{1/2} - q^{-1/2})/(q - q^{-1}) = 1/(q^{1/2}+q^{-1/2})
    assert half * (q(Fraction(1, 2)) + q(Fraction(-1, 2))) == rational(1)


def test_series_at_zero():
    f = rational(1) / (1 - q(1))
    u, terms = series_at_zero(f, 4)
    assert u == 1
    assert terms == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    g = q(-2) / (1 - q(1))
    u, terms = series_at_zero(g, 1)
    assert terms == {-2: 1, -1: 1, 0: 1, 1: 1}


def test_qfield_symbolic_vs_specialized():
    F = QField()
    G = QField(q0=Fraction(3, 2))
    H = QField(q0=1)
    for n in range(-3, 6):
        sym = F.qint(n, 2)
        spec = G.qint(n, 2)
        assert evaluate(sym, Fraction(3, 2)) == spec.as_fraction()
        assert H.qint(n, 2).as_fraction() == n


def test_qfield_qpow_exact_roots():
    G = QField(q0=Fraction(9, 4))
    assert G.qpow(Fraction(1, 2)).as_fraction() == Fraction(3, 2)
    with pytest.raises(ValueError):
        G.qpow(Fraction(1, 3))
    assert QField(q0=1).qpow(Fraction(7, 3)).is_one()


def test_qfield_qint_at_minus_one():
    G = QField(q0=-1)
    for n in range(1, 6):
        assert G.qint(n).as_fraction() == n * (-1) ** (n - 1)


def test_power_and_inverse():
    f = (q(1) + q(-1)) / (q(2) + 1)
    assert f ** 0 == rational(1)
    assert f ** 3 == f * f * f
    assert f ** -2 == (f * f).inv()
    assert f * f.inv() == rational(1)
    with pytest.raises(ZeroDivisionError):
        rational(0).inv()


def test_polynomial_gcd_oracle():
    a = (1, 2, 1)        # (1+x)^2
    b = (1, 1)           # 1+x
    assert _pgcd(a, b) == (1, 1)
    c = (-2, 0, 3)
    assert _pgcd(_pmul(a, c), _pmul(b, c)) == _pmul((1, 1), c) or \
        _pdivexact(_pgcd(_pmul(a, c), _pmul(b, c)), c) == (1, 1)
    assert _pgcd((1, 0, 1), (2, 1)) == (1,)
    assert _pgcd((), (3, 6)) == (1, 2)


# ----------------------------------------------------------------------
# randomized properties
# ----------------------------------------------------------------------

coeffs = st.integers(min_value=-9, max_value=9)


@st.composite
def laurent_polys(draw, maxdeg=4):
    lo = draw(st.integers(min_value=-3, max_value=1))
    cs = draw(st.lists(coeffs, min_size=1, max_size=maxdeg))
    return laurent("q", {lo + i: c for i, c in enumerate(cs)})


@st.composite
def scalar_fns(draw):
    num = draw(laurent_polys())
    den = draw(laurent_polys().filter(lambda p: not p.is_zero()))
    return num / den


@settings(max_examples=120, deadline=None)
@given(scalar_fns(), scalar_fns(), scalar_fns())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + rational(0) == a
    assert a * rational(1) == a
    assert (a - a).is_zero()
    if not a.is_zero():
        assert a * a.inv() == rational(1)


@settings(max_examples=120, deadline=None)
@given(scalar_fns(), scalar_fns())
def test_bar_is_a_field_automorphism(a, b):
    assert (a + b).bar() == a.bar() + b.bar()
    assert (a * b).bar() == a.bar() * b.bar()


@settings(max_examples=120, deadline=None)
@given(scalar_fns(), st.integers(min_value=2, max_value=7).filter(lambda n: n not in (0,)))
def test_evaluation_is_a_homomorphism(a, x):
    x = Fraction(x)
    try:
        va = evaluate(a, x)
    except PoleError:
        return
    assert evaluate(a + 1, x) == va + 1
    assert evaluate(a * 3, x) == va * 3
    b = a * a - a
    assert evaluate(b, x) == va * va - va


@settings(max_examples=120, deadline=None)
@given(scalar_fns())
def test_serialize_round_trip_random(a):
    assert deserialize(a.serialize()) == a


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_qbinomial_symmetry_and_bar(n, k):
    if k > n:
        return
    v = qbinomial(n, k)
    assert v == qbinomial(n, n - k)
    assert v.bar() == v  # balanced q-analogs are bar-invariant


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=-8, max_value=8), st.integers(min_value=1, max_value=3))
def test_qint_bar_invariant(n, d):
    assert qint(n, d).bar() == qint(n, d)


@settings(max_examples=60, deadline=None)
@given(scalar_fns(), scalar_fns())
def test_derivative_leibniz(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
    assert (a + b).derivative() == a.derivative() + b.derivative()
