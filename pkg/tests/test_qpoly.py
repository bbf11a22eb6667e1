import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilcount.qpoly import (
    ExactDivisionError,
    Laurent,
    RationalFunction,
    eval_rational,
    landsberg_count,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    q_pochhammer,
)

Q = Laurent.q()
ONE = Laurent.one()
QM1 = Laurent({1: 1, 0: -1})


def laurents(max_terms=5, max_exp=6, max_coeff=20):
    return st.dictionaries(
        st.integers(min_value=-max_exp, max_value=max_exp),
        st.integers(min_value=-max_coeff, max_value=max_coeff),
        max_size=max_terms,
    ).map(Laurent)


def test_q_int_examples():
    assert q_int(0) == Laurent.zero()
    assert q_int(2) == Laurent({0: 1, 1: 1})
    assert q_int(5).evaluate(2) == 31


def test_q_binomial_examples():
    assert q_binomial(2, 1) == Laurent({0: 1, 1: 1})
    assert q_binomial(4, 2) == Laurent({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert q_binomial(3, 5) == Laurent.zero()
    assert q_binomial(3, -1) == Laurent.zero()


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_q_binomial_symmetry_and_palindromicity(n, k):
    if k > n:
        return
    b = q_binomial(n, k)
    assert b == q_binomial(n, n - k)
    assert b.degree() == k * (n - k)
    assert b.is_palindromic()


def test_landsberg_examples():
    assert landsberg_count(3, 0) == ONE
    assert landsberg_count(1, 1) == QM1
    # (q^3 - 1)(q^3 - q) expanded by hand
    assert landsberg_count(3, 2) == Laurent({6: 1, 4: -1, 3: -1, 1: 1})
    with pytest.raises(ValueError):
        landsberg_count(2, 3)


def test_substitute_inverse_examples():
    assert (ONE + Q).subs_inverse() == Laurent({0: 1, -1: 1})
    assert Laurent({3: 1}).subs_inverse() == Laurent({-3: 1})
    assert Laurent.zero().subs_inverse() == Laurent.zero()


@given(laurents())
def test_substitute_inverse_is_involution(p):
    assert p.subs_inverse().subs_inverse() == p


def test_eval_rational_examples():
    assert eval_rational(q_int(3), 2) == 7
    assert eval_rational(Laurent({-1: 1}), 2) == Fraction(1, 2)
    prod = QM1 * Laurent({1: 2, 0: 1})
    assert eval_rational(prod, 3) == 14
    with pytest.raises(ZeroDivisionError):
        Laurent({-1: 1}).evaluate(0)


@given(laurents(), laurents(), laurents())
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_inverse_factorial_identity():
    # [n]_{1/q}! = q^(-C(n,2)) [n]_q!
    for n in range(13):
        lhs = ONE
        for i in range(1, n + 1):
            lhs = lhs * q_int(i).subs_inverse()
        assert lhs == q_factorial(n).shift(-(n * (n - 1) // 2))


def test_exact_division_raises_on_remainder():
    with pytest.raises(ExactDivisionError):
        (Q + 1).exact_div(QM1)
    assert (Q * Q - 1).exact_div(QM1) == Q + 1


def test_q_multinomial_and_pochhammer():
    assert q_multinomial(3, (2, 1)) == q_binomial(3, 1)
    assert q_pochhammer(0) == ONE
    assert q_pochhammer(2) == Laurent({0: 1, 1: -1}) * Laurent({0: 1, 2: -1})
    with pytest.raises(ValueError):
        q_multinomial(3, (2, 2))


def test_rendering_round_trips():
    p = Laurent({-1: 2, 0: -3, 4: 1})
    assert Laurent.from_string(p.to_string()) == p
    assert Laurent.from_string(p.to_json()) == p
    assert Laurent.from_string("0") == Laurent.zero()
    assert Laurent.from_string("1 + q") == ONE + Q
    assert Laurent.from_string('{"2": 5, "-1": -1}') == Laurent({2: 5, -1: -1})


def test_degree_sentinels():
    z = Laurent.zero()
    assert z.degree() == float("-inf")
    assert z.valuation() == float("inf")


def test_root_multiplicity_at_one():
    p = QM1**3 * (Q + 1)
    assert p.root_multiplicity_at_one() == 3


def test_rational_normalization():
    half = RationalFunction(Laurent({0: 2}), Laurent({0: 4}))
    assert half == RationalFunction(1, 2)
    r = RationalFunction(Q * Q - 1, QM1)
    assert r.is_laurent() and r.to_laurent() == Q + 1
    # denominator sign pinned positive
    r2 = RationalFunction(ONE, Laurent({0: 1, 1: -1}))
    assert r2.den.leading_coeff() > 0
    inv_q = RationalFunction(ONE, Q)
    assert inv_q.is_laurent() and inv_q.to_laurent() == Laurent({-1: 1})


def test_rational_subs_inverse_and_eval():
    r = RationalFunction(ONE, QM1)  # 1/(q-1)
    s = r.subs_inverse()  # 1/(1/q - 1) = q/(1-q)
    assert s == RationalFunction(Q, Laurent({0: 1, 1: -1}))
    assert r.evaluate(3) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        r.evaluate(1)


def test_rational_agrees_with_laurent_embedding():
    rng = random.Random(20240817)

    def rand_laurent():
        return Laurent(
            {rng.randint(-4, 6): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))}
        )

    for _ in range(1000):
        a, b = rand_laurent(), rand_laurent()
        ra, rb = RationalFunction(a), RationalFunction(b)
        assert (ra + rb).to_laurent() == a + b
        assert (ra * rb).to_laurent() == a * b
        assert (ra - rb).to_laurent() == a - b
