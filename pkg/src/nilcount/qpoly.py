"""Exact arithmetic in Z[q, 1/q] and Q(q), plus standard q-combinatorial quantities.

Laurent polynomials are maps {exponent: coefficient} with arbitrary-precision
integer coefficients and no stored zeros.  Rational functions are normalized
pairs num/den with den a polynomial in q (nonzero constant term, positive
leading coefficient) and gcd(num, den) = 1 over Q[q], so equality is
structural.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

NEG_INF = float("-inf")
POS_INF = float("inf")


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


def _as_coeff_dict(value) -> dict:
    if isinstance(value, Laurent):
        return dict(value.coeffs)
    if isinstance(value, int):
        return {0: value} if value else {}
    raise TypeError(f"cannot coerce {type(value).__name__} to Laurent")


class Laurent:
    """Immutable Laurent polynomial in q with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    if not isinstance(c, int):
                        raise TypeError(f"coefficient {c!r} is not an integer")
                    clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Laurent values are immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def q(exp: int = 1) -> "Laurent":
        return Laurent({exp: 1})

    @staticmethod
    def monomial(coeff: int, exp: int) -> "Laurent":
        return Laurent({exp: coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: 1}

    def degree(self):
        """Top exponent, or -inf for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else NEG_INF

    def valuation(self):
        """Bottom exponent, or +inf for the zero polynomial."""
        return min(self.coeffs) if self.coeffs else POS_INF

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return not self.coeffs or min(self.coeffs) >= 0

    def leading_coeff(self) -> int:
        return self.coeffs[max(self.coeffs)] if self.coeffs else 0

    def coeff(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if isinstance(other, Laurent):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Laurent":
        out = dict(self.coeffs)
        for e, c in _as_coeff_dict(other).items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "Laurent":
        return self + (-other if isinstance(other, Laurent) else -_int_laurent(other))

    def __rsub__(self, other) -> "Laurent":
        return _int_laurent(other) - self

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            return Laurent({e: c * other for e, c in self.coeffs.items()}) if other else Laurent()
        if not isinstance(other, Laurent):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative powers are not supported; use subs_inverse or RationalFunction")
        result = Laurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Laurent":
        """Multiply by q^k."""
        return Laurent({e + k: c for e, c in self.coeffs.items()})

    def subs_inverse(self) -> "Laurent":
        """Substitute q -> 1/q (negate every exponent); an involution."""
        return Laurent({-e: c for e, c in self.coeffs.items()})

    # -- division ----------------------------------------------------------

    def divmod_exactish(self, other: "Laurent"):
        """Laurent division: (quotient, remainder) with remainder of degree < deg(other).

        Both inputs are shifted to honest polynomials first; the quotient is a
        Laurent polynomial, the remainder need not divide further.  Quotient
        coefficients are exact rationals internally; a non-integer quotient is
        reported through the remainder being nonzero.
        """
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return Laurent(), Laurent()
        sv, ov = self.valuation(), other.valuation()
        a = {e - sv: Fraction(c) for e, c in self.coeffs.items()}
        b = {e - ov: Fraction(c) for e, c in other.coeffs.items()}
        db = max(b)
        lead = b[db]
        quo: dict = {}
        while a and max(a) >= db:
            da = max(a)
            f = a[da] / lead
            quo[da - db] = f
            for e, c in b.items():
                e2 = e + da - db
                s = a.get(e2, Fraction(0)) - f * c
                if s:
                    a[e2] = s
                else:
                    a.pop(e2, None)
        shift = sv - ov
        q_int_ok = all(f.denominator == 1 for f in quo.values())
        rem_ok = all(f.denominator == 1 for f in a.values())
        if not (q_int_ok and rem_ok):
            # non-integral quotient: report the whole thing as remainder
            return Laurent(), self
        quotient = Laurent({e + shift: int(f) for e, f in quo.items()})
        remainder = Laurent({e + sv: int(f) for e, f in a.items()})
        return quotient, remainder

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Divide exactly, raising ExactDivisionError on any remainder."""
        quo, rem = self.divmod_exactish(other)
        if not rem.is_zero():
            raise ExactDivisionError(f"({self}) is not divisible by ({other})")
        return quo

    def divides(self, other: "Laurent") -> bool:
        return other.divmod_exactish(self)[1].is_zero() if not self.is_zero() else other.is_zero()

    # -- evaluation --------------------------------------------------------

    def evaluate(self, q0) -> Fraction:
        """Exact value at q = q0 (rational); q0 = 0 needs a genuine polynomial."""
        q0 = Fraction(q0)
        if q0 == 0:
            if not self.is_polynomial():
                raise ZeroDivisionError("evaluation at 0 with negative exponents")
            return Fraction(self.coeff(0))
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * q0**e
        return total

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def root_multiplicity_at_one(self) -> int:
        """Exact multiplicity of the root q = 1."""
        if self.is_zero():
            raise ValueError("zero polynomial has no finite multiplicity")
        p, m = self, 0
        qm1 = Laurent({1: 1, 0: -1})
        while p.at_one() == 0:
            p = p.exact_div(qm1)
            m += 1
        return m

    def is_palindromic(self) -> bool:
        """q^deg * p(1/q) == p(q), after shifting out the valuation."""
        if self.is_zero():
            return True
        lo, hi = self.valuation(), self.degree()
        return all(self.coeff(lo + i) == self.coeff(hi - i) for i in range(hi - lo + 1))

    # -- rendering / parsing ------------------------------------------------

    def to_string(self) -> str:
        """Expanded ascending-exponent form, e.g. '1 + 2*q + q^2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                qp = "q" if e == 1 else f"q^{e}"
                body = qp if abs(c) == 1 else f"{abs(c)}*{qp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps({str(e): c for e, c in sorted(self.coeffs.items())})

    _TERM_RE = re.compile(
        r"^\s*(?P<sign>[+-]?)\s*(?:(?P<coeff>\d+)\s*\*?\s*)?"
        r"(?:q(?:\^(?P<exp>-?\d+))?)?\s*$"
    )

    @staticmethod
    def from_string(text: str) -> "Laurent":
        """Parse either the expanded form or the JSON {"exp": coeff} form."""
        text = text.strip()
        if text.startswith("{"):
            data = json.loads(text)
            return Laurent({int(e): int(c) for e, c in data.items()})
        if text == "0":
            return Laurent()
        out: dict = {}
        # keep exponent signs out of the term splitter's way
        guarded = text.replace(" ", "").replace("^-", "^~")
        chunks = [c.replace("^~", "^-") for c in re.findall(r"[+-]?[^+-]+", guarded)]
        for chunk in chunks:
            m = Laurent._TERM_RE.match(chunk)
            if not m or (m.group("coeff") is None and "q" not in chunk):
                if re.fullmatch(r"[+-]?\d+", chunk):
                    c = int(chunk)
                    out[0] = out.get(0, 0) + c
                    continue
                raise ValueError(f"cannot parse term {chunk!r}")
            sign = -1 if m.group("sign") == "-" else 1
            coeff = int(m.group("coeff")) if m.group("coeff") else 1
            if "q" in chunk:
                exp = int(m.group("exp")) if m.group("exp") else 1
            else:
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coeff
        return Laurent(out)

    def __repr__(self) -> str:
        return f"Laurent({self.to_string()})"

    __str__ = to_string


def _int_laurent(n: int) -> Laurent:
    return Laurent({0: n} if n else {})


ZERO = Laurent.zero()
ONE = Laurent.one()
Q = Laurent.q()
Q_MINUS_1 = Laurent({1: 1, 0: -1})
ONE_MINUS_Q = Laurent({0: 1, 1: -1})


# ---------------------------------------------------------------------------
# q-combinatorial quantities
# ---------------------------------------------------------------------------

_QINT_CACHE: dict = {}
_QFACT_CACHE: dict = {0: ONE}


def q_int(n: int) -> Laurent:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0 by convention."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    if n not in _QINT_CACHE:
        _QINT_CACHE[n] = Laurent({e: 1 for e in range(n)})
    return _QINT_CACHE[n]


def q_factorial(n: int) -> Laurent:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n not in _QFACT_CACHE:
        _QFACT_CACHE[n] = q_factorial(n - 1) * q_int(n)
    return _QFACT_CACHE[n]


_QBINOM_CACHE: dict = {}


def q_binomial(n: int, k: int) -> Laurent:
    """Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.

    Computed as [n]_q! / ([k]_q! [n-k]_q!) with exact division; a remainder
    would indicate an arithmetic bug and raises.
    """
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    key = (n, min(k, n - k))
    if key not in _QBINOM_CACHE:
        num = q_factorial(n)
        den = q_factorial(key[1]) * q_factorial(n - key[1])
        _QBINOM_CACHE[key] = num.exact_div(den)
    return _QBINOM_CACHE[key]


def q_multinomial(n: int, parts) -> Laurent:
    """[n choose parts]_q = [n]_q! / prod [p_i]_q!; parts must sum to n."""
    parts = list(parts)
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"multinomial parts {parts} must be nonnegative and sum to {n}")
    den = ONE
    for p in parts:
        den = den * q_factorial(p)
    return q_factorial(n).exact_div(den)


def q_pochhammer(m: int) -> Laurent:
    """(q; q)_m = (1-q)(1-q^2)...(1-q^m)."""
    if m < 0:
        raise ValueError("q_pochhammer needs m >= 0")
    out = ONE
    for i in range(1, m + 1):
        out = out * Laurent({0: 1, i: -1})
    return out


def landsberg_count(l: int, r: int) -> Laurent:
    """Number of spanning r-tuples: (q^l - 1)(q^l - q)...(q^l - q^(r-1)).

    Also equal to q^C(r,2) (q-1)^r [r]_q! [l choose r]_q; both forms are
    computed and cross-checked.
    """
    if not 0 <= r <= l:
        raise ValueError(f"landsberg_count needs 0 <= r <= l, got l={l}, r={r}")
    prod = ONE
    for i in range(r):
        prod = prod * (Laurent({l: 1}) - Laurent({i: 1}))
    alt = Laurent({r * (r - 1) // 2: 1}) * Q_MINUS_1**r * q_factorial(r) * q_binomial(l, r)
    if prod != alt:
        raise AssertionError("the two product forms of the Landsberg count disagree")
    return prod


# ---------------------------------------------------------------------------
# rational functions in q
# ---------------------------------------------------------------------------


def _poly_list(p: Laurent) -> list:
    """Dense coefficient list (Fractions) of a Laurent shifted to valuation 0."""
    v = p.valuation()
    d = p.degree()
    return [Fraction(p.coeff(v + i)) for i in range(d - v + 1)]


def _list_divmod(a: list, b: list):
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    quo = [Fraction(0)] * max(0, len(a) - db)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] / lb
        pos = len(a) - 1 - db
        quo[pos] = f
        for i, c in enumerate(b):
            a[pos + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return quo, a


def _list_gcd(a: list, b: list) -> list:
    """Monic gcd over Q[q] of dense coefficient lists."""
    while any(b):
        _, r = _list_divmod(a, b)
        a, b = b, r
        while b and b[-1] == 0:
            b.pop()
    if not any(a):
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def _list_to_laurent_primitive(lst: list):
    """Clear denominators and content; returns (Laurent, content_fraction)."""
    from math import gcd, lcm

    denoms = lcm(*[f.denominator for f in lst]) if lst else 1
    ints = [int(f * denoms) for f in lst]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    g = g or 1
    poly = Laurent({i: c // g for i, c in enumerate(ints)})
    return poly, Fraction(g, denoms)


class RationalFunction:
    """Reduced rational function in q with exact integer data.

    Invariants: den is a polynomial with nonzero constant term and positive
    leading coefficient; gcd(num, den) = 1 over Q[q]; integer contents of
    num and den are coprime.  A value with den == 1 is exactly a Laurent
    polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, int):
            num = _int_laurent(num)
        if isinstance(den, int):
            den = _int_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", ZERO)
            object.__setattr__(self, "den", ONE)
            return
        # shift denominator to an honest polynomial with nonzero constant term
        dval = den.valuation()
        num = num.shift(-dval)
        den = den.shift(-dval)
        nval = num.valuation()
        npoly = num.shift(-nval)
        a = _poly_list(npoly)
        b = _poly_list(den)
        g = _list_gcd(a[:], b[:])
        if len(g) > 1:
            a, _ = _list_divmod(a, g)
            b, _ = _list_divmod(b, g)
        npoly2, ncont = _list_to_laurent_primitive(a)
        dpoly2, dcont = _list_to_laurent_primitive(b)
        ratio = ncont / dcont  # integer contents folded back in
        npoly2 = npoly2 * ratio.numerator
        dpoly2 = dpoly2 * ratio.denominator
        if dpoly2.leading_coeff() < 0:
            npoly2, dpoly2 = -npoly2, -dpoly2
        object.__setattr__(self, "num", npoly2.shift(nval))
        object.__setattr__(self, "den", dpoly2)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction values are immutable")

    @staticmethod
    def from_laurent(p: Laurent) -> "RationalFunction":
        return RationalFunction(p, ONE)

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction(ZERO, ONE)

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(ONE, ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def to_laurent(self) -> Laurent:
        if not self.den.is_one():
            raise ExactDivisionError(f"{self} is not a Laurent polynomial")
        return self.num

    def __eq__(self, other) -> bool:
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other) -> "RationalFunction":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return _coerce_rat(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _coerce_rat(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        out = RationalFunction.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def subs_inverse(self) -> "RationalFunction":
        """Substitute q -> 1/q."""
        n = self.num.subs_inverse()
        d = self.den.subs_inverse()
        shift = max(0, -min(n.valuation(), d.valuation()))
        if shift and shift != POS_INF:
            n, d = n.shift(shift), d.shift(shift)
        return RationalFunction(n, d)

    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        dv = self.den.evaluate(q0)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {q0}")
        return self.num.evaluate(q0) / dv

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"RationalFunction({self.num.to_string()})"
        return f"RationalFunction(({self.num.to_string()}) / ({self.den.to_string()}))"

    def __str__(self) -> str:
        if self.den.is_one():
            return self.num.to_string()
        return f"({self.num.to_string()}) / ({self.den.to_string()})"


def _coerce_rat(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Laurent):
        return RationalFunction(value, ONE)
    if isinstance(value, int):
        return RationalFunction(_int_laurent(value), ONE)
    return NotImplemented


def eval_rational(p, q0) -> Fraction:
    """Exact evaluation of a Laurent or RationalFunction at rational q0."""
    if isinstance(p, (Laurent, RationalFunction)):
        return p.evaluate(q0)
    raise TypeError(f"cannot evaluate {type(p).__name__}")
