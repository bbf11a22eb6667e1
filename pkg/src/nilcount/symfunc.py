"""Symmetric polynomials of a fixed degree in finitely many variables.

A degree-n computation always lives in exactly n variables: every basis
element indexed by a partition of n is then nonzero and the transition
matrices between the classical bases are invertible, so nothing is lost
(asserted in the tests).  Coefficients are exact rational functions in q.

Bases: m (monomial), e (elementary), h (complete homogeneous), p (power
sum), s (Schur).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .hessenberg import check_hessenberg, indifference_edges
from .partitions import check_partition, coeff_a, conjugate, dominates, n_stat, partitions_of
from .qpoly import Laurent, RationalFunction, q_binomial, q_pochhammer
from .tableaux import kostka_number

BASES = ("m", "e", "h", "p", "s")


class SymmetryError(AssertionError):
    """A quantity that must be a symmetric polynomial came out asymmetric."""


def _rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (Laurent, int)):
        return RationalFunction(value)
    if isinstance(value, Fraction):
        return RationalFunction(value.numerator, value.denominator)
    raise TypeError(f"cannot coerce {type(value).__name__} to RationalFunction")


@dataclass(eq=True)
class SymPoly:
    """A homogeneous symmetric polynomial in a tagged basis."""

    basis: str
    degree: int
    nvars: int
    coeffs: dict = field(default_factory=dict)  # partition -> RationalFunction

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis tag {self.basis!r}")
        if self.nvars < self.degree:
            raise ValueError("need at least as many variables as the degree")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = check_partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} does not have size {self.degree}")
            c = _rf(c)
            if not c.is_zero():
                clean[lam] = c
        self.coeffs = clean

    def coefficient(self, lam) -> RationalFunction:
        return self.coeffs.get(tuple(lam), RationalFunction.zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def map_coeffs(self, fn) -> "SymPoly":
        return SymPoly(self.basis, self.degree, self.nvars, {k: fn(v) for k, v in self.coeffs.items()})

    def scale(self, factor) -> "SymPoly":
        factor = _rf(factor)
        return self.map_coeffs(lambda c: c * factor)

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if (self.basis, self.degree, self.nvars) != (other.basis, other.degree, other.nvars):
            raise ValueError("can only add like-for-like symmetric polynomials")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, RationalFunction.zero()) + c
        return SymPoly(self.basis, self.degree, self.nvars, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scale(-1)

    def to_json(self) -> str:
        terms = [
            {"partition": list(lam), "coeff": str(c)}
            for lam, c in sorted(self.coeffs.items(), reverse=True)
        ]
        return json.dumps({"basis": self.basis, "degree": self.degree, "terms": terms})


def sym_zero(basis: str, degree: int, nvars: int | None = None) -> SymPoly:
    return SymPoly(basis, degree, nvars if nvars is not None else degree, {})


def sym_unit(basis: str, lam, nvars: int | None = None) -> SymPoly:
    lam = check_partition(lam)
    n = sum(lam)
    return SymPoly(basis, n, nvars if nvars is not None else n, {lam: RationalFunction.one()})


# ---------------------------------------------------------------------------
# monomial-basis structure constants
# ---------------------------------------------------------------------------


def _distinct_perms(values):
    """Distinct permutations of a tuple, generated without repetition."""
    values = sorted(values, reverse=True)
    n = len(values)
    out = []

    def rec(remaining, prefix):
        if not remaining:
            out.append(tuple(prefix))
            return
        seen = set()
        for i, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            rec(remaining[:i] + remaining[i + 1 :], prefix + [v])

    rec(values, [])
    return out


@lru_cache(maxsize=None)
def _perm_count(padded) -> int:
    from math import factorial

    mult: dict = {}
    for v in padded:
        mult[v] = mult.get(v, 0) + 1
    out = factorial(len(padded))
    for m in mult.values():
        out //= factorial(m)
    return out


def _pad(lam, nvars: int) -> tuple:
    if len(lam) > nvars:
        raise ValueError(f"{lam} needs more than {nvars} variables")
    return tuple(lam) + (0,) * (nvars - len(lam))


@lru_cache(maxsize=None)
def monomial_product(mu, nu, nvars: int):
    """Structure constants of m_mu * m_nu in the monomial basis.

    The coefficient of m_lam is the number of ways to write the sorted
    exponent vector lam as alpha + beta with alpha a rearrangement of mu and
    beta one of nu.  With nvars >= |mu| + |nu| these are the stable
    (variable-count independent) constants.
    """
    mu, nu = tuple(mu), tuple(nu)
    if len(mu) + len(nu) > nvars:
        # some products would fall off the variable range; stay in the stable zone
        raise ValueError("not enough variables for a faithful monomial product")
    perms_nu = _distinct_perms(_pad(nu, nvars))
    mu_sorted = tuple(sorted(mu, reverse=True))
    out: dict = {}
    for lam in partitions_of(sum(mu) + sum(nu)):
        if len(lam) > nvars:
            continue
        target = _pad(lam, nvars)
        count = 0
        for beta in perms_nu:
            alpha = tuple(t - b for t, b in zip(target, beta))
            if alpha and min(alpha) < 0:
                continue
            if tuple(sorted(alpha, reverse=True)) == mu_sorted + (0,) * (nvars - len(mu)):
                count += 1
        if count:
            out[lam] = count
    return out


def monomial_product_coeffs(nu, rho) -> dict:
    """Structure constants f of m_nu * m_rho = sum_lam f[lam] m_lam."""
    nu, rho = check_partition(nu), check_partition(rho)
    return dict(monomial_product(nu, rho, sum(nu) + sum(rho)))


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product of symmetric polynomials, computed in the monomial basis."""
    if f.nvars != g.nvars:
        raise ValueError("operands must live in the same variable count")
    fm, gm = convert(f, "m"), convert(g, "m")
    out: dict = {}
    for mu, cf in fm.coeffs.items():
        for nu, cg in gm.coeffs.items():
            c = cf * cg
            for lam, mult in monomial_product(mu, nu, f.nvars).items():
                out[lam] = out.get(lam, RationalFunction.zero()) + c * mult
    return SymPoly("m", f.degree + g.degree, f.nvars, out)


# ---------------------------------------------------------------------------
# transition matrices to and from the monomial basis
# ---------------------------------------------------------------------------


def _mono_mul_int(d1: dict, d2: dict, nvars: int) -> dict:
    out: dict = {}
    for mu, c1 in d1.items():
        for nu, c2 in d2.items():
            for lam, mult in monomial_product(mu, nu, nvars).items():
                out[lam] = out.get(lam, 0) + c1 * c2 * mult
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _basis_to_m(basis: str, degree: int) -> dict:
    """For each partition lam of the degree, the m-expansion of basis_lam."""
    parts = partitions_of(degree)
    table = {}
    for lam in parts:
        if basis == "m":
            table[lam] = {lam: 1}
        elif basis == "s":
            table[lam] = {
                nu: kostka_number(lam, nu) for nu in parts if kostka_number(lam, nu)
            }
        else:
            expansion = {(): 1}
            for p in lam:
                if basis == "e":
                    factor = {(1,) * p: 1}
                elif basis == "p":
                    factor = {(p,): 1}
                elif basis == "h":
                    factor = {nu: 1 for nu in partitions_of(p)}
                else:
                    raise ValueError(f"unknown basis {basis!r}")
                expansion = _mono_mul_int(expansion, factor, degree)
            table[lam] = expansion
    return table


@lru_cache(maxsize=None)
def _m_to_basis(basis: str, degree: int) -> dict:
    """Inverse transition: for each m_nu, its expansion in the target basis.

    Computed by exact Gaussian elimination over the rationals; all these
    matrices are invertible, so a zero pivot would flag a bug.
    """
    parts = list(partitions_of(degree))
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    fwd = _basis_to_m(basis, degree)
    a = [[Fraction(0)] * size for _ in range(size)]
    for lam, expansion in fwd.items():
        for nu, c in expansion.items():
            a[index[nu]][index[lam]] = Fraction(c)
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError(f"transition matrix for basis {basis!r} is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    table = {}
    for j, nu in enumerate(parts):
        table[nu] = {parts[i]: inv[i][j] for i in range(size) if inv[i][j] != 0}
    return table


def convert(f: SymPoly, target: str) -> SymPoly:
    """Rewrite in another basis; round-trips are exact."""
    if target not in BASES:
        raise ValueError(f"unknown basis tag {target!r}")
    if f.basis == target:
        return f
    # to monomial coordinates
    if f.basis == "m":
        m_coords = dict(f.coeffs)
    else:
        fwd = _basis_to_m(f.basis, f.degree)
        m_coords = {}
        for lam, c in f.coeffs.items():
            for nu, mult in fwd[lam].items():
                m_coords[nu] = m_coords.get(nu, RationalFunction.zero()) + c * mult
    if target == "m":
        return SymPoly("m", f.degree, f.nvars, m_coords)
    back = _m_to_basis(target, f.degree)
    out: dict = {}
    for nu, c in m_coords.items():
        if c.is_zero():
            continue
        for lam, frac in back[nu].items():
            out[lam] = out.get(lam, RationalFunction.zero()) + c * _rf(frac)
    return SymPoly(target, f.degree, f.nvars, out)


def omega(f: SymPoly) -> SymPoly:
    """The standard involution: swaps e and h, signs power sums.

    Monomial or Schur input is routed through the elementary basis.
    """
    if f.basis == "e":
        return SymPoly("h", f.degree, f.nvars, dict(f.coeffs))
    if f.basis == "h":
        return SymPoly("e", f.degree, f.nvars, dict(f.coeffs))
    if f.basis == "p":
        out = {rho: c * ((-1) ** (sum(rho) - len(rho))) for rho, c in f.coeffs.items()}
        return SymPoly("p", f.degree, f.nvars, out)
    return omega(convert(f, "e"))


def hall_inner(f: SymPoly, g: SymPoly) -> RationalFunction:
    """Hall scalar product, via <h_mu, m_lam> = delta."""
    if f.degree != g.degree:
        raise ValueError("inner product needs equal degrees")
    fh = convert(f, "h")
    gm = convert(g, "m")
    total = RationalFunction.zero()
    for lam, c in fh.coeffs.items():
        d = gm.coeffs.get(lam)
        if d is not None:
            total = total + c * d
    return total


# ---------------------------------------------------------------------------
# chromatic quasisymmetric functions of indifference graphs
# ---------------------------------------------------------------------------

CHROMATIC_BUDGET = 7


def chromatic_qsf(h, budget: int = CHROMATIC_BUDGET) -> SymPoly:
    """Ascent generating function over proper colorings, palette of size n.

    Returns the monomial expansion; symmetry (known for these graphs, with
    integer polynomial coefficients) is asserted, not assumed.
    """
    h = check_hessenberg(h)
    n = len(h)
    if n > budget:
        raise ValueError(f"chromatic enumeration for n={n} exceeds budget {budget}")
    lower_nbrs = [[] for _ in range(n + 1)]
    for i, j in indifference_edges(h):
        lower_nbrs[j].append(i)
    by_vector: dict = {}
    colors = [0] * (n + 1)

    def rec(v, asc):
        if v > n:
            counts = [0] * n
            for u in range(1, n + 1):
                counts[colors[u] - 1] += 1
            key = tuple(counts)
            poly = by_vector.setdefault(key, {})
            poly[asc] = poly.get(asc, 0) + 1
            return
        for c in range(1, n + 1):
            ok = True
            add = 0
            for u in lower_nbrs[v]:
                if colors[u] == c:
                    ok = False
                    break
                if colors[u] < c:
                    add += 1
            if ok:
                colors[v] = c
                rec(v + 1, asc + add)
        colors[v] = 0

    rec(1, 0)

    coeffs: dict = {}
    for key, poly in by_vector.items():
        lam = tuple(sorted((x for x in key if x), reverse=True))
        prev = coeffs.get(lam)
        if prev is None:
            coeffs[lam] = poly
        elif prev != poly:
            raise SymmetryError(f"chromatic function of {h} asymmetric at {lam}")
    # every rearrangement of an achieved vector must itself be achieved
    for lam, poly in coeffs.items():
        achieved = sum(1 for key in by_vector if tuple(sorted((x for x in key if x), reverse=True)) == lam)
        if achieved != _perm_count(_pad(lam, n)):
            raise SymmetryError(f"chromatic function of {h} misses rearrangements of {lam}")
    out = {lam: RationalFunction(Laurent(poly)) for lam, poly in coeffs.items()}
    return SymPoly("m", n, n, out)


def chromatic_e_coeffs(h, budget: int = CHROMATIC_BUDGET) -> dict:
    """Elementary-basis coefficients of the chromatic function, as honest
    integer polynomials in q."""
    fe = convert(chromatic_qsf(h, budget), "e")
    out = {}
    for lam, c in fe.coeffs.items():
        p = c.to_laurent()
        if not p.is_polynomial():
            raise AssertionError(f"e-coefficient at {lam} is not polynomial: {p}")
        out[lam] = p
    return out


# ---------------------------------------------------------------------------
# Macdonald polynomials at t = 0 and friends
# ---------------------------------------------------------------------------


def macdonald_p0(mu, inverse: bool = False) -> SymPoly:
    """Monomial expansion of the (monic) Macdonald polynomial at t = 0.

    With inverse=True the coefficients are taken at 1/q (exponent-negated).
    """
    mu = check_partition(mu)
    n = sum(mu)
    out = {}
    for nu in partitions_of(n):
        if not dominates(nu, mu):
            continue
        a = coeff_a(mu, nu)
        if a.is_zero():
            continue
        out[nu] = RationalFunction(a.subs_inverse() if inverse else a)
    return SymPoly("m", n, max(n, 1), out)


def b_factor_q0(mu, inverse: bool = False) -> RationalFunction:
    """Normalization <P, P>^-1 at t = 0: prod_j 1/(q; q)_{mu_j - mu_{j+1}}."""
    mu = check_partition(mu)
    den = Laurent.one()
    for j in range(len(mu)):
        nxt = mu[j + 1] if j + 1 < len(mu) else 0
        den = den * q_pochhammer(mu[j] - nxt)
    out = RationalFunction(Laurent.one(), den)
    return out.subs_inverse() if inverse else out


def macdonald_q0(mu, inverse: bool = False) -> SymPoly:
    """The dual normalization: b-factor times the monic polynomial."""
    return macdonald_p0(mu, inverse).scale(b_factor_q0(mu, inverse))


def modified_hl(mu) -> SymPoly:
    """Modified Hall-Littlewood function, as a symmetric polynomial in the
    homogeneous basis: omega applied to q^n(mu) P_{mu'}(x; 1/q, 0)."""
    mu = check_partition(mu)
    p = macdonald_p0(conjugate(mu), inverse=True).scale(Laurent.monomial(1, n_stat(mu)))
    return omega(convert(p, "e"))


def whittaker_monomial_coeff(mu, lam, inverse: bool = False) -> Laurent:
    """Coefficient of x^lam in the t = 0 Macdonald polynomial of mu."""
    a = coeff_a(check_partition(mu), check_partition(lam))
    return a.subs_inverse() if inverse else a


def g_row(l: int, nvars: int | None = None) -> SymPoly:
    """One-row dual element: sum_nu m_nu / (q; q)_nu."""
    if l < 0:
        raise ValueError("g_row needs l >= 0")
    nvars = nvars if nvars is not None else max(l, 1)
    out = {}
    for nu in partitions_of(l):
        if len(nu) > nvars:
            continue
        den = Laurent.one()
        for p in nu:
            den = den * q_pochhammer(p)
        out[nu] = RationalFunction(Laurent.one(), den)
    return SymPoly("m", l, nvars, out)


def jing_jozefiak_q(n: int, k: int) -> SymPoly:
    """Two-row dual Macdonald element at t = 0 from one-row pieces:
    an alternating q-binomial combination of g_{n-k+j} g_{k-j}."""
    if not 0 <= k <= n // 2:
        raise ValueError("jing_jozefiak_q needs 0 <= k <= n/2")
    total = sym_zero("m", n, n)
    for j in range(k + 1):
        d = n - 2 * k + j
        if n - 2 * k == 0 and j == 0:
            ratio = RationalFunction.one()
        else:
            ratio = RationalFunction(
                Laurent({0: 1, n - 2 * k + 2 * j: -1}), Laurent({0: 1, d: -1})
            )
        scale = (
            _rf(q_binomial(n - 2 * k + j, j))
            * _rf(Laurent.monomial((-1) ** j, j * (j - 1) // 2))
            * ratio
        )
        prod = multiply(g_row(n - k + j, nvars=n), g_row(k - j, nvars=n))
        total = total + prod.scale(scale)
    return total


def two_var_p(n: int, k: int) -> dict:
    """Two-variable Macdonald polynomial of a two-row shape at (1/q, 0):
    (y1 y2)^k times a 1/q-binomial double row, as {(e1, e2): Laurent}."""
    if not 0 <= k <= n // 2:
        raise ValueError("two_var_p needs 0 <= k <= n/2")
    out = {}
    for j in range(n - 2 * k + 1):
        coeff = q_binomial(n - 2 * k, j).subs_inverse()
        out[(k + n - 2 * k - j, k + j)] = out.get((k + n - 2 * k - j, k + j), Laurent.zero()) + coeff
    return {k2: v for k2, v in out.items() if not v.is_zero()}


def restrict_two_vars(f: SymPoly) -> dict:
    """Specialize a monomial-basis polynomial to two variables."""
    fm = convert(f, "m")
    out: dict = {}
    for nu, c in fm.coeffs.items():
        if len(nu) > 2:
            continue
        p = c.to_laurent()
        a = nu[0]
        b = nu[1] if len(nu) > 1 else 0
        out[(a, b)] = out.get((a, b), Laurent.zero()) + p
        if a != b:
            out[(b, a)] = out.get((b, a), Laurent.zero()) + p
    return {k: v for k, v in out.items() if not v.is_zero()}


def kostka_polynomials(mu) -> dict:
    """Kostka polynomials via the Schur expansion of the t = 0 Macdonald
    polynomial of the conjugate shape: returns {eta: K_eta,mu(q)}."""
    mu = check_partition(mu)
    schur = convert(macdonald_p0(conjugate(mu)), "s")
    out = {}
    for eta, c in schur.coeffs.items():
        p = c.to_laurent()
        if not p.is_polynomial():
            raise AssertionError(f"Kostka coefficient at {eta} is not polynomial")
        out[conjugate(eta)] = p
    return out
