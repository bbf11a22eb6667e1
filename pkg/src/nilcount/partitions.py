"""Partitions, compositions, dominance, horizontal strips and strip chains.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ().  Compositions are tuples of positive integers.  Implicit
parts beyond the length are zero everywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .qpoly import Laurent, ONE, q_binomial, q_factorial


def is_partition(mu) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in mu) and all(
        mu[i] >= mu[i + 1] for i in range(len(mu) - 1)
    )


def check_partition(mu):
    mu = tuple(mu)
    if not is_partition(mu):
        raise ValueError(f"{mu} is not a partition")
    return mu


def sort_composition(Lambda) -> tuple:
    """Decreasing sort of a composition's parts."""
    if any(p < 1 for p in Lambda):
        raise ValueError(f"{tuple(Lambda)} is not a composition")
    return tuple(sorted(Lambda, reverse=True))


def part(mu, i: int) -> int:
    """mu_i with 1-based index and implicit zeros."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def conjugate(mu) -> tuple:
    """Column counts: mu'_j = #{i : mu_i >= j}."""
    if not mu:
        return ()
    out = []
    for j in range(1, mu[0] + 1):
        out.append(sum(1 for p in mu if p >= j))
    return tuple(out)


def dominates(mu, nu) -> bool:
    """True iff mu is dominated by nu (all prefix sums of mu <= those of nu)."""
    if sum(mu) != sum(nu):
        raise ValueError(f"dominance needs equal sizes, got {mu} and {nu}")
    s_mu = s_nu = 0
    for i in range(max(len(mu), len(nu))):
        s_mu += mu[i] if i < len(mu) else 0
        s_nu += nu[i] if i < len(nu) else 0
        if s_mu > s_nu:
            return False
    return True


def n_stat(mu) -> int:
    """n(mu) = sum (i-1) mu_i; cross-checked against sum C(mu'_i, 2)."""
    v1 = sum(i * p for i, p in enumerate(mu))
    v2 = sum(comb(c, 2) for c in conjugate(mu))
    if v1 != v2:
        raise AssertionError(f"n_stat mismatch on {mu}: {v1} != {v2}")
    return v1


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n in lexicographically decreasing order."""
    if n < 0:
        return ()
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def contains(eta, rho) -> bool:
    """Young-diagram containment rho subseteq eta."""
    return all(part(eta, i) >= part(rho, i) for i in range(1, len(rho) + 1))


def is_horizontal_strip(eta, rho) -> bool:
    """True iff eta/rho is a horizontal strip (at most one new box per column)."""
    if len(rho) > len(eta):
        return False
    for i in range(len(eta)):
        e_i = eta[i]
        r_i = part(rho, i + 1)
        if r_i > e_i:
            return False
        if i + 1 < len(eta) and eta[i + 1] > r_i:
            return False
    return True


def theta_weight(eta, rho) -> Laurent:
    """Strip weight [|eta|-|rho|]_q! / [eta_1-rho_1]_q! * prod of q-binomials."""
    if not is_horizontal_strip(eta, rho):
        raise ValueError(f"{eta}/{rho} is not a horizontal strip")
    m = sum(eta) - sum(rho)
    out = q_factorial(m).exact_div(q_factorial(part(eta, 1) - part(rho, 1)))
    for i in range(1, len(eta)):
        out = out * q_binomial(part(rho, i) - part(rho, i + 1), part(eta, i + 1) - part(rho, i + 1))
    return out


def psi_weight(eta, rho) -> Laurent:
    """Strip weight prod_i [eta_i - eta_{i+1} choose eta_i - rho_i]_q."""
    if not is_horizontal_strip(eta, rho):
        raise ValueError(f"{eta}/{rho} is not a horizontal strip")
    out = ONE
    for i in range(1, len(eta) + 1):
        out = out * q_binomial(part(eta, i) - part(eta, i + 1), part(eta, i) - part(rho, i))
    return out


def horizontal_strips_below(eta, size: int):
    """All rho with eta/rho a horizontal strip of the given size, sorted."""
    rows = len(eta)
    found = []

    def rec(i, removed, prefix):
        if i == rows:
            if removed == size:
                found.append(tuple(p for p in prefix if p))
            return
        lo = eta[i + 1] if i + 1 < rows else 0  # strip condition: eta_{i+1} <= rho_i
        hi = eta[i]
        if prefix:
            hi = min(hi, prefix[-1])  # rho must stay a partition
        for r in range(hi, lo - 1, -1):
            take = eta[i] - r
            if removed + take > size:
                continue
            rec(i + 1, removed + take, prefix + [r])

    rec(0, 0, [])
    found.sort(reverse=True)
    return found


def strip_chains(mu, lam) -> list:
    """All chains () = mu^0 <= ... <= mu^s = mu with horizontal lam_j-strips.

    The number of chains is the Kostka number K(mu, lam).  Returned in a
    deterministic order; empty list when no chain exists.
    """
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        raise ValueError("strip_chains needs |mu| = |lam|")
    if not mu:
        return [((),)]
    chains = []

    def rec(top, j, suffix):
        if j == 0:
            if not top:
                chains.append(((),) + suffix)
            return
        for rho in horizontal_strips_below(top, lam[j - 1]):
            rec(rho, j - 1, (top,) + suffix)

    rec(mu, len(lam), ())
    return chains


def coeff_b(mu, lam) -> Laurent:
    """Sum over strip chains of the product of theta weights; 0 if no chain."""
    total = Laurent.zero()
    for chain in strip_chains(mu, lam):
        term = ONE
        for j in range(1, len(chain)):
            term = term * theta_weight(chain[j], chain[j - 1])
        total = total + term
    return total


def coeff_a(mu, lam) -> Laurent:
    """Sum over strip chains of the product of psi weights; 0 if no chain."""
    total = Laurent.zero()
    for chain in strip_chains(mu, lam):
        term = ONE
        for j in range(1, len(chain)):
            term = term * psi_weight(chain[j], chain[j - 1])
        total = total + term
    return total
