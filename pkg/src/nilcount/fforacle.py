"""Brute-force ground truth over prime fields.

Everything here enumerates exhaustively: Jordan-type tallies over ideals,
rank-profile counts, admissible-matrix tallies, flags and double cosets.
Budgets are explicit; exceeding one raises BudgetError rather than silently
truncating.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from .hessenberg import check_hessenberg, e_function, free_positions
from .partitions import check_partition, conjugate, part
from .qpoly import Laurent, q_binomial, landsberg_count


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class NonNilpotentError(ValueError):
    """A matrix expected to be nilpotent was not."""


def default_free_budget(p: int) -> int:
    return 16 if p == 2 else 12


@lru_cache(maxsize=None)
def _inverse_table(p: int) -> tuple:
    table = [0] * p
    for x in range(1, p):
        table[x] = pow(x, -1, p)
    return tuple(table)


def mat_mul(A, B, p: int):
    """Matrix product mod p, skipping zero entries (powers of nilpotent
    matrices get sparse fast)."""
    width = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = None
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                if acc is None:
                    acc = bk[:] if a == 1 else [a * x for x in bk]
                elif a == 1:
                    acc = [x + y for x, y in zip(acc, bk)]
                else:
                    acc = [x + a * y for x, y in zip(acc, bk)]
        out.append([0] * width if acc is None else [x % p for x in acc])
    return out


def mat_rank(rows, p: int) -> int:
    """Rank by destructive Gaussian elimination on a copy."""
    rows = [row[:] for row in rows if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    inv = _inverse_table(p)
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        f = inv[prow[col]]
        if f != 1:
            prow = [(f * x) % p for x in prow]
            rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            c = rows[i][col]
            if c:
                ri = rows[i]
                rows[i] = [(x - c * y) % p for x, y in zip(ri, prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def jordan_block_matrix(mu) -> list:
    """Block-diagonal nilpotent matrix with upper-triangular blocks."""
    mu = check_partition(mu)
    n = sum(mu)
    X = [[0] * n for _ in range(n)]
    offset = 0
    for b in mu:
        for i in range(b - 1):
            X[offset + i][offset + i + 1] = 1
        offset += b
    return X


def jordan_type(X, p: int, require_nilpotent: bool = True) -> tuple:
    """Jordan type from the ranks of powers: differences of consecutive
    ranks give the conjugate partition."""
    n = len(X)
    if any(len(row) != n for row in X):
        raise ValueError("jordan_type needs a square matrix")
    ranks = [n]
    power = X
    while True:
        r = mat_rank(power, p)
        ranks.append(r)
        if r == 0:
            break
        if len(ranks) > n + 1 or r == ranks[-2]:
            if require_nilpotent:
                raise NonNilpotentError("matrix is not nilpotent")
            raise NonNilpotentError("rank sequence stabilized above zero")
        power = mat_mul(power, X, p)
    diffs = tuple(ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1))
    return conjugate(diffs)


# ---------------------------------------------------------------------------
# exhaustive tallies over ad-nilpotent ideals
# ---------------------------------------------------------------------------


def tally_ideal(h, p: int, max_free: int | None = None) -> dict:
    """Jordan-type tally over every matrix of the ideal of h over F_p."""
    h = check_hessenberg(h)
    n = len(h)
    free = free_positions(h)
    budget = max_free if max_free is not None else default_free_budget(p)
    if len(free) > budget:
        raise BudgetError(
            f"ideal of {h} has {len(free)} free entries (> {budget}); would need {p ** len(free)} matrices",
            required=p ** len(free),
        )
    X = [[0] * n for _ in range(n)]
    tallies: dict = {}
    for values in iproduct(range(p), repeat=len(free)):
        for (i, j), v in zip(free, values):
            X[i - 1][j - 1] = v
        mu = jordan_type(X, p)
        tallies[mu] = tallies.get(mu, 0) + 1
    if sum(tallies.values()) != p ** len(free):
        raise AssertionError("tally does not cover the whole ideal")
    return tallies


def count_x2_brute(lam, p: int, max_free: int | None = None) -> dict:
    """Rank tally of the square-zero matrices in the nilradical of lam."""
    from .hessenberg import from_composition

    lam = check_partition(lam)
    h = from_composition(lam)
    n = len(h)
    free = free_positions(h)
    budget = max_free if max_free is not None else default_free_budget(p)
    if len(free) > budget:
        raise BudgetError("square-zero scan over budget", required=p ** len(free))
    X = [[0] * n for _ in range(n)]
    out: dict = {}
    for values in iproduct(range(p), repeat=len(free)):
        for (i, j), v in zip(free, values):
            X[i - 1][j - 1] = v
        sq = mat_mul(X, X, p)
        if any(any(row) for row in sq):
            continue
        k = mat_rank(X, p)
        out[k] = out.get(k, 0) + 1
    return out


# ---------------------------------------------------------------------------
# rank profiles and admissible matrices
# ---------------------------------------------------------------------------


def rank_profile_count(n_seq, r_seq, m: int, p: int):
    """Count n1 x m matrices whose first n_i rows have rank r_i.

    Returns (formula, brute): the closed-form polynomial in q and the
    exhaustive count over F_p.
    """
    n_seq = list(n_seq)
    r_seq = list(r_seq)
    if len(n_seq) != len(r_seq):
        raise ValueError("rank_profile_count needs sequences of equal length")
    ell = len(n_seq)
    if ell == 0 or any(n_seq[i] < n_seq[i + 1] for i in range(ell - 1)) or n_seq[-1] < 1:
        raise ValueError("row counts must be weakly decreasing positive")
    full_r = [m] + r_seq + [0]
    full_n = n_seq + [0]
    if any(full_r[i] < full_r[i + 1] for i in range(ell + 1)):
        raise ValueError("ranks must be weakly decreasing from m")
    for i in range(1, ell + 1):
        if full_r[i] - full_r[i + 1] > full_n[i - 1] - full_n[i]:
            raise ValueError("rank drops exceed row drops; no such matrix exists")
    formula = Laurent.one()
    for j in range(1, ell + 1):
        r_j, r_j1 = full_r[j], full_r[j + 1]
        n_j, n_j1 = full_n[j - 1], full_n[j]
        formula = (
            formula
            * Laurent.monomial(1, r_j1 * (n_j - n_j1))
            * q_binomial(m - r_j1, r_j - r_j1)
            * landsberg_count(n_j - n_j1, r_j - r_j1)
        )
    n1 = n_seq[0]
    if p ** (n1 * m) > 3**13:
        raise BudgetError("rank-profile brute force over budget", required=p ** (n1 * m))
    want_at = {}
    for i in range(ell):
        want_at[n_seq[i]] = r_seq[i]
    inv = _inverse_table(p)
    brute = 0
    for values in iproduct(range(p), repeat=n1 * m):
        pivots = []  # (column, reduced row) pairs, grown one matrix row at a time
        rank = 0
        ok = True
        for i in range(n1):
            row = list(values[i * m : (i + 1) * m])
            for col, prow in pivots:
                c = row[col]
                if c:
                    row = [(x - c * y) % p for x, y in zip(row, prow)]
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is not None:
                f = inv[row[lead]]
                if f != 1:
                    row = [(f * x) % p for x in row]
                pivots.append((lead, row))
                rank += 1
            target = want_at.get(i + 1)
            if target is not None and rank != target:
                ok = False
                break
        if ok:
            brute += 1
    return formula, brute


def eligible_partitions(nu, m: int) -> list:
    """Partitions mu of |nu| + m whose conjugate extends nu' by a horizontal
    m-strip."""
    nu = check_partition(nu)
    if m < 1:
        raise ValueError("eligible_partitions needs m >= 1")
    nu_c = conjugate(nu)
    k = len(nu_c)
    out = []

    def rec(i, remaining, prefix):
        if i == k + 2:
            if remaining == 0:
                eta = tuple(x for x in prefix if x)
                out.append(conjugate(eta))
            return
        lo = part(nu_c, i)
        if i == 1:
            hi = lo + remaining
        else:
            hi = part(nu_c, i - 1)  # horizontal strip: new row fits under the old one
            if prefix:
                hi = min(hi, prefix[-1])
        for v in range(hi, lo - 1, -1):
            take = v - lo
            if take <= remaining:
                rec(i + 1, remaining - take, prefix + [v])

    rec(1, m, [])
    out.sort(reverse=True)
    seen = set()
    unique = []
    for mu in out:
        if mu not in seen:
            seen.add(mu)
            unique.append(mu)
    return unique


def admissible_tally(nu, m: int, p: int, max_free: int | None = None) -> dict:
    """Tally the Jordan types over all top-right blocks Z glued onto the
    Jordan matrix of nu, with m fresh zero rows and columns."""
    nu = check_partition(nu)
    size = sum(nu)
    n = size + m
    entries = size * m
    budget = max_free if max_free is not None else default_free_budget(p)
    if entries > budget:
        raise BudgetError("admissible-matrix scan over budget", required=p**entries)
    base = [[0] * n for _ in range(n)]
    J = jordan_block_matrix(nu) if nu else []
    for i in range(size):
        for j in range(size):
            base[i][j] = J[i][j]
    tallies: dict = {}
    for values in iproduct(range(p), repeat=entries):
        idx = 0
        for i in range(size):
            row = base[i]
            for j in range(size, n):
                row[j] = values[idx]
                idx += 1
        mu = jordan_type(base, p)
        tallies[mu] = tallies.get(mu, 0) + 1
    return tallies


def admissible_count_brute(mu, nu, m: int, p: int, max_free: int | None = None) -> int:
    return admissible_tally(nu, m, p, max_free).get(check_partition(mu), 0)


# ---------------------------------------------------------------------------
# flags and Hessenberg varieties
# ---------------------------------------------------------------------------


def _rref(rows, p: int):
    """Reduced row echelon form; returns (rows, pivot_columns) as tuples."""
    rows = [list(r) for r in rows]
    inv = _inverse_table(p)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        f = inv[rows[rank][col]]
        if f != 1:
            rows[rank] = [(f * x) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return tuple(tuple(r) for r in rows[:rank]), tuple(pivots)


def _in_span(vec, basis, pivots, p: int) -> bool:
    v = list(vec)
    for row, col in zip(basis, pivots):
        if v[col]:
            c = v[col]
            v = [(x - c * y) % p for x, y in zip(v, row)]
    return not any(v)


@lru_cache(maxsize=None)
def enumerate_flags(n: int, p: int, max_flags: int = 5000) -> tuple:
    """All complete flags in F_p^n, each as a tuple of (rref_rows, pivots)."""
    total = 1
    for i in range(1, n + 1):
        total *= (p**i - 1) // (p - 1)
    if total > max_flags:
        raise BudgetError("flag enumeration over budget", required=total)
    vectors = [v for v in iproduct(range(p), repeat=n) if any(v)]
    flags = []

    def rec(basis, pivots, chain):
        dim = len(basis)
        if dim == n:
            flags.append(tuple(chain))
            return
        seen = set()
        for v in vectors:
            if _in_span(v, basis, pivots, p):
                continue
            new_rows, new_pivots = _rref(list(basis) + [list(v)], p)
            key = new_rows
            if key in seen:
                continue
            seen.add(key)
            rec(new_rows, new_pivots, chain + [(new_rows, new_pivots)])

    rec((), (), [])
    return tuple(flags)


def hess_variety_count_brute(h, mu, p: int) -> int:
    """Number of complete flags with X V_i inside V_{e(i)}, X the Jordan
    matrix of mu."""
    h = check_hessenberg(h)
    mu = check_partition(mu)
    n = len(h)
    if sum(mu) != n:
        raise ValueError("|mu| must equal the Hessenberg size")
    e = e_function(h)
    X = jordan_block_matrix(mu)
    flags = enumerate_flags(n, p)
    count = 0
    for chain in flags:
        ok = True
        for i in range(1, n + 1):
            basis_i = chain[i - 1][0]
            target = chain[e[i - 1] - 1] if e[i - 1] >= 1 else ((), ())
            t_rows, t_pivots = target
            for v in basis_i:
                w = [sum(X[r][c] * v[c] for c in range(n)) % p for r in range(n)]
                if e[i - 1] == 0:
                    if any(w):
                        ok = False
                        break
                elif not _in_span(w, t_rows, t_pivots, p):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# GL_n enumeration and double cosets
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def gl_elements(n: int, p: int) -> tuple:
    """Every invertible n x n matrix over F_p, as nested tuples."""
    if p ** (n * n) > 2**17:
        raise BudgetError("GL enumeration over budget", required=p ** (n * n))
    out = []
    for values in iproduct(range(p), repeat=n * n):
        M = [list(values[i * n : (i + 1) * n]) for i in range(n)]
        if mat_rank(M, p) == n:
            out.append(tuple(tuple(row) for row in M))
    return tuple(out)


def unipotent_group(h, p: int) -> list:
    """All matrices I + X with X in the ideal of h."""
    h = check_hessenberg(h)
    n = len(h)
    free = free_positions(h)
    out = []
    for values in iproduct(range(p), repeat=len(free)):
        M = [[int(i == j) for j in range(n)] for i in range(n)]
        for (i, j), v in zip(free, values):
            M[i - 1][j - 1] = v
        out.append(M)
    return out


def double_coset_count_brute(h1, h2, p: int, max_group: int = 10**6) -> int:
    """Number of orbits of U_{h1} x U_{h2} acting by g -> u1 g u2^{-1},
    swept by repeated closure over untouched group elements."""
    h1, h2 = check_hessenberg(h1), check_hessenberg(h2)
    n = len(h1)
    if len(h2) != n:
        raise ValueError("double cosets need equal sizes")
    group = gl_elements(n, p)
    if len(group) > max_group:
        raise BudgetError("double-coset sweep over budget", required=len(group))
    u1 = unipotent_group(h1, p)
    u2 = unipotent_group(h2, p)
    visited = set()
    orbits = 0
    for g in group:
        if g in visited:
            continue
        orbits += 1
        g_rows = [list(row) for row in g]
        left = [mat_mul(a, g_rows, p) for a in u1]
        for lg in left:
            for b in u2:
                key = tuple(tuple(row) for row in mat_mul(lg, b, p))
                visited.add(key)
    if len(visited) != len(group):
        raise AssertionError("orbit sweep did not cover the group")
    return orbits


def centralizer_size_brute(mu, p: int) -> int:
    """Order of the centralizer of I + J_mu in GL_n, by direct scan."""
    mu = check_partition(mu)
    n = sum(mu)
    X = jordan_block_matrix(mu)
    u = [[(X[i][j] + int(i == j)) % p for j in range(n)] for i in range(n)]
    count = 0
    for g in gl_elements(n, p):
        g_rows = [list(row) for row in g]
        if mat_mul(g_rows, u, p) == mat_mul(u, g_rows, p):
            count += 1
    return count
