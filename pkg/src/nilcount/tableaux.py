"""Young tableaux: enumeration and the q-statistics living on them.

Tableaux are tuples of row tuples.  Semistandard means weakly increasing
rows and strictly increasing columns; standard means entries are exactly
1..n, each once.
"""

from __future__ import annotations

from functools import lru_cache

from .hessenberg import precedes
from .partitions import check_partition
from .qpoly import Laurent, ONE, q_int, q_multinomial


def shape_of(T) -> tuple:
    return tuple(len(row) for row in T)


def content_of(T) -> tuple:
    """Occurrence counts (c_1, c_2, ...) up to the largest entry."""
    if not T:
        return ()
    top = max(max(row) for row in T if row)
    counts = [0] * top
    for row in T:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def is_ssyt(T) -> bool:
    rows = [tuple(r) for r in T]
    for r in rows:
        if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
            return False
    for i in range(1, len(rows)):
        if len(rows[i]) > len(rows[i - 1]):
            return False
        if any(rows[i][j] <= rows[i - 1][j] for j in range(len(rows[i]))):
            return False
    return True


def enumerate_ssyt(shape, content) -> list:
    """All semistandard tableaux of the given shape and content, sorted.

    The content may be any composition; the count for sorted content is the
    Kostka number.
    """
    shape = check_partition(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        raise ValueError("enumerate_ssyt needs |shape| = |content|")
    n_rows = len(shape)
    rows = [[0] * ln for ln in shape]
    remaining = list(content)
    out = []

    # fill box by box in row-major order, entries tried in increasing order
    boxes = [(i, j) for i in range(n_rows) for j in range(shape[i])]

    def rec(b):
        if b == len(boxes):
            out.append(tuple(tuple(r) for r in rows))
            return
        i, j = boxes[b]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            rows[i][j] = v
            rec(b + 1)
            remaining[v - 1] += 1
        rows[i][j] = 0

    rec(0)
    return out


@lru_cache(maxsize=None)
def kostka_number(shape, content) -> int:
    return len(enumerate_ssyt(shape, content))


def row_distribution(T, value: int) -> tuple:
    """How many copies of the value sit in each row of T."""
    return tuple(sum(1 for v in row if v == value) for row in T)


def s_weight(T) -> Laurent:
    """Product over values i of the q-multinomial of its row distribution."""
    content = content_of(T)
    out = ONE
    for i, c in enumerate(content, start=1):
        beta = row_distribution(T, i)
        out = out * q_multinomial(c, beta)
    return out


def r_weight(T) -> Laurent:
    """Product over boxes in rows >= 2 of [r_ij]_q, where r_ij counts the
    entries T[i-1][j'] < T[i][j] with j' >= j."""
    out = ONE
    for i in range(1, len(T)):
        above = T[i - 1]
        for j, v in enumerate(T[i]):
            r = sum(1 for jp in range(j, len(above)) if above[jp] < v)
            out = out * q_int(r)
    return out


def coeff_b_tableaux(mu, lam) -> Laurent:
    """Tableau form of the theta strip-chain sum: sum of s_weight * r_weight
    over semistandard tableaux of shape mu and content lam."""
    total = Laurent.zero()
    for T in enumerate_ssyt(mu, lam):
        total = total + s_weight(T) * r_weight(T)
    return total


# ---------------------------------------------------------------------------
# standard tableaux compatible with a Hessenberg order
# ---------------------------------------------------------------------------


def enumerate_syt(shape) -> list:
    """All standard Young tableaux of the given shape."""
    n = sum(shape)
    return enumerate_ssyt(shape, (1,) * n)


def enumerate_syt_h(mu, h) -> list:
    """Standard tableaux of shape mu where each box's entry is below its
    upper neighbour in the order induced by h (h(above) < below)."""
    mu = check_partition(mu)
    n = sum(mu)
    if n != len(h):
        raise ValueError("shape size must match the Hessenberg domain")
    rows = [[0] * ln for ln in mu]
    # positions of 1..n are chosen value by value along growing diagrams
    out = []
    filled = [0] * len(mu)  # boxes filled so far in each row

    def rec(v):
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(mu)):
            j = filled[i]
            if j >= mu[i]:
                continue
            if i > 0 and filled[i - 1] <= j:
                continue  # column strictness: box above must exist already
            if i > 0 and not precedes(h, rows[i - 1][j], v):
                continue
            rows[i][j] = v
            filled[i] += 1
            rec(v + 1)
            filled[i] -= 1
            rows[i][j] = 0

    rec(1)
    return out


def _gamma_stat(T, h) -> int:
    """Number of pairs (c, b) with c in a row above b, T(c) < T(b) in the
    integer order but not in the h-order; rows with nothing above contribute
    nothing."""
    total = 0
    for i in range(1, len(T)):
        for v in T[i]:
            for ip in range(i):
                for w in T[ip]:
                    if w < v and not precedes(h, w, v):
                        total += 1
    return total


def _arm_h(T, h, i: int, j: int, v: int) -> int:
    """Boxes strictly right of (i, j) whose entries precede v in the h-order."""
    row = T[i]
    return sum(1 for jp in range(j + 1, len(row)) if precedes(h, row[jp], v))


def syt_weight_sum(mu, h) -> Laurent:
    """Sum over h-compatible standard tableaux of q^gamma times the product,
    over boxes with a box above them, of [arm + 1]_q taken at the upper
    neighbour.  Coefficients are nonnegative integers."""
    total = Laurent.zero()
    for T in enumerate_syt_h(mu, h):
        term = Laurent.monomial(1, _gamma_stat(T, h))
        for i in range(1, len(T)):
            for j, v in enumerate(T[i]):
                term = term * q_int(_arm_h(T, h, i - 1, j, v) + 1)
        total = total + term
    return total


def syt_count(shape) -> int:
    """Number of standard tableaux via the recursive corner formula."""
    shape = check_partition(shape)

    @lru_cache(maxsize=None)
    def rec(s):
        if sum(s) <= 1:
            return 1
        total = 0
        for i in range(len(s)):
            if s[i] > (s[i + 1] if i + 1 < len(s) else 0):
                smaller = list(s)
                smaller[i] -= 1
                if smaller[-1] == 0:
                    smaller.pop()
                total += rec(tuple(smaller))
        return total

    return rec(shape)
