"""Hessenberg functions: the combinatorial indexing of ad-nilpotent ideals.

A Hessenberg function on [n] is a nondecreasing tuple h with i <= h(i) <= n.
We store it 0-indexed internally but all semantics are 1-based; the
convention h(0) = 0 matters when detecting compatible triples at pivot 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def is_hessenberg(h) -> bool:
    n = len(h)
    return all(h[i] >= i + 1 for i in range(n)) and all(
        h[i] <= h[i + 1] for i in range(n - 1)
    ) and all(v <= n for v in h)


def check_hessenberg(h):
    h = tuple(h)
    if not is_hessenberg(h):
        raise ValueError(f"{h} is not a Hessenberg function")
    return h


def h_value(h, i: int) -> int:
    """h(i), 1-based, with h(0) = 0."""
    return 0 if i == 0 else h[i - 1]


def h_size(h) -> int:
    """|h| = sum of the values."""
    return sum(h)


def edge_count(h) -> int:
    """Number of edges of the indifference graph: sum (h(i) - i)."""
    return sum(v - i for i, v in enumerate(h, start=1))


def free_positions(h) -> list:
    """Matrix positions (i, j), 1-based, that are free in the ideal: j > h(i)."""
    n = len(h)
    return [(i, j) for i in range(1, n + 1) for j in range(h_value(h, i) + 1, n + 1)]


def indifference_edges(h) -> set:
    """Edges {i, j} with i < j <= h(i)."""
    return {(i, j) for i in range(1, len(h) + 1) for j in range(i + 1, h_value(h, i) + 1)}


def precedes(h, i: int, j: int) -> bool:
    """The partial order: i comes before j exactly when h(i) < j."""
    return h_value(h, i) < j


def from_composition(Lambda) -> tuple:
    """Block-constant Hessenberg function of a composition: each block of
    size b maps onto the block's right edge."""
    out = []
    offset = 0
    for b in Lambda:
        if b < 1:
            raise ValueError(f"{tuple(Lambda)} is not a composition")
        out.extend([offset + b] * b)
        offset += b
    return tuple(out)


def conjugate_h(h) -> tuple:
    """h'(i) = #{j : h(j) >= n + 1 - i}."""
    n = len(h)
    return tuple(sum(1 for v in h if v >= n + 1 - i) for i in range(1, n + 1))


def e_function(h) -> tuple:
    """e(i) = n - h'(n + 1 - i); nondecreasing with e(i) < i."""
    n = len(h)
    hp = conjugate_h(h)
    e = tuple(n - hp[n - i] for i in range(1, n + 1))
    if any(e[i] > i for i in range(n)) or any(e[i] > e[i + 1] for i in range(n - 1)):
        raise AssertionError(f"derived e-function {e} violates its invariants")
    return e


@lru_cache(maxsize=None)
def enumerate_hessenberg(n: int) -> tuple:
    """All Hessenberg functions on [n] (a Catalan number of them), sorted."""
    if n < 1:
        raise ValueError("enumerate_hessenberg needs n >= 1")
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = max(i + 1, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            rec(prefix)
            prefix.pop()

    rec([])
    return tuple(out)


@dataclass(frozen=True)
class CompatibleTriple:
    """A triple (h0, h1, h2) satisfying one of the two local exchange rules,
    together with the pivot index (1-based) and which case fired."""

    h0: tuple
    h1: tuple
    h2: tuple
    pivot: int
    case: str  # "I" or "II"


def _replace(h, i: int, value: int) -> tuple:
    out = list(h)
    out[i - 1] = value
    return tuple(out)


def compatible_triples_from(h1) -> list:
    """All compatible triples with the given middle function."""
    h1 = check_hessenberg(h1)
    n = len(h1)
    found = []
    for i in range(1, n):
        hi = h_value(h1, i)
        # Case I: strictly rising through i, and constant at the landing spot
        if (
            h_value(h1, i - 1) < hi < h_value(h1, i + 1)
            and hi + 1 <= n
            and h_value(h1, hi) == h_value(h1, hi + 1)
        ):
            h0 = _replace(h1, i, hi - 1)
            h2 = _replace(h1, i, hi + 1)
            if is_hessenberg(h0) and is_hessenberg(h2):
                found.append(CompatibleTriple(h0, h1, h2, i, "I"))
        # Case II: a unit step at i whose value is never attained
        if h_value(h1, i + 1) == hi + 1 and all(v != i for v in h1):
            h0 = _replace(h1, i + 1, hi)
            h2 = _replace(h1, i, hi + 1)
            if is_hessenberg(h0) and is_hessenberg(h2):
                found.append(CompatibleTriple(h0, h1, h2, i, "II"))
    return found


def enumerate_compatible_triples(n: int) -> list:
    """Every compatible triple over all middle functions in H_n."""
    out = []
    for h1 in enumerate_hessenberg(n):
        out.extend(compatible_triples_from(h1))
    return out


def greene_kleitman(h) -> tuple:
    """Shape of the poset of h by the greedy characteristic-sequence sweep.

    Repeatedly build a chain: start from the smallest unused vertex, always
    jump to the smallest unused vertex strictly after the current one in the
    h-order.  The chain sizes, in order, form the shape.
    """
    h = check_hessenberg(h)
    n = len(h)
    used = [False] * (n + 1)
    sizes = []
    remaining = n
    while remaining:
        start = next(i for i in range(1, n + 1) if not used[i])
        used[start] = True
        remaining -= 1
        size = 1
        current = start
        while True:
            nxt = next(
                (j for j in range(current + 1, n + 1) if not used[j] and precedes(h, current, j)),
                None,
            )
            if nxt is None:
                break
            used[nxt] = True
            remaining -= 1
            size += 1
            current = nxt
        sizes.append(size)
    shape = tuple(sorted(sizes, reverse=True))
    if list(shape) != sizes:
        # the greedy sweep always yields weakly decreasing sizes
        raise AssertionError(f"characteristic sequence sizes {sizes} not sorted")
    return shape
