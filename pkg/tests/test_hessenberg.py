from math import comb

import pytest

from nilcount.hessenberg import (
    CompatibleTriple,
    check_hessenberg,
    compatible_triples_from,
    conjugate_h,
    e_function,
    edge_count,
    enumerate_compatible_triples,
    enumerate_hessenberg,
    from_composition,
    greene_kleitman,
    h_size,
    indifference_edges,
    precedes,
)
from nilcount.partitions import conjugate, partitions_of


def test_from_composition_examples():
    assert from_composition((2, 3, 1)) == (2, 2, 5, 5, 5, 6)
    for n in range(1, 7):
        assert from_composition((1,) * n) == tuple(range(1, n + 1))
        assert from_composition((n,)) == (n,) * n


def test_block_dimension_identity():
    # n^2 - |k_Lam| = C(n,2) - n(lam')
    from nilcount.partitions import n_stat, sort_composition

    for Lam in [(2, 3, 1), (1, 1, 1), (4,), (2, 2), (3, 1, 2)]:
        n = sum(Lam)
        h = from_composition(Lam)
        lam = sort_composition(Lam)
        assert n * n - h_size(h) == comb(n, 2) - n_stat(conjugate(lam))


def test_indifference_edges_examples():
    assert indifference_edges((2, 3, 5, 5, 5)) == {(1, 2), (2, 3), (3, 4), (4, 5), (3, 5)}
    assert indifference_edges((1, 2, 3)) == set()
    n = 5
    assert len(indifference_edges((n,) * n)) == comb(n, 2)
    assert edge_count((2, 3, 5, 5, 5)) == 5


def test_precedes_examples():
    h = (2, 3, 5, 5, 5)
    assert precedes(h, 1, 3)
    assert not precedes(h, 3, 5)
    assert all(not precedes(h, i, i) for i in range(1, 6))


def test_greene_kleitman_examples():
    assert greene_kleitman((3, 4, 6, 7, 8, 8, 8, 8)) == (3, 2, 2, 1)
    assert greene_kleitman((1, 3, 5, 6, 7, 7, 7)) == (4, 2, 1)
    assert greene_kleitman(from_composition((2, 2))) == (2, 2)


def test_greene_kleitman_of_blocks_is_conjugate():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert greene_kleitman(from_composition(lam)) == conjugate(lam), lam


def test_conjugate_h_and_e_examples():
    assert conjugate_h((2, 3, 5, 5, 5)) == (3, 3, 4, 5, 5)
    assert e_function((2, 3, 5, 5, 5)) == (0, 0, 1, 2, 2)
    n = 4
    assert conjugate_h((n,) * n) == (n,) * n
    assert e_function((n,) * n) == (0,) * n
    assert e_function(tuple(range(1, n + 1))) == tuple(range(n))


def test_e_function_invariants():
    for n in range(1, 9):
        for h in enumerate_hessenberg(n):
            e = e_function(h)
            assert all(e[i] <= i for i in range(n))
            assert all(e[i] <= e[i + 1] for i in range(n - 1))


def test_enumerate_hessenberg_catalan():
    for n in range(1, 9):
        count = len(enumerate_hessenberg(n))
        assert count == comb(2 * n, n) // (n + 1), n
    assert enumerate_hessenberg(1) == ((1,),)
    assert len(enumerate_hessenberg(3)) == 5
    assert len(enumerate_hessenberg(5)) == 42


def test_compatible_triple_examples():
    trips = compatible_triples_from((2, 3, 4, 6, 6, 6))
    case1 = [t for t in trips if t.pivot == 3 and t.case == "I"]
    assert case1 and case1[0].h0 == (2, 3, 3, 6, 6, 6) and case1[0].h2 == (2, 3, 5, 6, 6, 6)
    trips2 = compatible_triples_from((1, 2, 4, 5, 6, 7, 7))
    case2 = [t for t in trips2 if t.pivot == 3 and t.case == "II"]
    assert case2 and case2[0].h0 == (1, 2, 4, 4, 6, 7, 7) and case2[0].h2 == (1, 2, 5, 5, 6, 7, 7)
    assert enumerate_compatible_triples(2) == []


def test_triple_size_relations():
    for n in range(2, 7):
        for trip in enumerate_compatible_triples(n):
            assert isinstance(trip, CompatibleTriple)
            assert h_size(trip.h0) == h_size(trip.h1) - 1
            assert h_size(trip.h2) == h_size(trip.h1) + 1
            check_hessenberg(trip.h0)
            check_hessenberg(trip.h2)


def test_check_hessenberg_rejects():
    with pytest.raises(ValueError):
        check_hessenberg((2, 1))
    with pytest.raises(ValueError):
        check_hessenberg((0, 2))
    with pytest.raises(ValueError):
        check_hessenberg((1, 3))
