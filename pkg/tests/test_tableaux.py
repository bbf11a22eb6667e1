from nilcount.partitions import coeff_b, partitions_of, theta_weight
from nilcount.qpoly import Laurent, q_int
from nilcount.tableaux import (
    coeff_b_tableaux,
    content_of,
    enumerate_ssyt,
    enumerate_syt_h,
    is_ssyt,
    r_weight,
    s_weight,
    shape_of,
    syt_count,
    syt_weight_sum,
)

ONE = Laurent.one()

# the running example used throughout: rows (1,1,2), (2,3,3), (4,)
T_EXAMPLE = ((1, 1, 2), (2, 3, 3), (4,))


def test_enumerate_ssyt_examples():
    found = enumerate_ssyt((3, 3, 1), (2, 2, 2, 1))
    expected = {
        ((1, 1, 2), (2, 3, 3), (4,)),
        ((1, 1, 2), (2, 3, 4), (3,)),
        ((1, 1, 3), (2, 2, 4), (3,)),
    }
    assert set(found) == expected
    assert all(is_ssyt(t) and shape_of(t) == (3, 3, 1) for t in found)
    for n in range(1, 6):
        assert len(enumerate_ssyt((n,), (n,))) == 1
    assert enumerate_ssyt((1, 1), (2,)) == []


def test_content_recovery():
    assert content_of(T_EXAMPLE) == (2, 2, 2, 1)


def test_s_weight_examples():
    assert s_weight(T_EXAMPLE) == Laurent({0: 1, 1: 1})
    for t in enumerate_ssyt((2, 1), (1, 1, 1)):
        assert s_weight(t) == ONE
    assert s_weight(((1, 1, 1),)) == ONE


def test_r_weight_examples():
    assert r_weight(T_EXAMPLE) == q_int(2) ** 2 * q_int(3)
    assert r_weight(((1, 1, 2),)) == ONE
    assert r_weight(((1, 2), (3, 4))) == q_int(2) * q_int(1)


def test_tableau_form_matches_chain_form():
    for n in range(1, 8):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                assert coeff_b_tableaux(mu, lam) == coeff_b(mu, lam), (mu, lam)


def test_weight_product_follows_the_chain():
    # each tableau's s*r weight is the product of strip weights of the chain
    # of subshapes occupied by entries <= j
    for n in range(1, 7):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                for t in enumerate_ssyt(mu, lam):
                    chain = [()]
                    for j in range(1, len(lam) + 1):
                        rows = [sum(1 for v in row if v <= j) for row in t]
                        chain.append(tuple(r for r in rows if r))
                    prod = ONE
                    for j in range(1, len(chain)):
                        prod = prod * theta_weight(chain[j], chain[j - 1])
                    assert prod == s_weight(t) * r_weight(t), (mu, lam, t)


def test_enumerate_syt_h_examples():
    for n in range(1, 6):
        for h in [tuple(range(1, n + 1)), (n,) * n]:
            assert len(enumerate_syt_h((n,), h)) == 1
    assert len(enumerate_syt_h((1, 1), (1, 2))) == 1
    assert len(enumerate_syt_h((1, 1), (2, 2))) == 0


def test_syt_h_full_order_recovers_all_standard_tableaux():
    for n in range(1, 7):
        h = tuple(range(1, n + 1))
        for mu in partitions_of(n):
            assert len(enumerate_syt_h(mu, h)) == syt_count(mu), (mu, n)


def test_syt_weight_sum_examples():
    assert syt_weight_sum((4,), (2, 3, 4, 4)) == ONE
    for n in range(1, 6):
        h = tuple(range(1, n + 1))
        assert syt_weight_sum((1,) * n, h) == ONE
    poly = syt_weight_sum((2, 1), (1, 2, 3))
    assert poly.is_polynomial()
    assert all(c > 0 for c in poly.coeffs.values())
