from fractions import Fraction

from hallvertex.bases import (
    alt_kernel,
    det,
    gen_e,
    gen_h,
    gen_q,
    gen_qprime,
    hl_B,
    hl_B_raising,
    hl_B_vertex,
    hl_kernel,
    hl_Q,
    hl_Q_raising,
    in_q_basis,
    q_product,
    raising_expand,
    schur,
    schurQ,
    schurQ_matrix,
    skew_Q,
)
from hallvertex.exact import ONE, T, TRational
from hallvertex.partitions import c_poly, conjugate, enumerate_partitions, partitions_up_to, strict_partitions
from hallvertex.symfunc import AlphabetExpr, SymFunc, adjoint_apply, inner, linear_combination, omega, plethysm_alphabet

ONE_MINUS_T = ONE - T


def test_schur_small():
    assert schur((3,)) == gen_h(3)
    assert schur((1, 1)) == gen_h(1) ** 2 - gen_h(2)
    assert schur((1, 1)) == gen_e(2)
    assert not schur((1, 2))


def test_schur_conjugation():
    for n in range(7):
        for lam in enumerate_partitions(n):
            assert omega(schur(lam)) == schur(conjugate(lam))


def test_schurQ_small():
    for n in range(1, 5):
        assert schurQ((n, 0)) == gen_qprime(n)
        assert schurQ((n,)) == gen_qprime(n)
    assert schurQ((2, 1)) == gen_qprime(2) * gen_qprime(1) - gen_qprime(3) * 2


def test_pfaffian_squares_to_determinant():
    for n in range(7):
        for lam in strict_partitions(n):
            assert det(schurQ_matrix(lam)) == schurQ(lam) ** 2


def test_qprime_is_q_at_minus_one():
    for n in range(8):
        assert gen_q(n).eval_t(-1) == gen_qprime(n)


def test_raising_expansion_one_pair():
    got = raising_expand((1, 1))
    assert got == {(1, 1): ONE, (2,): T - ONE}
    assert hl_Q_raising((2,)) == gen_q(2)
    assert hl_Q_raising((1, 1)) == q_product((1, 1)) + q_product((2,)) * (T - ONE)


def test_raising_kernels():
    assert [hl_kernel(k) for k in range(3)] == [ONE, T - ONE, T ** 2 - T]
    assert [alt_kernel(k) for k in range(3)] == [ONE, T - ONE, ONE - T]


def test_raising_cap_is_enough():
    for n in range(7):
        for lam in enumerate_partitions(n):
            K = sum(lam)
            assert raising_expand(lam, cap=K) == raising_expand(lam, cap=K + 3)


def test_hl_routes_agree():
    for n in range(8):
        for lam in enumerate_partitions(n):
            assert hl_Q(lam) == hl_Q_raising(lam)
    for n in range(6):
        for lam in enumerate_partitions(n):
            assert hl_B_vertex(lam) == hl_B(lam) == hl_B_raising(lam)


def test_hl_examples():
    assert hl_Q((3,)) == gen_q(3)
    assert hl_B((2,)) == gen_e(2) * ONE_MINUS_T + gen_h(2) * (T ** 2 - T)
    assert hl_B((1, 1)) == gen_h(2) * (T ** 3 - T ** 2 - T + ONE)
    assert hl_Q(()) == SymFunc.one()


def test_hl_at_zero_is_schur():
    for n in range(9):
        for lam in enumerate_partitions(n):
            assert hl_Q(lam).eval_t(0) == schur(lam)


def test_hl_at_minus_one_is_schurQ():
    for n in range(7):
        for lam in strict_partitions(n):
            assert hl_Q(lam).eval_t(-1) == schurQ(lam)
            assert hl_B(lam).eval_t(-1) == schurQ(lam)
            assert omega(schurQ(lam)) == schurQ(lam)


def test_inequivalence_witness():
    assert hl_Q(conjugate((2,))) != hl_B((2,))


def test_orthogonality_small():
    for n in range(6):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                want = TRational(c_poly(lam)) if lam == mu else TRational(0)
                assert inner(hl_Q(lam), hl_Q(mu)) == want


def test_skew_examples():
    for lam in partitions_up_to(5):
        assert skew_Q(lam, ()) == hl_Q(lam)
        for n in range(1, sum(lam) + 1):
            assert adjoint_apply(gen_q(n), hl_Q(lam)) == skew_Q(lam, (n,)) * ONE_MINUS_T
    for lam in partitions_up_to(3):
        lam1 = lam[0] if lam else 0
        for k in range(3):
            n = lam1 + k + 1
            assert skew_Q((n,) + lam, (n - k,)) == gen_q(k) * hl_Q(lam)


def test_coproduct_one_letter():
    # Q[X+z] = sum_i Q_{lam/(i)}[X] q_i[z], with q_i[z] = (1-t) z^i for i > 0
    shift = AlphabetExpr(True, ((1, 1),))
    for lam in partitions_up_to(5):
        got = plethysm_alphabet(hl_Q(lam), shift)
        for i in range(sum(lam) + 1):
            want = skew_Q(lam, (i,)) * (ONE if i == 0 else ONE_MINUS_T)
            assert got.coeff(i) == want


def test_coproduct_full():
    # <Q_lam[X+Y], Q_nu[X] Q_mu[Y]> expressed through one alphabet: Q_mu^perp Q_lam = c_mu Q_{lam/mu}
    for lam in partitions_up_to(4):
        for k in range(sum(lam) + 1):
            for mu in enumerate_partitions(k):
                left = adjoint_apply(hl_Q(mu), hl_Q(lam))
                right = skew_Q(lam, mu) * TRational(c_poly(mu))
                assert left == right


def test_in_q_basis():
    got = in_q_basis(hl_Q((1, 1)))
    assert got == {(1, 1): ONE, (2,): T - ONE}
    got = in_q_basis(hl_B((2,)))
    assert got == {(2,): -ONE, (1, 1): ONE}
    assert linear_combination((c, q_product(mu)) for mu, c in got.items()) == hl_B((2,))


def test_generic_scalar_coefficients():
    assert gen_e(3) == omega(gen_h(3))
    assert gen_h(2) == (SymFunc.p(1, 1) + SymFunc.p(2)) * Fraction(1, 2)
