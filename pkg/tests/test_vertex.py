import random

import pytest

from hallvertex.bases import (
    alt_kernel,
    b_product,
    gen_b,
    gen_h,
    gen_q,
    hl_B_raising,
    hl_Q,
    hl_Q_raising,
    q_product,
    raising_expand,
    schur,
)
from hallvertex.exact import ONE, T, TPoly, TRational
from hallvertex.partitions import column, enumerate_partitions, partitions_up_to, partwise_sum, prepend
from hallvertex.symfunc import AlphabetExpr, SymFunc, WindowError, linear_combination, omega, plethysm_alphabet
from hallvertex.vertex import (
    ALPHA_ALPHA,
    BETA_BETA,
    DUAL_JING,
    JING,
    Kind,
    VertexSpec,
    bernstein,
    bernstein_col,
    dual_jing_series,
    generic_vertex,
    iterate,
    jing_H,
    jing_Hbar,
    vertex_component,
    vertex_series,
)


def random_symfunc(rng, degree):
    pairs = []
    for lam in partitions_up_to(degree):
        if rng.random() < 0.4:
            pairs.append((TRational(TPoly([rng.randint(-3, 3), rng.randint(-3, 3)])), SymFunc.p(*lam)))
    return linear_combination(pairs)


def test_on_one():
    for n in range(-2, 6):
        assert jing_H(n, SymFunc.one()) == gen_q(n)
        assert jing_Hbar(n, SymFunc.one()) == gen_b(n)
        assert bernstein(n, SymFunc.one()) == gen_h(n)
        assert generic_vertex(BETA_BETA, n, SymFunc.one()) == gen_b(n)


def test_creation_examples():
    assert jing_H(2, hl_Q((1,))) == hl_Q_raising((2, 1))
    assert jing_H(1, hl_Q((2,))) == hl_Q_raising((1, 2))


def test_creation_small():
    for lam in partitions_up_to(4):
        lam1 = lam[0] if lam else 0
        F, G = hl_Q_raising(lam), hl_B_raising(lam)
        for n in range(-2, lam1 + 4):
            assert jing_H(n, F) == hl_Q_raising(prepend(n, lam))
            assert jing_Hbar(n, G) == hl_B_raising(prepend(n, lam))


def test_vanishing_law():
    for nu in partitions_up_to(5):
        assert not hl_Q(prepend(-sum(nu) - 1, nu))


def test_bernstein_examples():
    assert bernstein(2, schur((1,))) == schur((2, 1))
    assert bernstein_col(2, schur((2, 1))) == schur((3, 2))
    for lam in partitions_up_to(4):
        for n in range(len(lam), 5):
            assert bernstein_col(n, schur(lam)) == schur(partwise_sum(column(n), lam))


def test_t_zero_degeneration():
    for lam in partitions_up_to(4):
        S = schur(lam)
        for n in range(0, 4):
            assert jing_H(n, S).eval_t(0) == bernstein(n, S)
            assert jing_Hbar(n, omega(S)).eval_t(0) == bernstein_col(n, omega(S))


def test_omega_conjugates_H_to_Hbar():
    rng = random.Random(2)
    for _ in range(5):
        F = random_symfunc(rng, 5)
        for n in range(-1, 4):
            assert omega(jing_H(n, omega(F))) == jing_Hbar(n, F)


def test_generic_matches_named():
    rng = random.Random(4)
    for _ in range(3):
        F = random_symfunc(rng, 5)
        for n in range(-2, 4):
            assert generic_vertex(JING, n, F) == jing_H(n, F)
            assert generic_vertex(DUAL_JING, n, F) == jing_Hbar(n, F)


def test_other_families_match_raising_form():
    for lam in partitions_up_to(4):
        R = raising_expand(lam, alt_kernel)
        assert iterate(BETA_BETA, lam) == linear_combination((c, b_product(mu)) for mu, c in R.items())
        assert iterate(ALPHA_ALPHA, lam) == linear_combination((c, q_product(mu)) for mu, c in R.items())


def test_spec_names():
    assert JING == VertexSpec(Kind.ALPHA, Kind.BETA)
    assert DUAL_JING.name == "beta/alpha"


def test_series_routes():
    window = (-4, 4)
    inputs = [hl_Q(lam) for lam in partitions_up_to(3)] + [random_symfunc(random.Random(8), 4)]
    for F in inputs:
        for spec in (JING, DUAL_JING, BETA_BETA, ALPHA_ALPHA):
            S = vertex_series(spec, F, window)
            for n in range(-4, 5):
                assert S.coeff(n) == generic_vertex(spec, n, F)


def test_series_on_one():
    S = vertex_series(JING, SymFunc.one(), (0, 5))
    for n in range(6):
        assert S.coeff(n) == gen_q(n)


def test_dual_sign_law():
    F = hl_Q((2, 1))
    D = dual_jing_series(F, (-4, 4))
    Hbar = vertex_series(DUAL_JING, F, (-4, 4)).negate_z()
    for n in range(-4, 5):
        assert D.coeff(n) == Hbar.coeff(n)
        assert D.coeff(n) == jing_Hbar(n, F) * (-1 if n % 2 else 1)


def test_window_errors():
    with pytest.raises(WindowError):
        vertex_component(JING, 5, hl_Q((1,)), (-2, 2))
    with pytest.raises(WindowError):
        vertex_series(JING, hl_Q((1,)), (3, 2))


def test_eigenvector_property():
    # alpha_z^perp acting on q_m: q_m[X+z] = sum_k q_{m-k} q_k[z]
    shift = AlphabetExpr(True, ((1, 1),))
    for m in range(7):
        got = plethysm_alphabet(gen_q(m), shift)
        for k in range(m + 1):
            want = gen_q(m - k) * (ONE if k == 0 else ONE - T)
            assert got.coeff(k) == want
