from itertools import product

import pytest

from hallvertex.bases import hl_Q, schur, skew_Q
from hallvertex.exact import ONE, T, TPoly, TRational, eval_at, hall_twist
from hallvertex.partitions import c_poly, conjugate, enumerate_partitions, epsilon, partitions_up_to, prepend
from hallvertex.structure import (
    STABLE_RUN,
    StabilityReport,
    clamped_bound,
    f_coeff,
    f_inner,
    find_onset,
    hall_g,
    hall_stability_scan,
    product_expand_Q,
    stability_scan,
)
from hallvertex.symfunc import hall_inner, inner, specialize_vars
from subgroup_oracle import subgroup_census


@pytest.mark.parametrize("p, max_weight", [(2, 4), (3, 4)])
def test_hall_polynomials_count_subgroups(p, max_weight):
    for n in range(max_weight + 1):
        for lam in enumerate_partitions(n):
            census = subgroup_census(lam, p)
            for k in range(n + 1):
                for mu in enumerate_partitions(k):
                    for nu in enumerate_partitions(n - k):
                        assert eval_at(hall_g(lam, mu, nu), p) == census.get((mu, nu), 0), (lam, mu, nu)


def test_known_hall_polynomials():
    assert hall_g((1, 1), (1,), (1,)) == TPoly([1, 1])
    assert hall_g((2,), (1,), (1,)) == TPoly([1])
    assert hall_g((2, 1), (1,), (1, 1)) == TPoly([1])
    assert hall_g((2, 1), (1, 1), (1,)) == TPoly([1])
    assert hall_g((2, 1), (2,), (1,)) == TPoly([0, 1])
    # a Hall polynomial with a negative coefficient
    assert hall_g((3, 1), (2,), (2,)) == TPoly([-1, 1])
    assert not hall_g((2,), (1,), ())


def test_hall_g_symmetric_and_integral():
    for n in range(6):
        for lam in enumerate_partitions(n):
            for k in range(n + 1):
                for mu in enumerate_partitions(k):
                    for nu in enumerate_partitions(n - k):
                        g = hall_g(lam, mu, nu)
                        assert g.has_integer_coeffs()
                        assert g == hall_g(lam, nu, mu)


def test_product_expansion():
    assert product_expand_Q((1,), (1,)) == {(2,): ONE - T, (1, 1): ONE}
    assert product_expand_Q((), (2, 1)) == {(2, 1): ONE}
    got = specialize_vars(hl_Q((1,)) * hl_Q((1,)), 2)
    want = specialize_vars(hl_Q((2,)) * (ONE - T) + hl_Q((1, 1)), 2)
    assert got == want


def test_product_expansion_recombines():
    for mu, nu in product(partitions_up_to(3), repeat=2):
        prod = hl_Q(mu) * hl_Q(nu)
        a = product_expand_Q(mu, nu)
        total = sum((c * c * TRational(c_poly(lam)) for lam, c in a.items()), TRational(0))
        assert total == inner(prod, prod)


def test_product_expansion_at_zero_is_littlewood_richardson():
    for mu, nu in product(partitions_up_to(4), repeat=2):
        if sum(mu) + sum(nu) > 7:
            continue
        a = product_expand_Q(mu, nu)
        for lam in enumerate_partitions(sum(mu) + sum(nu)):
            lr = hall_inner(schur(mu) * schur(nu), schur(lam))
            assert eval_at(a.get(lam, TRational(0)), 0) == eval_at(lr, 0)


def test_f_examples():
    assert f_coeff((1, 1), (1,), (1,)) == ONE + T
    assert f_coeff((2,), (1,), (1,)) == ONE
    assert eval_at(f_coeff((2, 1), (1,), (1, 1)), 0) == 1
    assert f_inner((1, 1), (1,), (1,)) == (ONE + T) * (ONE - T)
    assert not f_coeff((2,), (1,), (2,))


def test_hall_twist_of_f_over_a_scan():
    lam, mu, nu = (1,), (1,), ()
    for m in range(1, 6):
        big = prepend(m, lam)
        f = f_coeff(big, mu, prepend(m, nu))
        e = epsilon(big) - epsilon(mu) - epsilon(prepend(m, nu))
        assert hall_g(big, mu, prepend(m, nu)) == hall_twist(f, e).num


def test_find_onset():
    s = [(0, 1), (1, 2), (2, 5), (3, 5), (4, 5), (5, 5)]
    assert find_onset(s) == (2, 5)
    assert find_onset(s[:5]) == (None, None)
    assert find_onset([]) == (None, None)
    assert STABLE_RUN == 3


def test_stability_trivial_triple():
    rep = stability_scan((), (), (), 6)
    assert rep.onset == 1
    assert rep.stable_value == ONE - T
    for m, v in rep.samples:
        if m >= 1:
            assert v == ONE - T


def test_stability_small_bound():
    rep = stability_scan((1,), (1,), ())
    assert rep.theorem_bound == 1
    assert rep.onset is not None and rep.onset <= 2
    assert rep.within_bound


def test_stability_b_side_agrees():
    for lam, mu, nu in [((1,), (1,), ()), ((2,), (1,), (1,)), ((1, 1), (), (1,))]:
        q = stability_scan(lam, mu, nu)
        b = stability_scan(lam, mu, nu, q.samples[-1][0], side="B")
        assert [v for _, v in q.samples] == [v for _, v in b.samples]


def test_stability_precondition():
    with pytest.raises(ValueError):
        stability_scan((1,), (1,), (), 2)


def test_negative_offset_exceeds_theorem_bound():
    # Q_(0,1) = t q_1, so a_1 = t(1-t) while a_m = 0 for m >= 2
    rep = stability_scan((), (), (1,), 8)
    assert rep.theorem_bound == 0
    assert rep.onset == 2
    assert not rep.within_bound


def test_clamped_bound_holds_on_small_family():
    parts = partitions_up_to(2)
    for lam, mu, nu in product(parts, parts, parts):
        b = clamped_bound(lam, mu, nu)
        rep = stability_scan(lam, mu, nu, b + 4)
        assert rep.onset is not None and rep.onset <= b + 1, (lam, mu, nu)
        if sum(lam) >= sum(mu) + sum(nu):
            assert b == rep.theorem_bound


def test_hall_scan_examples():
    rep = hall_stability_scan((), (), ())
    assert rep.onset == 0
    assert all(v == ONE for _, v in rep.samples)
    rep = hall_stability_scan((1,), (1,), ())
    assert rep.stable_value == T
    for m, v in rep.samples:
        assert v == TRational(hall_g(prepend(m, (1,)), (1,), (m,)))


def test_report_json():
    data = stability_scan((1,), (1,), ()).to_json()
    assert set(data) == {"lambda", "mu", "nu", "offset", "samples", "onset", "stable", "bound"}
    assert data["bound"] == 1
    assert set(data["samples"][0]["value"]) == {"num", "den"}
    assert isinstance(StabilityReport((), (), (), 0, 0).to_json()["samples"], list)


def test_parallel_scan_matches_serial():
    a = stability_scan((1,), (1,), (1,), jobs=1)
    b = stability_scan((1,), (1,), (1,), jobs=2)
    assert a.samples == b.samples and a.onset == b.onset
