"""Named identity checks, shared by ``hallvertex verify`` and the acceptance tests.

A suite is a function ``(tally, max_weight, rng)`` that records every check
through :meth:`Tally.expect`.  :func:`run_suite` wraps it and returns a
JSON-ready summary.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

from .bases import (
    alt_kernel,
    b_product,
    det,
    gen_b,
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
    q_product,
    raising_expand,
    schur,
    schurQ,
    schurQ_matrix,
    skew_Q,
)
from .exact import ONE, T, TPoly, TRational, ZERO, eval_at
from .partitions import (
    c_poly,
    column,
    conjugate,
    enumerate_partitions,
    partitions_up_to,
    partwise_sum,
    positive_weight,
    prepend,
    strict_partitions,
)
from .structure import (
    IntegrityError,
    f_coeff,
    hall_g,
    hall_stability_scan,
    stability_scan,
)
from .symfunc import (
    MultiPoly,
    SymFunc,
    adjoint_apply,
    forgotten,
    hall_inner,
    inner,
    linear_combination,
    m_in_p,
    monomial_expansion,
    omega,
    specialize_vars,
)
from .vertex import (
    ALPHA_ALPHA,
    BETA_BETA,
    DUAL_JING,
    JING,
    bernstein,
    bernstein_col,
    dual_jing_series,
    generic_vertex,
    iterate,
    jing_H,
    jing_Hbar,
    vertex_series,
)


class _Stop(Exception):
    pass


def _plain(v):
    if isinstance(v, (TRational, TPoly, SymFunc, MultiPoly)):
        return str(v)
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    return v


class Tally:
    """Counts checks and keeps the failing ones (stopping at the first if ``fail_fast``)."""

    def __init__(self, fail_fast: bool = True):
        self.fail_fast = fail_fast
        self.checks = 0
        self.failures: list[dict] = []

    def expect(self, cond: bool, what: str, **ctx) -> bool:
        self.checks += 1
        if not cond:
            self.failures.append({"check": what, **{k: _plain(v) for k, v in ctx.items()}})
            if self.fail_fast:
                raise _Stop
        return bool(cond)

    @property
    def passed(self) -> bool:
        return not self.failures


def _poly(*coeffs) -> TRational:
    """Polynomial in t from ascending integer coefficients."""
    return TRational(TPoly(list(coeffs)))


# ---------------------------------------------------------------------------
# the suites
# ---------------------------------------------------------------------------

def two_variable_example(tally: Tally, max_weight: int, rng) -> None:
    a = _poly(1, -1, -1, 1)        # t^3 - t^2 - t + 1
    b = _poly(0, -1, 1)            # t^2 - t
    c = _poly(1, -2, 1)            # t^2 - 2t + 1
    d = _poly(1, -1)               # 1 - t
    expected = {
        "Q(1,1)": ((1, 1), hl_Q, {(1, 1): a}),
        "B(2)": ((2,), hl_B, {(2, 0): b, (1, 1): c, (0, 2): b}),
        "Q(2)": ((2,), hl_Q, {(2, 0): d, (1, 1): c, (0, 2): d}),
        "B(1,1)": ((1, 1), hl_B, {(2, 0): a, (1, 1): a, (0, 2): a}),
    }
    got = {}
    for name, (lam, build, coeffs) in expected.items():
        got[name] = specialize_vars(build(lam), 2)
        tally.expect(got[name] == MultiPoly(2, coeffs), "two-variable expansion", family=name, got=got[name])
    tally.expect(got["Q(1,1)"] != got["B(2)"], "Q(1,1) differs from B(2)")
    tally.expect(got["Q(2)"] != got["B(1,1)"], "Q(2) differs from B(1,1)")
    tally.expect(hl_Q((1, 1)) == gen_e(2) * a, "Q(1,1) = (t^3-t^2-t+1) e_2")
    tally.expect(hl_B((1, 1)) == gen_h(2) * a, "B(1,1) = (t^3-t^2-t+1) h_2")
    tally.expect(hl_Q((2,)) == gen_h(2) * d + gen_e(2) * b, "Q(2) = (1-t)h_2 + (t^2-t)e_2")
    tally.expect(hl_B((2,)) == gen_e(2) * d + gen_h(2) * b, "B(2) = (1-t)e_2 + (t^2-t)h_2")


def duality(tally: Tally, max_weight: int, rng) -> None:
    for n in range(max_weight + 1):
        parts = enumerate_partitions(n)
        for lam, mu in product(parts, parts):
            want = ONE if lam == mu else ZERO
            v = inner(q_product(lam), m_in_p(mu))
            tally.expect(v == want, "<q_lam, m_mu> = delta", lam=lam, mu=mu, got=v)
            v = inner(b_product(lam), forgotten(mu))
            tally.expect(v == want, "<b_lam, f_mu> = delta", lam=lam, mu=mu, got=v)


def orthogonality(tally: Tally, max_weight: int, rng) -> None:
    for n in range(max_weight + 1):
        parts = enumerate_partitions(n)
        for lam, mu in product(parts, parts):
            want = TRational(c_poly(lam)) if lam == mu else ZERO
            v = inner(hl_Q(lam), hl_Q(mu))
            tally.expect(v == want, "<Q_lam, Q_mu> = c_lam delta", lam=lam, mu=mu, got=v)
            v = inner(hl_B_vertex(lam), hl_B_vertex(mu))
            tally.expect(v == want, "<B_lam, B_mu> = c_lam delta", lam=lam, mu=mu, got=v)


def creation(tally: Tally, max_weight: int, rng) -> None:
    for lam in partitions_up_to(max_weight):
        Fq, Fb = hl_Q_raising(lam), hl_B_raising(lam)
        lam1 = lam[0] if lam else 0
        for n in range(-2, lam1 + 4):
            comp = prepend(n, lam)
            tally.expect(jing_H(n, Fq) == hl_Q_raising(comp), "H_n Q_lam = Q_(n,lam)", n=n, lam=lam)
            tally.expect(jing_Hbar(n, Fb) == hl_B_raising(comp), "Hbar_n B_lam = B_(n,lam)", n=n, lam=lam)
    for nu in partitions_up_to(min(max_weight, 5)):
        for n in (-sum(nu) - 1, -sum(nu) - 2):
            tally.expect(not hl_Q(prepend(n, nu)), "Q_(n,nu) = 0 for n < -|nu|", n=n, nu=nu)


def specialize_t0(tally: Tally, max_weight: int, rng) -> None:
    for lam in partitions_up_to(max_weight):
        tally.expect(hl_Q(lam).eval_t(0) == schur(lam), "Q_lam(t=0) = S_lam", lam=lam)
        tally.expect(hl_B_vertex(lam).eval_t(0) == schur(conjugate(lam)), "B_lam(t=0) = S_lam'", lam=lam)


def specialize_t_minus_one(tally: Tally, max_weight: int, rng) -> None:
    for n in range(max_weight + 1):
        for lam in strict_partitions(n):
            Qp = schurQ(lam)
            tally.expect(hl_Q(lam).eval_t(-1) == Qp, "Q_lam(t=-1) = Schur Q", lam=lam)
            tally.expect(hl_B_vertex(lam).eval_t(-1) == Qp, "B_lam(t=-1) = Schur Q", lam=lam)
            tally.expect(omega(Qp) == Qp, "omega fixes Schur Q", lam=lam)
            tally.expect(det(schurQ_matrix(lam)) == Qp * Qp, "det M = Pf M ^ 2", lam=lam)
    for n in range(1, max_weight + 1):
        tally.expect(gen_q(n).eval_t(-1) == gen_qprime(n), "q_n(t=-1) = q'_n", n=n)


def bernstein_rows(tally: Tally, max_weight: int, rng) -> None:
    for lam in partitions_up_to(max_weight):
        S = schur(lam)
        for n in range(0, 6):
            tally.expect(bernstein(n, S) == schur(prepend(n, lam)), "row Bernstein", n=n, lam=lam)
            if n >= len(lam):
                got = bernstein_col(n, S)
                tally.expect(got == schur(partwise_sum(column(n), lam)), "column Bernstein", n=n, lam=lam)
    # t = 0 degeneration of the deformed operators
    for lam in partitions_up_to(min(max_weight, 4)):
        S = schur(lam)
        for n in range(-1, 4):
            tally.expect(jing_H(n, S).eval_t(0) == bernstein(n, S), "H_n at t=0 is Bernstein", n=n, lam=lam)
            W = omega(S)
            tally.expect(jing_Hbar(n, W).eval_t(0) == bernstein_col(n, W), "Hbar_n at t=0 is column Bernstein",
                         n=n, lam=lam)


def monomials(tally: Tally, max_weight: int, rng) -> None:
    one_minus_t = ONE - T
    for n in range(max_weight + 1):
        mq = monomial_expansion(gen_q(n), n)
        mb = monomial_expansion(gen_b(n), n)
        for lam in enumerate_partitions(n):
            ell = len(lam)
            want_q = one_minus_t ** ell
            want_b = (-T) ** (n - ell) * one_minus_t ** ell
            tally.expect(mq.get(lam, ZERO) == want_q, "q_n monomial coefficient", n=n, lam=lam)
            tally.expect(mb.get(lam, ZERO) == want_b, "b_n monomial coefficient", n=n, lam=lam)


def adjoint_table(tally: Tally, max_weight: int, rng) -> None:
    one_minus_t = ONE - T
    for n in range(max_weight + 1):
        for k in range(n + 1):
            same = ONE if k == 0 else one_minus_t
            cross = ONE if k == 0 else (-T) ** (k - 1) * one_minus_t
            rows = (
                ("q_k^perp q_n", gen_q, gen_q, same),
                ("b_k^perp q_n", gen_b, gen_q, cross),
                ("q_k^perp b_n", gen_q, gen_b, cross),
                ("b_k^perp b_n", gen_b, gen_b, same),
            )
            for what, adj, target, coeff in rows:
                got = adjoint_apply(adj(k), target(n))
                tally.expect(got == target(n - k) * coeff, what, k=k, n=n, got=got)


def skew(tally: Tally, max_weight: int, rng) -> None:
    one_minus_t = ONE - T
    for lam in partitions_up_to(max_weight):
        lam1 = lam[0] if lam else 0
        Q = hl_Q(lam)
        for k in range(4):
            for n in (lam1 + k + 1, lam1 + k + 2):
                got = skew_Q(prepend(n, lam), (n - k,))
                tally.expect(got == gen_q(k) * Q, "Q_(n,lam)/(n-k) = q_k Q_lam", n=n, k=k, lam=lam)
        for n in range(1, sum(lam) + 1):
            got = adjoint_apply(gen_q(n), Q)
            tally.expect(got == skew_Q(lam, (n,)) * one_minus_t, "q_n^perp Q_lam = (1-t) Q_lam/(n)", n=n, lam=lam)


def stability(tally: Tally, max_weight: int, rng) -> None:
    parts = partitions_up_to(max_weight)
    for lam, mu, nu in product(parts, parts, parts):
        rep = stability_scan(lam, mu, nu)
        tally.expect(rep.within_bound, "onset <= bound + 1", lam=lam, mu=mu, nu=nu,
                     onset=rep.onset, bound=rep.theorem_bound)
        hi = rep.samples[-1][0]
        brep = stability_scan(lam, mu, nu, hi, side="B")
        tally.expect([v for _, v in brep.samples] == [v for _, v in rep.samples],
                     "B-side sequence equals Q-side", lam=lam, mu=mu, nu=nu)


@lru_cache(maxsize=None)
def _lr(lam: tuple, mu: tuple, nu: tuple):
    """Littlewood-Richardson coefficient as <S_mu S_nu, S_lam> (Jacobi-Trudi, classical pairing)."""
    return hall_inner(schur(mu) * schur(nu), schur(lam)).as_fraction()


def _triples(n: int):
    for lam in enumerate_partitions(n):
        for k in range(n + 1):
            for mu in enumerate_partitions(k):
                for nu in enumerate_partitions(n - k):
                    yield lam, mu, nu


def hall(tally: Tally, max_weight: int, rng) -> None:
    for n in range(max_weight + 1):
        for lam, mu, nu in _triples(n):
            try:
                g = hall_g(lam, mu, nu)
            except IntegrityError as err:
                tally.expect(False, "hall_g is an integer polynomial", lam=lam, mu=mu, nu=nu, error=str(err))
                continue
            tally.expect(g.has_integer_coeffs(), "hall_g is an integer polynomial", lam=lam, mu=mu, nu=nu)
            tally.expect(g == hall_g(lam, nu, mu), "g symmetric in mu, nu", lam=lam, mu=mu, nu=nu)
    tally.expect(hall_g((1, 1), (1,), (1,)) == TPoly([1, 1]), "g^(1,1)_(1)(1) = t+1")
    tally.expect(hall_g((2,), (1,), (1,)) == TPoly([1]), "g^(2)_(1)(1) = 1")
    # the t = 0 comparison runs one weight further than the integrality sweep
    for n in range(max_weight + 2):
        for lam, mu, nu in _triples(n):
            got = eval_at(f_coeff(lam, mu, nu), 0)
            tally.expect(got == _lr(lam, mu, nu), "f(t=0) = LR coefficient", lam=lam, mu=mu, nu=nu, got=got)
    small = partitions_up_to(min(max_weight, 2))
    for lam, mu, nu in product(small, small, small):
        rep = hall_stability_scan(lam, mu, nu)
        tally.expect(rep.onset is not None, "Hall sequence stabilizes", lam=lam, mu=mu, nu=nu)


def _random_symfunc(rng: random.Random, degree: int) -> SymFunc:
    pairs = []
    for lam in partitions_up_to(degree):
        if rng.random() < 0.35:
            c = TRational(TPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]))
            pairs.append((c, SymFunc.p(*lam)))
    return linear_combination(pairs)


def routes(tally: Tally, max_weight: int, rng) -> None:
    window = (-4, 4)
    inputs = [hl_Q(lam) for lam in partitions_up_to(max_weight)]
    inputs += [_random_symfunc(rng, max_weight) for _ in range(3)]
    for idx, F in enumerate(inputs):
        for spec in (JING, DUAL_JING, BETA_BETA, ALPHA_ALPHA):
            S = vertex_series(spec, F, window)
            for n in range(window[0], window[1] + 1):
                tally.expect(S.coeff(n) == generic_vertex(spec, n, F), "series component = direct sum",
                             spec=spec.name, n=n, input=idx)
        S = vertex_series(JING, F, window)
        Sbar = vertex_series(DUAL_JING, F, window)
        D = dual_jing_series(F, window)
        for n in range(window[0], window[1] + 1):
            sign = -1 if n % 2 else 1
            tally.expect(S.coeff(n) == jing_H(n, F), "H(z) component = H_n", n=n, input=idx)
            tally.expect(Sbar.coeff(n) == jing_Hbar(n, F), "Hbar(z) component = Hbar_n", n=n, input=idx)
            tally.expect(D.coeff(n) == jing_Hbar(n, F).scale(sign), "H*(z) = Hbar(-z)", n=n, input=idx)
            tally.expect(D.coeff(n) == Sbar.negate_z().coeff(n), "H*(z) = Hbar(-z) as series", n=n, input=idx)
    for lam in partitions_up_to(max(6, max_weight)):
        K = positive_weight(lam)
        for kernel in (hl_kernel, alt_kernel):
            tally.expect(raising_expand(lam, kernel, K) == raising_expand(lam, kernel, K + 1),
                         "raising cap K and K+1 agree", lam=lam, kernel=kernel.__name__)


def conjugation(tally: Tally, max_weight: int, rng) -> None:
    """omega H_n omega = Hbar_n, and the alpha/alpha, beta/beta families against their generating function."""
    for _ in range(4):
        F = _random_symfunc(rng, max_weight)
        for n in range(-2, 4):
            tally.expect(omega(jing_H(n, omega(F))) == jing_Hbar(n, F), "omega H_n omega = Hbar_n", n=n)
    for lam in partitions_up_to(min(max_weight, 4)):
        lam = tuple(lam)
        R = raising_expand(lam, alt_kernel)
        bb = linear_combination((c, b_product(mu)) for mu, c in R.items())
        aa = linear_combination((c, q_product(mu)) for mu, c in R.items())
        tally.expect(iterate(BETA_BETA, lam) == bb, "beta/beta iterate = raising form", lam=lam)
        tally.expect(iterate(ALPHA_ALPHA, lam) == aa, "alpha/alpha iterate = raising form", lam=lam)


SUITES = {
    "two-variable": (two_variable_example, 2),
    "duality": (duality, 5),
    "orthogonality": (orthogonality, 7),
    "creation": (creation, 6),
    "specialize-t0": (specialize_t0, 7),
    "specialize-t-1": (specialize_t_minus_one, 7),
    "bernstein": (bernstein_rows, 6),
    "monomials": (monomials, 8),
    "adjoint-table": (adjoint_table, 7),
    "skew": (skew, 4),
    "stability": (stability, 3),
    "hall": (hall, 5),
    "routes": (routes, 4),
    "conjugation": (conjugation, 5),
}


def run_suite(name: str, max_weight: int | None = None, seed: int = 0, fail_fast: bool = True) -> dict:
    """Run one named suite; KeyError for an unknown name."""
    fn, default = SUITES[name]
    w = default if max_weight is None else max_weight
    tally = Tally(fail_fast)
    try:
        fn(tally, w, random.Random(seed))
    except _Stop:
        pass
    return {
        "suite": name,
        "max_weight": w,
        "seed": seed,
        "checks": tally.checks,
        "passed": tally.passed,
        "failures": tally.failures,
    }
