"""Named families of symmetric functions, all returned as power-sum SymFuncs.

Hall-Littlewood functions come in two independent constructions: iterated
vertex operators (the default) and the raising-operator expansion of a
q-product, which serves as the oracle route.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from .exact import ONE, T, TRational, one_minus_t_power
from .partitions import (
    c_poly,
    canonical,
    enumerate_partitions,
    multiplicities,
    positive_weight,
    sort_partition,
)
from .symfunc import SymFunc, adjoint_apply, linear_combination, omega


def _exp_coefficient(n: int, a: Callable[[int], TRational]) -> SymFunc:
    """Coefficient of z^n in exp(sum_k a(k) p_k z^k)."""
    if n < 0:
        return SymFunc.zero()
    if n == 0:
        return SymFunc.one()
    terms = {}
    for rho in enumerate_partitions(n):
        c = ONE
        for part, m in multiplicities(rho):
            c = c * a(part) ** m * Fraction(1, factorial(m))
        terms[rho] = c
    return SymFunc(terms)


@lru_cache(maxsize=None)
def gen_h(n: int) -> SymFunc:
    """Complete homogeneous h_n."""
    return _exp_coefficient(n, lambda k: TRational.const(Fraction(1, k)))


@lru_cache(maxsize=None)
def gen_e(n: int) -> SymFunc:
    """Elementary e_n."""
    return _exp_coefficient(n, lambda k: TRational.const(Fraction((-1) ** (k - 1), k)))


@lru_cache(maxsize=None)
def gen_q(n: int) -> SymFunc:
    """q_n(X;t): coefficient of z^n in prod (1 - t x z)/(1 - x z)."""
    return _exp_coefficient(n, lambda k: TRational(one_minus_t_power(k)) * Fraction(1, k))


@lru_cache(maxsize=None)
def gen_b(n: int) -> SymFunc:
    """b_n(X;t): coefficient of z^n in prod (1 + x z)/(1 + t x z)."""
    return _exp_coefficient(n, lambda k: TRational(one_minus_t_power(k)) * Fraction((-1) ** (k - 1), k))


@lru_cache(maxsize=None)
def gen_qprime(n: int) -> SymFunc:
    """q'_n, the z^n coefficient of sigma_z * lambda_z."""
    if n < 0:
        return SymFunc.zero()
    return linear_combination((1, gen_h(i) * gen_e(n - i)) for i in range(n + 1))


def h_product(lam: Sequence[int]) -> SymFunc:
    return _product(gen_h, tuple(lam))


def e_product(lam: Sequence[int]) -> SymFunc:
    return _product(gen_e, tuple(lam))


@lru_cache(maxsize=None)
def q_product(lam: tuple) -> SymFunc:
    """q_lam = q_lam1 q_lam2 ... for a partition lam."""
    if not lam:
        return SymFunc.one()
    return q_product(lam[:-1]) * gen_q(lam[-1])


@lru_cache(maxsize=None)
def b_product(lam: tuple) -> SymFunc:
    if not lam:
        return SymFunc.one()
    return b_product(lam[:-1]) * gen_b(lam[-1])


def _product(gen, lam: tuple) -> SymFunc:
    out = SymFunc.one()
    for part in lam:
        out = out * gen(part)
    return out


# ---------------------------------------------------------------------------
# determinants and Pfaffians over the ring of symmetric functions
# ---------------------------------------------------------------------------

def det(M: Sequence[Sequence[SymFunc]]) -> SymFunc:
    """Determinant by row expansion, memoized on the set of unused columns."""
    n = len(M)
    if n == 0:
        return SymFunc.one()
    memo: dict[int, SymFunc] = {}

    def minor(row: int, avail: int) -> SymFunc:
        if row == n:
            return SymFunc.one()
        hit = memo.get(avail)
        if hit is not None:
            return hit
        pairs = []
        pos = 0
        for j in range(n):
            if avail >> j & 1:
                entry = M[row][j]
                if entry:
                    sub = minor(row + 1, avail & ~(1 << j))
                    if sub:
                        pairs.append((-1 if pos % 2 else 1, entry * sub))
                pos += 1
        out = linear_combination(pairs)
        memo[avail] = out
        return out

    return minor(0, (1 << n) - 1)


def pfaffian(M: Sequence[Sequence[SymFunc]]) -> SymFunc:
    """Pfaffian of a skew-symmetric matrix by expansion along the first row."""
    n = len(M)
    if n % 2:
        return SymFunc.zero()
    memo: dict[tuple, SymFunc] = {}

    def pf(idx: tuple) -> SymFunc:
        if not idx:
            return SymFunc.one()
        hit = memo.get(idx)
        if hit is not None:
            return hit
        first = idx[0]
        pairs = []
        for k in range(1, len(idx)):
            entry = M[first][idx[k]]
            if entry:
                rest = idx[1:k] + idx[k + 1:]
                pairs.append((1 if k % 2 else -1, entry * pf(rest)))
        out = linear_combination(pairs)
        memo[idx] = out
        return out

    return pf(tuple(range(n)))


def schur(lam: Sequence[int]) -> SymFunc:
    """Jacobi-Trudi determinant det(h_{lam_i - i + j}); lam may be any composition."""
    lam = tuple(lam)
    n = len(lam)
    M = [[gen_h(lam[i] - i + j) for j in range(n)] for i in range(n)]
    return det(M)


def schurQ_matrix(lam: Sequence[int]) -> list[list[SymFunc]]:
    lam = tuple(lam)
    if len(lam) % 2:
        lam = lam + (0,)
    n = len(lam)

    def entry(a: int, b: int) -> SymFunc:
        pairs = [(1, gen_qprime(a) * gen_qprime(b))]
        pairs += [(2 * (-1) ** k, gen_qprime(a + k) * gen_qprime(b - k)) for k in range(1, b + 1)]
        return linear_combination(pairs)

    M = [[SymFunc.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = entry(lam[i], lam[j])
            M[j][i] = -M[i][j]
    return M


def schurQ(lam: Sequence[int]) -> SymFunc:
    """Schur's Q-function as the Pfaffian of M(lam); odd lengths are padded with 0."""
    return pfaffian(schurQ_matrix(lam))


# ---------------------------------------------------------------------------
# raising-operator expansions
# ---------------------------------------------------------------------------

def hl_kernel(k: int) -> TRational:
    """Coefficient of R^k in (1 - R)/(1 - tR)."""
    return ONE if k == 0 else T ** k - T ** (k - 1)


def alt_kernel(k: int) -> TRational:
    """Coefficient of R^k in (1 + tR)/(1 + R), the pair factor of the alpha/alpha and beta/beta families."""
    return ONE if k == 0 else (ONE - T) * (-1) ** k


def raising_expand(comp: Sequence[int], kernel: Callable[[int], TRational] = hl_kernel,
                   cap: int | None = None) -> dict[tuple, TRational]:
    """Expand prod_{i<j} F(R_ij) applied to an index composition.

    Returns partition -> coefficient for the resulting products u_mu, with
    every term carrying a negative index dropped.  Pairs are processed by
    decreasing j: once all pairs (i, j) are applied, part j is final and only
    ever decreased inside its group, so negative states are pruned on sight.
    ``cap`` bounds the power of each R_ij (default: the positive weight).
    """
    comp = tuple(comp)
    if cap is None:
        cap = positive_weight(comp)
    ker = {k: kernel(k) for k in range(cap + 1)}
    states = {comp: ONE}
    L = len(comp)
    for j in range(L - 1, 0, -1):
        for i in range(j):
            nxt: dict = {}
            for st, c in states.items():
                vj = st[j]
                for k in range(0, min(vj, cap) + 1):
                    if k == 0:
                        key, v = st, c
                    else:
                        s = list(st)
                        s[i] += k
                        s[j] -= k
                        key, v = tuple(s), c * ker[k]
                    prev = nxt.get(key)
                    nxt[key] = v if prev is None else prev + v
            states = {s: c for s, c in nxt.items() if c}
    out: dict = {}
    for st, c in states.items():
        if any(x < 0 for x in st):
            continue
        key = sort_partition(st)
        out[key] = out[key] + c if key in out else c
    return {k: c for k, c in out.items() if c}


def hl_Q_raising(lam: Sequence[int], cap: int | None = None) -> SymFunc:
    """Q_lam from the raising-operator formula applied to q_lam."""
    expansion = raising_expand(lam, hl_kernel, cap)
    return linear_combination((c, q_product(mu)) for mu, c in expansion.items())


def hl_B_raising(lam: Sequence[int], cap: int | None = None) -> SymFunc:
    """B_lam from the raising-operator formula applied to b_lam."""
    expansion = raising_expand(lam, hl_kernel, cap)
    return linear_combination((c, b_product(mu)) for mu, c in expansion.items())


# ---------------------------------------------------------------------------
# Hall-Littlewood Q and its omega image B
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _hl_Q(lam: tuple) -> SymFunc:
    from .vertex import jing_H

    if not lam:
        return SymFunc.one()
    return jing_H(lam[0], _hl_Q(lam[1:]))


@lru_cache(maxsize=None)
def _hl_B_vertex(lam: tuple) -> SymFunc:
    from .vertex import jing_Hbar

    if not lam:
        return SymFunc.one()
    return jing_Hbar(lam[0], _hl_B_vertex(lam[1:]))


def hl_Q(lam: Sequence[int]) -> SymFunc:
    """Hall-Littlewood Q_lam, built as H_{lam_1} ... H_{lam_n}(1)."""
    return _hl_Q(canonical(lam))


def hl_B(lam: Sequence[int]) -> SymFunc:
    """B_lam = omega(Q_lam)."""
    return omega(hl_Q(lam))


def hl_B_vertex(lam: Sequence[int]) -> SymFunc:
    """B_lam built by the dual operators Hbar_{lam_1} ... Hbar_{lam_n}(1)."""
    return _hl_B_vertex(canonical(lam))


def skew_Q(lam: Sequence[int], mu: Sequence[int]) -> SymFunc:
    """Q_{lam/mu} = Q_mu^perp Q_lam / c_mu(t)."""
    return adjoint_apply(hl_Q(mu), hl_Q(lam)) / TRational(c_poly(mu))


def skew_B(lam: Sequence[int], mu: Sequence[int]) -> SymFunc:
    return omega(skew_Q(lam, mu))


def in_q_basis(F: SymFunc) -> dict[tuple, TRational]:
    """Coefficients of F in the q-product basis, read off as <F, m_mu>."""
    from .symfunc import inner, m_in_p

    out = {}
    for n in sorted({sum(k) for k, _ in F.items()}):
        Fn = F.homogeneous_component(n)
        for mu in enumerate_partitions(n):
            c = inner(Fn, m_in_p(mu))
            if c:
                out[mu] = c
    return out


__all__ = [
    "gen_h", "gen_e", "gen_q", "gen_b", "gen_qprime", "q_product", "b_product",
    "h_product", "e_product", "det", "pfaffian", "schur", "schurQ", "schurQ_matrix",
    "hl_kernel", "alt_kernel", "raising_expand", "hl_Q", "hl_Q_raising", "hl_B",
    "hl_B_raising", "hl_B_vertex", "skew_Q", "skew_B", "in_q_basis",
]
