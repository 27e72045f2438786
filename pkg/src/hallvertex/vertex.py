"""Bernstein-type creation operators and their t-deformations.

Every operator here has the shape ``sum_i (-1)^i u_{n+i} v_i^perp``: the
classical Bernstein operator (u = h, v = e), its column form (u = e, v = h),
Jing's operator H_n (u = q, v = b), the dual Hbar_n (u = b, v = q), and the
two further alpha/beta combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .bases import gen_b, gen_e, gen_h, gen_q
from .symfunc import (
    AlphabetExpr,
    LaurentZ,
    SymFunc,
    WindowError,
    adjoint_apply,
    hall_adjoint_apply,
    linear_combination,
    plethysm_alphabet,
)


def _creation_sum(n: int, F: SymFunc, mult: Callable[[int], SymFunc], adj: Callable[[int], SymFunc],
                  apply=adjoint_apply) -> SymFunc:
    # v_i^perp F vanishes once i exceeds deg F; u_{n+i} vanishes for n + i < 0
    pairs = []
    for i in range(max(0, -n), F.degree() + 1):
        G = apply(adj(i), F)
        if G:
            pairs.append((-1 if i % 2 else 1, mult(n + i) * G))
    return linear_combination(pairs)


def jing_H(n: int, F: SymFunc) -> SymFunc:
    """H_n F = sum_i (-1)^i q_{n+i} b_i^perp F."""
    return _creation_sum(n, F, gen_q, gen_b)


def jing_Hbar(n: int, F: SymFunc) -> SymFunc:
    """Hbar_n F = sum_i (-1)^i b_{n+i} q_i^perp F."""
    return _creation_sum(n, F, gen_b, gen_q)


def bernstein(n: int, F: SymFunc) -> SymFunc:
    """Classical Bernstein operator sum_i (-1)^i h_{n+i} e_i^perp (Hall adjoint)."""
    return _creation_sum(n, F, gen_h, gen_e, hall_adjoint_apply)


def bernstein_col(n: int, F: SymFunc) -> SymFunc:
    """Column-appending form sum_i (-1)^i e_{n+i} h_i^perp (Hall adjoint)."""
    return _creation_sum(n, F, gen_e, gen_h, hall_adjoint_apply)


class Kind(Enum):
    ALPHA = "alpha"
    BETA = "beta"


_GEN = {Kind.ALPHA: gen_q, Kind.BETA: gen_b}


@dataclass(frozen=True)
class VertexSpec:
    """Which generating series multiplies (u) and which one is adjointed (v)."""

    mult_kind: Kind
    adj_kind: Kind

    @property
    def name(self) -> str:
        return f"{self.mult_kind.value}/{self.adj_kind.value}"


JING = VertexSpec(Kind.ALPHA, Kind.BETA)
DUAL_JING = VertexSpec(Kind.BETA, Kind.ALPHA)
BETA_BETA = VertexSpec(Kind.BETA, Kind.BETA)
ALPHA_ALPHA = VertexSpec(Kind.ALPHA, Kind.ALPHA)


def generic_vertex(spec: VertexSpec, n: int, F: SymFunc) -> SymFunc:
    """The z^n component of (u-series at z) (v-series at -1/z)^perp applied to F."""
    return _creation_sum(n, F, _GEN[spec.mult_kind], _GEN[spec.adj_kind])


def iterate(spec: VertexSpec, lam: Sequence[int]) -> SymFunc:
    """Apply the components lam_1, ..., lam_n right to left, starting from 1."""
    F = SymFunc.one()
    for part in reversed(tuple(lam)):
        F = generic_vertex(spec, part, F)
    return F


# ---------------------------------------------------------------------------
# generating-series route
# ---------------------------------------------------------------------------

# v_{-1/z}^perp F as a plethystic substitution:
#   beta_{-1/z}^perp F = F[X - 1/z]        (p_n -> p_n - z^-n)
#   alpha_{-1/z}^perp F = F[X + (-1/z)]    (p_n -> p_n + (-1)^n z^-n)
_ADJ_ALPHABET = {
    Kind.BETA: AlphabetExpr(True, ((-1, -1, 1),)),
    Kind.ALPHA: AlphabetExpr(True, ((1, -1, -1),)),
}


def _series_apply(mult: Callable[[int], SymFunc], shifted: LaurentZ, lo: int, hi: int) -> LaurentZ:
    out = {}
    for n in range(lo, hi + 1):
        pairs = []
        for e, A in shifted.items():
            k = n - e
            if k >= 0:
                pairs.append((1, mult(k) * A))
        out[n] = linear_combination(pairs)
    return LaurentZ(out, (lo, hi))


def vertex_series(spec: VertexSpec, F: SymFunc, window: tuple[int, int]) -> LaurentZ:
    """Laurent expansion of (u_z v_{-1/z}^perp) F over an inclusive window of z-exponents.

    The adjoint factor is evaluated as a plethystic shift of the alphabet and
    the multiplier as its generating series; neither touches an adjoint of a
    named function, so this route is independent of :func:`generic_vertex`.
    """
    lo, hi = window
    if lo > hi:
        raise WindowError(f"empty window {window}")
    shifted = plethysm_alphabet(F, _ADJ_ALPHABET[spec.adj_kind])
    return _series_apply(_GEN[spec.mult_kind], shifted, lo, hi)


def vertex_component(spec: VertexSpec, n: int, F: SymFunc, window: tuple[int, int]) -> SymFunc:
    """Extract z^n from :func:`vertex_series`; raises WindowError when n is outside ``window``."""
    return vertex_series(spec, F, window).coeff(n)


def dual_jing_series(F: SymFunc, window: tuple[int, int]) -> LaurentZ:
    """H*(z) F in exponential form: exp(-sum (1-t^n)/n p_n z^n) applied after p_n -> p_n + z^-n.

    The multiplier is beta_{-z}, whose z^k coefficient is (-1)^k b_k, and the
    adjoint factor is the alphabet shift X + 1/z.
    """
    lo, hi = window
    shifted = plethysm_alphabet(F, AlphabetExpr(True, ((1, -1, 1),)))
    return _series_apply(lambda k: gen_b(k) * (-1) ** k, shifted, lo, hi)
