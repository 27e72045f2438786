"""Structure constants of the Hall-Littlewood Q basis, Hall polynomials and stability scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .bases import hl_B_vertex, hl_Q, skew_Q
from .exact import ZERO, ZERO_POLY, TPoly, TRational, hall_twist
from .partitions import as_partition, c_poly, enumerate_partitions, epsilon, prepend
from .symfunc import inner


class IntegrityError(ArithmeticError):
    """An exact result that must be polynomial (or integral) was not."""


@lru_cache(maxsize=None)
def _product_expand(mu: tuple, nu: tuple) -> tuple:
    prod = hl_Q(mu) * hl_Q(nu)
    out = []
    for lam in enumerate_partitions(sum(mu) + sum(nu)):
        a = inner(prod, hl_Q(lam)) / TRational(c_poly(lam))
        if not a:
            continue
        if not a.is_polynomial():
            raise IntegrityError(f"coefficient of Q{lam} in Q{mu}Q{nu} is {a}")
        out.append((lam, a))
    return tuple(out)


def product_expand_Q(mu: Sequence[int], nu: Sequence[int]) -> dict[tuple, TRational]:
    """Q_mu Q_nu = sum a_lam Q_lam, with a_lam = <Q_mu Q_nu, Q_lam> / c_lam."""
    return dict(_product_expand(as_partition(mu), as_partition(nu)))


_skew = lru_cache(maxsize=4096)(skew_Q)


def f_inner(lam, mu, nu) -> TRational:
    """Unnormalized <Q_{lam/mu}, Q_nu>."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return ZERO
    return inner(_skew(lam, mu), hl_Q(nu))


def f_coeff(lam, mu, nu) -> TRational:
    """Coefficient of Q_nu in the expansion of Q_{lam/mu}."""
    return f_inner(lam, mu, nu) / TRational(c_poly(nu))


def hall_g(lam, mu, nu) -> TPoly:
    """Hall polynomial g^lam_{mu nu}(t), via the t -> 1/t twist of f."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return ZERO_POLY
    g = hall_twist(f_coeff(lam, mu, nu), epsilon(lam) - epsilon(mu) - epsilon(nu))
    if not g.is_polynomial() or not g.num.has_integer_coeffs():
        raise IntegrityError(f"g^{lam}_{mu},{nu} = {g} is not an integer polynomial")
    return g.num


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------

@dataclass
class StabilityReport:
    lam: tuple
    mu: tuple
    nu: tuple
    offset: int
    theorem_bound: int
    samples: list = field(default_factory=list)
    onset: int | None = None
    stable_value: object = None

    @property
    def within_bound(self) -> bool:
        return self.onset is not None and self.onset <= self.theorem_bound + 1

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "nu": list(self.nu),
            "offset": self.offset,
            "samples": [{"m": m, "value": v.to_json()} for m, v in self.samples],
            "onset": self.onset,
            "stable": None if self.stable_value is None else self.stable_value.to_json(),
            "bound": self.theorem_bound,
        }


STABLE_RUN = 3


def find_onset(samples: list, run: int = STABLE_RUN):
    """Least sampled m after which every sample agrees, provided ``run`` samples follow it.

    Returns (onset, value) or (None, None).
    """
    if not samples:
        return None, None
    last = samples[-1][1]
    k = len(samples) - 1
    while k > 0 and samples[k - 1][1] == last:
        k -= 1
    if len(samples) - 1 - k < run:
        return None, None
    return samples[k][0], last


def _bound(lam, mu, nu) -> tuple[int, int]:
    offset = sum(lam) - sum(mu) - sum(nu)
    mu1 = mu[0] if mu else 0
    nu1 = nu[0] if nu else 0
    return offset, mu1 + nu1 + offset


def clamped_bound(lam, mu, nu) -> int:
    """mu_1 + nu_1 + max(offset, 0).

    Agrees with the theorem bound when the offset is nonnegative.  For a
    negative offset the theorem bound is too small (e.g. lam = mu = (),
    nu = (1) stabilizes at m = 2, not 1); onsets observed over all
    |lam|, |mu|, |nu| <= 3 stay within this clamped value plus one.
    """
    offset, _ = _bound(lam, mu, nu)
    return (mu[0] if mu else 0) + (nu[0] if nu else 0) + max(offset, 0)


def stability_value(lam, mu, nu, m: int, side: str = "Q") -> TRational:
    """a_m = <Q_{(m,lam)}, Q_mu Q_{(n,nu)}> with n = m + |lam| - |mu| - |nu|; side "B" uses B throughout."""
    n = m + sum(lam) - sum(mu) - sum(nu)
    build = hl_Q if side == "Q" else hl_B_vertex
    return inner(build(prepend(m, lam)), build(mu) * build(prepend(n, nu)))


def _assemble(report: StabilityReport, ms, values) -> StabilityReport:
    report.samples = list(zip(ms, values))
    report.onset, report.stable_value = find_onset(report.samples)
    return report


def _map(fn, args, jobs: int):
    if jobs <= 1:
        return [fn(*a) for a in args]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star, [(fn, a) for a in args]))


def _star(packed):
    fn, a = packed
    return fn(*a)


def stability_scan(lam, mu, nu, m_max: int | None = None, *, side: str = "Q", jobs: int = 1) -> StabilityReport:
    """Sample a_m from m = -|lam| - 1 (below which every term vanishes) up to m_max."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    offset, bound = _bound(lam, mu, nu)
    if m_max is None:
        m_max = bound + 4
    if m_max < bound + 3:
        raise ValueError(f"m_max={m_max} must be at least bound + 3 = {bound + 3}")
    ms = list(range(-sum(lam) - 1, m_max + 1))
    values = _map(stability_value, [(lam, mu, nu, m, side) for m in ms], jobs)
    return _assemble(StabilityReport(lam, mu, nu, offset, bound), ms, values)


def hall_stability_value(lam, mu, nu, m: int) -> TRational:
    n = m + sum(lam) - sum(mu) - sum(nu)
    return TRational(hall_g(prepend(m, lam), mu, prepend(n, nu)))


def hall_stability_scan(lam, mu, nu, m_max: int | None = None, *, jobs: int = 1) -> StabilityReport:
    """Sample g^{(m,lam)}_{mu,(n,nu)} over m where both (m,lam) and (n,nu) are partitions."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    offset, bound = _bound(lam, mu, nu)
    lam1 = lam[0] if lam else 0
    nu1 = nu[0] if nu else 0
    m0 = max(lam1, nu1 - offset, 0)
    if m_max is None:
        m_max = max(clamped_bound(lam, mu, nu) + 1, m0) + STABLE_RUN
    ms = list(range(m0, m_max + 1))
    values = _map(hall_stability_value, [(lam, mu, nu, m) for m in ms], jobs)
    return _assemble(StabilityReport(lam, mu, nu, offset, bound), ms, values)
