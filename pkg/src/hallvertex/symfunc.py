"""The ring of symmetric functions over Q(t), in the power-sum basis.

A :class:`SymFunc` maps power-sum indices (partitions) to :class:`TRational`
coefficients.  Multiplication concatenates indices, the involution omega and
the t-deformed inner product are diagonal, and adjoints of multiplication are
differential operators in the power sums.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exact import (
    ONE,
    ONE_POLY,
    ZERO,
    TPoly,
    TRational,
    as_trational,
    eval_at,
    one_minus_t_power,
)
from .partitions import enumerate_partitions, multiplicities, sort_partition, z_lambda

_MERGE: dict = {}


def _merge(a: tuple, b: tuple) -> tuple:
    key = (a, b)
    r = _MERGE.get(key)
    if r is None:
        r = tuple(sorted(a + b, reverse=True))
        _MERGE[key] = r
    return r


class SymFunc:
    """Finitely supported map from power-sum indices to Q(t); immutable."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        t = {}
        if terms:
            for idx, c in terms.items():
                c = as_trational(c)
                if not c:
                    continue
                if any(p < 0 for p in idx):
                    raise ValueError(f"invalid power-sum index {idx}")
                key = sort_partition(idx)
                prev = t.get(key)
                c = c if prev is None else prev + c
                if c:
                    t[key] = c
                else:
                    t.pop(key, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "SymFunc":
        f = object.__new__(cls)
        f._t = t
        f._hash = None
        return f

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw({(): ONE})

    @classmethod
    def scalar(cls, c) -> "SymFunc":
        c = as_trational(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def p(cls, *parts: int) -> "SymFunc":
        """The power-sum product p_{parts}."""
        return cls._raw({sort_partition(parts): ONE})

    # -- inspection -------------------------------------------------------

    def items(self):
        return self._t.items()

    def coeff(self, idx: Sequence[int]) -> TRational:
        return self._t.get(sort_partition(idx), ZERO)

    def support(self) -> list[tuple]:
        return sorted(self._t, key=lambda k: (sum(k), tuple(-x for x in k)))

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def degree(self) -> int:
        """Largest weight present; -1 for the zero function."""
        return max((sum(k) for k in self._t), default=-1)

    def low_degree(self) -> int:
        return min((sum(k) for k in self._t), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self._t}) <= 1

    def homogeneous_component(self, n: int) -> "SymFunc":
        return SymFunc._raw({k: c for k, c in self._t.items() if sum(k) == n})

    def truncate(self, d: int) -> "SymFunc":
        """Drop every term of weight greater than ``d``."""
        return SymFunc._raw({k: c for k, c in self._t.items() if sum(k) <= d})

    def map_coeffs(self, f) -> "SymFunc":
        out = {}
        for k, c in self._t.items():
            c = as_trational(f(c))
            if c:
                out[k] = c
        return SymFunc._raw(out)

    def eval_t(self, t0) -> "SymFunc":
        """Specialize the parameter t to the exact rational ``t0``."""
        return self.map_coeffs(lambda c: TRational.const(eval_at(c, t0)))

    def is_t_free(self) -> bool:
        return all(c.is_constant() for c in self._t.values())

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return SymFunc._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        a, b = (self._t, other._t) if len(self._t) >= len(other._t) else (other._t, self._t)
        out = dict(a)
        for k, c in b.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                s = prev + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return SymFunc._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SymFunc":
        c = as_trational(c)
        if not c:
            return SymFunc.zero()
        if c == ONE:
            return self
        return SymFunc._raw({k: v * c for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TPoly, TRational)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self._t or not other._t:
            return SymFunc.zero()
        out: dict = {}
        get = out.get
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = _merge(k1, k2)
                v = c1 * c2
                prev = get(k)
                out[k] = v if prev is None else prev + v
        return SymFunc._raw({k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, TPoly, TRational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, TPoly, TRational)):
            return self.scale(1 / as_trational(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a symmetric function")
        out = SymFunc.one()
        for _ in range(k):
            out = out * self
        return out

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"SymFunc({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for k in self.support():
            c = self._t[k]
            idx = "p[" + ",".join(map(str, k)) + "]" if k else ""
            if not k:
                parts.append(str(c) if len(self._t) == 1 else f"({c})")
            elif c == ONE:
                parts.append(idx)
            else:
                parts.append(f"({c})*{idx}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "basis": "p",
            "degree": max(self.degree(), 0),
            "terms": [{"index": list(k), "coeff": self._t[k].to_json()} for k in self.support()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        if data.get("basis", "p") != "p":
            raise ValueError("only the power-sum basis is serialized")
        return cls({tuple(term["index"]): TRational.from_json(term["coeff"]) for term in data["terms"]})


def _coerce(x):
    if isinstance(x, SymFunc):
        return x
    if isinstance(x, (int, Fraction, TPoly, TRational)):
        return SymFunc.scalar(x)
    return NotImplemented


def p(*parts: int) -> SymFunc:
    return SymFunc.p(*parts)


def linear_combination(pairs: Iterable[tuple[object, SymFunc]]) -> SymFunc:
    """Sum of c * F over (c, F) pairs, accumulated in one dictionary."""
    out: dict = {}
    for c, f in pairs:
        c = as_trational(c)
        if not c:
            continue
        for k, v in f._t.items():
            w = v * c
            prev = out.get(k)
            out[k] = w if prev is None else prev + w
    return SymFunc._raw({k: c for k, c in out.items() if c})


# ---------------------------------------------------------------------------
# omega, inner products, adjoints
# ---------------------------------------------------------------------------

def omega(F: SymFunc) -> SymFunc:
    """The involution p_n -> (-1)^(n-1) p_n."""
    return SymFunc._raw({k: (-c if (sum(k) - len(k)) % 2 else c) for k, c in F._t.items()})


def negate_alphabet(F: SymFunc) -> SymFunc:
    """F[-X]: the substitution p_n -> -p_n."""
    return SymFunc._raw({k: (-c if len(k) % 2 else c) for k, c in F._t.items()})


@lru_cache(maxsize=None)
def _p_norm(rho: tuple) -> TPoly:
    """prod_i (1 - t^rho_i)."""
    out = ONE_POLY
    for r in rho:
        out = out * one_minus_t_power(r)
    return out


@lru_cache(maxsize=None)
def _qpoch(n: int) -> TPoly:
    """(t;t)_n = prod_{k<=n} (1 - t^k); a common multiple of every _p_norm(rho), rho |- n."""
    out = ONE_POLY
    for k in range(1, n + 1):
        out = out * one_minus_t_power(k)
    return out


@lru_cache(maxsize=None)
def _cofactor(rho: tuple) -> TPoly:
    """z_rho * (t;t)_|rho| / prod(1 - t^rho_i), an exact polynomial."""
    q, r = _qpoch(sum(rho)).divmod(_p_norm(rho))
    assert r.is_zero()
    return q.scale(z_lambda(rho))


def inner(F: SymFunc, G: SymFunc) -> TRational:
    """The t-deformed inner product <p_l, p_m> = delta z_l / prod(1 - t^l_i)."""
    if len(F._t) > len(G._t):
        F, G = G, F
    gt = G._t
    by_weight: dict[int, TPoly] = {}
    total = ZERO
    for k, c in F._t.items():
        d = gt.get(k)
        if d is None:
            continue
        v = c * d
        if v.is_polynomial():
            n = sum(k)
            w = v.num * _cofactor(k)
            prev = by_weight.get(n)
            by_weight[n] = w if prev is None else prev + w
        else:
            total = total + v * TRational(z_lambda(k), _p_norm(k))
    for n, num in by_weight.items():
        total = total + TRational(num, _qpoch(n))
    return total


def hall_inner(F: SymFunc, G: SymFunc) -> TRational:
    """The classical Hall inner product <p_l, p_m> = delta z_l (the t = 0 case)."""
    if len(F._t) > len(G._t):
        F, G = G, F
    gt = G._t
    total = ZERO
    for k, c in F._t.items():
        d = gt.get(k)
        if d is not None:
            total = total + c * d * z_lambda(k)
    return total


@lru_cache(maxsize=None)
def _remove(sigma: tuple, rho: tuple):
    """(sigma minus rho as multisets, falling-factorial multiplicity factor) or None."""
    ms = Counter(sigma)
    factor = 1
    for part, k in multiplicities(rho):
        have = ms.get(part, 0)
        if have < k:
            return None
        factor *= factorial(have) // factorial(have - k)
        ms[part] = have - k
    rest = tuple(sorted(ms.elements(), reverse=True))
    return rest, factor


def _adjoint_kernel(F: SymFunc, classical: bool) -> dict:
    out = {}
    for rho, c in F._t.items():
        scale = 1
        for r in rho:
            scale *= r
        if classical:
            w = c * scale
        else:
            w = c * TRational(scale, _p_norm(rho)) if rho else c
        out[rho] = w
    return out


_KERNELS: dict = {}


def _kernel(F: SymFunc, classical: bool) -> dict:
    key = (F, classical)
    k = _KERNELS.get(key)
    if k is None:
        k = _adjoint_kernel(F, classical)
        if len(_KERNELS) < 4096:
            _KERNELS[key] = k
    return k


def _apply_adjoint(F: SymFunc, G: SymFunc, classical: bool) -> SymFunc:
    if not F._t or not G._t:
        return SymFunc.zero()
    kern = _kernel(F, classical)
    out: dict = {}
    for rho, w in kern.items():
        for sigma, g in G._t.items():
            r = _remove(sigma, rho)
            if r is None:
                continue
            rest, factor = r
            v = w * g
            if factor != 1:
                v = v * factor
            prev = out.get(rest)
            out[rest] = v if prev is None else prev + v
    return SymFunc._raw({k: c for k, c in out.items() if c})


def adjoint_apply(F: SymFunc, G: SymFunc) -> SymFunc:
    """F^perp G for the t-deformed inner product.

    Each p_n in F acts as the derivation n/(1-t^n) d/dp_n.
    """
    return _apply_adjoint(F, G, classical=False)


def hall_adjoint_apply(F: SymFunc, G: SymFunc) -> SymFunc:
    """F^perp G for the classical Hall inner product (p_n acts as n d/dp_n)."""
    return _apply_adjoint(F, G, classical=True)


# ---------------------------------------------------------------------------
# Laurent series in z with symmetric-function coefficients
# ---------------------------------------------------------------------------

class WindowError(LookupError):
    """A requested z-exponent lies outside the computed window."""


class LaurentZ:
    """Finitely supported map from z-exponents to SymFunc.

    ``window`` (inclusive bounds or None) records which exponents were
    actually computed; asking for a coefficient outside it is an error rather
    than a silent zero.
    """

    __slots__ = ("_c", "window")

    def __init__(self, coeffs: Mapping[int, SymFunc] | None = None, window: tuple[int, int] | None = None):
        self._c = {e: f for e, f in (coeffs or {}).items() if f}
        self.window = window

    def coeff(self, n: int) -> SymFunc:
        if self.window is not None and not self.window[0] <= n <= self.window[1]:
            raise WindowError(f"z^{n} outside computed window {self.window}")
        return self._c.get(n, SymFunc.zero())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def items(self):
        return sorted(self._c.items())

    def __add__(self, other: "LaurentZ") -> "LaurentZ":
        out = dict(self._c)
        for e, f in other._c.items():
            out[e] = out[e] + f if e in out else f
        return LaurentZ(out, _meet(self.window, other.window))

    def __neg__(self):
        return LaurentZ({e: -f for e, f in self._c.items()}, self.window)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentZ):
            out: dict = {}
            for e1, f1 in self._c.items():
                for e2, f2 in other._c.items():
                    v = f1 * f2
                    e = e1 + e2
                    out[e] = out[e] + v if e in out else v
            return LaurentZ(out)
        if isinstance(other, SymFunc) or isinstance(other, (int, Fraction, TPoly, TRational)):
            return LaurentZ({e: f * other for e, f in self._c.items()}, self.window)
        return NotImplemented

    __rmul__ = __mul__

    def restrict(self, lo: int, hi: int) -> "LaurentZ":
        return LaurentZ({e: f for e, f in self._c.items() if lo <= e <= hi}, (lo, hi))

    def negate_z(self) -> "LaurentZ":
        """Substitute z -> -z."""
        w = self.window
        return LaurentZ({e: (-f if e % 2 else f) for e, f in self._c.items()}, w)

    def map(self, fn) -> "LaurentZ":
        return LaurentZ({e: fn(f) for e, f in self._c.items()}, self.window)

    def __eq__(self, other):
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self._c == other._c

    def __repr__(self):
        body = ", ".join(f"z^{e}: {f}" for e, f in self.items())
        return f"LaurentZ({{{body}}})"

    def to_json(self) -> dict:
        return {"window": list(self.window) if self.window else None,
                "coeffs": [{"exp": e, "value": f.to_json()} for e, f in self.items()]}


def _meet(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return (max(a[0], b[0]), min(a[1], b[1]))


@dataclass(frozen=True)
class AlphabetExpr:
    """An alphabet X-part plus signed monomials in z.

    Each term ``(sign, a, scale)`` contributes ``sign * (scale * z^a)^n`` to the
    image of p_n: ``sign`` is a plethystic sign (adding or removing the letter)
    while ``scale`` multiplies the letter itself.  ``scale`` defaults to 1, so
    ``(-1, -1)`` encodes X - 1/z and ``(1, -1, -1)`` encodes X + (-1/z).
    """

    include_X: bool
    terms: tuple = ()

    def __post_init__(self):
        norm = []
        for term in self.terms:
            if len(term) == 2:
                term = (term[0], term[1], 1)
            sign, a, scale = term
            if sign not in (1, -1) or scale not in (1, -1):
                raise ValueError(f"bad alphabet term {term}")
            norm.append((sign, a, scale))
        object.__setattr__(self, "terms", tuple(norm))

    def letter_power_sum(self, n: int) -> dict[int, int]:
        """The z-part of the image of p_n, as exponent -> integer coefficient."""
        out: dict[int, int] = {}
        for sign, a, scale in self.terms:
            e = a * n
            out[e] = out.get(e, 0) + sign * scale ** n
        return {e: c for e, c in out.items() if c}


def _laurent_int_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def plethysm_alphabet(F: SymFunc, spec: AlphabetExpr) -> LaurentZ:
    """F evaluated on the alphabet ``spec``; t is never substituted."""
    out: dict[int, dict] = {}
    for rho, c in F._t.items():
        # product over parts of (p_k [if X] + w_k(z)), expanded by multiplicity
        partial: list[tuple[tuple, dict]] = [((), {0: 1})]
        for part, mult in multiplicities(rho):
            w = spec.letter_power_sum(part)
            options = []
            wpow = {0: 1}
            for j in range(mult + 1):
                if j:
                    wpow = _laurent_int_mul(wpow, w)
                if not spec.include_X and j < mult:
                    continue
                binom = factorial(mult) // (factorial(j) * factorial(mult - j))
                if wpow:
                    options.append(((part,) * (mult - j), {e: v * binom for e, v in wpow.items()}))
            partial = [(idx + extra, _laurent_int_mul(zpart, zz)) for idx, zpart in partial for extra, zz in options]
        for idx, zpart in partial:
            key = tuple(sorted(idx, reverse=True))
            for e, v in zpart.items():
                bucket = out.setdefault(e, {})
                term = c * v
                bucket[key] = bucket[key] + term if key in bucket else term
    return LaurentZ({e: SymFunc._raw({k: v for k, v in b.items() if v}) for e, b in out.items()})


# ---------------------------------------------------------------------------
# finite alphabets
# ---------------------------------------------------------------------------

class MultiPoly:
    """Polynomial in x_1..x_k with Q(t) coefficients, keyed by exponent vectors."""

    __slots__ = ("nvars", "_c")

    def __init__(self, nvars: int, coeffs: Mapping[Sequence[int], object] | None = None):
        self.nvars = nvars
        c = {}
        for e, v in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError("exponent vector has wrong length")
            v = as_trational(v)
            if v:
                c[e] = c[e] + v if e in c else v
        self._c = {e: v for e, v in c.items() if v}

    def items(self):
        return sorted(self._c.items(), reverse=True)

    def coeff(self, e: Sequence[int]) -> TRational:
        return self._c.get(tuple(e), ZERO)

    def __add__(self, other: "MultiPoly"):
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out[e] + v if e in out else v
        return MultiPoly(self.nvars, out)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._c == other._c

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e, v in self.items():
            mono = "*".join(f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a)
            coeff = f"({v})"
            out.append(coeff if not mono else (mono if v == ONE else f"{coeff}*{mono}"))
        return " + ".join(out)

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": v.to_json()} for e, v in self.items()]


@lru_cache(maxsize=None)
def _power_sum_vars(rho: tuple, k: int) -> tuple:
    """p_rho(x_1..x_k) as sorted (exponent vector, integer) pairs."""
    poly = {(0,) * k: 1}
    for r in rho:
        nxt: dict = {}
        for e, c in poly.items():
            for i in range(k):
                f = list(e)
                f[i] += r
                f = tuple(f)
                nxt[f] = nxt.get(f, 0) + c
        poly = nxt
    return tuple(sorted(poly.items()))


def specialize_vars(F: SymFunc, k: int) -> MultiPoly:
    """Substitute p_n -> x_1^n + ... + x_k^n and expand."""
    if k < 1:
        raise ValueError("need at least one variable")
    acc: dict = {}
    for rho, c in F._t.items():
        for e, m in _power_sum_vars(rho, k):
            v = c * m
            acc[e] = acc[e] + v if e in acc else v
    return MultiPoly(k, acc)


@lru_cache(maxsize=None)
def p_to_m(rho: tuple, lam: tuple) -> int:
    """Coefficient of x^lam (lam sorted) in p_rho: labeled ways to fill rows of lam with parts of rho."""
    if sum(rho) != sum(lam):
        return 0

    @lru_cache(maxsize=None)
    def count(i: int, caps: tuple) -> int:
        if i == len(rho):
            return 1 if not any(caps) else 0
        r = rho[i]
        total = 0
        for j, cap in enumerate(caps):
            if cap >= r:
                total += count(i + 1, caps[:j] + (cap - r,) + caps[j + 1:])
        return total

    return count(0, tuple(lam))


def monomial_expansion(F: SymFunc, n: int) -> dict[tuple, TRational]:
    """Coefficients of m_lam (lam |- n) in the degree-n part of F."""
    Fn = F.homogeneous_component(n)
    out = {}
    for lam in enumerate_partitions(n):
        total = ZERO
        for rho, c in Fn._t.items():
            m = p_to_m(rho, lam)
            if m:
                total = total + c * m
        if total:
            out[lam] = total
    return out


def solve_exact(A: list[list], B: list[list]) -> list[list]:
    """Solve A X = B over Q(t) by Gauss-Jordan elimination.

    Pivots are chosen as the nonzero entry of least total degree in the
    column.  Raises ArithmeticError when A is singular.
    """
    n = len(A)
    M = [[as_trational(x) for x in row] + [as_trational(x) for x in brow] for row, brow in zip(A, B)]
    width = len(M[0]) if M else 0
    for col in range(n):
        best = None
        for r in range(col, n):
            v = M[r][col]
            if v:
                size = v.num.degree() + v.den.degree()
                if best is None or size < best[0]:
                    best = (size, r)
        if best is None:
            raise ArithmeticError("singular system")
        r = best[1]
        M[col], M[r] = M[r], M[col]
        inv = M[col][col].inverse()
        M[col] = [x * inv if x else x for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y if y else x for x, y in zip(M[r], M[col])]
    return [row[n:width] for row in M]


@lru_cache(maxsize=None)
def _monomial_basis(n: int) -> dict:
    parts = enumerate_partitions(n)
    # unknown x_rho with sum_rho x_rho p_to_m(rho, kappa) = delta(kappa, lam)
    A = [[p_to_m(rho, kappa) for rho in parts] for kappa in parts]
    I = [[1 if i == j else 0 for j in range(len(parts))] for i in range(len(parts))]
    X = solve_exact(A, I)
    out = {}
    for j, lam in enumerate(parts):
        out[lam] = SymFunc({rho: X[i][j] for i, rho in enumerate(parts)})
    return out


def m_in_p(lam: Sequence[int]) -> SymFunc:
    """The monomial symmetric function m_lam in the power-sum basis."""
    lam = sort_partition(lam)
    return _monomial_basis(sum(lam))[lam]


def forgotten(lam: Sequence[int]) -> SymFunc:
    """The forgotten symmetric function f_lam = omega(m_lam)."""
    return omega(m_in_p(lam))
