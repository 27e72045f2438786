"""Exact arithmetic over Q, Q[t] and the rational function field Q(t).

Rational numbers are plain :class:`fractions.Fraction`.  Polynomials in ``t``
are stored sparsely as integer numerators over one shared positive
denominator, which keeps the inner loops on machine-friendly ``int`` objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational
from typing import Iterable, Mapping, Union

BigRational = Fraction

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _normalize(c: dict, d: int):
    """Drop zero coefficients and cancel the common content against ``d``."""
    c = {e: a for e, a in c.items() if a}
    if not c:
        return c, 1
    if d < 0:
        c = {e: -a for e, a in c.items()}
        d = -d
    if d != 1:
        g = gcd(d, *c.values())
        if g != 1:
            c = {e: a // g for e, a in c.items()}
            d //= g
    return c, d


class TPoly:
    """Immutable sparse polynomial in ``t`` with rational coefficients."""

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Iterable[Scalar], Scalar, None] = None):
        if coeffs is None:
            self._c, self._d = {}, 1
        elif isinstance(coeffs, (int, Fraction)):
            f = _as_fraction(coeffs)
            self._c, self._d = _normalize({0: f.numerator}, f.denominator)
        else:
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            fr = {}
            for e, a in items:
                if e < 0:
                    raise ValueError("negative exponent in TPoly")
                a = _as_fraction(a)
                if a:
                    fr[e] = fr.get(e, 0) + a
            d = 1
            for a in fr.values():
                d = d * a.denominator // gcd(d, a.denominator)
            c = {e: (a * d).numerator for e, a in fr.items()}
            self._c, self._d = _normalize(c, d)
        self._hash = None

    @classmethod
    def _raw(cls, c: dict, d: int = 1) -> "TPoly":
        p = object.__new__(cls)
        p._c, p._d = c, d
        p._hash = None
        return p

    @classmethod
    def _make(cls, c: dict, d: int = 1) -> "TPoly":
        c, d = _normalize(c, d)
        return cls._raw(c, d)

    @classmethod
    def monomial(cls, e: int, a: Scalar = 1) -> "TPoly":
        return cls({e: a})

    # -- inspection -------------------------------------------------------

    def coeffs(self) -> dict[int, Fraction]:
        return {e: Fraction(a, self._d) for e, a in sorted(self._c.items())}

    def coeff(self, e: int) -> Fraction:
        return Fraction(self._c.get(e, 0), self._d)

    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return max(self._c) if self._c else -1

    def low_degree(self) -> int:
        return min(self._c) if self._c else -1

    def lc(self) -> Fraction:
        return self.coeff(self.degree()) if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_one(self) -> bool:
        return self._d == 1 and self._c == {0: 1}

    def has_integer_coeffs(self) -> bool:
        return self._d == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeff(0)

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return TPoly._raw({e: -a for e, a in self._c.items()}, self._d)

    def __add__(self, other):
        other = _to_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        d1, d2 = self._d, other._d
        if d1 == d2:
            c = dict(self._c)
            for e, a in other._c.items():
                c[e] = c.get(e, 0) + a
            return TPoly._make(c, d1)
        g = gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        c = {e: a * m1 for e, a in self._c.items()}
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a * m2
        return TPoly._make(c, d1 * m1)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _to_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO_POLY
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            c = {e + eb: x * cb for e, x in a.items()}
        else:
            c = {}
            get = c.get
            for e1, x in a.items():
                for e2, y in b.items():
                    k = e1 + e2
                    c[k] = get(k, 0) + x * y
        d = self._d * other._d
        if d == 1:
            return TPoly._raw({e: x for e, x in c.items() if x}, 1)
        return TPoly._make(c, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a TPoly; use TRational")
        out, base = ONE_POLY, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, s: Scalar) -> "TPoly":
        s = _as_fraction(s)
        if not s:
            return ZERO_POLY
        return TPoly._make({e: a * s.numerator for e, a in self._c.items()}, self._d * s.denominator)

    def shift(self, k: int) -> "TPoly":
        """Multiply by t**k (k >= 0)."""
        return TPoly._raw({e + k: a for e, a in self._c.items()}, self._d)

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        """Euclidean division over Q."""
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        r = self.coeffs()
        dq = other.degree()
        lc = other.lc()
        oc = other.coeffs()
        q = {}
        while r and max(r) >= dq:
            top = max(r)
            f = r[top] / lc
            q[top - dq] = f
            for e, a in oc.items():
                k = e + top - dq
                v = r.get(k, 0) - f * a
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return TPoly(q), TPoly(r)

    def __floordiv__(self, other):
        return self.divmod(_to_tpoly(other))[0]

    def __mod__(self, other):
        return self.divmod(_to_tpoly(other))[1]

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x: Scalar) -> Fraction:
        x = _as_fraction(x)
        if not self._c:
            return Fraction(0)
        p, q = x.numerator, x.denominator
        n = self.degree()
        s = sum(a * p ** e * q ** (n - e) for e, a in self._c.items())
        return Fraction(s, self._d * q ** n)

    def content(self) -> Fraction:
        """Positive rational content; primitive part is ``self / content`` up to sign."""
        if not self._c:
            return Fraction(0)
        return Fraction(gcd(*self._c.values()), self._d)

    def primitive(self) -> "TPoly":
        """Integer primitive part with positive leading coefficient."""
        if not self._c:
            return ZERO_POLY
        g = gcd(*self._c.values())
        if self._c[max(self._c)] < 0:
            g = -g
        return TPoly._raw({e: a // g for e, a in self._c.items()}, 1)

    def derivative(self) -> "TPoly":
        return TPoly._make({e - 1: a * e for e, a in self._c.items() if e}, self._d)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self._d == other._d and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == TPoly(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._c.items()), self._d))
        return self._hash

    def __repr__(self):
        return f"TPoly({self})"

    def __str__(self):
        return format_terms(self.coeffs())

    def to_json(self) -> list[str]:
        """Ascending dense coefficient list of "num/den" strings."""
        if not self._c:
            return []
        return [_frac_str(self.coeff(e)) for e in range(self.degree() + 1)]

    @classmethod
    def from_json(cls, data: list) -> "TPoly":
        return cls([Fraction(s) for s in data])


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_terms(coeffs: Mapping[int, Fraction], var: str = "t") -> str:
    """Compact descending rendering such as ``t^3-t^2-t+1``."""
    if not coeffs:
        return "0"
    out = []
    for e in sorted(coeffs, reverse=True):
        a = coeffs[e]
        sign = "-" if a < 0 else "+"
        a = abs(a)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        out.append((sign, body))
    s = "".join(f"{sg}{b}" for sg, b in out)
    return s[1:] if s.startswith("+") else s


def _to_tpoly(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly(x)
    return NotImplemented


ZERO_POLY = TPoly._raw({}, 1)
ONE_POLY = TPoly._raw({0: 1}, 1)
T_POLY = TPoly._raw({1: 1}, 1)


# ---------------------------------------------------------------------------
# gcd over Z[t] (integer primitive polynomials as ascending dense lists)
# ---------------------------------------------------------------------------

def _dense(c: Mapping[int, int], lo: int = 0) -> list[int]:
    n = max(c)
    out = [0] * (n - lo + 1)
    for e, a in c.items():
        out[e - lo] = a
    return out


def _strip(f: list[int]) -> list[int]:
    while f and not f[-1]:
        f.pop()
    return f


def _dense_primitive(f: list[int]) -> list[int]:
    g = gcd(*f)
    if f[-1] < 0:
        g = -g
    return [a // g for a in f] if g != 1 else f


def _dense_eval(f: list[int], x: int) -> int:
    v = 0
    for a in reversed(f):
        v = v * x + a
    return v


def _exact_quotient(f: list[int], h: list[int]):
    """Quotient f/h in Z[t] when h is primitive and divides f; otherwise None."""
    r = list(f)
    dh = len(h) - 1
    lc = h[-1]
    if len(r) - 1 < dh:
        return None if any(r) else []
    q = [0] * (len(r) - dh)
    for i in range(len(r) - 1, dh - 1, -1):
        a = r[i]
        if not a:
            continue
        c, rem = divmod(a, lc)
        if rem:
            return None
        q[i - dh] = c
        for j in range(dh + 1):
            r[i - dh + j] -= c * h[j]
    if any(r[:dh]):
        return None
    return q


def _interpolate(h: int, x: int) -> list[int]:
    f = []
    half = x // 2
    while h:
        c = h % x
        if c > half:
            c -= x
        f.append(c)
        h = (h - c) // x
    return f


def _heugcd(f: list[int], g: list[int]):
    nf = max(abs(a) for a in f)
    ng = max(abs(a) for a in g)
    x = 2 * min(nf, ng) + 29
    x = max(x, 2 * min(nf // abs(f[-1]), ng // abs(g[-1])) + 2)
    for _ in range(8):
        ff, gg = _dense_eval(f, x), _dense_eval(g, x)
        if ff and gg:
            h = _interpolate(gcd(ff, gg), x)
            if h:
                h = _dense_primitive(h)
                if _exact_quotient(f, h) is not None and _exact_quotient(g, h) is not None:
                    return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _prem(f: list[int], g: list[int]) -> list[int]:
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        a = r[-1]
        k = len(r) - 1 - dg
        r = [lc * v for v in r]
        for j in range(dg + 1):
            r[k + j] -= a * g[j]
        _strip(r)
    return r


def _euclid_gcd(f: list[int], g: list[int]) -> list[int]:
    f, g = _dense_primitive(list(f)), _dense_primitive(list(g))
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, (_dense_primitive(r) if r else [])
    return _dense_primitive(f)


def poly_gcd(f: TPoly, g: TPoly, *, method: str = "auto") -> TPoly:
    """Greatest common divisor in Q[t], as an integer primitive polynomial with positive lc.

    ``method`` is ``"auto"`` (heuristic gcd with Euclidean fallback) or
    ``"euclid"`` (primitive PRS only).
    """
    if not f._c:
        return g.primitive()
    if not g._c:
        return f.primitive()
    lo = min(min(f._c), min(g._c))
    if f.is_constant() or g.is_constant():
        return ONE_POLY
    a = _dense_primitive(_dense(f._c, min(f._c)))
    b = _dense_primitive(_dense(g._c, min(g._c)))
    if len(a) == 1 or len(b) == 1:
        h = [1]
    else:
        h = None if method == "euclid" else _heugcd(a, b)
        if h is None:
            h = _euclid_gcd(a, b)
    out = {i + lo: v for i, v in enumerate(h) if v}
    return TPoly._raw(out, 1)


def _divexact_int(f: TPoly, h: TPoly) -> TPoly:
    """f / h where h is an integer primitive divisor of f."""
    if h.is_one():
        return f
    lo = min(h._c)
    hd = _dense(h._c, lo)
    flo = min(f._c)
    fd = _dense(f._c, flo)
    q = _exact_quotient(fd, hd)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return TPoly._raw({i + flo - lo: v for i, v in enumerate(q) if v}, f._d)


# ---------------------------------------------------------------------------
# Q(t)
# ---------------------------------------------------------------------------

class TRational:
    """Immutable element of Q(t) kept in canonical reduced form.

    The denominator is an integer primitive polynomial with positive leading
    coefficient, coprime to the numerator; all rational scaling lives in the
    numerator.  Canonical form makes ``==`` structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, TPoly) else TPoly(num)
        den = den if isinstance(den, TPoly) else TPoly(den)
        n, d = _canonical(num, den)
        self.num, self.den = n, d
        self._hash = None

    @classmethod
    def _raw(cls, num: TPoly, den: TPoly = ONE_POLY) -> "TRational":
        r = object.__new__(cls)
        r.num, r.den = num, den
        r._hash = None
        return r

    @classmethod
    def from_poly(cls, p: TPoly) -> "TRational":
        return cls._raw(p, ONE_POLY)

    @classmethod
    def const(cls, x: Scalar) -> "TRational":
        return cls._raw(TPoly(x), ONE_POLY)

    @classmethod
    def t(cls) -> "TRational":
        return T

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num._c

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def __bool__(self):
        return bool(self.num._c)

    def as_poly(self) -> TPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in t")
        return self.num

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.coeff(0)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return TRational._raw(-self.num, self.den)

    def __add__(self, other):
        other = _to_trational(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num._c:
            return self
        if not self.num._c:
            return other
        d1, d2 = self.den, other.den
        if d1 is ONE_POLY or d1.is_one():
            if d2.is_one():
                return TRational._raw(self.num + other.num, ONE_POLY)
            return TRational._raw(*_reduce_int_den(self.num * d2 + other.num, d2, already_coprime=True))
        if d2.is_one():
            return TRational._raw(*_reduce_int_den(self.num + other.num * d1, d1, already_coprime=True))
        if d1 == d2:
            return TRational._raw(*_reduce_int_den(self.num + other.num, d1))
        g = poly_gcd(d1, d2)
        if g.is_one():
            return TRational._raw(*_reduce_int_den(self.num * d2 + other.num * d1, d1 * d2, already_coprime=True))
        d1g, d2g = _divexact_int(d1, g), _divexact_int(d2, g)
        return TRational._raw(*_reduce_int_den(self.num * d2g + other.num * d1g, d1 * d2g))

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_trational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _to_trational(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num._c or not other.num._c:
            return ZERO
        d1, d2 = self.den, other.den
        one1, one2 = d1.is_one(), d2.is_one()
        if one1 and one2:
            return TRational._raw(self.num * other.num, ONE_POLY)
        # cross-cancel so that the product stays reduced without a second gcd
        n1, n2 = self.num, other.num
        if not one2:
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1, d2 = _divexact_int(n1, g), _divexact_int(d2, g)
        if not one1:
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2, d1 = _divexact_int(n2, g), _divexact_int(d1, g)
        return TRational._raw(*_fix_den(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _to_trational(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num._c:
            raise ZeroDivisionError("division by zero in Q(t)")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _to_trational(other) / self

    def inverse(self) -> "TRational":
        if not self.num._c:
            raise ZeroDivisionError("division by zero in Q(t)")
        c = self.num.content()
        prim = self.num.primitive()
        if self.num.lc() < 0:
            c = -c
        # self = c * prim / den  =>  inverse = den / (c * prim)
        return TRational._raw(self.den.scale(1 / c), prim)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TRational):
            return self.num == other.num and self.den == other.den
        o = _to_trational(other)
        if o is NotImplemented:
            return NotImplemented
        return self == o

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"TRational({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "TRational":
        return cls(TPoly.from_json(data["num"]), TPoly.from_json(data["den"]))


def _fix_den(num: TPoly, den: TPoly):
    """Put an already coprime pair into canonical form (den primitive, lc > 0)."""
    if not num._c:
        return ZERO_POLY, ONE_POLY
    if den.is_one():
        return num, ONE_POLY
    c = den.content()
    if den.lc() < 0:
        c = -c
    if c != 1:
        den = den.primitive()
        num = num.scale(1 / c)
    if den.is_constant():
        return num, ONE_POLY
    return num, den


def _reduce_int_den(num: TPoly, den: TPoly, already_coprime: bool = False):
    """Canonicalize num/den where den is an integer primitive polynomial."""
    if not num._c:
        return ZERO_POLY, ONE_POLY
    if den.is_constant():
        return _fix_den(num, den)
    if not already_coprime:
        g = poly_gcd(num, den)
        if not g.is_one():
            num = _divexact_int(num, g)
            den = _divexact_int(den, g)
    return _fix_den(num, den)


def _canonical(num: TPoly, den: TPoly):
    if not den._c:
        raise ZeroDivisionError("zero denominator in Q(t)")
    if not num._c:
        return ZERO_POLY, ONE_POLY
    c = den.content()
    if den.lc() < 0:
        c = -c
    den = den.primitive()
    num = num.scale(1 / c)
    return _reduce_int_den(num, den)


def _to_trational(x):
    if isinstance(x, TRational):
        return x
    if isinstance(x, TPoly):
        return TRational._raw(x, ONE_POLY)
    if isinstance(x, (int, Fraction)):
        return TRational._raw(TPoly(x), ONE_POLY)
    return NotImplemented


def as_trational(x) -> TRational:
    r = _to_trational(x)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} to TRational")
    return r


ZERO = TRational._raw(ZERO_POLY, ONE_POLY)
ONE = TRational._raw(ONE_POLY, ONE_POLY)
T = TRational._raw(T_POLY, ONE_POLY)


def eval_at(f, t0) -> Fraction:
    """Exact value of ``f`` at ``t = t0``; raises :class:`PoleError` at a pole."""
    f = as_trational(f)
    t0 = _as_fraction(t0)
    d = f.den.eval(t0)
    if not d:
        raise PoleError(f"{f} has a pole at t={t0}")
    return f.num.eval(t0) / d


def hall_twist(f, e: int) -> TRational:
    """Return ``t**e * f(1/t)`` in canonical form."""
    f = as_trational(f)
    if not f.num._c:
        return ZERO

    def reverse(p: TPoly):
        n = p.degree()
        return TPoly._raw({n - k: a for k, a in p._c.items()}, p._d), n

    rn, dn = reverse(f.num)
    rd, dd = reverse(f.den)
    s = e + dd - dn
    if s >= 0:
        return TRational(rn.shift(s), rd)
    return TRational(rn, rd.shift(-s))


def t_power(k: int) -> TRational:
    if k >= 0:
        return TRational._raw(T_POLY ** k if k else ONE_POLY, ONE_POLY)
    return TRational._raw(ONE_POLY, T_POLY ** (-k))


def one_minus_t_power(k: int) -> TPoly:
    """The polynomial 1 - t**k."""
    if k == 0:
        return ZERO_POLY
    return TPoly._raw({0: 1, k: -1}, 1)
