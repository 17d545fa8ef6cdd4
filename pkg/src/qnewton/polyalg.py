"""Exact integer polynomial arithmetic in ``q`` and ``(q, x)``.

Every polynomial is stored sparsely as a dict from exponent to Python ``int``
(arbitrary precision); zero coefficients are never stored.  Values are
treated as immutable once built.

Types
-----
ZPoly        integer polynomial in q, nonnegative exponents
LaurentPoly  integer Laurent polynomial in q
RatFunc      element of Q(q), kept as a reduced ratio of two ZPoly values
BivarPoly    integer polynomial in (q, x), keys are (q-exponent, x-exponent)
RatPolyX     polynomial in x with RatFunc coefficients, i.e. Q(q)[x]
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, DuplicateNode, InexactDivision, ZeroPolynomial

__all__ = [
    "ZPoly",
    "LaurentPoly",
    "RatFunc",
    "BivarPoly",
    "RatPolyX",
    "q_int",
    "q_factorial",
    "q_binom",
    "gcd_zpoly",
    "lcm_zpoly",
    "content_q",
    "exact_div",
    "lagrange_interpolate",
]


# -- text rendering ---------------------------------------------------------

def _monomial(c: int, factors: list[str]) -> str:
    """Render |c| * prod(factors); the sign is handled by the caller."""
    c = abs(c)
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    return "*".join([str(c)] + factors)


def _power(var: str, e: int) -> list[str]:
    if e == 0:
        return []
    if e == 1:
        return [var]
    return [f"{var}^{e}"]


def _join(terms: list[tuple[int, str]], compact: bool) -> str:
    if not terms:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    sign, body = terms[0]
    out = [("-" if sign < 0 else "") + body]
    for sign, body in terms[1:]:
        out.append((minus if sign < 0 else plus) + body)
    return "".join(out)


def format_univariate(coeffs: Mapping[int, int], var: str = "q", compact: bool = False) -> str:
    """Canonical text form, exponents descending: ``q^2 + 2*q + 1``."""
    terms = [(coeffs[e], _monomial(coeffs[e], _power(var, e)))
             for e in sorted(coeffs, reverse=True)]
    return _join(terms, compact)


# -- dense helpers (ascending coefficient lists, no trailing zeros) ----------

def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense(c: Mapping[int, int]) -> list[int]:
    if not c:
        return []
    out = [0] * (max(c) + 1)
    for e, v in c.items():
        out[e] = v
    return out


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, v in enumerate(b):
            r[i + shift] -= lr * v
        _strip(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [f * v for v in r]
    return r


def _content(a: Iterable[int]) -> int:
    g = 0
    for v in a:
        g = math.gcd(g, v)
        if g == 1:
            break
    return g


def _subresultant_gcd(a: list[int], b: list[int]) -> list[int]:
    """Gcd (up to a constant) of two nonzero primitive polynomials."""
    if len(a) < len(b):
        a, b = b, a
    g = h = 1
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            return b
        if len(r) == 1:
            return [1]
        div = g * h ** delta
        a, b = b, [v // div for v in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)


# -- univariate polynomials -------------------------------------------------

class _Univariate:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            v = c.get(e, 0) + v
            if v:
                c[e] = v
            else:
                c.pop(e, None)
        self._check(c)
        self._c = c

    @classmethod
    def _check(cls, c: dict[int, int]) -> None:
        pass

    @classmethod
    def _from_clean(cls, c: dict[int, int]):
        obj = cls.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def monomial(cls, e: int, c: int = 1):
        return cls({e: c})

    @classmethod
    def from_dense(cls, a: Sequence[int]):
        return cls._from_clean({i: v for i, v in enumerate(a) if v})

    # container protocol
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def q_max(self) -> float | int:
        return max(self._c) if self._c else -math.inf

    def q_min(self) -> float | int:
        return min(self._c) if self._c else math.inf

    def lc(self) -> int:
        return self._c[max(self._c)] if self._c else 0

    # arithmetic
    def _result_cls(self, other):
        if isinstance(self, LaurentPoly) or isinstance(other, LaurentPoly):
            return LaurentPoly
        return ZPoly

    @staticmethod
    def _coerce(other):
        if isinstance(other, _Univariate):
            return other
        if isinstance(other, int):
            return ZPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            v += c.get(e, 0)
            if v:
                c[e] = v
            else:
                del c[e]
        return self._result_cls(other)._from_clean(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_clean({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self)._from_clean({})
            return type(self)._from_clean({e: v * other for e, v in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return self._result_cls(other)._from_clean({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = type(self)(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int):
        """Multiply by q^k."""
        c = {e + k: v for e, v in self._c.items()}
        if c and min(c) < 0:
            return LaurentPoly._from_clean(c)
        return type(self)._from_clean(c)

    def substitute_inverse(self) -> LaurentPoly:
        """The polynomial with q replaced by 1/q."""
        return LaurentPoly._from_clean({-e: v for e, v in self._c.items()})

    def evaluate(self, q):
        """Value at a number q (int or Fraction give exact results)."""
        total = 0
        for e, v in self._c.items():
            total += v * (Fraction(q) ** e if e < 0 else q ** e)
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ZPoly(other)
        if isinstance(other, _Univariate):
            return self._c == other._c
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        return format_univariate(self._c)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class ZPoly(_Univariate):
    """Integer polynomial in q."""

    __slots__ = ()

    @classmethod
    def _check(cls, c):
        if c and min(c) < 0:
            raise ValueError("ZPoly exponents must be nonnegative; use LaurentPoly")

    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def dense(self) -> list[int]:
        return _dense(self._c)

    def content(self) -> int:
        return _content(self._c.values())

    def primitive_part(self) -> ZPoly:
        """Primitive part with positive leading coefficient."""
        if not self._c:
            return self
        g = self.content()
        if self.lc() < 0:
            g = -g
        return ZPoly._from_clean({e: v // g for e, v in self._c.items()})

    def exact_quotient(self, d: ZPoly) -> ZPoly:
        """self / d over Z[q]; raises InexactDivision on a remainder."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return self
        r = self.dense()
        b = d.dense()
        lb = b[-1]
        db = len(b) - 1
        if len(r) - 1 < db:
            raise InexactDivision(f"{d} does not divide {self}")
        quo = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            v = r[i]
            if not v:
                continue
            t, rem = divmod(v, lb)
            if rem:
                raise InexactDivision(f"{d} does not divide {self}")
            quo[i - db] = t
            for j, bv in enumerate(b):
                r[i - db + j] -= t * bv
        if any(r):
            raise InexactDivision(f"{d} does not divide {self}")
        return ZPoly.from_dense(quo)

    def __floordiv__(self, other):
        if isinstance(other, int):
            other = ZPoly(other)
        return self.exact_quotient(other)


class LaurentPoly(_Univariate):
    """Integer Laurent polynomial in q; exponents may be negative."""

    __slots__ = ()

    def to_zpoly(self) -> ZPoly:
        return ZPoly(self._c)

    def to_ratfunc(self) -> RatFunc:
        lo = min(self._c) if self._c else 0
        if lo >= 0:
            return RatFunc(ZPoly(self._c))
        return RatFunc(ZPoly({e - lo: v for e, v in self._c.items()}), ZPoly.monomial(-lo))


def gcd_zpoly(a: ZPoly, b: ZPoly) -> ZPoly:
    """Gcd in Z[q]: integer-content gcd times the primitive gcd, positive lc."""
    if not a and not b:
        raise ZeroPolynomial("gcd of two zero polynomials")
    if not a:
        return b.primitive_part() * b.content()
    if not b:
        return a.primitive_part() * a.content()
    cont = math.gcd(a.content(), b.content())
    pa, pb = a.primitive_part(), b.primitive_part()
    if pa.degree() == 0 or pb.degree() == 0:
        return ZPoly(cont)
    g = ZPoly.from_dense(_subresultant_gcd(pa.dense(), pb.dense())).primitive_part()
    return g * cont


def lcm_zpoly(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ZPoly()
    return ((a * b).exact_quotient(gcd_zpoly(a, b))).primitive_part() * (
        math.lcm(a.content(), b.content()))


# -- q-analogues --------------------------------------------------------------

def q_int(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); for n < 0, [n]_q = -q^n [-n]_q."""
    if n >= 0:
        return LaurentPoly._from_clean({i: 1 for i in range(n)})
    return LaurentPoly._from_clean({e: -1 for e in range(n, 0)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> ZPoly:
    if n < 0:
        raise DomainError("q-factorial of a negative integer")
    if n == 0:
        return ZPoly(1)
    return q_factorial(n - 1) * ZPoly(q_int(n).coeffs)


@lru_cache(maxsize=None)
def q_binom(n: int, k: int) -> ZPoly:
    if not (n >= k >= 0):
        raise DomainError(f"q-binomial needs n >= k >= 0, got n={n}, k={k}")
    return q_factorial(n).exact_quotient(q_factorial(k) * q_factorial(n - k))


# -- rational functions -----------------------------------------------------

class RatFunc:
    """Element of Q(q) as num/den with num, den in Z[q].

    Canonical form: gcd(num, den) = 1 in Q[q], den has positive leading
    coefficient, and the integer contents of num and den are coprime.  The
    zero element is 0/1.  Equality is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ZPoly | int = 0, den: ZPoly | int = 1):
        num = _as_zpoly(num)
        den = _as_zpoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = ZPoly(), ZPoly(1)
            return
        if den.degree() > 0:
            g = gcd_zpoly(num, den).primitive_part()
            if g.degree() > 0:
                num = num.exact_quotient(g)
                den = den.exact_quotient(g)
        c = math.gcd(num.content(), den.content())
        if den.lc() < 0:
            c = -c
        if c != 1:
            num = ZPoly._from_clean({e: v // c for e, v in num._c.items()})
            den = ZPoly._from_clean({e: v // c for e, v in den._c.items()})
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: ZPoly, den: ZPoly) -> RatFunc:
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @staticmethod
    def coerce(value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, LaurentPoly):
            return value.to_ratfunc()
        if isinstance(value, (ZPoly, int)):
            return RatFunc(value)
        if isinstance(value, Fraction):
            return RatFunc(value.numerator, value.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0 and self.den.lc() == 1

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def evaluate(self, q) -> Fraction:
        return Fraction(self.num.evaluate(q)) / Fraction(self.den.evaluate(q))

    def __eq__(self, other) -> bool:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den == ZPoly(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


def _as_zpoly(v) -> ZPoly:
    if isinstance(v, ZPoly):
        return v
    if isinstance(v, int):
        return ZPoly(v)
    if isinstance(v, LaurentPoly):
        return v.to_zpoly()
    raise TypeError(f"expected ZPoly or int, got {type(v).__name__}")


# -- bivariate polynomials --------------------------------------------------

class BivarPoly:
    """Integer polynomial in (q, x), keyed by (q-exponent, x-exponent)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[tuple[int, int], int] = {}
        for key, v in items:
            i, k = key
            if i < 0 or k < 0:
                raise ValueError(f"negative exponent in BivarPoly term {key}")
            v += c.get((i, k), 0)
            if v:
                c[(i, k)] = v
            else:
                c.pop((i, k), None)
        self._c = c

    @classmethod
    def from_slices(cls, slices: Mapping[int, ZPoly]) -> BivarPoly:
        """Build from x-degree -> coefficient polynomial in q."""
        obj = cls.__new__(cls)
        obj._c = {(i, k): v for k, s in slices.items() for i, v in s._c.items()}
        return obj

    @classmethod
    def x(cls) -> BivarPoly:
        return cls({(0, 1): 1})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._c)

    def coeff(self, i: int, k: int) -> int:
        return self._c.get((i, k), 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def x_degree(self) -> int:
        return max((k for _, k in self._c), default=-1)

    def slice(self, k: int) -> ZPoly:
        """The coefficient of x^k, a polynomial in q."""
        return ZPoly._from_clean({i: v for (i, kk), v in self._c.items() if kk == k})

    def slices(self) -> dict[int, ZPoly]:
        out: dict[int, dict[int, int]] = {}
        for (i, k), v in self._c.items():
            out.setdefault(k, {})[i] = v
        return {k: ZPoly._from_clean(out[k]) for k in sorted(out)}

    def leading_term(self) -> tuple[tuple[int, int], int]:
        """Largest monomial ordering by x-degree, then q-degree."""
        i, k = max(self._c, key=lambda t: (t[1], t[0]))
        return (i, k), self._c[(i, k)]

    def __add__(self, other: BivarPoly) -> BivarPoly:
        c = dict(self._c)
        for key, v in other._c.items():
            v += c.get(key, 0)
            if v:
                c[key] = v
            else:
                del c[key]
        obj = BivarPoly.__new__(BivarPoly)
        obj._c = c
        return obj

    def __neg__(self) -> BivarPoly:
        obj = BivarPoly.__new__(BivarPoly)
        obj._c = {key: -v for key, v in self._c.items()}
        return obj

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self + (-other)

    def __mul__(self, other) -> BivarPoly:
        if isinstance(other, int):
            other = ZPoly(other)
        if isinstance(other, ZPoly):
            other = BivarPoly.from_slices({0: other})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        c: dict[tuple[int, int], int] = {}
        for (i1, k1), v1 in self._c.items():
            for (i2, k2), v2 in other._c.items():
                key = (i1 + i2, k1 + k2)
                c[key] = c.get(key, 0) + v1 * v2
        obj = BivarPoly.__new__(BivarPoly)
        obj._c = {key: v for key, v in c.items() if v}
        return obj

    __rmul__ = __mul__

    def evaluate(self, q, x):
        return sum(v * q ** i * x ** k for (i, k), v in self._c.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        """``(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)``."""
        terms: list[tuple[int, str]] = []
        for k, s in sorted(self.slices().items(), reverse=True):
            if len(s._c) == 1:
                (i, v), = s._c.items()
                terms.append((v, _monomial(v, _power("q", i) + _power("x", k))))
            else:
                body = "(" + format_univariate(s._c, compact=True) + ")"
                terms.append((1, "*".join([body] + _power("x", k))))
        return _join(terms, compact=False)

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"


def content_q(f: BivarPoly) -> ZPoly:
    """Gcd over k of the coefficient slices [x^k] f."""
    if not f:
        raise ZeroPolynomial("content of the zero polynomial")
    g = ZPoly()
    for s in f.slices().values():
        g = gcd_zpoly(g, s)
        if g == ZPoly(1):
            break
    return g


def exact_div(f: BivarPoly, d: ZPoly) -> BivarPoly:
    """Divide every x-slice of f by d exactly."""
    return BivarPoly.from_slices({k: s.exact_quotient(d) for k, s in f.slices().items()})


# -- polynomials over Q(q) ---------------------------------------------------

class RatPolyX:
    """Polynomial in x with coefficients in Q(q)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, RatFunc | ZPoly | int] | None = None):
        c: dict[int, RatFunc] = {}
        for k, v in (coeffs or {}).items():
            v = RatFunc.coerce(v)
            if v:
                c[k] = v
        self._c = c

    @classmethod
    def from_bivar(cls, f: BivarPoly, den: ZPoly | int = 1) -> RatPolyX:
        return cls({k: RatFunc(s, den) for k, s in f.slices().items()})

    @property
    def coeffs(self) -> dict[int, RatFunc]:
        return dict(self._c)

    def coeff(self, k: int) -> RatFunc:
        return self._c.get(k, RatFunc())

    def degree(self) -> int:
        return max(self._c, default=-1)

    def __bool__(self) -> bool:
        return bool(self._c)

    def common_denominator(self) -> tuple[dict[int, ZPoly], ZPoly]:
        """Return (numerators, L) with self = sum numerators[k] x^k / L."""
        L = ZPoly(1)
        for v in self._c.values():
            if v.den != L:
                L = lcm_zpoly(L, v.den)
        return {k: v.num * L.exact_quotient(v.den) for k, v in self._c.items()}, L

    def evaluate(self, x) -> RatFunc:
        """Substitute an element of Q(q) for x, with a single final reduction."""
        x = RatFunc.coerce(x)
        if not self._c:
            return RatFunc()
        nums, L = self.common_denominator()
        d = self.degree()
        u, v = x.num, x.den
        upow = [ZPoly(1)]
        vpow = [ZPoly(1)]
        for _ in range(d):
            upow.append(upow[-1] * u)
            vpow.append(vpow[-1] * v)
        total = ZPoly()
        for k, c in nums.items():
            total = total + c * upow[k] * vpow[d - k]
        return RatFunc(total, L * vpow[d])

    __call__ = evaluate

    def __add__(self, other: RatPolyX) -> RatPolyX:
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c[k] + v if k in c else v
        return RatPolyX(c)

    def __mul__(self, other) -> RatPolyX:
        if not isinstance(other, RatPolyX):
            r = RatFunc.coerce(other)
            return RatPolyX({k: v * r for k, v in self._c.items()})
        c: dict[int, RatFunc] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                c[k1 + k2] = c.get(k1 + k2, RatFunc()) + v1 * v2
        return RatPolyX(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPolyX):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms: list[tuple[int, str]] = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            if v.is_polynomial() and len(v.num._c) == 1:
                (i, c), = v.num._c.items()
                terms.append((c, _monomial(c, _power("q", i) + _power("x", k))))
                continue
            if v.is_polynomial():
                body = format_univariate(v.num._c, compact=True)
            else:
                num, den = (format_univariate(p._c, compact=True) for p in (v.num, v.den))
                if len(v.num._c) > 1:
                    num = f"({num})"
                if len(v.den._c) > 1 or v.den.degree() > 0 and v.den.lc() != 1:
                    den = f"({den})"
                body = f"{num}/{den}"
            terms.append((1, "*".join([f"({body})"] + _power("x", k))))
        return _join(terms, compact=False)

    def __repr__(self) -> str:
        return f"RatPolyX({str(self)!r})"


@lru_cache(maxsize=64)
def _lagrange_basis(nodes: tuple[RatFunc, ...]) -> dict[int, tuple[ZPoly, tuple[ZPoly, ...]]]:
    """Lagrange basis over a common denominator per x-degree.

    Maps k to (L_k, (a_0k, ..., a_nk)) where [x^k] l_i(x) = a_ik / L_k.
    """
    basis = []
    for i, xi in enumerate(nodes):
        poly = RatPolyX({0: 1})
        denom = RatFunc(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            poly = poly * RatPolyX({1: 1, 0: -xj})
            denom = denom * (xi - xj)
        basis.append((poly * denom.inverse()).common_denominator())
    dens: dict[int, ZPoly] = {}
    for nums, L in basis:
        for k in nums:
            dens[k] = lcm_zpoly(dens[k], L) if k in dens else L
    return {
        k: (Lk, tuple(nums[k] * Lk.exact_quotient(L) if k in nums else ZPoly()
                      for nums, L in basis))
        for k, Lk in dens.items()
    }


def lagrange_interpolate(points: Sequence[tuple]) -> RatPolyX:
    """The unique polynomial of degree < len(points) through (x_i, y_i) over Q(q)."""
    xs = tuple(RatFunc.coerce(x) for x, _ in points)
    ys = [RatFunc.coerce(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNode("interpolation nodes must be distinct")
    if not xs:
        return RatPolyX()
    ylcm = ZPoly(1)
    for y in ys:
        if y.den != ylcm:
            ylcm = lcm_zpoly(ylcm, y.den)
    yscaled = [y.num * ylcm.exact_quotient(y.den) for y in ys]
    out = {}
    for k, (Lk, column) in _lagrange_basis(xs).items():
        total = ZPoly()
        for y, a in zip(yscaled, column):
            if y and a:
                total = total + y * a
        out[k] = RatFunc(total, Lk * ylcm)
    return RatPolyX(out)
