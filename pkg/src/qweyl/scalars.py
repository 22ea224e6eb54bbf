"""Exact scalar arithmetic: arbitrary-precision rationals, Laurent polynomials
in one formal variable, and their quotient field, plus balanced q-combinatorics.

Every ScalarFn is held in the canonical reduced form

    coef * y^shift * N(y) / D(y),        y = var^(1/unit)

where N and D are primitive integer polynomials with nonzero constant term,
positive leading coefficients and gcd(N, D) = 1, `coef` is a Fraction carrying
sign and rational scale, and `unit` is the minimal exponent denominator.
Constants have var=None and combine freely with values in any variable;
mixing two distinct variables is an error (the field stays univariate, and
multi-variable identities are certified by specializing all but one variable).

Values are immutable and safe to share between workers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class PoleError(ArithmeticError):
    """Raised when a value is evaluated at a pole of its reduced denominator,
    or when an operator product hits a degenerate bracket factor."""


# ----------------------------------------------------------------------
# integer polynomial helpers (dense ascending coefficient tuples)
# ----------------------------------------------------------------------

def _ptrim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return tuple(out)


def _pcontent(p):
    c = 0
    for x in p:
        c = _igcd(c, x)
        if c == 1:
            return 1
    return c


def _iexact(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact integer division")
    return q


def _pdiv_int(p, n):
    return tuple(_iexact(c, n) for c in p)


def _pdivexact(a, b):
    """Exact division of integer polynomials (raises if not exact)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db) if len(a) > db else []
    for k in range(len(a) - 1, db - 1, -1):
        c = _iexact(a[k], lb)
        out[k - db] = c
        if c:
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(out)


def _prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + rem."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    e = da - db + 1
    dr = da
    while dr >= db:
        lr = r[dr]
        for i in range(len(r)):
            r[i] *= lb
        if lr:
            off = dr - db
            for j in range(db + 1):
                r[off + j] -= lr * b[j]
        e -= 1
        dr -= 1
        while dr >= 0 and r[dr] == 0:
            dr -= 1
        del r[dr + 1:]
        if dr < db:
            break
    m = lb ** max(e, 0)
    return _ptrim([c * m for c in r])


def _pgcd(a, b):
    """Primitive gcd of integer polynomials by the subresultant PRS
    (content extracted first, positive leading coefficient on the result)."""
    a, b = _ptrim(a), _ptrim(b)
    if not a:
        g = _pdiv_int(b, _pcontent(b)) if b else ()
    elif not b:
        g = _pdiv_int(a, _pcontent(a))
    else:
        a = _pdiv_int(a, _pcontent(a))
        b = _pdiv_int(b, _pcontent(b))
        if len(a) < len(b):
            a, b = b, a
        g = h = 1
        while True:
            d = len(a) - len(b)
            r = _prem(a, b)
            if not r:
                break
            if len(b) == 1 or len(r) == 1:
                b = (1,)
                break
            a, b = b, _pdiv_int(r, g * h ** d)
            g = a[-1]
            if d >= 1:
                h = _iexact(g ** d, h ** (d - 1))
        g = _pdiv_int(b, _pcontent(b))
    if not g:
        return ()
    if g[-1] < 0:
        g = tuple(-c for c in g)
    return g


def _pupsample(p, t):
    if t == 1 or not p:
        return tuple(p)
    out = [0] * ((len(p) - 1) * t + 1)
    for i, c in enumerate(p):
        out[i * t] = c
    return tuple(out)


def _pdownsample(p, t):
    return tuple(p[i] for i in range(0, len(p), t))


def _peval(p, x0):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x0 + c
    return acc


def _pderiv(p):
    return _ptrim([i * p[i] for i in range(1, len(p))])


def _nth_root_fraction(x, n):
    """Exact rational n-th root of a Fraction, or None."""
    if n == 1:
        return x
    if x < 0:
        if n % 2 == 0:
            return None
        r = _nth_root_fraction(-x, n)
        return None if r is None else -r
    def iroot(m):
        if m in (0, 1):
            return m
        r = round(m ** (1.0 / n))
        for cand in (r - 1, r, r + 1, r + 2):
            if cand >= 0 and cand ** n == m:
                return cand
        lo, hi = 0, 1 << ((m.bit_length() + n - 1) // n + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** n < m:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** n == m else None
    p = iroot(x.numerator)
    q = iroot(x.denominator)
    if p is None or q is None:
        return None
    return Fraction(p, q)


# ----------------------------------------------------------------------
# ScalarFn
# ----------------------------------------------------------------------

_ZERO_PARTS = (None, 1, Fraction(0), 0, (1,), (1,))


class ScalarFn:
    """One element of the univariate rational-function field (see module doc).

    Do not call the constructor with unnormalized data; use the factory
    helpers (`rational`, `monomial`, `laurent`, arithmetic on existing
    values).
    """

    __slots__ = ("var", "unit", "coef", "shift", "num", "den", "_h")

    def __init__(self, var, unit, coef, shift, num, den):
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_h", None)

    def __setattr__(self, *a):
        raise AttributeError("ScalarFn is immutable")

    # -- construction -------------------------------------------------

    @staticmethod
    def _new(var, unit, coef, shift, num, den, coprime=False):
        num = _ptrim(num)
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if coef == 0 or not num:
            return _ZERO
        v = 0
        while num[v] == 0:
            v += 1
        if v:
            shift += v
            num = num[v:]
        w = 0
        while den[w] == 0:
            w += 1
        if w:
            shift -= w
            den = den[w:]
        cn, cd = _pcontent(num), _pcontent(den)
        if cn != 1:
            num = _pdiv_int(num, cn)
        if cd != 1:
            den = _pdiv_int(den, cd)
        coef = coef * Fraction(cn, cd)
        if num[-1] < 0:
            num = tuple(-c for c in num)
            coef = -coef
        if den[-1] < 0:
            den = tuple(-c for c in den)
            coef = -coef
        if not coprime and den != (1,) and len(num) + len(den) > 2:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivexact(num, g)
                den = _pdivexact(den, g)
                if num[-1] < 0:
                    num = tuple(-c for c in num)
                    coef = -coef
                if den[-1] < 0:
                    den = tuple(-c for c in den)
                    coef = -coef
        if unit > 1:
            g = _igcd(unit, abs(shift))
            if g > 1:
                for i in range(1, len(num)):
                    if num[i]:
                        g = _igcd(g, i)
                        if g == 1:
                            break
            if g > 1:
                for i in range(1, len(den)):
                    if den[i]:
                        g = _igcd(g, i)
                        if g == 1:
                            break
            if g > 1:
                unit //= g
                shift = shift // g
                num = _pdownsample(num, g)
                den = _pdownsample(den, g)
        if shift == 0 and num == (1,) and den == (1,):
            var, unit = None, 1
        if var is None and (shift or num != (1,) or den != (1,) or unit != 1):
            raise ValueError("constants must be bare rationals")
        return ScalarFn(var, unit, coef, shift, num, den)

    # -- basics --------------------------------------------------------

    def is_zero(self):
        return self.coef == 0

    def is_one(self):
        return self.var is None and self.coef == 1

    def is_constant(self):
        return self.var is None

    def as_fraction(self):
        if self.var is not None:
            raise ValueError("not a constant: %r" % (self,))
        return self.coef

    def __bool__(self):
        return self.coef != 0

    def __hash__(self):
        h = self._h
        if h is None:
            h = hash((self.var, self.unit, self.coef, self.shift, self.num, self.den))
            object.__setattr__(self, "_h", h)
        return h

    # -- coercion / alignment ------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, ScalarFn):
            return x
        if isinstance(x, (int, Fraction)):
            return rational(x)
        return NotImplemented

    def _mergevar(self, other):
        if self.var is None:
            return other.var
        if other.var is None or other.var == self.var:
            return self.var
        raise ValueError("variable mismatch: %r vs %r" % (self.var, other.var))

    def _aligned(self, other, var):
        """Common-unit views of self and other in variable `var`."""
        u = self.unit if self.var else 1
        v = other.unit if other.var else 1
        L = u * v // _igcd(u, v)
        a = (self.coef, self.shift * (L // u), _pupsample(self.num, L // u),
             _pupsample(self.den, L // u))
        b = (other.coef, other.shift * (L // v), _pupsample(other.num, L // v),
             _pupsample(other.den, L // v))
        return L, a, b

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = ScalarFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.coef == 0:
            return other
        if other.coef == 0:
            return self
        if self.var is None and other.var is None:
            return rational(self.coef + other.coef)
        var = self._mergevar(other)
        L, (c1, s1, n1, d1), (c2, s2, n2, d2) = self._aligned(other, var)
        m = min(s1, s2)
        l = c1.denominator * c2.denominator // _igcd(c1.denominator, c2.denominator)
        a1 = c1.numerator * (l // c1.denominator)
        a2 = c2.numerator * (l // c2.denominator)
        t1 = _pmul(_pupshift(n1, s1 - m), d2)
        t2 = _pmul(_pupshift(n2, s2 - m), d1)
        P = [0] * max(len(t1), len(t2))
        for i, c in enumerate(t1):
            P[i] += a1 * c
        for i, c in enumerate(t2):
            P[i] += a2 * c
        if d1 == (1,) and d2 == (1,):
            return ScalarFn._new(var, L, Fraction(1, l), m, P, (1,), coprime=True)
        return ScalarFn._new(var, L, Fraction(1, l), m, P, _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        if self.coef == 0:
            return self
        return ScalarFn(self.var, self.unit, -self.coef, self.shift, self.num, self.den)

    def __sub__(self, other):
        other = ScalarFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = ScalarFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.coef == 0 or other.coef == 0:
            return _ZERO
        if self.var is None and other.var is None:
            return rational(self.coef * other.coef)
        if self.var is None:
            return ScalarFn(other.var, other.unit, self.coef * other.coef,
                            other.shift, other.num, other.den)
        if other.var is None:
            return ScalarFn(self.var, self.unit, self.coef * other.coef,
                            self.shift, self.num, self.den)
        var = self._mergevar(other)
        L, (c1, s1, n1, d1), (c2, s2, n2, d2) = self._aligned(other, var)
        if d1 != (1,) and n2 != (1,):
            g = _pgcd(n2, d1)
            if len(g) > 1:
                n2, d1 = _pdivexact(n2, g), _pdivexact(d1, g)
        if d2 != (1,) and n1 != (1,):
            g = _pgcd(n1, d2)
            if len(g) > 1:
                n1, d2 = _pdivexact(n1, g), _pdivexact(d2, g)
        return ScalarFn._new(var, L, c1 * c2, s1 + s2, _pmul(n1, n2),
                             _pmul(d1, d2), coprime=True)

    __rmul__ = __mul__

    def inv(self):
        if self.coef == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.var is None:
            return rational(Fraction(1, 1) / self.coef)
        return ScalarFn._new(self.var, self.unit, 1 / self.coef, -self.shift,
                             self.den, self.num, coprime=True)

    def __truediv__(self, other):
        other = ScalarFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return _ONE
        base = self if n > 0 else self.inv()
        n = abs(n)
        if base.coef == 0:
            return _ZERO
        num, den = base.num, base.den
        rn, rd = (1,), (1,)
        for _ in range(n):
            rn = _pmul(rn, num)
            rd = _pmul(rd, den)
        return ScalarFn._new(base.var, base.unit, base.coef ** n,
                             base.shift * n, rn, rd, coprime=True)

    def __eq__(self, other):
        other = ScalarFn._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.coef == other.coef and self.shift == other.shift
                and self.num == other.num and self.den == other.den
                and self.unit == other.unit and self.var == other.var)

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    # -- substitutions ---------------------------------------------------

    def bar(self):
        """The substitution var -> var^(-1)."""
        if self.var is None:
            return self
        shift = -self.shift - (len(self.num) - 1) + (len(self.den) - 1)
        return ScalarFn._new(self.var, self.unit, self.coef, shift,
                             tuple(reversed(self.num)), tuple(reversed(self.den)),
                             coprime=True)

    def derivative(self):
        """d/d(var), exact; constants differentiate to zero."""
        if self.var is None:
            return _ZERO
        N, D, s, u = self.num, self.den, self.shift, self.unit
        sN = tuple(s * c for c in N)
        yNp = _pupshift(_pderiv(N), 1)
        top = _padd(sN, yNp)
        if D == (1,):
            return ScalarFn._new(self.var, u, self.coef / u, s - u, top, (1,))
        yNDp = _pupshift(_pmul(N, _pderiv(D)), 1)
        P = _psub(_pmul(top, D), yNDp)
        return ScalarFn._new(self.var, u, self.coef / u, s - u, P, _pmul(D, D))

    # -- evaluation / data ------------------------------------------------

    def evaluate(self, q0):
        q0 = Fraction(q0)
        if self.var is None:
            return self.coef
        y0 = _nth_root_fraction(q0, self.unit)
        if y0 is None:
            raise ValueError("%s has no exact rational %d-th root" % (q0, self.unit))
        if y0 == 0:
            if self.shift < 0:
                raise PoleError("pole at %s = 0" % self.var)
            return self.coef * _peval(self.num, y0) / _peval(self.den, y0) * (0 if self.shift else 1)
        dv = _peval(self.den, y0)
        if dv == 0:
            raise PoleError("evaluation at a pole: %s = %s" % (self.var, q0))
        return self.coef * y0 ** self.shift * _peval(self.num, y0) / dv

    def num_terms(self):
        """Ascending [(exponent: Fraction, coefficient: Fraction)] of the
        numerator Laurent polynomial (the rational coef folded in)."""
        return [(Fraction(self.shift + i, self.unit), self.coef * c)
                for i, c in enumerate(self.num) if c]

    def den_terms(self):
        return [(Fraction(i, self.unit), Fraction(c))
                for i, c in enumerate(self.den) if c]

    @property
    def numerator(self):
        return {e: c for e, c in self.num_terms()}

    @property
    def denominator(self):
        return {e: c for e, c in self.den_terms()}

    def serialize(self):
        def enc(pairs):
            return [[int(e) if e.denominator == 1 else "%d/%d" % (e.numerator, e.denominator),
                     str(c)] for e, c in pairs]
        return {"num": enc(self.num_terms()), "den": enc(self.den_terms())}

    def __repr__(self):
        if self.var is None:
            return str(self.coef)
        def side(pairs):
            bits = []
            for e, c in pairs:
                if e == 0:
                    bits.append(str(c))
                else:
                    es = str(e)
                    mono = self.var if e == 1 else "%s^%s" % (self.var, es if "/" not in es else "(%s)" % es)
                    if c == 1:
                        bits.append(mono)
                    elif c == -1:
                        bits.append("-" + mono)
                    else:
                        bits.append("%s*%s" % (c, mono))
            out = " + ".join(bits).replace("+ -", "- ")
            return out or "0"
        up = side(self.num_terms())
        if self.den == (1,):
            return up
        return "(%s)/(%s)" % (up, side(self.den_terms()))


def _pupshift(p, k):
    return ((0,) * k + tuple(p)) if k else tuple(p)


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _psub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _ptrim(out)


_ZERO = ScalarFn(None, 1, Fraction(0), 0, (1,), (1,))
_ONE = ScalarFn(None, 1, Fraction(1), 0, (1,), (1,))


# ----------------------------------------------------------------------
# factories
# ----------------------------------------------------------------------

def rational(x, y=None):
    """The constant x (or x/y)."""
    c = Fraction(x) if y is None else Fraction(x, y)
    if c == 0:
        return _ZERO
    if c == 1:
        return _ONE
    return ScalarFn(None, 1, c, 0, (1,), (1,))


def monomial(var, exp, coeff=1):
    """coeff * var^exp with a rational exponent."""
    e = Fraction(exp)
    c = Fraction(coeff)
    if c == 0:
        return _ZERO
    if e == 0:
        return rational(c)
    return ScalarFn._new(var, e.denominator, c, e.numerator, (1,), (1,), coprime=True)


def laurent(var, table):
    """Build from a {exponent: coefficient} table; exponents may be rational."""
    items = [(Fraction(e), Fraction(c)) for e, c in table.items() if c]
    if not items:
        return _ZERO
    u = 1
    for e, _ in items:
        u = u * e.denominator // _igcd(u, e.denominator)
    scaled = sorted((int(e * u), c) for e, c in items)
    lo = scaled[0][0]
    l = 1
    for _, c in scaled:
        l = l * c.denominator // _igcd(l, c.denominator)
    arr = [0] * (scaled[-1][0] - lo + 1)
    for e, c in scaled:
        arr[e - lo] += c.numerator * (l // c.denominator)
    return ScalarFn._new(var, u, Fraction(1, l), lo, arr, (1,), coprime=True)


def evaluate(s, q0):
    """Evaluate a ScalarFn at a rational point (spec op)."""
    return s.evaluate(q0)


# ----------------------------------------------------------------------
# q-combinatorics (balanced)
# ----------------------------------------------------------------------

def qint(n, d=1, var="q"):
    """[n]_{q^d} = (q^{dn} - q^{-dn})/(q^d - q^{-d}), a Laurent polynomial."""
    if d <= 0:
        raise ValueError("symmetrizer d must be positive")
    if n == 0:
        return _ZERO
    a = abs(n)
    num = [0] * (2 * d * (a - 1) + 1)
    for j in range(a):
        num[2 * d * j] = 1
    return ScalarFn._new(var, 1, Fraction(1 if n > 0 else -1), -d * (a - 1),
                         num, (1,), coprime=True)


def qint_at(a, d=1, var="q"):
    """[a]_{q^d} for a rational argument a (used by half-integer shifts)."""
    a = Fraction(a)
    if a.denominator == 1:
        return qint(a.numerator, d, var)
    top = monomial(var, d * a) - monomial(var, -d * a)
    bot = monomial(var, d) - monomial(var, -d)
    return top / bot


def qfactorial(n, d=1, var="q"):
    """[n]_{q^d}! ; rejects negative n."""
    if n < 0:
        raise ValueError("negative n in qfactorial")
    acc = _ONE
    for j in range(2, n + 1):
        acc = acc * qint(j, d, var)
    return acc


def qbinomial(n, k, d=1, var="q"):
    """Balanced q-binomial [n choose k]_{q^d}, reduced exactly."""
    if n < 0:
        raise ValueError("negative n in qbinomial")
    if k < 0 or k > n:
        raise ValueError("k out of range in qbinomial")
    k = min(k, n - k)
    num, den = _ONE, _ONE
    for j in range(k):
        num = num * qint(n - j, d, var)
        den = den * qint(j + 1, d, var)
    return num / den


# ----------------------------------------------------------------------
# power series expansion at var = 0 (used by stabilization checks)
# ----------------------------------------------------------------------

def series_at_zero(s, order):
    """Laurent expansion of s at var=0 through exponent `order` (in units of
    var^(1/unit)): returns (unit, {int exponent: Fraction})."""
    if s.var is None:
        return 1, ({0: s.coef} if s.coef else {})
    N, D = s.num, s.den
    k = order * s.unit - s.shift
    inv = [Fraction(1, D[0])]
    for i in range(1, max(k + 1, 1)):
        acc = Fraction(0)
        for j in range(1, min(i, len(D) - 1) + 1):
            acc += D[j] * inv[i - j]
        inv.append(-acc / D[0])
    out = {}
    for i in range(min(len(N) + len(inv) - 1, k + 1)):
        acc = Fraction(0)
        for j in range(max(0, i - len(inv) + 1), min(i, len(N) - 1) + 1):
            acc += N[j] * inv[i - j]
        if acc:
            out[i + s.shift] = s.coef * acc
    return s.unit, out


# ----------------------------------------------------------------------
# the scalar field tag
# ----------------------------------------------------------------------

class QField:
    """Field tag shared by a family of modules/operators: symbolic q when
    q0 is None, otherwise q specialized to the nonzero rational q0 (q0=1 is
    the classical case).  All methods return ScalarFn values, so linear
    algebra is uniform across the two modes."""

    def __init__(self, q0=None, var="q"):
        if q0 is not None:
            q0 = Fraction(q0)
            if q0 == 0:
                raise ValueError("q0 must be nonzero")
        self.q0 = q0
        self.var = var
        self.one = _ONE
        self.zero = _ZERO

    @property
    def key(self):
        return (self.var, self.q0)

    def is_symbolic(self):
        return self.q0 is None

    def rat(self, x, y=None):
        return rational(x, y)

    def qpow(self, e):
        """q^e for rational e."""
        e = Fraction(e)
        if self.q0 is None:
            return monomial(self.var, e)
        if self.q0 == 1:
            return _ONE
        r = _nth_root_fraction(self.q0, e.denominator)
        if r is None:
            raise ValueError("q0=%s has no exact %d-th root" % (self.q0, e.denominator))
        return rational(r ** e.numerator)

    def qint(self, n, d=1):
        if self.q0 is None:
            return qint(n, d, self.var)
        return rational(_qint_value(self.q0, n, d))

    def qint_at(self, a, d=1):
        a = Fraction(a)
        if a.denominator == 1:
            return self.qint(a.numerator, d)
        if self.q0 is None:
            return qint_at(a, d, self.var)
        qa = self.qpow(d * a).as_fraction()
        qd = self.qpow(Fraction(d)).as_fraction()
        if qd == 1 / qd:
            raise PoleError("[a] undefined at q0 = +-1 for fractional a")
        return rational((qa - 1 / qa) / (qd - 1 / qd))

    def qfact(self, n, d=1):
        if self.q0 is None:
            return qfactorial(n, d, self.var)
        acc = Fraction(1)
        for j in range(2, n + 1):
            acc *= _qint_value(self.q0, j, d)
        return rational(acc)

    def qbinom(self, n, k, d=1):
        if self.q0 is None:
            return qbinomial(n, k, d, self.var)
        return rational(self.qfact(n, d).as_fraction()
                        / (self.qfact(k, d).as_fraction()
                           * self.qfact(n - k, d).as_fraction()))

    def __repr__(self):
        return "QField(%s)" % ("q" if self.q0 is None else "q=%s" % self.q0)


def _qint_value(q0, n, d):
    if n == 0:
        return Fraction(0)
    qd = q0 ** d
    if qd == 1:
        return Fraction(n)
    if qd == -1:
        # every summand of the balanced sum equals (-1)^(n-1)
        return Fraction(n * (-1) ** ((n - 1) % 2))
    return (qd ** n - qd ** (-n)) / (qd - 1 / qd)


SYMBOLIC_Q = QField()


def deserialize(record, var="q"):
    """Inverse of ScalarFn.serialize (the variable identity is external)."""
    def dec(pairs):
        return laurent(var, {Fraction(e): Fraction(c) for e, c in pairs})
    return dec(record["num"]) / dec(record["den"])
