"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is an integer numerator vector of length phi(N) over one positive
common denominator, reduced modulo the N-th cyclotomic polynomial. Vectors
stay in int64 while a conservative bound says products cannot overflow and
fall back to Python integers (object arrays) otherwise.
"""
import math
import re
from fractions import Fraction
from functools import lru_cache

import numpy as np

_SAFE = 1 << 62


def divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _poly_divexact(num, den):
    """Exact division of integer polynomials (lowest degree first), den monic."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def totient(n):
    return len(cyclotomic_polynomial(n)) - 1


def _absmax(v):
    if len(v) == 0:
        return 0
    if v.dtype == object:
        return max(abs(int(x)) for x in v)
    return int(np.abs(v).max())


def _pack(vec):
    """Canonical storage: int64 when every entry fits, else object."""
    if vec.dtype != object:
        return vec
    if _absmax(vec) < _SAFE:
        return vec.astype(np.int64)
    return vec


def _content(vec):
    if vec.dtype == object:
        g = 0
        for x in vec:
            g = math.gcd(g, int(x))
        return g
    return int(np.gcd.reduce(vec)) if len(vec) else 0


class _Field:
    """Reduction data for one conductor."""

    def __init__(self, n):
        self.n = n
        self.poly = cyclotomic_polynomial(n)
        self.phi = len(self.poly) - 1
        self.root_order = n if n % 2 == 0 else 2 * n
        phi = self.phi
        rows = []
        for a in range(n):
            if a < phi:
                row = [0] * phi
                row[a] = 1
            else:
                prev = rows[-1]
                top = prev[-1]
                row = [0] + prev[:-1]
                for i in range(phi):
                    row[i] -= top * self.poly[i]
            rows.append(row)
        self.pmax = max(abs(x) for row in rows for x in row)
        dtype = np.int64 if self.pmax < (1 << 40) else object
        self.powers = np.array(rows, dtype=dtype).reshape(n, phi)
        self._powers_obj = None
        self._roots = None
        self._lookup = None

    def powers_obj(self):
        if self._powers_obj is None:
            self._powers_obj = self.powers.astype(object)
        return self._powers_obj

    def reduce(self, vec):
        """Reduce a length-n vector (coefficient of x^a at slot a) mod Phi_n."""
        phi = self.phi
        if self.n == phi:
            return vec
        tail = vec[phi:]
        bound = _absmax(tail) * self.pmax * (self.n - phi)
        if vec.dtype != object and self.powers.dtype != object and bound + _absmax(vec[:phi]) < _SAFE:
            return vec[:phi] + tail @ self.powers[phi:]
        vec = vec.astype(object)
        return vec[:phi] + tail.astype(object) @ self.powers_obj()[phi:]

    def reduce_rows(self, mat):
        """Row-wise version of reduce for a (rows, n) array."""
        phi = self.phi
        if self.n == phi:
            return mat
        tail = mat[:, phi:]
        bound = (_absmax(tail.ravel()) * self.pmax * (self.n - phi)
                 + _absmax(mat[:, :phi].ravel()))
        if mat.dtype != object and self.powers.dtype != object and bound < _SAFE:
            if bound < (1 << 52):
                # float matmul is exact below 2**53 and goes through BLAS
                red = tail.astype(np.float64) @ self.powers[phi:].astype(np.float64)
                return mat[:, :phi] + np.rint(red).astype(np.int64)
            return mat[:, :phi] + tail @ self.powers[phi:]
        mat = mat.astype(object)
        return mat[:, :phi] + mat[:, phi:] @ self.powers_obj()[phi:]

    def fold(self, vec, positions):
        out = np.zeros(self.n, dtype=vec.dtype)
        np.add.at(out, positions % self.n, vec)
        return out

    def root_parts(self, e):
        """zeta_R^e as (sign, exponent of zeta_n)."""
        e %= self.root_order
        if self.n % 2 == 0:
            return 1, e
        return (-1 if e % 2 else 1), (e * (self.n + 1) // 2) % self.n

    def root_vector(self, e):
        sign, a = self.root_parts(e)
        return sign * self.powers[a]

    def lookup_root(self, num):
        if self._lookup is None:
            table = {}
            for e in range(self.root_order):
                v = np.asarray(self.root_vector(e), dtype=np.int64)
                table[v.tobytes()] = e
            self._lookup = table
        if num.dtype == object:
            return None
        return self._lookup.get(num.tobytes())


@lru_cache(maxsize=None)
def field(n):
    if n < 1:
        raise ValueError("conductor must be positive")
    return _Field(n)


class Cyclotomic:
    """Immutable element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("conductor", "num", "den", "_root", "_hash")

    def __init__(self, conductor, num, den=1, root=None):
        # trusted constructor: num/den already canonical
        self.conductor = conductor
        self.num = num
        self.den = den
        self._root = root
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def _make(cls, n, num, den=1, root=None):
        if den < 0:
            num, den = -num, -den
        g = math.gcd(_content(num), den)
        if g == 0:
            return cls(n, np.zeros(field(n).phi, dtype=np.int64), 1)
        if g > 1:
            num = num // g
            den //= g
        return cls(n, _pack(num), den, root)

    @classmethod
    def from_rational(cls, q, n=1):
        q = Fraction(q)
        num = np.zeros(field(n).phi, dtype=object)
        num[0] = q.numerator
        return cls._make(n, num, q.denominator)

    @classmethod
    def from_coeffs(cls, coeffs, n):
        """From rational coefficients of any polynomial in zeta_n."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = np.array([int(c * den) for c in coeffs], dtype=object)
        f = field(n)
        vec = f.fold(ints, np.arange(len(ints)))
        return cls._make(n, f.reduce(_pack(vec)), den)

    @classmethod
    def root(cls, n, k):
        f = field(n)
        e = (k * (f.root_order // n)) % f.root_order
        return cls(n, np.asarray(f.root_vector(e), dtype=np.int64), 1, e)

    # accessors --------------------------------------------------------
    @property
    def coeffs(self):
        return tuple(Fraction(int(x), self.den) for x in self.num)

    def root_exponent(self):
        """Exponent e with self = zeta_R^e (R the field's root order), or None."""
        if self._root is None and self.den == 1:
            self._root = field(self.conductor).lookup_root(self.num)
        return self._root

    def is_zero(self):
        return not self.num.any()

    def is_rational(self):
        return not self.num[1:].any()

    def key(self):
        if self.num.dtype == object:
            body = ",".join(str(int(x)) for x in self.num).encode()
        else:
            body = self.num.tobytes()
        return b"%d|%d|" % (self.conductor, self.den) + body

    def to_complex(self):
        z = np.exp(2j * np.pi * np.arange(len(self.num)) / self.conductor)
        return complex(np.dot(self.num.astype(np.float64), z) / self.den)

    # field maps -------------------------------------------------------
    def lift_to(self, n):
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError("conductor %d does not divide %d" % (self.conductor, n))
        f = field(n)
        step = n // self.conductor
        vec = f.fold(self.num, np.arange(len(self.num)) * step)
        root = None
        if self._root is not None:
            root = self._root * (f.root_order // field(self.conductor).root_order)
        return Cyclotomic._make(n, f.reduce(vec), self.den, root)

    def galois(self, t):
        """Automorphism zeta_N -> zeta_N^t (t coprime to N)."""
        n = self.conductor
        f = field(n)
        vec = f.fold(self.num, np.arange(len(self.num)) * t)
        return Cyclotomic._make(n, f.reduce(vec), self.den)

    def conj(self):
        n = self.conductor
        f = field(n)
        vec = f.fold(self.num, -np.arange(len(self.num)))
        root = None if self._root is None else (-self._root) % f.root_order
        return Cyclotomic._make(n, f.reduce(vec), self.den, root)

    def reduce_conductor(self):
        """Same value expressed at the smallest possible conductor."""
        n = self.conductor
        if self.is_rational():
            return Cyclotomic._make(1, self.num[:1].copy(), self.den)
        for d in divisors(n)[1:]:
            if d == n:
                return self
            ts = [t for t in range(1, n) if t % d == 1 % d and math.gcd(t, n) == 1]
            if all(self.galois(t) == self for t in ts):
                return self._descend(d)
        return self

    def _descend(self, d):
        # solve lift(c) = self for c in Q(zeta_d)
        pd = totient(d)
        cols = [Cyclotomic.root(d, i).lift_to(self.conductor) for i in range(pd)]
        rows = len(self.num)
        aug = [[Fraction(int(cols[j].num[r]), cols[j].den) for j in range(pd)]
               + [Fraction(int(self.num[r]), self.den)] for r in range(rows)]
        piv_cols = []
        r = 0
        for c in range(pd):
            p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
            if p is None:
                continue
            aug[r], aug[p] = aug[p], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [x * inv for x in aug[r]]
            for i in range(rows):
                if i != r and aug[i][c] != 0:
                    fac = aug[i][c]
                    aug[i] = [x - fac * y for x, y in zip(aug[i], aug[r])]
            piv_cols.append(c)
            r += 1
        sol = [Fraction(0)] * pd
        for i, c in enumerate(piv_cols):
            sol[c] = aug[i][-1]
        return Cyclotomic.from_coeffs(sol, d)

    # arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction, np.integer)):
            return Cyclotomic.from_rational(other, self.conductor)
        return NotImplemented

    @staticmethod
    def _common(a, b):
        if a.conductor == b.conductor:
            return a, b
        n = math.lcm(a.conductor, b.conductor)
        return a.lift_to(n), b.lift_to(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = Cyclotomic._common(self, other)
        g = math.gcd(a.den, b.den)
        sa, sb = b.den // g, a.den // g
        bound = _absmax(a.num) * sa + _absmax(b.num) * sb
        if a.num.dtype == object or b.num.dtype == object or bound >= _SAFE:
            num = a.num.astype(object) * sa + b.num.astype(object) * sb
        else:
            num = a.num * sa + b.num * sb
        return Cyclotomic._make(a.conductor, num, a.den * sa)

    __radd__ = __add__

    def __neg__(self):
        root = None
        if self._root is not None:
            f = field(self.conductor)
            root = (self._root + f.root_order // 2) % f.root_order
        return Cyclotomic(self.conductor, -self.num, self.den, root)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = Cyclotomic._common(self, other)
        n = a.conductor
        f = field(n)
        ra, rb = a.root_exponent(), b.root_exponent()
        if ra is not None and rb is not None:
            e = (ra + rb) % f.root_order
            return Cyclotomic(n, np.asarray(f.root_vector(e), dtype=np.int64), 1, e)
        if ra is not None or rb is not None:
            e, x = (ra, b) if ra is not None else (rb, a)
            sign, shift = f.root_parts(e)
            vec = f.fold(x.num, np.arange(len(x.num)) + shift)
            return Cyclotomic._make(n, sign * f.reduce(vec), x.den)
        bound = _absmax(a.num) * _absmax(b.num) * len(a.num)
        if a.num.dtype == object or b.num.dtype == object or bound >= _SAFE:
            prod = np.convolve(a.num.astype(object), b.num.astype(object))
        else:
            prod = np.convolve(a.num, b.num)
        vec = f.fold(prod, np.arange(len(prod)))
        return Cyclotomic._make(n, f.reduce(vec), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.conductor
        f = field(n)
        r = self.root_exponent()
        if r is not None:
            e = (-r) % f.root_order
            return Cyclotomic(n, np.asarray(f.root_vector(e), dtype=np.int64), 1, e)
        if self.is_rational():
            return Cyclotomic.from_rational(Fraction(self.den, int(self.num[0])), n)
        a = [Fraction(int(x), self.den) for x in self.num]
        u = _poly_inverse_mod(a, [Fraction(c) for c in f.poly])
        return Cyclotomic.from_coeffs(u, n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, Cyclotomic) else other
        if other is NotImplemented:
            return False
        a, b = Cyclotomic._common(self, other)
        return a.den == b.den and a.key() == b.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.reduce_conductor().key())
        return self._hash

    def __repr__(self):
        return "Cyclotomic(%s)" % format_literal(self)

    def __str__(self):
        return format_literal(self)


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return _poly_trim(q), _poly_trim(a[: len(b) - 1] or [Fraction(0)])


def _poly_sub_mul(a, q, b):
    """a - q*b."""
    prod = [Fraction(0)] * (len(q) + len(b) - 1)
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    size = max(len(a), len(prod))
    out = [(a[i] if i < len(a) else 0) - (prod[i] if i < len(prod) else 0) for i in range(size)]
    return _poly_trim(out)


def _poly_inverse_mod(a, m):
    """u with a*u = 1 mod m via the extended Euclidean algorithm over Q."""
    r0, r1 = list(m), _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0] != 0:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo the cyclotomic polynomial")
    c = r0[0]
    return [x / c for x in s0]


# module-level functional API ---------------------------------------------

def root_of_unity(n, k=1):
    if n < 1:
        raise ValueError("n must be positive")
    return Cyclotomic.root(n, k)


def rational(q, n=1):
    return Cyclotomic.from_rational(q, n)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def inverse(a):
    return a.inverse()


def conj(a):
    return a.conj()


def lift_to(a, n):
    return a.lift_to(n)


def canonical_key(a):
    return a.key()


# literal text format -------------------------------------------------------

_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?(\*)?(?:E\((\d+)\)(?:\^\(?([+-]?\d+)\)?)?)?")


def parse_literal(text, conductor=None):
    """Parse `c*E(n)^k` sums, e.g. '-1/3*E(12)^1 + 2*E(3)^2'."""
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise ValueError("empty cyclotomic literal")
    terms = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, coef, star, n, k = m.groups()
        has_root = n is not None
        if m.end() == pos or (coef is None and not has_root) or (star and not (coef and has_root)):
            raise ValueError("bad cyclotomic literal %r at %d" % (text, pos))
        if pos and sign is None:
            raise ValueError("bad cyclotomic literal %r at %d" % (text, pos))
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        terms.append((c, int(n) if has_root else 1, int(k) if k else (1 if has_root else 0)))
        pos = m.end()
    if any(n < 1 for _, n, _ in terms):
        raise ValueError("root order must be positive in %r" % text)
    big = 1
    for _, n, _ in terms:
        big = math.lcm(big, n)
    if conductor is not None:
        if conductor % big:
            raise ValueError("literal %r does not live at conductor %d" % (text, conductor))
        big = conductor
    total = Cyclotomic.from_rational(0, big)
    for c, n, k in terms:
        total = total + Cyclotomic.root(n, k).lift_to(big) * c
    return total


def format_literal(a):
    n = a.conductor
    parts = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif mag == 1:
            body = "E(%d)^%d" % (n, i)
        else:
            body = "%s*E(%d)^%d" % (mag, n, i)
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out
