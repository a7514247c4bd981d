"""3x3 matrices over a single cyclotomic field.

Two internal forms share one interface. Monomial matrices whose nonzero
entries are roots of unity are stored as a permutation plus root exponents,
which keeps the closure of monomial groups cheap. Everything else is a dense
(3, 3, phi) integer array over a common denominator. A dense result that
turns out to be root-monomial is always converted, so keys stay canonical.
"""
import math
from itertools import permutations

import numpy as np

from .cyclotomic import Cyclotomic, _absmax, _content, _pack, _SAFE, field, format_literal, parse_literal

PERM_SIGN = {p: (1 if sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3)) % 2 == 0 else -1)
             for p in permutations(range(3))}


class Mat3:
    __slots__ = ("conductor", "perm", "exps", "arr", "den", "_key", "_dense")

    def __init__(self, conductor, perm=None, exps=None, arr=None, den=1):
        # trusted constructor; use the classmethods
        self.conductor = conductor
        self.perm = perm
        self.exps = exps
        self.arr = arr
        self.den = den
        self._key = None
        self._dense = None

    # construction -----------------------------------------------------
    @classmethod
    def monomial(cls, n, perm, exps):
        r = field(n).root_order
        return cls(n, tuple(int(p) for p in perm), tuple(int(e) % r for e in exps))

    @classmethod
    def identity(cls, n=1):
        return cls.monomial(n, (0, 1, 2), (0, 0, 0))

    @classmethod
    def from_dense(cls, n, arr, den=1):
        """Canonicalize a (3, 3, phi) numerator array over den."""
        if den < 0:
            arr, den = -arr, -den
        flat = arr.reshape(-1)
        g = math.gcd(_content(flat), den)
        if g == 0:
            g = den
        if g > 1:
            arr = arr // g
            den //= g
        arr = _pack(arr.reshape(-1)).reshape(3, 3, -1)
        if den == 1:
            nz = arr.any(axis=2)
            if (nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all():
                f = field(n)
                perm = tuple(int(np.flatnonzero(nz[i])[0]) for i in range(3))
                exps = []
                for i in range(3):
                    e = f.lookup_root(np.ascontiguousarray(arr[i, perm[i]]))
                    if e is None:
                        break
                    exps.append(e)
                else:
                    return cls(n, perm, tuple(exps))
        return cls(n, arr=arr, den=den)

    @classmethod
    def from_entries(cls, entries, conductor=None):
        """From 9 values (row-major, or 3 rows of 3); ints and Fractions allowed."""
        flat = [x for row in entries for x in row] if len(entries) == 3 else list(entries)
        if len(flat) != 9:
            raise ValueError("need 9 entries")
        cyc = [x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x) for x in flat]
        n = conductor or 1
        for c in cyc:
            n = math.lcm(n, c.conductor)
        if conductor is not None and n != conductor:
            raise ValueError("entries do not live at conductor %d" % conductor)
        cyc = [c.lift_to(n) for c in cyc]
        den = 1
        for c in cyc:
            den = den * c.den // math.gcd(den, c.den)
        phi = field(n).phi
        big = any(c.num.dtype == object for c in cyc) or max(_absmax(c.num) * (den // c.den) for c in cyc) >= _SAFE
        arr = np.zeros((9, phi), dtype=object if big else np.int64)
        for i, c in enumerate(cyc):
            arr[i] = c.num * (den // c.den)
        return cls.from_dense(n, arr.reshape(3, 3, phi), den)

    # views ------------------------------------------------------------
    @property
    def is_monomial_form(self):
        return self.perm is not None

    def dense(self):
        """(numerator array, den) regardless of form."""
        if self.perm is None:
            return self.arr, self.den
        if self._dense is None:
            f = field(self.conductor)
            arr = np.zeros((3, 3, f.phi), dtype=np.int64)
            for i in range(3):
                arr[i, self.perm[i]] = f.root_vector(self.exps[i])
            self._dense = arr
        return self._dense, 1

    def entry(self, i, j):
        n = self.conductor
        if self.perm is not None:
            if self.perm[i] != j:
                return Cyclotomic.from_rational(0, n)
            f = field(n)
            e = self.exps[i]
            return Cyclotomic(n, np.asarray(f.root_vector(e), dtype=np.int64), 1, e)
        return Cyclotomic._make(n, self.arr[i, j].copy(), self.den)

    def entries(self):
        return [self.entry(i, j) for i in range(3) for j in range(3)]

    def rows(self):
        return [[self.entry(i, j) for j in range(3)] for i in range(3)]

    def key(self):
        if self._key is None:
            if self.perm is not None:
                self._key = b"M" + bytes(self.perm) + np.asarray(self.exps, dtype=np.int64).tobytes()
            elif self.arr.dtype == object:
                self._key = b"D%d|" % self.den + ",".join(str(int(x)) for x in self.arr.ravel()).encode()
            else:
                self._key = b"D%d|" % self.den + self.arr.tobytes()
        return self._key

    def to_complex(self):
        return np.array([[c.to_complex() for c in row] for row in self.rows()])

    # algebra ----------------------------------------------------------
    def __matmul__(self, other):
        if self.conductor != other.conductor:
            n = math.lcm(self.conductor, other.conductor)
            return self.lift(n) @ other.lift(n)
        n = self.conductor
        if self.perm is not None and other.perm is not None:
            r = field(n).root_order
            pa, pb = self.perm, other.perm
            return Mat3(n, (pb[pa[0]], pb[pa[1]], pb[pa[2]]),
                        ((self.exps[0] + other.exps[pa[0]]) % r,
                         (self.exps[1] + other.exps[pa[1]]) % r,
                         (self.exps[2] + other.exps[pa[2]]) % r))
        a, da = self.dense()
        b, db = other.dense()
        return Mat3.from_dense(n, _dense_product(n, a, b), da * db)

    def __mul__(self, c):
        """Scalar multiple."""
        c = c if isinstance(c, Cyclotomic) else Cyclotomic.from_rational(c, self.conductor)
        if c.conductor != self.conductor:
            n = math.lcm(self.conductor, c.conductor)
            if n != self.conductor:
                return self.lift(n) * c.lift_to(n)
            c = c.lift_to(n)
        n = self.conductor
        e = c.root_exponent()
        if self.perm is not None and e is not None:
            return Mat3.monomial(n, self.perm, [x + e for x in self.exps])
        return Mat3.from_entries([x * c for x in self.entries()], n)

    __rmul__ = __mul__

    def __neg__(self):
        return self * Cyclotomic.from_rational(-1, self.conductor)

    def __pow__(self, k):
        if k < 0:
            return self.conj_transpose() ** (-k)
        result = Mat3.identity(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        if self.conductor != other.conductor:
            n = math.lcm(self.conductor, other.conductor)
            return self.lift(n) == other.lift(n)
        return self.key() == other.key()

    def __hash__(self):
        # entries hash by their minimal field, so equal matrices at different
        # conductors agree; closures index by key() instead
        return hash(tuple(self.entries()))

    def lift(self, n):
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError("conductor %d does not divide %d" % (self.conductor, n))
        if self.perm is not None:
            step = field(n).root_order // field(self.conductor).root_order
            return Mat3.monomial(n, self.perm, [e * step for e in self.exps])
        f = field(n)
        step = n // self.conductor
        rows = self.arr.reshape(9, -1)
        out = np.zeros((9, n), dtype=rows.dtype)
        out[:, np.arange(rows.shape[1]) * step] = rows
        return Mat3.from_dense(n, f.reduce_rows(out).reshape(3, 3, -1), self.den)

    def conj_transpose(self):
        n = self.conductor
        if self.perm is not None:
            inv = [0, 0, 0]
            exps = [0, 0, 0]
            for i in range(3):
                inv[self.perm[i]] = i
                exps[self.perm[i]] = -self.exps[i]
            return Mat3.monomial(n, inv, exps)
        f = field(n)
        rows = self.arr.transpose(1, 0, 2).reshape(9, -1)
        out = np.zeros((9, n), dtype=rows.dtype)
        out[:, (-np.arange(rows.shape[1])) % n] = rows
        return Mat3.from_dense(n, f.reduce_rows(out).reshape(3, 3, -1), self.den)

    def det(self):
        n = self.conductor
        if self.perm is not None:
            f = field(n)
            e = (sum(self.exps) + (0 if PERM_SIGN[self.perm] == 1 else f.root_order // 2)) % f.root_order
            return Cyclotomic(n, np.asarray(f.root_vector(e), dtype=np.int64), 1, e)
        a = self.rows()
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))

    def trace(self):
        total = self.entry(0, 0) + self.entry(1, 1)
        return total + self.entry(2, 2)

    def is_unitary(self):
        if self.perm is not None:
            return True
        return (self @ self.conj_transpose()) == Mat3.identity(self.conductor)

    def monomial_decompose(self):
        """(perm, phases) if exactly one nonzero per row and column, else None."""
        if self.perm is not None:
            return self.perm, tuple(self.entry(i, self.perm[i]) for i in range(3))
        nz = self.arr.any(axis=2)
        if not ((nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all()):
            return None
        perm = tuple(int(np.flatnonzero(nz[i])[0]) for i in range(3))
        return perm, tuple(self.entry(i, perm[i]) for i in range(3))

    def __repr__(self):
        return "Mat3(%s)" % to_json(self)


def _dense_product(n, a, b):
    f = field(n)
    phi = f.phi
    big = a.dtype == object or b.dtype == object or \
        _absmax(a.ravel()) * _absmax(b.ravel()) * 3 * phi >= _SAFE
    dt = object if big else np.int64
    a = a.astype(dt, copy=False)
    b = b.astype(dt, copy=False)
    width = 2 * phi - 1
    prod = np.zeros((3, 3, width), dtype=dt)
    for i in range(3):
        for j in range(3):
            row = a[i, j]
            if not row.any():
                continue
            for k in range(3):
                col = b[j, k]
                if col.any():
                    prod[i, k] += np.convolve(row, col)
    prod = prod.reshape(9, width)
    if width > n:
        folded = prod[:, :n].copy()
        folded[:, : width - n] += prod[:, n:]
    else:
        folded = np.zeros((9, n), dtype=dt)
        folded[:, :width] = prod
    return f.reduce_rows(folded).reshape(3, 3, phi)


# functional API ---------------------------------------------------------

def identity(n=1):
    return Mat3.identity(n)


def mat_mul(a, b):
    return a @ b


def det(a):
    return a.det()


def trace(a):
    return a.trace()


def conj_transpose(a):
    return a.conj_transpose()


def is_unitary(a):
    return a.is_unitary()


def mat_key(a):
    return a.key()


def monomial_decompose(a):
    return a.monomial_decompose()


def is_even_perm(perm):
    return PERM_SIGN[tuple(perm)] == 1


def diag(a, b, c, n=None):
    z = 0
    return Mat3.from_entries([a, z, z, z, b, z, z, z, c], n)


def to_json(a):
    return [[format_literal(x) for x in row] for row in a.rows()]


def from_json(rows, conductor=None):
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("matrix must be 3 rows of 3 entries")
    return Mat3.from_entries([parse_literal(x) for row in rows for x in row], conductor)
