"""Irreducible degrees by the Burnside-Dixon method over a prime field.

Central characters are the simultaneous eigenvectors of the class matrices
(M_i)_{jk} = a_ijk.  We split a random vector into eigen-components with
random combinations of the M_i (minimal polynomial of the vector, roots by
Cantor-Zassenhaus), then read off each degree from

    d^2 = |G| / sum_k w_k w_inv(k) / h_k   (mod p).
"""
import math
from dataclasses import dataclass
from typing import Dict

import numpy as np


class SplitFailure(RuntimeError):
    pass


class NonIntegerDegree(ArithmeticError):
    pass


@dataclass(frozen=True)
class DegreeProfile:
    counts: Dict[int, int]

    def __post_init__(self):
        clean = {int(d): int(c) for d, c in sorted(self.counts.items()) if c}
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_degrees(cls, degrees):
        counts = {}
        for d in degrees:
            counts[int(d)] = counts.get(int(d), 0) + 1
        return cls(counts)

    def order(self):
        return sum(d * d * c for d, c in self.counts.items())

    def class_count(self):
        return sum(self.counts.values())

    def doubled(self):
        return DegreeProfile({d: 2 * c for d, c in self.counts.items()})

    def as_json(self):
        return {str(d): c for d, c in self.counts.items()}

    def __str__(self):
        return "{" + ", ".join("%d:%d" % kv for kv in self.counts.items()) + "}"


@dataclass(frozen=True)
class ClassAlgebra:
    k: int
    h: np.ndarray
    inv: np.ndarray
    a: np.ndarray  # a[i, j, k] = #{(x, y) in C_i x C_j : x y = rep_k}

    def combination(self, c, p):
        """(sum_i c_i M_i) mod p."""
        m = np.zeros((self.k, self.k), dtype=np.int64)
        for i in np.flatnonzero(c):
            m += np.int64(c[i]) * self.a[i].astype(np.int64)
            if i % 64 == 63:
                m %= p
        return m % p


def class_algebra(G, C=None):
    C = C or G.classes
    t, inv = G.table, G.inverses
    n, k = len(G), C.count
    cls = C.class_of
    dtype = np.int16 if n < 2 ** 15 else np.int32
    a = np.zeros((k, k, k), dtype=dtype)
    x = np.arange(n)
    cx = cls[x] * k
    inv_x = inv[x]
    for kk, z in enumerate(C.reps):
        y = t[inv_x, z]
        a[:, :, kk] = np.bincount(cx + cls[y], minlength=k * k).reshape(k, k)
    return ClassAlgebra(k, C.sizes.copy(), C.inverse_class.copy(), a)


# primes ---------------------------------------------------------------------

def is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    f = 17
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6 if f % 6 == 5 else 4
    return True


def _admissible_primes(order, exp):
    bound = 2 * math.isqrt(order)
    p = exp + 1
    while True:
        if p > bound and order % p and is_prime(p):
            yield p
        p += exp


def choose_prime(G, after=None):
    from .engine import exponent

    for p in _admissible_primes(len(G), exponent(G)):
        if after is None or p > after:
            return p


def next_admissible_prime(G, p):
    return choose_prime(G, after=p)


def sqrt_mod(a, p):
    """Tonelli-Shanks; returns r with r^2 = a mod p, or None."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


# polynomials over F_p, lowest degree first ------------------------------------

def _trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if len(nz) else a[:1] * 0


def _deg(a):
    nz = np.flatnonzero(a)
    return int(nz[-1]) if len(nz) else -1


def _pdivmod(a, b, p):
    a = _trim(a % p).copy()
    b = _trim(b % p)
    db = len(b) - 1
    inv_lead = pow(int(b[-1]), p - 2, p)
    if len(a) - 1 < db:
        return np.zeros(1, dtype=np.int64), a
    q = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1, db - 1, -1):
        c = int(a[i]) * inv_lead % p
        if c:
            q[i - db] = c
            a[i - db: i + 1] = (a[i - db: i + 1] - c * b) % p
    return _trim(q), _trim(a[:db] if db else a[:1] * 0)


def _pgcd(a, b, p):
    a, b = _trim(a % p), _trim(b % p)
    while _deg(b) >= 0:
        a, b = b, _pdivmod(a, b, p)[1]
    inv_lead = pow(int(a[-1]), p - 2, p)
    return a * inv_lead % p


class _Modulus:
    """Fast reduction modulo a fixed monic f using a table of x^(d+i) mod f."""

    def __init__(self, f, p):
        self.p = p
        self.f = f
        d = len(f) - 1
        self.d = d
        rows = np.zeros((max(d - 1, 0), d), dtype=np.int64)
        cur = (-f[:d]) % p  # x^d mod f
        for i in range(d - 1):
            rows[i] = cur
            top = cur[-1]
            cur = np.concatenate([[0], cur[:-1]])
            cur = (cur - top * f[:d]) % p
        self.rows = rows

    def reduce(self, a):
        d = self.d
        if len(a) <= d:
            out = np.zeros(d, dtype=np.int64)
            out[: len(a)] = a
            return out % self.p
        low = a[:d] % self.p
        high = a[d:] % self.p
        return (low + high @ self.rows[: len(high)]) % self.p

    def mulmod(self, a, b):
        return self.reduce(np.convolve(a, b) % self.p)

    def powmod(self, base, e):
        result = np.zeros(self.d, dtype=np.int64)
        result[0] = 1
        base = self.reduce(base)
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            base = self.mulmod(base, base)
            e >>= 1
        return result


def poly_roots(f, p, rng):
    """Roots of a squarefree polynomial that splits into linear factors over F_p."""
    f = _trim(np.asarray(f, dtype=np.int64) % p)
    d = _deg(f)
    if d <= 0:
        return []
    f = f * pow(int(f[-1]), p - 2, p) % p
    if d == 1:
        return [int(-f[0]) % p]
    mod = _Modulus(f, p)
    for _ in range(200):
        a = int(rng.integers(0, p))
        h = mod.powmod(np.array([a, 1], dtype=np.int64), (p - 1) // 2)
        h[0] = (h[0] - 1) % p
        g = _pgcd(f, h, p)
        dg = _deg(g)
        if 0 < dg < d:
            rest, rem = _pdivmod(f, g, p)
            if _deg(rem) >= 0:
                raise ArithmeticError("inexact polynomial split")
            return poly_roots(g, p, rng) + poly_roots(rest, p, rng)
    raise SplitFailure("polynomial of degree %d does not split" % d)


# eigenvector splitting ------------------------------------------------------------

def krylov_minpoly(m, v, p):
    """Minimal polynomial f of v under m and the Krylov vectors (columns)."""
    k = len(v)
    basis = np.zeros((k, k), dtype=np.int64)
    combo = np.zeros((k, k + 1), dtype=np.int64)
    pivots = []
    krylov = []
    w = v % p
    t = 0
    while True:
        krylov.append(w)
        r = len(pivots)
        e = np.zeros(k + 1, dtype=np.int64)
        e[t] = 1
        if r:
            coef = w[pivots]
            red = (w - coef @ basis[:r]) % p
            cmb = (e - coef @ combo[:r]) % p
        else:
            red, cmb = w.copy(), e
        nz = np.flatnonzero(red)
        if len(nz) == 0:
            return cmb[: t + 1], np.array(krylov[:t], dtype=np.int64).T
        q = nz[0]
        s = pow(int(red[q]), p - 2, p)
        red = red * s % p
        cmb = cmb * s % p
        if r:
            fac = basis[:r, q].copy()
            basis[:r] = (basis[:r] - fac[:, None] * red) % p
            combo[:r] = (combo[:r] - fac[:, None] * cmb) % p
        basis[r] = red
        combo[r] = cmb
        pivots.append(q)
        w = m @ w % p
        t += 1


def _split_once(m, u, p, rng):
    f, kry = krylov_minpoly(m, u, p)
    if len(f) == 2:
        return [u]
    out = []
    for lam in poly_roots(f, p, rng):
        # f = (x - lam) g; g(M) u is the lam-component of u
        g, rem = _pdivmod(f, np.array([(-lam) % p, 1], dtype=np.int64), p)
        if _deg(rem) >= 0:
            raise ArithmeticError("root does not divide minimal polynomial")
        g = np.concatenate([g, np.zeros(kry.shape[1] - len(g), dtype=np.int64)])
        out.append(kry @ g % p)
    if len(out) != len(f) - 1:
        raise SplitFailure("minimal polynomial is not split over F_p")
    return out


def central_characters(A, p, rng, max_restarts=20, max_stall=4):
    """k normalized simultaneous eigenvectors (identity coordinate 1) mod p."""
    k = A.k
    # The identity-class unit vector has coordinate d^2/|G| (nonzero mod p)
    # on every central character, so no eigenspace is missed from the start.
    start = np.zeros(k, dtype=np.int64)
    start[0] = 1
    for _ in range(max_restarts):
        vectors = [start]
        stall = 0
        while len(vectors) < k and stall < max_stall:
            m = A.combination(rng.integers(0, p, k), p)
            new = []
            for u in vectors:
                new.extend(_split_once(m, u, p, rng))
            stall = stall + 1 if len(new) == len(vectors) else 0
            vectors = new
        if len(vectors) != k:
            continue
        out = []
        for u in vectors:
            if u[0] == 0:
                break
            out.append(u * pow(int(u[0]), p - 2, p) % p)
        else:
            if _check_eigen(A, out, p, rng):
                return out
    raise SplitFailure("class algebra did not split into %d eigenvectors" % k)


def _check_eigen(A, vectors, p, rng):
    c = rng.integers(0, p, A.k)
    m = A.combination(c, p)
    w = np.array(vectors, dtype=np.int64).T
    lam = (c @ w) % p
    return bool(((m @ w - w * lam[None, :]) % p == 0).all())


def degrees_from_characters(vectors, A, order, p):
    bound = math.isqrt(order)
    hinv = np.array([pow(int(h), p - 2, p) for h in A.h], dtype=np.int64)
    degrees = []
    for u in vectors:
        s = int((u * u[A.inv] % p * hinv % p).sum() % p)
        if s == 0:
            raise NonIntegerDegree("degenerate norm for a central character")
        d2 = order * pow(s, p - 2, p) % p
        r = sqrt_mod(d2, p)
        if r is None:
            raise NonIntegerDegree("no square root of %d mod %d" % (d2, p))
        cands = [x for x in {r, (p - r) % p} if 0 < x <= bound and (x * x) % p == d2]
        if len(cands) != 1:
            raise NonIntegerDegree("no unique degree <= %d for %d mod %d" % (bound, d2, p))
        degrees.append(cands[0])
    return degrees


def character_degrees(G, p=None, seed=0):
    if len(G) == 1:
        return DegreeProfile({1: 1})
    A = class_algebra(G)
    if p is None:
        p = choose_prime(G)
    rng = np.random.default_rng(seed)
    vectors = central_characters(A, p, rng)
    return DegreeProfile.from_degrees(degrees_from_characters(vectors, A, len(G), p))


def verify_profile(profile, G=None, order=None, class_count=None, abelian_order=None):
    """The three sum rules against a group (or explicit numbers)."""
    if G is not None:
        from .engine import abelian_invariants

        order = len(G)
        class_count = G.classes.count
        abelian_order = math.prod(abelian_invariants(G))
    counts = profile.counts
    return (sum(d * d * c for d, c in counts.items()) == order
            and sum(counts.values()) == class_count
            and counts.get(1, 0) == abelian_order)
