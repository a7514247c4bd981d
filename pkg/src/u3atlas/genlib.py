"""Constructors for the generator matrices of the catalog.

Each constructor returns its matrix at the natural conductor of the phases it
uses; the catalog lifts everything to one group conductor before closure.
"""
import math

from .cyclotomic import Cyclotomic, root_of_unity
from .mat3 import Mat3

ZERO = 0


def _z(n, k=1):
    return root_of_unity(n, k)


def _diag(a, b, c):
    return Mat3.from_entries([a, ZERO, ZERO, ZERO, b, ZERO, ZERO, ZERO, c])


def _place(cells):
    """Matrix with the given {(row, col): value} entries, zeros elsewhere."""
    entries = [ZERO] * 9
    for (i, j), v in cells.items():
        entries[3 * i + j] = v
    return Mat3.from_entries(entries)


def gen_E():
    return _place({(0, 1): 1, (1, 2): 1, (2, 0): 1})


def gen_I():
    return _place({(0, 2): -1, (1, 1): -1, (2, 0): -1})


def gen_Iprime():
    return gen_F(0, 1)


def gen_L(n):
    return _diag(1, _z(n, 1), _z(n, -1))


def gen_B(n, k):
    return _diag(_z(n, 1), _z(n, k), _z(n, -1 - k))


def gen_G(n, r):
    return _diag(1, _z(n, -r), _z(n, r))


def _mu(m):
    return _z(3 ** m, 1)


def gen_Em(m):
    mu = _mu(m)
    return _place({(0, 1): mu, (1, 2): mu, (2, 0): mu})


def gen_Zm(m):
    return _place({(0, 2): _mu(m), (1, 0): 1, (2, 1): 1})


def gen_T1(m):
    mu = _mu(m)
    return _diag(1, mu, mu * mu)


def gen_T2(m):
    mu = _mu(m)
    return _diag(1, mu * mu, mu)


def gen_F(m, j):
    xi = -_z(3 ** m * 2 ** j, 1)
    return _place({(0, 2): xi, (1, 1): xi, (2, 0): xi})


def gen_X(i, m):
    mu, w = _mu(m), _z(3, 1)
    if i == 1:
        return _diag(mu * w, mu * w, mu * w * w)
    if i == 2:
        return _diag(mu * w * w, mu * w * w, mu * w)
    if i == 3:
        return _diag(mu, mu, mu)
    raise ValueError("X index must be 1, 2 or 3")


def gen_Y(i, m):
    mu, w = _mu(m), _z(3, 1)
    if i == 1:
        return _diag(mu, mu * w, mu * w * w)
    if i == 2:
        return _diag(mu, mu * w * w, mu * w)
    if i == 3:
        return gen_X(3, m)
    raise ValueError("Y index must be 1, 2 or 3")


def sqrt3():
    return _z(12, 1) - _z(12, 5)


def _dense_prefactor(phase):
    # -i * phase / sqrt(3) = -i * phase * sqrt(3) / 3
    return -_z(12, 3) * phase * sqrt3() / 3


def gen_K():
    w = _z(3, 1)
    w2 = w * w
    pre = _dense_prefactor(Cyclotomic.from_rational(1))
    return Mat3.from_entries([pre * x for x in (1, 1, 1, 1, w, w2, 1, w2, w)])


def gen_Q(m, j):
    w = _z(3, 1)
    w2 = w * w
    pre = _dense_prefactor(_z(3 ** m * 2 ** j, 1))
    return Mat3.from_entries([pre * x for x in (1, w2, w2, w2, w2, 1, 1, w, 1)])


def gen_rvw(form, n, a, b, c):
    """The monomial shapes R, V, W (even) and S, T, U (odd) with phases nu^a, nu^b, nu^c."""
    shapes = {
        "R": ((0, 2), (1, 0), (2, 1)),
        "V": ((0, 1), (1, 2), (2, 0)),
        "W": ((0, 0), (1, 1), (2, 2)),
        "S": ((0, 0), (1, 2), (2, 1)),
        "T": ((0, 2), (1, 1), (2, 0)),
        "U": ((0, 1), (1, 0), (2, 2)),
    }
    if form not in shapes:
        raise ValueError("unknown monomial form %r" % form)
    return _place({cell: _z(n, e) for cell, e in zip(shapes[form], (a, b, c))})


def gen_misc(tag, **p):
    """One-off generators.

    diag11w: diag(1, 1, w); vugpi: diag(xi, xi, xi^2) with xi of order 3*2^j;
    u_diag: diag(nu, nu, nu^2) with nu of order n; mu_T1: mu*T1(m-j+1) with mu of
    order 3^m; jgen96/jgen97/jgen98: the three order-729 diagonal generators.
    """
    w = _z(3, 1)
    if tag == "diag11w":
        return _diag(1, 1, w)
    if tag == "vugpi":
        xi = _z(3 * 2 ** p["j"], 1)
        return _diag(xi, xi, xi * xi)
    if tag == "u_diag":
        nu = _z(p["n"], 1)
        return _diag(nu, nu, nu * nu)
    if tag == "mu_T1":
        m, j = p["m"], p["j"]
        n = math.lcm(3 ** m, 3 ** (m - j + 1))
        return gen_T1(m - j + 1).lift(n) * _mu(m).lift_to(n)
    mt, mh = _z(9, 1), _z(27, 1)
    if tag == "jgen96":
        return _diag(mh * mt * mt, mh * w, mh * w)
    if tag == "jgen97":
        return _diag(mh * w, mh * w * mt, mh * w * mt)
    if tag == "jgen98":
        return _diag(mh * w * w, mh * w * mt, mh * w * mt)
    raise ValueError("unknown generator tag %r" % tag)
