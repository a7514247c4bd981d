"""Declarative catalog of the finite U(3) and SU(3) groups below order 2000.

Each series carries its parameter names, a generator recipe, the order
formula, the irrep-count formula and the transcribed table rows (parameters
plus the SmallGroups index j). `enumerate` turns rows into CatalogEntry
objects; `verify_entry` rebuilds the group and checks it against the entry.
"""
import math
import re
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Tuple

from . import genlib as gl
from .chardeg import DegreeProfile, character_degrees, verify_profile
from .cyclotomic import root_of_unity
from .engine import (DEFAULT_CAP, MONOMIAL_STU, NON_MONOMIAL, RVW, abelian_invariants, closure,
                     det_image_order, has_cyclic_direct_factor, is_subgroup_of_su3, monomial_class)

PARAM_NAMES = ("n", "l", "r", "k", "m", "j")
SERIES_ALIASES = {"C": "Cnl", "D": "D3ll"}


class InvalidSpec(ValueError):
    pass


# -- parameter arithmetic -------------------------------------------------

def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_six_one_product(r):
    """r > 1 and every prime factor is 1 mod 6."""
    return r > 1 and all(p % 6 == 1 for p in _prime_factors(r))


def _k_values(r):
    return [k for k in range(1, (r - 1) // 2 + 1) if (1 + k + k * k) % r == 0]


def rk_pairs(max_r):
    """All (r, k) with r <= max_r built from primes 1 mod 6 and 1 + k + k^2 = 0 mod r."""
    return [(r, k) for r in range(7, max_r + 1) if _is_six_one_product(r) for k in _k_values(r)]


def _c_group_r_kind(r):
    """1 for a product of primes 1 mod 6, 2 for three times such a product (or 3), else 0."""
    if _is_six_one_product(r):
        return 1
    if r % 3 == 0 and (r == 3 or _is_six_one_product(r // 3)):
        return 2
    return 0


def c_group_parameters(max_order):
    """(r, k, l) with 3 r l^2 < max_order; l must be a multiple of 3 when r is."""
    out = []
    r = 3
    while 3 * r < max_order:
        kind = _c_group_r_kind(r)
        if kind:
            step = 3 if kind == 2 else 1
            for k in _k_values(r):
                l = step
                while 3 * r * l * l < max_order:
                    out.append((r, k, l))
                    l += step
        r += 1
    return sorted(out)


def _rk_ok(r, k):
    return r >= 7 and _is_six_one_product(r) and k in _k_values(r)


# -- generator shorthands --------------------------------------------------

def _neg_F(m, j):
    return -gl.gen_F(m, j)


def _iQ(m, j):
    return gl.gen_Q(m, j) * root_of_unity(4, 1)


_SPORADIC_GENS = {
    "Sporadic729": {
        "96": lambda: [gl.gen_Zm(1), gl.gen_misc("jgen96")],
        "97": lambda: [gl.gen_Zm(1), gl.gen_misc("jgen97")],
        "98": lambda: [gl.gen_Zm(1), gl.gen_misc("jgen98")],
    },
    "Sporadic972": {
        "170": lambda: [gl.gen_L(2), gl.gen_Zm(2), gl.gen_misc("diag11w")],
    },
    "Sporadic1458": {
        "663": lambda: [gl.gen_E(), gl.gen_L(3), gl.gen_I(), gl.gen_misc("jgen97")],
        "666": lambda: [gl.gen_E(), gl.gen_L(3), gl.gen_I(), gl.gen_misc("jgen98")],
    },
    "Sporadic1701": {
        "112": lambda: [gl.gen_B(7, 2), gl.gen_E(), gl.gen_X(2, 3), gl.gen_T1(1)],
        "130": lambda: [gl.gen_B(7, 2), gl.gen_E(), gl.gen_X(2, 2), gl.gen_T1(2)],
        "131": lambda: [gl.gen_B(7, 2), gl.gen_E(), gl.gen_X(2, 2), gl.gen_T2(2)],
    },
}


# -- irrep-count formulas --------------------------------------------------
# Each returns (known counts, dimension that absorbs the rest or None).

def _singlets_rest_triplets(s):
    return {1: s}, 3


def _delta6_like(n, singlets, triplets, doublets_if_coprime, doublets_if_three):
    doublets = doublets_if_three if n % 3 == 0 else doublets_if_coprime
    return {1: singlets, 2: doublets, 3: triplets}, 6


def _z_nmj_profile(n, m, j):
    t = 3 ** (m - 1)
    return {1: t * 2 ** j, 2: t * 2 ** j // 2, 3: (n - 1) * t * 2 ** j}, 6


def _xi_profile(m, j):
    t = 3 ** (m - 1)
    return {1: t * 2 ** j, 3: t * 2 ** (j + 1), 4: t * 2 ** j // 2}, None


def _pi_profile(m, j):
    t = 3 ** (m - 1) * 2 ** j
    return {1: 2 * t, 2: t // 2, 3: 4 * t, 6: t, 8: t // 2}, None


def _upsilon_profile(m):
    t = 3 ** (m - 2)
    return {1: 3 * t, 2: 3 * t, 3: 7 * t, 6: 6 * t, 8: 3 * t, 9: 2 * t}, None


def _complete(order, known, rest):
    counts = dict(known)
    left = order - sum(d * d * c for d, c in counts.items())
    if rest is None:
        if left != 0:
            raise ValueError("irrep counts do not sum to the order")
        return DegreeProfile(counts)
    if left < 0 or left % (rest * rest):
        raise ValueError("remainder %d is not a multiple of %d^2" % (left, rest))
    counts[rest] = counts.get(rest, 0) + left // (rest * rest)
    return DegreeProfile(counts)


# -- series table ---------------------------------------------------------

@dataclass(frozen=True)
class _Series:
    name: str
    label: str
    params: Tuple[str, ...]
    generators: Callable
    order: Callable
    profile: Optional[Callable]
    shape: str
    check: Callable
    rows: tuple
    su3: bool = False
    variants: Tuple[str, ...] = ()


def _row(params, j, **extra):
    return (tuple(params), j, extra)


def _rows(pairs):
    return tuple(_row(p, j) for p, j in pairs)


def _need(cond, msg):
    return None if cond else msg


def _all(*msgs):
    for m in msgs:
        if m:
            return m
    return None


# Transcribed C-group indices: (r, k, l) -> j, order 3 r l^2.
C_GROUP_IDS = {
    (3, 1, 3): 9, (3, 1, 6): 50, (3, 1, 9): 95, (3, 1, 12): 228, (7, 2, 1): 1,
    (7, 2, 2): 11, (7, 2, 3): 8, (7, 2, 4): 57, (7, 2, 5): 5, (7, 2, 6): 117,
    (7, 2, 7): 9, (7, 2, 8): 393, (7, 2, 9): 135, (13, 3, 1): 1, (13, 3, 2): 14,
    (13, 3, 3): 8, (13, 3, 4): 60, (13, 3, 5): 5, (13, 3, 6): 141, (13, 3, 7): 14,
    (19, 7, 1): 1, (19, 7, 2): 11, (19, 7, 3): 9, (19, 7, 4): 57, (19, 7, 5): 5,
    (21, 4, 3): 13, (31, 5, 1): 1, (31, 5, 2): 11, (31, 5, 3): 8, (31, 5, 4): 57,
    (37, 10, 1): 1, (37, 10, 2): 14, (37, 10, 3): 9, (37, 10, 4): 60, (39, 16, 3): 35,
    (43, 6, 1): 1, (43, 6, 2): 11, (43, 6, 3): 9, (49, 18, 1): 1, (49, 18, 2): 11,
    (49, 18, 3): 8, (57, 7, 3): 35, (61, 13, 1): 1, (61, 13, 2): 14, (61, 13, 3): 9,
    (67, 29, 1): 1, (67, 29, 2): 11, (67, 29, 3): 9, (73, 8, 1): 1, (73, 8, 2): 14,
    (73, 8, 3): 9, (79, 23, 1): 1, (79, 23, 2): 11, (91, 9, 1): 4, (91, 9, 2): 68,
    (91, 16, 1): 3, (91, 16, 2): 69, (97, 35, 1): 1, (97, 35, 2): 14, (103, 46, 1): 1,
    (103, 46, 2): 11, (109, 45, 1): 1, (109, 45, 2): 14, (127, 19, 1): 1,
    (127, 19, 2): 11, (133, 11, 1): 3, (133, 11, 2): 55, (133, 30, 1): 4,
    (133, 30, 2): 56, (139, 42, 1): 1, (139, 42, 2): 11, (151, 32, 1): 1,
    (151, 32, 2): 11, (157, 12, 1): 1, (157, 12, 2): 14, (163, 58, 1): 1,
    (163, 58, 2): 11, (169, 22, 1): 1, (181, 48, 1): 1, (193, 84, 1): 1,
    (199, 92, 1): 1, (211, 14, 1): 1, (217, 25, 1): 3, (217, 67, 1): 4,
    (223, 39, 1): 1, (229, 94, 1): 1, (241, 15, 1): 1, (247, 68, 1): 4,
    (247, 87, 1): 3, (259, 100, 1): 4, (259, 121, 1): 3, (271, 28, 1): 1,
    (277, 116, 1): 1, (283, 44, 1): 1, (301, 79, 1): 6, (301, 135, 1): 5,
    (307, 17, 1): 1, (313, 98, 1): 1, (331, 31, 1): 1, (337, 128, 1): 1,
    (343, 18, 1): 6, (349, 122, 1): 1, (361, 68, 1): 1, (367, 83, 1): 1,
    (373, 88, 1): 1, (379, 51, 1): 1, (397, 34, 1): 1, (403, 87, 1): 3,
    (403, 191, 1): 4, (409, 53, 1): 1, (421, 20, 1): 1, (427, 74, 1): 4,
    (427, 135, 1): 3, (433, 198, 1): 1, (439, 171, 1): 1, (457, 133, 1): 1,
    (463, 21, 1): 1, (469, 37, 1): 4, (469, 163, 1): 3, (481, 100, 1): 3,
    (481, 211, 1): 4, (487, 232, 1): 1, (499, 139, 1): 1, (511, 81, 1): 4,
    (511, 137, 1): 3, (523, 60, 1): 1, (541, 129, 1): 1, (547, 40, 1): 1,
    (553, 23, 1): 3, (553, 102, 1): 4, (559, 165, 1): 3, (559, 178, 1): 4,
    (571, 109, 1): 1, (577, 213, 1): 1, (589, 87, 1): 3, (589, 273, 1): 4,
    (601, 24, 1): 1, (607, 210, 1): 1, (613, 65, 1): 1, (619, 252, 1): 1,
    (631, 43, 1): 1, (637, 165, 1): 3, (637, 263, 1): 4, (643, 177, 1): 1,
    (661, 296, 1): 1,
}

_S = []


def _series(*args, **kw):
    _S.append(_Series(*args, **kw))


_series("Delta3n2", "Delta(3n^2)", ("n",),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"])],
        lambda p: 3 * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(9 if p["n"] % 3 == 0 else 3),
        RVW, lambda p: _need(p["n"] >= 2, "n >= 2"),
        _rows(((n,), j) for n, j in zip(range(2, 26), (
            3, 3, 3, 2, 22, 5, 3, 26, 43, 2, 103, 5, 60, 12, 1083477, 2, 122, 5, 384, 43, 34, 2,
            1291, 16))),
        su3=True)

_series("Delta6n2", "Delta(6n^2)", ("n",),
        lambda p: [gl.gen_E(), gl.gen_I(), gl.gen_L(p["n"])],
        lambda p: 6 * p["n"] ** 2,
        lambda p: _delta6_like(p["n"], 2, 2 * (p["n"] - 1), 1, 4),
        MONOMIAL_STU, lambda p: _need(p["n"] >= 2, "n >= 2"),
        _rows(((n,), j) for n, j in zip(range(2, 19), (
            12, 8, 64, 5, 95, 7, 568, 61, 179, 5, 701, 7, 243, 46, 408544632, 5, 849))),
        su3=True)

_series("Cnl", "C_{rl,l}^(k)", ("r", "k", "l"),
        lambda p: [gl.gen_E(), gl.gen_B(p["r"] * p["l"], p["k"]),
                   gl.gen_G(p["r"] * p["l"], p["r"])],
        lambda p: 3 * p["r"] * p["l"] ** 2,
        lambda p: _singlets_rest_triplets(9 if p["l"] % 3 == 0 else 3),
        RVW,
        lambda p: _all(_need(_c_group_r_kind(p["r"]) > 0, "r must be a product of primes 1 mod 6, or 3 times one"),
                       _need(p["k"] in _k_values(p["r"]), "1 + k + k^2 = 0 mod r with k <= (r-1)/2"),
                       _need(p["l"] >= 1, "l >= 1"),
                       _need(_c_group_r_kind(p["r"]) == 1 or p["l"] % 3 == 0, "l must be a multiple of 3")),
        (), su3=True)

_series("D3ll", "D_{3l,l}^(1)", ("l",),
        lambda p: [gl.gen_E(), gl.gen_I(), gl.gen_B(3 * p["l"], 1)],
        lambda p: 18 * p["l"] ** 2,
        lambda p: ({1: 6, 2: 3, 3: 6 * (p["l"] - 1)}, 6),
        MONOMIAL_STU, lambda p: _need(p["l"] % 3 == 0 and p["l"] > 0, "l must be a positive multiple of 3"),
        _rows((((3,), 14), ((6,), 259), ((9,), 659))), su3=True)

_RK = lambda p: _need(_rk_ok(p["r"], p["k"]), "(r, k) must satisfy 1 + k + k^2 = 0 mod r")

_series("T", "T_r^(k)(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_Em(p["m"])],
        lambda p: 3 ** p["m"] * p["r"],
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, lambda p: _all(_RK(p), _need(p["m"] > 1, "m > 1")),
        _rows((
            ((7, 2, 2), 1), ((7, 2, 3), 1), ((7, 2, 4), 1), ((7, 2, 5), 68), ((13, 3, 2), 1),
            ((13, 3, 3), 1), ((13, 3, 4), 16), ((19, 7, 2), 1), ((19, 7, 3), 1), ((19, 7, 4), 16),
            ((31, 5, 2), 1), ((31, 5, 3), 1), ((37, 10, 2), 1), ((37, 10, 3), 1), ((43, 6, 2), 1),
            ((43, 6, 3), 6), ((49, 18, 2), 1), ((49, 18, 3), 1), ((61, 13, 2), 1), ((61, 13, 3), 6),
            ((67, 29, 2), 1), ((67, 29, 3), 6), ((73, 8, 2), 1), ((73, 8, 3), 6), ((79, 23, 2), 1),
            ((91, 9, 2), 4), ((91, 16, 2), 3), ((97, 35, 2), 1), ((103, 46, 2), 1), ((109, 45, 2), 1),
            ((127, 19, 2), 1), ((133, 11, 2), 3), ((133, 30, 2), 4), ((139, 42, 2), 1),
            ((151, 32, 2), 1), ((157, 12, 2), 1), ((163, 58, 2), 1), ((169, 22, 2), 1),
            ((181, 48, 2), 1), ((193, 84, 2), 1), ((199, 92, 2), 1), ((211, 14, 2), 1),
            ((217, 25, 2), 3), ((217, 67, 2), 4))))

_series("Delta3n2m", "Delta(3n^2,m)", ("n", "m"),
        lambda p: [gl.gen_L(p["n"]), gl.gen_Em(p["m"])],
        lambda p: 3 ** p["m"] * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, lambda p: _all(_need(p["n"] % 3 != 0, "n cannot be divisible by 3"), _need(p["m"] > 1, "m > 1")),
        _rows((
            ((2, 2), 3), ((2, 3), 3), ((2, 4), 3), ((2, 5), 3), ((4, 2), 3), ((4, 3), 3), ((4, 4), 3),
            ((5, 2), 3), ((5, 3), 5), ((7, 2), 7), ((7, 3), 14), ((8, 2), 3), ((8, 3), 3),
            ((10, 2), 66), ((11, 2), 3), ((13, 2), 7), ((14, 2), 91))))

_series("S4j", "S_4(j)", ("j",),
        lambda p: [gl.gen_E(), gl.gen_L(2), _neg_F(0, p["j"])],
        lambda p: 3 * 2 ** (p["j"] + 2),
        lambda p: ({1: 2 ** p["j"], 2: 2 ** (p["j"] - 1), 3: 2 ** p["j"]}, None),
        MONOMIAL_STU, lambda p: _need(p["j"] > 1, "j > 1"),
        _rows((((2,), 30), ((3,), 65), ((4,), 186), ((5,), 581), ((6,), 1085351), ((7,), 408544687))))

_series("Delta6n2j", "Delta(6n^2,j)", ("n", "j"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), _neg_F(0, p["j"])],
        lambda p: 3 * 2 ** p["j"] * p["n"] ** 2,
        lambda p: _delta6_like(p["n"], 2 ** p["j"], 2 ** p["j"] * (p["n"] - 1),
                               2 ** (p["j"] - 1), 2 ** (p["j"] + 1)),
        MONOMIAL_STU, lambda p: _all(_need(p["n"] > 2, "n > 2 (n = 2 is S4(j))"), _need(p["j"] > 1, "j > 1")),
        _rows((
            ((3, 2), 11), ((3, 3), 17), ((3, 4), 33), ((3, 5), 69), ((3, 6), 185), ((4, 2), 182),
            ((4, 3), 571), ((4, 4), 1085333), ((4, 5), 408544678), ((5, 2), 13), ((5, 3), 45),
            ((5, 4), 183), ((6, 2), 260), ((6, 3), 703), ((6, 4), 2855), ((7, 2), 16), ((7, 3), 57),
            ((8, 2), 1085335), ((8, 3), 408544641), ((9, 2), 64), ((9, 3), 70), ((10, 2), 682),
            ((11, 2), 11), ((12, 2), 2847))))

_series("DeltaPrime", "Delta'(6n^2,m,j)", ("n", "m", "j"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), _neg_F(p["m"], p["j"])],
        lambda p: 3 ** p["m"] * 2 ** p["j"] * p["n"] ** 2,
        lambda p: ({1: 3 ** (p["m"] - 1) * 2 ** p["j"], 2: 3 ** (p["m"] - 1) * 2 ** (p["j"] + 1),
                    3: (p["n"] - 1) * 3 ** (p["m"] - 1) * 2 ** p["j"]}, 6),
        MONOMIAL_STU,
        lambda p: _all(_need(p["n"] % 3 == 0, "n must be divisible by 3"), _need(p["m"] >= 2, "m >= 2"),
                       _need(p["j"] >= 1, "j >= 1")),
        _rows((
            ((3, 2, 1), 44), ((3, 2, 2), 102), ((3, 2, 3), 244), ((3, 2, 4), 647), ((3, 3, 1), 164),
            ((3, 3, 2), 348), ((3, 3, 3), 746), ((3, 4, 1), 1354), ((6, 2, 1), 563), ((6, 2, 2), 2113),
            ((6, 3, 1), 2415), ((9, 2, 1), 1371))))

_series("Lrknm", "L_r^(k)(n,m)", ("r", "k", "n", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_L(p["n"]), gl.gen_Em(p["m"])],
        lambda p: 3 ** p["m"] * p["r"] * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, lambda p: _all(_RK(p), _need(p["n"] % 3 != 0, "n cannot be divisible by 3"), _need(p["m"] > 1, "m > 1")),
        _rows((
            ((7, 2, 2, 2), 11), ((7, 2, 2, 3), 11), ((7, 2, 4, 2), 57), ((7, 2, 5, 2), 7),
            ((13, 3, 2, 2), 14), ((13, 3, 2, 3), 14), ((13, 3, 4, 2), 60), ((19, 7, 2, 2), 11),
            ((31, 5, 2, 2), 11), ((37, 10, 2, 2), 14), ((43, 6, 2, 2), 11), ((49, 18, 2, 2), 11))))

_PQ_PARAMS = ((7, 2, 2), (13, 3, 2), (19, 7, 2), (31, 5, 2), (37, 10, 2), (43, 6, 2), (49, 18, 2),
              (61, 13, 2), (67, 29, 2), (73, 8, 2), (7, 2, 3), (13, 3, 3), (19, 7, 3), (7, 2, 4))
_PQ_CHECK = lambda p: _all(_RK(p), _need(p["m"] > 1, "m > 1"))

_series("P", "P_r^(k)(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_L(3), gl.gen_Zm(p["m"] - 1)],
        lambda p: 3 ** (p["m"] + 1) * p["r"],
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _PQ_CHECK,
        _rows(zip(_PQ_PARAMS, (7, 7, 8, 7, 8, 12, 7, 17, 17, 17, 7, 27, 27, 128))))

_series("Q", "Q_r^(k)(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_E(), gl.gen_Y(1, p["m"])],
        lambda p: 3 ** (p["m"] + 1) * p["r"],
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _PQ_CHECK,
        _rows(zip(_PQ_PARAMS, (4, 4, 5, 5, 6, 10, 4, 10, 10, 11, 4, 26, 26, 127))))

_series("Qprime", "Q_r^(k)'(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_E(), gl.gen_Y(2, p["m"])],
        lambda p: 3 ** (p["m"] + 1) * p["r"],
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _PQ_CHECK,
        _rows(zip(_PQ_PARAMS, (5, 5, 6, 4, 5, 11, 5, 11, 11, 10, 5, 25, 25, 126))))

_series("Xn", "X(n)", ("n",),
        lambda p: [gl.gen_L(p["n"]), gl.gen_Zm(1)],
        lambda p: 3 * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(9),
        RVW, lambda p: _need(p["n"] % 3 == 0 and p["n"] > 0, "n must be a positive multiple of 3"),
        _rows(zip(((n,) for n in range(3, 25, 3)), (4, 21, 27, 102, 11, 123, 42, 1290))))

_SYV_PARAMS = ((7, 2, 2), (13, 3, 2), (19, 7, 2), (7, 2, 3))
_SYV_CHECK = lambda p: _all(_RK(p), _need(p["m"] >= 2, "m >= 2"))

_series("S", "S_r^(k)(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_E(), gl.gen_L(3), gl.gen_X(3, p["m"])],
        lambda p: 3 ** (p["m"] + 2) * p["r"],
        lambda p: _singlets_rest_triplets(3 ** (p["m"] + 1)),
        RVW, _SYV_CHECK, _rows(zip(_SYV_PARAMS, (36, 47, 47, 240))))

_series("Sprime", "S_r^(k)'(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_E(), gl.gen_L(3), gl.gen_X(1, p["m"])],
        lambda p: 3 ** (p["m"] + 2) * p["r"],
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _SYV_CHECK, _rows(zip(_SYV_PARAMS, (12, 32, 32, 115))))

_series("Yrk", "Y_r^(k)(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_E(), gl.gen_X(1, p["m"] - 1), gl.gen_X(3, p["m"] - 1)],
        lambda p: 3 ** (p["m"] + 2) * p["r"],
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _SYV_CHECK, _rows(zip(_SYV_PARAMS, (23, 29, 29, 261))))

_series("Vrk", "V_r^(k)(m)", ("r", "k", "m"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_X(2, 2), gl.gen_Zm(1), gl.gen_L(3 ** (p["m"] - 1))],
        lambda p: 3 ** (p["m"] + 2) * p["r"],
        lambda p: _singlets_rest_triplets(9),
        RVW, _SYV_CHECK, _rows(zip(_SYV_PARAMS, (14, 37, 37, 138))))

_MJ_CHECK = _RK

_series("M", "M_r^(k)", ("r", "k"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_L(2), gl.gen_E(), gl.gen_Y(1, 2)],
        lambda p: 108 * p["r"],
        lambda p: _singlets_rest_triplets(9),
        RVW, _MJ_CHECK, _rows((((7, 2), 113), ((13, 3), 137))))

_series("Mprime", "M_r^(k)'", ("r", "k"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_L(2), gl.gen_E(), gl.gen_Y(2, 2)],
        lambda p: 108 * p["r"],
        lambda p: _singlets_rest_triplets(9),
        RVW, _MJ_CHECK, _rows((((7, 2), 114), ((13, 3), 138))))

_series("Jrk", "J_r^(k)", ("r", "k"),
        lambda p: [gl.gen_B(p["r"], p["k"]), gl.gen_L(2), gl.gen_L(3), gl.gen_Zm(1)],
        lambda p: 108 * p["r"],
        lambda p: _singlets_rest_triplets(9),
        RVW, _MJ_CHECK, _rows((((7, 2), 116), ((13, 3), 140))))

_series("Wnm", "W(n,m)", ("n", "m"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_Y(1, p["m"])],
        lambda p: 3 ** (p["m"] + 1) * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, lambda p: _all(_need(p["n"] % 3 != 0, "n cannot be divisible by 3"), _need(p["m"] > 1, "m > 1")),
        _rows((
            ((1, 2), 4), ((1, 3), 6), ((1, 4), 24), ((1, 5), 94), ((2, 2), 19), ((2, 3), 43),
            ((2, 4), 117), ((4, 2), 100), ((4, 3), 220), ((5, 2), 9), ((7, 2), 40), ((8, 2), 1286))))

_Z_PARAMS = ((3, 2), (6, 2), (9, 2), (12, 2), (3, 3), (6, 3), (3, 4))
_Z_CHECK = lambda p: _all(_need(p["n"] % 3 == 0 and p["n"] > 0, "n must be a positive multiple of 3"),
                          _need(p["m"] > 1, "m > 1"))

_series("Znm", "Z(n,m)", ("n", "m"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_Y(1, p["m"])],
        lambda p: 3 ** p["m"] * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** (p["m"] + 1)),
        RVW, _Z_CHECK, _rows(zip(_Z_PARAMS, (14, 128, 397, 1499, 50, 520, 393))))

_series("Zpnm", "Z'(n,m)", ("n", "m"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_X(1, p["m"])],
        lambda p: 3 ** p["m"] * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _Z_CHECK,
        # Z'(9,2) is isomorphic to Z(9,2), so it carries that group's singlet count
        (_row((3, 2), 8), _row((6, 2), 49),
         _row((9, 2), 397, note="isomorphic to Z(9,2)", profile=lambda: _singlets_rest_triplets(27)),
         _row((12, 2), 227), _row((3, 3), 20), _row((6, 3), 152), _row((3, 4), 64)))

# For m = 2 all generators have unit determinant; those rows carry the SU(3)
# group they coincide with. The singlet count 3^m matches those SU(3) rows.
_series("Zppnm", "Z''(n,m)", ("n", "m"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_X(2, p["m"])],
        lambda p: 3 ** p["m"] * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** p["m"]),
        RVW, _Z_CHECK,
        (_row((3, 2), 9, su3=True, note="C_{9,3}^(1)",
              profile=lambda: _singlets_rest_triplets(9)),
         _row((6, 2), 50, su3=True, note="C_{18,6}^(1)",
              profile=lambda: _singlets_rest_triplets(9)),
         _row((9, 2), 26, su3=True, order=243, note="Delta(3x9^2)",
              profile=lambda: _singlets_rest_triplets(9)),
         _row((12, 2), 228, su3=True, note="C_{36,12}^(1)",
              profile=lambda: _singlets_rest_triplets(9)),
         _row((3, 3), 19), _row((6, 3), 153), _row((3, 4), 63)))

_ZJ_CHECK = lambda p: _all(_Z_CHECK(p), _need(p["j"] >= 1, "j >= 1"))

_series("Znmj", "Z(n,m,j)", ("n", "m", "j"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_X(1, p["m"]), _neg_F(1, p["j"])],
        lambda p: 3 ** p["m"] * 2 ** p["j"] * p["n"] ** 2,
        lambda p: _z_nmj_profile(p["n"], p["m"], p["j"]),
        MONOMIAL_STU, _ZJ_CHECK,
        _rows((
            ((3, 2, 1), 12), ((3, 2, 2), 15), ((3, 2, 3), 21), ((3, 2, 4), 37), ((3, 3, 1), 28),
            ((3, 3, 2), 31), ((3, 3, 3), 37), ((3, 4, 1), 618), ((6, 2, 1), 260), ((6, 2, 2), 689),
            ((6, 3, 1), 833))))

_series("Zpnmj", "Z'(n,m,j)", ("n", "m", "j"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_X(2, p["m"]), _neg_F(1, p["j"])],
        lambda p: 3 ** p["m"] * 2 ** p["j"] * p["n"] ** 2,
        lambda p: _z_nmj_profile(p["n"], p["m"], p["j"]),
        MONOMIAL_STU, _ZJ_CHECK,
        (_row((3, 2, 1), 14, su3=True, note="D_{9,3}^(1)"), _row((3, 2, 2), 17), _row((3, 2, 3), 23),
         _row((3, 2, 4), 39), _row((3, 3, 1), 26), _row((3, 3, 2), 29), _row((3, 3, 3), 35),
         _row((3, 4, 1), 615), _row((6, 2, 1), 259, su3=True, note="D_{18,6}^(1)"),
         _row((6, 2, 2), 688), _row((6, 3, 1), 832)))

_series("Hnmj", "H(n,m,j)", ("n", "m", "j"),
        lambda p: [gl.gen_E(), gl.gen_L(p["n"]), gl.gen_X(1, 2), _neg_F(p["m"], p["j"])],
        lambda p: 3 ** (p["m"] + 1) * 2 ** p["j"] * p["n"] ** 2,
        lambda p: _z_nmj_profile(p["n"], p["m"] + 1, p["j"]),
        MONOMIAL_STU, _ZJ_CHECK,
        _rows((((3, 2, 1), 125), ((3, 2, 2), 309), ((3, 2, 3), 707), ((3, 3, 1), 1095),
               ((6, 2, 1), 2363))))

_series("Ymj", "Y(m,j)", ("m", "j"),
        lambda p: [gl.gen_L(3), gl.gen_L(2 ** p["j"]), gl.gen_Zm(p["m"])],
        lambda p: 3 ** (p["m"] + 2) * 4 ** p["j"],
        lambda p: ({1: 3 ** (p["m"] + 1), 3: 3 ** p["m"] * 4 ** p["j"] - 3 ** (p["m"] - 1)}, None),
        RVW, lambda p: _all(_need(p["m"] >= 2, "m >= 2"), _need(p["j"] >= 1, "j >= 1")),
        _rows((((2, 1), 45), ((3, 1), 147), ((2, 2), 222))))

_series("Gmj", "G(m,j)", ("m", "j"),
        lambda p: [gl.gen_E(), _neg_F(p["m"], p["j"]), gl.gen_misc("diag11w")],
        lambda p: 3 ** (p["m"] + 3) * 2 ** p["j"],
        lambda p: _z_nmj_profile(3, p["m"] + 1, p["j"]),
        MONOMIAL_STU, lambda p: _all(_need(p["m"] >= 1, "m >= 1"), _need(p["j"] >= 2, "j >= 2")),
        _rows((((1, 2), 13), ((2, 2), 309), ((1, 3), 19), ((2, 3), 707), ((1, 4), 35))))

_series("G1296_699", "[1296,699]", (),
        lambda p: [gl.gen_E(), _neg_F(1, 2), gl.gen_misc("diag11w"), gl.gen_L(2)],
        lambda p: 1296, None, MONOMIAL_STU, lambda p: None, _rows(((((), 699),))))

_series("Yj", "Y(j)", ("j",),
        lambda p: [gl.gen_E(), gl.gen_misc("vugpi", j=p["j"])],
        lambda p: 81 * 4 ** p["j"],
        lambda p: _singlets_rest_triplets(9),
        RVW, lambda p: _need(p["j"] >= 0, "j >= 0"),
        _rows((((0,), 7), ((1,), 60), ((2,), 237))))

_series("Ytildej", "Y~(j)", ("j",),
        lambda p: [gl.gen_E(), gl.gen_misc("vugpi", j=p["j"]), gl.gen_Iprime()],
        lambda p: 162 * 4 ** p["j"],
        lambda p: None if p["j"] > 1 else ({1: 6, 2: 3, 3: (12, 30)[p["j"]], 6: (1, 10)[p["j"]]}, None),
        MONOMIAL_STU, lambda p: _need(p["j"] >= 0, "j >= 0"),
        _rows((((0,), 10), ((1,), 266))))

_series("Unmj", "U(n,m,j)", ("n", "m", "j"),
        lambda p: [gl.gen_E(), gl.gen_misc("u_diag", n=p["n"]), gl.gen_misc("mu_T1", m=p["m"], j=p["j"])],
        lambda p: 3 ** (p["m"] + 1) * p["n"] ** 2,
        lambda p: _singlets_rest_triplets(3 ** (p["j"] + 1)),
        RVW,
        lambda p: _all(_need(p["n"] % 3 == 0 and p["n"] > 0, "n must be a positive multiple of 3"),
                       _need(p["m"] > 1, "m > 1"), _need(1 < p["j"] <= p["m"], "1 < j <= m")),
        _rows((((3, 2, 2), 55), ((3, 3, 2), 86), ((3, 3, 3), 284), ((6, 2, 2), 550))))

_series("Lm", "L(m)", ("m",),
        lambda p: [gl.gen_X(1, 2), gl.gen_Zm(p["m"]), gl.gen_L(3)],
        lambda p: 3 ** (p["m"] + 3),
        lambda p: _singlets_rest_triplets(3 ** (p["m"] + 1)),
        RVW, lambda p: _need(p["m"] >= 2, "m >= 2"),
        _rows((((2,), 16), ((3,), 62))))

_series("G1701_102", "[1701,102]", (),
        lambda p: [gl.gen_B(7, 2), gl.gen_Zm(2), gl.gen_X(1, 2), gl.gen_L(3)],
        lambda p: 1701, None, RVW, lambda p: None, _rows(((((), 102),))))

_series("Vj", "V(j)", ("j",),
        lambda p: [gl.gen_Zm(1), gl.gen_X(2, 2), gl.gen_L(2 ** p["j"])],
        lambda p: 81 * 4 ** p["j"],
        lambda p: _singlets_rest_triplets(9),
        RVW, lambda p: _need(p["j"] >= 0, "j >= 0"),
        _rows((((0,), 10), ((1,), 51), ((2,), 226))))

_series("Dj", "D(j)", ("j",),
        lambda p: [gl.gen_Em(2), gl.gen_L(2 ** p["j"]), gl.gen_T1(2)],
        lambda p: 243 * 4 ** p["j"],
        lambda p: _singlets_rest_triplets(9),
        RVW, lambda p: _need(p["j"] >= 0, "j >= 0"),
        _rows((((0,), 25), ((1,), 121))))

_series("Jm", "J(m)", ("m",),
        lambda p: [gl.gen_Zm(p["m"]), gl.gen_L(9)],
        lambda p: 81 * 3 ** p["m"],
        lambda p: _singlets_rest_triplets(3 ** (p["m"] + 1)),
        RVW, lambda p: _need(p["m"] >= 1, "m >= 1"),
        _rows((((1,), 27), ((2,), 80))))

_series("Sporadic729", "[729,j]", (), None, lambda p: 729,
        lambda p: ({1: 9, 3: 80}, None), RVW, lambda p: None,
        tuple(_row((), int(v), variant=v) for v in ("96", "97", "98")), variants=("96", "97", "98"))

_series("Sporadic972", "[972,170]", (), None, lambda p: 972, None, RVW, lambda p: None,
        (_row((), 170, variant="170"),), variants=("170",))

_series("Sporadic1458", "[1458,j]", (), None, lambda p: 1458,
        lambda p: ({1: 6, 2: 3, 3: 48, 6: 28}, None), MONOMIAL_STU, lambda p: None,
        tuple(_row((), int(v), variant=v) for v in ("663", "666")), variants=("663", "666"))

_series("Sporadic1701", "[1701,j]", (), None, lambda p: 1701, None, RVW, lambda p: None,
        tuple(_row((), int(v), variant=v) for v in ("112", "130", "131")),
        variants=("112", "130", "131"))

_XI_CHECK = lambda p: _all(_need(p["m"] >= 1, "m >= 1"), _need(p["j"] >= 2, "j >= 2"))

_series("Xi", "Xi(m,j)", ("m", "j"),
        lambda p: [gl.gen_E(), _iQ(p["m"], p["j"])],
        lambda p: 3 ** (p["m"] + 2) * 2 ** p["j"],
        lambda p: _xi_profile(p["m"], p["j"]),
        NON_MONOMIAL, _XI_CHECK,
        (_row((1, 2), 15, su3=True, note="Sigma(36x3)"), _row((1, 3), 25), _row((1, 4), 57),
         _row((1, 5), 194), _row((1, 6), 953), _row((2, 2), 111), _row((2, 3), 352),
         _row((2, 4), 1239), _row((3, 2), 411), _row((3, 3), 1123)))

_series("XiHat", "Xi^(m,j)", ("m", "j"),
        lambda p: [gl.gen_E(), _iQ(p["m"], p["j"]), gl.gen_Iprime()],
        lambda p: 3 ** (p["m"] + 2) * 2 ** (p["j"] + 1),
        lambda p: ({d: 2 * c for d, c in _xi_profile(p["m"], p["j"])[0].items()}, None),
        NON_MONOMIAL, lambda p: _all(_XI_CHECK(p), _need(p["j"] > 2, "j = 2 splits off a Z2 factor")),
        _rows((((1, 3), 273), ((1, 4), 737), ((1, 5), 2929), ((2, 3), 2203))))

_series("Pi", "Pi(m,j)", ("m", "j"),
        lambda p: [gl.gen_E(), gl.gen_K(), gl.gen_Q(p["m"], p["j"])],
        lambda p: 3 ** (p["m"] + 2) * 2 ** (p["j"] + 2),
        lambda p: _pi_profile(p["m"], p["j"]),
        NON_MONOMIAL, _XI_CHECK,
        _rows((((1, 2), 239), ((1, 3), 675), ((1, 4), 2785), ((2, 2), 1995))))

# Theta(m) uses Q_{m,0}; the variant "Q1" swaps in Q_{m,1}.
_series("Theta", "Theta(m)", ("m",),
        lambda p: [gl.gen_E(), gl.gen_K(), gl.gen_Q(p["m"], 1 if p.get("variant") == "Q1" else 0)],
        lambda p: 72 * 3 ** p["m"],
        lambda p: _pi_profile(p["m"], 1),
        NON_MONOMIAL, lambda p: _need(p["m"] >= 1, "m >= 1"),
        (_row((1,), 88, su3=True, note="Sigma(72x3)"), _row((2,), 551), _row((3,), 2333)),
        variants=("Q1",))

_series("Upsilon", "Upsilon(m)", ("m",),
        lambda p: [gl.gen_E(), gl.gen_Q(0, 0), gl.gen_X(1, p["m"])],
        lambda p: 72 * 3 ** p["m"],
        lambda p: _upsilon_profile(p["m"]),
        NON_MONOMIAL, lambda p: _need(p["m"] >= 2, "m >= 2"),
        _rows((((2,), 531), ((3,), 2293))))

_series("UpsilonPrime", "Upsilon'(m)", ("m",),
        lambda p: [gl.gen_E(), gl.gen_Q(0, 0), gl.gen_X(2, p["m"])],
        lambda p: 72 * 3 ** p["m"],
        lambda p: _upsilon_profile(p["m"]),
        NON_MONOMIAL, lambda p: _need(p["m"] >= 2, "m >= 2"),
        (_row((2,), 532, su3=True, note="Sigma(216x3)"), _row((3,), 2294)))

_series("Omega", "Omega(m)", ("m",),
        lambda p: [gl.gen_Q(p["m"], 0), gl.gen_Zm(1)],
        lambda p: 72 * 3 ** (p["m"] + 1),
        lambda p: _upsilon_profile(p["m"] + 1),
        NON_MONOMIAL, lambda p: _need(p["m"] >= 1, "m >= 1"),
        _rows((((1,), 533), ((2,), 3448))))

SERIES: Dict[str, _Series] = {s.name: s for s in _S}
del _S


# -- specs and entries ----------------------------------------------------

@dataclass(frozen=True)
class SeriesSpec:
    series: str
    params: Tuple[Tuple[str, int], ...] = ()
    variant: Optional[str] = None

    @classmethod
    def make(cls, series, variant=None, **params):
        series = SERIES_ALIASES.get(series, series)
        if series not in SERIES:
            raise InvalidSpec("unknown series %r" % series)
        s = SERIES[series]
        extra = set(params) - set(s.params)
        if extra:
            raise InvalidSpec("%s does not take %s" % (series, ", ".join(sorted(extra))))
        missing = [k for k in s.params if k not in params]
        if missing:
            raise InvalidSpec("%s needs %s" % (series, ", ".join(missing)))
        if variant is not None:
            variant = str(variant)
            if variant not in s.variants:
                raise InvalidSpec("%s has no variant %r" % (series, variant))
        elif s.variants and s.generators is None:
            raise InvalidSpec("%s needs variant=one of %s" % (series, ", ".join(s.variants)))
        return cls(series, tuple((k, int(params[k])) for k in s.params), variant)

    @property
    def values(self):
        d = dict(self.params)
        if self.variant is not None:
            d["variant"] = self.variant
        return d

    def __str__(self):
        items = ["%s=%d" % kv for kv in self.params]
        if self.variant is not None:
            items.append("variant=%s" % self.variant)
        return "%s(%s)" % (self.series, ",".join(items))


_SPEC_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*$")


def parse_spec(text):
    """Parse `Series(name=value,...)`."""
    m = _SPEC_RE.match(text)
    if not m:
        raise InvalidSpec("cannot parse %r; expected Series(name=value,...)" % text)
    params, variant = {}, None
    body = (m.group(2) or "").strip()
    if body:
        for item in body.split(","):
            if "=" not in item:
                raise InvalidSpec("bad parameter %r" % item.strip())
            key, val = (x.strip() for x in item.split("=", 1))
            if key == "variant":
                variant = val
                continue
            if key not in PARAM_NAMES:
                raise InvalidSpec("unknown parameter %r" % key)
            try:
                params[key] = int(val)
            except ValueError:
                raise InvalidSpec("parameter %s must be an integer, got %r" % (key, val)) from None
    return SeriesSpec.make(m.group(1), variant=variant, **params)


@dataclass(frozen=True)
class CatalogEntry:
    spec: SeriesSpec
    expected_order: int
    expected_id: Optional[Tuple[int, int]]
    expected_su3: bool
    expected_profile: Optional[DegreeProfile]
    expected_shape: str
    notes: str = ""


def validate(spec):
    s = SERIES[spec.series]
    problem = s.check(spec.values)
    if problem:
        raise InvalidSpec("%s: %s" % (spec, problem))


def generators(spec):
    validate(spec)
    s = SERIES[spec.series]
    if s.generators is None:
        return _SPORADIC_GENS[spec.series][spec.variant]()
    return s.generators(spec.values)


def build(spec, cap=DEFAULT_CAP):
    """Closure of the series' generator set."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    return closure(generators(spec), cap=cap)


def expected_degree_profile(spec):
    s = SERIES[spec.series]
    if s.profile is None:
        return None
    p = spec.values
    formula = s.profile(p)
    if formula is None:
        return None
    return _complete(s.order(p), *formula)


def _entry_from_row(s, params, j, extra):
    spec = SeriesSpec.make(s.name, variant=extra.get("variant"), **dict(zip(s.params, params)))
    p = spec.values
    order = extra.get("order", s.order(p))
    if "profile" in extra:
        profile = _complete(order, *extra["profile"]())
    else:
        profile = expected_degree_profile(spec)
    return CatalogEntry(spec, order, (order, j) if j is not None else None,
                        extra.get("su3", s.su3), profile, s.shape, extra.get("note", ""))


def entry_for(spec):
    """Catalog entry for a spec, whether or not it is a tabulated row."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    validate(spec)
    s = SERIES[spec.series]
    values = tuple(v for _, v in spec.params)
    for params, j, extra in _series_rows(s, 10 ** 9):
        if tuple(params) == values and extra.get("variant") == spec.variant:
            return _entry_from_row(s, params, j, extra)
    return _entry_from_row(s, values, None, {"variant": spec.variant} if spec.variant else {})


def _series_rows(s, max_order):
    if s.name == "Cnl":
        return [((r, k, l), C_GROUP_IDS.get((r, k, l)), {}) for r, k, l in c_group_parameters(min(max_order, 2000))]
    return s.rows


def enumerate(max_order=2000, series=None):
    """Every tabulated group with expected order below max_order."""
    names = list(SERIES) if series is None else [SERIES_ALIASES.get(x, x) for x in series]
    out = []
    for name in names:
        if name not in SERIES:
            raise InvalidSpec("unknown series %r" % name)
        s = SERIES[name]
        for params, j, extra in _series_rows(s, max_order):
            e = _entry_from_row(s, params, j, extra)
            if e.expected_order < max_order:
                out.append(e)
    return out


# -- verification ---------------------------------------------------------

SHAPE_SUPPORT = {RVW: {1, 3}, MONOMIAL_STU: {1, 2, 3, 6}}


@dataclass
class Check:
    name: str
    passed: bool
    expected: object
    got: object

    def as_json(self):
        return {"name": self.name, "pass": self.passed, "expected": self.expected, "got": self.got}


@dataclass
class VerificationReport:
    entry: CatalogEntry
    checks: List[Check] = dc_field(default_factory=list)
    computed: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_json(self):
        e = self.entry
        return {
            "spec": str(e.spec),
            "series": e.spec.series,
            "params": e.spec.values,
            "expected": {
                "order": e.expected_order,
                "id": list(e.expected_id) if e.expected_id else None,
                "su3": e.expected_su3,
                "profile": e.expected_profile.as_json() if e.expected_profile else None,
            },
            "computed": self.computed,
            "pass": self.passed,
            "checks": [c.as_json() for c in self.checks],
        }


def support_ok(shape, profile):
    dims = set(profile.counts)
    if shape == NON_MONOMIAL:
        return not dims <= SHAPE_SUPPORT[MONOMIAL_STU]
    return dims <= SHAPE_SUPPORT[shape]


def verify_entry(entry, seed=0, cap=DEFAULT_CAP, group=None):
    t0 = time.perf_counter()
    G = group if group is not None else build(entry.spec, cap=cap)
    rep = VerificationReport(entry)
    add = rep.checks.append

    order = len(G)
    add(Check("order", order == entry.expected_order, entry.expected_order, order))

    su3 = is_subgroup_of_su3(G)
    add(Check("su3", su3 == entry.expected_su3, entry.expected_su3, su3))

    profile = character_degrees(G, seed=seed)
    if entry.expected_profile is not None:
        add(Check("profile", profile == entry.expected_profile,
                  entry.expected_profile.as_json(), profile.as_json()))
    add(Check("sum_rules", verify_profile(profile, G), True, verify_profile(profile, G)))

    factor = has_cyclic_direct_factor(G)
    add(Check("cyclic_factor", factor is None, None, factor))

    shape = monomial_class(G)
    add(Check("monomial_class", shape == entry.expected_shape, entry.expected_shape, shape))
    add(Check("degree_support", support_ok(shape, profile), True, support_ok(shape, profile)))

    rep.computed = {
        "order": order,
        "su3": su3,
        "class_count": G.classes.count,
        "profile": profile.as_json(),
        "abelian_invariants": list(abelian_invariants(G)),
        "det_image_order": det_image_order(G),
        "monomial_class": shape,
        "cyclic_factor": factor,
    }
    rep.seconds = time.perf_counter() - t0
    return rep
