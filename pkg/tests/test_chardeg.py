import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from oracles import float_degrees
from u3atlas import catalog, genlib as gl
from u3atlas.chardeg import (DegreeProfile, character_degrees, choose_prime, is_prime, krylov_minpoly,
                             next_admissible_prime, poly_roots, sqrt_mod, verify_profile)
from u3atlas.engine import CapExceeded, closure, exponent
from u3atlas.mat3 import identity

SMALL_SPECS = ["Delta3n2(n=2)", "Delta3n2(n=3)", "Delta6n2(n=2)", "Delta6n2(n=3)", "S4j(j=2)",
               "T(r=7,k=2,m=2)", "Xi(m=1,j=2)", "D3ll(l=3)", "Znm(n=3,m=2)", "Theta(m=1)"]
POOL = [gl.gen_E(), gl.gen_L(2), gl.gen_L(3), gl.gen_I(), gl.gen_K(), gl.gen_X(3, 1), -identity()]


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_profile_matches_float_oracle(spec):
    G = catalog.build(spec)
    got = character_degrees(G)
    assert got == DegreeProfile(Counter(float_degrees(G)))
    assert verify_profile(got, G)


@given(st.lists(st.sampled_from(range(len(POOL))), min_size=1, max_size=3, unique=True),
       st.integers(0, 2 ** 16))
def test_profile_invariants(idx, seed):
    try:
        G = closure([POOL[i] for i in idx], cap=700)
    except CapExceeded:
        assume(False)
    prof = character_degrees(G, seed=seed)
    assert prof.order() == len(G)
    assert prof.class_count() == G.classes.count
    assert all(len(G) % d == 0 for d in prof.counts)
    assert verify_profile(prof, G)
    if len(G) > 1:
        p = next_admissible_prime(G, choose_prime(G))
        assert character_degrees(G, p=p, seed=seed) == prof


def test_prime_choice():
    G = catalog.build("Delta3n2(n=3)")
    p = choose_prime(G)
    assert is_prime(p)
    assert (p - 1) % exponent(G) == 0
    assert p > 2 * math.sqrt(len(G))
    assert len(G) % p != 0
    q = next_admissible_prime(G, p)
    assert q > p and (q - 1) % exponent(G) == 0


@given(st.sampled_from([7, 13, 31, 97, 193, 1009]), st.integers(0, 10 ** 6))
def test_sqrt_mod(p, a):
    r = sqrt_mod(a, p)
    if r is None:
        assert pow(a % p, (p - 1) // 2, p) == p - 1
    else:
        assert (r * r - a) % p == 0


def test_poly_roots_of_split_polynomial():
    p = 101
    roots = [3, 17, 55, 90]
    f = [1]
    for r in roots:
        # multiply by (x - r); coefficients low to high
        g = [0] * (len(f) + 1)
        for i, c in enumerate(f):
            g[i] = (g[i] - r * c) % p
            g[i + 1] = (g[i + 1] + c) % p
        f = g
    got = poly_roots(np.array(f, dtype=np.int64), p, np.random.default_rng(0))
    assert sorted(int(x) for x in got) == roots


def test_krylov_minpoly_of_diagonal():
    p = 31
    m = np.diag([2, 2, 5]).astype(np.int64)
    v = np.array([1, 1, 1], dtype=np.int64)
    poly, basis = krylov_minpoly(m, v, p)
    mp = [int(c) % p for c in poly]
    assert basis.shape == (3, 2)
    # (x - 2)(x - 5) = x^2 - 7x + 10
    assert mp == [10, (-7) % p, 1]


def test_profile_helpers():
    prof = DegreeProfile({3: 2, 1: 3, 2: 0})
    assert prof.counts == {1: 3, 3: 2}
    assert prof.order() == 21
    assert prof.doubled() == DegreeProfile({1: 6, 3: 4})
    assert prof.as_json() == {"1": 3, "3": 2}
    assert str(prof) == "{1:3, 3:2}"
    assert verify_profile(prof, order=21, class_count=5, abelian_order=3)
    assert not verify_profile(prof, order=21, class_count=5, abelian_order=1)


def test_trivial_group():
    assert character_degrees(closure([identity()])) == DegreeProfile({1: 1})
