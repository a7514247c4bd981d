import numpy as np
import pytest
from hypothesis import given, strategies as st

from u3atlas import genlib as gl
from u3atlas.cyclotomic import rational, root_of_unity
from u3atlas.mat3 import from_json, identity, to_json

SAMPLES = [
    gl.gen_E(), gl.gen_I(), gl.gen_Iprime(), gl.gen_L(4), gl.gen_B(7, 2), gl.gen_G(9, 3),
    gl.gen_Em(2), gl.gen_Zm(1), gl.gen_T1(2), gl.gen_T2(1), gl.gen_F(1, 2),
    gl.gen_X(1, 1), gl.gen_Y(2, 2), gl.gen_K(), gl.gen_Q(1, 0), gl.gen_Q(0, 1),
    gl.gen_rvw("S", 6, 1, 2, 3), gl.gen_misc("vugpi", j=2), gl.gen_misc("mu_T1", m=2, j=1),
    gl.gen_misc("jgen97"),
]
mats = st.sampled_from(SAMPLES)
words = st.lists(mats, min_size=1, max_size=4)


def product(ws):
    out = identity()
    for w in ws:
        out = out @ w
    return out


def test_generators_are_unitary():
    for g in SAMPLES:
        assert g.is_unitary()
        c = g.to_complex()
        assert np.allclose(c @ c.conj().T, np.eye(3))


@given(words, words)
def test_product_matches_complex(a, b):
    x, y = product(a), product(b)
    assert np.allclose((x @ y).to_complex(), x.to_complex() @ y.to_complex())


@given(words, words)
def test_det_multiplicative(a, b):
    x, y = product(a), product(b)
    assert (x @ y).det() == x.det() * y.det()
    assert np.isclose(complex(x.det().to_complex()), np.linalg.det(x.to_complex()))


@given(words)
def test_trace_and_adjoint(a):
    x = product(a)
    assert np.isclose(complex(x.trace().to_complex()), np.trace(x.to_complex()))
    assert x @ x.conj_transpose() == identity(x.conductor)


@given(words)
def test_json_round_trip(a):
    x = product(a)
    assert from_json(to_json(x)) == x


def test_equality_across_conductors():
    assert gl.gen_E().lift(12) == gl.gen_E()
    assert hash(gl.gen_L(3).lift(9)) == hash(gl.gen_L(3))


def test_monomial_decompose():
    perm, diag = gl.gen_I().monomial_decompose()
    assert sorted(perm) == [0, 1, 2]
    assert gl.gen_K().monomial_decompose() is None


def test_scalar_multiple_lifts():
    z = root_of_unity(5, 1)
    m = identity() * z
    assert m.det() == z ** 3
    assert -identity() == identity() * rational(-1)


def test_power_and_order():
    assert gl.gen_E() ** 3 == identity()
    assert gl.gen_K() ** 4 == identity()
    assert gl.gen_L(5) ** -1 == gl.gen_L(5) ** 4


def test_sqrt3():
    assert gl.sqrt3() * gl.sqrt3() == rational(3)


def test_bad_inputs():
    with pytest.raises(ValueError):
        from_json([["1"]])
    with pytest.raises(ValueError):
        gl.gen_X(4, 1)
    with pytest.raises(ValueError):
        gl.gen_rvw("Q", 3, 0, 0, 0)


def test_determinants_of_named_generators():
    w = root_of_unity(3, 1)
    assert gl.gen_E().det() == rational(1)
    assert gl.gen_I().det() == rational(1)
    # X1(m) = mu * diag(w, w, w^2): det mu^3 * w^4
    assert gl.gen_X(1, 2).det() == root_of_unity(3, 1) * w
    assert gl.gen_X(3, 1).det() == rational(1)
    # F(m, j) has entries -z on an odd permutation: det -(-z)^3 = z^3
    assert gl.gen_F(1, 1).det() == root_of_unity(6, 3)
    assert gl.gen_F(2, 0).det() == root_of_unity(9, 3)
    assert gl.gen_K().is_unitary() and gl.gen_K().monomial_decompose() is None
