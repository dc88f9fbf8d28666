import numpy as np
import pytest

from parabolics.cxlinalg import restriction_invariants
from parabolics.spinor import rho_span, spin_form, spin_module


def _crandom(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture(scope="module")
def sm4():
    return spin_module(4)


def test_dimensions(sm4):
    assert sm4.dim == 16
    assert len(sm4.even_indices) == len(sm4.odd_indices) == 8
    sm3 = spin_module(3)
    assert len(sm3.even_indices) == len(sm3.odd_indices) == 4


def test_rho_wedge_and_contraction_examples(sm4):
    one = sm4.vector(())
    e1 = np.zeros(8); e1[0] = 1
    assert np.allclose(sm4.rho(e1) @ one, sm4.vector((0,)))
    e1dual = np.zeros(8); e1dual[4] = 1
    assert np.allclose(sm4.rho(e1dual) @ sm4.vector((0, 1)), sm4.vector((1,)))
    # contraction at the second slot picks up a sign
    e2dual = np.zeros(8); e2dual[5] = 1
    assert np.allclose(sm4.rho(e2dual) @ sm4.vector((0, 1)), -sm4.vector((0,)))


def test_rho_linear_in_v(sm4):
    rng = np.random.default_rng(0)
    v, w = _crandom(rng, 8), _crandom(rng, 8)
    a, b = rng.standard_normal(2)
    assert np.allclose(sm4.rho(a * v + b * w), a * sm4.rho(v) + b * sm4.rho(w))


def test_rho_shape_mismatch(sm4):
    with pytest.raises(ValueError):
        sm4.rho(np.zeros(7))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_clifford_relation(m):
    sm = spin_module(m)
    rng = np.random.default_rng(m)
    I = np.eye(sm.dim)
    for _ in range(50):
        v, w = _crandom(rng, 2 * m), _crandom(rng, 2 * m)
        Rv, Rw = sm.rho(v), sm.rho(w)
        assert np.linalg.norm(Rv @ Rv - sm.pairing(v, v) * I) < 1e-10 * sm.dim
        assert np.linalg.norm(Rv @ Rw + Rw @ Rv - 2 * sm.pairing(v, w) * I) < 1e-10 * sm.dim


def test_rho_flips_parity_exactly(sm4):
    rng = np.random.default_rng(1)
    ev, od = list(sm4.even_indices), list(sm4.odd_indices)
    for _ in range(10):
        R = sm4.rho(_crandom(rng, 8))
        assert not R[np.ix_(ev, ev)].any()
        assert not R[np.ix_(od, od)].any()


def test_spin_form_examples(sm4):
    assert spin_form(sm4.vector(()), sm4.vector((0, 1, 2, 3)), 4) == 1
    assert spin_form(sm4.vector((0, 1)), sm4.vector((0, 1)), 4) == 0
    with pytest.raises(ValueError):
        spin_form(np.zeros(8), np.zeros(8), 3)


def test_form_symmetry_types():
    G4 = spin_module(4).half_space("+").gram
    assert np.array_equal(G4, G4.T)
    G4m = spin_module(4).half_space("-").gram
    assert np.array_equal(G4m, G4m.T)
    G2 = spin_module(2).half_space("+").gram
    assert np.array_equal(G2, -G2.T)
    assert abs(np.linalg.det(G2)) > 1e-12


def test_halves_orthogonal_exactly(sm4):
    G = sm4.form_gram
    ev, od = list(sm4.even_indices), list(sm4.odd_indices)
    assert not G[np.ix_(ev, od)].any()
    assert not G[np.ix_(od, ev)].any()
    assert abs(np.linalg.det(G)) > 1e-9


def test_form_gram_nondegenerate_on_halves(sm4):
    for side in "+-":
        sp = sm4.half_space(side)
        assert abs(np.linalg.det(sp.gram)) > 1e-9


def test_spinor_ampleness_normal_form(sm4):
    # image spanned by 1 and e1^e2 + e3^e4: degenerate but nonzero restriction
    plus = sm4.half_space("+")
    s1 = sm4.to_half(sm4.vector(()), "+")
    s2 = sm4.to_half(sm4.vector((0, 1), (2, 3)), "+")
    assert restriction_invariants(np.column_stack([s1, s2]), plus) == (2, 1)
    assert restriction_invariants(np.zeros((8, 2)), plus) == (0, 0)
    rng = np.random.default_rng(2)
    got_nondeg = 0
    for _ in range(10):
        cols = _crandom(rng, 8, 3)
        r, j = restriction_invariants(cols, plus)
        got_nondeg += (r, j) == (3, 0)
    assert got_nondeg == 10  # random 3-dim images are nondegenerate


def test_prop7c_dichotomy(sm4):
    rng = np.random.default_rng(3)
    minus = sm4.half_space("-")
    od = list(sm4.odd_indices)
    for _ in range(20):
        s = sm4.from_half(_crandom(rng, 8), "+")
        span = rho_span(sm4, s)[od, :]
        if abs(spin_form(s, s, 4)) > 1e-8:
            assert np.linalg.matrix_rank(span, tol=1e-8) == 8
        else:
            assert restriction_invariants(span, minus) == (4, 4)
    # isotropic spinors: solve for a root of the quadratic form
    for _ in range(20):
        a = sm4.from_half(_crandom(rng, 8), "+")
        b = sm4.from_half(_crandom(rng, 8), "+")
        qa, qb, qab = spin_form(a, a, 4), spin_form(b, b, 4), spin_form(a, b, 4)
        s = a + ((-qab + np.sqrt(qab ** 2 - qa * qb)) / qb) * b
        assert abs(spin_form(s, s, 4)) < 1e-6 * np.linalg.norm(s) ** 2
        span = rho_span(sm4, s)[od, :]
        assert restriction_invariants(span, minus) == (4, 4)


def test_rho_half_consistency(sm4):
    rng = np.random.default_rng(4)
    v = _crandom(rng, 8)
    s_half = _crandom(rng, 8)
    full = sm4.from_half(s_half, "+")
    out_full = sm4.rho(v) @ full
    assert np.allclose(sm4.to_half(out_full, "-"), sm4.rho_half(v, "+") @ s_half)
