import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyharm import catalog
from polyharm.core import (
    CoefficientTable,
    PolyharmonicMap,
    build_map,
    conjugate_map,
    dilatation,
    evaluate,
    jacobian,
    polyharmonic_residual,
    quasiregularity_constant,
    scale_map,
    wirtinger,
)
from polyharm.errors import DegenerateMap, MalformedSpec

from _gen import random_map


def _fd_wirtinger(F, z, h=1e-5):
    # central differences in x and y, combined into the complex derivatives
    fx = (evaluate(F, z + h) - evaluate(F, z - h)) / (2.0 * h)
    fy = (evaluate(F, z + 1j * h) - evaluate(F, z - 1j * h)) / (2.0 * h)
    return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)


# ---- table construction ----


def test_table_shape_and_freeze():
    t = CoefficientTable(2, 3, np.zeros((2, 3), complex), np.zeros((2, 3), complex))
    assert t.p == 2 and t.J == 3
    with pytest.raises(Exception):
        t.a[0, 0] = 1.0  # arrays are read-only


def test_table_rejects_bad_shapes():
    with pytest.raises(MalformedSpec):
        CoefficientTable(0, 1, np.zeros((0, 1), complex), np.zeros((0, 1), complex))
    with pytest.raises(MalformedSpec):
        CoefficientTable(2, 2, np.zeros((2, 1), complex), np.zeros((2, 2), complex))
    bad = np.zeros((1, 1), complex)
    bad[0, 0] = np.nan
    with pytest.raises(MalformedSpec):
        CoefficientTable(1, 1, bad, np.zeros((1, 1), complex))


def test_from_terms_round_trip():
    t = CoefficientTable.from_terms(2, 2, [(1, 1, 1 + 2j, 0), (2, 2, 0, 3 - 1j)])
    assert t.a[0, 0] == 1 + 2j
    assert t.b[1, 1] == 3 - 1j
    assert t.a[1, 1] == 0 and t.b[0, 0] == 0


def test_from_terms_rejects_bad_indices():
    with pytest.raises(MalformedSpec):
        CoefficientTable.from_terms(1, 1, [(2, 1, 1.0, 0.0)])
    with pytest.raises(MalformedSpec):
        CoefficientTable.from_terms(1, 1, [(1, 0, 1.0, 0.0)])
    with pytest.raises(MalformedSpec):
        CoefficientTable.from_terms(1, 1, [(1.5, 1, 1.0, 0.0)])


def test_max_coefficient():
    t = CoefficientTable.from_terms(1, 2, [(1, 1, 3 + 4j, 0), (1, 2, 0, 1.0)])
    assert t.max_coefficient() == 5.0


# ---- evaluation ----


def test_identity_and_linear_values():
    I = catalog.identity()
    assert evaluate(I, 0.3 + 0.4j) == 0.3 + 0.4j
    L = catalog.linear(2.0, 0.5j)
    z = 0.2 - 0.7j
    assert evaluate(L, z) == 2.0 * z + 0.5j * np.conj(z)


def test_f2_pinned_values():
    F = catalog.f2()
    assert evaluate(F, 0.0) == 0.0
    # z (1 + r^2 + r^4) at z = 0.5
    assert evaluate(F, 0.5) == 0.65625
    fz, fzb = wirtinger(F, 0.5)
    assert fz == 1.6875
    assert fzb == 0.375
    assert jacobian(F, 0.5) == 1.6875**2 - 0.375**2


def test_scalar_matches_array_evaluation_bitwise():
    rng = np.random.default_rng(11)
    for _ in range(10):
        F = random_map(rng)
        zs = rng.uniform(-0.7, 0.7, 8) + 1j * rng.uniform(-0.7, 0.7, 8)
        arr = evaluate(F, zs)
        for k, z in enumerate(zs):
            assert evaluate(F, complex(z)) == arr[k]
        fz_a, fzb_a = wirtinger(F, zs)
        for k, z in enumerate(zs):
            fz_s, fzb_s = wirtinger(F, complex(z))
            assert fz_s == fz_a[k] and fzb_s == fzb_a[k]


def test_evaluate_matches_naive_reversed_sum():
    # independent accumulation in the opposite term order
    rng = np.random.default_rng(5)
    for _ in range(20):
        F = random_map(rng)
        t = F.table
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
        acc = 0.0 + 0.0j
        for n in range(t.p, 0, -1):
            for j in range(t.J, 0, -1):
                w = (abs(z) ** 2) ** (n - 1)
                acc += w * (t.a[n - 1, j - 1] * z**j
                            + np.conj(t.b[n - 1, j - 1]) * np.conj(z) ** j)
        ref = evaluate(F, z)
        assert abs(acc - ref) <= 1e-13 * (1.0 + abs(ref))


def test_call_is_evaluate():
    F = catalog.f2()
    z = 0.3 + 0.1j
    assert F(z) == evaluate(F, z)


# ---- derivatives ----


def test_wirtinger_against_finite_differences():
    rng = np.random.default_rng(101)
    for _ in range(100):
        F = random_map(rng)
        zs = rng.uniform(-0.65, 0.65, 20) + 1j * rng.uniform(-0.65, 0.65, 20)
        fz, fzb = wirtinger(F, zs)
        fd_z, fd_zb = _fd_wirtinger(F, zs)
        assert np.allclose(fz, fd_z, rtol=1e-6, atol=1e-6)
        assert np.allclose(fzb, fd_zb, rtol=1e-6, atol=1e-6)


def test_wirtinger_at_origin():
    # only the pure n=1 linear entries survive at z = 0
    F = catalog.linear(2.5, -1j)
    fz, fzb = wirtinger(F, 0.0)
    assert fz == 2.5 and fzb == -1j
    G = catalog.f2()
    fz, fzb = wirtinger(G, 0.0)
    assert fz == 1.0 and fzb == 0.0


def test_conjugate_entry_derivatives():
    # F(z) = conj(z)^2: F_z = 0, F_zbar = 2 conj(z)
    F = catalog.monomial(1, 2, 1.0, conjugate=True)
    z = 0.4 - 0.3j
    fz, fzb = wirtinger(F, z)
    assert fz == 0.0
    assert abs(fzb - 2.0 * np.conj(z)) <= 1e-15


# ---- polyharmonicity ----


def test_residual_small_for_true_tables():
    rng = np.random.default_rng(7)
    for _ in range(12):
        F = random_map(rng, p_max=2, J_max=3)
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        res = polyharmonic_residual(F, z, 1e-2)
        scale = 1.0 + F.table.max_coefficient()
        assert abs(res) <= 1e-3 * scale


def test_residual_second_order_convergence():
    # pure truncation error, so halving h divides the residual by about 4
    t = CoefficientTable.from_terms(1, 6, [(1, 6, 1.0, 0.0)])
    F = PolyharmonicMap(t)
    z = 0.3 + 0.2j
    r1 = abs(polyharmonic_residual(F, z, 1e-2))
    r2 = abs(polyharmonic_residual(F, z, 5e-3))
    assert r2 > 0
    assert math.isclose(r1 / r2, 4.0, rel_tol=0.2)


def test_residual_fails_at_wrong_order():
    # depth-2 table is not harmonic: the depth-1 residual stays O(1)
    F = catalog.f2()
    res = polyharmonic_residual(F, 0.5 + 0.1j, 1e-3, order=1)
    assert abs(res) > 1.0


# ---- dilatation and quasiregularity ----


def test_dilatation_linear():
    F = catalog.linear(1.0, 1.0 / 3.0)
    d = dilatation(F, 0.37 - 0.11j)
    assert abs(d.lambda_small - 2.0 / 3.0) <= 1e-15
    assert abs(d.lambda_big - 4.0 / 3.0) <= 1e-15


def test_quasiregularity_identity():
    K = quasiregularity_constant(catalog.identity(), 1.0)
    assert abs(K - 1.0) <= 1e-12


def test_quasiregularity_linear():
    K = quasiregularity_constant(catalog.linear(1.0, 1.0 / 3.0), 1.0)
    assert abs(K - 2.0) <= 1e-12


def test_quasiregularity_f2():
    K = quasiregularity_constant(catalog.f2(), 1.0)
    assert abs(K - 3.0) <= 1e-6


def test_quasiregularity_degenerate():
    with pytest.raises(DegenerateMap):
        quasiregularity_constant(catalog.linear(1.0, 1.0), 1.0)


# ---- structural maps ----


def test_conjugate_map_pointwise():
    rng = np.random.default_rng(23)
    for _ in range(10):
        F = random_map(rng)
        G = conjugate_map(F)
        zs = rng.uniform(-0.8, 0.8, 16) + 1j * rng.uniform(-0.8, 0.8, 16)
        lhs = evaluate(G, zs)
        rhs = np.conj(evaluate(F, zs))
        assert np.all(np.abs(lhs - rhs) <= 1e-13 * (1.0 + np.abs(rhs)))


@settings(deadline=None, max_examples=60)
@given(
    cre=st.floats(-2, 2, allow_nan=False),
    cim=st.floats(-2, 2, allow_nan=False),
    zre=st.floats(-0.7, 0.7, allow_nan=False),
    zim=st.floats(-0.7, 0.7, allow_nan=False),
)
def test_scale_map_pointwise(cre, cim, zre, zim):
    F = catalog.f2()
    c = complex(cre, cim)
    z = complex(zre, zim)
    lhs = evaluate(scale_map(F, c), z)
    rhs = c * evaluate(F, z)
    assert abs(lhs - rhs) <= 1e-13 * (1.0 + abs(rhs))


def test_build_map_dispatch():
    from polyharm import mapspec

    F = build_map(mapspec.loads('{"builtin": "identity"}'))
    assert evaluate(F, 0.5j) == 0.5j
    assert F.label == "identity"
    named = build_map(mapspec.loads('{"builtin": "identity", "label": "mine"}'))
    assert named.label == "mine"
    G = build_map(mapspec.loads(
        '{"p": 1, "J": 1, "terms": [{"n": 1, "j": 1, "a": [2.0, 0.0]}]}'))
    assert evaluate(G, 0.25) == 0.5
    with pytest.raises(MalformedSpec):
        build_map({"builtin": "identity"})
