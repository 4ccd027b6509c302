import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlcu.catalog import fractional_coefficients, fractional_matrix, hartley_matrix, pauli_decompose, pauli_representation
from qlcu.circulant import (
    CoefficientVector,
    character_table,
    check_key_lemma,
    combine,
    group_circulant,
    projective_group_circulant,
    solve_coefficients,
    unitarize_coefficients,
)
from qlcu.errors import NonAbelianError, NotInSpanError
from qlcu.groups import FactorSet, Representation, group_from_table, make_cyclic_group, make_elementary_abelian
from qlcu.linalg import I2, SIGMA_X, SIGMA_Z, dft_matrix, is_unitary
from qlcu.synth import kitaev_circulant_identity

from conftest import haar


def loop_circulant(group, alpha, omega=None):
    addrs = group.addresses()
    out = np.zeros((group.order, group.order), dtype=complex)
    for i, g in enumerate(addrs):
        for j, h in enumerate(addrs):
            gi = group.invert(g)
            w = 1 if omega is None else omega(gi, h)
            out[i, j] = alpha[group.index(group.multiply(gi, h))] / w
    return out


def fourier_rep(n_dim):
    f = dft_matrix(n_dim)
    return Representation(make_cyclic_group(2), [np.linalg.matrix_power(f, i) for i in range(4)])


def unitary_span_target(n_dim, rng):
    """Unitary target in the span of F^g, from random unit phases pushed through the DFT."""
    _, rhs = kitaev_circulant_identity(2, np.exp(2j * np.pi * rng.random(4)))
    beta = rhs[0]
    return combine(fourier_rep(n_dim), beta), beta


def displayed_cu(a, b):
    ac, bc = np.conj(a), np.conj(b)
    return 0.5 * np.array([
        [a - ac, b + bc, a + ac, b - bc],
        [b + bc, a - ac, b - bc, a + ac],
        [a + ac, -(b - bc), a - ac, -(b + bc)],
        [b - bc, -(a + ac), b + bc, -(a - ac)],
    ])


def test_cyclic_circulant_right_shifts():
    c = np.array([1, 2, 3, 4], dtype=complex)
    m = group_circulant(make_cyclic_group(2), c)
    for r in range(4):
        assert np.array_equal(m[r], np.roll(c, r))


def test_hartley_r_matrix():
    a = ((1 - 1j) / 2, (1 + 1j) / 2)
    expected = 0.5 * np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]])
    assert np.array_equal(group_circulant(make_cyclic_group(1), a), expected)


def test_delta_gives_identity():
    for g in (make_cyclic_group(3), make_elementary_abelian(2)):
        delta = np.zeros(g.order)
        delta[0] = 1
        assert np.array_equal(group_circulant(g, delta), np.eye(g.order))


@pytest.mark.parametrize("group", [make_cyclic_group(3), make_elementary_abelian(3)], ids=["Z8", "Z2^3"])
def test_circulant_matches_loop_and_rows_are_permutations(group, rng):
    a = rng.standard_normal(group.order) + 1j * rng.standard_normal(group.order)
    m = group_circulant(group, a)
    assert np.array_equal(m, loop_circulant(group, a))
    for row, col in zip(m, m.T):
        assert sorted(row, key=lambda z: (z.real, z.imag)) == sorted(a, key=lambda z: (z.real, z.imag))
        assert sorted(col, key=lambda z: (z.real, z.imag)) == sorted(a, key=lambda z: (z.real, z.imag))


def test_projective_trivial_equals_ordinary(rng):
    g = make_cyclic_group(2)
    a = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    assert np.array_equal(projective_group_circulant(g, FactorSet.trivial(g), a), group_circulant(g, a))


def test_projective_matches_loop(rng):
    rep = pauli_representation()
    a = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    m = projective_group_circulant(rep.group, rep.factor_set, a)
    assert np.allclose(m, loop_circulant(rep.group, a, rep.factor_set.omega), atol=1e-15)


def test_projective_pauli_matches_displayed_cu():
    a, b = 0.6, 0.8j
    u = np.array([[a, np.conj(b)], [b, -np.conj(a)]])
    rep = pauli_representation()
    m = projective_group_circulant(rep.group, rep.factor_set, pauli_decompose(u))
    order = [0, 2, 1, 3]  # element indices of 1, sigma_x, sigma_z, sigma_x sigma_z
    assert np.allclose(m[np.ix_(order, order)], displayed_cu(a, b), atol=1e-15)


def test_solve_hartley_coefficients():
    alpha = solve_coefficients(hartley_matrix(16), fourier_rep(16))
    assert np.allclose(alpha.alpha, [0, (1 - 1j) / 2, 0, (1 + 1j) / 2], atol=1e-12)


def test_solve_single_image_gives_delta():
    rep = fourier_rep(8)
    for i in range(4):
        alpha = solve_coefficients(rep.images[i], rep)
        assert np.allclose(alpha.alpha, np.eye(4)[i], atol=1e-12)


def test_solve_fractional_matches_formulas():
    theta = 0.3
    e = np.exp(1j * theta)
    oracle = [0.5 * (1 + e) * np.cos(theta), 0.5 * (1 - 1j * e) * np.sin(theta),
              0.5 * (-1 + e) * np.cos(theta), 0.5 * (-1 - 1j * e) * np.sin(theta)]
    alpha = solve_coefficients(fractional_matrix(8, theta), fourier_rep(8))
    assert np.allclose(alpha.alpha, oracle, atol=1e-12)


def test_not_in_span():
    rep = Representation(make_cyclic_group(1), [I2, SIGMA_Z])
    with pytest.raises(NotInSpanError) as exc:
        solve_coefficients(SIGMA_X, rep)
    assert exc.value.residual > 0.5
    assert "residual" in str(exc.value)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solve_reconstructs(seed):
    rng = np.random.default_rng(seed)
    rep = fourier_rep(8)
    a = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    target = combine(rep, a)
    alpha = solve_coefficients(target, rep)
    assert np.max(np.abs(combine(rep, alpha) - target)) <= 1e-10


def test_unitarize_dependent_z2():
    rep = Representation(make_cyclic_group(1), [I2, I2])
    naive = solve_coefficients(I2, rep)
    assert np.allclose(naive.alpha, [0.5, 0.5])
    assert not is_unitary(group_circulant(rep.group, naive))
    alpha = unitarize_coefficients(I2, rep)
    assert np.max(np.abs(alpha.alpha - [1, 0])) <= 1e-12


def test_unitarize_independent_equals_solve(rng):
    rep = fourier_rep(8)
    target, _ = unitary_span_target(8, rng)
    assert np.allclose(unitarize_coefficients(target, rep).alpha, solve_coefficients(target, rep).alpha, atol=1e-10)


def test_unitarize_z4_sigma_z():
    rep = Representation(make_cyclic_group(2), [np.linalg.matrix_power(SIGMA_Z, g) for g in range(4)])
    alpha = unitarize_coefficients(SIGMA_Z, rep)
    assert is_unitary(group_circulant(rep.group, alpha), 1e-10)
    assert np.max(np.abs(combine(rep, alpha) - SIGMA_Z)) <= 1e-10
    # brute force over the two free character values: all unit choices are unitary,
    # a non-unit choice is not
    chars = np.array([[1j ** (k * g) for g in range(4)] for k in range(4)])
    fixed = chars @ alpha.alpha
    for p in np.exp(2j * np.pi * np.linspace(0, 1, 7)):
        spectrum = fixed.copy()
        spectrum[[1, 3]] = p, np.conj(p)
        a = chars.conj().T @ spectrum / 4
        assert is_unitary(group_circulant(rep.group, a), 1e-10)
        assert np.max(np.abs(combine(rep, a) - SIGMA_Z)) <= 1e-10


def test_unitarize_non_abelian_rejected():
    d8 = np.zeros((8, 8), dtype=int)
    for i in range(8):
        for j in range(8):
            a, b = divmod(i, 2)
            c, d = divmod(j, 2)
            d8[i, j] = ((a + (c if b == 0 else -c)) % 4) * 2 + (b ^ d)
    g = group_from_table(d8, check_transversal=False)
    rep = Representation(g, np.broadcast_to(np.eye(2), (8, 2, 2)))
    with pytest.raises(NonAbelianError):
        unitarize_coefficients(I2, rep)


def test_character_table_orthogonal():
    for g in (make_cyclic_group(3), make_elementary_abelian(3)):
        chars = character_table(g)
        assert np.allclose(chars @ chars.conj().T, g.order * np.eye(g.order), atol=1e-12)


def test_check_unitary_circulant_examples(rng):
    rep = fourier_rep(16)
    assert check_key_lemma(rep, solve_coefficients(hartley_matrix(16), rep), 1e-9)
    prep = pauli_representation()
    for _ in range(20):
        assert check_key_lemma(prep, pauli_decompose(haar(2, rng)), 1e-9)
    dep = Representation(make_cyclic_group(1), [I2, I2])
    assert not check_key_lemma(dep, [0.5, 0.5])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([8, 16]))
def test_unitary_span_targets_give_unitary_circulant(seed, n_dim):
    rng = np.random.default_rng(seed)
    target, _ = unitary_span_target(n_dim, rng)
    assert is_unitary(target, 1e-10)
    alpha = solve_coefficients(target, fourier_rep(n_dim))
    assert is_unitary(group_circulant(make_cyclic_group(2), alpha), 1e-9)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_projective_unitarity_property(seed):
    rep = pauli_representation()
    u = haar(2, np.random.default_rng(seed))
    m = projective_group_circulant(rep.group, rep.factor_set, pauli_decompose(u))
    assert is_unitary(m, 1e-9)


@settings(max_examples=50, deadline=None)
@given(st.floats(-10, 10))
def test_fractional_circulant_unitary(theta):
    assert is_unitary(group_circulant(make_cyclic_group(2), fractional_coefficients(theta)), 1e-10)


def test_coefficient_vector_api():
    g = make_elementary_abelian(2)
    cv = CoefficientVector(g, [1, 2j, 3, 4])
    assert cv[(0, 1)] == 2j and cv[(1, 0)] == 3
    assert len(cv) == 4
    assert cv.to_json() == [[1.0, 0.0], [0.0, 2.0], [3.0, 0.0], [4.0, 0.0]]
    assert np.array_equal(CoefficientVector.from_json(g, cv.to_json()).alpha, cv.alpha)
    with pytest.raises(ValueError):
        CoefficientVector(g, [1, 2])
