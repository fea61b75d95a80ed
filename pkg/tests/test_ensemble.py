import numpy as np
import pytest

from eigenkit.ensemble import Distribution, EnsembleSpec, generate_ensemble, generate_matrix


def test_spec_validation():
    with pytest.raises(ValueError):
        EnsembleSpec(dimension=1, count=1)
    with pytest.raises(ValueError):
        EnsembleSpec(dimension=3, count=0)
    with pytest.raises(ValueError):
        EnsembleSpec(dimension=3, count=1, seed=-1)
    with pytest.raises(ValueError):
        EnsembleSpec(dimension=3, count=1, seed=2**64)


def test_determinism():
    spec = EnsembleSpec(dimension=3, count=2, seed=42)
    first = generate_ensemble(spec)
    second = generate_ensemble(spec)
    assert len(first) == 2
    for a, b in zip(first, second):
        assert np.array_equal(a, b)


def test_matrices_differ_across_indices():
    spec = EnsembleSpec(dimension=4, count=3, seed=0)
    ms = generate_ensemble(spec)
    assert not np.array_equal(ms[0], ms[1])
    assert not np.array_equal(ms[1], ms[2])


def test_seed_changes_output():
    a = generate_matrix(EnsembleSpec(dimension=3, count=1, seed=1), 0)
    b = generate_matrix(EnsembleSpec(dimension=3, count=1, seed=2), 0)
    assert not np.array_equal(a, b)


def test_index_streams_are_independent_of_count():
    # Matrix i only depends on (seed, i), so extending the ensemble never
    # changes earlier members.
    short = generate_ensemble(EnsembleSpec(dimension=3, count=2, seed=9))
    long = generate_ensemble(EnsembleSpec(dimension=3, count=5, seed=9))
    for a, b in zip(short, long):
        assert np.array_equal(a, b)


def test_normal_real_moments():
    # 50x50 = 2500 samples: law-of-large-numbers band.
    m = generate_matrix(EnsembleSpec(dimension=50, count=1, seed=7), 0)
    assert np.all(m.imag == 0.0)
    assert abs(m.real.mean()) < 0.1
    assert abs(m.real.var() - 1.0) < 0.15


def test_uniform_complex_entries():
    spec = EnsembleSpec(
        dimension=10, count=1, seed=3, distribution=Distribution.UNIFORM_COMPLEX
    )
    m = generate_matrix(spec, 0)
    assert np.all(np.abs(m.real) <= 1.0)
    assert np.all(np.abs(m.imag) <= 1.0)
    assert np.any(m.imag != 0.0)


def test_not_hermitian_by_chance():
    for seed in range(10):
        m = generate_matrix(EnsembleSpec(dimension=5, count=1, seed=seed), 0)
        assert np.linalg.norm(m - m.conj().T) > 1e-6


def test_dtype_is_complex128():
    m = generate_matrix(EnsembleSpec(dimension=3, count=1, seed=0), 0)
    assert m.dtype == np.complex128
