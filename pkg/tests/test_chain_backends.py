import numpy as np
import pytest

from hullstab.chain import BACKEND, available_backends, chain_final_units


def test_backend_is_reported():
    assert BACKEND in ("cython", "python")
    assert BACKEND in available_backends()


def test_compiled_kernel_is_available_here():
    # The build in this repository compiles the extension; if this fails,
    # reinstall with `pip install -e . --no-build-isolation`.
    assert "cython" in available_backends()


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        chain_final_units(np.array([1], dtype=np.int64), 1, backend="fortran")


def test_backends_agree_on_random_inputs():
    if len(available_backends()) < 2:
        pytest.skip("only one backend built")
    rng = np.random.default_rng(3)
    for _ in range(300):
        n = int(rng.integers(1, 200))
        vals = rng.permutation(np.arange(n, dtype=np.int64))
        tol = int(rng.integers(0, 12))
        assert chain_final_units(vals, tol, backend="python") == chain_final_units(
            vals, tol, backend="cython"
        )


def test_backends_agree_on_adversarial_orders():
    if len(available_backends()) < 2:
        pytest.skip("only one backend built")
    descending = np.arange(999, -1, -1, dtype=np.int64)
    ascending = np.arange(1000, dtype=np.int64)
    for tol in (0, 1, 7):
        for vals in (descending, ascending):
            assert chain_final_units(vals, tol, backend="python") == chain_final_units(
                vals, tol, backend="cython"
            )


def test_negative_tolerance_rejected():
    for backend in available_backends():
        with pytest.raises(ValueError):
            chain_final_units(np.array([1, 2], dtype=np.int64), -1, backend=backend)
