"""Backend-parity and stability tests for the polynomial evaluation kernel."""

import numpy as np
import pytest

from turanbounds.kernels import available_backends, polyeval_boundary


def _random_case(rng, m, n):
    z = rng.normal(size=m) + 1j * rng.normal(size=m)
    roots = rng.normal(size=n) + 1j * rng.normal(size=n)
    lead = complex(rng.normal(), rng.normal()) or 1.0
    return z, roots, lead


def test_fallback_always_available():
    assert "fallback" in available_backends()


@pytest.mark.parametrize("m,n", [(7, 1), (32, 3), (64, 12), (16, 40)])
def test_backend_parity_random(m, n):
    backends = available_backends()
    if "compiled" not in backends:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(100 + m + n)
    z, roots, lead = _random_case(rng, m, n)
    eps = 1e-9 * float(np.abs(roots[:, None] - roots[None, :]).max()) if n > 1 else 0.0
    ref = backends["fallback"].polyeval_boundary(z, roots, lead, eps)
    core = backends["compiled"].polyeval_boundary(z, roots, lead, eps)
    for a, b in zip(ref, core):
        np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)


def test_backend_parity_at_roots_and_near_roots():
    backends = available_backends()
    if "compiled" not in backends:
        pytest.skip("compiled backend not built")
    roots = np.array([1.0 + 0j, -1.0 + 0j, 0.5 + 0.5j])
    eps = 1e-3
    z = np.array([1.0 + 0j, 1.0 + 1e-5j, -1.0 + 1e-9j, 0.0 + 0j,
                  0.5 + 0.5j, 0.5 + 0.500001j])
    ref = backends["fallback"].polyeval_boundary(z, roots, 2.0 - 1j, eps)
    core = backends["compiled"].polyeval_boundary(z, roots, 2.0 - 1j, eps)
    for a, b in zip(ref, core):
        same_inf = np.isneginf(a) == np.isneginf(b)
        assert same_inf.all()
        fin = ~np.isneginf(a)
        np.testing.assert_allclose(a[fin], b[fin], rtol=1e-12, atol=1e-12)


def test_logp_is_minus_inf_exactly_at_roots():
    roots = np.array([0.3 + 0.4j, -0.2 + 0j])
    logp, logdp = polyeval_boundary(roots.copy(), roots, 1.0, 1e-6)
    assert np.isneginf(logp).all()
    assert np.isfinite(logdp).all()  # simple roots: p' nonzero


def test_double_root_kills_derivative():
    roots = np.array([0.5 + 0j, 0.5 + 0j, -1.0 + 0j])
    logp, logdp = polyeval_boundary(np.array([0.5 + 0j]), roots, 1.0, 1e-6)
    assert np.isneginf(logp[0])
    assert np.isneginf(logdp[0])


def test_near_far_paths_agree_across_switch():
    # |p'| from the logarithmic-derivative path vs the leave-one-out path
    # must agree through the eps_root switch region.
    rng = np.random.default_rng(7)
    roots = rng.normal(size=6) + 1j * rng.normal(size=6)
    z0 = roots[2]
    offsets = 10.0 ** np.arange(-8, -1)
    z = z0 + offsets * np.exp(1j * 0.37)
    lo_far, ld_far = polyeval_boundary(z, roots, 1.3 + 0.1j, 0.0)  # all far path
    lo_near, ld_near = polyeval_boundary(z, roots, 1.3 + 0.1j, 1.0)  # all near path
    np.testing.assert_allclose(ld_far, ld_near, rtol=1e-9)
    np.testing.assert_allclose(lo_far, lo_near, rtol=1e-12)


def test_derivative_matches_analytic_power():
    # p = (z - 0)^5: |p'(z)| = 5 |z|^4
    roots = np.zeros(5, dtype=complex)
    z = np.array([2.0 + 0j, 0.5j, -1.0 + 1.0j])
    _, logdp = polyeval_boundary(z, roots, 1.0, 0.0)
    expect = np.log(5.0) + 4.0 * np.log(np.abs(z))
    np.testing.assert_allclose(logdp, expect, rtol=1e-12)
