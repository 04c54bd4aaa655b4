"""Pure-numpy implementation of the polynomial boundary-evaluation kernel.

Semantics shared with the compiled backend (kernels/_core):

``polyeval_boundary(z, roots, lead, eps_root)`` returns two float arrays
(logp, logdp) with, for each evaluation point z_i,

    logp[i]  = log|lead| + sum_k log|z_i - r_k|          (-inf at roots)
    logdp[i] = log|p'(z_i)|

The derivative uses the logarithmic-derivative identity
|p'| = |p| * |sum_k 1/(z - r_k)| whenever z is more than eps_root away from
every root, and otherwise a log-sum-exp over the n leave-one-out products,
which stays finite at (simple) roots on the evaluation path.
"""

from __future__ import annotations

import numpy as np


def _logdp_near(z: complex, roots: np.ndarray, lead: complex) -> float:
    """log|p'(z)| via leave-one-out products, stable arbitrarily close to roots."""
    d = z - roots
    ad = np.abs(d)
    zero = ad == 0.0
    nzero = int(zero.sum())
    if nzero >= 2:
        # A multiple root of p at z is also a root of p'.
        return -np.inf
    with np.errstate(divide="ignore"):
        logd = np.log(ad)
    if nzero == 1:
        j = int(np.flatnonzero(zero)[0])
        keep = np.ones(len(roots), dtype=bool)
        keep[j] = False
        return float(np.log(abs(lead)) + logd[keep].sum())
    # Full complex log-sum-exp over the n leave-one-out terms.
    total = logd.sum()
    lj = total - logd  # log magnitude of prod_{k != j}
    phases = np.angle(d)
    pj = phases.sum() - phases
    m = lj.max()
    acc = np.sum(np.exp(lj - m) * np.exp(1j * pj))
    if acc == 0.0:
        return -np.inf
    return float(np.log(abs(lead)) + m + np.log(abs(acc)))


def polyeval_boundary(z: np.ndarray, roots: np.ndarray, lead: complex,
                      eps_root: float) -> tuple[np.ndarray, np.ndarray]:
    z = np.ascontiguousarray(z, dtype=np.complex128)
    roots = np.ascontiguousarray(roots, dtype=np.complex128)
    diff = z[:, None] - roots[None, :]
    ad = np.abs(diff)
    with np.errstate(divide="ignore"):
        logd = np.log(ad)
    log_lead = np.log(abs(lead))
    logp = log_lead + logd.sum(axis=1)
    mind = ad.min(axis=1)

    logdp = np.empty_like(logp)
    far = mind > eps_root
    if np.any(far):
        s = (1.0 / diff[far]).sum(axis=1)
        with np.errstate(divide="ignore"):
            logdp[far] = logp[far] + np.log(np.abs(s))
    for i in np.flatnonzero(~far):
        logdp[i] = _logdp_near(complex(z[i]), roots, lead)
    return logp, logdp
