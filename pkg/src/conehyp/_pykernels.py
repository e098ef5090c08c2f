"""Pure Python / numpy versions of the compiled kernels in ``_ckernels.pyx``.

Same signatures and semantics; selected automatically when the extension is
missing or ``CONEHYP_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import numpy as np


def _root_radius(coeffs: np.ndarray) -> np.ndarray:
    d = coeffs.shape[1] - 1
    lead = np.abs(coeffs[:, d])
    safe = np.where(lead == 0, 1.0, lead)
    ks = np.arange(d)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = (np.abs(coeffs[:, :d]) / safe[:, None]) ** (1.0 / (d - ks))[None, :]
    r = r.max(axis=1)
    return np.where(r == 0, 1.0, r)


def aberth_batch(coeffs, maxiter: int = 500, tol: float = 1e-14):
    """Roots of many polynomials of one degree (coefficients lowest power first)."""
    c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    npoly, d = c.shape[0], c.shape[1] - 1
    if d < 1:
        return np.zeros((npoly, 0), dtype=np.complex128), np.ones(npoly, dtype=np.uint8)
    valid = np.abs(c[:, d]) != 0
    ang = 2.0 * np.pi * np.arange(d) / d + 0.4
    z = _root_radius(c)[:, None] * np.exp(1j * ang)[None, :]
    conv = np.zeros(npoly, dtype=bool)
    active = valid.copy()
    for _ in range(maxiter):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        moved = np.zeros(idx.size, dtype=bool)
        # Gauss-Seidel sweep over root slots, vectorized across polynomials
        for i in range(d):
            zi = z[idx, i]
            p = c[idx, d].copy()
            dp = np.zeros_like(zi)
            for k in range(d - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + c[idx, k]
            with np.errstate(divide="ignore", invalid="ignore"):
                w = np.where(dp != 0, p / np.where(dp == 0, 1, dp), 1e-3 * (1 + np.abs(zi)))
                diff = zi[:, None] - z[idx, :]
                diff[:, i] = np.inf
                diff = np.where(diff == 0, np.inf, diff)
                acc = (1.0 / diff).sum(axis=1)
                w = w / (1.0 - w * acc)
            w = np.where(p == 0, 0, w)
            z[idx, i] = zi - w
            moved |= np.abs(w) > tol * (1.0 + np.abs(z[idx, i]))
        finished = idx[~moved]
        conv[finished] = True
        active[finished] = False
    return z, conv.astype(np.uint8)


def _reduce(mat, p: int) -> list[list[int]]:
    return [[int(x) % p for x in row] for row in np.asarray(mat, dtype=object)]


def rank_mod_p(mat, p: int) -> int:
    a = _reduce(mat, p)
    nr = len(a)
    nc = len(a[0]) if nr else 0
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        piv = next((i for i in range(rank, nr) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        inv = pow(pr[col], p - 2, p)
        for i in range(rank + 1, nr):
            ri = a[i]
            if ri[col]:
                c = ri[col] * inv % p
                for j in range(col, nc):
                    if pr[j]:
                        ri[j] = (ri[j] - c * pr[j]) % p
        rank += 1
    return rank


def det_mod_p(mat, p: int) -> int:
    a = _reduce(mat, p)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k] % p
        inv = pow(a[k][k], p - 2, p)
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            if ri[k]:
                c = ri[k] * inv % p
                for j in range(k, n):
                    if rk[j]:
                        ri[j] = (ri[j] - c * rk[j]) % p
    return det % p
