"""Floating point root finding and clustering used by the advisory samplers.

Nothing here feeds an exact verdict.  Double precision roots come from the
batched Aberth kernel; :func:`polish_roots_mp` refines them with mpmath
Aberth steps against exact integer coefficients when conditioning demands.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .kernels import aberth_batch
from .polycore import HomForm, binary_to_uni, uni_primitive, z2_valuation


def cluster_count(points: Sequence[complex], eps: float) -> int:
    """Number of single-linkage clusters at distance ``eps``."""
    pts = np.asarray(points, dtype=complex).ravel()
    n = pts.size
    if n == 0:
        return 0
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    order = np.argsort(pts.real)
    for a_pos in range(n):
        a = order[a_pos]
        for b_pos in range(a_pos + 1, n):
            b = order[b_pos]
            if pts[b].real - pts[a].real > eps:
                break
            if abs(pts[b] - pts[a]) <= eps:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    return len({find(i) for i in range(n)})


def cluster_counts_batch(roots: np.ndarray, eps: float) -> np.ndarray:
    """Cluster counts row by row for a small number of roots per row."""
    n, d = roots.shape
    if d == 0:
        return np.zeros(n, dtype=int)
    close = np.abs(roots[:, :, None] - roots[:, None, :]) <= eps
    if d <= 8:
        # transitive closure by repeated boolean squaring
        reach = close.copy()
        for _ in range(int(np.ceil(np.log2(max(d, 2))))):
            reach = np.einsum("nij,njk->nik", reach.astype(np.int8), reach.astype(np.int8)) > 0
        # a root is a representative if no earlier root reaches it
        first = np.argmax(reach, axis=2)
        return np.array([len(set(row)) for row in first])
    return np.array([cluster_count(r, eps) for r in roots])


def poly_roots(coeffs: Sequence[complex]) -> tuple[np.ndarray, bool]:
    """Roots of one polynomial (lowest power first) and a convergence flag."""
    c = np.asarray(coeffs, dtype=np.complex128)
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        raise ValueError("zero polynomial")
    c = c[: nz[-1] + 1]
    roots, conv = aberth_batch(np.ascontiguousarray(c[None, :]))
    return roots[0], bool(conv[0])


def scaled_float_coeffs(ints: Sequence[int]) -> tuple[np.ndarray, int]:
    """Convert big integer coefficients to doubles after a common power-of-two shift."""
    top = max(abs(int(c)).bit_length() for c in ints)
    shift = max(top - 1000, 0)
    return np.array([float(Fraction(int(c), 1 << shift)) for c in ints]), shift


def polish_roots_mp(coeffs: Sequence[int], approx: Sequence[complex], dps: int = 60, maxiter: int = 60) -> list:
    """Simultaneous Aberth refinement in mpmath against exact coefficients."""
    with mpmath.workdps(dps):
        c = [mpmath.mpf(int(x)) for x in coeffs]
        d = len(c) - 1
        z = [mpmath.mpc(complex(a)) for a in approx]
        tol = mpmath.mpf(10) ** (-(dps - 10))
        for _ in range(maxiter):
            worst = mpmath.mpf(0)
            for i in range(d):
                p = c[d]
                dp = mpmath.mpc(0)
                zi = z[i]
                for k in range(d - 1, -1, -1):
                    dp = dp * zi + p
                    p = p * zi + c[k]
                if p == 0:
                    continue
                w = p / dp
                acc = mpmath.fsum(1 / (zi - z[j]) for j in range(d) if j != i)
                w = w / (1 - w * acc)
                z[i] = zi - w
                worst = max(worst, abs(w) / (1 + abs(z[i])))
            if worst < tol:
                break
        return z


def uni_roots_precise(poly: Sequence, dps: int = 60) -> list:
    """High precision complex roots of a rational univariate polynomial."""
    ints = uni_primitive(poly)
    if len(ints) < 2:
        return []
    fl, _ = scaled_float_coeffs(ints)
    # balance the root scale before the double precision pass
    d = len(ints) - 1
    nz = [i for i, c in enumerate(fl) if c != 0]
    scale = 1.0
    if nz[0] != d and fl[nz[0]] != 0:
        scale = abs(fl[nz[0]] / fl[d]) ** (1.0 / (d - nz[0]))
        if not np.isfinite(scale) or scale == 0:
            scale = 1.0
    scaled = np.array([c * scale ** k for k, c in enumerate(fl)], dtype=complex)
    roots, _ = poly_roots(scaled)
    approx = [r * scale for r in roots]
    return polish_roots_mp(ints, approx, dps=dps)


def binary_roots_precise(f: HomForm, dps: int = 60) -> list[tuple]:
    """Projective roots ``(p1, p2)`` of a binary form, with multiplicity, in mpmath."""
    v = z2_valuation(f)
    out = [(mpmath.mpc(1), mpmath.mpc(0))] * v
    core = binary_to_uni(f)
    for r in uni_roots_precise(core, dps=dps) if len(core) > 1 else []:
        out.append((r, mpmath.mpc(1)))
    return out


def fibonacci_sphere_directions(samples: int) -> np.ndarray:
    """Deterministic low-discrepancy points of P^1 as unit vectors ``(p1, p2)``.

    Points of a spherical Fibonacci lattice are sent to the Riemann sphere's
    homogeneous coordinates.
    """
    k = np.arange(samples) + 0.5
    zc = 1.0 - 2.0 * k / samples
    rho = np.sqrt(np.maximum(0.0, 1.0 - zc * zc))
    phi = np.pi * (3.0 - np.sqrt(5.0)) * k
    x, y = rho * np.cos(phi), rho * np.sin(phi)
    # stereographic point (x + iy) / (1 - z) written projectively, chart chosen for stability
    north = zc > 0
    p1 = np.where(north, x + 1j * y, 1.0 + zc)
    p2 = np.where(north, 1.0 - zc, x - 1j * y)
    nrm = np.sqrt(np.abs(p1) ** 2 + np.abs(p2) ** 2)
    return np.stack([p1 / nrm, p2 / nrm], axis=1)


def fiber_coefficients(f: HomForm, fiber_var: int, dirs: np.ndarray) -> np.ndarray:
    """Coefficients in ``fiber_var`` of ``f`` restricted to each direction ``(p1, p2)``.

    ``f`` has three variables; the two others are the base coordinates.
    """
    base = [i for i in range(3) if i != fiber_var]
    m = f.degree
    out = np.zeros((dirs.shape[0], m + 1), dtype=np.complex128)
    for exp, c in f.items():
        val = float(c) * dirs[:, 0] ** exp[base[0]] * dirs[:, 1] ** exp[base[1]]
        out[:, exp[fiber_var]] += val
    return out


def fiber_coefficients_mp(f: HomForm, fiber_var: int, p1, p2, dps: int = 60) -> list:
    base = [i for i in range(3) if i != fiber_var]
    with mpmath.workdps(dps):
        out = [mpmath.mpc(0)] * (f.degree + 1)
        for exp, c in f.items():
            out[exp[fiber_var]] += mpmath.mpf(c.numerator) / c.denominator * p1 ** exp[base[0]] * p2 ** exp[base[1]]
        return out


def normalized_value(f: HomForm, point: Sequence) -> float:
    """``|f(q)| / (||f||_1 ||q||_2^deg)``, a scale-free smallness measure."""
    q = [complex(x) for x in point]
    nq = float(np.sqrt(sum(abs(x) ** 2 for x in q)))
    q = [x / nq for x in q]
    norm1 = float(sum(abs(c) for _, c in f.items()))
    val = 0j
    for exp, c in f.items():
        t = complex(float(c))
        for x, e in zip(q, exp):
            if e:
                t *= x ** e
        val += t
    return abs(val) / norm1 if norm1 else 0.0


def normalized_value_mp(f: HomForm, point: Sequence, dps: int = 50):
    with mpmath.workdps(dps):
        q = [mpmath.mpc(x) for x in point]
        nq = mpmath.sqrt(mpmath.fsum(abs(x) ** 2 for x in q))
        q = [x / nq for x in q]
        norm1 = mpmath.fsum(abs(mpmath.mpf(c.numerator) / c.denominator) for _, c in f.items())
        val = mpmath.mpc(0)
        for exp, c in f.items():
            t = mpmath.mpf(c.numerator) / c.denominator
            for x, e in zip(q, exp):
                if e:
                    t *= x ** e
            val += t
        return abs(val) / norm1 if norm1 else mpmath.mpf(0)
