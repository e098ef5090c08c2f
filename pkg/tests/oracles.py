"""Independent reference computations used by the test-suite."""

import random
from fractions import Fraction

import numpy as np

from conehyp.polycore import HomForm, evaluate, monomials

from conftest import rand_form


def binary_with_lead(rng, degree, bound=9):
    """Binary form in (t, w) whose t^degree coefficient is nonzero."""
    f = rand_form(rng, 2, degree, bound)
    lead = f.coeff((degree, 0))
    if lead == 0:
        f = f + HomForm(2, {(degree, 0): rng.choice([1, -1, 2, 3])})
    return f


def product_of_roots_resultant(f: HomForm, g: HomForm) -> complex:
    """lc(f)^q * prod g(r_i, 1) over the roots of f(t, 1), computed with numpy."""
    p, q = f.degree, g.degree
    fc = [float(f.coeff((p - k, k))) for k in range(p + 1)]  # highest power first
    roots = np.roots(fc)
    gc = [float(g.coeff((q - k, k))) for k in range(q + 1)]
    val = fc[0] ** q
    for r in roots:
        val *= np.polyval(gc, r)
    return complex(val)


def naive_resultant_sign(f: HomForm, g: HomForm) -> int:
    return (-1) ** (f.degree * g.degree)


def planted_system(rng: random.Random, e: int):
    """Three ternary forms of degree e sharing the rational zero p."""
    p = [rng.randint(-3, 3) for _ in range(3)]
    while not any(p):
        p = [rng.randint(-3, 3) for _ in range(3)]
    k = next(i for i, c in enumerate(p) if c)
    ell = HomForm.var(3, k) ** e
    gs = []
    for _ in range(3):
        h = rand_form(rng, 3, e)
        gs.append(h - ell.scale(Fraction(evaluate(h, p)) / Fraction(p[k]) ** e))
    return gs, p


class NumericSystem:
    """Vectorized evaluation of ternary forms and their Jacobian at complex points."""

    def __init__(self, forms):
        self.forms = forms
        self.e = forms[0].degree
        mons = monomials(3, self.e)
        self.exps = np.array(mons)
        self.C = np.array([[float(f.coeff(m)) for m in mons] for f in forms])
        self.scale = np.abs(self.C).sum(axis=1)

    def values(self, Z):
        pw = np.prod(Z[:, None, :] ** self.exps[None, :, :], axis=2)
        return pw @ self.C.T

    def jacobian(self, Z):
        out = np.zeros((Z.shape[0], len(self.forms), 3), dtype=complex)
        for i in range(3):
            ex = self.exps.copy()
            coef = ex[:, i].astype(float)
            ex[:, i] = np.maximum(ex[:, i] - 1, 0)
            pw = np.prod(Z[:, None, :] ** ex[None, :, :], axis=2) * coef[None, :]
            out[:, :, i] = pw @ self.C.T
        return out


def numeric_common_zero(forms, starts=400, seed=0, iters=60, tol=1e-9) -> bool:
    """Dense sampling of the unit sphere plus Gauss-Newton; True if a common zero is found."""
    sysm = NumericSystem(forms)
    rs = np.random.default_rng(seed)
    Z = rs.normal(size=(starts, 3)) + 1j * rs.normal(size=(starts, 3))
    Z /= np.linalg.norm(Z, axis=1)[:, None]
    for _ in range(iters):
        V = sysm.values(Z)
        J = sysm.jacobian(Z)
        # chart row keeps the iterate on <conj(z0), z> = 1
        A = np.concatenate([J, np.conj(Z)[:, None, :]], axis=1)
        b = np.concatenate([-V, np.zeros((Z.shape[0], 1))], axis=1)
        Ah = np.conj(np.swapaxes(A, 1, 2))
        N = Ah @ A + 1e-14 * np.eye(3)[None]
        step = np.linalg.solve(N, (Ah @ b[:, :, None]))[:, :, 0]
        Z = Z + step
        Z /= np.linalg.norm(Z, axis=1)[:, None]
    res = np.abs(sysm.values(Z)) / sysm.scale[None, :]
    return bool((res.max(axis=1) < tol).any())
