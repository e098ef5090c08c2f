"""Exact elimination: resultants, subresultants, discriminants, Macaulay resultants.

Resultants of forms treat each input as a polynomial in the eliminated
variable of *formal* degree equal to its total degree, which keeps the
result homogeneous of degree ``deg f * deg g``.  Sylvester matrices put the
rows of ``f`` first.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Sequence

from .polycore import (
    HomForm,
    binary_to_uni,
    coefficients_in,
    content_primitive,
    diff,
    exact_divide,
    monomials,
    substitute,
    uni_deriv,
    uni_gcd,
    uni_to_binary,
    z2_valuation,
)


class InconclusiveError(ArithmeticError):
    """Raised when a randomized fallback could not reach a decision."""


# ---------------------------------------------------------------------------
# determinants


def bareiss_det(rows: Sequence[Sequence], divide: Callable | None = None, zero=0):
    """Fraction-free Gaussian elimination determinant.

    ``divide(a, b)`` must perform exact division in the entry ring (defaults
    to integer floor division, exact by construction).  The pivot is always
    the first row at or below the diagonal with a nonzero entry.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    if divide is None:
        divide = lambda x, y: x // y  # noqa: E731
    sign = 1
    prev = None
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if _nonzero(a[i][k])), None)
        if piv is None:
            return zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                v = akk * ri[j] - aik * rk[j]
                ri[j] = v if prev is None else divide(v, prev)
            ri[k] = zero
        prev = akk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _nonzero(x) -> bool:
    if isinstance(x, HomForm):
        return not x.is_zero()
    return bool(x)


def det_int(rows: Sequence[Sequence[int]]) -> int:
    return bareiss_det(rows)


def det_rational(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix via row scaling to integers."""
    scale = Fraction(1)
    ints = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = reduce(lambda u, v: u * v // math.gcd(u, v), (x.denominator for x in r), 1)
        scale /= den
        ints.append([int(x * den) for x in r])
    return scale * det_int(ints)


def _form_divide(a: HomForm, b: HomForm) -> HomForm:
    if a.is_zero():
        return a
    return exact_divide(a, b)


def det_forms(rows: Sequence[Sequence[HomForm]], nvars: int) -> HomForm:
    """Determinant of a matrix of forms (entries of compatible degrees)."""
    zero = HomForm.zero(nvars)
    if not rows:
        return HomForm.constant(nvars, 1)
    if len(rows) == 1:
        return rows[0][0]
    return bareiss_det(rows, _form_divide, zero)


# ---------------------------------------------------------------------------
# Sylvester resultants


def _coeff_column(f: HomForm, var: int, degree: int) -> list[HomForm]:
    """Coefficient forms of ``var^degree`` down to ``var^0`` (highest first)."""
    coeffs = coefficients_in(f, var)
    rest = f.nvars - 1
    out = []
    for k in range(degree, -1, -1):
        out.append(coeffs[k] if k < len(coeffs) else HomForm.zero(rest))
    return out


def sylvester_matrix(f: HomForm, g: HomForm, var: int, p: int | None = None, q: int | None = None) -> list[list[HomForm]]:
    """Sylvester matrix of ``f`` (formal degree ``p``) and ``g`` (formal degree ``q``) in ``var``."""
    p = f.degree if p is None else p
    q = g.degree if q is None else q
    cf = _coeff_column(f, var, p)
    cg = _coeff_column(g, var, q)
    zero = HomForm.zero(f.nvars - 1)
    n = p + q
    rows = []
    for i in range(q):
        rows.append([zero] * i + cf + [zero] * (n - p - 1 - i))
    for i in range(p):
        rows.append([zero] * i + cg + [zero] * (n - q - 1 - i))
    return rows


def _check_pair(f: HomForm, g: HomForm, var: int) -> None:
    if f.nvars != g.nvars:
        raise ValueError(f"mixed variable counts {f.nvars} and {g.nvars}")
    if f.nvars < 2:
        raise ValueError("need at least two variables to eliminate one")
    if not 0 <= var < f.nvars:
        raise IndexError(f"variable {var} out of range")
    for name, h in (("f", f), ("g", g)):
        if h.is_zero() or h.degree_in(var) < 1:
            raise ValueError(f"{name} is constant in the eliminated variable")


def sylvester_resultant(f: HomForm, g: HomForm, var: int) -> HomForm:
    """Resultant of two forms with respect to ``var``, in the remaining variables.

    >>> t, w = HomForm.var(2, 0), HomForm.var(2, 1)
    >>> str(sylvester_resultant(t * t - w * w, t - w.scale(2), 0))
    '(3)*z0^2'
    """
    _check_pair(f, g, var)
    cf, f_int = content_primitive(f)
    cg, g_int = content_primitive(g)
    rows = sylvester_matrix(f_int, g_int, var)
    nv = f.nvars - 1
    if nv == 1:
        # entries are monomials c*w^k; the determinant is (det of scalars) * w^(pq)
        ints = [[0 if e.is_zero() else int(e.leading_coefficient()) for e in r] for r in rows]
        val = det_int(ints)
        res = HomForm(1, {(f.degree * g.degree,): val})
    else:
        res = det_forms(rows, nv)
    return res.scale(cf ** g.degree * cg ** f.degree)


def resultant_uni(p: Sequence, q: Sequence) -> Fraction:
    """Sylvester resultant of two univariate coefficient lists (lowest power first)."""
    p = [Fraction(c) for c in p]
    q = [Fraction(c) for c in q]
    while p and not p[-1]:
        p.pop()
    while q and not q[-1]:
        q.pop()
    if len(p) < 2 or len(q) < 2:
        raise ValueError("both polynomials need positive degree")
    a, b = len(p) - 1, len(q) - 1
    n = a + b
    rows = []
    for i in range(b):
        rows.append([0] * i + p[::-1] + [0] * (n - a - 1 - i))
    for i in range(a):
        rows.append([0] * i + q[::-1] + [0] * (n - b - 1 - i))
    return det_rational(rows)


# ---------------------------------------------------------------------------
# subresultants


@dataclass(frozen=True)
class SubresultantChain:
    """Principal subresultant coefficients of a pair eliminated in one variable.

    ``psc[k]`` is the principal subresultant coefficient of order ``k`` for
    ``k = 0 .. min(p, q) - 1``; ``prs`` is the subresultant remainder sequence
    as coefficient lists (index = power of the eliminated variable).
    """

    f: HomForm
    g: HomForm
    var: int
    psc: tuple[HomForm, ...]
    prs: tuple[tuple[HomForm, ...], ...]

    def gcd_degree_at(self, point) -> int:
        """Gcd degree of the pair specialized at ``point`` (remaining variables)."""
        for k, s in enumerate(self.psc):
            if s.is_zero():
                continue
            if s(*point) != 0:
                return k
        return len(self.psc)


def _poly_prem(a: list[HomForm], b: list[HomForm], zero: HomForm) -> list[HomForm]:
    """Pseudo-remainder of polynomials with form coefficients (lowest power first)."""
    db = len(b) - 1
    r = list(a)
    if len(r) - 1 < db:
        return r
    lb = b[-1]
    steps = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = r[-1]
        r = [x * lb for x in r]
        for i in range(db + 1):
            if not c.is_zero() and not b[i].is_zero():
                r[i + k] = r[i + k] - c * b[i]
        r.pop()
        while r and r[-1].is_zero():
            r.pop()
        steps -= 1
    if steps and r:
        lbs = lb ** steps
        r = [x * lbs for x in r]
    return r


def _neg_pow(x: HomForm, k: int) -> HomForm:
    return (-x) ** k


def subresultant_chain(f: HomForm, g: HomForm, var: int) -> SubresultantChain:
    """Subresultant PRS of ``f`` and ``g`` in ``var`` with principal coefficients.

    Requires ``deg_var f >= deg_var g >= 1``.  Degrees are the actual degrees
    in ``var``; ``psc[0]`` agrees with :func:`sylvester_resultant` up to sign
    whenever the actual and formal degrees coincide.
    """
    _check_pair(f, g, var)
    A = coefficients_in(f, var)
    B = coefficients_in(g, var)
    while A and A[-1].is_zero():
        A.pop()
    while B and B[-1].is_zero():
        B.pop()
    p, q = len(A) - 1, len(B) - 1
    if p < q:
        raise ValueError("subresultant_chain expects deg f >= deg g in the eliminated variable")
    nv = f.nvars - 1
    zero = HomForm.zero(nv)
    psc = [zero] * q
    prs = [tuple(A), tuple(B)]

    d = p - q
    h = [x * ((-1) ** (d + 1)) for x in _poly_prem(A, B, zero)]
    lc = B[-1]
    c = lc ** d
    # c now holds psc_q; remember it for the next step
    c = -c
    a_, b_ = A, B
    m = q
    while h:
        k = len(h) - 1
        prs.append(tuple(h))
        a_, b_, d = b_, h, m - k
        m = k
        beta = -lc * (c ** d)
        h = [_form_divide(x, beta) for x in _poly_prem(a_, b_, zero)]
        while h and h[-1].is_zero():
            h.pop()
        lc = b_[-1]
        if d > 1:
            c = exact_divide(_neg_pow(lc, d), c ** (d - 1))
        else:
            c = -lc
        if k < q:
            psc[k] = -c
    return SubresultantChain(f, g, var, tuple(psc), tuple(prs))


def psc_by_determinants(f: HomForm, g: HomForm, var: int) -> list[HomForm]:
    """Principal subresultant coefficients straight from their determinant definition.

    Independent of :func:`subresultant_chain`; used to cross-check it.
    """
    _check_pair(f, g, var)
    A = coefficients_in(f, var)
    B = coefficients_in(g, var)
    while A and A[-1].is_zero():
        A.pop()
    while B and B[-1].is_zero():
        B.pop()
    p, q = len(A) - 1, len(B) - 1
    nv = f.nvars - 1
    zero = HomForm.zero(nv)
    out = []
    for k in range(min(p, q)):
        size = p + q - 2 * k
        ncols = p + q - k
        rows = []
        for i in range(q - k):
            row = [zero] * ncols
            for j, c in enumerate(reversed(A)):
                row[i + j] = c
            rows.append(row)
        for i in range(p - k):
            row = [zero] * ncols
            for j, c in enumerate(reversed(B)):
                row[i + j] = c
            rows.append(row)
        # columns for the powers p+q-k-1 down to k
        sq = [r[:size] for r in rows]
        out.append(det_forms(sq, nv))
    return out


# ---------------------------------------------------------------------------
# discriminants


def discriminant(f: HomForm, var: int) -> HomForm:
    """Discriminant of ``f`` in ``var``: ``(-1)^(d(d-1)/2) res(f, df/dvar) / lc``.

    ``d`` is the actual degree in ``var`` and ``lc`` the coefficient form of
    ``var^d``.  The normalization gives ``b^2 - 4ac`` for quadratics.
    """
    d = f.degree_in(var)
    if d < 2:
        raise ValueError(f"degree {d} in the variable is below 2")
    df = diff(f, var)
    coeffs = coefficients_in(f, var)
    lc = coeffs[d]
    if f.degree_in(var) == f.degree and df.degree_in(var) == df.degree:
        res = sylvester_resultant(f, df, var)
    else:
        # formal and actual degrees differ: use the actual-degree determinant
        rows = sylvester_matrix(f, df, var, d, d - 1)
        res = det_forms(rows, f.nvars - 1)
    try:
        q = exact_divide(res, lc) if not res.is_zero() else res
    except ArithmeticError as exc:
        raise ArithmeticError("discriminant: resultant not divisible by leading coefficient") from exc
    return -q if (d * (d - 1) // 2) % 2 else q


def discriminant_uni(p: Sequence) -> Fraction:
    p = [Fraction(c) for c in p]
    while p and not p[-1]:
        p.pop()
    d = len(p) - 1
    if d < 2:
        raise ValueError("degree below 2")
    r = resultant_uni(p, [i * p[i] for i in range(1, len(p))]) / p[-1]
    return -r if (d * (d - 1) // 2) % 2 else r


# ---------------------------------------------------------------------------
# Macaulay resultant of three ternary forms


def _macaulay_matrices(gs: Sequence[HomForm]) -> tuple[list[list[Fraction]], list[int]]:
    e = gs[0].degree
    D = 3 * (e - 1) + 1
    cols = monomials(3, D)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    nonreduced = []
    for r, mono in enumerate(cols):
        big = [i for i in range(3) if mono[i] >= e]
        if len(big) > 1:
            nonreduced.append(r)
        i = big[0]
        shift = list(mono)
        shift[i] -= e
        row = [Fraction(0)] * len(cols)
        for exp, c in gs[i].items():
            row[index[tuple(a + b for a, b in zip(exp, shift))]] = c
        rows.append(row)
    return rows, nonreduced


def macaulay_ratio(gs: Sequence[HomForm]) -> tuple[Fraction, Fraction]:
    """Macaulay determinant and its extraneous minor, undivided."""
    rows, nonred = _macaulay_matrices(gs)
    num = det_rational(rows)
    den = det_rational([[rows[i][j] for j in nonred] for i in nonred]) if nonred else Fraction(1)
    return num, den


def macaulay_resultant3(g1: HomForm, g2: HomForm, g3: HomForm, seed: int = 0, retries: int = 5) -> Fraction:
    """Resultant of three ternary forms of a common degree.

    Zero exactly when the forms share a projective zero.  When Macaulay's
    extraneous minor vanishes, the forms are pulled back along seeded random
    linear changes of coordinates and the value is mapped back through
    ``det(A)^(e^3)``.  If every retry is degenerate, a rank test on the full
    degree-D multiplication matrix still certifies a zero resultant;
    otherwise :class:`InconclusiveError` is raised.
    """
    gs = (g1, g2, g3)
    if any(g.nvars != 3 for g in gs):
        raise ValueError("macaulay_resultant3 expects forms in three variables")
    degs = {g.degree for g in gs}
    if None in degs:
        return Fraction(0)
    if len(degs) != 1:
        raise ValueError(f"forms must share one degree, got {sorted(d for d in degs)}")
    e = degs.pop()
    if e == 0:
        return Fraction(1)
    num, den = macaulay_ratio(gs)
    if den:
        return num / den
    rng = random.Random(seed)
    for _ in range(retries):
        A = [[Fraction(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
        detA = det_rational(A)
        if not detA:
            continue
        images = [HomForm.linear(A[i]) for i in range(3)]
        moved = [substitute(g, images) for g in gs]
        num, den = macaulay_ratio(moved)
        if den:
            return num / den / detA ** (e ** 3)
    # The degree-D piece of the ideal is everything iff there is no common zero.
    if rank_rational(_full_macaulay_rows(gs)) < len(monomials(3, 3 * (e - 1) + 1)):
        return Fraction(0)
    raise InconclusiveError("extraneous Macaulay minor vanished for every coordinate change")


def _full_macaulay_rows(gs: Sequence[HomForm]) -> list[list[Fraction]]:
    e = gs[0].degree
    D = 3 * (e - 1) + 1
    cols = monomials(3, D)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in gs:
        for shift in monomials(3, D - e):
            row = [Fraction(0)] * len(cols)
            for exp, c in g.items():
                row[index[tuple(a + b for a, b in zip(exp, shift))]] = c
            rows.append(row)
    return rows


def rank_rational(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix by Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        inv = 1 / pr[col]
        for i in range(rank + 1, len(a)):
            if a[i][col]:
                c = a[i][col] * inv
                ri = a[i]
                for j in range(col, ncols):
                    if pr[j]:
                        ri[j] -= c * pr[j]
        rank += 1
        if rank == len(a):
            break
    return rank


# ---------------------------------------------------------------------------
# binary forms


def binary_gcd(fs: Sequence[HomForm]) -> HomForm:
    """Gcd of binary forms, primitive with positive leading coefficient.

    Zero inputs are ignored.  A constant result is returned as the form ``1``.
    """
    nonzero = [f for f in fs if not f.is_zero()]
    if any(f.nvars != 2 for f in fs):
        raise ValueError("binary_gcd expects binary forms")
    if not nonzero:
        raise ValueError("all inputs are zero")
    v = min(z2_valuation(f) for f in nonzero)
    g = binary_to_uni(nonzero[0])
    for f in nonzero[1:]:
        if len(g) == 1:
            break
        g = uni_gcd(g, binary_to_uni(f))
    core_deg = len(g) - 1
    form = uni_to_binary(g, core_deg + v)
    return content_primitive(form)[1]


def binary_squarefree(f: HomForm) -> bool:
    """True when every root of the binary form in P^1 is simple."""
    if f.nvars != 2:
        raise ValueError("expected a binary form")
    if f.is_zero():
        raise ValueError("zero form")
    if z2_valuation(f) > 1:
        return False
    core = binary_to_uni(f)
    if len(core) <= 2:
        return True
    return len(uni_gcd(core, uni_deriv(core))) == 1


# ---------------------------------------------------------------------------
# iterated resultant res_w(res_t(a, c), b) through a tensor-algebra norm


def _int_coeffs_binary_slice(f: HomForm, x: int, fiber_var: int) -> list[int]:
    """Coefficients in ``fiber_var`` of a 3-variable integer form at ``(x, 1, .)``."""
    out = [0] * (f.degree + 1)
    for exp, c in f.items():
        out[exp[fiber_var]] += int(c) * x ** exp[0]
    return out


def _companion_scaled(coeffs: list[int]) -> list[list[int]]:
    """``lc * C`` where ``C`` is multiplication by the root on ``1, t, .., t^(m-1)``."""
    m = len(coeffs) - 1
    lc = coeffs[m]
    K = [[0] * m for _ in range(m)]
    for j in range(m - 1):
        K[j + 1][j] = lc
    for i in range(m):
        K[i][m - 1] = -coeffs[i]
    return K


def _matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def _norm_value(args) -> int:
    """``R(x, 1)`` for the iterated resultant at one integer abscissa."""
    x, a_terms, b_terms, c_terms, m, n, d = args
    a = [0] * (m + 1)
    for (e1, _, e3), c in a_terms:
        a[e3] += c * x ** e1
    b = [0] * (n + 1)
    for (e1, _, e4), c in b_terms:
        b[e4] += c * x ** e1
    c1, c2 = a[m], b[n]
    K1 = _companion_scaled(a)
    K2 = _companion_scaled(b)
    # w[ia][ib] = coefficient of t^ia w^ib in c(x, 1, t, w)
    w = [[0] * (d + 1) for _ in range(d + 1)]
    for (e1, _, e3, e4), c in c_terms:
        w[e3][e4] += c * x ** e1
    P1 = [[[int(i == j) for j in range(m)] for i in range(m)]]
    for _ in range(d):
        P1.append(_matmul(P1[-1], K1))
    P2 = [[[int(i == j) for j in range(n)] for i in range(n)]]
    for _ in range(d):
        P2.append(_matmul(P2[-1], K2))
    pw1 = [c1 ** k for k in range(d + 1)]
    pw2 = [c2 ** k for k in range(d + 1)]
    # T[ia] = sum_ib w[ia][ib] c2^(d-ib) K2^ib
    T = []
    for ia in range(d + 1):
        acc = [[0] * n for _ in range(n)]
        for ib in range(d + 1 - ia):
            s = w[ia][ib]
            if s:
                s *= pw2[d - ib]
                Pb = P2[ib]
                for i in range(n):
                    row, src = acc[i], Pb[i]
                    for j in range(n):
                        row[j] += s * src[j]
        T.append(acc)
    size = m * n
    M = [[0] * size for _ in range(size)]
    for ia in range(d + 1):
        Ta = T[ia]
        Pa = P1[ia]
        scale = pw1[d - ia]
        for i1 in range(m):
            for j1 in range(m):
                s = Pa[i1][j1]
                if not s:
                    continue
                s *= scale
                for i2 in range(n):
                    Mrow = M[i1 * n + i2]
                    Trow = Ta[i2]
                    base = j1 * n
                    for j2 in range(n):
                        Mrow[base + j2] += s * Trow[j2]
    det = det_int(M)
    den = c1 ** (d * m * n - d * n) * c2 ** (d * m * n - d * m)
    q, r = divmod(det, den)
    if r:
        raise ArithmeticError("norm determinant not divisible by the leading-coefficient power")
    return q


def _interpolate(xs: list[int], ys: list[int]) -> list[Fraction]:
    """Coefficients of the unique polynomial through equally spaced integer nodes."""
    n = len(xs)
    diffs = [list(ys)]
    coeffs = [ys[0]]
    cur = list(ys)
    for _ in range(1, n):
        cur = [cur[i + 1] - cur[i] for i in range(len(cur) - 1)]
        coeffs.append(cur[0])
    # Newton form with step 1: p(x) = sum_k coeffs[k]/k! * prod_{j<k}(x - x_j)
    fact = math.factorial(n - 1)
    scaled = [coeffs[k] * (fact // math.factorial(k)) for k in range(n)]
    poly = [scaled[n - 1]]
    for k in range(n - 2, -1, -1):
        # poly = poly * (x - xs[k]) + scaled[k]
        new = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] -= c * xs[k]
        new[0] += scaled[k]
        poly = new
    del diffs
    return [Fraction(c, fact) for c in poly]


def iterated_resultant(a: HomForm, b: HomForm, c: HomForm, workers: int = 1) -> HomForm:
    """``res_w(res_t(a, c), b)`` as a binary form in the first two variables.

    ``a`` lives in ``(x, y, t)``, ``b`` in ``(x, y, w)`` and ``c`` in
    ``(x, y, t, w)``; ``a`` and ``b`` must have nonzero constant coefficients
    on ``t^deg a`` and ``w^deg b``.  The value at each ``(x : 1)`` is the norm
    of ``c`` in ``Q[t, w] / (a, b)``, computed as an integer determinant, and
    the form is recovered by interpolation.  ``workers > 1`` spreads the
    evaluation points over processes; results do not depend on it.
    """
    m, n, d = a.degree, b.degree, c.degree
    if a.coeff((0, 0, m)) == 0 or b.coeff((0, 0, n)) == 0:
        raise ValueError("leading coefficients in the eliminated variables must be nonzero constants")
    if c.is_zero():
        return HomForm.zero(2)
    la, ai = content_primitive(a)
    lb, bi = content_primitive(b)
    lc, ci = content_primitive(c)
    D = m * n * d
    xs = [k - D // 2 for k in range(D + 1)]
    a_terms = [(e, int(v)) for e, v in ai.items()]
    b_terms = [(e, int(v)) for e, v in bi.items()]
    c_terms = [(e, int(v)) for e, v in ci.items()]
    jobs = [(x, a_terms, b_terms, c_terms, m, n, d) for x in xs]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            ys = list(pool.map(_norm_value, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        ys = [_norm_value(j) for j in jobs]
    poly = _interpolate(xs, ys)
    form = uni_to_binary(poly, D)
    return form.scale(la ** (d * n) * lc ** (m * n) * lb ** (m * d))


def iterated_resultant_sylvester(a: HomForm, b: HomForm, c: HomForm) -> HomForm:
    """Same quantity as :func:`iterated_resultant` through nested Sylvester determinants."""
    from .polycore import relabel

    a4 = relabel(a, 4, (0, 1, 2))
    s = sylvester_resultant(a4, c, 2)
    return sylvester_resultant(s, b, 2)
