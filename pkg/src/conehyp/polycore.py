"""Sparse exact homogeneous polynomials over the rationals.

A :class:`HomForm` is an immutable map from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients, all exponent vectors summing to the
same total degree.  Terms are kept in graded-lex order so two forms compare
equal exactly when they are the same polynomial.

Univariate helpers at the bottom of the module work on plain coefficient
lists, lowest power first, with trailing zeros stripped (``[]`` is zero).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

import gmpy2

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not allowed in exact forms")
    return Fraction(value)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, in descending lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    out.sort(reverse=True)
    return out


class HomForm:
    """Homogeneous polynomial in ``nvars`` variables with rational coefficients.

    The zero polynomial has no terms and ``degree is None``.
    """

    __slots__ = ("nvars", "degree", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | Iterable = (), degree: int | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = as_rational(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
        clean = {e: c for e, c in clean.items() if c}
        degs = {sum(e) for e in clean}
        if len(degs) > 1:
            raise ValueError(f"terms of mixed degrees {sorted(degs)}: form is not homogeneous")
        if clean:
            d = degs.pop()
            if degree is not None and degree != d:
                bad = next(iter(clean))
                raise ValueError(f"term {bad} has degree {d}, expected {degree}")
            degree = d
        else:
            degree = None
        self.nvars = nvars
        self.degree = degree
        self._terms = tuple(sorted(clean.items(), reverse=True))
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "HomForm":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "HomForm":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, nvars: int, index: int) -> "HomForm":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "HomForm":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, degree: int | None, terms: dict) -> "HomForm":
        # trusted fast path: terms already homogeneous, nonzero, Fraction-valued
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.degree = degree if terms else None
        obj._terms = tuple(sorted(terms.items(), reverse=True))
        obj._hash = None
        return obj

    # basic protocol -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for _, c in self._terms)

    def is_constant(self) -> bool:
        return self.degree == 0

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomForm):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self._terms))
        return self._hash

    def __repr__(self) -> str:
        return f"HomForm({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self._terms:
            mono = "*".join(f"z{i}^{e}" if e > 1 else f"z{i}" for i, e in enumerate(exp) if e)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return dict(self._terms).get(tuple(exp), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the first term in canonical order."""
        if not self._terms:
            raise ValueError("zero form has no leading coefficient")
        return self._terms[0][1]

    # arithmetic -----------------------------------------------------------

    def _check_compatible(self, other: "HomForm") -> None:
        if not isinstance(other, HomForm):
            raise TypeError(f"expected HomForm, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"mixed variable counts {self.nvars} and {other.nvars}")

    def __add__(self, other: "HomForm") -> "HomForm":
        self._check_compatible(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        acc = dict(self._terms)
        for e, c in other._terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return HomForm._raw(self.nvars, self.degree, acc)

    def __neg__(self) -> "HomForm":
        return HomForm._raw(self.nvars, self.degree, {e: -c for e, c in self._terms})

    def __sub__(self, other: "HomForm") -> "HomForm":
        self._check_compatible(other)
        return self + (-other)

    def scale(self, c) -> "HomForm":
        c = as_rational(c)
        if not c:
            return HomForm.zero(self.nvars)
        return HomForm._raw(self.nvars, self.degree, {e: v * c for e, v in self._terms})

    def __mul__(self, other) -> "HomForm":
        if not isinstance(other, HomForm):
            return self.scale(other)
        self._check_compatible(other)
        if not self._terms or not other._terms:
            return HomForm.zero(self.nvars)
        integral = self.is_integral() and other.is_integral()
        left = [(e, gmpy2.mpz(c.numerator)) for e, c in self._terms] if integral else self._terms
        right = [(e, gmpy2.mpz(c.numerator)) for e, c in other._terms] if integral else other._terms
        acc: dict = {}
        for e1, c1 in left:
            for e2, c2 in right:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        if integral:
            acc = {e: Fraction(int(c)) for e, c in acc.items() if c}
        else:
            acc = {e: c for e, c in acc.items() if c}
        return HomForm._raw(self.nvars, self.degree + other.degree, acc)

    def __rmul__(self, other) -> "HomForm":
        return self.scale(other)

    def __pow__(self, k: int) -> "HomForm":
        if k < 0:
            raise ValueError("negative powers are not forms")
        result = HomForm.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # evaluation and calculus ----------------------------------------------

    def __call__(self, *point):
        return evaluate(self, point)

    def diff(self, var: int) -> "HomForm":
        return diff(self, var)

    def degree_in(self, var: int) -> int:
        """Largest exponent of ``var``; -1 for the zero form."""
        return max((e[var] for e, _ in self._terms), default=-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self._terms)


def arith(f: HomForm, g: HomForm | None, op: str, k: int | None = None) -> HomForm:
    """Dispatch ``add``, ``sub``, ``mul`` or ``pow`` on forms."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "pow":
        return f ** k
    raise ValueError(f"unknown operation {op!r}")


class ProjectivePoint:
    """Point of projective space given by homogeneous coordinates.

    Exact points (all coordinates rational) are normalized so that the first
    nonzero coordinate is 1.  Numeric points keep their coordinates as given.
    """

    __slots__ = ("coords", "exact")

    def __init__(self, coords: Sequence):
        coords = list(coords)
        if not coords:
            raise ValueError("empty point")
        exact = all(isinstance(c, (int, Fraction)) for c in coords)
        if exact:
            coords = [Fraction(c) for c in coords]
        if all(c == 0 for c in coords):
            raise ValueError("all coordinates are zero")
        if exact:
            lead = next(c for c in coords if c != 0)
            coords = [c / lead for c in coords]
        self.coords = tuple(coords)
        self.exact = exact

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def evaluate(f: HomForm, point) -> object:
    """Value of ``f`` at the affine representative ``point``.

    Works for any coordinate type supporting ``+`` and ``*`` (rationals,
    complex floats, mpmath numbers).
    """
    coords = tuple(point.coords if isinstance(point, ProjectivePoint) else point)
    if len(coords) != f.nvars:
        raise ValueError(f"point has {len(coords)} coordinates, form has {f.nvars} variables")
    if not f._terms:
        return Fraction(0) if all(isinstance(c, (int, Fraction)) for c in coords) else 0 * coords[0]
    d = f.degree
    powers = []
    for c in coords:
        row = [1, c]
        for _ in range(d - 1):
            row.append(row[-1] * c)
        powers.append(row)
    total = 0
    for exp, c in f._terms:
        term = c
        for i, e in enumerate(exp):
            if e:
                term = term * powers[i][e]
        total = total + term
    return total


eval_form = evaluate


def diff(f: HomForm, var: int) -> HomForm:
    """Formal partial derivative with respect to variable ``var``."""
    if not 0 <= var < f.nvars:
        raise IndexError(f"variable {var} out of range for {f.nvars} variables")
    acc = {}
    for exp, c in f._terms:
        e = exp[var]
        if e:
            new = list(exp)
            new[var] -= 1
            acc[tuple(new)] = c * e
    return HomForm._raw(f.nvars, f.degree - 1 if acc else None, acc)


def substitute(f: HomForm, images: Sequence[HomForm]) -> HomForm:
    """Replace variable ``i`` of ``f`` by ``images[i]``.

    All nonzero images must share one degree ``e``; the result has degree
    ``deg(f) * e`` in the images' variables.
    """
    if len(images) != f.nvars:
        raise ValueError(f"need {f.nvars} images, got {len(images)}")
    nv = {g.nvars for g in images}
    if len(nv) != 1:
        raise ValueError("images live in different variable sets")
    new_nvars = nv.pop()
    degs = {g.degree for g in images if not g.is_zero()}
    if len(degs) > 1:
        raise ValueError(f"images have unequal degrees {sorted(degs)}")
    if f.is_zero():
        return HomForm.zero(new_nvars)
    d = f.degree
    cache: list[dict[int, HomForm]] = [{0: HomForm.constant(new_nvars, 1)} for _ in images]

    def power(i: int, k: int) -> HomForm:
        table = cache[i]
        if k not in table:
            table[k] = power(i, k - 1) * images[i]
        return table[k]

    acc: dict = {}
    for exp, c in f._terms:
        term = HomForm.constant(new_nvars, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        for e2, c2 in term._terms:
            acc[e2] = acc.get(e2, 0) + c2
    acc = {e: c for e, c in acc.items() if c}
    e = degs.pop() if degs else 0
    return HomForm._raw(new_nvars, d * e if acc else None, acc)


def relabel(f: HomForm, nvars: int, positions: Sequence[int]) -> HomForm:
    """Move variable ``i`` of ``f`` to slot ``positions[i]`` of an ``nvars``-variable ring."""
    if len(positions) != f.nvars:
        raise ValueError("one position per variable required")
    if len(set(positions)) != len(positions):
        raise ValueError("positions must be distinct")
    acc = {}
    for exp, c in f._terms:
        new = [0] * nvars
        for i, e in enumerate(exp):
            new[positions[i]] = e
        acc[tuple(new)] = c
    return HomForm._raw(nvars, f.degree, acc)


def coefficients_in(f: HomForm, var: int) -> list[HomForm]:
    """Coefficient forms of ``var^k`` for ``k = 0..deg(f)``, in the other variables.

    The returned forms have ``nvars - 1`` variables; coefficient ``k`` is
    zero or homogeneous of degree ``deg(f) - k``.
    """
    if f.nvars < 2:
        raise ValueError("need at least two variables")
    if f.is_zero():
        return []
    buckets: list[dict] = [dict() for _ in range(f.degree + 1)]
    for exp, c in f._terms:
        rest = exp[:var] + exp[var + 1:]
        buckets[exp[var]][rest] = c
    return [HomForm._raw(f.nvars - 1, f.degree - k, b) for k, b in enumerate(buckets)]


def from_coefficients(coeffs: Sequence[HomForm], var: int, degree: int) -> HomForm:
    """Inverse of :func:`coefficients_in` for a target total degree."""
    nvars = None
    acc = {}
    for k, c in enumerate(coeffs):
        nvars = c.nvars + 1
        for exp, v in c._terms:
            acc[exp[:var] + (k,) + exp[var:]] = v
    if nvars is None:
        raise ValueError("no coefficients")
    return HomForm(nvars, acc, degree=degree if acc else None)


def content_primitive(f: HomForm) -> tuple[Fraction, HomForm]:
    """Split ``f`` as ``content * primitive``.

    The primitive part has coprime integer coefficients and a positive
    leading coefficient in canonical order.
    """
    if f.is_zero():
        raise ValueError("zero form has no content")
    coeffs = [c for _, c in f._terms]
    num = reduce(math.gcd, (c.numerator for c in coeffs))
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs))
    content = Fraction(num, den)
    if coeffs[0] < 0:
        content = -content
    prim = {e: c / content for e, c in f._terms}
    return content, HomForm._raw(f.nvars, f.degree, prim)


def _divide_integral(f: HomForm, g: HomForm) -> dict | None:
    # integer long division; None when a quotient coefficient is not an integer
    rem = {e: gmpy2.mpz(c.numerator) for e, c in f._terms}
    g_lead_e, g_lead = g._terms[0][0], gmpy2.mpz(g._terms[0][1].numerator)
    g_rest = [(e, gmpy2.mpz(c.numerator)) for e, c in g._terms[1:]]
    quot = {}
    while rem:
        e = max(rem)
        c = rem.pop(e)
        shift = tuple(a - b for a, b in zip(e, g_lead_e))
        if any(s < 0 for s in shift):
            raise ArithmeticError("inexact division")
        q, r = divmod(c, g_lead)
        if r:
            return None
        quot[shift] = q
        for ge, gc in g_rest:
            t = tuple(a + b for a, b in zip(ge, shift))
            v = rem.get(t, 0) - q * gc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return quot


def exact_divide(f: HomForm, g: HomForm) -> HomForm:
    """Quotient ``f / g`` when ``g`` divides ``f``; raises ``ArithmeticError`` otherwise."""
    f._check_compatible(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero():
        return HomForm.zero(f.nvars)
    if g.degree > f.degree:
        raise ArithmeticError("divisor has larger degree than dividend")
    if f.is_integral() and g.is_integral():
        quot = _divide_integral(f, g)
        if quot is not None:
            return HomForm._raw(f.nvars, f.degree - g.degree, {e: Fraction(int(c)) for e, c in quot.items()})
    rem = dict(f._terms)
    g_lead_e, g_lead_c = g._terms[0]
    g_rest = g._terms[1:]
    quot = {}
    while rem:
        e = max(rem)
        c = rem.pop(e)
        shift = tuple(a - b for a, b in zip(e, g_lead_e))
        if any(s < 0 for s in shift):
            raise ArithmeticError("inexact division")
        q = c / g_lead_c
        quot[shift] = q
        for ge, gc in g_rest:
            t = tuple(a + b for a, b in zip(ge, shift))
            v = rem.get(t, 0) - q * gc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return HomForm._raw(f.nvars, f.degree - g.degree, quot)


# ---------------------------------------------------------------------------
# binary forms <-> univariate polynomials


def binary_to_uni(f: HomForm) -> list:
    """Dehomogenize a binary form at ``z2 = 1``: coefficient list in ``z1``."""
    if f.nvars != 2:
        raise ValueError("expected a binary form")
    if f.is_zero():
        return []
    out = [Fraction(0)] * (f.degree + 1)
    for (a, _), c in f._terms:
        out[a] = c
    return uni_trim(out)


def uni_to_binary(p: Sequence, degree: int) -> HomForm:
    """Homogenize a univariate polynomial to a binary form of the given degree."""
    p = uni_trim(list(p))
    if len(p) - 1 > degree:
        raise ValueError("polynomial degree exceeds requested form degree")
    return HomForm(2, {(i, degree - i): c for i, c in enumerate(p) if c}, degree=degree if p else None)


def z2_valuation(f: HomForm) -> int:
    """Exponent of the largest power of the second variable dividing a binary form."""
    if f.is_zero():
        raise ValueError("zero form")
    return min(e[1] for e, _ in f._terms)


# ---------------------------------------------------------------------------
# univariate polynomials as coefficient lists (lowest power first)


def uni_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def uni_deg(p: Sequence) -> int:
    return len(p) - 1


def uni_add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return uni_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def uni_sub(p: Sequence, q: Sequence) -> list:
    return uni_add(p, [-c for c in q])


def uni_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return uni_trim(out)


def uni_scale(p: Sequence, c) -> list:
    return uni_trim([a * c for a in p])


def uni_deriv(p: Sequence) -> list:
    return uni_trim([i * p[i] for i in range(1, len(p))])


def uni_eval(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def uni_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Division with remainder over the rationals."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    dq = len(q) - 1
    lq = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        c = r[-1] / lq
        quot[k] = c
        for i in range(dq + 1):
            r[i + k] -= c * q[i]
        r.pop()
        uni_trim(r)
    return uni_trim(quot), r


def uni_prem(p: Sequence, q: Sequence) -> list:
    """Pseudo-remainder ``lc(q)^(deg p - deg q + 1) * p mod q`` over the integers."""
    if not q:
        raise ZeroDivisionError("pseudo-division by zero")
    dq = len(q) - 1
    r = list(p)
    if len(r) - 1 < dq:
        return uni_trim(r)
    lq = q[-1]
    steps = len(r) - 1 - dq + 1
    while r and len(r) - 1 >= dq:
        k = len(r) - 1 - dq
        c = r[-1]
        r = [a * lq for a in r]
        for i in range(dq + 1):
            r[i + k] -= c * q[i]
        r.pop()
        uni_trim(r)
        steps -= 1
    if steps:
        r = [a * lq ** steps for a in r]
    return uni_trim(r)


def uni_monic(p: Sequence) -> list:
    if not p:
        return []
    lc = Fraction(p[-1])
    return [Fraction(c) / lc for c in p]


def uni_primitive(p: Sequence) -> list:
    """Integer primitive part with positive leading coefficient."""
    p = uni_trim(list(p))
    if not p:
        return []
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (Fraction(c).denominator for c in p))
    ints = [int(Fraction(c) * den) for c in p]
    g = reduce(math.gcd, ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _subresultant_prs_last(f: list, g: list) -> list:
    """Last nonzero member of the subresultant PRS of integer polynomials."""
    if len(f) < len(g):
        f, g = g, f
    d = len(f) - len(g)
    h = [c * (-1) ** (d + 1) for c in uni_prem(f, g)]
    lc = g[-1]
    c = -(lc ** d)
    while h:
        f, g, d = g, h, len(g) - len(h)
        b = -lc * c ** d
        h = [v // b for v in uni_prem(f, g)]
        lc = g[-1]
        c = (-lc) ** d // c ** (d - 1) if d > 1 else -lc
    return g


_GCD_PRIMES: list[int] = []


def _gcd_prime(i: int) -> int:
    while len(_GCD_PRIMES) <= i:
        start = _GCD_PRIMES[-1] if _GCD_PRIMES else 2 ** 61
        _GCD_PRIMES.append(int(gmpy2.next_prime(start)))
    return _GCD_PRIMES[i]


def _gcd_mod(f: list, g: list, p: int) -> list:
    a = [c % p for c in f]
    b = [c % p for c in g]
    uni_trim(a)
    uni_trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            k = len(a) - 1 - db
            c = a[-1] * inv % p
            for i in range(db + 1):
                a[i + k] = (a[i + k] - c * b[i]) % p
            a.pop()
            uni_trim(a)
        a, b = b, a
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _divides(d: list, f: list) -> bool:
    q, r = uni_divmod(f, d)
    return not r


def _modular_gcd(f: list, g: list) -> list:
    """Primitive integer gcd by CRT over 61-bit primes, verified by exact division."""
    gamma = math.gcd(f[-1], g[-1])
    best_deg = min(len(f), len(g)) - 1
    acc: list | None = None
    modulus = 1
    i = 0
    while True:
        p = _gcd_prime(i)
        i += 1
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        h = _gcd_mod(f, g, p)
        dh = len(h) - 1
        if dh == 0:
            return [1]
        if dh > best_deg:
            continue
        if acc is None or dh < best_deg:
            best_deg = dh
            acc = [c * gamma % p for c in h]
            modulus = p
        else:
            inv = pow(modulus, -1, p)
            h = [c * gamma % p for c in h]
            acc = [a + modulus * ((hc - a) * inv % p) for a, hc in zip(acc, h)]
            modulus *= p
        cand = uni_primitive([_symmetric(c, modulus) for c in acc])
        if len(cand) - 1 == best_deg and _divides(cand, f) and _divides(cand, g):
            return cand


MODULAR_GCD_THRESHOLD = 24


def uni_gcd(f: Sequence, g: Sequence, method: str = "auto") -> list:
    """Monic gcd of two univariate rational polynomials.

    ``method`` is ``"prs"`` (subresultant remainder sequence), ``"modular"``
    (multi-modular with exact verification) or ``"auto"``, which uses the
    modular route once both degrees exceed ``MODULAR_GCD_THRESHOLD``.
    """
    f = uni_trim(list(f))
    g = uni_trim(list(g))
    if not f and not g:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not f:
        return uni_monic(g)
    if not g:
        return uni_monic(f)
    fi, gi = uni_primitive(f), uni_primitive(g)
    if len(fi) == 1 or len(gi) == 1:
        return [Fraction(1)]
    if method == "auto":
        method = "modular" if min(len(fi), len(gi)) - 1 > MODULAR_GCD_THRESHOLD else "prs"
    if method == "prs":
        h = _subresultant_prs_last(fi, gi)
    elif method == "modular":
        h = _modular_gcd(fi, gi)
    else:
        raise ValueError(f"unknown gcd method {method!r}")
    return uni_monic(h)


def uni_squarefree_part(p: Sequence) -> list:
    p = uni_trim(list(p))
    if not p:
        raise ValueError("zero polynomial has no squarefree part")
    g = uni_gcd(p, uni_deriv(p))
    q, r = uni_divmod(p, g)
    assert not r
    return uni_primitive(q) if all(Fraction(c).denominator == 1 for c in p) else uni_monic(q)


def squarefree_part(f):
    """Product of the distinct irreducible factors, up to a constant.

    Accepts a univariate coefficient list or a binary :class:`HomForm`.
    """
    if isinstance(f, HomForm):
        if f.nvars != 2:
            raise ValueError("squarefree_part expects a binary form")
        if f.is_zero():
            raise ValueError("zero form has no squarefree part")
        v = z2_valuation(f)
        core = uni_squarefree_part(binary_to_uni(f))
        deg = len(core) - 1 + (1 if v else 0)
        return content_primitive(uni_to_binary(core, deg))[1]
    return uni_squarefree_part(f)


def to_text(f: HomForm) -> str:
    """Serialize in the ``vars k deg d`` text format."""
    lines = [f"vars {f.nvars} deg {f.degree if f.degree is not None else -1}"]
    for exp, c in f._terms:
        lines.append(f"{c}  " + " ".join(str(e) for e in exp))
    return "\n".join(lines) + "\n"
