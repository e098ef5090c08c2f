"""Decision procedures for the genericity hypotheses of a cone-union deformation.

Conventions: ``f1`` is a ternary form in ``(z1, z2, z3)`` cutting the base
curve of the cone with vertex ``a = (0:0:0:1)``, ``f2`` is a ternary form in
``(z1, z2, z4)`` for the cone with vertex ``b = (0:0:1:0)``, and ``f_inf`` is
a quaternary form of degree ``m + n``.  In both ternary forms the last slot
is the fiber variable of the projection ``(z1:z2:z3:z4) -> (z1:z2)``.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import mpmath
import numpy as np

from .elimination import (
    InconclusiveError,
    binary_gcd,
    binary_squarefree,
    discriminant,
    iterated_resultant,
    macaulay_resultant3,
    subresultant_chain,
)
from .numeric import (
    binary_roots_precise,
    cluster_count,
    cluster_counts_batch,
    fiber_coefficients,
    fiber_coefficients_mp,
    fibonacci_sphere_directions,
    normalized_value,
    normalized_value_mp,
    poly_roots,
)
from .kernels import aberth_batch
from .polycore import (
    HomForm,
    ProjectivePoint,
    diff,
    evaluate,
    relabel,
    to_text,
    uni_deriv,
    uni_gcd,
    binary_to_uni,
)

SCHEMA_VERSION = 1
FIBER_VAR = 2
CHECK_ORDER = (
    "vertex_a",
    "vertex_b",
    "smooth_F1",
    "smooth_F2",
    "fiber_min_F1",
    "fiber_min_F2",
    "R_full_degree",
    "R_squarefree",
    "R_coprime_disc",
)


class DegenerateError(ValueError):
    """The double curve lies inside the surface ``f_inf = 0`` (``R`` vanishes)."""


@dataclass(frozen=True)
class ConePair:
    f1: HomForm
    f2: HomForm

    def __post_init__(self):
        for name, f in (("f1", self.f1), ("f2", self.f2)):
            if f.nvars != 3:
                raise ValueError(f"{name} must be a ternary form")
            if f.is_zero() or f.degree < 4:
                raise ValueError(f"{name} has degree {f.degree}; cones of degree >= 4 are required")

    @property
    def m(self) -> int:
        return self.f1.degree

    @property
    def n(self) -> int:
        return self.f2.degree

    @property
    def a(self) -> ProjectivePoint:
        return ProjectivePoint((0, 0, 0, 1))

    @property
    def b(self) -> ProjectivePoint:
        return ProjectivePoint((0, 0, 1, 0))

    def union_form(self) -> HomForm:
        """``f1(z1,z2,z3) * f2(z1,z2,z4)`` in four variables."""
        return relabel(self.f1, 4, (0, 1, 2)) * relabel(self.f2, 4, (0, 1, 3))


@dataclass(frozen=True)
class DeformationFamily:
    cones: ConePair
    f_inf: HomForm
    t: Fraction | None = None

    def __post_init__(self):
        if self.f_inf.nvars != 4:
            raise ValueError("f_inf must be a form in four variables")
        if self.f_inf.is_zero() or self.f_inf.degree != self.cones.m + self.cones.n:
            raise ValueError(f"f_inf must have degree m + n = {self.cones.m + self.cones.n}")

    def member(self, t=None) -> HomForm:
        """Equation ``f1 f2 + t f_inf`` of the surface at parameter ``t``."""
        t = self.t if t is None else t
        base = self.cones.union_form()
        if not t:
            return base
        return base + self.f_inf.scale(t)


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: str
    witness: dict

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


@dataclass
class Certificate:
    inputs: dict
    checks: list[CheckResult]
    numeric: dict = field(default_factory=dict)

    @property
    def overall(self) -> str:
        return "pass" if all(c.passed for c in self.checks) else "fail"

    @property
    def first_failure(self) -> str | None:
        return next((c.name for c in self.checks if not c.passed), None)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "inputs": self.inputs,
            "checks": [{"name": c.name, "verdict": c.verdict, "witness": c.witness} for c in self.checks],
            "numeric": self.numeric,
            "first_failure": self.first_failure,
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported certificate schema {data.get('schema')!r}")
        checks = [CheckResult(c["name"], c["verdict"], c["witness"]) for c in data["checks"]]
        return cls(data["inputs"], checks, data.get("numeric", {}))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class GammaForm:
    """Eliminated data of the double curve against ``f_inf``.

    ``R(z1, z2)`` vanishes exactly at the images of the points of
    ``Gamma ∩ X_inf``; ``D1``, ``D2`` cut out the special fibers of the two
    base curves.
    """

    R: HomForm
    D1: HomForm
    D2: HomForm
    m: int
    n: int

    @property
    def expected_degree(self) -> int:
        return self.m * self.n * (self.m + self.n)

    @property
    def degenerate(self) -> bool:
        return self.R.is_zero()


def form_hash(f: HomForm) -> str:
    return hashlib.sha256(to_text(f).encode()).hexdigest()


# ---------------------------------------------------------------------------
# exact checks


def check_vertices(c: ConePair) -> tuple[bool, dict]:
    """Neither vertex lies on the other cone: ``f1(0,0,1) != 0`` and ``f2(0,0,1) != 0``."""
    va = evaluate(c.f1, (0, 0, 1))
    vb = evaluate(c.f2, (0, 0, 1))
    return bool(va) and bool(vb), {"f1(0,0,1)": str(va), "f2(0,0,1)": str(vb)}


def check_smooth(f: HomForm, seed: int = 0) -> CheckResult:
    """Smoothness of the plane curve ``f = 0`` via the resultant of its partials."""
    if f.nvars != 3:
        raise ValueError("expected a ternary form")
    if f.is_zero() or f.degree < 4:
        raise ValueError(f"degree {f.degree} is below the admissible range (>= 4)")
    partials = [diff(f, i) for i in range(3)]
    try:
        value = macaulay_resultant3(*partials, seed=seed)
    except InconclusiveError as exc:
        return CheckResult("smooth", "inconclusive", {"reason": str(exc)})
    verdict = "pass" if value != 0 else "fail"
    return CheckResult("smooth", verdict, {"macaulay_resultant_nonzero": value != 0, "bits": abs(value.numerator).bit_length()})


def _psc_common_zero_depth(psc: Sequence[HomForm]) -> tuple[int, HomForm | None]:
    """Largest ``k`` such that ``psc[0..k-1]`` share a projective zero, and that gcd."""
    best, witness = 0, None
    for k in range(1, len(psc) + 1):
        head = psc[:k]
        if all(s.is_zero() for s in head):
            best, witness = k, HomForm.zero(2)
            continue
        g = binary_gcd(head)
        if g.is_constant():
            break
        best, witness = k, g
    return best, witness


def fiber_min_distinct_with_witness(f: HomForm, fiber_var: int = FIBER_VAR) -> tuple[int, dict]:
    m = f.degree_in(fiber_var)
    lead = [0, 0, 0]
    lead[fiber_var] = f.degree
    if f.coeff(tuple(lead)) == 0:
        raise ValueError("leading coefficient in the fiber variable is not a nonzero constant")
    chain = subresultant_chain(f, diff(f, fiber_var), fiber_var)
    depth, g = _psc_common_zero_depth(chain.psc)
    witness = {"max_gcd_degree": depth}
    if g is not None:
        witness["special_locus"] = "all" if g.is_zero() else to_text(g)
    return m - depth, witness


def fiber_min_distinct(f: HomForm, fiber_var: int = FIBER_VAR) -> int:
    """Minimum over ``(p1:p2)`` of the number of distinct roots of ``f(p1, p2, .)``."""
    return fiber_min_distinct_with_witness(f, fiber_var)[0]


def special_locus(f: HomForm, fiber_var: int = FIBER_VAR) -> HomForm | None:
    """Binary form vanishing on the deepest special fibers, or ``None`` if no fiber is special."""
    chain = subresultant_chain(f, diff(f, fiber_var), fiber_var)
    return _psc_common_zero_depth(chain.psc)[1]


def gamma_eliminate(fam: DeformationFamily, workers: int = 1) -> GammaForm:
    """``R = res_z4(res_z3(f1, f_inf), f2)`` and the fiber discriminants."""
    ok, _ = check_vertices(fam.cones)
    if not ok:
        raise ValueError("vertex conditions fail; leading coefficients are not constant")
    c = fam.cones
    R = iterated_resultant(c.f1, c.f2, fam.f_inf, workers=workers)
    return GammaForm(R, discriminant(c.f1, FIBER_VAR), discriminant(c.f2, FIBER_VAR), c.m, c.n)


def check_condition_i_ii(g: GammaForm) -> tuple[CheckResult, CheckResult]:
    """Condition (i) via squarefreeness of ``R`` at full degree; (ii) via ``gcd(R, D1 D2)``."""
    if g.degenerate:
        raise DegenerateError("R vanishes identically: the double curve lies on X_inf")
    full = g.R.degree == g.expected_degree
    sqf = binary_squarefree(g.R)
    wi = {"deg_R": g.R.degree, "expected": g.expected_degree, "squarefree": sqf}
    if not sqf:
        wi["repeated_part_degree"] = binary_gcd([diff(g.R, 0), diff(g.R, 1)]).degree
    cond_i = CheckResult("R_squarefree", "pass" if full and sqf else "fail", wi)
    common = binary_gcd([g.R, g.D1 * g.D2])
    wii = {"gcd_degree": common.degree}
    if not common.is_constant():
        wii["gcd"] = to_text(common)
    cond_ii = CheckResult("R_coprime_disc", "pass" if common.is_constant() else "fail", wii)
    return cond_i, cond_ii


def assemble_certificate(
    fam: DeformationFamily,
    seed: int | None = None,
    stop_early: bool = False,
    workers: int = 1,
    extra_inputs: dict | None = None,
) -> Certificate:
    """Run every exact check in the fixed order and collect the verdicts.

    With ``stop_early`` the remaining checks after the first failure are
    recorded as ``skipped`` (used inside resampling loops).
    """
    c = fam.cones
    inputs = {
        "m": c.m,
        "n": c.n,
        "seed": seed,
        "hashes": {"f1": form_hash(c.f1), "f2": form_hash(c.f2), "f_inf": form_hash(fam.f_inf)},
    }
    if fam.t is not None:
        inputs["t"] = {"value": str(fam.t), "label": "uncertified sample parameter"}
    if extra_inputs:
        inputs.update(extra_inputs)
    checks: list[CheckResult] = []

    def add(res: CheckResult) -> bool:
        checks.append(res)
        return res.passed

    def skip_rest():
        done = {r.name for r in checks}
        for name in CHECK_ORDER:
            if name not in done:
                checks.append(CheckResult(name, "skipped", {}))

    va = evaluate(c.f1, (0, 0, 1))
    vb = evaluate(c.f2, (0, 0, 1))
    ok_a = add(CheckResult("vertex_a", "pass" if va else "fail", {"f1(0,0,1)": str(va)}))
    ok_b = add(CheckResult("vertex_b", "pass" if vb else "fail", {"f2(0,0,1)": str(vb)}))
    if stop_early and not (ok_a and ok_b):
        skip_rest()
        return Certificate(inputs, checks)

    for name, f in (("smooth_F1", c.f1), ("smooth_F2", c.f2)):
        r = check_smooth(f, seed=seed or 0)
        if not add(CheckResult(name, r.verdict, r.witness)) and stop_early:
            skip_rest()
            return Certificate(inputs, checks)

    for name, f, ok in (("fiber_min_F1", c.f1, ok_a), ("fiber_min_F2", c.f2, ok_b)):
        if not ok:
            add(CheckResult(name, "skipped", {"reason": "vertex condition failed"}))
            continue
        value, wit = fiber_min_distinct_with_witness(f)
        wit = {"min_distinct": value, **wit}
        if not add(CheckResult(name, "pass" if value >= 3 else "fail", wit)) and stop_early:
            skip_rest()
            return Certificate(inputs, checks)

    if not (ok_a and ok_b):
        skip_rest()
        return Certificate(inputs, checks)

    g = gamma_eliminate(fam, workers=workers)
    if g.degenerate:
        add(CheckResult("R_full_degree", "fail", {"deg_R": None, "expected": g.expected_degree, "degenerate": True}))
        add(CheckResult("R_squarefree", "fail", {"reason": "R vanishes identically"}))
        add(CheckResult("R_coprime_disc", "fail", {"reason": "R vanishes identically"}))
        return Certificate(inputs, checks)
    full = g.R.degree == g.expected_degree
    add(CheckResult("R_full_degree", "pass" if full else "fail", {"deg_R": g.R.degree, "expected": g.expected_degree}))
    ci, cii = check_condition_i_ii(g)
    add(ci)
    add(cii)
    return Certificate(inputs, checks)


# ---------------------------------------------------------------------------
# numeric cross-checks (advisory)


def special_fiber_targets(f: HomForm, dps: int = 60) -> list[tuple]:
    """High precision directions ``(p1, p2)`` of the deepest special fibers of ``f``."""
    g = special_locus(f)
    if g is None or g.is_zero():
        return []
    from .polycore import squarefree_part

    return binary_roots_precise(squarefree_part(g), dps=dps)


def _fiber_counts_at(f: HomForm, dirs: np.ndarray, cluster_eps: float) -> tuple[np.ndarray, np.ndarray]:
    coeffs = fiber_coefficients(f, FIBER_VAR, dirs)
    roots, conv = aberth_batch(np.ascontiguousarray(coeffs))
    counts = cluster_counts_batch(roots, cluster_eps)
    return counts, conv.astype(bool)


def _unit_mp(p1, p2, dps: int = 60):
    with mpmath.workdps(dps):
        nrm = mpmath.sqrt(abs(p1) ** 2 + abs(p2) ** 2)
        return p1 / nrm, p2 / nrm


def _targeted_fiber_count(f: HomForm, p1, p2, cluster_eps: float) -> tuple[int, bool]:
    co = fiber_coefficients_mp(f, FIBER_VAR, *_unit_mp(p1, p2))
    roots, ok = poly_roots([complex(x) for x in co])
    return cluster_count(roots, cluster_eps), ok


def numeric_fiber_sweep(
    f: HomForm,
    fiber_var: int = FIBER_VAR,
    samples: int = 10_000,
    cluster_eps: float = 1e-6,
    targets: Sequence[tuple] | None = None,
) -> dict:
    """Minimum observed number of distinct fiber roots over a deterministic sweep.

    ``targets`` are extra high precision directions (for instance the
    special fibers) evaluated with mpmath before root finding.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    if fiber_var != FIBER_VAR:
        raise ValueError("fiber variable must be the last slot of the ternary form")
    dirs = fibonacci_sphere_directions(samples)
    counts, conv = _fiber_counts_at(f, dirs, cluster_eps)
    observed = counts[conv]
    hist = {int(k): int(v) for k, v in zip(*np.unique(observed, return_counts=True))}
    t_counts = []
    skipped = int((~conv).sum())
    for p1, p2 in targets or []:
        cnt, ok = _targeted_fiber_count(f, p1, p2, cluster_eps)
        if ok:
            t_counts.append(cnt)
        else:
            skipped += 1
    all_counts = list(observed.tolist()) + t_counts
    return {
        "samples": samples,
        "targets": len(targets or []),
        "cluster_eps": cluster_eps,
        "min_distinct": int(min(all_counts)) if all_counts else None,
        "min_distinct_sweep": int(observed.min()) if observed.size else None,
        "min_distinct_targets": int(min(t_counts)) if t_counts else None,
        "histogram": hist,
        "nonconverged": skipped,
    }


def numeric_line_gamma_check(
    fam: DeformationFamily,
    p_samples: int = 200,
    eps: float = 1e-8,
    cluster_eps: float = 1e-6,
    targets: Sequence[tuple] | None = None,
    certificate: Certificate | None = None,
) -> dict:
    """Count points of ``<p, a> ∩ (Gamma \\ X_inf)`` for sampled ``p`` on ``F1``.

    For each base direction ``(p1:p2)`` and each root ``p3`` of ``f1``, the
    points ``(p1:p2:p3:s)`` with ``f2(p1, p2, s) = 0`` are the double-curve
    points on the line through ``p`` and ``a``; those where the normalized
    value of ``f_inf`` exceeds ``eps`` are counted.
    """
    c = fam.cones
    dirs = fibonacci_sphere_directions(p_samples)
    c1, conv1 = aberth_batch(np.ascontiguousarray(fiber_coefficients(c.f1, FIBER_VAR, dirs)))
    c2, conv2 = aberth_batch(np.ascontiguousarray(fiber_coefficients(c.f2, FIBER_VAR, dirs)))
    counts: list[int] = []
    min_value = math.inf
    skipped = 0
    for k in range(p_samples):
        if not (conv1[k] and conv2[k]):
            skipped += 1
            continue
        p1, p2 = dirs[k]
        s_roots = _distinct(c2[k], cluster_eps)
        for p3 in _distinct(c1[k], cluster_eps):
            vals = [normalized_value(fam.f_inf, (p1, p2, p3, s)) for s in s_roots]
            min_value = min(min_value, min(vals))
            counts.append(sum(v > eps for v in vals))
    t_counts: list[int] = []
    t_min = None
    for p1, p2 in targets or []:
        q1, q2 = _unit_mp(p1, p2)
        r1, ok1 = poly_roots([complex(x) for x in fiber_coefficients_mp(c.f1, FIBER_VAR, q1, q2)])
        r2, ok2 = poly_roots([complex(x) for x in fiber_coefficients_mp(c.f2, FIBER_VAR, q1, q2)])
        if not (ok1 and ok2):
            skipped += 1
            continue
        for p3 in _distinct(r1, cluster_eps):
            vals = [float(normalized_value_mp(fam.f_inf, (q1, q2, p3, s))) for s in _distinct(r2, cluster_eps)]
            t_min = min(vals) if t_min is None else min(t_min, min(vals))
            t_counts.append(sum(v > eps for v in vals))
    hist = {int(k): int(v) for k, v in zip(*np.unique(counts, return_counts=True))} if counts else {}
    report = {
        "p_samples": p_samples,
        "eps": eps,
        "cluster_eps": cluster_eps,
        "lines_checked": len(counts),
        "min_count": int(min(counts)) if counts else None,
        "histogram": hist,
        "targets": len(targets or []),
        "min_count_targets": int(min(t_counts)) if t_counts else None,
        "nonconverged": skipped,
    }
    if certificate is not None:
        report["certificate_overall"] = certificate.overall
    # floats kept out of the deterministic part of certificates
    report["_min_normalized_value"] = min_value
    report["_min_normalized_value_targets"] = t_min
    return report


def _distinct(roots: np.ndarray, eps: float) -> list[complex]:
    reps: list[complex] = []
    for r in roots:
        if all(abs(r - q) > eps for q in reps):
            reps.append(complex(r))
    return reps


def projective_cluster_count(points: Sequence[tuple], eps: float) -> int:
    """Clusters of points of P^1 under the chordal distance."""
    unit = []
    for a, b in points:
        a, b = complex(a), complex(b)
        nrm = math.hypot(abs(a), abs(b))
        unit.append((a / nrm, b / nrm))
    n = len(unit)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            d = abs(unit[i][0] * unit[j][1] - unit[i][1] * unit[j][0])
            if d <= eps:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})


def numeric_root_count(R: HomForm, cluster_eps: float = 1e-6, dps: int = 60) -> dict:
    """Distinct roots of a binary form found numerically, clustered in P^1."""
    roots = binary_roots_precise(R, dps=dps)
    distinct = projective_cluster_count(roots, cluster_eps)
    unit = []
    for a, b in roots:
        a, b = complex(a), complex(b)
        nrm = math.hypot(abs(a), abs(b))
        unit.append((a / nrm, b / nrm))
    sep = min(
        (abs(unit[i][0] * unit[j][1] - unit[i][1] * unit[j][0]) for i in range(len(unit)) for j in range(i + 1, len(unit))),
        default=math.inf,
    )
    return {"degree": R.degree, "roots": len(roots), "distinct": distinct, "cluster_eps": cluster_eps, "_min_separation": sep}


def deterministic_view(report: dict) -> dict:
    """Drop float diagnostics (keys starting with ``_``) before embedding in a certificate."""
    return {k: v for k, v in report.items() if not k.startswith("_")}
