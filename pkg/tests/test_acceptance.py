"""Acceptance suite: one test per criterion, each with its tolerance and time budget.

Every test records a one-line PASS/FAIL verdict that is printed in the
terminal summary (see ``conftest.pytest_terminal_summary``).  Run with::

    python3 -m pytest tests/test_acceptance.py -v
"""

import json
import random
import time
from fractions import Fraction

import pytest

from conehyp.certify import (
    ConePair,
    DeformationFamily,
    assemble_certificate,
    fiber_min_distinct,
    gamma_eliminate,
    numeric_root_count,
)
from conehyp.elimination import binary_squarefree, macaulay_resultant3, subresultant_chain, sylvester_resultant
from conehyp.forge.cli import main
from conehyp.forge.generate import GenConfig, remark_pair
from conehyp.forge.remark import remark_structure_report, remark_surface
from conehyp.polycore import HomForm, exact_divide, relabel, uni_gcd

from conftest import fermat, rand_form
from oracles import binary_with_lead, numeric_common_zero, planted_system, product_of_roots_resultant

PINNED_SEED = 42


class Criterion:
    """Context manager timing one criterion and recording its verdict line."""

    def __init__(self, record, number, title, budget):
        self.record, self.number, self.title, self.budget = record, number, title, budget

    def __enter__(self):
        self.start = time.perf_counter()
        self.details = []
        return self

    def note(self, text):
        self.details.append(text)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        slow = elapsed >= self.budget
        ok = exc_type is None and not slow
        extra = "; ".join(self.details)
        if slow:
            extra = f"over budget {self.budget:g}s" + (f"; {extra}" if extra else "")
        elif exc_type is not None:
            extra = f"{exc_type.__name__}: {exc}".splitlines()[0]
        verdict = "PASS" if ok else "FAIL"
        self.record("acceptance", f"criterion {self.number} {verdict} [{elapsed:.1f}s] {self.title}" + (f" ({extra})" if extra else ""))
        if slow and exc_type is None:
            raise AssertionError(f"criterion {self.number} took {elapsed:.1f}s, budget {self.budget}s")
        return False


@pytest.fixture
def criterion(record_property):
    return lambda number, title, budget: Criterion(record_property, number, title, budget)


@pytest.fixture(scope="module")
def construct_runs(tmp_path_factory):
    """The pinned construct run, with one and with three workers."""
    runs = {}
    for workers in (1, 3):
        out = tmp_path_factory.mktemp(f"construct{workers}")
        start = time.perf_counter()
        code = main([
            "construct", "--m", "4", "--n", "4", "--seed", str(PINNED_SEED), "--coeff-bound", "10",
            "--workers", str(workers), "--out", str(out),
        ])
        runs[workers] = (code, out, time.perf_counter() - start)
    return runs


def test_criterion_1_degree_law(criterion, family42):
    with criterion(1, "t=0 member has degree 8 and equals f1*f2", 1.0) as c:
        fam = family42.family
        x0 = fam.member(0)
        cone1 = relabel(fam.cones.f1, 4, (0, 1, 2))
        cone2 = relabel(fam.cones.f2, 4, (0, 1, 3))
        assert x0.degree == 8
        assert x0 == cone1 * cone2
        assert exact_divide(x0, cone1) == cone2
        c.note("deg 8, exact factorization")


def test_criterion_2_gamma_count(criterion, family42):
    with criterion(2, "deg R = 128, R squarefree, 128 numeric roots at radius 1e-6", 60.0) as c:
        assert family42.certificate.overall == "pass"
        g = gamma_eliminate(family42.family)
        assert g.R.degree == g.expected_degree == 128
        assert binary_squarefree(g.R)
        roots = numeric_root_count(g.R, cluster_eps=1e-6)
        assert roots["distinct"] == 128
        c.note(f"deg R {g.R.degree}, distinct roots {roots['distinct']}")


def test_criterion_3_fermat_rejection(criterion, family42):
    with criterion(3, "Fermat quartic: fiber_min 1, certificate fails at fiber_min_F1", 5.0) as c:
        f1 = fermat(4)
        assert fiber_min_distinct(f1) == 1
        fam = DeformationFamily(ConePair(f1, family42.family.cones.f2), family42.family.f_inf)
        cert = assemble_certificate(fam)
        assert cert.overall == "fail" and cert.first_failure == "fiber_min_F1"
        c.note(f"first failure {cert.first_failure}")


def test_criterion_4_remark_identities(criterion):
    with criterion(4, "m=4, n=2: deg r 8, six singular points (2,2,2,2,4,4), 8 lines vanish", 30.0) as c:
        f, g = remark_pair(GenConfig(m=4, n=2, seed=0, mode="remark"))
        s = remark_surface(f, g)
        rep = remark_structure_report(s, tol=1e-8, line_points=20)
        assert rep["deg_r"] == 8
        assert rep["singular_points_found"] == 6
        mults = {p["label"][0]: set() for p in rep["points"]}
        for p in rep["points"]:
            mults[p["label"][0]].add(p["multiplicity"])
        assert mults == {"A": {2}, "B": {4}}
        assert rep["line_count"] == 8 and rep["lines_ok"]
        c.note(f"max line value {max(l['max_normalized'] for l in rep['lines']):.1e}")


def test_criterion_5_degenerate_identity(criterion):
    with criterion(5, "res_z0(f, (z0-z3)(z0-z4)) = f(z3,z1,z2) f(z4,z1,z2) for 20 quartics", 10.0) as c:
        rng = random.Random(2024)
        z = [HomForm.var(5, i) for i in range(5)]
        g = (z[0] - z[3]) * (z[0] - z[4])
        for _ in range(20):
            f = rand_form(rng, 3, 4)
            lhs = sylvester_resultant(relabel(f, 5, (0, 1, 2)), g, 0)
            # remaining variables are (z1, z2, z3, z4)
            assert lhs == relabel(f, 4, (2, 0, 1)) * relabel(f, 4, (3, 0, 1))
        c.note("20/20 exact")


def _specialize(f, var, point):
    others = [i for i in range(f.nvars) if i != var]
    out = [Fraction(0)] * (f.degree + 1)
    for exp, coef in f.items():
        term = coef
        for i, x in zip(others, point):
            term *= Fraction(x) ** exp[i]
        out[exp[var]] += term
    return out


def _with_lead(rng, nvars, degree):
    f = rand_form(rng, nvars, degree)
    exp = (degree,) + (0,) * (nvars - 1)
    if f.coeff(exp) == 0:
        f = f + HomForm(nvars, {exp: rng.choice([1, -2, 3])})
    return f


def test_criterion_6_elimination_kernels(criterion):
    with criterion(6, "resultant oracles on 100 pairs, psc vs gcd on 200 points, Macaulay vs numeric on 50", 60.0) as c:
        rng = random.Random(6)
        for _ in range(100):
            f = binary_with_lead(rng, rng.randint(1, 4))
            g = binary_with_lead(rng, rng.randint(1, 4))
            h = binary_with_lead(rng, rng.randint(1, 3))
            res_fg = sylvester_resultant(f, g, 0)
            assert sylvester_resultant(f, g * h, 0) == res_fg * sylvester_resultant(f, h, 0)
            value = complex(res_fg.coeff((f.degree * g.degree,)))
            approx = product_of_roots_resultant(f, g)
            assert abs(value - approx) <= 1e-8 * max(1.0, abs(approx))

        z2 = HomForm.var(3, 2)
        checked = 0
        while checked < 200:
            common = _with_lead(rng, 3, rng.randint(1, 2))
            a, b = _with_lead(rng, 3, 4 - common.degree), _with_lead(rng, 3, 3 - common.degree)
            f = common * a + z2 * rand_form(rng, 3, 3)
            g = common * b + z2 * rand_form(rng, 3, 2)
            chain = subresultant_chain(f, g, 0)
            for _ in range(10):
                pt = (Fraction(rng.randint(-3, 3)), Fraction(rng.choice([0, 0, rng.randint(-3, 3)])))
                fs, gs = _specialize(f, 0, pt), _specialize(g, 0, pt)
                if fs[-1] == 0 and gs[-1] == 0:
                    continue
                assert chain.gcd_degree_at(pt) == len(uni_gcd(fs, gs)) - 1
                checked += 1

        zeros = 0
        for k in range(50):
            e = rng.choice([2, 3])
            gs = planted_system(rng, e)[0] if k % 2 else [rand_form(rng, 3, e) for _ in range(3)]
            vanishes = macaulay_resultant3(*gs) == 0
            assert vanishes == numeric_common_zero(gs, seed=k)
            zeros += vanishes
        c.note(f"{checked} specializations, {zeros}/50 systems with a common zero")


def test_criterion_7_end_to_end(criterion, construct_runs):
    code, out, elapsed = construct_runs[1]
    with criterion(7, f"construct seed {PINNED_SEED}: exit 0, pass, line minimum >= 3, generic count 4", 300.0 - elapsed) as c:
        assert code == 0
        cert = json.loads((out / "certificate.json").read_text())
        assert cert["overall"] == "pass"
        line = cert["numeric"]["line_gamma"]
        assert line["p_samples"] == 200 and line["lines_checked"] >= 200
        assert line["min_count"] >= 3 and line["min_count_targets"] >= 3
        hist = {int(k): v for k, v in line["histogram"].items()}
        assert max(hist, key=hist.get) == 4
        for key in ("fiber_sweep_F1", "fiber_sweep_F2"):
            sweep = {int(k): v for k, v in cert["numeric"][key]["histogram"].items()}
            assert max(sweep, key=sweep.get) == 4
        c.note(f"construct {elapsed:.1f}s, line minimum {line['min_count']}, histogram {hist}")


def test_criterion_8_determinism(criterion, construct_runs):
    with criterion(8, "certificate JSON identical for 1 and 3 workers", 300.0) as c:
        (code1, out1, _), (code3, out3, _) = construct_runs[1], construct_runs[3]
        assert code1 == code3 == 0
        a, b = (out1 / "certificate.json").read_bytes(), (out3 / "certificate.json").read_bytes()
        assert a == b
        c.note(f"{len(a)} bytes identical")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
