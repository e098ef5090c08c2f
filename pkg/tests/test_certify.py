import json
import random
from fractions import Fraction

import pytest

from conehyp.certify import (
    CHECK_ORDER,
    Certificate,
    ConePair,
    DeformationFamily,
    DegenerateError,
    assemble_certificate,
    check_condition_i_ii,
    check_smooth,
    check_vertices,
    fiber_min_distinct,
    gamma_eliminate,
    numeric_fiber_sweep,
    numeric_line_gamma_check,
    numeric_root_count,
    special_fiber_targets,
)
from conehyp.elimination import binary_squarefree
from conehyp.numeric import binary_roots_precise
from conehyp.polycore import HomForm, evaluate, relabel, squarefree_part

from conftest import fermat, rand_form

Z3 = [HomForm.var(3, i) for i in range(3)]
Z4 = [HomForm.var(4, i) for i in range(4)]


def quartic_with_vertex(rng, lead=1):
    f = rand_form(rng, 3, 4)
    return f + HomForm(3, {(0, 0, 4): lead - f.coeff((0, 0, 4))})


# ---------------------------------------------------------------- construction helpers


def family_failing_condition_i(seed=0):
    """Gamma points q1 = (0:1:1:1), q2 = (0:1:1:-1) share the fiber (0:1) and lie on X_inf."""
    rng = random.Random(seed)
    h1 = quartic_with_vertex(rng)
    f1 = h1 - HomForm(3, {(0, 4, 0): evaluate(h1, (0, 1, 1))})
    h2 = quartic_with_vertex(rng)
    v1, v2 = evaluate(h2, (0, 1, 1)), evaluate(h2, (0, 1, -1))
    alpha, beta = (v1 + v2) / 2, (v1 - v2) / 2
    f2 = h2 - HomForm(3, {(0, 4, 0): alpha, (0, 3, 1): beta})
    h = rand_form(rng, 4, 8)
    plus = ((Z4[2] + Z4[3]).scale(Fraction(1, 2))) ** 8
    minus = ((Z4[2] - Z4[3]).scale(Fraction(1, 2))) ** 8
    finf = h - plus.scale(evaluate(h, (0, 1, 1, 1))) - minus.scale(evaluate(h, (0, 1, 1, -1)))
    return DeformationFamily(ConePair(f1, f2), finf)


def family_failing_condition_ii(seed=0):
    """f2(1, 0, s) has the double root s = 1, and X_inf passes through q = (1:0:2:1)."""
    rng = random.Random(seed)
    h1 = quartic_with_vertex(rng)
    f1 = h1 - HomForm(3, {(4, 0, 0): evaluate(h1, (1, 0, 2))})
    h2 = quartic_with_vertex(rng)
    slice_coeffs = [3, -5, 2, -1, 1]  # (s - 1)^2 (s^2 + s + 3), lowest power first
    f2 = HomForm(3, {e: c for e, c in h2.items() if e[1] != 0} | {(4 - k, 0, k): c for k, c in enumerate(slice_coeffs)})
    h = rand_form(rng, 4, 8)
    finf = h - HomForm(4, {(8, 0, 0, 0): evaluate(h, (1, 0, 2, 1))})
    return DeformationFamily(ConePair(f1, f2), finf)


# ---------------------------------------------------------------- types


def test_cone_pair_rejects_low_degree():
    with pytest.raises(ValueError):
        ConePair(fermat(3), fermat(4))


def test_cone_pair_vertices():
    c = ConePair(fermat(4), fermat(4))
    assert tuple(c.a) == (0, 0, 0, 1) and tuple(c.b) == (0, 0, 1, 0)
    u = c.union_form()
    assert u.degree == 8 and evaluate(u, (1, 1, 5, 7)) == evaluate(fermat(4), (1, 1, 5)) * evaluate(fermat(4), (1, 1, 7))


def test_family_degree_invariant():
    with pytest.raises(ValueError):
        DeformationFamily(ConePair(fermat(4), fermat(4)), Z4[0] ** 7)


def test_member_at_zero_is_product(family42):
    fam = family42.family
    assert fam.member(0) == fam.cones.union_form()
    assert fam.member(Fraction(1, 1000)).degree == 8


# ---------------------------------------------------------------- checks


def test_check_vertices():
    ok, wit = check_vertices(ConePair(fermat(4), fermat(4)))
    assert ok and wit["f1(0,0,1)"] == "1"
    bad = HomForm(3, {(4, 0, 0): 1, (0, 4, 0): 1, (1, 1, 2): 1})
    ok, wit = check_vertices(ConePair(bad, fermat(4)))
    assert not ok and wit["f1(0,0,1)"] == "0"


def test_check_smooth_examples():
    assert check_smooth(fermat(4)).verdict == "pass"
    q = Z3[0] ** 2 + Z3[1] ** 2 + Z3[2] ** 2
    assert check_smooth(q * q).verdict == "fail"
    with pytest.raises(ValueError):
        check_smooth(fermat(3))


def test_fiber_min_fermat():
    assert fiber_min_distinct(fermat(4)) == 1


def test_fiber_min_requires_constant_lead():
    with pytest.raises(ValueError):
        fiber_min_distinct(HomForm(3, {(4, 0, 0): 1, (3, 0, 1): 1, (0, 1, 3): 1}))


def test_fiber_min_two_double_roots():
    # at (1:0) the fiber is (t^2 - 1)^2
    z1, z2, t = Z3
    f = (t * t - z1 * z1) ** 2 + z2 * (z1 ** 3 + z2 ** 3 + t ** 3)
    assert fiber_min_distinct(f) == 2
    sweep = numeric_fiber_sweep(f, samples=500, targets=special_fiber_targets(f))
    assert sweep["min_distinct"] == 2


def test_fiber_min_example_quartic():
    z1, z2, t = Z3
    f = t ** 4 + t * z1 ** 3 + z1 ** 4 + z2 ** 4
    exact = fiber_min_distinct(f)
    sweep = numeric_fiber_sweep(f, samples=10_000, targets=special_fiber_targets(f))
    assert exact >= 3
    assert sweep["min_distinct_sweep"] >= exact
    assert sweep["min_distinct"] == exact


def test_fiber_min_matches_numeric_sweep():
    rng = random.Random(77)
    for _ in range(20):
        f = quartic_with_vertex(rng, rng.choice([1, -3, 5]))
        exact = fiber_min_distinct(f)
        sweep = numeric_fiber_sweep(f, samples=10_000, targets=special_fiber_targets(f))
        assert exact <= sweep["min_distinct_sweep"]
        assert sweep["min_distinct"] == exact


def test_gamma_full_degree(family42):
    g = gamma_eliminate(family42.family)
    assert g.R.degree == g.expected_degree == 128
    assert binary_squarefree(g.R)


def test_gamma_degenerate_when_xinf_contains_gamma(family42):
    c = family42.family.cones
    fam = DeformationFamily(c, c.union_form())
    g = gamma_eliminate(fam)
    assert g.degenerate
    with pytest.raises(DegenerateError):
        check_condition_i_ii(g)
    cert = assemble_certificate(fam)
    assert cert.overall == "fail" and cert.first_failure == "R_full_degree"


def test_condition_i_constructed_failure():
    fam = family_failing_condition_i()
    g = gamma_eliminate(fam)
    assert evaluate(g.R, (0, 1)) == 0
    ci, _ = check_condition_i_ii(g)
    assert ci.verdict == "fail" and not ci.witness["squarefree"]
    assert ci.witness["repeated_part_degree"] >= 1


def test_condition_ii_constructed_failure():
    fam = family_failing_condition_ii()
    g = gamma_eliminate(fam)
    assert evaluate(g.D2, (1, 0)) == 0 and evaluate(g.R, (1, 0)) == 0
    _, cii = check_condition_i_ii(g)
    assert cii.verdict == "fail" and cii.witness["gcd_degree"] >= 1


def test_numeric_line_check_sees_condition_ii_failure():
    fam = family_failing_condition_ii()
    g = gamma_eliminate(fam)
    targets = binary_roots_precise(squarefree_part(g.D1 * g.D2))
    rep = numeric_line_gamma_check(fam, p_samples=20, targets=targets)
    assert rep["_min_normalized_value_targets"] < 1e-8


# ---------------------------------------------------------------- certificates


def test_fermat_certificate_fails_at_fiber_min(family42):
    c = family42.family
    fam = DeformationFamily(ConePair(fermat(4), c.cones.f2), c.f_inf)
    cert = assemble_certificate(fam)
    assert cert.overall == "fail"
    assert cert.first_failure == "fiber_min_F1"
    assert cert.check("fiber_min_F1").witness["min_distinct"] == 1


def test_missing_vertex_term_fails_at_vertex_a(family42):
    c = family42.family
    f1 = HomForm(3, {e: v for e, v in c.cones.f1.items() if e != (0, 0, 4)})
    cert = assemble_certificate(DeformationFamily(ConePair(f1, c.cones.f2), c.f_inf))
    assert cert.first_failure == "vertex_a"
    assert [ch.name for ch in cert.checks] == list(CHECK_ORDER)


def test_certificate_pass_and_order(family42):
    cert = family42.certificate
    assert cert.overall == "pass"
    assert [c.name for c in cert.checks] == list(CHECK_ORDER)
    assert cert.check("R_full_degree").witness["deg_R"] == 128


def test_certificate_json_roundtrip(family42):
    cert = family42.certificate
    again = Certificate.from_json(cert.to_json())
    assert again.to_json() == cert.to_json()
    data = json.loads(cert.to_json())
    assert data["schema"] == 1 and data["overall"] == "pass"
    assert set(data["inputs"]["hashes"]) == {"f1", "f2", "f_inf"}


def test_certificate_rejects_unknown_schema():
    with pytest.raises(ValueError):
        Certificate.from_dict({"schema": 2, "inputs": {}, "checks": []})


def test_scaling_invariance(family42):
    fam = family42.family
    base = assemble_certificate(fam, seed=1)
    scaled = DeformationFamily(
        ConePair(fam.cones.f1.scale(Fraction(-3, 2)), fam.cones.f2.scale(7)), fam.f_inf.scale(Fraction(2, 5))
    )
    other = assemble_certificate(scaled, seed=1)
    assert [c.verdict for c in base.checks] == [c.verdict for c in other.checks]


def test_certificate_determinism(family42):
    fam = family42.family
    assert assemble_certificate(fam, seed=5).to_json() == assemble_certificate(fam, seed=5, workers=2).to_json()


# ---------------------------------------------------------------- numeric samplers


def test_fermat_sweep_reaches_special_fibers():
    rep = numeric_fiber_sweep(fermat(4), samples=10_000, targets=special_fiber_targets(fermat(4)))
    assert rep["min_distinct"] == 1
    assert rep["min_distinct_sweep"] == 4


def test_sweep_rejects_zero_samples():
    with pytest.raises(ValueError):
        numeric_fiber_sweep(fermat(4), samples=0)


def test_pass_family_numeric_consistency(family42):
    fam = family42.family
    for f in (fam.cones.f1, fam.cones.f2):
        rep = numeric_fiber_sweep(f, samples=10_000, cluster_eps=1e-6, targets=special_fiber_targets(f))
        assert rep["min_distinct"] >= 3
        assert rep["histogram"].get(4, 0) > 0.99 * 10_000 - rep["nonconverged"]
    g = gamma_eliminate(fam)
    targets = binary_roots_precise(squarefree_part(g.D1 * g.D2))
    line = numeric_line_gamma_check(fam, p_samples=200, eps=1e-8, targets=targets, certificate=family42.certificate)
    assert line["min_count"] >= 3 and line["min_count_targets"] >= 3
    assert line["histogram"].get(4, 0) >= 0.9 * line["lines_checked"]


def test_numeric_root_count_of_R(family42):
    g = gamma_eliminate(family42.family)
    rep = numeric_root_count(g.R, cluster_eps=1e-6)
    assert rep["degree"] == 128 and rep["distinct"] == 128
