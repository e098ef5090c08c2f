import random
from fractions import Fraction

import pytest
from hypothesis import settings

from conehyp.polycore import HomForm, monomials

settings.register_profile("conehyp", max_examples=60, deadline=None)
settings.load_profile("conehyp")


def rand_form(rng: random.Random, nvars: int, degree: int, bound: int = 9, density: float = 1.0, rational: bool = False):
    terms = {}
    for e in monomials(nvars, degree):
        if rng.random() < density:
            c = Fraction(rng.randint(-bound, bound))
            if rational:
                c /= rng.randint(1, 5)
            terms[e] = c
    return HomForm(nvars, terms, degree)


def rand_uni(rng: random.Random, degree: int, bound: int = 9):
    p = [Fraction(rng.randint(-bound, bound)) for _ in range(degree)]
    p.append(Fraction(rng.choice([c for c in range(-bound, bound + 1) if c])))
    return p


def linear_product(factors, nvars=2):
    """Binary form from a list of (a, b) meaning a*z1 + b*z2."""
    out = HomForm.constant(nvars, 1)
    for a, b in factors:
        out = out * HomForm.linear([a, b])
    return out


def fermat(degree: int = 4) -> HomForm:
    return HomForm(3, {(degree, 0, 0): 1, (0, degree, 0): 1, (0, 0, degree): 1})


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def family42():
    """The pinned seed-42 family (passes without resampling)."""
    from conehyp.forge.generate import GenConfig, build_family

    return build_family(GenConfig(m=4, n=4, coeff_bound=10, seed=42))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call":
                lines += [v for k, v in getattr(rep, "user_properties", []) if k == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
