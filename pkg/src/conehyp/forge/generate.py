"""Seeded random families and the resampling loop.

Every random draw comes from a substream keyed by ``(ingredient, attempt)``
under the master seed, so a given candidate never depends on how many other
candidates were drawn before it or on scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..certify import Certificate, ConePair, DeformationFamily, assemble_certificate
from ..elimination import binary_squarefree
from ..polycore import HomForm, evaluate, monomials
from .remark import _curve_smooth, slice_z0

F1, F2, FINF = 0, 1, 2
REMARK_F, REMARK_G = 10, 11
INGREDIENTS = {F1: "f1", F2: "f2", FINF: "f_inf"}
DEFAULT_T = Fraction(1, 1000)

_BLAME = {
    "vertex_a": F1,
    "smooth_F1": F1,
    "fiber_min_F1": F1,
    "vertex_b": F2,
    "smooth_F2": F2,
    "fiber_min_F2": F2,
    "R_full_degree": FINF,
    "R_squarefree": FINF,
    "R_coprime_disc": FINF,
}


@dataclass(frozen=True)
class GenConfig:
    m: int = 4
    n: int = 4
    coeff_bound: int = 10
    seed: int = 0
    max_resamples: int = 64
    t: Fraction | None = None
    mode: str = "theorem"

    def __post_init__(self):
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.max_resamples < 0:
            raise ValueError("max_resamples must be non-negative")
        if self.mode == "theorem":
            if self.m < 4 or self.n < 4:
                raise ValueError("theorem mode needs m, n >= 4")
        elif self.mode == "remark":
            if self.m < 4 or self.n < 2 or self.m * self.n < 8:
                raise ValueError("remark mode needs m >= 4, n >= 2, mn >= 8")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")


def substream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for the spawn key ``key`` under ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def random_form(
    nvars: int,
    degree: int,
    coeff_bound: int,
    stream: np.random.Generator,
    force_nonzero: tuple[int, ...] | None = None,
) -> HomForm:
    """Uniform integer coefficients in ``[-B, B]`` on every monomial of ``degree``.

    ``force_nonzero`` names one monomial whose coefficient is redrawn
    uniformly from the nonzero values.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    mons = monomials(nvars, degree)
    coeffs = stream.integers(-coeff_bound, coeff_bound + 1, size=len(mons))
    terms = {e: int(c) for e, c in zip(mons, coeffs)}
    if force_nonzero is not None:
        c = int(stream.integers(1, coeff_bound + 1)) * (1 if stream.integers(0, 2) else -1)
        terms[tuple(force_nonzero)] = c
    return HomForm(nvars, terms, degree)


def draw_ingredient(cfg: GenConfig, which: int, attempt: int) -> HomForm:
    rng = substream(cfg.seed, which, attempt)
    if which == F1:
        return random_form(3, cfg.m, cfg.coeff_bound, rng, force_nonzero=(0, 0, cfg.m))
    if which == F2:
        return random_form(3, cfg.n, cfg.coeff_bound, rng, force_nonzero=(0, 0, cfg.n))
    return random_form(4, cfg.m + cfg.n, cfg.coeff_bound, rng)


@dataclass
class BuildResult:
    family: DeformationFamily
    certificate: Certificate
    attempts: dict = field(default_factory=dict)
    resamples: int = 0
    exhausted: bool = False


def build_family(cfg: GenConfig, workers: int = 1) -> BuildResult:
    """Sample ``f1, f2, f_inf`` and resample the failing ingredient until the certificate passes.

    Curve-level failures redraw ``f1`` or ``f2``; failures of the double-curve
    conditions redraw ``f_inf``.  The loop stops at the first pass or after
    ``max_resamples`` redraws.
    """
    attempts = {F1: 0, F2: 0, FINF: 0}
    current = {k: draw_ingredient(cfg, k, 0) for k in attempts}
    resamples = 0
    while True:
        fam = DeformationFamily(ConePair(current[F1], current[F2]), current[FINF], cfg.t)
        extra = {
            "coeff_bound": cfg.coeff_bound,
            "attempts": {INGREDIENTS[k]: v for k, v in attempts.items()},
        }
        cert = assemble_certificate(fam, seed=cfg.seed, stop_early=True, workers=workers, extra_inputs=extra)
        if cert.overall == "pass":
            return BuildResult(fam, cert, dict(attempts), resamples, False)
        if resamples >= cfg.max_resamples:
            return BuildResult(fam, cert, dict(attempts), resamples, True)
        which = _BLAME[cert.first_failure]
        attempts[which] += 1
        current[which] = draw_ingredient(cfg, which, attempts[which])
        resamples += 1


def _admissible_remark_form(cfg: GenConfig, key: int, degree: int, max_tries: int) -> HomForm:
    for attempt in range(max_tries):
        h = random_form(3, degree, cfg.coeff_bound, substream(cfg.seed, key, attempt))
        s = slice_z0(h)
        if s.is_zero() or s.degree != degree or not binary_squarefree(s) or evaluate(h, (1, 0, 0)) == 0:
            continue
        if _curve_smooth(h):
            return h
    raise RuntimeError(f"no admissible form of degree {degree} in {max_tries} draws")


def remark_pair(cfg: GenConfig, max_tries: int = 64) -> tuple[HomForm, HomForm]:
    """Random smooth ``f`` (degree m) and ``g`` (degree n) meeting the remark preconditions."""
    return (
        _admissible_remark_form(cfg, REMARK_F, cfg.m, max_tries),
        _admissible_remark_form(cfg, REMARK_G, cfg.n, max_tries),
    )
