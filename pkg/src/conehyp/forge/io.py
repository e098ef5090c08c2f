"""Flat-file persistence: polynomial text files, certificates, family directories.

Polynomial format::

    # comment
    vars 3 deg 4
    1  4 0 0
    -3/2  1 2 1

The header must precede the terms; each term line is a rational coefficient
followed by ``vars`` non-negative exponents summing to ``deg``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from ..certify import Certificate, ConePair, DeformationFamily
from ..polycore import HomForm, to_text


class FormatError(ValueError):
    """Malformed polynomial text, with the 1-based line and column of the problem."""

    def __init__(self, message: str, line: int, column: int = 1, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


def _column(raw: str, token_index: int) -> int:
    pos = 0
    for k, tok in enumerate(raw.split()):
        pos = raw.index(tok, pos)
        if k == token_index:
            return pos + 1
        pos += len(tok)
    return len(raw) + 1


def parse_form(text: str, source: str = "<string>") -> HomForm:
    nvars = degree = None
    terms: dict[tuple[int, ...], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = body.split()
        if not toks:
            continue
        if nvars is None:
            if len(toks) != 4 or toks[0] != "vars" or toks[2] != "deg":
                raise FormatError("expected header 'vars K deg D'", lineno, _column(raw, 0), source)
            try:
                nvars, degree = int(toks[1]), int(toks[3])
            except ValueError:
                raise FormatError("header counts must be integers", lineno, _column(raw, 1), source) from None
            if not 1 <= nvars or degree < 0:
                raise FormatError("header counts out of range", lineno, _column(raw, 1), source)
            continue
        if len(toks) != nvars + 1:
            raise FormatError(f"expected a coefficient and {nvars} exponents, got {len(toks)} fields", lineno, 1, source)
        try:
            coeff = Fraction(toks[0])
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad coefficient {toks[0]!r}", lineno, _column(raw, 0), source) from None
        exps = []
        for k, tok in enumerate(toks[1:], start=1):
            if not tok.isdigit():
                raise FormatError(f"bad exponent {tok!r}", lineno, _column(raw, k), source)
            exps.append(int(tok))
        exp = tuple(exps)
        if sum(exp) != degree:
            raise FormatError(
                f"term '{body.strip()}' has degree {sum(exp)}, header declares {degree}", lineno, _column(raw, 0), source
            )
        if exp in terms:
            raise FormatError(f"duplicate monomial {exp}", lineno, _column(raw, 1), source)
        if coeff:
            terms[exp] = coeff
    if nvars is None:
        raise FormatError("missing header 'vars K deg D'", 1, 1, source)
    return HomForm(nvars, terms, degree)


def read_form(path) -> HomForm:
    path = Path(path)
    return parse_form(path.read_text(), source=str(path))


def format_form(f: HomForm, degree: int | None = None) -> str:
    """Text form of ``f``; the zero form needs an explicit ``degree`` for its header."""
    if f.is_zero():
        return f"vars {f.nvars} deg {degree if degree is not None else 0}\n"
    return to_text(f)


def write_form(f: HomForm, path, degree: int | None = None) -> None:
    Path(path).write_text(format_form(f, degree))


def write_json(data: dict, path) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def write_certificate(cert: Certificate, path) -> None:
    Path(path).write_text(cert.to_json())


def read_certificate(path) -> Certificate:
    return Certificate.from_json(Path(path).read_text())


FAMILY_FILES = {"f1": "f1.poly", "f2": "f2.poly", "f_inf": "finf.poly"}


def write_family(fam: DeformationFamily, directory, meta: dict | None = None) -> Path:
    """Write ``f1.poly``, ``f2.poly``, ``finf.poly``, ``family.json`` and, when ``t`` is set, ``surface.poly``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    write_form(fam.cones.f1, d / FAMILY_FILES["f1"])
    write_form(fam.cones.f2, d / FAMILY_FILES["f2"])
    write_form(fam.f_inf, d / FAMILY_FILES["f_inf"])
    info = {"m": fam.cones.m, "n": fam.cones.n, **(meta or {})}
    if fam.t is not None:
        info["t"] = {"value": str(fam.t), "label": "uncertified sample parameter"}
        write_form(fam.member(), d / "surface.poly")
    write_json(info, d / "family.json")
    return d


def read_family(directory) -> DeformationFamily:
    d = Path(directory)
    t = None
    info_path = d / "family.json"
    if info_path.exists():
        info = json.loads(info_path.read_text())
        if "t" in info:
            t = Fraction(info["t"]["value"])
    f1 = read_form(d / FAMILY_FILES["f1"])
    f2 = read_form(d / FAMILY_FILES["f2"])
    finf = read_form(d / FAMILY_FILES["f_inf"])
    return DeformationFamily(ConePair(f1, f2), finf, t)
