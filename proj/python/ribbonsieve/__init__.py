"""Exact ribbon tableaux, cyclic sieving and Wronski-map computations.

Partitions are lists of parts, tableaux are dicts with "outer", "inner" and "rows" (rows list
only the skew cells), exact rationals come back as fractions.Fraction.
"""
import json
from fractions import Fraction

from . import _core
from ._core import RibbonsieveError

__all__ = [
    "RibbonsieveError",
    "apply",
    "bead_positions",
    "core_of_spec",
    "core_quotient",
    "count_srt",
    "count_syt",
    "enumerate_srt",
    "enumerate_syt",
    "eval_at_root",
    "fixed_fibre_gr24",
    "kostka_foulkes_column",
    "llt_verify",
    "lr_coefficient",
    "orbit_spectrum",
    "plucker",
    "run_suite",
    "series_fibre_gr24",
    "skew_kostka_foulkes",
    "validate_ribbon",
    "verify_cyclic",
    "verify_dihedral",
    "wronskian",
]


def _frac(x):
    return Fraction(x) if isinstance(x, (str, int)) else x


def _rational_text(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


bead_positions = _core.bead_positions
orbit_spectrum = _core.orbit_spectrum
core_of_spec = _core.core_of_spec
fixed_fibre_gr24 = _core.fixed_fibre_gr24


def core_quotient(shape, d, r):
    return json.loads(_core.core_quotient(list(shape), d, r))


def count_syt(shape):
    return int(_core.count_syt(list(shape)))


def enumerate_syt(outer, inner=()):
    return json.loads(_core.enumerate_syt(list(outer), list(inner)))


def apply(op, tableau, power=1, d=None, n=None):
    """op is promote, evacuate, rectify, rotate-complement (needs d, n) or charge."""
    return json.loads(_core.apply(op, json.dumps(tableau), power, d, n))


def enumerate_srt(outer, r, inner=()):
    return json.loads(_core.enumerate_srt(list(outer), list(inner), r))


def count_srt(outer, r, inner=()):
    return int(_core.count_srt(list(outer), list(inner), r))


def validate_ribbon(filling, r):
    return _core.validate_ribbon(json.dumps(filling), r)


def kostka_foulkes_column(shape):
    return [int(c) for c in json.loads(_core.kostka_foulkes_column(list(shape)))]


def skew_kostka_foulkes(outer, inner=()):
    return [int(c) for c in json.loads(_core.skew_kostka_foulkes(list(outer), list(inner)))]


def lr_coefficient(lam, mu, nu):
    return int(_core.lr_coefficient(list(lam), list(mu), list(nu)))


def eval_at_root(coefficients, r):
    """Value of the polynomial at a primitive r-th root of unity, reduced mod the cyclotomic polynomial."""
    out = json.loads(_core.eval_at_root(json.dumps([int(c) for c in coefficients]), r))
    out["residue"] = [_frac(c) for c in out["residue"]]
    if out.get("value") is not None:
        out["value"] = _frac(out["value"])
    return out


def llt_verify(outer, r, inner=()):
    return json.loads(_core.llt_verify(list(outer), list(inner), r))


def verify_cyclic(d, n, r):
    return json.loads(_core.verify_cyclic(d, n, r))


def verify_dihedral(d, n, r, variant="e"):
    return json.loads(_core.verify_dihedral(d, n, r, variant))


def wronskian(basis):
    """basis: coefficient lists (ascending powers of z) with int, str or Fraction entries."""
    text = json.dumps([[_rational_text(c) for c in f] for f in basis])
    return [_frac(c) for c in json.loads(_core.wronskian(text))]


def plucker(basis, n):
    text = json.dumps([[_rational_text(c) for c in f] for f in basis])
    return {tuple(p): _frac(v) for p, v in json.loads(_core.plucker(text, n))}


def series_fibre_gr24(h1, h2, order=12):
    """h1, h2 as series JSON dicts, e.g. {"e": 1, "terms": [[1, "1"]], "order": None}."""
    return json.loads(_core.series_fibre_gr24(json.dumps(h1), json.dumps(h2), order))


def run_suite(name, **params):
    return json.loads(_core.run_suite(name, json.dumps(params)))
