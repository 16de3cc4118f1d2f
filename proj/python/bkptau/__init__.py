"""Exact polynomial BKP and KP tau-functions."""

from fractions import Fraction

from . import _core
from ._core import (
    Poly,
    bkp_defect,
    character_check,
    kdv_half,
    kdv_tau,
    kp_defect,
    kp_square_partition,
    q_schur,
    schur,
    wick_vev,
)

__all__ = [
    "Poly",
    "bkp_defect",
    "character_check",
    "kdv_half",
    "kdv_tau",
    "kp_defect",
    "kp_square_partition",
    "oracle_tau_bkp",
    "oracle_tau_kp_square",
    "q_schur",
    "schur",
    "tau_bkp",
    "tau_kp_square",
    "wick_vev",
]


def _rows(constants):
    return [[str(Fraction(c)) if not isinstance(c, str) else c for c in row] for row in constants or []]


def tau_bkp(lam, constants=None):
    return _core.tau_bkp(list(lam), _rows(constants))


def tau_kp_square(lam, constants=None):
    return _core.tau_kp_square(list(lam), _rows(constants))


def oracle_tau_bkp(lam, constants=None):
    return _core.oracle_tau_bkp(list(lam), _rows(constants))


def oracle_tau_kp_square(lam, constants=None):
    return _core.oracle_tau_kp_square(list(lam), _rows(constants))
