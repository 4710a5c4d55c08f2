"""Exact q-binomial, supernomial and fermionic character computations."""

import json
from fractions import Fraction

from . import _qsupernomial as _m
from ._qsupernomial import ConfigError, NonFiniteSupport

__all__ = [
    "ConfigError", "NonFiniteSupport", "IDENTITIES", "REPORT_SCHEMA",
    "qbin", "qbin_plus", "qsup", "d_vector", "char_rep", "char_coinv", "verify",
]

IDENTITIES = list(_m.identity_names)
REPORT_SCHEMA = json.loads(_m.report_schema)


def _poly(s):
    """Decodes a polynomial into {(q_exponent: Fraction, z_exponent: int): int}."""
    return {(Fraction(t["q"]), t["z"]): int(t["c"]) for t in json.loads(s)["terms"]}


def _char(s):
    c = json.loads(s)
    return {
        "q_shift": Fraction(c["q_shift"]),
        "z_shift": Fraction(c["z_shift"]),
        "poly": {(Fraction(t["q"]), t["z"]): int(t["c"]) for t in c["poly"]["terms"]},
    }


def qbin(n, m):
    return _poly(_m.qbin(n, m))


def qbin_plus(n, m):
    return _poly(_m.qbin_plus(n, m))


def qsup(L, a):
    return _poly(_m.qsup(list(L), a))


def d_vector(p, pairs):
    return [int(x) for x in _m.d_vector(p, [tuple(x) for x in pairs])]


def char_rep(p, r, max_q, zwin):
    return _char(_m.char_rep(p, r, max_q, zwin))


def char_coinv(p, r, N, form="supernomial"):
    return _char(_m.char_coinv(p, r, list(N), form))


def verify(identity, **settings):
    """Runs a sweep and returns the report as a dict (schema: REPORT_SCHEMA)."""
    return json.loads(_m.verify(json.dumps({"identity": identity, **settings})))
