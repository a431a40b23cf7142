"""Exact, p-adic and numerical multiple zeta and L-values.

Rational results come back as fractions.Fraction; p-adic results as dicts with
keys p, precision, residue and shift (value = residue * p**-shift mod p**precision).
"""

from fractions import Fraction

try:
    from . import _multizeta as _core
except ImportError:  # in-tree build: the extension sits next to the build tree, not in the package
    import _multizeta as _core

MultizetaError = _core.MultizetaError
desing_coeffs = _core.desing_coeffs
kummer_check = _core.kummer_check
tmpl_gM = _core.tmpl_gM
L_ell_residual = _core.L_ell_residual
mzf = _core.mzf
thex_residual = _core.thex_residual

__all__ = [
    "MultizetaError",
    "bernoulli",
    "root_sum_twisted",
    "desing_coeffs",
    "desing_value",
    "L_closed",
    "L_genfun",
    "L_riemann",
    "functional_relation_residual",
    "kummer_check",
    "tmpl_gM",
    "L_ell_residual",
    "mzf",
    "thex_residual",
]


def _strs(values):
    return [str(Fraction(v)) for v in values]


def bernoulli(n):
    return Fraction(_core.bernoulli(n))


def root_sum_twisted(n, c):
    return Fraction(_core.root_sum_twisted(n, c))


def desing_value(k, gammas):
    return Fraction(_core.desing_value(list(k), _strs(gammas)))


def L_closed(n, gammas, c, p):
    return Fraction(_core.L_closed(list(n), _strs(gammas), c, p))


def L_riemann(p, c, s, k, gammas, N, M):
    return _core.L_riemann(p, c, list(s), list(k), _strs(gammas), N, M)


def L_genfun(n, gammas, c, p):
    return Fraction(_core.L_genfun(list(n), _strs(gammas), c, p))


def functional_relation_residual(n, k, gammas, c, p):
    return Fraction(_core.functional_relation_residual(list(n), list(k), _strs(gammas), c, p))
