"""Sums of zeta derivatives over the nontrivial zeros, and their asymptotic
expansions.

The extension works in decimal strings; this wrapper hands back mpmath
numbers at the requested precision.
"""

import mpmath

from . import _zetasum
from ._zetasum import ZetasumError

__all__ = [
    "ZetasumError",
    "zeta",
    "hardy_z",
    "find_zeros",
    "count_zeros",
    "laurent_constants",
    "rhs",
    "lhs",
    "compare",
    "selfcheck",
]


def _mpc(pair):
    return mpmath.mpc(mpmath.mpf(pair[0]), mpmath.mpf(pair[1]))


def _str(x):
    if isinstance(x, str):
        return x
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, mpmath.mp.dps + 5, strip_zeros=False)
    return repr(x)


def zeta(s, n=0, digits=40):
    """zeta^(n)(s) as an mpmath.mpc."""
    s = mpmath.mpc(s)
    with mpmath.workdps(digits + 5):
        return _mpc(_zetasum.zeta(_str(s.real), _str(s.imag), n, digits))


def hardy_z(t, digits=40):
    with mpmath.workdps(digits + 5):
        return mpmath.mpf(_zetasum.hardy_z(_str(t), digits))


def find_zeros(t_max, digits=40, threads=1):
    """Ordinates 0 < gamma <= t_max as mpmath.mpf."""
    with mpmath.workdps(digits + 5):
        return [mpmath.mpf(g) for g in _zetasum.find_zeros(_str(t_max), digits, threads)]


def count_zeros(T, digits=40):
    return _zetasum.count_zeros(_str(T), digits)


def laurent_constants(j_max, digits=40):
    """[(C_j, A_j)] for j = 0..j_max."""
    with mpmath.workdps(digits + 5):
        return [(mpmath.mpf(c), mpmath.mpf(a)) for c, a in _zetasum.laurent_constants(j_max, digits)]


def rhs(formula, n, X, T, digits=40, shape="rh"):
    """Term breakdown: dict with 'terms' [(label, mpc)], 'total', 'error_scale'."""
    d = _zetasum.rhs(formula, n, str(X), _str(T), digits, shape)
    with mpmath.workdps(digits + 5):
        return {
            "formula": d["formula"],
            "note": d["note"],
            "terms": [(label, _mpc(v)) for label, v in d["terms"]],
            "total": _mpc(d["total"]),
            "error_scale": mpmath.mpf(d["error_scale"]),
        }


def _ordinates(zeros, digits):
    # no more significant digits than the table really has, or the import check
    # would demand more than the ordinates can deliver
    return [g if isinstance(g, str) else mpmath.nstr(mpmath.mpf(g), digits, strip_zeros=False) for g in zeros]


def lhs(n, X, T, zeros, verified_height=None, digits=40, trust=False, threads=1):
    """Sum over gamma <= T of zeta^(n)(rho) X^rho, using the given ordinates."""
    vh = "" if verified_height is None else _str(verified_height)
    with mpmath.workdps(digits + 5):
        return _mpc(_zetasum.lhs(n, str(X), _str(T), _ordinates(zeros, digits), vh, digits, trust, threads))


def compare(n, X, T_grid, formula, zeros, verified_height=None, digits=40, trust=False):
    vh = "" if verified_height is None else _str(verified_height)
    d = _zetasum.compare(n, str(X), [_str(t) for t in T_grid], formula, _ordinates(zeros, digits), vh, digits, trust)
    with mpmath.workdps(digits + 5):
        rows = [
            {
                "T_effective": mpmath.mpf(r["T_effective"]),
                "zero_count": r["zero_count"],
                "lhs": _mpc(r["lhs"]),
                "rhs": _mpc(r["rhs"]),
                "normalized_residual": mpmath.mpf(r["normalized_residual"]),
            }
            for r in d["rows"]
        ]
        return {
            "rows": rows,
            "c_hat": mpmath.mpf(d["c_hat"]),
            "growth": mpmath.mpf(d["growth"]),
            "nonincreasing": d["nonincreasing"],
        }


def selfcheck(digits=40):
    """[(name, passed, worst, limit)]"""
    return _zetasum.selfcheck(digits)
