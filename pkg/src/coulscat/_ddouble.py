"""Compensated double-double arithmetic on numpy arrays.

A value is carried as an unevaluated pair (hi, lo) of float64 arrays with
hi = fl(hi + lo), giving roughly 32 significant digits. Only the handful of
operations needed by the hypergeometric series kernel are provided. The
error-free transforms are the classical ones (Knuth two-sum, Veltkamp split,
Dekker product); the add is the "sloppy" variant, whose worst case is still
far below the 1e-20 the series accumulation needs.

Everything here is elementwise and shape-agnostic: scalars, 1-d or n-d
arrays all work, as long as operands broadcast.
"""

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1, Veltkamp split constant


def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def fast_two_sum(a, b):
    # requires |a| >= |b| elementwise (callers guarantee this)
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    d = _SPLITTER * b
    bh = d - (d - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(x, y):
    s, e = two_sum(x[0], y[0])
    e = e + x[1] + y[1]
    return fast_two_sum(s, e)


def neg(x):
    return -x[0], -x[1]


def mul(x, y):
    p, e = two_prod(x[0], y[0])
    e = e + x[0] * y[1] + x[1] * y[0]
    return fast_two_sum(p, e)


def mul_d(x, d):
    """dd times plain float64."""
    p, e = two_prod(x[0], d)
    e = e + x[1] * d
    return fast_two_sum(p, e)


def div(x, y):
    """dd / dd via one Newton-style correction of the hi-part quotient."""
    q1 = x[0] / y[0]
    p, e = two_prod(q1, y[0])
    s, f = two_sum(x[0], -p)
    f = f + x[1] - e - q1 * y[1]
    q2 = (s + f) / y[0]
    return fast_two_sum(q1, q2)


def from_float(a):
    a = np.asarray(a, dtype=np.float64)
    return a, np.zeros_like(a)


def to_float(x):
    return x[0] + x[1]


# complex values as (re_dd, im_dd) pairs

def cadd(x, y):
    return add(x[0], y[0]), add(x[1], y[1])


def cmul(x, y):
    xr, xi = x
    yr, yi = y
    re = add(mul(xr, yr), neg(mul(xi, yi)))
    im = add(mul(xr, yi), mul(xi, yr))
    return re, im


def cdiv_real(x, d):
    """complex dd divided by a real dd."""
    return div(x[0], d), div(x[1], d)


def cfrom_complex(z):
    z = np.asarray(z, dtype=np.complex128)
    return from_float(z.real.copy()), from_float(z.imag.copy())


def cto_complex(x):
    return to_float(x[0]) + 1j * to_float(x[1])
