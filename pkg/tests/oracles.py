"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction
from math import comb

import numpy as np

# ---------------------------------------------------------------- fields ---


def _nonresidue(p):
    return next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)


class TinyField:
    """F_p or F_{p^2} with elements as (u, v) pairs; plain tuples, no tables.

    Odd p uses t^2 = n for the least non-residue n; p = 2 uses t^2 = t + 1.
    """

    def __init__(self, p, k):
        self.p, self.k = p, k
        self.n = _nonresidue(p) if (k == 2 and p > 2) else None

    def elements(self):
        if self.k == 1:
            return [(u, 0) for u in range(self.p)]
        return [(u, v) for u in range(self.p) for v in range(self.p)]

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def mul(self, a, b):
        p = self.p
        u = a[0] * b[0]
        v = a[0] * b[1] + a[1] * b[0]
        w = a[1] * b[1]  # coefficient of t^2
        if self.k == 1:
            return (u % p, 0)
        if p == 2:
            return ((u + w) % p, (v + w) % p)
        return ((u + self.n * w) % p, v % p)

    def const(self, c):
        return (c % self.p, 0)

    def ev(self, coeffs, x):
        acc = (0, 0)
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), self.const(c))
        return acc


def brute_count(p, f, h, k):
    """Projective points of y^2 + h y = f by trying every (x, y) in F_{p^k}.

    Points at infinity solve y^2 + h3 y = f6 in the second chart.
    """
    F = TinyField(p, k)
    f = list(f) + [0] * (7 - len(f))
    h = list(h) + [0] * (4 - len(h))
    els = F.elements()
    zero = (0, 0)
    n = 0
    for x in els:
        fx, hx = F.ev(f, x), F.ev(h, x)
        for y in els:
            lhs = F.add(F.mul(y, y), F.mul(hx, y))
            if F.add(lhs, F.mul(F.const(-1), fx)) == zero:
                n += 1
    for y in els:
        lhs = F.add(F.mul(y, y), F.mul(F.const(h[3]), y))
        if F.add(lhs, F.const(-f[6])) == zero:
            n += 1
    return n


# --------------------------------------------------------- real roots -----


def _eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _descartes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _taylor_shift_moebius(coeffs, a, b):
    """Coefficients of (1 + x)^n P((a + b x) / (1 + x)) for n = deg P."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * (n + 1)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        # c (a + b x)^i (1 + x)^(n - i)
        left = [Fraction(comb(i, j)) * a ** (i - j) * b**j for j in range(i + 1)]
        right = [Fraction(comb(n - i, j)) for j in range(n - i + 1)]
        for j, u in enumerate(left):
            for k, v in enumerate(right):
                out[j + k] += c * u * v
    return out


def bisection_real_roots(coeffs):
    """Distinct real roots of a squarefree integer polynomial, by exact bisection.

    Roots in each open interval (a, b) are bounded by Descartes' rule on the
    Moebius-transformed polynomial; intervals with bound 0 are dropped, bound
    1 certifies exactly one root, larger bounds are halved.  Endpoints are
    rationals and are tested exactly.
    """
    coeffs = [Fraction(c) for c in coeffs]
    lead = abs(coeffs[-1])
    bound = 1 + max(abs(c) for c in coeffs[:-1]) / lead
    count = 0
    stack = [(-bound, bound)]
    endpoints = set()
    while stack:
        a, b = stack.pop()
        v = _descartes(_taylor_shift_moebius(coeffs, a, b))
        if v == 0:
            continue
        if v == 1:
            count += 1
            continue
        m = (a + b) / 2
        if _eval(coeffs, m) == 0:
            endpoints.add(m)
        stack.extend([(a, m), (m, b)])
    return count + len(endpoints)


# ------------------------------------------------------------- Weil -------


def numeric_weil(coeffs, p, tol=1e-7):
    roots = np.roots(list(reversed(coeffs)))
    return bool(np.all(np.abs(np.abs(roots) - np.sqrt(p)) < tol * max(1, p)))


def unit_root_count(coeffs, p):
    """Number of p-adic unit roots: 4 minus the first index with p not dividing c_i."""
    return 4 - next(i for i, c in enumerate(coeffs) if c % p)


# ------------------------------------------------------- smoothness -------


def singular_char2(h, f):
    """Singular in one affine chart over F_2-bar: h and h'^2 f + f'^2 share a root."""
    from asmt.ffpoly import FpPoly, fp_gcd

    H, F = FpPoly(2, h), FpPoly(2, f)
    if H.is_zero:
        return True
    g = fp_gcd(H, H.derivative() * H.derivative() * F + F.derivative() * F.derivative())
    return g.degree >= 1


def smooth_char2(h, f):
    h = list(h) + [0] * (4 - len(h))
    f = list(f) + [0] * (7 - len(f))
    return not (singular_char2(h, f) or singular_char2(h[::-1], f[::-1]))
