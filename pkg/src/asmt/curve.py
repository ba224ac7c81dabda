"""Genus-2 models ``y^2 + h(x) y = f(x)`` and their reductions mod p.

Good reduction here is a property of the given integral model: a curve may
have good reduction at p through a different model, which this module does
not search for.

Frobenius data uses the geometric convention on H^1: if ``N1`` and ``N2``
are the point counts over ``F_p`` and ``F_{p^2}`` then the characteristic
polynomial is ``x^4 - s1 x^3 + e2 x^2 - p s1 x + p^2`` with ``s1 = p + 1 - N1``
and ``e2 = (s1^2 - s2) / 2``, ``s2 = p^2 + 1 - N2``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np
from sympy import isprime

from .errors import DomainError, NotGenusTwo
from .ffpoly import FpPoly, IntPoly, gf, is_squarefree_fp, is_squarefree_q

F_LEN, H_LEN = 7, 4

_MODEL_RE = re.compile(r"^\s*f\s*=\s*(\[[^\]]*\])\s*;\s*h\s*=\s*(\[[^\]]*\])\s*$")


def _check_bounds(f, h):
    if f.degree > 6 or h.degree > 3:
        raise DomainError(f"degree bounds violated: deg f = {f.degree}, deg h = {h.degree}")
    if f.is_zero and h.is_zero:
        raise DomainError("f and h are both zero")


@dataclass(frozen=True)
class GenusTwoModel:
    """Integral model ``y^2 + h(x) y = f(x)`` with ``deg f <= 6``, ``deg h <= 3``."""

    f: IntPoly
    h: IntPoly = IntPoly()

    def __post_init__(self):
        if not isinstance(self.f, IntPoly):
            object.__setattr__(self, "f", IntPoly(self.f))
        if not isinstance(self.h, IntPoly):
            object.__setattr__(self, "h", IntPoly(self.h))
        _check_bounds(self.f, self.h)

    @classmethod
    def parse(cls, text: str) -> "GenusTwoModel":
        m = _MODEL_RE.match(text)
        if not m:
            raise DomainError(f"expected 'f=[...];h=[...]', got {text!r}")
        return cls(IntPoly.parse(m.group(1)), IntPoly.parse(m.group(2)))

    def __str__(self):
        return f"f={self.f};h={self.h}"

    @property
    def H(self) -> IntPoly:
        """``4f + h^2``; over Q the model is ``Y^2 = H(x)`` with ``Y = 2y + h``."""
        return 4 * self.f + self.h * self.h

    def is_genus_two(self) -> bool:
        H = self.H
        return H.degree in (5, 6) and is_squarefree_q(H)

    def require_genus_two(self) -> "GenusTwoModel":
        if not self.is_genus_two():
            raise NotGenusTwo(f"{self} does not define a genus-2 curve over Q")
        return self


@dataclass(frozen=True)
class ModelOverFp:
    """A model reduced mod p; same degree bounds, both may now vanish."""

    p: int
    f: FpPoly
    h: FpPoly

    def __post_init__(self):
        if not isinstance(self.f, FpPoly):
            object.__setattr__(self, "f", FpPoly(self.p, self.f))
        if not isinstance(self.h, FpPoly):
            object.__setattr__(self, "h", FpPoly(self.p, self.h))
        if self.f.p != self.p or self.h.p != self.p:
            raise DomainError("coefficients live over a different prime field")
        if self.f.degree > 6 or self.h.degree > 3:
            raise DomainError("degree bounds violated")

    @property
    def H(self) -> FpPoly:
        return 4 * self.f + self.h * self.h

    def __str__(self):
        return f"f={self.f};h={self.h}"


@dataclass(frozen=True)
class FrobeniusRecord:
    p: int
    good_reduction: bool
    N1: int | None = None
    N2: int | None = None
    s1: int | None = None
    e2: int | None = None
    charpoly: IntPoly | None = None
    ordinary: bool | None = None

    @property
    def l_polynomial(self) -> IntPoly | None:
        """``T^4 charpoly(1/T)``, i.e. ``1 - s1 T + e2 T^2 - p s1 T^3 + p^2 T^4``."""
        if self.charpoly is None:
            return None
        return IntPoly(tuple(reversed(self.charpoly.coeffs)))

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "good_reduction": self.good_reduction,
            "N1": self.N1,
            "N2": self.N2,
            "s1": self.s1,
            "e2": self.e2,
            "charpoly": None if self.charpoly is None else str(self.charpoly),
            "ordinary": self.ordinary,
        }


def reduce_mod(model: GenusTwoModel, p: int) -> ModelOverFp:
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    return ModelOverFp(p, model.f.reduce(p), model.h.reduce(p))


def all_models_over_fp(p: int) -> Iterator[ModelOverFp]:
    """Every pair ``(h, f)`` over F_p, ``p^11`` in total (only sensible for p <= 3)."""
    for hc in itertools.product(range(p), repeat=H_LEN):
        for fc in itertools.product(range(p), repeat=F_LEN):
            yield ModelOverFp(p, FpPoly(p, fc), FpPoly(p, hc))


# --------------------------------------------------------------------------
# Smoothness
# --------------------------------------------------------------------------


def _singular_on_chart_char2(h: tuple[int, ...], f: tuple[int, ...]) -> bool:
    # Over F_{2^6}: every root of a cubic over F_2 lies in F_2, F_4 or F_8.
    F = gf(2, 6)
    hd = tuple(i * c % 2 for i, c in enumerate(h))[1:]
    fd = tuple(i * c % 2 for i, c in enumerate(f))[1:]
    for x in F.elements():
        if F.evaluate(h, x):
            continue
        hdx, fdx = F.evaluate(hd, x), F.evaluate(fd, x)
        if hdx == 0:
            if fdx == 0:
                return True
        else:
            y = F.mul(fdx, F.inv(hdx))
            if F.mul(y, y) == F.evaluate(f, x):
                return True
    return False


def is_smooth_genus2(model: ModelOverFp) -> bool:
    """Whether the projective model (both affine charts) is a smooth genus-2 curve."""
    p = model.p
    if p == 2:
        if model.h.is_zero:
            return False
        h, f = model.h.padded(H_LEN), model.f.padded(F_LEN)
        if _singular_on_chart_char2(h, f):
            return False
        return not _singular_on_chart_char2(h[::-1], f[::-1])
    H = model.H
    return H.degree in (5, 6) and is_squarefree_fp(H)


# --------------------------------------------------------------------------
# Point counting
# --------------------------------------------------------------------------


def _legendre_table(p: int) -> np.ndarray:
    chi = np.full(p, -1, dtype=np.int64)
    chi[0] = 0
    chi[(np.arange(1, p, dtype=np.int64) ** 2) % p] = 1
    return chi


def _count_odd(p: int, H: tuple[int, ...], k: int) -> int:
    chi = _legendre_table(p)
    lead = H[6]
    if k == 1:
        x = np.arange(p, dtype=np.int64)
        val = np.zeros(p, dtype=np.int64)
        for c in reversed(H):
            val = (val * x + c) % p
        return int((1 + chi[val]).sum()) + 1 + int(chi[lead])
    # F_{p^2} = F_p[t]/(t^2 - n): u + v t is a square iff its norm u^2 - n v^2 is.
    n = (-gf(p, 2).modulus.coeff(0)) % p
    total = 0
    block = max(1, (1 << 20) // p)
    v = np.arange(p, dtype=np.int64)
    for start in range(0, p, block):
        u = np.arange(start, min(p, start + block), dtype=np.int64)[:, None]
        a = np.zeros((u.shape[0], p), dtype=np.int64)
        b = np.zeros_like(a)
        for c in reversed(H):
            a, b = (a * u + n * b % p * v + c) % p, (a * v + b * u) % p
        total += int((1 + chi[(a * a - n * (b * b % p)) % p]).sum())
    return total + (2 if lead else 1)


def _count_char2(h: tuple[int, ...], f: tuple[int, ...], k: int) -> int:
    F = gf(2, k)
    n = 0
    for x in F.elements():
        hx, fx = F.evaluate(h, x), F.evaluate(f, x)
        for y in F.elements():
            if F.mul(y, y) ^ F.mul(hx, y) ^ fx == 0:
                n += 1
    for y in F.elements():
        if F.mul(y, y) ^ F.mul(h[3], y) ^ f[6] == 0:
            n += 1
    return n


def count_points(model: ModelOverFp, k: int = 1) -> int:
    """Points of the smooth projective model over ``F_{p^k}``, ``k`` in {1, 2}."""
    if k not in (1, 2):
        raise DomainError("only k = 1 and k = 2 are supported")
    if not is_smooth_genus2(model):
        raise DomainError(f"{model} is singular over F_{model.p}")
    if model.p == 2:
        return _count_char2(model.h.padded(H_LEN), model.f.padded(F_LEN), k)
    return _count_odd(model.p, model.H.padded(F_LEN), k)


def charpoly_from_counts(p: int, N1: int, N2: int) -> tuple[int, int, IntPoly]:
    s1 = p + 1 - N1
    s2 = p * p + 1 - N2
    if (s1 * s1 - s2) % 2:
        raise ArithmeticError(f"s1^2 - s2 = {s1 * s1 - s2} is odd; point counts are inconsistent")
    e2 = (s1 * s1 - s2) // 2
    return s1, e2, IntPoly((p * p, -p * s1, e2, -s1, 1))


def frobenius_charpoly(model: ModelOverFp) -> FrobeniusRecord:
    """Frobenius record; a singular model yields ``good_reduction=False`` and no charpoly."""
    p = model.p
    if not is_smooth_genus2(model):
        return FrobeniusRecord(p, good_reduction=False)
    N1, N2 = count_points(model, 1), count_points(model, 2)
    s1, e2, cp = charpoly_from_counts(p, N1, N2)
    return FrobeniusRecord(
        p, True, N1, N2, s1, e2, cp, ordinary=newton_slopes(cp, p) == ORDINARY_SLOPES
    )


# --------------------------------------------------------------------------
# Newton polygon, ordinarity, Weil check
# --------------------------------------------------------------------------

ORDINARY_SLOPES = (Fraction(0), Fraction(0), Fraction(1), Fraction(1))


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_slopes(poly: IntPoly, p: int) -> tuple[Fraction, ...]:
    """p-adic valuations of the roots (with multiplicity), ascending."""
    if poly.is_zero:
        raise DomainError("zero polynomial has no Newton polygon")
    pts = [(i, _vp(c, p)) for i, c in enumerate(poly.coeffs) if c]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    if pts[0][0]:
        raise DomainError("polynomial vanishes at 0")
    out: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.extend([Fraction(y1 - y2, x2 - x1)] * (x2 - x1))
    return tuple(sorted(out))


def is_ordinary(record: FrobeniusRecord) -> bool:
    if not record.good_reduction or record.charpoly is None:
        raise DomainError("ordinarity is only defined for good reduction")
    return newton_slopes(record.charpoly, record.p) == ORDINARY_SLOPES


def is_ordinary_fast(record: FrobeniusRecord) -> bool:
    """The ``p does not divide e2`` shortcut."""
    if not record.good_reduction:
        raise DomainError("ordinarity is only defined for good reduction")
    return record.e2 % record.p != 0


def is_weil_polynomial(poly: IntPoly, p: int) -> bool:
    """Exact test that a monic quartic is a Weil p-polynomial of genus-2 shape.

    With the shape ``x^4 - s x^3 + e x^2 - p s x + p^2`` the polynomial equals
    ``x^2 g(x + p/x)`` for ``g(u) = u^2 - s u + e - 2p``, and every root has
    absolute value sqrt(p) iff both roots of g are real in ``[-2 sqrt p, 2 sqrt p]``.
    """
    if poly.degree != 4:
        raise DomainError(f"expected a quartic, got degree {poly.degree}")
    c0, c1, c2, c3, c4 = poly.coeffs
    if c4 != 1 or c0 != p * p or c1 != p * c3:
        return False
    s, e = -c3, c2
    if s * s - 4 * (e - 2 * p) < 0:
        return False
    if s * s > 16 * p:
        return False
    m = 2 * p + e
    return m >= 0 and m * m >= 4 * s * s * p


def reversed_normalized(poly: IntPoly, p: int) -> IntPoly:
    """Charpoly with roots ``p / alpha``: ``x^4 poly(p/x) / p^2``."""
    c = poly.padded(5)
    out = []
    for i in range(5):
        num = c[4 - i] * p ** (4 - i)
        if num % (p * p):
            raise DomainError("reversal is not integral")
        out.append(num // (p * p))
    return IntPoly(out)
