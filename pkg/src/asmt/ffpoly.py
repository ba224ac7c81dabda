"""Exact polynomial arithmetic over Z, Q and small finite fields.

Integer polynomials are stored with ascending coefficients and no trailing
zeros, so the zero polynomial is the empty tuple and its degree is
``NEG_INF``.  The shared text format is a bracketed ascending list such as
``[1,0,0,0,0,1]`` for ``1 + x^5``.

Finite fields ``F_{p^k}`` are realized as ``F_p[t]/(m(t))`` for a fixed
monic irreducible ``m`` per ``(p, k)``; elements are encoded as integers whose
base-``p`` digits are the coefficients of ``1, t, t^2, ...``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from sympy import divisors, isprime

from .errors import DomainError

NEG_INF = float("-inf")

# Sparse defining polynomials, ascending coefficients.  Pairs not listed fall
# back to ``t^2 - n`` (n the least non-residue) for odd p and k = 2, and to the
# lexicographically first irreducible monic otherwise.
DEFINING_POLYNOMIALS = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
}

MAX_EXTENSION_DEGREE = 6
_EXHAUSTIVE_SPLIT_LIMIT = 4096


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _parse_coeff_list(text: str) -> list[int]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed polynomial text {text!r}") from exc
    if not isinstance(raw, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in raw
    ):
        raise DomainError(f"polynomial text must be a list of integers: {text!r}")
    return raw


# --------------------------------------------------------------------------
# Polynomials over Z
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, ascending order."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return cls(_parse_coeff_list(text))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self.coeffs) > length:
            raise DomainError(f"degree {self.degree} does not fit in {length} slots")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __add__(self, other):
        other = _as_intpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_intpoly(other))

    def __rsub__(self, other):
        return _as_intpoly(other) - self

    def __mul__(self, other):
        other = _as_intpoly(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPoly((1,))
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g

    def primitive_part(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def reduce(self, p: int) -> "FpPoly":
        return FpPoly(p, self.coeffs)

    def reversed(self, length: int) -> "IntPoly":
        """``x^(length-1) * self(1/x)`` for a formal degree ``length - 1``."""
        return IntPoly(tuple(reversed(self.padded(length))))

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs or (0,)) + "]"

    def pretty(self, var: str = "x") -> str:
        return _pretty(self.coeffs, var)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _as_intpoly(obj) -> IntPoly:
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, int):
        return IntPoly((obj,))
    return IntPoly(obj)


def _pretty(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c in (1, -1):
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """``lc(b)^(deg a - deg b + 1) * a mod b`` computed over Z."""
    if b.is_zero:
        raise DomainError("division by the zero polynomial")
    if a.degree < b.degree:
        return a
    r = list(a.coeffs)
    db, lb = len(b.coeffs) - 1, b.leading
    steps = len(r) - db
    for _ in range(steps):
        if len(r) - 1 < db:
            r = [c * lb for c in r]
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= lr * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def int_poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd over Q (returned primitive with positive leading coefficient)."""
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        a, b = b, pseudo_remainder(a, b).primitive_part()
    return a


def is_squarefree_q(poly: IntPoly) -> bool:
    """True iff ``poly`` has no repeated root in an algebraic closure of Q."""
    if poly.is_zero:
        raise DomainError("squarefreeness of the zero polynomial is undefined")
    return int_poly_gcd(poly, poly.derivative()).degree <= 0


def rational_roots(poly: IntPoly) -> list[Fraction]:
    """All distinct rational roots, by the rational root theorem."""
    if poly.is_zero:
        raise DomainError("the zero polynomial has every number as a root")
    coeffs = list(poly.coeffs)
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    reduced = IntPoly(coeffs)
    if reduced.degree >= 1:
        for num in divisors(abs(coeffs[0])):
            for den in divisors(abs(coeffs[-1])):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if reduced(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def sturm_sequence(poly: IntPoly) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in poly.coeffs], [Fraction(c) for c in poly.derivative().coeffs]]
    while seq[-1] and len(seq[-1]) > 1:
        _, rem = _qdivmod(seq[-2], seq[-1])
        if not rem:
            break
        seq.append([-c for c in rem])
    return [s for s in seq if s]


def _qdivmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        coef = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = coef
        for j, bc in enumerate(b):
            a[shift + j] -= coef * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _sign_changes(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def sturm_real_root_count(poly: IntPoly) -> int:
    """Number of distinct real roots of a squarefree integer polynomial."""
    if poly.is_zero:
        raise DomainError("the zero polynomial has no finite root count")
    if not is_squarefree_q(poly):
        raise DomainError("Sturm counting requires a squarefree polynomial")
    if poly.degree == 0:
        return 0
    seq = sturm_sequence(poly)
    at_pos = [1 if s[-1] > 0 else -1 for s in seq]
    at_neg = [(1 if s[-1] > 0 else -1) * (-1) ** (len(s) - 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


# --------------------------------------------------------------------------
# Polynomials over F_p
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over the prime field F_p, ascending coefficients."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) % self.p for c in self.coeffs))

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self.coeffs) > length:
            raise DomainError(f"degree {self.degree} does not fit in {length} slots")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def _check(self, other) -> "FpPoly":
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        if other.p != self.p:
            raise DomainError(f"mixing F_{self.p} and F_{other.p} polynomials")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, (self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero or other.is_zero:
            return FpPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero:
            raise DomainError("division by the zero polynomial")
        p = self.p
        inv = pow(other.leading, p - 2, p)
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        q = [0] * max(len(r) - db, 1)
        while len(r) - 1 >= db and r:
            coef = r[-1] * inv % p
            shift = len(r) - 1 - db
            q[shift] = coef
            for j, bc in enumerate(other.coeffs):
                r[shift + j] = (r[shift + j] - coef * bc) % p
            while r and r[-1] == 0:
                r.pop()
        return FpPoly(p, q), FpPoly(p, r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> "FpPoly":
        if self.is_zero:
            return self
        inv = pow(self.leading, self.p - 2, self.p)
        return FpPoly(self.p, (c * inv for c in self.coeffs))

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, (i * c for i, c in enumerate(self.coeffs) if i))

    def pow_mod(self, e: int, modulus: "FpPoly") -> "FpPoly":
        result, base = FpPoly.one(self.p) % modulus, self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def to_int_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs or (0,)) + "]"

    def pretty(self, var: str = "x") -> str:
        return _pretty(self.coeffs, var)


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd over F_p (zero only if both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def is_squarefree_fp(poly: FpPoly) -> bool:
    if poly.is_zero:
        raise DomainError("squarefreeness of the zero polynomial is undefined")
    return fp_gcd(poly, poly.derivative()).degree <= 0


def _pth_root(poly: FpPoly) -> FpPoly:
    p = poly.p
    return FpPoly(p, poly.coeffs[::p])


def squarefree_decomposition(poly: FpPoly) -> list[tuple[FpPoly, int]]:
    """Pairs ``(g_i, i)`` with ``poly ~ prod g_i^i`` and each ``g_i`` squarefree."""
    f = poly.monic()
    one = FpPoly.one(f.p)
    out: list[tuple[FpPoly, int]] = []
    c = fp_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = fp_gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            out.append((fac, i))
        w, c, i = y, c // y, i + 1
    if c != one and c.degree > 0:
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * f.p))
    return out


def distinct_degree_factorization(poly: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a squarefree monic polynomial into products of equal-degree factors."""
    p = poly.p
    x = FpPoly.x(p)
    rest = poly.monic()
    out = []
    h = x % rest if rest.degree > 0 else x
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, rest)
        g = fp_gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _monic_polys(p: int, d: int) -> Iterator[FpPoly]:
    for tail in itertools.product(range(p), repeat=d):
        yield FpPoly(p, tail + (1,))


def _equal_degree_split(g: FpPoly, d: int) -> list[FpPoly]:
    if g.degree == d:
        return [g]
    p = g.p
    if p == 2 or p**d <= _EXHAUSTIVE_SPLIT_LIMIT:
        found = []
        rest = g
        for cand in _monic_polys(p, d):
            if rest.degree == d:
                found.append(rest)
                break
            if (rest % cand).is_zero:
                found.append(cand)
                rest = rest // cand
        return found
    # Cantor-Zassenhaus with a fixed seed keeps the output deterministic.
    rng = random.Random(p * 1000003 + d)
    n = g.degree
    while True:
        a = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree <= 0:
            continue
        b = a.pow_mod((p**d - 1) // 2, g) - 1
        u = fp_gcd(g, b)
        if 0 < u.degree < n:
            return _equal_degree_split(u, d) + _equal_degree_split(g // u, d)


def factor_over_fp(poly: FpPoly) -> list[tuple[FpPoly, int]]:
    """Monic irreducible factors with multiplicities, sorted by degree then coefficients.

    The product of ``f**m`` over the result equals ``poly.monic()``.
    """
    if poly.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    out = []
    for part, mult in squarefree_decomposition(poly):
        for block, d in distinct_degree_factorization(part):
            for fac in _equal_degree_split(block, d):
                out.append((fac, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return out


def factor_degrees(poly: FpPoly) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors, counted with multiplicity.

    Only distinct-degree splitting is needed, which keeps this cheap for
    the factorization-pattern certificates.
    """
    if poly.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    degs = []
    for part, mult in squarefree_decomposition(poly):
        for block, d in distinct_degree_factorization(part):
            degs.extend([d] * (mult * (block.degree // d)))
    return tuple(sorted(degs))


def is_irreducible_fp(poly: FpPoly) -> bool:
    if poly.degree <= 0:
        return False
    return factor_degrees(poly) == (poly.degree,)


def has_divisor_of_degree_at_most(poly: FpPoly, bound: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree 1..bound."""
    for d in range(1, bound + 1):
        for cand in _monic_polys(poly.p, d):
            if (poly % cand).is_zero:
                return True
    return False


# --------------------------------------------------------------------------
# Finite fields F_{p^k}
# --------------------------------------------------------------------------


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    if (p, k) in DEFINING_POLYNOMIALS:
        return DEFINING_POLYNOMIALS[(p, k)]
    if k == 1:
        return (0, 1)
    if k == 2 and p > 2:
        n = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)
        return (-n % p, 0, 1)
    for cand in _monic_polys(p, k):
        if not has_divisor_of_degree_at_most(cand, k // 2):
            return cand.coeffs
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class FiniteField:
    """The field F_{p^k} with integer-encoded elements ``0 .. p^k - 1``."""

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not isprime(p):
            raise DomainError(f"{p} is not prime")
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise DomainError(f"extension degree must be in 1..{MAX_EXTENSION_DEGREE}")
        self.p, self.k = p, k
        self.order = p**k
        self.modulus = FpPoly(p, modulus if modulus is not None else _default_modulus(p, k))
        if self.modulus.degree != k or self.modulus.leading != 1:
            raise DomainError("defining polynomial must be monic of degree k")
        if k > 1 and has_divisor_of_degree_at_most(self.modulus, k // 2):
            raise DomainError(f"{self.modulus.pretty('t')} is reducible over F_{p}")
        self._exp: list[int] | None = None
        self._log: list[int] | None = None

    def __repr__(self):
        return f"FiniteField({self.p}, {self.k})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def elements(self) -> range:
        return range(self.order)

    def to_vector(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_vector(self, vec: Sequence[int]) -> int:
        out = 0
        for c in reversed(list(vec)[: self.k]):
            out = out * self.p + (c % self.p)
        return out

    def embed(self, c: int) -> int:
        """Image of an integer under Z -> F_p -> F_{p^k}."""
        return c % self.p

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        va, vb = self.to_vector(a), self.to_vector(b)
        return self.from_vector([x + y for x, y in zip(va, vb)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_vector([-x for x in self.to_vector(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_slow(self, a: int, b: int) -> int:
        prod = FpPoly(self.p, self.to_vector(a)) * FpPoly(self.p, self.to_vector(b))
        return self.from_vector((prod % self.modulus).padded(self.k))

    def _build_log_tables(self):
        q = self.order
        for g in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_slow(x, g)
                if len(exp) > q:
                    break
            if len(exp) == q - 1:
                break
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self._exp is None:
            self._build_log_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is None:
            self._build_log_tables()
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def evaluate(self, coeffs: Sequence[int], x: int) -> int:
        """Evaluate a polynomial with F_p (integer) coefficients at ``x``."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c % self.p)
        return acc

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1 if self.p > 2 else True

    def __call__(self, value: int) -> "FqElement":
        return FqElement(self, value % self.order)


@lru_cache(maxsize=None)
def gf(p: int, k: int = 1) -> FiniteField:
    """The process-wide field F_{p^k} with its fixed defining polynomial."""
    return FiniteField(p, k)


@dataclass(frozen=True)
class FqElement:
    """A value type wrapping one element of a ``FiniteField``."""

    field: FiniteField
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise DomainError("elements of different fields")
            return other.value
        return self.field.embed(other)

    def __add__(self, other):
        return FqElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FqElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FqElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FqElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FqElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FqElement(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __pow__(self, e: int):
        return FqElement(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    @property
    def vector(self) -> list[int]:
        return self.field.to_vector(self.value)

    def frobenius(self) -> "FqElement":
        return FqElement(self.field, self.field.frobenius(self.value))
