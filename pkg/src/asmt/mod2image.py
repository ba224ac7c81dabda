"""The 2-torsion layer: Weierstrass loci, S6 acting on J[2], quintic Galois certificates.

The 2-torsion of a genus-2 Jacobian is modeled combinatorially as even subsets
of the six Weierstrass points modulo the full set, with the intersection
pairing ``|S & T| mod 2``.  A permutation of the points acts on this
4-dimensional F_2-space symplectically, giving the isomorphism S6 -> Sp4(F2).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import Poly, Symbol, primerange

from .curve import GenusTwoModel
from .errors import DomainError, NotGenusTwo
from .ffpoly import IntPoly, gf, is_squarefree_fp, is_squarefree_q, factor_degrees
from .ffpoly import rational_roots, sturm_real_root_count

# --------------------------------------------------------------------------
# Weierstrass loci
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WeierstrassLocus:
    poly: IntPoly
    degree_flag: int
    has_infinity_branch_point: bool


def weierstrass_poly(model: GenusTwoModel) -> WeierstrassLocus:
    H = model.H
    if H.degree not in (5, 6) or not is_squarefree_q(H):
        raise NotGenusTwo(f"4f + h^2 = {H.pretty()} is not squarefree of degree 5 or 6")
    return WeierstrassLocus(H, H.degree, H.degree == 5)


def has_rational_weierstrass_point(locus: WeierstrassLocus) -> bool:
    return locus.degree_flag == 5 or bool(rational_roots(locus.poly))


def quintic_factor(locus: WeierstrassLocus) -> IntPoly | None:
    """The quintic cut out by the non-rational-point part of the locus, if any.

    Degree 5: the primitive part of the locus.  Degree 6 with a rational root ``a/b``: the
    primitive cofactor of ``b x - a``.  Otherwise ``None``.
    """
    if locus.degree_flag == 5:
        return locus.poly.primitive_part()
    roots = rational_roots(locus.poly)
    if not roots:
        return None
    r = roots[0]
    quo = Poly(list(reversed(locus.poly.coeffs)), Symbol("x")).exquo(
        Poly([r.denominator, -r.numerator], Symbol("x"))
    )
    return IntPoly(reversed([int(c) for c in quo.all_coeffs()])).primitive_part()


# --------------------------------------------------------------------------
# J[2] and S6 -> Sp4(F2)
# --------------------------------------------------------------------------

POINTS = frozenset(range(1, 7))
_HALF = frozenset({1, 2, 3})
TWO_TORSION_BASIS = (
    frozenset({1, 2}),
    frozenset({2, 3}),
    frozenset({4, 5}),
    frozenset({5, 6}),
)


def canonical_class(s) -> frozenset:
    """Representative of an even subset modulo the full set."""
    s = frozenset(s)
    if len(s) % 2:
        raise DomainError(f"{sorted(s)} has odd cardinality")
    if not s <= POINTS:
        raise DomainError(f"{sorted(s)} is not a subset of {{1..6}}")
    return POINTS - s if len(s & _HALF) % 2 else s


class TwoTorsionSpace:
    """Even subsets of {1..6} modulo the full set, with the pairing ``|S & T| mod 2``."""

    basis = TWO_TORSION_BASIS

    def __init__(self):
        self._coords: dict[frozenset, tuple[int, ...]] = {}
        for bits in itertools.product((0, 1), repeat=4):
            s: frozenset = frozenset()
            for b, v in zip(bits, self.basis):
                if b:
                    s = s ^ v
            self._coords[canonical_class(s)] = bits

    def elements(self) -> list[frozenset]:
        return list(self._coords)

    @staticmethod
    def pairing(s, t) -> int:
        return len(frozenset(s) & frozenset(t)) % 2

    def coordinates(self, s) -> tuple[int, ...]:
        return self._coords[canonical_class(s)]

    def gram(self) -> np.ndarray:
        return np.array([[self.pairing(u, v) for v in self.basis] for u in self.basis], dtype=np.int64)


@lru_cache(maxsize=None)
def two_torsion_space() -> TwoTorsionSpace:
    return TwoTorsionSpace()


@dataclass(frozen=True)
class S6Element:
    """A permutation of {1..6}; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(1, 7)):
            raise DomainError(f"{self.images} is not a permutation of 1..6")

    @classmethod
    def identity(cls) -> "S6Element":
        return cls(tuple(range(1, 7)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "S6Element") -> "S6Element":
        """``(self * other)(i) = self(other(i))``."""
        return S6Element(tuple(self(other(i)) for i in range(1, 7)))

    def act(self, s) -> frozenset:
        return frozenset(self(i) for i in s)


def all_s6() -> list[S6Element]:
    return [S6Element(p) for p in itertools.permutations(range(1, 7))]


def s6_to_sp4f2(g: S6Element) -> np.ndarray:
    """Matrix (columns = images of the basis) of ``g`` acting on J[2]."""
    V = two_torsion_space()
    cols = [V.coordinates(g.act(b)) for b in V.basis]
    return np.array(cols, dtype=np.int64).T


def s6_sp4f2_report(pair_sample: int | None = 10_000, seed: int = 0) -> dict:
    """Brute-force facts about the S6 -> Sp4(F2) map.

    The homomorphism property is checked on ``pair_sample`` random pairs, or on
    all 720^2 pairs when ``pair_sample`` is None.
    """
    V = two_torsion_space()
    omega = V.gram()
    perms = all_s6()
    mats = np.stack([s6_to_sp4f2(g) for g in perms])
    keys = {m.tobytes() for m in mats}
    preserves = bool(np.all(np.einsum("nji,jk,nkl->nil", mats, omega, mats) % 2 == omega))
    table = np.array([g.images for g in perms], dtype=np.int64) - 1
    codes = table @ (6 ** np.arange(6))
    order = np.argsort(codes)
    n = len(perms)
    if pair_sample is None:
        a, b = (x.ravel() for x in np.meshgrid(np.arange(n), np.arange(n), indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        a, b = rng.integers(0, n, size=(2, pair_sample))
    composed = np.take_along_axis(table[a], table[b], axis=1)  # (g h)(i) = g(h(i))
    idx = order[np.searchsorted(codes[order], composed @ (6 ** np.arange(6)))]
    prod = np.einsum("nij,njk->nik", mats[a], mats[b]) % 2
    hom = bool(np.all(prod == mats[idx]))
    return {
        "distinct_images": len(keys),
        "homomorphism": hom,
        "pairs_checked": int(len(a)),
        "preserves_pairing": preserves,
        "gram": omega.tolist(),
        "gram_det_mod2": int(round(np.linalg.det(omega))) % 2,
    }


# --------------------------------------------------------------------------
# Quintic Galois group certificates
# --------------------------------------------------------------------------


class GaloisVerdict(str, enum.Enum):
    CONCLUSIVE_S5 = "ConclusiveS5"
    NOT_S5 = "NotS5"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class QuinticCertificate:
    verdict: GaloisVerdict
    irreducibility_primes: list[int] = field(default_factory=list)
    witness_prime: int | None = None
    patterns: dict[int, tuple[int, ...]] = field(default_factory=dict)
    reason: str = ""


def _subset_sums(pattern: tuple[int, ...]) -> set[int]:
    sums = {0}
    for d in pattern:
        sums |= {s + d for s in sums}
    return sums


def good_primes_for(q: IntPoly, budget: int):
    """First ``budget`` primes with ``p`` not dividing lc(q) and ``q mod p`` squarefree."""
    found = 0
    for p in primerange(2, 10**7):
        if q.leading % p == 0:
            continue
        if not is_squarefree_fp(q.reduce(p)):
            continue
        yield p
        found += 1
        if found >= budget:
            return


def _reducible_over_q(q: IntPoly) -> bool:
    x = Symbol("x")
    _, factors = Poly(list(reversed(q.coeffs)), x).factor_list()
    return len(factors) > 1 or factors[0][1] > 1 or factors[0][0].degree() < q.degree


def quintic_galois_certificate(q: IntPoly, prime_budget: int = 50) -> QuinticCertificate:
    """Certify that the Galois group of a squarefree quintic is S5.

    Irreducibility comes from factorization patterns (an irreducible reduction,
    or patterns that jointly rule out factors of degree 1 and 2).  An element
    of order 6 comes from a ``(2, 3)`` pattern; among transitive subgroups of
    S5 only S5 itself contains one, see ``s5_order_six_soundness``.
    """
    if q.degree != 5:
        raise DomainError(f"expected a quintic, got degree {q.degree}")
    if not is_squarefree_q(q):
        raise DomainError("quintic is not squarefree")
    if _reducible_over_q(q):
        return QuinticCertificate(GaloisVerdict.NOT_S5, reason="reducible over Q")
    cert = QuinticCertificate(GaloisVerdict.INCONCLUSIVE)
    possible = {1, 2}
    irreducible = False
    for p in good_primes_for(q, prime_budget):
        pattern = factor_degrees(q.reduce(p))
        cert.patterns[p] = pattern
        if not irreducible:
            before = set(possible)
            possible &= _subset_sums(pattern)
            if possible != before or pattern == (5,):
                cert.irreducibility_primes.append(p)
            irreducible = pattern == (5,) or not possible
        if pattern == (2, 3) and cert.witness_prime is None:
            cert.witness_prime = p
        if irreducible and cert.witness_prime is not None:
            cert.verdict = GaloisVerdict.CONCLUSIVE_S5
            cert.reason = "irreducible and contains an element of order 6"
            return cert
    cert.reason = "prime budget exhausted"
    return cert


def quintic_galois_is_s5(q: IntPoly, prime_budget: int = 50) -> GaloisVerdict:
    return quintic_galois_certificate(q, prime_budget).verdict


_S5 = list(itertools.permutations(range(5)))
_S5_INDEX = {g: i for i, g in enumerate(_S5)}


@lru_cache(maxsize=None)
def _s5_table() -> list[list[int]]:
    return [[_S5_INDEX[tuple(g[h[i]] for i in range(5))] for h in _S5] for g in _S5]


def _closure_idx(gens) -> frozenset:
    table = _s5_table()
    seen = {0}
    front = [0]
    while front:
        nxt = []
        for a in front:
            row = table[a]
            for g in gens:
                c = row[g]
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        front = nxt
    return frozenset(seen)


def _perm_order(g: tuple[int, ...]) -> int:
    ident = tuple(range(5))
    k, x = 1, g
    while x != ident:
        x = tuple(g[i] for i in x)
        k += 1
    return k


@lru_cache(maxsize=None)
def subgroups_of_s5() -> frozenset:
    """All subgroups of S5 (as sets of permutation tuples).

    Start from the closures of all pairs of elements, then add joins of pairs
    of known subgroups until nothing new appears.
    """
    n = len(_S5)
    gens = {}
    for a in range(n):
        for b in range(a, n):
            gens.setdefault(_closure_idx((a, b)), (a, b))
    while True:
        new = {}
        groups = list(gens)
        for g, h in itertools.combinations(groups, 2):
            if g <= h or h <= g:
                continue
            j = _closure_idx(gens[g] + gens[h])
            if j not in gens and j not in new:
                new[j] = gens[g] + gens[h]
        if not new:
            break
        gens.update(new)
    return frozenset(frozenset(_S5[i] for i in g) for g in gens)


def s5_order_six_soundness() -> dict:
    """Check that S5 is the only transitive subgroup of S5 with an element of order 6."""
    subs = subgroups_of_s5()
    transitive = [g for g in subs if {x[0] for x in g} == set(range(5))]
    with_six = [g for g in transitive if any(_perm_order(x) == 6 for x in g)]
    return {
        "subgroups": len(subs),
        "transitive_orders": sorted(len(g) for g in transitive),
        "transitive_with_order_six": sorted(len(g) for g in with_six),
        "sound": [len(g) for g in with_six] == [120],
    }


def conjugation_class_from_real_roots(q: IntPoly) -> tuple[int, ...]:
    """Cycle type of complex conjugation on the roots of a squarefree odd-degree polynomial."""
    r = sturm_real_root_count(q)
    n = q.degree
    assert (n - r) % 2 == 0, "real roots of a real polynomial come with conjugate pairs"
    return tuple([2] * ((n - r) // 2) + [1] * r)


def cycle_type_label(cycle_type: tuple[int, ...]) -> str:
    parts = ["(" + "*" * c + ")" for c in cycle_type if c > 1]
    return "".join(parts) or "id"


# --------------------------------------------------------------------------
# Sym^3 of SL2(F4)
# --------------------------------------------------------------------------


def _f4_matmul(a, b):
    F = gf(2, 2)
    n, m, k = len(a), len(b[0]), len(b)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                acc ^= F.mul(a[i][t], b[t][j])
            out[i][j] = acc
    return out


def _transpose(a):
    return [list(r) for r in zip(*a)]


def _f4_det(m) -> int:
    """Determinant over F4 by Laplace expansion (signs vanish in characteristic 2)."""
    F = gf(2, 2)
    if len(m) == 1:
        return m[0][0]
    acc = 0
    for j in range(len(m)):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            acc ^= F.mul(m[0][j], _f4_det(minor))
    return acc


def sym3_matrix(g) -> list[list[int]]:
    """Sym^3 of ``g = [[a, b], [c, d]]`` on the basis ``x^3, x^2 y, x y^2, y^3``.

    ``g`` sends ``x -> a x + c y`` and ``y -> b x + d y``; multinomial
    coefficients are reduced mod 2.
    """
    F = gf(2, 2)
    (a, b), (c, d) = g
    # image of x^i y^(3-i) expanded in monomials x^j y^(3-j)
    cols = []
    for i in (3, 2, 1, 0):
        poly = {0: 1}  # exponent of x -> coefficient
        for lin in [(a, c)] * i + [(b, d)] * (3 - i):
            nxt: dict[int, int] = {}
            for e, v in poly.items():
                for de, w in ((1, lin[0]), (0, lin[1])):
                    nxt[e + de] = nxt.get(e + de, 0) ^ F.mul(v, w)
            poly = nxt
        cols.append([poly.get(j, 0) for j in (3, 2, 1, 0)])
    return _transpose(cols)


def sl2_f4() -> list[tuple[tuple[int, int], tuple[int, int]]]:
    F = gf(2, 2)
    out = []
    for a, b, c, d in itertools.product(F.elements(), repeat=4):
        if F.mul(a, d) ^ F.mul(b, c) == 1:
            out.append(((a, b), (c, d)))
    return out


def sym3_sl2f4_verification() -> dict:
    group = sl2_f4()
    images = [sym3_matrix(g) for g in group]
    distinct = {tuple(map(tuple, m)) for m in images}
    # alternating forms in characteristic 2: symmetric with zero diagonal
    pos = list(itertools.combinations(range(4), 2))
    preserved = []
    for vals in itertools.product(range(4), repeat=len(pos)):
        om = [[0] * 4 for _ in range(4)]
        for (i, j), v in zip(pos, vals):
            om[i][j] = om[j][i] = v
        if _f4_det(om) == 0:
            continue
        if all(_f4_matmul(_f4_matmul(_transpose(m), om), m) == om for m in images):
            preserved.append(om)
    traces = set()
    twisted_match = True
    F = gf(2, 2)
    for g, m in zip(group, images):
        tr = m[0][0] ^ m[1][1] ^ m[2][2] ^ m[3][3]
        traces.add(tr)
        t = g[0][0] ^ g[1][1]
        # trace of V^(2) (x) V is tr(g)^2 * tr(g)
        twisted_match &= tr == F.mul(F.mul(t, t), t)
    return {
        "group_order": len(group),
        "image_order": len(distinct),
        "preserved_alternating_forms": len(preserved),
        "preserves_alternating_form": bool(preserved),
        "trace_set": sorted(traces),
        "traces_in_f2": traces <= {0, 1},
        "matches_twisted_tensor_traces": twisted_match,
    }
