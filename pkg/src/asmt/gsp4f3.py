"""Symplectic similitudes over F_3 for the form J, and mod-3 image tests.

Matrices are numpy int arrays with entries in {0, 1, 2}.  A group is held as
the sorted array of its elements' base-3 codes (16 digits, row-major), which
makes membership and subset tests vectorized.

The witness-mode surjectivity test compares the observed set of
``(charpoly mod 3, multiplier)`` pairs against the signatures of the maximal
subgroups of GSp4(F3), one per conjugacy class.  Signatures are conjugation
invariant, so a set that fits inside no maximal signature cannot come from a
proper subgroup.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

import numpy as np
from sympy import Matrix

from .curve import is_weil_polynomial
from .errors import DomainError, NotSimilitude
from .ffpoly import FpPoly, IntPoly, gf

P = 3
J = np.array([[0, 0, 0, 1], [0, 0, 1, 0], [0, 2, 0, 0], [2, 0, 0, 0]], dtype=np.int64)
SP4_ORDER = 51840
GSP4_ORDER = 103680

# (x^2 + x + 2)^2 and (x^2 - x + 2)^2 mod 3, ascending coefficients
FORBIDDEN_FROB2_MOD3 = frozenset({(1, 1, 2, 2, 1), (1, 2, 2, 1, 1)})

_W = P ** np.arange(16, dtype=np.int64)


def as_matrix(g) -> np.ndarray:
    m = np.asarray(g, dtype=np.int64)
    if m.shape != (4, 4):
        raise DomainError(f"expected a 4x4 matrix, got shape {m.shape}")
    return m % P


def multiplier(g) -> int:
    """The unique ``mu`` with ``g^T J g = mu J``."""
    m = as_matrix(g)
    form = m.T @ J @ m % P
    mu = int(form[0, 3])
    if mu == 0 or not np.array_equal(form, mu * J % P):
        raise NotSimilitude(f"{m.tolist()} is not a similitude for J")
    return mu


def _det_batch(m: np.ndarray) -> np.ndarray:
    """Exact integer determinants of a stack of small square matrices."""
    k = m.shape[-1]
    if k == 1:
        return m[..., 0, 0]
    total = np.zeros(m.shape[:-2], dtype=np.int64)
    for j in range(k):
        minor = np.delete(m[..., 1:, :], j, axis=-1)
        total += (-1) ** j * m[..., 0, j] * _det_batch(minor)
    return total


def charpoly_batch(gs: np.ndarray) -> np.ndarray:
    """Ascending charpoly coefficients mod 3, one row per matrix."""
    gs = np.asarray(gs, dtype=np.int64).reshape(-1, 4, 4)
    e = [np.ones(len(gs), dtype=np.int64)]
    for k in range(1, 5):
        acc = np.zeros(len(gs), dtype=np.int64)
        for idx in itertools.combinations(range(4), k):
            sub = gs[:, list(idx)][:, :, list(idx)]
            acc += _det_batch(sub)
        e.append(acc)
    # det(xI - g) = x^4 - e1 x^3 + e2 x^2 - e3 x + e4
    return np.stack([e[4], -e[3], e[2], -e[1], e[0]], axis=1) % P


def charpoly_f3(g) -> FpPoly:
    return FpPoly(P, charpoly_batch(as_matrix(g)[None])[0].tolist())


def multiplier_batch(gs: np.ndarray) -> np.ndarray:
    gs = np.asarray(gs, dtype=np.int64).reshape(-1, 4, 4)
    return np.einsum("nji,jk,nkl->nil", gs, J, gs)[:, 0, 3] % P


def encode(gs: np.ndarray) -> np.ndarray:
    gs = np.asarray(gs, dtype=np.int64).reshape(-1, 16) % P
    return gs @ _W


def decode(keys: np.ndarray) -> np.ndarray:
    k = np.asarray(keys, dtype=np.int64).copy()
    out = np.empty((len(k), 16), dtype=np.int64)
    for i in range(16):
        out[:, i] = k % P
        k //= P
    return out.reshape(-1, 4, 4)


def inverse_batch(gs: np.ndarray) -> np.ndarray:
    """``g^{-1} = mu^{-1} J^{-1} g^T J`` with ``J^{-1} = -J`` (and ``mu^{-1} = mu`` in F3)."""
    gs = np.asarray(gs, dtype=np.int64).reshape(-1, 4, 4)
    mu = multiplier_batch(gs)
    return mu[:, None, None] * np.einsum("ij,nkj,kl->nil", -J, gs, J) % P


class MatrixGroup:
    """A finite subgroup of GSp4(F3), stored as sorted element codes."""

    def __init__(self, keys: np.ndarray, generators: Sequence[np.ndarray] = ()):
        self.keys = np.unique(np.asarray(keys, dtype=np.int64))
        self.generators = [as_matrix(g) for g in generators]

    @property
    def order(self) -> int:
        return len(self.keys)

    def __len__(self):
        return self.order

    def matrices(self) -> np.ndarray:
        return decode(self.keys)

    def contains(self, gs) -> np.ndarray:
        return np.isin(encode(gs), self.keys, assume_unique=False)

    def __contains__(self, g) -> bool:
        return bool(self.contains(as_matrix(g))[0])

    def issubset(self, other: "MatrixGroup") -> bool:
        return bool(np.all(np.isin(self.keys, other.keys)))

    def multiplier_image(self) -> list[int]:
        return sorted(set(multiplier_batch(self.matrices()).tolist()))

    def signature_counts(self) -> Counter:
        """Multiset of ``(charpoly tuple, multiplier)`` over the elements."""
        mats = self.matrices()
        cps = charpoly_batch(mats)
        mus = multiplier_batch(mats)
        return Counter(zip(map(tuple, cps.tolist()), mus.tolist()))

    def signature(self) -> frozenset:
        return frozenset(self.signature_counts())


def closure(gens: Iterable) -> MatrixGroup:
    """Breadth-first closure of similitude generators under multiplication."""
    gens = [as_matrix(g) for g in gens]
    for g in gens:
        multiplier(g)
    ident = np.eye(4, dtype=np.int64)[None]
    seen = encode(ident)
    if not gens:
        return MatrixGroup(seen)
    stack = np.stack(gens)
    front = ident
    while len(front):
        prod = np.einsum("nij,mjk->nmik", front, stack).reshape(-1, 4, 4) % P
        codes, idx = np.unique(encode(prod), return_index=True)
        new = ~np.isin(codes, seen, assume_unique=True)
        front = prod[idx[new]]
        seen = np.union1d(seen, codes[new])
    return MatrixGroup(seen, gens)


def _data_json(name: str) -> dict:
    return json.loads(resources.files("asmt").joinpath("data").joinpath(name).read_text())


@lru_cache(maxsize=None)
def _generator_data() -> dict:
    return _data_json("sp4f3_generators.json")


def sp4f3_generators() -> list[np.ndarray]:
    return [np.array(g, dtype=np.int64) for g in _generator_data()["sp4_generators"]]


def similitude_generator() -> np.ndarray:
    return np.array(_generator_data()["similitude_generator"], dtype=np.int64)


@lru_cache(maxsize=None)
def sp4_group() -> MatrixGroup:
    return closure(sp4f3_generators())


@lru_cache(maxsize=None)
def gsp4_group() -> MatrixGroup:
    return closure(sp4f3_generators() + [similitude_generator()])


# --------------------------------------------------------------------------
# Frobenius-at-2 predicate
# --------------------------------------------------------------------------


def is_forbidden_frob2_charpoly(cp: IntPoly) -> bool:
    """Whether a Frobenius-at-2 charpoly reduces mod 3 to ``(x^2 +- x + 2)^2``."""
    if cp.degree != 4 or not is_weil_polynomial(cp, 2):
        raise DomainError(f"{cp} is not a Weil 2-polynomial")
    return tuple(c % P for c in cp.coeffs) in FORBIDDEN_FROB2_MOD3


# --------------------------------------------------------------------------
# Maximal subgroups
# --------------------------------------------------------------------------


def _inv_mod3(m: np.ndarray) -> np.ndarray:
    return np.array(Matrix(m.tolist()).inv_mod(P).tolist(), dtype=np.int64)


def symplectic_basis(form: np.ndarray) -> np.ndarray:
    """A change of basis ``Q`` with ``Q^T form Q = J`` (basis order e1, e2, f2, f1)."""
    form = form % P
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(P), repeat=4) if any(v)]

    def b(u, v):
        return int(u @ form @ v) % P

    e1 = vecs[0]
    f1 = next(v for v in vecs if b(e1, v) == 1)
    perp = [v for v in vecs if b(e1, v) == 0 and b(f1, v) == 0]
    e2 = perp[0]
    f2 = next(v for v in perp if b(e2, v) == 1)
    q = np.stack([e1, e2, f2, f1], axis=1) % P
    if not np.array_equal(q.T @ form @ q % P, J):
        raise DomainError("form is degenerate")
    return q


def _conjugate_into_j(form: np.ndarray, gens: list[np.ndarray]) -> list[np.ndarray]:
    q = symplectic_basis(form)
    qi = _inv_mod3(q)
    return [qi @ g @ q % P for g in gens]


def normalizer_mask(group: MatrixGroup, sub: MatrixGroup) -> np.ndarray:
    """Boolean mask over ``group.matrices()`` of elements normalizing ``sub``."""
    mats = group.matrices()
    inv = inverse_batch(mats)
    ok = np.ones(len(mats), dtype=bool)
    for n in sub.generators:
        conj = np.einsum("nij,jk,nkl->nil", mats, n, inv) % P
        ok &= np.isin(encode(conj), sub.keys)
    return ok


def _f9_block_matrix(m) -> np.ndarray:
    """A 2x2 matrix over F9 as a 4x4 matrix over F3 in the basis (1,0),(t,0),(0,1),(0,t)."""
    F = gf(3, 2)
    out = np.zeros((4, 4), dtype=np.int64)
    for col in range(4):
        vec = [0, 0]
        vec[col // 2] = 1 if col % 2 == 0 else 3
        img = [F.add(F.mul(m[r][0], vec[0]), F.mul(m[r][1], vec[1])) for r in range(2)]
        out[:, col] = F.to_vector(img[0]) + F.to_vector(img[1])
    return out


def _c3_generators() -> list[np.ndarray]:
    """SL2(F9), the Frobenius of F9/F3 and the scalar t, as F3-similitudes."""
    F = gf(3, 2)
    t, one, minus = 3, 1, 2
    sl = [[[one, one], [0, one]], [[one, t], [0, one]], [[0, one], [minus, 0]]]
    mats = [_f9_block_matrix(m) for m in sl]
    mats.append(np.diag([1, 2, 1, 2]).astype(np.int64))
    mats.append(_f9_block_matrix([[t, 0], [0, t]]))
    # trace form Tr(u1 v2 - u2 v1), with Tr(a + b t) = 2a since t^2 = -1
    basis = [(1, 0), (3, 0), (0, 1), (0, 3)]
    form = np.zeros((4, 4), dtype=np.int64)
    for r, u in enumerate(basis):
        for c, v in enumerate(basis):
            w = F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]))
            form[r, c] = 2 * F.to_vector(w)[0] % P
    return _conjugate_into_j(form, mats)


def _extraspecial_generators() -> list[np.ndarray]:
    """Q8 (x) O2^-(3) inside Sp(F3^2 (x) F3^2), an extraspecial group of order 32."""
    q8 = [np.array([[0, 1], [2, 0]]), np.array([[1, 1], [1, 2]])]
    eye = np.eye(2, dtype=np.int64)
    o2 = []
    for entries in itertools.product(range(P), repeat=4):
        m = np.array(entries, dtype=np.int64).reshape(2, 2)
        if np.array_equal(m.T @ m % P, eye):
            o2.append(m)
    gens = [np.kron(a, eye) % P for a in q8] + [np.kron(eye, b) % P for b in o2]
    form = np.kron(np.array([[0, 1], [2, 0]]), eye) % P
    return _conjugate_into_j(form, gens)


def maximal_subgroups() -> dict[str, np.ndarray]:
    """Masks over ``gsp4_group().matrices()``, one per conjugacy class of maximal subgroups."""
    G = gsp4_group()
    mats = G.matrices()
    mus = multiplier_batch(mats)
    a, b = [0, 3], [1, 2]
    keep = (mats[:, b][:, :, a] == 0).all((1, 2)) & (mats[:, a][:, :, b] == 0).all((1, 2))
    swap = (mats[:, a][:, :, a] == 0).all((1, 2)) & (mats[:, b][:, :, b] == 0).all((1, 2))
    c3 = closure(_c3_generators())
    extraspecial = closure(_extraspecial_generators())
    return {
        "Sp4(F3)": mus == 1,
        "Klingen parabolic": (mats[:, 1:, 0] == 0).all(1),
        "Siegel parabolic": (mats[:, 0:2, 2:] == 0).all((1, 2)),
        "stabilizer of an orthogonal decomposition": keep | swap,
        "stabilizer of an F9-structure": np.isin(G.keys, c3.keys),
        "normalizer of extraspecial 2^(1+4)": normalizer_mask(G, extraspecial),
    }


def _signature_entry(name: str, mats: np.ndarray) -> dict:
    cps = charpoly_batch(mats)
    mus = multiplier_batch(mats)
    counts = Counter(zip(map(tuple, cps.tolist()), mus.tolist()))
    return {
        "name": name,
        "order": int(len(mats)),
        "multiplier_image": sorted(set(mus.tolist())),
        "charpoly_multiset": [
            {"charpoly": str(FpPoly(P, cp)), "multiplier": int(mu), "count": int(n)}
            for (cp, mu), n in sorted(counts.items())
        ],
    }


def build_subgroup_table() -> dict:
    G = gsp4_group()
    mats = G.matrices()
    entries = [_signature_entry(name, mats[mask]) for name, mask in maximal_subgroups().items()]
    return {
        "version": 1,
        "field": P,
        "group": _signature_entry("GSp4(F3)", mats),
        "subgroups": entries,
        "completeness": (
            "One entry per conjugacy class of maximal subgroups of GSp4(F3); every proper "
            "subgroup lies in a conjugate of one of them, and signatures are conjugation invariant."
        ),
    }


def _parse_signature(entry: dict) -> frozenset:
    out = set()
    for row in entry["charpoly_multiset"]:
        coeffs = tuple(json.loads(row["charpoly"]))
        out.add((coeffs + (0,) * (5 - len(coeffs)), int(row["multiplier"])))
    return frozenset(out)


@lru_cache(maxsize=None)
def load_subgroup_table() -> dict:
    return _data_json("gsp4f3_subgroups.json")


@lru_cache(maxsize=None)
def subgroup_signatures() -> dict[str, frozenset]:
    table = load_subgroup_table()
    return {e["name"]: _parse_signature(e) for e in table["subgroups"]}


@lru_cache(maxsize=None)
def full_signature() -> frozenset:
    return _parse_signature(load_subgroup_table()["group"])


# --------------------------------------------------------------------------
# Surjectivity evidence
# --------------------------------------------------------------------------


class SurjectivityVerdict(str, enum.Enum):
    CONCLUSIVE_SURJECTIVE = "ConclusiveSurjective"
    CONCLUSIVE_NOT_SURJECTIVE = "ConclusiveNotSurjective"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class FrobeniusEvidence:
    """Integral Frobenius charpolys at primes ``l != 3``, optionally explicit generators."""

    frobenius: list[tuple[int, IntPoly]] = field(default_factory=list)
    generators: list[np.ndarray] | None = None

    def __post_init__(self):
        for ell, cp in self.frobenius:
            self._validate(ell, cp)

    @staticmethod
    def _validate(ell: int, cp: IntPoly):
        if ell == P:
            raise DomainError("Frobenius at 3 has no image under a mod-3 representation")
        if not is_weil_polynomial(cp, ell):
            raise DomainError(f"{cp} is not a Weil {ell}-polynomial")

    def add(self, ell: int, cp: IntPoly):
        self._validate(ell, cp)
        self.frobenius.append((ell, cp))

    def pairs(self) -> frozenset:
        """Observed ``(charpoly mod 3, multiplier = l mod 3)`` pairs."""
        out = set()
        for ell, cp in self.frobenius:
            out.add((tuple(c % P for c in cp.padded(5)), ell % P))
        return frozenset(out)


@dataclass
class SurjectivityReport:
    verdict: SurjectivityVerdict
    mode: str
    observed: int = 0
    containing: list[str] = field(default_factory=list)
    order: int | None = None


def surjectivity_report(ev: FrobeniusEvidence) -> SurjectivityReport:
    if ev.generators:
        grp = closure(ev.generators)
        full = grp.order == GSP4_ORDER and grp.multiplier_image() == [1, 2]
        verdict = (
            SurjectivityVerdict.CONCLUSIVE_SURJECTIVE
            if full
            else SurjectivityVerdict.CONCLUSIVE_NOT_SURJECTIVE
        )
        return SurjectivityReport(verdict, "exact", order=grp.order)
    pairs = ev.pairs()
    if not pairs:
        return SurjectivityReport(SurjectivityVerdict.INCONCLUSIVE, "witness")
    if not pairs <= full_signature():
        raise DomainError("Frobenius data is not realizable in GSp4(F3)")
    containing = [name for name, sig in subgroup_signatures().items() if pairs <= sig]
    verdict = (
        SurjectivityVerdict.INCONCLUSIVE if containing else SurjectivityVerdict.CONCLUSIVE_SURJECTIVE
    )
    return SurjectivityReport(verdict, "witness", observed=len(pairs), containing=containing)


def surjectivity_evidence(ev: FrobeniusEvidence) -> SurjectivityVerdict:
    return surjectivity_report(ev).verdict


def random_subgroup(n_gens: int, rng: np.random.Generator) -> MatrixGroup:
    """Closure of ``n_gens`` uniformly random elements of GSp4(F3)."""
    G = gsp4_group()
    picks = rng.integers(0, G.order, size=n_gens)
    return closure(decode(G.keys[picks]))
