"""Weight combinatorics for GSp4: characters, the Weyl group, Kostant representatives.

Weights are integer triples ``(k1, k2; w)``.  Genuine characters satisfy
``w = k1 + k2 mod 2`` (see ``Character.in_lattice``); rho = (-1, -2; 0) and
rho-shifted weights do not, so the parity is a query rather than an
invariant of the type.  The Weyl
group acts on ``(k1, k2)`` by signed permutations generated by

    s_a(k1, k2; w) = (k2, k1; w)        s_b(k1, k2; w) = (-k1, k2; w)

and fixes ``w``.  A word ``(x1, ..., xn)`` denotes the product ``x1 ... xn``
acting right to left, so ``x_n`` is applied first.  The Levi of the Siegel
parabolic has Weyl group ``{1, s_a}`` and longest element ``s_a``.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Character:
    k1: int
    k2: int
    w: int = 0

    def __post_init__(self):
        for name in ("k1", "k2", "w"):
            object.__setattr__(self, name, int(getattr(self, name)))

    @property
    def in_lattice(self) -> bool:
        return (self.w - self.k1 - self.k2) % 2 == 0

    @classmethod
    def parse(cls, text: str, default_w: str = "zero") -> "Character":
        """``"k1,k2,w"`` or ``"k1,k2"``; a missing w is 0 or, with ``default_w="neg"``, ``-(k1+k2)``."""
        parts = [p.strip() for p in text.replace(";", ",").strip("() ").split(",") if p.strip()]
        try:
            vals = [int(p) for p in parts]
        except ValueError as exc:
            raise DomainError(f"malformed character {text!r}") from exc
        if len(vals) == 2:
            vals.append(-(vals[0] + vals[1]) if default_w == "neg" else 0)
        if len(vals) != 3:
            raise DomainError(f"a character has 2 or 3 integer entries, got {text!r}")
        return cls(*vals)

    def __add__(self, other: "Character") -> "Character":
        return Character(self.k1 + other.k1, self.k2 + other.k2, self.w + other.w)

    def __sub__(self, other: "Character") -> "Character":
        return Character(self.k1 - other.k1, self.k2 - other.k2, self.w - other.w)

    def __neg__(self) -> "Character":
        return Character(-self.k1, -self.k2, -self.w)

    def __rmul__(self, n: int) -> "Character":
        return Character(n * self.k1, n * self.k2, n * self.w)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.k1, self.k2)

    def __str__(self):
        return f"({self.k1},{self.k2};{self.w})"


_GEN = {
    "a": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "b": np.array([[-1, 0], [0, 1]], dtype=np.int64),
}
_NAMES = {"a": "s_a", "b": "s_b"}


def _word_matrix(word: tuple[str, ...]) -> np.ndarray:
    m = np.eye(2, dtype=np.int64)
    for letter in word:
        m = m @ _GEN[letter]
    return m


@dataclass(frozen=True)
class WeylElement:
    """An element of W given by a word in ``"a"``, ``"b"``; equality is by action."""

    word: tuple[str, ...] = ()

    def __post_init__(self):
        word = tuple(self.word)
        if any(x not in _GEN for x in word):
            raise DomainError(f"words use only 'a' and 'b', got {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "WeylElement":
        """``"1"``, ``"bab"``, ``"s_b s_a s_b"`` are all accepted."""
        t = text.replace("s_", "").replace(" ", "").replace("*", "")
        if t in ("", "1", "id", "Id"):
            return cls(())
        return cls(tuple(t))

    @property
    def matrix(self) -> np.ndarray:
        return _word_matrix(self.word)

    def _key(self) -> tuple[int, ...]:
        return tuple(self.matrix.ravel().tolist())

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return reduced(WeylElement(self.word + other.word))

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(reversed(self.word)))

    @property
    def length(self) -> int:
        return len(reduced(self).word)

    def __str__(self):
        return " ".join(_NAMES[x] for x in self.word) or "1"


@lru_cache(maxsize=None)
def weyl_group() -> tuple[WeylElement, ...]:
    """All 8 elements, each with a shortest word, in breadth-first order."""
    found = [WeylElement(())]
    seen = {found[0]._key()}
    i = 0
    while i < len(found):
        for x in "ab":
            cand = WeylElement(found[i].word + (x,))
            if cand._key() not in seen:
                seen.add(cand._key())
                found.append(cand)
        i += 1
    return tuple(found)


def reduced(w: WeylElement) -> WeylElement:
    """A shortest word for ``w`` (the word itself when it is already shortest)."""
    for g in weyl_group():
        if g == w:
            return w if len(w.word) == len(g.word) else g
    raise AssertionError("unreachable: W is closed")


S_A = WeylElement(("a",))
S_B = WeylElement(("b",))
IDENTITY = WeylElement(())
W0_M = S_A

# positive roots and their coroot pairings, as functions of (k1, k2)
POSITIVE_ROOTS = (
    Character(1, -1, 0),
    Character(-2, 0, 0),
    Character(0, -2, 0),
    Character(-1, -1, 0),
)
ROOT_NAMES = ("e1-e2", "-2e1", "-2e2", "-e1-e2")
SIMPLE_ROOTS = {"a": POSITIVE_ROOTS[0], "b": POSITIVE_ROOTS[1]}
RHO = Character(-1, -2, 0)


def coroot_pairings(k: Character) -> tuple[int, ...]:
    """``<k, alpha^vee>`` for the four positive roots, in ``POSITIVE_ROOTS`` order."""
    return (k.k1 - k.k2, -k.k1, -k.k2, -k.k1 - k.k2)


def half_sum_positive_roots() -> Character:
    total = Character(0, 0, 0)
    for r in POSITIVE_ROOTS:
        total = total + r
    if total.k1 % 2 or total.k2 % 2:
        raise AssertionError("half-sum is not integral")
    return Character(total.k1 // 2, total.k2 // 2, total.w // 2)


def act(w: WeylElement, k: Character) -> Character:
    v = w.matrix @ np.array([k.k1, k.k2], dtype=np.int64)
    return Character(int(v[0]), int(v[1]), k.w)


def is_m_dominant(k: Character) -> bool:
    return k.k1 >= k.k2


def is_g_dominant(k: Character) -> bool:
    return 0 >= k.k1 >= k.k2


def kostant_representatives() -> list[WeylElement]:
    """``[1, s_b, s_b s_a, s_b s_a s_b]``, of lengths 0 through 3."""
    return [IDENTITY, S_B, WeylElement(("b", "a")), WeylElement(("b", "a", "b"))]


def minimal_coset_representatives() -> list[WeylElement]:
    """Shortest elements of each coset ``{1, s_a} w``, found by search."""
    reps = []
    for w in weyl_group():
        if (S_A * w).length > w.length:
            reps.append(w)
    return sorted(reps, key=lambda w: w.length)


def kappa_w(lam: Character, w: WeylElement) -> Character:
    """``-w0M w (lam + rho) - rho``."""
    return -act(W0_M, act(w, lam + RHO)) - RHO


def w_lambda(lam: Character) -> list[WeylElement]:
    """The stabilizer of ``lam + rho`` in W."""
    target = lam + RHO
    return [w for w in weyl_group() if act(w, target) == target]


def slope_bound(nu: Character, w: WeylElement) -> Character:
    """``-nu + w^{-1} w0M rho + rho``."""
    return -nu + act(w.inverse(), act(W0_M, RHO)) + RHO


def jh_weight(lam: Character, w: WeylElement, n: Mapping[int, int] | Iterable[int] | None = None) -> Character:
    """``lam + w^{-1} w0M rho + rho - sum_alpha n_alpha alpha``.

    ``n`` gives nonnegative multiplicities for the positive roots, either as a
    sequence in ``POSITIVE_ROOTS`` order or as an index-to-count mapping.
    """
    if n is None:
        counts = [0, 0, 0, 0]
    elif isinstance(n, Mapping):
        counts = [int(n.get(i, 0)) for i in range(4)]
    else:
        counts = [int(c) for c in n]
    if len(counts) != 4 or any(c < 0 for c in counts):
        raise DomainError("need four nonnegative root multiplicities")
    out = lam + act(w.inverse(), act(W0_M, RHO)) + RHO
    for c, r in zip(counts, POSITIVE_ROOTS):
        out = out - c * r
    return out


def mu_pairing(k: Character) -> int:
    """Pairing with the cocharacter ``t -> diag(1, 1, t, t)``.

    A character ``(k1, k2; w)`` restricts to ``diag(t1, t2, v/t2, v/t1)`` as
    ``t1^k1 t2^k2 v^((w - k1 - k2)/2)``; the cocharacter has ``t1 = t2 = 1``
    and ``v = t``, giving ``(w - k1 - k2) / 2``.
    """
    if not k.in_lattice:
        raise DomainError(f"{k} is not a character (parity of w)")
    return (k.w - k.k1 - k.k2) // 2


@dataclass(frozen=True)
class HodgeTateWeights:
    weights: tuple[int, int, int, int]
    regular: bool


def hodge_tate_weights(k: int) -> HodgeTateWeights:
    """Weights ``0, k-2, k-1, 2k-3`` of a weight-k Siegel eigenform."""
    if k < 2:
        raise DomainError("weight must be at least 2")
    ws = (0, k - 2, k - 1, 2 * k - 3)
    return HodgeTateWeights(ws, len(set(ws)) == 4)


# --------------------------------------------------------------------------
# Chamber picture
# --------------------------------------------------------------------------

_DOMINANT_WALLS = ((0, -1), (-1, -1))


def _label(i: int) -> str:
    return f"^{i}w"


def chamber_rays() -> dict[str, list[tuple[int, int]]]:
    """Images of the dominant cone's walls under ``x -> -w0M w x``, per Kostant representative."""
    out = {}
    for i, w in enumerate(kostant_representatives()):
        rays = []
        for d in _DOMINANT_WALLS:
            img = -act(W0_M, act(w, Character(d[0], d[1], 0)))
            rays.append(img.pair)
        out[_label(i)] = rays
    return out


def chamber_data(lam: Character, box: tuple[int, int, int] = (-2, 5, -2)) -> list[dict]:
    """Records ``{kind, x, y, label}`` for the chamber picture.

    Kinds: ``vertex`` (the point -rho), ``ray`` (boundary direction from the
    vertex), ``chamber`` (label anchor), ``dot`` (M-dominant lattice points
    ``x in [x0, x1]``, ``y0 <= y <= x``) and ``marker`` (the weights kappa_w).
    """
    vx, vy = (-RHO).pair
    records = [{"kind": "vertex", "x": vx, "y": vy, "label": "-rho"}]
    rays = chamber_rays()
    seen = []
    for label, pair in rays.items():
        for d in pair:
            if d not in seen:
                seen.append(d)
    for d in seen:
        owners = "+".join(lbl for lbl, pair in rays.items() if d in pair)
        records.append({"kind": "ray", "x": d[0], "y": d[1], "label": owners})
    for label, (d1, d2) in rays.items():
        records.append(
            {"kind": "chamber", "x": vx + 3 * (d1[0] + d2[0]), "y": vy + 3 * (d1[1] + d2[1]), "label": label}
        )
    x0, x1, y0 = box
    for x in range(x0, x1 + 1):
        for y in range(y0, x + 1):
            records.append({"kind": "dot", "x": x, "y": y, "label": ""})
    for i, w in enumerate(kostant_representatives()):
        k = kappa_w(lam, w)
        records.append({"kind": "marker", "x": k.k1, "y": k.k2, "label": _label(i)})
    return records


def chamber_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["kind", "x", "y", "label"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def chamber_json(records: list[dict]) -> str:
    return json.dumps(records, indent=1)


def random_character(rng: random.Random, bound: int = 20) -> Character:
    k1, k2 = rng.randint(-bound, bound), rng.randint(-bound, bound)
    w = rng.randint(-bound, bound)
    if (w - k1 - k2) % 2:
        w += 1
    return Character(k1, k2, w)
