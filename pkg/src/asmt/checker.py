"""Hypothesis checking for the mod-3 modularity criterion and the mod-2 image conditions.

Each check returns a ``CheckReport`` whose conditions carry a verdict and a
JSON-ready evidence record.  A verdict of ``Pass`` always rests on exact
computation; anything the code cannot decide is ``Inconclusive`` (or
``Unknown`` for predicates with no implementable definition).
"""

from __future__ import annotations

import enum
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import primerange

from .curve import (
    GenusTwoModel,
    ModelOverFp,
    frobenius_charpoly,
    is_smooth_genus2,
    is_weil_polynomial,
    reduce_mod,
)
from .ffpoly import FpPoly, is_squarefree_q
from .gsp4f3 import (
    FrobeniusEvidence,
    SurjectivityVerdict,
    is_forbidden_frob2_charpoly,
    surjectivity_report,
)
from .mod2image import (
    GaloisVerdict,
    conjugation_class_from_real_roots,
    cycle_type_label,
    has_rational_weierstrass_point,
    quintic_factor,
    quintic_galois_certificate,
    weierstrass_poly,
)

SCHEMA = 1


class Verdict(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"
    UNKNOWN = "Unknown"


@dataclass
class Condition:
    name: str
    verdict: Verdict
    evidence: dict = field(default_factory=dict)
    required: bool = True

    def as_dict(self) -> dict:
        return {"name": self.name, "verdict": self.verdict.value, "evidence": self.evidence}


def combine(verdicts) -> Verdict:
    verdicts = list(verdicts)
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if all(v is Verdict.PASS for v in verdicts):
        return Verdict.PASS
    return Verdict.INCONCLUSIVE


@dataclass
class CheckReport:
    curve: GenusTwoModel
    conditions: list[Condition]

    @property
    def overall(self) -> Verdict:
        return combine(c.verdict for c in self.conditions if c.required)

    def condition(self, name: str) -> Condition:
        return next(c for c in self.conditions if c.name == name)

    def as_dict(self) -> dict:
        return {
            "curve": str(self.curve),
            "conditions": [c.as_dict() for c in self.conditions],
            "overall": self.overall.value,
            "schema": SCHEMA,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.as_dict(), indent=indent)


def _mod3(cp) -> str:
    return str(FpPoly(3, cp.coeffs))


def frobenius_evidence(
    model: GenusTwoModel, prime_bound: int, bad_primes=None
) -> tuple[FrobeniusEvidence, list[int]]:
    """Charpolys at primes ``l <= prime_bound``, ``l != 3``, where the model has good reduction."""
    ev = FrobeniusEvidence()
    skipped = []
    for ell in primerange(2, prime_bound + 1):
        if ell == 3:
            continue
        if bad_primes is not None and ell in bad_primes:
            skipped.append(ell)
            continue
        rec = frobenius_charpoly(reduce_mod(model, ell))
        if not rec.good_reduction:
            skipped.append(ell)
            continue
        ev.add(ell, rec.charpoly)
    return ev, skipped


def _condition_surjective(model, prime_bound, bad_primes) -> Condition:
    ev, skipped = frobenius_evidence(model, prime_bound, bad_primes)
    rep = surjectivity_report(ev)
    evidence = {
        "mode": rep.mode,
        "prime_bound": prime_bound,
        "primes_used": len(ev.frobenius),
        "primes_skipped": skipped,
        "observed_pairs": [[str(FpPoly(3, cp)), mu] for cp, mu in sorted(ev.pairs())],
        "contained_in": rep.containing,
        "result": rep.verdict.value,
    }
    ok = rep.verdict is SurjectivityVerdict.CONCLUSIVE_SURJECTIVE
    return Condition("mod3_image_surjective", Verdict.PASS if ok else Verdict.INCONCLUSIVE, evidence)


def _condition_frob2(model, bad_primes) -> Condition:
    name = "frob2_charpoly_not_forbidden"
    rec = frobenius_charpoly(reduce_mod(model, 2))
    if not rec.good_reduction:
        note = "model has bad reduction at 2; unramifiedness at 2 is not certified"
        if bad_primes is not None and 2 not in bad_primes:
            note = "curve has good reduction at 2 but the given model does not"
        return Condition(name, Verdict.INCONCLUSIVE, {"good_reduction": False, "reason": note})
    forbidden = is_forbidden_frob2_charpoly(rec.charpoly)
    evidence = {
        "good_reduction": True,
        "N1": rec.N1,
        "N2": rec.N2,
        "charpoly": str(rec.charpoly),
        "charpoly_mod3": _mod3(rec.charpoly),
        "forbidden": forbidden,
    }
    return Condition(name, Verdict.FAIL if forbidden else Verdict.PASS, evidence)


def _condition_ordinary3(model, bad_primes) -> Condition:
    name = "good_ordinary_at_3_distinct_roots"
    rec = frobenius_charpoly(reduce_mod(model, 3))
    if not rec.good_reduction:
        if bad_primes is not None and 3 not in bad_primes:
            return Condition(
                name,
                Verdict.INCONCLUSIVE,
                {"good_reduction": False, "reason": "curve has good reduction at 3 but the given model does not"},
            )
        return Condition(name, Verdict.FAIL, {"good_reduction": False, "reason": "BadReduction"})
    distinct = is_squarefree_q(rec.charpoly)
    evidence = {
        "good_reduction": True,
        "N1": rec.N1,
        "N2": rec.N2,
        "charpoly": str(rec.charpoly),
        "ordinary": rec.ordinary,
        "distinct_roots": distinct,
    }
    ok = rec.ordinary and distinct
    return Condition(name, Verdict.PASS if ok else Verdict.FAIL, evidence)


def check_mod3_criterion(model: GenusTwoModel, prime_bound: int = 200, bad_primes=None) -> CheckReport:
    """Check the three hypotheses of the mod-3 criterion for ``Jac(X)``.

    ``bad_primes`` (for instance from a database record) lets the check tell
    a bad model apart from a curve with bad reduction.
    """
    model.require_genus_two()
    bad = None if bad_primes is None else set(int(p) for p in bad_primes)
    conditions = [
        Condition("polarization_prime_to_3", Verdict.PASS, {"polarization_degree": 1}),
        _condition_surjective(model, prime_bound, bad),
        _condition_frob2(model, bad),
        _condition_ordinary3(model, bad),
    ]
    return CheckReport(model, conditions)


def check_mod2_conditions(model: GenusTwoModel, prime_budget: int = 50) -> CheckReport:
    """Check the mod-2 hypotheses: rational Weierstrass point, ordinary at 2, S5 image, conjugation."""
    model.require_genus_two()
    locus = weierstrass_poly(model)
    conditions = []

    rational = has_rational_weierstrass_point(locus)
    conditions.append(
        Condition(
            "rational_weierstrass_point",
            Verdict.PASS if rational else Verdict.FAIL,
            {"locus": str(locus.poly), "degree": locus.degree_flag},
        )
    )

    rec = frobenius_charpoly(reduce_mod(model, 2))
    if rec.good_reduction:
        conditions.append(
            Condition(
                "good_ordinary_at_2",
                Verdict.PASS if rec.e2 % 2 else Verdict.FAIL,
                {"good_reduction": True, "charpoly": str(rec.charpoly), "e2": rec.e2},
            )
        )
    else:
        conditions.append(
            Condition(
                "good_ordinary_at_2",
                Verdict.INCONCLUSIVE,
                {"good_reduction": False, "reason": "semistable ordinary reduction is not tested"},
            )
        )

    quintic = quintic_factor(locus)
    if quintic is None:
        conditions.append(
            Condition("mod2_image_S5", Verdict.FAIL, {"reason": "no rational Weierstrass point"})
        )
    else:
        cert = quintic_galois_certificate(quintic, prime_budget)
        verdict = {
            GaloisVerdict.CONCLUSIVE_S5: Verdict.PASS,
            GaloisVerdict.NOT_S5: Verdict.FAIL,
            GaloisVerdict.INCONCLUSIVE: Verdict.INCONCLUSIVE,
        }[cert.verdict]
        conditions.append(
            Condition(
                "mod2_image_S5",
                verdict,
                {
                    "quintic": str(quintic),
                    "result": cert.verdict.value,
                    "irreducibility_primes": cert.irreducibility_primes,
                    "witness_prime": cert.witness_prime,
                    "reason": cert.reason,
                },
            )
        )

    cycle = conjugation_class_from_real_roots(locus.poly)
    if locus.degree_flag == 5:
        cycle = cycle + (1,)  # the branch point at infinity is real
    conditions.append(
        Condition(
            "complex_conjugation_class",
            Verdict.PASS if cycle.count(2) == 2 else Verdict.FAIL,
            {"cycle_type": list(cycle), "label": cycle_type_label(cycle), "real_weierstrass_points": cycle.count(1)},
        )
    )
    conditions.append(
        Condition(
            "two_distinguished",
            Verdict.UNKNOWN,
            {"reason": "no definition available; reported for information only"},
            required=False,
        )
    )
    return CheckReport(model, conditions)


def compare_mod3_frobenius(a: GenusTwoModel, b: GenusTwoModel, bound: int = 100) -> dict:
    """Compare Frobenius charpolys mod 3 at common good primes ``l <= bound``, ``l != 3``."""
    a.require_genus_two()
    b.require_genus_two()
    compared = []
    first = None
    detail = None
    for ell in primerange(2, bound + 1):
        if ell == 3:
            continue
        ra, rb = frobenius_charpoly(reduce_mod(a, ell)), frobenius_charpoly(reduce_mod(b, ell))
        if not (ra.good_reduction and rb.good_reduction):
            continue
        compared.append(ell)
        ca, cb = _mod3(ra.charpoly), _mod3(rb.charpoly)
        if ca != cb:
            first = ell
            detail = {"a": ca, "b": cb}
            break
    return {
        "a": str(a),
        "b": str(b),
        "bound": bound,
        "agree": first is None,
        "first_disagreement": first,
        "disagreement": detail,
        "compared_primes": compared,
        "schema": SCHEMA,
    }


# --------------------------------------------------------------------------
# Density of curves satisfying the local conditions at 2 and 3
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DensityResult:
    count2: int
    count3: int
    total2: int = 2**11
    total3: int = 3**11

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.count2 * self.count3, self.total2 * self.total3)

    def as_dict(self) -> dict:
        return {
            "fraction": str(self.fraction),
            "decimal": round(float(self.fraction), 6),
            "count2": self.count2,
            "total2": self.total2,
            "count3": self.count3,
            "total3": self.total3,
            "schema": SCHEMA,
        }


def passes_at_2(model: ModelOverFp) -> bool:
    """Smooth mod 2 with Frobenius charpoly outside the forbidden classes."""
    rec = frobenius_charpoly(model)
    if not rec.good_reduction:
        return False
    assert is_weil_polynomial(rec.charpoly, 2)
    return not is_forbidden_frob2_charpoly(rec.charpoly)


def passes_at_3(model: ModelOverFp) -> bool:
    """Smooth and ordinary mod 3 with a charpoly having distinct roots."""
    rec = frobenius_charpoly(model)
    if not rec.good_reduction:
        return False
    assert is_weil_polynomial(rec.charpoly, 3)
    return bool(rec.ordinary) and is_squarefree_q(rec.charpoly)


_H3_CACHE: dict[tuple[int, ...], bool] = {}


def _passes_at_3_by_h(H: tuple[int, ...]) -> bool:
    # Over F3 everything depends on H = 4f + h^2 = f + h^2 only.
    if H not in _H3_CACHE:
        _H3_CACHE[H] = passes_at_3(ModelOverFp(3, FpPoly(3, H), FpPoly(3, ())))
    return _H3_CACHE[H]


def _count_chunk(p: int, hs: list[tuple[int, ...]]) -> int:
    total = 0
    fs = list(itertools.product(range(p), repeat=7))
    for hc in hs:
        if p == 2:
            h = FpPoly(2, hc)
            total += sum(passes_at_2(ModelOverFp(2, FpPoly(2, fc), h)) for fc in fs)
        else:
            hsq = (FpPoly(p, hc) * FpPoly(p, hc)).padded(7)
            total += sum(_passes_at_3_by_h(tuple((a + b) % p for a, b in zip(fc, hsq))) for fc in fs)
    return total


def _chunks(p: int, n: int) -> list[list[tuple[int, ...]]]:
    hs = list(itertools.product(range(p), repeat=4))
    return [hs[i::n] for i in range(n)]


def count_models(p: int, jobs: int = 1) -> int:
    """Models over F_p (all ``p^11``) satisfying the local condition at p, ``p`` in {2, 3}."""
    if p not in (2, 3):
        raise ValueError("only p = 2 and p = 3 have local conditions here")
    if jobs <= 1:
        return _count_chunk(p, _chunks(p, 1)[0])
    parts = _chunks(p, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_chunk, [p] * len(parts), parts))


def local_density(jobs: int = 1) -> DensityResult:
    return DensityResult(count_models(2, jobs), count_models(3, jobs))
