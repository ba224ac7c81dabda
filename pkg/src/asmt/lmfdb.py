"""Ingestion of genus-2 curve exports, a JSON-lines result cache, aggregate reports.

Input files hold one JSON object per line::

    {"label": "...", "eqn": [[f0, ..., f6], [h0, ..., h3]], "geom_end_alg": "Q",
     "bad_primes": [2, 3, 5]}

``eqn`` may also be the database's string form ``"[[...],[...]]"``.  A
``geom_end_alg`` of ``"Q"`` means the geometric endomorphism ring is Z.
"""

from __future__ import annotations

import hashlib
import json
import os
import urllib.parse
import urllib.request
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .checker import SCHEMA, check_mod3_criterion
from .curve import GenusTwoModel, frobenius_charpoly, reduce_mod
from .errors import AsmtError, DomainError, EmptyIngest, IngestIOError
from .ffpoly import IntPoly

CACHE_VERSION = 1
CACHE_ENV = "ASMT_CACHE"
DEFAULT_PRIME_BOUND = 200


@dataclass(frozen=True)
class LmfdbCurveRecord:
    label: str
    model: GenusTwoModel
    geom_end_alg_is_Z: bool
    bad_primes: tuple[int, ...] | None = None

    def as_line(self) -> dict:
        out = {
            "label": self.label,
            "eqn": [list(self.model.f.coeffs), list(self.model.h.coeffs)],
            "geom_end_alg": "Q" if self.geom_end_alg_is_Z else "other",
        }
        if self.bad_primes is not None:
            out["bad_primes"] = list(self.bad_primes)
        return out


@dataclass
class IngestResult:
    records: list[LmfdbCurveRecord]
    errors: list[dict] = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def parse_eqn(eqn) -> GenusTwoModel:
    """Map the ``[[f], [h]]`` equation encoding (list or string) to a model."""
    if isinstance(eqn, str):
        try:
            eqn = json.loads(eqn)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed eqn string {eqn!r}") from exc
    if not (isinstance(eqn, list) and len(eqn) == 2 and all(isinstance(p, list) for p in eqn)):
        raise DomainError("eqn must be a pair of coefficient lists")
    for part in eqn:
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in part):
            raise DomainError("eqn coefficients must be integers")
    return GenusTwoModel(IntPoly(eqn[0]), IntPoly(eqn[1]))


def parse_record(obj) -> LmfdbCurveRecord:
    if not isinstance(obj, dict):
        raise DomainError("record must be a JSON object")
    for key in ("label", "eqn", "geom_end_alg"):
        if key not in obj:
            raise DomainError(f"missing field {key!r}")
    label = obj["label"]
    if not isinstance(label, str) or not label:
        raise DomainError("label must be a nonempty string")
    model = parse_eqn(obj["eqn"]).require_genus_two()
    bad = obj.get("bad_primes")
    if bad is not None:
        if not isinstance(bad, list) or not all(isinstance(p, int) for p in bad):
            raise DomainError("bad_primes must be a list of integers")
        bad = tuple(bad)
    return LmfdbCurveRecord(label, model, obj["geom_end_alg"] == "Q", bad)


def ingest(path) -> IngestResult:
    """Parse a JSON-lines export; malformed lines go to ``errors`` instead of aborting."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IngestIOError(f"cannot read {path}: {exc}") from exc
    result = IngestResult([])
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = parse_record(json.loads(line))
            if rec.label in seen:
                raise DomainError(f"duplicate label {rec.label!r}")
        except (json.JSONDecodeError, AsmtError) as exc:
            result.errors.append({"line": lineno, "error": str(exc)})
            continue
        seen.add(rec.label)
        result.records.append(rec)
    if not result.records:
        raise EmptyIngest(f"no valid records in {path}")
    return result


def snapshot_hash(records) -> str:
    h = hashlib.sha256()
    for rec in sorted(records, key=lambda r: r.label):
        h.update(f"{rec.label}\t{rec.model}\t{int(rec.geom_end_alg_is_Z)}\n".encode())
    return h.hexdigest()


# --------------------------------------------------------------------------
# Cache
# --------------------------------------------------------------------------


def cache_key(model: GenusTwoModel, prime_bound: int) -> str:
    return f"{model}|bound={prime_bound}"


class ResultCache:
    """Append-only JSON-lines cache; a torn last line is ignored on load."""

    def __init__(self, path, version: int = CACHE_VERSION):
        self.path = Path(path)
        self.version = version
        self._entries: dict[str, dict] = {}
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        lines = self.path.read_text().split("\n")
        for i, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError:
                if i >= len(lines) - 2:
                    continue  # partial write at the end
                raise
            if entry.get("version") == self.version:
                self._entries[entry["key"]] = entry

    def get(self, key: str) -> dict | None:
        return self._entries.get(key)

    def put(self, key: str, value: dict):
        entry = {"key": key, "version": self.version, **value}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(entry, sort_keys=False) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        self._entries[key] = entry

    def entries(self) -> list[dict]:
        return list(self._entries.values())

    def __len__(self):
        return len(self._entries)


def default_cache_path() -> Path:
    return Path(os.environ.get(CACHE_ENV, "asmt_cache.jsonl"))


# --------------------------------------------------------------------------
# Batch checking and reports
# --------------------------------------------------------------------------


def evaluate_record(rec: LmfdbCurveRecord, prime_bound: int = DEFAULT_PRIME_BOUND) -> dict:
    """Check one record; the result is what the cache stores."""
    out = {
        "label": rec.label,
        "curve": str(rec.model),
        "geom_end_alg_is_Z": rec.geom_end_alg_is_Z,
        "report": None,
        "frobenius": [],
    }
    if rec.geom_end_alg_is_Z:
        out["report"] = check_mod3_criterion(rec.model, prime_bound, rec.bad_primes).as_dict()
        out["frobenius"] = [frobenius_charpoly(reduce_mod(rec.model, p)).as_dict() for p in (2, 3)]
    return out


def _evaluate_star(args):
    return evaluate_record(*args)


def run_batch(records, cache: ResultCache | None = None, prime_bound: int = DEFAULT_PRIME_BOUND, jobs: int = 1):
    """Evaluate records (cached where possible); results follow the input label order."""
    results: dict[str, dict] = {}
    todo = []
    for rec in records:
        hit = cache.get(cache_key(rec.model, prime_bound)) if cache else None
        if hit is not None and hit.get("label") == rec.label and hit.get("geom_end_alg_is_Z") == rec.geom_end_alg_is_Z:
            results[rec.label] = {k: hit[k] for k in ("label", "curve", "geom_end_alg_is_Z", "report", "frobenius")}
        else:
            todo.append(rec)
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = list(pool.map(_evaluate_star, [(r, prime_bound) for r in todo]))
    else:
        fresh = [evaluate_record(r, prime_bound) for r in todo]
    for rec, value in zip(todo, fresh):
        if cache is not None:
            cache.put(cache_key(rec.model, prime_bound), value)
        results[rec.label] = value
    return [results[r.label] for r in records]


def report(results, snapshot: str | None = None) -> dict:
    """Aggregate counts over evaluated records."""
    applicable = [r for r in results if r["geom_end_alg_is_Z"]]
    overall = Counter()
    per_condition: dict[str, Counter] = {}
    for r in applicable:
        rep = r["report"]
        overall[rep["overall"]] += 1
        for cond in rep["conditions"]:
            per_condition.setdefault(cond["name"], Counter())[cond["verdict"]] += 1
    verdicts = ("Pass", "Fail", "Inconclusive")
    return {
        "schema": SCHEMA,
        "snapshot": snapshot,
        "records": len(results),
        "total_end_Z": len(applicable),
        "applicable": overall["Pass"],
        "overall": {v: overall[v] for v in verdicts},
        "conditions": {
            name: {v: counts[v] for v in verdicts + ("Unknown",) if counts[v] or v != "Unknown"}
            for name, counts in sorted(per_condition.items())
        },
    }


def report_from_cache(cache: ResultCache) -> dict:
    entries = sorted(cache.entries(), key=lambda e: e["label"])
    h = hashlib.sha256()
    for e in entries:
        h.update(f"{e['label']}\t{e['curve']}\t{int(e['geom_end_alg_is_Z'])}\n".encode())
    return report(entries, h.hexdigest())


# --------------------------------------------------------------------------
# Optional download
# --------------------------------------------------------------------------

API_URL = "https://www.lmfdb.org/api/g2c_curves/"


def fetch(out_path, limit: int | None = None, page_size: int = 1000, timeout: float = 30.0) -> int:
    """Download curve records through the public JSON API into a JSON-lines file.

    Network access is required; callers opt in explicitly (``--fetch``).
    """
    written = 0
    offset = 0
    with open(out_path, "w") as out:
        while limit is None or written < limit:
            query = urllib.parse.urlencode(
                {
                    "_format": "json",
                    "_fields": "label,eqn,geom_end_alg,bad_primes",
                    "_offset": offset,
                    "_limit": page_size,
                }
            )
            try:
                with urllib.request.urlopen(f"{API_URL}?{query}", timeout=timeout) as resp:
                    payload = json.load(resp)
            except OSError as exc:
                raise IngestIOError(f"download failed: {exc}") from exc
            rows = payload.get("data", [])
            if not rows:
                break
            for row in rows:
                out.write(json.dumps(row) + "\n")
                written += 1
                if limit is not None and written >= limit:
                    break
            offset += len(rows)
    return written
