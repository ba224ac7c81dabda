import json
import os
from pathlib import Path

import pytest

from asmt.errors import EmptyIngest, IngestIOError
from asmt.ffpoly import IntPoly
from asmt.lmfdb import (
    ResultCache,
    cache_key,
    ingest,
    parse_eqn,
    report,
    report_from_cache,
    run_batch,
    snapshot_hash,
)

DATA = Path(__file__).parent / "data"
FIXTURE = DATA / "lmfdb_fixture.jsonl"
EXPECTED = DATA / "lmfdb_fixture_expected.json"
EXPORT_ENV = "ASMT_LMFDB_EXPORT"


def _write(tmp_path, lines, name="in.jsonl"):
    p = tmp_path / name
    p.write_text("\n".join(json.dumps(x) if not isinstance(x, str) else x for x in lines) + "\n")
    return p


GOOD = {"label": "t.1", "eqn": [[0, 0, 0, 0, 0, 1], [1]], "geom_end_alg": "Q"}


class TestIngest:
    def test_equation_encoding(self):
        m = parse_eqn([[0, 0, 0, 0, 0, 1], [1]])
        assert m.f == IntPoly((0, 0, 0, 0, 0, 1)) and m.h == IntPoly((1,))
        assert parse_eqn("[[1,-1,0,0,0,1],[]]").f == IntPoly((1, -1, 0, 0, 0, 1))

    def test_bad_lines_are_collected(self, tmp_path):
        lines = [
            GOOD,
            {"label": "t.2", "eqn": [[1, 0, 0, 0, 0, 1], []]},
            "{not json",
            {"label": "t.3", "eqn": [[0, 0, 1, 0, 0, 1], []], "geom_end_alg": "Q"},
            dict(GOOD),
        ]
        res = ingest(_write(tmp_path, lines))
        assert [r.label for r in res.records] == ["t.1"]
        assert [e["line"] for e in res.errors] == [2, 3, 4, 5]
        assert "geom_end_alg" in res.errors[0]["error"]
        assert "duplicate" in res.errors[3]["error"]

    def test_errors(self, tmp_path):
        with pytest.raises(IngestIOError):
            ingest(tmp_path / "missing.jsonl")
        with pytest.raises(EmptyIngest):
            ingest(_write(tmp_path, ["{}"]))

    def test_fixture_parses_cleanly(self):
        res = ingest(FIXTURE)
        assert len(res.records) == 100 and res.errors == []

    def test_snapshot_ignores_order(self):
        recs = ingest(FIXTURE).records
        assert snapshot_hash(recs) == snapshot_hash(list(reversed(recs)))


class TestCache:
    def test_round_trip(self, tmp_path):
        recs = ingest(FIXTURE).records[:12]
        plain = report(run_batch(recs, None, prime_bound=60))
        cache = ResultCache(tmp_path / "c.jsonl")
        cached = report(run_batch(recs, cache, prime_bound=60))
        assert cached == plain
        reread = ResultCache(tmp_path / "c.jsonl")
        assert len(reread) == 12
        again = run_batch(recs, reread, prime_bound=60)
        assert report(again) == plain
        assert (tmp_path / "c.jsonl").read_text().count("\n") == 12  # nothing recomputed

    def test_version_bump_invalidates(self, tmp_path):
        recs = ingest(FIXTURE).records[:3]
        run_batch(recs, ResultCache(tmp_path / "c.jsonl"), prime_bound=30)
        assert len(ResultCache(tmp_path / "c.jsonl", version=2)) == 0

    def test_torn_last_line(self, tmp_path):
        recs = ingest(FIXTURE).records[:3]
        path = tmp_path / "c.jsonl"
        run_batch(recs, ResultCache(path), prime_bound=30)
        with path.open("a") as fh:
            fh.write('{"key": "half')
        assert len(ResultCache(path)) == 3

    def test_key_includes_bound(self):
        m = parse_eqn([[1, -1, 0, 0, 0, 1], []])
        assert cache_key(m, 10) != cache_key(m, 20)

    def test_parallel_matches_serial(self):
        recs = ingest(FIXTURE).records[:6]
        assert run_batch(recs, None, 40, jobs=2) == run_batch(recs, None, 40, jobs=1)


class TestReports:
    def test_empty(self):
        rep = report([])
        assert rep["records"] == rep["total_end_Z"] == rep["applicable"] == 0

    def test_fixture_regression(self, tmp_path):
        expected = json.loads(EXPECTED.read_text())
        res = ingest(FIXTURE)
        results = run_batch(res.records, ResultCache(tmp_path / "c.jsonl"))
        rep = report(results, snapshot_hash(res.records))
        assert rep == expected["report"]
        assert {r["label"]: r["report"]["overall"] for r in results} == expected["overall_by_label"]
        assert report_from_cache(ResultCache(tmp_path / "c.jsonl")) == expected["report"]


@pytest.mark.skipif(not os.environ.get(EXPORT_ENV), reason=f"set {EXPORT_ENV} to a full curve export")
def test_full_export_counts():
    res = ingest(os.environ[EXPORT_ENV])
    jobs = os.cpu_count() or 1
    rep = report(run_batch(res.records, None, jobs=jobs), snapshot_hash(res.records))
    assert rep["total_end_Z"] == 63107
    assert rep["applicable"] == 11384
