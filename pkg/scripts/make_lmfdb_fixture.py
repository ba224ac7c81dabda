"""Write the synthetic 100-curve fixture and freeze its pipeline results.

The curves are small random integral models (seeded), not database rows; the
geometric endomorphism field is set to "Q" for all of them and is not computed.
Outputs: tests/data/lmfdb_fixture.jsonl and tests/data/lmfdb_fixture_expected.json.
"""

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from asmt.curve import GenusTwoModel  # noqa: E402
from asmt.ffpoly import IntPoly  # noqa: E402
from asmt.lmfdb import ingest, report, run_batch, snapshot_hash  # noqa: E402

SEED = 20240611
N = 100
DATA = ROOT / "tests" / "data"


def random_model(rng):
    while True:
        deg = rng.choice((5, 6))
        f = [rng.randint(-3, 3) for _ in range(deg)] + [rng.choice((-2, -1, 1, 2))]
        h = [rng.randint(0, 1) for _ in range(rng.randint(0, 4))]
        model = GenusTwoModel(IntPoly(f), IntPoly(h))
        if model.is_genus_two():
            return model


def main():
    rng = random.Random(SEED)
    seen = set()
    lines = []
    while len(lines) < N:
        m = random_model(rng)
        if str(m) in seen:
            continue
        seen.add(str(m))
        lines.append(
            {
                "label": f"synthetic.{len(lines) + 1:03d}",
                "eqn": [list(m.f.coeffs), list(m.h.coeffs)],
                "geom_end_alg": "Q",
            }
        )
    DATA.mkdir(parents=True, exist_ok=True)
    path = DATA / "lmfdb_fixture.jsonl"
    path.write_text("".join(json.dumps(x) + "\n" for x in lines))
    result = ingest(path)
    results = run_batch(result.records)
    expected = {
        "report": report(results, snapshot_hash(result.records)),
        "overall_by_label": {r["label"]: r["report"]["overall"] for r in results},
    }
    (DATA / "lmfdb_fixture_expected.json").write_text(json.dumps(expected, indent=1) + "\n")
    print(json.dumps(expected["report"], indent=1))


if __name__ == "__main__":
    main()
