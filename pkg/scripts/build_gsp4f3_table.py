"""Regenerate src/asmt/data/gsp4f3_subgroups.json from the explicit constructions."""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from asmt.gsp4f3 import build_subgroup_table  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "asmt" / "data" / "gsp4f3_subgroups.json"

if __name__ == "__main__":
    table = build_subgroup_table()
    OUT.write_text(json.dumps(table, indent=1) + "\n")
    for e in table["subgroups"]:
        print(f"{e['name']}: order {e['order']}, {len(e['charpoly_multiset'])} signature pairs")
