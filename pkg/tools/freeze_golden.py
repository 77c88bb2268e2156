"""Regenerate the golden census data under src/sipoly/data/.

The expansion census is only written if the oracle census agrees with it.
"""

import json
import sys
from pathlib import Path

from sipoly.census import (
    all_polyhedra_tutte,
    compare_censuses,
    golden_manifest,
    polyhedra_counts,
    si_census_expand,
    si_census_oracle,
)

MAX_V = 10
DATA = Path(__file__).resolve().parents[1] / "src" / "sipoly" / "data"


def main() -> int:
    census = si_census_expand(MAX_V)
    report = compare_censuses(census, si_census_oracle(MAX_V))
    if not report["equal"]:
        print("expansion and oracle censuses differ; not freezing", file=sys.stderr)
        return 1
    manifest = golden_manifest(census, oracle_checked=True)
    manifest["polyhedra_counts"] = {str(v): n for v, n in polyhedra_counts(all_polyhedra_tutte(8, 18)).items()}
    manifest["polyhedra_bounds"] = {"max_v": 8, "max_e": 18}
    (DATA / f"census_v{MAX_V}.json").write_text(census.dumps() + "\n")
    (DATA / f"census_v{MAX_V}.manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")
    print(json.dumps(manifest, indent=1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
