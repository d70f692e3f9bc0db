"""Write the packaged fixture files under src/tkt/data from their definitions.

Usage: python3 scripts/build_fixtures.py [outdir]
"""

import json
import sys
from pathlib import Path

from tkt.braids import family_to_json
from tkt.fixtures import named_diagrams, named_families
from tkt.linkdiag import format_pd
from tkt.twistgen import region_to_json


def write(path: Path, text: str) -> None:
    path.write_text(text if text.endswith("\n") else text + "\n", newline="\n")
    print(path)


def main(outdir: str) -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, D in named_diagrams().items():
        write(out / f"{name}.pd", format_pd(D))
    for name, (F, B) in named_families().items():
        write(out / f"{name}_base.pd", format_pd(F.base))
        write(out / f"{name}_region.json", json.dumps(region_to_json(F.region)))
        write(out / f"{name}_braid.json", json.dumps(family_to_json(B)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parents[1] / "src/tkt/data"))
