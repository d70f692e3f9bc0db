"""Write CSV and JSON reports for the packaged twist families."""

import argparse
from pathlib import Path

from tkt.fixtures import clasp_braid_family, clasp_family, coherent_pair_family, cable_family
from tkt.stablecli import emit, family_report

JOBS = {
    "clasp": lambda: family_report(clasp_family(), 10, "both", clasp_braid_family()),
    "coherent_pair": lambda: family_report(coherent_pair_family(), 8),
    "cable3": lambda: family_report(cable_family(3), 4),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, job in JOBS.items():
        rep = job()
        emit(rep, "csv", str(out / f"{name}.csv"))
        emit(rep, "json", str(out / f"{name}.json"))
        print(name, {k: v.get("value", v) for k, v in rep.verdicts.items() if isinstance(v, dict)})


if __name__ == "__main__":
    main()
