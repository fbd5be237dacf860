"""Run every verification suite and write one JSON report per suite into a directory."""

import argparse
import pathlib
import sys

from rootzeta.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="reports")
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for suite in ("paper-values", "relations", "oracles"):
        code = cli_main(["verify", suite, "--format", "json", "--out", str(out / f"{suite}.json")])
        print(f"{suite}: exit {code}")
        worst = max(worst, code)
    sys.exit(worst)


if __name__ == "__main__":
    main()
