"""Write the Taylor coefficients of F for one root system to a golden file."""

import argparse

from rootzeta.genfunc import get_generating_function
from rootzeta.roots import build_root_datum


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("B", "C"), default="C")
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--degree", type=int, default=10)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    text = get_generating_function(build_root_datum(args.family, args.rank)).series(args.degree).dump()
    if args.out == "-":
        print(text, end="")
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
