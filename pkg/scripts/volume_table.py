"""Print equal-argument values for B_r and C_r (r <= 3, k <= 4) from the volume formula."""

import argparse
import time

from rootzeta.identities import equal_arg_mzv, volume_formula


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()
    print(f"{'family':>6} {'r':>2} {'k':>2}  value  (seconds)")
    for fam in ("C", "B"):
        for r in (1, 2, 3):
            for k in range(1, args.max_k + 1):
                t = time.perf_counter()
                v = volume_formula(fam, r, k)
                dt = time.perf_counter() - t
                note = ""
                if fam == "C":
                    note = "  recursion agrees" if v == equal_arg_mzv(r, k) else "  RECURSION DISAGREES"
                print(f"{fam:>6} {r:>2} {k:>2}  {v.to_text()}  ({dt:.2f}s){note}")


if __name__ == "__main__":
    main()
