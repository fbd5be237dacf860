"""For each printed pi-power rational, the q_max and digits rational reconstruction needs.

A fraction p/q is recoverable from a ball of radius e when q <= q_max and
roughly 1/(2 q^2) > e, so the requirement is q_max >= q and about
log10(2 q^2) + log10|p/q|^-1 relative digits.
"""

import math
from fractions import Fraction

PRINTED = {
    "zeta_2(4,4)/pi^8": Fraction(1, 113400),
    "zeta#_2(2,2)/pi^4": Fraction(1, 320),
    "zeta#_2(4,4)/pi^8": Fraction(23, 14515200),
    "zeta#_2(6,6)/pi^12": Fraction(1369, 871782912000),
    "zeta#_3(2,2,2)/pi^6": Fraction(1, 40320),
    "zeta#_3(4,4,4)/pi^12": Fraction(23, 697426329600),
    "zeta#_3(6,6,6)/pi^18": Fraction(1997, 17030314057236480000),
    "P_C2(4,4)": Fraction(1, 6300),
}


def main():
    print(f"{'value':<24}{'denominator':>24}{'fits 1e12':>11}{'rel. digits':>13}")
    for name, q in PRINTED.items():
        rel = math.log10(2 * q.denominator**2) - math.log10(abs(q))
        print(f"{name:<24}{q.denominator:>24}{'yes' if q.denominator <= 10**12 else 'NO':>11}{rel:>13.1f}")


if __name__ == "__main__":
    main()
