"""Root data of types B_r and C_r and the bases used by the generating function.

All vectors live in the orthonormal coordinates e_1..e_r.  The simple coroots
are e_i - e_{i+1} (i < r) together with e_r (type C) or 2 e_r (type B), so the
long positive coroots of C_r are e_1..e_r and the short positive coroots of
B_r are 2 e_1..2 e_r.  Pairings against dual-basis vectors only need the
expansion of a vector in a basis of coroots, so no inner product is stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial, floor

from .linalg import det, in_span, inverse, smith_normal_form, solve

__all__ = [
    "RootDatum",
    "BasisV",
    "build_root_datum",
    "enumerate_bases",
    "filter_bases_for_A",
    "fractional_shift",
    "frac",
]

Vec = tuple[Fraction, ...]


def _vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def frac(x: Fraction) -> Fraction:
    return x - floor(x)


@dataclass(frozen=True)
class BasisV:
    """A basis V of the space made of r positive roots (given by index)."""

    roots: tuple[int, ...]
    coroots: tuple[Vec, ...]
    dual_basis: tuple[Vec, ...]
    lattice_index: int
    coset_reps_q: tuple[Vec, ...]

    def coords(self, v) -> list[Fraction]:
        """Expansion coefficients of v in the coroot basis, i.e. <v, mu_beta> per beta."""
        return [sum((m * Fraction(x) for m, x in zip(mu, v)), Fraction(0)) for mu in self.dual_basis]

    def pairing(self, v, beta: int) -> Fraction:
        """<v, mu_beta> for the root index beta in this basis."""
        mu = self.dual_basis[self.roots.index(beta)]
        return sum((m * Fraction(x) for m, x in zip(mu, v)), Fraction(0))


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int
    positive_coroots: tuple[Vec, ...]
    long_mask: tuple[bool, ...]
    simple_coroots: tuple[Vec, ...]
    coset_reps: tuple[Vec, ...]
    phi: Vec = field(default=())

    @property
    def weyl_order(self) -> int:
        return 2**self.rank * factorial(self.rank)

    @property
    def coroot_lattice_basis(self) -> tuple[Vec, ...]:
        return self.simple_coroots

    @cached_property
    def _simple_inv(self):
        cols = [[self.simple_coroots[j][i] for j in range(self.rank)] for i in range(self.rank)]
        return inverse(cols)

    def simple_coords(self, v) -> tuple[Fraction, ...]:
        """Coordinates of v in the simple-coroot basis of Q^vee."""
        return tuple(sum((row[k] * Fraction(v[k]) for k in range(self.rank)), Fraction(0)) for row in self._simple_inv)

    def delta_star(self, kind: str | None = None) -> tuple[int, ...]:
        """Root indices of the root set used for zeta values, ordered by argument slot.

        Slot i (0-based) of zeta_r(s_1..s_r) or zeta_r^sharp carries the coroot
        proportional to e_{r-i}, so slot 0 is the innermost (smallest) summation.
        ``kind`` is 'long' (type C default) or 'short' (type B default).
        """
        if kind is None:
            kind = "long" if self.family == "C" else "short"
        want_long = kind == "long"
        picks = [i for i, lm in enumerate(self.long_mask) if lm == want_long]
        if len(picks) != self.rank or any(sum(1 for x in self.positive_coroots[i] if x) != 1 for i in picks):
            raise ValueError(f"{kind} roots of {self.family}_{self.rank} are not the coordinate root set")

        def axis(i):
            return next(k for k, x in enumerate(self.positive_coroots[i]) if x)

        return tuple(sorted(picks, key=lambda i: -axis(i)))

    def complement(self, delta_star) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.positive_coroots)) if i not in set(delta_star))

    @cached_property
    def bases(self) -> tuple[BasisV, ...]:
        return tuple(enumerate_bases(self))


def build_root_datum(family: str, rank: int) -> RootDatum:
    family = family.upper()
    if family not in ("B", "C"):
        raise ValueError(f"unsupported family {family!r}; only B and C are implemented")
    if not 1 <= rank <= 4:
        raise ValueError(f"rank must be in 1..4, got {rank}")
    r = rank
    e = [tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)]

    def lin(*pairs):
        return tuple(sum((c * e[i][k] for c, i in pairs), Fraction(0)) for k in range(r))

    coroots: list[Vec] = []
    long_mask: list[bool] = []
    # coordinate coroots: e_i for C (long roots 2e_i), 2e_i for B (short roots e_i)
    for i in range(r):
        coroots.append(lin((1 if family == "C" else 2, i)))
        long_mask.append(family == "C")
    for i in range(r):
        for j in range(i + 1, r):
            coroots.append(lin((1, i), (-1, j)))
            long_mask.append(family == "B")
            coroots.append(lin((1, i), (1, j)))
            long_mask.append(family == "B")
    simple = [lin((1, i), (-1, i + 1)) for i in range(r - 1)]
    simple.append(lin((1 if family == "C" else 2, r - 1)))
    if family == "C":
        reps = [_vec(*[0] * r), _vec(*[Fraction(1, 2)] * r)]
    else:
        reps = [_vec(*[0] * r), e[0]]
    datum = RootDatum(family, r, tuple(coroots), tuple(long_mask), tuple(simple), tuple(reps))
    return _with_generic_phi(datum)


def _with_generic_phi(datum: RootDatum) -> RootDatum:
    r = datum.rank
    phi = [Fraction(1, 2**i) for i in range(r)]
    eps = Fraction(1, 97)
    for _ in range(50):
        if all(p != 0 for V in datum.bases for p in V.coords(phi)):
            object.__setattr__(datum, "phi", tuple(phi))
            return datum
        phi = [p + eps ** (i + 1) for i, p in enumerate(phi)]
    raise RuntimeError("could not find a generic direction phi")


def _coset_reps(datum: RootDatum, coroots: list[Vec]) -> tuple[int, list[Vec]]:
    # columns: V-coroots in simple-coroot coordinates (integral)
    cols = [datum.simple_coords(c) for c in coroots]
    m = [[int(cols[j][i]) for j in range(len(cols))] for i in range(datum.rank)]
    u, d, _ = smith_normal_form(m)
    diag = [d[i][i] for i in range(datum.rank)]
    uinv = [[int(x) for x in row] for row in inverse(u)]
    reps = []
    for x in itertools.product(*(range(k) for k in diag)):
        z = [sum(uinv[i][k] * x[k] for k in range(datum.rank)) for i in range(datum.rank)]
        q = tuple(
            sum((z[i] * datum.simple_coroots[i][k] for i in range(datum.rank)), Fraction(0)) for k in range(datum.rank)
        )
        reps.append(q)
    index = 1
    for k in diag:
        index *= k
    return index, reps


def enumerate_bases(datum: RootDatum) -> list[BasisV]:
    """Every r-element linearly independent set of positive roots, with lattice data."""
    out = []
    n = len(datum.positive_coroots)
    for combo in itertools.combinations(range(n), datum.rank):
        cs = [datum.positive_coroots[i] for i in combo]
        cols = [[cs[j][i] for j in range(datum.rank)] for i in range(datum.rank)]
        if det(cols) == 0:
            continue
        inv = inverse(cols)  # row k of the inverse is the dual vector mu for coroot k
        index, reps = _coset_reps(datum, cs)
        out.append(BasisV(combo, tuple(cs), tuple(tuple(row) for row in inv), index, tuple(reps)))
    return out


def filter_bases_for_A(datum: RootDatum, bases, A) -> list[BasisV]:
    """Keep V with nu_{j+1} outside the span of V meet {nu_1..nu_j} for every j."""
    A = list(A)
    kept = []
    for V in bases:
        members = set(V.roots)
        ok = True
        for j, nu in enumerate(A):
            if nu in members:
                continue
            span = [datum.positive_coroots[a] for a in A[:j] if a in members]
            if in_span(span, datum.positive_coroots[nu]):
                ok = False
                break
        if ok:
            kept.append(V)
    return kept


def fractional_shift(datum: RootDatum, V: BasisV, beta: int, y, q, phi=None) -> Fraction:
    """The branch-resolved fractional part {y + q}_{V, beta}."""
    phi = datum.phi if phi is None else phi
    s = V.pairing(phi, beta)
    if s == 0:
        raise ValueError(f"direction {phi} is not generic for basis {V.roots}")
    x = V.pairing([Fraction(a) + Fraction(b) for a, b in zip(y, q)], beta)
    return frac(x) if s > 0 else 1 - frac(-x)
