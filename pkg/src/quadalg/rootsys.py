"""Root systems from Cartan matrices, coroot lattices, the canonical
Weyl-invariant form, Dynkin-diagram foldings, and Rost multipliers.

Coroots live in the coroot lattice itself: simple coroots are the
standard basis of Z^rank and the canonical form is the only metric.
Bourbaki numbering throughout; root lengths are normalized so long roots
have (a,a) = 2, which makes the canonical form take the value 1 on short
coroots (Gram = Cartan/2 in the simply-laced case).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .exactmat import Matrix, freeze, mat_mul, mat_vec, rank as mat_rank, transpose


class FoldingError(ValueError):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


_SERIES_RANKS = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(3, 9),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}


def _edges(series: str, n: int) -> list[tuple[int, int]]:
    path = [(i, i + 1) for i in range(n - 1)]
    if series in ("A", "B", "C", "F", "G"):
        return path
    if series == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if series == "E":
        # Bourbaki: 1-3-4-5-6(-7(-8)), 2 attached to 4
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            chain.append((5, 6))
        if n == 8:
            chain.append((6, 7))
        return chain
    raise ValueError(series)


def _root_norms(series: str, n: int) -> list[Fraction]:
    two = Fraction(2)
    if series in ("A", "D", "E"):
        return [two] * n
    if series == "B":  # last root short
        return [two] * (n - 1) + [Fraction(1)]
    if series == "C":  # last root long
        return [Fraction(1)] * (n - 1) + [two]
    if series == "F":  # 1,2 long; 3,4 short
        return [two, two, Fraction(1), Fraction(1)]
    if series == "G":  # Bourbaki: alpha1 short
        return [Fraction(2, 3), two]
    raise ValueError(series)


@dataclass(frozen=True)
class RootDatum:
    """Simple root data: Cartan matrix A[i][j] = 2(a_i,a_j)/(a_i,a_i),
    root norms (a_i,a_i), simple coroots = standard basis of Z^rank."""

    label: str
    series: str
    rank: int
    cartan: Matrix
    root_norms: tuple[Fraction, ...]

    def simple_reflection(self, i: int) -> Matrix:
        """Action of s_i on coroot coordinates: e_j -> e_j - A[j][i] e_i."""
        n = self.rank
        out = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for j in range(n):
            out[i][j] -= Fraction(self.cartan[j][i])
        return freeze(out)

    def all_coroots(self) -> list[tuple[Fraction, ...]]:
        """Closure of the simple coroots under the Weyl generators."""
        gens = [self.simple_reflection(i) for i in range(self.rank)]
        seen = {
            tuple(Fraction(int(r == i)) for r in range(self.rank))
            for i in range(self.rank)
        }
        frontier = list(seen)
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = mat_vec(g, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(seen)


def build_root_datum(type_str: str, rank: int | None = None) -> RootDatum:
    """Construct standard data for Xn, e.g. build_root_datum("E6")."""
    if rank is None:
        m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", type_str.strip())
        if not m:
            raise ValueError(f"bad root-system type {type_str!r}")
        series, rank = m.group(1).upper(), int(m.group(2))
    else:
        series = type_str.strip().upper()
    if series not in _SERIES_RANKS or rank not in _SERIES_RANKS[series]:
        raise ValueError(f"unsupported type {series}{rank}")
    norms = _root_norms(series, rank)
    pair = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        pair[i][i] = norms[i]
    for i, j in _edges(series, rank):
        # adjacent simple roots meet at 120/135/150 degrees; in every case
        # the inner product is -max of the two root norms over 2
        pair[i][j] = pair[j][i] = -max(norms[i], norms[j]) / 2
    cartan = freeze(
        [[2 * pair[i][j] / norms[i] for j in range(rank)] for i in range(rank)]
    )
    if any(x != int(x) for row in cartan for x in row):
        raise AssertionError("non-integral Cartan matrix")
    cartan = freeze([[int(x) for x in row] for row in cartan])
    return RootDatum(f"{series}{rank}", series, rank, cartan, tuple(norms))


@dataclass(frozen=True)
class CanonicalForm:
    """The minimal Weyl-invariant positive-definite integer-valued form on
    the coroot lattice, normalized to 1 on short coroots."""

    gram: Matrix

    def value(self, v) -> Fraction:
        return sum(
            Fraction(v[i]) * self.gram[i][j] * Fraction(v[j])
            for i in range(len(v))
            for j in range(len(v))
        )

    def bilinear(self, v, w) -> Fraction:
        return sum(
            Fraction(v[i]) * self.gram[i][j] * Fraction(w[j])
            for i in range(len(v))
            for j in range(len(w))
        )


def canonical_form(rd: RootDatum) -> CanonicalForm:
    """Gram G[i][j] = A[i][j]/(a_j,a_j); equals Cartan/2 when simply laced.
    Weyl invariance is checked against all simple reflections."""
    n = rd.rank
    gram = freeze(
        [
            [Fraction(rd.cartan[i][j]) / rd.root_norms[j] for j in range(n)]
            for i in range(n)
        ]
    )
    cf = CanonicalForm(gram)
    for i in range(n):
        s = rd.simple_reflection(i)
        if mat_mul(transpose(s), mat_mul(gram, s)) != gram:
            raise AssertionError(f"canonical form not invariant under s_{i}")
    return cf


def coroot_values(rd: RootDatum) -> dict[tuple, Fraction]:
    cf = canonical_form(rd)
    return {v: cf.value(v) for v in rd.all_coroots()}


# --------------------------------------------------------------------------
# diagram automorphisms and folding


def diagram_automorphism(rd: RootDatum, name: str = "") -> tuple[int, ...]:
    """A Dynkin-diagram automorphism as a permutation of simple-root
    indices.  Defaults: the reversal for A_n, the swap for D_n, the unique
    nontrivial one for E6; name="triality" gives the 3-cycle on D4."""
    n = rd.rank
    if rd.series == "A":
        perm = tuple(n - 1 - i for i in range(n))
    elif rd.series == "D" and name == "triality":
        if n != 4:
            raise ValueError("triality needs D4")
        perm = (2, 1, 3, 0)  # Bourbaki nodes 1 -> 3 -> 4 -> 1, node 2 fixed
    elif rd.series == "D":
        perm = tuple(range(n - 2)) + (n - 1, n - 2)
    elif rd.label == "E6":
        perm = (5, 1, 4, 3, 2, 0)  # 1<->6, 3<->5
    else:
        raise ValueError(f"no standard diagram automorphism for {rd.label}")
    _check_automorphism(rd, perm)
    return perm


def _check_automorphism(rd: RootDatum, perm) -> None:
    n = rd.rank
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the simple roots")
    for i in range(n):
        for j in range(n):
            if rd.cartan[perm[i]][perm[j]] != rd.cartan[i][j]:
                raise ValueError("permutation is not a diagram automorphism")


@dataclass(frozen=True)
class LatticeEmbedding:
    """An integer matrix from the source coroot lattice into the target's;
    columns are the images of the source's simple coroots."""

    matrix: Matrix

    def __post_init__(self):
        m = freeze([[int(x) for x in row] for row in self.matrix])
        object.__setattr__(self, "matrix", m)
        if mat_rank(m) != len(m[0]):
            raise ValueError("embedding matrix is not injective")

    @property
    def source_rank(self) -> int:
        return len(self.matrix[0])

    @property
    def target_rank(self) -> int:
        return len(self.matrix)

    def image(self, v) -> tuple:
        return mat_vec(self.matrix, v)


@dataclass(frozen=True)
class FoldResult:
    folded: RootDatum
    orbits: tuple[tuple[int, ...], ...]  # per folded simple root, Bourbaki order
    embedding: LatticeEmbedding

    @property
    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)


def fold(rd: RootDatum, perm: tuple[int, ...] | None = None, name: str = "") -> FoldResult:
    """Fold along a diagram automorphism: the fixed coroot sublattice has
    basis the orbit sums, which form the simple coroots of the folded
    system.  Orbits containing adjacent vertices (the A_{2l} case) are
    rejected: that folding produces the non-reduced system BC_l."""
    if perm is None:
        perm = diagram_automorphism(rd, name)
    else:
        _check_automorphism(rd, perm)
    n = rd.rank
    orbits = []
    seen = set()
    for i in range(n):
        if i in seen:
            continue
        orbit = [i]
        j = perm[i]
        while j != i:
            orbit.append(j)
            j = perm[j]
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    for orbit in orbits:
        for i, j in itertools.combinations(orbit, 2):
            if rd.cartan[i][j] != 0:
                raise FoldingError(
                    "nonreduced-BC",
                    f"orbit {tuple(k + 1 for k in orbit)} contains adjacent "
                    "vertices; this folding yields the non-reduced system "
                    f"BC_{len(orbits)} and is rejected",
                )
    if len(orbits) == n:
        raise FoldingError("trivial", "automorphism has no nontrivial orbit")
    cf = canonical_form(rd)
    sums = [
        tuple(Fraction(int(i in orbit)) for i in range(n)) for orbit in orbits
    ]
    # Cartan matrix of the folded coroots as a root system in their own
    # right (the dual system of the folded type).
    m = len(orbits)
    dual_cartan = [
        [
            2 * cf.bilinear(sums[i], sums[j]) / cf.bilinear(sums[i], sums[i])
            for j in range(m)
        ]
        for i in range(m)
    ]
    if any(x != int(x) for row in dual_cartan for x in row):
        raise AssertionError("folded pairing is not a Cartan matrix")
    dual_cartan = [[int(x) for x in row] for row in dual_cartan]
    # B2 and C2 are the same system; folding A-series is conventionally
    # written C_{l+1}, folding D-series B_{n-1}
    prefer = {"A": "C", "D": "B"}.get(rd.series, "")
    label, order = _identify_from_dual(dual_cartan, prefer)
    folded = build_root_datum(label)
    ordered = [orbits[i] for i in order]
    emb = LatticeEmbedding(
        freeze(
            [[int(i in orb) for orb in ordered] for i in range(n)]
        )
    )
    return FoldResult(folded, tuple(ordered), emb)


def _identify_from_dual(dual_cartan, prefer: str = "") -> tuple[str, list[int]]:
    """Match the Cartan matrix of the folded coroot system against the
    catalog of dual Cartans: Cartan(dual of X) is the transpose of
    Cartan(X), so a match at X identifies the folded type as X itself.
    The returned order maps Bourbaki numbering to input positions."""
    m = len(dual_cartan)
    matches = []
    for series, ranks in _SERIES_RANKS.items():
        if m not in ranks:
            continue
        rd = build_root_datum(series, m)
        perm = _cartan_match(dual_cartan, transpose(rd.cartan))
        if perm is not None:
            matches.append((rd.label, perm))
    for label, perm in matches:
        if label.startswith(prefer) and prefer:
            return label, perm
    if matches:
        return matches[0]
    raise AssertionError("folded system matches no catalogued type")


def _cartan_match(got, target) -> list[int] | None:
    """Find sigma with got[sigma[i]][sigma[j]] == target[i][j]."""
    m = len(got)
    for sigma in itertools.permutations(range(m)):
        if all(
            got[sigma[i]][sigma[j]] == target[i][j]
            for i in range(m)
            for j in range(m)
        ):
            return list(sigma)
    return None


# --------------------------------------------------------------------------
# Rost multipliers


def rost_multiplier(
    emb: LatticeEmbedding, source: RootDatum, target: RootDatum
) -> int:
    """The positive integer n with q_target(emb(x)) = n * q_source(x); per
    the short-coroot normalization it equals the value of q_target on the
    image of a short coroot of the source.  Raises if the pullback is not
    proportional to q_source."""
    if emb.source_rank != source.rank or emb.target_rank != target.rank:
        raise ValueError("embedding shape does not match the root data")
    gs = canonical_form(source).gram
    gt = canonical_form(target).gram
    pulled = mat_mul(transpose(emb.matrix), mat_mul(gt, emb.matrix))
    ratio = None
    for i in range(source.rank):
        for j in range(source.rank):
            if gs[i][j] == 0:
                if pulled[i][j] != 0:
                    raise ValueError("pullback form is not coroot-compatible")
                continue
            r = Fraction(pulled[i][j]) / gs[i][j]
            if ratio is None:
                ratio = r
            elif r != ratio:
                raise ValueError("pullback form is not coroot-compatible")
    if ratio is None or ratio <= 0 or ratio != int(ratio):
        raise ValueError("pullback multiplier is not a positive integer")
    return int(ratio)


def sl_block_diagonal_embedding(n: int) -> LatticeEmbedding:
    """SL_n -> SL_2n by x -> diag(x, x) on coroot lattices (A_{n-1} into
    A_{2n-1}): the i-th simple coroot maps to e_i + e_{i+n}."""
    rows = [[0] * (n - 1) for _ in range(2 * n - 1)]
    for i in range(n - 1):
        rows[i][i] = 1
        rows[i + n][i] = 1
    return LatticeEmbedding(freeze(rows))


def sl_corner_embedding(n: int) -> LatticeEmbedding:
    """SL_n -> SL_2n by x -> diag(x, 1): e_i -> e_i."""
    rows = [[0] * (n - 1) for _ in range(2 * n - 1)]
    for i in range(n - 1):
        rows[i][i] = 1
    return LatticeEmbedding(freeze(rows))
