"""The split Cayley algebra with the distinguished basis u1..u8, its norm,
involution, star product, similitudes, related triples and the special
cocycle matrices.

The basis is realized inside the Zorn vector-matrix algebra and pinned by
a calibration search (see ``calibration_search``).  The constraints are:
the anti-diagonal Gram matrix S8 for the bilinearized norm (n(x,x)=n(x)),
the involution table (conj u4 = u5, conj u5 = u4, conj u_i = -u_i else),
and genuine relatedness of the special triples z_j = m_j(a) d P.  Over Q
these cannot all hold: conj u4 = u5 forces trace(u4)^2 = n(u4+u5), so an
S8 value of 1 at the (4,5) pair would need trace(u4) = sqrt(2), and
relatedness of the z-triples pins the (3,6) pair the same way.  The
calibrated basis

    u1 = 2e1, u2 = 2f3, u3 = f2, u4 = h1, u5 = h2,
    u6 = -e2, u7 = -e3, u8 = -f1

therefore carries the Gram S8 *except* that n(u3,u6) = n(u4,u5) = 1/2;
every numeric value the source computations print (the descent tables,
T(j, z iota j) = 1) lives on the unaffected pairs and reproduces exactly.
The deviation is reported, never patched silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactmat import (
    Matrix,
    det,
    freeze,
    identity,
    mat_eq,
    mat_inv,
    mat_mul,
    mat_vec,
    transpose,
)
from .scalars import KScalar, QuadExtScalar, iota

DIM = 8

_F0, _F1 = Fraction(0), Fraction(1)


class CalibrationError(RuntimeError):
    """The constructed table violates one of its hard invariants."""


# --------------------------------------------------------------------------
# Zorn vector matrices: (a, v, w, b) for [[a, v], [w, b]], v, w in F^3


def _zorn_mul(x, y):
    a1, v1, w1, b1 = x[0], x[1:4], x[4:7], x[7]
    a2, v2, w2, b2 = y[0], y[1:4], y[4:7], y[7]
    dot = lambda p, q: sum(s * t for s, t in zip(p, q))
    cross = lambda p, q: (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )
    cv, cw = cross(w1, w2), cross(v1, v2)
    return (
        a1 * a2 + dot(v1, w2),
        *(a1 * v2[i] + b2 * v1[i] - cv[i] for i in range(3)),
        *(a2 * w1[i] + b1 * w2[i] + cw[i] for i in range(3)),
        b1 * b2 + dot(w1, v2),
    )


_CAL_SCALES = (
    Fraction(2),
    Fraction(-1),
    Fraction(2),
    Fraction(-1),
    Fraction(1),
    Fraction(-1),
)
_CAL_PERM = (0, 1, 2)

S8 = freeze(
    [[_F1 if i + j == DIM - 1 else _F0 for j in range(DIM)] for i in range(DIM)]
)


def _zorn_slot_products():
    """Sparse single-slot products: slot a x slot b -> [(slot, coeff)]."""
    table = {}
    for a in range(8):
        ea = tuple(_F1 if m == a else _F0 for m in range(8))
        for b in range(8):
            eb = tuple(_F1 if m == b else _F0 for m in range(8))
            z = _zorn_mul(ea, eb)
            table[a, b] = tuple((m, c) for m, c in enumerate(z) if c)
    return table


_SLOT_PRODUCTS = _zorn_slot_products()

# half-polarized Gram of the Zorn norm in slot coordinates
_SLOT_GRAM = {}
for _a in range(8):
    for _b in range(8):
        if {_a, _b} == {0, 7}:
            _SLOT_GRAM[_a, _b] = Fraction(1, 2)
        elif _b == _a + 3 and 1 <= _a <= 3 or _a == _b + 3 and 1 <= _b <= 3:
            _SLOT_GRAM[_a, _b] = Fraction(-1, 2)
        else:
            _SLOT_GRAM[_a, _b] = _F0
del _a, _b


def _candidate_slots(perm):
    """Zorn slot of each u-basis vector: e_i = slot 1+i, f_i = slot 4+i."""
    i1, i6, i7 = perm
    return (1 + i1, 4 + i7, 4 + i6, 0, 7, 1 + i6, 1 + i7, 4 + i1)


def _build_tables(scales, perm):
    c1, c8, c2, c7, c3, c6 = scales
    coeff = (c1, c2, c3, _F1, _F1, c6, c7, c8)
    slots = _candidate_slots(perm)
    slot_to_u = {s: i for i, s in enumerate(slots)}
    prod = [[None] * DIM for _ in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            coords = [_F0] * DIM
            for m, c in _SLOT_PRODUCTS[slots[i], slots[j]]:
                t = slot_to_u[m]
                coords[t] = coeff[i] * coeff[j] * c / coeff[t]
            prod[i][j] = tuple(coords)
    gram = freeze(
        [
            [coeff[i] * coeff[j] * _SLOT_GRAM[slots[i], slots[j]] for j in range(DIM)]
            for i in range(DIM)
        ]
    )
    return freeze(prod), gram


@dataclass(frozen=True)
class CayleyTable:
    """Structure constants, norm Gram (with n(x,x) = n(x)) and involution
    signs of the calibrated basis."""

    products: tuple  # products[i][j] = coords of u_{i+1} u_{j+1}
    gram: Matrix

    def gram_deviations(self) -> list[tuple[int, int, Fraction, Fraction]]:
        """(i, j, actual, S8-expected) for every differing entry, 1-based."""
        out = []
        for i in range(DIM):
            for j in range(i, DIM):
                if self.gram[i][j] != S8[i][j]:
                    out.append((i + 1, j + 1, self.gram[i][j], S8[i][j]))
        return out


@lru_cache(maxsize=1)
def build_cayley_table() -> CayleyTable:
    """Construct and validate the calibrated multiplication table."""
    prod, gram = _build_tables(_CAL_SCALES, _CAL_PERM)
    table = CayleyTable(prod, gram)
    _validate_table(table)
    return table


def _involution_table_holds(table: CayleyTable) -> bool:
    """conj(x) = trace(x) 1 - x must act as u4 <-> u5, u_i -> -u_i else."""
    one = _find_unit(table)
    if one is None:
        return False
    for i in range(DIM):
        t = 2 * sum(table.gram[i][j] * one[j] for j in range(DIM))
        got = tuple(t * one[j] - (_F1 if j == i else _F0) for j in range(DIM))
        if i == 3:
            want = tuple(_F1 if j == 4 else _F0 for j in range(DIM))
        elif i == 4:
            want = tuple(_F1 if j == 3 else _F0 for j in range(DIM))
        else:
            want = tuple(-_F1 if j == i else _F0 for j in range(DIM))
        if got != want:
            return False
    return True


def _validate_table(table: CayleyTable) -> None:
    if _find_unit(table) is None:
        raise CalibrationError("table has no unit element")
    if not _involution_table_holds(table):
        raise CalibrationError("involution table fails")
    # expected Gram: S8 away from the two provably irrational pairs
    for i, j, got, want in table.gram_deviations():
        if {i, j} not in ({3, 6}, {4, 5}) or got != Fraction(1, 2):
            raise CalibrationError(f"unexpected Gram entry at ({i},{j}): {got}")


def _find_unit(table: CayleyTable):
    # solve x u_j = u_j for all j; try the h-pair combination first
    cand = [_F0] * DIM
    cand[3] = cand[4] = _F1
    for j in range(DIM):
        ej = [_F1 if m == j else _F0 for m in range(DIM)]
        got = _mul_coords(table, tuple(cand), tuple(ej))
        if list(got) != ej:
            return None
    return tuple(cand)


def _mul_coords(table: CayleyTable, x, y):
    out = [0] * DIM
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            row = table.products[i][j]
            c = xi * yj
            for m, g in enumerate(row):
                if g:
                    out[m] = out[m] + c * g
    return tuple(_F0 + v for v in out)


# --------------------------------------------------------------------------
# octonions


class Octonion:
    """An element of the split Cayley algebra in the u1..u8 basis; the
    coordinates are Fractions or QuadExtScalar over one extension."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[KScalar]):
        if len(coords) != DIM:
            raise ValueError("octonions have 8 coordinates")
        object.__setattr__(
            self,
            "coords",
            tuple(c if isinstance(c, QuadExtScalar) else Fraction(c) for c in coords),
        )

    def __setattr__(self, *a):
        raise AttributeError("Octonion is immutable")

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Octonion":
        return Octonion([-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion(_mul_coords(build_cayley_table(), self.coords, other.coords))
        return Octonion([a * other for a in self.coords])

    def __rmul__(self, scalar):
        return Octonion([scalar * a for a in self.coords])

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coords)

    def conj(self) -> "Octonion":
        """Canonical involution: u4 <-> u5, the rest negated."""
        c = self.coords
        return Octonion([-c[0], -c[1], -c[2], c[4], c[3], -c[5], -c[6], -c[7]])

    def iota(self) -> "Octonion":
        """Entrywise Galois conjugation of the coordinates."""
        return Octonion([iota(c) for c in self.coords])

    def norm(self):
        g = build_cayley_table().gram
        c = self.coords
        return sum(g[i][j] * (c[i] * c[j]) for i in range(DIM) for j in range(DIM) if g[i][j])

    def norm_pairing(self, other: "Octonion"):
        """The bilinearization with n(x,x) = n(x)."""
        g = build_cayley_table().gram
        a, b = self.coords, other.coords
        return sum(g[i][j] * (a[i] * b[j]) for i in range(DIM) for j in range(DIM) if g[i][j])

    def trace(self):
        return self.norm_pairing(ONE) * 2

    def __repr__(self) -> str:
        return "oct(" + ", ".join(str(c) for c in self.coords) + ")"


def u(i: int) -> Octonion:
    """Basis element u_i, 1-indexed."""
    if not 1 <= i <= DIM:
        raise ValueError("basis index out of range")
    return Octonion([_F1 if j == i - 1 else _F0 for j in range(DIM)])


BASIS = tuple(u(i) for i in range(1, DIM + 1))
ONE = u(4) + u(5)


def star(x: Octonion, y: Octonion) -> Octonion:
    """The product x (star) y = conj(x) conj(y); not unital, not associative."""
    return x.conj() * y.conj()


# --------------------------------------------------------------------------
# similitudes


class Similitude:
    """An invertible map with n(t(c)) = mu(t) n(c); matrix acts on
    coordinate columns, rightmost factor acts first in compositions."""

    __slots__ = ("matrix", "mu")

    def __init__(self, matrix: Matrix):
        matrix = freeze(matrix)
        mu = _similitude_multiplier(matrix)
        if mu is None:
            raise ValueError("matrix is not a norm similitude")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "mu", mu)

    def __setattr__(self, *a):
        raise AttributeError("Similitude is immutable")

    def __call__(self, x: Octonion) -> Octonion:
        return Octonion(mat_vec(self.matrix, x.coords))

    def compose(self, other: "Similitude") -> "Similitude":
        return Similitude(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "Similitude":
        return Similitude(mat_inv(self.matrix))

    def det(self):
        return det(self.matrix)

    @property
    def is_proper(self) -> bool:
        return self.det() == self.mu**4

    def sigma_n(self) -> "Similitude":
        """The norm adjoint G^-1 t^T G; sigma_n(t) t = mu(t)."""
        g = build_cayley_table().gram
        return Similitude(mat_mul(mat_inv(g), mat_mul(transpose(self.matrix), g)))

    def iota_twisted(self) -> "Similitude":
        """The twisted Galois action on the group G: entrywise conjugation
        of sigma_n(t)^{-1}."""
        inv = mat_inv(self.sigma_n().matrix)
        return Similitude(freeze([[iota(x) for x in row] for row in inv]))

    def __eq__(self, other) -> bool:
        return isinstance(other, Similitude) and mat_eq(self.matrix, other.matrix)

    def __repr__(self) -> str:
        return f"similitude(mu={self.mu})"


def _similitude_multiplier(matrix: Matrix):
    g = build_cayley_table().gram
    lhs = mat_mul(transpose(matrix), mat_mul(g, matrix))
    mu = None
    for i in range(DIM):
        for j in range(DIM):
            if g[i][j]:
                r = lhs[i][j] / g[i][j] if isinstance(lhs[i][j], Fraction) else lhs[i][j] / g[i][j]
                if mu is None:
                    mu = r
                elif r != mu:
                    return None
            elif lhs[i][j]:
                return None
    if mu is None or not mu:
        return None
    return mu


def multiplier(t: Similitude):
    return t.mu


def sigma_n(t: Similitude) -> Similitude:
    return t.sigma_n()


@dataclass(frozen=True)
class SimilitudeTriple:
    t: tuple[Similitude, Similitude, Similitude]

    def __getitem__(self, i: int) -> Similitude:
        return self.t[i % 3]

    @property
    def multipliers(self):
        return tuple(s.mu for s in self.t)

    def componentwise(self, other: "SimilitudeTriple") -> "SimilitudeTriple":
        return SimilitudeTriple(
            tuple(a.compose(b) for a, b in zip(self.t, other.t))
        )

    def iota_twisted(self) -> "SimilitudeTriple":
        return SimilitudeTriple(tuple(s.iota_twisted() for s in self.t))


def is_related_triple(T: SimilitudeTriple) -> bool:
    """mu(t_i)^{-1} t_i(x star y) = t_{i+2}(x) star t_{i+1}(y) on all 64
    basis pairs, for all i mod 3."""
    for i in range(3):
        ti, ti1, ti2 = T[i], T[i + 1], T[i + 2]
        mu_inv = _scalar_inv(ti.mu)
        for x in BASIS:
            tx = ti2(x)
            for y in BASIS:
                lhs = mu_inv * ti(star(x, y))
                rhs = star(tx, ti1(y))
                if lhs != rhs:
                    return False
    return True


def _scalar_inv(s):
    if isinstance(s, QuadExtScalar):
        return s.inverse()
    return Fraction(1) / s


# --------------------------------------------------------------------------
# the special cocycles of the z-construction


def perm_P() -> Matrix:
    """The permutation (1 2)(3 6)(4 5)(7 8) on the basis."""
    images = {1: 2, 2: 1, 3: 6, 6: 3, 4: 5, 5: 4, 7: 8, 8: 7}
    rows = [[_F0] * DIM for _ in range(DIM)]
    for k, m in images.items():
        rows[m - 1][k - 1] = _F1
    return freeze(rows)


def diag_d() -> Matrix:
    signs = [1, 1, -1, 1, 1, -1, 1, 1]
    return freeze(
        [[Fraction(signs[i]) if i == j else _F0 for j in range(DIM)] for i in range(DIM)]
    )


def m_matrix(j: int, a: Sequence[KScalar]) -> Matrix:
    """diag(1, a_j, a_j, a_{j+2}^{-1}, a_{j+1}^{-1}, 1, 1, a_j)."""
    aj, aj1, aj2 = a[j % 3], a[(j + 1) % 3], a[(j + 2) % 3]
    entries = [_F1, aj, aj, _scalar_inv(aj2), _scalar_inv(aj1), _F1, _F1, aj]
    return freeze(
        [[entries[i] if i == c else _F0 for c in range(DIM)] for i in range(DIM)]
    )


def special_cocycle(a: Sequence[KScalar]) -> SimilitudeTriple:
    """The related triple z_j = m_j(a) d P for a product-one triple a;
    its multiplier triple is exactly (a0, a1, a2)."""
    if len(a) != 3:
        raise ValueError("need a triple")
    prod = a[0] * a[1] * a[2]
    if prod != 1:
        raise ValueError("triple must have product 1")
    dp = mat_mul(diag_d(), perm_P())
    return SimilitudeTriple(
        tuple(Similitude(mat_mul(m_matrix(j, a), dp)) for j in range(3))
    )


def special_cocycle_iota_closed_form(j: int, a: Sequence[KScalar]) -> Matrix:
    """diag(a_j^{-1},1,1,a_{j+1},a_{j+2},a_j^{-1},a_j^{-1},1) d P, the
    stated closed form of the iota-twist of z_j."""
    aj, aj1, aj2 = a[j % 3], a[(j + 1) % 3], a[(j + 2) % 3]
    inv = _scalar_inv(aj)
    entries = [inv, 1, 1, aj1, aj2, inv, inv, 1]
    diag = freeze(
        [[entries[i] if i == c else _F0 for c in range(DIM)] for i in range(DIM)]
    )
    return mat_mul(diag, mat_mul(diag_d(), perm_P()))


def cocycle_condition_holds(T: SimilitudeTriple) -> bool:
    """z_iota * iota(z_iota) = identity, the 1-cocycle condition for K/F."""
    eye = identity(DIM)
    for s in T.t:
        tw = s.iota_twisted()
        if not mat_eq(mat_mul(s.matrix, tw.matrix), eye):
            return False
    return True


def coboundary_triple(lam: Sequence[QuadExtScalar]) -> SimilitudeTriple:
    """The triple l_j = P m_j(lambda) P used to compare special cocycles.

    The components must multiply to 1 (else the m-pattern is not a
    similitude); a triple with norm-one product can always be rescaled by
    a norm-one factor to achieve this, by Hilbert 90.
    """
    if len(lam) != 3 or any(not bool(x) for x in lam):
        raise ValueError("need three nonzero coefficients")
    if lam[0] * lam[1] * lam[2] != 1:
        raise ValueError("coefficients must have product 1")
    p = perm_P()
    return SimilitudeTriple(
        tuple(Similitude(mat_mul(p, mat_mul(m_matrix(j, lam), p))) for j in range(3))
    )


def freedom_identity_holds(
    a: Sequence[KScalar], a_prime: Sequence[KScalar], lam: Sequence[QuadExtScalar]
) -> bool:
    """iota(l) z_{K,a'} l^{-1} = z_{K,a} whenever a_j^{-1} a'_j = N(lambda_j)."""
    for j in range(3):
        if a_prime[j] != a[j] * lam[j].norm():
            raise ValueError("a' must differ from a by the norms of lambda")
    z = special_cocycle(a)
    zp = special_cocycle(a_prime)
    ell = coboundary_triple(lam)
    for j in range(3):
        lhs = mat_mul(
            ell.t[j].iota_twisted().matrix,
            mat_mul(zp.t[j].matrix, mat_inv(ell.t[j].matrix)),
        )
        if not mat_eq(lhs, z.t[j].matrix):
            return False
    return True


# --------------------------------------------------------------------------
# calibration search


def calibration_search(quick: bool = True) -> dict:
    """Search signed scaled bases of the Zorn model for one satisfying all
    of: Gram S8, involution table, relatedness of the z-triples.

    Slots are forced by the weight pattern of the m_j matrices (u1,u6,u7
    one isotropic line, u2,u3,u8 the paired line, u4,u5 the trace-carrying
    pair).  Scale products of +-2 on a pair give that pair the S8 Gram
    value 1; products of +-1 give 1/2.  The search confirms that no
    candidate attains the exact S8 Gram together with the involution
    table or with relatedness (a rationality obstruction: both force
    trace(u4)^2 = 2), and returns the calibrated optimum, which gives up
    only the (3,6) and (4,5) Gram entries.
    """
    import itertools

    full_pairs = [  # scale product +-2: S8 Gram value +-1 on the pair
        (Fraction(2), Fraction(-1)),
        (Fraction(-2), Fraction(1)),
        (Fraction(1), Fraction(-2)),
        (Fraction(-1), Fraction(2)),
        (Fraction(2), Fraction(1)),
        (Fraction(-2), Fraction(-1)),
    ]
    half_pairs = [  # scale product +-1: Gram value +-1/2 on the pair
        (Fraction(1), Fraction(1)),
        (Fraction(-1), Fraction(-1)),
        (Fraction(1), Fraction(-1)),
        (Fraction(-1), Fraction(1)),
    ]
    # relabeling the three e-indices conjugates every candidate by a basis
    # permutation that fixes the constraint set, so scanning one labeling
    # loses nothing
    perms = [(0, 1, 2)] if quick else list(itertools.permutations(range(3)))
    a_test = (Fraction(1), Fraction(5), Fraction(1, 5))
    exact_s8_involution = 0
    exact_s8_related = 0
    calibrated = None
    for perm in perms:
        for (c1, c8), (c2, c7), (c3, c6) in itertools.product(
            full_pairs, full_pairs, full_pairs + half_pairs
        ):
            prod, gram = _build_tables((c1, c8, c2, c7, c3, c6), perm)
            table = CayleyTable(prod, gram)
            involution_ok = _involution_table_holds(table)
            if mat_eq(gram, S8):
                exact_s8_involution += involution_ok
                exact_s8_related += _related_for_table(table, a_test)
                continue
            if calibrated is not None or not involution_ok:
                continue
            deviations_ok = all(
                {i, j} in ({3, 6}, {4, 5}) and got == Fraction(1, 2)
                for i, j, got, _ in table.gram_deviations()
            )
            if deviations_ok and _related_for_table(table, a_test):
                calibrated = {
                    "scales": (c1, c8, c2, c7, c3, c6),
                    "perm": perm,
                    "gram_deviations": table.gram_deviations(),
                }
    return {
        "exact_s8_with_involution": exact_s8_involution,
        "exact_s8_with_relatedness": exact_s8_related,
        "calibrated": calibrated,
    }


def _related_for_table(table: CayleyTable, a) -> bool:
    """Relatedness of the z-triple evaluated against an explicit table
    (used by the calibration search, bypassing the module singleton)."""
    dp = mat_mul(diag_d(), perm_P())
    mats = [mat_mul(m_matrix(j, a), dp) for j in range(3)]
    mus = list(a)
    # probe the trace-carrying pair first: it kills bad scalings instantly
    order = [(3, 3), (4, 4), (3, 4), (4, 3)] + [
        (k, l) for k in range(DIM) for l in range(DIM) if not {k, l} <= {3, 4}
    ]
    basis_vecs = [
        tuple(_F1 if m == k else _F0 for m in range(DIM)) for k in range(DIM)
    ]
    for i in range(3):
        mi, m1, m2 = mats[i % 3], mats[(i + 1) % 3], mats[(i + 2) % 3]
        mu_inv = _scalar_inv(mus[i % 3])
        for k, l in order:
            ek, el = basis_vecs[k], basis_vecs[l]
            sxy = _star_coords(table, ek, el)
            lhs = tuple(mu_inv * c for c in mat_vec(mi, sxy))
            rhs = _star_coords(table, mat_vec(m2, ek), mat_vec(m1, el))
            if lhs != rhs:
                return False
    return True


def _conj_coords(c):
    return (-c[0], -c[1], -c[2], c[4], c[3], -c[5], -c[6], -c[7])


def _star_coords(table, x, y):
    return _mul_coords(table, _conj_coords(x), _conj_coords(y))
