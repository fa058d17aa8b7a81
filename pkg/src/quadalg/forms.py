"""Quadratic forms over Q and R with full Witt-ring functionality.

A form is a diagonal <a1,...,an> with nonzero exact entries.  Over Q the
complete invariant fingerprint is (dimension, signed discriminant, Hasse
symbols, real signature); over R only the signature matters.  Isotropy is
decided by the local-global dimension casing, and Witt decomposition
splits hyperbolic planes off using explicit isotropy witnesses.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, symbols as _sym_symbols
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from .scalars import (
    is_local_square,
    Place,
    REAL,
    RatLike,
    hilbert_symbol,
    is_square,
    relevant_places,
    square_class,
)


class HypothesisViolation(ValueError):
    """A criterion's hypothesis failed; `reason` names which one."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class DiagonalForm:
    """A nondegenerate diagonal quadratic form over Q or R."""

    field: str
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.field not in ("Q", "R"):
            raise ValueError(f"unknown base field {self.field!r}")
        entries = tuple(Fraction(a) for a in self.entries)
        if any(a == 0 for a in entries):
            raise ValueError("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def value(self, v) -> Fraction:
        return sum(a * x * x for a, x in zip(self.entries, v))

    def bilinear(self, v, w) -> Fraction:
        return sum(a * x * y for a, x, y in zip(self.entries, v, w))

    def __add__(self, other: "DiagonalForm") -> "DiagonalForm":
        return direct_sum(self, other)

    def __neg__(self) -> "DiagonalForm":
        return DiagonalForm(self.field, tuple(-a for a in self.entries))

    def __repr__(self) -> str:
        return f"form({self.field}, {form_literal(self)})"


def form(entries, field: str = "Q") -> DiagonalForm:
    return DiagonalForm(field, tuple(Fraction(a) for a in entries))


def direct_sum(q1: DiagonalForm, q2: DiagonalForm) -> DiagonalForm:
    if q1.field != q2.field:
        raise ValueError("mixed base fields")
    return DiagonalForm(q1.field, q1.entries + q2.entries)


def scale(c: RatLike, q: DiagonalForm) -> DiagonalForm:
    c = Fraction(c)
    if c == 0:
        raise ValueError("scaling by zero")
    return DiagonalForm(q.field, tuple(c * a for a in q.entries))


def tensor(q1: DiagonalForm, q2: DiagonalForm) -> DiagonalForm:
    if q1.field != q2.field:
        raise ValueError("mixed base fields")
    return DiagonalForm(
        q1.field, tuple(a * b for a in q1.entries for b in q2.entries)
    )


def hyperbolic(m: int, field: str = "Q") -> DiagonalForm:
    return DiagonalForm(field, (Fraction(1), Fraction(-1)) * m)


def pfister(*slots: RatLike, field: str = "Q") -> DiagonalForm:
    """The n-fold Pfister form <<a1,...,an>> = <1,-a1> x ... x <1,-an>."""
    q = DiagonalForm(field, (Fraction(1),))
    for a in slots:
        q = tensor(q, DiagonalForm(field, (Fraction(1), -Fraction(a))))
    return q


# --------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class WittInvariants:
    dim: int
    disc: int  # signed squarefree discriminant class
    hasse: dict[Place, int]  # places with symbol -1 only
    signature: int

    def hasse_at(self, v: Place) -> int:
        return self.hasse.get(v, 1)

    def __post_init__(self):
        if (self.signature - self.dim) % 2 or abs(self.signature) > self.dim:
            raise ValueError("signature incompatible with dimension")


def signature(q: DiagonalForm) -> int:
    return sum(1 if a > 0 else -1 for a in q.entries)


def signed_disc(q: DiagonalForm) -> int:
    """(-1)^(n(n-1)/2) det(q) as a square class (B7.eg convention)."""
    n = q.dim
    d = Fraction(1)
    for a in q.entries:
        d *= a
    d *= (-1) ** (n * (n - 1) // 2)
    return square_class(d) if n else 1


def invariants(q: DiagonalForm) -> WittInvariants:
    n = q.dim
    sig = signature(q) if n else 0
    if q.field == "R":
        # only signs are semantically relevant; symbols live at the real place
        eps = _hasse_at(q, REAL)
        hasse = {REAL: eps} if eps == -1 else {}
        return WittInvariants(n, signed_disc(q), hasse, sig)
    hasse = {}
    for v in relevant_places(*q.entries) if n else []:
        eps = _hasse_at(q, v)
        if eps == -1:
            hasse[v] = eps
    return WittInvariants(n, signed_disc(q), hasse, sig)


def _hasse_at(q: DiagonalForm, v: Place) -> int:
    eps = 1
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            eps *= hilbert_symbol(q.entries[i], q.entries[j], v)
    return eps


# --------------------------------------------------------------------------
# isotropy and Witt decomposition


def is_isotropic(q: DiagonalForm) -> bool:
    """Hasse-Minkowski: over R a sign test, over Q the dimension-cased
    local-global criterion (Serre, Cours d'arithmetique IV.3.2)."""
    n = q.dim
    if n <= 1:
        return False
    pos = any(a > 0 for a in q.entries)
    neg = any(a < 0 for a in q.entries)
    if q.field == "R":
        return pos and neg
    if not (pos and neg):
        return False
    if n == 2:
        return square_class(-q.entries[0] * q.entries[1]) == 1
    if n == 3:
        d = Fraction(1)
        for a in q.entries:
            d *= a
        places = relevant_places(-1, *q.entries)
        return all(
            hilbert_symbol(-1, -d, v) == _hasse_at(q, v) for v in places
        )
    if n == 4:
        # anisotropic at v iff the disc is a square there and the Hasse
        # symbol differs from (-1,-1)_v
        d = Fraction(1)
        for a in q.entries:
            d *= a
        return all(
            _hasse_at(q, v) == hilbert_symbol(-1, -1, v)
            for v in relevant_places(-1, *q.entries)
            if is_local_square(d, v)
        )
    return True  # dim >= 5 indefinite is isotropic everywhere


def _reduce_to_squarefree(entries):
    """Write a_i = d_i c_i^2 with d_i squarefree; return (d, c)."""
    ds, cs = [], []
    for a in entries:
        d = square_class(a)
        c2 = a / d
        cs.append(_fraction_sqrt(c2))
        ds.append(d)
    return ds, cs


def _fraction_sqrt(a: Fraction) -> Fraction:
    from math import isqrt

    num, den = a.numerator, a.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{a} is not a square")
    return Fraction(rn, rd)


def isotropic_vector(q: DiagonalForm) -> tuple[Fraction, ...]:
    """An exact nonzero vector with q(v) = 0.

    The existence certificate comes first (local-global test); the witness
    is then produced by a ternary-subform solver with a meet-in-the-middle
    enumeration fallback whose box grows until the certified witness is
    found.
    """
    if not is_isotropic(q):
        raise ValueError("form is anisotropic")
    if q.field == "R":
        i = next(i for i, a in enumerate(q.entries) if a > 0)
        j = next(j for j, a in enumerate(q.entries) if a < 0)
        v = [Fraction(0)] * q.dim
        v[i] = Fraction(1)
        v[j] = _fraction_sqrt(q.entries[i] / -q.entries[j])
        return tuple(v)
    ds, cs = _reduce_to_squarefree(q.entries)
    w = _isotropic_vector_squarefree(ds)
    return tuple(Fraction(x) / c for x, c in zip(w, cs))


def _isotropic_vector_squarefree(ds):
    """A nonzero integer zero of sum d_i x_i^2 for squarefree d_i; the
    form is assumed isotropic (certified by the caller).

    Strategy: hyperbolic pairs, then verified ternary witnesses, then the
    classical splitting q = <d1,d2> + rest through a common represented
    value t (three strictly smaller witness problems), with a bounded
    meet-in-the-middle enumeration as the last resort.
    """
    n = len(ds)
    # opposite squarefree entries span a hyperbolic pair
    for i in range(n):
        for j in range(i + 1, n):
            if ds[i] == -ds[j]:
                v = [0] * n
                v[i] = v[j] = 1
                return v
    if n == 2:
        raise ValueError("binary squarefree isotropic means opposite entries")
    if n == 3:
        w = _ternary_witness(*ds)
        if w is None:
            raise RuntimeError("certified ternary form defeated the solvers")
        return list(w)
    # an isotropic ternary (or smaller) subform finishes the job
    for idx in itertools.combinations(range(n), 3):
        sub = DiagonalForm("Q", tuple(Fraction(ds[i]) for i in idx))
        if is_isotropic(sub):
            w = _ternary_witness(*(ds[i] for i in idx))
            if w is not None:
                v = [0] * n
                for i, s in zip(idx, w):
                    v[i] = s
                return v
    # split off a binary head through a common represented value t; a few
    # different splits guard against an unlucky head
    splits = [(0, 1), (0, n - 1), (1, 2 % n)]
    for i, j in dict.fromkeys(splits):
        if i == j:
            continue
        rest = [m for m in range(n) if m not in (i, j)]
        head = (ds[i], ds[j])
        tail = [ds[m] for m in rest]
        for t in _value_candidates(ds):
            head_t = DiagonalForm(
                "Q", (Fraction(head[0]), Fraction(head[1]), Fraction(-t))
            )
            tail_t = DiagonalForm(
                "Q", tuple(Fraction(d) for d in tail) + (Fraction(t),)
            )
            if not (is_isotropic(head_t) and is_isotropic(tail_t)):
                continue
            w1 = _ternary_witness(head[0], head[1], -t)
            if w1 is None:
                continue
            # tail entries and t are squarefree, so the recursion applies
            w2 = _isotropic_vector_squarefree(tail + [t])
            x1, x2, z1 = w1
            z2 = w2[-1]
            v = [0] * n
            if z1 == 0:
                v[i], v[j] = x1, x2
            elif z2 == 0:
                for m, y in zip(rest, w2[:-1]):
                    v[m] = y
            else:
                v[i], v[j] = x1 * z2, x2 * z2
                for m, y in zip(rest, w2[:-1]):
                    v[m] = y * z1
            assert sum(d * x * x for d, x in zip(ds, v)) == 0
            return v
    # last resort: bounded enumeration (should be unreachable)
    for box in (2, 4, 8, 16):
        v = _mitm_search(ds, box)
        if v is not None:
            return v
    raise RuntimeError("isotropy witness search exhausted")


def _ternary_witness(a, b, c):
    """A verified nonzero integer zero of ax^2 + by^2 + cz^2 (or None if
    the form is anisotropic).

    The coefficients are brought to Legendre normal form (squarefree and
    pairwise coprime) first; on that shape the diophantine solver is the
    fast path (its output is still verified, as it can return spurious
    tuples), and a Holzer-bounded enumeration is the guaranteed fallback:
    a solvable normalized equation has a zero with |x_i| <= sqrt of the
    product of the other two coefficients.
    """
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        return None
    coeffs = [a, b, c]
    mults = [Fraction(1)] * 3  # witness w maps back as w_i * mults_i
    changed = True
    while changed:
        changed = False
        for i in range(3):
            d = square_class(coeffs[i])
            if d != coeffs[i]:
                k = _fraction_sqrt(Fraction(coeffs[i], d))
                coeffs[i] = d
                mults[i] /= k
                changed = True
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                g = _gcd(coeffs[i], coeffs[j])
                if g > 1:
                    k = 3 - i - j
                    coeffs[i] //= g
                    coeffs[j] //= g
                    coeffs[k] *= g
                    mults[k] *= g
                    changed = True
    w = _legendre_equation_zero(*coeffs)
    if w is None:
        return None
    back = [m * s for m, s in zip(mults, w)]
    den = 1
    for f in back:
        den = den * Fraction(f).denominator // _gcd(den, Fraction(f).denominator)
    out = tuple(int(f * den) for f in back)
    assert a * out[0] ** 2 + b * out[1] ** 2 + c * out[2] ** 2 == 0
    return out


def _gcd(x, y):
    from math import gcd

    return gcd(int(x), int(y))


def _legendre_equation_zero(a, b, c):
    """A nonzero integer zero of a normalized (squarefree, pairwise
    coprime, mixed-sign) ternary ax^2 + by^2 + cz^2, or None."""
    from math import isqrt

    x, y, z = _sym_symbols("x y z", integer=True)
    sol = diop_ternary_quadratic(a * x**2 + b * y**2 + c * z**2)
    if sol is not None and None not in sol and any(sol):
        sx, sy, sz = (int(s) for s in sol)
        if a * sx * sx + b * sy * sy + c * sz * sz == 0:
            return (sx, sy, sz)
    # Holzer bounds: iterate the two coordinates with the smallest bounds
    # (those paired with the largest coefficient) and solve for the third
    order = sorted(range(3), key=lambda i: abs((a, b, c)[i]))
    co = [(a, b, c)[i] for i in order]  # |co[0]| <= |co[1]| <= |co[2]|
    bound_mid = isqrt(abs(co[0] * co[2]))
    bound_big = isqrt(abs(co[0] * co[1]))
    for s_big in range(bound_big + 1):
        t2 = co[2] * s_big * s_big
        for s_mid in range(bound_mid + 1):
            rem = -(co[1] * s_mid * s_mid + t2)
            if rem == 0 and s_mid == 0 and s_big == 0:
                continue
            num, r = divmod(rem, co[0])
            if r or num < 0:
                continue
            s_small = isqrt(num)
            if s_small * s_small == num:
                w = [0, 0, 0]
                w[order[0]], w[order[1]], w[order[2]] = s_small, s_mid, s_big
                return tuple(w)
    return None


def _value_candidates(ds):
    """Candidate common values: the entries themselves (an isotropic tail
    is universal, so these always suffice in that case) followed by
    squarefree integers built from small primes and the entries' primes,
    ordered by height."""
    primes = {2, 3, 5, 7, 11, 13}
    for d in ds:
        primes.update(factorint(abs(d)))
    primes = sorted(primes)
    seen = set()
    values = []
    for d in ds:
        for s in (d, -d):
            if s not in seen:
                seen.add(s)
                values.append(s)
    combos = []
    for r in range(4):
        for combo in itertools.combinations(primes, r):
            m = 1
            for p in combo:
                m *= p
            if m not in seen:
                seen.add(m)
                seen.add(-m)
                combos.append(m)
    combos.sort()
    for m in combos:
        values.append(m)
        values.append(-m)
    return values


def _mitm_search(ds, box):
    n = len(ds)
    half = n // 2
    left, right = ds[:half], ds[half:]
    table = {}
    for xs in itertools.product(range(-box, box + 1), repeat=len(left)):
        val = sum(d * x * x for d, x in zip(left, xs))
        table.setdefault(val, xs)
    for ys in itertools.product(range(-box, box + 1), repeat=len(right)):
        val = sum(d * y * y for d, y in zip(right, ys))
        xs = table.get(-val)
        if xs is not None and (any(xs) or any(ys)):
            return list(xs) + list(ys)
    return None


def witt_decompose(q: DiagonalForm) -> tuple[int, DiagonalForm]:
    """q = index*H + anisotropic, with an explicit split at every step."""
    if q.field == "R":
        pos = sum(1 for a in q.entries if a > 0)
        neg = q.dim - pos
        index = min(pos, neg)
        rest = (Fraction(1),) * (pos - index) + (Fraction(-1),) * (neg - index)
        return index, DiagonalForm("R", rest)
    index = 0
    cur = q
    while is_isotropic(cur):
        v = isotropic_vector(cur)
        cur = _split_hyperbolic(cur, v)
        index += 1
    return index, cur


def _split_hyperbolic(q: DiagonalForm, v) -> DiagonalForm:
    """Orthogonal complement of the hyperbolic plane through isotropic v."""
    assert q.value(v) == 0
    n = q.dim
    j = next(i for i, x in enumerate(v) if x != 0)
    w = tuple(Fraction(int(i == j)) for i in range(n))  # B(v, w) = a_j v_j != 0
    b = q.bilinear(v, w)
    c = q.value(w)
    # project basis vectors into the B-orthogonal complement of span(v, w)
    basis = []
    for m in range(n):
        e = [Fraction(int(i == m)) for i in range(n)]
        bv, bw = q.bilinear(v, e), q.bilinear(w, e)
        # x -> x - alpha v - beta w with B(v,.) = B(w,.) = 0 afterwards
        beta = bv / b
        alpha = (bw - beta * c) / b
        vec = [e[i] - alpha * v[i] - beta * w[i] for i in range(n)]
        if any(vec):
            basis.append(vec)
    basis = _independent(basis, n - 2)
    gram = [[q.bilinear(x, y) for y in basis] for x in basis]
    return DiagonalForm(q.field, tuple(_diagonalize_gram(gram)))


def _independent(vecs, want):
    from .exactmat import rank, freeze

    out = []
    for vec in vecs:
        if len(out) == want:
            break
        if rank(freeze(out + [vec])) > len(out):
            out.append(vec)
    if len(out) != want:
        raise RuntimeError("failed to span the complement")
    return out


def _diagonalize_gram(gram):
    """Diagonal entries of a congruent diagonal matrix, squarefree-reduced.

    Symmetric Gaussian elimination; a zero diagonal block is repaired by
    the characteristic-zero row+column addition trick.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    out = []
    for t in range(n):
        piv = next((i for i in range(t, n) if g[i][i] != 0), None)
        if piv is None:
            i, j = next(
                (i, j)
                for i in range(t, n)
                for j in range(t, n)
                if i != j and g[i][j] != 0
            )
            for m in range(n):
                g[i][m] += g[j][m]
            for m in range(n):
                g[m][i] += g[m][j]
            piv = i
        if piv != t:
            g[t], g[piv] = g[piv], g[t]
            for row in g:
                row[t], row[piv] = row[piv], row[t]
        d = g[t][t]
        out.append(Fraction(square_class(d)))
        for i in range(t + 1, n):
            if g[i][t]:
                f = g[i][t] / d
                for m in range(n):
                    g[i][m] -= f * g[t][m]
                for m in range(n):
                    g[m][i] -= f * g[m][t]
    return out


# --------------------------------------------------------------------------
# classification


def witt_trivial(q: DiagonalForm) -> bool:
    """Whether q is Witt-equivalent to a hyperbolic form (possibly 0H)."""
    if q.dim % 2:
        return False
    if q.field == "R":
        return signature(q) == 0
    inv = invariants(q)
    if inv.disc != 1 or inv.signature != 0:
        return False
    hyp = invariants(hyperbolic(q.dim // 2))
    places = set(inv.hasse) | set(hyp.hasse)
    return all(inv.hasse_at(v) == hyp.hasse_at(v) for v in places)


def witt_equivalent(q1: DiagonalForm, q2: DiagonalForm) -> bool:
    if q1.field != q2.field:
        raise ValueError("mixed base fields")
    return witt_trivial(direct_sum(q1, -q2))


def isometric(q1: DiagonalForm, q2: DiagonalForm) -> bool:
    return q1.dim == q2.dim and witt_equivalent(q1, q2)


def in_power_I(q: DiagonalForm, n: int) -> bool:
    """Membership in I^n, n = 1..4 over Q (any n >= 1 over R).

    Over Q: I is even dimension; I^2 adds trivial signed discriminant;
    I^3 adds finite Hasse symbols matching the equal-dimensional
    hyperbolic form and signature = 0 mod 8; I^4 strengthens the
    signature condition to 0 mod 16 (the real place detects H^3 of Q).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if q.field == "R":
        return q.dim % 2 == 0 and signature(q) % (1 << n) == 0
    if n > 4:
        raise ValueError("I^n over Q implemented only for n <= 4")
    if q.dim % 2:
        return False
    if n == 1:
        return True
    inv = invariants(q)
    if inv.disc != 1:
        return False
    if n == 2:
        return True
    hyp = invariants(hyperbolic(q.dim // 2))
    places = (set(inv.hasse) | set(hyp.hasse)) - {REAL}
    if any(inv.hasse_at(v) != hyp.hasse_at(v) for v in places):
        return False
    return inv.signature % 8 == 0 if n == 3 else inv.signature % 16 == 0


def arason_trivial(q: DiagonalForm) -> bool:
    """e3(q) = 0 for q in I^3, via the kernel-of-e3 theorem: e3 vanishes
    exactly on I^4."""
    if q.dim and not in_power_I(q, 3):
        raise HypothesisViolation("not-in-I3", "Arason invariant needs q in I^3")
    return True if q.dim == 0 else in_power_I(q, 4)


def low_rank_kernel_check(q: DiagonalForm, q_cand: DiagonalForm) -> bool:
    """The d + d_an < 16 kernel criterion for Spin(q).

    With dim q = dim q_cand >= 5, q_cand - q in I^3 and
    dim q + dim(anisotropic part of q) < 16: a trivial Arason invariant of
    q_cand - q forces q_cand isometric to q (the difference lands in I^4
    and is killed by the Arason-Pfister Hauptsatz below dimension 16).
    Returns the isometry verdict; hypothesis failures raise with a named
    reason.
    """
    if q.field != q_cand.field:
        raise HypothesisViolation("mixed-fields", "forms over different fields")
    if q.dim != q_cand.dim:
        raise HypothesisViolation("dim-mismatch", "forms must share a dimension")
    if q.dim < 5:
        raise HypothesisViolation("dim-small", "criterion needs dim >= 5")
    diff = direct_sum(q_cand, -q)
    if not in_power_I(diff, 3):
        raise HypothesisViolation("not-in-I3", "q_cand - q must lie in I^3")
    d_an = witt_decompose(q)[1].dim
    if q.dim + d_an >= 16:
        raise HypothesisViolation(
            "rank-bound", f"d + d_an = {q.dim + d_an} is not < 16"
        )
    if not arason_trivial(diff):
        return False
    verdict = isometric(q_cand, q)
    assert verdict, "Hauptsatz violated: trivial e3 but q_cand != q"
    return True


# --------------------------------------------------------------------------
# hermitian trace forms


@dataclass(frozen=True)
class HermitianDiagonal:
    """Diagonal hermitian form <l1,...,ln> over F(sqrt k), entries in F."""

    field: str
    k: Fraction
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        entries = tuple(Fraction(a) for a in self.entries)
        if any(a == 0 for a in entries):
            raise ValueError("hermitian entries must be nonzero")
        if self.field == "R":
            if self.k >= 0:
                raise ValueError("k must be negative over R")
        elif is_square(self.k):
            raise ValueError("k must not be a square")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)


def hermitian_hyperbolic(m: int, k: RatLike, field: str = "Q") -> HermitianDiagonal:
    """m unitary hyperbolic planes; diagonalized as <1,-1> repeated."""
    return HermitianDiagonal(field, Fraction(k), (Fraction(1), Fraction(-1)) * m)


def trace_form(h: HermitianDiagonal) -> DiagonalForm:
    """Trace form of <l1,...,ln> over F(sqrt k): the 2n-dimensional form
    perp_i l_i<1, -k> over F."""
    entries = []
    for lam in h.entries:
        entries += [lam, -lam * h.k]
    return DiagonalForm(h.field, tuple(entries))


# --------------------------------------------------------------------------
# behaviour under the quadratic extension K = Q(sqrt k)


def in_k_witt_ideal(q: DiagonalForm, k: RatLike) -> bool:
    """Whether the Witt class of q lies in <1,-k> W(Q), i.e. q becomes
    hyperbolic over Q(sqrt k) (the kernel of restriction is exactly that
    ideal).  Constructive peeling: every anisotropic class in the ideal
    is <1,-k>-divisible, so stripping a<1,-k> for a represented value a
    must drop the anisotropic dimension by 2 each round."""
    k = Fraction(k)
    if q.field != "Q":
        raise ValueError("K-ideal test is for forms over Q")
    if is_square(k):
        raise ValueError("k must not be a square")
    phi = witt_decompose(q)[1]
    while phi.dim:
        a = phi.entries[0]
        peeled = direct_sum(phi, form([-a, a * k]))
        phi2 = witt_decompose(peeled)[1]
        if phi2.dim > phi.dim - 2:
            return False
        phi = phi2
    return True


def isometric_over_K(q1: DiagonalForm, q2: DiagonalForm, k: RatLike) -> bool:
    """Isometry of q1 x K and q2 x K for forms defined over Q."""
    return q1.dim == q2.dim and in_k_witt_ideal(direct_sum(q1, -q2), k)


# --------------------------------------------------------------------------
# literals


_TOKEN = re.compile(r"\s*(<<|>>|<|>|\+|\*|,|[^\s<>+*,]+)")


def parse_form(text: str, field: str = "Q") -> DiagonalForm:
    """Parse the form grammar: `<a,b,...>`, `<<a,...>>` (Pfister), `nH`,
    `c*<...>`, joined by `+`."""
    from .scalars import parse_scalar

    tokens = _TOKEN.findall(text)
    if not tokens or "".join(_TOKEN.findall(text)) != "".join(text.split()):
        raise ValueError(f"cannot tokenize form literal {text!r}")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of form literal {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(
                f"expected {expected!r} at token {pos} of {text!r}, got {tok!r}"
            )
        pos += 1
        return tok

    def scalar_list(closer):
        vals = [parse_scalar(take())]
        while peek() == ",":
            take(",")
            vals.append(parse_scalar(take()))
        take(closer)
        return vals

    def term():
        tok = peek()
        if tok == "<<":
            take("<<")
            return pfister(*scalar_list(">>"), field=field)
        if tok == "<":
            take("<")
            return DiagonalForm(field, tuple(scalar_list(">")))
        # `nH` or `c*<...>` / `c*<<...>>`
        word = take()
        if word.endswith("H") or word.endswith("h"):
            n = int(word[:-1]) if word[:-1] else 1
            if n < 0:
                raise ValueError("negative hyperbolic multiplicity")
            return hyperbolic(n, field)
        c = parse_scalar(word)
        take("*")
        return scale(c, term())

    q = term()
    while peek() == "+":
        take("+")
        q = direct_sum(q, term())
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in form literal {text!r}")
    return q


def form_literal(q: DiagonalForm) -> str:
    if not q.dim:
        return "<>"
    return "<" + ",".join(str(a) for a in q.entries) + ">"


def invariants_json(q: DiagonalForm) -> dict:
    inv = invariants(q)
    return {
        "dim": inv.dim,
        "disc": inv.disc,
        "hasse": {repr(v): s for v, s in sorted(inv.hasse.items(), key=lambda t: t[0].p)},
        "signature": inv.signature,
    }
