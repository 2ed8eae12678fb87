"""The compactified apartment of PGL_n and its monomial-group action.

A point of the interior apartment A is a real cocharacter class
x_1 eta_1 + ... + x_n eta_n modulo the relation eta_1 + ... + eta_n = 0;
we store exponent vectors modulo constants, gauge-fixed so the exponent
at the smallest index is zero.  The boundary attaches one copy A_I of the
apartment of PGL(V/V_{complement of I}) for every nonempty proper subset
I of {1..n}; a boundary point keeps exponents only on its piece I.

Only points with rational exponents are representable, which keeps every
operation exact and is dense in each piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import INF, PrimeContext, val_k
from .errors import (
    DomainError,
    IndexOutsidePieceError,
    NotSubPieceError,
    ZeroDiagonalError,
)


@dataclass(frozen=True)
class ApartmentPoint:
    """Point of the compactified apartment: a piece I and gauged exponents on I."""

    piece: tuple
    exponents: tuple

    def is_interior(self, n: int) -> bool:
        return self.piece == tuple(range(1, n + 1))

    def exponent(self, i: int) -> Fraction:
        try:
            return self.exponents[self.piece.index(i)]
        except ValueError:
            raise IndexOutsidePieceError(f"index {i} not in piece {self.piece}")


def apartment_point(piece, exponents) -> ApartmentPoint:
    """Build a point, sorting the piece and enforcing the gauge at min(I)."""
    pairs = sorted(zip(piece, exponents))
    idxs = tuple(i for i, _ in pairs)
    if not idxs:
        raise DomainError("empty piece")
    if len(set(idxs)) != len(idxs) or idxs[0] < 1:
        raise DomainError(f"invalid piece {idxs}")
    exps = [Fraction(x) for _, x in pairs]
    base = exps[0]
    return ApartmentPoint(idxs, tuple(x - base for x in exps))


def interior_point(exponents) -> ApartmentPoint:
    """Interior point of the n-apartment from a full exponent vector."""
    n = len(exponents)
    return apartment_point(range(1, n + 1), exponents)


@dataclass(frozen=True)
class Root:
    """The root a_ij, the character t -> t_i / t_j of the diagonal torus."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise DomainError("root needs distinct indices")


def root_eval(a: Root, x: ApartmentPoint) -> Fraction:
    """a_ij(x) = x_i - x_j; defined when both indices lie in the piece."""
    return x.exponent(a.i) - x.exponent(a.j)


# ---------------------------------------------------------------------------
# The monomial group N = T >| W and its action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialElement:
    """Permutation w plus translation class, gauge-fixed at index 1.

    Acts on the apartment by x |-> (j |-> x_{w^{-1}(j)} + trans_j), with the
    piece mapped to w(I).  The translation is a vector modulo constants.
    """

    perm: tuple
    trans: tuple

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply_index(self, i: int) -> int:
        return self.perm[i - 1]

    def invert_index(self, j: int) -> int:
        return self.perm.index(j) + 1


def monomial_element(perm, trans) -> MonomialElement:
    perm = tuple(int(w) for w in perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise DomainError(f"not a permutation of 1..{n}: {perm}")
    ts = [Fraction(t) for t in trans]
    if len(ts) != n:
        raise DomainError("translation length mismatch")
    base = ts[0]
    return MonomialElement(perm, tuple(t - base for t in ts))


def monomial_identity(n: int) -> MonomialElement:
    return monomial_element(range(1, n + 1), [0] * n)


def monomial_compose(m1: MonomialElement, m2: MonomialElement) -> MonomialElement:
    """Group law matching act(m1 m2) = act(m1) o act(m2)."""
    n = m1.n
    if m2.n != n:
        raise DomainError("size mismatch")
    perm = tuple(m1.perm[m2.perm[k] - 1] for k in range(n))
    trans = [m1.trans[j] + m2.trans[m1.invert_index(j + 1) - 1] for j in range(n)]
    return monomial_element(perm, trans)


def monomial_inverse(m: MonomialElement) -> MonomialElement:
    n = m.n
    perm = tuple(m.perm.index(k + 1) + 1 for k in range(n))
    trans = [-m.trans[m.perm[j] - 1] for j in range(n)]
    return monomial_element(perm, trans)


def nu_translation(diag, ctx: PrimeContext) -> MonomialElement:
    """Translation nu(t) = -sum v(d_i) eta_i of a diagonal element t."""
    ds = [Fraction(d) for d in diag]
    if any(d == 0 for d in ds):
        raise ZeroDiagonalError("diagonal entry is zero")
    return monomial_element(range(1, len(ds) + 1), [-val_k(d, ctx) for d in ds])


def act_monomial(m: MonomialElement, x: ApartmentPoint) -> ApartmentPoint:
    """Apply a monomial element; maps the piece I to w(I)."""
    new_piece = [m.apply_index(i) for i in x.piece]
    new_exps = [xi + m.trans[j - 1] for j, xi in zip(new_piece, x.exponents)]
    return apartment_point(new_piece, new_exps)


def monomial_matrix(m: MonomialElement, ctx: PrimeContext):
    """GL_n(K) representative diag(p^-trans) * (permutation matrix).

    Only gauged translations with integer entries are realizable over K,
    since v(K^*) = Z; rational translations exist as abstract apartment
    motions but not as group elements.
    """
    for t in m.trans:
        if t.denominator != 1:
            raise DomainError(f"translation {m.trans} is not integral")
    n = m.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j in range(1, n + 1):
        i = m.apply_index(j)
        rows[i - 1][j - 1] = Fraction(ctx.p) ** (-int(m.trans[i - 1]))
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# Boundary projections, duality flip, rays
# ---------------------------------------------------------------------------

def s_project(x: ApartmentPoint, piece) -> ApartmentPoint:
    """Project to a sub-piece, dropping the cocharacters outside it."""
    target = tuple(sorted(set(piece)))
    if not target or not set(target) <= set(x.piece):
        raise NotSubPieceError(f"{target} is not a nonempty subset of {x.piece}")
    return apartment_point(target, [x.exponent(i) for i in target])


def dual_flip(x: ApartmentPoint) -> ApartmentPoint:
    """Sign flip induced by the dual-space identification; an involution."""
    return apartment_point(x.piece, [-e for e in x.exponents])


def ray_limit(x0: ApartmentPoint, direction) -> ApartmentPoint:
    """Limit of x0 + s*d as s -> infinity.

    The limit piece is argmin(d): those coordinates stay bounded relative
    to the minimum while all others drift to +infinity, sending the
    corresponding seminorm values to zero.  Constant d gives back x0.
    """
    d = [Fraction(t) for t in direction]
    n = len(d)
    if x0.piece != tuple(range(1, n + 1)):
        raise DomainError("ray base point must be interior; project first")
    dmin = min(d)
    limit_piece = [i for i in range(1, n + 1) if d[i - 1] == dmin]
    return apartment_point(limit_piece, [x0.exponent(i) for i in limit_piece])


# ---------------------------------------------------------------------------
# Filtration function f
# ---------------------------------------------------------------------------

def f_point(x: ApartmentPoint, a: Root):
    """Threshold f_x(a_ij): the infimum of t with x in the closure of {a >= -t}.

    On the interior this is -a(x) = x_j - x_i.  On a boundary piece I the
    closure analysis collapses to three cases: finite x_j - x_i when both
    indices lie in I, -infinity when i is outside I (some approach path
    makes a arbitrarily large), +infinity when i is in I but j is not
    (every approach path sends a to -infinity).
    """
    in_i = a.i in x.piece
    in_j = a.j in x.piece
    if in_i and in_j:
        return x.exponent(a.j) - x.exponent(a.i)
    if not in_i:
        return -INF
    return INF


def f_sigma(points, a: Root):
    """f for a finite set: sup over the set of the pointwise thresholds."""
    pts = list(points)
    if not pts:
        raise DomainError("f_sigma of empty set")
    return max(f_point(x, a) for x in pts)


# ---------------------------------------------------------------------------
# Basic opens of the boundary topology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OpenBox:
    """Open bounded box in the interior apartment, gauge x_1 = 0.

    intervals[k] = (lo, hi) constrains x_{k+2} - x_1, k = 0..n-2.
    """

    intervals: tuple

    @property
    def n(self) -> int:
        return len(self.intervals) + 1


def open_box(intervals) -> OpenBox:
    ivs = tuple((Fraction(lo), Fraction(hi)) for lo, hi in intervals)
    for lo, hi in ivs:
        if not lo < hi:
            raise DomainError(f"empty interval ({lo}, {hi})")
    return OpenBox(ivs)


def _fm_feasible(constraints, nvars: int) -> bool:
    # Fourier-Motzkin elimination; constraints are (coeffs, rhs, strict)
    # meaning sum(coeffs * x) <= rhs, strict for "<".
    cons = [(tuple(c), Fraction(r), s) for c, r, s in constraints]
    for v in range(nvars):
        uppers, lowers, rest = [], [], []
        for c, r, s in cons:
            if c[v] > 0:
                uppers.append((c, r, s))
            elif c[v] < 0:
                lowers.append((c, r, s))
            else:
                rest.append((c, r, s))
        cons = rest
        for cu, ru, su in uppers:
            au = cu[v]
            for cl, rl, sl in lowers:
                al = cl[v]
                coeffs = tuple(au * cl[k] - al * cu[k] for k in range(nvars))
                cons.append((coeffs, au * rl - al * ru, su or sl))
    return all(r > 0 if s else r >= 0 for _, r, s in cons)


def gamma_membership(y: ApartmentPoint, box: OpenBox, piece) -> bool:
    """Decide membership of y in the basic open Gamma attached to (box, I).

    Gamma is the union over J between I and {1..n} of the projections
    s_J(U + Delta_I), where Delta_I is the cone spanned by the eta_i for
    i outside I.  Membership reduces to exact rational feasibility of a
    small linear system: an interior class u in the box, a nonnegative
    drift delta supported off I, and a gauge constant matching y on its
    piece.
    """
    n = box.n
    i_set = tuple(sorted(set(piece)))
    if not i_set or not set(i_set) < set(range(1, n + 1)):
        raise DomainError("need a nonempty proper subset I of {1..n}")
    if not set(i_set) <= set(y.piece) or not set(y.piece) <= set(range(1, n + 1)):
        return False
    # variables: x[0] = gauge constant c, x[i-1] = u_i for i in 2..n (u_1 = 0)
    cons = []

    def u_coeffs(i, sign):
        c = [Fraction(0)] * n
        if i >= 2:
            c[i - 1] = Fraction(sign)
        return c

    for k, (lo, hi) in enumerate(box.intervals):
        i = k + 2
        cons.append((u_coeffs(i, -1), -lo, True))   # u_i > lo
        cons.append((u_coeffs(i, +1), hi, True))    # u_i < hi
    for j in y.piece:
        yj = y.exponent(j)
        c = u_coeffs(j, +1)
        c[0] = Fraction(1)
        if j in i_set:
            cons.append((tuple(c), yj, False))      # u_j + c = y_j
            cons.append((tuple(-t for t in c), -yj, False))
        else:
            cons.append((tuple(c), yj, False))      # u_j + c <= y_j (delta_j >= 0)
    return _fm_feasible(cons, n)
