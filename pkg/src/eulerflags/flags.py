"""Complete oriented flags, the bracket construction, and point realization.

An oriented flag is stored as an ordered basis (w_1, ..., w_n): level i is
F^i = span(w_1..w_i) and the positive half-space at level i is the side of
F^{i-1} in F^i containing w_i.  Per-level half-space bits would be redundant
since flipping the sign of w_i realizes the other choice.

The bracket [W, F] extends an oriented subspace W by the lowest level of F
not already contained in W; iterating over a tuple of flags yields the
oriented space [F_1, ..., F_k].  Membership tests run on primitive integer
vectors (positive per-vector scaling cannot change any span or sign), while
returned bases keep the original exact vectors so that g . bracket(Fs) equals
bracket(g . Fs) on the nose.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .linalg import (
    InputError,
    det,
    int_vec,
    is_zero_vec,
    mat_vec,
    ori,
    primitive_int_vec,
    projective_normalize,
    require_even,
    vec,
)


def _reduce_int(v: list[int], rows) -> list[int]:
    # rows: [(pivot, primitive int row)] sorted by pivot; zeroes v at all pivots
    for p, r in rows:
        if v[p]:
            vp, rp = v[p], r[p]
            v = [rp * x - vp * y for x, y in zip(v, r)]
    return v


def _pivot(v) -> int:
    for i, x in enumerate(v):
        if x:
            return i
    return -1


class _IntSpan:
    """Row-echelon integer model of a rational span; membership is exact."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        self.rows = list(rows)

    def contains_int(self, iv) -> bool:
        return not any(_reduce_int(list(iv), self.rows))

    def extended(self, iv) -> "_IntSpan":
        red = _reduce_int(list(iv), self.rows)
        p = _pivot(red)
        if p < 0:
            raise InputError("vector already in span")
        g = 0
        for x in red:
            g = math.gcd(g, x)
        red = [x // g for x in red]
        return _IntSpan(sorted(self.rows + [(p, tuple(red))]))


class OrientedSubspace:
    """Ordered independent basis; orientation is the basis order."""

    __slots__ = ("basis", "_span")

    def __init__(self, basis, _span: _IntSpan | None = None):
        self.basis = tuple(vec(v) for v in basis)
        if _span is not None:
            self._span = _span
            return
        span = _IntSpan()
        for v in self.basis:
            if is_zero_vec(v):
                raise InputError("zero vector in subspace basis")
            iv = primitive_int_vec(v)
            if span.contains_int(iv):
                raise InputError("dependent subspace basis")
            span = span.extended(iv)
        self._span = span

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def contains(self, v) -> bool:
        return self._span.contains_int(int_vec(vec(v)))

    def apply(self, g) -> "OrientedSubspace":
        return OrientedSubspace(tuple(mat_vec(g, v) for v in self.basis))


class OrientedFlag:
    """Complete oriented flag of R^n encoded by a nonsingular ordered basis."""

    __slots__ = ("basis", "ints")

    def __init__(self, basis):
        self.basis = tuple(vec(v) for v in basis)
        n = len(self.basis)
        if n == 0 or any(len(v) != n for v in self.basis):
            raise InputError("flag basis must be n vectors of dimension n")
        self.ints = tuple(primitive_int_vec(v) for v in self.basis)
        if ori(self.basis) == 0:
            raise InputError("singular flag basis")

    @property
    def n(self) -> int:
        return len(self.basis)

    def apply(self, g) -> "OrientedFlag":
        return OrientedFlag(tuple(mat_vec(g, v) for v in self.basis))

    def __repr__(self):
        return f"OrientedFlag({self.basis!r})"


def make_flag(basis) -> OrientedFlag:
    return OrientedFlag(basis)


def flip(F: OrientedFlag, i: int) -> OrientedFlag:
    """Reverse the half-space at level i (1-indexed): negate w_i."""
    if not 1 <= i <= F.n:
        raise InputError(f"flip level {i} out of range 1..{F.n}")
    return OrientedFlag(tuple(tuple(-x for x in v) if j == i - 1 else v
                              for j, v in enumerate(F.basis)))


def _rref(vectors):
    """Reduced row echelon form over Q; canonical for the span."""
    out = []  # [(pivot, row)] with unit pivots, reduced above and below
    for v in vectors:
        r = list(vec(v))
        for p, q in out:
            if r[p]:
                f = r[p]
                r = [x - f * y for x, y in zip(r, q)]
        p = _pivot(r)
        if p < 0:
            raise InputError("dependent vectors where independent ones were expected")
        piv = r[p]
        r = [x / piv for x in r]
        for idx, (pj, qj) in enumerate(out):
            if qj[p]:
                f = qj[p]
                out[idx] = (pj, [x - f * y for x, y in zip(qj, r)])
        out.append((p, r))
    out.sort()
    return tuple(tuple(r) for _, r in out)


def flag_equal_unoriented(F: OrientedFlag, G: OrientedFlag) -> bool:
    """True iff span(w_1..w_i) = span(w'_1..w'_i) for every level i."""
    if F.n != G.n:
        raise InputError("flags of different dimension")
    return all(_rref(F.basis[:i]) == _rref(G.basis[:i]) for i in range(1, F.n + 1))


def flag_key(F: OrientedFlag):
    """Canonical key: equal keys iff equal as ORIENTED flags.

    Level i is encoded by the residual of w_i after eliminating the RREF of
    F^{i-1} (the unique coset representative vanishing at earlier pivots),
    made primitive by a positive scalar so the half-space sign survives.
    """
    key = []
    for i in range(F.n):
        r = list(F.basis[i])
        if i:
            for q in _rref(F.basis[:i]):
                p = _pivot(q)
                if r[p]:
                    f = r[p]
                    r = [x - f * y for x, y in zip(r, q)]
        key.append(primitive_int_vec(r))
    return tuple(key)


def flagstaff(F: OrientedFlag):
    """The line F^1 as a canonical projective point."""
    return projective_normalize(F.basis[0])


def _step(span: _IntSpan, F: OrientedFlag) -> int:
    """0-indexed selection level of the bracket extension: min{ j : w_j not in W }."""
    for j, iv in enumerate(F.ints):
        if not span.contains_int(iv):
            return j
    raise InputError("flag cannot extend a full space")


def bracket_step(W: OrientedSubspace | None, F: OrientedFlag) -> OrientedSubspace:
    """[W, F]: append the positive representative of F's lowest level not in W."""
    if W is None:
        W = OrientedSubspace(())
    if W.dim >= F.n:
        raise InputError("bracket_step on an already-full subspace")
    d = _step(W._span, F)
    return OrientedSubspace(W.basis + (F.basis[d],), _span=W._span.extended(F.ints[d]))


def bracket_selections(Fs) -> tuple[OrientedSubspace, tuple[int, ...]]:
    """Iterated bracket plus the 0-indexed selection level per input flag."""
    Fs = tuple(Fs)
    if not Fs:
        raise InputError("bracket of an empty flag tuple")
    n = Fs[0].n
    if len(Fs) > n or any(F.n != n for F in Fs):
        raise InputError("bracket takes 1..n flags of equal dimension")
    span = _IntSpan()
    basis = []
    levels = []
    for F in Fs:
        d = _step(span, F)
        levels.append(d)
        basis.append(F.basis[d])
        span = span.extended(F.ints[d])
    W = OrientedSubspace(tuple(basis), _span=span)
    assert W.dim == len(Fs)
    return W, tuple(levels)


def bracket(Fs) -> OrientedSubspace:
    """[F_1, ..., F_k] for 1 <= k <= n flags."""
    return bracket_selections(Fs)[0]


# ---------------------------------------------------------------------------
# Point realization: flags -> points with matching deleted-pair orientations.


def _cofactor_functional(basis):
    # x |-> det(rows: basis..., x) as a coefficient vector; basis has n-1 rows
    n = len(basis[0])
    assert len(basis) == n - 1
    coeffs = []
    for c in range(n):
        minor = [[row[k] for k in range(n) if k != c] for row in basis]
        coeffs.append((-1 if (n + c + 1) % 2 else 1) * det(minor))
    return tuple(coeffs)


def _ell(coeffs, x) -> Fraction:
    return sum(c * xi for c, xi in zip(coeffs, x))


def realize_points(Fs):
    """Points x_0..x_{n+1} whose deleted-pair orientations all agree with the
    deleted-pair bracket orientations of the given n+2 flags.

    Downward induction, x_{n+1} first: at stage k the pairs not containing k
    give one hyperplane each (bracket of the flags below k minus the deleted
    pair, padded with the already-found points above k), and x_k is produced
    by walking from the origin along the basis of F_k with exact step sizes
    small enough to never re-cross a hyperplane once left.  Each constraint
    sign is therefore decided at the level where its hyperplane is first
    left, and equals the bracket-extension orientation.  The quadratic-pair
    postcondition is asserted before returning.
    """
    Fs = tuple(Fs)
    if not Fs:
        raise InputError("empty flag tuple")
    n = require_even(Fs[0].n)
    if len(Fs) != n + 2 or any(F.n != n for F in Fs):
        raise InputError(f"realize_points needs n+2={n + 2} flags of dimension n={n}")

    pts: dict[int, tuple[Fraction, ...]] = {}
    for k in range(n + 1, -1, -1):
        others = [a for a in range(n + 2) if a != k]
        constraints = []
        for i, j in itertools.combinations(others, 2):
            flagpart = [Fs[a] for a in range(k) if a not in (i, j)]
            pointpart = [pts[b] for b in range(k + 1, n + 2) if b not in (i, j)]
            vbasis = (tuple(bracket(flagpart).basis) if flagpart else ()) + tuple(pointpart)
            V = OrientedSubspace(vbasis)
            assert V.dim == n - 1
            ext = bracket_step(V, Fs[k])
            target = ori(ext.basis)
            assert target != 0
            coeffs = _cofactor_functional(vbasis)
            s = _ell(coeffs, ext.basis[-1])
            assert ((s > 0) - (s < 0)) == target  # same ordered-basis convention
            constraints.append((coeffs, target))

        y = tuple(Fraction(0) for _ in range(n))
        for lev in range(n):
            wd = Fs[k].basis[lev]
            deltas = [abs(ly) / (2 * (abs(_ell(coeffs, wd)) + 1))
                      for coeffs, _ in constraints
                      if (ly := _ell(coeffs, y)) != 0]
            delta = min(deltas) if deltas else Fraction(1)
            y = tuple(a + delta * b for a, b in zip(y, wd))
        for coeffs, target in constraints:
            s = _ell(coeffs, y)
            assert ((s > 0) - (s < 0)) == target
        pts[k] = y

    out = tuple(pts[a] for a in range(n + 2))
    for i, j in itertools.combinations(range(n + 2), 2):
        kept = [a for a in range(n + 2) if a not in (i, j)]
        assert ori([out[a] for a in kept]) == ori(bracket([Fs[a] for a in kept]).basis)
    return out
