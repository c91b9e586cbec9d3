"""Orientation cocycles on points and oriented flags, and their witnesses.

pcoc multiplies the n+1 deleted-index orientation signs of a point tuple, so
it vanishes exactly off the hereditarily spanning locus.  coco does the same
with iterated-bracket orientations of oriented flags and never vanishes.
coc averages coco over all 2^(n(n+1)) half-space flips; the factorized mode
uses the fact that bracket selection levels cannot see flips (flipping w_i
rescales it by -1, which changes no span), so each flip bit enters the
average as a +-1 power equal to the number of deleted-index brackets that
selected that (flag, level); the average collapses to coco on the base
orientations when every selection multiplicity is even and to 0 otherwise.
The naive mode literally enumerates every flip combination and re-runs the
bracket machinery on the flipped flags, memoizing each deleted-index bracket
on the flip bits it actually reads; it exists as the differential-testing
oracle for the factorized mode.

sul is the barycentric-sign cocycle: all n+1 Cramer signs agree and are
nonzero exactly when the origin lies in the open interior of the simplex
spanned by the arguments.  smi is its average over the 2^(n+1) sign flips of
the arguments, which makes it projective with sup-norm 2^(-n).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .linalg import (
    InputError,
    det,
    det_sign_int,
    e0,
    hereditarily_spanning,
    is_zero_vec,
    mat,
    ori,
    require_even,
    standard_basis,
    vec,
)
from .flags import (
    OrientedFlag,
    _IntSpan,
    bracket_selections,
    flag_equal_unoriented,
    make_flag,
)


def _deleted(xs, i):
    return xs[:i] + xs[i + 1:]


def _check_points(vs, allow_zero=False):
    vs = tuple(vec(v) for v in vs)
    if not vs:
        raise InputError("empty point tuple")
    n = require_even(len(vs[0]))
    if any(len(v) != n for v in vs):
        raise InputError("points of mixed dimension")
    if len(vs) != n + 1:
        raise InputError(f"need an (n+1)-tuple, got {len(vs)} points in dimension {n}")
    if not allow_zero and any(is_zero_vec(v) for v in vs):
        raise InputError("zero vector has no projective class")
    return vs, n


def _check_flags(Fs):
    Fs = tuple(Fs)
    if not Fs:
        raise InputError("empty flag tuple")
    if not all(isinstance(F, OrientedFlag) for F in Fs):
        raise InputError("expected OrientedFlag arguments")
    n = require_even(Fs[0].n)
    if any(F.n != n for F in Fs):
        raise InputError("flags of mixed dimension")
    if len(Fs) != n + 1:
        raise InputError(f"need an (n+1)-tuple, got {len(Fs)} flags in dimension {n}")
    return Fs, n


def pcoc(vs) -> Fraction:
    """Product of the n+1 deleted-index orientations; 0 iff not hereditarily
    spanning, and descends to projective points."""
    vs, n = _check_points(vs)
    val = 1
    for i in range(n + 1):
        val *= ori(_deleted(vs, i))
        if val == 0:
            return Fraction(0)
    return Fraction(val)


def coco(Fs) -> Fraction:
    """Product of the deleted-index iterated-bracket orientations; always +-1."""
    Fs, n = _check_flags(Fs)
    val = 1
    for i in range(n + 1):
        val *= ori(bracket_selections(_deleted(Fs, i))[0].basis)
    assert val in (-1, 1)
    return Fraction(val)


def sul(vs) -> Fraction:
    """+-1 when 0 is interior to the open simplex spanned by the arguments
    (all Cramer signs (-1)^i ori(deleted i) equal and nonzero), else 0.
    Total: zero vectors are fine and simply give 0."""
    vs, n = _check_points(vs, allow_zero=True)
    first = 0
    for i in range(n + 1):
        s = ori(_deleted(vs, i))
        if i % 2:
            s = -s
        if s == 0:
            return Fraction(0)
        if first == 0:
            first = s
        elif s != first:
            return Fraction(0)
    return Fraction(first)


def smi(vs) -> Fraction:
    """Average of sul over all 2^(n+1) argument sign flips."""
    vs, n = _check_points(vs)
    total = 0
    nonzero = 0
    for signs in itertools.product((1, -1), repeat=n + 1):
        s = sul(tuple(tuple(sg * x for x in v) for sg, v in zip(signs, vs)))
        if s:
            nonzero += 1
            total += s
    # exactly one antipodal pair of sign patterns sees the origin inside
    assert nonzero == (2 if hereditarily_spanning(vs, n) else 0)
    return Fraction(total, 2 ** (n + 1))


def coboundary(f, xs) -> Fraction:
    """d f evaluated on a (k+2)-tuple: sum of (-1)^i f(xs minus i)."""
    xs = tuple(xs)
    total = Fraction(0)
    for i in range(len(xs)):
        v = f(_deleted(xs, i))
        total += -v if i % 2 else v
    return total


# ---------------------------------------------------------------------------
# Deflation.


def _coc_factorized(Fs, n) -> Fraction:
    mult: dict[tuple[int, int], int] = {}
    val = 1
    for i in range(n + 1):
        kept = [a for a in range(n + 1) if a != i]
        W, levels = bracket_selections([Fs[a] for a in kept])
        val *= ori(W.basis)
        for a, lev in zip(kept, levels):
            key = (a, lev)
            mult[key] = mult.get(key, 0) + 1
    if any(m % 2 for m in mult.values()):
        return Fraction(0)
    assert val in (-1, 1)
    return Fraction(val)


def _flipped_bracket_sign(bases, pattern, n) -> int:
    # bases: per remaining flag, its primitive integer level vectors;
    # pattern bit a*n + l negates level l of slot a.  Honest recomputation:
    # selection runs on the flipped vectors themselves.
    span = _IntSpan()
    chosen = []
    for a, base in enumerate(bases):
        for l, iv in enumerate(base):
            signed = tuple(-x for x in iv) if (pattern >> (a * n + l)) & 1 else iv
            if not span.contains_int(signed):
                chosen.append(list(signed))
                span = span.extended(signed)
                break
        else:
            raise AssertionError("a complete flag always extends a proper subspace")
    return det_sign_int(chosen)


def _coc_naive(Fs, n, budget_bits) -> Fraction:
    m = n * (n + 1)
    if m > budget_bits:
        raise InputError(
            f"naive deflation needs 2^{m} terms, over the budget of 2^{budget_bits}")
    nn = n * n
    tables = []
    for i in range(n + 1):
        bases = [Fs[a].ints for a in range(n + 1) if a != i]
        table = np.empty(1 << nn, dtype=np.int8)
        for pattern in range(1 << nn):
            table[pattern] = _flipped_bracket_sign(bases, pattern, n)
        tables.append(table)
    masks = np.arange(1 << m, dtype=np.int64)
    prod = np.ones(1 << m, dtype=np.int8)
    lo_all = (1 << nn) - 1
    for i in range(n + 1):
        lo = (1 << (n * i)) - 1
        key = (masks & lo) | ((masks >> n) & (lo_all ^ lo))
        prod *= tables[i][key]
    total = int(prod.sum(dtype=np.int64))
    return Fraction(total, 1 << m)


def coc(Fs, mode: str = "factorized", budget_bits: int = 20) -> Fraction:
    """Deflated flag cocycle: the average of coco over all flip combinations."""
    Fs, n = _check_flags(Fs)
    if mode == "factorized":
        return _coc_factorized(Fs, n)
    if mode == "naive":
        return _coc_naive(Fs, n, budget_bits)
    raise InputError(f"unknown coc mode {mode!r}")


# ---------------------------------------------------------------------------
# Witnesses.


def obstruction_witness(n: int):
    """The tuple (e_0, e_1, ..., e_n, e_1+e_2) with d pcoc evaluated on it:
    zero for n = 2 and nonzero for every even n >= 4."""
    require_even(n)
    e = standard_basis(n)
    pts = (e0(n),) + e + (tuple(a + b for a, b in zip(e[0], e[1])),)
    return pts, coboundary(pcoc, pts)


def coboundary_kill_witness(n: int):
    """Flags F_0..F_n (cyclic windows of (e_0, ..., e_n) with e_0 the all-ones
    vector) together with matrices g_0..g_n of determinant -1 such that g_i
    fixes every F_j with j != i as an unoriented flag.  Every assertion is
    checked exactly before returning."""
    require_even(n)
    symbols = (e0(n),) + standard_basis(n)
    flags = tuple(make_flag([symbols[(i + t) % (n + 1)] for t in range(n)])
                  for i in range(n + 1))

    mats = []
    g = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    g[n - 1][n - 1] = Fraction(-1)
    mats.append(mat(g))  # g_0: reflect the last coordinate

    g = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    g[0][0] = Fraction(-1)
    for r in range(1, n):
        g[r][0] = Fraction(-2)
    mats.append(mat(g))  # g_1: first column (-1, -2, ..., -2)

    for i in range(2, n + 1):
        g = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        g[i - 2][i - 2] = Fraction(-1)
        g[i - 2][i - 1] = Fraction(2)
        mats.append(mat(g))  # g_i: [[-1, 2], [0, 1]] block at rows i-1, i

    for i, g in enumerate(mats):
        assert det(g) == -1
        for j, F in enumerate(flags):
            if j != i:
                assert flag_equal_unoriented(F.apply(g), F)
    return flags, tuple(mats)
