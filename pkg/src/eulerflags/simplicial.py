"""Flat bundles over finite simplicial complexes and their Euler numbers.

A bundle is vertex-pair transition data: for every ordered pair inside a
common top simplex, an exact rational matrix of positive determinant, with
g_ii = Id, g_ij g_ji = Id, and the per-simplex cocycle rule g_ij g_jk = g_ik
validated exactly.  A section assigns a nonzero vector to each vertex in the
vertex's own trivialization.

The per-simplex evaluation transports all section values to a base vertex
and feeds them to smi (total) or sul (needs a generic section); independence
of the base vertex is re-verified on every simplex, and a closed chain must
produce an integer in smillie mode.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cocycles import smi
from .linalg import (
    InputError,
    identity,
    is_zero_vec,
    mat,
    mat_inv,
    mat_mul,
    mat_vec,
    ori,
    require_even,
    sig,
    vec,
)


class NonGenericSection(InputError):
    """The sullivan mode needs every deleted determinant that touches a
    boundary-of-hull decision to be nonzero."""


def sul_classify(vs):
    """(value, generic): the sul value plus an exact genericity certificate.

    Cramer signs s_i = (-1)^i ori(deleted i).  All nonzero: generic, value
    +-1 when they agree (origin interior) and 0 when they do not (origin
    outside).  Zeros among the signs put the origin on a span of fewer
    vectors: still certified outside when the remaining signs disagree
    (the kernel direction has mixed signs, so no convex combination hits 0),
    otherwise non-generic.
    """
    n = len(vs[0])
    signs = []
    for i in range(len(vs)):
        s = ori(vs[:i] + vs[i + 1:])
        signs.append(-s if i % 2 else s)
    nonzero = [s for s in signs if s]
    if len(nonzero) == len(signs):
        same = all(s == nonzero[0] for s in nonzero)
        return (Fraction(nonzero[0]) if same else Fraction(0)), True
    if nonzero and any(s != nonzero[0] for s in nonzero):
        return Fraction(0), True
    return Fraction(0), False


def chain_boundary(simplices):
    """Boundary of an integer chain of ordered simplices.

    Faces are canonicalized by sorting their vertices and tracking the
    permutation parity; returns {sorted face: coefficient} without zeros.
    """
    out: dict[tuple, int] = {}
    for verts, c in simplices:
        for i in range(len(verts)):
            face = verts[:i] + verts[i + 1:]
            perm = sorted(range(len(face)), key=lambda k: face[k])
            key = tuple(face[k] for k in perm)
            if len(set(key)) != len(key):
                raise InputError(f"repeated vertex in simplex {verts}")
            par = 1
            seen = list(perm)
            for a in range(len(seen)):  # parity by counting inversions
                for b in range(a + 1, len(seen)):
                    if seen[a] > seen[b]:
                        par = -par
            coeff = out.get(key, 0) + c * (-1) ** i * par
            if coeff:
                out[key] = coeff
            else:
                out.pop(key, None)
    return out


class FlatBundleComplex:
    """n: even rank; vertices: count; simplices: [(vertex tuple, coeff)];
    transitions: {(i, j): matrix}; section: [vector per vertex]."""

    __slots__ = ("n", "vertices", "simplices", "transitions", "section",
                 "tol")

    def __init__(self, n, vertices, simplices, transitions, section,
                 validate=True, tol=0):
        self.n = require_even(n)
        self.vertices = int(vertices)
        self.simplices = tuple((tuple(v), int(c)) for v, c in simplices)
        self.transitions = {}
        for (i, j), g in dict(transitions).items():
            self.transitions[(int(i), int(j))] = mat(g)
        self.section = tuple(vec(s) for s in section)
        self.tol = Fraction(tol)
        if validate:
            self.validate(self.tol)

    def g(self, i: int, j: int):
        if i == j:
            return identity(self.n)
        try:
            return self.transitions[(i, j)]
        except KeyError:
            pass
        try:
            return mat_inv(self.transitions[(j, i)])
        except KeyError:
            raise InputError(f"no transition for vertex pair ({i}, {j})") from None

    def validate(self, tol=0):
        """tol = 0: every identity is required exactly (rational data).
        tol > 0: the inverse-pair and cocycle identities are allowed a
        relative defect up to tol — for transition data that only
        approximates a flat structure (e.g. floating-point holonomies,
        stored as exact dyadic rationals).  Everything else stays exact."""
        tol = Fraction(tol)
        if tol < 0:
            raise InputError("tol must be nonnegative")

        def close(a, b):
            if not tol:
                return a == b
            scale = max([Fraction(1)] + [abs(x) for r in a for x in r]
                        + [abs(x) for r in b for x in r])
            return all(abs(x - y) <= tol * scale
                       for ra, rb in zip(a, b) for x, y in zip(ra, rb))

        n = self.n
        if len(self.section) != self.vertices:
            raise InputError("section must assign a vector to every vertex")
        for s in self.section:
            if len(s) != n or is_zero_vec(s):
                raise InputError("section vectors must be nonzero of dimension n")
        for (i, j), g in self.transitions.items():
            if not (0 <= i < self.vertices and 0 <= j < self.vertices):
                raise InputError(f"transition pair ({i}, {j}) out of range")
            if len(g) != n or any(len(r) != n for r in g):
                raise InputError(f"transition ({i}, {j}) is not {n}x{n}")
            if i == j:
                if g != identity(n):
                    raise InputError(f"transition ({i}, {i}) must be the identity")
            elif sig(g) != 1:
                raise InputError(f"transition ({i}, {j}) must have positive determinant")
        ident = identity(n)
        for verts, _ in self.simplices:
            if len(verts) != n + 1:
                raise InputError(f"simplex {verts} is not an n-simplex (n={n})")
            if len(set(verts)) != len(verts):
                raise InputError(f"repeated vertex in simplex {verts}")
            if any(not 0 <= v < self.vertices for v in verts):
                raise InputError(f"vertex out of range in simplex {verts}")
            for a, b in itertools.permutations(verts, 2):
                gab = self.g(a, b)
                if not close(mat_mul(gab, self.g(b, a)), ident):
                    raise InputError(f"transitions ({a},{b}) and ({b},{a}) are not inverse")
            for a, b, c in itertools.permutations(verts, 3):
                if not close(mat_mul(self.g(a, b), self.g(b, c)), self.g(a, c)):
                    raise InputError(
                        f"cocycle rule fails on ({a},{b},{c}) within simplex {verts}")

    def simplex_sections(self, verts, base: int = 0):
        """Section values of a simplex transported to the trivialization of
        the base-th vertex, in stored vertex order."""
        vb = verts[base]
        return tuple(mat_vec(self.g(vb, vj), self.section[vj]) for vj in verts)


def _simplex_value(bundle: FlatBundleComplex, verts, mode: str) -> Fraction:
    vals = []
    for base in range(len(verts)):
        vs = bundle.simplex_sections(verts, base)
        if mode == "smillie":
            vals.append(smi(vs))
        else:
            v, generic = sul_classify(vs)
            if not generic:
                raise NonGenericSection(
                    f"section is not generic on simplex {verts} (base {base})")
            vals.append(v)
    if any(v != vals[0] for v in vals):
        if bundle.tol != 0:
            # Inexact transitions transport this section inconsistently:
            # the configuration sits inside the noise band, so no value
            # can be certified.  A genericity failure of the section, not
            # a library invariant violation.
            raise NonGenericSection(
                f"section cannot be certified at tolerance {bundle.tol} on "
                f"simplex {verts}: per-base values disagree")
        raise AssertionError("base-vertex independence failed")
    if mode == "smillie":
        assert abs(vals[0]) <= Fraction(1, 2 ** bundle.n)
    return vals[0]


def euler_number(bundle: FlatBundleComplex, mode: str = "smillie"):
    """(raw, integer, per_simplex): the chain pairing of the chosen cocycle.

    raw is the exact rational total; integer is its value as an int on a
    closed chain (None when the chain is not closed).  smillie mode is
    total on exact bundles; on tolerant bundles it raises
    NonGenericSection for sections the noisy transitions transport
    inconsistently.  sullivan mode raises NonGenericSection on any
    non-generic section.
    """
    if mode not in ("smillie", "sullivan"):
        raise InputError(f"unknown euler mode {mode!r}")
    per_simplex = []
    total = Fraction(0)
    for verts, c in bundle.simplices:
        v = _simplex_value(bundle, verts, mode)
        per_simplex.append(v)
        total += c * v
    if chain_boundary(bundle.simplices):
        return total, None, per_simplex
    assert total.denominator == 1, f"non-integral total {total} on a closed chain"
    return total, int(total), per_simplex


def gauge_transform(bundle: FlatBundleComplex, hs) -> FlatBundleComplex:
    """Compose every trivialization with h_x: s'_x = h_x s_x and
    g'_xy = h_x g_xy h_y^(-1).  Per-simplex values are unchanged."""
    hs = [mat(h) for h in hs]
    if len(hs) != bundle.vertices:
        raise InputError("need one gauge matrix per vertex")
    for h in hs:
        if sig(h) != 1:
            raise InputError("gauge matrices must have positive determinant")
    transitions = {(i, j): mat_mul(mat_mul(hs[i], g), mat_inv(hs[j]))
                   for (i, j), g in bundle.transitions.items()}
    section = [mat_vec(hs[x], s) for x, s in enumerate(bundle.section)]
    return FlatBundleComplex(bundle.n, bundle.vertices, bundle.simplices,
                             transitions, section, tol=bundle.tol)


def with_section(bundle: FlatBundleComplex, section) -> FlatBundleComplex:
    return FlatBundleComplex(bundle.n, bundle.vertices, bundle.simplices,
                             bundle.transitions, section, tol=bundle.tol)
