"""Seeded random rational inputs for the property suites.

Numerators are uniform in [-m, m] and denominators in [1, m] (default
m = 100), which keeps fraction-free elimination fast while exercising
generic position.  Degenerate inputs are constructed deliberately by
planting linear dependencies, never by waiting for the RNG to collide.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .flags import OrientedFlag, make_flag
from .linalg import hereditarily_spanning, is_zero_vec, ori, sig


class RationalSampler:
    def __init__(self, seed: int, m: int = 100):
        self.rng = random.Random(seed)
        self.m = m

    def fraction(self) -> Fraction:
        return Fraction(self.rng.randint(-self.m, self.m),
                        self.rng.randint(1, self.m))

    def vector(self, n: int):
        return tuple(self.fraction() for _ in range(n))

    def nonzero_vector(self, n: int):
        while True:
            v = self.vector(n)
            if not is_zero_vec(v):
                return v

    def matrix(self, n: int):
        return tuple(self.vector(n) for _ in range(n))

    def gl_matrix(self, n: int):
        while True:
            g = self.matrix(n)
            try:
                if sig(g):
                    return g
            except Exception:
                continue

    def glp_matrix(self, n: int):
        """Random element of GL_n^+ (positive determinant)."""
        g = self.gl_matrix(n)
        if sig(g) < 0:
            g = (tuple(-x for x in g[0]),) + g[1:]
        return g

    def flag(self, n: int) -> OrientedFlag:
        return make_flag(self.gl_matrix(n))

    def flags(self, n: int, count: int):
        return tuple(self.flag(n) for _ in range(count))

    def spanning_tuple(self, n: int, count: int):
        """count >= n vectors, hereditarily spanning."""
        while True:
            vs = tuple(self.nonzero_vector(n) for _ in range(count))
            if hereditarily_spanning(vs, n):
                return vs

    def non_spanning_tuple(self, n: int, count: int):
        """count vectors with a planted dependent n-subset, all nonzero."""
        while True:
            vs = list(self.spanning_tuple(n, count))
            if self.rng.random() < 0.5:
                # proportional pair
                i, j = self.rng.sample(range(count), 2)
                lam = Fraction(0)
                while lam == 0:
                    lam = self.fraction()
                vs[i] = tuple(lam * x for x in vs[j])
            else:
                # park one vector inside the span of n-1 others
                picks = self.rng.sample(range(count), n)
                i, rest = picks[0], picks[1:]
                coeffs = [self.fraction() for _ in rest]
                vs[i] = tuple(sum(c * vs[r][k] for c, r in zip(coeffs, rest))
                              for k in range(n))
            if not is_zero_vec(vs[i]) and not hereditarily_spanning(vs, n):
                return tuple(vs)

    def tuple_with_degeneracies(self, n: int, count: int, p_degenerate=0.5):
        if self.rng.random() < p_degenerate:
            return self.non_spanning_tuple(n, count)
        return self.spanning_tuple(n, count)

    def spanning_flagstaff_flags(self, n: int, count: int):
        """Flags whose level-1 vectors form a hereditarily spanning tuple."""
        staffs = self.spanning_tuple(n, count)
        out = []
        for s in staffs:
            while True:
                rest = [self.vector(n) for _ in range(n - 1)]
                if ori([s] + rest) != 0:
                    out.append(make_flag([s] + rest))
                    break
        return tuple(out)
