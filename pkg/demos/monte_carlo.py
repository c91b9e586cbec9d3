"""Monte Carlo estimates of the averaged cocycle integral, in both the
unit-ball and projective sampling modes."""

import random

from eulerflags import itu_estimate

I2 = [[1.0, 0.0], [0.0, 1.0]]
est = itu_estimate([I2] * 3, samples=200_000, seed=1)
print(f"identity tuple : mean {est.mean:+.5f} +- {est.stderr:.5f} "
      f"({est.samples} samples, {est.mode})")

rng = random.Random(2)
gs = [[[rng.uniform(-2, 2) for _ in range(2)] for _ in range(2)]
      for _ in range(3)]
a = itu_estimate(gs, samples=200_000, seed=3, mode="ball")
b = itu_estimate(gs, samples=200_000, seed=4, mode="projective")
print(f"random tuple   : ball {a.mean:+.5f} +- {a.stderr:.5f}")
print(f"                 proj {b.mean:+.5f} +- {b.stderr:.5f}")
print("bound |mean| <= 2^-n =", max(abs(a.mean), abs(b.mean)) <= 0.25)
