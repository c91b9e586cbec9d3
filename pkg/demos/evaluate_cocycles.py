"""Evaluate each cocycle on small rational inputs and check the exact
relation pcoc = (-1)^(n/2) 2^n smi on a random sample."""

from fractions import Fraction

from eulerflags import coboundary, coc, coco, flagstaff, pcoc, smi, sul
from eulerflags.randgen import RationalSampler

F = Fraction

e0, e1, e2 = (F(1), F(1)), (F(1), F(0)), (F(0), F(1))
print("pcoc(e0, e1, e2) =", pcoc((e0, e1, e2)))
print("sul (e0, e1, e2) =", sul((e0, e1, e2)))
print("smi (e0, e1, e2) =", smi((e0, e1, e2)))

s = RationalSampler(7)
Fs = s.flags(2, 3)
print("coco on random flags =", coco(Fs))
print("coc  on random flags =", coc(Fs))

Gs = s.spanning_flagstaff_flags(2, 3)
print("coc = pcoc of the flagstaffs:",
      coc(Gs) == pcoc([flagstaff(G) for G in Gs]))

print("d coco on 4 random flags =", coboundary(coco, s.flags(2, 4)))
print("d pcoc on 4 spanning pts =", coboundary(pcoc, s.spanning_tuple(2, 4)))

for _ in range(200):
    vs = s.tuple_with_degeneracies(2, 3)
    assert pcoc(vs) == -4 * smi(vs)
print("pcoc = (-1)^(n/2) 2^n smi held exactly on 200 samples (n = 2)")
