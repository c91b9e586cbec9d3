"""Print the two explicit witnesses: the tuple showing d pcoc is not
identically zero for n >= 4, and the determinant -1 matrices that kill
the class of coco on unoriented flags."""

from eulerflags import (coboundary_kill_witness, det, flag_equal_unoriented,
                        obstruction_witness)


for n in (2, 4, 6):
    pts, val = obstruction_witness(n)
    print(f"n={n}: d pcoc at the witness tuple = {val}"
          + ("  (n = 2 is the only vanishing case)" if n == 2 else ""))

print()
for n in (2, 4):
    flags, mats = coboundary_kill_witness(n)
    dets = [str(det(g)) for g in mats]
    fixed = all(flag_equal_unoriented(Fl.apply(g), Fl)
                for i, g in enumerate(mats)
                for j, Fl in enumerate(flags) if j != i)
    print(f"n={n}: {len(mats)} matrices, determinants {dets}, "
          f"fix the other flags: {fixed}")
    if n == 2:
        for g in mats:
            print("   ", [[str(x) for x in row] for row in g])
