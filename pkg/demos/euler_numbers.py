"""Euler numbers of flat rank-2 bundles over the closed genus-2 surface:
the trivial and an integral representation give 0; a discrete PSL(2,R)
holonomy lifted to SL(2,R) (float data, validated at tolerance 1e-9)
gives 1, matching the independent rotation-number oracle."""

from fractions import Fraction

from eulerflags import (euler_number, euler_number_oracle,
                        fuchsian_octagon_rep, genus_surface_bundle, identity,
                        rational_flat_rep)

I2 = identity(2)

for name, rep, tol in (("trivial ", [I2] * 4, 0),
                       ("integral", rational_flat_rep(), 0),
                       ("fuchsian", fuchsian_octagon_rep(),
                        Fraction(1, 10 ** 9))):
    bundle = genus_surface_bundle(rep, seed=0, tol=tol)
    raw, e, per = euler_number(bundle)
    oracle = euler_number_oracle(rep)
    print(f"{name}: simplicial e = {e}, rotation-number oracle = {oracle}, "
          f"simplices = {len(per)}")
