"""Flat-bundle validation, chain boundaries, and Euler-number evaluation
on small hand-built complexes."""

from fractions import Fraction

import pytest

from eulerflags.linalg import InputError, identity
from eulerflags.randgen import RationalSampler
from eulerflags.simplicial import (FlatBundleComplex, NonGenericSection,
                                   chain_boundary, euler_number,
                                   gauge_transform, with_section)

F = Fraction
I2 = identity(2)


def _ident_transitions(simplices):
    ts = {}
    for verts, _ in simplices:
        for a in verts:
            for b in verts:
                if a != b:
                    ts[(a, b)] = I2
    return ts


def _sections(nverts, seed=0):
    s = RationalSampler(seed, m=9)
    return [s.nonzero_vector(2) for _ in range(nverts)]


def _triangle(seed=0):
    simplices = [((0, 1, 2), 1)]
    return FlatBundleComplex(2, 3, simplices, _ident_transitions(simplices),
                             _sections(3, seed))


def _sphere(seed=0):
    # boundary of the 3-simplex, coherently oriented
    simplices = [((1, 2, 3), 1), ((0, 2, 3), -1), ((0, 1, 3), 1),
                 ((0, 1, 2), -1)]
    return FlatBundleComplex(2, 4, simplices, _ident_transitions(simplices),
                             _sections(4, seed))


def test_validate_accepts_trivial():
    _triangle()


def test_validate_rejects_negative_determinant():
    simplices = [((0, 1, 2), 1)]
    ts = _ident_transitions(simplices)
    ts[(0, 1)] = ((F(-1), F(0)), (F(0), F(1)))
    with pytest.raises(InputError, match="determinant"):
        FlatBundleComplex(2, 3, simplices, ts, _sections(3))


def test_validate_rejects_broken_cocycle():
    simplices = [((0, 1, 2), 1)]
    ts = _ident_transitions(simplices)
    ts[(0, 1)] = ((F(2), F(0)), (F(0), F(1)))
    ts[(1, 0)] = ((F(1, 2), F(0)), (F(0), F(1)))
    with pytest.raises(InputError, match="cocycle"):
        FlatBundleComplex(2, 3, simplices, ts, _sections(3))


def test_validate_rejects_non_inverse_pair():
    simplices = [((0, 1, 2), 1)]
    ts = _ident_transitions(simplices)
    ts[(1, 0)] = ((F(2), F(0)), (F(0), F(1)))
    with pytest.raises(InputError, match="inverse"):
        FlatBundleComplex(2, 3, simplices, ts, _sections(3))


def test_validate_rejects_bad_sections():
    simplices = [((0, 1, 2), 1)]
    ts = _ident_transitions(simplices)
    with pytest.raises(InputError, match="section"):
        FlatBundleComplex(2, 3, simplices, ts,
                          [(F(1), F(0)), (F(0), F(0)), (F(1), F(1))])
    with pytest.raises(InputError, match="section"):
        FlatBundleComplex(2, 3, simplices, ts, _sections(2))


def test_validate_rejects_odd_rank():
    with pytest.raises(InputError):
        FlatBundleComplex(3, 3, [((0, 1, 2, 3), 1)], {}, _sections(3))


def test_validate_rejects_bad_simplices():
    with pytest.raises(InputError, match="repeated"):
        FlatBundleComplex(2, 3, [((0, 1, 1), 1)],
                          _ident_transitions([((0, 1, 2), 1)]), _sections(3))
    with pytest.raises(InputError, match="range"):
        FlatBundleComplex(2, 3, [((0, 1, 5), 1)],
                          {(0, 1): I2, (0, 5): I2, (1, 5): I2}, _sections(3))


def test_missing_transition():
    simplices = [((0, 1, 2), 1)]
    ts = {(0, 1): I2, (0, 2): I2}  # (1,2) absent in both directions
    with pytest.raises(InputError, match="no transition"):
        FlatBundleComplex(2, 3, simplices, ts, _sections(3))


def test_inverse_fallback():
    simplices = [((0, 1, 2), 1)]
    g = ((F(2), F(1)), (F(1), F(1)))
    ts = {(0, 1): g, (0, 2): I2, (1, 2): ((F(1), F(-1)), (F(-1), F(2)))}
    b = FlatBundleComplex(2, 3, simplices, ts, _sections(3))
    gi = b.g(1, 0)
    assert b.g(0, 1) == g
    assert gi == ((F(1), F(-1)), (F(-1), F(2)))


def test_chain_boundary_pinned():
    assert chain_boundary(_sphere().simplices) == {}
    tri = chain_boundary(_triangle().simplices)
    assert len(tri) == 3
    # two triangles glued along an edge, compatible orientations
    simplices = [((0, 1, 2), 1), ((1, 3, 2), 1)]
    bd = chain_boundary(simplices)
    assert len(bd) == 4
    assert (1, 2) not in bd and (2, 1) not in bd


def test_open_chain_has_no_integer():
    raw, integer, per = euler_number(_triangle(seed=4))
    assert integer is None
    assert len(per) == 1


def test_sphere_euler_zero():
    for seed in range(6):
        raw, integer, per = euler_number(_sphere(seed=seed))
        assert raw == 0 and integer == 0
        assert all(abs(v) <= F(1, 4) for v in per)


def test_unknown_mode():
    with pytest.raises(InputError):
        euler_number(_sphere(), mode="magic")


def test_sullivan_non_generic_section():
    # origin on the open segment between s_0 and s_1: hull-boundary case
    simplices = [((0, 1, 2), 1)]
    sec = [(F(1), F(0)), (F(-1), F(0)), (F(0), F(1))]
    b = FlatBundleComplex(2, 3, simplices, _ident_transitions(simplices), sec)
    with pytest.raises(NonGenericSection):
        euler_number(b, mode="sullivan")
    euler_number(b, mode="smillie")  # smillie mode stays total


def test_gauge_transform_checks():
    b = _sphere()
    with pytest.raises(InputError, match="positive determinant"):
        gauge_transform(b, [((F(-1), F(0)), (F(0), F(1)))] * 4)
    with pytest.raises(InputError, match="per vertex"):
        gauge_transform(b, [I2] * 3)


def test_gauge_and_section_invariance():
    s = RationalSampler(12, m=9)
    b = _sphere(seed=2)
    hs = [s.glp_matrix(2) for _ in range(4)]
    assert euler_number(gauge_transform(b, hs))[1] == 0
    assert euler_number(with_section(b, _sections(4, seed=9)))[1] == 0


def test_negative_tol_rejected():
    simplices = [((0, 1, 2), 1)]
    with pytest.raises(InputError, match="tol"):
        FlatBundleComplex(2, 3, simplices, _ident_transitions(simplices),
                          _sections(3), tol=F(-1, 10))
