"""Exact kernels: ori, sig, spanning tests, projective form, frame moves."""

from fractions import Fraction

import pytest

from eulerflags.linalg import (InputError, OddDimensionError, e0,
                               frame_transform, hereditarily_spanning,
                               mat_vec, ori, projective_normalize,
                               require_even, sig, standard_basis)
from eulerflags.randgen import RationalSampler

F = Fraction


def test_ori_pinned_values():
    assert ori(((1, 0), (0, 1))) == 1
    assert ori(((0, 1), (1, 0))) == -1
    assert ori(((1, 2), (2, 4))) == 0


def test_sig_pinned_values():
    assert sig(((1, 0), (0, 1))) == 1
    assert sig(((-1, 0), (0, 1))) == -1
    assert sig(((0, 1), (1, 0))) == -1
    with pytest.raises(InputError):
        sig(((1, 2), (2, 4)))


def test_ori_dimension_mismatch():
    with pytest.raises(InputError):
        ori(((1, 0, 0), (0, 1, 0)))


@pytest.mark.parametrize("n", [2, 4])
def test_ori_alternating_and_equivariant(n):
    s = RationalSampler(11 + n)
    for _ in range(50):
        vs = [s.nonzero_vector(n) for _ in range(n)]
        i, j = s.rng.sample(range(n), 2)
        ws = list(vs)
        ws[i], ws[j] = ws[j], ws[i]
        assert ori(ws) == -ori(vs)
        g = s.gl_matrix(n)
        assert ori([mat_vec(g, v) for v in vs]) == sig(g) * ori(vs)
        lam = F(0)
        while lam == 0:
            lam = s.fraction()
        scaled = list(vs)
        scaled[i] = tuple(lam * x for x in vs[i])
        assert ori(scaled) == (1 if lam > 0 else -1) * ori(vs)


def test_hereditarily_spanning_pinned():
    assert hereditarily_spanning(((1, 1), (1, 0), (0, 1)))
    assert not hereditarily_spanning(((1, 0), (0, 1), (1, 0)))
    assert hereditarily_spanning(((1, 1), (1, 2), (1, 3), (1, 4)))
    with pytest.raises(InputError):
        hereditarily_spanning(((1, 0),), 2)  # k < n


def test_projective_normalize_pinned():
    assert projective_normalize((F(-2), F(4))) == (1, -2)
    assert projective_normalize((F(0), F(-3))) == (0, 1)
    assert projective_normalize((F(2, 3), F(4, 3))) == (1, 2)
    with pytest.raises(InputError):
        projective_normalize((F(0), F(0)))


def test_projective_normalize_scale_invariant():
    s = RationalSampler(5)
    for _ in range(50):
        v = s.nonzero_vector(4)
        lam = F(0)
        while lam == 0:
            lam = s.fraction()
        assert projective_normalize(tuple(lam * x for x in v)) \
            == projective_normalize(v)


def test_frame_transform_pinned():
    n = 2
    e = standard_basis(n)
    idm = frame_transform((e0(n),) + e)
    assert idm == ((F(1), F(0)), (F(0), F(1)))
    g = frame_transform(((F(1), F(1)), (F(-1), F(1)), (F(0), F(1))))
    assert g == ((F(1), F(0)), (F(1, 2), F(1, 2)))
    perm = frame_transform((e0(n), e[1], e[0]))
    assert perm == ((F(0), F(1)), (F(1), F(0)))


@pytest.mark.parametrize("n", [2, 4])
def test_frame_transform_maps_to_frame(n):
    s = RationalSampler(n)
    targets = (e0(n),) + standard_basis(n)
    for _ in range(25):
        xs = s.spanning_tuple(n, n + 1)
        g = frame_transform(xs)
        for x, t in zip(xs, targets):
            assert projective_normalize(mat_vec(g, x)) \
                == projective_normalize(t)


def test_frame_transform_rejects_non_spanning():
    with pytest.raises(InputError):
        frame_transform(((1, 0), (0, 1), (1, 0)))
    with pytest.raises(InputError):
        # x_0 = x_1 + x_2 + x_3: zero coefficient on x_4
        e = standard_basis(4)
        frame_transform(((1, 1, 1, 0),) + e)


def test_require_even():
    assert require_even(4) == 4
    with pytest.raises(OddDimensionError):
        require_even(3)
    with pytest.raises(InputError):
        require_even(0)
