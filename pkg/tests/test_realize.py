"""Point realization of flag tuples: every deleted-pair orientation
target must be hit exactly, and the output must span hereditarily."""

import pytest

from eulerflags.flags import bracket, make_flag, realize_points
from eulerflags.linalg import InputError, hereditarily_spanning, ori
from eulerflags.randgen import RationalSampler


def _check_targets(Fs, xs, n):
    k = len(Fs)
    for i in range(k):
        for j in range(i + 1, k):
            keep = [t for t in range(k) if t not in (i, j)]
            assert ori([xs[t] for t in keep]) \
                == ori(bracket([Fs[t] for t in keep]).basis)


def test_standard_flag_copies():
    std = make_flag(((1, 0), (0, 1)))
    Fs = (std,) * 4
    xs = realize_points(Fs)
    assert hereditarily_spanning(xs, 2)
    _check_targets(Fs, xs, 2)


@pytest.mark.parametrize("n,trials", [(2, 30), (4, 5)])
def test_random_flags(n, trials):
    s = RationalSampler(101 + n)
    for _ in range(trials):
        Fs = s.flags(n, n + 2)
        xs = realize_points(Fs)
        assert hereditarily_spanning(xs, n)
        _check_targets(Fs, xs, n)


def test_spanning_flagstaff_targets():
    # with hereditarily spanning staffs the targets are staff orientations
    s = RationalSampler(3)
    n = 2
    for _ in range(10):
        Fs = s.spanning_flagstaff_flags(n, n + 2)
        xs = realize_points(Fs)
        for i in range(n + 2):
            for j in range(i + 1, n + 2):
                keep = [t for t in range(n + 2) if t not in (i, j)]
                staffs = [Fs[t].basis[0] for t in keep]
                assert ori([xs[t] for t in keep]) == ori(staffs)


def test_arity_check():
    std = make_flag(((1, 0), (0, 1)))
    with pytest.raises(InputError):
        realize_points((std, std, std))  # needs n+2 flags
