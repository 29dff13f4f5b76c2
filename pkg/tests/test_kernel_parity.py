"""The compiled kernel and the pure-Python twin must agree bit for bit."""

import random

import pytest

from csgroups import _kernel_py as py

try:
    from csgroups import _kernel_c as c
except ImportError:
    c = None

needs_c = pytest.mark.skipif(c is None, reason="compiled kernel not built")


def _random_delta(rng, m, n):
    vals = sorted(rng.randrange(n + 1) for _ in range(m + 1))
    return tuple(vals)


@needs_c
def test_parity_on_random_normal_forms():
    rng = random.Random(99)
    for _ in range(3000):
        m, n, l = rng.randrange(5), rng.randrange(5), rng.randrange(5)
        rot_m = rng.choice([0, 2 * (m + 1), 3 * (m + 1)])
        rot_l = rng.choice([0, 2 * (l + 1), 3 * (l + 1)])
        su, sv = rng.randrange(2), rng.randrange(2)
        au = rng.randrange(rot_m) if rot_m else rng.randrange(-40, 40)
        av = rng.randrange(rot_l) if rot_l else rng.randrange(-40, 40)
        du = _random_delta(rng, m, n)
        dv = _random_delta(rng, l, m)
        quat = rng.choice([0, (n + 1)])

        assert c.window_of(du, su, au, m, n) == py.window_of(du, su, au, m, n)
        assert c.compose_nf(du, su, au, m, n, dv, sv, av, l, rot_l, quat) == \
            py.compose_nf(du, su, au, m, n, dv, sv, av, l, rot_l, quat)
        assert c.star_nf(su, au, du, m, n, rot_m) == py.star_nf(su, au, du, m, n, rot_m)
        rot_n = rng.choice([0, n + 1, 2 * (n + 1)])
        assert c.dual_nf(du, su, au, m, n, rot_n) == py.dual_nf(du, su, au, m, n, rot_n)
        assert c.perm_of(du, su, au, m, n) == py.perm_of(du, su, au, m, n)


@needs_c
def test_parity_factor_window():
    rng = random.Random(5)
    for _ in range(3000):
        m, n = rng.randrange(5), rng.randrange(5)
        s = rng.randrange(2)
        base = rng.randrange(-30, 30)
        steps = [rng.randrange(3) for _ in range(m)]
        if sum(steps) > n + 1:
            steps = [0] * m
        if s == 0:
            vals = [base]
            for st in steps:
                vals.append(vals[-1] + st)
        else:
            vals = [base]
            for st in steps:
                vals.append(vals[-1] - st)
        rot = rng.choice([0, m + 1, 2 * (m + 1)])
        assert c.factor_window(tuple(vals), m, n, s, rot) == \
            py.factor_window(tuple(vals), m, n, s, rot)


@needs_c
def test_compiled_kernel_overflow_falls_back():
    """Huge paracyclic payloads overflow int64 in the compiled kernel and
    must be served by the fallback dispatcher."""
    from csgroups import kernel

    big = 2 ** 80
    want = py.window_of((0, 1), 0, big, 1, 1)
    assert kernel.window_of((0, 1), 0, big, 1, 1) == want
    with pytest.raises(OverflowError):
        c.window_of((0, 1), 0, big, 1, 1)
