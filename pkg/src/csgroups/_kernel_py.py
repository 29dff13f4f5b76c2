"""Pure-Python kernel for morphism arithmetic in the planar families.

A morphism [m] -> [n] is modelled by a monotone map f: Z -> Z satisfying

    f(l + m + 1) = f(l) + (n + 1)   (order preserving, s = 0)
    f(l + m + 1) = f(l) - (n + 1)   (order reversing, s = 1)

and is stored in normal form (delta, s, a): delta is the window
(f(0..m) of the simplicial part, a monotone tuple inside [0, n]) and
(s, a) is the automorphism payload acting by l |-> l - a resp. a - l.
For the N-cyclic/N-dihedral families, maps are classes modulo the shift
N(n+1) of the target; a is then reduced modulo rot_src = N(m+1).  The
quaternionic composition adds the central half-turn when both factors
reverse orientation; callers pass that shift explicitly.

Everything here is plain integer arithmetic on small tuples; the module
has a compiled twin (_kernel_c) with identical semantics.
"""


def ext_value(vals, m, n, s, l):
    """Value at l of the equivariant extension of the window vals."""
    q, r = divmod(l, m + 1)
    if s == 0:
        return vals[r] + (n + 1) * q
    return vals[r] - (n + 1) * q


def factor_window(vals, m, n, s, rot_src):
    """Split a morphism window into (delta window, shift a).

    For s = 0 the shift a is the unique integer with f(a-1) < 0 <= f(a);
    for s = 1 the unique one with f(a) >= 0 > f(a+1).  rot_src > 0 reduces
    a into [0, rot_src).
    """
    p = m + 1
    h = n + 1
    if s == 0:
        a = None
        for j in range(p):
            t = -(vals[j] // h)  # smallest t with vals[j] + h*t >= 0
            cand = j + p * t
            if a is None or cand < a:
                a = cand
        delta = tuple(ext_value(vals, m, n, 0, a + i) for i in range(p))
    else:
        a = None
        for j in range(p):
            t = vals[j] // h  # largest t with vals[j] - h*t >= 0
            cand = j + p * t
            if a is None or cand > a:
                a = cand
        delta = tuple(ext_value(vals, m, n, 1, a - i) for i in range(p))
    if rot_src:
        a %= rot_src
    return delta, a


def window_of(delta, s, a, m, n):
    """Window of the full morphism i(delta) o (s, a)."""
    if s == 0:
        return tuple(ext_value(delta, m, n, 0, i - a) for i in range(m + 1))
    return tuple(ext_value(delta, m, n, 0, a - i) for i in range(m + 1))


def compose_nf(du, su, au, m, n, dv, sv, av, l, rot_l, quat_shift):
    """Normal form of u o v for u: [m]->[n], v: [l]->[m].

    quat_shift is M(n+1) for the quaternionic family (applied when both
    factors reverse orientation) and 0 otherwise.
    """
    wv = window_of(dv, sv, av, l, m)
    sw = su ^ sv
    if su == 0:
        wvals = [ext_value(du, m, n, 0, x - au) for x in wv]
    else:
        wvals = [ext_value(du, m, n, 0, au - x) for x in wv]
    if quat_shift and su == 1 and sv == 1:
        wvals = [x - quat_shift for x in wvals]
    return factor_window(tuple(wvals), l, n, sw, rot_l) + (sw,)


def star_nf(s, a, phi, m, n, rot_m):
    """Split g o i(phi) for g = (s, a) in Aut([n]), phi: [m] -> [n].

    Returns (delta, a', s): the unique pair with g o phi = i(delta) o (s, a').
    """
    if s == 0:
        vals = tuple(x - a for x in phi)
    else:
        vals = tuple(a - x for x in phi)
    delta, a2 = factor_window(vals, m, n, s, rot_m)
    return delta, a2, s


def gap_preimage(vals, m, n, s, c):
    """Index of the interstice of the source mapping onto interstice c.

    Interstice c is the gap (c, c+1); for s = 0 the preimage gap sits at
    max{k : f(k) <= c}, for s = 1 at max{k : f(k) >= c + 1}.
    """
    p = m + 1
    h = n + 1
    best = None
    for j in range(p):
        if s == 0:
            t = (c - vals[j]) // h
        else:
            t = (vals[j] - c - 1) // h
        cand = j + p * t
        if best is None or cand > best:
            best = cand
    return best


def dual_nf(delta, s, a, m, n, rot_n):
    """Interstice dual of a morphism: [m] -> [n] becomes [n] -> [m].

    Convention: D(f) = rho o f_gap o rho with rho(l) = -l, where f_gap
    sends an interstice to its preimage interstice.  D is involutive and
    contravariant; it fixes rotations.
    """
    w = window_of(delta, s, a, m, n)
    dual_vals = tuple(-gap_preimage(w, m, n, s, -j) for j in range(n + 1))
    d2, a2 = factor_window(dual_vals, n, m, s, rot_n)
    return d2, a2, s


def perm_of(delta, s, a, m, n):
    """Underlying set map {0..m} -> {0..n} of the morphism."""
    w = window_of(delta, s, a, m, n)
    h = n + 1
    return tuple(x % h for x in w)


def group_compose(s1, a1, s2, a2, rot, quat_shift):
    """Product (s1,a1) o (s2,a2) in Aut([n]); rot = 0 means no reduction."""
    if s2 == 0:
        a = a1 + a2
    else:
        a = a2 - a1
    if quat_shift and s1 == 1 and s2 == 1:
        a += quat_shift
    if rot:
        a %= rot
    return s1 ^ s2, a


def group_inverse(s, a, rot, quat_shift):
    """Inverse of (s, a) in Aut([n])."""
    if s == 0:
        ai = -a
    else:
        # (1,a) o (1,a) = (0, quat_shift); correct by the central part
        ai = a - quat_shift if quat_shift else a
        if rot:
            ai %= rot
        return 1, ai
    if rot:
        ai %= rot
    return 0, ai
