# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for morphism arithmetic; semantics identical to
_kernel_py (which documents the conventions).  Arguments exceeding 64-bit
range raise OverflowError; the dispatcher retries in pure Python."""

from libc.stdlib cimport free, malloc

cdef long long _floordiv(long long a, long long b) noexcept:
    # b > 0 always; C division truncates toward zero
    cdef long long q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef long long _ext(long long* vals, long long m, long long n, long long s,
                    long long l) noexcept:
    cdef long long p = m + 1
    cdef long long q = _floordiv(l, p)
    cdef long long r = l - q * p
    if s == 0:
        return vals[r] + (n + 1) * q
    return vals[r] - (n + 1) * q


cdef long long* _tolist(vals, long long length) except NULL:
    cdef long long* buf = <long long*> malloc(length * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef long long i
    try:
        for i in range(length):
            buf[i] = vals[i]
    except BaseException:
        free(buf)
        raise
    return buf


def ext_value(vals, m, n, s, l):
    cdef long long cm = m, cn = n, cs = s, cl = l
    cdef long long* buf = _tolist(vals, cm + 1)
    try:
        return _ext(buf, cm, cn, cs, cl)
    finally:
        free(buf)


cdef long long _factor_shift(long long* vals, long long m, long long n,
                             long long s) noexcept:
    cdef long long p = m + 1
    cdef long long h = n + 1
    cdef long long j, t, cand, a = 0
    cdef bint first = True
    for j in range(p):
        if s == 0:
            t = -_floordiv(vals[j], h)
            cand = j + p * t
            if first or cand < a:
                a = cand
                first = False
        else:
            t = _floordiv(vals[j], h)
            cand = j + p * t
            if first or cand > a:
                a = cand
                first = False
    return a


cdef tuple _factor(long long* vals, long long m, long long n, long long s,
                   long long rot_src):
    cdef long long a = _factor_shift(vals, m, n, s)
    cdef long long i
    cdef list delta = []
    if s == 0:
        for i in range(m + 1):
            delta.append(_ext(vals, m, n, 0, a + i))
    else:
        for i in range(m + 1):
            delta.append(_ext(vals, m, n, 1, a - i))
    if rot_src:
        a %= rot_src
        if a < 0:
            a += rot_src
    return tuple(delta), a


def factor_window(vals, m, n, s, rot_src):
    cdef long long cm = m, cn = n, cs = s, crot = rot_src
    cdef long long* buf = _tolist(vals, cm + 1)
    try:
        return _factor(buf, cm, cn, cs, crot)
    finally:
        free(buf)


def window_of(delta, s, a, m, n):
    cdef long long cm = m, cn = n, cs = s, ca = a, i
    cdef long long* buf = _tolist(delta, cm + 1)
    cdef list out = []
    try:
        if cs == 0:
            for i in range(cm + 1):
                out.append(_ext(buf, cm, cn, 0, i - ca))
        else:
            for i in range(cm + 1):
                out.append(_ext(buf, cm, cn, 0, ca - i))
        return tuple(out)
    finally:
        free(buf)


def compose_nf(du, su, au, m, n, dv, sv, av, l, rot_l, quat_shift):
    cdef long long cm = m, cn = n, cl = l
    cdef long long csu = su, cau = au, csv = sv, cav = av
    cdef long long crot = rot_l, cquat = quat_shift
    cdef long long i, x, sw
    cdef long long* bu = _tolist(du, cm + 1)
    cdef long long* bv = NULL
    cdef long long* w = NULL
    try:
        bv = _tolist(dv, cl + 1)
        w = <long long*> malloc((cl + 1) * sizeof(long long))
        if w == NULL:
            raise MemoryError()
        sw = csu ^ csv
        for i in range(cl + 1):
            if csv == 0:
                x = _ext(bv, cl, cm, 0, i - cav)
            else:
                x = _ext(bv, cl, cm, 0, cav - i)
            if csu == 0:
                x = _ext(bu, cm, cn, 0, x - cau)
            else:
                x = _ext(bu, cm, cn, 0, cau - x)
            if cquat and csu == 1 and csv == 1:
                x -= cquat
            w[i] = x
        delta, a = _factor(w, cl, cn, sw, crot)
        return delta, a, sw
    finally:
        free(bu)
        if bv != NULL:
            free(bv)
        if w != NULL:
            free(w)


def star_nf(s, a, phi, m, n, rot_m):
    cdef long long cs = s, ca = a, cm = m, cn = n, crot = rot_m
    cdef long long i
    cdef long long* vals = <long long*> malloc((cm + 1) * sizeof(long long))
    if vals == NULL:
        raise MemoryError()
    try:
        for i in range(cm + 1):
            if cs == 0:
                vals[i] = phi[i] - ca
            else:
                vals[i] = ca - phi[i]
        delta, a2 = _factor(vals, cm, cn, cs, crot)
        return delta, a2, s
    finally:
        free(vals)


cdef long long _gap(long long* vals, long long m, long long n, long long s,
                    long long c) noexcept:
    cdef long long p = m + 1
    cdef long long h = n + 1
    cdef long long j, t, cand, best = 0
    cdef bint first = True
    for j in range(p):
        if s == 0:
            t = _floordiv(c - vals[j], h)
        else:
            t = _floordiv(vals[j] - c - 1, h)
        cand = j + p * t
        if first or cand > best:
            best = cand
            first = False
    return best


def gap_preimage(vals, m, n, s, c):
    cdef long long cm = m, cn = n, cs = s, cc = c
    cdef long long* buf = _tolist(vals, cm + 1)
    try:
        return _gap(buf, cm, cn, cs, cc)
    finally:
        free(buf)


def dual_nf(delta, s, a, m, n, rot_n):
    cdef long long cm = m, cn = n, cs = s, ca = a, crot = rot_n
    cdef long long i, j
    cdef long long* buf = _tolist(delta, cm + 1)
    cdef long long* w = NULL
    cdef long long* dv = NULL
    try:
        w = <long long*> malloc((cm + 1) * sizeof(long long))
        if w == NULL:
            raise MemoryError()
        for i in range(cm + 1):
            if cs == 0:
                w[i] = _ext(buf, cm, cn, 0, i - ca)
            else:
                w[i] = _ext(buf, cm, cn, 0, ca - i)
        dv = <long long*> malloc((cn + 1) * sizeof(long long))
        if dv == NULL:
            raise MemoryError()
        for j in range(cn + 1):
            dv[j] = -_gap(w, cm, cn, cs, -j)
        d2, a2 = _factor(dv, cn, cm, cs, crot)
        return d2, a2, s
    finally:
        free(buf)
        if w != NULL:
            free(w)
        if dv != NULL:
            free(dv)


def perm_of(delta, s, a, m, n):
    cdef long long cm = m, cn = n, cs = s, ca = a
    cdef long long i, x
    cdef long long h = cn + 1
    cdef long long* buf = _tolist(delta, cm + 1)
    cdef list out = []
    try:
        for i in range(cm + 1):
            if cs == 0:
                x = _ext(buf, cm, cn, 0, i - ca)
            else:
                x = _ext(buf, cm, cn, 0, ca - i)
            x %= h
            if x < 0:
                x += h
            out.append(x)
        return tuple(out)
    finally:
        free(buf)


def group_compose(s1, a1, s2, a2, rot, quat_shift):
    cdef long long cs1 = s1, ca1 = a1, cs2 = s2, ca2 = a2
    cdef long long crot = rot, cquat = quat_shift
    cdef long long a
    if cs2 == 0:
        a = ca1 + ca2
    else:
        a = ca2 - ca1
    if cquat and cs1 == 1 and cs2 == 1:
        a += cquat
    if crot:
        a %= crot
        if a < 0:
            a += crot
    return cs1 ^ cs2, a


def group_inverse(s, a, rot, quat_shift):
    cdef long long cs = s, ca = a, crot = rot, cquat = quat_shift
    cdef long long ai
    if cs == 0:
        ai = -ca
    else:
        ai = ca - cquat if cquat else ca
    if crot:
        ai %= crot
        if ai < 0:
            ai += crot
    return cs, ai
