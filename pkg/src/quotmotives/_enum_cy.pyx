# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel for the finite-field counting oracle.

Semantics are identical to the pure-Python twin (_enum_py): matrices
over F_q enumerated as base-q digit strings, row-major, most significant
digit first; returns the raw number of stable instances.  Sizes are
bounded by the desk-scale budget (n <= 4, r <= 8, q <= 5), which the
caller validates.
"""


cdef inline void _decode(long long index, int size, int q, int* out):
    cdef int pos
    for pos in range(size - 1, -1, -1):
        out[pos] = <int>(index % q)
        index //= q


cdef inline void _mat_mul(int* a, int* b, int n, int q, int* out):
    cdef int i, j, k, s
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s += a[i * n + k] * b[k * n + j]
            out[i * n + j] = s % q


cdef inline bint _is_nilpotent(int* x, int n, int q):
    cdef int p[16]
    cdef int tmp[16]
    cdef int i, j
    for i in range(n * n):
        p[i] = x[i]
    for i in range(n - 1):
        _mat_mul(p, x, n, q, tmp)
        for j in range(n * n):
            p[j] = tmp[j]
    for i in range(n * n):
        if p[i]:
            return 0
    return 1


cdef inline bint _commute(int* a, int* b, int n, int q):
    cdef int ab[16]
    cdef int ba[16]
    cdef int i
    _mat_mul(a, b, n, q, ab)
    _mat_mul(b, a, n, q, ba)
    for i in range(n * n):
        if ab[i] != ba[i]:
            return 0
    return 1


cdef bint _is_stable(int* x1, int* x2, int nmats, int n, int q,
                     int* fd, int r, int* inv):
    cdef int stack[48][4]
    cdef int piv[4][4]
    cdef bint haspiv[4]
    cdef int v[4]
    cdef int nstack = 0, npiv = 0
    cdef int i, j, k, lead, c, ci, s
    cdef int* x
    if n == 0:
        return 1
    for i in range(n):
        haspiv[i] = 0
    for j in range(r):
        for i in range(n):
            stack[nstack][i] = fd[i * r + j]
        nstack += 1
    while nstack:
        nstack -= 1
        for i in range(n):
            v[i] = stack[nstack][i]
        for lead in range(n):
            c = v[lead]
            if c == 0:
                continue
            if haspiv[lead]:
                for i in range(n):
                    v[i] = (v[i] - c * piv[lead][i]) % q
                    if v[i] < 0:
                        v[i] += q
            else:
                ci = inv[c]
                for i in range(n):
                    piv[lead][i] = (v[i] * ci) % q
                haspiv[lead] = 1
                npiv += 1
                if npiv == n:
                    return 1
                for k in range(nmats):
                    x = x1 if k == 0 else x2
                    for i in range(n):
                        s = 0
                        for j in range(n):
                            s += x[i * n + j] * piv[lead][j]
                        stack[nstack][i] = s % q
                    nstack += 1
                break
    return npiv == n


def count_stable(int n, int r, int q, int d, bint punctual,
                 start=0, stop=None):
    """Raw number of stable instances, outer matrix index in [start, stop)."""
    cdef int size = n * n
    cdef int fsize = n * r
    cdef long long total = 1, fr_total = 1
    cdef int i, c
    for i in range(size):
        total *= q
    for i in range(fsize):
        fr_total *= q
    cdef long long lo = start
    cdef long long hi = total if stop is None else <long long>stop
    cdef int x1[16]
    cdef int x2[16]
    cdef int fd[32]
    cdef int inv[8]
    for c in range(1, q):
        inv[c] = pow(c, q - 2, q)
    cdef long long count = 0
    cdef long long i1, i2, fi
    for i1 in range(lo, hi):
        _decode(i1, size, q, x1)
        if punctual and not _is_nilpotent(x1, n, q):
            continue
        if d == 1:
            for fi in range(fr_total):
                _decode(fi, fsize, q, fd)
                if _is_stable(x1, x1, 1, n, q, fd, r, inv):
                    count += 1
        else:
            for i2 in range(total):
                _decode(i2, size, q, x2)
                if punctual and not _is_nilpotent(x2, n, q):
                    continue
                if not _commute(x1, x2, n, q):
                    continue
                for fi in range(fr_total):
                    _decode(fi, fsize, q, fd)
                    if _is_stable(x1, x2, 2, n, q, fd, r, inv):
                        count += 1
    return count
