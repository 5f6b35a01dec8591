# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Smith normal form and fraction-free rank on machine
integers.

Both run exactly the algorithm of _pykernels (same pivots, same operations),
so results are identical.  Entries live in int64 with 128-bit intermediates;
when a value leaves [-2^62, 2^62] the computation restarts in the Python
kernel on arbitrary precision integers.
"""
from libc.stdlib cimport malloc, free

from . import _pykernels

cdef extern from *:
    """
    typedef __int128 i128;
    """
    ctypedef long long i128


cdef long long LIM = 1LL << 62


cdef inline long long floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long llabs_(long long a) nogil:
    return -a if a < 0 else a


cdef inline int axpy(long long *dst, long long q, long long src) nogil:
    """dst -= q * src; returns 1 on overflow."""
    cdef i128 r = <i128>dst[0] - <i128>q * <i128>src
    if r > LIM or r < -LIM:
        return 1
    dst[0] = <long long>r
    return 0


cdef class _Work:
    cdef long long *M
    cdef long long *U
    cdef long long *Ui
    cdef long long *V
    cdef long long *Vi
    cdef int rows, cols
    cdef bint track, tv

    def __cinit__(self, int rows, int cols, bint track, bint tv):
        self.rows, self.cols, self.track, self.tv = rows, cols, track, tv
        self.M = <long long *>malloc(max(rows * cols, 1) * sizeof(long long))
        self.U = self.Ui = self.V = self.Vi = NULL
        if track:
            self.U = <long long *>malloc(max(rows * rows, 1) * sizeof(long long))
            self.Ui = <long long *>malloc(max(rows * rows, 1) * sizeof(long long))
        if tv:
            self.V = <long long *>malloc(max(cols * cols, 1) * sizeof(long long))
            self.Vi = <long long *>malloc(max(cols * cols, 1) * sizeof(long long))

    def __dealloc__(self):
        free(self.M)
        free(self.U)
        free(self.Ui)
        free(self.V)
        free(self.Vi)

    cdef int row_add(self, int i, int j, long long q) nogil:
        cdef int k, r, rows = self.rows, cols = self.cols
        cdef long long *Mi = self.M + i * cols
        cdef long long *Mj = self.M + j * cols
        for k in range(cols):
            if Mj[k]:
                if axpy(&Mi[k], q, Mj[k]):
                    return 1
        if self.track:
            for k in range(rows):
                if self.U[j * rows + k]:
                    if axpy(&self.U[i * rows + k], q, self.U[j * rows + k]):
                        return 1
            for r in range(rows):
                if self.Ui[r * rows + i]:
                    if axpy(&self.Ui[r * rows + j], -q, self.Ui[r * rows + i]):
                        return 1
        return 0

    cdef int col_add(self, int i, int j, long long q) nogil:
        cdef int k, r, rows = self.rows, cols = self.cols
        for r in range(rows):
            if self.M[r * cols + j]:
                if axpy(&self.M[r * cols + i], q, self.M[r * cols + j]):
                    return 1
        if self.tv:
            for r in range(cols):
                if self.V[r * cols + j]:
                    if axpy(&self.V[r * cols + i], q, self.V[r * cols + j]):
                        return 1
            for k in range(cols):
                if self.Vi[i * cols + k]:
                    if axpy(&self.Vi[j * cols + k], -q, self.Vi[i * cols + k]):
                        return 1
        return 0

    cdef void row_swap(self, int i, int j) nogil:
        cdef int k, r, rows = self.rows, cols = self.cols
        cdef long long t
        for k in range(cols):
            t = self.M[i * cols + k]
            self.M[i * cols + k] = self.M[j * cols + k]
            self.M[j * cols + k] = t
        if self.track:
            for k in range(rows):
                t = self.U[i * rows + k]
                self.U[i * rows + k] = self.U[j * rows + k]
                self.U[j * rows + k] = t
            for r in range(rows):
                t = self.Ui[r * rows + i]
                self.Ui[r * rows + i] = self.Ui[r * rows + j]
                self.Ui[r * rows + j] = t

    cdef void row_neg(self, int i) nogil:
        cdef int k, r, rows = self.rows, cols = self.cols
        for k in range(cols):
            self.M[i * cols + k] = -self.M[i * cols + k]
        if self.track:
            for k in range(rows):
                self.U[i * rows + k] = -self.U[i * rows + k]
            for r in range(rows):
                self.Ui[r * rows + i] = -self.Ui[r * rows + i]

    cdef void col_swap(self, int i, int j) nogil:
        cdef int k, r, rows = self.rows, cols = self.cols
        cdef long long t
        for r in range(rows):
            t = self.M[r * cols + i]
            self.M[r * cols + i] = self.M[r * cols + j]
            self.M[r * cols + j] = t
        if self.tv:
            for r in range(cols):
                t = self.V[r * cols + i]
                self.V[r * cols + i] = self.V[r * cols + j]
                self.V[r * cols + j] = t
            for k in range(cols):
                t = self.Vi[i * cols + k]
                self.Vi[i * cols + k] = self.Vi[j * cols + k]
                self.Vi[j * cols + k] = t

    cdef int run(self) nogil:
        cdef int rows = self.rows, cols = self.cols
        cdef int t = 0, n = min(rows, cols), i, j, bi, bj, bad
        cdef long long best, ax, x, p
        cdef long long *M = self.M
        cdef bint clean
        while t < n:
            best = 0
            bi = -1
            bj = -1
            for i in range(t, rows):
                for j in range(t, cols):
                    x = M[i * cols + j]
                    if x:
                        ax = llabs_(x)
                        if not best or ax < best:
                            best = ax
                            bi = i
                            bj = j
                            if ax == 1:
                                break
                if best == 1:
                    break
            if not best:
                break
            if bi != t:
                self.row_swap(t, bi)
            if bj != t:
                self.col_swap(t, bj)
            while True:
                p = M[t * cols + t]
                clean = True
                for i in range(t + 1, rows):
                    x = M[i * cols + t]
                    if x:
                        if self.row_add(i, t, floordiv(x, p)):
                            return 1
                        if M[i * cols + t]:
                            clean = False
                for j in range(t + 1, cols):
                    x = M[t * cols + j]
                    if x:
                        if self.col_add(j, t, floordiv(x, p)):
                            return 1
                        if M[t * cols + j]:
                            clean = False
                if not clean:
                    best = llabs_(p)
                    bi = t
                    bj = t
                    for i in range(t + 1, rows):
                        x = M[i * cols + t]
                        if x and llabs_(x) < best:
                            best = llabs_(x)
                            bi = i
                            bj = t
                    for j in range(t + 1, cols):
                        x = M[t * cols + j]
                        if x and llabs_(x) < best:
                            best = llabs_(x)
                            bi = t
                            bj = j
                    if bi != t:
                        self.row_swap(t, bi)
                    if bj != t:
                        self.col_swap(t, bj)
                    continue
                bad = -1
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if M[i * cols + j] % p:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                if self.row_add(t, bad, -1):
                    return 1
            if M[t * cols + t] < 0:
                self.row_neg(t)
            t += 1
        return 0


cdef bint _fits(A):
    for r in A:
        for x in r:
            if type(x) is not int or x > LIM or x < -LIM:
                return False
    return True


cdef list _unpack(long long *buf, int rows, int cols):
    return [[buf[i * cols + j] for j in range(cols)] for i in range(rows)]


cdef void _fill_identity(long long *buf, int n) nogil:
    cdef int i, j
    for i in range(n):
        for j in range(n):
            buf[i * n + j] = 1 if i == j else 0


def snf(A, int rows, int cols, track=True, track_v=True):
    """Same contract as _pykernels.snf."""
    if not _fits(A):
        return _pykernels.snf(A, rows, cols, track, track_v)
    cdef bint tr = bool(track)
    cdef bint tv = tr and bool(track_v)
    cdef _Work w = _Work(rows, cols, tr, tv)
    cdef int i, j
    for i in range(rows):
        row = A[i]
        for j in range(cols):
            w.M[i * cols + j] = row[j]
    if tr:
        _fill_identity(w.U, rows)
        _fill_identity(w.Ui, rows)
    if tv:
        _fill_identity(w.V, cols)
        _fill_identity(w.Vi, cols)
    cdef int status
    with nogil:
        status = w.run()
    if status:
        return _pykernels.snf(A, rows, cols, track, track_v)
    D = _unpack(w.M, rows, cols)
    U = _unpack(w.U, rows, rows) if tr else None
    Ui = _unpack(w.Ui, rows, rows) if tr else None
    V = _unpack(w.V, cols, cols) if tv else None
    Vi = _unpack(w.Vi, cols, cols) if tv else None
    return D, U, V, Ui, Vi


cdef int _bareiss(long long *M, int rows, int cols) nogil:
    cdef int rk = 0, j, i, k, piv
    cdef long long prev = 1, p, x
    cdef long long *R
    cdef long long *Mi
    cdef long long t
    cdef i128 v
    for j in range(cols):
        piv = -1
        for i in range(rk, rows):
            if M[i * cols + j]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rk:
            for k in range(cols):
                t = M[rk * cols + k]
                M[rk * cols + k] = M[piv * cols + k]
                M[piv * cols + k] = t
        R = M + rk * cols
        p = R[j]
        for i in range(rk + 1, rows):
            Mi = M + i * cols
            x = Mi[j]
            for k in range(j, cols):
                v = (<i128>p * <i128>Mi[k] - <i128>x * <i128>R[k]) / <i128>prev
                if v > LIM or v < -LIM:
                    return -1
                Mi[k] = <long long>v
        prev = p
        rk += 1
        if rk == rows:
            break
    return rk


def bareiss_rank(M, int rows, int cols):
    """Same contract as _pykernels.bareiss_rank (M may be modified)."""
    if not _fits(M):
        return _pykernels.bareiss_rank(M, rows, cols)
    cdef long long *buf = <long long *>malloc(max(rows * cols, 1) * sizeof(long long))
    cdef int i, j, rk
    for i in range(rows):
        row = M[i]
        for j in range(cols):
            buf[i * cols + j] = row[j]
    with nogil:
        rk = _bareiss(buf, rows, cols)
    free(buf)
    if rk < 0:
        return _pykernels.bareiss_rank(M, rows, cols)
    return rk
