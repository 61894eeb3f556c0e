# cython: language_level=3
"""int64 fraction-free simplex tableau with overflow detection.

Same contract as :class:`srbound._pykernel.PyTableau`; ``pivot`` returns
False (leaving the tableau untouched) when any intermediate product would
overflow, so the caller can continue on arbitrary-precision integers.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, INT64_MIN


cdef extern from *:
    """
    static inline int srb_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int srb_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int srb_mul_ovf(long long a, long long b, long long *r) nogil
    int srb_sub_ovf(long long a, long long b, long long *r) nogil


cdef int _pivot(int64_t *src, int64_t *dst, Py_ssize_t m, Py_ssize_t n,
                Py_ssize_t r, Py_ssize_t s, int64_t d) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef int64_t p = src[r * n + s]
    cdef int64_t f
    cdef long long a, b, c
    cdef int64_t *row
    cdef int64_t *prow = src + r * n
    cdef int64_t *out
    for i in range(m):
        row = src + i * n
        out = dst + i * n
        if i == r:
            for j in range(n):
                out[j] = row[j]
            continue
        f = row[s]
        for j in range(n):
            if srb_mul_ovf(row[j], p, &a):
                return 0
            if f != 0:
                if srb_mul_ovf(f, prow[j], &b):
                    return 0
                if srb_sub_ovf(a, b, &c):
                    return 0
                a = c
            out[j] = a // d
    if p < 0:
        for i in range(m * n):
            if dst[i] == INT64_MIN:
                return 0
            dst[i] = -dst[i]
    return 1


cdef class CTableau:
    cdef int64_t *data
    cdef int64_t *scratch
    cdef Py_ssize_t m, n
    cdef public object denom

    def __cinit__(self, rows, denom=1):
        cdef Py_ssize_t i, j
        self.m = len(rows)
        self.n = len(rows[0]) if self.m else 0
        self.data = <int64_t *> malloc(max(1, self.m * self.n) * sizeof(int64_t))
        self.scratch = <int64_t *> malloc(max(1, self.m * self.n) * sizeof(int64_t))
        if self.data == NULL or self.scratch == NULL:
            raise MemoryError()
        for i in range(self.m):
            row = rows[i]
            for j in range(self.n):
                self.data[i * self.n + j] = row[j]  # raises OverflowError
        if denom <= 0 or denom > 0x7FFFFFFFFFFFFFFF:
            raise OverflowError("denominator out of range")
        self.denom = denom

    def __dealloc__(self):
        free(self.data)
        free(self.scratch)

    @property
    def nrows(self):
        return self.m

    @property
    def ncols(self):
        return self.n

    def get(self, Py_ssize_t i, Py_ssize_t j):
        return self.data[i * self.n + j]

    def row(self, Py_ssize_t i):
        cdef Py_ssize_t j
        return [self.data[i * self.n + j] for j in range(self.n)]

    def column(self, Py_ssize_t j):
        cdef Py_ssize_t i
        return [self.data[i * self.n + j] for i in range(self.m)]

    def tolists(self):
        return [self.row(i) for i in range(self.m)]

    def pivot(self, Py_ssize_t r, Py_ssize_t s):
        cdef int64_t d = self.denom
        cdef int ok
        cdef int64_t *tmp
        cdef int64_t p = self.data[r * self.n + s]
        with nogil:
            ok = _pivot(self.data, self.scratch, self.m, self.n, r, s, d)
        if not ok:
            return False
        tmp = self.data
        self.data = self.scratch
        self.scratch = tmp
        self.denom = p if p > 0 else -p
        return True
