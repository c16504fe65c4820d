# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: int64 arithmetic with overflow detection.

Every function raises ``OverflowError`` as soon as an intermediate value
leaves the int64 range; the dispatcher in ``_core`` then reruns the call
on the pure-Python twin in ``_kernels_py``.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    bint add_ovf "__builtin_add_overflow"(int64_t a, int64_t b, int64_t* res) nogil
    bint sub_ovf "__builtin_sub_overflow"(int64_t a, int64_t b, int64_t* res) nogil
    bint mul_ovf "__builtin_mul_overflow"(int64_t a, int64_t b, int64_t* res) nogil


cdef int64_t* _to_c(list xs, Py_ssize_t n) except NULL:
    cdef int64_t* buf = <int64_t*> malloc((n if n > 0 else 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(n):
            buf[i] = xs[i]
    except OverflowError:
        free(buf)
        raise
    return buf


cdef list _to_py(int64_t* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


def binomial_product_series(Py_ssize_t deg, list mul, list div):
    cdef int64_t* a = <int64_t*> calloc(deg + 1, sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, k, d, nmul = len(mul), ndiv = len(div)
    cdef Py_ssize_t rounds = nmul if nmul > ndiv else ndiv
    cdef bint bad = False
    a[0] = 1
    try:
        for k in range(rounds):
            if k < nmul:
                d = mul[k]
                if d <= deg:
                    with nogil:
                        i = deg
                        while i >= d:
                            if sub_ovf(a[i], a[i - d], &a[i]):
                                bad = True
                                break
                            i -= 1
            if not bad and k < ndiv:
                d = div[k]
                if d <= deg:
                    with nogil:
                        for i in range(d, deg + 1):
                            if add_ovf(a[i], a[i - d], &a[i]):
                                bad = True
                                break
            if bad:
                raise OverflowError("int64 overflow in binomial_product_series")
        return _to_py(a, deg + 1)
    finally:
        free(a)


def fold(list coeffs, Py_ssize_t m, Py_ssize_t j):
    cdef Py_ssize_t n = len(coeffs)
    cdef int64_t* c = _to_c(coeffs, n)
    cdef int64_t* out = <int64_t*> calloc(m, sizeof(int64_t))
    cdef Py_ssize_t i, k = 0
    cdef bint bad = False
    if out == NULL:
        free(c)
        raise MemoryError()
    try:
        j = j % m
        if j < 0:
            j += m
        with nogil:
            for i in range(n):
                if c[i] != 0:
                    if add_ovf(out[k], c[i], &out[k]):
                        bad = True
                        break
                k += j
                if k >= m:
                    k -= m
        if bad:
            raise OverflowError("int64 overflow in fold")
        return _to_py(out, m)
    finally:
        free(c)
        free(out)


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef int64_t* x = _to_c(a, na)
    cdef int64_t* y = NULL
    cdef int64_t* out = NULL
    cdef Py_ssize_t i, k
    cdef int64_t t
    cdef bint bad = False
    try:
        y = _to_c(b, nb)
        out = <int64_t*> calloc(na + nb - 1, sizeof(int64_t))
        if out == NULL:
            raise MemoryError()
        with nogil:
            for i in range(na):
                if x[i] == 0:
                    continue
                for k in range(nb):
                    if mul_ovf(x[i], y[k], &t) or add_ovf(out[i + k], t, &out[i + k]):
                        bad = True
                        break
                if bad:
                    break
        if bad:
            raise OverflowError("int64 overflow in poly_mul")
        return _to_py(out, na + nb - 1)
    finally:
        free(x)
        free(y)
        free(out)


def exact_div(list a, list b):
    cdef Py_ssize_t n = len(a), k = len(b)
    if n == 0:
        return []
    if n < k:
        return None
    cdef int64_t* r = _to_c(a, n)
    cdef int64_t* d = NULL
    cdef int64_t* q = NULL
    cdef Py_ssize_t i, s
    cdef int64_t c, lead, t, u
    cdef int status = 0  # 0 ok, 1 not divisible, 2 overflow
    try:
        d = _to_c(b, k)
        q = <int64_t*> calloc(n - k + 1, sizeof(int64_t))
        if q == NULL:
            raise MemoryError()
        lead = d[k - 1]
        with nogil:
            i = n - k
            while i >= 0 and status == 0:
                c = r[i + k - 1]
                if c != 0:
                    if c % lead != 0:
                        status = 1
                        break
                    t = c // lead
                    q[i] = t
                    for s in range(k):
                        if mul_ovf(t, d[s], &u) or sub_ovf(r[i + s], u, &r[i + s]):
                            status = 2
                            break
                i -= 1
            if status == 0:
                for i in range(k - 1):
                    if r[i] != 0:
                        status = 1
                        break
        if status == 2:
            raise OverflowError("int64 overflow in exact_div")
        if status == 1:
            return None
        return _to_py(q, n - k + 1)
    finally:
        free(r)
        free(d)
        free(q)
