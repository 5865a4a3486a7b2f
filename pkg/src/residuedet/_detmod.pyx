# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernel: determinant of an int64 matrix modulo a word-sized prime.

Row eliminations use Shoup's precomputed-quotient multiplication, which
replaces the hardware division in the inner loop with two multiplies and a
conditional subtract.  Valid for moduli below 2**31 (products stay in 64
bits, quotient estimates are off by at most one).
"""

cdef extern from *:
    """
    #include <stdint.h>
    static inline uint64_t shoup_quot(uint64_t w, uint64_t p) {
        return (uint64_t)((((unsigned __int128)w) << 64) / p);
    }
    /* w*t mod p given wq = floor(w * 2^64 / p); requires w,t < p < 2^63. */
    static inline uint64_t shoup_mulmod(uint64_t t, uint64_t w, uint64_t wq,
                                        uint64_t p) {
        uint64_t q = (uint64_t)(((unsigned __int128)wq * t) >> 64);
        uint64_t r = w * t - q * p;
        return r >= p ? r - p : r;
    }
    """
    ctypedef unsigned long long uint64_t
    uint64_t shoup_quot(uint64_t w, uint64_t p) nogil
    uint64_t shoup_mulmod(uint64_t t, uint64_t w, uint64_t wq, uint64_t p) nogil


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t p) nogil:
    return (a * b) % p


cdef uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p) nogil:
    cdef uint64_t r = 1 % p
    a %= p
    while e:
        if e & 1:
            r = _mulmod(r, a, p)
        a = _mulmod(a, a, p)
        e >>= 1
    return r


def det_mod_i64(long long[:, ::1] a, long long p):
    """Determinant of the square int64 matrix ``a`` modulo the prime ``p``.

    Destroys ``a``.  Entries may be any int64 values; they are reduced into
    [0, p) first.  Requires 2 <= p < 2**31.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k, piv
    cdef uint64_t pu = <uint64_t> p
    cdef uint64_t det = 1 % pu
    cdef uint64_t inv, f, fq, t
    cdef long long v, tmp
    cdef int sign = 1

    if p < 2 or p >= (<long long> 1) << 31:
        raise ValueError("modulus must satisfy 2 <= p < 2**31")
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    if n == 0:
        return 1 % p

    with nogil:
        for i in range(n):
            for j in range(n):
                v = a[i, j] % p
                if v < 0:
                    v += p
                a[i, j] = v

        for k in range(n):
            piv = -1
            for i in range(k, n):
                if a[i, k] != 0:
                    piv = i
                    break
            if piv < 0:
                det = 0
                break
            if piv != k:
                sign = -sign
                for j in range(k, n):
                    tmp = a[k, j]
                    a[k, j] = a[piv, j]
                    a[piv, j] = tmp
            det = _mulmod(det, <uint64_t> a[k, k], pu)
            inv = _powmod(<uint64_t> a[k, k], pu - 2, pu)
            for i in range(k + 1, n):
                if a[i, k] == 0:
                    continue
                f = _mulmod(<uint64_t> a[i, k], inv, pu)
                fq = shoup_quot(f, pu)
                for j in range(k + 1, n):
                    t = shoup_mulmod(<uint64_t> a[k, j], f, fq, pu)
                    v = a[i, j] - <long long> t
                    if v < 0:
                        v += p
                    a[i, j] = v
                a[i, k] = 0

    if sign < 0 and det != 0:
        det = pu - det
    return <long long> det
