# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel for F_q and F_{q^2}.

Same interface and element encoding as ``_pykernel.FieldKernel``.  Codes are
held in 64-bit words; products of prime-field residues go through a 128-bit
intermediate.
"""

from .errors import DivisionByZero

cdef extern from *:
    """
    typedef unsigned __int128 fq_u128;
    """
    ctypedef unsigned long long fq_u128

ctypedef unsigned long long u64

cdef enum:
    MAXN = 64

cdef u64 LO_MASK = 0xFFFFFFFFFFFFFFFF


cdef inline u64 mulmod(u64 a, u64 b, u64 p) noexcept nogil:
    return <u64>((<fq_u128>a * <fq_u128>b) % <fq_u128>p)


cdef class FieldKernel:
    cdef readonly u64 p
    cdef readonly u64 q
    cdef readonly u64 delta
    cdef readonly int n
    cdef readonly tuple modulus
    cdef u64 mod[MAXN]
    cdef u64 qm1
    cdef object _q2m1

    def __init__(self, p, n, modulus, delta):
        self.p = p
        self.n = n
        self.q = p**n
        self.delta = delta
        self.modulus = tuple(modulus)
        self.qm1 = self.q - 1
        self._q2m1 = (p**n) ** 2 - 1  # Python int: q^2 overflows 64 bits
        if n > MAXN:
            raise ValueError("extension degree too large for the compiled kernel")
        if n > 1 and len(self.modulus) != n:
            raise ValueError("modulus must carry n low-order coefficients")
        for i in range(len(self.modulus)):
            self.mod[i] = self.modulus[i]

    # -- C-level primitives --------------------------------------------------

    cdef inline void _dig(self, u64 a, u64* out) noexcept nogil:
        cdef int i
        for i in range(self.n):
            out[i] = a % self.p
            a = a / self.p

    cdef inline u64 _enc(self, u64* d) noexcept nogil:
        cdef u64 code = 0
        cdef int i
        for i in range(self.n - 1, -1, -1):
            code = code * self.p + d[i]
        return code

    cdef u64 _add(self, u64 a, u64 b) noexcept nogil:
        cdef u64 x[MAXN]
        cdef u64 y[MAXN]
        cdef u64 s
        cdef int i
        if self.n == 1:
            s = a + b
            return s - self.p if s >= self.p else s
        self._dig(a, x)
        self._dig(b, y)
        for i in range(self.n):
            s = x[i] + y[i]
            x[i] = s - self.p if s >= self.p else s
        return self._enc(x)

    cdef u64 _neg(self, u64 a) noexcept nogil:
        cdef u64 x[MAXN]
        cdef int i
        if self.n == 1:
            return self.p - a if a else 0
        self._dig(a, x)
        for i in range(self.n):
            if x[i]:
                x[i] = self.p - x[i]
        return self._enc(x)

    cdef u64 _sub(self, u64 a, u64 b) noexcept nogil:
        return self._add(a, self._neg(b))

    cdef u64 _mul(self, u64 a, u64 b) noexcept nogil:
        cdef u64 x[MAXN]
        cdef u64 y[MAXN]
        cdef u64 r[2 * MAXN]
        cdef u64 c, p = self.p
        cdef int i, j, d, n = self.n
        if n == 1:
            return mulmod(a, b, p)
        if a == 0 or b == 0:
            return 0
        self._dig(a, x)
        self._dig(b, y)
        for i in range(2 * n - 1):
            r[i] = 0
        for i in range(n):
            if x[i]:
                for j in range(n):
                    r[i + j] = (r[i + j] + mulmod(x[i], y[j], p)) % p
        for d in range(2 * n - 2, n - 1, -1):
            c = r[d]
            if c:
                for i in range(n):
                    r[d - n + i] = (r[d - n + i] + p - mulmod(c, self.mod[i], p)) % p
        return self._enc(r)

    cdef u64 _pow(self, u64 a, u64 e) noexcept nogil:
        cdef u64 result = 1
        if a == 0:
            return 1 if e == 0 else 0
        while e:
            if e & 1:
                result = self._mul(result, a)
            e >>= 1
            if e:
                a = self._mul(a, a)
        return result

    cdef void _emul(self, u64 a, u64 b, u64 c, u64 d, u64* ra, u64* rb) noexcept nogil:
        ra[0] = self._add(self._mul(a, c), self._mul(self.delta, self._mul(b, d)))
        rb[0] = self._add(self._mul(a, d), self._mul(b, c))

    cdef void _epow(self, u64 a, u64 b, fq_u128 e, u64* ra, u64* rb) noexcept nogil:
        cdef u64 xa = 1, xb = 0, ta, tb
        while e:
            if e & 1:
                self._emul(xa, xb, a, b, &ta, &tb)
                xa = ta
                xb = tb
            e >>= 1
            if e:
                self._emul(a, b, a, b, &ta, &tb)
                a = ta
                b = tb
        ra[0] = xa
        rb[0] = xb

    # -- F_q ----------------------------------------------------------------

    def add(self, u64 a, u64 b):
        return self._add(a, b)

    def sub(self, u64 a, u64 b):
        return self._sub(a, b)

    def neg(self, u64 a):
        return self._neg(a)

    def mul(self, u64 a, u64 b):
        return self._mul(a, b)

    def pow(self, u64 a, e):
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if e == 0 else 0
        if e >= self.qm1:
            e %= self.qm1
        return self._pow(a, e)

    def inv(self, u64 a):
        if a == 0:
            raise DivisionByZero("inverse of zero in F_%d" % self.q)
        return self._pow(a, self.q - 2)

    def legendre_table(self):
        """Euler's criterion evaluated at every code, as a list of -1/0/+1."""
        cdef u64 a, half = self.qm1 // 2
        cdef bytearray marks = bytearray(self.q)
        cdef unsigned char[::1] view = marks
        with nogil:
            for a in range(1, self.q):
                view[a] = 1 if self._pow(a, half) == 1 else 2
        signs = (0, 1, -1)
        return [signs[m] for m in marks]

    # -- F_{q^2} --------------------------------------------------------------

    def ext_add(self, tuple x, tuple y):
        return (self._add(x[0], y[0]), self._add(x[1], y[1]))

    def ext_sub(self, tuple x, tuple y):
        return (self._sub(x[0], y[0]), self._sub(x[1], y[1]))

    def ext_neg(self, tuple x):
        return (self._neg(x[0]), self._neg(x[1]))

    def ext_mul(self, tuple x, tuple y):
        cdef u64 ra, rb
        self._emul(x[0], x[1], y[0], y[1], &ra, &rb)
        return (ra, rb)

    def ext_inv(self, tuple x):
        cdef u64 a = x[0], b = x[1], norm, ninv
        if a == 0 and b == 0:
            raise DivisionByZero("inverse of zero in F_%d^2" % self.q)
        norm = self._sub(self._mul(a, a), self._mul(self.delta, self._mul(b, b)))
        ninv = self._pow(norm, self.q - 2)
        return (self._mul(a, ninv), self._neg(self._mul(b, ninv)))

    def ext_pow(self, tuple x, e):
        cdef u64 a = x[0], b = x[1], ra, rb, lo, hi
        cdef fq_u128 ee
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0 and b == 0:
            return (1, 0) if e == 0 else (0, 0)
        e %= self._q2m1
        lo = e & LO_MASK
        hi = e >> 64
        ee = (<fq_u128>hi << 64) | <fq_u128>lo
        self._epow(a, b, ee, &ra, &rb)
        return (ra, rb)
