"""Pure-Python arithmetic kernel for F_q and its quadratic extension.

Elements of F_q are integer codes ``c0 + c1*p + ... + c_{n-1}*p^(n-1)`` in
``[0, q)``; elements of F_{q^2} are pairs ``(a, b)`` of codes meaning
``a + b*t`` with ``t^2 = delta``.  ``delta`` must be a nonsquare: both
kernels reduce exponents mod q-1 and q^2-1, which is only sound in a field.
The compiled kernel in ``_ckernel.pyx``
exposes exactly the same class and method names.
"""

from .errors import DivisionByZero


class FieldKernel:
    def __init__(self, p, n, modulus, delta):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = tuple(modulus)
        self.delta = delta
        self._qm1 = self.q - 1
        self._q2m1 = self.q * self.q - 1
        if n > 1 and len(self.modulus) != n:
            raise ValueError("modulus must carry n low-order coefficients")

    # -- coefficient encoding -------------------------------------------------

    def _digits(self, a):
        p = self.p
        out = []
        for _ in range(self.n):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _encode(self, digits):
        code = 0
        for c in reversed(digits):
            code = code * self.p + c
        return code

    # -- F_q ------------------------------------------------------------------

    def add(self, a, b):
        if self.n == 1:
            s = a + b
            return s - self.p if s >= self.p else s
        p = self.p
        return self._encode([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def sub(self, a, b):
        if self.n == 1:
            s = a - b
            return s + self.p if s < 0 else s
        p = self.p
        return self._encode([(x - y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        if self.n == 1:
            return self.p - a if a else 0
        p = self.p
        return self._encode([(-x) % p for x in self._digits(a)])

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        p, n, mod = self.p, self.n, self.modulus
        x = self._digits(a)
        y = self._digits(b)
        r = [0] * (2 * n - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    r[i + j] += xi * yj
        for d in range(2 * n - 2, n - 1, -1):
            c = r[d] % p
            if c:
                base = d - n
                for i in range(n):
                    r[base + i] -= c * mod[i]
        return self._encode([c % p for c in r[:n]])

    def pow(self, a, e):
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if e == 0 else 0
        if self.n == 1:
            return pow(a, e, self.p)
        e %= self._qm1
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in F_%d" % self.q)
        if self.n == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def legendre_table(self):
        """Euler's criterion evaluated at every code, as a list of -1/0/+1."""
        half = self._qm1 // 2
        table = [0] * self.q
        for a in range(1, self.q):
            table[a] = 1 if self.pow(a, half) == 1 else -1
        return table

    # -- F_{q^2} ----------------------------------------------------------------

    def ext_add(self, x, y):
        return (self.add(x[0], y[0]), self.add(x[1], y[1]))

    def ext_sub(self, x, y):
        return (self.sub(x[0], y[0]), self.sub(x[1], y[1]))

    def ext_neg(self, x):
        return (self.neg(x[0]), self.neg(x[1]))

    def ext_mul(self, x, y):
        a, b = x
        c, d = y
        if self.n == 1:
            p = self.p
            return ((a * c + self.delta * (b * d % p)) % p, (a * d + b * c) % p)
        mul, add = self.mul, self.add
        return (
            add(mul(a, c), mul(self.delta, mul(b, d))),
            add(mul(a, d), mul(b, c)),
        )

    def ext_inv(self, x):
        a, b = x
        if a == 0 and b == 0:
            raise DivisionByZero("inverse of zero in F_%d^2" % self.q)
        mul = self.mul
        norm = self.sub(mul(a, a), mul(self.delta, mul(b, b)))
        ninv = self.inv(norm)
        return (mul(a, ninv), self.neg(mul(b, ninv)))

    def ext_pow(self, x, e):
        if e < 0:
            raise ValueError("negative exponent")
        if x[0] == 0 and x[1] == 0:
            return (1, 0) if e == 0 else (0, 0)
        e %= self._q2m1
        result = (1, 0)
        while e:
            if e & 1:
                result = self.ext_mul(result, x)
            e >>= 1
            if e:
                x = self.ext_mul(x, x)
        return result
