"""Exact arithmetic in F_q (q = p^n, p odd) and in the quadratic extension F_{q^2}.

Element model
-------------
* An element of F_q is an ``int`` code ``c0 + c1*p + ... + c_{n-1}*p^(n-1)``
  with ``0 <= ci < p``; the coefficients are those of the residue
  ``c0 + c1*x + ... (mod modulus)``.  The prime subfield sits at codes
  ``0 .. p-1``.
* An element of F_{q^2} is a pair ``(a, b)`` meaning ``a + b*t`` where
  ``t^2 = delta`` and ``delta`` is a fixed nonsquare of F_q.

Canonical choices (modulus, delta, square roots, generator) always pick the
smallest candidate under the coefficient order: F_q elements compare by the
tuple ``(c0, c1, ..., c_{n-1})`` and F_{q^2} elements by ``(key(a), key(b))``.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

from sympy import factorint, isprime

from . import errors
from .kernel import FieldKernel

MAX_Q = 2**63 - 1
# Fields up to this size precompute a Legendre table on first use.
LEGENDRE_TABLE_CAP = 1 << 22

FqElem = int
ExtElem = tuple  # (a, b) with a, b FqElem


# -- polynomials over Z_p (lists, low degree first) -------------------------------


def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _zp_rem(a, f, p):
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = list(a)
    n = len(f) - 1
    for d in range(len(a) - 1, n - 1, -1):
        c = a[d] % p
        if c:
            for i in range(n + 1):
                a[d - n + i] = (a[d - n + i] - c * f[i]) % p
    return _trim([c % p for c in a[:n]])


def _zp_mulmod(a, b, f, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] += ai * bj
    return _zp_rem(r, f, p)


def _zp_powmod(g, e, f, p):
    result = [1]
    while e:
        if e & 1:
            result = _zp_mulmod(result, g, f, p)
        e >>= 1
        if e:
            g = _zp_mulmod(g, g, f, p)
    return result


def _zp_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        b = [c * inv % p for c in b]
        a, b = b, _zp_rem(a, b, p)
    return a


def is_irreducible(f, p):
    """Rabin's test for a monic ``f`` (coefficients low degree first) over Z_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    frob = [x]  # frob[k] = x^(p^k) mod f
    for _ in range(n):
        frob.append(_zp_powmod(frob[-1], p, f, p))
    if _trim([(c - d) % p for c, d in itertools.zip_longest(frob[n], x, fillvalue=0)]):
        return False
    for r in factorint(n):
        h = [(c - d) % p for c, d in itertools.zip_longest(frob[n // r], x, fillvalue=0)]
        if len(_zp_gcd(f, h, p)) != 1:
            return False
    return True


# -- the field -------------------------------------------------------------------


class Field:
    """F_q together with its canonical quadratic extension.

    Use :func:`make_field` rather than calling this directly; it validates the
    arguments, picks the canonical modulus and delta, and caches the result.
    """

    def __init__(self, p: int, n: int, modulus: tuple | None, delta: int):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self.delta = delta
        self.kernel = FieldKernel(p, n, modulus or (), delta)
        k = self.kernel
        # Hot-path arithmetic is bound straight to the kernel.
        self.add, self.sub, self.neg = k.add, k.sub, k.neg
        self.mul, self.inv, self.pow = k.mul, k.inv, k.pow
        self.ext_add, self.ext_sub, self.ext_neg = k.ext_add, k.ext_sub, k.ext_neg
        self.ext_mul, self.ext_inv, self.ext_pow = k.ext_mul, k.ext_inv, k.ext_pow
        self.zero, self.one = 0, 1
        self.ext_zero, self.ext_one = (0, 0), (1, 0)
        self.two = self.from_int(2)
        self.half = self.inv(self.two)
        self.quarter = self.mul(self.half, self.half)
        self.minus_one = self.neg(1)

    def __repr__(self):
        return f"Field({self.describe()})"

    def __reduce__(self):
        return make_field, (self.p, self.n)

    # -- encoding ---------------------------------------------------------------

    def from_int(self, k: int) -> FqElem:
        """Image of the integer ``k`` in the prime subfield."""
        return k % self.p

    def coeffs(self, a: FqElem) -> tuple:
        p = self.p
        out = []
        for _ in range(self.n):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs) -> FqElem:
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise errors.FqError(f"too many coefficients for F_{self.q}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def key(self, a: FqElem) -> tuple:
        return self.coeffs(a)

    def ext_key(self, v: ExtElem) -> tuple:
        return self.coeffs(v[0]) + self.coeffs(v[1])

    def elements(self):
        """All of F_q in canonical order."""
        if self.n == 1:
            return list(range(self.q))
        return [self.from_coeffs(c) for c in itertools.product(range(self.p), repeat=self.n)]

    def _lex_codes(self):
        if self.n == 1:
            return iter(range(self.q))
        return (self.from_coeffs(c) for c in itertools.product(range(self.p), repeat=self.n))

    # -- F_q arithmetic beyond the kernel ---------------------------------------

    def div(self, a: FqElem, b: FqElem) -> FqElem:
        return self.mul(a, self.inv(b))

    def square(self, a: FqElem) -> FqElem:
        return self.mul(a, a)

    @cached_property
    def legendre_table(self) -> list:
        if self.q > LEGENDRE_TABLE_CAP:
            raise errors.CapExceeded(f"no Legendre table for q = {self.q}")
        return self.kernel.legendre_table()

    def legendre(self, a: FqElem) -> int:
        """+1, -1 or 0 by Euler's criterion a^((q-1)/2)."""
        if "legendre_table" in self.__dict__:
            return self.legendre_table[a]
        if a == 0:
            return 0
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def _tonelli_shanks(self, a: FqElem) -> FqElem:
        q = self.q
        if a == 0:
            return 0
        if q % 4 == 3:
            return self.pow(a, (q + 1) // 4)
        odd, s = q - 1, 0
        while odd % 2 == 0:
            odd //= 2
            s += 1
        mul = self.mul
        m = s
        c = self.pow(self.delta, odd)
        t = self.pow(a, odd)
        r = self.pow(a, (odd + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = mul(t2, t2)
                i += 1
                if i == m:
                    raise errors.FqError("not a square")
            b = c
            for _ in range(m - i - 1):
                b = mul(b, b)
            m = i
            c = mul(b, b)
            t = mul(t, c)
            r = mul(r, b)
        return r

    def sqrt(self, a: FqElem) -> tuple[ExtElem, bool]:
        """A square root of ``a`` in F_{q^2} and whether it lies in F_q.

        Of the two roots the one with the smaller encoding is returned.  For a
        nonsquare the root is ``t * sqrt(a / delta)``, a pure t-multiple.
        """
        if self.legendre(a) >= 0:
            r = self._tonelli_shanks(a)
            return (min(r, self.neg(r), key=self.key), 0), True
        s = self._tonelli_shanks(self.div(a, self.delta))
        return (0, min(s, self.neg(s), key=self.key)), False

    # -- F_{q^2} ----------------------------------------------------------------

    def ext(self, a: FqElem) -> ExtElem:
        return (a, 0)

    def ext_div(self, x: ExtElem, y: ExtElem) -> ExtElem:
        return self.ext_mul(x, self.ext_inv(y))

    def ext_square(self, x: ExtElem) -> ExtElem:
        return self.ext_mul(x, x)

    def ext_scale(self, a: FqElem, x: ExtElem) -> ExtElem:
        return (self.mul(a, x[0]), self.mul(a, x[1]))

    def frobenius(self, v: ExtElem) -> ExtElem:
        """v^q, which is conjugation a + b*t -> a - b*t."""
        return (v[0], self.neg(v[1]))

    @cached_property
    def ext_order(self) -> int:
        return self.q * self.q - 1

    @cached_property
    def ext_order_primes(self) -> list:
        primes = set(factorint(self.q - 1)) | set(factorint(self.q + 1))
        return sorted(primes)

    def ext_element_order(self, x: ExtElem) -> int:
        """Multiplicative order of a nonzero element of F_{q^2}."""
        if x == (0, 0):
            raise errors.ZeroElement("zero has no multiplicative order")
        order = self.ext_order
        for r in self.ext_order_primes:
            while order % r == 0 and self.ext_pow(x, order // r) == (1, 0):
                order //= r
        return order

    @cached_property
    def generator(self) -> ExtElem:
        """Smallest element (in canonical order) generating F_{q^2}^x."""
        full = self.ext_order
        tests = [full // r for r in self.ext_order_primes]
        for a in self._lex_codes():
            for b in self._lex_codes():
                if b == 0:  # F_q^x has order q-1 < q^2-1
                    continue
                x = (a, b)
                if all(self.ext_pow(x, e) != (1, 0) for e in tests):
                    return x
        raise AssertionError("F_{q^2}^x is cyclic; a generator must exist")

    def root_of_unity(self, k: int) -> ExtElem:
        """An element of exact order ``k``, namely generator^((q^2-1)/k)."""
        if k <= 0 or self.ext_order % k:
            raise errors.BadOrder(f"{k} does not divide q^2 - 1 = {self.ext_order}")
        return self.ext_pow(self.generator, self.ext_order // k)

    def mu_elements(self, k: int) -> list:
        """The k-th roots of unity, listed as successive powers of a primitive one."""
        h = self.root_of_unity(k)
        out, x = [], (1, 0)
        for _ in range(k):
            out.append(x)
            x = self.ext_mul(x, h)
        return out

    def in_base(self, v: ExtElem) -> bool:
        return v[1] == 0

    # -- text -------------------------------------------------------------------

    def fmt(self, a: FqElem) -> str:
        if self.n == 1:
            return str(a)
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) or "0"

    def fmt_ext(self, v: ExtElem) -> str:
        a, b = v
        if b == 0:
            return self.fmt(a)
        bs = self.fmt(b)
        if "+" in bs:
            bs = f"({bs})"
        tpart = "t" if b == 1 else f"{bs}*t"
        if a == 0:
            return tpart
        as_ = self.fmt(a)
        if "+" in as_:
            as_ = f"({as_})"
        return f"{as_}+{tpart}"

    def fmt_modulus(self) -> str:
        if self.modulus is None:
            return "-"
        terms = [f"x^{self.n}"]
        for i in range(self.n - 1, -1, -1):
            c = self.modulus[i]
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return "+".join(terms)

    def describe(self) -> str:
        return f"p={self.p} n={self.n} q={self.q} modulus={self.fmt_modulus()} delta={self.fmt(self.delta)}"

    def parse(self, text: str) -> FqElem:
        """Parse an element: an integer (prime subfield), ``c0,c1,...`` or a polynomial in x."""
        text = text.replace(" ", "")
        if "x" not in text:
            if "," in text:
                return self.from_coeffs(int(c) for c in text.split(","))
            return self.from_int(int(text))
        coeffs = [0] * self.n
        for term in text.replace("-", "+-").split("+"):
            if not term:
                continue
            if "x" in term:
                coef, _, power = term.partition("x")
                coef = coef.rstrip("*")
                c = 1 if coef == "" else -1 if coef == "-" else int(coef)
                e = int(power[1:]) if power.startswith("^") else 1
            else:
                c, e = int(term), 0
            if e >= self.n:
                raise errors.FqError(f"degree {e} term in F_{self.q}")
            coeffs[e] += c
        return self.from_coeffs(coeffs)


def _check_params(p, n):
    if not isinstance(p, int) or not isinstance(n, int) or n < 1 or p < 2:
        raise errors.FqError(f"bad field parameters p={p!r}, n={n!r}")
    if p == 2:
        raise errors.EvenCharacteristic("characteristic 2 is not supported")
    if not isprime(p):
        raise errors.NotPrime(f"{p} is not prime")
    if p**n > MAX_Q:
        raise errors.FieldOverflow(f"{p}^{n} does not fit in 63 bits")


def canonical_modulus(p: int, n: int) -> tuple:
    """Smallest monic irreducible of degree n by (c0, ..., c_{n-1}); returns those coefficients."""
    for low in itertools.product(range(p), repeat=n):
        if low[0] == 0:
            continue
        if is_irreducible(list(low) + [1], p):
            return low
    raise AssertionError(f"no irreducible of degree {n} over Z_{p}")


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> Field:
    """Build (and cache) F_{p^n} with its canonical modulus, delta and extension."""
    _check_params(p, n)
    modulus = canonical_modulus(p, n) if n > 1 else None
    probe = Field(p, n, modulus, 0)
    half = (probe.q - 1) // 2
    for a in probe._lex_codes():
        if a and probe.pow(a, half) != 1:
            return Field(p, n, modulus, a)
    raise AssertionError("every odd-order field has a nonsquare")


def prime_power(q: int):
    """Return (p, n) with q = p^n, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    ((p, n),) = f.items()
    return p, n


def odd_prime_powers(lo: int, hi: int, primes_only: bool = False) -> list:
    """All odd prime powers q with lo <= q <= hi, as sorted (q, p, n) triples."""
    out = []
    for q in range(max(lo, 3), hi + 1):
        if q % 2 == 0:
            continue
        pn = prime_power(q)
        if pn is None or (primes_only and pn[1] != 1):
            continue
        out.append((q, *pn))
    return out


def field_for_q(q: int) -> Field:
    pn = prime_power(q)
    if pn is None:
        raise errors.FqError(f"{q} is not a prime power")
    return make_field(*pn)
