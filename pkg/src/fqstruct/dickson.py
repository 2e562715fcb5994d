"""Dickson polynomials of both kinds and Chebyshev polynomials over F_q.

``D_0 = 2, D_1 = x, D_{k+2} = x D_{k+1} - D_k`` and ``E_0 = 1, E_1 = x`` with the
same recursion; ``C_k(x) = D_k(2x) / 2``.  With epsilon = (-1)^((q-1)/2) and
m = (q - epsilon)/4, D_m splits over F_q with roots {b : 2-b, 2+b nonsquares}
and E_{m-1} with roots {a : 2-a, 2+a nonzero squares}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateU, IdentityFailure, ZeroElement
from .field import ExtElem, Field, FqElem
from .orbits import epsilon_m


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over F_q; ``coeffs[i]`` multiplies x^i, no trailing zeros."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, F: Field, c: FqElem) -> Poly:
        return cls(F, (c,))

    @classmethod
    def x(cls, F: Field) -> Poly:
        return cls(F, (0, 1))

    @classmethod
    def from_roots(cls, F: Field, roots) -> Poly:
        """prod (x - r); the empty product is 1."""
        out = [1]
        for r in roots:
            nr = F.neg(r)
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] = F.add(nxt[i + 1], c)
                nxt[i] = F.add(nxt[i], F.mul(c, nr))
            out = nxt
        return cls(F, tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: Poly) -> Poly:
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, tuple(out))

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, tuple(out))

    def scale(self, c: FqElem) -> Poly:
        return Poly(self.field, tuple(self.field.mul(c, a) for a in self.coeffs))

    def substitute_scaled(self, c: FqElem) -> Poly:
        """The polynomial p(c*x)."""
        F = self.field
        out, power = [], 1
        for a in self.coeffs:
            out.append(F.mul(a, power))
            power = F.mul(power, c)
        return Poly(F, tuple(out))

    def __call__(self, x: FqElem) -> FqElem:
        F = self.field
        acc = 0
        for a in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def eval_ext(self, v: ExtElem) -> ExtElem:
        F = self.field
        acc = (0, 0)
        for a in reversed(self.coeffs):
            acc = F.ext_add(F.ext_mul(acc, v), (a, 0))
        return acc

    def __str__(self):
        F = self.field
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = F.fmt(c)
            if "+" in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            else:
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class FactorContext:
    epsilon: int
    m: int


def factor_context(F: Field) -> FactorContext:
    eps, m = epsilon_m(F.q)
    if (eps == 1) != (F.q % 4 == 1):
        raise IdentityFailure("epsilon = 1 iff q = 1 mod 4 fails", q=F.q)
    if (-1) ** m != F.legendre(F.two):
        raise IdentityFailure("(-1)^m != (2/q)", q=F.q, m=m)
    return FactorContext(eps, m)


def _recurrence(F: Field, first: Poly, k_max: int) -> list:
    x = Poly.x(F)
    seq = [first, x]
    for _ in range(2, k_max + 1):
        seq.append(x * seq[-1] - seq[-2])
    return seq[: k_max + 1]


def dickson_first_sequence(F: Field, k_max: int) -> list:
    """[D_0, ..., D_k_max]."""
    return _recurrence(F, Poly.const(F, F.two), k_max)


def dickson_second_sequence(F: Field, k_max: int) -> list:
    """[E_0, ..., E_k_max]."""
    return _recurrence(F, Poly.const(F, 1), k_max)


def dickson_first(F: Field, k: int) -> Poly:
    if k < 0:
        raise ValueError("k must be non-negative")
    return dickson_first_sequence(F, k)[k]


def dickson_second(F: Field, k: int) -> Poly:
    if k < 0:
        raise ValueError("k must be non-negative")
    return dickson_second_sequence(F, k)[k]


def _dickson_to_chebyshev(F: Field, d: Poly) -> Poly:
    return d.substitute_scaled(F.two).scale(F.half)


def chebyshev(F: Field, k: int) -> Poly:
    """C_k(x) = D_k(2x) / 2."""
    return _dickson_to_chebyshev(F, dickson_first(F, k))


def chebyshev_sequence(F: Field, k_max: int) -> list:
    return [_dickson_to_chebyshev(F, d) for d in dickson_first_sequence(F, k_max)]


# -- functional equations and special values -----------------------------------------


def check_functional(F: Field, u: ExtElem, k: int, D: Poly | None = None) -> None:
    """D_k(u + 1/u) = u^k + u^-k and D_k(-x) = (-1)^k D_k(x)."""
    if u == (0, 0):
        raise ZeroElement("u must be nonzero")
    D = D or dickson_first(F, k)
    ui = F.ext_inv(u)
    lhs = D.eval_ext(F.ext_add(u, ui))
    rhs = F.ext_add(F.ext_pow(u, k), F.ext_pow(ui, k))
    if lhs != rhs:
        raise IdentityFailure("D_k(u + 1/u) != u^k + u^-k", q=F.q, k=k, u=F.fmt_ext(u))
    sign = 1 if k % 2 == 0 else F.minus_one
    if D.substitute_scaled(F.minus_one) != D.scale(sign):
        raise IdentityFailure("D_k(-x) != (-1)^k D_k(x)", q=F.q, k=k)


def check_second_kind_functional(F: Field, u: ExtElem, k: int, E: Poly | None = None) -> None:
    """E_{k-1}(u + 1/u) (u - 1/u) = u^k - u^-k for k >= 1 and u != +-1."""
    if u == (0, 0):
        raise ZeroElement("u must be nonzero")
    if u in ((1, 0), (F.minus_one, 0)):
        raise DegenerateU("u - 1/u vanishes at u = +-1")
    if k < 1:
        raise ValueError("k must be at least 1")
    E = E or dickson_second(F, k - 1)
    ui = F.ext_inv(u)
    lhs = F.ext_mul(E.eval_ext(F.ext_add(u, ui)), F.ext_sub(u, ui))
    rhs = F.ext_sub(F.ext_pow(u, k), F.ext_pow(ui, k))
    if lhs != rhs:
        raise IdentityFailure("E_{k-1}(u + 1/u)(u - 1/u) != u^k - u^-k", q=F.q, k=k, u=F.fmt_ext(u))


def check_special_values(F: Field, k: int, D: Poly | None = None) -> None:
    """D_k(2) = 2; D_k(0) in {0, -2, 2} by k mod 4; D_k(-1) = 2 if 3 | k else -1."""
    D = D or dickson_first(F, k)
    two = F.two
    at_zero = 0 if k % 2 else (F.neg(two) if k % 4 == 2 else two)
    at_minus_one = two if k % 3 == 0 else F.minus_one
    for x, want in ((two, two), (0, at_zero), (F.minus_one, at_minus_one)):
        if D(x) != want:
            raise IdentityFailure("special value of D_k", q=F.q, k=k, x=F.fmt(x), got=F.fmt(D(x)), want=F.fmt(want))


# -- factorizations -------------------------------------------------------------------


def dickson_factor_roots(F: Field) -> list:
    """Root set B = {b : 2-b, 2+b nonsquares}; checks D_m = prod(x-b) = (2/q) prod(b-x)."""
    ctx = factor_context(F)
    L = F.legendre
    roots = [b for b in F.elements() if L(F.sub(F.two, b)) == -1 and L(F.add(F.two, b)) == -1]
    if len(roots) != ctx.m:
        raise IdentityFailure("|B| != m", q=F.q, m=ctx.m, size=len(roots))
    D = dickson_first(F, ctx.m)
    if Poly.from_roots(F, roots) != D:
        raise IdentityFailure("D_m != prod (x - b)", q=F.q, m=ctx.m, roots=[F.fmt(b) for b in roots])
    flipped = Poly.const(F, 1)
    for b in roots:
        flipped = flipped * Poly(F, (b, F.minus_one))
    if flipped.scale(F.from_int(L(F.two))) != D:
        raise IdentityFailure("D_m != (2/q) prod (b - x)", q=F.q, m=ctx.m)
    return roots


def dickson2_factor_roots(F: Field) -> list:
    """Root set {a : 2-a, 2+a nonzero squares}; checks E_{m-1} = prod(x-a)."""
    ctx = factor_context(F)
    L = F.legendre
    roots = [a for a in F.elements() if L(F.sub(F.two, a)) == 1 and L(F.add(F.two, a)) == 1]
    if len(roots) != ctx.m - 1:
        raise IdentityFailure("|A| != m - 1", q=F.q, m=ctx.m, size=len(roots))
    if Poly.from_roots(F, roots) != dickson_second(F, ctx.m - 1):
        raise IdentityFailure("E_{m-1} != prod (x - a)", q=F.q, m=ctx.m, roots=[F.fmt(a) for a in roots])
    return roots


def chebyshev_closed_set(F: Field) -> list:
    """{a : 2a+2 and 2a-2 are squares}, zero counting as a square."""
    L = F.legendre
    out = []
    for a in F.elements():
        twice = F.add(a, a)
        if L(F.add(twice, F.two)) >= 0 and L(F.sub(twice, F.two)) >= 0:
            out.append(a)
    return out


def chebyshev_closure_check(F: Field, k_max: int = 50) -> list:
    """Check C_k(s) stays in the closed set for every member s and 1 <= k <= k_max."""
    S = chebyshev_closed_set(F)
    members = set(S)
    polys = chebyshev_sequence(F, k_max)
    for s in S:
        for k in range(1, k_max + 1):
            value = polys[k](s)
            if value not in members:
                raise IdentityFailure("C_k(s) leaves S", q=F.q, s=F.fmt(s), k=k, value=F.fmt(value))
    return S
