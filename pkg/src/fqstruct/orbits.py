"""Orbits {v, 1/v, -v, -1/v} and their bijection with F_q.

The map ``f(v) = (v + 1/v)^2 / 4`` sends every orbit inside
mu_{2(q-1)} u mu_{2(q+1)} to a distinct element tau of F_q; the inverse sends
tau to the orbit of ``sqrt(tau) + sqrt(tau - 1)``.  For tau outside {0, 1},
the Legendre signs A = (tau/q) and B = ((tau-1)/q) satisfy
``v^(q - A*B) = A`` for every v in the orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    CharacteristicFive,
    CharacteristicThree,
    DegenerateTau,
    IdentityFailure,
    ZeroC,
    ZeroElement,
)
from .field import ExtElem, Field, FqElem


@dataclass(frozen=True)
class Orbit:
    rep: ExtElem
    elements: frozenset
    tau: Optional[FqElem]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class COrbit:
    c: FqElem
    rep: ExtElem
    elements: frozenset
    tau: Optional[FqElem]


class QuadrantSigns(NamedTuple):
    A: int
    B: int


def _nonzero(v):
    if v == (0, 0):
        raise ZeroElement("orbits are defined for nonzero elements only")


def _canonical(F: Field, elements) -> ExtElem:
    return min(elements, key=F.ext_key)


def f_value(F: Field, v: ExtElem, c: FqElem = 1) -> ExtElem:
    """(v + c/v)^2 / 4 as an element of F_{q^2}."""
    s = F.ext_add(v, F.ext_scale(c, F.ext_inv(v)))
    return F.ext_scale(F.quarter, F.ext_square(s))


def tau_of(F: Field, v: ExtElem) -> Optional[FqElem]:
    """f(v) if it lies in F_q, else None."""
    _nonzero(v)
    t = f_value(F, v)
    return t[0] if t[1] == 0 else None


def orbit_of(F: Field, v: ExtElem) -> Orbit:
    _nonzero(v)
    w = F.ext_inv(v)
    elements = frozenset((v, w, F.ext_neg(v), F.ext_neg(w)))
    return Orbit(_canonical(F, elements), elements, tau_of(F, v))


def _pm_pm(F: Field, r1: ExtElem, r2: ExtElem) -> frozenset:
    n1, n2 = F.ext_neg(r1), F.ext_neg(r2)
    return frozenset(F.ext_add(a, b) for a in (r1, n1) for b in (r2, n2))


def orbit_from_tau(F: Field, tau: FqElem) -> Orbit:
    """The orbit {+-sqrt(tau) +- sqrt(tau - 1)} labelled by tau."""
    r1, _ = F.sqrt(tau)
    r2, _ = F.sqrt(F.sub(tau, 1))
    elements = _pm_pm(F, r1, r2)
    return Orbit(_canonical(F, elements), elements, tau)


def enumerate_orbits(F: Field) -> list:
    """All q orbits of mu_{2(q-1)} u mu_{2(q+1)}, one per tau in canonical order."""
    return [orbit_from_tau(F, tau) for tau in F.elements()]


def partition_mu_orbits(F: Field) -> list:
    """Orbits of mu_{2(q-1)} u mu_{2(q+1)} found by union-find on the roots themselves.

    Independent of square roots and of f; used to cross-check
    :func:`enumerate_orbits`.
    """
    q = F.q
    points = set(F.mu_elements(2 * (q - 1))) | set(F.mu_elements(2 * (q + 1)))
    parent = {v: v for v in points}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v in points:
        for w in (F.ext_neg(v), F.ext_inv(v)):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[rv] = rw
    classes = {}
    for v in points:
        classes.setdefault(find(v), set()).add(v)
    return sorted((frozenset(c) for c in classes.values()), key=lambda s: F.ext_key(_canonical(F, s)))


def in_mu_union(F: Field, v: ExtElem) -> bool:
    """v^(q-1) = +-1 or v^(q+1) = +-1."""
    pm1 = ((1, 0), (F.minus_one, 0))
    return F.ext_pow(v, F.q - 1) in pm1 or F.ext_pow(v, F.q + 1) in pm1


def mu_groups(F: Field, v: ExtElem) -> list:
    """Labels of the groups mu_{2(q-1)}, mu_{2(q+1)} that contain v."""
    out = []
    if F.ext_pow(v, 2 * (F.q - 1)) == (1, 0):
        out.append("mu_2(q-1)")
    if F.ext_pow(v, 2 * (F.q + 1)) == (1, 0):
        out.append("mu_2(q+1)")
    return out


def quadrant_signs(F: Field, tau: FqElem) -> QuadrantSigns:
    if tau in (0, 1):
        raise DegenerateTau("A and B are not unique for tau in {0, 1}")
    return QuadrantSigns(F.legendre(tau), F.legendre(F.sub(tau, 1)))


def check_quadrant_rule(F: Field, tau: FqElem, orbit: Orbit | None = None) -> QuadrantSigns:
    """Raise IdentityFailure unless v^(q - AB) = A for all v in the orbit of tau."""
    signs = quadrant_signs(F, tau)
    if orbit is None:
        orbit = orbit_from_tau(F, tau)
    target = (F.from_int(signs.A), 0)
    e = F.q - signs.A * signs.B
    for v in orbit.elements:
        got = F.ext_pow(v, e)
        if got != target:
            raise IdentityFailure(
                "quadrant rule v^(q-AB) = A fails",
                tau=F.fmt(tau), v=F.fmt_ext(v), A=signs.A, B=signs.B, got=F.fmt_ext(got),
            )
    return signs


def check_structure(F: Field) -> int:
    """Bijection, round trip and quadrant rule over every tau in F_q."""
    seen = {}
    short = []
    for tau in F.elements():
        orbit = orbit_from_tau(F, tau)
        if orbit.size not in (2, 4):
            raise IdentityFailure("orbit of wrong size", tau=F.fmt(tau), size=orbit.size)
        if orbit.size == 2:
            short.append(tau)
        if orbit.rep in seen:
            raise IdentityFailure(
                "two tau values share an orbit", tau=F.fmt(tau), other=F.fmt(seen[orbit.rep])
            )
        seen[orbit.rep] = tau
        for v in orbit.elements:
            if tau_of(F, v) != tau:
                raise IdentityFailure("round trip tau -> orbit -> tau fails", tau=F.fmt(tau), v=F.fmt_ext(v))
            if not in_mu_union(F, v):
                raise IdentityFailure("orbit element outside mu_2(q-1) u mu_2(q+1)", tau=F.fmt(tau))
        if tau not in (0, 1):
            check_quadrant_rule(F, tau, orbit)
    if sorted(short) != [0, 1]:
        raise IdentityFailure("short orbits are not exactly tau = 0, 1", short=[F.fmt(t) for t in short])
    count = len(seen)
    if count != F.q:
        raise IdentityFailure("orbit count differs from q", count=count, q=F.q)
    return count


def check_short_orbits(F: Field) -> None:
    """v = +-1 gives v^(q-1) = v^(q+1) = 1; v = +-i gives (-1/q) and -(-1/q)."""
    q = F.q
    one = (1, 0)
    for v in (one, (F.minus_one, 0)):
        if F.ext_pow(v, q - 1) != one or F.ext_pow(v, q + 1) != one:
            raise IdentityFailure("short orbit {1,-1} exponents", v=F.fmt_ext(v))
    i, _ = F.sqrt(F.minus_one)
    eps = F.legendre(F.minus_one)
    for v in (i, F.ext_neg(i)):
        if F.ext_pow(v, q - 1) != (F.from_int(eps), 0) or F.ext_pow(v, q + 1) != (F.from_int(-eps), 0):
            raise IdentityFailure("short orbit {i,-i} exponents", v=F.fmt_ext(v), eps=eps)


# -- Legendre formulas obtained from special orbits ----------------------------------


def epsilon_m(q: int) -> tuple:
    """(epsilon, m) with epsilon = (-1)^((q-1)/2) and m = (q - epsilon)/4."""
    eps = -1 if (q - 1) // 2 % 2 else 1
    if (q - eps) % 4:
        raise IdentityFailure("4 does not divide q - epsilon", q=q, epsilon=eps)
    return eps, (q - eps) // 4


def legendre_two_formula(F: Field) -> int:
    """(2/q) = (-1)^m, also checked through the orbit of a primitive 8th root."""
    q = F.q
    eps, m = epsilon_m(q)
    two = F.legendre(F.two)
    if (-1) ** m != two:
        raise IdentityFailure("(-1)^m != (2/q)", q=q, m=m, legendre_2=two)
    zeta = F.root_of_unity(8)
    if tau_of(F, zeta) != F.half:
        raise IdentityFailure("f(zeta_8) != 1/2", q=q)
    if F.ext_pow(zeta, q - eps) != (F.from_int(two), 0):
        raise IdentityFailure("zeta_8^(q - epsilon) != (2/q)", q=q)
    return two


def legendre_neg3_check(F: Field) -> int:
    """(-3/q) = 1 exactly when q = 1 (mod 3), via the cube-root orbit tau = 1/4."""
    if F.p == 3:
        raise CharacteristicThree("needs 3 not dividing q")
    q = F.q
    omega = F.root_of_unity(3)
    tau = tau_of(F, omega)
    if tau != F.quarter:
        raise IdentityFailure("f(omega) != 1/4", q=q, tau=tau)
    neg3 = F.from_int(-3)
    A, B = F.legendre(tau), F.legendre(F.sub(tau, 1))
    if A != 1 or B != F.legendre(neg3):
        raise IdentityFailure("(tau - 1 / q) != (-3/q)", q=q, A=A, B=B)
    if F.ext_pow(omega, q - A * B) != (1, 0):
        raise IdentityFailure("omega^(q - B) != 1", q=q, B=B)
    if (B == 1) != (q % 3 == 1):
        raise IdentityFailure("(-3/q) = 1 iff q = 1 mod 3 fails", q=q, legendre_neg3=B)
    return B


def legendre_five_check(F: Field) -> int:
    """(5/q) = 1 iff q = +-1 (mod 5) iff f(zeta_5) lies in F_q.

    When q = +-2 (mod 5) a primitive 5th root lives only in F_{q^4}; then
    u = 4 f(zeta) - 2 is a root of u^2 + u - 1, so it is checked that those
    roots (computed in F_{q^2}) fall outside F_q and that 5 divides neither
    2(q-1) nor 2(q+1).
    """
    if F.p == 5:
        raise CharacteristicFive("needs 5 not dividing q")
    q = F.q
    five = F.legendre(F.from_int(5))
    residue = q % 5 in (1, 4)
    if F.ext_order % 5 == 0:
        zeta = F.root_of_unity(5)
        fz = f_value(F, zeta)
        u = F.ext_sub(F.ext_scale(F.from_int(4), fz), (F.two, 0))
        lhs = F.ext_add(F.ext_add(F.ext_square(u), u), (F.minus_one, 0))
        if lhs != (0, 0):
            raise IdentityFailure("u^2 + u - 1 != 0", q=q)
        if F.ext_scale(F.quarter, F.ext_add(u, (F.two, 0))) != fz:
            raise IdentityFailure("f(zeta) != (2 + u)/4", q=q)
        in_base = F.in_base(fz)
    else:
        if (2 * (q - 1)) % 5 == 0 or (2 * (q + 1)) % 5 == 0:
            raise IdentityFailure("5 divides 2(q+-1) but not q^2 - 1", q=q)
        s5, _ = F.sqrt(F.from_int(5))
        in_base = False
        for s in (s5, F.ext_neg(s5)):
            u = F.ext_scale(F.half, F.ext_sub(s, (1, 0)))
            if F.ext_add(F.ext_add(F.ext_square(u), u), (F.minus_one, 0)) != (0, 0):
                raise IdentityFailure("u^2 + u - 1 != 0", q=q)
            in_base = in_base or F.in_base(u)
    if not ((five == 1) == residue == in_base):
        raise IdentityFailure(
            "(5/q) = 1 iff q = +-1 mod 5 iff f(zeta_5) in F_q fails",
            q=q, legendre_5=five, q_mod_5=q % 5, f_in_base=in_base,
        )
    return five


# -- c-orbits ------------------------------------------------------------------------


def c_orbit_of(F: Field, c: FqElem, v: ExtElem) -> COrbit:
    if c == 0:
        raise ZeroC("c must be nonzero")
    _nonzero(v)
    w = F.ext_scale(c, F.ext_inv(v))
    elements = frozenset((v, w, F.ext_neg(v), F.ext_neg(w)))
    t = f_value(F, v, c)
    return COrbit(c, _canonical(F, elements), elements, t[0] if t[1] == 0 else None)


def c_orbit_from_tau(F: Field, c: FqElem, tau: FqElem) -> COrbit:
    if c == 0:
        raise ZeroC("c must be nonzero")
    r1, _ = F.sqrt(tau)
    r2, _ = F.sqrt(F.sub(tau, c))
    elements = _pm_pm(F, r1, r2)
    return COrbit(c, _canonical(F, elements), elements, tau)


def c_quadrant_check(F: Field, c: FqElem, tau: FqElem) -> QuadrantSigns:
    """Sign rule v^(q-AB) = A c^((1-AB)/2) and the rescaling w = v/sqrt(c)."""
    if c == 0:
        raise ZeroC("c must be nonzero")
    if tau in (0, c):
        raise DegenerateTau("tau must avoid 0 and c")
    A, B = F.legendre(tau), F.legendre(F.sub(tau, c))
    target = (F.mul(F.from_int(A), c if A * B == -1 else 1), 0)
    orbit = c_orbit_from_tau(F, c, tau)
    root_c, _ = F.sqrt(c)
    roots_c = (root_c, F.ext_neg(root_c))
    scaled_tau = F.div(tau, c)
    for v in orbit.elements:
        if f_value(F, v, c) != (tau, 0):
            raise IdentityFailure("c-orbit element does not map back to tau", c=F.fmt(c), tau=F.fmt(tau))
        got = F.ext_pow(v, F.q - A * B)
        if got != target:
            raise IdentityFailure(
                "c-orbit sign rule fails",
                c=F.fmt(c), tau=F.fmt(tau), v=F.fmt_ext(v), A=A, B=B, got=F.fmt_ext(got),
            )
        for s in roots_c:
            w = F.ext_div(v, s)
            if tau_of(F, w) != scaled_tau:
                raise IdentityFailure(
                    "rescaling tau/c = f(v/sqrt(c)) fails", c=F.fmt(c), tau=F.fmt(tau), v=F.fmt_ext(v)
                )
    return QuadrantSigns(A, B)


def check_c_orbits(F: Field) -> int:
    """c_quadrant_check over every nonzero c and every tau outside {0, c}."""
    count = 0
    for c in F.elements():
        if c == 0:
            continue
        for tau in F.elements():
            if tau not in (0, c):
                c_quadrant_check(F, c, tau)
                count += 1
    return count
