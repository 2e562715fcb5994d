"""Wilson-like product identities: closed-form products over subsets of F_q
cut out by Legendre-symbol conditions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dickson import dickson_factor_roots
from .errors import BadParameters, CharacteristicFive, DegenerateJ, IdentityFailure, NotApplicable
from .field import Field, FqElem


@dataclass(frozen=True)
class ProductReport:
    """Outcome of one product identity.

    ``compare`` is ``"eq"`` when the product itself is predicted and
    ``"square"`` when only its square is (then ``expected`` is the target of
    ``product**2``).
    """

    q: int
    theorem: str
    index_set: tuple
    product: FqElem
    expected: FqElem
    match: bool
    compare: str = "eq"
    note: str = ""


def product(F: Field, values) -> FqElem:
    acc = 1
    for v in values:
        acc = F.mul(acc, v)
    return acc


def _report(F, theorem, idx, expected, compare="eq", note=""):
    value = product(F, idx)
    match = value == expected if compare == "eq" else F.mul(value, value) == expected
    return ProductReport(F.q, theorem, tuple(idx), value, expected, match, compare, note)


def wilson_item1(F: Field) -> ProductReport:
    """prod {a : a and 4 - a nonsquares} = 2."""
    L, four = F.legendre, F.from_int(4)
    idx = [a for a in F.elements() if L(a) == -1 and L(F.sub(four, a)) == -1]
    return _report(F, "wilson1", idx, F.two)


def wilson_item2(F: Field) -> ProductReport:
    """prod {a : -a and 4 + a nonsquares} = 2 (2/q)."""
    L, four = F.legendre, F.from_int(4)
    idx = [a for a in F.elements() if L(F.neg(a)) == -1 and L(F.add(four, a)) == -1]
    return _report(F, "wilson2", idx, F.from_int(2 * L(F.two)))


def wilson_item3(F: Field) -> ProductReport:
    """prod {a != 0 : 1 - a and a + 3 nonsquares} = 2 if q = +-1 (mod 12) else -1."""
    L, three = F.legendre, F.from_int(3)
    idx = [a for a in F.elements() if a and L(F.sub(1, a)) == -1 and L(F.add(a, three)) == -1]
    expected = F.two if F.q % 12 in (1, 11) else F.minus_one
    note = "characteristic 3" if F.p == 3 else ""
    return _report(F, "wilson3", idx, expected, note=note)


def item4_pairs(F: Field) -> list:
    """Every (s, t) with s, t nonzero and s^2 + t^2 = 4, both signs of t."""
    four = F.from_int(4)
    pairs = []
    for s in F.elements():
        if not s:
            continue
        rest = F.sub(four, F.mul(s, s))
        if F.legendre(rest) != 1:
            continue
        t, _ = F.sqrt(rest)
        pairs.append((s, t[0]))
        pairs.append((s, F.neg(t[0])))
    return pairs


def wilson_item4(F: Field, s: FqElem, t: FqElem) -> ProductReport:
    """prod {a : s^2 - a and t^2 + a nonsquares} = 2 ((2+s)/q) = 2 (2/q) ((2+t)/q)."""
    if not s or not t or F.add(F.mul(s, s), F.mul(t, t)) != F.from_int(4):
        raise BadParameters("need s, t nonzero with s^2 + t^2 = 4")
    L = F.legendre
    s2, t2 = F.mul(s, s), F.mul(t, t)
    idx = [a for a in F.elements() if L(F.sub(s2, a)) == -1 and L(F.add(t2, a)) == -1]
    via_s = 2 * L(F.add(F.two, s))
    via_t = 2 * L(F.two) * L(F.add(F.two, t))
    if via_s != via_t:
        raise IdentityFailure(
            "2((2+s)/q) != 2(2/q)((2+t)/q)", q=F.q, s=F.fmt(s), t=F.fmt(t), via_s=via_s, via_t=via_t
        )
    return _report(F, "wilson4", idx, F.from_int(via_s), note=f"s={F.fmt(s)} t={F.fmt(t)}")


def pythagorean_symbol_identity(F: Field, alpha: FqElem, beta: FqElem, gamma: FqElem) -> bool:
    """alpha^2 + beta^2 = gamma^2, alpha*beta != 0  =>  ((a+g)/q) = (2/q)((b+g)/q)."""
    sq = F.square
    if not alpha or not beta or F.add(sq(alpha), sq(beta)) != sq(gamma):
        raise BadParameters("need alpha*beta != 0 and alpha^2 + beta^2 = gamma^2")
    L = F.legendre
    ag, bg = F.add(alpha, gamma), F.add(beta, gamma)
    witness = F.mul(F.two, F.mul(ag, bg))
    if L(witness) != 1:
        raise IdentityFailure(
            "2(a+g)(b+g) is not a nonzero square", q=F.q, alpha=F.fmt(alpha), beta=F.fmt(beta), gamma=F.fmt(gamma)
        )
    if L(ag) != L(F.two) * L(bg):
        raise IdentityFailure(
            "((a+g)/q) != (2/q)((b+g)/q)", q=F.q, alpha=F.fmt(alpha), beta=F.fmt(beta), gamma=F.fmt(gamma)
        )
    return True


def pythagorean_triples(F: Field) -> list:
    """All (alpha, beta, gamma) with alpha*beta != 0 and alpha^2 + beta^2 = gamma^2."""
    out = []
    nonzero = [a for a in F.elements() if a]
    squares = {a: F.square(a) for a in nonzero}
    for a in nonzero:
        for b in nonzero:
            total = F.add(squares[a], squares[b])
            if F.legendre(total) < 0:
                continue
            g, _ = F.sqrt(total)
            out.append((a, b, g[0]))
            if g[0]:
                out.append((a, b, F.neg(g[0])))
    return out


def oddball_set(F: Field) -> list:
    """{b : 2-b nonsquare, 2+b nonzero square}."""
    L = F.legendre
    return [b for b in F.elements() if L(F.sub(F.two, b)) == -1 and L(F.add(F.two, b)) == 1]


def oddball_permutation(F: Field) -> list:
    """b -> b^2 - 2 permutes S, with inverse b -> prod {b - a : 2-a, 2+a nonsquares}."""
    S = oddball_set(F)
    members = set(S)
    square_minus_two = {b: F.sub(F.square(b), F.two) for b in S}
    if set(square_minus_two.values()) != members:
        raise IdentityFailure("b -> b^2 - 2 does not permute S", q=F.q, S=[F.fmt(b) for b in S])
    roots = dickson_factor_roots(F)

    def inverse(b):
        return product(F, (F.sub(b, a) for a in roots))

    for b in S:
        back = inverse(b)
        if back not in members or square_minus_two[back] != b or inverse(square_minus_two[b]) != b:
            raise IdentityFailure("product formula is not the inverse permutation", q=F.q, b=F.fmt(b))
    return S


@lru_cache(maxsize=64)
def _sum_identity_sets(F: Field):
    L = F.legendre
    four = F.from_int(4)
    plus, minus = [], []
    for a in F.elements():
        s = L(F.mul(a, F.add(a, four)))
        if s == 1:
            plus.append(a)
        elif s == -1:
            minus.append(a)
    return plus, minus


def sum_identity(F: Field, c: FqElem) -> bool:
    """prod {c - a : (a(a+4)/q) = 1} + prod {c - b : (b(b+4)/q) = -1} = (c/q)."""
    plus, minus = _sum_identity_sets(F)
    lhs = F.add(product(F, (F.sub(c, a) for a in plus)), product(F, (F.sub(c, b) for b in minus)))
    rhs = F.from_int(F.legendre(c))
    if lhs != rhs:
        raise IdentityFailure("sum of products != (c/q)", q=F.q, c=F.fmt(c), lhs=F.fmt(lhs), rhs=F.fmt(rhs))
    return True


def sqrt_products(F: Field, j: FqElem) -> ProductReport:
    """Products over {a != 0 : conditions on j - a, 4 - j + a} that square to j, 4-j or j/(4-j)."""
    four = F.from_int(4)
    if j in (0, four):
        raise DegenerateJ("j and 4 - j must both be nonzero")
    L = F.legendre
    k = F.sub(four, j)
    signs = (L(j), L(k))
    if signs == (1, 1):
        raise NotApplicable("no formula when j and 4 - j are both squares")
    nonzero = [a for a in F.elements() if a]
    if signs == (-1, -1):
        idx = [a for a in nonzero if L(F.sub(j, a)) == 1 and L(F.add(k, a)) == -1]
        target = F.div(j, k)
    else:
        idx = [a for a in nonzero if L(F.sub(j, a)) == -1 and L(F.add(k, a)) == -1]
        target = j if signs == (1, -1) else k
    return _report(F, "sqrt-products", idx, target, compare="square", note=f"j={F.fmt(j)}")


def golden_products(F: Field) -> list:
    """One report per square root of 5, with r = (1 - sqrt 5)/2."""
    if F.p == 5:
        raise CharacteristicFive("needs 5 not dividing q")
    L = F.legendre
    if L(F.from_int(5)) != 1:
        raise NotApplicable("needs (5/q) = 1")
    root, _ = F.sqrt(F.from_int(5))
    nonzero = [a for a in F.elements() if a]
    reports = []
    for s5 in (root[0], F.neg(root[0])):
        r = F.mul(F.half, F.sub(1, s5))
        lo, hi = F.sub(F.two, r), F.add(F.two, r)
        if F.q % 20 in (1, 19):
            idx = [a for a in nonzero if L(F.sub(lo, a)) == -1 and L(F.add(hi, a)) == -1]
            expected = F.two
        else:
            idx = [a for a in nonzero if L(F.sub(lo, a)) == 1 and L(F.add(hi, a)) == 1]
            expected = F.neg(F.mul(F.from_int(L(F.minus_one)), r))
        reports.append(_report(F, "golden", idx, expected, note=f"sqrt5={F.fmt(s5)} r={F.fmt(r)}"))
    return reports
