import pytest

from fqstruct import errors
from fqstruct.field import field_for_q, make_field, odd_prime_powers
from fqstruct.wilson import (
    ProductReport,
    golden_products,
    item4_pairs,
    oddball_permutation,
    oddball_set,
    pythagorean_symbol_identity,
    product,
    pythagorean_triples,
    sqrt_products,
    sum_identity,
    wilson_item1,
    wilson_item2,
    wilson_item3,
    wilson_item4,
)

PRIMES = [q for q, _, n in odd_prime_powers(3, 120) if n == 1]


def symbol(q):
    """Legendre symbol mod a prime from an explicit list of squares."""
    squares = {x * x % q for x in range(1, q)}
    return lambda a: 0 if a % q == 0 else (1 if a % q in squares else -1)


def prod_mod(q, xs):
    out = 1
    for x in xs:
        out = out * x % q
    return out


@pytest.mark.parametrize("q", PRIMES)
def test_items_1_to_3_against_plain_integer_oracle(q):
    L = symbol(q)
    F = make_field(q)
    idx1 = [a for a in range(q) if L(a) == -1 and L(4 - a) == -1]
    idx2 = [a for a in range(q) if L(-a) == -1 and L(4 + a) == -1]
    idx3 = [a for a in range(1, q) if L(1 - a) == -1 and L(a + 3) == -1]
    r1, r2, r3 = wilson_item1(F), wilson_item2(F), wilson_item3(F)
    assert list(r1.index_set) == idx1 and r1.product == prod_mod(q, idx1) == 2 % q
    assert list(r2.index_set) == idx2 and r2.product == prod_mod(q, idx2) == 2 * L(2) % q
    assert list(r3.index_set) == idx3 and r3.product == prod_mod(q, idx3)
    assert r3.product == (2 if q % 12 in (1, 11) else q - 1)
    assert r1.match and r2.match and r3.match


def test_item1_examples():
    r = wilson_item1(make_field(7))
    assert r.index_set == (5, 6) and r.product == 2 and r.match
    assert wilson_item1(make_field(5)).index_set == (2,)
    F = make_field(3, 2)
    r = wilson_item1(F)
    # 2 + i and 2 - i with i = x
    assert [F.fmt(a) for a in r.index_set] == ["2+x", "2+2*x"] and r.product == 2


@pytest.mark.parametrize("q,expected", [(7, 2), (3, 1), (5, 3)])
def test_item2_examples(q, expected):
    r = wilson_item2(make_field(q))
    assert r.expected == expected and r.product == expected


@pytest.mark.parametrize("q,expected", [(11, 2), (7, 6), (13, 2)])
def test_item3_examples(q, expected):
    r = wilson_item3(make_field(q))
    assert r.product == expected and r.match and r.note == ""


def test_item3_characteristic_three_is_flagged():
    for q in (3, 9, 27, 81):
        F = field_for_q(q)
        r = wilson_item3(F)
        assert r.note == "characteristic 3" and r.match
        assert r.expected == r.product == F.minus_one


def test_item4_sqrt2_example():
    F = make_field(7)
    r = wilson_item4(F, 3, 3)
    assert r.index_set == (3, 4) and r.product == 5 and r.expected == 5 and r.match


def test_item4_three_four():
    F = make_field(7)
    L = symbol(7)
    r = wilson_item4(F, 3, 4)
    idx = [a for a in range(7) if L(9 - a) == -1 and L(16 + a) == -1]
    assert list(r.index_set) == idx and r.product == prod_mod(7, idx) and r.match


def test_item4_pairs_and_symmetry():
    for q in (7, 9, 13, 17, 25, 27):
        F = field_for_q(q)
        pairs = item4_pairs(F)
        brute = sorted(
            (s, t) for s in F.elements() for t in F.elements()
            if s and t and F.add(F.square(s), F.square(t)) == F.from_int(4)
        )
        assert sorted(pairs) == brute
        for s, t in pairs:
            assert wilson_item4(F, s, t).match and wilson_item4(F, t, s).match


def test_item4_bad_parameters():
    F = make_field(7)
    for s, t in ((0, 2), (1, 1)):
        with pytest.raises(errors.BadParameters):
            wilson_item4(F, s, t)


def test_pythagorean_examples():
    for q in (7, 11, 13, 17, 19, 23, 29, 49, 121):
        F = field_for_q(q)
        assert pythagorean_symbol_identity(F, 3, 4, 5)
    F = make_field(7)
    assert pythagorean_symbol_identity(F, 3, 3, 2)
    with pytest.raises(errors.BadParameters):
        pythagorean_symbol_identity(F, 1, 1, 1)
    with pytest.raises(errors.BadParameters):
        pythagorean_symbol_identity(F, 0, 2, 2)


def test_pythagorean_triples_complete():
    F = make_field(11)
    triples = pythagorean_triples(F)
    brute = sorted(
        (a, b, g) for a in range(1, 11) for b in range(1, 11) for g in range(11) if (a * a + b * b - g * g) % 11 == 0
    )
    assert sorted(triples) == brute
    assert all(pythagorean_symbol_identity(F, *t) for t in triples)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 23, 25, 27, 49])
def test_oddball_permutation(q):
    F = field_for_q(q)
    L = symbol(q) if F.n == 1 else F.legendre
    S = oddball_permutation(F)
    if F.n == 1:
        assert S == [b for b in range(q) if L(2 - b) == -1 and L(2 + b) == 1]
    assert sorted(F.sub(F.square(b), F.two) for b in S) == sorted(S)


def test_oddball_set_small():
    assert oddball_set(make_field(3)) == []
    assert oddball_permutation(make_field(3)) == []


@pytest.mark.parametrize("q", [7, 9, 11, 25])
def test_sum_identity_all_c(q):
    F = field_for_q(q)
    for c in F.elements():
        assert sum_identity(F, c)


def test_sum_identity_c_zero_products_cancel():
    F = make_field(13)
    L = symbol(13)
    plus = prod_mod(13, [-a for a in range(13) if L(a * (a + 4)) == 1])
    minus = prod_mod(13, [-b for b in range(13) if L(b * (b + 4)) == -1])
    assert (plus + minus) % 13 == 0
    assert sum_identity(F, 0)


def test_sqrt_products_q7():
    F = make_field(7)
    with pytest.raises(errors.NotApplicable):
        sqrt_products(F, 2)
    r = sqrt_products(F, 1)
    L = symbol(7)
    idx = [a for a in range(1, 7) if L(1 - a) == -1 and L(3 + a) == -1]
    assert list(r.index_set) == idx and r.compare == "square"
    assert r.product ** 2 % 7 == 1 and r.match
    for j in (0, 4):
        with pytest.raises(errors.DegenerateJ):
            sqrt_products(F, j)


def test_sqrt_products_q11_both_nonsquares():
    F = make_field(11)
    L = symbol(11)
    js = [j for j in range(1, 11) if j != 4 and L(j) == -1 and L(4 - j) == -1]
    assert js
    for j in js:
        r = sqrt_products(F, j)
        idx = [a for a in range(1, 11) if L(j - a) == 1 and L(4 - j + a) == -1]
        assert list(r.index_set) == idx
        assert r.product ** 2 % 11 == j * pow(4 - j, -1, 11) % 11 and r.match


@pytest.mark.parametrize("q,mode", [(19, "nonsquare"), (11, "square"), (41, "nonsquare"), (29, "square"), (49, "square")])
def test_golden_products(q, mode):
    F = field_for_q(q)
    reports = golden_products(F)
    assert len(reports) == 2 and all(r.match for r in reports)
    if mode == "nonsquare":
        assert all(r.expected == 2 for r in reports)
    roots = {F.sqrt(F.from_int(5))[0][0], F.neg(F.sqrt(F.from_int(5))[0][0])}
    assert {r.note.split()[0] for r in reports} == {f"sqrt5={F.fmt(s)}" for s in roots}


def test_golden_q11_square_product_is_r():
    F = make_field(11)
    L = symbol(11)
    for r in golden_products(F):
        s5 = int(r.note.split()[0].split("=")[1])
        rr = (1 - s5) * 6 % 11
        idx = [a for a in range(1, 11) if L(2 - rr - a) == 1 and L(2 + rr + a) == 1]
        assert list(r.index_set) == idx and r.product == rr


def test_golden_not_applicable():
    with pytest.raises(errors.NotApplicable):
        golden_products(make_field(7))
    with pytest.raises(errors.CharacteristicFive):
        golden_products(make_field(5))


def test_empty_index_set_means_product_one():
    # q = 3, j = 2: j is a nonsquare and 4 - j = 2 too, and no a qualifies
    r = sqrt_products(make_field(3), 2)
    assert isinstance(r, ProductReport)
    assert r.index_set == () and r.product == 1 and r.expected == 1 and r.match
    assert product(make_field(7), []) == 1
