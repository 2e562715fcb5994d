import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqstruct import errors
from fqstruct.dickson import (
    Poly,
    check_functional,
    check_second_kind_functional,
    check_special_values,
    chebyshev,
    chebyshev_closed_set,
    chebyshev_closure_check,
    dickson2_factor_roots,
    dickson_factor_roots,
    dickson_first,
    dickson_first_sequence,
    dickson_second,
    dickson_second_sequence,
    factor_context,
)
from fqstruct.field import field_for_q, make_field

from .conftest import fields_upto


def integer_recursion(first, k_max):
    """The same three-term recursion over Z; coefficient lists, lowest degree first."""
    seq = [[first], [0, 1]]
    while len(seq) <= k_max:
        a, b = seq[-1], seq[-2]
        nxt = [0] + a
        for i, c in enumerate(b):
            nxt[i] -= c
        seq.append(nxt)
    return seq


def reduce(coeffs, F):
    return Poly(F, tuple(F.from_int(c) for c in coeffs))


@pytest.mark.parametrize("k,coeffs", [(0, [2]), (1, [0, 1]), (2, [-2, 0, 1]), (5, [0, 5, 0, -5, 0, 1]), (6, [-2, 0, 9, 0, -6, 0, 1])])
def test_dickson_first_small(k, coeffs):
    F = make_field(23)
    assert dickson_first(F, k) == reduce(coeffs, F)


def test_d6_mod_23_printed():
    D = dickson_first(make_field(23), 6)
    assert D.coeffs == (21, 0, 9, 0, 17, 0, 1)
    assert str(D) == "x^6 + 17*x^4 + 9*x^2 + 21"


@pytest.mark.parametrize("k,coeffs", [(0, [1]), (1, [0, 1]), (2, [-1, 0, 1]), (3, [0, -2, 0, 1])])
def test_dickson_second_small(k, coeffs):
    F = make_field(23)
    assert dickson_second(F, k) == reduce(coeffs, F)


@pytest.mark.parametrize("k,coeffs", [(1, [0, 1]), (2, [-1, 0, 2]), (3, [0, -3, 0, 4])])
def test_chebyshev_small(k, coeffs):
    F = make_field(23)
    assert chebyshev(F, k) == reduce(coeffs, F)


def test_chebyshev_6_mod_23():
    # 32x^6 - 48x^4 + 18x^2 - 1
    assert chebyshev(make_field(23), 6).coeffs == (22, 0, 18, 0, 21, 0, 9)


def test_negative_degree_rejected():
    F = make_field(5)
    with pytest.raises(ValueError):
        dickson_first(F, -1)
    with pytest.raises(ValueError):
        dickson_second(F, -1)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27])
def test_recursion_matches_integer_oracle(q):
    F = field_for_q(q)
    D, E = dickson_first_sequence(F, 40), dickson_second_sequence(F, 40)
    for k, (d, e) in enumerate(zip(integer_recursion(2, 40), integer_recursion(1, 40))):
        assert D[k] == reduce(d, F)
        assert E[k] == reduce(e, F)
        assert D[k].degree == E[k].degree == k
        assert k == 0 or (D[k].is_monic() and E[k].is_monic())


def test_poly_arithmetic():
    F = make_field(7)
    p, r = Poly(F, (1, 2)), Poly(F, (3, 0, 1))
    assert (p * r).coeffs == (3, 6, 1, 2)
    assert (p + r - r) == p
    assert Poly.from_roots(F, []) == Poly.const(F, 1)
    assert Poly.from_roots(F, [2, 5]).coeffs == (3, 0, 1)
    assert Poly(F, (0, 0)).coeffs == ()
    assert str(Poly(F, ())) == "0"


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([7, 9, 11, 25, 27, 49, 101]), st.integers(0, 100), st.data())
def test_functional_equations_random(q, k, data):
    F = field_for_q(q)
    u = (data.draw(st.integers(0, q - 1)), data.draw(st.integers(0, q - 1)))
    if u == (0, 0):
        return
    check_functional(F, u, k)
    if k >= 1 and u not in ((1, 0), (F.minus_one, 0)):
        check_second_kind_functional(F, u, k)


def test_functional_errors():
    F = make_field(7)
    with pytest.raises(errors.ZeroElement):
        check_functional(F, (0, 0), 3)
    for u in ((1, 0), (6, 0)):
        with pytest.raises(errors.DegenerateU):
            check_second_kind_functional(F, u, 3)


def test_special_values_and_parity():
    for F in fields_upto(50):
        for k, D in enumerate(dickson_first_sequence(F, 30)):
            check_special_values(F, k, D)
            sign = 1 if k % 2 == 0 else F.minus_one
            assert D.substitute_scaled(F.minus_one) == D.scale(sign)


def test_factor_context_examples():
    for q, want in ((23, (-1, 6)), (5, (1, 1)), (9, (1, 2)), (3, (-1, 1))):
        ctx = factor_context(field_for_q(q))
        assert (ctx.epsilon, ctx.m) == want


def brute_root_set(F, want):
    L = F.legendre
    return [b for b in F.elements() if L(F.sub(F.two, b)) == want and L(F.add(F.two, b)) == want]


def test_dickson_factor_q23():
    F = make_field(23)
    B = dickson_factor_roots(F)
    assert B == [3, 5, 8, 15, 18, 20]
    assert [b for b in F.elements() if dickson_first(F, 6)(b) == 0] == B


@pytest.mark.parametrize("q,roots", [(3, [0]), (7, [3, 4]), (5, [0])])
def test_dickson_factor_small(q, roots):
    assert dickson_factor_roots(field_for_q(q)) == roots


def test_dickson_zero_set_is_root_set():
    for F in fields_upto(150):
        B = dickson_factor_roots(F)
        D = dickson_first(F, factor_context(F).m)
        assert [b for b in F.elements() if D(b) == 0] == B == brute_root_set(F, -1)


def test_dickson2_factor_examples():
    assert dickson2_factor_roots(make_field(7)) == [0]
    assert dickson2_factor_roots(make_field(3)) == []
    F = make_field(23)
    A = dickson2_factor_roots(F)
    assert A == brute_root_set(F, 1) == [0, 1, 7, 16, 22]
    assert [a for a in F.elements() if dickson_second(F, 5)(a) == 0] == A


def test_chebyshev_closed_set_examples():
    F = make_field(7)
    # a with 2a+2, 2a-2 both squares or zero
    assert chebyshev_closed_set(F) == [1, 3]
    for F in fields_upto(80):
        S = chebyshev_closed_set(F)
        # -1 belongs exactly when -4 is a square
        assert 1 in S and (F.minus_one in S) == (F.legendre(F.minus_one) == 1)
        chebyshev_closure_check(F, 20)


def test_chebyshev_matches_cosine_identity_over_extension():
    # C_k((v + 1/v)/2) = (v^k + v^-k)/2
    rng = random.Random(1)
    for q in (11, 25, 27):
        F = field_for_q(q)
        for _ in range(20):
            v = (rng.randrange(q), rng.randrange(1, q))
            k = rng.randrange(30)
            x = F.ext_scale(F.half, F.ext_add(v, F.ext_inv(v)))
            want = F.ext_scale(F.half, F.ext_add(F.ext_pow(v, k), F.ext_pow(F.ext_inv(v), k)))
            assert chebyshev(F, k).eval_ext(x) == want
