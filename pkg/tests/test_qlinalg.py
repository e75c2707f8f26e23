import random
from fractions import Fraction
from itertools import combinations

import pytest

from stablesq.errors import InvalidInputError
from stablesq.monomial import GRLEX, LEX, Monomial, _basis_tuples, dim_component
from stablesq.qlinalg import (
    RationalSubspace,
    apolar_dual,
    apolar_perp,
    catalecticant_rows,
    eliminate_variable,
    has_base_point,
    hilbert_function_rational,
    initial_subspace,
    monomial_span,
    power_in_span,
    product_rational,
    quotient_by_linear_form,
    random_linear_form,
    random_subspace,
    rational_subspace_from_json,
    span,
    square_rational,
)
from stablesq.subspace import (
    MonomialSubspace,
    ideal_hilbert_function,
    is_base_point_free,
    product,
    variable_quotient,
)


def test_rref_properties():
    rng = random.Random(7)
    for _ in range(20):
        n, d = rng.choice(((2, 2), (3, 2), (2, 3)))
        q = dim_component(n, d)
        rows = [[rng.randint(-5, 5) for _ in range(q)] for _ in range(rng.randint(1, q))]
        U = span(rows, n, d)
        # every original row lies in the span
        for row in rows:
            assert U.contains(row)
        assert U.dim == len(U.rows) == len(U.pivots)
        # unit pivot columns
        for i, p in enumerate(U.pivots):
            assert U.rows[i][p] == 1
            for j in range(U.dim):
                if j != i:
                    assert U.rows[j][p] == 0


def test_span_equality_is_representation_independent():
    a = span([[1, 0, 1], [0, 1, 0]], 2, 2)
    b = span([[1, 1, 1], [2, 1, 2]], 2, 2)
    assert a == b
    assert hash(a) == hash(b)
    assert a != span([[1, 0, 0]], 2, 2)


def test_monomial_span_and_initial_round_trip():
    for n, d in ((2, 2), (3, 2), (3, 3)):
        basis = _basis_tuples(n, d)
        for size in (1, 2):
            for comp in combinations(basis, size):
                U = MonomialSubspace(n, d, comp)
                R = monomial_span(U)
                assert R.dim == U.dim
                assert initial_subspace(R) == U


def test_initial_monomial_uses_ascending_convention():
    # x2^2 beats x1^2, so it is the pivot of x1^2 - x2^2
    U = span([{(2, 0): 1, (0, 2): -1}], 2, 2)
    assert initial_subspace(U).is_member(Monomial((0, 2)))


def test_apolar_perp_and_dual_are_inverse():
    rng = random.Random(3)
    for n, d in ((2, 2), (3, 2), (3, 3)):
        for codim in (1, 2):
            U = random_subspace(n, d, codim, rng, bound=7)
            dual = apolar_dual(U)
            assert len(dual) == codim
            assert apolar_perp(dual, n, d) == U


def test_apolar_perp_weights():
    # perp of x1^2 in two variables: <x1^2, x1^2> = 2, so x1^2 itself is
    # not in the perp while x1*x2 and x2^2 are
    U = apolar_perp([{(2, 0): 1}], 2, 2)
    assert U.dim == 2
    assert U.contains({(1, 1): 1})
    assert U.contains({(0, 2): 1})
    assert not U.contains({(2, 0): 1})


def test_product_rational_matches_monomial_product():
    for n, d in ((2, 2), (3, 2)):
        basis = _basis_tuples(n, d)
        for size in (1, 2):
            for comp in combinations(basis, size):
                U = MonomialSubspace(n, d, comp)
                got = product_rational(monomial_span(U), monomial_span(U))
                want = product(U, U)
                assert got.dim == want.dim
                assert got == monomial_span(want)


def test_quotient_matches_variable_quotient():
    for n, d in ((2, 2), (3, 2), (3, 3)):
        basis = _basis_tuples(n, d)
        for comp in combinations(basis, 2):
            U = MonomialSubspace(n, d, comp)
            for i in range(n):
                l = [1 if j == i else 0 for j in range(n)]
                got = quotient_by_linear_form(monomial_span(U), l)
                want = variable_quotient(U, i + 1)
                assert got == monomial_span(want), (comp, i)


def test_hilbert_function_rational_matches_monomial():
    for n, d in ((2, 2), (3, 2)):
        basis = _basis_tuples(n, d)
        for comp in combinations(basis, 2):
            U = MonomialSubspace(n, d, comp)
            a = hilbert_function_rational(monomial_span(U), 2 * d)
            b = ideal_hilbert_function(U, 2 * d)
            assert a.values == b.values


def test_catalecticant_rank_detects_powers():
    # (x + y)^3 has rank 1
    binomial_cube = {(3, 0): 1, (2, 1): 3, (1, 2): 3, (0, 3): 1}
    rows = catalecticant_rows(binomial_cube, 2, 3)
    assert span(rows, 2, 2).dim == 1
    # x^3 + y^3 has rank 2
    rows = catalecticant_rows({(3, 0): 1, (0, 3): 1}, 2, 3)
    assert span(rows, 2, 2).dim == 2


def test_power_in_span_hand_cases():
    x3 = {(3, 0): 1}
    y3 = {(0, 3): 1}
    x2y = {(2, 1): 1}
    xy2 = {(1, 2): 1}
    assert power_in_span([x3, y3], 2, 3)  # contains x^3 itself
    assert power_in_span([x3, x2y], 2, 3)  # contains x^2(x + 3ty), power at t=0
    assert not power_in_span([x2y, xy2], 2, 3)  # xy(sx + ty) is never a cube
    assert not power_in_span([x2y], 2, 3)
    assert power_in_span([binomial_power(2, 3)], 2, 3)
    assert power_in_span([], 2, 3) is False
    # degree 1: everything is a power
    assert power_in_span([[1, 1]], 2, 1)
    with pytest.raises(InvalidInputError):
        power_in_span([x3, y3, x2y], 2, 3)


def binomial_power(n, d):
    # (x1 + ... + xn)^d by repeated multiplication
    from math import factorial

    out = {}
    for t in _basis_tuples(n, d):
        coef = factorial(d)
        for e in t:
            coef //= factorial(e)
        out[t] = coef
    return out


def test_power_in_span_root_at_each_end_of_the_pencil():
    # power sits at (1 : 0): first generator is itself a power
    assert power_in_span([{(4, 0): 1}, {(2, 2): 1}], 2, 4)
    # power sits at (0 : 1): second generator is the power
    assert power_in_span([{(2, 2): 1}, {(0, 4): 1}], 2, 4)
    # power sits in the middle: x^3 + y^3 and 3(x^2 y + x y^2) sum to (x+y)^3
    f = {(3, 0): 1, (0, 3): 1}
    g = {(2, 1): 3, (1, 2): 3}
    assert power_in_span([f, g], 2, 3)


def test_power_in_span_three_variables():
    f = {(2, 1, 0): 1}  # x^2 y
    g = {(0, 1, 2): 1}  # y z^2
    assert not power_in_span([f, g], 3, 3)
    h = binomial_power(3, 3)
    assert power_in_span([f, h], 3, 3)


def test_has_base_point_matches_monomial_criterion():
    # for monomial subspaces a base point forces a missing pure power
    for n, d in ((2, 2), (2, 3), (3, 2)):
        basis = _basis_tuples(n, d)
        for size in (1, 2):
            for comp in combinations(basis, size):
                U = MonomialSubspace(n, d, comp)
                assert has_base_point(monomial_span(U)) == (
                    not is_base_point_free(U)
                ), comp


def test_eliminate_variable():
    # x1^2 * x3 with x3 = -(x1 + x2) gives -x1^3 - x1^2 x2
    out = eliminate_variable({(2, 0, 1): 1}, 3, 3, [1, 1, 1])
    got = span([out], 2, 3)
    assert got == span([{(3, 0): 1, (2, 1): 1}], 2, 3)
    # monomials without the last variable pass through
    out = eliminate_variable({(2, 1, 0): 1}, 3, 3, [0, 0, 1])
    assert span([out], 2, 3) == span([{(2, 1): 1}], 2, 3)
    with pytest.raises(InvalidInputError):
        eliminate_variable({(2, 0, 1): 1}, 3, 3, [1, 1, 0])


def test_rational_serialization_round_trip():
    U = span([{(2, 0): 1, (0, 2): Fraction(1, 3)}], 2, 2)
    V = rational_subspace_from_json(U.to_json())
    assert V == U
    W = span([[1, 0, 0]], 2, 2, order=GRLEX)
    assert rational_subspace_from_json(W.to_json()).order == GRLEX


def test_random_subspace_is_seeded_and_has_requested_codim():
    a = random_subspace(3, 2, 2, random.Random(11))
    b = random_subspace(3, 2, 2, random.Random(11))
    assert a == b
    assert a.codim == 2
    l = random_linear_form(3, random.Random(11))
    assert any(x != 0 for x in l)


def test_square_rational_guard():
    from stablesq.errors import BudgetExceededError
    import stablesq.qlinalg as q

    U = random_subspace(3, 2, 1, random.Random(5))
    assert square_rational(U).d == 4
    old = q.PRODUCT_DIM_GUARD
    try:
        q.PRODUCT_DIM_GUARD = 1
        with pytest.raises(BudgetExceededError):
            square_rational(U)
    finally:
        q.PRODUCT_DIM_GUARD = old


def test_order_mismatch_rejected():
    U = span([[1, 0, 0]], 2, 2, order=LEX)
    V = span([[1, 0, 0]], 2, 2, order=GRLEX)
    with pytest.raises(InvalidInputError):
        product_rational(U, V)
