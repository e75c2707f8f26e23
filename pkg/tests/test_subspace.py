from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablesq.errors import BudgetExceededError, InvalidInputError
from stablesq.monomial import Monomial, _basis_tuples, dim_component, divisors_of_degree
from stablesq.subspace import (
    MonomialSubspace,
    SquareIndex,
    ideal_hilbert_function,
    is_base_point_free,
    lift,
    product,
    product_naive,
    restrict_vars,
    square,
    square_index,
    subspace_from_json,
    subspace_from_text,
    variable_quotient,
)


def complements(n, d, max_size):
    basis = _basis_tuples(n, d)
    return st.lists(
        st.sampled_from(basis), max_size=max_size, unique=True
    ).map(lambda c: MonomialSubspace(n, d, c))


def test_construction_and_validation():
    U = MonomialSubspace(2, 2, [(2, 0)])
    assert U.codim == 1
    assert U.dim == dim_component(2, 2) - 1
    assert Monomial((1, 1)) in U.members
    assert not U.is_member(Monomial((2, 0)))
    with pytest.raises(InvalidInputError):
        MonomialSubspace(2, 2, [(1, 0)])  # wrong degree
    with pytest.raises(InvalidInputError):
        MonomialSubspace(2, 2, [(2, 0, 0)])  # wrong variable count
    assert MonomialSubspace.full(2, 2).codim == 0
    assert MonomialSubspace.zero(2, 2).dim == 0


def test_from_members_inverts_complement():
    basis = [Monomial(t) for t in _basis_tuples(3, 2)]
    U = MonomialSubspace.from_members(3, 2, basis[:4])
    assert sorted(U.members) == sorted(basis[:4])


def test_serialization_round_trips():
    U = MonomialSubspace(3, 2, [(2, 0, 0), (1, 1, 0)])
    assert subspace_from_json(U.to_json()) == U
    assert subspace_from_text(U.to_text()) == U
    with pytest.raises(InvalidInputError):
        subspace_from_text("2 2\n1 1\n")  # header needs n d codim
    with pytest.raises(InvalidInputError):
        subspace_from_text("2 2 1\n1 0\n")  # row degree mismatch


def test_product_matches_naive_oracle_exhaustive():
    basis = _basis_tuples(2, 2)
    smalls = [
        MonomialSubspace(2, 2, c)
        for size in range(0, 4)
        for c in combinations(basis, size)
    ]
    for U in smalls:
        for V in smalls:
            assert product(U, V).complement == product_naive(U, V).complement


@given(complements(3, 2, 4), complements(3, 3, 4))
def test_product_matches_naive_oracle_random(U, V):
    assert product(U, V).complement == product_naive(U, V).complement


@given(complements(3, 2, 3))
def test_square_index_matches_product(U):
    idx = square_index(3, 2, 6)
    assert idx.codim_square(U.complement) == square(U).codim


def test_square_index_rejects_large_complements():
    idx = SquareIndex(2, 2, 2)
    with pytest.raises(InvalidInputError):
        idx.codim_square(frozenset({(2, 0), (1, 1)}))  # needs cap >= 4


def test_square_edge_subspaces():
    assert square(MonomialSubspace.full(2, 2)).codim == 0
    assert square(MonomialSubspace.zero(2, 2)).codim == dim_component(2, 4)


def test_product_budget():
    U = MonomialSubspace.full(3, 3)
    with pytest.raises(BudgetExceededError) as err:
        product(U, U, budget=3)
    assert err.value.seen >= 3


def _ideal_complement_oracle(U, t):
    if t < U.d:
        return list(_basis_tuples(U.n, t))
    out = []
    for T in _basis_tuples(U.n, t):
        if all(M in U.complement for M in divisors_of_degree(Monomial(T), U.d)):
            out.append(T)
    return out


@given(complements(3, 2, 5))
def test_hilbert_function_against_divisor_oracle(U):
    hf = ideal_hilbert_function(U, 5)
    for t in range(0, 6):
        assert hf[t] == len(_ideal_complement_oracle(U, t))
    assert hf.generated_in_degree == U.d


def test_variable_quotient_hand_values():
    U = MonomialSubspace(2, 2, [(0, 2)])  # missing x2^2
    V = variable_quotient(U, 2)  # members x1*x2 / x2, x1^2 has no x2
    assert V.d == 1
    assert V.complement == frozenset({Monomial((0, 1))})
    W = variable_quotient(U, 1)
    assert W.codim == 0
    with pytest.raises(InvalidInputError):
        variable_quotient(U, 3)


def test_lift_pads_complement():
    U = MonomialSubspace(2, 2, [(2, 0)])
    L = lift(U, 2)
    assert L.n == 4 and L.d == 2
    assert L.complement == frozenset({Monomial((2, 0, 0, 0))})
    assert L.codim == U.codim


def test_restrict_vars():
    U = MonomialSubspace(3, 2, [(2, 0, 0), (1, 1, 0)])
    R = restrict_vars(U, 2)
    assert R.n == 2
    assert R.complement == frozenset({Monomial((2, 0)), Monomial((1, 1))})
    # complement monomials using a dropped variable restrict to zero
    W = restrict_vars(MonomialSubspace(3, 2, [(0, 0, 2)]), 2)
    assert W.codim == 0
    with pytest.raises(InvalidInputError):
        restrict_vars(U, 1)


def test_base_point_detection():
    assert is_base_point_free(MonomialSubspace(2, 2, [(1, 1)]))
    assert not is_base_point_free(MonomialSubspace(2, 2, [(2, 0)]))
    # full space has no base point, zero subspace is all base points
    assert is_base_point_free(MonomialSubspace.full(2, 2))
    assert not is_base_point_free(MonomialSubspace.zero(2, 2))


def test_square_known_codimensions():
    # missing one pure power forces codim n on the square
    for n in (2, 3, 4):
        for d in (2, 3):
            U = MonomialSubspace(n, d, [tuple(d if i == 0 else 0 for i in range(n))])
            assert square(U).codim == n
    # the extremal two-variable example in degree 2
    U = MonomialSubspace(2, 2, [(2, 0), (1, 1)])
    assert square(U).codim == 4
    assert square(U).complement == frozenset(
        Monomial(t) for t in [(4, 0), (3, 1), (2, 2), (1, 3)]
    )


def test_square_index_cache_consistency():
    a = square_index(3, 2, 4)
    b = square_index(3, 2, 4)
    assert a is b
    assert square_index(3, 2, 6) is not a
