from itertools import combinations
from math import comb

import pytest

from stablesq.errors import BudgetExceededError, InvalidInputError
from stablesq.monomial import _basis_tuples, dim_component
from stablesq.search import (
    closed_form_m,
    compute_m,
    compute_m0_monomial,
    default_budget,
    main_bound,
    small_subspace_bound,
    table_cell,
    verify_degree_stability,
    verify_table,
)
from stablesq.subspace import MonomialSubspace, square
from stablesq.tables import covered, published_value


def _brute_max_over_all_monomial(n, d, k):
    """Oracle: max codim U^2 over ALL monomial complements of size k.

    The family of all subspaces attains its maximum on a strongly stable
    one, and monomial subspaces sit between the strongly stable family
    and all subspaces, so this maximum must agree with the search value.
    """
    best = -1
    for comp in combinations(_basis_tuples(n, d), k):
        c = square(MonomialSubspace(n, d, comp)).codim
        if c > best:
            best = c
    return best


def test_compute_m_matches_unrestricted_monomial_maximum():
    grids = [(2, d, k) for d in (2, 3, 4) for k in range(1, 5)]
    grids += [(3, 2, k) for k in range(1, 4)]
    grids += [(3, 3, k) for k in range(1, 4)]
    for n, d, k in grids:
        if k > dim_component(n, d):
            continue
        assert compute_m(n, d, k).value == _brute_max_over_all_monomial(n, d, k), (
            n,
            d,
            k,
        )


def test_compute_m_reports_witnesses():
    r = compute_m(3, 2, 1)
    assert r.value == 3
    assert r.witness_count == 1
    assert r.witnesses[0].complement == frozenset({(2, 0, 0)})
    assert r.restricted_to == "strongly-stable"
    assert r.searched >= 1


def test_closed_form_guards():
    assert closed_form_m(4, 4, 4) == comb(6, 3)
    assert closed_form_m(6, 3, 3) == comb(5, 3) + 9
    with pytest.raises(InvalidInputError):
        closed_form_m(2, 3, 3)
    with pytest.raises(InvalidInputError):
        closed_form_m(3, 2, 3)


def test_known_anchor_values():
    assert compute_m(2, 2, 2).value == 4
    assert compute_m(3, 3, 3).value == 10
    assert compute_m(4, 2, 2).value == 8
    assert compute_m(6, 3, 3).value == 19
    # strictly below the closed form once n < k blocks the doubling
    assert compute_m(2, 3, 3).value == 6
    assert compute_m(3, 4, 4).value == 13


def test_m0_hand_values():
    for n in (2, 3, 4):
        assert compute_m0_monomial(n, 2, 1).value == 2
    assert compute_m0_monomial(3, 3, 1).value == 1
    assert compute_m0_monomial(3, 2, 2).value == 6
    assert compute_m0_monomial(3, 3, 2).value == 4
    assert compute_m0_monomial(3, 4, 2).value == 4
    assert compute_m0_monomial(2, 5, 2).value == 2
    assert compute_m0_monomial(2, 5, 2).restricted_to == "bpf-monomial"


def test_m0_aggregation_matches_direct_search():
    # the k = 2 covered-count tables must agree with scanning all pairs
    for n, d in ((2, 4), (3, 2), (3, 3), (3, 4), (4, 2)):
        free = [t for t in _basis_tuples(n, d) if max(t) < d]
        if len(free) < 2:
            continue
        brute = max(
            square(MonomialSubspace(n, d, pair)).codim
            for pair in combinations(free, 2)
        )
        assert compute_m0_monomial(n, d, 2).value == brute, (n, d)


def test_m0_general_path_matches_brute_force():
    free = [t for t in _basis_tuples(3, 2) if max(t) < 2]
    brute = max(
        square(MonomialSubspace(3, 2, c)).codim for c in combinations(free, 3)
    )
    assert compute_m0_monomial(3, 2, 3).value == brute


def test_m0_rejects_impossible_codimension():
    with pytest.raises(InvalidInputError):
        compute_m0_monomial(2, 2, 2)  # only one non-power in two variables


def test_budget_paths():
    with pytest.raises(BudgetExceededError):
        compute_m(3, 3, 3, budget=1)
    with pytest.raises(BudgetExceededError):
        compute_m0_monomial(4, 3, 3, budget=10)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("STABLESQ_BUDGET", "123")
    assert default_budget() == 123
    monkeypatch.setenv("STABLESQ_BUDGET", "abc")
    with pytest.raises(InvalidInputError):
        default_budget()
    monkeypatch.setenv("STABLESQ_BUDGET", "0")
    with pytest.raises(InvalidInputError):
        default_budget()
    monkeypatch.delenv("STABLESQ_BUDGET")
    assert default_budget() == 10_000_000


def test_bound_helpers():
    assert main_bound(2) == 4 + 4
    assert small_subspace_bound(3, 3) == 6
    with pytest.raises(InvalidInputError):
        main_bound(0)
    with pytest.raises(InvalidInputError):
        small_subspace_bound(3, 2)


def test_table_cell_handles_untabulated():
    assert table_cell(3, 2, 6) is None  # k >= dim A(3)_2
    assert table_cell(3, 2, 1) == 3


def test_published_table_spot_values():
    assert published_value(3, 2, 1) == 3
    assert published_value(3, 2, 2) == 6
    assert published_value(6, 8, 8) == 68
    assert published_value(5, 5, 9) == 63
    # dash cells are covered and carry None, matching the untabulated marker
    assert covered(3, 2, 6)
    assert published_value(3, 2, 6) is None
    assert not covered(7, 2, 1)
    assert not covered(3, 10, 1)


def test_verify_table_small_grid():
    rep = verify_table(range(3, 5), range(2, 4), range(1, 4))
    assert rep.clean
    assert rep.compared == 12
    assert rep.matches == 12
    assert rep.cells[(3, 2, 1)] == 3


def test_degree_stability_report():
    rep = verify_degree_stability(3, 2, range(2, 6))
    assert rep.stable
    assert rep.reference == compute_m(3, 2, 2).value
    assert set(rep.values) == {2, 3, 4, 5}
    with pytest.raises(InvalidInputError):
        verify_degree_stability(3, 2, [1])  # degree below k
    with pytest.raises(InvalidInputError):
        verify_degree_stability(3, 2, [])
