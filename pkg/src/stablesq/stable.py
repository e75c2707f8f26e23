"""Strongly stable subspaces: predicate, enumeration, extremal witness.

A subspace U is strongly stable when its complement is closed under every
move x_j * M / x_i with j < i, that is, moving one factor to a smaller
variable never leaves the complement.  Adjacent moves (i to i-1) generate
all such moves, which keeps both the predicate and the enumeration cheap.
Every nonempty complement of this kind contains x_1^d.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BudgetExceededError, InvalidInputError
from .monomial import Monomial, dim_component
from .subspace import MonomialSubspace


def _adjacent_down_moves(t: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Moves x_{i-1} * t / x_i, one factor shifted to the next smaller variable."""
    for i in range(1, len(t)):
        if t[i] > 0:
            yield t[: i - 1] + (t[i - 1] + 1, t[i] - 1) + t[i + 1 :]


def _adjacent_up_moves(t: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for i in range(len(t) - 1):
        if t[i] > 0:
            yield t[:i] + (t[i] - 1, t[i + 1] + 1) + t[i + 2 :]


def is_strongly_stable(U: MonomialSubspace, all_moves: bool = False) -> bool:
    """Check closure of the complement under moves to smaller variables.

    With all_moves the full quadratic set of moves x_j * M / x_i, j < i,
    is tested; by default only adjacent moves are, which is equivalent
    because a general move is a chain of adjacent ones.
    """
    comp = {tuple(M) for M in U.complement}
    if all_moves:
        for t in comp:
            for i in range(1, len(t)):
                if t[i] == 0:
                    continue
                for j in range(i):
                    moved = list(t)
                    moved[i] -= 1
                    moved[j] += 1
                    if tuple(moved) not in comp:
                        return False
        return True
    for t in comp:
        for moved in _adjacent_down_moves(t):
            if moved not in comp:
                return False
    return True


def enumerate_strongly_stable(
    n: int, d: int, k: int, budget: int | None = None
) -> list[MonomialSubspace]:
    """All strongly stable subspaces of codimension k in degree d.

    Complements are grown one monomial at a time in ascending lex order.
    Every prefix of a complement listed this way is itself closed under
    down moves, and conversely the lex-smallest missing element of any
    larger complement is reachable by one adjacent up move from the
    prefix, so the search tree hits each complement exactly once.

    Out-of-range k yields an empty list.  A budget bounds the number of
    search nodes; exceeding it raises BudgetExceededError.
    """
    if n < 1 or d < 0:
        raise InvalidInputError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if k < 0 or k > dim_component(n, d):
        return []
    if k == 0:
        return [MonomialSubspace.full(n, d)]
    if d == 0:
        return [MonomialSubspace.zero(n, d)] if k == 1 else []

    results: list[MonomialSubspace] = []
    root = (d,) + (0,) * (n - 1)
    nodes = 0

    def lexkey(t: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(reversed(t))

    def grow(chosen: list[tuple[int, ...]], members: set[tuple[int, ...]]):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceededError(
                f"enumeration for n={n}, d={d}, k={k} exceeded budget {budget} "
                f"(at least {len(results)} subspaces found in {nodes} nodes)",
                seen=nodes,
            )
        if len(chosen) == k:
            results.append(MonomialSubspace(n, d, chosen))
            return
        last = lexkey(chosen[-1])
        candidates = set()
        for t in chosen:
            for up in _adjacent_up_moves(t):
                if up in members or lexkey(up) <= last:
                    continue
                if all(down in members for down in _adjacent_down_moves(up)):
                    candidates.add(up)
        for cand in sorted(candidates, key=lexkey):
            members.add(cand)
            chosen.append(cand)
            grow(chosen, members)
            chosen.pop()
            members.discard(cand)

    grow([root], {root})
    return results


def count_strongly_stable(n: int, d: int, k: int, budget: int | None = None) -> int:
    return len(enumerate_strongly_stable(n, d, k, budget=budget))


def extremal_complement(n: int, d: int, k: int) -> list[Monomial]:
    """Complement {x_1^d} plus {x_1^{d-1} x_j : 2 <= j <= k}; needs k <= n."""
    if not (1 <= k <= n):
        raise InvalidInputError(f"need 1 <= k <= n={n}, got k={k}")
    if d < 1:
        raise InvalidInputError(f"need d >= 1, got d={d}")
    comp = [Monomial((d,) + (0,) * (n - 1))]
    for j in range(2, k + 1):
        exps = [0] * n
        exps[0] = d - 1
        exps[j - 1] += 1
        comp.append(Monomial(exps))
    return comp


def extremal_subspace(n: int, d: int, k: int) -> MonomialSubspace:
    """The codimension-k subspace whose square has the largest codimension.

    Extremality holds in the regime n, d >= k, which is enforced here;
    `extremal_complement` builds the same shape without the regime guard.
    """
    if not (1 <= k <= n and k <= d):
        raise InvalidInputError(
            f"extremal shape is only maximizing for n, d >= k; got n={n}, d={d}, k={k}"
        )
    return MonomialSubspace(n, d, extremal_complement(n, d, k))


def extend_stable(U: MonomialSubspace) -> MonomialSubspace:
    """Grow a strongly stable U by one dimension, staying strongly stable.

    Starting from x_1^d, factors are pushed toward larger variables while
    the result stays in the complement.  The walk stops at a monomial
    with no up move left inside the complement, which is exactly the
    condition for removing it to leave a valid complement.  The zero
    subspace extends to span(x_n^d).
    """
    if not is_strongly_stable(U):
        raise InvalidInputError("extend_stable needs a strongly stable subspace")
    comp = {tuple(M) for M in U.complement}
    if not comp:
        raise InvalidInputError("the full space cannot be extended")
    n, d = U.n, U.d
    cur = (d,) + (0,) * (n - 1)
    while True:
        step = None
        for j in range(n - 1):
            if cur[j] > 0:
                up = cur[:j] + (cur[j] - 1, cur[j + 1] + 1) + cur[j + 2 :]
                if up in comp:
                    step = up
                    break
        if step is None:
            break
        cur = step
    comp.discard(cur)
    return MonomialSubspace(n, d, comp)
