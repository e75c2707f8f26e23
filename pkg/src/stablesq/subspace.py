"""Monomial subspaces of a graded component and products between them.

A subspace is stored by its complement: the set of degree-d monomials NOT
in the space.  Codimension, products, and Hilbert functions all read off
the complement, which stays small in the regimes of interest.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import BudgetExceededError, InvalidInputError
from .macaulay import HilbertFunction
from .monomial import (
    LEX,
    Monomial,
    MonomialOrder,
    _basis_tuples,
    count_divisors,
    dim_component,
    divisors_of_degree,
)


class MonomialSubspace:
    """Span of a set of degree-d monomials in n variables."""

    __slots__ = ("n", "d", "complement", "_members")

    def __init__(self, n: int, d: int, complement: Iterable):
        if n < 1 or d < 0:
            raise InvalidInputError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
        comp = frozenset(Monomial(M) for M in complement)
        for M in comp:
            if len(M) != n:
                raise InvalidInputError(f"{M!r} does not live in {n} variables")
            if M.degree != d:
                raise InvalidInputError(f"{M!r} does not have degree {d}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "complement", comp)
        object.__setattr__(self, "_members", None)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialSubspace is immutable")

    @classmethod
    def from_members(cls, n: int, d: int, members: Iterable) -> "MonomialSubspace":
        mem = frozenset(Monomial(M) for M in members)
        comp = [t for t in _basis_tuples(n, d) if t not in mem]
        if len(mem) + len(comp) != dim_component(n, d):
            raise InvalidInputError("members are not degree-d monomials in n variables")
        return cls(n, d, comp)

    @classmethod
    def full(cls, n: int, d: int) -> "MonomialSubspace":
        return cls(n, d, ())

    @classmethod
    def zero(cls, n: int, d: int) -> "MonomialSubspace":
        return cls(n, d, _basis_tuples(n, d))

    @property
    def codim(self) -> int:
        return len(self.complement)

    @property
    def dim(self) -> int:
        return dim_component(self.n, self.d) - len(self.complement)

    @property
    def members(self) -> tuple[Monomial, ...]:
        cached = self._members
        if cached is None:
            cached = tuple(
                Monomial(t)
                for t in sorted(
                    (t for t in _basis_tuples(self.n, self.d) if t not in self.complement),
                    key=LEX.key,
                    reverse=True,
                )
            )
            object.__setattr__(self, "_members", cached)
        return cached

    def is_member(self, M) -> bool:
        M = Monomial(M)
        if len(M) != self.n or M.degree != self.d:
            return False
        return M not in self.complement

    def sorted_complement(self, order: MonomialOrder = LEX) -> list[Monomial]:
        return sorted(self.complement, key=order.key, reverse=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialSubspace)
            and self.n == other.n
            and self.d == other.d
            and self.complement == other.complement
        )

    def __hash__(self) -> int:
        return hash((self.n, self.d, self.complement))

    def __repr__(self) -> str:
        comp = ", ".join(M.to_text() for M in self.sorted_complement())
        return f"MonomialSubspace(n={self.n}, d={self.d}, codim={self.codim}, complement=[{comp}])"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "complement": [list(M) for M in self.sorted_complement()],
        }

    def to_text(self) -> str:
        lines = [f"{self.n} {self.d} {self.codim}"]
        for M in self.sorted_complement():
            lines.append(" ".join(str(e) for e in M))
        return "\n".join(lines) + "\n"


def subspace_from_json(data: dict) -> MonomialSubspace:
    try:
        return MonomialSubspace(int(data["n"]), int(data["d"]), data["complement"])
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"bad subspace record: {exc}") from exc


def subspace_from_text(text: str) -> MonomialSubspace:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise InvalidInputError("empty subspace text")
    header = lines[0].split()
    if len(header) != 3:
        raise InvalidInputError(f"bad header {lines[0]!r}, expected 'n d codim'")
    n, d, k = (int(x) for x in header)
    comp = []
    for ln in lines[1:]:
        exps = tuple(int(x) for x in ln.split())
        comp.append(exps)
    if len(comp) != k:
        raise InvalidInputError(f"header announces codim {k} but {len(comp)} rows follow")
    return MonomialSubspace(n, d, comp)


def codim(U: MonomialSubspace) -> int:
    return U.codim


def is_base_point_free(U: MonomialSubspace) -> bool:
    """True when the common zero locus of the members is empty.

    For a monomial subspace this happens exactly when every pure power
    x_i^d is a member: a missing power makes the coordinate point with
    x_i = 1 a base point, and a present power keeps any point with
    x_i != 0 out of the zero locus.
    """
    if U.d == 0:
        return U.codim == 0
    for M in U.complement:
        if max(M) == U.d:
            return False
    return True


def _product_complement(
    n: int,
    SU: frozenset,
    SV: frozenset,
    dU: int,
    dV: int,
    budget: int | None,
) -> list[tuple[int, ...]]:
    comp = []
    seen = 0
    for T in _basis_tuples(n, dU + dV):
        seen += 1
        if budget is not None and seen > budget:
            raise BudgetExceededError(
                f"product scan exceeded budget {budget} "
                f"(at least {seen} candidates in degree {dU + dV})",
                seen=seen,
            )
        for M in divisors_of_degree(T, dU):
            if M in SU:
                continue
            N = tuple(b - a for a, b in zip(M, T))
            if N not in SV:
                break  # M * N realizes T inside the product
        else:
            comp.append(T)
    return comp


def product(
    U: MonomialSubspace, V: MonomialSubspace, budget: int | None = None
) -> MonomialSubspace:
    """The subspace U * V of degree d_U + d_V spanned by pairwise products.

    A monomial T lies outside the product exactly when every factorization
    T = M * N with deg M = d_U has M outside U or N outside V, so the scan
    short-circuits at the first factorization that works.
    """
    if U.n != V.n:
        raise InvalidInputError(f"mixed variable counts {U.n} and {V.n}")
    comp = _product_complement(U.n, U.complement, V.complement, U.d, V.d, budget)
    return MonomialSubspace(U.n, U.d + V.d, comp)


def product_naive(U: MonomialSubspace, V: MonomialSubspace) -> MonomialSubspace:
    """Product by expanding all member pairs.  Slow; kept as a cross-check."""
    if U.n != V.n:
        raise InvalidInputError(f"mixed variable counts {U.n} and {V.n}")
    members = {
        tuple(a + b for a, b in zip(M, N)) for M in U.members for N in V.members
    }
    return MonomialSubspace.from_members(U.n, U.d + V.d, members)


def square(U: MonomialSubspace, budget: int | None = None) -> MonomialSubspace:
    return product(U, U, budget=budget)


def ideal_hilbert_function(U: MonomialSubspace, max_degree: int) -> HilbertFunction:
    """Hilbert function of the quotient by the ideal generated by U.

    Entry i counts the degree-i monomials outside A_{i-d} * U.  Below the
    generating degree the ideal is zero, so h_i = dim A_i there.
    """
    if max_degree < 0:
        raise InvalidInputError(f"need max_degree >= 0, got {max_degree}")
    n, d = U.n, U.d
    values = []
    for i in range(min(d, max_degree + 1)):
        values.append(dim_component(n, i))
    if max_degree >= d:
        comp = {tuple(M) for M in U.complement}
        values.append(len(comp))
        for i in range(d, max_degree):
            nxt = set()
            for t in comp:
                for j in range(n):
                    cand = t[:j] + (t[j] + 1,) + t[j + 1 :]
                    if cand in nxt:
                        continue
                    ok = True
                    for l in range(n):
                        if cand[l] > 0:
                            below = cand[:l] + (cand[l] - 1,) + cand[l + 1 :]
                            if below not in comp:
                                ok = False
                                break
                    if ok:
                        nxt.add(cand)
            comp = nxt
            values.append(len(comp))
    return HilbertFunction(tuple(values), generated_in_degree=d, n=n)


def variable_quotient(U: MonomialSubspace, i: int) -> MonomialSubspace:
    """The colon space (U : x_i) in degree d - 1."""
    if U.d == 0:
        raise InvalidInputError("cannot divide a degree-0 subspace")
    if not (1 <= i <= U.n):
        raise InvalidInputError(f"variable index {i} out of range for n={U.n}")
    comp = []
    for M in U.complement:
        if M[i - 1] > 0:
            comp.append(M[: i - 1] + (M[i - 1] - 1,) + M[i:])
    return MonomialSubspace(U.n, U.d - 1, comp)


def lift(U: MonomialSubspace, extra: int) -> MonomialSubspace:
    """Reinterpret U inside a ring with `extra` additional larger variables.

    The complement is unchanged (padded with zero exponents), so the
    codimension is preserved while the ambient dimension grows.
    """
    if extra < 0:
        raise InvalidInputError(f"need extra >= 0, got {extra}")
    pad = (0,) * extra
    return MonomialSubspace(U.n + extra, U.d, [tuple(M) + pad for M in U.complement])


def restrict_vars(U: MonomialSubspace, m: int) -> MonomialSubspace:
    """Image of U after setting the variables beyond x_m to zero."""
    if not (2 <= m <= U.n):
        raise InvalidInputError(f"need 2 <= m <= n={U.n}, got {m}")
    comp = [M[:m] for M in U.complement if sum(M[m:]) == 0]
    return MonomialSubspace(m, U.d, comp)


class SquareIndex:
    """Precomputed cover structure for fast codim(U^2) over many U.

    For T of degree 2d the degree-d divisors split into pairs {M, T/M}
    (a pair may be a single self-paired monomial).  T lies outside U^2
    exactly when every pair meets the complement of U, so T can only
    contribute when its divisor count is at most twice the codimension.
    Entries are restricted to divisor count <= cap and scanning a larger
    cap than needed never changes the count, only the speed.
    """

    __slots__ = ("n", "d", "cap", "entries")

    def __init__(self, n: int, d: int, cap: int):
        if n < 1 or d < 1 or cap < 1:
            raise InvalidInputError(f"need n, d, cap >= 1, got {n}, {d}, {cap}")
        self.n = n
        self.d = d
        self.cap = cap
        entries = []
        for T in _basis_tuples(n, 2 * d):
            nd = count_divisors(T, d)
            if nd > cap:
                continue
            divisors = list(divisors_of_degree(T, d))
            pairs = []
            seen = set()
            for M in divisors:
                if M in seen:
                    continue
                N = tuple(b - a for a, b in zip(M, T))
                seen.add(M)
                seen.add(N)
                pairs.append((M, N))
            entries.append((nd, tuple(pairs)))
        entries.sort(key=lambda e: e[0])
        self.entries = tuple(entries)

    def codim_square(self, complement) -> int:
        """Number of degree-2d monomials outside U^2, for U with this complement."""
        cover = 0
        limit = 2 * len(complement)
        if limit > self.cap:
            raise InvalidInputError(
                f"index built with cap {self.cap} cannot serve codimension {len(complement)}"
            )
        for nd, pairs in self.entries:
            if nd > limit:
                break
            for M, N in pairs:
                if M not in complement and N not in complement:
                    break
            else:
                cover += 1
        return cover


@lru_cache(maxsize=64)
def square_index(n: int, d: int, cap: int) -> SquareIndex:
    return SquareIndex(n, d, cap)
