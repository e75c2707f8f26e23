"""Exact linear algebra over the rationals for non-monomial subspaces.

A subspace is a reduced row echelon matrix whose columns are the degree-d
monomials sorted descending under a chosen order, so the pivot columns
are the initial monomials of the space.  Two subspaces are equal exactly
when their matrices coincide.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .errors import BudgetExceededError, InvalidInputError
from .macaulay import HilbertFunction
from .monomial import LEX, Monomial, MonomialOrder, dim_component, enumerate_monomials
from .subspace import MonomialSubspace

PRODUCT_DIM_GUARD = 20000


@lru_cache(maxsize=None)
def _columns(n: int, d: int, order: MonomialOrder) -> tuple[Monomial, ...]:
    return tuple(enumerate_monomials(n, d, order))


@lru_cache(maxsize=None)
def _column_index(n: int, d: int, order: MonomialOrder) -> dict:
    return {M: i for i, M in enumerate(_columns(n, d, order))}


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    m, q = len(rows), len(rows[0])
    pivots: list[int] = []
    cursor = 0
    for col in range(q):
        sel = None
        for i in range(cursor, m):
            if rows[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[cursor], rows[sel] = rows[sel], rows[cursor]
        inv = rows[cursor][col]
        rows[cursor] = [x / inv for x in rows[cursor]]
        lead = rows[cursor]
        for i in range(m):
            if i != cursor and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], lead)]
        pivots.append(col)
        cursor += 1
        if cursor == m:
            break
    return rows[:cursor], pivots


def _null_space(rows: list[list[Fraction]], q: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix with q columns."""
    rref, pivots = _rref(rows)
    pivot_set = set(pivots)
    out = []
    for free in range(q):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * q
        vec[free] = Fraction(1)
        for r, p in zip(rref, pivots):
            vec[p] = -r[free]
        out.append(vec)
    return out


class RationalSubspace:
    """Row space of a reduced echelon matrix over a monomial column basis."""

    __slots__ = ("n", "d", "order", "rows", "pivots")

    def __init__(self, n: int, d: int, rows, order: MonomialOrder = LEX):
        if n < 1 or d < 0:
            raise InvalidInputError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
        q = dim_component(n, d)
        mat = [[Fraction(x) for x in r] for r in rows]
        for r in mat:
            if len(r) != q:
                raise InvalidInputError(
                    f"coefficient vector has length {len(r)}, expected {q}"
                )
        rr, pivots = _rref(mat)
        reduced = [tuple(r) for r in rr]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", tuple(reduced))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("RationalSubspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return dim_component(self.n, self.d) - len(self.rows)

    @property
    def columns(self) -> tuple[Monomial, ...]:
        return _columns(self.n, self.d, self.order)

    def contains(self, vector) -> bool:
        vec = _as_vector(vector, self.n, self.d, self.order)
        for row, p in zip(self.rows, self.pivots):
            if vec[p] != 0:
                f = vec[p]
                vec = [a - f * b for a, b in zip(vec, row)]
        return all(x == 0 for x in vec)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalSubspace)
            and self.n == other.n
            and self.d == other.d
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.d, self.order, self.rows))

    def __repr__(self) -> str:
        return (
            f"RationalSubspace(n={self.n}, d={self.d}, dim={self.dim}, "
            f"order={self.order.name})"
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "order": self.order.name,
            "rows": [[str(x) for x in r] for r in self.rows],
        }


def rational_subspace_from_json(data: dict) -> RationalSubspace:
    try:
        order = MonomialOrder.parse(data.get("order", "lex"))
        return RationalSubspace(int(data["n"]), int(data["d"]), data["rows"], order)
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"bad rational subspace record: {exc}") from exc


def _as_vector(vector, n: int, d: int, order: MonomialOrder) -> list[Fraction]:
    q = dim_component(n, d)
    if isinstance(vector, dict):
        idx = _column_index(n, d, order)
        out = [Fraction(0)] * q
        for key, val in vector.items():
            M = Monomial(key)
            if M.degree != d or len(M) != n:
                raise InvalidInputError(f"{M!r} is not a degree-{d} monomial in {n} variables")
            out[idx[M]] += Fraction(val)
        return out
    out = [Fraction(x) for x in vector]
    if len(out) != q:
        raise InvalidInputError(f"coefficient vector has length {len(out)}, expected {q}")
    return out


def span(vectors, n: int, d: int, order: MonomialOrder = LEX) -> RationalSubspace:
    """Row space of the given coefficient vectors (lists or monomial dicts)."""
    mat = [_as_vector(v, n, d, order) for v in vectors]
    return RationalSubspace(n, d, mat, order)


def monomial_span(U: MonomialSubspace, order: MonomialOrder = LEX) -> RationalSubspace:
    """The same subspace, re-encoded as an echelon matrix."""
    return span([{M: 1} for M in U.members], U.n, U.d, order)


def apolar_perp(vectors, n: int, d: int, order: MonomialOrder = LEX) -> RationalSubspace:
    """Orthogonal complement under the differentiation pairing.

    Monomials are orthogonal to each other and <x^a, x^a> = prod a_i!,
    so the perp is the kernel of one weighted row per input form.
    """
    cols = _columns(n, d, order)
    weights = [prod(factorial(e) for e in M) for M in cols]
    rows = []
    for v in vectors:
        vec = _as_vector(v, n, d, order)
        rows.append([w * x for w, x in zip(weights, vec)])
    kernel = _null_space(rows, len(cols))
    return RationalSubspace(n, d, kernel, order)


def _multiply_vectors(
    a: list[Fraction],
    b: list[Fraction],
    colsA,
    colsB,
    idxC: dict,
    qC: int,
) -> list[Fraction]:
    out = [Fraction(0)] * qC
    nzA = [(colsA[i], x) for i, x in enumerate(a) if x != 0]
    nzB = [(colsB[j], y) for j, y in enumerate(b) if y != 0]
    for M, x in nzA:
        for N, y in nzB:
            T = Monomial(tuple(p + r for p, r in zip(M, N)))
            out[idxC[T]] += x * y
    return out


def product_rational(U: RationalSubspace, V: RationalSubspace) -> RationalSubspace:
    """Span of all pairwise products of basis rows."""
    if U.n != V.n:
        raise InvalidInputError(f"mixed variable counts {U.n} and {V.n}")
    if U.order != V.order:
        raise InvalidInputError("operands use different monomial orders")
    dC = U.d + V.d
    qC = dim_component(U.n, dC)
    if qC > PRODUCT_DIM_GUARD:
        raise BudgetExceededError(
            f"product would live in dimension {qC}, over the guard {PRODUCT_DIM_GUARD}",
            seen=qC,
        )
    colsA, colsB = U.columns, V.columns
    idxC = _column_index(U.n, dC, U.order)
    rows = [
        _multiply_vectors(a, b, colsA, colsB, idxC, qC) for a in U.rows for b in V.rows
    ]
    return RationalSubspace(U.n, dC, rows, U.order)


def square_rational(U: RationalSubspace) -> RationalSubspace:
    return product_rational(U, U)


def initial_subspace(U: RationalSubspace) -> MonomialSubspace:
    """Monomial space spanned by the initial monomials of the rows."""
    cols = U.columns
    return MonomialSubspace.from_members(U.n, U.d, [cols[p] for p in U.pivots])


def quotient_by_linear_form(U: RationalSubspace, l) -> RationalSubspace:
    """The colon space (U : l) = {g of degree d-1 : l*g in U}."""
    if U.d < 1:
        raise InvalidInputError("cannot divide a degree-0 subspace")
    lvec = [Fraction(x) for x in l]
    if len(lvec) != U.n:
        raise InvalidInputError(f"linear form needs {U.n} coefficients, got {len(lvec)}")
    if all(x == 0 for x in lvec):
        raise InvalidInputError("the zero form does not define a colon space")
    n, d, order = U.n, U.d, U.order
    cols_lo = _columns(n, d - 1, order)
    idx_hi = _column_index(n, d, order)
    q_hi = dim_component(n, d)
    m = len(cols_lo)
    # row for mu: l * mu reduced mod U, augmented with the identity to track
    # which combinations of the mu's land inside U
    aug = []
    for r, mu in enumerate(cols_lo):
        vec = [Fraction(0)] * q_hi
        for i, li in enumerate(lvec):
            if li != 0:
                shifted = tuple(
                    e + (1 if j == i else 0) for j, e in enumerate(mu)
                )
                vec[idx_hi[Monomial(shifted)]] += li
        for row, p in zip(U.rows, U.pivots):
            if vec[p] != 0:
                f = vec[p]
                vec = [a - f * b for a, b in zip(vec, row)]
        tracker = [Fraction(0)] * m
        tracker[r] = Fraction(1)
        aug.append(vec + tracker)
    reduced, _ = _rref(aug)
    kernel_rows = [row[q_hi:] for row in reduced if all(x == 0 for x in row[:q_hi])]
    return RationalSubspace(n, d - 1, kernel_rows, order)


def hilbert_function_rational(U: RationalSubspace, max_degree: int) -> HilbertFunction:
    """Hilbert function of the quotient by the ideal generated by U."""
    if max_degree < 0:
        raise InvalidInputError(f"need max_degree >= 0, got {max_degree}")
    n, d, order = U.n, U.d, U.order
    values = [dim_component(n, i) for i in range(min(d, max_degree + 1))]
    if max_degree >= d:
        current = U
        values.append(current.codim)
        for i in range(d, max_degree):
            cols_lo = current.columns
            idx_hi = _column_index(n, i + 1, order)
            q_hi = dim_component(n, i + 1)
            rows = []
            for row in current.rows:
                for v in range(n):
                    vec = [Fraction(0)] * q_hi
                    for c, x in enumerate(row):
                        if x != 0:
                            M = cols_lo[c]
                            shifted = tuple(
                                e + (1 if j == v else 0) for j, e in enumerate(M)
                            )
                            vec[idx_hi[Monomial(shifted)]] += x
                    rows.append(vec)
            current = RationalSubspace(n, i + 1, rows, order)
            values.append(current.codim)
    return HilbertFunction(tuple(values), generated_in_degree=d, n=n)


def apolar_dual(U: RationalSubspace) -> list[list[Fraction]]:
    """Basis of the annihilator of U under the differentiation pairing.

    The subspace U equals apolar_perp(apolar_dual(U)), and a point is a
    common zero of U exactly when the d-th power of the corresponding
    linear form lies in the span of the returned vectors.
    """
    cols = U.columns
    weights = [prod(factorial(e) for e in M) for M in cols]
    rows = [[w * x for w, x in zip(weights, row)] for row in U.rows]
    return _null_space(rows, len(cols))


def catalecticant_rows(vector, n: int, d: int, order: MonomialOrder = LEX):
    """First catalecticant of a form: one row per partial derivative.

    Row i holds the coefficients of the i-th partial over the degree d-1
    monomial basis.  The matrix has rank 1 exactly when the form is a
    nonzero multiple of the d-th power of a linear form (Euler's relation
    recovers the form from a one-dimensional span of partials).
    """
    if d < 1:
        raise InvalidInputError("catalecticant needs degree at least 1")
    vec = _as_vector(vector, n, d, order)
    cols_hi = _columns(n, d, order)
    idx_lo = _column_index(n, d - 1, order)
    q_lo = dim_component(n, d - 1)
    rows = []
    for i in range(n):
        row = [Fraction(0)] * q_lo
        for c, x in enumerate(vec):
            if x == 0:
                continue
            M = cols_hi[c]
            if M[i] == 0:
                continue
            lower = tuple(e - (1 if j == i else 0) for j, e in enumerate(M))
            row[idx_lo[Monomial(lower)]] += x * M[i]
        rows.append(row)
    return rows


def _poly_gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Monic gcd in Q[u]; coefficient lists are low degree first."""

    def trim(a):
        while a and a[-1] == 0:
            a = a[:-1]
        return a

    a, b = trim(list(p)), trim(list(q))
    while b:
        # long division remainder
        r = list(a)
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and any(x != 0 for x in r):
            dr = len(r) - 1
            f = r[-1] / lb
            for i in range(db + 1):
                r[dr - db + i] -= f * b[i]
            r = trim(r)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def power_in_span(vectors, n: int, d: int, order: MonomialOrder = LEX) -> bool:
    """Whether a span of dimension at most 2 contains a d-th power.

    A nonzero form is a power of a linear form exactly when its first
    catalecticant has rank at most 1.  For a pencil s*f + t*g the 2x2
    minors are binary quadratics in (s, t); some member has rank at most
    1 exactly when the minors share a projective root, which is decided
    exactly over the rationals by a gcd computation.
    """
    mat = [_as_vector(v, n, d, order) for v in vectors]
    rows, _ = _rref(mat)
    if not rows:
        return False
    if d == 1:
        return True
    if len(rows) == 1:
        cat, _ = _rref(catalecticant_rows(rows[0], n, d, order))
        return len(cat) <= 1
    if len(rows) > 2:
        raise InvalidInputError(
            "exact power detection covers spans of dimension at most 2"
        )
    A = catalecticant_rows(rows[0], n, d, order)
    B = catalecticant_rows(rows[1], n, d, order)
    q_lo = len(A[0])
    minors = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(q_lo):
                for l in range(k + 1, q_lo):
                    c0 = A[i][k] * A[j][l] - A[i][l] * A[j][k]
                    c2 = B[i][k] * B[j][l] - B[i][l] * B[j][k]
                    c1 = (
                        A[i][k] * B[j][l]
                        + B[i][k] * A[j][l]
                        - A[i][l] * B[j][k]
                        - B[i][l] * A[j][k]
                    )
                    if c0 != 0 or c1 != 0 or c2 != 0:
                        minors.append((c0, c1, c2))
    if not minors:
        # rank at most 1 across the whole pencil, every member is a power
        return True
    if all(c2 == 0 for _, _, c2 in minors):
        # common root at (s, t) = (0, 1)
        return True
    g = [Fraction(0)]
    for c0, c1, c2 in minors:
        g = _poly_gcd(g, [c0, c1, c2])
        if len(g) == 1:
            return False
    return len(g) >= 2


def has_base_point(U: RationalSubspace) -> bool:
    """Exact base-point test for subspaces of codimension at most 2.

    A point is a base point of U exactly when the d-th power of its
    linear form is apolar to U, so the test reduces to power detection
    inside the annihilator.
    """
    return power_in_span(apolar_dual(U), U.n, U.d, U.order)


def eliminate_variable(vector, n: int, d: int, l, order: MonomialOrder = LEX):
    """Substitute the last variable using the relation l = 0.

    Requires a nonzero last coefficient; returns the coefficients of the
    restricted form over the degree-d basis in n - 1 variables.
    """
    if n < 2:
        raise InvalidInputError("elimination needs at least 2 variables")
    lvec = [Fraction(x) for x in l]
    if len(lvec) != n:
        raise InvalidInputError(f"linear form needs {n} coefficients, got {len(lvec)}")
    if lvec[-1] == 0:
        raise InvalidInputError("last coefficient must be nonzero to eliminate")
    sub = {
        tuple(1 if j == i else 0 for j in range(n - 1)): -lvec[i] / lvec[-1]
        for i in range(n - 1)
        if lvec[i] != 0
    }
    vec = _as_vector(vector, n, d, order)
    cols = _columns(n, d, order)
    idx_lo = _column_index(n - 1, d, order)
    out = [Fraction(0)] * dim_component(n - 1, d)
    for c, x in enumerate(vec):
        if x == 0:
            continue
        M = cols[c]
        term = {tuple(M[:-1]): x}
        for _ in range(M[-1]):
            nxt: dict = {}
            for expo, coef in term.items():
                for sexpo, scoef in sub.items():
                    key = tuple(a + b for a, b in zip(expo, sexpo))
                    nxt[key] = nxt.get(key, Fraction(0)) + coef * scoef
            term = nxt
        for expo, coef in term.items():
            if coef != 0:
                out[idx_lo[Monomial(expo)]] += coef
    return out


def random_subspace(
    n: int,
    d: int,
    codim: int,
    rng: random.Random,
    bound: int = 100,
    order: MonomialOrder = LEX,
    max_tries: int = 100,
) -> RationalSubspace:
    """Random subspace of the given codimension with integer coefficients.

    Degenerate samples (rank below the target) are redrawn, never returned.
    """
    q = dim_component(n, d)
    target = q - codim
    if not (0 <= target <= q):
        raise InvalidInputError(f"codimension {codim} out of range for dim {q}")
    for _ in range(max_tries):
        rows = [[rng.randint(-bound, bound) for _ in range(q)] for _ in range(target)]
        U = RationalSubspace(n, d, rows, order)
        if U.dim == target:
            return U
    raise InvalidInputError(
        f"could not sample a rank-{target} subspace in {max_tries} tries"
    )


def random_linear_form(n: int, rng: random.Random, bound: int = 100) -> list[int]:
    while True:
        l = [rng.randint(-bound, bound) for _ in range(n)]
        if any(x != 0 for x in l):
            return l
