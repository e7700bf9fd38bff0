"""Exact integer linear algebra over arbitrary-precision integers.

Dense matrices of Python ints, column-style Hermite normal form, Smith
normal form with unimodular transforms, saturated integer kernels, and the
structure theory of finitely presented abelian groups (free rank plus
invariant factor chain).  Everything is pure and overflow-free; matrices
beyond a few thousand entries are out of scope.

Relation matrices store one relation per *column* throughout the project.

Infinite quantities (the exponent of a group with free part) are reported
as ``math.inf``; the degree markers elsewhere use ``-math.inf``.  Neither
is ever conflated with an integer sentinel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix; zero-dimensional shapes permitted."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # ---------------------------------------------------------- creation

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = cols or 0
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    # ------------------------------------------------------------ access

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    # -------------------------------------------------------- arithmetic

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum(ai[k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return IntMatrix(self.rows, self.cols + other.cols, tuple(out))

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        out = []
        for i1 in range(self.rows):
            for i2 in range(other.rows):
                for j1 in range(self.cols):
                    x = self.entry(i1, j1)
                    for j2 in range(other.cols):
                        out.append(x * other.entry(i2, j2))
        return IntMatrix(self.rows * other.rows, self.cols * other.cols, tuple(out))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        out = tuple(self.entry(i, j) for i in row_idx for j in col_idx)
        return IntMatrix(len(row_idx), len(col_idx), out)


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ------------------------------------------------------------------ HNF


def _hnf_transform(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, int]:
    """Column-style HNF: returns (H, V, pivot_count) with H = A @ V."""
    r, c = a.rows, a.cols
    h = a.to_rows()
    v = IntMatrix.identity(c).to_rows()

    def col_swap(j1, j2):
        for m in (h, v) if True else ():
            pass
        for row_ in h:
            row_[j1], row_[j2] = row_[j2], row_[j1]
        for row_ in v:
            row_[j1], row_[j2] = row_[j2], row_[j1]

    def col_addmul(dst, src, q):
        # column dst += q * column src
        for row_ in h:
            row_[dst] += q * row_[src]
        for row_ in v:
            row_[dst] += q * row_[src]

    def col_negate(j):
        for row_ in h:
            row_[j] = -row_[j]
        for row_ in v:
            row_[j] = -row_[j]

    pivot = 0
    for i in range(r):
        if pivot == c:
            break
        # gcd-combine columns pivot..c-1 on row i until one nonzero remains
        while True:
            live = [j for j in range(pivot, c) if h[i][j] != 0]
            if not live:
                break
            jmin = min(live, key=lambda j: abs(h[i][j]))
            if jmin != pivot:
                col_swap(pivot, jmin)
            done = True
            for j in range(pivot + 1, c):
                if h[i][j] != 0:
                    q = h[i][j] // h[i][pivot]
                    col_addmul(j, pivot, -q)
                    if h[i][j] != 0:
                        done = False
            if done:
                break
        if h[i][pivot] == 0:
            continue
        if h[i][pivot] < 0:
            col_negate(pivot)
        # reduce entries left of the pivot into [0, pivot)
        for j in range(pivot):
            q = h[i][j] // h[i][pivot]
            if q:
                col_addmul(j, pivot, -q)
        pivot += 1

    return (
        IntMatrix.from_rows(h, cols=c),
        IntMatrix.from_rows(v, cols=c),
        pivot,
    )


def hnf(a: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form H with H = A @ V, V unimodular.

    Pivots are positive; within a pivot's row, entries in columns to its
    left are reduced into [0, pivot).  Zero columns are pushed to the
    right.
    """
    return _hnf_transform(a)[0]


def integer_kernel(a: IntMatrix) -> IntMatrix:
    """A saturated basis (as columns) of {x : A @ x = 0} over the integers."""
    h, v, pivots = _hnf_transform(a)
    kernel_cols = range(pivots, a.cols)
    return v.submatrix(range(a.cols), kernel_cols)


# ------------------------------------------------------------------ SNF


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V diagonal with positive diagonal (d1, ..., dr), di | di+1."""

    left: IntMatrix
    diag: tuple[int, ...]
    right: IntMatrix
    source_shape: tuple[int, int]

    def diagonal_matrix(self) -> IntMatrix:
        r, c = self.source_shape
        out = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.diag):
            out[i][i] = d
        return IntMatrix.from_rows(out, cols=c)


def _smith_eliminate(a: IntMatrix, want_transforms: bool):
    r, c = a.rows, a.cols
    m = a.to_rows()
    u = IntMatrix.identity(r).to_rows() if want_transforms else None
    v = IntMatrix.identity(c).to_rows() if want_transforms else None

    def row_op(dst, src, q):
        mr = m[dst]
        ms = m[src]
        for j in range(c):
            mr[j] += q * ms[j]
        if u is not None:
            ur, us = u[dst], u[src]
            for j in range(r):
                ur[j] += q * us[j]

    def col_op(dst, src, q):
        for row_ in m:
            row_[dst] += q * row_[src]
        if v is not None:
            for row_ in v:
                row_[dst] += q * row_[src]

    def row_swap(i1, i2):
        m[i1], m[i2] = m[i2], m[i1]
        if u is not None:
            u[i1], u[i2] = u[i2], u[i1]

    def col_swap(j1, j2):
        for row_ in m:
            row_[j1], row_[j2] = row_[j2], row_[j1]
        if v is not None:
            for row_ in v:
                row_[j1], row_[j2] = row_[j2], row_[j1]

    def row_negate(i):
        m[i] = [-x for x in m[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    for t in range(min(r, c)):
        # pivot: nonzero entry of minimal absolute value in the block
        best = None
        for i in range(t, r):
            mi = m[i]
            for j in range(t, c):
                x = mi[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)

        while True:
            # clear column t below the pivot, re-pivoting on remainders
            reduced = True
            for i in range(t + 1, r):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    row_op(i, t, -q)
                    if m[i][t] != 0:
                        row_swap(t, i)  # remainder is smaller: new pivot
                        reduced = False
            if not reduced:
                continue
            for j in range(t + 1, c):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    col_op(j, t, -q)
                    if m[t][j] != 0:
                        col_swap(t, j)
                        reduced = False
            if reduced:
                break

        if m[t][t] < 0:
            row_negate(t)

    diag = [m[i][i] for i in range(min(r, c)) if m[i][i] != 0]

    # final sweep: enforce the divisibility chain d_i | d_{i+1}
    k = len(diag)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a_, b_ = diag[i], diag[i + 1]
            if b_ % a_ == 0:
                continue
            changed = True
            g = math.gcd(a_, b_)
            l = a_ * b_ // g
            if u is not None:
                # diag(a, b) = U2^-1 diag(g, l) V2^-1 realized by row/col ops:
                # row_i += row_{i+1}; col mix by Bezout; clear the residue.
                x, y = _bezout(a_, b_)
                row_op(i, i + 1, 1)
                _col_mix(m, v, i, i + 1, x, -(b_ // g), y, a_ // g)
                row_op(i + 1, i, -(y * b_ // g))
                assert m[i][i] == g and m[i + 1][i + 1] == l
                assert m[i][i + 1] == 0 and m[i + 1][i] == 0
            diag[i], diag[i + 1] = g, l

    if u is None:
        return tuple(diag), None, None
    for i, d in enumerate(diag):
        m[i][i] = d
    return (
        tuple(diag),
        IntMatrix.from_rows(u, cols=r),
        IntMatrix.from_rows(v, cols=c),
    )


def _bezout(a: int, b: int) -> tuple[int, int]:
    """x, y with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _col_mix(m, v, j1, j2, a11, a12, a21, a22):
    """Replace (col_j1, col_j2) by (a11*c1 + a21*c2, a12*c1 + a22*c2)."""
    for mats in (m, v):
        if mats is None:
            continue
        for row_ in mats:
            c1, c2 = row_[j1], row_[j2]
            row_[j1] = a11 * c1 + a21 * c2
            row_[j2] = a12 * c1 + a22 * c2


def smith_diagonal(a: IntMatrix) -> tuple[int, ...]:
    """Invariant-factor sequence of A without computing the transforms."""
    diag, _, _ = _smith_eliminate(a, want_transforms=False)
    return diag


def snf(a: IntMatrix) -> SmithDecomposition:
    """Full Smith decomposition: U @ A @ V = diag(d1, ..., dr, 0, ...)."""
    diag, u, v = _smith_eliminate(a, want_transforms=True)
    return SmithDecomposition(u, diag, v, a.shape)


# ------------------------------------------------------- abelian groups


@dataclass(frozen=True)
class AbGroup:
    """Finitely generated abelian group: free rank + invariant factors.

    Factors are each >= 2 and each divides the next; a factor 1 is never
    stored.  The trivial group is ``AbGroup(0, ())``.
    """

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a != 0 for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a chain, got {fs}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "AbGroup":
        """Canonical form of a direct sum of cyclic groups Z/o (o = 0 for Z)."""
        rank = 0
        primary: dict[int, list[int]] = {}
        for o in orders:
            o = abs(o)
            if o == 0:
                rank += 1
                continue
            for p, e in _factorize(o).items():
                primary.setdefault(p, []).append(e)
        width = max((len(v) for v in primary.values()), default=0)
        factors = []
        for i in range(width):
            f = 1
            for p, exps in primary.items():
                exps_sorted = sorted(exps, reverse=True)
                if i < len(exps_sorted):
                    f *= p ** exps_sorted[i]
            factors.append(f)
        factors.reverse()  # ascending divisibility chain
        return cls(rank, tuple(f for f in factors if f > 1))

    def direct_sum(self, *others: "AbGroup") -> "AbGroup":
        orders: list[int] = [0] * self.free_rank + list(self.invariant_factors)
        for g in others:
            orders.extend([0] * g.free_rank)
            orders.extend(g.invariant_factors)
        return AbGroup.from_cyclic_orders(orders)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def exponent(self) -> int | float:
        """Largest invariant factor; 1 for the trivial group, inf with free part."""
        if self.free_rank > 0:
            return math.inf
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def p_primary(self, p: int) -> "AbGroup":
        """p-power parts of the factors.  A nonzero free rank passes through
        unchanged; its presence in the result is the caller's flag that the
        p-primary part is not finite."""
        from .padic import valuation  # local import avoids a cycle at import time

        parts = []
        for f in self.invariant_factors:
            q = p ** valuation(p, f)
            if q > 1:
                parts.append(q)
        return AbGroup(self.free_rank, tuple(parts))

    def torsion_primes(self) -> tuple[int, ...]:
        if not self.invariant_factors:
            return ()
        return tuple(sorted(_factorize(self.invariant_factors[-1])))

    def to_json_dict(self) -> dict:
        """Bit-exact JSON form; factors beyond 64 bits become decimal strings."""
        return {
            "free_rank": self.free_rank,
            "invariant_factors": [
                f if f < 2**63 else str(f) for f in self.invariant_factors
            ],
        }

    def __str__(self) -> str:
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank > 1:
            terms.append(f"Z^{self.free_rank}")
        terms.extend(f"Z/{f}" for f in self.invariant_factors)
        return " + ".join(terms) if terms else "0"


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FPGroup:
    """Finite presentation: generators plus a relation-per-column matrix."""

    generator_count: int
    relations: IntMatrix
    labels: tuple | None = None

    def __post_init__(self) -> None:
        if self.relations.rows != self.generator_count:
            raise ValueError(
                f"relations have {self.relations.rows} rows for "
                f"{self.generator_count} generators"
            )
        if self.labels is not None and len(self.labels) != self.generator_count:
            raise ValueError("one label per generator required")


def ab_structure(g: FPGroup) -> AbGroup:
    """Structure of the abelian group presented by g."""
    diag = smith_diagonal(g.relations)
    free_rank = g.generator_count - len(diag)
    return AbGroup(free_rank, tuple(d for d in diag if d > 1))


def determinantal_divisor(a: IntMatrix, k: int) -> int:
    """gcd of all k x k minors (0 if none are nonzero)."""
    if k == 0:
        return 1
    g = 0
    for rows_ in combinations(range(a.rows), k):
        for cols_ in combinations(range(a.cols), k):
            g = math.gcd(g, determinant(a.submatrix(rows_, cols_)))
            if g == 1:
                return 1
    return g
