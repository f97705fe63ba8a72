"""Exact integer linear algebra for lattice computations.

Everything runs on Python's arbitrary-precision integers; no floating
point appears anywhere. Sublattices of Z^n are stored through a
canonical row-style Hermite normal form, so lattice equality reduces to
structural equality of the stored bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]


class ZeroVector(ValueError):
    """A nonzero vector was required."""


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _content(v: Iterable[int]) -> int:
    g = 0
    for c in v:
        g = gcd(g, c)
    return g


@dataclass(frozen=True)
class PrimitiveForm:
    """Integer linear functional whose coefficients are coprime."""

    coeffs: IntVec

    def __post_init__(self):
        g = _content(self.coeffs)
        if g == 0:
            raise ZeroVector("the zero vector does not define a form")
        if g != 1:
            raise ValueError(f"form coefficients must be coprime: {self.coeffs}")

    def __call__(self, v: Sequence[int]) -> int:
        if len(v) != len(self.coeffs):
            raise DimensionMismatch("form and vector lengths differ")
        return dot(self.coeffs, v)

    def __len__(self) -> int:
        return len(self.coeffs)


def primitive(v: Sequence[int]) -> PrimitiveForm:
    """Divide out the gcd of the entries; the direction is preserved."""
    g = _content(v)
    if g == 0:
        raise ZeroVector("cannot normalize the zero vector")
    return PrimitiveForm(tuple(c // g for c in v))


@dataclass(frozen=True)
class LatticeBasis:
    """Sublattice of Z^ambient_dim held as a canonical HNF row basis.

    Rows are nonzero, pivots are positive and sit in strictly increasing
    columns, and every entry above a pivot is reduced into [0, pivot).
    Two values of this type describe the same lattice iff they are equal.
    """

    hnf_rows: IntMat
    ambient_dim: int

    def __post_init__(self):
        pivots = []
        for row in self.hnf_rows:
            if len(row) != self.ambient_dim:
                raise DimensionMismatch("row length differs from ambient dimension")
            p = _pivot(row)
            if p is None or (pivots and p <= pivots[-1]) or row[p] <= 0:
                raise ValueError("rows are not in Hermite normal form")
            pivots.append(p)
        for ri, p in enumerate(pivots):
            piv = self.hnf_rows[ri][p]
            for above in range(ri):
                if not 0 <= self.hnf_rows[above][p] < piv:
                    raise ValueError("entries above a pivot are not reduced")

    @property
    def rank(self) -> int:
        return len(self.hnf_rows)


def _pivot(row: Sequence[int]) -> int | None:
    for i, e in enumerate(row):
        if e:
            return i
    return None


def _row_echelon(work: list[list[int]], cols: range) -> int:
    """Reduce `work` in place by unimodular row operations.

    Pivots are produced over the given columns only. Returns the number
    of pivot rows; these end up first, in pivot-column order, with
    positive pivots and the entries above each pivot reduced into
    [0, pivot). Rows beyond the returned count are zero on `cols`.
    """
    nrows = len(work)
    prow = 0
    for col in cols:
        pivot = None
        for i in range(prow, nrows):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[prow], work[pivot] = work[pivot], work[prow]
        for i in range(prow + 1, nrows):
            b = work[i][col]
            if not b:
                continue
            a = work[prow][col]
            g, x, y = xgcd(a, b)
            fa, fb = a // g, b // g
            ru, rv = work[prow], work[i]
            work[prow] = [x * p + y * q for p, q in zip(ru, rv)]
            work[i] = [fa * q - fb * p for p, q in zip(ru, rv)]
        if work[prow][col] < 0:
            work[prow] = [-e for e in work[prow]]
        p = work[prow][col]
        for i in range(prow):
            q = work[i][col] // p
            if q:
                work[i] = [e - q * f for e, f in zip(work[i], work[prow])]
        prow += 1
    return prow


def hnf(m: Iterable[Sequence[int]], ambient_dim: int | None = None) -> LatticeBasis:
    """Canonical Hermite normal form of the lattice spanned by the rows.

    An empty matrix is the zero lattice and needs an explicit
    ambient_dim, since no dimension can be read off the rows.
    """
    rows = [list(r) for r in m]
    if ambient_dim is None:
        if not rows:
            raise DimensionMismatch("an empty matrix needs an explicit ambient_dim")
        ambient_dim = len(rows[0])
    if any(len(r) != ambient_dim for r in rows):
        raise DimensionMismatch("ragged rows")
    nrows = _row_echelon(rows, range(ambient_dim))
    assert all(not any(r) for r in rows[nrows:])
    return LatticeBasis(tuple(tuple(r) for r in rows[:nrows]), ambient_dim)


def mat_rank(m: Iterable[Sequence[int]], ambient_dim: int | None = None) -> int:
    rows = [tuple(r) for r in m]
    if not rows and ambient_dim is None:
        return 0
    return hnf(rows, ambient_dim).rank


def kernel_basis(forms: Iterable, ambient_dim: int) -> LatticeBasis:
    """Basis of {z in Z^n : f(z) = 0 for every given form f}.

    Row reduces the block matrix (F^T | I). The row operations are
    unimodular, so the right block keeps exact coordinates and the rows
    whose left block vanished enumerate the full integer kernel, which
    is automatically saturated.
    """
    cols = []
    for f in forms:
        c = tuple(getattr(f, "coeffs", f))
        if len(c) != ambient_dim:
            raise DimensionMismatch("form length differs from ambient dimension")
        cols.append(c)
    k = len(cols)
    work = []
    for i in range(ambient_dim):
        row = [c[i] for c in cols] + [0] * ambient_dim
        row[k + i] = 1
        work.append(row)
    nrows = _row_echelon(work, range(k))
    kern = [r[k:] for r in work[nrows:]]
    return hnf(kern, ambient_dim)


def lattice_equal(a: LatticeBasis, b: LatticeBasis) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("lattices live in different ambient dimensions")
    return a.hnf_rows == b.hnf_rows


def lattice_member(v: Sequence[int], b: LatticeBasis) -> bool:
    """Decide membership by back substitution against the HNF rows."""
    if len(v) != b.ambient_dim:
        raise DimensionMismatch("vector length differs from ambient dimension")
    by_pivot = {_pivot(row): row for row in b.hnf_rows}
    res = list(v)
    for col in range(b.ambient_dim):
        if not res[col]:
            continue
        row = by_pivot.get(col)
        if row is None:
            return False
        q, rem = divmod(res[col], row[col])
        if rem:
            return False
        res = [e - q * f for e, f in zip(res, row)]
    return not any(res)
