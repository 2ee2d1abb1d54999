"""Dense exact matrices over pluggable coefficient structures.

A coefficient structure is a ``Ring``: the zero and one elements plus an
exact-division callable, chosen at matrix construction time.  Elements carry
their own +, -, *, == through operator overloading (ints, Fractions,
UniPoly, CycloElem all do), so the matrix code never dispatches on type.

Determinants come in two flavors: fraction-free Bareiss elimination for
integral domains (integers, polynomials) and ordinary Gaussian elimination
with exact division over fields (rationals, cyclotomics).  Adjugates are
explicit cofactor matrices, valid for singular inputs too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .cyclotomic import CycloElem
from .exact import UniPoly


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact integer division {a} / {b}")
    return q


@dataclass(frozen=True)
class Ring:
    """Coefficient structure plug-in for ExactMatrix."""

    name: str
    zero: Any
    one: Any
    exact_div: Callable[[Any, Any], Any] = field(repr=False)
    is_field: bool = False


ZZ = Ring("ZZ", 0, 1, _int_exact_div)
QQ = Ring("QQ", Fraction(0), Fraction(1), lambda a, b: a / b, is_field=True)


def poly_ring() -> Ring:
    return Ring("QQ[x]", UniPoly(), UniPoly.constant(1), UniPoly.exact_div)


def cyclo_ring(p: int) -> Ring:
    return Ring(
        f"QQ(zeta_{p})",
        CycloElem.zero(p),
        CycloElem.one(p),
        lambda a, b: a * b.inv(),
        is_field=True,
    )


class ExactMatrix:
    """Immutable dense matrix over one coefficient structure, 0-indexed."""

    __slots__ = ("ring", "entries", "rows", "cols")

    def __init__(self, ring: Ring, rows):
        entries = tuple(tuple(row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        ncols = len(entries[0])
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged rows")
        self.ring = ring
        self.entries = entries
        self.rows = len(entries)
        self.cols = ncols

    @classmethod
    def identity(cls, ring: Ring, k: int) -> "ExactMatrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(k)] for i in range(k)])

    @classmethod
    def from_fn(cls, ring: Ring, rows: int, cols: int, fn) -> "ExactMatrix":
        return cls(ring, [[fn(i, j) for j in range(cols)] for i in range(rows)])

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def first_diff(self, other: "ExactMatrix") -> tuple[int, int] | None:
        """Row-major index of the first differing entry, None if equal."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i][j] != other.entries[i][j]:
                    return (i, j)
        return None

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ring, zip(*self.entries))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"inner dimensions {self.cols} and {other.rows} disagree")
        zero = self.ring.zero
        out = [[zero] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.entries[i]
            acc = out[i]
            for k in range(self.cols):
                a = row[k]
                if a == zero:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b == zero:
                        continue
                    acc[j] = acc[j] + a * b
        return ExactMatrix(self.ring, out)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(self.ring, [[c * a for a in row] for row in self.entries])

    def submatrix(self, drop_row: int, drop_col: int) -> "ExactMatrix":
        return ExactMatrix(
            self.ring,
            [
                [a for j, a in enumerate(row) if j != drop_col]
                for i, row in enumerate(self.entries)
                if i != drop_row
            ],
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.ring.name}, {self.rows}x{self.cols})"


def _require_square(m: ExactMatrix) -> None:
    if not m.is_square:
        raise ValueError(f"determinant of a {m.rows}x{m.cols} matrix")


def det_bareiss(m: ExactMatrix):
    """Exact determinant by one-step fraction-free elimination.

    Every division is exact in the coefficient domain (entries stay equal to
    minors of the input), so this works over the integers and over
    polynomial rings with no rational intermediates.
    """
    _require_square(m)
    ring = m.ring
    zero = ring.zero
    a = [list(row) for row in m.entries]
    k = m.rows
    sign = 1
    prev = ring.one
    for col in range(k - 1):
        if a[col][col] == zero:
            for r in range(col + 1, k):
                if a[r][col] != zero:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return zero
        piv = a[col][col]
        for i in range(col + 1, k):
            ai = a[i]
            ac = a[col]
            aic = ai[col]
            for j in range(col + 1, k):
                ai[j] = ring.exact_div(ai[j] * piv - aic * ac[j], prev)
            ai[col] = zero
        prev = piv
    det = a[k - 1][k - 1]
    return det if sign == 1 else -det


def det_field(m: ExactMatrix):
    """Exact determinant by Gaussian elimination; the ring must be a field."""
    _require_square(m)
    ring = m.ring
    if not ring.is_field:
        raise ValueError(f"det_field over {ring.name}, which is not marked as a field")
    zero = ring.zero
    a = [list(row) for row in m.entries]
    k = m.rows
    det = ring.one
    for col in range(k):
        if a[col][col] == zero:
            for r in range(col + 1, k):
                if a[r][col] != zero:
                    a[col], a[r] = a[r], a[col]
                    det = -det
                    break
            else:
                return zero
        piv = a[col][col]
        det = det * piv
        pivinv = ring.exact_div(ring.one, piv)
        for i in range(col + 1, k):
            f = a[i][col] * pivinv
            if f == zero:
                continue
            ai = a[i]
            ac = a[col]
            for j in range(col, k):
                ai[j] = ai[j] - f * ac[j]
    return det


def _det_auto(m: ExactMatrix):
    return det_field(m) if m.ring.is_field else det_bareiss(m)


def adjugate(m: ExactMatrix) -> ExactMatrix:
    """Transpose of the cofactor matrix, via explicit minors.

    Satisfies M @ adj(M) = det(M) * I with no invertibility assumption; the
    1x1 case is the empty-minor convention adj([h]) = [1].
    """
    _require_square(m)
    ring = m.ring
    k = m.rows
    if k == 1:
        return ExactMatrix(ring, [[ring.one]])
    out = [[ring.zero] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = _det_auto(m.submatrix(i, j))
            out[j][i] = minor if (i + j) % 2 == 0 else -minor
    return ExactMatrix(ring, out)


def adjugate_fast(m: ExactMatrix) -> ExactMatrix:
    """Adjugate by det * inverse over the rationals when nonsingular.

    Agrees with adjugate() everywhere (cofactor fallback when singular or
    when the coefficient structure is not ZZ/QQ); worthwhile because it is
    O(k^3) instead of O(k^5) for the large integer adjugates.
    """
    if m.ring not in (ZZ, QQ) or not m.is_square:
        return adjugate(m)
    k = m.rows
    if k == 1:
        return adjugate(m)
    # Gauss-Jordan on [A | I] over Fraction, tracking det as the pivot product
    a = [[Fraction(x) for x in row] + [Fraction(1 if j == i else 0) for j in range(k)]
         for i, row in enumerate(m.entries)]
    det = Fraction(1)
    for col in range(k):
        piv_row = next((r for r in range(col, k) if a[r][col]), None)
        if piv_row is None:
            return adjugate(m)
        if piv_row != col:
            a[col], a[piv_row] = a[piv_row], a[col]
            det = -det
        piv = a[col][col]
        det *= piv
        a[col] = [x / piv for x in a[col]]
        for r in range(k):
            if r == col or not a[r][col]:
                continue
            f = a[r][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [[a[i][k + j] * det for j in range(k)] for i in range(k)]
    if m.ring is ZZ:
        if any(x.denominator != 1 for row in out for x in row):
            raise RuntimeError("integer adjugate came out non-integral")
        out = [[x.numerator for x in row] for row in out]
    return ExactMatrix(m.ring, out)


def outer(ring: Ring, u, v) -> ExactMatrix:
    return ExactMatrix(ring, [[a * b for b in v] for a in u])


def quadratic_form_adjugate(h: ExactMatrix, u, v):
    """v^T adj(H) u computed as det(H + u v^T) - det(H).

    The matrix determinant lemma makes the two sides equal; computing the
    difference of two determinants avoids forming the adjugate.
    """
    _require_square(h)
    u = list(u)
    v = list(v)
    if len(u) != h.rows or len(v) != h.rows:
        raise ValueError("vector length does not match matrix dimension")
    return _det_auto(h + outer(h.ring, u, v)) - _det_auto(h)
