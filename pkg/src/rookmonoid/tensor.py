"""The diagram action on n-fold tensor powers of a pointed vector space.

The underlying space has basis v_0, v_1, ..., v_m where v_0 is the marked
vector; the tensor power has dimension (m+1)^n with basis indexed by digit
strings.  A basis column v_{i_1 ... i_n} (digits read along the bottom row)
maps to zero unless every isolated bottom vertex b of the diagram carries
digit i_b = 0; otherwise the output digit at top vertex a is the input digit
at its partner, and 0 at isolated tops.  Matrices are 0/1 and the assignment
is multiplicative, giving a representation of the whole monoid algebra.

Digit strings are linearized big-endian: v_{i_1 ... i_n} sits at position
sum of i_j (m+1)^(n-j).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraElement
from .caps import DEFAULT_MAX_CELLS, check_cap
from .diagrams import all_diagrams, monoid_order
from .linalg import SparseMatrix, SpanBasis, nullspace, row_space


def tensor_dim(m: int, n: int) -> int:
    if m < 0 or n < 1:
        raise ValueError(f"need m >= 0 and n >= 1, got m={m}, n={n}")
    return (m + 1) ** n


def _guard(m: int, n: int, max_cells: int) -> None:
    check_cap(
        f"tensor matrix cells (m+1)^(2n) at m={m}, n={n}",
        tensor_dim(m, n) ** 2,
        max_cells,
    )


def tensor_index(digits: Sequence[int], m: int) -> int:
    out = 0
    for d in digits:
        if not 0 <= d <= m:
            raise ValueError(f"digit {d} outside 0..{m}")
        out = out * (m + 1) + d
    return out


def diagram_matrix(
    d: Sequence[int], m: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SparseMatrix:
    """The 0/1 matrix of one diagram on the tensor power."""
    n = len(d)
    _guard(m, n, max_cells)
    dim = tensor_dim(m, n)
    hit = set(d) - {0}
    # isolated bottom vertices only accept digit 0
    ranges = [range(m + 1) if b in hit else range(1) for b in range(1, n + 1)]
    entries: dict[tuple[int, int], Fraction] = {}
    for digits in itertools.product(*ranges):
        col = tensor_index(digits, m)
        out_digits = tuple(digits[b - 1] if b else 0 for b in d)
        entries[(tensor_index(out_digits, m), col)] = Fraction(1)
    return SparseMatrix(dim, dim, entries)


def element_matrix(
    a: AlgebraElement, m: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SparseMatrix:
    """Matrix of an algebra element; exact cancellation included."""
    _guard(m, a.n, max_cells)
    dim = tensor_dim(m, a.n)
    acc: dict[tuple[int, int], Fraction] = {}
    for d, coeff in a.terms.items():
        for key, one in diagram_matrix(d, m, max_cells=max_cells).entries.items():
            val = acc.get(key, 0) + coeff * one
            if val:
                acc[key] = val
            else:
                acc.pop(key, None)
    return SparseMatrix(dim, dim, acc)


def phi_matrix(
    m: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SparseMatrix:
    """The representation map as one matrix: row index runs over (output,
    input) basis pairs vectorized row-major, columns over the canonical
    diagram order."""
    _guard(m, n, max_cells)
    dim = tensor_dim(m, n)
    diags = all_diagrams(n)
    entries: dict[tuple[int, int], Fraction] = {}
    for col, d in enumerate(diags):
        for (out_i, in_i), one in diagram_matrix(d, m, max_cells=max_cells).entries.items():
            entries[(out_i * dim + in_i, col)] = one
    return SparseMatrix(dim * dim, len(diags), entries)


def phi_rank(m: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """Rank of the representation map on the monoid algebra."""
    return row_space(phi_matrix(m, n, max_cells=max_cells)).dimension


def annihilator_basis(
    m: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SpanBasis:
    """Echelon basis, in diagram coordinates, of the elements acting as zero
    on the tensor power."""
    kernel = nullspace(phi_matrix(m, n, max_cells=max_cells))
    basis = SpanBasis(monoid_order(n))
    for vec in kernel:
        basis.insert(vec)
    return basis


def matrix_of_coordinates(
    coords: dict[int, Fraction], m: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> SparseMatrix:
    """Matrix of the element with the given canonical-order coordinates."""
    diags = all_diagrams(n)
    elem = AlgebraElement(n, {diags[i]: c for i, c in coords.items()})
    return element_matrix(elem, m, max_cells=max_cells)
