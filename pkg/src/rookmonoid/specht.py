"""Tableaux with partial content and the Specht modules they span.

A shape is a decreasing tuple of positive integers whose total r may be
smaller than n: a tableau of that shape holds r distinct entries drawn from
{1..n}, so only part of {1..n} appears.  A tabloid is a tableau up to
reordering within rows, stored with sorted rows.  Diagrams act by renaming
entries along their edges; an entry sitting on an isolated bottom vertex of
the diagram kills the tableau, and the distinguished result for that case is
``None``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator, Sequence

from . import diagrams
from .linalg import SpanBasis

if TYPE_CHECKING:
    from .algebra import AlgebraElement

Shape = tuple[int, ...]
Tabloid = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def partitions_of(r: int) -> tuple[Shape, ...]:
    """Partitions of r, largest first in lexicographic order.

    >>> partitions_of(3)
    ((3,), (2, 1), (1, 1, 1))
    """
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(gen(r, r), reverse=True))


def all_shapes(n: int) -> tuple[Shape, ...]:
    """Every partition of every r from 0 through n."""
    return tuple(
        shape for r in range(n + 1) for shape in partitions_of(r)
    )


def is_shape(shape: Sequence[int]) -> bool:
    return all(a >= 1 for a in shape) and all(
        shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
    )


def conjugate(shape: Shape) -> Shape:
    if not shape:
        return ()
    return tuple(
        sum(1 for row in shape if row > j) for j in range(shape[0])
    )


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_shape(self.shape):
            raise ValueError(f"not a shape: {self.shape}")
        if sum(self.shape) > self.n:
            raise ValueError(f"shape {self.shape} does not fit inside 1..{self.n}")
        if tuple(len(row) for row in self.rows) != self.shape:
            raise ValueError(f"rows {self.rows} do not match shape {self.shape}")
        flat = [e for row in self.rows for e in row]
        if len(set(flat)) != len(flat) or not all(1 <= e <= self.n for e in flat):
            raise ValueError(f"entries must be distinct and within 1..{self.n}")

    @property
    def content(self) -> frozenset[int]:
        return frozenset(e for row in self.rows for e in row)


def row_filled_tableau(shape: Shape, n: int) -> Tableau:
    """The tableau filled 1, 2, ... along consecutive rows."""
    counter = itertools.count(1)
    rows = tuple(tuple(next(counter) for _ in range(k)) for k in shape)
    return Tableau(tuple(shape), n, rows)


def column_filled_tableau(shape: Shape, n: int) -> Tableau:
    """The tableau filled 1, 2, ... down consecutive columns."""
    shape = tuple(shape)
    cols = conjugate(shape)
    grid: dict[tuple[int, int], int] = {}
    counter = itertools.count(1)
    for j, height in enumerate(cols):
        for i in range(height):
            grid[(i, j)] = next(counter)
    rows = tuple(
        tuple(grid[(i, j)] for j in range(k)) for i, k in enumerate(shape)
    )
    return Tableau(shape, n, rows)


def row_sets(t: Tableau) -> tuple[tuple[int, ...], ...]:
    return t.rows


def column_sets(t: Tableau) -> tuple[tuple[int, ...], ...]:
    cols = conjugate(t.shape)
    return tuple(
        tuple(t.rows[i][j] for i in range(height))
        for j, height in enumerate(cols)
    )


def all_tableaux(shape: Shape, n: int) -> Iterator[Tableau]:
    """All fillings of the shape by distinct entries from 1..n, in a fixed
    order: content sets ascending, then entry arrangements lexicographic."""
    shape = tuple(shape)
    r = sum(shape)
    bounds = list(itertools.accumulate(shape))
    for content in itertools.combinations(range(1, n + 1), r):
        for arrangement in itertools.permutations(content):
            rows = tuple(
                arrangement[start - k:start]
                for k, start in zip(shape, bounds)
            )
            yield Tableau(shape, n, rows)


def tabloid_of(t: Tableau) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in t.rows)


@lru_cache(maxsize=None)
def all_tabloids(shape: Shape, n: int) -> tuple[Tabloid, ...]:
    """Every tabloid of the shape, sorted by concatenated row content."""
    shape = tuple(shape)
    r = sum(shape)
    out = []
    for content in itertools.combinations(range(1, n + 1), r):
        for split in _row_splits(content, shape):
            out.append(split)
    return tuple(sorted(out, key=lambda tb: tuple(e for row in tb for e in row)))


def _row_splits(content: tuple[int, ...], shape: Shape) -> Iterator[Tabloid]:
    if not shape:
        yield ()
        return
    rest_shape = shape[1:]
    for first in itertools.combinations(content, shape[0]):
        remaining = tuple(e for e in content if e not in first)
        for tail in _row_splits(remaining, rest_shape):
            yield (first,) + tail


@lru_cache(maxsize=None)
def tabloid_index(shape: Shape, n: int) -> dict[Tabloid, int]:
    return {tb: i for i, tb in enumerate(all_tabloids(shape, n))}


def act_on_tableau(d: Sequence[int], t: Tableau) -> Tableau | None:
    """Rename each entry to its top partner in the diagram; ``None`` when an
    entry has no partner (it sits on an isolated bottom vertex)."""
    if len(d) != t.n:
        raise ValueError(f"size mismatch: {len(d)} vs {t.n}")
    partner = diagrams.star(d)
    rows = []
    for row in t.rows:
        new_row = []
        for e in row:
            a = partner[e - 1]
            if a == 0:
                return None
            new_row.append(a)
        rows.append(tuple(new_row))
    return Tableau(t.shape, t.n, tuple(rows))


def act_on_tabloid(d: Sequence[int], tb: Tabloid, n: int) -> Tabloid | None:
    if len(d) != n:
        raise ValueError(f"size mismatch: {len(d)} vs {n}")
    partner = diagrams.star(d)
    rows = []
    for row in tb:
        new_row = []
        for e in row:
            a = partner[e - 1]
            if a == 0:
                return None
            new_row.append(a)
        rows.append(tuple(sorted(new_row)))
    return tuple(rows)


def act_on_tabloid_vector(
    a: "AlgebraElement", vec: dict[Tabloid, Fraction]
) -> dict[Tabloid, Fraction]:
    """Extend the tabloid action linearly to an algebra element."""
    out: dict[Tabloid, Fraction] = {}
    for d, coeff in a.terms.items():
        for tb, c in vec.items():
            image = act_on_tabloid(d, tb, a.n)
            if image is None:
                continue
            acc = out.get(image, 0) + coeff * c
            if acc:
                out[image] = acc
            else:
                out.pop(image, None)
    return out


def _arrangement_sign(base: tuple[int, ...], arrangement: tuple[int, ...]) -> int:
    pos = {e: i for i, e in enumerate(base)}
    seq = [pos[e] for e in arrangement]
    inv = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )
    return -1 if inv % 2 else 1


def polytabloid(t: Tableau) -> dict[Tabloid, Fraction]:
    """Signed sum of the tabloids reachable by permuting within columns."""
    cols = column_sets(t)
    out: dict[Tabloid, Fraction] = {}
    for arrangements in itertools.product(
        *(itertools.permutations(col) for col in cols)
    ):
        rename = {}
        sign = 1
        for col, arr in zip(cols, arrangements):
            sign *= _arrangement_sign(col, arr)
            rename.update(zip(col, arr))
        rows = tuple(
            tuple(sorted(rename.get(e, e) for e in row)) for row in t.rows
        )
        acc = out.get(rows, 0) + sign
        if acc:
            out[rows] = Fraction(acc)
        else:
            out.pop(rows, None)
    return out


def vector_coordinates(
    vec: dict[Tabloid, Fraction], shape: Shape, n: int
) -> dict[int, Fraction]:
    index = tabloid_index(tuple(shape), n)
    return {index[tb]: c for tb, c in vec.items()}


def specht_basis(shape: Shape, n: int) -> SpanBasis:
    """Echelon span of every polytabloid of the shape inside the tabloid
    coordinate space."""
    shape = tuple(shape)
    basis = SpanBasis(len(all_tabloids(shape, n)))
    for t in all_tableaux(shape, n):
        basis.insert(vector_coordinates(polytabloid(t), shape, n))
    return basis


@lru_cache(maxsize=None)
def specht_dimension(shape: Shape, n: int) -> int:
    return specht_basis(tuple(shape), n).dimension
