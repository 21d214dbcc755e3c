"""The monoid algebra: rational linear combinations of rook diagrams.

Elements multiply by convolving supports through diagram composition.  The
module also builds the distinguished elements the structure theory runs on:
full symmetrizers and antisymmetrizers over a chosen vertex subset, the
all-deleting projector, and the quasi-idempotent attached to a tableau.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from . import specht
from .diagrams import (
    Diagram,
    all_diagrams,
    all_permutations,
    diagram_index,
    diagram_sign,
    generator,
    identity,
    is_diagram,
    monoid_order,
    multiply,
    perm_sign,
    rank_class,
    star,
)


class AlgebraElement:
    """A finitely supported map from diagrams to nonzero rationals."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Diagram, Fraction | int] | None = None):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        self.n = n
        clean: dict[Diagram, Fraction] = {}
        for d, c in (terms or {}).items():
            if len(d) != n:
                raise ValueError(f"diagram {d} has size {len(d)}, expected {n}")
            c = Fraction(c)
            if c:
                clean[tuple(d)] = c
        self.terms = clean

    @classmethod
    def from_diagram(cls, d: Sequence[int], coeff: Fraction | int = 1) -> "AlgebraElement":
        if not is_diagram(d):
            raise ValueError(f"not a diagram: {d}")
        return cls(len(d), {tuple(d): coeff})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {identity(n): 1})

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_size(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same_size(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            acc = terms.get(d, 0) + c
            if acc:
                terms[d] = acc
            else:
                terms.pop(d, None)
        out = AlgebraElement(self.n)
        out.terms = terms
        return out

    def __neg__(self) -> "AlgebraElement":
        out = AlgebraElement(self.n)
        out.terms = {d: -c for d, c in self.terms.items()}
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "AlgebraElement":
        c = Fraction(c)
        out = AlgebraElement(self.n)
        if c:
            out.terms = {d: c * v for d, v in self.terms.items()}
        return out

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._require_same_size(other)
            terms: dict[Diagram, Fraction] = {}
            for d1, c1 in self.terms.items():
                for d2, c2 in other.terms.items():
                    d = multiply(d1, d2)
                    acc = terms.get(d, 0) + c1 * c2
                    if acc:
                        terms[d] = acc
                    else:
                        terms.pop(d, None)
            out = AlgebraElement(self.n)
            out.terms = terms
            return out
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "AlgebraElement":
        """Flip every diagram; an anti-automorphism of the algebra."""
        out = AlgebraElement(self.n)
        out.terms = {star(d): c for d, c in self.terms.items()}
        return out

    def support(self) -> tuple[Diagram, ...]:
        return tuple(sorted(self.terms))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlgebraElement(n={self.n}, 0)"
        parts = ", ".join(
            f"{c}*{d}" for d, c in sorted(self.terms.items())[:4]
        )
        more = "" if len(self.terms) <= 4 else f", ... {len(self.terms)} terms"
        return f"AlgebraElement(n={self.n}, {parts}{more})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"coeff": str(c), "diagram": list(d)}
                for d, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraElement":
        terms: dict[Diagram, Fraction] = {}
        for item in obj["terms"]:
            d = tuple(item["diagram"])
            if not is_diagram(d):
                raise ValueError(f"not a diagram: {d}")
            terms[d] = terms.get(d, Fraction(0)) + Fraction(item["coeff"])
        return cls(obj["n"], terms)


def _embed(small: Diagram, labels: tuple[int, ...], n: int) -> Diagram:
    """Transport a diagram on {1..k} to the vertex set ``labels`` inside a
    size-n diagram that is the identity elsewhere."""
    img = list(identity(n))
    for a_small, b_small in enumerate(small, start=1):
        a = labels[a_small - 1]
        img[a - 1] = labels[b_small - 1] if b_small else 0
    return tuple(img)


def _subset_labels(subset, n: int) -> tuple[int, ...]:
    labels = tuple(sorted(set(subset)))
    if not labels:
        raise ValueError("subset must be nonempty")
    if len(labels) != len(tuple(subset)):
        raise ValueError(f"subset has repeats: {subset}")
    if labels[0] < 1 or labels[-1] > n:
        raise ValueError(f"subset {subset} not inside 1..{n}")
    return labels


def symmetrizer(subset: Sequence[int], n: int) -> AlgebraElement:
    """Alternating-rank sum over the sub-rook-monoid on ``subset``.

    Permutation terms enter with coefficient 1, and the diagrams with r
    deleted vertices enter with (-1)^r r!.  Its two-sided ideal is spanned by
    itself: every generator acts on it as 1 (swaps inside the subset) or 0
    (deletions inside the subset).
    """
    labels = _subset_labels(subset, n)
    k = len(labels)
    terms: dict[Diagram, Fraction] = {}
    for w in all_permutations(k):
        terms[_embed(w, labels, n)] = Fraction(1)
    for r in range(1, k + 1):
        coeff = Fraction((-1) ** r * math.factorial(r))
        for small in rank_class(k, r):
            terms[_embed(small, labels, n)] = coeff
    out = AlgebraElement(n)
    out.terms = terms
    return out


def antisymmetrizer(subset: Sequence[int], n: int) -> AlgebraElement:
    """Signed sum over the permutations of ``subset`` together with the
    signed single-deletion diagrams; swaps inside the subset act as -1 and
    deletions as 0.  Signs are computed on {1..k} before transport."""
    labels = _subset_labels(subset, n)
    k = len(labels)
    terms: dict[Diagram, Fraction] = {}
    for w in all_permutations(k):
        terms[_embed(w, labels, n)] = Fraction(perm_sign(w))
    for small in rank_class(k, 1):
        terms[_embed(small, labels, n)] = Fraction(diagram_sign(small))
    out = AlgebraElement(n)
    out.terms = terms
    return out


def full_projector(n: int) -> AlgebraElement:
    """The product of every deletion generator: the rank-zero diagram.
    Absorbs all generators from both sides."""
    return AlgebraElement.from_diagram((0,) * n)


def top_antisymmetrizer(k: int, n: int) -> AlgebraElement:
    """Antisymmetrizer over the initial segment {1..k}."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    return antisymmetrizer(range(1, k + 1), n)


def tableau_quasi_idempotent(t: specht.Tableau) -> AlgebraElement:
    """Column antisymmetrizers, then row symmetrizers, then deletion of every
    vertex missing from the tableau's content.  Nonzero for every tableau."""
    n = t.n
    out = AlgebraElement.one(n)
    for col in specht.column_sets(t):
        out = out * antisymmetrizer(col, n)
    for row in specht.row_sets(t):
        out = out * symmetrizer(row, n)
    content = t.content
    for i in range(1, n + 1):
        if i not in content:
            out = out * AlgebraElement.from_diagram(generator(n, "p", i))
    return out


def element_coordinates(a: AlgebraElement) -> dict[int, Fraction]:
    """Coordinates of an element in the canonical diagram order."""
    index = diagram_index(a.n)
    return {index[d]: c for d, c in a.terms.items()}


def element_from_coordinates(
    n: int, coords: Mapping[int, Fraction | int]
) -> AlgebraElement:
    diags = all_diagrams(n)
    return AlgebraElement(n, {diags[i]: c for i, c in coords.items() if c})


def integer_coordinates(a: AlgebraElement) -> dict[int, int]:
    """Coordinates scaled by the common denominator: same line, integer
    entries."""
    coords = element_coordinates(a)
    denom = 1
    for c in coords.values():
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    return {i: int(c * denom) for i, c in coords.items()}


def dimension_of_algebra(n: int) -> int:
    return monoid_order(n)
