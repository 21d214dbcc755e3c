"""Two-sided ideals of the monoid algebra and the structure checks built on
them.

An ideal is held as an echelon span inside the coordinate space indexed by
the canonical diagram order.  Saturation is breadth-first: multiply pending
vectors by every generator on both sides and insert the images until nothing
new appears.  A generator times a diagram is a single diagram, so each
generator acts on coordinates as a precomputed index map.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from . import specht
from .algebra import (
    AlgebraElement,
    antisymmetrizer,
    element_coordinates,
    element_from_coordinates,
    full_projector,
    integer_coordinates,
    symmetrizer,
    tableau_quasi_idempotent,
    top_antisymmetrizer,
)
from .caps import DEFAULT_MAX_CELLS
from .diagrams import all_diagrams, generator, monoid_order, multiply
from .linalg import SpanBasis
from .reporting import assertion, report
from .tensor import annihilator_basis, element_matrix, phi_rank
from .verify import DEFAULT_SEED


@lru_cache(maxsize=None)
def _generator_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """Index maps for left and right multiplication by each generator."""
    diags = all_diagrams(n)
    index = {d: i for i, d in enumerate(diags)}
    gens = [generator(n, "s", i) for i in range(1, n)]
    gens += [generator(n, "p", i) for i in range(1, n + 1)]
    maps = [tuple(index[multiply(g, d)] for d in diags) for g in gens]
    maps += [tuple(index[multiply(d, g)] for d in diags) for g in gens]
    return tuple(maps)


def _apply_map(tau: tuple[int, ...], vec: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, c in vec.items():
        j = tau[i]
        acc = out.get(j, 0) + c
        if acc:
            out[j] = acc
        else:
            out.pop(j, None)
    return out


@dataclass
class IdealSpan:
    n: int
    generator: AlgebraElement
    basis: SpanBasis

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    def contains_element(self, a: AlgebraElement) -> bool:
        return self.basis.contains(element_coordinates(a))


def two_sided_ideal(a: AlgebraElement, *, target_dim: int | None = None) -> IdealSpan:
    """Saturate the span of ``a`` under both-sided generator multiplication.

    With ``target_dim`` set, breadth-first growth pauses once the span
    reaches that dimension; a closure sweep over the echelon rows then either
    certifies stability or feeds the escaping images back in, so the result
    is the full ideal either way.
    """
    if a.is_zero():
        raise ValueError("the zero element generates the zero ideal")
    n = a.n
    maps = _generator_maps(n)
    basis = SpanBasis(monoid_order(n))
    seed = integer_coordinates(a)
    basis.insert(seed)
    queue: deque[dict[int, int]] = deque([seed])
    while True:
        while queue:
            vec = queue.popleft()
            for tau in maps:
                image = _apply_map(tau, vec)
                if basis.insert(image):
                    queue.append(image)
            if target_dim is not None and basis.dimension >= target_dim:
                queue.clear()
        escaped = []
        for row in basis.int_rows():
            for tau in maps:
                image = _apply_map(tau, row)
                if not basis.contains(image):
                    escaped.append(image)
        if not escaped:
            return IdealSpan(n, a, basis)
        for image in escaped:
            if basis.insert(image):
                queue.append(image)


def two_sided_ideal_exhaustive(a: AlgebraElement) -> IdealSpan:
    """Span of every product D1 * a * D2; quadratic in the monoid order, for
    cross-checking the saturation at small sizes."""
    if a.is_zero():
        raise ValueError("the zero element generates the zero ideal")
    n = a.n
    basis = SpanBasis(monoid_order(n))
    diags = all_diagrams(n)
    for d1 in diags:
        left = AlgebraElement.from_diagram(d1) * a
        for d2 in diags:
            basis.insert(element_coordinates(left * AlgebraElement.from_diagram(d2)))
    return IdealSpan(n, a, basis)


@lru_cache(maxsize=None)
def block_ideal(shape: specht.Shape, n: int) -> IdealSpan:
    """The two-sided ideal generated by the quasi-idempotent of the canonical
    row-filled tableau of the shape.  Cached; treat as read-only."""
    t = specht.row_filled_tableau(tuple(shape), n)
    return two_sided_ideal(tableau_quasi_idempotent(t))


def annihilator_dimension_formula(m: int, n: int) -> int:
    """Independent prediction: sum of squared Specht dimensions over the
    shapes with more than m rows."""
    return sum(
        specht.specht_dimension(shape, n) ** 2
        for shape in specht.all_shapes(n)
        if len(shape) >= m + 1
    )


def check_one_dimensional_ideals(n: int) -> dict:
    """The full symmetrizer, full antisymmetrizer, and all-deleting projector
    each span a one-dimensional two-sided ideal, with the advertised
    generator eigenvalues."""
    everything = tuple(range(1, n + 1))
    cases = [
        ("symmetrizer", symmetrizer(everything, n), {"s": 1, "p": 0}),
        ("antisymmetrizer", antisymmetrizer(everything, n), {"s": -1, "p": 0}),
        ("projector", full_projector(n), {"s": 1, "p": 1}),
    ]
    gens = [("s", i) for i in range(1, n)] + [("p", i) for i in range(1, n + 1)]
    assertions = []
    for name, elem, eigen in cases:
        dim = two_sided_ideal(elem).dimension
        assertions.append(
            assertion(f"{name} ideal is one-dimensional", dim == 1, {"dim": dim})
        )
        bad = []
        for kind, i in gens:
            g = AlgebraElement.from_diagram(generator(n, kind, i))
            expect = elem.scale(eigen[kind])
            if g * elem != expect or elem * g != expect:
                bad.append(f"{kind}_{i}")
        assertions.append(
            assertion(
                f"{name} generator eigenvalues",
                not bad,
                {"expected": eigen} if not bad else {"violations": bad},
            )
        )
    return report("one-dimensional-ideals", {"n": n}, assertions)


def check_block_decomposition(
    n: int,
    *,
    exhaustive: bool | None = None,
    seed: int = DEFAULT_SEED,
    sample_pairs: int = 300,
) -> dict:
    """The block ideals are pairwise orthogonal and their dimensions, the
    squared Specht dimensions, add up to the monoid order."""
    if exhaustive is None:
        exhaustive = n <= 3
    shapes = specht.all_shapes(n)
    blocks = {shape: block_ideal(shape, n) for shape in shapes}

    dims = {shape: blocks[shape].dimension for shape in shapes}
    expected = {
        shape: specht.specht_dimension(shape, n) ** 2 for shape in shapes
    }
    dim_witness = {
        ",".join(map(str, shape)) or "empty": [dims[shape], expected[shape]]
        for shape in shapes
    }
    assertions = [
        assertion(
            "block dimension is the squared Specht dimension",
            dims == expected,
            dim_witness,
        ),
        assertion(
            "block dimensions sum to the monoid order",
            sum(dims.values()) == monoid_order(n),
            {"sum": sum(dims.values()), "order": monoid_order(n)},
        ),
    ]

    reps = {
        shape: [
            element_from_coordinates(n, dict(row.entries))
            for row in blocks[shape].basis.rows()
        ]
        for shape in shapes
    }
    pairs = [
        (s1, i, s2, j)
        for s1 in shapes
        for s2 in shapes
        if s1 != s2
        for i in range(len(reps[s1]))
        for j in range(len(reps[s2]))
    ]
    if not exhaustive and len(pairs) > sample_pairs:
        pairs = random.Random(seed).sample(pairs, sample_pairs)
    bad = []
    for s1, i, s2, j in pairs:
        if not (reps[s1][i] * reps[s2][j]).is_zero():
            bad.append(
                {"left": ",".join(map(str, s1)), "right": ",".join(map(str, s2))}
            )
    assertions.append(
        assertion(
            "products across distinct blocks vanish",
            not bad,
            bad[:5] if bad else {"pairs_checked": len(pairs), "exhaustive": exhaustive},
        )
    )
    return report(
        "verify-blocks",
        {"n": n, "exhaustive": exhaustive, "seed": seed},
        assertions,
    )


def check_specht_orthogonality(
    n: int,
    *,
    exhaustive: bool | None = None,
    seed: int = DEFAULT_SEED,
    sample_tableaux: int = 12,
) -> dict:
    """A tableau's quasi-idempotent kills every Specht module of a different
    shape and acts nontrivially on its own shape."""
    if exhaustive is None:
        exhaustive = n <= 3
    shapes = specht.all_shapes(n)
    rng = random.Random(seed)
    polytabloids = {
        shape: [specht.polytabloid(s) for s in specht.all_tableaux(shape, n)]
        for shape in shapes
    }
    assertions = []
    for shape in shapes:
        tableaux = list(specht.all_tableaux(shape, n))
        if not exhaustive and len(tableaux) > sample_tableaux:
            tableaux = rng.sample(tableaux, sample_tableaux)
        bad = []
        for t in tableaux:
            e_t = tableau_quasi_idempotent(t)
            for other in shapes:
                if other == shape:
                    continue
                for vec in polytabloids[other]:
                    if specht.act_on_tabloid_vector(e_t, vec):
                        bad.append(
                            {
                                "tableau": [list(r) for r in t.rows],
                                "other_shape": list(other),
                            }
                        )
        label = ",".join(map(str, shape)) or "empty"
        assertions.append(
            assertion(
                f"quasi-idempotent of shape ({label}) kills the other shapes",
                not bad,
                bad[:3] if bad else {"tableaux_checked": len(tableaux)},
            )
        )
        e_canon = tableau_quasi_idempotent(specht.row_filled_tableau(shape, n))
        survives = any(
            specht.act_on_tabloid_vector(e_canon, vec)
            for vec in polytabloids[shape]
        )
        assertions.append(
            assertion(f"shape ({label}) is not killed by its own quasi-idempotent", survives)
        )
    return report(
        "verify-lemma-3-10",
        {"n": n, "exhaustive": exhaustive, "seed": seed},
        assertions,
    )


def check_absorption(m: int, n: int) -> dict:
    """The top antisymmetrizer on m+1 vertices rescales the quasi-idempotent
    of every column-filled tableau with more than m rows by (m+1)!."""
    if not 0 <= m < n:
        raise ValueError(f"need 0 <= m < n, got m={m}, n={n}")
    y = top_antisymmetrizer(m + 1, n)
    scale = factorial(m + 1)
    tall = [s for s in specht.all_shapes(n) if len(s) >= m + 1]
    assertions = [
        assertion(
            "some shape has more than m rows",
            bool(tall),
            {"count": len(tall)},
        )
    ]
    bad = []
    for shape in tall:
        e = tableau_quasi_idempotent(specht.column_filled_tableau(shape, n))
        if y * e != e.scale(scale):
            bad.append(",".join(map(str, shape)) or "empty")
    assertions.append(
        assertion(
            "antisymmetrizer acts as (m+1)! on tall quasi-idempotents",
            not bad,
            bad if bad else {"shapes_checked": len(tall), "scale": scale},
        )
    )
    return report("verify-lemma-4-4", {"m": m, "n": n}, assertions)


def check_faithful_action(
    m: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> dict:
    """With at least n unmarked basis vectors the representation matrix has
    full column rank, so the action on the tensor power is faithful."""
    if m < n:
        raise ValueError(f"need m >= n for the faithful case, got m={m}, n={n}")
    order = monoid_order(n)
    observed = phi_rank(m, n, max_cells=max_cells)
    assertions = [
        assertion(
            "representation map has full rank",
            observed == order,
            {"rank": observed, "order": order},
        ),
        assertion("annihilator is zero", order - observed == 0, {"nullity": order - observed}),
    ]
    return report("verify-schur-weyl", {"m": m, "n": n, "mode": "faithful"}, assertions)


def check_annihilator_ideal(
    m: int, n: int, *, max_cells: int = DEFAULT_MAX_CELLS
) -> dict:
    """The annihilator of the tensor power is the two-sided ideal generated
    by the top antisymmetrizer on m+1 vertices.

    Both sides are computed independently: the annihilator as the kernel of
    the representation matrix, the ideal by saturation, and the dimension
    against the Specht-module count of shapes with more than m rows.
    """
    if not 0 <= m < n:
        raise ValueError(f"need 0 <= m < n, got m={m}, n={n}")
    y = top_antisymmetrizer(m + 1, n)
    killed = element_matrix(y, m, max_cells=max_cells).is_zero()
    ann = annihilator_basis(m, n, max_cells=max_cells)
    expected_dim = annihilator_dimension_formula(m, n)
    ideal = two_sided_ideal(y, target_dim=ann.dimension)

    inside = all(ann.contains(row) for row in ideal.basis.int_rows())
    assertions = [
        assertion("generator acts as zero on the tensor power", killed),
        assertion(
            "ideal lies inside the annihilator",
            inside,
        ),
        assertion(
            "annihilator dimension matches the Specht count",
            ann.dimension == expected_dim,
            {"annihilator": ann.dimension, "specht_count": expected_dim},
        ),
        assertion(
            "ideal fills the annihilator",
            ideal.dimension == ann.dimension,
            {"ideal": ideal.dimension, "annihilator": ann.dimension},
        ),
        assertion(
            "annihilator equals the ideal as subspaces",
            ann == ideal.basis,
        ),
    ]
    return report(
        "verify-schur-weyl",
        {"m": m, "n": n, "mode": "annihilator"},
        assertions,
    )
