"""Report-producing checks for the combinatorial layer.

These complement the ideal-theoretic checks: enumeration counts against the
closed formulas, factorization round-trips and uniqueness, multiplicativity
of the tensor action, and the squared-dimension count of Specht modules.
"""

from __future__ import annotations

import itertools
import math
import random

from . import specht
from .caps import DEFAULT_MAX_CELLS
from .diagrams import (
    all_diagrams,
    all_permutations,
    compose_quadruple,
    coset_reps,
    factorize,
    monoid_order,
    multiply,
    Quadruple,
    rank_class,
    rank_class_size,
)
from .linalg import matmul
from .reporting import assertion, report
from .tensor import diagram_matrix

DEFAULT_SEED = 20260822


def check_counting(n: int) -> dict:
    """Enumerated sizes agree with the closed formulas."""
    diags = all_diagrams(n)
    order = monoid_order(n)
    class_sizes = {r: len(rank_class(n, r)) for r in range(n + 1)}
    expected_classes = {r: rank_class_size(n, r) for r in range(n + 1)}
    assertions = [
        assertion(
            "total count matches sum of C(n,r)^2 r!",
            len(diags) == order,
            {"enumerated": len(diags), "formula": order},
        ),
        assertion(
            "deletion classes match C(n,r)^2 (n-r)!",
            class_sizes == expected_classes,
            {str(r): [class_sizes[r], expected_classes[r]] for r in class_sizes},
        ),
        assertion("enumeration is duplicate-free", len(set(diags)) == len(diags)),
        assertion(
            "enumeration is lexicographically sorted",
            list(diags) == sorted(diags),
        ),
    ]
    return report("counting", {"n": n}, assertions)


def _all_quadruples(n: int):
    for r in range(n + 1):
        reps = coset_reps(n, r)
        fixed = tuple(range(1, r + 1))
        moving = range(r + 1, n + 1)
        for d1 in reps:
            for d2 in reps:
                for tail in itertools.permutations(moving):
                    yield Quadruple(d1, d2, r, fixed + tail)


def check_factorization(n: int, *, uniqueness: bool = False) -> dict:
    """factorize and compose are mutually inverse; optionally confirm by
    exhaustion that each diagram admits exactly one valid quadruple."""
    diags = all_diagrams(n)
    bad_roundtrip = []
    bad_shape = []
    for d in diags:
        q = factorize(d)
        if compose_quadruple(q) != d:
            bad_roundtrip.append(list(d))
        reps = coset_reps(n, q.r)
        if (
            q.d1 not in reps
            or q.d2 not in reps
            or q.sigma[: q.r] != tuple(range(1, q.r + 1))
        ):
            bad_shape.append(list(d))
    assertions = [
        assertion(
            "compose inverts factorize on every diagram",
            not bad_roundtrip,
            bad_roundtrip[:5] if bad_roundtrip else {"diagrams": len(diags)},
        ),
        assertion(
            "factors are coset representatives fixing 1..r",
            not bad_shape,
            bad_shape[:5] if bad_shape else None,
        ),
    ]
    if uniqueness:
        seen: dict = {}
        collisions = []
        for q in _all_quadruples(n):
            d = compose_quadruple(q)
            if d in seen and seen[d] != q:
                collisions.append(list(d))
            seen[d] = q
        assertions.append(
            assertion(
                "each diagram comes from exactly one quadruple",
                len(seen) == len(diags) and not collisions,
                collisions[:5] if collisions else {"quadruples": len(diags)},
            )
        )
    return report("factorization", {"n": n, "uniqueness": uniqueness}, assertions)


def check_tensor_homomorphism(
    n: int,
    m: int,
    *,
    exhaustive: bool = True,
    pairs: int = 1000,
    seed: int = DEFAULT_SEED,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> dict:
    """Matrix of a product equals the product of the matrices."""
    diags = all_diagrams(n)
    cache = {d: diagram_matrix(d, m, max_cells=max_cells) for d in diags}
    if exhaustive:
        chosen = [(d1, d2) for d1 in diags for d2 in diags]
    else:
        rng = random.Random(seed)
        chosen = [
            (rng.choice(diags), rng.choice(diags)) for _ in range(pairs)
        ]
    bad = []
    for d1, d2 in chosen:
        if matmul(cache[d1], cache[d2]) != cache[multiply(d1, d2)]:
            bad.append({"left": list(d1), "right": list(d2)})
    assertions = [
        assertion(
            "diagram matrices multiply like diagrams",
            not bad,
            bad[:5] if bad else {"pairs_checked": len(chosen), "exhaustive": exhaustive},
        )
    ]
    params = {"n": n, "m": m, "exhaustive": exhaustive}
    if not exhaustive:
        params["seed"] = seed
    return report("tensor-homomorphism", params, assertions)


def check_specht_dimension_sum(n: int) -> dict:
    """Squared Specht dimensions over all shapes add up to the monoid order,
    and each dimension scales from its square-content case by C(n, r)."""
    shapes = specht.all_shapes(n)
    dims = {shape: specht.specht_dimension(shape, n) for shape in shapes}
    total = sum(d * d for d in dims.values())
    order = monoid_order(n)
    bad_scale = []
    for shape in shapes:
        r = sum(shape)
        base = specht.specht_dimension(shape, r) if r else 1
        if dims[shape] != math.comb(n, r) * base:
            bad_scale.append(",".join(map(str, shape)) or "empty")
    assertions = [
        assertion(
            "sum of squared dimensions is the monoid order",
            total == order,
            {"sum": total, "order": order},
        ),
        assertion(
            "dimensions scale by the binomial in n",
            not bad_scale,
            bad_scale if bad_scale else None,
        ),
    ]
    witness = {
        ",".join(map(str, shape)) or "empty": dims[shape] for shape in shapes
    }
    assertions.append(assertion("dimension table", True, witness))
    return report("specht-dimensions", {"n": n}, assertions)
