from fractions import Fraction

from rookmonoid.algebra import (
    AlgebraElement,
    full_projector,
    tableau_quasi_idempotent,
    top_antisymmetrizer,
)
from rookmonoid.diagrams import all_diagrams, monoid_order, rank, rank_class_size
from rookmonoid.ideals import (
    annihilator_dimension_formula,
    block_ideal,
    check_absorption,
    check_annihilator_ideal,
    check_block_decomposition,
    check_faithful_action,
    check_one_dimensional_ideals,
    check_specht_orthogonality,
    two_sided_ideal,
    two_sided_ideal_exhaustive,
)
from rookmonoid.specht import all_shapes, row_filled_tableau, specht_dimension


def test_saturation_matches_exhaustive():
    for n in (2, 3):
        diags = all_diagrams(n)
        for seed in (diags[0], diags[len(diags) // 2], diags[-1]):
            a = AlgebraElement.from_diagram(seed)
            fast = two_sided_ideal(a)
            slow = two_sided_ideal_exhaustive(a)
            assert fast.basis == slow.basis


def test_saturation_matches_exhaustive_on_sums():
    n = 3
    diags = all_diagrams(n)
    a = AlgebraElement(n, {diags[2]: Fraction(1), diags[17]: Fraction(-1, 2)})
    assert two_sided_ideal(a).basis == two_sided_ideal_exhaustive(a).basis


def test_target_dim_early_stop_is_exact():
    n = 3
    a = full_projector(n)
    full = two_sided_ideal(a)
    early = two_sided_ideal(a, target_dim=full.dimension)
    assert early.basis == full.basis


def test_rank_zero_ideal_is_one_dimensional():
    for n in (2, 3, 4):
        ideal = two_sided_ideal(full_projector(n))
        assert ideal.dimension == 1
        assert ideal.contains_element(full_projector(n))


def test_deletion_chain_ideals_span_low_ranks():
    # the ideal generated by p_1 ... p_r is the span of diagrams of rank <= n - r
    n = 3
    for r in range(1, n + 1):
        d = tuple(0 for _ in range(r)) + tuple(range(r + 1, n + 1))
        ideal = two_sided_ideal(AlgebraElement.from_diagram(d))
        expected = sum(rank_class_size(n, k) for k in range(r, n + 1))
        assert ideal.dimension == expected
        for diag in all_diagrams(n):
            inside = rank(diag) <= n - r
            assert ideal.contains_element(AlgebraElement.from_diagram(diag)) == inside


def test_block_ideal_dimensions_are_squared_specht():
    for n in (2, 3):
        for shape in all_shapes(n):
            assert block_ideal(shape, n).dimension == specht_dimension(shape, n) ** 2


def test_block_ideal_contains_its_generator():
    n = 3
    for shape in all_shapes(n):
        e = tableau_quasi_idempotent(row_filled_tableau(shape, n))
        assert block_ideal(shape, n).contains_element(e)


def test_annihilator_dimension_formula_frozen():
    assert annihilator_dimension_formula(1, 2) == 1
    assert annihilator_dimension_formula(1, 3) == 14
    assert annihilator_dimension_formula(2, 3) == 1
    assert annihilator_dimension_formula(1, 4) == 139
    assert annihilator_dimension_formula(2, 4) == 26
    assert annihilator_dimension_formula(3, 4) == 1
    # wide case: nothing is annihilated
    assert annihilator_dimension_formula(2, 2) == 0
    assert annihilator_dimension_formula(5, 3) == 0


def test_annihilator_formula_counts_tall_shapes():
    # the formula adds squared dimensions over shapes with more than m rows
    m, n = 1, 3
    expected = sum(
        specht_dimension(shape, n) ** 2
        for shape in all_shapes(n)
        if len(shape) > m
    )
    assert annihilator_dimension_formula(m, n) == expected


def test_one_dimensional_ideals_report():
    for n in (2, 3):
        rep = check_one_dimensional_ideals(n)
        assert rep["pass"], rep
        assert all(a["pass"] for a in rep["assertions"])


def test_block_decomposition_report():
    rep = check_block_decomposition(2)
    assert rep["pass"], rep
    rep = check_block_decomposition(3)
    assert rep["pass"], rep


def test_specht_orthogonality_report():
    for n in (2, 3):
        rep = check_specht_orthogonality(n)
        assert rep["pass"], rep
        assert rep["check"] == "verify-lemma-3-10"


def test_absorption_report():
    rep = check_absorption(1, 2)
    assert rep["pass"], rep
    assert rep["check"] == "verify-lemma-4-4"
    rep = check_absorption(2, 3)
    assert rep["pass"], rep


def test_faithful_action_report():
    rep = check_faithful_action(2, 2)
    assert rep["pass"], rep
    rep = check_faithful_action(3, 2)
    assert rep["pass"], rep


def test_annihilator_ideal_report_names_every_claim():
    rep = check_annihilator_ideal(1, 2)
    assert rep["pass"], rep
    names = [a["name"] for a in rep["assertions"]]
    assert len(names) == 5
    assert len(set(names)) == 5


def test_annihilator_ideal_report_small_cases():
    for m, n in ((1, 3), (2, 3)):
        rep = check_annihilator_ideal(m, n)
        assert rep["pass"], rep


def test_generator_ideal_dimension_matches_annihilator_formula():
    # dimension of the ideal generated by Y_{m+1} equals the annihilator count
    for m, n in ((1, 2), (1, 3), (2, 3)):
        y = top_antisymmetrizer(m + 1, n)
        ideal = two_sided_ideal(y)
        assert ideal.dimension == annihilator_dimension_formula(m, n)
