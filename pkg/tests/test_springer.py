from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from tworow.linalg import solve_tpoly_system, tpoly_det_bareiss
from tworow.polynomials import MPoly, format_poly, parse_poly, variable_names
from tworow.springer import (
    SpringerContext,
    basis_combination,
    basis_image_matrix,
    build_fixed_point,
    equivariant_ideal,
    fixed_points,
    fixed_points_bruteforce,
    kernel_equals_ideal_in_degree,
    kernel_ideal_comparisons,
    localize,
    localize_all,
    ordinary_ideal,
    ordinary_presentation_check,
    sample_monomials,
    specialized_ordinary_generators,
    square_reduction,
    squarefree_monomials,
    standard_monomial_basis,
    straighten_by_rewrite,
    straighten_by_solve,
    tanisaki_ideal,
    verify_relations,
    verify_square_reduction,
)
from tworow.tableaux import TwoRowFilling
from tworow.tpoly import TPoly


def poly(text, n):
    return parse_poly(text, variable_names(n))


def test_context_validation():
    SpringerContext(4, 2)
    SpringerContext(1, 0)
    with pytest.raises(ValueError):
        SpringerContext(3, 2)
    with pytest.raises(ValueError):
        SpringerContext(0, 0)
    with pytest.raises(ValueError):
        SpringerContext(4, -1)


# -- fixed points -------------------------------------------------------------


def test_build_fixed_point_examples():
    ctx = SpringerContext(4, 2)
    assert build_fixed_point(ctx, (1, 2)).w == (3, 4, 1, 2)
    assert build_fixed_point(ctx, (2, 4)).w == (1, 3, 2, 4)
    identity = build_fixed_point(SpringerContext(5, 0), ())
    assert identity.w == (1, 2, 3, 4, 5)


def test_build_fixed_point_rejections():
    ctx = SpringerContext(4, 2)
    with pytest.raises(ValueError):
        build_fixed_point(ctx, (2, 2))
    with pytest.raises(ValueError):
        build_fixed_point(ctx, (0, 3))
    with pytest.raises(ValueError):
        build_fixed_point(ctx, (3,))


def test_fixed_point_listing_matches_known_set():
    expected = [
        (3, 4, 1, 2),
        (3, 1, 4, 2),
        (3, 1, 2, 4),
        (1, 3, 4, 2),
        (1, 3, 2, 4),
        (1, 2, 3, 4),
    ]
    assert [w.w for w in fixed_points(SpringerContext(4, 2))] == expected


def test_fixed_point_order_preservation():
    # values 1..n-k and values n-k+1..n each appear in increasing order
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            for w in fixed_points(SpringerContext(n, k)):
                inverse = {v: i for i, v in enumerate(w.w)}
                low = [inverse[v] for v in range(1, n - k + 1)]
                high = [inverse[v] for v in range(n - k + 1, n + 1)]
                assert low == sorted(low)
                assert high == sorted(high)


def test_fixed_point_defining_formula():
    # position ell_j carries n-k+j; a position i strictly between ell_j
    # and ell_{j+1} carries i-j
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            for w in fixed_points(SpringerContext(n, k)):
                for j, pos in enumerate(w.ell, start=1):
                    assert w.value(pos) == n - k + j
                for i in range(1, n + 1):
                    if i not in w.ell:
                        j = sum(1 for e in w.ell if e < i)
                        assert w.value(i) == i - j


def test_quadratic_relation_case_analysis():
    # at every fixed point one factor of each quadratic generator dies:
    # either w(i) - w(i-1) = 1 or w(i) + w(i-1) = n - k + i, with w(0) = 0
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            for w in fixed_points(SpringerContext(n, k)):
                for i in range(1, n + 1):
                    prev = w.value(i - 1) if i > 1 else 0
                    assert (
                        w.value(i) - prev == 1
                        or w.value(i) + prev == n - k + i
                    )


def test_bruteforce_agrees_small():
    assert fixed_points_bruteforce(SpringerContext(2, 1)) == [(1, 2), (2, 1)]
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            ctx = SpringerContext(n, k)
            assert sorted(w.w for w in fixed_points(ctx)) == fixed_points_bruteforce(ctx)
            assert len(fixed_points(ctx)) == comb(n, k)


def test_fixed_point_count_6_3():
    assert len(fixed_points(SpringerContext(6, 3))) == 20


# -- ideals -------------------------------------------------------------------


def test_equivariant_generators_n2_k1():
    ctx = SpringerContext(2, 1)
    ideal = equivariant_ideal(ctx)
    by_label = dict(zip(ideal.labels, ideal.generators))
    assert by_label["linear"] == poly("x1 + x2 - 3*t", 2)
    assert by_label["quadratic i=1"] == poly("x1^2 - 3*x1*t + 2*t^2", 2)
    # the product family expands (x1 - t)(x2 - t)
    assert by_label["product i=1,2"] == poly("x1*x2 - x1*t - x2*t + t^2", 2)


def test_equivariant_generator_counts_and_degrees():
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            ctx = SpringerContext(n, k)
            ideal = equivariant_ideal(ctx)
            assert len(ideal.generators) == 1 + n + comb(n, k + 1)
            for label, g in zip(ideal.labels, ideal.generators):
                assert g.is_homogeneous()
                if label == "linear":
                    assert g.total_degree() == 1
                elif label.startswith("quadratic"):
                    assert g.total_degree() == 2
                else:
                    assert g.total_degree() == k + 1


def test_product_family_for_point_contexts():
    # k = 0 turns the product family into x_i - i*t, pinning every value
    ctx = SpringerContext(3, 0)
    ideal = equivariant_ideal(ctx)
    products = [
        g for label, g in zip(ideal.labels, ideal.generators) if label.startswith("product")
    ]
    assert products == [poly(f"x{i} - {i}*t", 3) for i in (1, 2, 3)]


def test_ordinary_generators_n2_k1():
    gens = set(ordinary_ideal(SpringerContext(2, 1)).generators)
    names = variable_names(2, include_t=False)
    expected = {
        parse_poly(s, names) for s in ("x1 + x2", "x1^2", "x2^2", "x1*x2")
    }
    assert gens == expected


def test_tanisaki_generators_n3_k1():
    ideal = tanisaki_ideal(SpringerContext(3, 1))
    names = variable_names(3, include_t=False)
    assert len(ideal.generators) == 1 + 3 + 3
    by_label = dict(zip(ideal.labels, ideal.generators))
    assert by_label["e1"] == parse_poly("x1 + x2 + x3", names)
    # pairs appear twice: once per (n-1)-subset, once per (k+1)-subset
    assert by_label["e2 i=1,2"] == parse_poly("x1*x2", names)
    assert by_label["e2 i=2,3"] == parse_poly("x2*x3", names)


def test_specialized_generators_drop_t():
    gens = specialized_ordinary_generators(SpringerContext(3, 1))
    names = variable_names(3, include_t=False)
    assert gens[0] == parse_poly("x1 + x2 + x3", names)
    assert gens[1] == parse_poly("x1^2", names)
    assert gens[2] == parse_poly("x2^2 - x1^2", names)


# -- localization -------------------------------------------------------------


def test_localize_examples():
    ctx = SpringerContext(4, 2)
    w = build_fixed_point(ctx, (1, 2))  # [3, 4, 1, 2]
    assert localize(ctx.x(1), w) == TPoly.term(3, 1)
    linear = equivariant_ideal(ctx).generators[0]
    for point in fixed_points(ctx):
        assert localize(linear, point) == TPoly.zero()
    w2 = build_fixed_point(ctx, (2, 4))  # [1, 3, 2, 4]
    assert localize(ctx.x(1) * ctx.x(2), w2) == TPoly.term(3, 2)


_polys31 = st.dictionaries(
    st.tuples(*(st.integers(0, 2) for _ in range(4))),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    max_size=4,
).map(lambda terms: MPoly(4, terms))


@given(_polys31, _polys31)
@settings(max_examples=40, deadline=None)
def test_localize_is_a_ring_homomorphism(f, g):
    ctx = SpringerContext(3, 1)
    for w in fixed_points(ctx):
        assert localize(f + g, w) == localize(f, w) + localize(g, w)
        assert localize(f * g, w) == localize(f, w) * localize(g, w)


def test_localize_rejects_wrong_ring():
    ctx = SpringerContext(4, 2)
    w = fixed_points(ctx)[0]
    with pytest.raises(ValueError):
        localize(MPoly.variable(3, 0), w)


def test_localize_all_and_homogeneous_shape():
    ctx = SpringerContext(3, 1)
    values = localize_all(ctx.x(2) * ctx.t(), ctx)
    assert set(values) == set(fixed_points(ctx))
    for w, value in values.items():
        assert value == TPoly.term(w.value(2), 2)


def test_relations_vanish():
    for n in range(1, 6):
        for k in range(n // 2 + 1):
            report = verify_relations(SpringerContext(n, k))
            assert report.ok
            assert report.generators_checked == 1 + n + comb(n, k + 1)


def test_relations_n4_k2_counts():
    report = verify_relations(SpringerContext(4, 2))
    assert report.generators_checked == 9
    assert report.fixed_points_checked == 6


# -- square rewriting ---------------------------------------------------------


def test_square_reduction_n2():
    ctx = SpringerContext(2, 1)
    assert square_reduction(ctx, 1) == poly("3*x1*t - 2*t^2", 2)
    # localization check at both fixed points: x1 takes values 2t and t
    x1sq = ctx.x(1) * ctx.x(1)
    for w in fixed_points(ctx):
        assert localize(x1sq, w) == localize(square_reduction(ctx, 1), w)


def test_square_reduction_n4():
    ctx = SpringerContext(4, 2)
    assert square_reduction(ctx, 2) == poly("5*x2*t + x1*t - 7*t^2", 4)


def test_square_reduction_range_check():
    ctx = SpringerContext(3, 1)
    with pytest.raises(ValueError):
        square_reduction(ctx, 0)
    with pytest.raises(ValueError):
        square_reduction(ctx, 4)


def test_telescoping_identity():
    for n in range(1, 7):
        for k in range(n // 2 + 1):
            assert verify_square_reduction(SpringerContext(n, k))


# -- straightening ------------------------------------------------------------


def test_basis_matrix_n2():
    bm = basis_image_matrix(SpringerContext(2, 1))
    assert [t.bottom for t in bm.tableaux] == [(), (2,)]
    assert [w.w for w in bm.fixed_points] == [(2, 1), (1, 2)]
    t = TPoly.term(1, 1)
    assert bm.entries == ((TPoly.one(), t), (TPoly.one(), 2 * t))
    assert bm.determinant == t
    assert bm.core_determinant == 1
    assert tpoly_det_bareiss([list(r) for r in bm.entries]) == t


def test_basis_matrix_point():
    bm = basis_image_matrix(SpringerContext(1, 0))
    assert bm.entries == ((TPoly.one(),),)
    assert bm.determinant == TPoly.one()


def test_basis_matrix_determinant_factorization():
    # the full Q[t] determinant equals the integer core times t^(sum of
    # bottom sizes); cross-checked against generic Bareiss elimination
    for n, k in ((3, 1), (4, 2), (5, 2)):
        bm = basis_image_matrix(SpringerContext(n, k))
        direct = tpoly_det_bareiss([list(row) for row in bm.entries])
        assert direct == bm.determinant
        assert bm.core_determinant != 0


def test_standard_monomial_basis_size():
    for n in range(1, 8):
        for k in range(n // 2 + 1):
            assert len(standard_monomial_basis(SpringerContext(n, k))) == comb(n, k)


def test_straighten_basis_elements_fixed():
    ctx = SpringerContext(4, 2)
    for tab in standard_monomial_basis(ctx):
        mono = [0] * 5
        for j in tab.bottom:
            mono[j - 1] = 1
        p = MPoly.from_monomial(tuple(mono))
        for method in (straighten_by_solve, straighten_by_rewrite):
            assert method(p, ctx) == {tab: TPoly.one()}


def test_straighten_x1_example():
    ctx = SpringerContext(2, 1)
    expected = {
        TwoRowFilling(top=(1, 2), bottom=()): TPoly.term(3, 1),
        TwoRowFilling(top=(1,), bottom=(2,)): TPoly.term(-1),
    }
    assert straighten_by_solve(ctx.x(1), ctx) == expected
    assert straighten_by_rewrite(ctx.x(1), ctx) == expected


def test_straighten_x1_squared_example():
    # two-step reduction: x1^2 -> 3t x1 - 2t^2 -> 7t^2 - 3t x2, confirmed
    # against the localization values (4t^2, t^2)
    ctx = SpringerContext(2, 1)
    expected = {
        TwoRowFilling(top=(1, 2), bottom=()): TPoly.term(7, 2),
        TwoRowFilling(top=(1,), bottom=(2,)): TPoly.term(-3, 1),
    }
    p = ctx.x(1) * ctx.x(1)
    assert straighten_by_solve(p, ctx) == expected
    assert straighten_by_rewrite(p, ctx) == expected
    values = localize_all(p, ctx)
    assert [str(values[w]) for w in fixed_points(ctx)] == ["4*t^2", "t^2"]
    assert localize_all(basis_combination(expected, ctx), ctx) == values


def test_straighten_product_route():
    # x1 x2 x3 exceeds the basis degree for k = 2, forcing the product rule
    ctx = SpringerContext(4, 2)
    p = ctx.x(1) * ctx.x(2) * ctx.x(3)
    assert straighten_by_solve(p, ctx) == straighten_by_rewrite(p, ctx)


def test_straighten_matches_oracle_solve():
    # the generic exact solver over Q[t], fed the full basis image system,
    # reproduces the straightening coefficients
    ctx = SpringerContext(2, 1)
    bm = basis_image_matrix(ctx)
    rhs = [localize(ctx.x(1), w) for w in bm.fixed_points]
    result = solve_tpoly_system([list(r) for r in bm.entries], rhs)
    assert result.is_polynomial
    assert result.quotients == (TPoly.term(3, 1), TPoly.term(-1))


def test_straighten_agreement_all_monomials_small():
    # every x-monomial of x-degree at most 5, both routes, n <= 5
    def x_monomials(n, dmax):
        def rec(prefix, remaining, slots):
            if slots == 0:
                yield prefix
                return
            for e in range(remaining + 1):
                yield from rec(prefix + (e,), remaining - e, slots - 1)

        for d in range(dmax + 1):
            for mono in rec((), d, n):
                if sum(mono) == d:
                    yield mono + (0,)

    for n in range(1, 6):
        for k in range(n // 2 + 1):
            ctx = SpringerContext(n, k)
            for mono in x_monomials(n, 5):
                p = MPoly.from_monomial(mono)
                solved = straighten_by_solve(p, ctx)
                rewritten = straighten_by_rewrite(p, ctx)
                assert solved == rewritten, (n, k, mono)
                # the two sides also localize identically
                rebuilt = basis_combination(solved, ctx)
                assert localize_all(rebuilt, ctx) == localize_all(p, ctx)


def test_straighten_handles_t_and_sums():
    ctx = SpringerContext(3, 1)
    p = poly("x1*x2 - 2*t*x3 + 1/2*t^2", 3)
    assert straighten_by_solve(p, ctx) == straighten_by_rewrite(p, ctx)


def test_straighten_remainder_lies_in_ideal():
    # third route: the difference f - sum c_T x_T reduces to zero against
    # a Groebner basis of the equivariant ideal itself
    from tworow.groebner import buchberger, normal_form

    for n, k in ((2, 1), (3, 1), (4, 2)):
        ctx = SpringerContext(n, k)
        gb = buchberger(list(equivariant_ideal(ctx).generators))
        for text in ("x1^2*x2", "x1*x2 + 3*t*x1", f"x{n}^3"):
            p = poly(text, n)
            rebuilt = basis_combination(straighten_by_rewrite(p, ctx), ctx)
            assert not normal_form(p - rebuilt, gb)


def test_straighten_rejects_wrong_ring():
    ctx = SpringerContext(3, 1)
    with pytest.raises(ValueError):
        straighten_by_solve(MPoly.variable(3, 0), ctx)
    with pytest.raises(ValueError):
        straighten_by_rewrite(MPoly.variable(5, 0), ctx)


def test_rewrite_cancellation_coefficient_is_factorial():
    # the monomial cancelled through the j-th power of the linear relation
    # carries coefficient j!, not 1; spot-check j = 2 via x2 x3 for n = 4,
    # whose filling (top (1, 4), bottom (2, 3)) has its first bad column at 2
    from tworow.springer import _rewrite_expansion

    ctx = SpringerContext(4, 2)
    target = (0, 1, 1, 0, 0)
    # independent reconstruction of the cancelling combination
    d = (poly("x2 + x3 + x4 - 10*t", 4) ** 2) - (poly("x1", 4) ** 2)
    assert d.coefficient(target) == factorial(2)
    # the implementation must divide by that computed coefficient
    expansion = _rewrite_expansion(ctx, (0, 1, 1, 0))
    assert expansion.coefficient(target) == 0
    assert MPoly.from_monomial(target) - expansion == d * Fraction(1, 2)


def test_sampled_monomials_are_deterministic():
    ctx = SpringerContext(3, 1)
    first = sample_monomials(ctx)
    second = sample_monomials(ctx)
    assert first == second
    assert len(first) == 50
    assert all(sum(m) <= 5 for m in first)
    assert squarefree_monomials(ctx, 2)[0] == (0, 0, 0, 0)


# -- kernel versus ideal ------------------------------------------------------


def test_degree_zero_trivial():
    comparison = kernel_equals_ideal_in_degree(SpringerContext(3, 1), 0)
    assert comparison.kernel_dim == 0
    assert comparison.ideal_dim == 0
    assert comparison.equal


def test_degree_one_n2():
    comparison = kernel_equals_ideal_in_degree(SpringerContext(2, 1), 1)
    assert comparison.kernel_dim == 1
    assert comparison.ideal_dim == 1


def test_kernel_matches_ideal_n4():
    comparisons = kernel_ideal_comparisons(SpringerContext(4, 2), 6)
    assert all(c.equal for c in comparisons)


def test_kernel_dims_match_free_module_structure():
    # once every basis tableau fits in the degree, the quotient slice has
    # dimension C(n, k); below that only bottoms of size <= d contribute
    ctx = SpringerContext(4, 2)
    from math import comb as binom

    for comparison in kernel_ideal_comparisons(ctx, 5):
        d = comparison.degree
        space = binom(d + 4, 4)
        quotient = sum(
            1 for tab in standard_monomial_basis(ctx) if tab.ell <= d
        )
        assert space - comparison.kernel_dim == quotient


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        kernel_equals_ideal_in_degree(SpringerContext(2, 1), -1)


# -- ordinary cohomology ------------------------------------------------------


def test_ordinary_check_examples():
    report = ordinary_presentation_check(SpringerContext(3, 1))
    assert report.dimension == 3 and report.ok
    report = ordinary_presentation_check(SpringerContext(4, 2))
    assert report.dimension == 6 and report.ok
    report = ordinary_presentation_check(SpringerContext(5, 0))
    assert report.dimension == 1 and report.ok
