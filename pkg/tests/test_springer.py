import itertools

import pytest

import oracles
from springer_dinv.affine_weyl import PElement, a_value, p_to_coweight
from springer_dinv.dinv import (
    StatCtx,
    admissible_shapes,
    corank,
    d_of_pair,
    dinv_dbl,
    m_of_lambda,
    max_shape,
)
from springer_dinv.poly import Q, LaurentPoly
from springer_dinv.springer import (
    EmptyCellError,
    Root,
    alpha_of_pair,
    cell_dim_root_count,
    cell_nonempty,
    cell_record,
    cell_records,
    frobenius_cell,
    graded_frobenius,
    invariant_dims,
    min_coset_reps,
    nonempty_cells,
    nonempty_cells_by_search,
    p_to_partition,
    parahoric_cells,
    parahoric_dim_root_count,
    partition_to_p,
    verify_cell_frobenius,
    verify_dimension_identity,
    verify_graded_frobenius,
    verify_parahoric_dims,
)
from springer_dinv.symfunc import SymFunc, dinv_series, shifted_dual
from springer_dinv.tableaux import partitions, skew_shape

N2 = StatCtx(2, 1, 1)
SWEEP = [StatCtx(*t) for t in [(2, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 1), (4, 1, 1), (4, 1, 3), (5, 0, 3), (5, 1, 1)]]


def test_roots():
    r = Root(1, 3)
    assert r.height == 2 and r.positive
    assert (-r) == Root(3, 1) and not (-r).positive
    assert r.pair((2, 0, -2)) == 4


def test_cell_nonempty_examples():
    assert cell_nonempty(PElement(2, (0,)), N2)
    assert not cell_nonempty(PElement(2, (2,)), N2)
    assert cell_nonempty(PElement(5, (0, 0, 0, 1)), StatCtx(5, 0, 3))
    with pytest.raises(EmptyCellError):
        p_to_partition(PElement(2, (2,)), N2)


def test_partition_correspondence_examples():
    assert p_to_partition(PElement(2, (0,)), N2) == (1,)
    assert p_to_partition(PElement(2, (1,)), N2) == ()
    ctx = StatCtx(5, 0, 3)
    assert p_to_partition(PElement(5, (0, 0, 0, 1)), ctx) == (2, 1)
    top = partition_to_p(max_shape(ctx), ctx)
    assert a_value(top) == 0 and top == PElement.zero(5)


@pytest.mark.parametrize("ctx", SWEEP, ids=str)
def test_cells_biject_with_shapes(ctx):
    cells = nonempty_cells(ctx)
    assert sorted(cells, key=lambda p: p.a) == sorted(nonempty_cells_by_search(ctx), key=lambda p: p.a)
    assert [p_to_partition(p, ctx) for p in cells] == admissible_shapes(ctx)
    for p in cells:
        lam = p_to_partition(p, ctx)
        assert partition_to_p(lam, ctx) == p
        assert a_value(p) == corank(lam, ctx)


def test_alpha_of_pair_small():
    p = PElement(2, (0,))
    assert alpha_of_pair((0, 1), (1, 0), p, N2) == Root(1, 2)
    assert alpha_of_pair((1, 0), (0, 1), p, N2) == -Root(1, 2)


@pytest.mark.parametrize("ctx", SWEEP, ids=str)
def test_pairing_of_box_roots(ctx):
    """<lambda(p), alpha(x,y)> is d(x,y) on positive roots and d(x,y)+1 on negative ones."""
    for p in nonempty_cells(ctx):
        x = p_to_coweight(p)
        boxes = skew_shape(p_to_partition(p, ctx), ctx.n).boxes
        for b1, b2 in itertools.permutations(boxes, 2):
            alpha = alpha_of_pair(b1, b2, p, ctx)
            assert alpha.pair(x) == d_of_pair(b1, b2, ctx) + (0 if alpha.positive else 1)


def test_cell_dimension_examples():
    assert cell_dim_root_count(PElement(2, (0,)), N2) == 0
    assert cell_dim_root_count(PElement(2, (1,)), N2) == 1
    for ctx in SWEEP:
        top = max_shape(ctx)
        assert cell_dim_root_count(partition_to_p(top, ctx), ctx) == ctx.dimension_constant() - m_of_lambda(top, ctx)


@pytest.mark.parametrize("ctx", SWEEP, ids=str)
def test_dimension_identity(ctx):
    for p in nonempty_cells(ctx):
        check = verify_dimension_identity(p, ctx)
        assert check.passed, check.line()


def test_dimension_constant_n5():
    ctx = StatCtx(5, 0, 3)
    assert ctx.dimension_constant() == 4
    assert {verify_dimension_identity(p, ctx).rhs for p in nonempty_cells(ctx)} == {4}


def test_parahoric_examples():
    p = PElement(2, (0,))
    cells = parahoric_cells(p, (1, 1), N2)
    assert sorted(c.dim for c in cells) == [0, 1]
    cells = parahoric_cells(p, (2,), N2)
    assert [c.dim for c in cells] == [0]
    for mu in [(1, 1), (2,)]:
        for c in parahoric_cells(p, mu, N2):
            assert parahoric_dim_root_count(p, c.coset, mu, N2) == c.dim


def test_full_parabolic_gives_cell_dimension():
    for ctx in SWEEP:
        for p in nonempty_cells(ctx):
            (cell,) = parahoric_cells(p, (ctx.n,), ctx)
            assert cell.dim == cell_dim_root_count(p, ctx)
            assert dinv_dbl(cell.tableau, ctx) == 0


def test_min_coset_reps_counts():
    from math import factorial, prod
    for mu in [(2, 1), (1, 2), (2, 2), (3, 1, 1), (1, 1, 1, 1)]:
        reps = list(min_coset_reps(mu))
        assert len(reps) == factorial(sum(mu)) // prod(factorial(k) for k in mu)
        assert len(set(reps)) == len(reps)


@pytest.mark.parametrize("ctx", [c for c in SWEEP if c.n <= 4] + [StatCtx(5, 0, 3)], ids=str)
def test_coset_fillings_are_the_negative_tableaux(ctx):
    """Cosets that give valid fillings biject onto negative tableaux of content mu."""
    for p in nonempty_cells(ctx):
        lam = p_to_partition(p, ctx)
        for mu in partitions(ctx.n):
            got = sorted(c.tableau.labels for c in parahoric_cells(p, mu, ctx))
            content = tuple(mu) + (0,) * (ctx.n - len(mu))
            expected = sorted(l for l in oracles.brute_tableaux(lam, ctx.n, "-", len(mu))
                              if tuple(l.count(k) for k in range(1, ctx.n + 1)) == content)
            assert got == expected


def test_standard_parahoric_count_is_linear_extensions_not_factorial():
    ctx = StatCtx(4, 1, 1)
    p = partition_to_p((), ctx)
    cells = parahoric_cells(p, (1,) * 4, ctx)
    bijective = [l for l in oracles.brute_tableaux((), 4, "-", 4) if len(set(l)) == 4]
    assert len(cells) == len(bijective) == 1


@pytest.mark.parametrize("ctx", [c for c in SWEEP if c.n <= 5], ids=str)
def test_parahoric_dimension_identity(ctx):
    for p in nonempty_cells(ctx):
        for mu in partitions(ctx.n):
            for check in verify_parahoric_dims(p, ctx, mu):
                assert check.passed, check.line()


def test_frobenius_cell_n2():
    s = lambda *lam, c=1: SymFunc.basis_element("schur", lam, c)
    assert frobenius_cell(PElement(2, (0,)), N2) == s(2) + s(1, 1, c=Q)
    assert frobenius_cell(PElement(2, (1,)), N2) == s(2, c=Q)
    assert invariant_dims(PElement(2, (1,)), N2, (2,)) == Q


def test_invariants_do_not_depend_on_block_order():
    for ctx in [StatCtx(3, 1, 1), StatCtx(4, 1, 3)]:
        for p in nonempty_cells(ctx):
            for mu in partitions(ctx.n):
                base = invariant_dims(p, ctx, mu)
                for comp in set(itertools.permutations(mu)):
                    assert invariant_dims(p, ctx, comp) == base


@pytest.mark.parametrize("ctx", SWEEP, ids=str)
def test_cell_frobenius(ctx):
    for p in nonempty_cells(ctx):
        check = verify_cell_frobenius(p, ctx)
        assert check.passed, check.line()


@pytest.mark.parametrize("ctx", SWEEP, ids=str)
def test_graded_frobenius(ctx):
    check = verify_graded_frobenius(ctx)
    assert check.passed, check.line()
    # the corank-0 layer is the single top cell
    lhs = graded_frobenius(ctx)
    layer0 = lhs.map_coeffs(lambda c: LaurentPoly({k: v for k, v in c.items() if k[1] == 0}))
    top = max_shape(ctx)
    assert layer0 == shifted_dual(dinv_series(top, ctx), ctx)


def test_cell_records():
    rows = cell_records(N2)
    assert [(r.lam, r.dim, r.corank) for r in rows] == [((1,), 0, 0), ((), 1, 1)]
    assert cell_record(PElement(2, (0,)), N2).to_json() == {"p": [0], "lambda": [1], "dim": 0, "corank": 0,
                                                           "m_lambda": 1}
    assert len(cell_records(StatCtx(5, 0, 3))) == 7


def test_strict_and_weak_lower_bounds_give_the_same_window():
    from springer_dinv.springer import _k_window, roots

    for ctx in SWEEP:
        for alpha in roots(ctx.n):
            strict = _k_window(alpha.height, ctx, strict_low=True)
            weak = _k_window(alpha.height, ctx, strict_low=False)
            assert list(strict) == list(weak)
            for k in strict:
                assert 0 < alpha.height + k * ctx.n < ctx.slope
