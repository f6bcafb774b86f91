import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from worked import DINV4, DINV4_CTX
from springer_dinv.dinv import StatCtx, admissible_shapes, d_descents, r_value, standardize
from springer_dinv.tableaux import (
    Sign,
    Tableau,
    TableauError,
    conjugate,
    destandardize,
    enumerate_tableaux,
    partition,
    size,
    skew_shape,
    standard_tableaux,
    subpartitions,
)


def test_partition_normalizes_and_conjugates():
    lam = partition([3, 1, 0, 0])
    assert lam == (3, 1)
    assert size(lam) == 4
    assert conjugate(lam) == (2, 1, 1)
    assert conjugate(conjugate(lam)) == lam
    with pytest.raises(ValueError):
        partition([1, 2])


@pytest.mark.parametrize("lam,n,expected", [
    ((3, 1), 5, {(0, 3), (1, 1), (2, 0), (3, 0), (4, 0)}),
    ((), 2, {(0, 0), (1, 0)}),
    ((2, 1), 5, {(0, 2), (1, 1), (2, 0), (3, 0), (4, 0)}),
])
def test_skew_shape_boxes(lam, n, expected):
    assert set(skew_shape(lam, n).boxes) == expected


def test_skew_shape_rejects_too_many_parts():
    with pytest.raises(TableauError):
        skew_shape((1, 1, 1), 2)


def test_enumeration_small_examples():
    col = skew_shape((), 2)
    found = list(enumerate_tableaux(col, "+", content=(1, 1)))
    assert [T.labels for T in found] == [(1, 2)]
    assert [T.labels for T in enumerate_tableaux(skew_shape((1,), 2), "-", content=(2, 0))] == [(1, 1)]
    assert len(list(enumerate_tableaux(skew_shape((1,), 2), "+", content=(1, 1)))) == 2


def test_column_rules():
    col = skew_shape((), 2)
    with pytest.raises(TableauError, match="column"):
        Tableau(col, Sign.POSITIVE, (1, 1))
    Tableau(col, Sign.NEGATIVE, (1, 1))
    with pytest.raises(TableauError):
        Tableau(col, Sign.NEGATIVE, (2, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("sign", ["+", "-"])
def test_enumeration_matches_brute_force(n, sign):
    ctx = StatCtx(n, 1, 1)
    for lam in admissible_shapes(ctx):
        got = [T.labels for T in enumerate_tableaux(skew_shape(lam, n), sign, max_label=n)]
        assert got == sorted(got), "enumeration order must be lexicographic"
        assert got == oracles.brute_tableaux(lam, n, sign, n)


def test_enumeration_by_content_partitions_max_label_enumeration():
    n = 4
    shape = skew_shape((2, 1), n)
    everything = {T.labels for T in enumerate_tableaux(shape, "+", max_label=n)}
    by_content = set()
    for content in itertools.product(range(n + 1), repeat=n):
        if sum(content) == n:
            for T in enumerate_tableaux(shape, "+", content=content):
                assert T.content(n) == content
                by_content.add(T.labels)
    assert by_content == everything


def test_json_round_trip_and_validation():
    T = Tableau.from_json(DINV4)
    assert T.to_json() == DINV4
    bad = dict(DINV4, entries=[[0, 2, 3]] + DINV4["entries"][1:])
    with pytest.raises(TableauError, match="not in the shape"):
        Tableau.from_json(bad)
    short = dict(DINV4, entries=DINV4["entries"][:-1])
    with pytest.raises(TableauError):
        Tableau.from_json(short)


# -- standardization ----------------------------------------------------------


def test_standardize_examples():
    ctx = StatCtx(2, 1, 1)
    S = standardize(Tableau(skew_shape((1,), 2), Sign.NEGATIVE, (1, 1)), ctx)
    assert S.labels == (1, 2) and S.sign is Sign.NEGATIVE
    assert d_descents(S, ctx) == {1}
    col = Tableau(skew_shape((), 2), Sign.POSITIVE, (1, 2))
    assert standardize(col, ctx) == col


def test_r_values_of_the_column():
    ctx = StatCtx(2, 1, 1)
    assert r_value((0, 0), ctx) == 1
    assert r_value((1, 0), ctx) == -2
    big = StatCtx(5, 2, 3)
    assert r_value((big.n - 1, 0), big) == -big.n
    col = Tableau(skew_shape((), 2), Sign.POSITIVE, (1, 2))
    assert d_descents(col, ctx) == {1}


def test_descents_by_brute_force_order():
    ctx = StatCtx(*DINV4_CTX)
    S = Tableau.from_json(DINV4)
    where = {a: box for box, a in S.entries.items()}
    expected = {a for a in range(1, 5) if r_value(where[a], ctx) > r_value(where[a + 1], ctx)}
    assert d_descents(S, ctx) == expected == {1, 2, 3, 4}


def _block_condition(S, values, ctx):
    """Equal values occupy consecutive labels, increasing in r (positive) or decreasing (negative)."""
    where = {a: box for box, a in S.entries.items()}
    for a in range(1, S.n):
        if values[a - 1] == values[a]:
            ra, rb = r_value(where[a], ctx), r_value(where[a + 1], ctx)
            if (S.sign is Sign.POSITIVE) != (ra < rb):
                return False
    return True


@pytest.mark.parametrize("ctx", [StatCtx(4, 1, 1), StatCtx(3, 1, 2), StatCtx(5, 0, 3)], ids=str)
@pytest.mark.parametrize("sign", ["+", "-"])
def test_standardize_round_trip(ctx, sign):
    for lam in admissible_shapes(ctx):
        for T in enumerate_tableaux(skew_shape(lam, ctx.n), sign, max_label=ctx.n):
            S = standardize(T, ctx)
            assert S.is_standard() and S.sign == T.sign
            values = sorted(T.labels)
            assert _block_condition(S, values, ctx)
            assert destandardize(S, values) == T
            assert standardize(S, ctx) == S


def test_standard_tableaux_are_the_same_set_for_both_signs():
    shape = skew_shape((2, 1), 4)
    pos = {T.labels for T in standard_tableaux(shape, "+")}
    neg = {T.labels for T in standard_tableaux(shape, "-")}
    assert pos == neg
    assert len(pos) < 24  # linear extensions, not all of S_4


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(1, n), min_size=n, max_size=n), st.sampled_from(["+", "-"]))))
def test_content_preserved_by_standardization(data):
    n, labels, sign = data
    ctx = StatCtx(n, 1, 1)
    shapes = subpartitions(tuple(range(n - 1, -1, -1)))
    lam = shapes[sum(labels) % len(shapes)]
    if not oracles.column_ok(oracles.boxes(lam, n), labels, sign):
        return
    T = Tableau(skew_shape(lam, n), Sign.parse(sign), tuple(labels))
    S = standardize(T, ctx)
    assert destandardize(S, sorted(labels)).content(n) == T.content(n)
