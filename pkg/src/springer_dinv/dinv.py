"""Weighted d-inversion statistics on one-box-per-row skew tableaux.

All statistics are parametrized by ``StatCtx(n, m, b)`` with ``m >= 0``,
``1 <= b < n`` and ``gcd(n, b) == 1``.  Boxes are totally ordered by
``r_value``; a pair ``(x, y)`` is only ever considered with ``x >_d y``,
i.e. ``r(x) > r(y)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Sequence

from .tableaux import (
    Box,
    Partition,
    Sign,
    Tableau,
    TableauError,
    contains,
    partition,
    size,
    skew_shape,
    subpartitions,
)


@dataclass(frozen=True)
class StatCtx:
    n: int
    m: int
    b: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2 (got {self.n}); 1 <= b < n is impossible otherwise")
        if self.m < 0:
            raise ValueError(f"m must be nonnegative (got {self.m})")
        if not 1 <= self.b < self.n:
            raise ValueError(f"b must satisfy 1 <= b < n (got b={self.b}, n={self.n})")
        if gcd(self.n, self.b) != 1:
            raise ValueError(f"gcd(n, b) must be 1 (got gcd({self.n}, {self.b}) = {gcd(self.n, self.b)})")

    @property
    def slope(self) -> int:
        """mn + b."""
        return self.m * self.n + self.b

    def dimension_constant(self) -> int:
        """m*C(n,2) + (n-1)(b-1)/2; always an integer since gcd(n, b) = 1."""
        num = (self.n - 1) * (self.b - 1)
        assert num % 2 == 0
        return self.m * comb(self.n, 2) + num // 2


def delta(ctx: StatCtx) -> tuple[int, ...]:
    """(m(n-1)+b-1, ..., m+b-1, b-1), all n entries kept."""
    return tuple(ctx.m * (ctx.n - 1 - k) + ctx.b - 1 for k in range(ctx.n))


def delta_prime(ctx: StatCtx) -> tuple[int, ...]:
    """Entry l is the quotient l' in l*b = l'*n + l'' with 1 <= l'' <= n."""
    return tuple((l * ctx.b - 1) // ctx.n for l in range(1, ctx.n + 1))


def max_shape(ctx: StatCtx) -> Partition:
    """delta - delta', the largest admissible inner shape."""
    return partition([a - c for a, c in zip(delta(ctx), delta_prime(ctx))])


def admissible_shapes(ctx: StatCtx) -> list[Partition]:
    return subpartitions(max_shape(ctx))


def check_admissible(lam: Sequence[int], ctx: StatCtx) -> Partition:
    lam = partition(lam)
    if not contains(max_shape(ctx), lam):
        raise TableauError(f"partition {lam} is not contained in delta - delta' = {max_shape(ctx)}")
    return lam


def corank(lam: Sequence[int], ctx: StatCtx) -> int:
    return size(max_shape(ctx)) - size(lam)


def r_value(x: Box, ctx: StatCtx) -> int:
    i, j = x
    s = ctx.slope
    return s * ctx.n - s * (i + 1) - ctx.n * (j + 1)


def d_greater(x: Box, y: Box, ctx: StatCtx) -> bool:
    return r_value(x, ctx) > r_value(y, ctx)


@dataclass(frozen=True)
class BoxPairData:
    d: int
    l: int
    in_A: bool
    in_B: bool


def _residue(x: Box, y: Box, ctx: StatCtx) -> tuple[int, int]:
    """(l', l'') with (i'-i)b = l'n + l'', 1 <= l'' <= n-1."""
    (i, _), (ip, _) = x, y
    if i == ip:
        raise ValueError(f"boxes {x} and {y} share a row")
    q, rem = divmod((ip - i) * ctx.b, ctx.n)
    # rem == 0 cannot happen: gcd(n, b) = 1 and 0 < |i'-i| < n
    return q, rem


def d_of_pair(x: Box, y: Box, ctx: StatCtx) -> int:
    """d_m(y) - d_m(x) + l', defined for any two boxes in distinct rows."""
    lp, _ = _residue(x, y, ctx)
    (i, j), (ip, jp) = x, y
    return ctx.m * (ip - i) + (jp - j) + lp


def l_of_pair(x: Box, y: Box, ctx: StatCtx) -> int:
    return _residue(x, y, ctx)[1]


def pair_data(x: Box, y: Box, ctx: StatCtx) -> BoxPairData:
    if x == y:
        raise ValueError("pair_data needs two distinct boxes")
    if not d_greater(x, y, ctx):
        raise ValueError(f"pair_data expects x >_d y; got r({x}) <= r({y})")
    d = d_of_pair(x, y, ctx)
    l = l_of_pair(x, y, ctx)
    l_rev = l_of_pair(y, x, ctx)
    below = x[0] > y[0]
    return BoxPairData(
        d=d,
        l=l,
        in_A=below and l < ctx.b and l_rev >= ctx.b,
        in_B=below and l >= ctx.b and l_rev < ctx.b,
    )


def m_weight(pd: BoxPairData, ctx: StatCtx) -> int:
    if pd.l < ctx.b:
        return max(0, ctx.m + 1 - pd.d)
    return max(0, ctx.m - pd.d)


def n_weight(pd: BoxPairData, ctx: StatCtx) -> int:
    return max(0, m_weight(pd, ctx) - 1)


def reduced_condition(pd: BoxPairData, ctx: StatCtx) -> bool:
    top = ctx.m if pd.l < ctx.b else ctx.m - 1
    return 0 <= pd.d <= top


@dataclass(frozen=True)
class PairTerm:
    """Precomputed contribution of the row pair (hi, lo) with box(hi) >_d box(lo)."""

    hi: int
    lo: int
    data: BoxPairData
    ascent_weight: int  # rule applied when the entries ascend along >_d
    descent_weight: int
    reduced: bool


@lru_cache(maxsize=4096)
def pair_terms(inner: Partition, ctx: StatCtx) -> tuple[PairTerm, ...]:
    shape = skew_shape(inner, ctx.n)
    boxes = shape.boxes
    out = []
    for a, x in enumerate(boxes):
        for c, y in enumerate(boxes):
            if a == c or not d_greater(x, y, ctx):
                continue
            pd = pair_data(x, y, ctx)
            corr = -1 if pd.in_A else (1 if pd.in_B else 0)
            out.append(PairTerm(a, c, pd, m_weight(pd, ctx) + corr, n_weight(pd, ctx) + corr,
                                reduced_condition(pd, ctx)))
    return tuple(out)


def _ascends(sign: Sign, tx: int, ty: int) -> bool:
    # rule (1): T(x) < T(y) for positive letters, T(x) <= T(y) for negative ones
    return tx < ty if sign is Sign.POSITIVE else tx <= ty


def _terms_for(T: Tableau, ctx: StatCtx, check: bool) -> tuple[PairTerm, ...]:
    if T.n != ctx.n:
        raise TableauError(f"tableau has n={T.n} but context has n={ctx.n}")
    if check:
        check_admissible(T.shape.inner, ctx)
    return pair_terms(T.shape.inner, ctx)


def dinv_of_labels(inner: Partition, labels: Sequence[int], sign: Sign, ctx: StatCtx) -> int:
    """dinv of a row-indexed labelling; no semistandardness check."""
    total = 0
    for pt in pair_terms(inner, ctx):
        if _ascends(sign, labels[pt.hi], labels[pt.lo]):
            total += pt.ascent_weight
        else:
            total += pt.descent_weight
    return total


def dinv(T: Tableau, ctx: StatCtx) -> int:
    _terms_for(T, ctx, True)
    return dinv_of_labels(T.shape.inner, T.labels, T.sign, ctx)


def dinv_reduced(T: Tableau, ctx: StatCtx) -> int:
    terms = _terms_for(T, ctx, True)
    return sum(1 for pt in terms if pt.reduced and _ascends(T.sign, T.labels[pt.hi], T.labels[pt.lo]))


def dinv_dbl(T: Tableau, ctx: StatCtx) -> int:
    terms = _terms_for(T, ctx, True)
    return sum(1 for pt in terms if pt.reduced and not _ascends(T.sign, T.labels[pt.hi], T.labels[pt.lo]))


def dinv_triple(T: Tableau, ctx: StatCtx) -> tuple[int, int, int]:
    return dinv(T, ctx), dinv_reduced(T, ctx), dinv_dbl(T, ctx)


def e_of_lambda(lam: Sequence[int], ctx: StatCtx) -> int:
    """dinv of the (virtual) labelling that strictly decreases along >_d."""
    lam = check_admissible(lam, ctx)
    return sum(pt.descent_weight for pt in pair_terms(lam, ctx))


def m_of_lambda(lam: Sequence[int], ctx: StatCtx) -> int:
    """Maximal dinv; attained by the constant negative filling."""
    lam = check_admissible(lam, ctx)
    return sum(pt.ascent_weight for pt in pair_terms(lam, ctx))


# -- standardization ---------------------------------------------------------


def standardize(T: Tableau, ctx: StatCtx) -> Tableau:
    """Break ties among equal entries by r-value: increasing for positive, decreasing for negative."""
    boxes = T.shape.boxes
    flip = 1 if T.sign is Sign.POSITIVE else -1
    order = sorted(range(T.n), key=lambda i: (T.labels[i], flip * r_value(boxes[i], ctx)))
    labels = [0] * T.n
    for rank, i in enumerate(order, start=1):
        labels[i] = rank
    return Tableau(T.shape, T.sign, tuple(labels))


def d_descents(S: Tableau, ctx: StatCtx) -> frozenset[int]:
    if not S.is_standard():
        raise TableauError("d_descents needs a standard tableau")
    where = {a: S.shape.boxes[i] for i, a in enumerate(S.labels)}
    return frozenset(a for a in range(1, S.n) if d_greater(where[a], where[a + 1], ctx))
