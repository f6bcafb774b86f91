"""Cells of the affine Springer fiber: which Iwahori orbits meet it, their
dimensions by root counting, the parahoric refinement, and the resulting
Frobenius series, plus verifiers that compare these against the tableau side.

Root counting never uses rational coweights: for a root e_p - e_q the height
is q - p, and the parabolic tie-break is an integer sign.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .affine_weyl import (
    PElement,
    Perm,
    a_value,
    all_p_elements,
    p_to_coweight,
    perm_inverse,
)
from .dinv import (
    StatCtx,
    admissible_shapes,
    check_admissible,
    delta,
    dinv_dbl,
    m_of_lambda,
    max_shape,
)
from .poly import ZERO, LaurentPoly
from .symfunc import SymFunc, bigraded_dinv_series, dinv_series, frobenius_from_invariants, shifted_dual
from .tableaux import Box, Partition, Sign, Tableau, TableauError, partition, partitions, size, skew_shape


class EmptyCellError(ValueError):
    """The orbit indexed by this tuple does not meet the fiber."""


@dataclass(frozen=True)
class Root:
    p: int
    q: int

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("a root needs p != q")

    @property
    def height(self) -> int:
        return self.q - self.p

    @property
    def positive(self) -> bool:
        return self.p < self.q

    def __neg__(self) -> "Root":
        return Root(self.q, self.p)

    def pair(self, x: Sequence[int]) -> int:
        return x[self.p - 1] - x[self.q - 1]


def roots(n: int) -> list[Root]:
    return [Root(p, q) for p in range(1, n + 1) for q in range(1, n + 1) if p != q]


def underline(l: int, n: int) -> int:
    """The representative of l mod n in 1..n."""
    return (l - 1) % n + 1


# -- the Grassmannian cells --------------------------------------------------


def cell_nonempty(p: PElement, ctx: StatCtx) -> bool:
    _check_n(p, ctx)
    return all(p(k) - p(k + ctx.b) <= ctx.m for k in range(1, ctx.n + 1))


def _check_n(p: PElement, ctx: StatCtx):
    if p.n != ctx.n:
        raise ValueError(f"element has n={p.n} but context has n={ctx.n}")


def p_to_partition(p: PElement, ctx: StatCtx) -> Partition:
    if not cell_nonempty(p, ctx):
        raise EmptyCellError(f"{p.a} indexes an empty cell for {ctx}")
    return partition([dl - p(l * ctx.b) for l, dl in enumerate(delta(ctx), start=1)])


def partition_to_p(lam: Sequence[int], ctx: StatCtx) -> PElement:
    lam = check_admissible(lam, ctx)
    n, b = ctx.n, ctx.b
    a = [0] * (n + 1)
    for l, dl in enumerate(delta(ctx), start=1):
        shift, r = divmod(l * b - 1, n)
        a[r + 1] = dl - (lam[l - 1] if l - 1 < len(lam) else 0) - shift
    assert a[n] == 0
    return PElement(n, tuple(a[1:n]))


def nonempty_cells(ctx: StatCtx) -> list[PElement]:
    """All nonempty-cell tuples, ordered like admissible_shapes (reverse-lex in lambda)."""
    return [partition_to_p(lam, ctx) for lam in admissible_shapes(ctx)]


def nonempty_cells_by_search(ctx: StatCtx) -> list[PElement]:
    """Direct search over tuples; entries are bounded by a_{lb} <= delta_l."""
    bound = delta(ctx)[0]
    return [p for p in all_p_elements(ctx.n, bound) if cell_nonempty(p, ctx)]


def box_index(x: Box, p: PElement, ctx: StatCtx) -> int:
    return underline(p.total + (x[0] + 1) * ctx.b, ctx.n)


def alpha_of_pair(x: Box, y: Box, p: PElement, ctx: StatCtx) -> Root:
    if x[0] == y[0]:
        raise ValueError("boxes must lie in distinct rows")
    return Root(box_index(x, p, ctx), box_index(y, p, ctx))


def _k_window(height: int, ctx: StatCtx, strict_low: bool) -> range:
    """k with 0 (<|<=) height + k n < mn + b."""
    n, top = ctx.n, ctx.slope
    lo = (-height) // n + 1 if strict_low else -(height // n)
    hi = -((height - top) // n)  # exclusive: smallest k with height + kn >= top
    return range(lo, hi)


def cell_dim_root_count(p: PElement, ctx: StatCtx) -> int:
    """#{(alpha, k) : 0 < <rho, alpha> + kn < mn+b and <-lambda, alpha> + k < 0}."""
    if not cell_nonempty(p, ctx):
        raise EmptyCellError(f"{p.a} indexes an empty cell for {ctx}")
    x = p_to_coweight(p)
    count = 0
    for alpha in roots(ctx.n):
        neg_pair = -alpha.pair(x)
        for k in _k_window(alpha.height, ctx, strict_low=True):
            if neg_pair + k < 0:
                count += 1
    return count


# -- parahoric refinement ----------------------------------------------------


def blocks(mu: Sequence[int]) -> list[range]:
    out, start = [], 1
    for part_ in mu:
        out.append(range(start, start + part_))
        start += part_
    return out


def block_label(mu: Sequence[int]) -> tuple[int, ...]:
    """r_mu as a tuple: entry j-1 is the block number (1-based) of j."""
    out = []
    for idx, blk in enumerate(blocks(mu), start=1):
        out.extend([idx] * len(blk))
    return tuple(out)


def min_coset_reps(mu: Sequence[int]) -> Iterator[Perm]:
    """Permutations increasing on each block of mu, one per coset of W/W_mu."""
    mu = tuple(mu)
    n = sum(mu)
    labels = [i for i, m in enumerate(mu, start=1) for _ in range(m)]
    seen = set()
    for word in itertools.permutations(labels):
        if word in seen:
            continue
        seen.add(word)
        # word[k-1] = block of w^-1(k); w sends block i onto the positions labelled i, in order
        w = []
        for i in range(1, len(mu) + 1):
            w.extend(k for k in range(1, n + 1) if word[k - 1] == i)
        yield tuple(w)


def coset_filling(w: Perm, p: PElement, mu: Sequence[int], ctx: StatCtx) -> tuple[int, ...]:
    """Row i gets r_mu(w^-1(underline(a + (i+1) b)))."""
    r_mu = block_label(mu)
    winv = perm_inverse(w)
    return tuple(r_mu[winv[underline(p.total + (i + 1) * ctx.b, ctx.n) - 1] - 1] for i in range(ctx.n))


@dataclass(frozen=True)
class ParahoricCell:
    coset: Perm
    tableau: Tableau
    dim: int

    def to_json(self) -> dict:
        return {"coset": list(self.coset), "tableau": self.tableau.to_json(), "dim": self.dim}


def parahoric_cells(p: PElement, mu: Sequence[int], ctx: StatCtx) -> list[ParahoricCell]:
    lam = p_to_partition(p, ctx)
    shape = skew_shape(lam, ctx.n)
    d = cell_dim_root_count(p, ctx)
    out = []
    for w in min_coset_reps(mu):
        labels = coset_filling(w, p, mu, ctx)
        try:
            T = Tableau(shape, Sign.NEGATIVE, labels)
        except TableauError:
            continue
        out.append(ParahoricCell(w, T, d + dinv_dbl(T, ctx)))
    return out


def parahoric_dim_root_count(p: PElement, w: Perm, mu: Sequence[int], ctx: StatCtx) -> int:
    """Root count with the infinitesimal parabolic shift resolved as a tie-break.

    A pair (alpha, k) with 0 <= <rho, alpha> + kn < mn+b counts when
    <-lambda, alpha> + k < 0, or when it is 0 and <rho_mu, w^-1 alpha> < 0.
    """
    if not cell_nonempty(p, ctx):
        raise EmptyCellError(f"{p.a} indexes an empty cell for {ctx}")
    x = p_to_coweight(p)
    r_mu = block_label(mu)
    winv = perm_inverse(w)
    count = 0
    for alpha in roots(ctx.n):
        neg_pair = -alpha.pair(x)
        # <rho_mu, e_P - e_Q> = r_mu(Q) - r_mu(P), applied to w^-1 alpha
        tie = r_mu[winv[alpha.q - 1] - 1] - r_mu[winv[alpha.p - 1] - 1]
        for k in _k_window(alpha.height, ctx, strict_low=False):
            v = neg_pair + k
            if v < 0 or (v == 0 and tie < 0):
                count += 1
    return count


def invariant_dims(p: PElement, ctx: StatCtx, mu: Sequence[int]) -> LaurentPoly:
    total = ZERO
    for cell in parahoric_cells(p, mu, ctx):
        total = total + LaurentPoly.monomial(cell.dim)
    return total


def frobenius_cell(p: PElement, ctx: StatCtx) -> SymFunc:
    """Graded Frobenius series of the preimage of the cell, from invariant dimensions."""
    dims = {mu: invariant_dims(p, ctx, mu) for mu in partitions(ctx.n)}
    return frobenius_from_invariants(dims)


@dataclass(frozen=True)
class CellRecord:
    p: PElement
    lam: Partition
    dim: int
    corank: int
    m_lambda: int

    def to_json(self) -> dict:
        return {"p": self.p.to_json(), "lambda": list(self.lam), "dim": self.dim,
                "corank": self.corank, "m_lambda": self.m_lambda}


def cell_record(p: PElement, ctx: StatCtx) -> CellRecord:
    lam = p_to_partition(p, ctx)
    return CellRecord(p, lam, cell_dim_root_count(p, ctx), a_value(p), m_of_lambda(lam, ctx))


def cell_records(ctx: StatCtx) -> list[CellRecord]:
    return [cell_record(p, ctx) for p in nonempty_cells(ctx)]


# -- verifiers ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    statement: str
    instance: str
    lhs: object
    rhs: object
    passed: bool

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, SymFunc):
                return v.to_json()
            if isinstance(v, LaurentPoly):
                return v.to_json()
            return v

        return {"statement": self.statement, "instance": self.instance,
                "lhs": enc(self.lhs), "rhs": enc(self.rhs), "pass": self.passed}

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.statement} [{self.instance}]: lhs={self.lhs} rhs={self.rhs}"


def _ctx_tag(ctx: StatCtx) -> str:
    return f"n={ctx.n},m={ctx.m},b={ctx.b}"


def verify_dimension_identity(p: PElement, ctx: StatCtx) -> Check:
    """Root-count dimension plus maximal dinv against the closed constant."""
    lam = p_to_partition(p, ctx)
    lhs = cell_dim_root_count(p, ctx) + m_of_lambda(lam, ctx)
    rhs = ctx.dimension_constant()
    return Check("dimension-identity", f"{_ctx_tag(ctx)},lambda={list(lam)}", lhs, rhs, lhs == rhs)


def verify_parahoric_dims(p: PElement, ctx: StatCtx, mu: Sequence[int]) -> list[Check]:
    lam = p_to_partition(p, ctx)
    out = []
    for cell in parahoric_cells(p, mu, ctx):
        rc = parahoric_dim_root_count(p, cell.coset, mu, ctx)
        out.append(Check("parahoric-dimension", f"{_ctx_tag(ctx)},lambda={list(lam)},mu={list(mu)},"
                         f"w={list(cell.coset)}", rc, cell.dim, rc == cell.dim))
    return out


def verify_cell_frobenius(p: PElement, ctx: StatCtx) -> Check:
    """Frobenius series of one cell's preimage against the shifted omega-dual dinv series."""
    lam = p_to_partition(p, ctx)
    lhs = frobenius_cell(p, ctx)
    rhs = shifted_dual(dinv_series(lam, ctx), ctx)
    return Check("cell-frobenius", f"{_ctx_tag(ctx)},lambda={list(lam)}", lhs, rhs, lhs == rhs)


def graded_frobenius(ctx: StatCtx, cells: Iterable[PElement] | None = None) -> SymFunc:
    total = SymFunc(ctx.n, "schur")
    for p in (nonempty_cells(ctx) if cells is None else cells):
        total = total + frobenius_cell(p, ctx).scale(LaurentPoly.monomial(0, a_value(p)))
    return total


def verify_graded_frobenius(ctx: StatCtx) -> Check:
    """t-graded sum over cells against the shifted omega-dual of the bigraded series."""
    lhs = graded_frobenius(ctx)
    rhs = shifted_dual(bigraded_dinv_series(ctx), ctx)
    return Check("graded-frobenius", _ctx_tag(ctx), lhs, rhs, lhs == rhs)


def verify_corank(p: PElement, ctx: StatCtx) -> Check:
    lam = p_to_partition(p, ctx)
    lhs, rhs = a_value(p), size(max_shape(ctx)) - size(lam)
    return Check("corank", f"{_ctx_tag(ctx)},lambda={list(lam)}", lhs, rhs, lhs == rhs)
