"""Named verification sweeps.  Each statement expands into independent work
units (one per admissible shape, or one per context); units may run in a
process pool and are merged back in submission order so reports are
reproducible.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import affine_weyl as aw
from .dinv import (
    StatCtx,
    admissible_shapes,
    dinv,
    dinv_dbl,
    dinv_reduced,
    e_of_lambda,
    m_of_lambda,
    standardize,
)
from .springer import (
    Check,
    partition_to_p,
    verify_cell_frobenius,
    verify_corank,
    verify_dimension_identity,
    verify_graded_frobenius,
    verify_parahoric_dims,
)
from .symfunc import (
    SymFunc,
    SymmetryError,
    dinv_series,
    negative_dinv_series,
    omega,
    quasisym_dinv_expansion,
)
from .tableaux import Partition, enumerate_tableaux, partitions, skew_shape

SWEEP = [(2, 1, 1), (3, 1, 1), (3, 1, 2), (3, 2, 1), (4, 1, 1), (4, 1, 3), (5, 0, 3), (5, 1, 1)]


def _tag(ctx: StatCtx, lam: Partition | None = None) -> str:
    base = f"n={ctx.n},m={ctx.m},b={ctx.b}"
    return base if lam is None else f"{base},lambda={list(lam)}"


# -- per-shape work units ----------------------------------------------------


def _dinv_identities(ctx: StatCtx, lam: Partition) -> list[Check]:
    e, mx = e_of_lambda(lam, ctx), m_of_lambda(lam, ctx)
    shape = skew_shape(lam, ctx.n)
    total = 0
    good = {"reduced-split": 0, "complement-sum": 0, "max-minus-dbl": 0, "standardization": 0}
    best = None
    for sign in ("+", "-"):
        for T in enumerate_tableaux(shape, sign, max_label=ctx.n):
            total += 1
            d, d1, d2 = dinv(T, ctx), dinv_reduced(T, ctx), dinv_dbl(T, ctx)
            good["reduced-split"] += d == e + d1
            good["complement-sum"] += mx - e == d1 + d2
            good["max-minus-dbl"] += d == mx - d2
            good["standardization"] += d == dinv(standardize(T, ctx), ctx)
            if sign == "+":
                best = d if best is None else max(best, d)
    checks = [Check(f"dinv-{k}", _tag(ctx, lam), v, total, v == total) for k, v in good.items()]
    checks.append(Check("dinv-max-attained", _tag(ctx, lam), best, mx, best == mx))
    return checks


def _symmetry(ctx: StatCtx, lam: Partition) -> list[Check]:
    try:
        dinv_series(lam, ctx)
        return [Check("symmetry", _tag(ctx, lam), "symmetric", "symmetric", True)]
    except SymmetryError as exc:
        return [Check("symmetry", _tag(ctx, lam), str(exc), "symmetric", False)]


def _positivity(ctx: StatCtx, lam: Partition) -> list[Check]:
    s = dinv_series(lam, ctx).to("schur")
    return [Check("schur-positivity", _tag(ctx, lam), s, "nonnegative", s.is_schur_positive())]


def _omega_duality(ctx: StatCtx, lam: Partition) -> list[Check]:
    D = dinv_series(lam, ctx)
    lhs, rhs = omega(D), negative_dinv_series(lam, ctx)
    qs = quasisym_dinv_expansion(lam, ctx)
    return [
        Check("omega-duality", _tag(ctx, lam), lhs, rhs, lhs == rhs),
        Check("quasisymmetric-expansion", _tag(ctx, lam), qs.to_symfunc() if qs.is_symmetric() else "not symmetric", D, qs == D),
    ]


def _dimension(ctx: StatCtx, lam: Partition) -> list[Check]:
    p = partition_to_p(lam, ctx)
    return [verify_dimension_identity(p, ctx), verify_corank(p, ctx)]


def _parahoric(ctx: StatCtx, lam: Partition) -> list[Check]:
    p = partition_to_p(lam, ctx)
    checks = [c for mu in partitions(ctx.n) for c in verify_parahoric_dims(p, ctx, mu)]
    bad = [c for c in checks if not c.passed]
    return bad or [Check("parahoric-dimension", _tag(ctx, lam), len(checks), len(checks), True)]


def _cell_frobenius(ctx: StatCtx, lam: Partition) -> list[Check]:
    return [verify_cell_frobenius(partition_to_p(lam, ctx), ctx)]


PER_SHAPE: dict[str, Callable[[StatCtx, Partition], list[Check]]] = {
    "dinv-identities": _dinv_identities,
    "symmetry": _symmetry,
    "schur-positivity": _positivity,
    "omega-duality": _omega_duality,
    "dimension-identity": _dimension,
    "parahoric-dimension": _parahoric,
    "cell-frobenius": _cell_frobenius,
}


# -- whole-context and lattice statements ------------------------------------


def _graded(ctx: StatCtx) -> list[Check]:
    return [verify_graded_frobenius(ctx)]


def lattice_checks(n: int, max_entry: int = 3) -> list[Check]:
    """Bijection round trips, simple-root pairings and reflection rules on P."""
    tag = f"n={n},a_i<={max_entry}"
    rt = pair = refl = 0
    total = 0
    for p in aw.all_p_elements(n, max_entry):
        total += 1
        x = aw.p_to_coweight(p)
        rt += aw.coweight_to_p(x) == p and sum(x) == 0
        a = p.total
        pair += all(
            aw.simple_root_pairing(x, l) == p(l - a) - p(l - a + 1) + (1 if l % n == 0 else 0)
            for l in range(1, n + 1)
        )
        refl += all(
            aw.p_to_coweight(aw.reflect(p, l)) == aw.AffineWeylElt.simple(n, a + l).act(x) for l in range(n)
        )
    return [
        Check("lattice-round-trip", tag, rt, total, rt == total),
        Check("lattice-pairing", tag, pair, total, pair == total),
        Check("lattice-reflections", tag, refl, total, refl == total),
    ]


def length_checks(n: int, max_entry: int = 2) -> list[Check]:
    """Closed-form minimal length against brute force over W, and unit descent steps."""
    tag = f"n={n},a_i<={max_entry}"
    perms = list(itertools.permutations(range(1, n + 1)))
    total = brute = steps = wmin = 0
    for p in aw.all_p_elements(n, max_entry):
        total += 1
        x = aw.p_to_coweight(p)
        lengths = {w: aw.length(aw.AffineWeylElt(x, w)) for w in perms}
        best = min(lengths.values())
        brute += best == aw.ell_f(x)
        wmin += lengths[aw.w_min(x)] == best and sum(v == best for v in lengths.values()) == 1
        ok, q = True, p
        while q.total:
            nxt = aw.reflect(q, aw.descent_index(q))
            ok &= aw.ell_f(aw.p_to_coweight(nxt)) == aw.ell_f(aw.p_to_coweight(q)) - 1
            q = nxt
        ok &= aw.ell_f(aw.p_to_coweight(aw.reflect(p, 0))) == aw.ell_f(x) + 1
        steps += ok
    return [
        Check("min-length-formula", tag, brute, total, brute == total),
        Check("min-length-representative", tag, wmin, total, wmin == total),
        Check("descent-unit-steps", tag, steps, total, steps == total),
    ]


def bruhat_checks(n: int = 3, max_total: int = 3) -> list[Check]:
    """Bruhat order on minimal representatives never decreases the level a."""
    tag = f"n={n},a<={max_total}"
    ps = list(aw.p_elements_up_to(n, max_total))
    words = {p: aw.reduced_word_wf(p) for p in ps}
    pairs = mono = 0
    for u, v in itertools.product(ps, repeat=2):
        if aw.bruhat_leq(words[u], words[v], n):
            pairs += 1
            mono += aw.a_value(u) <= aw.a_value(v)
    cyc = sum(aw.cyc_level(p) == aw.a_value(p) for p in ps)
    return [
        Check("bruhat-level-monotone", tag, mono, pairs, mono == pairs),
        Check("bruhat-cyc-level", tag, cyc, len(ps), cyc == len(ps)),
    ]


# -- dispatcher --------------------------------------------------------------

STATEMENTS = list(PER_SHAPE) + ["graded-frobenius", "lattice", "min-length", "bruhat-filtration"]

ALIASES = {
    "4.13": "cell-frobenius",
    "4.15": "graded-frobenius",
    "4.10": "dimension-identity",
    "4.12": "parahoric-dimension",
    "4.14": "schur-positivity",
    "3.4": "dinv-identities",
    "3.5": "dinv-identities",
    "3.6": "dinv-identities",
    "3.8": "symmetry",
    "3.9": "omega-duality",
    "4.1": "lattice",
    "4.3": "min-length",
    "4.5": "min-length",
    "4.6": "bruhat-filtration",
}


def resolve(statement: str) -> list[str]:
    if statement == "all":
        return list(STATEMENTS)
    name = ALIASES.get(statement, statement)
    if name not in STATEMENTS:
        raise ValueError(f"unknown statement {statement!r}; choose from {', '.join(STATEMENTS + ['all'])}")
    return [name]


def _run_unit(unit):
    kind, name, args = unit
    if kind == "shape":
        return PER_SHAPE[name](*args)
    if name == "graded-frobenius":
        return _graded(*args)
    if name == "lattice":
        return lattice_checks(*args)
    if name == "min-length":
        return length_checks(*args)
    if name == "bruhat-filtration":
        return bruhat_checks(*args)
    raise ValueError(name)


def plan(statement: str, contexts: Sequence[StatCtx], max_entry: int | None = None) -> list[tuple]:
    units = []
    for name in resolve(statement):
        if name in PER_SHAPE:
            units += [("shape", name, (ctx, lam)) for ctx in contexts for lam in admissible_shapes(ctx)]
        elif name == "graded-frobenius":
            units += [("ctx", name, (ctx,)) for ctx in contexts]
        else:
            ns = sorted({ctx.n for ctx in contexts})
            if name == "lattice":
                units += [("ctx", name, (n, 3 if max_entry is None else max_entry)) for n in ns]
            elif name == "min-length":
                units += [("ctx", name, (n, 2 if max_entry is None else max_entry)) for n in ns]
            else:
                units += [("ctx", name, (3, 3 if max_entry is None else max_entry))]
    return units


def run(statement: str, contexts: Sequence[StatCtx], jobs: int | None = 1,
        max_entry: int | None = None) -> list[Check]:
    units = plan(statement, contexts, max_entry)
    jobs = os.cpu_count() or 1 if jobs is None else jobs
    if jobs <= 1 or len(units) <= 1:
        results = map(_run_unit, units)
        return [c for batch in results for c in batch]
    with ProcessPoolExecutor(max_workers=min(jobs, len(units))) as pool:
        return [c for batch in pool.map(_run_unit, units) for c in batch]


def sweep_contexts() -> list[StatCtx]:
    return [StatCtx(*t) for t in SWEEP]


__all__ = ["Check", "SymFunc", "SWEEP", "STATEMENTS", "ALIASES", "run", "plan", "resolve",
           "sweep_contexts", "lattice_checks", "length_checks", "bruhat_checks"]
