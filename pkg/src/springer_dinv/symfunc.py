"""Exact degree-n symmetric functions with Laurent-polynomial coefficients.

Only partitions of n index basis elements (n variables suffice in degree n).
The Schur basis is the hub for basis changes; every conversion goes through
the Kostka matrix, which is unitriangular for dominance order and is solved
by substitution along reverse-lexicographic order.
"""
from __future__ import annotations

import csv
import io
import itertools
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .dinv import StatCtx, admissible_shapes, check_admissible, corank, d_descents, dinv, dinv_of_labels
from .poly import ONE, ZERO, LaurentPoly
from .tableaux import (
    Partition,
    Sign,
    conjugate,
    enumerate_tableaux,
    partition,
    partitions,
    size,
    skew_shape,
    standard_tableaux,
    straight_ssyt,
)

BASES = ("monomial", "schur", "homogeneous", "elementary")
_PREFIX = {"monomial": "m", "schur": "s", "homogeneous": "h", "elementary": "e"}


class SymmetryError(ArithmeticError):
    """A quantity that must be symmetric is not."""


# -- Kostka numbers ----------------------------------------------------------


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    lam = partition(lam)
    mu = tuple(mu)
    if size(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    return _kostka(lam, partition(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    return sum(1 for _ in straight_ssyt(lam, mu))


_kostka_lock = threading.Lock()
_kostka_tables: dict[int, dict[tuple[Partition, Partition], int]] = {}


def kostka_matrix(n: int) -> dict[tuple[Partition, Partition], int]:
    """Nonzero K[lam, mu] for lam, mu partitions of n; built once per n."""
    table = _kostka_tables.get(n)
    if table is None:
        with _kostka_lock:
            table = _kostka_tables.get(n)
            if table is None:
                table = {}
                for lam in partitions(n):
                    for mu in partitions(n):
                        k = _kostka(lam, mu)
                        if k:
                            table[lam, mu] = k
                _kostka_tables[n] = table
    return table


# -- the symmetric function type ---------------------------------------------


def _clean(coeffs: Mapping[Partition, LaurentPoly]) -> dict[Partition, LaurentPoly]:
    return {k: v for k, v in coeffs.items() if v}


@dataclass(frozen=True)
class SymFunc:
    degree: int
    basis: str
    coeffs: Mapping[Partition, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = partition(lam)
            if size(lam) != self.degree:
                raise ValueError(f"index {lam} is not a partition of {self.degree}")
            if isinstance(c, int):
                c = LaurentPoly.const(c)
            if c:
                clean[lam] = clean.get(lam, ZERO) + c
        object.__setattr__(self, "coeffs", _clean(clean))

    @classmethod
    def basis_element(cls, basis: str, lam: Sequence[int], coef: LaurentPoly | int = 1) -> "SymFunc":
        lam = partition(lam)
        return cls(size(lam), basis, {lam: coef})

    def __getitem__(self, lam) -> LaurentPoly:
        return self.coeffs.get(partition(lam), ZERO)

    def _combine(self, other: "SymFunc", op: Callable) -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        other = other.to(self.basis)
        keys = set(self.coeffs) | set(other.coeffs)
        return SymFunc(self.degree, self.basis, {k: op(self[k], other[k]) for k in keys})

    def __add__(self, other: "SymFunc") -> "SymFunc":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c: LaurentPoly | int) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def map_coeffs(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.coeffs == other.to(self.basis).coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.to("schur").coeffs.items())))

    def to(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        return _from_schur(_to_schur(self), basis)

    def is_schur_positive(self) -> bool:
        return all(c.is_nonnegative() for c in self.to("schur").coeffs.values())

    def sorted_items(self) -> list[tuple[Partition, LaurentPoly]]:
        # reverse-lexicographic on indices
        return sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coeffs": [{"index": list(lam), "poly": c.to_json()} for lam, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        return cls(
            int(data["degree"]),
            data["basis"],
            {partition(e["index"]): LaurentPoly.from_json(e["poly"]) for e in data["coeffs"]},
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["basis", "index", "qexp", "texp", "coef"])
        for lam, c in self.sorted_items():
            idx = ",".join(map(str, lam))
            for (qe, te), k in c.items():
                w.writerow([self.basis, idx, qe, te, k])
        return buf.getvalue()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pre = _PREFIX[self.basis]
        parts = []
        for lam, c in self.sorted_items():
            name = f"{pre}[{','.join(map(str, lam))}]"
            if c == ONE:
                parts.append(name)
            elif len(c.terms) == 1 and list(c.terms.values())[0] == 1:
                parts.append(f"{c}*{name}")
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts)


def _lex_desc(n: int) -> tuple[Partition, ...]:
    return partitions(n)  # already reverse-lex


def _to_schur(f: SymFunc) -> SymFunc:
    n = f.degree
    K = kostka_matrix(n)
    if f.basis == "schur":
        return f
    if f.basis == "monomial":
        return SymFunc(n, "schur", _solve_monomial_to_schur(f.coeffs, n))
    if f.basis == "homogeneous":
        # h_mu = sum_lam K[lam, mu] s_lam
        out: dict[Partition, LaurentPoly] = {}
        for mu, c in f.coeffs.items():
            for lam in partitions(n):
                k = K.get((lam, mu))
                if k:
                    out[lam] = out.get(lam, ZERO) + c * k
        return SymFunc(n, "schur", out)
    if f.basis == "elementary":
        return omega(SymFunc(n, "homogeneous", f.coeffs).to("schur"))
    raise ValueError(f.basis)


def _solve_monomial_to_schur(mcoeffs: Mapping[Partition, LaurentPoly], n: int) -> dict[Partition, LaurentPoly]:
    """Find c with sum_lam c[lam] K[lam, mu] = a[mu] for all mu."""
    K = kostka_matrix(n)
    order = _lex_desc(n)
    c: dict[Partition, LaurentPoly] = {}
    for idx, mu in enumerate(order):
        acc = mcoeffs.get(mu, ZERO)
        for lam in order[:idx]:
            k = K.get((lam, mu))
            if k and lam in c:
                acc = acc - c[lam] * k
        if acc:
            c[mu] = acc  # K[mu, mu] = 1
    return c


def _from_schur(f: SymFunc, basis: str) -> SymFunc:
    n = f.degree
    K = kostka_matrix(n)
    if basis == "schur":
        return f
    if basis == "monomial":
        out: dict[Partition, LaurentPoly] = {}
        for lam, c in f.coeffs.items():
            for mu in partitions(n):
                k = K.get((lam, mu))
                if k:
                    out[mu] = out.get(mu, ZERO) + c * k
        return SymFunc(n, "monomial", out)
    if basis == "homogeneous":
        # solve s-coeffs c[lam] = sum_mu K[lam, mu] b[mu], ascending lex
        order = tuple(reversed(_lex_desc(n)))
        b: dict[Partition, LaurentPoly] = {}
        for idx, lam in enumerate(order):
            acc = f[lam]
            for mu in order[:idx]:
                k = K.get((lam, mu))
                if k and mu in b:
                    acc = acc - b[mu] * k
            if acc:
                b[lam] = acc
        return SymFunc(n, "homogeneous", b)
    if basis == "elementary":
        return SymFunc(n, "elementary", _from_schur(omega(f), "homogeneous").coeffs)
    raise ValueError(f"unknown basis {basis!r}")


def monomial_to_schur(f: SymFunc) -> SymFunc:
    if f.basis != "monomial":
        raise ValueError("expected a monomial-basis input")
    return f.to("schur")


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis != "schur":
        raise ValueError("expected a Schur-basis input")
    return f.to("monomial")


def hall_pair(f: SymFunc, g: SymFunc) -> LaurentPoly:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    fs, gs = f.to("schur"), g.to("schur")
    total = ZERO
    for lam, c in fs.coeffs.items():
        if lam in gs.coeffs:
            total = total + c * gs.coeffs[lam]
    return total


def omega(f: SymFunc) -> SymFunc:
    """The involution, applied on Schur indices by conjugation."""
    fs = f.to("schur") if f.basis != "schur" else f
    out = SymFunc(f.degree, "schur", {conjugate(lam): c for lam, c in fs.coeffs.items()})
    return out.to(f.basis)


# -- quasi-symmetric functions -----------------------------------------------


def strong_compositions(n: int) -> Iterable[tuple[int, ...]]:
    """Compositions of n with positive parts, in bijection with subsets of {1..n-1}."""
    for cuts in itertools.product((0, 1), repeat=max(n - 1, 0)):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def breaks(alpha: Sequence[int]) -> frozenset[int]:
    """Partial sums of a strong composition, excluding the total."""
    return frozenset(itertools.accumulate(alpha[:-1]))


def composition_of(breakset: Iterable[int], n: int) -> tuple[int, ...]:
    cuts = sorted(breakset) + [n]
    prev, out = 0, []
    for c in cuts:
        out.append(c - prev)
        prev = c
    return tuple(out)


@dataclass(frozen=True)
class QuasiSym:
    """Degree-n quasi-symmetric function on the monomial basis M_alpha."""

    degree: int
    coeffs: Mapping[tuple[int, ...], LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for alpha, c in self.coeffs.items():
            alpha = tuple(alpha)
            if sum(alpha) != self.degree or any(a <= 0 for a in alpha):
                raise ValueError(f"{alpha} is not a strong composition of {self.degree}")
            if isinstance(c, int):
                c = LaurentPoly.const(c)
            if c:
                clean[alpha] = clean.get(alpha, ZERO) + c
        object.__setattr__(self, "coeffs", _clean(clean))

    def __getitem__(self, alpha) -> LaurentPoly:
        return self.coeffs.get(tuple(alpha), ZERO)

    def __add__(self, other: "QuasiSym") -> "QuasiSym":
        keys = set(self.coeffs) | set(other.coeffs)
        return QuasiSym(self.degree, {k: self[k] + other[k] for k in keys})

    def scale(self, c: LaurentPoly | int) -> "QuasiSym":
        return QuasiSym(self.degree, {k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFunc):
            other = from_symfunc(other)
        if not isinstance(other, QuasiSym):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def is_symmetric(self) -> bool:
        by_shape: dict[Partition, LaurentPoly] = {}
        for alpha in strong_compositions(self.degree):
            lam = partition(sorted(alpha, reverse=True))
            c = self[alpha]
            if lam in by_shape and by_shape[lam] != c:
                return False
            by_shape.setdefault(lam, c)
        return True

    def to_symfunc(self) -> SymFunc:
        if not self.is_symmetric():
            raise SymmetryError("quasi-symmetric function is not symmetric")
        return SymFunc(self.degree, "monomial",
                       {partition(sorted(a, reverse=True)): c for a, c in self.coeffs.items()})


def from_symfunc(f: SymFunc) -> QuasiSym:
    mf = f.to("monomial")
    return QuasiSym(f.degree, {a: mf[partition(sorted(a, reverse=True))] for a in strong_compositions(f.degree)})


def quasisym_Q(n: int, D: Iterable[int], sign: Sign | str = Sign.POSITIVE) -> QuasiSym:
    """Gessel's fundamental function (or its negative-alphabet twin) on the M basis.

    Positive: equal neighbours a_i = a_{i+1} are forbidden at i in D, so
    M_alpha appears iff D is inside breaks(alpha).  Negative: equal
    neighbours are only allowed at i in D, so the complement of D must be.
    """
    D = frozenset(D)
    if any(not 1 <= i <= n - 1 for i in D):
        raise ValueError(f"descent set {sorted(D)} not inside 1..{n - 1}")
    sign = Sign.parse(sign)
    need = D if sign is Sign.POSITIVE else frozenset(range(1, n)) - D
    return QuasiSym(n, {a: ONE for a in strong_compositions(n) if need <= breaks(a)})


def fundamental_expansion(f: SymFunc | QuasiSym) -> dict[frozenset[int], LaurentPoly]:
    """Coefficients c_D with f = sum_D c_D Q_{n,D} (Moebius inversion on subsets)."""
    qf = from_symfunc(f) if isinstance(f, SymFunc) else f
    n = qf.degree
    by_set = {breaks(a): qf[a] for a in strong_compositions(n)}
    out: dict[frozenset[int], LaurentPoly] = {}
    for D in by_set:
        acc = ZERO
        Dl = sorted(D)
        for r in range(len(Dl) + 1):
            for E in itertools.combinations(Dl, r):
                term = by_set[frozenset(E)]
                acc = acc + (term if (len(Dl) - r) % 2 == 0 else -term)
        if acc:
            out[D] = acc
    return out


def omega_via_quasisym(expansion: Mapping[Iterable[int], LaurentPoly] | SymFunc, n: int | None = None) -> SymFunc:
    """Replace each Q_{n,D} by its negative twin and re-symmetrize."""
    if isinstance(expansion, SymFunc):
        n = expansion.degree
        expansion = fundamental_expansion(expansion)
    if n is None:
        raise ValueError("degree n is required for a bare expansion")
    positive = QuasiSym(n)
    for D, c in expansion.items():
        positive = positive + quasisym_Q(n, D, Sign.POSITIVE).scale(c)
    if not positive.is_symmetric():
        raise SymmetryError("input is not symmetric")
    out = QuasiSym(n)
    for D, c in expansion.items():
        out = out + quasisym_Q(n, D, Sign.NEGATIVE).scale(c)
    return out.to_symfunc()


# -- invariant dimensions -> Frobenius series --------------------------------


def frobenius_from_invariants(dims: Mapping[Sequence[int], LaurentPoly | int]) -> SymFunc:
    """The Schur expansion F with <F, h_mu> = dims[mu] for every mu |- n.

    Raises ValueError when a partition is missing or the solution has a
    negative coefficient, which no graded module can produce.
    """
    table = {partition(k): (LaurentPoly.const(v) if isinstance(v, int) else v) for k, v in dims.items()}
    if not table:
        raise ValueError("no dimensions given")
    n = size(next(iter(table)))
    missing = [mu for mu in partitions(n) if mu not in table]
    if missing:
        raise ValueError(f"missing invariant dimensions for {missing}")
    coeffs = _solve_monomial_to_schur(table, n)
    bad = {lam: c for lam, c in coeffs.items() if not c.is_nonnegative()}
    if bad:
        raise ValueError(f"dimensions are not those of a graded module: negative multiplicities {bad}")
    return SymFunc(n, "schur", coeffs)


# -- dinv generating functions -----------------------------------------------


def _content_series(lam: Partition, ctx: StatCtx, sign: Sign) -> dict[tuple[int, ...], LaurentPoly]:
    shape = skew_shape(lam, ctx.n)
    acc: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}
    for T in enumerate_tableaux(shape, sign, max_label=ctx.n):
        key = T.content(ctx.n)
        e = dinv_of_labels(lam, T.labels, sign, ctx)
        bucket = acc.setdefault(key, {})
        bucket[(e, 0)] = bucket.get((e, 0), 0) + 1
    return {k: LaurentPoly(v) for k, v in acc.items()}


def _symmetrize(series: Mapping[tuple[int, ...], LaurentPoly], n: int, what: str) -> SymFunc:
    coeffs: dict[Partition, LaurentPoly] = {}
    for lam in partitions(n):
        padded = lam + (0,) * (n - len(lam))
        ref = series.get(padded, ZERO)
        for comp in set(itertools.permutations(padded)):
            if series.get(comp, ZERO) != ref:
                raise SymmetryError(f"{what}: coefficient of z^{comp} differs from z^{padded}")
        coeffs[lam] = ref
    return SymFunc(n, "monomial", coeffs)


def dinv_series(lam: Sequence[int], ctx: StatCtx) -> SymFunc:
    """Sum of q^dinv(T) z^T over positive semistandard T, monomial basis.

    Symmetry is checked on every weak composition; a failure is a bug.
    """
    lam = check_admissible(lam, ctx)
    return _symmetrize(_content_series(lam, ctx, Sign.POSITIVE), ctx.n, f"dinv series of {lam}")


def negative_dinv_series(lam: Sequence[int], ctx: StatCtx) -> SymFunc:
    """The same sum over negative semistandard tableaux, in the w variables."""
    lam = check_admissible(lam, ctx)
    return _symmetrize(_content_series(lam, ctx, Sign.NEGATIVE), ctx.n, f"negative dinv series of {lam}")


def bigraded_dinv_series(ctx: StatCtx, series: Callable[[Partition, StatCtx], SymFunc] | None = None) -> SymFunc:
    """Sum over admissible shapes of t^corank times the dinv series."""
    series = series or dinv_series
    total = SymFunc(ctx.n, "monomial")
    for lam in admissible_shapes(ctx):
        total = total + series(lam, ctx).scale(LaurentPoly.monomial(0, corank(lam, ctx)))
    return total


def quasisym_dinv_expansion(lam: Sequence[int], ctx: StatCtx) -> QuasiSym:
    """Sum over standard S of q^dinv(S) Q_{n, dd(S)}."""
    lam = check_admissible(lam, ctx)
    out = QuasiSym(ctx.n)
    for S in standard_tableaux(skew_shape(lam, ctx.n), Sign.POSITIVE):
        out = out + quasisym_Q(ctx.n, d_descents(S, ctx)).scale(LaurentPoly.monomial(dinv(S, ctx)))
    return out


def shifted_dual(f: SymFunc, ctx: StatCtx) -> SymFunc:
    """q^{dimension constant} * omega(f) with q -> 1/q, Schur basis."""
    shift = ctx.dimension_constant()
    return omega(f.to("schur")).map_coeffs(lambda c: c.invert_q().shift(shift))
