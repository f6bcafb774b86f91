"""Coweights of SL_n, the tuples (a_1..a_{n-1}) that index them, and the
affine symmetric group acting on both.

Permutations are tuples ``w`` with ``w[i-1] = w(i)`` (1-based values) and
act on vectors by ``(w.x)_{w(i)} = x_i``.  An affine element ``t_lam w`` is
stored as ``(lam, w)``; products follow ``t_lam w * t_mu v = t_{lam + w.mu} wv``.
Simple reflections are indexed mod n, index 0 (= n) being the affine one.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Coweight = tuple[int, ...]


# -- the parameter set -------------------------------------------------------


@dataclass(frozen=True)
class PElement:
    n: int
    a: tuple[int, ...]  # (a_1, ..., a_{n-1})

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if len(self.a) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} entries, got {len(self.a)}")
        if any(v < 0 for v in self.a):
            raise ValueError(f"entries must be nonnegative: {self.a}")

    @classmethod
    def zero(cls, n: int) -> "PElement":
        return cls(n, (0,) * (n - 1))

    def __call__(self, i: int) -> int:
        """a_i for any integer i, via a_n = 0 and a_{i+n} = a_i + 1."""
        shift, r = divmod(i - 1, self.n)
        r += 1
        base = 0 if r == self.n else self.a[r - 1]
        return base + shift

    @property
    def total(self) -> int:
        return sum(self.a)

    def to_json(self) -> list[int]:
        return list(self.a)


def a_value(p: PElement) -> int:
    return p.total


def all_p_elements(n: int, max_entry: int) -> Iterator[PElement]:
    for a in itertools.product(range(max_entry + 1), repeat=n - 1):
        yield PElement(n, a)


def p_elements_up_to(n: int, max_total: int) -> Iterator[PElement]:
    for p in all_p_elements(n, max_total):
        if p.total <= max_total:
            yield p


def p_to_coweight(p: PElement) -> Coweight:
    n, a = p.n, p.total
    if a == 0:
        return (0,) * n
    m, k = divmod(a - 1, n)
    k += 1  # a = m n + k with 1 <= k <= n
    head = [p.a[i - 1] - m - 1 for i in range(n - k + 1, n)]
    tail = [p.a[i - 1] - m for i in range(1, n - k + 1)]
    return tuple(head + [-m - 1] + tail)


def coweight_to_p(x: Sequence[int]) -> PElement:
    x = tuple(int(v) for v in x)
    n = len(x)
    if sum(x) != 0:
        raise ValueError(f"coweight {x} does not sum to zero")
    if not any(x):
        return PElement.zero(n)
    low = min(x)
    k = max(i for i in range(1, n + 1) if x[i - 1] == low)
    m = -x[k - 1] - 1
    a = [0] * (n - 1)
    for pos in range(1, k):  # x_pos = a_{n-k+pos} - m - 1
        a[n - k + pos - 1] = x[pos - 1] + m + 1
    for pos in range(k + 1, n + 1):  # x_pos = a_{pos-k} - m
        a[pos - k - 1] = x[pos - 1] + m
    return PElement(n, tuple(a))


def simple_root_pairing(x: Sequence[int], l: int) -> int:
    """<x, alpha_l> with alpha_l = e_l - e_{l+1} and alpha_n = e_n - e_1, l read mod n."""
    n = len(x)
    r = (l - 1) % n + 1
    if r == n:
        return x[n - 1] - x[0]
    return x[r - 1] - x[r]


def reflect(p: PElement, l: int) -> PElement:
    """Apply the simple reflection with index a + l, l in 0..n-1."""
    n, a = p.n, p.a
    if not 0 <= l <= n - 1:
        raise ValueError(f"l must lie in 0..{n - 1}")
    if 1 <= l <= n - 2:
        b = list(a)
        b[l - 1], b[l] = b[l], b[l - 1]
        return PElement(n, tuple(b))
    if l == n - 1:
        if a[-1] >= 1:
            return PElement(n, (a[-1] - 1,) + a[:-1])
        return p
    return PElement(n, a[1:] + (a[0] + 1,))


# -- permutations and the affine group ---------------------------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def perm_compose(w: Perm, v: Perm) -> Perm:
    """(w v)(i) = w(v(i))."""
    return tuple(w[vi - 1] for vi in v)


def perm_act(w: Perm, x: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(x)
    for i, xi in enumerate(x, start=1):
        out[w[i - 1] - 1] = xi
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


@dataclass(frozen=True)
class AffineWeylElt:
    translation: Coweight
    finite_part: Perm

    @property
    def n(self) -> int:
        return len(self.finite_part)

    @classmethod
    def identity(cls, n: int) -> "AffineWeylElt":
        return cls((0,) * n, identity_perm(n))

    @classmethod
    def translation_by(cls, x: Sequence[int]) -> "AffineWeylElt":
        return cls(tuple(x), identity_perm(len(x)))

    @classmethod
    def simple(cls, n: int, i: int) -> "AffineWeylElt":
        i %= n
        if i == 0:
            lam = [0] * n
            lam[0], lam[-1] = -1, 1
            return cls(tuple(lam), transposition(n, 1, n))
        return cls((0,) * n, transposition(n, i, i + 1))

    def __mul__(self, other: "AffineWeylElt") -> "AffineWeylElt":
        moved = perm_act(self.finite_part, other.translation)
        return AffineWeylElt(
            tuple(a + b for a, b in zip(self.translation, moved)),
            perm_compose(self.finite_part, other.finite_part),
        )

    def act(self, x: Sequence[int]) -> Coweight:
        """Affine action on the coweight lattice: t_lam w . x = lam + w.x."""
        return tuple(a + b for a, b in zip(self.translation, perm_act(self.finite_part, x)))

    def inverse(self) -> "AffineWeylElt":
        winv = perm_inverse(self.finite_part)
        return AffineWeylElt(tuple(-v for v in perm_act(winv, self.translation)), winv)


def element_of_word(word: Iterable[int], n: int) -> AffineWeylElt:
    out = AffineWeylElt.identity(n)
    for i in word:
        out = out * AffineWeylElt.simple(n, i)
    return out


def length(w: AffineWeylElt) -> int:
    lam, winv = w.translation, perm_inverse(w.finite_part)
    n = len(lam)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            diff = lam[j] - lam[i]
            total += abs(diff) if winv[i] < winv[j] else abs(diff - 1)
    return total


def ell_f(x: Sequence[int]) -> int:
    """Length of the minimal representative of t_x W."""
    n = len(x)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return sum(abs(x[j] - x[i]) for i, j in pairs) - sum(1 for i, j in pairs if x[j] - x[i] >= 1)


def w_min(x: Sequence[int]) -> Perm:
    """The w with t_x w minimal in its coset: w^-1 ranks positions by decreasing x, ties by index."""
    n = len(x)
    order = sorted(range(1, n + 1), key=lambda i: (-x[i - 1], i))
    winv = [0] * n
    for rank, i in enumerate(order, start=1):
        winv[i - 1] = rank
    return perm_inverse(tuple(winv))


def minimal_rep(x: Sequence[int]) -> AffineWeylElt:
    return AffineWeylElt(tuple(x), w_min(x))


def descent_index(p: PElement) -> int:
    """max{i <= n-1 : a_i >= 1}; p must be nonzero."""
    return max(i for i in range(1, p.n) if p.a[i - 1] >= 1)


def reduced_word_wf(p: PElement) -> list[int]:
    """Reduced word (indices mod n) whose product is the minimal rep of t_{lambda(p)} W.

    Built by peeling off the length-decreasing reflection until p is zero;
    the first reflection peeled is the leftmost letter.
    """
    word = []
    while p.total:
        l = descent_index(p)
        word.append((p.total + l) % p.n)
        p = reflect(p, l)
    return word


def subword_products(word: Sequence[int], n: int) -> set[AffineWeylElt]:
    out = {AffineWeylElt.identity(n)}
    for i in word:
        s = AffineWeylElt.simple(n, i)
        out |= {x * s for x in out}
    return out


def bruhat_leq(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """u <= v in Bruhat order, both given as reduced words (subword property)."""
    if len(u) > len(v):
        return False
    return element_of_word(u, n) in subword_products(v, n)


def cyc_word(j: int, n: int) -> list[int]:
    """s_{j-1} ... s_1 s_0 as a word, indices mod n."""
    return [k % n for k in range(j - 1, -1, -1)]


def cyc_level(p: PElement) -> int:
    """max{j : cyc_j <= minimal rep of p}; scans j up to the length bound."""
    word = reduced_word_wf(p)
    best = 0
    prods = subword_products(word, p.n)
    for j in range(1, len(word) + 1):
        if element_of_word(cyc_word(j, p.n), p.n) in prods:
            best = j
    return best
