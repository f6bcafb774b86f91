"""Partitions, one-box-per-row skew shapes and their tableaux.

Boxes are ``(i, j)`` with ``i`` the row (vertical axis) and ``j`` the
column, both 0-based.  The shape ``lam + (1^n) / lam`` has exactly one box
per row: the box of row ``i`` sits in column ``lam[i]``.  Drawings often
put row 0 at the bottom; nothing here depends on that.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]


class TableauError(ValueError):
    """Raised for shapes or fillings that violate a tableau invariant."""


# -- partitions --------------------------------------------------------------


def partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize (drop trailing zeros)."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise TableauError(f"negative part in {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise TableauError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def part(lam: Partition, k: int) -> int:
    """0-based part access, zero past the end."""
    return lam[k] if k < len(lam) else 0


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Young-diagram containment, ``inner`` inside ``outer``."""
    return all(part(tuple(outer), k) >= p for k, p in enumerate(inner))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order ((n) first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def subpartitions(outer: Sequence[int]) -> list[Partition]:
    """Every partition contained in ``outer``, reverse-lex, largest first."""
    outer = tuple(outer)
    out: list[Partition] = []

    def rec(k: int, bound: int, acc: list[int]):
        if k == len(outer):
            out.append(partition(acc))
            return
        for p in range(min(bound, outer[k]), -1, -1):
            acc.append(p)
            rec(k + 1, p, acc)
            acc.pop()

    rec(0, outer[0] if outer else 0, [])
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += part(lam, k)
        b += part(mu, k)
        if a < b:
            return False
    return True


def compositions(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n with exactly ``length`` parts."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, length - 1):
            yield (first,) + rest


# -- shapes and tableaux -----------------------------------------------------


class Sign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @classmethod
    def parse(cls, s) -> "Sign":
        if isinstance(s, Sign):
            return s
        table = {"+": cls.POSITIVE, "positive": cls.POSITIVE, "pos": cls.POSITIVE,
                 "-": cls.NEGATIVE, "negative": cls.NEGATIVE, "neg": cls.NEGATIVE}
        try:
            return table[str(s).lower()]
        except KeyError:
            raise TableauError(f"unknown sign {s!r}") from None


@dataclass(frozen=True)
class SkewShape:
    n: int
    inner: Partition

    @property
    def boxes(self) -> tuple[Box, ...]:
        return tuple((i, part(self.inner, i)) for i in range(self.n))

    def same_column(self, i: int) -> bool:
        """Whether rows i and i+1 share a column."""
        return part(self.inner, i) == part(self.inner, i + 1)


def skew_shape(lam: Sequence[int], n: int) -> SkewShape:
    lam = partition(lam)
    if n < 1:
        raise TableauError("n must be positive")
    if len(lam) > n:
        raise TableauError(f"partition {lam} has more than n={n} nonzero parts")
    return SkewShape(n, lam)


def _column_ok(sign: Sign, upper: int, lower: int) -> bool:
    return upper < lower if sign is Sign.POSITIVE else upper <= lower


@dataclass(frozen=True)
class Tableau:
    """A filling of a one-box-per-row shape; ``labels[i]`` is the row-i entry.

    Labels are positive integers; for the negative alphabet label ``k``
    stands for the barred letter k-bar with the same ordering.
    """

    shape: SkewShape
    sign: Sign
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.shape.n:
            raise TableauError(f"expected {self.shape.n} labels, got {len(self.labels)}")
        if any(a < 1 for a in self.labels):
            raise TableauError("labels must be positive integers")
        for i in range(self.shape.n - 1):
            if self.shape.same_column(i) and not _column_ok(self.sign, self.labels[i], self.labels[i + 1]):
                rule = "strictly" if self.sign is Sign.POSITIVE else "weakly"
                raise TableauError(
                    f"column {part(self.shape.inner, i)} is not {rule} increasing at rows {i},{i + 1}"
                )

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def entries(self) -> dict[Box, int]:
        return dict(zip(self.shape.boxes, self.labels))

    def content(self, length: int | None = None) -> tuple[int, ...]:
        top = max(self.labels) if length is None else length
        out = [0] * top
        for a in self.labels:
            out[a - 1] += 1
        return tuple(out)

    def is_standard(self) -> bool:
        return sorted(self.labels) == list(range(1, self.n + 1))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "inner": list(self.shape.inner),
            "sign": self.sign.value,
            "entries": [[i, j, a] for (i, j), a in zip(self.shape.boxes, self.labels)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        shape = skew_shape(data.get("inner", []), int(data["n"]))
        sign = Sign.parse(data.get("sign", "+"))
        labels: dict[int, int] = {}
        for i, j, a in data["entries"]:
            if not 0 <= i < shape.n:
                raise TableauError(f"row {i} outside the shape")
            if j != part(shape.inner, i):
                raise TableauError(f"box ({i},{j}) is not in the shape; row {i} box is in column {part(shape.inner, i)}")
            if i in labels:
                raise TableauError(f"row {i} filled twice")
            labels[i] = int(a)
        if len(labels) != shape.n:
            raise TableauError("every row must be filled")
        return cls(shape, sign, tuple(labels[i] for i in range(shape.n)))


def enumerate_tableaux(
    shape: SkewShape,
    sign: Sign | str,
    content: Sequence[int] | None = None,
    max_label: int | None = None,
) -> Iterator[Tableau]:
    """Yield each semistandard filling once, lexicographic in the row-0.. entries.

    Exactly one of ``content`` (a composition, entry k counts label k+1) and
    ``max_label`` selects the fillings.
    """
    sign = Sign.parse(sign)
    n = shape.n
    if content is not None:
        remaining = list(content)
        if sum(remaining) != n or any(c < 0 for c in remaining):
            return
        top = len(remaining)
    else:
        if max_label is None or max_label < 1:
            raise TableauError("give a content or a max_label >= 1")
        remaining = None
        top = max_label
    same = [shape.same_column(i) for i in range(n)]
    labels = [0] * n

    def rec(i: int):
        if i == n:
            yield Tableau(shape, sign, tuple(labels))
            return
        lo = 1
        if i and same[i - 1]:
            lo = labels[i - 1] + (1 if sign is Sign.POSITIVE else 0)
        for a in range(lo, top + 1):
            if remaining is not None:
                if not remaining[a - 1]:
                    continue
                remaining[a - 1] -= 1
            labels[i] = a
            yield from rec(i + 1)
            if remaining is not None:
                remaining[a - 1] += 1

    yield from rec(0)


def standard_tableaux(shape: SkewShape, sign: Sign | str = Sign.POSITIVE) -> Iterator[Tableau]:
    return enumerate_tableaux(shape, sign, content=(1,) * shape.n)


def destandardize(standard: Tableau, values: Sequence[int], sign: Sign | str | None = None) -> Tableau:
    """Relabel a standard tableau by the weakly increasing word ``values``."""
    sign = standard.sign if sign is None else Sign.parse(sign)
    return Tableau(standard.shape, sign, tuple(values[a - 1] for a in standard.labels))


def straight_ssyt(lam: Partition, content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of straight shape ``lam`` and given content, as rows.

    Built one letter at a time as a chain of horizontal strips.
    """
    lam = partition(lam)
    content = tuple(content)
    if sum(content) != size(lam):
        return

    def strips(inner: Partition, outer: Partition, k: int):
        # horizontal strips of size k added to inner, staying inside outer
        rows = max(len(outer), len(inner) + 1)
        cur = list(inner) + [0] * (rows - len(inner))

        def rec(r: int, left: int):
            if r == rows:
                if left == 0:
                    yield partition(cur)
                return
            cap = part(outer, r) - part(inner, r)
            if r:
                cap = min(cap, part(inner, r - 1) - part(inner, r))
            for add in range(min(cap, left), -1, -1):
                cur[r] = part(inner, r) + add
                yield from rec(r + 1, left - add)
            cur[r] = part(inner, r)

        yield from rec(0, k)

    def rec(letter: int, shape_so_far: Partition, chain: list[Partition]):
        if letter == len(content):
            if shape_so_far == lam:
                yield list(chain)
            return
        for nxt in strips(shape_so_far, lam, content[letter]):
            chain.append(nxt)
            yield from rec(letter + 1, nxt, chain)
            chain.pop()

    for chain in rec(0, (), []):
        rows = [[] for _ in lam]
        prev: Partition = ()
        for letter, sh in enumerate(chain, start=1):
            for r in range(len(sh)):
                rows[r].extend([letter] * (part(sh, r) - part(prev, r)))
            prev = sh
        yield tuple(tuple(r) for r in rows)


def all_assignments(shape: SkewShape, max_label: int) -> Iterator[tuple[int, ...]]:
    """Every labelling of the boxes, semistandard or not."""
    return itertools.product(range(1, max_label + 1), repeat=shape.n)
