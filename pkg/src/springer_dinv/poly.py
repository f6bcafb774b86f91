"""Integer Laurent polynomials in q with a polynomial t-grading.

Exponents of q may be negative; exponents of t are kept nonnegative by
every operation in this package but are not policed here.
"""
from __future__ import annotations

from typing import Iterable, Mapping

Monomial = tuple[int, int]


class LaurentPoly:
    """Immutable element of Z[q, q^-1, t], stored as {(qexp, texp): coef}."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (qe, te), c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            key = (int(qe), int(te))
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash: int | None = None

    @classmethod
    def monomial(cls, qexp: int = 0, texp: int = 0, coef: int = 1) -> "LaurentPoly":
        return cls({(qexp, texp): coef})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, int] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                key = (q1 + q2, t1 + t2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only monomials with coefficient +-1 are invertible")
            ((q, t), c), = self._terms.items()
            return LaurentPoly({(-q * -k, -t * -k): c ** -k})
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, qexp: int = 0, texp: int = 0) -> "LaurentPoly":
        """Multiply by q^qexp t^texp."""
        return LaurentPoly({(q + qexp, t + texp): c for (q, t), c in self._terms.items()})

    def invert_q(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly({(-q, t): c for (q, t), c in self._terms.items()})

    def evaluate(self, q: int = 1, t: int = 1):
        from fractions import Fraction

        total = Fraction(0)
        for (qe, te), c in self._terms.items():
            total += c * Fraction(q) ** qe * Fraction(t) ** te
        return total

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def q_degrees(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        qs = [q for q, _ in self._terms]
        return min(qs), max(qs)

    def to_json(self) -> list[list[int]]:
        return [[q, t, c] for (q, t), c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({(q, t): c for q, t, c in data})

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        # highest q-power first, t ascending within
        for (qe, te), c in sorted(self._terms.items(), key=lambda kv: (kv[0][1], -kv[0][0])):
            mono = []
            if qe == 1:
                mono.append("q")
            elif qe:
                mono.append(f"q^{qe}")
            if te == 1:
                mono.append("t")
            elif te:
                mono.append(f"t^{te}")
            body = "*".join(mono)
            if not body:
                term = str(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", term))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(0, 1)


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k, 0)
