"""Segre symbols of pencils of quadrics in P^3 via invariant factors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra.factor import factor_rational_univariate
from .algebra.linalg import det, det_poly_matrix, rank
from .algebra.poly import Poly
from .algebra.univariate import UniPoly, gcd_many
from .errors import DomainError, NoSmoothMember, UnknownSymbol
from .quadric_nets import _as_matrix, _flatten

_T = ("t",)


def _small_rationals():
    yield Fraction(0)
    for q in range(1, 64):
        for p in range(1, 4 * q + 1):
            if Fraction(p, q).denominator == q:
                yield Fraction(p, q)
                yield Fraction(-p, q)


def _pencil_matrix(A1, A2) -> list[list[Poly]]:
    t = Poly.var("t", _T)
    return [[Poly.const(A1[i][j], _T) + t * A2[i][j] for j in range(4)] for i in range(4)]


def _check_pencil(A1, A2):
    A1, A2 = _as_matrix(A1), _as_matrix(A2)
    if rank([_flatten(A1), _flatten(A2)]) != 2:
        raise DomainError("pencil generators are linearly dependent")
    return A1, A2


def smooth_member_search(A1, A2) -> Fraction:
    """A small rational t with det(A1 + t*A2) != 0."""
    A1, A2 = _check_pencil(A1, A2)
    if det_poly_matrix(_pencil_matrix(A1, A2)).is_zero():
        raise NoSmoothMember("every member of the pencil is singular")
    for t in _small_rationals():
        if det([[A1[i][j] + t * A2[i][j] for j in range(4)] for i in range(4)]) != 0:
            return t
    raise NoSmoothMember("no smooth member among the tried parameters")


@dataclass(frozen=True)
class SegreSymbol:
    """Brackets (nonincreasing tuples), one per root of the determinant over
    the closure; ``factors`` pairs each irreducible factor over Q with its bracket."""

    brackets: tuple[tuple[int, ...], ...]
    factors: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __str__(self):
        parts = [str(b[0]) if len(b) == 1 else "(" + ",".join(map(str, b)) + ")"
                 for b in self.brackets]
        return "[" + ",".join(parts) + "]"

    def __eq__(self, other):
        if isinstance(other, SegreSymbol):
            return self.brackets == other.brackets
        if isinstance(other, str):
            return str(self) == _canonical_string(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.brackets)

    @property
    def weight(self) -> int:
        return sum(sum(b) for b in self.brackets)


def _sort_brackets(brackets) -> tuple:
    return tuple(sorted((tuple(sorted(b, reverse=True)) for b in brackets),
                        key=lambda b: (-sum(b), -len(b), tuple(-x for x in b))))


def parse_symbol(text: str) -> tuple:
    """'[(1,2),1]' -> ((2,1),(1,)) in canonical order."""
    s = text.strip().replace(" ", "")
    if not (s.startswith("[") and s.endswith("]")):
        raise UnknownSymbol(f"malformed Segre symbol {text!r}")
    s = s[1:-1]
    out, i = [], 0
    while i < len(s):
        if s[i] == "(":
            j = s.index(")", i)
            out.append(tuple(int(x) for x in s[i + 1:j].split(",")))
            i = j + 1
        else:
            j = s.find(",", i)
            j = len(s) if j < 0 else j
            out.append((int(s[i:j]),))
            i = j
        if i < len(s) and s[i] == ",":
            i += 1
    return _sort_brackets(out)


def _canonical_string(text: str) -> str:
    return str(SegreSymbol(parse_symbol(text)))


def invariant_factors(M: Sequence[Sequence[Poly]]) -> list[UniPoly]:
    """s_1 | s_2 | ... | s_n of a square matrix over Q[t] (via gcds of minors)."""
    n = len(M)
    d = [UniPoly([1])]
    for k in range(1, n + 1):
        minors = []
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                sub = [[M[i][j] for j in cols] for i in rows]
                minors.append(UniPoly.from_poly(det_poly_matrix(sub), 0))
        d.append(gcd_many(minors))
    return [d[k] // d[k - 1] if not d[k].is_zero() else UniPoly() for k in range(1, n + 1)]


def _multiplicity(f: UniPoly, p: UniPoly) -> int:
    k = 0
    while f.degree >= p.degree and (f % p).is_zero():
        f = f // p
        k += 1
    return k


def segre_symbol(A1, A2) -> SegreSymbol:
    A1, A2 = _check_pencil(A1, A2)
    t0 = smooth_member_search(A1, A2)
    B2 = [[A1[i][j] + t0 * A2[i][j] for j in range(4)] for i in range(4)]
    # the pencil spanned by A2 and a smooth member B2; all roots of det are finite
    s = invariant_factors(_pencil_matrix(A2, B2))
    top = s[-1]
    brackets, labelled = [], []
    for fac, _m in factor_rational_univariate(top):
        b = tuple(sorted((e for e in (_multiplicity(sk, fac) for sk in reversed(s)) if e > 0),
                         reverse=True))
        labelled.append((str(fac.to_poly(_T)), b))
        brackets.extend([b] * fac.degree)
    return SegreSymbol(_sort_brackets(brackets), tuple(sorted(labelled)))


INTERSECTION_TYPES = {
    "[(1,1),1,1]": "two A1 points",
    "[2,2]": "two A1 points",
    "[(2,1),1]": "one A3 point",
    "[(2,2)]": "double line plus two lines",
    "[(3,1)]": "D4 point",
    "[(1,1,1),1]": "double-conic contact case",
}


def intersection_type_lookup(symbol) -> str:
    key = str(symbol) if isinstance(symbol, SegreSymbol) else _canonical_string(symbol)
    try:
        return INTERSECTION_TYPES[key]
    except KeyError:
        raise UnknownSymbol(f"no intersection type recorded for {key}") from None
