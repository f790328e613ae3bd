"""Hilbert-Mumford weights of forms and of linear systems of forms.

Convention: the monomial x^K has weight <K, r> under Diag(r_0, ..., r_n), and
a linear system is destabilized by r when its pivot-weight sum is negative.
Group elements act by substitution, (g.f)(x) = f(g x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra.linalg import det, rref
from .algebra.poly import Poly
from .errors import DomainError, SingularMatrix


@dataclass(frozen=True)
class OneParamSubgroup:
    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int]):
        w = tuple(int(x) for x in weights)
        if sum(w) != 0:
            raise DomainError(f"one-parameter subgroup weights {w} do not sum to zero")
        object.__setattr__(self, "weights", w)

    def bar(self) -> "OneParamSubgroup":
        """Diag(r_0..r_n) -> Diag(-r_n, ..., -r_0)."""
        return OneParamSubgroup([-x for x in reversed(self.weights)])

    def inverse(self) -> "OneParamSubgroup":
        return OneParamSubgroup([-x for x in self.weights])

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __str__(self):
        return "Diag(" + ",".join(map(str, self.weights)) + ")"


def _weights(lam) -> tuple[int, ...]:
    return lam.weights if isinstance(lam, OneParamSubgroup) else tuple(lam)


def monomial_weight(K: Sequence[int], lam) -> int:
    r = _weights(lam)
    if len(K) != len(r):
        raise DomainError("exponent vector and weight vector differ in length")
    return sum(k * x for k, x in zip(K, r))


def max_weight(F: Poly, lam) -> int:
    if F.is_zero():
        raise DomainError("zero form has no weight")
    return max(monomial_weight(e, lam) for e in F.terms)


def _check_system(forms: Sequence[Poly]):
    if not forms:
        raise DomainError("empty linear system")
    gens = forms[0].gens
    d = forms[0].degree()
    for f in forms:
        if f.gens != gens or f.is_zero() or not f.is_homogeneous() or f.degree() != d:
            raise DomainError("a linear system needs nonzero forms of one degree in one ring")


def pivot_weight_sum(forms: Sequence[Poly], lam) -> int:
    """S: echelonize with columns ordered by decreasing weight (ties by
    decreasing graded-lex) and add up the weights of the pivot monomials."""
    _check_system(forms)
    r = _weights(lam)
    if len(r) != forms[0].nvars:
        raise DomainError("weight vector length does not match the number of variables")
    monos = sorted({e for f in forms for e in f.terms},
                   key=lambda e: (-monomial_weight(e, r), -sum(e), tuple(-x for x in e)))
    rows = [[f.coeff(e) for e in monos] for f in forms]
    _R, pivots = rref(rows)
    if len(pivots) != len(forms):
        raise DomainError("forms of the linear system are linearly dependent")
    return sum(monomial_weight(monos[c], r) for c in pivots)


def act(g: Sequence[Sequence], forms: Sequence[Poly]) -> list[Poly]:
    """g.f = f(g x) for each form."""
    if det(g) == 0:
        raise SingularMatrix("group element is singular")
    return [f.linear_change(g) for f in forms]


@dataclass(frozen=True)
class Certificate:
    g: tuple[tuple, ...]
    lam: OneParamSubgroup

    def __init__(self, g: Sequence[Sequence], lam):
        if det(g) == 0:
            raise SingularMatrix("certificate matrix is singular")
        object.__setattr__(self, "g", tuple(tuple(row) for row in g))
        object.__setattr__(self, "lam", lam if isinstance(lam, OneParamSubgroup)
                           else OneParamSubgroup(lam))

    @classmethod
    def diagonal(cls, lam) -> "Certificate":
        n = len(_weights(lam))
        return cls([[int(i == j) for j in range(n)] for i in range(n)], lam)


def verify_unstable_certificate(forms: Sequence[Poly], cert: Certificate,
                                strict: bool = True) -> tuple[bool, int]:
    value = pivot_weight_sum(act(cert.g, forms), cert.lam)
    return (value < 0 if strict else value <= 0), value
