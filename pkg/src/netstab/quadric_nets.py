"""Nets of quadric surfaces in P^3: discriminant, base locus, goodness and
the stability decision."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra.elimination import format_unipoly, solve_space
from .algebra.linalg import (det, det_poly_matrix, kernel, matmul, matrix_quadratic_form,
                             quadratic_form_matrix, rank, transpose)
from .algebra.local import local_algebra_dimension
from .algebra.points import ProjPoint
from .algebra.poly import Poly, _norm, monomials_of_degree
from .errors import DomainError, SingularMatrix
from .plane_curves import QuarticVerdict, Status, decide_quartic_stability, has_only_ADE, is_reduced

SPACE_VARS = ("x0", "x1", "x2", "x3")
DISC_VARS = ("l", "m", "n")


def _as_matrix(Q) -> list[list]:
    if isinstance(Q, Poly):
        if Q.nvars != 4:
            raise DomainError("quadrics live in four variables")
        if not Q.is_zero() and (not Q.is_homogeneous() or Q.degree() != 2):
            raise DomainError("not a quadratic form")
        return quadratic_form_matrix(Q)
    M = [[_norm(Fraction(x)) for x in row] for row in Q]
    if len(M) != 4 or any(len(r) != 4 for r in M):
        raise DomainError("expected a 4x4 matrix")
    if any(M[i][j] != M[j][i] for i in range(4) for j in range(4)):
        raise DomainError("matrix is not symmetric")
    return M


def _flatten(M) -> list:
    return [M[i][j] for i in range(4) for j in range(i, 4)]


class QuadricNet:
    """Three linearly independent symmetric 4x4 rational matrices."""

    __slots__ = ("matrices", "gens")

    def __init__(self, generators: Sequence, gens: Sequence[str] = SPACE_VARS):
        if len(generators) != 3:
            raise DomainError("a net has three generators")
        mats = tuple(tuple(tuple(r) for r in _as_matrix(Q)) for Q in generators)
        if rank([_flatten(M) for M in mats]) != 3:
            raise DomainError("net generators are linearly dependent")
        self.matrices = mats
        self.gens = tuple(gens)

    @classmethod
    def from_forms(cls, forms: Sequence[Poly]) -> "QuadricNet":
        return cls(list(forms), forms[0].gens)

    @property
    def forms(self) -> list[Poly]:
        return [matrix_quadratic_form(M, self.gens) for M in self.matrices]

    def __eq__(self, other):
        return isinstance(other, QuadricNet) and self.matrices == other.matrices

    def __hash__(self):
        return hash(self.matrices)

    def __repr__(self):
        return "QuadricNet(" + ", ".join(str(f) for f in self.forms) + ")"


def discriminant(net: QuadricNet) -> Poly:
    """det(l*A1 + m*A2 + n*A3)."""
    lmn = Poly.variables(DISC_VARS)
    entries = [[sum((v * M[i][j] for v, M in zip(lmn, net.matrices)), Poly.zero(DISC_VARS))
                for j in range(4)] for i in range(4)]
    return det_poly_matrix(entries)


def quadric_rank(Q) -> int:
    M = _as_matrix(Q)
    r = rank(M)
    if r == 0:
        raise DomainError("zero quadric")
    return r


@dataclass
class BaseLocusReport:
    points: list[tuple[ProjPoint, int]] = field(default_factory=list)
    finite: bool = True
    residual: list[str] = field(default_factory=list)

    @property
    def accounted_length(self) -> int:
        return sum(m for _p, m in self.points)

    def multiplicities(self) -> list[int]:
        return sorted((m for _p, m in self.points), reverse=True)

    def as_dict(self) -> dict:
        return {"finite": self.finite,
                "points": [{"point": str(p), "multiplicity": m} for p, m in self.points],
                "accounted_length": self.accounted_length, "residual": list(self.residual)}


def local_multiplicity(forms: Sequence[Poly], p: ProjPoint, cap: int = 10) -> int:
    """Length of the local ring of the scheme cut out by ``forms`` at p."""
    i = p.affine_chart()
    rest = [c for j, c in enumerate(p.coords) if j != i]
    return local_algebra_dimension([f.dehomogenize(i).translate(rest) for f in forms], cap=cap)


def base_locus(net: QuadricNet, seed: int = 0, cap: int = 10) -> BaseLocusReport:
    forms = net.forms
    sol = solve_space(forms, seed=seed)
    if not sol.finite:
        return BaseLocusReport([], False, [])
    pts = [(p, local_multiplicity(forms, p, cap)) for p in sol.points]
    return BaseLocusReport(pts, True, [format_unipoly(r) for r in sol.residual])


def is_good_net(net: QuadricNet, seed: int = 0) -> bool:
    D = discriminant(net)
    if D.is_zero() or not is_reduced(D):
        return False
    ok, _recs = has_only_ADE(D, seed=seed)
    return ok


def decide_net_stability(net: QuadricNet, seed: int = 0) -> QuarticVerdict:
    D = discriminant(net)
    if D.is_zero():
        return QuarticVerdict(Status.UNSTABLE, ["discriminant vanishes identically"])
    return decide_quartic_stability(D, seed=seed)


def net_congruence_transform(net: QuadricNet, g: Sequence[Sequence]) -> QuadricNet:
    """Generators A_i replaced by g^T A_i g, i.e. forms q(x) replaced by q(g x)."""
    if det(g) == 0:
        raise SingularMatrix("transformation matrix is singular")
    gt = transpose(g)
    return QuadricNet([matmul(matmul(gt, M), g) for M in net.matrices], net.gens)


def net_through_points(points: Sequence[Sequence]) -> QuadricNet:
    """The quadrics through seven points (kernel of the 7 x 10 evaluation matrix)."""
    monos = monomials_of_degree(4, 2)
    rows = []
    for p in points:
        row = []
        for e in monos:
            v = 1
            for x, k in zip(p, e):
                v = v * x ** k
            row.append(v)
        rows.append(row)
    basis = kernel(rows)
    if len(basis) != 3:
        raise DomainError(f"points impose {10 - len(basis)} conditions on quadrics, expected 7")
    forms = [Poly(dict(zip(monos, v)), SPACE_VARS).primitive() for v in basis]
    return QuadricNet.from_forms(forms)
