"""Singular points of plane curves, ADE classification, and the GIT verdict
for plane quartics."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .algebra.elimination import Solution, format_unipoly, solve_plane
from .algebra.factor import squarefree_decomposition
from .algebra.linalg import quadratic_form_matrix, rank
from .algebra.local import local_algebra_dimension
from .algebra.points import ProjPoint
from .algebra.poly import Poly
from .algebra.univariate import UniPoly, root_multiplicities
from .errors import DomainError, UnclassifiedExtensionPoint

NOT_ISOLATED = "NotIsolated"

@dataclass(frozen=True)
class SingularityType:
    kind: str  # "A", "D", "E" or "NonADE"
    n: int | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.kind == "A" and not (self.n and self.n >= 1):
            raise ValueError("A_n needs n >= 1")
        if self.kind == "D" and not (self.n and self.n >= 4):
            raise ValueError("D_n needs n >= 4")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise ValueError("E_n needs n in 6, 7, 8")

    @property
    def is_ade(self) -> bool:
        return self.kind != "NonADE"

    def __str__(self):
        if self.kind == "NonADE":
            return f"NonADE({self.reason})"
        return f"{self.kind}{self.n}"


def A(n):
    return SingularityType("A", n)


def D(n):
    return SingularityType("D", n)


def E(n):
    return SingularityType("E", n)


def NonADE(reason):
    return SingularityType("NonADE", reason=reason)


@dataclass(frozen=True)
class SingularityRecord:
    point: ProjPoint
    multiplicity: int
    milnor: int | str
    type: SingularityType

    def as_dict(self) -> dict:
        return {"point": str(self.point), "multiplicity": self.multiplicity,
                "milnor": self.milnor, "type": str(self.type)}


class Status(str, Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"

    def __str__(self):
        return self.value


@dataclass
class QuarticVerdict:
    status: Status
    reasons: list[str] = field(default_factory=list)
    records: list[SingularityRecord] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"status": self.status.value, "reasons": list(self.reasons),
                "singularities": [r.as_dict() for r in self.records]}


@dataclass
class SingularLocus:
    points: list[ProjPoint]
    residual: list[UniPoly]
    non_isolated: bool

    def residual_strings(self) -> list[str]:
        return [format_unipoly(r) for r in self.residual]


def _check_ternary(F: Poly):
    if F.nvars != 3:
        raise DomainError("expected a form in three variables")
    if not F.is_homogeneous():
        raise DomainError("expected a homogeneous form")


def singular_points(F: Poly, seed: int = 0) -> SingularLocus:
    """Singular points over Q and quadratic fields, residual eliminant factors
    for the others, and whether the singular locus is positive-dimensional."""
    _check_ternary(F)
    if F.is_zero():
        raise DomainError("zero form")
    sol: Solution = solve_plane(F.gradient(), seed=seed)
    if not sol.finite:
        return SingularLocus([], [], True)
    return SingularLocus(sol.points, sol.residual, False)


def local_form(F: Poly, p: ProjPoint) -> Poly:
    """F in the affine chart of p, translated so that p is the origin."""
    i = p.affine_chart()
    f = F.dehomogenize(i)
    rest = [c for j, c in enumerate(p.coords) if j != i]
    return f.translate(rest)


def multiplicity_at(F: Poly, p: ProjPoint) -> int:
    f = local_form(F, p)
    if f.is_zero():
        raise DomainError("zero form")
    return f.order()


def _on_multiple_component(F: Poly, p: ProjPoint) -> bool:
    for q, m in squarefree_decomposition(F):
        if m > 1 and not q.evaluate(p.coords):
            return True
    return False


def milnor_number(F: Poly, p: ProjPoint, cap: int = 16) -> int | str:
    """Length of the local Jacobian algebra, or NOT_ISOLATED.

    The singular locus of a plane curve is positive-dimensional exactly along
    multiple components, so isolation is decided by the squarefree split.
    """
    if F.field() is None and _on_multiple_component(F, p):
        return NOT_ISOLATED
    f = local_form(F, p)
    return local_algebra_dimension(f.gradient(), cap=cap)


def _binary_root_multiplicities(h: Poly) -> list[int]:
    """Multiplicities of the linear factors of a binary form over the closure."""
    m = h.degree()
    uni = UniPoly([h.coeff((k, m - k)) for k in range(m + 1)])
    mults = root_multiplicities(uni) if uni.degree >= 1 else []
    at_inf = m - max(uni.degree, 0)
    if at_inf:
        mults.append(at_inf)
    return sorted(mults, reverse=True)


def tangent_cone(F: Poly, p: ProjPoint) -> tuple[Poly, str]:
    f = local_form(F, p)
    m = f.order()
    if m < 1:
        raise DomainError("point is not on the curve")
    h = f.homogeneous_part(m)
    mults = _binary_root_multiplicities(h)
    if all(k == 1 for k in mults):
        shape = "distinct-lines"
    elif mults == [2, 1]:
        shape = "double-plus-simple"
    elif mults == [3]:
        shape = "triple-line"
    else:
        shape = "other"
    return h, shape


def classify_singularity(F: Poly, p: ProjPoint, cap: int = 16) -> SingularityRecord:
    m = multiplicity_at(F, p)
    if m < 2:
        raise DomainError(f"{p} is not a singular point")
    mu = milnor_number(F, p, cap=cap)
    if mu == NOT_ISOLATED:
        return SingularityRecord(p, m, mu, NonADE("NotIsolated"))
    if m == 2:
        t = A(mu)
    elif m == 3:
        _h, shape = tangent_cone(F, p)
        if shape in ("distinct-lines", "double-plus-simple"):
            t = D(mu)
        elif mu in (6, 7, 8):
            t = E(mu)
        else:
            t = NonADE("TripleLineBadMilnor")
    else:
        t = NonADE("MultiplicityAtLeast4")
    return SingularityRecord(p, m, mu, t)


def is_reduced(F: Poly) -> bool:
    if F.is_zero():
        raise DomainError("zero form")
    return all(m == 1 for _q, m in squarefree_decomposition(F))


def _records(F: Poly, points: Sequence[ProjPoint], cap: int) -> list[SingularityRecord]:
    return [classify_singularity(F, p, cap=cap) for p in points]


def has_only_ADE(F: Poly, seed: int = 0, cap: int = 16) -> tuple[bool, list[SingularityRecord]]:
    if not is_reduced(F):
        return False, []
    locus = singular_points(F, seed=seed)
    if locus.residual:
        raise UnclassifiedExtensionPoint(
            "singular points over fields of degree > 2", locus.residual_strings())
    recs = _records(F, locus.points, cap)
    return all(r.type.is_ade for r in recs), recs


def double_smooth_conic_test(F: Poly) -> bool:
    if F.degree() != 4:
        raise DomainError("expected a quartic")
    parts = squarefree_decomposition(F)
    if len(parts) != 1:
        return False
    q, m = parts[0]
    return m == 2 and q.degree() == 2 and rank(quadratic_form_matrix(q)) == 3


def _contact_order(f: Poly, direction: Sequence) -> int:
    """Order of vanishing at s = 0 of f(s*direction) (f affine at the origin)."""
    coeffs: dict[int, object] = {}
    for e, c in f.terms.items():
        v = c
        for d, k in zip(direction, e):
            if k:
                v = v * d ** k
        coeffs[sum(e)] = coeffs.get(sum(e), 0) + v
    return min((k for k, v in coeffs.items() if v), default=10**9)


def _inflection_at(F: Poly, p: ProjPoint) -> bool:
    """Is F = L*C near p, with L tangent to C at a smooth point p with contact 3?"""
    f = local_form(F, p)
    if f.order() != 2:
        return False
    h = f.homogeneous_part(2)
    a, b, c = h.coeff((2, 0)), h.coeff((1, 1)), h.coeff((0, 2))
    if b * b - 4 * a * c:
        return False
    # h = a*(u + b/(2a) v)^2 or c*v^2
    if a:
        ell = Poly({(1, 0): 1, (0, 1): b / (2 * a) if b else 0}, f.gens)
    else:
        ell = Poly({(0, 1): 1}, f.gens)
    try:
        cof = f.exquo(ell)
    except ValueError:
        return False
    if cof.order() != 1:
        return False
    alpha, beta = ell.coeff((1, 0)), ell.coeff((0, 1))
    return _contact_order(cof, (beta, -alpha)) == 3


def inflectional_tangent_quartic_test(F: Poly, seed: int = 0) -> bool:
    """True iff F is a cubic together with one of its inflectional tangent lines.

    Such a configuration has a double point with square tangent cone at the
    flex; only those points are examined.  Points over fields of degree > 2
    cannot be flexes of this kind (three conjugate lines would split off),
    so residual factors never change the answer.
    """
    if F.degree() != 4:
        raise DomainError("expected a quartic")
    locus = singular_points(F, seed=seed)
    if locus.non_isolated:
        return False
    return any(_inflection_at(F, p) for p in locus.points)


def decide_quartic_stability(F: Poly, seed: int = 0, cap: int = 16) -> QuarticVerdict:
    """Stable / strictly semistable / unstable verdict for a plane quartic.

    Residual singular points (over fields of degree > 2) come in at least
    three conjugates.  A reduced quartic has at most one triple point, which
    is therefore rational, so residual points are double points and only
    matter when they could separate Stable from StrictlySemistable.
    """
    if F.is_zero():
        return QuarticVerdict(Status.UNSTABLE, ["zero form"])
    _check_ternary(F)
    if F.degree() != 4:
        raise DomainError("expected a quartic")
    if not is_reduced(F):
        if double_smooth_conic_test(F):
            return QuarticVerdict(Status.STRICTLY_SEMISTABLE, ["double smooth conic"])
        return QuarticVerdict(Status.UNSTABLE, ["non-reduced, not a double smooth conic"])
    locus = singular_points(F, seed=seed)
    recs = _records(F, locus.points, cap)
    bad = [r for r in recs if r.multiplicity >= 3]
    if bad:
        return QuarticVerdict(Status.UNSTABLE, [f"point of multiplicity {r.multiplicity} at {r.point}"
                                               for r in bad], recs)
    flexes = [r.point for r in recs if _inflection_at(F, r.point)]
    if flexes:
        return QuarticVerdict(Status.UNSTABLE, [f"cubic with inflectional tangent line at {p}"
                                               for p in flexes], recs)
    mild = all(r.type in (A(1), A(2)) for r in recs)
    if locus.residual:
        if mild:
            raise UnclassifiedExtensionPoint(
                "double points over fields of degree > 2 decide between Stable and "
                "StrictlySemistable", locus.residual_strings())
        return QuarticVerdict(Status.STRICTLY_SEMISTABLE,
                              [f"{r.type} at {r.point}" for r in recs if r.type not in (A(1), A(2))]
                              + ["further double points over extensions: "
                                 + ", ".join(locus.residual_strings())], recs)
    if mild:
        return QuarticVerdict(Status.STABLE, ["reduced with at worst A1/A2 points"], recs)
    return QuarticVerdict(Status.STRICTLY_SEMISTABLE,
                          [f"{r.type} at {r.point}" for r in recs if r.type not in (A(1), A(2))], recs)
