"""Projection of a net of quadrics from a rational base point to a net of
plane cubics, and the stability verdict for such cubic nets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra.elimination import solve_plane
from .algebra.linalg import inverse, matvec, rank
from .algebra.points import ProjPoint
from .algebra.poly import Poly, monomials_of_degree
from .errors import DegenerateGale, DomainError, PointNotOnQuadric, ProvenanceInvalid
from .hilbert_mumford import Certificate, OneParamSubgroup, act, pivot_weight_sum
from .plane_curves import QuarticVerdict, Status, decide_quartic_stability, has_only_ADE, is_reduced
from .quadric_nets import QuadricNet, base_locus

PLANE_VARS = ("x", "y", "z")
PAIRS = ((0, 1), (0, 2), (1, 2))


def _rational_point(p) -> ProjPoint:
    pt = p if isinstance(p, ProjPoint) else ProjPoint([Fraction(c) for c in p])
    if pt.dim != 3:
        raise DomainError("expected a point of P^3")
    if not pt.is_rational():
        raise DomainError("projection needs a rational point")
    return pt


@dataclass(frozen=True)
class ProjectionFrame:
    """``matrix`` sends p to (0:0:0:1); ``basis`` is its inverse, whose last
    column is p and whose other columns are unit vectors."""

    basis: tuple[tuple, ...]
    matrix: tuple[tuple, ...]

    @classmethod
    def at(cls, p) -> "ProjectionFrame":
        pt = _rational_point(p)
        c = pt.coords
        k = max(range(4), key=lambda i: (abs(c[i]), -i))
        cols = [[int(i == j) for i in range(4)] for j in range(4) if j != k] + [list(c)]
        P = [[cols[j][i] for j in range(4)] for i in range(4)]
        return cls(tuple(map(tuple, P)), tuple(map(tuple, inverse(P))))

    def project(self, q: ProjPoint) -> ProjPoint:
        """(x:y:z:w) -> (x:y:z) in the moved coordinates."""
        y = matvec(self.matrix, list(q.coords))
        if all(v == 0 for v in y[:3]):
            raise DomainError("the centre of projection has no image")
        return ProjPoint(y[:3])


def decompose_at_point(Q: Poly, frame: ProjectionFrame) -> tuple[Poly, Poly]:
    """Q(basis * (x,y,z,w)) = w*l + q with l linear and q quadratic in x, y, z."""
    moved = Q.linear_change(frame.basis)
    if moved.coeff((0, 0, 0, 2)):
        raise PointNotOnQuadric(f"{Q} does not vanish at the centre of projection")
    l_terms, q_terms = {}, {}
    for e, c in moved.terms.items():
        (l_terms if e[3] == 1 else q_terms)[e[:3]] = c
    return Poly(l_terms, PLANE_VARS), Poly(q_terms, PLANE_VARS)


def _cubic_vector(C: Poly) -> list:
    return [C.coeff(e) for e in monomials_of_degree(3, 3)]


@dataclass
class CubicNet:
    cubics: tuple[Poly, Poly, Poly]  # C12, C13, C23
    decompositions: tuple = ()
    frame: ProjectionFrame | None = None

    def __post_init__(self):
        if len(self.cubics) != 3:
            raise DomainError("a cubic net has three generators")
        for C in self.cubics:
            if C.nvars != 3 or C.is_zero() or not C.is_homogeneous() or C.degree() != 3:
                raise DegenerateGale(f"{C} is not a plane cubic")
        if rank([_cubic_vector(C) for C in self.cubics]) != 3:
            raise DegenerateGale("the cubics span less than a net")

    def syzygy(self) -> Poly:
        """l1*C23 - l2*C13 + l3*C12, identically zero for a transform."""
        if not self.decompositions:
            raise DomainError("no decompositions recorded")
        (l1, _), (l2, _), (l3, _) = self.decompositions
        C12, C13, C23 = self.cubics
        return l1 * C23 - l2 * C13 + l3 * C12

    def as_dict(self) -> dict:
        out = {name: str(C) for name, C in zip(("C12", "C13", "C23"), self.cubics)}
        if self.decompositions:
            out["decompositions"] = [{"l": str(l), "q": str(q)} for l, q in self.decompositions]
        return out


def gale_transform(net: QuadricNet, p) -> CubicNet:
    frame = ProjectionFrame.at(p)
    dec = tuple(decompose_at_point(Q, frame) for Q in net.forms)
    cubics = tuple(dec[i][0] * dec[j][1] - dec[j][0] * dec[i][1] for i, j in PAIRS)
    for (i, j), C in zip(PAIRS, cubics):
        if C.is_zero() or C.degree() != 3:
            raise DegenerateGale(f"C{i + 1}{j + 1} vanishes identically")
    return CubicNet(cubics, dec, frame)


@dataclass
class GaleReport:
    centre: ProjPoint
    projections: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    accounted: int = 0
    expected: int = 7

    @property
    def passed(self) -> bool:
        return all(r["common_zero"] for r in self.projections)

    def as_dict(self) -> dict:
        return {"centre": str(self.centre), "passed": self.passed, "projections": self.projections,
                "skipped": self.skipped, "accounted": self.accounted, "expected": self.expected}


def verify_gale(net: QuadricNet, p, seed: int = 0) -> tuple[CubicNet, GaleReport]:
    """Every other base point must project to a common zero of the three cubics."""
    cn = gale_transform(net, p)
    centre = _rational_point(p)
    locus = base_locus(net, seed=seed)
    if not locus.finite:
        raise DomainError("base locus is positive-dimensional")
    report = GaleReport(centre, skipped=list(locus.residual))
    for q, mult in locus.points:
        if q == centre:
            continue
        image = cn.frame.project(q)
        vanish = all(not C.evaluate(image.coords) for C in cn.cubics)
        report.projections.append({"point": str(q), "image": str(image),
                                   "multiplicity": mult, "common_zero": vanish})
        report.accounted += mult
    return cn, report


@dataclass
class CubicVerdict:
    status: str  # a Status value or "Undecided"
    certificate: Certificate | None = None
    value: int | None = None
    reasons: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        out = {"status": self.status, "reasons": list(self.reasons)}
        if self.certificate is not None:
            out["certificate"] = {"g": [[str(x) for x in row] for row in self.certificate.g],
                                  "lambda": list(self.certificate.lam.weights), "value": self.value}
        return out


def _lambda_library(bound: int = 6) -> list[OneParamSubgroup]:
    out = []
    for a, b in product(range(-bound, bound + 1), repeat=2):
        c = -a - b
        if abs(c) <= bound and (a, b, c) != (0, 0, 0):
            out.append(OneParamSubgroup((a, b, c)))
    return sorted(out, key=lambda lam: (sum(r * r for r in lam.weights), lam.weights))


def _frame_library(cubics: Sequence[Poly], seed: int) -> list[list[list]]:
    """The identity and, for each rational common zero of the cubics, a frame
    sending the coordinate vertex (0:0:1) to it. The weight library is closed
    under permuting coordinates, so one vertex per zero suffices."""
    frames = [[[int(i == j) for j in range(3)] for i in range(3)]]
    sol = solve_plane(list(cubics), seed=seed)
    if sol.finite:
        for z in sol.points:
            if not z.is_rational():
                continue
            c = z.coords
            k = max(range(3), key=lambda i: (abs(c[i]), -i))
            cols = [[int(i == j) for i in range(3)] for j in range(3) if j != k] + [list(c)]
            frames.append([[cols[j][i] for j in range(3)] for i in range(3)])
    return frames


def _more_destabilizing(v1: int, n1: int, v2: int, n2: int) -> bool:
    """v1/sqrt(n1) < v2/sqrt(n2) for negative values."""
    return v1 * v1 * n2 > v2 * v2 * n1


def cubic_net_stability(cn: CubicNet | Sequence[Poly], provenance: Poly | None = None,
                        seed: int = 0) -> CubicVerdict:
    """With a discriminant quartic of a good net as provenance, the verdict of
    that quartic. Without it only instability can be certified: the most
    destabilizing (normalized) certificate found in a finite search, else Undecided."""
    cubics = cn.cubics if isinstance(cn, CubicNet) else tuple(cn)
    if not isinstance(cn, CubicNet):
        CubicNet(cubics)
    if provenance is not None:
        if provenance.is_zero() or not is_reduced(provenance):
            raise ProvenanceInvalid("provenance quartic is not reduced")
        ok, _recs = has_only_ADE(provenance, seed=seed)
        if not ok:
            raise ProvenanceInvalid("provenance quartic has a non-ADE singular point")
        verdict: QuarticVerdict = decide_quartic_stability(provenance, seed=seed)
        return CubicVerdict(verdict.status.value, reasons=["from provenance quartic"] + verdict.reasons)
    best = None
    for g in _frame_library(cubics, seed):
        moved = act(g, cubics)
        for lam in _lambda_library():
            value = pivot_weight_sum(moved, lam)
            if value >= 0:
                continue
            norm = sum(r * r for r in lam.weights)
            if best is None or _more_destabilizing(value, norm, best[1], best[2]):
                best = (Certificate(g, lam), value, norm)
        if best is not None:
            break
    if best is None:
        return CubicVerdict("Undecided", reasons=["no destabilizing certificate in the search set"])
    return CubicVerdict(Status.UNSTABLE.value, best[0], best[1], ["destabilizing certificate"])
