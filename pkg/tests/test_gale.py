import pytest

from netstab.corpus import EXAMPLES, typical_net
from netstab.errors import DegenerateGale, DomainError, PointNotOnQuadric, ProvenanceInvalid
from netstab.gale import (CubicNet, ProjectionFrame, cubic_net_stability, decompose_at_point,
                          gale_transform, verify_gale)
from netstab.algebra.linalg import matvec, rank
from netstab.algebra.points import ProjPoint
from netstab.algebra.poly import Poly, monomials_of_degree
from netstab.parsing import parse_polynomial
from netstab.quadric_nets import SPACE_VARS, QuadricNet, base_locus, discriminant


def Q(text):
    """Quadric written in x, y, z, w."""
    return Poly(parse_polynomial(text, ("x", "y", "z", "w"), 2).terms, SPACE_VARS)


def P2(text):
    return parse_polynomial(text, "P2")


E4 = ProjectionFrame.at([0, 0, 0, 1])
SAMPLE = QuadricNet.from_forms([Q("x*w + y^2 + z^2"), Q("y*w + x^2"), Q("z*w + x*y")])


class TestFrame:
    def test_identity_at_last_vertex(self):
        assert E4.matrix == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))

    def test_moves_point_to_vertex(self):
        p = [2, -5, 1, 3]
        f = ProjectionFrame.at(p)
        assert ProjPoint(matvec(f.matrix, p)) == ProjPoint([0, 0, 0, 1])

    def test_rejects_irrational_or_planar_points(self):
        with pytest.raises(DomainError):
            ProjectionFrame.at([1, 0, 0])


class TestDecomposition:
    @pytest.mark.parametrize("text,l,q", [
        ("x*w + y^2 + z^2", "x", "y^2 + z^2"),
        ("y*w + x^2", "y", "x^2"),
        ("w*(y + x) + x*y", "x + y", "x*y"),
    ])
    def test_read_off(self, text, l, q):
        assert decompose_at_point(Q(text), E4) == (P2(l), P2(q))

    def test_point_not_on_quadric(self):
        with pytest.raises(PointNotOnQuadric):
            decompose_at_point(Q("w^2 + x*y"), E4)


class TestTransform:
    def test_sample_cubics(self):
        cn = gale_transform(SAMPLE, [0, 0, 0, 1])
        assert cn.cubics == (P2("x^3 - y^3 - y*z^2"), P2("x^2*y - y^2*z - z^3"), P2("x*y^2 - x^2*z"))
        assert cn.syzygy().is_zero()

    def test_e7_span(self):
        cn = gale_transform(EXAMPLES["E7"].net(), [0, 0, 0, 1])
        monos = monomials_of_degree(3, 3)
        assert rank([[C.coeff(e) for e in monos] for C in cn.cubics]) == 3
        assert cn.syzygy().is_zero()

    def test_antisymmetry(self):
        swapped = QuadricNet.from_forms([SAMPLE.forms[1], SAMPLE.forms[0], SAMPLE.forms[2]])
        a, b = gale_transform(SAMPLE, [0, 0, 0, 1]), gale_transform(swapped, [0, 0, 0, 1])
        assert b.cubics[0] == -a.cubics[0]

    def test_point_off_the_net(self):
        with pytest.raises(PointNotOnQuadric):
            gale_transform(SAMPLE, [1, 0, 0, 0])

    def test_degenerate(self):
        # all three quadrics share the tangent plane x = 0 at the point
        N = QuadricNet.from_forms([Q("x*w + y^2"), Q("x*w + z^2"), Q("x*w + y*z")])
        with pytest.raises(DegenerateGale):
            gale_transform(N, [0, 0, 0, 1])

    def test_cubic_net_validation(self):
        with pytest.raises(DegenerateGale):
            CubicNet((P2("x^3"), P2("2*x^3"), P2("y^3")))
        with pytest.raises(DegenerateGale):
            CubicNet((P2("x^2"), P2("y^3"), P2("z^3")))


class TestVerification:
    def test_typical_net(self):
        N, pts = typical_net(0)
        given = {ProjPoint(q) for q in pts}
        eighth = next(q for q, _m in base_locus(N).points if q not in given)
        _cn, rep = verify_gale(N, eighth)
        assert rep.passed and rep.accounted == 7 and len(rep.projections) == 7

    def test_a4(self):
        _cn, rep = verify_gale(EXAMPLES["A4"].net(), [2, 1, 0, 0])
        assert rep.passed and rep.accounted == 6

    def test_positive_dimensional_base_locus(self):
        N = QuadricNet.from_forms([Q("x*y"), Q("x*z"), Q("y*w + x^2")])
        with pytest.raises(DomainError):
            verify_gale(N, [0, 0, 0, 1])


class TestCubicNetStability:
    def test_e7_with_provenance(self):
        N = EXAMPLES["E7"].net()
        assert cubic_net_stability(gale_transform(N, [0, 0, 0, 1]), discriminant(N)).status == "Unstable"

    def test_typical_with_provenance(self):
        N, pts = typical_net(0)
        assert cubic_net_stability(gale_transform(N, pts[0]), discriminant(N)).status == "Stable"

    def test_certificate_without_provenance(self):
        v = cubic_net_stability([P2("x^3"), P2("x^2*y"), P2("x^2*z")])
        assert v.status == "Unstable" and v.value == -12
        assert v.certificate.lam.weights == (-2, 1, 1)
        assert v.certificate.g == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_never_positive_without_provenance(self):
        N, pts = typical_net(0)
        assert cubic_net_stability(gale_transform(N, pts[0])).status in ("Unstable", "Undecided")

    def test_invalid_provenance(self):
        cn = gale_transform(SAMPLE, [0, 0, 0, 1])
        with pytest.raises(ProvenanceInvalid):
            cubic_net_stability(cn, P2("(x*y - z^2)^2"))
        with pytest.raises(ProvenanceInvalid):
            cubic_net_stability(cn, P2("x^4 - y^4"))
