from fractions import Fraction

import pytest
import sympy

from netstab.algebra.points import ProjPoint
from netstab.corpus import EXAMPLES, a5_example, typical_net
from netstab.errors import DomainError, SingularMatrix
from netstab.parsing import parse_polynomial
from netstab.plane_curves import Status
from netstab.quadric_nets import (QuadricNet, base_locus, decide_net_stability, discriminant,
                                  is_good_net, net_congruence_transform, net_through_points, quadric_rank)


def Q(text):
    return parse_polynomial(text, "P3", 2)


def net(*texts):
    return QuadricNet.from_forms([Q(t) for t in texts])


def D(text):
    return parse_polynomial(text, "disc")


def diag(*d):
    return [[d[i] if i == j else 0 for j in range(4)] for i in range(4)]


def points(report):
    return {str(p): m for p, m in report.points}


class TestDiscriminant:
    def test_a4(self):
        assert discriminant(EXAMPLES["A4"].net()) == D("l^2*n^2 + 2*l*m^2*n + m^4 + m^3*n")

    def test_e7_up_to_factor_sixteen(self):
        assert discriminant(EXAMPLES["E7"].net()) == D("m*(4*l*m^2 + n^2*(m + 4*n))") * Fraction(1, 16)

    def test_diagonal(self):
        N = QuadricNet([diag(1, 1, 0, 0), diag(0, 0, 1, 1), diag(1, 0, 1, 0)])
        assert discriminant(N) == D("l*m*(l + n)*(m + n)")

    def test_against_sympy_determinant(self):
        N = EXAMPLES["A6"].net()
        l, m, n = sympy.symbols("l m n")
        M = sympy.zeros(4, 4)
        for v, A in zip((l, m, n), N.matrices):
            M += v * sympy.Matrix(4, 4, lambda i, j: sympy.Rational(A[i][j].numerator, A[i][j].denominator)
                                  if isinstance(A[i][j], Fraction) else A[i][j])
        assert sympy.expand(M.det() - sympy.sympify(str(discriminant(N)).replace("^", "**"))) == 0


class TestRank:
    @pytest.mark.parametrize("text,r", [("x0^2", 1), ("x0*x1", 2), ("x0*x3 + x1*x2", 4)])
    def test_examples(self, text, r):
        assert quadric_rank(Q(text)) == r

    def test_zero(self):
        with pytest.raises(DomainError):
            quadric_rank(diag(0, 0, 0, 0))


class TestBaseLocus:
    def test_a4(self):
        rep = base_locus(EXAMPLES["A4"].net())
        assert points(rep) == {"(0:0:1:0)": 3, "(0:0:0:1)": 2, "(0:1:0:-1/2)": 1, "(1:1/2:0:0)": 2}

    def test_e7(self):
        assert points(base_locus(EXAMPLES["E7"].net())) == {"(0:0:0:1)": 8}

    def test_a6(self):
        # local lengths computed here: 4 at (0:0:1:0) and 3 at (0:0:0:1)
        rep = base_locus(EXAMPLES["A6"].net())
        assert points(rep) == {"(0:0:1:0)": 4, "(0:0:0:1)": 3, "(1:0:1/2:0)": 1}
        assert rep.multiplicities() == [4, 3, 1]

    def test_a5_specializations(self):
        assert points(base_locus(a5_example(0).net())) == {"(0:0:1:0)": 4, "(0:0:0:1)": 2, "(1:1/2:0:0)": 2}
        rep = base_locus(a5_example(-4).net())
        assert points(rep) == {"(0:0:1:0)": 4, "(0:0:0:1)": 2, "(1:1/2:1:-2)": 1, "(1:1/2:-1:2)": 1}

    def test_a5_quadratic_points(self):
        rep = base_locus(a5_example(1).net())
        assert rep.accounted_length == 8 and not rep.residual
        assert sorted(p.field() or 0 for p, _m in rep.points) == [-1, -1, 0, 0]

    def test_positive_dimensional(self):
        rep = base_locus(net("x0*x1", "x0*x2", "x0*x3"))
        assert not rep.finite


class TestGoodAndStability:
    def test_e7_good(self):
        assert is_good_net(EXAMPLES["E7"].net())

    def test_zero_discriminant(self):
        assert not is_good_net(net("x0^2", "x1^2", "x2^2"))

    def test_common_singular_base_point(self):
        N = net("x0^2", "x1^2 + x2^2", "x0*x3 + x1*x2")
        n = parse_polynomial("n", "disc")
        assert (n * n).divides(discriminant(N))
        assert not is_good_net(N)

    def test_verdicts(self):
        assert decide_net_stability(EXAMPLES["E7"].net()).status is Status.UNSTABLE
        assert decide_net_stability(EXAMPLES["A4"].net()).status is Status.STRICTLY_SEMISTABLE
        N, _pts = typical_net(0)
        assert decide_net_stability(N).status is Status.STABLE


class TestCongruence:
    def test_identity(self):
        N = EXAMPLES["A4"].net()
        assert net_congruence_transform(N, diag(1, 1, 1, 1)) == N

    def test_permutation(self):
        N = net("x0^2", "x1*x2", "x3^2 + x0*x1")
        swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        assert net_congruence_transform(N, swap).forms[0] == Q("x1^2")

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            net_congruence_transform(EXAMPLES["A4"].net(), diag(1, 1, 1, 0))


class TestConstruction:
    def test_through_points(self):
        N, pts = typical_net(0)
        for p in pts:
            assert all(f.evaluate(p) == 0 for f in N.forms)
        rep = base_locus(N)
        assert rep.accounted_length == 8 and all(m == 1 for _p, m in rep.points)
        assert {ProjPoint(p) for p in pts} <= {p for p, _m in rep.points}

    def test_dependent_points(self):
        coplanar = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [1, 2, 0, 0], [1, 3, 0, 0], [2, 1, 0, 0], [3, 1, 0, 0]]
        with pytest.raises(DomainError):
            net_through_points(coplanar)

    def test_dependent_generators(self):
        with pytest.raises(DomainError):
            net("x0^2", "2*x0^2", "x1^2")
