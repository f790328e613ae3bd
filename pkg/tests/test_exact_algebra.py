from fractions import Fraction

import pytest
import sympy

from netstab.algebra.elimination import resultant, solve_plane, solve_space
from netstab.algebra.factor import (factor_list, factor_univariate_deg_le4, gcd_multivar,
                                    squarefree_decomposition, to_sympy)
from netstab.algebra.field import QuadExt
from netstab.algebra.linalg import det, det_poly_matrix, inverse, kernel, matmul, rank
from netstab.algebra.local import local_algebra_dimension
from netstab.algebra.points import ProjPoint
from netstab.algebra.poly import Poly
from netstab.algebra.univariate import UniPoly
from netstab.errors import DegenerateResultant, NotStabilized, Unsupported
from netstab.parsing import parse_polynomial

LMN = ("l", "m", "n")
XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, gens=XYZ):
    return parse_polynomial(text, gens)


class TestDeterminant:
    def test_zero_column(self):
        l, m, n = Poly.variables(LMN)
        zero = Poly.zero(LMN)
        M = [[l, zero, zero, zero], [zero, m, zero, zero], [zero, zero, n, zero], [zero] * 4]
        assert det_poly_matrix(M).is_zero()

    def test_two_by_two(self):
        l = Poly.var("l", LMN)
        one = Poly.const(1, LMN)
        assert det_poly_matrix([[l, one], [one, l]]) == l * l - one

    def test_displayed_four_by_four(self):
        rows = [["l + 1/4*m", "-l - 1/2*m", "m", "0"],
                ["-l - 1/2*m", "m", "0", "m"],
                ["m", "0", "0", "n"],
                ["0", "m", "n", "0"]]
        M = [[P(e, LMN) for e in row] for row in rows]
        assert det_poly_matrix(M) == P("l^2*n^2 + 2*l*m^2*n + m^4 + m^3*n", LMN)

    def test_against_sympy(self, rng):
        for _ in range(5):
            M = [[rng.randint(-5, 5) for _ in range(5)] for _ in range(5)]
            assert det(M) == sympy.Matrix(M).det()

    def test_rational_helpers(self):
        M = [[2, 1], [1, Fraction(1, 2)]]
        assert det(M) == 0 and rank(M) == 1 and len(kernel(M)) == 1
        N = [[2, 1], [1, 1]]
        assert matmul(N, inverse(N)) == [[1, 0], [0, 1]]


class TestResultant:
    def test_linear_substitution(self):
        assert resultant(P("y^2 - x", XY), P("y - 1", XY), "y") == P("1 - x", XY)

    def test_sylvester_oracle(self):
        r = resultant(P("x^2 + 1", XY), P("x^2 - 1", XY), "x")
        x = sympy.Symbol("x")
        assert r == Poly.const(int(sympy.resultant(x**2 + 1, x**2 - 1, x)), XY) == Poly.const(4, XY)

    def test_common_factor(self):
        h, k = P("x + 2*y", XY), P("x^2 - y + 3", XY)
        d = P("x - y", XY)
        assert resultant(d * h, d * k, "x").is_zero()

    def test_both_constant(self):
        with pytest.raises(DegenerateResultant):
            resultant(P("y", XY), P("y + 1", XY), "x")


class TestGcdAndFactor:
    def test_monomials(self):
        assert gcd_multivar(P("x^2*y", XY), P("x*y^2", XY)) == P("x*y", XY)

    def test_derivative(self):
        F = P("(x*y - z^2)^2")
        g = gcd_multivar(F, F.diff(0))
        assert g.primitive() in (P("x*y - z^2"), -P("x*y - z^2"))

    def test_zero(self):
        f = P("2*x + 4*y", XY)
        g = gcd_multivar(f, Poly.zero(XY))
        assert f.exquo(g).is_constant()

    def test_squarefree(self):
        assert squarefree_decomposition(P("x^2*y", XY)) == [(P("y", XY), 1), (P("x", XY), 2)]
        assert squarefree_decomposition(P("(x*y - z^2)^2")) == [(P("x*y - z^2"), 2)]
        f = P("x^3 + y^3 + z^3")
        assert squarefree_decomposition(f) == [(f, 1)]
        with pytest.raises(ValueError):
            squarefree_decomposition(Poly.zero(XY))

    def test_univariate_factoring(self):
        f = UniPoly([0, 0, 0, 1, 1])  # t^3 (t + 1)
        assert factor_univariate_deg_le4(f) == [(UniPoly([0, 1]), 3), (UniPoly([1, 1]), 1)]
        quartic = UniPoly([1, 0, 0, 0, 1])
        assert factor_univariate_deg_le4(quartic) == [(quartic, 1)]
        assert factor_univariate_deg_le4(UniPoly([-2, 0, 1])) == [(UniPoly([-2, 0, 1]), 1)]
        with pytest.raises(Unsupported):
            factor_univariate_deg_le4(UniPoly([1, 1, 0, 0, 0, 1]))

    def test_multivariate_factoring(self):
        f = P("(x - y)^2*(x^2 + y^2 + z^2)")
        assert factor_list(f) == [(P("x - y"), 2), (P("x^2 + y^2 + z^2"), 1)]


class TestQuadraticField:
    def test_arithmetic(self):
        i = QuadExt.sqrt(-1)
        assert i * i == -1
        assert (1 + i) * (1 - i) == 2
        assert 1 / (1 + i) == (1 - i) / 2

    def test_splitting(self):
        sol = solve_plane([P("x^2 - 2*z^2"), P("x*y")])
        assert sorted(str(p) for p in sol.points) == ["(0:1:0)", "(1:0:-1/2*sqrt(2))", "(1:0:1/2*sqrt(2))"]


class TestLocalAlgebra:
    def test_examples(self):
        x, y = Poly.variables(XY)
        assert local_algebra_dimension([x, y]) == 1
        assert local_algebra_dimension([x * x, y]) == 2

    def test_base_point_of_example_net(self):
        forms = [parse_polynomial(t) for t in
                 ("x0^2 - 2*x0*x1", "1/4*x0^2 - x0*x1 + 2*x0*x2 + x1^2 + 2*x1*x3", "2*x2*x3")]
        local = [f.dehomogenize(2) for f in forms]
        assert local_algebra_dimension(local) == 3

    def test_not_zero_dimensional(self):
        x, y = Poly.variables(XY)
        with pytest.raises(NotStabilized):
            local_algebra_dimension([x * y, x * x], cap=12)

    def test_jacobian_lengths(self):
        for text, mu in (("y^2 + x^5", 4), ("x^2*y + y^3", 4), ("x^3 + y^4", 6), ("x^3 + x*y^3", 7)):
            assert local_algebra_dimension(P(text, XY).gradient()) == mu


class TestSolver:
    def test_plane_points(self):
        sol = solve_plane([P("x*y"), P("x^2 + y^2 - z^2")])
        assert sol.finite and not sol.residual
        assert {str(p) for p in sol.points} == {"(0:1:1)", "(0:1:-1)", "(1:0:1)", "(1:0:-1)"}

    def test_positive_dimensional(self):
        sol = solve_plane([P("x*y"), P("x*z")])
        assert not sol.finite

    def test_residual_cubic_field(self):
        sol = solve_plane([P("x^3 - 2*z^3"), P("y^3")])
        assert sol.finite and not sol.points and sol.residual

    def test_space_points_against_groebner(self):
        forms = [parse_polynomial(t) for t in ("x0*x1", "x2*x3", "x0^2 + x1^2 - x2^2 - x3^2")]
        sol = solve_space(forms)
        assert sol.finite
        for p in sol.points:
            assert all(f.evaluate(p.coords) == 0 for f in forms)
        # eight reduced points: count affine solutions with an oracle in the chart x0 = 1
        gb = sympy.groebner([to_sympy(f.dehomogenize(0)) for f in forms], order="lex")
        assert len(sympy.solve(list(gb), dict=True)) == sum(1 for p in sol.points if p.coords[0])
        assert len(sol.points) == 8


def test_projective_point_normalization():
    p = ProjPoint([0, 2, -4, 6])
    assert str(p) == "(0:1:-2:3)"
    assert p == ProjPoint([0, -1, 2, -3])
