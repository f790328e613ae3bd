import random

from hypothesis import given, settings, strategies as st

from netstab.algebra.elimination import resultant
from netstab.algebra.factor import factor_rational_univariate, gcd_list, squarefree_decomposition
from netstab.algebra.linalg import det_poly_matrix
from netstab.algebra.local import local_algebra_dimension
from netstab.algebra.poly import Poly
from netstab.algebra.univariate import UniPoly, rational_roots

from ..helpers import random_form

LMN = ("l", "m", "n")
seeds = st.integers(0, 2**32 - 1)


def cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    total = Poly.zero(M[0][0].gens)
    for j in range(len(M)):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


@settings(max_examples=50)
@given(seeds, st.sampled_from([3, 4]))
def test_bareiss_matches_cofactor_expansion(seed, n):
    rng = random.Random(seed)
    M = [[random_form(rng, LMN, 1, bound=4, density=0.7) for _ in range(n)] for _ in range(n)]
    assert det_poly_matrix(M) == cofactor_det(M)


def _uni(rng, lo=1, hi=3):
    deg = rng.randint(lo, hi)
    c = [rng.randint(-6, 6) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return UniPoly(c).to_poly(("t",))


@settings(max_examples=50)
@given(seeds)
def test_resultant_is_multiplicative(seed):
    rng = random.Random(seed)
    f, g, h = _uni(rng), _uni(rng), _uni(rng)
    assert resultant(f * g, h, "t") == resultant(f, h, "t") * resultant(g, h, "t")


@settings(max_examples=30)
@given(seeds)
def test_squarefree_reconstruction(seed):
    rng = random.Random(seed)
    gens = ("x", "y", "z")
    f = Poly.const(1, gens)
    for _ in range(rng.randint(1, 3)):
        f = f * random_form(rng, gens, rng.randint(1, 2), bound=3, density=0.6) ** rng.randint(1, 3)
    if f.is_zero() or f.is_constant():
        return
    parts = squarefree_decomposition(f)
    prod = Poly.const(1, gens)
    for q, m in parts:
        prod = prod * q ** m
        # squarefree: no common factor with all of its partial derivatives
        assert gcd_list([q] + q.gradient()).is_constant()
    assert f.exquo(prod).is_constant()


@settings(max_examples=30)
@given(seeds)
def test_factorization_reconstruction(seed):
    rng = random.Random(seed)
    f = UniPoly([1])
    for _ in range(rng.randint(1, 3)):
        u = UniPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1])
        f = f * u
    if f.degree < 1:
        return
    prod = UniPoly([1])
    for q, m in factor_rational_univariate(f):
        for _ in range(m):
            prod = prod * q
        if q.degree >= 2:
            assert not rational_roots(q)
    assert (f.monic() - prod.monic()).is_zero()


@settings(max_examples=30)
@given(seeds)
def test_local_length_drops_when_adding_generators(seed):
    rng = random.Random(seed)
    gens = ("x", "y")
    x, y = Poly.variables(gens)

    def tail():
        # terms above the leading powers keep the ideal zero-dimensional at the origin
        return random_form(rng, gens, 4, bound=3, density=0.5) + random_form(rng, gens, 5, bound=3, density=0.5)

    ideal = [x ** rng.randint(1, 3) + tail(), y ** rng.randint(1, 3) + tail()]
    extra = random_form(rng, gens, rng.randint(1, 3), bound=3, density=0.6)
    before = local_algebra_dimension(ideal, cap=24)
    after = local_algebra_dimension(ideal + [extra], cap=24)
    assert after <= before
