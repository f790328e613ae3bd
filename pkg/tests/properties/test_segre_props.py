import random

from hypothesis import given, settings, strategies as st

from netstab.algebra.linalg import det
from netstab.errors import DomainError
from netstab.segre import _pencil_matrix, invariant_factors, segre_symbol

seeds = st.integers(0, 2**32 - 1)


def _sym(rng, rank_cap=4, bound=3):
    """Random symmetric integer matrix, often of low rank (sum of squares of linear forms)."""
    A = [[0] * 4 for _ in range(4)]
    for _ in range(rng.randint(1, rank_cap)):
        v = [rng.randint(-bound, bound) for _ in range(4)]
        c = rng.choice([-2, -1, 1, 2])
        for i in range(4):
            for j in range(4):
                A[i][j] += c * v[i] * v[j]
    return A


def _pencil(rng):
    while True:
        A, B = _sym(rng, rng.randint(1, 4)), _sym(rng)
        try:
            return A, B, segre_symbol(A, B)
        except DomainError:
            continue


def _congruent(A, g):
    return [[sum(g[k][i] * A[k][l] * g[l][j] for k in range(4) for l in range(4)) for j in range(4)]
            for i in range(4)]


def _invertible(rng):
    while True:
        g = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
        if det(g):
            return g


@settings(max_examples=20)
@given(seeds)
def test_invariant_factors_divide_successively(seed):
    A, B, _s = _pencil(random.Random(seed))
    s = invariant_factors(_pencil_matrix(A, B))
    for a, b in zip(s, s[1:]):
        assert (b % a).is_zero()


@settings(max_examples=20)
@given(seeds)
def test_weight_is_four(seed):
    assert _pencil(random.Random(seed))[2].weight == 4


@settings(max_examples=10)
@given(seeds)
def test_symbol_is_invariant(seed):
    rng = random.Random(seed)
    A, B, s = _pencil(rng)
    g = _invertible(rng)
    assert segre_symbol(_congruent(A, g), _congruent(B, g)) == s
    assert segre_symbol(B, A) == s
    a, b = rng.choice([1, 2, -3]), rng.choice([1, -1, 5])
    C = [[a * A[i][j] + b * B[i][j] for j in range(4)] for i in range(4)]
    assert segre_symbol(C, B) == s
