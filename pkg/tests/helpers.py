import random

from netstab.algebra.poly import Poly, monomials_of_degree


def random_form(rng: random.Random, gens, degree: int, bound: int = 9, density: float = 1.0) -> Poly:
    terms = {e: rng.randint(-bound, bound) for e in monomials_of_degree(len(gens), degree)
             if rng.random() < density}
    return Poly(terms, gens)


def random_unimodular(rng: random.Random, n: int, bound: int = 3):
    """Product of random elementary matrices (integer, determinant 1)."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-bound, bound)
        for r in range(n):
            M[r][j] += c * M[r][i]
    return M
