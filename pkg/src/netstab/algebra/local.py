"""Dimensions of local algebras at the origin of an affine chart."""

from __future__ import annotations

from typing import Sequence

from ..errors import NotStabilized
from .linalg import SparseEliminator
from .poly import Poly, grlex_key, monomials_below


def truncated_dimensions(generators: Sequence[Poly], top: int) -> list[int]:
    """d_k = dim R/(I + m^k) for k = 0..top.

    One echelon pass over the rows x^a*g (truncated below degree ``top``) with
    pivots on the lowest monomial: the image of I in R/m^k is spanned by the
    echelon rows whose pivot has degree < k.
    """
    nv = generators[0].nvars
    gens = [g for g in generators if not g.is_zero()]
    if any(g.constant_term() for g in gens):
        return [0] * (top + 1)
    monos = sorted(monomials_below(nv, top), key=grlex_key)
    cols = {e: i for i, e in enumerate(monos)}
    elim = SparseEliminator()
    for g in gens:
        g = g.truncate(top)
        o = g.order()
        if o < 0:
            continue
        for a in monomials_below(nv, top - o):
            row = {}
            for e, c in g.terms.items():
                s = tuple(x + y for x, y in zip(a, e))
                if sum(s) < top:
                    row[cols[s]] = c
            if row:
                elim.add(row)
    per_degree = [0] * top
    for e in monos:
        per_degree[sum(e)] += 1
    for col in elim.pivots:
        per_degree[sum(monos[col])] -= 1
    out = [0]
    for k in range(top):
        out.append(out[-1] + per_degree[k])
    return out


def local_algebra_dimension(generators: Sequence[Poly], cap: int = 16) -> int:
    """Length of the local algebra of the ideal at the origin.

    Stops at the first k with d_k = d_{k+1}: then m^k lies in I + m^{k+1}, so
    m^k lies in I by Nakayama and d_k is the exact length.  Raises
    NotStabilized when no agreement occurs within ``cap``.
    """
    if not generators:
        raise ValueError("no generators")
    top = min(6, cap)
    while True:
        d = truncated_dimensions(generators, top)
        for k in range(top):
            if d[k] == d[k + 1]:
                return d[k]
        if top >= cap:
            raise NotStabilized(f"local algebra did not stabilize below degree {cap}")
        top = min(cap, top * 2)
