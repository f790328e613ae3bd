"""Built-in example nets with known discriminants, singularities and base loci.

Coordinates (x:y:z:w) are written x0..x3; the discriminant variables l, m, n
weight the generators in order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra.poly import Poly
from .parsing import parse_document, parse_polynomial
from .quadric_nets import QuadricNet


@dataclass(frozen=True)
class Example:
    name: str
    document: str
    discriminant: str  # expected det(l*A1 + m*A2 + n*A3) times ``scale``
    scale: int
    singularities: tuple[str, ...]
    multiplicities: tuple[int, ...]
    verdict: str

    def net(self) -> QuadricNet:
        return QuadricNet.from_forms(parse_document(self.document).polys("P3", 2))

    def expected_discriminant(self) -> Poly:
        return parse_polynomial(self.discriminant, "disc", 4)


def _a5_document(a1) -> str:
    c = Fraction(1, 4) - Fraction(a1)
    return ("Q1 = x0^2 - 2*x0*x1\n"
            "Q2 = 2*x0*x2 + 2*x1*x3\n"
            f"Q3 = {c}*x0^2 - x0*x1 + x1^2 + 2*x2*x3\n")


def a5_example(a1) -> Example:
    a1 = Fraction(a1)
    sing = ("A5", "A1") if a1 == 0 else ("A5",)
    mults = (4, 2, 2) if a1 == 0 else (4, 2, 1, 1)
    return Example(f"A5(a1={a1})", _a5_document(a1),
                   f"l^2*n^2 + 2*l*m^2*n + m^4 + m^2*n^2 + {a1}*n^4", 1,
                   sing, mults, "StrictlySemistable")


EXAMPLES: dict[str, Example] = {
    "A4": Example(
        "A4",
        "Q1 = x0^2 - 2*x0*x1\n"
        "Q2 = 1/4*x0^2 - x0*x1 + 2*x0*x2 + x1^2 + 2*x1*x3\n"
        "Q3 = 2*x2*x3\n",
        "l^2*n^2 + 2*l*m^2*n + m^4 + m^3*n", 1,
        ("A4", "A2"), (3, 2, 2, 1), "StrictlySemistable"),
    "A5_0": a5_example(0),
    "A5_-4": a5_example(-4),
    "A6": Example(
        "A6",
        "Q1 = -2*x0*x1\n"
        "Q2 = -x0^2 + 2*x0*x2 + 2*x1*x3\n"
        "Q3 = x1^2 + 2*x2*x3\n",
        "l^2*n^2 + 2*l*m^2*n + m^4 + m*n^3", 1,
        ("A6",), (4, 3, 1), "StrictlySemistable"),
    "E7": Example(
        "E7",
        "Q1 = x2^2\n"
        "Q2 = x3*(x1 + x0) + x0*x1\n"
        "Q3 = x2*x3 + (x0 + x1)^2\n",
        "m*(4*l*m^2 + n^2*(m + 4*n))", 16,
        ("E7",), (8,), "Unstable"),
}


def random_points(k: int, seed: int, bound: int = 5) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(-bound, bound) for _ in range(4)] for _ in range(k)]


def typical_net(seed: int = 0) -> tuple[QuadricNet, list[list[int]]]:
    """The net of quadrics through seven random integer points, resampled
    until the points impose independent conditions."""
    from .errors import DomainError
    from .quadric_nets import net_through_points

    for attempt in range(100):
        pts = random_points(7, seed * 7919 + attempt)
        if any(all(c == 0 for c in p) for p in pts):
            continue
        try:
            return net_through_points(pts), pts
        except DomainError:
            continue
    raise DomainError("could not sample seven points in general position")
