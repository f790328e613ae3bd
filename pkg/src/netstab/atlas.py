"""Maximal destabilizing support triples for nets of quadrics in P^3 and the
twelve families of unstable nets they describe."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from .algebra.factor import factor_list
from .algebra.points import ProjPoint
from .algebra.poly import Poly, monomials_of_degree
from .errors import Degenerate, DomainError, NoSmoothMember
from .hilbert_mumford import OneParamSubgroup, monomial_weight, pivot_weight_sum
from .plane_curves import Status, decide_quartic_stability, double_smooth_conic_test, multiplicity_at
from .quadric_nets import DISC_VARS, SPACE_VARS, QuadricNet, discriminant
from .segre import segre_symbol

XI2 = tuple(sorted(monomials_of_degree(4, 2), reverse=True))

_BASE = [
    (21, 17, 5, -43), (9, 1, -3, -7), (13, -3, -3, -7), (5, 4, -3, -6), (29, 21, -11, -39),
    (25, 9, -15, -19), (31, 19, -9, -41), (4, 3, 1, -8), (5, 1, -3, -3),
]


def lambda_catalog() -> dict[str, OneParamSubgroup]:
    """lambda_1..lambda_9 and their bars, keyed 'l1'..'l9', 'lb1'..'lb9'."""
    out = {}
    for k, r in enumerate(_BASE, 1):
        lam = OneParamSubgroup(r)
        out[f"l{k}"] = lam
        out[f"lb{k}"] = lam.bar()
    return out


def exponent(text: str) -> tuple[int, ...]:
    """'1001' -> (1, 0, 0, 1)."""
    return tuple(int(c) for c in text)


def monomial_name(K) -> str:
    return "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(K) if k)


@dataclass(frozen=True)
class MaximalTriple:
    lam: OneParamSubgroup
    I: tuple
    J: tuple
    A: frozenset
    B: frozenset
    C: frozenset
    maximal: bool
    ties: tuple = ()

    def sets(self) -> tuple[frozenset, frozenset, frozenset]:
        return self.A, self.B, self.C

    def key(self) -> tuple:
        """Canonical form up to permutation of the three factors."""
        return tuple(sorted(tuple(sorted(s, reverse=True)) for s in self.sets()))

    def all_sums_negative(self) -> bool:
        if not (self.A and self.B and self.C):
            return False
        w = lambda S: max(monomial_weight(K, self.lam) for K in S)  # noqa: E731
        return w(self.A) + w(self.B) + w(self.C) < 0

    def contained_in(self, other: "MaximalTriple") -> bool:
        return any(all(a <= b for a, b in zip(self.sets(), p)) for p in permutations(other.sets()))

    def as_dict(self) -> dict:
        return {"lambda": list(self.lam.weights), "I": monomial_name(self.I),
                "J": monomial_name(self.J),
                "A": sorted(map(monomial_name, self.A)), "B": sorted(map(monomial_name, self.B)),
                "C": sorted(map(monomial_name, self.C)), "maximal": self.maximal,
                "ties": [monomial_name(t) for t in self.ties]}


def maximal_set(lam, I, J) -> MaximalTriple:
    lam = lam if isinstance(lam, OneParamSubgroup) else OneParamSubgroup(lam)
    w = {K: monomial_weight(K, lam) for K in XI2}
    wI, wJ = w[tuple(I)], w[tuple(J)]
    A = frozenset(K for K in XI2 if w[K] < -wI - wJ)
    B = frozenset(K for K in XI2 if w[K] <= wI)
    C = frozenset(K for K in XI2 if w[K] <= wJ)
    maximal = bool(A)
    if A:
        maxA = max(w[K] for K in A)
        # A is tight by construction; enlarging B or C by the next weight must fail
        for own, other in ((wI, wJ), (wJ, wI)):
            above = [w[K] for K in XI2 if w[K] > own]
            if above and maxA + min(above) + other < 0:
                maximal = False
    ties = tuple(sorted(K for K in XI2 if (w[K] == wI and K != tuple(I)) or (w[K] == wJ and K != tuple(J))))
    return MaximalTriple(lam, tuple(I), tuple(J), A, B, C, maximal, ties)


# Named families: (catalog key, I, J).
ROWS = {
    1: ("l1", "2000", "2000"),
    2: ("l1", "1001", "2000"),
    3: ("l2", "0101", "1001"),
    4: ("l3", "0200", "1100"),
    5: ("l4", "0020", "2000"),
    6: ("l5", "0011", "1001"),
    7: ("l5", "1001", "1010"),
    8: ("lb2", "1001", "1010"),
    9: ("l6", "1010", "1010"),
    10: ("l7", "1001", "0020"),
    11: ("l8", "0101", "0101"),
    12: ("l9", "0200", "1010"),
}


def row_triple(row: int) -> MaximalTriple:
    key, I, J = ROWS[row]
    return maximal_set(lambda_catalog()[key], exponent(I), exponent(J))


@dataclass
class AtlasReport:
    rows: list[dict] = field(default_factory=list)
    enumerated: int = 0
    subsumed: list[dict] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)

    @property
    def named_found(self) -> int:
        return sum(1 for r in self.rows if r["enumerated"] or r["contained_in"])

    def as_dict(self) -> dict:
        return {"rows": self.rows, "enumerated_maximal_triples": self.enumerated,
                "subsumed": self.subsumed, "discrepancies": self.discrepancies}


def enumerate_triples() -> dict[tuple, list[tuple[str, MaximalTriple]]]:
    """All single-step maximal triples over the catalog, grouped by canonical key."""
    out: dict[tuple, list[tuple[str, MaximalTriple]]] = {}
    for name, lam in lambda_catalog().items():
        for I in XI2:
            for J in XI2:
                t = maximal_set(lam, I, J)
                if t.maximal:
                    out.setdefault(t.key(), []).append((name, t))
    return dict(sorted(out.items()))


def enumerate_atlas() -> AtlasReport:
    """Match every enumerated maximal triple against the named families.

    A triple counts as matched when it is contained, factor by factor and up
    to permutation of the factors, in a named triple.
    """
    found = enumerate_triples()
    named = {r: row_triple(r) for r in ROWS}
    report = AtlasReport(enumerated=len(found))
    for r, t in named.items():
        containers = [s for s, u in named.items() if s != r and t.contained_in(u)]
        report.rows.append({"row": r, "source": ROWS[r][0], "triple": t.as_dict(),
                            "sizes": [len(t.A), len(t.B), len(t.C)],
                            "enumerated": t.key() in found,
                            "contained_in": containers})
    for key, sources in found.items():
        t = sources[0][1]
        if any(t.key() == u.key() for u in named.values()):
            continue
        rows = [r for r, u in named.items() if t.contained_in(u)]
        entry = {"source": sources[0][0], "I": monomial_name(t.I), "J": monomial_name(t.J),
                 "sizes": [len(t.A), len(t.B), len(t.C)], "contained_in": rows}
        (report.subsumed if rows else report.discrepancies).append(entry)
    return report


def _form(S, rng: random.Random) -> Poly:
    return Poly({K: rng.choice([c for c in range(-20, 21) if c]) for K in S}, SPACE_VARS)


def instantiate_generic(triple: MaximalTriple, seed: int = 0, attempts: int = 3) -> QuadricNet:
    """Random net with Q1, Q2, Q3 supported on C, B, A (coefficients in +-1..+-20)."""
    rng = random.Random(seed)
    for _ in range(attempts):
        try:
            return QuadricNet.from_forms([_form(triple.C, rng), _form(triple.B, rng),
                                          _form(triple.A, rng)])
        except DomainError:
            continue
    raise Degenerate("sampled generators never span a net")


# -- discriminant shapes (variables l, m, n of the discriminant plane) -------

L_, M_, N_ = range(3)


def _support(D: Poly) -> set:
    return set(D.terms)


def _shape_low_in(var: int) -> Callable[[Poly], bool]:
    """g4(x,y) + z*g3(x,y) with z = var: multiplicity >= 3 at the z-vertex."""
    def check(D: Poly) -> bool:
        if D.is_zero() or any(e[var] >= 2 for e in D.terms):
            return False
        p = [0, 0, 0]
        p[var] = 1
        return multiplicity_at(D, ProjPoint(p)) >= 3
    return check


def _shape_square_times_conic(var: int) -> Callable[[Poly], bool]:
    """x^2 * g2 with x = var, not a double conic."""
    def check(D: Poly) -> bool:
        x = Poly.var(DISC_VARS[var], DISC_VARS)
        return not D.is_zero() and (x * x).divides(D) and not double_smooth_conic_test(D)
    return check


def _shape_repeated_linear(allowed: tuple[int, ...]) -> Callable[[Poly], bool]:
    """g1^2 * g2 with g1 a linear form in the allowed variables only."""
    def check(D: Poly) -> bool:
        if D.is_zero():
            return False
        return any(m >= 2 and q.degree() == 1
                   and all(e[i] == 0 for e in q.terms for i in range(3) if i not in allowed)
                   for q, m in factor_list(D))
    return check


def _shape_row6(D: Poly) -> bool:
    """x*(x*g2(x,y,z) + z^3) with x = n, y = m, z = l."""
    x = Poly.var("n", DISC_VARS)
    if D.is_zero() or not x.divides(D):
        return False
    cof = D.exquo(x)
    free = [e for e in cof.terms if e[N_] == 0]
    return free == [(3, 0, 0)]


_ROW8 = {(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (1, 1, 1), (2, 0, 1), (1, 0, 2)}


def _shape_row8(D: Poly) -> bool:
    """x*(g3(x,y) + x*y*z + a*z*x^2 + b*z^2*x) with x = l, y = m, z = n."""
    x = Poly.var("l", DISC_VARS)
    if D.is_zero() or not x.divides(D):
        return False
    return _support(D.exquo(x)) <= _ROW8


def _shape_row9(D: Poly) -> bool:
    """g4(x,y) + x*z*g2(x,y) with x = l, y = m, z = n."""
    if D.is_zero():
        return False
    return all(e[N_] == 0 or (e[N_] == 1 and e[L_] >= 1) for e in D.terms)


SHAPES: dict[int, tuple[str, Callable[[Poly], bool]]] = {
    1: ("g4(l,m) + n*g3(l,m)", _shape_low_in(N_)),
    2: ("l^2*g2 (not double conic)", _shape_square_times_conic(L_)),
    3: ("g1(l,n)^2*g2", _shape_repeated_linear((L_, N_))),
    4: ("l^2*g2 (not double conic)", _shape_square_times_conic(L_)),
    5: ("l^2*g2 (not double conic)", _shape_square_times_conic(L_)),
    6: ("n*(n*g2 + l^3)", _shape_row6),
    7: ("l^2*g1^2", _shape_repeated_linear((L_,))),
    8: ("l*(g3(l,m) + l*m*n + a*n*l^2 + b*n^2*l)", _shape_row8),
    9: ("g4(l,m) + l*n*g2(l,m)", _shape_row9),
    10: ("n^2*g1^2", _shape_repeated_linear((N_,))),
    11: ("n^2*g2 (not double conic)", _shape_square_times_conic(N_)),
    12: ("g4(l,m) + n*g3(l,m)", _shape_low_in(N_)),
}

# Segre symbols expected among the three subpencils <Qi, Qj>.
EXPECTED_SEGRE: dict[int, list[str]] = {
    1: ["[(1,1,1),1]", "[(1,1,1),1]"],
    5: ["[(1,1),1,1]", "[(1,1),1,1]"],
    6: ["[(1,1),1,1]"],
    7: ["[2,2]", "[2,2]"],
    8: ["[(1,1),1,1]"],
    9: ["[(2,2)]", "[(2,1),1]"],
    10: ["[2,2]", "[2,2]"],
    11: ["[(1,1),1,1]", "[(1,1),1,1]"],
    12: ["[(2,1),1]", "[(2,1),1]"],
}


def subpencil_symbols(net: QuadricNet) -> dict[str, str | None]:
    out = {}
    M = net.matrices
    for i, j in ((0, 1), (0, 2), (1, 2)):
        try:
            out[f"Q{i + 1}Q{j + 1}"] = str(segre_symbol(M[i], M[j]))
        except NoSmoothMember:
            out[f"Q{i + 1}Q{j + 1}"] = None
    return out


def _contains_multiset(have: list, want: list) -> bool:
    pool = list(have)
    for w in want:
        if w not in pool:
            return False
        pool.remove(w)
    return True


@dataclass
class RowReport:
    """Per-row verification: ``failures`` covers destabilization, discriminant
    shape and verdict; ``segre_mismatches`` lists instances whose subpencil
    symbols do not contain the stated ones."""

    row: int
    trials: int
    seed: int
    failures: list[dict] = field(default_factory=list)
    segre_mismatches: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def segre_passed(self) -> bool:
        return not self.segre_mismatches

    def as_dict(self) -> dict:
        return {"row": self.row, "trials": self.trials, "seed": self.seed,
                "passed": self.passed, "failures": self.failures,
                "segre_expected": EXPECTED_SEGRE.get(self.row, []),
                "segre_passed": self.segre_passed, "segre_mismatches": self.segre_mismatches}


def instance_seed(seed: int, row: int, trial: int) -> int:
    return seed * 1_000_003 + row * 1009 + trial


def check_instance(row: int, net: QuadricNet, check_segre: bool = True) -> dict:
    """Destabilization, discriminant shape, verdict and Segre data of one instance."""
    key, _I, _J = ROWS[row]
    lam = lambda_catalog()[key]
    value = pivot_weight_sum(net.forms, lam)
    D = discriminant(net)
    shape_name, shape = SHAPES[row]
    verdict = decide_quartic_stability(D)
    out = {"hm_value": value, "destabilized": value < 0, "shape": shape_name,
           "shape_ok": shape(D), "verdict": verdict.status.value,
           "unstable": verdict.status is Status.UNSTABLE, "discriminant": str(D)}
    if check_segre and row in EXPECTED_SEGRE:
        symbols = subpencil_symbols(net)
        out["segre"] = symbols
        out["segre_ok"] = _contains_multiset([s for s in symbols.values() if s], EXPECTED_SEGRE[row])
    return out


def verify_atlas_row(row: int, trials: int = 20, seed: int = 0, check_segre: bool = True) -> RowReport:
    if row not in ROWS:
        raise DomainError(f"row must be 1..12, got {row}")
    triple = row_triple(row)
    report = RowReport(row, trials, seed)
    for k in range(trials):
        s = instance_seed(seed, row, k)
        net = instantiate_generic(triple, s)
        res = check_instance(row, net, check_segre)
        res["seed"] = s
        res["generators"] = [str(f) for f in net.forms]
        if not (res["destabilized"] and res["shape_ok"] and res["unstable"]):
            report.failures.append(res)
        if not res.get("segre_ok", True):
            report.segre_mismatches.append(res)
    return report
