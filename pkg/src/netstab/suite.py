"""Reproduction checks for the built-in examples, the atlas, and the
Hilbert-Mumford, Segre and projection anchors."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra.points import ProjPoint
from .algebra.poly import Poly
from .atlas import ROWS, enumerate_atlas, instantiate_generic, lambda_catalog, row_triple, verify_atlas_row
from .corpus import EXAMPLES, typical_net
from .errors import DegenerateGale
from .gale import cubic_net_stability, gale_transform, verify_gale
from .hilbert_mumford import pivot_weight_sum
from .plane_curves import decide_quartic_stability
from .quadric_nets import SPACE_VARS, QuadricNet, base_locus, decide_net_stability, discriminant
from .segre import segre_symbol


@dataclass
class Check:
    criterion: int
    name: str
    passed: bool = True
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str):
        self.passed = False
        self.details.append(msg)

    def line(self) -> str:
        return f"criterion {self.criterion} {self.name}: {'PASS' if self.passed else 'FAIL'}"

    def as_dict(self, timings: bool = False) -> dict:
        out = {"criterion": self.criterion, "name": self.name, "passed": self.passed,
               "details": self.details}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(fn: Callable, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def check_discriminants() -> Check:
    c = Check(1, "discriminant exactness")
    for name, ex in EXAMPLES.items():
        D, dt = _timed(discriminant, ex.net())
        if D * ex.scale != ex.expected_discriminant():
            c.fail(f"{name}: got {D}")
        if dt >= 1:
            c.fail(f"{name}: {dt:.2f} s")
    return c


def check_singularities(seed: int = 0) -> Check:
    c = Check(2, "singularity classification")
    for name, ex in EXAMPLES.items():
        v, dt = _timed(decide_quartic_stability, ex.expected_discriminant(), seed)
        got = sorted(str(r.type) for r in v.records)
        if got != sorted(ex.singularities):
            c.fail(f"{name}: got {got}")
        if dt >= 2:
            c.fail(f"{name}: {dt:.2f} s")
    return c


def check_base_loci(seed: int = 0) -> Check:
    c = Check(3, "base loci")
    for name, ex in EXAMPLES.items():
        rep, dt = _timed(base_locus, ex.net(), seed)
        if not rep.finite or rep.residual:
            c.fail(f"{name}: base locus not fully resolved")
        if rep.multiplicities() != sorted(ex.multiplicities, reverse=True):
            c.fail(f"{name}: got {rep.multiplicities()}")
        if rep.accounted_length != 8:
            c.fail(f"{name}: total {rep.accounted_length}")
        if dt >= 5:
            c.fail(f"{name}: {dt:.2f} s")
    return c


def check_verdicts(seed: int = 0) -> Check:
    c = Check(4, "stability verdicts")
    for name, ex in EXAMPLES.items():
        v = decide_net_stability(ex.net(), seed)
        if v.status.value != ex.verdict:
            c.fail(f"{name}: got {v.status.value}")
    net, _pts = typical_net(seed)
    v = decide_net_stability(net, seed)
    if v.status.value != "Stable":
        c.fail(f"typical net: got {v.status.value}")
    return c


def check_atlas(trials: int = 20, seed: int = 0) -> Check:
    c = Check(5, "atlas reproduction")
    t = time.perf_counter()
    rep = enumerate_atlas()
    if rep.named_found != len(ROWS):
        c.fail(f"only {rep.named_found} named triples recovered")
    if rep.discrepancies:
        c.fail(f"{len(rep.discrepancies)} unmatched triples")
    for row in ROWS:
        rr = verify_atlas_row(row, trials=trials, seed=seed, check_segre=False)
        if not rr.passed:
            c.fail(f"row {row}: {len(rr.failures)} of {trials} instances failed")
    c.seconds = time.perf_counter() - t
    if c.seconds >= 120:
        c.fail(f"{c.seconds:.1f} s")
    return c


def check_hm_anchor(seed: int = 0) -> Check:
    c = Check(6, "Hilbert-Mumford anchor")
    net = instantiate_generic(row_triple(1), seed)
    value = pivot_weight_sum(net.forms, lambda_catalog()["l1"])
    if value != -6:
        c.fail(f"got {value}")
    return c


def _subpencil(row: int, i: int, j: int, seed: int) -> tuple:
    M = instantiate_generic(row_triple(row), seed).matrices
    return M[i], M[j]


def _random_quadric(rng: random.Random) -> Poly:
    from .algebra.poly import monomials_of_degree
    return Poly({e: rng.randint(-9, 9) for e in monomials_of_degree(4, 2)}, SPACE_VARS)


def check_segre_anchors(seed: int = 0) -> Check:
    c = Check(7, "Segre anchors")
    x = Poly.variables(SPACE_VARS)
    rng = random.Random(seed)
    cases = [
        ("double plane + smooth", (x[0] ** 2, sum((v * v for v in x), Poly.zero(SPACE_VARS))),
         "[(1,1,1),1]"),
        ("generic", (_random_quadric(rng), _random_quadric(rng)), "[1,1,1,1]"),
        ("smooth + plane pair (one A3 point)", _subpencil(12, 0, 2, seed), "[(2,1),1]"),
        ("two tangent quadrics (two A1 points)", _subpencil(7, 0, 2, seed), "[2,2]"),
        ("smooth + cone (two A1 points)", _subpencil(5, 0, 2, seed), "[(1,1),1,1]"),
    ]
    for label, (A, B), want in cases:
        got = segre_symbol(A, B)
        if got != want:
            c.fail(f"{label}: got {got}, expected {want}")
    return c


def random_pointed_net(rng: random.Random) -> tuple[QuadricNet, list[int]]:
    """Three random quadrics through a random integer point."""
    while True:
        p = [rng.randint(-3, 3) for _ in range(4)]
        if any(p):
            break
    forms = []
    for _ in range(3):
        Q = _random_quadric(rng)
        # subtract Q(p) times a quadric equal to 1 at p
        k = max(range(4), key=lambda i: abs(p[i]))
        Q = Q - Poly.var(SPACE_VARS[k], SPACE_VARS) ** 2 * Q.evaluate(p) / (p[k] * p[k])
        forms.append(Q)
    return QuadricNet.from_forms(forms), p


def check_gale(seed: int = 0, pointed: int = 100, typical: int = 10) -> Check:
    c = Check(8, "Gale suite")
    rng = random.Random(seed)
    done = 0
    while done < pointed:
        try:
            net, p = random_pointed_net(rng)
            cn = gale_transform(net, p)
        except DegenerateGale:
            continue
        done += 1
        if not cn.syzygy().is_zero():
            c.fail(f"syzygy fails at {p}")
    for k in range(typical):
        net, pts = typical_net(seed + k)
        given = {ProjPoint(q) for q in pts}
        others = [q for q, _m in base_locus(net, seed).points if q not in given]
        _cn, rep = verify_gale(net, others[0] if others else pts[0], seed)
        if not rep.passed or rep.accounted != 7:
            c.fail(f"typical net {k}: projection check failed")
    e7 = EXAMPLES["E7"].net()
    v = cubic_net_stability(gale_transform(e7, [0, 0, 0, 1]), discriminant(e7), seed)
    if v.status != "Unstable":
        c.fail(f"E7 projection: got {v.status}")
    net, pts = typical_net(seed)
    v = cubic_net_stability(gale_transform(net, pts[0]), discriminant(net), seed)
    if v.status != "Stable":
        c.fail(f"typical projection: got {v.status}")
    return c


def run_all(seed: int = 0, trials: int = 20) -> list[Check]:
    steps = [
        lambda: check_discriminants(),
        lambda: check_singularities(seed),
        lambda: check_base_loci(seed),
        lambda: check_verdicts(seed),
        lambda: check_atlas(trials, seed),
        lambda: check_hm_anchor(seed),
        lambda: check_segre_anchors(seed),
        lambda: check_gale(seed),
    ]
    out = []
    for step in steps:
        chk, dt = _timed(step)
        chk.seconds = chk.seconds or dt
        out.append(chk)
    return out
