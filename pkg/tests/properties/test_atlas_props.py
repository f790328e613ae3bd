import random

from hypothesis import given, settings, strategies as st

from netstab import atlas
from netstab.atlas import (ROWS, XI2, check_instance, enumerate_atlas, enumerate_triples, instance_seed,
                           instantiate_generic, row_triple)
from netstab.hilbert_mumford import monomial_weight

seeds = st.integers(0, 2**32 - 1)
TRIPLES = [t for group in enumerate_triples().values() for _name, t in group]


def _sum_negative(lam, sets):
    return all(sets) and sum(max(monomial_weight(K, lam) for K in S) for S in sets) < 0


def test_enumerated_triples_are_maximal():
    for t in TRIPLES:
        assert t.maximal and t.all_sums_negative()
        sets = list(t.sets())
        for i, S in enumerate(sets):
            for K in XI2:
                if K not in S:
                    assert not _sum_negative(t.lam, sets[:i] + [S | {K}] + sets[i + 1:]), t.as_dict()


def test_enumeration_ignores_catalog_order(monkeypatch):
    forward = enumerate_atlas().as_dict()
    catalog = atlas.lambda_catalog()
    monkeypatch.setattr(atlas, "lambda_catalog", lambda: dict(reversed(list(catalog.items()))))
    backward = enumerate_atlas().as_dict()
    assert [r["triple"] for r in backward["rows"]] == [r["triple"] for r in forward["rows"]]
    assert backward["enumerated_maximal_triples"] == forward["enumerated_maximal_triples"]
    assert len(backward["subsumed"]) == len(forward["subsumed"])
    assert backward["discrepancies"] == forward["discrepancies"] == []


@settings(max_examples=24)
@given(seeds, st.sampled_from(sorted(ROWS)))
def test_generic_instances_are_destabilized_and_unstable(seed, row):
    rng = random.Random(seed)
    net = instantiate_generic(row_triple(row), instance_seed(rng.randrange(10**6), row, 0))
    res = check_instance(row, net, check_segre=False)
    assert res["destabilized"] and res["hm_value"] < 0
    assert res["unstable"] and res["shape_ok"]
