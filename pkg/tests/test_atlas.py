import pytest

from netstab.atlas import (EXPECTED_SEGRE, ROWS, enumerate_atlas, enumerate_triples, lambda_catalog,
                           maximal_set, row_triple, verify_atlas_row)


@pytest.fixture(scope="module")
def report():
    return enumerate_atlas()


def test_enumeration_is_deterministic(report):
    again = enumerate_atlas()
    assert again.as_dict() == report.as_dict()
    assert list(enumerate_triples()) == list(enumerate_triples())


def test_every_named_row_is_found(report):
    assert report.named_found == 12
    assert report.discrepancies == []
    assert report.enumerated == len(enumerate_triples())


def test_row_eleven_is_contained_in_row_two(report):
    row = next(r for r in report.rows if r["row"] == 11)
    assert not row["enumerated"] and row["contained_in"] == [2]


@pytest.mark.parametrize("row", sorted(ROWS))
def test_all_sums_negative(row):
    assert row_triple(row).all_sums_negative()


NOT_MAXIMAL_UNDER_OWN_LAMBDA = {9: 12, 11: 2}


def test_non_maximal_rows_sit_inside_others(report):
    for row, container in NOT_MAXIMAL_UNDER_OWN_LAMBDA.items():
        assert not row_triple(row).maximal
        assert row_triple(row).contained_in(row_triple(container))
        assert container in next(r for r in report.rows if r["row"] == row)["contained_in"]


def test_row_one_sets():
    t = row_triple(1)
    assert t.A == {(0, 0, 0, 2)} and len(t.B) == len(t.C) == 10


def test_maximal_set_rejects_empty_A():
    lam = lambda_catalog()["l1"]
    assert not maximal_set(lam, (0, 0, 0, 2), (0, 0, 0, 2)).maximal


@pytest.mark.parametrize("row", sorted(ROWS))
def test_generic_instances(row):
    rep = verify_atlas_row(row, trials=3, seed=1, check_segre=False)
    assert rep.passed, rep.failures


@pytest.mark.parametrize("row", sorted(r for r in EXPECTED_SEGRE if r != 9))
def test_segre_types(row):
    rep = verify_atlas_row(row, trials=2, seed=0)
    assert rep.segre_passed, rep.segre_mismatches


@pytest.mark.xfail(strict=True, reason="B = C makes Q1 and Q2 interchangeable, so the pencils "
                                       "Q1Q3 and Q2Q3 have the same generic type, unlike the pair in EXPECTED_SEGRE")
def test_segre_types_row_nine():
    assert verify_atlas_row(9, trials=2, seed=0).segre_passed
