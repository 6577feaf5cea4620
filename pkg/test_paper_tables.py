#!/usr/bin/env python3
"""
Published family tables against the enumeration, dimensions 1 to 7
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.family_tables import FAMILY_TABLES, TemplateStatus, render_pattern, templates_for
from services.numtheory import IntPoly, PrimePower
from services.papercheck import compare_tables, instantiate, verify_paper_tables

TABLE_FIELDS = {
    1: [(2, 1), (2, 3), (2, 5), (3, 1), (3, 3), (5, 1), (7, 1), (11, 1), (13, 1)],
    2: [(2, 1), (2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1)],
    3: [(3, 1), (3, 3), (7, 1), (2, 1), (5, 1), (11, 1), (13, 1)],
    4: [(2, 1), (2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1)],
    5: [(11, 1), (11, 3), (2, 1), (3, 1), (5, 1), (7, 1), (13, 1)],
    6: [(2, 1), (2, 3), (3, 1), (7, 1), (13, 1), (5, 1), (11, 1)],
    7: [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1)],
}


def _assert_matches(g):
    for p, n in TABLE_FIELDS[g]:
        report = compare_tables(PrimePower(p, n), g)
        assert report.ok, (
            f"g={g} q={p}^{n}: listed-not-found {[str(m.P) for m in report.missing_from_enumeration]}, "
            f"found-not-listed {[str(u.isogeny_class.P) for u in report.missing_from_paper]}"
        )


def test_dimension_one_table():
    _assert_matches(1)


def test_dimension_two_table():
    _assert_matches(2)
    # prime gates: item 1 absent at 3, item 6 absent at 2
    assert instantiate(FAMILY_TABLES["d2.1"], PrimePower(3, 1)) is None
    assert instantiate(FAMILY_TABLES["d2.6"], PrimePower(2, 1)) is None
    assert instantiate(FAMILY_TABLES["d2.4"], PrimePower(7, 1)) is None


def test_dimension_two_item_two_holds_for_every_prime():
    for p in (2, 3, 5, 7, 11, 13):
        report = compare_tables(PrimePower(p, 1), 2)
        (P,) = instantiate(FAMILY_TABLES["d2.2"], PrimePower(p, 1))
        assert P == IntPoly.of([p * p, 0, p, 0, 1])
        assert report.ok


def test_dimension_three_table():
    _assert_matches(3)


def test_dimension_four_table():
    _assert_matches(4)


def test_dimension_five_table_and_erratum():
    _assert_matches(5)
    report = compare_tables(PrimePower(11, 1), 5)
    assert report.matched == 2
    assert len(report.errata) == 2
    for entry in report.errata:
        assert entry.template_key == "d5.p11"
        assert entry.printed != entry.corrected


def test_dimension_six_table_errata_and_refutation():
    _assert_matches(6)
    report = compare_tables(PrimePower(3, 1), 6)
    assert {e.template_key for e in report.errata} == {"d6.3"}

    report = compare_tables(PrimePower(7, 1), 6)
    assert len(report.refuted) == 2
    for entry in report.refuted:
        assert entry.template_key == "d6.5"
        assert entry.root is not None and entry.root * entry.root == entry.P
        assert (entry.root_e, entry.root_g) == (1, 3)
    assert report.matched == 5


def test_dimension_seven_is_empty():
    _assert_matches(7)
    assert templates_for(7) == []


def test_verify_paper_tables_in_bulk():
    reports = verify_paper_tables([PrimePower(p, 1) for p in (2, 3, 5, 7, 11, 13)], [7])
    assert len(reports) == 6
    assert all(r.ok and r.matched == 0 for r in reports)
    reports = verify_paper_tables([PrimePower(2, 1), PrimePower(3, 1)], [1, 2], n_jobs=2)
    assert [(r.q.p, r.g) for r in reports] == [(2, 1), (2, 2), (3, 1), (3, 2)]
    assert all(r.ok for r in reports)


def test_template_statuses():
    statuses = {key: t.status for key, t in FAMILY_TABLES.items() if t.status is not TemplateStatus.CONFIRMED}
    assert statuses == {
        "d5.p11": TemplateStatus.CORRECTED,
        "d6.3": TemplateStatus.CORRECTED,
        "d6.5": TemplateStatus.REFUTED,
    }


def test_rendered_formulas():
    assert render_pattern((1,), 2) == "X^2 ± √(2q)X + q"
    assert render_pattern((0,), None) == "X^2 + q"
    assert render_pattern((0, -2), None) == "X^4 - 2qX^2 + q^2"


if __name__ == "__main__":
    tests = [(name, fn) for name, fn in list(globals().items()) if name.startswith("test_") and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"✅ {name}")
        except Exception as e:
            failed += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(tests) - failed}/{len(tests)} passed")
    sys.exit(1 if failed else 0)
