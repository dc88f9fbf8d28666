import pytest

from parabolics.classify import (
    AmpleFact,
    AmpleFactsRegistry,
    check_table,
    load_table,
    match_table_entry,
    scan_parabolics,
    weakly_ample_by_basic_lemma,
)
from parabolics.grading import grade
from parabolics.rootsys import build_root_system
from parabolics.walkdiag import load_cases


def test_two_step_maximal_parabolic_is_weakly_ample():
    # one white vertex whose coefficient in the highest root is 1
    g = grade("A4", [1, 2, 4])
    assert g.positive_weights == ((1,),)
    assert weakly_ample_by_basic_lemma(g)


def test_case_2a_colouring_not_settled_by_count():
    assert not weakly_ample_by_basic_lemma(grade("E7", [1, 3, 4, 6, 7]))


def test_scan_counts():
    assert len(scan_parabolics(build_root_system("G", 2))) == 3
    assert len(scan_parabolics(build_root_system("E", 7))) == 127


def test_scan_deterministic_order():
    a = scan_parabolics(build_root_system("A", 3))
    b = scan_parabolics(build_root_system("A", 3))
    assert [r.black for r in a] == [r.black for r in b]


def test_table_loads_59_entries():
    entries = load_table()
    assert len(entries) == 59
    assert sum(1 for e in entries if e.group == "E7") == 8
    assert sum(1 for e in entries if e.group == "E8") == 51


def test_check_table_counts():
    report = check_table()
    assert report.passed and not report.failures()
    assert set(report.counts) == set(range(1, 60))
    assert all(c in (2, 3, 4) for c in report.counts.values())
    # entries matching the bundled case colourings carry the printed counts
    cases = load_cases()
    for cid, want in [("2A", 2), ("2B", 2), ("5B", 4), ("5C", 4), ("4A", 2)]:
        spec = cases[cid]
        entry = match_table_entry(spec.group, spec.black)
        assert report.counts[entry] == want == len(spec.nonreduced)


def test_table_is_exactly_the_multi_nonreduced_colourings():
    # completeness: the 59 entries are precisely the proper colourings of
    # E7/E8 whose gradings carry two or more non-reduced positive weights
    entries = load_table()
    for name in ("E7", "E8"):
        rs = build_root_system(name[0], int(name[1]))
        found = {r.black for r in scan_parabolics(rs) if r.nonreduced >= 2}
        listed = {tuple(sorted(e.black)) for e in entries if e.group == name}
        assert found == listed


def test_basic_lemma_set_disjoint_from_table():
    entries = load_table()
    for e in entries:
        g = grade(e.group, e.black)
        assert not weakly_ample_by_basic_lemma(g)


def test_every_case_colouring_is_a_table_entry():
    for spec in load_cases().values():
        assert match_table_entry(spec.group, spec.black) is not None
    assert match_table_entry("E7", [1]) is None


def test_ample_facts_registry():
    reg = AmpleFactsRegistry()
    assert reg.lookup("reduced weight component").ample
    assert reg.lookup("no such shape") is None
    reg.register(AmpleFact("custom shape", False, "external list"))
    assert reg.lookup("custom shape").ample is False
    assert "custom shape" in reg.shapes()
