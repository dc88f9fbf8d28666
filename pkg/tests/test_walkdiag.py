import dataclasses

import pytest

from parabolics.grading import compute_grading, diagram
from parabolics.walkdiag import (
    CaseDataError,
    arrow_head,
    build_weight_diagram,
    data_checksum,
    data_path,
    load_cases,
    rubbish_weights,
    verify_all_cases,
    verify_case,
)

CASE_IDS = ["1A", "2A", "2B", "2C", "2D", "2E", "3", "4A", "4B", "4C",
            "5A", "5B", "5C", "5D", "5E"]


@pytest.fixture(scope="module")
def cases():
    return load_cases()


def test_all_cases_present(cases):
    assert sorted(cases) == sorted(CASE_IDS)


def test_case_shapes(cases):
    c = cases["2A"]
    assert c.group == "E7" and c.parabolic == 19
    assert c.black == (1, 3, 4, 6, 7)
    assert c.nonreduced == {"A": (0, 1), "B": (1, 1)}
    assert c.twisting == {"1": (1, 0)}
    assert c.rubbish == {"a": (2, 1)}
    assert set(c.arrows) == {("A", "1", "B"), ("B", "1", "a")}
    big = cases["5B"]
    assert len(big.nonreduced) == 4 and len(big.twisting) == 17
    assert len(big.rubbish) == 15 and len(big.arrows) == 104
    assert "skipped" in cases["5C"].note and len(cases["5C"].twisting) == 19


@pytest.mark.parametrize("cid", CASE_IDS)
def test_verify_case_passes(cases, cid):
    report = verify_case(cases[cid])
    assert report.passed, [(c.item, c.detail) for c in report.failures()]


def test_verify_all_cases(cases):
    reports = verify_all_cases(cases)
    assert len(reports) == 15 and all(r.passed for r in reports.values())


def test_corrupted_arrow_fails_with_offending_triple(cases):
    spec = cases["2A"]
    bad = dataclasses.replace(spec, arrows=(("A", "1", "B"), ("A", "1", "a")))
    report = verify_case(bad)
    assert not report.passed
    [failure] = [c for c in report.checks if not c.ok]
    assert failure.item == "arrow set matches"
    assert "('A', '1', 'a')" in failure.detail and "('B', '1', 'a')" in failure.detail


def test_corrupted_weight_fails(cases):
    spec = cases["2B"]
    bad = dataclasses.replace(spec, rubbish={"z": (9, 9)})
    report = verify_case(bad)
    assert not report.passed


# ------------------------------------------------------------ primitives


def test_rubbish_examples(cases):
    g = compute_grading(diagram("E7", cases["2A"].black))
    assert rubbish_weights(g, [(1, 0)]) == {(2, 1)}
    assert rubbish_weights(g, []) == set()
    g2b = compute_grading(diagram("E7", cases["2B"].black))
    assert rubbish_weights(g2b, list(cases["2B"].twisting.values())) == set()
    with pytest.raises(ValueError):
        rubbish_weights(g, [(9, 9)])


def test_arrow_head_examples(cases):
    g = compute_grading(diagram("E7", cases["2A"].black))
    assert arrow_head(g, (0, 1), (1, 0)) == (1, 1)
    assert arrow_head(g, (1, 1), (1, 0)) == (2, 1)
    top = max(g.positive_weights, key=sum)
    assert arrow_head(g, top, top) is None
    with pytest.raises(ValueError):
        arrow_head(g, (9, 9), (1, 0))


def test_build_weight_diagram_matches_case_2a(cases):
    spec = cases["2A"]
    g = compute_grading(diagram("E7", spec.black))
    wd = build_weight_diagram(g, list(spec.twisting.values()))
    assert set(wd.nonreduced) == set(spec.nonreduced.values())
    assert set(wd.rubbish) == set(spec.rubbish.values())
    assert set(wd.vertices) == {(0, 1), (1, 1), (2, 1)}
    assert set(wd.arrows) == {((0, 1), (1, 0), (1, 1)), ((1, 1), (1, 0), (2, 1))}


def test_arrow_heads_always_vertices(cases):
    # closure property: any positive-weight head of a vertex is again a vertex
    for cid in CASE_IDS:
        spec = cases[cid]
        g = compute_grading(diagram(spec.group, spec.black))
        wd = build_weight_diagram(g, list(spec.twisting.values()))
        vertices = set(wd.vertices)
        for (_, _, head) in wd.arrows:
            assert head in vertices


def test_arrow_label_addition(cases):
    for cid in CASE_IDS:
        spec = cases[cid]
        g = compute_grading(diagram(spec.group, spec.black))
        wd = build_weight_diagram(g, list(spec.twisting.values()))
        for tail, mu, head in wd.arrows:
            assert tuple(a + b for a, b in zip(tail, mu)) == head


def test_bracket_image_covers_head_component(cases):
    # when the bracket is nonzero every head root is a tail + twisting sum
    for cid in CASE_IDS:
        spec = cases[cid]
        g = compute_grading(diagram(spec.group, spec.black))
        named = spec.all_named()
        for tail_name, mu_name, head_name in spec.arrows:
            tail = set(g.roots_of(named[tail_name]))
            mu = set(g.roots_of(named[mu_name]))
            head = set(g.roots_of(named[head_name]))
            sums = {tuple(a + b for a, b in zip(x, y)) for x in tail for y in mu}
            assert head <= sums, (cid, tail_name, mu_name, head_name)


def test_data_checksum_stable():
    assert data_checksum("cases.txt") == data_checksum("cases.txt")
    assert len(data_checksum("table.txt")) == 64


def test_data_dir_override_and_corrupt_file(tmp_path, monkeypatch):
    monkeypatch.setenv("PARABOLICS_DATA_DIR", str(tmp_path))
    with pytest.raises(CaseDataError):
        data_path("cases.txt")
    (tmp_path / "cases.txt").write_text("case X\n  bogus line\nend\n")
    with pytest.raises(CaseDataError):
        load_cases()
