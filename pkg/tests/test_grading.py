import numpy as np
import pytest

from parabolics.grading import compute_grading, diagram, grade
from parabolics.rootsys import build_root_system


def test_a3_middle_white_single_positive_weight():
    g = grade("A3", black=[1, 3])
    assert g.positive_weights == ((1,),)
    assert set(g.roots_of((1,))) == {
        (0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)
    }


@pytest.mark.parametrize("name,black", [
    ("A3", [2]), ("B3", [1]), ("C4", [2, 3]), ("D5", [1, 4]),
    ("E6", []), ("E7", [1, 3, 4, 6, 7]), ("F4", [2]), ("G2", [1]),
])
def test_partition_and_negation(name, black):
    g = grade(name, black)
    total = sum(len(r) for r in g.components.values()) + len(g.zero_component)
    assert total == len(g.rs.roots)
    for chi, roots in g.components.items():
        neg = tuple(-c for c in chi)
        assert set(g.components[neg]) == {tuple(-x for x in r) for r in roots}
        white = [w - 1 for w in g.diagram.white]
        for r in roots:
            assert tuple(r[i] for i in white) == chi


def test_positive_weights_are_nonnegative_restrictions():
    g = grade("E7", [1, 3, 4, 6, 7])
    for w in g.positive_weights:
        assert min(w) >= 0 and any(w)


@pytest.mark.parametrize("name,black", [("A4", [2, 4]), ("D4", [3]), ("B3", [])])
def test_bracket_grading_exhaustive(name, black):
    g = grade(name, black)
    weight_of = {}
    for chi, roots in g.components.items():
        for r in roots:
            weight_of[r] = chi
    for r in g.zero_component:
        weight_of[r] = tuple(0 for _ in g.diagram.white)
    roots = set(g.rs.roots)
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s in roots:
                want = tuple(x + y for x, y in zip(weight_of[a], weight_of[b]))
                assert weight_of[s] == want


def test_bracket_grading_sampled_e8():
    g = grade("E8", [1, 2, 5, 7])
    weight_of = {}
    for chi, roots in g.components.items():
        for r in roots:
            weight_of[r] = chi
    zero = tuple(0 for _ in g.diagram.white)
    for r in g.zero_component:
        weight_of[r] = zero
    roots = list(g.rs.roots)
    rootset = set(roots)
    rng = np.random.default_rng(1)
    for _ in range(20_000):
        a = roots[rng.integers(len(roots))]
        b = roots[rng.integers(len(roots))]
        s = tuple(x + y for x, y in zip(a, b))
        if s in rootset:
            want = tuple(x + y for x, y in zip(weight_of[a], weight_of[b]))
            assert weight_of[s] == want


def test_is_reduced_case_2a_colouring():
    g = grade("E7", [1, 3, 4, 6, 7])
    assert not g.is_reduced((0, 1))
    assert not g.is_reduced((1, 1))
    assert g.is_reduced((1, 0))
    assert g.is_reduced((2, 1))
    # the lexicographically-last (highest-coefficient) weight is always reduced
    top = max(g.positive_weights, key=sum)
    assert g.is_reduced(top)
    with pytest.raises(ValueError):
        g.is_reduced((9, 9))


def test_positive_nonreduced_examples():
    g = grade("E7", [1, 3, 4, 6, 7])
    assert g.positive_nonreduced_weights() == ((0, 1), (1, 1))
    borel_a2 = grade("A2", [])
    assert borel_a2.positive_nonreduced_weights() == ()


def test_irreducibility_single_root_and_borel():
    borel = grade("A3", [])
    for w in borel.positive_weights:
        assert len(borel.roots_of(w)) == 1
        assert borel.is_irreducible_component(w)


def test_irreducibility_all_components_of_sample_parabolics():
    for name, black in [("E7", [1, 3, 4, 6, 7]), ("E8", [1, 2, 3, 5, 6, 7]),
                        ("D5", [2, 3]), ("F4", [1, 4])]:
        g = grade(name, black)
        for w in g.positive_weights:
            assert g.is_irreducible_component(w), (name, black, w)


def test_weight_label():
    g = grade("E7", [1, 3, 4, 6, 7])
    assert g.weight_label((0, 1)) == "(0,1)"
    assert g.weight_label((1, 0)) == "(1,0)"
    assert g.weight_label(tuple(0 for _ in g.diagram.white)) == "(0,0)"


def test_diagram_validation():
    rs = build_root_system("A", 3)
    with pytest.raises(ValueError):
        diagram("A3", [1, 2, 3])  # no white vertex
    with pytest.raises(ValueError):
        diagram("A3", [0])
    with pytest.raises(ValueError):
        diagram("A3", [4])


def test_grading_components_sorted_deterministically():
    g1 = grade("E7", [2, 4, 5])
    g2 = grade("E7", [2, 4, 5])
    assert list(g1.components) == list(g2.components)
    assert g1.positive_weights == g2.positive_weights
