import numpy as np
import pytest

from parabolics.rootsys import (
    POSITIVE_ROOT_COUNTS,
    InvalidTypeError,
    build_root_system,
    cartan_matrix,
    is_root,
    parse_type,
)

ALL_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", r) for r in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("kind,rank", ALL_TYPES)
def test_positive_root_counts(kind, rank):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == POSITIVE_ROOT_COUNTS[kind](rank)
    assert len(rs.roots) == 2 * len(rs.positive_roots)


@pytest.mark.parametrize("kind,rank", ALL_TYPES)
def test_negation_closure_and_uniqueness(kind, rank):
    rs = build_root_system(kind, rank)
    roots = set(rs.roots)
    assert len(roots) == len(rs.roots)
    for r in roots:
        assert tuple(-x for x in r) in roots


@pytest.mark.parametrize("kind,rank", [("A", 4), ("D", 5), ("E", 7), ("G", 2)])
def test_generation_is_complete(kind, rank):
    # every non-simple positive root decreases to a root by some simple root
    rs = build_root_system(kind, rank)
    roots = set(rs.roots)
    for r in rs.positive_roots:
        if sum(r) == 1:
            continue
        assert any(
            tuple(r[j] - (j == i) for j in range(rank)) in roots for i in range(rank)
        ), r


# ------------------------------------------------- independent coordinate models


def _coordinate_model(kind, rank):
    """Positive roots and simple roots in an ambient coordinate space."""
    if kind == "A":
        e = np.eye(rank + 1)
        pos = [e[i] - e[j] for i in range(rank + 1) for j in range(i + 1, rank + 1)]
        simple = [e[i] - e[i + 1] for i in range(rank)]
    elif kind == "B":
        e = np.eye(rank)
        pos = [e[i] for i in range(rank)]
        pos += [e[i] - e[j] for i in range(rank) for j in range(i + 1, rank)]
        pos += [e[i] + e[j] for i in range(rank) for j in range(i + 1, rank)]
        simple = [e[i] - e[i + 1] for i in range(rank - 1)] + [e[rank - 1]]
    elif kind == "C":
        e = np.eye(rank)
        pos = [2 * e[i] for i in range(rank)]
        pos += [e[i] - e[j] for i in range(rank) for j in range(i + 1, rank)]
        pos += [e[i] + e[j] for i in range(rank) for j in range(i + 1, rank)]
        simple = [e[i] - e[i + 1] for i in range(rank - 1)] + [2 * e[rank - 1]]
    elif kind == "D":
        e = np.eye(rank)
        pos = [e[i] - e[j] for i in range(rank) for j in range(i + 1, rank)]
        pos += [e[i] + e[j] for i in range(rank) for j in range(i + 1, rank)]
        simple = [e[i] - e[i + 1] for i in range(rank - 1)] + [e[rank - 2] + e[rank - 1]]
    else:
        raise ValueError(kind)
    return pos, simple


@pytest.mark.parametrize("kind,rank", [("A", 3), ("A", 4), ("B", 3), ("B", 4),
                                       ("C", 3), ("C", 4), ("D", 4), ("D", 5)])
def test_against_coordinate_model(kind, rank):
    pos, simple = _coordinate_model(kind, rank)
    S = np.array(simple).T
    got = set()
    for r in pos:
        coeffs = np.linalg.lstsq(S, r, rcond=None)[0]
        rounded = np.round(coeffs).astype(int)
        assert np.allclose(S @ rounded, r), (kind, rank, r)
        got.add(tuple(int(x) for x in rounded))
    rs = build_root_system(kind, rank)
    assert got == set(rs.positive_roots)


def test_g2_positive_roots_explicit():
    rs = build_root_system("G", 2)
    assert set(rs.positive_roots) == {
        (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)
    }


# --------------------------------------------------------- string property


def _symmetrizer(kind, rank):
    # d_i with d_i C[i][j] = d_j C[j][i]
    C = cartan_matrix(kind, rank)
    d = np.ones(rank)
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            for j in range(rank):
                if C[i][j] and not np.isclose(d[i] * C[i][j], d[j] * C[j][i]):
                    d[j] = d[i] * C[i][j] / C[j][i]
                    changed = True
    return d


def _pairing_matrix(kind, rank):
    C = cartan_matrix(kind, rank)
    d = _symmetrizer(kind, rank)
    # (alpha_i, alpha_j) = C[i][j] * d_i; <v, beta-check> = 2 (v, beta)/(beta, beta)
    return C * d[:, None]


@pytest.mark.parametrize("kind,rank", [("A", 3), ("B", 4), ("C", 3), ("D", 4),
                                       ("F", 4), ("G", 2)])
def test_string_property_exhaustive(kind, rank):
    rs = build_root_system(kind, rank)
    B = _pairing_matrix(kind, rank)
    roots = set(rs.roots)
    for a in rs.roots:
        av = np.array(a)
        for b in rs.roots:
            if b == a or b == tuple(-x for x in a):
                continue
            bv = np.array(b)
            pairing = 2 * (av @ B @ bv) / (bv @ B @ bv)
            p = 0
            while tuple(av - (p + 1) * bv) in roots:
                p += 1
            assert (tuple(av + bv) in roots) == (p - pairing > 0), (a, b)


def test_string_property_sampled_e8():
    rs = build_root_system("E", 8)
    B = _pairing_matrix("E", 8)
    roots = set(rs.roots)
    rng = np.random.default_rng(0)
    all_roots = rs.roots
    for _ in range(100_000):
        a = all_roots[rng.integers(len(all_roots))]
        b = all_roots[rng.integers(len(all_roots))]
        if b == a or b == tuple(-x for x in a):
            continue
        av, bv = np.array(a), np.array(b)
        pairing = 2 * (av @ B @ bv) / (bv @ B @ bv)
        p = 0
        while tuple(av - (p + 1) * bv) in roots:
            p += 1
        assert (tuple(av + bv) in roots) == (p - pairing > 0)


# ------------------------------------------------------------- is_root api


def test_is_root_examples():
    a2 = build_root_system("A", 2)
    assert is_root(a2, (1, 1))
    assert not is_root(a2, (2, 0))
    g2 = build_root_system("G", 2)
    assert is_root(g2, (3, 1))
    with pytest.raises(ValueError):
        is_root(a2, (1, 0, 0))


def test_positive_roots_sorted_by_height_then_lex():
    rs = build_root_system("D", 5)
    keys = [(sum(r), r) for r in rs.positive_roots]
    assert keys == sorted(keys)


def test_invalid_types_rejected():
    for bad in [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("A", 0), ("H", 3)]:
        with pytest.raises(InvalidTypeError):
            build_root_system(*bad)
    with pytest.raises(InvalidTypeError):
        parse_type("E9")
    with pytest.raises(InvalidTypeError):
        parse_type("X2")
    assert parse_type("e7") == ("E", 7)


def test_root_sum_table_matches_membership():
    rs = build_root_system("F", 4)
    table = rs.root_sum_is_root
    pos = rs.positive_roots
    for i in range(len(pos)):
        for j in range(len(pos)):
            s = tuple(x + y for x, y in zip(pos[i], pos[j]))
            assert table[i, j] == rs.contains(s)
