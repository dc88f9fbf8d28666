"""Root systems of the simple Lie algebras A-G in the simple-root basis.

Roots are integer coefficient vectors over a fixed numbering of the simple
roots.  The numbering used here (and by every data file in this package):

* A_n, B_n, C_n: the chain 1-2-...-n.  B_n has a short last root, C_n a
  long last root.
* D_n: the chain 1-2-...-(n-1) with vertex n attached to vertex n-2.
* E_6: the chain 1-2-3-4-5 with vertex 6 attached to vertex 3.
* E_7: the chain 1-2-3-4-5-6 with vertex 7 attached to vertex 4.
* E_8: the chain 1-2-3-4-5-6-7 with vertex 8 attached to vertex 5.
* F_4: the chain 1-2-3-4 with roots 1,2 long and 3,4 short.
* G_2: vertex 1 short, vertex 2 long.

The E_7/E_8 branch placement is not a free choice: it is the unique
assignment under which the bundled weight-diagram case data (vertex
colours, reduced/non-reduced statuses, arrow lists) is reproduced by
computation.  tests/test_walkdiag.py exercises that match in full.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

Root = tuple[int, ...]

#: (kind, rank) -> closed-form number of positive roots.
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_VALID_RANKS = {
    "A": range(1, 100),
    "B": range(2, 100),
    "C": range(2, 100),
    "D": range(3, 100),
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}


class InvalidTypeError(ValueError):
    """Raised for a (kind, rank) pair that is not a simple type."""


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, rank)]


def dynkin_edges(kind: str, rank: int) -> list[tuple[int, int]]:
    """Undirected edges of the Dynkin diagram, 1-based vertices."""
    if kind in ("A", "B", "C", "F", "G"):
        return _chain_edges(rank)
    if kind == "D":
        return _chain_edges(rank - 1) + [(rank - 2, rank)]
    if kind == "E":
        branch = {6: 3, 7: 4, 8: 5}[rank]
        return _chain_edges(rank - 1) + [(branch, rank)]
    raise InvalidTypeError(f"unknown kind {kind!r}")


def cartan_matrix(kind: str, rank: int) -> np.ndarray:
    """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee> (0-based)."""
    if kind not in _VALID_RANKS or rank not in _VALID_RANKS[kind]:
        raise InvalidTypeError(f"invalid simple type {kind}{rank}")
    C = 2 * np.eye(rank, dtype=np.int64)
    for a, b in dynkin_edges(kind, rank):
        C[a - 1, b - 1] = -1
        C[b - 1, a - 1] = -1
    # Asymmetric bonds: C[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
    if kind == "B":  # alpha_rank short
        C[rank - 1, rank - 2] = -2
    elif kind == "C":  # alpha_rank long
        C[rank - 2, rank - 1] = -2
    elif kind == "F":  # 1,2 long; 3,4 short
        C[2, 1] = -2
    elif kind == "G":  # 1 short, 2 long
        C[0, 1] = -3
    return C


@dataclass(frozen=True)
class RootSystem:
    """Immutable root system; safe to share across workers."""

    kind: str
    rank: int
    cartan: np.ndarray
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    _root_set: frozenset[Root] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def contains(self, v: Root) -> bool:
        return tuple(v) in self._root_set

    @property
    def positive_array(self) -> np.ndarray:
        """Positive roots as an (N, rank) int array (cached)."""
        return _positive_array(self)

    @property
    def root_sum_is_root(self) -> np.ndarray:
        """Boolean table T[i, j]: positive root i + positive root j is a root."""
        return _sum_table(self)

    def pairing(self, v: Root, i: int) -> int:
        """<v, alpha_i^vee> for a 1-based vertex i."""
        return int(np.dot(self.cartan[i - 1], np.asarray(v, dtype=np.int64)))


@lru_cache(maxsize=None)
def _positive_array_cached(key: tuple[str, int]) -> np.ndarray:
    rs = build_root_system(*key)
    return np.array(rs.positive_roots, dtype=np.int64)


def _positive_array(rs: RootSystem) -> np.ndarray:
    return _positive_array_cached((rs.kind, rs.rank))


@lru_cache(maxsize=None)
def _sum_table_cached(key: tuple[str, int]) -> np.ndarray:
    rs = build_root_system(*key)
    pos = _positive_array_cached(key)
    index = {r: k for k, r in enumerate(rs.positive_roots)}
    n = len(pos)
    table = np.zeros((n, n), dtype=bool)
    for i in range(n):
        sums = pos[i] + pos
        for j in range(n):
            if tuple(sums[j]) in index:
                table[i, j] = True
    return table


def _sum_table(rs: RootSystem) -> np.ndarray:
    return _sum_table_cached((rs.kind, rs.rank))


def _height(v: Root) -> int:
    return sum(v)


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystem:
    """Construct the full root system for a valid simple (kind, rank).

    Positive roots are generated from the simple ones by root strings: for
    a positive root b, b + alpha_i is a root iff p - <b, alpha_i^vee> > 0
    where p is the largest k with b - k*alpha_i a root.
    """
    C = cartan_matrix(kind, rank)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    positive: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        new: list[Root] = []
        for b in frontier:
            bv = np.asarray(b, dtype=np.int64)
            for i in range(rank):
                k = int(np.dot(C[i], bv))
                p = 0
                probe = list(b)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in positive:
                        p += 1
                    else:
                        break
                if p - k > 0:
                    up = list(b)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in positive:
                        positive.add(cand)
                        new.append(cand)
        frontier = new
    pos_sorted = tuple(sorted(positive, key=lambda r: (_height(r), r)))
    negatives = tuple(tuple(-x for x in r) for r in pos_sorted)
    roots = pos_sorted + negatives
    return RootSystem(
        kind=kind,
        rank=rank,
        cartan=C,
        roots=roots,
        positive_roots=pos_sorted,
        _root_set=frozenset(roots),
    )


def is_root(rs: RootSystem, v) -> bool:
    """Whether the integer vector v is a root of rs."""
    v = tuple(int(x) for x in v)
    if len(v) != rs.rank:
        raise ValueError(f"expected a vector of length {rs.rank}, got {len(v)}")
    return rs.contains(v)


def parse_type(name: str) -> tuple[str, int]:
    """Parse a type string like 'E7' or 'D5' into (kind, rank)."""
    name = name.strip()
    if len(name) < 2 or name[0].upper() not in _VALID_RANKS or not name[1:].isdigit():
        raise InvalidTypeError(f"cannot parse type string {name!r}")
    kind, rank = name[0].upper(), int(name[1:])
    if rank not in _VALID_RANKS[kind]:
        raise InvalidTypeError(f"invalid simple type {kind}{rank}")
    return kind, rank
