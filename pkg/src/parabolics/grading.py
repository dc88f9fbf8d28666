"""Gradings of a simple Lie algebra induced by a coloured Dynkin diagram.

A colouring splits the vertices into black (Levi simple roots) and white.
Restricting each root to its coefficients at the white vertices partitions
the root set into components indexed by integer weight vectors; the zero
weight collects the Levi roots.  Weights are plain tuples of ints, ordered
by ascending white vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .rootsys import Root, RootSystem, build_root_system, parse_type

Weight = tuple[int, ...]


@dataclass(frozen=True)
class ColouredDiagram:
    rs: RootSystem
    black: frozenset[int]

    def __post_init__(self):
        vertices = set(range(1, self.rs.rank + 1))
        if not self.black <= vertices:
            raise ValueError(f"black vertices {sorted(self.black)} out of range for {self.rs.name}")
        if self.black == vertices:
            raise ValueError("no white vertex: the parabolic subgroup must be proper")

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(sorted(set(range(1, self.rs.rank + 1)) - self.black))

    def __str__(self) -> str:
        return f"{self.rs.name}/{','.join(map(str, sorted(self.black)))}"


def diagram(type_name: str, black) -> ColouredDiagram:
    """Convenience constructor: diagram('E7', [1, 3, 4, 6, 7])."""
    return ColouredDiagram(build_root_system(*parse_type(type_name)), frozenset(black))


@dataclass(frozen=True)
class Grading:
    """The weight partition of the roots of diagram.rs.

    components maps every nonzero weight to its roots; zero_component holds
    the Levi roots.  All tuples are sorted for determinism.
    """

    diagram: ColouredDiagram
    components: dict[Weight, tuple[Root, ...]] = field(repr=False)
    zero_component: tuple[Root, ...] = field(repr=False)

    @property
    def rs(self) -> RootSystem:
        return self.diagram.rs

    @cached_property
    def positive_weights(self) -> tuple[Weight, ...]:
        """Nonzero weights with all coefficients >= 0, lexicographically sorted."""
        return tuple(sorted(w for w in self.components if min(w) >= 0))

    @cached_property
    def _component_indices(self) -> dict[Weight, np.ndarray]:
        """Weight -> indices into rs.positive_roots (positive weights only)."""
        index = {r: k for k, r in enumerate(self.rs.positive_roots)}
        return {
            w: np.array(sorted(index[r] for r in roots), dtype=np.intp)
            for w, roots in self.components.items()
            if min(w) >= 0
        }

    @cached_property
    def _levi_positive_indices(self) -> np.ndarray:
        index = {r: k for k, r in enumerate(self.rs.positive_roots)}
        return np.array(
            sorted(index[r] for r in self.zero_component if sum(r) > 0), dtype=np.intp
        )

    def is_weight(self, chi: Weight) -> bool:
        return tuple(chi) in self.components

    def roots_of(self, chi: Weight) -> tuple[Root, ...]:
        return self.components[tuple(chi)]

    def is_reduced(self, chi: Weight) -> bool:
        """A nonzero weight chi is reduced when 2*chi is not a weight."""
        chi = tuple(chi)
        if chi not in self.components:
            raise ValueError(f"{chi} is not a weight of {self.diagram}")
        return tuple(2 * c for c in chi) not in self.components

    def positive_nonreduced_weights(self) -> tuple[Weight, ...]:
        return tuple(w for w in self.positive_weights if not self.is_reduced(w))

    def highest_root_of(self, chi: Weight) -> tuple[Root, ...]:
        """Roots of the component that no positive Levi root raises further."""
        chi = tuple(chi)
        if chi not in self._component_indices:
            raise ValueError(f"{chi} is not a positive weight of {self.diagram}")
        idx = self._component_indices[chi]
        levi = self._levi_positive_indices
        table = self.rs.root_sum_is_root
        if len(levi) == 0:
            raisable = np.zeros(len(idx), dtype=bool)
        else:
            raisable = table[np.ix_(idx, levi)].any(axis=1)
        pos = self.rs.positive_roots
        return tuple(pos[i] for i in idx[~raisable])

    def is_irreducible_component(self, chi: Weight) -> bool:
        """True iff the component has a unique highest root under the Levi."""
        return len(self.highest_root_of(chi)) == 1

    def weight_label(self, chi: Weight) -> str:
        """Coefficients in white-vertex order, e.g. '(0,1)'."""
        return "(" + ",".join(str(c) for c in chi) + ")"


def compute_grading(diag: ColouredDiagram) -> Grading:
    rs = diag.rs
    white = [w - 1 for w in diag.white]
    components: dict[Weight, list[Root]] = {}
    zero: list[Root] = []
    for r in rs.roots:
        w = tuple(r[i] for i in white)
        if any(w):
            components.setdefault(w, []).append(r)
        else:
            zero.append(r)
    return Grading(
        diagram=diag,
        components={w: tuple(sorted(rr)) for w, rr in sorted(components.items())},
        zero_component=tuple(sorted(zero)),
    )


def grade(type_name: str, black) -> Grading:
    return compute_grading(diagram(type_name, black))
