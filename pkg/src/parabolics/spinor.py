"""Half-spinor modules via the exterior algebra of a maximal isotropic subspace.

V = C^{2m} carries the split symmetric product (e_i, e*_j) = delta_ij with
U = span(e_1..e_m) and U' = span(e*_1..e*_m) maximal isotropic.  The
exterior algebra of U becomes a Clifford module: vectors of U act by
wedging, vectors of U' by contraction, and rho(v)^2 = (v, v) Id.  The even
and odd halves are the half-spinor modules S+ and S-.

For even m the module carries the bilinear form whose value on (u, v) is
the top-degree coefficient of (-1)^[deg u / 2] u ^ v; it is symmetric on
the halves when m = 4k and symplectic when m = 4k + 2, and the halves are
orthogonal to each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cxlinalg import BilinearSpace


def _insert_sign(subset: tuple[int, ...], i: int) -> int:
    return -1 if sum(1 for s in subset if s < i) % 2 else 1


def _drop_sign(subset: tuple[int, ...], i: int) -> int:
    return -1 if subset.index(i) % 2 else 1


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    inv = sum(1 for x in a for y in b if x > y)
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class SpinModule:
    """Basis bookkeeping for Lambda* U, U = C^m, and the Clifford action."""

    m: int
    basis: tuple[tuple[int, ...], ...]
    index: dict[tuple[int, ...], int]

    @property
    def dim(self) -> int:
        return 1 << self.m

    @property
    def even_indices(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.basis) if len(s) % 2 == 0)

    @property
    def odd_indices(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.basis) if len(s) % 2 == 1)

    def vector(self, *subsets, coeffs=None) -> np.ndarray:
        """Element of Lambda* U as a coordinate vector, e.g. vector((), (0,1))."""
        v = np.zeros(self.dim, dtype=complex)
        coeffs = coeffs or [1.0] * len(subsets)
        for c, s in zip(coeffs, subsets):
            v[self.index[tuple(sorted(s))]] += c
        return v

    # ---------------------------------------------------------- rho action

    def rho(self, v: np.ndarray) -> np.ndarray:
        """Matrix of rho(v) on Lambda* U for v in V = U + U' (length 2m)."""
        v = np.asarray(v, dtype=complex)
        if v.shape != (2 * self.m,):
            raise ValueError(f"vector must live in C^{2 * self.m}")
        M = np.zeros((self.dim, self.dim), dtype=complex)
        for col, s in enumerate(self.basis):
            for i in range(self.m):
                if v[i] != 0 and i not in s:  # wedge by e_i
                    t = tuple(sorted(s + (i,)))
                    M[self.index[t], col] += v[i] * _insert_sign(s, i)
                ci = v[self.m + i]
                if ci != 0 and i in s:  # contract by e*_i
                    t = tuple(x for x in s if x != i)
                    M[self.index[t], col] += ci * _drop_sign(s, i)
        return M

    def pairing(self, v, w) -> complex:
        """(v, w) on V, with U and U' isotropic and dual to each other.

        Normalized so that rho(v)^2 = (v, v) Id holds with the wedge and
        contraction formulas as given (the contraction coefficient of e*_i
        against e_i is 1, the quadratic form value of e_i + e*_i is 1).
        """
        v, w = np.asarray(v), np.asarray(w)
        m = self.m
        return complex(v[:m] @ w[m:] + v[m:] @ w[:m]) / 2

    # ------------------------------------------------------------ the form

    def form_value(self, s: tuple[int, ...], t: tuple[int, ...]) -> int:
        """Form on basis elements: top coefficient of (-1)^[|s|/2] e_s ^ e_t."""
        if set(s) & set(t) or len(s) + len(t) != self.m:
            return 0
        sign = _merge_sign(s, t)
        return -sign if (len(s) // 2) % 2 else sign

    @property
    def form_gram(self) -> np.ndarray:
        G = np.zeros((self.dim, self.dim), dtype=complex)
        for i, s in enumerate(self.basis):
            for j, t in enumerate(self.basis):
                G[i, j] = self.form_value(s, t)
        return G

    def half_space(self, side: str) -> BilinearSpace:
        """The form restricted to S+ (side='+') or S- (side='-')."""
        if self.m % 2:
            raise ValueError("the spinor form needs even m")
        idx = self.even_indices if side == "+" else self.odd_indices
        G = self.form_gram[np.ix_(idx, idx)]
        return BilinearSpace(f"spinor-form({self.m}){side}", len(idx), G)

    def half_basis_subsets(self, side: str) -> tuple[tuple[int, ...], ...]:
        idx = self.even_indices if side == "+" else self.odd_indices
        return tuple(self.basis[k] for k in idx)

    def to_half(self, v: np.ndarray, side: str) -> np.ndarray:
        idx = self.even_indices if side == "+" else self.odd_indices
        return np.asarray(v)[list(idx)]

    def from_half(self, v: np.ndarray, side: str) -> np.ndarray:
        idx = self.even_indices if side == "+" else self.odd_indices
        out = np.zeros(self.dim, dtype=complex)
        out[list(idx)] = v
        return out

    def rho_half(self, v: np.ndarray, side: str) -> np.ndarray:
        """rho(v) as a map S(side) -> S(-side), in half coordinates."""
        src = self.even_indices if side == "+" else self.odd_indices
        dst = self.odd_indices if side == "+" else self.even_indices
        return self.rho(v)[np.ix_(dst, src)]


@lru_cache(maxsize=None)
def spin_module(m: int) -> SpinModule:
    basis = tuple(
        s for r in range(m + 1) for s in combinations(range(m), r)
    )
    return SpinModule(m=m, basis=basis, index={s: k for k, s in enumerate(basis)})


def spin_form(u, v, m: int) -> complex:
    """The bilinear form on Lambda* U for even m."""
    if m % 2:
        raise ValueError("the spinor form is only defined for even m")
    sm = spin_module(m)
    u, v = np.asarray(u, dtype=complex), np.asarray(v, dtype=complex)
    G = sm.form_gram
    return complex(u @ G @ v)


def rho_span(sm: SpinModule, s: np.ndarray) -> np.ndarray:
    """Columns rho(v_j) s over the standard basis of V."""
    cols = [sm.rho(np.eye(2 * sm.m, dtype=complex)[j]) @ s for j in range(2 * sm.m)]
    return np.column_stack(cols)
