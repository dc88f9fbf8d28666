"""Hermitian characteristics of nilpotent elements.

Three constructions live here:

* block-triangular nilpotents in gl(V): each block is completed to an
  sl2-triple by its Moore-Penrose inverse, giving the unique Hermitian
  multiple characteristic for the standard products;
* the graded components of an orthogonal/symplectic algebra attached to an
  isotropic flag, as explicit form-skew matrices;
* the B-from-A solver: given A: U -> W and a symmetric or symplectic form
  on W, produce a Hermitian form on U and B: W -> U solving

      2A = 2ABA - (AB)#A,   2B = 2BAB - B(AB)#,
      BA and AB - (AB)# Hermitian,

  by splitting W into the radical of the restricted form on Im A, its
  Hermitian complement in Im A, the conjugated copy of the radical, and
  the leftover, and setting B to the scaled section of A on the first two
  pieces and zero on the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cxlinalg import (
    DEFAULT_TOL,
    BilinearSpace,
    mp_inverse,
    orth,
    sharp_adjoint,
    symmetric_space,
    symplectic_space,
)

DEFAULT_SL2_TOL = 1e-9


def _comm(x, y):
    return x @ y - y @ x


@dataclass(frozen=True)
class Sl2Triple:
    e: np.ndarray
    h: np.ndarray
    f: np.ndarray
    #: absolute norms of [e,f]-h, [h,e]-2e, [h,f]+2f, h-h*
    residuals: tuple[float, float, float, float]

    def accepted(self, tol: float = DEFAULT_SL2_TOL, hermitian: bool = True) -> bool:
        checked = self.residuals if hermitian else self.residuals[:3]
        return all(r < tol for r in checked)


def verify_sl2(e, h, f, hermitian: bool = True) -> Sl2Triple:
    """Package (e, h, f) with the residuals of the sl2 relations.

    Zero triples are fine; shapes must agree.
    """
    e, h, f = (np.asarray(m, dtype=complex) for m in (e, h, f))
    if not (e.shape == h.shape == f.shape) or e.shape[0] != e.shape[1]:
        raise ValueError("e, h, f must be square matrices of equal size")
    residuals = (
        float(np.linalg.norm(_comm(e, f) - h)),
        float(np.linalg.norm(_comm(h, e) - 2 * e)),
        float(np.linalg.norm(_comm(h, f) + 2 * f)),
        float(np.linalg.norm(h - h.conj().T)) if hermitian else 0.0,
    )
    return Sl2Triple(e, h, f, residuals)


# ------------------------------------------------------------- gl(V) case


@dataclass(frozen=True)
class BlockNilpotent:
    """Strictly upper-triangular block element of gl(V), V = V_1 + ... + V_k.

    blocks maps (i, j) with i < j (1-based) to a matrix V_i -> V_j of shape
    (dims[j-1], dims[i-1]).
    """

    dims: tuple[int, ...]
    blocks: dict[tuple[int, int], np.ndarray]

    def __post_init__(self):
        for (i, j), m in self.blocks.items():
            if not 1 <= i < j <= len(self.dims):
                raise ValueError(f"block index {(i, j)} out of range")
            want = (self.dims[j - 1], self.dims[i - 1])
            if np.shape(m) != want:
                raise ValueError(f"block {(i, j)} has shape {np.shape(m)}, expected {want}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def offset(self, i: int) -> int:
        return sum(self.dims[: i - 1])

    def embed(self, i: int, j: int, m) -> np.ndarray:
        """Place a V_i -> V_j block into End(V)."""
        E = np.zeros((self.total_dim, self.total_dim), dtype=complex)
        oi, oj = self.offset(i), self.offset(j)
        E[oj: oj + self.dims[j - 1], oi: oi + self.dims[i - 1]] = m
        return E


def gl_hermitian_characteristic(x: BlockNilpotent) -> dict[tuple[int, int], Sl2Triple]:
    """Per-block sl2-triples f = e+, h = [e, f], embedded in End(V)."""
    triples = {}
    for (i, j), e_block in sorted(x.blocks.items()):
        f_block = mp_inverse(e_block)
        e = x.embed(i, j, e_block)
        f = x.embed(j, i, f_block)
        triples[(i, j)] = verify_sl2(e, _comm(e, f), f)
    return triples


# ------------------------------------------------- orthogonal/symplectic


@dataclass(frozen=True)
class ClassicalGrading:
    """Basis layout U_1^+ .. U_k^+, U_1^- .. U_k^-, W with the flag form.

    The pairing is omega(u_i^+, u_i^-) = delta; the W block carries the
    identity (symmetric) or the standard symplectic matrix (skew).
    """

    u_dims: tuple[int, ...]
    w_dim: int
    kind: str  # "symmetric" | "skew"
    omega: BilinearSpace = field(repr=False)

    @property
    def total_dim(self) -> int:
        return 2 * sum(self.u_dims) + self.w_dim

    def plus_slice(self, i: int) -> slice:
        o = sum(self.u_dims[: i - 1])
        return slice(o, o + self.u_dims[i - 1])

    def minus_slice(self, i: int) -> slice:
        o = sum(self.u_dims) + sum(self.u_dims[: i - 1])
        return slice(o, o + self.u_dims[i - 1])

    @property
    def w_slice(self) -> slice:
        return slice(2 * sum(self.u_dims), self.total_dim)

    @property
    def w_gram(self) -> np.ndarray:
        return self.omega.gram[self.w_slice, self.w_slice]

    def _blank(self) -> np.ndarray:
        return np.zeros((self.total_dim, self.total_dim), dtype=complex)

    # each embed_* returns an omega-skew-symmetric element of End(V)

    def embed_between_plus(self, i: int, j: int, A) -> np.ndarray:
        """A: U_i^+ -> U_j^+ extended by -A^T on U_j^- -> U_i^-  (g_{l_j - l_i})."""
        A = np.asarray(A, dtype=complex)
        M = self._blank()
        M[self.plus_slice(j), self.plus_slice(i)] = A
        M[self.minus_slice(i), self.minus_slice(j)] = -A.T
        return M

    def embed_e_lambda(self, i: int, A) -> np.ndarray:
        """A: U_i^- -> W extended to g_{l_i} by the skewness-forced dual block.

        Signs are fixed so that a pair (A, B) solving the characteristic
        equations embeds via (embed_e_lambda, embed_f_lambda) into an
        honest sl2 triple; the equations only determine the pair up to a
        simultaneous sign flip.
        """
        A = np.asarray(A, dtype=complex)
        M = self._blank()
        M[self.w_slice, self.minus_slice(i)] = A
        M[self.plus_slice(i), self.w_slice] = -A.T @ self.w_gram.T
        return M

    def embed_f_lambda(self, i: int, B) -> np.ndarray:
        """B: W -> U_i^- extended to g_{-l_i}: dual map -A on U_i^+ -> W."""
        B = np.asarray(B, dtype=complex)
        M = self._blank()
        sign = -1.0 if self.kind == "symmetric" else 1.0
        M[self.minus_slice(i), self.w_slice] = B
        M[self.w_slice, self.plus_slice(i)] = sign * np.linalg.solve(self.w_gram, B.T)
        return M

    def embed_b_pair(self, i: int, j: int, B) -> np.ndarray:
        """B: U_i^- -> U_j^+ extended to g_{l_i + l_j} (i != j)."""
        B = np.asarray(B, dtype=complex)
        M = self._blank()
        sign = -1.0 if self.kind == "symmetric" else 1.0
        M[self.plus_slice(j), self.minus_slice(i)] = B
        M[self.plus_slice(i), self.minus_slice(j)] = sign * B.T
        return M

    def embed_b_single(self, i: int, B, rtol: float = DEFAULT_TOL) -> np.ndarray:
        """B: U_i^- -> U_i^+, antisymmetric (symmetric form) or symmetric
        (skew form), extended to g_{2 l_i}."""
        B = np.asarray(B, dtype=complex)
        want_sign = -1.0 if self.kind == "symmetric" else 1.0
        if np.linalg.norm(B - want_sign * B.T) > rtol * (1 + np.linalg.norm(B)):
            raise ValueError("block violates the symmetry the form imposes")
        M = self._blank()
        M[self.plus_slice(i), self.minus_slice(i)] = B
        return M

    def g2lambda_dim(self, i: int) -> int:
        u = self.u_dims[i - 1]
        return u * (u - 1) // 2 if self.kind == "symmetric" else u * (u + 1) // 2


def build_classical_grading(u_dims, w_dim: int, kind: str) -> ClassicalGrading:
    if kind not in ("symmetric", "skew"):
        raise ValueError("kind must be 'symmetric' or 'skew'")
    u_dims = tuple(int(d) for d in u_dims)
    if any(d <= 0 for d in u_dims) or w_dim < 0:
        raise ValueError("inconsistent dimensions")
    if kind == "skew" and w_dim % 2:
        raise ValueError("skew form needs even-dimensional W")
    s = sum(u_dims)
    n = 2 * s + w_dim
    gram = np.zeros((n, n), dtype=complex)
    eye = np.eye(s)
    gram[:s, s: 2 * s] = eye
    gram[s: 2 * s, :s] = eye if kind == "symmetric" else -eye
    if w_dim:
        wg = (symmetric_space(w_dim) if kind == "symmetric" else symplectic_space(w_dim)).gram
        gram[2 * s:, 2 * s:] = wg
    space = BilinearSpace(f"flag-{kind}", n, gram)
    return ClassicalGrading(u_dims, w_dim, kind, space)


# --------------------------------------------------------------- the lemma


@dataclass(frozen=True)
class LemmaSolution:
    """Output of lemma_B_from_A, with the splitting used to build it."""

    A: np.ndarray
    B: np.ndarray
    #: Gram matrix of the Hermitian form on U (x, y) -> x* H y
    hermitian_u: np.ndarray
    W0: np.ndarray
    W1: np.ndarray
    W2: np.ndarray
    W3: np.ndarray
    U0: np.ndarray
    U1: np.ndarray
    U2: np.ndarray


def _null_basis(M: np.ndarray, dim: int, rtol: float) -> np.ndarray:
    if M.shape[0] == 0 or np.linalg.norm(M) == 0.0:
        return np.eye(dim, dtype=complex)
    _, s, Vh = np.linalg.svd(M)
    mask = np.zeros(dim, dtype=bool)
    mask[: len(s)] = s <= rtol * s[0]
    mask[len(s):] = True
    return Vh.conj().T[:, mask]


def lemma_B_from_A(A, space: BilinearSpace,
                   rtol: float = DEFAULT_TOL) -> LemmaSolution:
    """Solve the characteristic equations for A: U -> W.

    space must be the symmetric or symplectic form on W in its standard
    Gram; the Hermitian product on W is the standard coordinate one.
    Total: works for every A, including A = 0.
    """
    A = np.asarray(A, dtype=complex)
    k, n = A.shape
    if k != space.dim:
        raise ValueError(f"A maps into C^{k} but the form lives on C^{space.dim}")
    G = space.gram

    im = orth(A, rtol)                       # Hermitian-orthonormal basis of Im A
    Gr = im.T @ G @ im
    if im.shape[1]:
        _, s, Vh = np.linalg.svd(Gr)
        small = s <= rtol * max(np.linalg.norm(G, 2), 1.0)
        W0 = im @ Vh.conj().T[:, small]
        W1 = im @ Vh.conj().T[:, ~small]
    else:
        W0 = np.zeros((k, 0), dtype=complex)
        W1 = np.zeros((k, 0), dtype=complex)
    W2 = G @ W0.conj()
    # W3 must be the omega-orthogonal leftover: the displayed action of
    # (AB)# on the four summands forces omega(W3, W0 + W1 + W2) = 0, and
    # Hermitian orthogonality of W3 against W0 and W2 then holds for free.
    W3 = _null_basis(np.hstack([W0, W1, W2]).T @ G, k, rtol)

    Aplus = mp_inverse(A, rtol)              # inverts Im A -> Ker-perp
    U0, U1 = Aplus @ W0, Aplus @ W1
    U2 = _null_basis(A, n, rtol)

    T = np.hstack([orth(U0, rtol), orth(U1, rtol), U2])
    if T.shape[1] != n:
        raise RuntimeError("U0 + U1 + U2 failed to fill U; rank tolerance too tight")
    hermitian_u = np.linalg.inv(T @ T.conj().T)

    S = np.hstack([W0, W1, W2, W3])
    if S.shape[1] != k:
        raise RuntimeError("W0..W3 failed to fill W; rank tolerance too tight")
    images = np.hstack([
        Aplus @ W0,
        2 * (Aplus @ W1),
        np.zeros((n, W2.shape[1] + W3.shape[1]), dtype=complex),
    ])
    B = images @ np.linalg.inv(S)
    return LemmaSolution(A, B, hermitian_u, W0, W1, W2, W3, U0, U1, U2)


def lemma_residuals(sol: LemmaSolution, space: BilinearSpace) -> dict[str, float]:
    """Scale-normalized residuals of the two equations and both
    Hermitianity conditions."""
    A, B, H = sol.A, sol.B, sol.hermitian_u
    AB = A @ B
    ABs = sharp_adjoint(AB, space)
    nA, nB = np.linalg.norm(A), np.linalg.norm(B)
    scale = 1.0 + nA + nB + nA * nB * (1.0 + nA)
    star_a = np.linalg.norm(2 * A - 2 * AB @ A + ABs @ A) / scale
    star_b = np.linalg.norm(2 * B - 2 * B @ AB + B @ ABs) / scale
    BA = B @ A
    herm_ba = np.linalg.norm(BA.conj().T @ H - H @ BA) / (1.0 + np.linalg.norm(H) * np.linalg.norm(BA))
    X = AB - ABs
    herm_ab = np.linalg.norm(X - X.conj().T) / (1.0 + np.linalg.norm(X))
    return {"star_a": star_a, "star_b": star_b, "herm_ba": herm_ba, "herm_ab": herm_ab}
