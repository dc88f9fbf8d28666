"""Dense complex linear algebra: bilinear spaces, Moore-Penrose inverse,
form adjoints, and restriction invariants.

Matrices are plain complex ndarrays.  Bilinear forms are wrapped in
BilinearSpace, which fixes the Gram matrix in the standard basis; the
Hermitian scalar product is always the standard coordinate one, matching
the convention {u, v} = omega(u, I^t conj(v)) for each supported Gram I.

All rank decisions use DEFAULT_TOL relative to the largest singular value
involved; exact arithmetic is never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-10

_DET_KIND = "det-on-C2xC2"
_PF_KIND = "pf-on-L2C4"

#: Basis order for the pf kind: coordinates of Lambda^2 C^4.
PF_BASIS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


@dataclass(frozen=True)
class BilinearSpace:
    """A nondegenerate bilinear form omega(x, y) = x^T gram y on C^dim."""

    kind: str
    dim: int
    gram: np.ndarray

    @property
    def symmetric(self) -> bool:
        return bool(np.array_equal(self.gram, self.gram.T))

    def omega(self, x, y) -> complex:
        return complex(np.asarray(x) @ self.gram @ np.asarray(y))

    def quadratic(self, x) -> complex:
        return self.omega(x, x)


def symmetric_space(dim: int) -> BilinearSpace:
    return BilinearSpace("symmetric-Id", dim, np.eye(dim, dtype=complex))


def symplectic_space(dim: int) -> BilinearSpace:
    if dim % 2:
        raise ValueError("symplectic form needs even dimension")
    h = dim // 2
    gram = np.zeros((dim, dim), dtype=complex)
    gram[:h, h:] = np.eye(h)
    gram[h:, :h] = -np.eye(h)
    return BilinearSpace("symplectic-I", dim, gram)


def _gram_from_quadratic(q, dim: int) -> np.ndarray:
    basis = np.eye(dim, dtype=complex)
    gram = np.empty((dim, dim), dtype=complex)
    for i in range(dim):
        for j in range(dim):
            gram[i, j] = (q(basis[i] + basis[j]) - q(basis[i]) - q(basis[j])) / 2
    return gram


def det_value(x) -> complex:
    """det of x in C^2 (x) C^2, coordinates in row-major matrix order."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (4,):
        raise ValueError("det form lives on C^2 (x) C^2 = C^4")
    return x[0] * x[3] - x[1] * x[2]


def pf_value(x) -> complex:
    """Pf of x in Lambda^2 C^4: half the e1^e2^e3^e4 coefficient of x^x."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (6,):
        raise ValueError("pf form lives on Lambda^2 C^4 = C^6")
    return x[0] * x[5] - x[1] * x[4] + x[2] * x[3]


def det_space() -> BilinearSpace:
    return BilinearSpace(_DET_KIND, 4, _gram_from_quadratic(det_value, 4))


def pf_space() -> BilinearSpace:
    return BilinearSpace(_PF_KIND, 6, _gram_from_quadratic(pf_value, 6))


def quadratic_value(x, space: BilinearSpace) -> complex:
    """Value of the canonical quadratic form of a det- or pf-kind space."""
    if space.kind == _DET_KIND:
        return det_value(x)
    if space.kind == _PF_KIND:
        return pf_value(x)
    raise ValueError(f"no canonical quadratic form for kind {space.kind!r}")


# ----------------------------------------------------------- Moore-Penrose


def mp_inverse(F, rtol: float = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose inverse via the kernel/image decomposition.

    Singular vectors with singular value > rtol * s_max span the Hermitian
    complements of Ker F and of the complement of Im F; F restricted to
    them is inverted, the rest is sent to zero.
    """
    F = np.asarray(F, dtype=complex)
    U, s, Vh = np.linalg.svd(F, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((F.shape[1], F.shape[0]), dtype=complex)
    keep = s > rtol * s[0]
    return (Vh[keep].conj().T / s[keep]) @ U[:, keep].conj().T


def penrose_residuals(F, P) -> tuple[float, float, float, float]:
    """Scale-normalized residuals of the four Penrose equations.

    Each residual is ||lhs - rhs|| divided by the norm scale of the
    computation producing it, so a backward-stable pseudoinverse scores
    near machine epsilon regardless of conditioning.
    """
    F = np.asarray(F, dtype=complex)
    P = np.asarray(P, dtype=complex)
    nF, nP = np.linalg.norm(F), np.linalg.norm(P)

    def rel(num: float, scale: float) -> float:
        return num / scale if scale > 0 else num

    FP, PF = F @ P, P @ F
    return (
        rel(np.linalg.norm(P @ FP - P), nP * nF * nP + nP),
        rel(np.linalg.norm(FP @ F - F), nF * nP * nF + nF),
        rel(np.linalg.norm(FP - FP.conj().T), nF * nP + 1.0),
        rel(np.linalg.norm(PF - PF.conj().T), nF * nP + 1.0),
    )


# ------------------------------------------------------------ form algebra


def sharp_adjoint(A, space: BilinearSpace) -> np.ndarray:
    """Adjoint w.r.t. the bilinear form: omega(Ax, y) = omega(x, A# y)."""
    A = np.asarray(A, dtype=complex)
    if A.shape != (space.dim, space.dim):
        raise ValueError(f"expected a {space.dim}x{space.dim} matrix, got {A.shape}")
    return np.linalg.solve(space.gram, A.T @ space.gram)


def orth(M, rtol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the column span of M."""
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((M.shape[0], 0), dtype=complex)
    return U[:, s > rtol * s[0]]


def restriction_invariants(S, space: BilinearSpace,
                           rtol: float = DEFAULT_TOL) -> tuple[int, int]:
    """(rank, radical dimension) of the form restricted to span(S).

    S is a sequence of vectors or a matrix whose columns span the subspace.
    The radical is the kernel of the restricted Gram matrix; its dimension
    is basis-independent.
    """
    S = np.asarray(S, dtype=complex)
    if S.ndim == 1:
        S = S[:, None]
    elif S.shape[0] != space.dim:
        S = S.T if S.shape[1] == space.dim else S
    if S.shape[0] != space.dim:
        raise ValueError(f"vectors must live in C^{space.dim}")
    B = orth(S, rtol)
    r = B.shape[1]
    if r == 0:
        return 0, 0
    G = B.T @ space.gram @ B
    s = np.linalg.svd(G, compute_uv=False)
    gram_rank = int(np.sum(s > rtol * max(np.linalg.norm(space.gram, 2), 1.0)))
    return r, r - gram_rank


# ------------------------------------------- structured subspace builders


def _solve_constraints(C: np.ndarray, dim: int, rtol: float) -> np.ndarray:
    """Orthonormal basis of {x : C x = 0} (all of C^dim if C is empty)."""
    if C.shape[0] == 0:
        return np.eye(dim, dtype=complex)
    _, s, Vh = np.linalg.svd(C)
    null_mask = np.zeros(dim, dtype=bool)
    null_mask[: len(s)] = s <= rtol * max(s[0], 1.0)
    null_mask[len(s):] = True
    return Vh.conj().T[:, null_mask]


def isotropic_vector_in(space: BilinearSpace, basis: np.ndarray,
                        rng: np.random.Generator,
                        rtol: float = DEFAULT_TOL) -> np.ndarray | None:
    """A nonzero isotropic vector inside the column span of basis."""
    k = basis.shape[1]
    if k == 0:
        return None
    if not space.symmetric:
        return basis @ (rng.standard_normal(k) + 1j * rng.standard_normal(k))
    for _ in range(32):
        a = basis @ (rng.standard_normal(k) + 1j * rng.standard_normal(k))
        b = basis @ (rng.standard_normal(k) + 1j * rng.standard_normal(k))
        qa, qb = space.quadratic(a), space.quadratic(b)
        qab = space.omega(a, b)
        # q(a + t b) = qa + 2 t qab + t^2 qb
        if abs(qb) > rtol:
            disc = np.sqrt(qab * qab - qa * qb)
            t = (-qab + disc) / qb
            v = a + t * b
        elif abs(qab) > rtol:
            v = a - qa / (2 * qab) * b
        else:
            v = b
        if np.linalg.norm(v) > rtol and abs(space.quadratic(v / np.linalg.norm(v))) < 1e-8:
            return v / np.linalg.norm(v)
    return None


def span_with_invariants(space: BilinearSpace, rank: int, radical: int,
                         rng: np.random.Generator,
                         rtol: float = DEFAULT_TOL) -> np.ndarray:
    """Columns spanning a rank-dim subspace whose restricted form has the
    given radical dimension.  Raises if the pattern is not realizable."""
    n = space.dim
    if not (0 <= radical <= rank <= n and radical <= n - rank):
        raise ValueError(f"(rank, radical) = ({rank}, {radical}) not realizable in dim {n}")
    if not space.symmetric and (rank - radical) % 2:
        raise ValueError("skew form: the nondegenerate part must have even rank")
    step = 1 if space.symmetric else 2  # odd skew Grams are always singular
    for _ in range(64):
        cols: list[np.ndarray] = []
        # nondegenerate part: random vectors, kept while the Gram stays nondegenerate
        attempts = 0
        while len(cols) < rank - radical and attempts < 200:
            attempts += 1
            vs = [rng.standard_normal(n) + 1j * rng.standard_normal(n) for _ in range(step)]
            trial = cols + [v / np.linalg.norm(v) for v in vs]
            M = np.column_stack(trial)
            G = M.T @ space.gram @ M
            s = np.linalg.svd(G, compute_uv=False)
            if s[-1] > 1e-6:
                cols = trial
        if len(cols) < rank - radical:
            continue
        # radical part: isotropic vectors orthogonal to everything chosen so far
        ok = True
        for _ in range(radical):
            M = np.column_stack(cols) if cols else np.zeros((n, 0))
            C = (space.gram @ M).T if M.shape[1] else np.zeros((0, n), dtype=complex)
            C = np.vstack([C, (space.gram.T @ M).T]) if M.shape[1] else C
            free = _solve_constraints(C, n, rtol)
            v = isotropic_vector_in(space, free, rng, rtol)
            if v is None:
                ok = False
                break
            cols.append(v)
        if not ok:
            continue
        M = np.column_stack(cols)
        if np.linalg.matrix_rank(M, tol=1e-8) != rank:
            continue
        if restriction_invariants(M, space, rtol) == (rank, radical):
            return M
    raise RuntimeError(f"could not realize (rank, radical) = ({rank}, {radical})")


def expm(X: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a Taylor core."""
    X = np.asarray(X, dtype=complex)
    k = max(0, int(np.ceil(np.log2(max(np.linalg.norm(X, 1), 1e-300)))) + 1)
    Y = X / (2.0 ** k)
    E = np.eye(X.shape[0], dtype=complex)
    term = np.eye(X.shape[0], dtype=complex)
    for i in range(1, 24):
        term = term @ Y / i
        E = E + term
    for _ in range(k):
        E = E @ E
    return E


def form_preserving(space: BilinearSpace, rng: np.random.Generator,
                    scale: float = 0.5) -> np.ndarray:
    """A random invertible h with h^T gram h = gram (exp of a form-skew map)."""
    n = space.dim
    S = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    S = (S - S.T) / 2 if space.symmetric else (S + S.T) / 2
    X = np.linalg.solve(space.gram, scale * S)
    return expm(X)
