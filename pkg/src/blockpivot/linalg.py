"""Dense linear algebra primitives over the real or complex field.

Every rank-like decision in the package flows through the same SVD
cutoff (``rank_rel_tol * sigma_max``), and every semidefiniteness
decision through the same eigenvalue slack (``psd_tol``), so that
higher-level equivalence checks cannot disagree because of mismatched
thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, PreconditionError
from .tolerances import DEFAULT_TOL, ToleranceConfig

__all__ = [
    "Inertia",
    "SubspaceBasis",
    "as_matrix",
    "adjoint",
    "max_abs",
    "is_hermitian",
    "hermitian_part",
    "imag_part",
    "pinv",
    "rank",
    "inertia",
    "kernel_basis",
    "range_basis",
    "subspace_leq",
    "subspace_eq",
    "loewner_leq",
    "is_psd",
    "is_ep",
    "projector_range",
    "projector_corange",
]


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Validate and normalize a 2-d array to float64 or complex128.

    Raises InvalidInputError for wrong dimensionality or non-finite
    entries.
    """
    arr = np.asarray(m)
    if arr.ndim != 2:
        raise InvalidInputError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if np.iscomplexobj(arr):
        arr = arr.astype(np.complex128, copy=False)
        finite = np.isfinite(arr.real) & np.isfinite(arr.imag)
    else:
        arr = arr.astype(np.float64, copy=False)
        finite = np.isfinite(arr)
    if arr.size and not finite.all():
        raise InvalidInputError(f"{name} contains non-finite entries")
    return arr


def as_vector(v, length: int | None = None, name: str = "vector") -> np.ndarray:
    """Validate a 1-d array, optionally of a required length."""
    arr = np.asarray(v)
    if arr.ndim != 1:
        raise InvalidInputError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if np.iscomplexobj(arr):
        arr = arr.astype(np.complex128, copy=False)
        finite = np.isfinite(arr.real) & np.isfinite(arr.imag)
    else:
        arr = arr.astype(np.float64, copy=False)
        finite = np.isfinite(arr)
    if arr.size and not finite.all():
        raise InvalidInputError(f"{name} contains non-finite entries")
    if length is not None and arr.shape[0] != length:
        raise InvalidInputError(f"{name} must have length {length}, got {arr.shape[0]}")
    return arr


def adjoint(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def max_abs(m: np.ndarray) -> float:
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m)))


def is_hermitian(m, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        return False
    return max_abs(arr - adjoint(arr)) <= tol.scaled_eq_tol(arr)


def hermitian_part(m) -> np.ndarray:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"hermitian part needs a square matrix, got {arr.shape}")
    return (arr + adjoint(arr)) / 2.0


def imag_part(m) -> np.ndarray:
    """The self-adjoint matrix (M - M^H) / 2i.  Zero for Hermitian M."""
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"imaginary part needs a square matrix, got {arr.shape}")
    return (arr.astype(np.complex128) - adjoint(arr).astype(np.complex128)) / 2j


@dataclass(frozen=True)
class Inertia:
    """Signature counts (n_pos, n_neg, n_zero) of a Hermitian matrix."""

    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero


@dataclass(frozen=True)
class SubspaceBasis:
    """An orthonormal column basis of a subspace of F^ambient_dim."""

    ambient_dim: int
    vectors: np.ndarray  # shape (ambient_dim, dim), orthonormal columns

    def __post_init__(self):
        v = self.vectors
        if v.ndim != 2 or v.shape[0] != self.ambient_dim:
            raise InvalidInputError(
                f"basis vectors shape {v.shape} does not match ambient dim {self.ambient_dim}"
            )

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def projector(self) -> np.ndarray:
        """Orthogonal projector onto the spanned subspace."""
        return self.vectors @ adjoint(self.vectors)


def _svd_factor(arr: np.ndarray, tol: ToleranceConfig):
    """Shared SVD with the package-wide rank cutoff.

    Returns (u, s, vh, r) where r is the numerical rank.  The same
    cutoff feeds pinv, rank, kernel_basis and range_basis.
    """
    u, s, vh = np.linalg.svd(arr, full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        r = 0
    else:
        r = int(np.sum(s > tol.rank_rel_tol * s[0]))
    return u, s, vh, r


def pinv(m, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD with relative rank cutoff."""
    arr = as_matrix(m)
    u, s, vh, r = _svd_factor(arr, tol)
    if r == 0:
        return np.zeros((arr.shape[1], arr.shape[0]), dtype=arr.dtype)
    inv = 1.0 / s[:r]
    return adjoint(vh[:r, :]) @ (inv[:, None] * adjoint(u[:, :r]))


def rank(m, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    arr = as_matrix(m)
    return _svd_factor(arr, tol)[3]


def inertia(h, tol: ToleranceConfig = DEFAULT_TOL) -> Inertia:
    """Eigenvalue sign counts of a Hermitian matrix with psd_tol ties."""
    arr = as_matrix(h)
    if not is_hermitian(arr, tol):
        raise PreconditionError("inertia needs a Hermitian matrix")
    w = np.linalg.eigvalsh(hermitian_part(arr))
    n_pos = int(np.sum(w > tol.psd_tol))
    n_neg = int(np.sum(w < -tol.psd_tol))
    return Inertia(n_pos, n_neg, arr.shape[0] - n_pos - n_neg)


def kernel_basis(m, tol: ToleranceConfig = DEFAULT_TOL) -> SubspaceBasis:
    """Orthonormal basis of the null space, from the SVD."""
    arr = as_matrix(m)
    _, _, vh, r = _svd_factor(arr, tol)
    return SubspaceBasis(arr.shape[1], adjoint(vh[r:, :]))


def range_basis(m, tol: ToleranceConfig = DEFAULT_TOL) -> SubspaceBasis:
    """Orthonormal basis of the column space, from the SVD."""
    arr = as_matrix(m)
    u, _, _, r = _svd_factor(arr, tol)
    return SubspaceBasis(arr.shape[0], u[:, :r])


def subspace_leq(s1: SubspaceBasis, s2: SubspaceBasis, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether span(s1) is contained in span(s2), by projector residual."""
    if s1.ambient_dim != s2.ambient_dim:
        raise InvalidInputError(
            f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}"
        )
    if s1.dim == 0:
        return True
    v = s1.vectors
    resid = v - s2.projector() @ v
    if resid.size == 0:
        return True
    col_norms = np.linalg.norm(resid, axis=0)
    return float(np.max(col_norms)) <= tol.eq_tol


def subspace_eq(s1: SubspaceBasis, s2: SubspaceBasis, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return subspace_leq(s1, s2, tol) and subspace_leq(s2, s1, tol)


def loewner_leq(h1, h2, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether H1 <= H2 in the semidefinite order, within psd_tol."""
    a1 = as_matrix(h1, "h1")
    a2 = as_matrix(h2, "h2")
    if a1.shape != a2.shape:
        raise PreconditionError(f"dimension mismatch: {a1.shape} vs {a2.shape}")
    if not is_hermitian(a1, tol) or not is_hermitian(a2, tol):
        raise PreconditionError("ordering is defined for Hermitian matrices only")
    if a1.shape[0] == 0:
        return True
    diff = hermitian_part(a2.astype(np.result_type(a1, a2)) - a1)
    w_min = float(np.linalg.eigvalsh(diff)[0])
    return w_min >= -tol.psd_tol


def is_psd(h, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    arr = as_matrix(h)
    return loewner_leq(np.zeros_like(arr), arr, tol)


def is_ep(m, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether M commutes with its pseudoinverse (range = co-range)."""
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"EP test needs a square matrix, got {arr.shape}")
    p = pinv(arr, tol)
    return max_abs(arr @ p - p @ arr) <= tol.eq_tol


def projector_range(m, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projector M M^+ onto the range of M."""
    arr = as_matrix(m)
    return arr @ pinv(arr, tol)


def projector_corange(m, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projector M^+ M onto the row space of M."""
    arr = as_matrix(m)
    return pinv(arr, tol) @ arr
