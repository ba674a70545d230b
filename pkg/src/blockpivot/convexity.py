"""Concavity of the symmetrized pivot transform and what follows from it.

On Hermitian PSD pairs whose pivot blocks share a kernel, the map
A -> jppt(A) is concave along the segment: the transform of a convex
combination dominates the combination of transforms.  Extracting the
(1,1) block gives concavity of the Schur complement; embedding a plain
PSD pair as pivot blocks bordered by zeros gives convexity of the
pseudoinverse.  Each operation returns the gap matrix with a PSD
verdict rather than a bare boolean, so failures are inspectable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blockmat import BlockMatrix
from .errors import InvalidInputError, PreconditionError
from .linalg import (
    as_matrix,
    hermitian_part,
    is_hermitian,
    kernel_basis,
    loewner_leq,
    pinv,
    subspace_eq,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig
from .transforms import jppt, schur_complement

__all__ = [
    "GapResult",
    "jppt_concavity_gap",
    "schur_concavity_gap",
    "pinv_convexity_gap",
    "bordered_embedding",
]


@dataclass(frozen=True)
class GapResult:
    gap: np.ndarray
    psd: bool


def _check_t(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise InvalidInputError(f"t must lie in [0, 1], got {t}")
    return t


def _check_concavity_pair(a: BlockMatrix, b: BlockMatrix, tol: ToleranceConfig):
    if (a.n1, a.n2) != (b.n1, b.n2):
        raise InvalidInputError(
            f"partition mismatch: ({a.n1}, {a.n2}) vs ({b.n1}, {b.n2})"
        )
    if not a.is_hermitian(tol) or not b.is_hermitian(tol):
        raise PreconditionError("both matrices must be Hermitian")
    for name, m in (("first", a), ("second", b)):
        if not loewner_leq(np.zeros_like(m.data), m.data, tol):
            raise PreconditionError(f"the {name} matrix must be positive semidefinite")
    if not subspace_eq(kernel_basis(a.a22, tol), kernel_basis(b.a22, tol), tol):
        raise PreconditionError("pivot blocks must have equal kernels")


def _psd_verdict(gap: np.ndarray, tol: ToleranceConfig) -> GapResult:
    g = hermitian_part(gap) if gap.size else gap
    return GapResult(g, loewner_leq(np.zeros_like(g), g, tol))


def jppt_concavity_gap(
    a: BlockMatrix, b: BlockMatrix, t: float, tol: ToleranceConfig = DEFAULT_TOL
) -> GapResult:
    """jppt((1-t)A + tB) - [(1-t) jppt(A) + t jppt(B)]; PSD under the
    preconditions (Hermitian PSD pair, shared pivot kernel)."""
    t = _check_t(t)
    _check_concavity_pair(a, b, tol)
    mix = BlockMatrix(a.n1, a.n2, (1.0 - t) * a.data + t * b.data)
    gap = jppt(mix, tol).data - ((1.0 - t) * jppt(a, tol).data + t * jppt(b, tol).data)
    return _psd_verdict(gap, tol)


def schur_concavity_gap(
    a: BlockMatrix, b: BlockMatrix, t: float, tol: ToleranceConfig = DEFAULT_TOL
) -> GapResult:
    """Schur-complement gap of the convex combination; equals the (1,1)
    block of the jppt gap."""
    t = _check_t(t)
    _check_concavity_pair(a, b, tol)
    mix = BlockMatrix(a.n1, a.n2, (1.0 - t) * a.data + t * b.data)
    gap = schur_complement(mix, tol) - (
        (1.0 - t) * schur_complement(a, tol) + t * schur_complement(b, tol)
    )
    return _psd_verdict(gap, tol)


def bordered_embedding(c, d) -> tuple[BlockMatrix, BlockMatrix]:
    """Embed square matrices as pivot blocks bordered by one zero row/column.

    The bordered matrices have partition (1, m) and zeros outside the
    pivot block, so their pivot transforms carry the pseudoinverses of C
    and D in the (negated) pivot position.
    """
    ca = as_matrix(c, "c")
    da = as_matrix(d, "d")
    if ca.shape != da.shape or ca.shape[0] != ca.shape[1]:
        raise InvalidInputError(f"need square matrices of equal size, got {ca.shape} and {da.shape}")
    m = ca.shape[0]
    dtype = np.result_type(ca, da)
    top = np.zeros((m + 1, m + 1), dtype=dtype)
    bot = np.zeros((m + 1, m + 1), dtype=dtype)
    top[1:, 1:] = ca
    bot[1:, 1:] = da
    return BlockMatrix(1, m, top), BlockMatrix(1, m, bot)


def pinv_convexity_gap(c, d, t: float, tol: ToleranceConfig = DEFAULT_TOL) -> GapResult:
    """(1-t) C^+ + t D^+ - [(1-t)C + tD]^+ for Hermitian PSD C, D with
    equal kernels; PSD under the preconditions.

    Equals the pivot-block extraction of the jppt concavity gap of the
    bordered embedding of (C, D).
    """
    t = _check_t(t)
    ca = as_matrix(c, "c")
    da = as_matrix(d, "d")
    if ca.shape != da.shape or ca.shape[0] != ca.shape[1]:
        raise InvalidInputError(f"need square matrices of equal size, got {ca.shape} and {da.shape}")
    if not is_hermitian(ca, tol) or not is_hermitian(da, tol):
        raise PreconditionError("both matrices must be Hermitian")
    for name, m in (("first", ca), ("second", da)):
        if not loewner_leq(np.zeros_like(m), m, tol):
            raise PreconditionError(f"the {name} matrix must be positive semidefinite")
    if not subspace_eq(kernel_basis(ca, tol), kernel_basis(da, tol), tol):
        raise PreconditionError("the matrices must have equal kernels")
    mix = (1.0 - t) * ca + t * da
    gap = ((1.0 - t) * pinv(ca, tol) + t * pinv(da, tol)) - pinv(hermitian_part(mix), tol)
    return _psd_verdict(gap, tol)
