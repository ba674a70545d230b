"""Ordering checks for partitioned Hermitian matrices.

The central report evaluates three conditions for a Hermitian pair
A <= B — the symmetrized pivot transforms stay ordered, the pivot-block
pseudoinverses reverse order, and the pivot-block segment keeps constant
rank — by independent algorithms, together with the Schur-complement
ordering these conditions imply.  The three are equivalent in exact
arithmetic, so the report carries a consistency verdict.

Rank decisions on Hermitian matrices here use the eigenvalue tie policy
(|eigenvalue| <= psd_tol counts as zero), the same slack the ordering
predicates use, so the equivalences cannot be broken by mismatched
thresholds.  Grid-sampling oracles are provided as independent
cross-checks of the deterministic verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blockmat import BlockMatrix
from .errors import InvalidInputError, PreconditionError
from .linalg import (
    SubspaceBasis,
    adjoint,
    as_matrix,
    hermitian_part,
    inertia,
    is_hermitian,
    kernel_basis,
    loewner_leq,
    max_abs,
    pinv,
    range_basis,
    rank,
    subspace_eq,
    subspace_leq,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig
from .transforms import jppt, schur_complement

__all__ = [
    "RankPathReport",
    "MonotonicityReport",
    "AlbertConditions",
    "PinvMonotoneResult",
    "SpectralPathResult",
    "OrderConditions",
    "SchurDifferenceResult",
    "albert_psd_conditions",
    "pinv_monotone",
    "spectral_path_check",
    "rank_path_constant",
    "rank_path_sampled",
    "det_sign_path_check",
    "ppt_monotonicity_report",
    "ppt_order_conditions",
    "schur_difference_identity",
]


# ---------------------------------------------------------------------------
# Hermitian helpers sharing the psd_tol tie policy


def _check_hermitian_pair(c, d, tol: ToleranceConfig):
    ca = as_matrix(c, "c")
    da = as_matrix(d, "d")
    if ca.shape != da.shape or ca.shape[0] != ca.shape[1]:
        raise InvalidInputError(f"need square matrices of equal size, got {ca.shape} and {da.shape}")
    if not is_hermitian(ca, tol) or not is_hermitian(da, tol):
        raise PreconditionError("both matrices must be Hermitian")
    return ca, da


def _herm_split(h: np.ndarray, tol: ToleranceConfig):
    """Eigen-split into (kernel basis, support basis, eigenvalues)."""
    w, v = np.linalg.eigh(hermitian_part(h))
    zero = np.abs(w) <= tol.psd_tol
    return v[:, zero], v[:, ~zero], w


def _herm_rank(h: np.ndarray, tol: ToleranceConfig) -> int:
    if h.size == 0:
        return 0
    w = np.linalg.eigvalsh(hermitian_part(h))
    return int(np.sum(np.abs(w) > tol.psd_tol))


def _golden_min(f, a: float, b: float, iters: int = 120) -> float:
    """Golden-section minimizer of a unimodal scalar function on [a, b]."""
    inv_phi = (np.sqrt(5.0) - 1.0) / 2.0
    x1 = b - inv_phi * (b - a)
    x2 = a + inv_phi * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv_phi * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv_phi * (b - a)
            f2 = f(x2)
    return (a + b) / 2.0


def _dip_windows(vals, ts) -> list:
    """Grid windows around local minima of ``vals``, endpoints included.

    A dip between two grid points shows up as a local minimum of the
    sampled values at one of the flanking indices; a dip inside the
    first or last cell can make the endpoint itself the minimum, so
    endpoint windows are candidates too.
    """
    n = len(vals)
    if n < 2:
        return []
    windows = []
    if vals[0] <= vals[1]:
        windows.append((float(ts[0]), float(ts[1])))
    for i in range(1, n - 1):
        if vals[i] < vals[i - 1] and vals[i] <= vals[i + 1]:
            windows.append((float(ts[i - 1]), float(ts[i + 1])))
    if vals[n - 1] < vals[n - 2]:
        windows.append((float(ts[n - 2]), float(ts[n - 1])))
    return windows


def _segment(c: np.ndarray, d: np.ndarray):
    def h(t: float) -> np.ndarray:
        return (1.0 - t) * c + t * d

    return h


def _sigma_min(m: np.ndarray) -> float:
    if m.size == 0:
        return 0.0
    return float(np.linalg.svd(m, compute_uv=False)[-1])


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class RankPathReport:
    """Verdict on whether rank((1-t)C + tD) is constant on [0, 1].

    ``method`` records which algorithm decided: 'kernel_inertia' (the
    kernels of the endpoints differ), 'spectral' (eigenvalues of the
    compressed pencil), or 'sampled' (grid oracle).  ``witness_t`` is a
    point where the rank deviates, present iff ``constant`` is false;
    ``common_rank`` is present iff ``constant`` is true.
    """

    constant: bool
    common_rank: int | None
    witness_t: float | None
    method: str
    endpoint_ranks: tuple[int, int]


@dataclass(frozen=True)
class MonotonicityReport:
    """Evaluated ordering conditions for a Hermitian pair A <= B.

    ppt_ordered: the symmetrized pivot transforms satisfy
    jppt(A) <= jppt(B).  pinv_reversed: the pivot-block pseudoinverses
    satisfy B22^+ <= A22^+.  rank_path: constant-rank verdict for the
    pivot-block segment.  schur_ordered: A/A22 <= B/B22.  The three
    conditions are equivalent and each implies schur_ordered, so
    ``consistent`` is true iff they agree and (when they hold)
    schur_ordered holds too.  When A <= B fails, hypothesis_ok is false
    and the fields are diagnostic only.
    """

    hypothesis_ok: bool
    ppt_ordered: bool
    pinv_reversed: bool
    rank_path: RankPathReport
    schur_ordered: bool
    consistent: bool


@dataclass(frozen=True)
class AlbertConditions:
    """The three block conditions equivalent to 0 <= A for Hermitian A."""

    psd22: bool
    ker_incl: bool
    psd_schur: bool
    overall: bool


@dataclass(frozen=True)
class PinvMonotoneResult:
    """Whether C <= D forces D^+ <= C^+: kernels equal and negative
    eigenvalue counts equal."""

    holds: bool
    ker_equal: bool
    inertia_equal: bool


@dataclass(frozen=True)
class SpectralPathResult:
    """Eigenvalues of D^-1 C and the derived no-crossing verdict.

    no_crossing is true when no eigenvalue (real part) lies in
    (-inf, psd_tol]; equivalently det[(1-t)C + tD] never vanishes on
    [0, 1].  real_spectrum flags imaginary parts within eq_tol (always
    the case when C <= D).
    """

    no_crossing: bool
    real_spectrum: bool
    eigvals: tuple


@dataclass(frozen=True)
class OrderConditions:
    """Block conditions equivalent to jppt(A) <= jppt(B)."""

    pinv_leq: bool
    ker_incl: bool
    residual_psd: bool
    overall: bool


@dataclass(frozen=True)
class SchurDifferenceResult:
    """Both closed forms for the Schur complement of a difference.

    lhs is (B-A)/(B-A)22; rhs subtracts the correction term built from
    (A22^+ - B22^+)^+, rhs_alt the one built from
    A22 + A22 (B22 - A22)^+ A22.  inclusions_ok reports the kernel and
    range inclusions that accompany the identity.
    """

    lhs: np.ndarray
    rhs: np.ndarray
    rhs_alt: np.ndarray
    residual: float
    residual_alt: float
    inclusions_ok: bool


# ---------------------------------------------------------------------------
# Operations


def albert_psd_conditions(a: BlockMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> AlbertConditions:
    """Blockwise semidefiniteness test for a Hermitian partitioned matrix.

    0 <= A holds iff the pivot block is PSD, its kernel is contained in
    the kernel of the (1,2) block, and the Schur complement is PSD.
    """
    if not a.is_hermitian(tol):
        raise PreconditionError("the matrix must be Hermitian")
    a22 = a.a22
    psd22 = loewner_leq(np.zeros_like(a22), a22, tol)
    p = pinv(a22, tol)
    resid = max_abs(a.a12 - a.a12 @ p @ a22)
    ker_incl = resid <= tol.scaled_eq_tol(a.data)
    s = hermitian_part(schur_complement(a, tol))
    psd_schur = loewner_leq(np.zeros_like(s), s, tol)
    return AlbertConditions(psd22, ker_incl, psd_schur, psd22 and ker_incl and psd_schur)


def pinv_monotone(c, d, tol: ToleranceConfig = DEFAULT_TOL) -> PinvMonotoneResult:
    """Whether the pseudoinverses of an ordered Hermitian pair reverse order.

    For C <= D, D^+ <= C^+ holds exactly when ker C = ker D and the
    negative eigenvalue counts agree.
    """
    ca, da = _check_hermitian_pair(c, d, tol)
    if not loewner_leq(ca, da, tol):
        raise PreconditionError("requires C <= D in the semidefinite order")
    ker_c, _, _ = _herm_split(ca, tol) if ca.size else (np.zeros((0, 0)), None, None)
    ker_d, _, _ = _herm_split(da, tol) if da.size else (np.zeros((0, 0)), None, None)
    m = ca.shape[0]
    ker_equal = subspace_eq(SubspaceBasis(m, ker_c), SubspaceBasis(m, ker_d), tol)
    inertia_equal = inertia(ca, tol).n_neg == inertia(da, tol).n_neg
    return PinvMonotoneResult(ker_equal and inertia_equal, ker_equal, inertia_equal)


def spectral_path_check(c, d, tol: ToleranceConfig = DEFAULT_TOL) -> SpectralPathResult:
    """No-crossing test for the segment from C to D via eigenvalues of D^-1 C.

    Requires invertible D.  The segment determinant det[(1-t)C + tD]
    vanishes for some t in [0, 1] exactly when D^-1 C has an eigenvalue
    in (-inf, 0]; the verdict applies psd_tol at that boundary.
    """
    ca, da = _check_hermitian_pair(c, d, tol)
    m = ca.shape[0]
    if m == 0:
        return SpectralPathResult(True, True, ())
    if _herm_rank(da, tol) < m:
        raise PreconditionError("D must be invertible for the spectral path test")
    eig = np.linalg.eigvals(np.linalg.solve(da, ca))
    real_spectrum = float(np.max(np.abs(eig.imag))) <= tol.eq_tol
    no_crossing = bool(np.all(eig.real > tol.psd_tol))
    return SpectralPathResult(no_crossing, real_spectrum, tuple(eig.tolist()))


def rank_path_constant(
    c,
    d,
    tol: ToleranceConfig = DEFAULT_TOL,
    *,
    require_order: bool = True,
) -> RankPathReport:
    """Deterministic constant-rank verdict for the segment from C to D.

    Route (i): if the kernels of C and D differ, the rank cannot be
    constant; a witness t is the smaller-rank endpoint, or an interior
    grid point where the rank exceeds the endpoint rank.  Route (ii):
    with a common kernel, both matrices are compressed onto its
    orthogonal complement, where D is invertible and the spectral
    no-crossing test decides; a failing segment gets a witness located
    by minimizing the smallest compressed singular value.

    ``require_order=False`` skips the C <= D precondition so the verdict
    can be used diagnostically.
    """
    ca, da = _check_hermitian_pair(c, d, tol)
    if require_order and not loewner_leq(ca, da, tol):
        raise PreconditionError("rank path analysis requires C <= D")
    m = ca.shape[0]
    if m == 0:
        return RankPathReport(True, 0, None, "spectral", (0, 0))
    ker_c, _, _ = _herm_split(ca, tol)
    ker_d, supp_d, _ = _herm_split(da, tol)
    r0 = m - ker_c.shape[1]
    r1 = m - ker_d.shape[1]
    kernels_equal = subspace_eq(SubspaceBasis(m, ker_c), SubspaceBasis(m, ker_d), tol)
    if not kernels_equal:
        if r0 != r1:
            witness = 0.0 if r0 < r1 else 1.0
        else:
            h = _segment(ca, da)
            witness = 0.5
            for t in np.linspace(0.0, 1.0, 101)[1:-1]:
                if _herm_rank(h(float(t)), tol) != r0:
                    witness = float(t)
                    break
        return RankPathReport(False, None, witness, "kernel_inertia", (r0, r1))
    cr = hermitian_part(adjoint(supp_d) @ ca @ supp_d)
    dr = hermitian_part(adjoint(supp_d) @ da @ supp_d)
    spect = spectral_path_check(cr, dr, tol)
    if spect.no_crossing:
        return RankPathReport(True, r0, None, "spectral", (r0, r1))
    h = _segment(cr, dr)
    ts = np.linspace(0.0, 1.0, 101)
    sigmas = [_sigma_min(h(float(t))) for t in ts]
    i_min = int(np.argmin(sigmas))
    lo = ts[max(i_min - 1, 0)]
    hi = ts[min(i_min + 1, len(ts) - 1)]
    witness = float(_golden_min(lambda t: _sigma_min(h(t)), float(lo), float(hi)))
    return RankPathReport(False, None, witness, "spectral", (r0, r1))


def rank_path_sampled(
    c,
    d,
    tol: ToleranceConfig = DEFAULT_TOL,
    points: int = 101,
) -> RankPathReport:
    """Grid-sampling oracle for the constant-rank verdict.

    Independent of the spectral route: ranks come from the SVD cutoff at
    ``points`` uniform t values, and interior dips of the borderline
    singular value are refined by golden-section search so rank drops
    between grid points are still detected.
    """
    ca, da = _check_hermitian_pair(c, d, tol)
    m = ca.shape[0]
    h = _segment(ca, da)
    ts = np.linspace(0.0, 1.0, points)
    ranks = [rank(h(float(t)), tol) for t in ts]
    endpoint = (ranks[0], ranks[-1])
    r_max = max(ranks)
    if m == 0 or r_max == 0:
        return RankPathReport(True, 0, None, "sampled", endpoint)
    for i, r in enumerate(ranks):
        if r < r_max:
            return RankPathReport(False, None, float(ts[i]), "sampled", endpoint)

    def borderline(t: float) -> float:
        s = np.linalg.svd(h(t), compute_uv=False)
        return float(s[r_max - 1])

    scale = 1.0 + max(max_abs(ca), max_abs(da))
    vals = [borderline(float(t)) for t in ts]
    for lo, hi in _dip_windows(vals, ts):
        t_star = _golden_min(borderline, lo, hi)
        if borderline(t_star) <= tol.psd_tol * scale:
            return RankPathReport(False, None, float(t_star), "sampled", endpoint)
    return RankPathReport(True, r_max, None, "sampled", endpoint)


def det_sign_path_check(
    c,
    d,
    tol: ToleranceConfig = DEFAULT_TOL,
    points: int = 101,
) -> bool:
    """Determinant-sign/rank grid oracle for the no-crossing verdict.

    Samples det[(1-t)C + tD] (as a product of eigenvalues) and the SVD
    rank on a uniform grid; a rank drop, a sign change, or an interior
    dip of the smallest singular value refined below psd_tol counts as a
    crossing.  Returns True when no crossing is detected.
    """
    ca, da = _check_hermitian_pair(c, d, tol)
    m = ca.shape[0]
    if m == 0:
        return True
    h = _segment(ca, da)
    ts = np.linspace(0.0, 1.0, points)
    dets = []
    for t in ts:
        ht = hermitian_part(h(float(t)))
        if rank(ht, tol) < m:
            return False
        dets.append(float(np.prod(np.linalg.eigvalsh(ht))))
    for i in range(1, points):
        if dets[i - 1] * dets[i] < 0.0:
            return False
    scale = 1.0 + max(max_abs(ca), max_abs(da))
    abs_dets = [abs(x) for x in dets]
    for lo, hi in _dip_windows(abs_dets, ts):
        t_star = _golden_min(lambda t: _sigma_min(h(t)), lo, hi)
        if _sigma_min(h(float(t_star))) <= tol.psd_tol * scale:
            return False
    return True


def ppt_monotonicity_report(
    a: BlockMatrix, b: BlockMatrix, tol: ToleranceConfig = DEFAULT_TOL
) -> MonotonicityReport:
    """Evaluate the equivalent ordering conditions for a Hermitian pair.

    When the hypothesis A <= B fails, the conditions are still evaluated
    for diagnostics but the equivalence is not claimed
    (hypothesis_ok=False); the consistency verdict is computed from the
    same formula either way.
    """
    if (a.n1, a.n2) != (b.n1, b.n2):
        raise InvalidInputError(
            f"partition mismatch: ({a.n1}, {a.n2}) vs ({b.n1}, {b.n2})"
        )
    if not a.is_hermitian(tol) or not b.is_hermitian(tol):
        raise PreconditionError("both matrices must be Hermitian")
    hypothesis_ok = loewner_leq(a.data, b.data, tol)
    ppt_ordered = loewner_leq(
        hermitian_part(jppt(a, tol).data), hermitian_part(jppt(b, tol).data), tol
    )
    pinv_reversed = loewner_leq(
        hermitian_part(pinv(b.a22, tol)), hermitian_part(pinv(a.a22, tol)), tol
    )
    path = rank_path_constant(a.a22, b.a22, tol, require_order=False)
    schur_ordered = loewner_leq(
        hermitian_part(schur_complement(a, tol)), hermitian_part(schur_complement(b, tol)), tol
    )
    agree = ppt_ordered == pinv_reversed == path.constant
    consistent = agree and ((not ppt_ordered) or schur_ordered)
    return MonotonicityReport(
        hypothesis_ok, ppt_ordered, pinv_reversed, path, schur_ordered, consistent
    )


def ppt_order_conditions(
    a: BlockMatrix, b: BlockMatrix, tol: ToleranceConfig = DEFAULT_TOL
) -> OrderConditions:
    """Block conditions equivalent to jppt(A) <= jppt(B), no A <= B needed.

    These are the semidefiniteness conditions applied to the difference
    of the symmetrized pivot transforms: the pivot pseudoinverses
    reverse order, a kernel inclusion ties the pseudoinverse drop to the
    coupling drop, and a corrected Schur-complement difference is PSD.
    """
    if (a.n1, a.n2) != (b.n1, b.n2):
        raise InvalidInputError(
            f"partition mismatch: ({a.n1}, {a.n2}) vs ({b.n1}, {b.n2})"
        )
    if not a.is_hermitian(tol) or not b.is_hermitian(tol):
        raise PreconditionError("both matrices must be Hermitian")
    pa = pinv(a.a22, tol)
    pb = pinv(b.a22, tol)
    dp = hermitian_part(pa - pb)
    g = b.a12 @ pb - a.a12 @ pa
    gr = pb @ b.a21 - pa @ a.a21
    pinv_leq = loewner_leq(hermitian_part(pb), hermitian_part(pa), tol)
    dp_pinv = pinv(dp, tol)
    ker_resid = max_abs(g - g @ dp_pinv @ dp)
    ker_incl = ker_resid <= tol.scaled_eq_tol(g, dp)
    s = hermitian_part((schur_complement(b, tol) - schur_complement(a, tol)) - g @ dp_pinv @ gr)
    residual_psd = loewner_leq(np.zeros_like(s), s, tol)
    return OrderConditions(
        pinv_leq, ker_incl, residual_psd, pinv_leq and ker_incl and residual_psd
    )


def schur_difference_identity(
    a: BlockMatrix, b: BlockMatrix, tol: ToleranceConfig = DEFAULT_TOL
) -> SchurDifferenceResult:
    """Closed forms for the Schur complement of B - A.

    Hypotheses (each certified, with a PreconditionError naming the
    failure): the pivot blocks share kernel and range, the kernel of the
    pivot difference is contained in the kernel of the (1,2) difference,
    and the range of the (2,1) difference is contained in the range of
    the pivot difference.  Under them, (B-A)/(B-A)22 equals the
    difference of Schur complements minus a correction term, in two
    algebraically equivalent forms whose residuals are reported.
    """
    if (a.n1, a.n2) != (b.n1, b.n2):
        raise InvalidInputError(
            f"partition mismatch: ({a.n1}, {a.n2}) vs ({b.n1}, {b.n2})"
        )
    if not a.is_hermitian(tol) or not b.is_hermitian(tol):
        raise PreconditionError("both matrices must be Hermitian")
    a22, b22 = a.a22, b.a22
    if not subspace_eq(kernel_basis(a22, tol), kernel_basis(b22, tol), tol):
        raise PreconditionError("pivot blocks must have equal kernels")
    if not subspace_eq(range_basis(a22, tol), range_basis(b22, tol), tol):
        raise PreconditionError("pivot blocks must have equal ranges")
    d22 = hermitian_part(b22 - a22)
    d22_pinv = pinv(d22, tol)
    cert_tol = tol.scaled_eq_tol(a.data, b.data)
    d12 = b.a12 - a.a12
    if max_abs(d12 - d12 @ d22_pinv @ d22) > cert_tol:
        raise PreconditionError(
            "kernel of the pivot difference must lie in the kernel of the (1,2) difference"
        )
    d21 = b.a21 - a.a21
    if max_abs(d21 - d22 @ d22_pinv @ d21) > cert_tol:
        raise PreconditionError(
            "range of the (2,1) difference must lie in the range of the pivot difference"
        )
    diff = BlockMatrix(a.n1, a.n2, b.data - a.data)
    lhs = schur_complement(diff, tol)
    pa = pinv(a22, tol)
    pb = pinv(b22, tol)
    dp = hermitian_part(pa - pb)
    g = b.a12 @ pb - a.a12 @ pa
    gr = pb @ b.a21 - pa @ a.a21
    schur_diff = schur_complement(b, tol) - schur_complement(a, tol)
    rhs = schur_diff - g @ pinv(dp, tol) @ gr
    mid_alt = a22 + a22 @ d22_pinv @ a22
    rhs_alt = schur_diff - g @ mid_alt @ gr
    dp_pinv = pinv(dp, tol)
    incl_tol = tol.scaled_eq_tol(g, gr, dp)
    inclusions_ok = (
        max_abs(g - g @ dp_pinv @ dp) <= incl_tol
        and max_abs(gr - dp @ dp_pinv @ gr) <= incl_tol
    )
    return SchurDifferenceResult(
        lhs,
        rhs,
        rhs_alt,
        max_abs(lhs - rhs),
        max_abs(lhs - rhs_alt),
        inclusions_ok,
    )
