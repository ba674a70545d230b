import numpy as np
import pytest

from blockpivot import (
    BlockMatrix,
    GenSpec,
    InvalidInputError,
    PreconditionError,
    bordered_embedding,
    jppt,
    jppt_concavity_gap,
    loewner_leq,
    max_abs,
    pinv,
    pinv_convexity_gap,
    rand_psd_pair_same_kernel,
    schur_complement,
    schur_concavity_gap,
)
from blockpivot.rng import Xoshiro256pp


def test_pinv_convexity_gap_known_value():
    c = np.diag([0.0, 1.0])
    d = np.diag([0.0, 2.0])
    result = pinv_convexity_gap(c, d, 0.5)
    assert result.psd
    # (1/2)(1 + 1/2) - 1/(3/2) = 3/4 - 2/3 = 1/12 in the nonzero slot
    assert max_abs(result.gap - np.diag([0.0, 1.0 / 12.0])) <= 1e-12


def test_gaps_vanish_at_segment_ends():
    rng = Xoshiro256pp(112)
    a, b = rand_psd_pair_same_kernel(GenSpec(2, 2, "real", rng.next_uint64()))
    for t in (0.0, 1.0):
        assert max_abs(jppt_concavity_gap(a, b, t).gap) <= 1e-10
        assert max_abs(schur_concavity_gap(a, b, t).gap) <= 1e-10
        assert max_abs(pinv_convexity_gap(a.a22, b.a22, t).gap) <= 1e-10


def test_gaps_are_psd_on_same_kernel_pairs():
    rng = Xoshiro256pp(225)
    for _ in range(10):
        n1 = 1 + rng.randint(3)
        n2 = 1 + rng.randint(3)
        fld = "complex" if rng.randint(2) else "real"
        a, b = rand_psd_pair_same_kernel(GenSpec(n1, n2, fld, rng.next_uint64()))
        for t in (0.1, 0.5, 0.9):
            big = jppt_concavity_gap(a, b, t)
            assert big.psd
            small = schur_concavity_gap(a, b, t)
            assert small.psd
            # the Schur gap sits in the (1,1) corner of the transform gap
            assert max_abs(small.gap - big.gap[:n1, :n1]) <= 1e-10
            assert pinv_convexity_gap(a.a22, b.a22, t).psd


def test_gap_matches_direct_formula():
    rng = Xoshiro256pp(334)
    a, b = rand_psd_pair_same_kernel(GenSpec(2, 1, "real", rng.next_uint64()))
    t = 0.375
    mix = BlockMatrix(2, 1, (1 - t) * a.data + t * b.data)
    direct = jppt(mix).data - ((1 - t) * jppt(a).data + t * jppt(b).data)
    assert max_abs(jppt_concavity_gap(a, b, t).gap - direct) <= 1e-12


def test_bordered_embedding_structure():
    c = np.diag([1.0, 2.0])
    d = np.diag([3.0, 4.0])
    ec, ed = bordered_embedding(c, d)
    assert (ec.n1, ec.n2) == (1, 2)
    assert np.array_equal(ec.a22, c)
    assert np.array_equal(ed.a22, d)
    assert max_abs(ec.a11) == 0.0 and max_abs(ec.a12) == 0.0 and max_abs(ec.a21) == 0.0
    # pivot transform of the bordered matrix carries the negated pseudoinverse
    assert max_abs(jppt(ec).data[1:, 1:] + pinv(c)) <= 1e-12


def test_pinv_gap_is_bordered_jppt_gap_block():
    rng = Xoshiro256pp(445)
    for _ in range(8):
        m = 1 + rng.randint(4)
        fld = "complex" if rng.randint(2) else "real"
        pair = rand_psd_pair_same_kernel(GenSpec(0, m, fld, rng.next_uint64()))
        c, d = pair[0].a22, pair[1].a22
        t = float(rng.uniform(1, 0.05, 0.95)[0])
        pgap = pinv_convexity_gap(c, d, t)
        ec, ed = bordered_embedding(c, d)
        egap = jppt_concavity_gap(ec, ed, t)
        assert max_abs(pgap.gap - egap.gap[1:, 1:]) <= 1e-10


def test_concavity_linked_to_monotonicity():
    # ordered same-kernel pair: along the segment the Schur complement grows
    rng = Xoshiro256pp(556)
    a, b = rand_psd_pair_same_kernel(GenSpec(2, 2, "real", rng.next_uint64()), ordered=True)
    s_a = schur_complement(a)
    s_b = schur_complement(b)
    assert loewner_leq(s_a, s_b)


def test_precondition_rejections():
    c = np.diag([0.0, 1.0])
    d = np.diag([1.0, 1.0])
    with pytest.raises(PreconditionError):
        pinv_convexity_gap(c, d, 0.5)  # kernels differ
    with pytest.raises(PreconditionError):
        pinv_convexity_gap(-np.eye(2), np.eye(2), 0.5)  # not PSD
    with pytest.raises(InvalidInputError):
        pinv_convexity_gap(np.eye(2), np.eye(2), 1.5)  # t outside [0, 1]
    a = BlockMatrix(1, 1, np.diag([1.0, 0.0]))
    b = BlockMatrix(1, 1, np.diag([1.0, 1.0]))
    with pytest.raises(PreconditionError):
        jppt_concavity_gap(a, b, 0.5)  # pivot kernels differ
    with pytest.raises(InvalidInputError):
        schur_concavity_gap(a, a, -0.1)
