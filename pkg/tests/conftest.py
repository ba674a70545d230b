import numpy as np
import pytest

from blockpivot import BlockMatrix


@pytest.fixture
def pair_2x2():
    """Scalar-block pair: A <= B but the pivot blocks swap sign, so every
    ordering statement fails with a rank-path witness at t = 1/2."""
    a = BlockMatrix(1, 1, np.array([[0.0, 0.0], [0.0, -1.0]]))
    b = BlockMatrix(1, 1, np.array([[0.0, 0.0], [0.0, 1.0]]))
    return a, b


@pytest.fixture
def pair_4x4():
    """Rank-one-pivot pair: A <= B with all ordering statements true, yet
    ker B22 is not contained in ker B12."""
    a = BlockMatrix(2, 2, np.array([
        [0.0, 0.0, 1.0, -0.5],
        [0.0, 0.0, 0.0, 0.0],
        [1.0, 0.0, 0.5, 0.5],
        [-0.5, 0.0, 0.5, 0.5],
    ]))
    b = BlockMatrix(2, 2, np.array([
        [0.5, 0.0, 1.0, -0.5],
        [0.0, 0.0, 0.0, 0.0],
        [1.0, 0.0, 1.0, 1.0],
        [-0.5, 0.0, 1.0, 1.0],
    ]))
    return a, b
