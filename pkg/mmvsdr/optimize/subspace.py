import numpy as np
from scipy import linalg

from mmvsdr.errors import (
    DimensionMismatch, InfeasibleSubspace, RankDeficientPrev
)


def null_space_basis(prev, p):
    """ Orthonormal basis of the orthogonal complement of the previously
    extracted directions.

    Parameters
    ----------
    prev: list
        k orthonormal p-vectors, k < p.
    p: int
        Ambient dimension.

    Returns
    -------
    basis: array
        (p, p - k) matrix with orthonormal columns, orthogonal to every
        vector of ``prev``.
    """
    k = len(prev)
    if k >= p:
        raise InfeasibleSubspace(k, p)
    if k == 0:
        return np.eye(p)

    stacked = np.column_stack([np.asarray(v, dtype=float) for v in prev])
    if stacked.shape[0] != p:
        raise DimensionMismatch(p, stacked.shape[0])

    q, r = linalg.qr(stacked, mode="full")
    diagonal = np.abs(np.diag(r))
    rank = int(np.sum(diagonal > 1e-8 * max(1.0, diagonal.max())))
    if rank < k:
        raise RankDeficientPrev(rank, k)
    return q[:, k:]
