import logging

import numpy as np
from scipy import linalg

from .subspace import null_space_basis


logger = logging.getLogger(__name__)

#: Ridge added to the covariance of the moment seeds, relative to its mean
#: eigenvalue.
SEED_RIDGE = 1e-3

#: Largest number of starts taken from the second-moment directions.
MAX_SECOND_MOMENT_SEEDS = 3


def _regularized(covariance):
    size = covariance.shape[0]
    trace = np.trace(covariance)
    gamma = SEED_RIDGE * (trace / size if trace > 0 else 1.0)
    return covariance + gamma * np.eye(size)


def _moment_seed(data):
    features = data.features
    overall_mean = features.mean(axis=0)
    class_means = np.array([
        features[data.labels == r].mean(axis=0)
        for r in range(data.n_classes)
    ])
    distances = np.linalg.norm(class_means - overall_mean, axis=1)
    farthest = int(np.argmax(distances))

    covariance = np.atleast_2d(np.cov(features, rowvar=False))
    return linalg.solve(
        _regularized(covariance), class_means[farthest] - overall_mean,
        assume_a="pos")


def _second_moment_seeds(reduced, data, count):
    """ Leading directions along which the class covariances differ most
    from the pooled one, in the coordinates of ``reduced``.

    The features are whitened with the Cholesky factor L of the
    regularized covariance, M = sum_r p_r (I - V_r)^2 is accumulated from
    the whitened class covariances V_r, and the eigenvectors of its
    ``count`` largest positive eigenvalues are mapped back through L^-T.
    """
    n, size = reduced.shape
    centered = reduced - reduced.mean(axis=0)
    covariance = np.atleast_2d(np.cov(centered, rowvar=False))
    factor = linalg.cholesky(_regularized(covariance), lower=True)
    whitened = linalg.solve_triangular(factor, centered.T, lower=True).T

    identity = np.eye(size)
    kernel = np.zeros((size, size))
    for r in range(data.n_classes):
        members = whitened[data.labels == r]
        if len(members) < 2:
            continue
        gap = identity - np.atleast_2d(np.cov(members, rowvar=False))
        kernel += len(members) / n * (gap @ gap)

    values, vectors = linalg.eigh(kernel)
    order = np.argsort(values)[::-1][:count]
    order = order[values[order] > 0]
    coordinates = linalg.solve_triangular(
        factor.T, vectors[:, order], lower=False)
    return coordinates.T


def initial_directions(data, prev, count, rng):
    """ Starting points of the direction search, all of unit norm and
    orthogonal to ``prev``.

    The first one is the projection onto the feasible subspace of the
    moment seed (S + gamma I)^-1 (m_r - m), m_r being the class mean
    farthest from the overall mean m. The next ones, at most
    ``MAX_SECOND_MOMENT_SEEDS``, are the directions along which the class
    covariances of the features projected on the feasible subspace
    depart the most from the pooled covariance; they catch class
    structure carried by spread rather than location. The remaining ones
    are uniformly distributed on the unit sphere of the feasible subspace.

    Parameters
    ----------
    data: Dataset
    prev: list
        Previously extracted orthonormal directions.
    count: int
        Number of starting points.
    rng: RngStream
    """
    basis = null_space_basis(prev, data.p)
    generator = rng.generator()

    directions = []
    seed = basis @ (basis.T @ _moment_seed(data))
    norm = np.linalg.norm(seed)
    if norm > 1e-12:
        directions.append(seed / norm)
    else:
        logger.debug("Moment seed vanishes on the feasible subspace, "
                     "using a random start instead")

    wanted = min(count - len(directions), MAX_SECOND_MOMENT_SEEDS)
    if wanted > 0:
        reduced = data.features @ basis
        for coordinates in _second_moment_seeds(reduced, data, wanted):
            norm = np.linalg.norm(coordinates)
            if norm > 1e-12:
                directions.append(basis @ (coordinates / norm))

    while len(directions) < count:
        coordinates = generator.standard_normal(basis.shape[1])
        norm = np.linalg.norm(coordinates)
        if norm > 0:
            directions.append(basis @ (coordinates / norm))
    return directions[:count]
