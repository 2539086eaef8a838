import numpy as np

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import DimensionMismatch, InvalidConfiguration


_NORM_TOLERANCE = 1e-8
_ORTHOGONALITY_TOLERANCE = 1e-6


@attributes(repr=False, frozen=True, eq=False)
class DirectionBasis(object):
    """ Ordered orthonormal projection directions and the MV value each of
    them achieved when it was extracted.
    """
    matrix = attr()
    """ (p, d) read-only array whose columns are the directions."""

    mv_values = attr(validator=instance_of(tuple))

    @classmethod
    def from_directions(cls, directions, mv_values, p=None):
        """ Build a basis from a list of p-vectors.

        Parameters
        ----------
        directions: list
            d vectors of length p. May be empty, in which case p must be
            given.
        mv_values: list
            d MV values.
        p: int, None
            Ambient dimension, only needed when ``directions`` is empty.
        """
        if len(directions) == 0:
            if p is None:
                raise InvalidConfiguration(
                    "Ambient dimension required for an empty basis")
            matrix = np.zeros((p, 0))
        else:
            matrix = np.column_stack(
                [np.asarray(v, dtype=float) for v in directions])
        matrix.setflags(write=False)
        return cls(matrix, tuple(float(v) for v in mv_values))

    def __attrs_post_init__(self):
        if self.matrix.ndim != 2:
            raise DimensionMismatch(2, self.matrix.ndim)
        if self.matrix.shape[1] != len(self.mv_values):
            raise DimensionMismatch(self.matrix.shape[1], len(self.mv_values))

        norms = np.linalg.norm(self.matrix, axis=0)
        if np.any(np.abs(norms - 1.0) > _NORM_TOLERANCE):
            raise InvalidConfiguration(
                "Basis directions must have unit norm, got norms "
                "{0!r}".format(norms.tolist()))
        gram = self.matrix.T @ self.matrix
        off_diagonal = gram - np.diag(np.diag(gram))
        if off_diagonal.size > 0 and \
                np.max(np.abs(off_diagonal)) > _ORTHOGONALITY_TOLERANCE:
            raise InvalidConfiguration("Basis directions must be orthogonal")
        for value in self.mv_values:
            if not 0.0 <= value <= 1.0:
                raise InvalidConfiguration(
                    "MV values must lie in [0, 1], got {0!r}".format(value))

    @property
    def d(self):
        return self.matrix.shape[1]

    @property
    def p(self):
        return self.matrix.shape[0]

    @property
    def directions(self):
        return [self.matrix[:, k] for k in range(self.d)]

    def embed(self, columns, p):
        """ Express this basis in a larger p-dimensional space, of which the
        current coordinates are the given columns (zeros elsewhere).
        """
        columns = np.asarray(columns, dtype=np.intp)
        if len(columns) != self.p:
            raise DimensionMismatch(self.p, len(columns))
        matrix = np.zeros((p, self.d))
        matrix[columns, :] = self.matrix
        matrix.setflags(write=False)
        return DirectionBasis(matrix, self.mv_values)

    def __repr__(self):
        return "DirectionBasis(p={0.p}, d={0.d}, mv_values={0.mv_values!r})" \
            .format(self)
