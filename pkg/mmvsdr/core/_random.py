import enum

import numpy as np

from attr import attr, attributes
from attr.validators import instance_of


_UINT64_MAX = 2 ** 64 - 1


@enum.unique
class Purpose(enum.Enum):
    """ Tags separating the random streams consumed by unrelated stages."""
    simulation = 1
    folds = 2
    optimizer = 3
    seeding = 4
    repetition = 5


def _check_uint64(instance, attribute, value):
    if not 0 <= value <= _UINT64_MAX:
        raise ValueError(
            "{0} must be a 64-bit unsigned integer, got {1!r}".format(
                attribute.name, value))


def _check_keys(instance, attribute, value):
    for key in value:
        _check_uint64(instance, attribute, key)


@attributes(frozen=True)
class RngStream(object):
    """ A reproducible random stream identified by a seed and a path of
    stream ids.

    Draws only depend on (seed, stream), never on the order in which
    streams are consumed, so that repetitions, folds and restarts running
    in any schedule see the same numbers. Streams are backed by the
    counter-based Philox bit generator.
    """
    seed = attr(validator=[instance_of(int), _check_uint64])
    stream = attr(default=(), validator=[instance_of(tuple), _check_keys])

    def child(self, *keys):
        """ Derive an independent sub-stream.

        Parameters
        ----------
        keys: int, Purpose
            Stream ids appended to the current path, e.g.
            ``rng.child(Purpose.folds, repetition)``.
        """
        keys = tuple(
            key.value if isinstance(key, Purpose) else int(key)
            for key in keys
        )
        return RngStream(self.seed, self.stream + keys)

    def generator(self):
        """ A fresh numpy Generator positioned at the start of this
        stream."""
        seed_sequence = np.random.SeedSequence(
            entropy=self.seed, spawn_key=self.stream)
        return np.random.Generator(np.random.Philox(seed_sequence))
