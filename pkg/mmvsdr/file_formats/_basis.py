import numpy as np

from attr import Factory, attr, attributes
from attr.validators import instance_of, optional

from mmvsdr.core import DirectionBasis
from ._common import read_json_document, write_json_document
from ._schemas import BASIS_V1


BASIS_FORMAT_VERSION = "1.0"


@attributes(frozen=True, eq=False)
class FittedBasis(object):
    """ An MMV basis as emitted by the fit command: directions in the
    coordinates of the input dataset, screened out predictors having zero
    weight.
    """
    basis = attr(validator=instance_of(DirectionBasis))
    requested_d = attr(validator=instance_of(int))
    screened = attr(default=None, validator=optional(instance_of(tuple)))
    config = attr(default=Factory(dict), validator=instance_of(dict))

    @classmethod
    def from_pipeline(cls, pipeline, requested_d, config):
        basis = pipeline.full_basis()
        if basis is None:
            basis = DirectionBasis.from_directions([], [], p=pipeline.p)
        return cls(basis, requested_d, pipeline.columns, dict(config))

    @property
    def effective_d(self):
        return self.basis.d

    @classmethod
    def _from_json_dict(cls, data):
        p = data["p"]
        basis = DirectionBasis.from_directions(
            [np.asarray(v, dtype=float) for v in data["directions"]],
            data["mv_values"], p=p)
        screened = data["screened"]
        if screened is not None:
            screened = tuple(screened)
        return cls(basis, data["requested_d"], screened, data["config"])

    def to_json_dict(self):
        return {
            "format_version": BASIS_FORMAT_VERSION,
            "p": self.basis.p,
            "requested_d": self.requested_d,
            "effective_d": self.effective_d,
            "directions": [v.tolist() for v in self.basis.directions],
            "mv_values": list(self.basis.mv_values),
            "screened": None if self.screened is None
            else list(self.screened),
            "config": self.config,
        }

    def dump(self, fp):
        write_json_document(self.to_json_dict(), fp)


def load_basis_json(path):
    """ Read back the JSON document written by the fit command."""
    return FittedBasis._from_json_dict(read_json_document(path, BASIS_V1))
