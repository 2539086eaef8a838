import enum
import json

import jsonschema

from mmvsdr.errors import InvalidConfiguration, InvalidDataset


@enum.unique
class OutputFormat(enum.Enum):
    csv = 'csv'
    json = 'json'

    @classmethod
    def from_string(cls, s):
        try:
            return cls(s.lower())
        except ValueError:
            raise InvalidConfiguration(
                "Unsupported output format: {0!r}".format(s))

    @classmethod
    def from_path(cls, path):
        if path.lower().endswith(".json"):
            return cls.json
        return cls.csv


def read_json_document(path, schema):
    """ Load a JSON file and validate it against ``schema``."""
    with open(path, "rt", encoding="utf-8") as fp:
        try:
            data = json.load(fp)
        except ValueError as e:
            raise InvalidDataset(
                "Invalid JSON in {0!r}: {1}".format(path, e))
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as e:
        msg = "Invalid document {0!r}: {1!r}".format(path, e.message)
        raise InvalidDataset(msg)
    return data


def write_json_document(data, fp):
    json.dump(data, fp, indent=2, sort_keys=True)
    fp.write("\n")
