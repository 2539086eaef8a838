# flake8: noqa
_NUMBER_LIST = {"type": "array", "items": {"type": "number"}}

BASIS_V1 = {
    "$schema": "http://json-schema.org/draft-04/schema#",
    "title": "MMV basis v1.0",
    "description": "Directions extracted by the fit command.",
    "type": "object",
    "properties": {
        "format_version": {
            "description": "The document format version.",
            "type": "string"
        },
        "p": {
            "description": "Number of predictors of the input dataset.",
            "type": "integer",
            "minimum": 1
        },
        "requested_d": {
            "description": "Number of directions asked for.",
            "type": "integer",
            "minimum": 0
        },
        "effective_d": {
            "description": "Number of directions kept.",
            "type": "integer",
            "minimum": 0
        },
        "directions": {
            "description": ("The directions, each a list of p coordinates "
                            "in the original predictor space."),
            "type": "array",
            "items": _NUMBER_LIST
        },
        "mv_values": {
            "description": "MV index achieved by each direction.",
            "type": "array",
            "items": {"type": "number", "minimum": 0, "maximum": 1}
        },
        "screened": {
            "description": ("0-based indices of the predictors kept by "
                            "screening, best first, or null."),
            "type": ["array", "null"],
            "items": {"type": "integer", "minimum": 0}
        },
        "config": {
            "description": "The configuration the basis was fitted with.",
            "type": "object"
        },
    },
    "required": [
        "format_version",
        "p",
        "requested_d",
        "effective_d",
        "directions",
        "mv_values",
        "screened",
        "config",
    ],
    "additionalProperties": False
}

REPORT_V1 = {
    "$schema": "http://json-schema.org/draft-04/schema#",
    "title": "MMV cross-validation report v1.0",
    "description": "Output of the cv command.",
    "type": "object",
    "properties": {
        "format_version": {
            "description": "The document format version.",
            "type": "string"
        },
        "config": {
            "description": "The configuration of the experiment.",
            "type": "object"
        },
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "method": {"type": "string"},
                    "mean_error_pct": {"type": "number"},
                    "sd_error_pct": {"type": "number"},
                    "repetitions": {"type": "integer", "minimum": 1},
                    "single_repetition": {"type": "boolean"},
                    "errors": {
                        "description": ("Misclassification rate of each "
                                        "repetition."),
                        "type": "array",
                        "items": {"type": "number", "minimum": 0,
                                  "maximum": 1}
                    },
                },
                "required": [
                    "method",
                    "mean_error_pct",
                    "sd_error_pct",
                    "repetitions",
                    "single_repetition",
                    "errors",
                ],
                "additionalProperties": False
            }
        },
    },
    "required": ["format_version", "reports"],
    "additionalProperties": False
}
