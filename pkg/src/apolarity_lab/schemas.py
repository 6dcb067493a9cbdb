"""JSON Schemas for the CLI's ``--format json`` output, one per subcommand.

Plain dicts; validate with any JSON Schema implementation.
"""

_POLY = {"type": "string"}
_INT = {"type": "integer"}
_NUM = {"type": "number"}
_COORD = {"oneOf": [_NUM, {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2}]}


def _obj(props: dict, required=None) -> dict:
    return {"type": "object", "properties": props, "required": list(required or props)}


CERTIFICATE = _obj({
    "s": _INT,
    "r": _INT,
    "generators": {"type": "array", "items": _POLY},
    "generator_count": _INT,
    "checks": _obj({
        "apolar_membership": {"type": "array", "items": {"type": "boolean"}},
        "generators_harmonic": {"type": "array", "items": {"type": "boolean"}},
        "groebner_ok": {"type": "boolean"},
        "groebner_colon_generators": {"type": "array", "items": {"type": "array", "items": _POLY}},
        "leading_ideal": {"type": "array", "items": _POLY},
        "leading_ideal_equals_Jd": {"type": "boolean"},
        "saturated": {"type": "boolean"},
        "saturation_iterations": _INT,
        "hilbert_matches_h_r": _obj({
            "ok": {"type": "boolean"},
            "window": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
            "values": {"type": "array", "items": _INT},
            "stable_value": {"type": ["integer", "null"]},
            "stable_from": {"type": ["integer", "null"]},
        }),
        "catalecticant_rank": _INT,
    }),
    "lower_bound": _INT,
    "upper_bound": _INT,
    "assumed_theorems": {"type": "array", "items": {"type": "string"}},
    "notes": {"type": "array", "items": {"type": "string"}},
    "conclusion": {"type": ["integer", "null"]},
    "timings_ms": {"type": "object", "additionalProperties": _NUM},
})

CERTIFY_BATCH = _obj({
    "certificates": {"type": "array", "items": CERTIFICATE},
    "failures": {"type": "array", "items": _obj({
        "s": _INT, "failed_step": {"type": "string"}, "witness": {"type": "string"}})},
})

APOLAR_COMPONENT = _obj({"f": _POLY, "m": _INT, "dim": _INT, "basis": {"type": "array", "items": _POLY}})

APOLAR_THEOREM = _obj({
    "n": _INT,
    "s": _INT,
    "ok": {"type": "boolean"},
    "degrees": {"type": "array", "items": _obj({
        "m": _INT, "apolar_dim": _INT, "ideal_dim": _INT, "equal": {"type": "boolean"}})},
})

CATALECTICANT_RANKS = _obj({"f": _POLY, "ranks": {"type": "array", "items": _INT}, "lower_bound": _INT})

CATALECTICANT = _obj({
    "f": _POLY,
    "j": _INT,
    "rank": _INT,
    "shape": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
    "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
})

HARMONIC_BASIS = _obj({
    "d": _INT,
    "elements": {"type": "array", "items": _obj({"k": _INT, "poly": _POLY})},
})

GROEBNER_CHECK = _obj({
    "ok": {"type": "boolean"},
    "order": {"type": "string"},
    "leading_terms": {"type": "array", "items": _POLY},
    "generators": {"type": "array", "items": _POLY},
    "steps": {"type": "array", "items": _obj({
        "j": _INT,
        "colon_generators": {"type": "array", "items": _POLY},
        "reductions": {"type": "array", "items": _obj({
            "multiplier": _POLY,
            "remainder": _POLY,
            "chain": {"type": "array", "items": _obj({
                "g": _INT, "times": _POLY, "coefficient": {"type": "string"}})},
        })},
    })},
    "leading_ideal": {"type": "array", "items": _POLY},
}, required=["ok", "order", "leading_terms", "generators", "steps"])

HILBERT = _obj({"s": _INT, "r": _INT, "values": {"type": "array", "items": _INT},
                "matches_h_r": {"type": "boolean"}})

CLASSIFY = _obj({
    "g": _POLY,
    "matrix_rank": {"type": "integer", "minimum": 1, "maximum": 3},
    "brk_formula": {"type": "string"},
    "brk_values": {"type": "object", "additionalProperties": _INT},
})

DECOMPOSE_Q2 = _obj({
    "s": _INT,
    "theta": _NUM,
    "k": _NUM,
    "radius": _NUM,
    "points": {"type": "array", "items": {"type": "array", "items": _COORD, "minItems": 2, "maxItems": 2}},
    "residual": _NUM,
})
