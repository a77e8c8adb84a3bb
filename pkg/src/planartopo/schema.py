"""JSON Schemas for the documents printed by the command line tool."""

_NUM = {"type": "number"}
_POINT = {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2}
_PATH = {
    "type": "object",
    "required": ["closed", "vertices"],
    "properties": {"closed": {"type": "boolean"}, "vertices": {"type": "array", "items": _POINT, "minItems": 1}},
}

CERTIFICATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["verdict", "mode", "h", "plane_components", "sphere_components", "witness"],
    "additionalProperties": False,
    "properties": {
        "verdict": {"enum": ["connected", "disconnected", "undecided"]},
        "mode": {"enum": ["outer", "inner"]},
        "h": {"type": "number", "exclusiveMinimum": 0},
        "plane_components": {"type": "integer", "minimum": 1},
        "sphere_components": {"type": "integer", "minimum": 1},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind", "point"],
                    "properties": {"kind": {"const": "point"}, "point": _POINT},
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["kind", "closed", "vertices"],
                    "properties": {"kind": {"const": "path"}, **_PATH["properties"]},
                    "additionalProperties": False,
                },
            ]
        },
    },
}

_CERT_REF = {"$ref": "#/$defs/certificate"}

SIMPLY_CONNECTED = {
    "type": "object",
    "required": ["verdict", "certificate", "components"],
    "properties": {
        "verdict": {"enum": ["all simply connected", "not all simply connected", "undecided"]},
        "certificate": _CERT_REF,
        "components": {"type": "array", "items": {"enum": ["connected", "disconnected", "undecided"]}},
    },
    "$defs": {"certificate": CERTIFICATE},
}

REPORT = {
    "type": "object",
    "required": ["verdict", "distance", "h0", "floor", "halvings", "entries", "witness", "neighborhoods"],
    "properties": {
        "verdict": {"enum": ["pass", "precondition-violation", "defect", "undecided"]},
        "distance": {"type": "number", "exclusiveMinimum": 0},
        "h0": _NUM,
        "floor": _NUM,
        "halvings": {"type": "integer", "minimum": 0},
        "entries": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["h", "K", "L", "KL"],
                "properties": {
                    "h": _NUM,
                    "K": _CERT_REF,
                    "L": _CERT_REF,
                    "KL": {"oneOf": [{"type": "null"}, _CERT_REF]},
                },
            },
        },
        "witness": {"oneOf": [{"type": "null"}, _PATH]},
        "timings": {"type": "object"},
    },
    "$defs": {"certificate": CERTIFICATE},
}

NEIGHBORHOOD = {
    "type": "object",
    "required": ["status", "eps", "h", "W", "rays", "certificates"],
    "properties": {
        "status": {"enum": ["success", "undecided"]},
        "eps": {"type": "number", "exclusiveMinimum": 0},
        "rays": {"type": "array", "items": _PATH},
        "certificates": {
            "type": "object",
            "required": ["K_complement", "K_in_V", "V_in_A", "V_simply_connected"],
            "properties": {
                "K_complement": _CERT_REF,
                "K_in_V": {"type": "boolean"},
                "V_in_A": {"type": "boolean"},
                "V_simply_connected": {"oneOf": [{"type": "null"}, _CERT_REF]},
            },
        },
    },
    "$defs": {"certificate": CERTIFICATE},
}

ANNULUS = {
    "type": "object",
    "required": ["annulus", "witness", "eps", "certificate"],
    "properties": {
        "annulus": {
            "type": "object",
            "required": ["cx", "cy", "r_in", "r_out"],
            "properties": {"r_in": {"type": "number", "exclusiveMinimum": 0}, "r_out": _NUM},
        },
        "witness": _POINT,
        "certificate": _CERT_REF,
    },
    "$defs": {"certificate": CERTIFICATE},
}

GRID_CYCLE = {
    "type": "object",
    "required": ["eps", "squares", "enclosed_sample", "winding", "cycles"],
    "properties": {
        "eps": {"type": "number", "exclusiveMinimum": 0},
        "winding": {"type": "integer"},
        "enclosed_sample": _POINT,
        "cycles": {"type": "array", "items": _PATH},
    },
}

COMPONENTS = {
    "type": "object",
    "required": ["mode", "h", "occupied", "complement"],
    "properties": {
        "mode": {"enum": ["outer", "inner"]},
        "occupied": {"type": "object", "required": ["count"]},
        "complement": {"type": "object", "required": ["count", "bounded", "unbounded_id"]},
    },
}

CAMPAIGN = {
    "type": "object",
    "required": ["count", "counts", "defects", "verdicts"],
    "properties": {"count": {"type": "integer", "minimum": 1}},
}

BY_COMMAND = {
    "components": COMPONENTS,
    "sphere-connected": CERTIFICATE,
    "simply-connected": SIMPLY_CONNECTED,
    "neighborhood": NEIGHBORHOOD,
    "grid-cycle": GRID_CYCLE,
    "annulus": ANNULUS,
    "verify-union": REPORT,
    "fuzz": CAMPAIGN,
}
