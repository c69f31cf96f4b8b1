"""JSON Schemas (draft 2020-12) for every ``--format json`` output of the CLI."""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
RATIONAL_LIST = {"type": "array", "items": RATIONAL}
INT_PAIR = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

GROUP = {
    "type": "object",
    "required": ["free_rank", "torsion"],
    "properties": {
        "free_rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    },
    "additionalProperties": False,
}

H1 = {
    "type": "object",
    "required": ["manifold", "parameters", "group", "text", "degenerate"],
    "properties": {
        "manifold": {"enum": ["sol", "dihedral"]},
        "parameters": {"type": "array", "items": {"type": "integer"}},
        "group": GROUP,
        "text": {"type": "string"},
        "degenerate": {"type": "boolean"},
    },
}

DINV_SOL = {
    "type": "object",
    "required": ["S_ba", "S_b", "S_a", "q_sum", "total"],
    "properties": {
        "S_ba": {**RATIONAL_LIST, "minItems": 4, "maxItems": 4},
        "S_b": {**RATIONAL_LIST, "minItems": 4, "maxItems": 4},
        "S_a": {**RATIONAL_LIST, "minItems": 4, "maxItems": 4},
        "q_sum": RATIONAL,
        "total": RATIONAL,
    },
}

DINV_DIHEDRAL = {
    "type": "object",
    "required": ["n", "d"],
    "properties": {
        "n": {"type": "integer"},
        "d": {**RATIONAL_LIST, "minItems": 4, "maxItems": 4},
    },
}

INVARIANT = {
    "type": "object",
    "required": ["invariant", "manifold", "value"],
    "properties": {
        "invariant": {"enum": ["lescop", "casson_walker"]},
        "manifold": {"type": "string"},
        "value": RATIONAL,
    },
}

BLOCK = {
    "type": "object",
    "required": ["values", "sum"],
    "properties": {
        "values": {"oneOf": [{"type": "null"}, RATIONAL_LIST]},
        "sum": RATIONAL,
    },
}

SIGNATURE = {
    "type": "object",
    "required": ["a", "b", "h1", "total_sum", "parity_class", "self_conjugate_d", "blocked_d"],
    "properties": {
        "a": {"type": "integer"},
        "b": {"type": "integer"},
        "h1": {"type": "string"},
        "total_sum": RATIONAL,
        "parity_class": INT_PAIR,
        "self_conjugate_d": RATIONAL_LIST,
        "blocked_d": {"type": "array", "items": BLOCK},
    },
}

VERDICT = {
    "type": "object",
    "required": ["result", "witness"],
    "properties": {
        "result": {"enum": ["HOMEOMORPHIC", "DISTINGUISHED", "UNRESOLVED"]},
        "witness": {"oneOf": [
            {"type": "null"},
            {"enum": ["h1", "total_sum", "parity", "self_conjugate_d", "block_matching"]},
        ]},
    },
}

CLASSIFY = {
    "type": "object",
    "required": ["first", "second", "verdict", "signatures"],
    "properties": {
        "first": INT_PAIR,
        "second": INT_PAIR,
        "verdict": VERDICT,
        "signatures": {"type": "array", "items": SIGNATURE, "minItems": 2, "maxItems": 2},
    },
}

PAIR_FAILURE = {
    "type": "object",
    "required": ["first", "second", "same_orbit", "verdict"],
    "properties": {
        "first": INT_PAIR,
        "second": INT_PAIR,
        "same_orbit": {"type": "boolean"},
        "verdict": VERDICT,
    },
}

CENSUS = {
    "type": "object",
    "required": ["bound", "parameters", "class_count", "classes", "degenerate", "pairs",
                 "results", "witnesses", "failures", "degenerate_failures", "signatures", "ok"],
    "properties": {
        "bound": {"type": "integer", "minimum": 1},
        "parameters": {"type": "integer"},
        "class_count": {"type": "integer"},
        "classes": {"type": "array", "items": {"type": "array", "items": INT_PAIR}},
        "degenerate": {"type": "array", "items": INT_PAIR},
        "pairs": {"type": "integer"},
        "results": {"type": "object", "additionalProperties": {"type": "integer"}},
        "witnesses": {"type": "object", "additionalProperties": {"type": "integer"}},
        "failures": {"type": "array", "items": PAIR_FAILURE},
        "degenerate_failures": {"type": "array", "items": PAIR_FAILURE},
        "signatures": {"type": "array", "items": SIGNATURE},
        "ok": {"type": "boolean"},
    },
}

PLUMBING = {
    "type": "object",
    "required": ["vertices", "adjacency"],
    "properties": {
        "vertices": {"type": "array", "items": {
            "type": "object",
            "required": ["id", "weight", "role"],
            "properties": {
                "id": {"type": "integer"},
                "weight": {"type": "integer"},
                "role": {"type": "string"},
            },
        }},
        "adjacency": {"type": "object", "additionalProperties": {
            "type": "array", "items": {"type": "integer"}}},
    },
}

SPLICE = {
    "type": "object",
    "required": ["gluing", "B", "tail", "A", "identity_holds", "formula_A", "formula_matches",
                 "signed_formula_A", "graph"],
    "properties": {
        "gluing": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "B": {"type": "integer"},
        "tail": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "A": {"type": "integer"},
        "identity_holds": {"type": "boolean"},
        "formula_A": {"type": "integer"},
        "formula_matches": {"type": "boolean"},
        "signed_formula_A": {"type": "integer"},
        "graph": PLUMBING,
    },
}

VERIFY = {
    "type": "object",
    "required": ["passed", "items"],
    "properties": {
        "passed": {"type": "boolean"},
        "items": {"type": "array", "items": {
            "type": "object",
            "required": ["name", "passed", "detail"],
            "properties": {
                "name": {"type": "string"},
                "passed": {"type": "boolean"},
                "detail": {"type": "string"},
            },
        }},
    },
}

SCHEMAS = {
    "h1": H1,
    "dinv_sol": DINV_SOL,
    "dinv_dihedral": DINV_DIHEDRAL,
    "lescop": INVARIANT,
    "cw": INVARIANT,
    "classify": CLASSIFY,
    "census": CENSUS,
    "splice": SPLICE,
    "verify": VERIFY,
}
