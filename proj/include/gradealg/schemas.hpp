#pragma once

// Copies of schema/input.schema.json and schema/report.schema.json.

namespace gradealg {

inline constexpr const char* input_schema_text = R"schema({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "gradealg problem",
  "type": "object",
  "additionalProperties": false,
  "required": ["variables", "I"],
  "properties": {
    "field": {"type": "string"},
    "variables": {"type": "array", "minItems": 1, "items": {"type": "string"}},
    "J": {"type": "array", "items": {"type": "string"}},
    "facets": {
      "type": "array",
      "items": {"type": "array", "items": {"type": ["string", "integer"]}}
    },
    "I": {"type": "array", "minItems": 1, "items": {"type": "string"}},
    "options": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "window": {"type": "array", "minItems": 2, "items": {"type": "integer"}},
        "level_bound": {"type": "integer", "minimum": 0},
        "degree_bound": {"type": "integer", "minimum": 0},
        "allow_linear": {"type": "boolean"}
      }
    }
  },
  "oneOf": [
    {"required": ["J"]},
    {"required": ["facets"]}
  ]
}
)schema";

inline constexpr const char* report_schema_text = R"schema({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "gradealg report",
  "oneOf": [
    {"$ref": "#/$defs/error"},
    {"$ref": "#/$defs/check_iso"},
    {"$ref": "#/$defs/presentation"},
    {"$ref": "#/$defs/hilbert"},
    {"$ref": "#/$defs/cohomology"},
    {"$ref": "#/$defs/gencm"},
    {"$ref": "#/$defs/dim"}
  ],
  "$defs": {
    "strings": {"type": "array", "items": {"type": "string"}},
    "counts": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "maybe_strings": {"type": ["array", "null"], "items": {"type": "string"}},
    "maybe_integer": {"type": ["integer", "null"]},
    "window": {"type": "array", "minItems": 2, "items": {"type": "integer"}},
    "complex": {
      "type": "object",
      "additionalProperties": false,
      "required": ["vertices", "facets"],
      "properties": {
        "vertices": {"$ref": "#/$defs/strings"},
        "facets": {"type": "array", "items": {"$ref": "#/$defs/strings"}}
      }
    },
    "cohomology_index": {
      "type": "object",
      "additionalProperties": false,
      "required": ["index", "support", "zero", "finite_length", "vanishes_below_minus_one", "dims"],
      "properties": {
        "index": {"type": "integer", "minimum": 0},
        "support": {
          "type": "object",
          "additionalProperties": false,
          "required": ["points", "ray_top"],
          "properties": {
            "points": {"type": "array", "items": {"type": "integer"}},
            "ray_top": {"$ref": "#/$defs/maybe_integer"}
          }
        },
        "zero": {"type": "boolean"},
        "finite_length": {"type": "boolean"},
        "vanishes_below_minus_one": {"type": "boolean"},
        "dims": {"$ref": "#/$defs/counts"}
      }
    },
    "cohomology_indices": {"type": "array", "items": {"$ref": "#/$defs/cohomology_index"}},
    "presentation_ring": {
      "type": "object",
      "additionalProperties": false,
      "required": ["ring", "variables", "generators"],
      "properties": {
        "ring": {"$ref": "#/$defs/strings"},
        "variables": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["name", "degree", "level"],
            "properties": {
              "name": {"type": "string"},
              "degree": {"type": "integer", "minimum": 0},
              "level": {"type": "integer", "minimum": 0}
            }
          }
        },
        "generators": {
          "type": "array",
          "items": {
            "type": "object",
            "additionalProperties": false,
            "required": ["poly", "degree", "level"],
            "properties": {
              "poly": {"type": "string"},
              "degree": {"type": "integer", "minimum": 0},
              "level": {"type": "integer", "minimum": 0}
            }
          }
        }
      }
    },
    "error": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "error", "message", "exit_code"],
      "properties": {
        "command": {"type": "string"},
        "status": {"const": "error"},
        "error": {"enum": ["input", "limit"]},
        "message": {"type": "string"},
        "exit_code": {"enum": [1, 2]}
      }
    },
    "check_iso": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "field", "variables", "J", "I", "isomorphic", "verified", "reason",
                   "B", "C", "JB", "JC", "hilbert_evidence", "warnings"],
      "properties": {
        "command": {"const": "check-iso"},
        "status": {"const": "ok"},
        "field": {"type": "string"},
        "variables": {"$ref": "#/$defs/strings"},
        "J": {"$ref": "#/$defs/strings"},
        "I": {"$ref": "#/$defs/strings"},
        "isomorphic": {"type": "boolean"},
        "verified": {"type": "boolean"},
        "reason": {"enum": [null, "not-variable-generated", "not-split"]},
        "B": {"$ref": "#/$defs/maybe_strings"},
        "C": {"$ref": "#/$defs/maybe_strings"},
        "JB": {"$ref": "#/$defs/maybe_strings"},
        "JC": {"$ref": "#/$defs/maybe_strings"},
        "hilbert_evidence": {
          "type": "object",
          "additionalProperties": false,
          "required": ["degree_bound", "A", "G", "equal"],
          "properties": {
            "degree_bound": {"type": "integer", "minimum": 0},
            "A": {"$ref": "#/$defs/counts"},
            "G": {"$ref": "#/$defs/counts"},
            "equal": {"type": "boolean"}
          }
        },
        "warnings": {"$ref": "#/$defs/strings"}
      }
    },
    "presentation": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "field", "variables", "J", "I", "rees", "assoc_graded", "lemma_check",
                   "warnings"],
      "properties": {
        "command": {"const": "presentation"},
        "status": {"const": "ok"},
        "field": {"type": "string"},
        "variables": {"$ref": "#/$defs/strings"},
        "J": {"$ref": "#/$defs/strings"},
        "I": {"$ref": "#/$defs/strings"},
        "rees": {"$ref": "#/$defs/presentation_ring"},
        "assoc_graded": {"$ref": "#/$defs/presentation_ring"},
        "lemma_check": {
          "type": "object",
          "additionalProperties": false,
          "required": ["checked", "passed"],
          "properties": {
            "checked": {"type": "integer", "minimum": 0},
            "passed": {"type": "boolean"}
          }
        },
        "warnings": {"$ref": "#/$defs/strings"}
      }
    },
    "hilbert": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "field", "variables", "J", "I", "degree_bound", "level_bound", "A", "G",
                   "G_total", "telescoping", "warnings"],
      "properties": {
        "command": {"const": "hilbert"},
        "status": {"const": "ok"},
        "field": {"type": "string"},
        "variables": {"$ref": "#/$defs/strings"},
        "J": {"$ref": "#/$defs/strings"},
        "I": {"$ref": "#/$defs/strings"},
        "degree_bound": {"type": "integer", "minimum": 0},
        "level_bound": {"type": "integer", "minimum": 0},
        "A": {"$ref": "#/$defs/counts"},
        "G": {"type": "array", "items": {"$ref": "#/$defs/counts"}},
        "G_total": {"$ref": "#/$defs/counts"},
        "telescoping": {"type": "boolean"},
        "warnings": {"$ref": "#/$defs/strings"}
      }
    },
    "cohomology": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "field", "variables", "complex", "module", "B", "C", "dim", "window",
                   "indices", "warnings"],
      "properties": {
        "command": {"const": "cohomology"},
        "status": {"const": "ok"},
        "field": {"type": "string"},
        "variables": {"$ref": "#/$defs/strings"},
        "complex": {"$ref": "#/$defs/complex"},
        "module": {"enum": ["A", "R"]},
        "B": {"$ref": "#/$defs/maybe_strings"},
        "C": {"$ref": "#/$defs/maybe_strings"},
        "dim": {"type": "integer", "minimum": 0},
        "window": {"$ref": "#/$defs/window"},
        "indices": {"$ref": "#/$defs/cohomology_indices"},
        "warnings": {"$ref": "#/$defs/strings"}
      }
    },
    "gencm": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "field", "variables", "complex", "B", "C", "gencm", "case", "scope",
                   "dim_R", "cm_R", "cm_A", "a_A", "precondition_A_gencm", "factors_gencm", "lemma_consistent",
                   "assembled_gencm", "d1", "d2", "a_A1", "evidence", "windows", "warnings"],
      "properties": {
        "command": {"const": "gencm"},
        "status": {"const": "ok"},
        "field": {"type": "string"},
        "variables": {"$ref": "#/$defs/strings"},
        "complex": {"$ref": "#/$defs/complex"},
        "B": {"$ref": "#/$defs/strings"},
        "C": {"$ref": "#/$defs/strings"},
        "gencm": {"type": "boolean"},
        "case": {"enum": ["case1-contained", "case2-dimA2-zero", "case3-vanishing", "none"]},
        "scope": {"enum": ["in-theorem-scope", "out-of-theorem-scope"]},
        "dim_R": {"type": "integer", "minimum": 0},
        "cm_R": {"type": "boolean"},
        "cm_A": {"type": "boolean"},
        "a_A": {"$ref": "#/$defs/maybe_integer"},
        "precondition_A_gencm": {"type": "boolean"},
        "factors_gencm": {"type": "boolean"},
        "lemma_consistent": {"type": "boolean"},
        "assembled_gencm": {"type": "boolean"},
        "d1": {"type": "integer", "minimum": 0},
        "d2": {"type": "integer", "minimum": 0},
        "a_A1": {"$ref": "#/$defs/maybe_integer"},
        "evidence": {
          "type": "object",
          "additionalProperties": false,
          "required": ["I_in_all_top_primes", "dimA2_zero", "a_A1_negative", "H_d1m1_A1_below_minus_two_zero",
                       "H_d2m1_A2_zero"],
          "properties": {
            "I_in_all_top_primes": {"type": "boolean"},
            "dimA2_zero": {"type": "boolean"},
            "a_A1_negative": {"type": "boolean"},
            "H_d1m1_A1_below_minus_two_zero": {"type": "boolean"},
            "H_d2m1_A2_zero": {"type": "boolean"}
          }
        },
        "windows": {
          "type": "object",
          "additionalProperties": false,
          "required": ["window", "A", "R"],
          "properties": {
            "window": {"$ref": "#/$defs/window"},
            "A": {"$ref": "#/$defs/cohomology_indices"},
            "R": {"$ref": "#/$defs/cohomology_indices"}
          }
        },
        "warnings": {"$ref": "#/$defs/strings"}
      }
    },
    "dim": {
      "type": "object",
      "additionalProperties": false,
      "required": ["command", "status", "field", "variables", "complex", "dim_A", "dim_R", "depth_A",
                   "a_invariant", "warnings"],
      "properties": {
        "command": {"const": "dim"},
        "status": {"const": "ok"},
        "field": {"type": "string"},
        "variables": {"$ref": "#/$defs/strings"},
        "complex": {"$ref": "#/$defs/complex"},
        "dim_A": {"type": "integer", "minimum": 0},
        "dim_R": {"type": "integer", "minimum": 0},
        "depth_A": {"type": "integer", "minimum": 0},
        "a_invariant": {"$ref": "#/$defs/maybe_integer"},
        "warnings": {"$ref": "#/$defs/strings"}
      }
    }
  }
}
)schema";

}  // namespace gradealg
