"""JSON/YAML exchange format for matrices.

    {"n": 3, "field": "q", "entries": [["-t", "1", "0"], ...]}
"""
from pathlib import Path
from typing import Any, Dict, Optional
import json
import logging

import jsonschema
import yaml

from ..errors import ParseError
from .fields import field_from_tag
from .matrix import SqMatrix

logger = logging.getLogger(__name__)

MATRIX_SCHEMA = {
    "type": "object",
    "required": ["n", "field", "entries"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "field": {
            "type": "string",
            "pattern": r"^(q|qi|fp:\d+|mq:(-1|\d+)?(,(-1|\d+))*)$"
        },
        "entries": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}}
        }
    }
}


def matrix_to_dict(A: SqMatrix) -> Dict[str, Any]:
    return {"n": A.n, "field": A.field.tag, "entries": A.to_strings()}


def matrix_from_dict(data: Dict[str, Any]) -> SqMatrix:
    try:
        jsonschema.validate(instance=data, schema=MATRIX_SCHEMA)
    except jsonschema.ValidationError as e:
        raise ParseError(f"Invalid matrix document: {e.message}") from e
    n = data["n"]
    entries = data["entries"]
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ParseError(f"Matrix document declares n={n} but entries are not {n}x{n}")
    return SqMatrix.from_strings(entries, field_from_tag(data["field"]))


def load_matrix(path: Path) -> SqMatrix:
    path = Path(path)
    with open(path) as f:
        if path.suffix.lower() in ('.yaml', '.yml'):
            data = yaml.safe_load(f)
        else:
            data = json.load(f)
    logger.debug(f"Loaded matrix from {path}")
    return matrix_from_dict(data)


def dump_matrix(A: SqMatrix, path: Optional[Path] = None) -> str:
    text = json.dumps(matrix_to_dict(A), indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
