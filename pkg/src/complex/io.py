"""
Complex JSON I/O

Format: {"vertex_count": n, "facets": [[...], ...]}.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Union

from src.complex.simplicial import SimplicialComplex, from_facets
from src.exceptions import ComplexError

# Set up module logger
logger = logging.getLogger(__name__)


def complex_to_dict(delta: SimplicialComplex) -> Dict:
    return delta.to_dict()


def complex_from_dict(data: Dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "vertex_count" not in data or "facets" not in data:
        raise ComplexError("complex JSON needs 'vertex_count' and 'facets'")
    return from_facets(int(data["vertex_count"]), [tuple(int(v) for v in f) for f in data["facets"]])


def write_complex(delta: SimplicialComplex, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(complex_to_dict(delta), handle, sort_keys=True)
    logger.info("Wrote complex with %d facets to %s", len(delta.facets), path)


def read_complex(path: Union[str, Path]) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as handle:
        return complex_from_dict(json.load(handle))
