"""
Poset JSON I/O

Format: {"labels": [...], "covers": [[i, j], ...]}.
The reader reduces the cover set; the writer emits it sorted.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Union

from src.exceptions import PosetError
from src.poset.core import Poset, from_covers

# Set up module logger
logger = logging.getLogger(__name__)


def poset_to_dict(P: Poset) -> Dict:
    return {"labels": list(P.labels), "covers": [list(pair) for pair in P.covers]}


def poset_from_dict(data: Dict) -> Poset:
    """
    Raises:
        PosetError: If keys are missing or malformed
        CycleError: If the cover pairs contain a cycle
    """
    if not isinstance(data, dict) or "labels" not in data or "covers" not in data:
        raise PosetError("poset JSON needs 'labels' and 'covers'")
    covers = data["covers"]
    if any(not isinstance(pair, (list, tuple)) or len(pair) != 2 for pair in covers):
        raise PosetError("each cover must be a pair [lower, upper]")
    return from_covers([str(label) for label in data["labels"]], covers)


def write_poset(P: Poset, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(poset_to_dict(P), handle, sort_keys=True)
    logger.info("Wrote poset with %d elements to %s", len(P), path)


def read_poset(path: Union[str, Path]) -> Poset:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return poset_from_dict(data)
