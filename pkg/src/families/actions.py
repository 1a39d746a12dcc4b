"""
Letter Permutations Acting on Families

LEARNING: A permutation of [n] moves subsets, words and partitions

What we're building:
- letter_action(P, g, kind): the permutation of ids of P induced by g
- symmetric_group_generators(n): generators from sympy's SymmetricGroup
- random_letter_permutations(n, count, seed): reproducible random elements
"""

import logging
import random
from typing import List, Sequence, Tuple

from sympy.combinatorics.named_groups import SymmetricGroup

from src.exceptions import FamilyError
from src.families.partitions import canonical
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)

ACTION_KINDS = ("subset", "word", "partition")

LetterPermutation = Tuple[int, ...]  # images of 1..n


def _move(element, g: LetterPermutation, kind: str):
    if element is None:
        return None
    if kind == "subset":
        return tuple(sorted(g[v - 1] for v in element))
    if kind == "word":
        return tuple(g[v - 1] for v in element)
    if kind == "partition":
        return canonical([g[v - 1] for v in block] for block in element)
    raise FamilyError(f"unknown action kind {kind!r}, expected one of {', '.join(ACTION_KINDS)}")


def letter_action(P: Poset, g: Sequence[int], kind: str) -> List[int]:
    """
    Permutation of element ids induced by a letter permutation.

    Args:
        P: Family poset whose payload is subsets, words or partitions
            (None payloads, such as adjoined bounds, stay fixed)
        g: Images of the letters 1..n
        kind: How the payload is moved: "subset", "word" or "partition"

    Returns:
        target id per source id

    Raises:
        FamilyError: If the payload is missing or g does not map P to itself
    """
    if P.elements is None:
        raise FamilyError("poset carries no element payload to act on")
    perm = tuple(int(v) for v in g)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise FamilyError(f"{list(perm)} is not a permutation of 1..{len(perm)}")
    index = {element: i for i, element in enumerate(P.elements) if element is not None}
    out = []
    for x, element in enumerate(P.elements):
        if element is None:
            out.append(x)
            continue
        moved = _move(element, perm, kind)
        if moved not in index:
            raise FamilyError(f"image of {P.labels[x]} is not in the poset")
        out.append(index[moved])
    return out


def symmetric_group_generators(n: int) -> List[LetterPermutation]:
    """Generators of S_n (an n-cycle and a transposition) as images of 1..n."""
    if n < 2:
        return [tuple(range(1, n + 1))]
    return [tuple(v + 1 for v in gen.array_form) for gen in SymmetricGroup(n).generators]


def random_letter_permutations(n: int, count: int, seed: int) -> List[LetterPermutation]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        letters = list(range(1, n + 1))
        rng.shuffle(letters)
        out.append(tuple(letters))
    return out


def n_cycle(n: int) -> LetterPermutation:
    """1 -> 2 -> ... -> n -> 1."""
    return tuple(list(range(2, n + 1)) + [1]) if n else ()


def fixed_letters(g: Sequence[int]) -> List[int]:
    return [i + 1 for i, v in enumerate(g) if v == i + 1]
