"""
Word Posets

LEARNING: Subword order on three word families

What we're building:
- word_poset(n, k, kind): words over [n] of length at most k, the empty
  word included, ordered by "is a subsequence of"
- kinds: injective (no repeated letter), normal (no two equal adjacent
  letters), all

Key Concept:
- Deleting a letter from an injective word (or from any word) stays in the
  family, so covers are single deletions
- Deleting a letter from a normal word can create two equal neighbours, so
  normal-word posets compare every pair by the subsequence test
"""

import logging
from itertools import product
from typing import List, Sequence, Tuple

from src.exceptions import FamilyError, InfeasibleSizeError
from src.poset import Poset, from_order

# Set up module logger
logger = logging.getLogger(__name__)

WORD_KINDS = ("injective", "normal", "all")
MAX_WORDS = 20_000
EMPTY_WORD_LABEL = "e"

Word = Tuple[int, ...]


def is_subword(u: Sequence[int], w: Sequence[int]) -> bool:
    """u is a (not necessarily contiguous) subsequence of w."""
    letters = iter(w)
    return all(any(a == b for b in letters) for a in u)


def is_normal(word: Sequence[int]) -> bool:
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))


def is_injective(word: Sequence[int]) -> bool:
    return len(set(word)) == len(word)


def word_count(n: int, k: int, kind: str) -> int:
    """Number of words in the family, empty word included."""
    total = 0
    for length in range(k + 1):
        if kind == "all":
            total += n ** length
        elif kind == "normal":
            total += 1 if length == 0 else n * (n - 1) ** (length - 1)
        else:
            count = 1
            for i in range(length):
                count *= max(n - i, 0)
            total += count
    return total


def word_label(word: Word) -> str:
    if not word:
        return EMPTY_WORD_LABEL
    sep = "," if any(a > 9 for a in word) else ""
    return sep.join(str(a) for a in word)


def _words(n: int, k: int, kind: str) -> List[Word]:
    keep = {"all": lambda w: True, "normal": is_normal, "injective": is_injective}[kind]
    out: List[Word] = []
    for length in range(k + 1):
        out.extend(w for w in product(range(1, n + 1), repeat=length) if keep(w))
    return out


def word_poset(n: int, k: int, kind: str = "injective") -> Poset:
    """
    Words over [n] of length at most k in subword order.

    Args:
        n: Alphabet size
        k: Maximum length
        kind: "injective", "normal" or "all"

    Returns:
        Poset whose elements are the words as tuples; the empty word is the bottom

    Raises:
        FamilyError: For an unknown kind
        InfeasibleSizeError: If the family has more than MAX_WORDS words
    """
    if kind not in WORD_KINDS:
        raise FamilyError(f"unknown word kind {kind!r}, expected one of {', '.join(WORD_KINDS)}")
    if n < 0 or k < 0:
        raise FamilyError(f"n and k must be nonnegative, got n={n}, k={k}")
    size = word_count(n, k, kind)
    if size > MAX_WORDS:
        raise InfeasibleSizeError(f"{kind} word poset size", size, MAX_WORDS)

    words = _words(n, k, kind)
    labels = [word_label(w) for w in words]
    if kind == "normal":
        P = from_order(labels, lambda i, j: is_subword(words[i], words[j]), elements=words)
    else:
        index = {w: i for i, w in enumerate(words)}
        covers = []
        for w in words:
            for i in range(len(w)):
                covers.append((index[w[:i] + w[i + 1:]], index[w]))
        P = Poset(labels, covers, elements=words)
    logger.info("Built %s word poset n=%d k=%d with %d elements", kind, n, k, len(P))
    return P
