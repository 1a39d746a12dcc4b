"""
Edge Labeling Module

LEARNING: Lexicographic shellability through labels on cover edges

What we're building:
- EdgeLabeling: cover edge (x, y) -> tuple of ints, compared lexicographically
- verify_el_labeling: every interval has exactly one increasing maximal
  chain and it strictly precedes all others
- Decreasing chains and the Betti numbers they count
- Descent sets, rank selection and descent counts
- The lexicographic order of maximal chains as a facet order

Key Concept:
- Two conventions are supported. STRICT_ASCENT: increasing = strictly
  increasing, decreasing = weakly decreasing. WEAK_ASCENT: increasing = weakly
  increasing, decreasing = strictly decreasing
- Every saturated chain starting at x is a maximal chain of [x, y] for its
  top y, so one upward walk from each x sees every interval starting at x
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.exceptions import MissingLabelError, NotBoundedError, NotELError, NotPureError, PosetError
from src.poset import Chain, Poset, iter_maximal_chains, rank_function

# Set up module logger
logger = logging.getLogger(__name__)

Label = Tuple[int, ...]


class LabelConvention(str, Enum):
    STRICT_ASCENT = "strict-ascent"
    WEAK_ASCENT = "weak-ascent"


class EdgeLabeling:
    """
    Labels on the cover edges of one poset.

    Attributes:
        labels: (lower id, upper id) -> label tuple
    """

    def __init__(self, labels: Dict[Tuple[int, int], Sequence[int]]):
        self.labels: Dict[Tuple[int, int], Label] = {
            (int(x), int(y)): tuple(int(v) for v in label) for (x, y), label in labels.items()
        }

    @classmethod
    def from_function(cls, P: Poset, fn: Callable[[int, int], Sequence[int]]) -> "EdgeLabeling":
        return cls({(x, y): fn(x, y) for x, y in P.covers})

    def __call__(self, x: int, y: int) -> Label:
        try:
            return self.labels[(x, y)]
        except KeyError:
            raise MissingLabelError((x, y))

    def check_complete(self, P: Poset) -> None:
        """Raises MissingLabelError for the first unlabeled cover edge."""
        for edge in P.covers:
            if edge not in self.labels:
                raise MissingLabelError(edge)

    def word(self, chain: Sequence[int]) -> Tuple[Label, ...]:
        return tuple(self(chain[i], chain[i + 1]) for i in range(len(chain) - 1))

    def to_dict(self) -> Dict:
        return {"edges": [[x, y, list(label)] for (x, y), label in sorted(self.labels.items())]}

    @classmethod
    def from_dict(cls, data: Dict) -> "EdgeLabeling":
        return cls({(edge[0], edge[1]): edge[2] for edge in data.get("edges", [])})


def is_increasing(word: Sequence[Label], convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> bool:
    if convention == LabelConvention.STRICT_ASCENT:
        return all(word[i] < word[i + 1] for i in range(len(word) - 1))
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def is_decreasing(word: Sequence[Label], convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> bool:
    if convention == LabelConvention.STRICT_ASCENT:
        return all(word[i] >= word[i + 1] for i in range(len(word) - 1))
    return all(word[i] > word[i + 1] for i in range(len(word) - 1))


def descent_set(word: Sequence[Label], convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> Tuple[int, ...]:
    """Positions i in 1..len-1 where the word does not increase."""
    if convention == LabelConvention.STRICT_ASCENT:
        return tuple(i + 1 for i in range(len(word) - 1) if word[i] >= word[i + 1])
    return tuple(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


@dataclass
class _IntervalStats:
    increasing: int = 0
    min_word: Optional[Tuple[Label, ...]] = None
    min_count: int = 0


@dataclass
class ELReport:
    is_el: bool
    failing_interval: Optional[Tuple[int, int]] = None
    reason: Optional[str] = None
    intervals_checked: int = 0

    def __bool__(self) -> bool:
        return self.is_el


def verify_el_labeling(P: Poset, labeling: EdgeLabeling,
                       convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> ELReport:
    """
    Check the EL property on every closed interval [x, y], x < y.

    LEARNING POINT:
    - Ties in label words count against the labeling: the increasing chain must
      precede every other maximal chain strictly
    - Stats per (x, y): number of increasing chains, least word, and how many
      chains carry it

    Args:
        P: Bounded poset
        labeling: Labels on every cover edge
        convention: Strictness convention

    Returns:
        ELReport, truthy iff the labeling is EL

    Raises:
        NotBoundedError: If P is not bounded
        MissingLabelError: If a cover edge has no label
    """
    if not P.is_bounded():
        raise NotBoundedError("EL verification")
    labeling.check_complete(P)

    checked = 0
    for x in P.linear_extension():
        stats: Dict[int, _IntervalStats] = {}
        stack: List[Tuple[int, Tuple[Label, ...], bool]] = [(x, (), True)]
        while stack:
            top, word, increasing = stack.pop()
            if word:
                entry = stats.setdefault(top, _IntervalStats())
                if increasing:
                    entry.increasing += 1
                if entry.min_word is None or word < entry.min_word:
                    entry.min_word, entry.min_count = word, 1
                elif word == entry.min_word:
                    entry.min_count += 1
            for y in P.upper_covers(top):
                label = labeling(top, y)
                if word:
                    last = word[-1]
                    step_up = last < label if convention == LabelConvention.STRICT_ASCENT else last <= label
                else:
                    step_up = True
                stack.append((y, word + (label,), increasing and step_up))

        for y, entry in sorted(stats.items()):
            checked += 1
            reason = None
            if entry.increasing != 1:
                reason = f"{entry.increasing} increasing maximal chains"
            elif not is_increasing(entry.min_word, convention):
                reason = "lexicographically first chain is not increasing"
            elif entry.min_count != 1:
                reason = "lexicographically first word is shared by several chains"
            if reason:
                logger.info("EL check fails on [%d, %d]: %s", x, y, reason)
                return ELReport(False, failing_interval=(x, y), reason=reason, intervals_checked=checked)
    logger.debug("EL labeling verified on %d intervals", checked)
    return ELReport(True, intervals_checked=checked)


def require_el(P: Poset, labeling: EdgeLabeling,
               convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> None:
    """Raise NotELError unless the labeling is EL."""
    report = verify_el_labeling(P, labeling, convention)
    if not report:
        raise NotELError(report.failing_interval, report.reason)


def decreasing_chains(P: Poset, labeling: EdgeLabeling,
                      convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> List[Chain]:
    """Maximal chains of P whose label word is decreasing, in lexicographic id order."""
    labeling.check_complete(P)
    return [c for c in iter_maximal_chains(P) if is_decreasing(labeling.word(c.elements), convention)]


def betti_from_el(P: Poset, labeling: EdgeLabeling,
                  convention: LabelConvention = LabelConvention.STRICT_ASCENT,
                  verify: bool = True) -> Dict[int, int]:
    """
    Betti numbers of the proper part read off decreasing chains.

    A decreasing maximal chain with i+2 edges contributes to beta_i.

    Raises:
        NotELError: If verify is set and the labeling is not EL
    """
    if verify:
        require_el(P, labeling, convention)
    counts: Dict[int, int] = {}
    for chain in decreasing_chains(P, labeling, convention):
        i = chain.length - 2
        counts[i] = counts.get(i, 0) + 1
    return dict(sorted(counts.items()))


def lexicographic_chain_order(P: Poset, labeling: EdgeLabeling) -> List[Chain]:
    """Maximal chains sorted by label word, ties by id sequence."""
    chains = list(iter_maximal_chains(P))
    return sorted(chains, key=lambda c: (labeling.word(c.elements), c.elements))


def rank_selected(P: Poset, ranks: Iterable[int]) -> Poset:
    """
    The subposet of elements whose rank lies in `ranks` (bounds excluded).

    Args:
        P: Bounded pure poset
        ranks: Subset of 1..l(P)-1

    Raises:
        NotPureError: If P is not pure
        NotBoundedError: If P is not bounded
        PosetError: If a rank lies outside 1..l(P)-1
    """
    if not P.is_bounded():
        raise NotBoundedError("rank selection")
    if not P.is_pure():
        raise NotPureError("rank selection input")
    wanted = set(ranks)
    top_rank = P.length()
    if any(r < 1 or r >= top_rank for r in wanted):
        raise PosetError(f"ranks must lie in 1..{top_rank - 1}, got {sorted(wanted)}")
    rank = rank_function(P)
    return P.induced(x for x in range(len(P)) if rank[x] in wanted)


def descent_count(P: Poset, labeling: EdgeLabeling, ranks: Iterable[int],
                  convention: LabelConvention = LabelConvention.STRICT_ASCENT) -> int:
    """Number of maximal chains of P whose descent set is exactly `ranks`."""
    target = tuple(sorted(set(ranks)))
    labeling.check_complete(P)
    return sum(1 for c in iter_maximal_chains(P)
               if descent_set(labeling.word(c.elements), convention) == target)
