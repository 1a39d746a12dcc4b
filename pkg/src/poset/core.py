"""
Poset Core Module

LEARNING: Immutable value objects with a cached order relation

What we're building:
- A finite poset stored as its Hasse diagram (cover pairs)
- The reflexive-transitive closure kept as one bitmask per element
- Chains as small frozen value objects
- Induced subposets that remember where their elements came from

Key Concept:
- Element ids are dense 0-based integers; labels are display strings only
- up[x] has bit y set iff x <= y, down[y] has bit x set iff x <= y
- Python ints are arbitrary-width, so a bitmask row scales with the poset
"""

import logging
import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.exceptions import CycleError, IncomparableError, MissingBoundError, NotPureError, PosetError

# Set up module logger
logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_ids(mask: int) -> List[int]:
    """Return the set bit positions of a mask as a sorted list."""
    return list(iter_bits(mask))


@dataclass(frozen=True)
class Chain:
    """
    A chain x_0 < x_1 < ... < x_m of a poset.

    The empty chain has length -1.
    """
    elements: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.elements) - 1


class Poset:
    """
    Finite poset given by its cover relation.

    LEARNING POINT:
    - The constructor trusts its input; use from_covers() for user data
    - The only mutable state is the Mobius memo, guarded by a lock
    - `elements` optionally carries the mathematical object behind each id
      (a subset, a partition, a word); order algorithms never look at it

    Attributes:
        labels: Display label per element id
        covers: Sorted tuple of cover pairs (lower, upper)
        elements: Optional payload per id
        parent_ids: Optional id of each element in the poset it was derived from
    """

    def __init__(self, labels: Sequence[str], covers: Iterable[Tuple[int, int]],
                 elements: Optional[Sequence] = None,
                 parent_ids: Optional[Sequence[Optional[int]]] = None,
                 _order: Optional[Tuple[List[int], List[int]]] = None):
        self.labels: Tuple[str, ...] = tuple(str(label) for label in labels)
        self.covers: Tuple[Tuple[int, int], ...] = tuple(sorted(set((int(a), int(b)) for a, b in covers)))
        self.elements: Optional[Tuple] = tuple(elements) if elements is not None else None
        self.parent_ids: Optional[Tuple[Optional[int], ...]] = tuple(parent_ids) if parent_ids is not None else None

        n = len(self.labels)
        self._upper_covers: List[List[int]] = [[] for _ in range(n)]
        self._lower_covers: List[List[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            self._upper_covers[a].append(b)
            self._lower_covers[b].append(a)

        if _order is None:
            _order = _closure(n, self._upper_covers)
        self._up, self._down = _order

        self._mobius_rows: Dict[int, Dict[int, int]] = {}
        self._mobius_lock = threading.Lock()
        self._height: Optional[List[int]] = None
        self._depth: Optional[List[int]] = None
        self._linear: Optional[List[int]] = None

    # ---------- basic queries ----------

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Poset(n={len(self)}, covers={len(self.covers)})"

    @property
    def size(self) -> int:
        return len(self.labels)

    def leq(self, x: int, y: int) -> bool:
        return bool(self._up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def up_mask(self, x: int, strict: bool = False) -> int:
        mask = self._up[x]
        return mask & ~(1 << x) if strict else mask

    def down_mask(self, x: int, strict: bool = False) -> int:
        mask = self._down[x]
        return mask & ~(1 << x) if strict else mask

    def upper_covers(self, x: int) -> List[int]:
        return list(self._upper_covers[x])

    def lower_covers(self, x: int) -> List[int]:
        return list(self._lower_covers[x])

    def is_cover(self, x: int, y: int) -> bool:
        return y in self._upper_covers[x]

    def all_mask(self) -> int:
        return (1 << len(self)) - 1

    def minimal_elements(self) -> List[int]:
        return [x for x in range(len(self)) if not self._lower_covers[x]]

    def maximal_elements(self) -> List[int]:
        return [x for x in range(len(self)) if not self._upper_covers[x]]

    def bottom(self) -> Optional[int]:
        """Return the unique minimum, or None."""
        mins = self.minimal_elements()
        if len(mins) == 1 and self._up[mins[0]] == self.all_mask():
            return mins[0]
        return None

    def top(self) -> Optional[int]:
        """Return the unique maximum, or None."""
        maxs = self.maximal_elements()
        if len(maxs) == 1 and self._down[maxs[0]] == self.all_mask():
            return maxs[0]
        return None

    def require_bottom(self) -> int:
        b = self.bottom()
        if b is None:
            raise MissingBoundError("bottom")
        return b

    def require_top(self) -> int:
        t = self.top()
        if t is None:
            raise MissingBoundError("top")
        return t

    def is_bounded(self) -> bool:
        return len(self) > 0 and self.bottom() is not None and self.top() is not None

    def interval_mask(self, x: int, y: int, open_: bool = False) -> int:
        """Bitmask of [x, y] (or (x, y) when open_)."""
        if not self.leq(x, y):
            raise IncomparableError(x, y)
        mask = self._up[x] & self._down[y]
        if open_:
            mask &= ~(1 << x) & ~(1 << y)
        return mask

    def index(self, label: str) -> int:
        """Return the id of the first element carrying `label`."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise PosetError(f"no element labelled {label!r}")

    def index_of_element(self, element) -> int:
        """Return the id whose payload equals `element`."""
        if self.elements is None:
            raise PosetError("poset carries no element payload")
        try:
            return self.elements.index(element)
        except ValueError:
            raise PosetError(f"no element {element!r}")

    # ---------- derived orderings ----------

    def linear_extension(self) -> List[int]:
        """A topological order of the ids (cached)."""
        if self._linear is None:
            self._linear = _topological_order(len(self), self._upper_covers)
        return list(self._linear)

    def height(self, x: int) -> int:
        """Length of the longest chain with top element x."""
        if self._height is None:
            h = [0] * len(self)
            for v in self.linear_extension():
                for w in self._upper_covers[v]:
                    h[w] = max(h[w], h[v] + 1)
            self._height = h
        return self._height[x]

    def depth(self, x: int) -> int:
        """Length of the longest chain with bottom element x."""
        if self._depth is None:
            d = [0] * len(self)
            for v in reversed(self.linear_extension()):
                for w in self._lower_covers[v]:
                    d[w] = max(d[w], d[v] + 1)
            self._depth = d
        return self._depth[x]

    def length(self) -> int:
        """Length of the longest chain; -1 for the empty poset."""
        if len(self) == 0:
            return -1
        return max(self.height(x) for x in range(len(self)))

    def is_pure(self) -> bool:
        """All maximal chains have the same length."""
        if len(self) == 0:
            return True
        shortest = [0] * len(self)
        order = self.linear_extension()
        for v in reversed(order):
            ups = self._upper_covers[v]
            if ups:
                shortest[v] = 1 + min(shortest[w] for w in ups)
        longest_total = self.length()
        return all(shortest[m] == longest_total and self.depth(m) == longest_total
                   for m in self.minimal_elements())

    def rank(self, x: int) -> int:
        """
        Rank of x in a poset whose lower sets P_{<=x} are pure.

        Raises:
            NotPureError: If the lower set of x is not pure
        """
        lower = self.down_mask(x)
        longest = self.height(x)
        # shortest saturated chain from each element of the lower set up to x
        shortest = {x: 0}
        for v in reversed(self.linear_extension()):
            if v not in shortest:
                continue
            for w in self._lower_covers[v]:
                d = shortest[v] + 1
                if w not in shortest or d < shortest[w]:
                    shortest[w] = d
        mins = [m for m in iter_bits(lower) if not self._lower_covers[m]]
        if any(shortest[m] != longest for m in mins):
            raise NotPureError(f"lower set of element {x}")
        return longest

    # ---------- joins and meets ----------

    def meet(self, x: int, y: int) -> Optional[int]:
        common = self._down[x] & self._down[y]
        return _greatest(common, self._down)

    def join(self, x: int, y: int) -> Optional[int]:
        common = self._up[x] & self._up[y]
        return _greatest(common, self._up)

    # ---------- Mobius memo ----------

    def _mobius_row(self, x: int) -> Dict[int, int]:
        row = self._mobius_rows.get(x)
        if row is not None:
            return row
        with self._mobius_lock:
            row = self._mobius_rows.get(x)
            if row is not None:
                return row
            row = {x: 1}
            above = self._up[x]
            for z in self.linear_extension():
                if z == x or not (above >> z & 1):
                    continue
                total = 0
                for w in iter_bits(self._down[z] & above & ~(1 << z)):
                    total += row[w]
                row[z] = -total
            self._mobius_rows[x] = row
            logger.debug("Filled Mobius row for element %d (%d entries)", x, len(row))
            return row

    # ---------- subposets ----------

    def induced(self, ids: Iterable[int]) -> "Poset":
        """
        Induced subposet on `ids`, re-indexed in increasing parent-id order.

        LEARNING POINT:
        - Covers of the subposet are recomputed from the parent order,
          because an element in between may have been dropped
        - parent_ids maps back to this poset's ids
        """
        chosen = sorted(set(ids))
        position = {old: new for new, old in enumerate(chosen)}
        mask = 0
        for old in chosen:
            mask |= 1 << old
        covers = []
        up = []
        down = []
        for old in chosen:
            above = self._up[old] & mask & ~(1 << old)
            for y in iter_bits(above):
                if above & self._down[y] & ~(1 << y) == 0:
                    covers.append((position[old], position[y]))
            up.append(_remap_mask(self._up[old] & mask, position))
            down.append(_remap_mask(self._down[old] & mask, position))
        elements = [self.elements[old] for old in chosen] if self.elements is not None else None
        return Poset([self.labels[old] for old in chosen], covers, elements=elements,
                     parent_ids=chosen, _order=(up, down))

    def relabel(self, labels: Sequence[str]) -> "Poset":
        """Same poset with new display labels."""
        return Poset(labels, self.covers, elements=self.elements, parent_ids=self.parent_ids,
                     _order=(self._up, self._down))


def _remap_mask(mask: int, position: Dict[int, int]) -> int:
    out = 0
    for old in iter_bits(mask):
        out |= 1 << position[old]
    return out


def _greatest(common: int, below_masks: List[int]) -> Optional[int]:
    """Element g of `common` with common contained in below_masks[g], if any."""
    if not common:
        return None
    for g in iter_bits(common):
        if common & ~below_masks[g] == 0:
            return g
    return None


def _topological_order(n: int, upper_covers: List[List[int]]) -> List[int]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    for a, ups in enumerate(upper_covers):
        for b in ups:
            graph.add_edge(a, b)
    return list(nx.lexicographical_topological_sort(graph))


def _closure(n: int, upper_covers: List[List[int]]) -> Tuple[List[int], List[int]]:
    """Reflexive-transitive closure as up/down bitmasks."""
    up = [1 << x for x in range(n)]
    for v in reversed(_topological_order(n, upper_covers)):
        for w in upper_covers[v]:
            up[v] |= up[w]
    down = [0] * n
    for x in range(n):
        for y in iter_bits(up[x]):
            down[y] |= 1 << x
    return up, down


def from_covers(labels: Sequence[str], covers: Iterable[Sequence[int]],
                elements: Optional[Sequence] = None) -> Poset:
    """
    Build a poset from labels and (not necessarily reduced) order pairs.

    LEARNING POINT:
    - networkx finds a cycle for the error message
    - Transitive reduction keeps (x, y) only if no other successor of x reaches y

    Args:
        labels: Display label per element id
        covers: Pairs (lower, upper); redundant pairs are reduced away
        elements: Optional payload per id

    Returns:
        Poset with its order relation computed

    Raises:
        PosetError: If an id is out of range or a pair is a self-loop
        CycleError: If the pairs contain a directed cycle
    """
    n = len(labels)
    pairs = set()
    for pair in covers:
        a, b = int(pair[0]), int(pair[1])
        if not (0 <= a < n and 0 <= b < n):
            raise PosetError(f"cover pair {(a, b)} out of range for {n} elements")
        if a == b:
            raise PosetError(f"self-pair {(a, b)} is not allowed")
        pairs.add((a, b))

    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [edge[0] for edge in nx.find_cycle(graph)]
        cycle.append(cycle[0])
        logger.error("Cycle detected in cover input: %s", cycle)
        raise CycleError(cycle)

    successors: List[List[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        successors[a].append(b)
    up, down = _closure(n, successors)

    reduced = []
    for a in range(n):
        succ = successors[a]
        for b in succ:
            if not any(c != b and (up[c] >> b & 1) for c in succ):
                reduced.append((a, b))
    if len(reduced) < len(pairs):
        logger.debug("Transitive reduction dropped %d redundant pairs", len(pairs) - len(reduced))
    return Poset(labels, reduced, elements=elements, _order=(up, down))


def from_order(labels: Sequence[str], leq, elements: Optional[Sequence] = None) -> Poset:
    """
    Build a poset from a comparison predicate leq(i, j) on ids.

    Ids must already be listed in a linear extension (i <= j implies i comes first).
    """
    n = len(labels)
    up = [0] * n
    for i in range(n):
        mask = 1 << i
        for j in range(i + 1, n):
            if leq(i, j):
                mask |= 1 << j
        up[i] = mask
    down = [0] * n
    for x in range(n):
        for y in iter_bits(up[x]):
            down[y] |= 1 << x
    covers = []
    for x in range(n):
        above = up[x] & ~(1 << x)
        for y in iter_bits(above):
            if above & down[y] & ~(1 << y) == 0:
                covers.append((x, y))
    return Poset(labels, covers, elements=elements, _order=(up, down))
