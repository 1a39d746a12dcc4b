"""
Set Partition Families

LEARNING: One canonical form, many subposets of the partition lattice

What we're building:
- Canonical set partitions of [n] and refinement tests on block bitmasks
- partition_lattice(n): Pi_n, finer partitions below coarser ones
- noncrossing(n): NC_n
- block_restricted_partition_poset(n, spec): partitions whose block sizes
  obey a BlockSizeSpec (d-divisible, residue mod d, at least k, k-equal, a set S)
- splitting partitions of a permutation word (a copy of B_{n-1} inside Pi_n)
- type_b_partition_lattice(n): signed partitions with a zero block

Key Concept:
- A partition is a tuple of sorted blocks ordered by their least element,
  so equal partitions are equal tuples
- Ids are sorted by number of blocks, most blocks first, which is a linear
  extension of refinement
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from src.exceptions import FamilyError, InfeasibleSizeError
from src.poset import Poset, from_order

# Set up module logger
logger = logging.getLogger(__name__)

SetPartition = Tuple[Tuple[int, ...], ...]
SignedPartition = Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]  # (zero block, signed blocks)

MAX_PARTITION_N = 9    # Bell(9) = 21147 elements
MAX_RESTRICTED_N = 10  # block-restricted subposets enumerate only allowed partitions
MAX_TYPE_B_N = 5


# ---------- canonical partitions ----------

def canonical(blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Sort every block, then sort blocks by least element."""
    return tuple(sorted(tuple(sorted(block)) for block in blocks if block))


def partition_label(partition: SetPartition) -> str:
    """'1,2|3' style label."""
    return "|".join(",".join(str(v) for v in block) for block in partition)


def block_masks(partition: SetPartition) -> List[int]:
    masks = []
    for block in partition:
        mask = 0
        for v in block:
            mask |= 1 << v
        masks.append(mask)
    return masks


def refines(finer: SetPartition, coarser: SetPartition) -> bool:
    """True iff every block of `finer` lies inside a block of `coarser`."""
    targets = block_masks(coarser)
    return all(any(b & ~c == 0 for c in targets) for b in block_masks(finer))


def merge_blocks(partition: SetPartition, i: int, j: int) -> SetPartition:
    """Merge blocks i and j."""
    merged = partition[i] + partition[j]
    rest = [b for k, b in enumerate(partition) if k not in (i, j)]
    return canonical(rest + [merged])


def merged_pair(lower: SetPartition, upper: SetPartition) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    The two blocks of `lower` merged to reach `upper` (upper must cover lower in Pi_n).

    Returns:
        (B1, B2) with min B1 < min B2

    Raises:
        FamilyError: If upper is not a single merge of lower
    """
    new_blocks = [b for b in upper if b not in lower]
    if len(new_blocks) != 1 or len(upper) != len(lower) - 1:
        raise FamilyError(f"{partition_label(upper)} is not one merge above {partition_label(lower)}")
    target = set(new_blocks[0])
    parts = [b for b in lower if set(b) <= target]
    if len(parts) != 2:
        raise FamilyError(f"{partition_label(upper)} is not one merge above {partition_label(lower)}")
    return parts[0], parts[1]


def is_noncrossing(partition: SetPartition) -> bool:
    """No a < b < c < d with a, c in one block and b, d in another."""
    block_of: Dict[int, int] = {}
    for k, block in enumerate(partition):
        for v in block:
            block_of[v] = k
    points = sorted(block_of)
    for a, b, c, d in combinations(points, 4):
        if block_of[a] == block_of[c] and block_of[b] == block_of[d] and block_of[a] != block_of[b]:
            return False
    return True


# ---------- enumeration ----------

def _restricted(remaining: Tuple[int, ...], allows: Callable[[int], bool]) -> Iterator[List[Tuple[int, ...]]]:
    if not remaining:
        yield []
        return
    first, rest = remaining[0], remaining[1:]
    for size in range(1, len(remaining) + 1):
        if not allows(size):
            continue
        for others in combinations(rest, size - 1):
            chosen = set(others)
            left = tuple(v for v in rest if v not in chosen)
            for tail in _restricted(left, allows):
                yield [(first,) + others] + tail


def iter_set_partitions(n: int, allows: Optional[Callable[[int], bool]] = None) -> Iterator[SetPartition]:
    """
    Set partitions of [n] = {1..n} in canonical form.

    LEARNING POINT:
    - Without a size filter sympy's multiset_partitions does the work
    - With a filter, the block holding the least remaining point is chosen
      first, so disallowed sizes are never expanded
    """
    if n == 0:
        yield ()
        return
    if allows is None:
        for blocks in multiset_partitions(list(range(1, n + 1))):
            yield canonical(blocks)
        return
    for blocks in _restricted(tuple(range(1, n + 1)), allows):
        yield tuple(blocks)


def _sorted_partitions(parts: Iterable[SetPartition]) -> List[SetPartition]:
    return sorted(set(parts), key=lambda p: (-len(p), p))


def _poset_from_merges(parts: List[SetPartition]) -> Poset:
    """Poset on `parts` whose covers are single merges that stay inside the family."""
    index = {p: i for i, p in enumerate(parts)}
    covers = []
    for p in parts:
        for i, j in combinations(range(len(p)), 2):
            q = merge_blocks(p, i, j)
            if q in index:
                covers.append((index[p], index[q]))
    return Poset([partition_label(p) for p in parts], covers, elements=parts)


# ---------- families ----------

def partition_lattice(n: int) -> Poset:
    """
    Pi_n ordered by refinement.

    Raises:
        InfeasibleSizeError: If n > MAX_PARTITION_N
    """
    if n < 1:
        raise FamilyError(f"partition lattice needs n >= 1, got {n}")
    if n > MAX_PARTITION_N:
        raise InfeasibleSizeError("partition lattice n", n, MAX_PARTITION_N)
    parts = _sorted_partitions(iter_set_partitions(n))
    P = _poset_from_merges(parts)
    logger.info("Built partition lattice Pi_%d with %d elements", n, len(P))
    return P


def noncrossing(n: int) -> Poset:
    """NC_n, the noncrossing partitions of [n] as an induced subposet of Pi_n."""
    if n < 1:
        raise FamilyError(f"noncrossing lattice needs n >= 1, got {n}")
    if n > MAX_PARTITION_N:
        raise InfeasibleSizeError("noncrossing lattice n", n, MAX_PARTITION_N)
    parts = _sorted_partitions(p for p in iter_set_partitions(n) if is_noncrossing(p))
    P = _poset_from_merges(parts)
    logger.info("Built NC_%d with %d elements", n, len(P))
    return P


@dataclass(frozen=True)
class BlockSizeSpec:
    """
    Which block sizes a partition may use.

    kind is one of "mod" (size = residue mod d, size > 0), "at_least" (size >= k),
    "k_equal" (size 1 or size >= k) and "set" (size in sizes).
    """
    kind: str
    d: int = 0
    k: int = 0
    sizes: FrozenSet[int] = frozenset()

    def allows(self, size: int) -> bool:
        if self.kind == "mod":
            return size > 0 and size % self.d == self.k % self.d
        if self.kind == "at_least":
            return size >= self.k
        if self.kind == "k_equal":
            return size == 1 or size >= self.k
        if self.kind == "set":
            return size in self.sizes
        raise FamilyError(f"unknown block size rule {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "mod":
            return f"sizes = {self.k} mod {self.d}"
        if self.kind == "at_least":
            return f"sizes >= {self.k}"
        if self.kind == "k_equal":
            return f"sizes 1 or >= {self.k}"
        return "sizes in {" + ",".join(str(s) for s in sorted(self.sizes)) + "}"


def zero_mod(d: int) -> BlockSizeSpec:
    """Block sizes divisible by d (d = 2: even blocks)."""
    if d < 1:
        raise FamilyError(f"d must be positive, got {d}")
    return BlockSizeSpec("mod", d=d, k=0)


def residue_mod(d: int, k: int) -> BlockSizeSpec:
    """Block sizes congruent to k mod d (d = 2, k = 1: odd blocks)."""
    if d < 1:
        raise FamilyError(f"d must be positive, got {d}")
    return BlockSizeSpec("mod", d=d, k=k % d)


def at_least(k: int) -> BlockSizeSpec:
    return BlockSizeSpec("at_least", k=k)


def k_equal(k: int) -> BlockSizeSpec:
    """Blocks are singletons or have at least k elements (no sizes 2..k-1)."""
    if k < 2:
        raise FamilyError(f"k-equal needs k >= 2, got {k}")
    return BlockSizeSpec("k_equal", k=k)


def size_set(sizes: Iterable[int]) -> BlockSizeSpec:
    return BlockSizeSpec("set", sizes=frozenset(int(s) for s in sizes))


def block_restricted_partition_poset(n: int, spec: BlockSizeSpec) -> Poset:
    """
    Induced subposet of Pi_n on partitions whose block sizes `spec` allows.

    LEARNING POINT:
    - Only allowed partitions are enumerated, so Pi_10 is never built
    - Covers are recomputed from refinement because a single merge may leave
      the family even when a longer path stays inside it

    Args:
        n: Ground set size
        spec: Allowed block sizes

    Returns:
        Poset (possibly empty); bounds are not adjoined

    Raises:
        InfeasibleSizeError: If n > MAX_RESTRICTED_N
    """
    if n < 0:
        raise FamilyError(f"n must be nonnegative, got {n}")
    if n > MAX_RESTRICTED_N:
        raise InfeasibleSizeError("block-restricted partition poset n", n, MAX_RESTRICTED_N)
    parts = _sorted_partitions(iter_set_partitions(n, spec.allows))
    masks = [block_masks(p) for p in parts]

    def leq(i: int, j: int) -> bool:
        return all(any(b & ~c == 0 for c in masks[j]) for b in masks[i])

    P = from_order([partition_label(p) for p in parts], leq, elements=parts)
    if not len(P):
        logger.warning("No partition of [%d] has %s", n, spec.describe())
    else:
        logger.info("Built Pi_%d restricted to %s: %d elements", n, spec.describe(), len(P))
    return P


def k_equal_partition_lattice(n: int, k: int) -> Poset:
    """Pi_{n,k}."""
    return block_restricted_partition_poset(n, k_equal(k))


# ---------- splitting partitions ----------

def splitting_partitions(sigma: Sequence[int]) -> List[SetPartition]:
    """
    Partitions obtained by cutting the word sigma into consecutive segments.

    There are 2^(n-1) of them and under refinement they form a copy of B_{n-1}.
    """
    word = tuple(sigma)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise FamilyError(f"{list(word)} is not a permutation of 1..{len(word)}")
    n = len(word)
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        blocks: List[List[int]] = []
        current = [word[0]]
        for i in range(1, n):
            if mask >> (i - 1) & 1:
                blocks.append(current)
                current = []
            current.append(word[i])
        blocks.append(current)
        out.append(canonical(blocks))
    return out


def splitting_subposet(P: Poset, sigma: Sequence[int]) -> List[int]:
    """Ids of P (a poset whose elements are partitions) lying in the splitting family of sigma."""
    if P.elements is None:
        raise FamilyError("poset carries no partition payload")
    wanted = set(splitting_partitions(sigma))
    return [x for x, element in enumerate(P.elements) if element in wanted]


# ---------- type B ----------

def _normalize_signed(block: Iterable[int]) -> Tuple[int, ...]:
    ordered = sorted(block, key=abs)
    if ordered and ordered[0] < 0:
        ordered = [-v for v in ordered]
    return tuple(ordered)


def _signed_canonical(zero: Iterable[int], blocks: Iterable[Iterable[int]]) -> SignedPartition:
    normalized = sorted((_normalize_signed(b) for b in blocks), key=lambda b: (abs(b[0]), b))
    return tuple(sorted(abs(v) for v in zero)), tuple(normalized)


def signed_partition_label(element: SignedPartition) -> str:
    zero, blocks = element
    parts = ["0" + "".join(f",{v}" for v in zero)]
    parts.extend(",".join(str(v) for v in b) for b in blocks)
    return "|".join(parts)


def _signed_merges(element: SignedPartition) -> Iterator[SignedPartition]:
    zero, blocks = element
    for i, block in enumerate(blocks):
        rest = blocks[:i] + blocks[i + 1:]
        yield _signed_canonical(zero + block, rest)
    for i, j in combinations(range(len(blocks)), 2):
        rest = [b for k, b in enumerate(blocks) if k not in (i, j)]
        yield _signed_canonical(zero, rest + [blocks[i] + blocks[j]])
        yield _signed_canonical(zero, rest + [blocks[i] + tuple(-v for v in blocks[j])])


def type_b_partition_lattice(n: int) -> Poset:
    """
    Pi_n^B: a zero block Z of [n] plus a partition of the rest into blocks
    carrying signs up to a global flip of each block.

    LEARNING POINT:
    - A cover either moves a whole block into the zero block or merges two
      blocks, with either relative sign
    - Elements are reached by breadth-first search from the bottom
      (all singletons, empty zero block)
    """
    if n < 1:
        raise FamilyError(f"type B partition lattice needs n >= 1, got {n}")
    if n > MAX_TYPE_B_N:
        raise InfeasibleSizeError("type B partition lattice n", n, MAX_TYPE_B_N)
    bottom = _signed_canonical((), [(v,) for v in range(1, n + 1)])
    seen = {bottom}
    frontier = [bottom]
    edges = set()
    while frontier:
        following = []
        for element in frontier:
            for upper in _signed_merges(element):
                edges.add((element, upper))
                if upper not in seen:
                    seen.add(upper)
                    following.append(upper)
        frontier = following
    ordered = sorted(seen, key=lambda e: (-len(e[1]), e))
    index = {e: i for i, e in enumerate(ordered)}
    covers = [(index[a], index[b]) for a, b in edges]
    P = Poset([signed_partition_label(e) for e in ordered], covers, elements=ordered)
    logger.info("Built type B partition lattice for n=%d with %d elements", n, len(P))
    return P
