"""
Family Registry

LEARNING: One table maps command-line family names to constructors

What we're building:
- FamilySpec: a family name plus its parameters
- FamilySpec.from_args(name, tokens): parse "partition 4", "graphs 4 connected",
  "block_sizes 6 3 4 5" style arguments
- build_family(spec): the Poset or SimplicialComplex
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.complex import SimplicialComplex, simplex, simplex_boundary
from src.exceptions import UnknownFamilyError
from src.families import complexes, graphs, lattices, partitions, words
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)

Family = Union[Poset, SimplicialComplex]


@dataclass(frozen=True)
class FamilyEntry:
    params: Tuple[str, ...]
    builder: Callable[..., Family]
    kind: str  # "poset" or "complex"
    description: str
    variadic: bool = False  # last parameter collects the remaining integers
    text_params: Tuple[str, ...] = ()


def _graphs(n: int, predicate: str, parameter: Optional[int] = None) -> Poset:
    return graphs.graph_property_poset(n, predicate, parameter)


FAMILIES: Dict[str, FamilyEntry] = {
    "boolean": FamilyEntry(("n",), lattices.boolean, "poset", "subsets of [n]"),
    "truncated_boolean": FamilyEntry(("n", "k"), lattices.truncated_boolean, "poset",
                                     "subsets of [n] of size 1..k"),
    "subspace": FamilyEntry(("n", "q"), lattices.subspace_lattice, "poset", "subspaces of GF(q)^n"),
    "divisor": FamilyEntry(("n",), lattices.divisor_lattice, "poset", "divisors of n"),
    "partition": FamilyEntry(("n",), partitions.partition_lattice, "poset", "set partitions of [n]"),
    "type_b": FamilyEntry(("n",), partitions.type_b_partition_lattice, "poset", "type B partitions"),
    "cross_polytope": FamilyEntry(("n",), lattices.cross_polytope_face_lattice, "poset",
                                  "face lattice of the n-cross-polytope"),
    "noncrossing": FamilyEntry(("n",), partitions.noncrossing, "poset", "noncrossing partitions of [n]"),
    "bruhat": FamilyEntry(("n",), lattices.bruhat, "poset", "S_n in Bruhat order"),
    "zero_mod": FamilyEntry(("n", "d"), lambda n, d: partitions.block_restricted_partition_poset(
        n, partitions.zero_mod(d)), "poset", "partitions of [n] into blocks of size divisible by d"),
    "one_mod": FamilyEntry(("n", "d"), lambda n, d: partitions.block_restricted_partition_poset(
        n, partitions.residue_mod(d, 1)), "poset", "partitions of [n] into blocks of size 1 mod d"),
    "k_mod": FamilyEntry(("n", "d", "k"), lambda n, d, k: partitions.block_restricted_partition_poset(
        n, partitions.residue_mod(d, k)), "poset", "partitions of [n] into blocks of size k mod d"),
    "at_least": FamilyEntry(("n", "k"), lambda n, k: partitions.block_restricted_partition_poset(
        n, partitions.at_least(k)), "poset", "partitions of [n] into blocks of size >= k"),
    "k_equal": FamilyEntry(("n", "k"), partitions.k_equal_partition_lattice, "poset",
                           "partitions of [n] with no block size in 2..k-1"),
    "block_sizes": FamilyEntry(("n", "sizes"), lambda n, *sizes: partitions.block_restricted_partition_poset(
        n, partitions.size_set(sizes)), "poset", "partitions of [n] with block sizes in a set", variadic=True),
    "injective_words": FamilyEntry(("n", "k"), lambda n, k: words.word_poset(n, k, "injective"), "poset",
                                   "injective words over [n] of length <= k"),
    "normal_words": FamilyEntry(("n", "k"), lambda n, k: words.word_poset(n, k, "normal"), "poset",
                                "normal words over [n] of length <= k"),
    "all_words": FamilyEntry(("n", "k"), lambda n, k: words.word_poset(n, k, "all"), "poset",
                             "all words over [n] of length <= k"),
    "graphs": FamilyEntry(("n", "predicate", "parameter"), _graphs, "poset",
                          "graphs on [n] with a monotone property", text_params=("predicate",)),
    "matching": FamilyEntry(("n",), complexes.matching_complex, "complex", "matching complex M_n"),
    "chessboard": FamilyEntry(("m", "n"), complexes.chessboard_complex, "complex", "chessboard complex M_{m,n}"),
    "colored_chessboard": FamilyEntry(("m", "n", "r"), complexes.colored_chessboard_complex, "complex",
                                      "r-colored chessboard complex"),
    "simplex": FamilyEntry(("n",), simplex, "complex", "full simplex on n vertices"),
    "simplex_boundary": FamilyEntry(("n",), simplex_boundary, "complex", "boundary of the simplex on n vertices"),
}

OPTIONAL_PARAMS = {"graphs": ("parameter",)}


@dataclass
class FamilySpec:
    """A family name with its parameter values (n, q, d, k, m, r, sizes, predicate, ...)."""
    name: str
    values: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_args(cls, name: str, tokens: Sequence[str]) -> "FamilySpec":
        """
        Parse command-line tokens for a family.

        Raises:
            UnknownFamilyError: For an unknown name or malformed parameters
        """
        entry = FAMILIES.get(name)
        if entry is None:
            raise UnknownFamilyError(name, f"known families: {', '.join(sorted(FAMILIES))}")
        tokens = list(tokens)
        optional = OPTIONAL_PARAMS.get(name, ())
        required = [p for p in entry.params if p not in optional]
        if len(tokens) < len(required) or (not entry.variadic and len(tokens) > len(entry.params)):
            raise UnknownFamilyError(name, f"expected parameters: {' '.join(entry.params)}")
        values: Dict[str, Any] = {}
        try:
            for i, param in enumerate(entry.params):
                if entry.variadic and i == len(entry.params) - 1:
                    values[param] = tuple(int(t) for t in tokens[i:])
                elif i < len(tokens):
                    values[param] = tokens[i] if param in entry.text_params else int(tokens[i])
        except ValueError:
            raise UnknownFamilyError(name, f"parameters must be integers: {' '.join(tokens)}")
        return cls(name, values)

    def to_args(self) -> List[str]:
        args = [self.name]
        for param in FAMILIES[self.name].params:
            if param not in self.values:
                continue
            value = self.values[param]
            if isinstance(value, tuple):
                args.extend(str(v) for v in value)
            else:
                args.append(str(value))
        return args

    @property
    def kind(self) -> str:
        return FAMILIES[self.name].kind

    def describe(self) -> str:
        return " ".join(self.to_args())


def build_family(spec: FamilySpec) -> Family:
    """Construct the poset or complex a spec names."""
    entry = FAMILIES.get(spec.name)
    if entry is None:
        raise UnknownFamilyError(spec.name)
    args: List[Any] = []
    for param in entry.params:
        if param not in spec.values:
            continue
        value = spec.values[param]
        if isinstance(value, tuple):
            args.extend(value)
        else:
            args.append(value)
    family = entry.builder(*args)
    logger.info("Built family %s", spec.describe())
    return family


def family_names() -> List[str]:
    return sorted(FAMILIES)
