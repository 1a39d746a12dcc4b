"""
CLI Commands

LEARNING: Keep the entry point thin, put the routing here

What this does:
- load_target(): turn --family / --input / --arrangement into one Target
- family_report(): build a family and emit (or write) its JSON
- compute_report(): route one compute kind to the module that owns it
- oracle_report(): closed-form values by name

Every function returns a RunReport; main.py only formats it and picks the
exit code.
"""

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from src.arrangements import (
    ARRANGEMENT_KINDS, Arrangement, arrangement_from_dict, builtin_arrangement,
    goresky_macpherson_betti, intersection_semilattice, orlik_solomon_betti, zaslavsky,
)
from src.complex import SimplicialComplex, complex_from_dict, complex_to_dict, face_lattice
from src.config import Settings, get_settings
from src.exceptions import UsageError
from src.families import FAMILIES, FamilySpec, build_family, builtin_el_labeling
from src.families.labelings import DEFAULT_LABELING
from src.homology import cm_checks, homology, poset_homology
from src.identities import whitney_betti
from src.oracles import (
    BETTI_GF_FAMILIES, betti_gf, bouc_betti, chessboard_connectivity, counting, k_equal_betti,
    laplacian_eigenvalue, partition_tools,
)
from src.pipeline.orchestrator import CLI, RunReport
from src.poset import (
    DERIVE_KINDS, Poset, derive, mobius_hat, mobius_invariant, poset_from_dict, poset_to_dict,
    proper_part, structure_queries,
)
from src.shelling import betti_from_el, find_shelling, search_recursive_atom_ordering

# Set up module logger
logger = logging.getLogger(__name__)

COMPUTE_KINDS = ("mobius", "homology", "betti-el", "zaslavsky", "os", "gm", "whitney",
                 "structure", "shelling", "oracle")

Subject = Union[Poset, SimplicialComplex, Arrangement]


@dataclass
class Target:
    """
    The object a compute command works on.

    Attributes:
        subject: Poset, SimplicialComplex or Arrangement
        source: How it was given, echoed into the report parameters
        family: Family name when built from --family (needed for labelings)
    """
    subject: Subject
    source: Dict[str, Any] = field(default_factory=dict)
    family: Optional[str] = None

    @property
    def kind(self) -> str:
        if isinstance(self.subject, Poset):
            return "poset"
        if isinstance(self.subject, SimplicialComplex):
            return "complex"
        return "arrangement"


def _ints(tokens: Sequence[str], what: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"{what} expects integers, got {' '.join(tokens)}")


def _arrangement(tokens: Sequence[str], complex_: bool) -> Arrangement:
    if not tokens or tokens[0] not in ARRANGEMENT_KINDS:
        raise UsageError(f"--arrangement needs one of {', '.join(ARRANGEMENT_KINDS)} then n [k]")
    numbers = _ints(tokens[1:], "--arrangement")
    if len(numbers) not in (1, 2):
        raise UsageError("--arrangement takes n and an optional k")
    return builtin_arrangement(tokens[0], numbers[0], numbers[1] if len(numbers) == 2 else None,
                               complex_=complex_)


def _from_json(path: str, complex_: bool) -> Subject:
    """Poset, complex or arrangement, told apart by their keys."""
    file_path = Path(path)
    if not file_path.exists():
        raise UsageError(f"input file not found: {path}")
    with open(file_path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as e:
            raise UsageError(f"{path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise UsageError(f"{path} must hold a JSON object")
    if "labels" in data and "covers" in data:
        return poset_from_dict(data)
    if "facets" in data and "vertex_count" in data:
        return complex_from_dict(data)
    if "dim" in data and "subspaces" in data:
        return arrangement_from_dict(data, complex_=complex_)
    raise UsageError(f"{path}: expected poset (labels, covers), complex (vertex_count, facets) "
                     f"or arrangement (dim, subspaces) keys")


def _apply_derivations(P: Poset, derivations: Sequence[str]) -> Poset:
    """Each entry is KIND or KIND:x[:y] with element labels or ids."""
    for entry in derivations:
        kind, *elements = entry.split(":")
        if kind not in DERIVE_KINDS:
            raise UsageError(f"unknown --derive {kind!r}, expected one of {', '.join(DERIVE_KINDS)}")
        ids = []
        for element in elements:
            ids.append(int(element) if element.isdigit() else P.index(element))
        P = derive(P, kind, *ids)
    return P


def load_target(family: Optional[Sequence[str]] = None, input_path: Optional[str] = None,
                arrangement: Optional[Sequence[str]] = None, complex_: bool = False,
                derivations: Sequence[str] = ()) -> Target:
    """
    Resolve exactly one of --family, --input, --arrangement.

    A --family name that is an arrangement kind (braid, coordinate, ...) and
    not a poset family is read as --arrangement.

    Raises:
        UsageError: For zero or several sources, or a derivation on a non-poset
        UnknownFamilyError: For an unknown family name or bad parameters
    """
    given = [x for x in (family, input_path, arrangement) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --family, --input, --arrangement")

    if family and family[0] not in FAMILIES and family[0] in ARRANGEMENT_KINDS:
        arrangement, family = family, None

    if family:
        spec = FamilySpec.from_args(family[0], family[1:])
        target = Target(build_family(spec), {"family": spec.describe()}, family=spec.name)
    elif input_path:
        target = Target(_from_json(input_path, complex_), {"input": input_path})
    else:
        subject = _arrangement(arrangement, complex_)
        target = Target(subject, {"arrangement": " ".join(arrangement), "complex": complex_})

    if derivations:
        if target.kind != "poset":
            raise UsageError(f"--derive applies to posets, not to a {target.kind}")
        target.subject = _apply_derivations(target.subject, derivations)
        target.source["derive"] = list(derivations)
    return target


# ---------- family ----------

def family_report(name: str, params: Sequence[str], out: Optional[str] = None) -> RunReport:
    """
    Build a family; its JSON goes into the report or, with out, into a file.

    Raises:
        UnknownFamilyError: For an unknown family or malformed parameters
    """
    started = time.perf_counter()
    spec = FamilySpec.from_args(name, params)
    built = build_family(spec)
    data = poset_to_dict(built) if spec.kind == "poset" else complex_to_dict(built)
    size = len(built) if spec.kind == "poset" else built.vertex_count
    outputs: Dict[str, Any] = {"kind": spec.kind, "size": size}
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            json.dump(data, handle, sort_keys=True)
        logger.info("Wrote %s %s to %s", spec.kind, spec.describe(), out)
        outputs["path"] = out
    else:
        outputs["data"] = data
    command = f"{CLI} family {spec.describe()}" + (f" --out {out}" if out else "")
    return RunReport(command, {"family": spec.describe()}, outputs, time.perf_counter() - started)


# ---------- compute ----------

def _require(target: Target, kind: str, *allowed: str) -> None:
    if target.kind not in allowed:
        raise UsageError(f"compute {kind} needs a {' or '.join(allowed)}, got a {target.kind}")


def _as_poset(target: Target) -> Poset:
    """Complexes enter Mobius computations through their face lattice."""
    if target.kind == "complex":
        return face_lattice(target.subject)
    if target.kind == "arrangement":
        return intersection_semilattice(target.subject)
    return target.subject


def _mobius(target: Target, options: Dict, settings: Settings) -> Dict:
    P = _as_poset(target)
    out = {"size": len(P), "mu_hat": mobius_hat(P)}
    if P.is_bounded():
        out["mu"] = mobius_invariant(P)
    return out


def _homology(target: Target, options: Dict, settings: Settings) -> Dict:
    _require(target, "homology", "poset", "complex")
    if target.kind == "poset":
        P = proper_part(target.subject) if options.get("proper") else target.subject
        result = poset_homology(P, max_elements=settings.max_elements)
    else:
        if options.get("proper"):
            raise UsageError("--proper applies to posets")
        result = homology(target.subject, max_elements=settings.max_elements)
    out = result.to_dict()
    if options.get("unreduced"):
        # H_0 gains one copy of Z; the empty complex has no unreduced homology
        dims = out["dims"]
        if "-1" in dims:
            dims.pop("-1")
        else:
            entry = dims.setdefault("0", {"betti": 0, "torsion": []})
            entry["betti"] += 1
    out["reduced"] = not options.get("unreduced")
    out["euler_characteristic"] = result.euler_characteristic()
    return out


def _betti_el(target: Target, options: Dict, settings: Settings) -> Dict:
    _require(target, "betti-el", "poset")
    if target.family is None:
        raise UsageError("betti-el needs --family: built-in labelings belong to families")
    name = options.get("labeling") or DEFAULT_LABELING.get(target.family)
    labeling = builtin_el_labeling(target.family, target.subject, name)
    return {"labeling": name, "betti": betti_from_el(target.subject, labeling)}


def _zaslavsky(target: Target, options: Dict, settings: Settings) -> Dict:
    _require(target, "zaslavsky", "arrangement")
    counts = zaslavsky(target.subject)
    return {"regions": counts.regions, "bounded": counts.bounded}


def _orlik_solomon(target: Target, options: Dict, settings: Settings) -> Dict:
    _require(target, "os", "arrangement")
    return {"betti": orlik_solomon_betti(target.subject)}


def _goresky_macpherson(target: Target, options: Dict, settings: Settings) -> Dict:
    _require(target, "gm", "arrangement")
    reduced = not options.get("unreduced")
    return {"cohomology": goresky_macpherson_betti(target.subject, reduced=reduced), "reduced": reduced}


def _whitney(target: Target, options: Dict, settings: Settings) -> Dict:
    _require(target, "whitney", "poset")
    return {"betti": whitney_betti(target.subject)}


def _structure(target: Target, options: Dict, settings: Settings) -> Dict:
    if target.kind == "complex":
        delta = target.subject
        return {
            "dim": delta.dim,
            "facets": len(delta.facets),
            "is_pure": delta.is_pure(),
            "f_vector": delta.f_vector(),
            "cm": cm_checks(delta).to_dict(),
        }
    return structure_queries(_as_poset(target)).to_dict()


def _shelling(target: Target, options: Dict, settings: Settings) -> Dict:
    """Complexes get a shelling search, bounded posets a recursive atom ordering search."""
    _require(target, "shelling", "poset", "complex")
    if target.kind == "complex":
        result = find_shelling(target.subject, max_facets=settings.max_shelling_facets,
                               budget=settings.shelling_budget)
        return {
            "search": "shelling",
            "status": result.status,
            "order": [list(f) for f in result.order] if result.order else None,
            "homology_facets": result.homology_facet_counts,
            "nodes": result.nodes,
        }
    result = search_recursive_atom_ordering(target.subject, budget=settings.rao_budget)
    return {
        "search": "recursive_atom_ordering",
        "status": result.status,
        "certificate": result.certificate.to_dict() if result.certificate else None,
        "nodes": result.nodes,
    }


COMPUTE_HANDLERS: Dict[str, Callable[[Target, Dict, Settings], Dict]] = {
    "mobius": _mobius,
    "homology": _homology,
    "betti-el": _betti_el,
    "zaslavsky": _zaslavsky,
    "os": _orlik_solomon,
    "gm": _goresky_macpherson,
    "whitney": _whitney,
    "structure": _structure,
    "shelling": _shelling,
}


def compute_report(kind: str, target: Optional[Target] = None, options: Optional[Dict] = None,
                   oracle: Sequence[str] = (), settings: Optional[Settings] = None,
                   command: str = "") -> RunReport:
    """
    Run one compute kind.

    Args:
        kind: One of COMPUTE_KINDS
        target: Resolved input (unused for oracle)
        options: proper, unreduced, labeling
        oracle: NAME PARAMS for kind == "oracle"
        settings: Configuration (default: get_settings())
        command: Command line echoed into the report

    Raises:
        UsageError: Unknown kind or a target of the wrong type
    """
    if kind == "oracle":
        if not oracle:
            raise UsageError("compute oracle needs NAME [PARAMS]")
        return oracle_report(oracle[0], oracle[1:])
    handler = COMPUTE_HANDLERS.get(kind)
    if handler is None:
        raise UsageError(f"unknown compute kind {kind!r}, expected one of {', '.join(COMPUTE_KINDS)}")
    if target is None:
        raise UsageError(f"compute {kind} needs --family, --input or --arrangement")
    settings = settings or get_settings()
    options = options or {}

    started = time.perf_counter()
    logger.info("compute %s on %s", kind, target.source)
    outputs = handler(target, options, settings)
    parameters = dict(target.source)
    parameters.update({k: v for k, v in options.items() if v})
    return RunReport(command or f"{CLI} compute {kind}", parameters, outputs, time.perf_counter() - started)


# ---------- oracle ----------

def _betti_gf(params: Sequence[str]) -> Dict[int, int]:
    if not params or params[0] not in BETTI_GF_FAMILIES:
        raise UsageError(f"betti-gf needs one of {', '.join(BETTI_GF_FAMILIES)} then its parameters")
    family, numbers = params[0], _ints(params[1:], "betti-gf")
    order = {"at_least_k": ("n", "k"), "zero_mod_d": ("n", "d"),
             "one_mod_d": ("n", "d"), "k_mod_d": ("n", "d", "k")}[family]
    if len(numbers) != len(order):
        raise UsageError(f"betti-gf {family} takes {' '.join(order)}")
    return betti_gf(family, **dict(zip(order, numbers)))


def _fixed(count: int, fn: Callable[..., Any]) -> Callable[[Sequence[str]], Any]:
    def run(params: Sequence[str]) -> Any:
        numbers = _ints(params, "oracle")
        if len(numbers) != count:
            raise UsageError(f"this oracle takes {count} integer parameter(s)")
        return fn(*numbers)
    return run


def _counting(kind: str) -> Callable[[Sequence[str]], Any]:
    return lambda params: counting(kind, *params)


ORACLES: Dict[str, Callable[[Sequence[str]], Any]] = {
    "bouc": _fixed(2, bouc_betti),
    "derangements": _counting("derangements"),
    "euler": _counting("euler"),
    "alternating": _counting("alternating"),
    "tangent": _counting("tangent"),
    "d-euler": _counting("d_euler"),
    "catalan": _counting("catalan"),
    "double-factorial": _counting("double_factorial"),
    "descent-class": _counting("descent_class"),
    "descent-class-q": _counting("descent_class_q"),
    "signed-descent-class": _counting("signed_descent_class"),
    "hook": lambda params: partition_tools(_ints(params, "hook")),
    "content": lambda params: laplacian_eigenvalue(_ints(params, "content")),
    "betti-gf": _betti_gf,
    "k-equal-betti": _fixed(2, k_equal_betti),
    "chessboard-connectivity": _fixed(2, chessboard_connectivity),
}

ORACLE_NAMES = tuple(ORACLES)


def oracle_report(name: str, params: Sequence[str]) -> RunReport:
    """
    Evaluate a closed-form oracle.

    Raises:
        UsageError: Unknown oracle or malformed parameters
        OracleError: Parameters outside the oracle's range
    """
    oracle = ORACLES.get(name)
    if oracle is None:
        raise UsageError(f"unknown oracle {name!r}, expected one of {', '.join(ORACLE_NAMES)}")
    started = time.perf_counter()
    value = oracle(list(params))
    logger.debug("oracle %s %s -> %s", name, " ".join(params), value)
    return RunReport(f"{CLI} oracle {name} {' '.join(params)}".rstrip(),
                     {"name": name, "params": list(params)}, {"value": value},
                     time.perf_counter() - started)
