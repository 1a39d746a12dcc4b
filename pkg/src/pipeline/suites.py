"""
Check Suites

LEARNING: Checks as data, so one runner can execute, skip and report them

What we're building:
- One builder per suite: families, shelling, identities, arrangements, oracles
- Every case computes both sides of an equation by separate code paths
- Every case carries the CLI line that recomputes it

Key Concept:
- A case's size is the parameter that drives its cost (n for Pi_n, the
  longer side for M_{m,n}); the runner skips cases above --max-size
- The torsion case M_{5,5} counts as size 10, so only an explicit
  --max-size 10 runs it
"""

import logging
from itertools import combinations, permutations
from math import factorial
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import networkx as nx

from src.arrangements import (
    braid_partition_map, builtin_arrangement, characteristic_polynomial, goresky_macpherson_betti,
    intersection_semilattice, orlik_solomon_betti, zaslavsky,
)
from src.complex import from_facets, order_complex, simplex_boundary
from src.config import Settings
from src.exceptions import PosetTopError
from src.families import (
    FamilySpec, boolean, build_family, builtin_el_labeling, canonical, chessboard_complex,
    colored_chessboard_complex, cross_polytope_face_lattice, graph_property_poset, inflation,
    k_equal_partition_lattice, matching_complex, noncrossing, noncrossing_stanley_labeling,
    partition_lattice, random_letter_permutations, subspace_lattice, symmetric_group_generators,
    word_poset,
)
from src.families.graphs import edges_of_complete_graph, to_graph
from src.homology import (
    betti_open_interval, chain_complex, cm_checks, homology, laplacian_betti, laplacian_spectrum,
    poset_homology,
)
from src.identities import (
    GroupElementAction, IdentityCheck, PosetMap, alexander_duality_check, closure_check, compare,
    crosscut_check, euler_poincare_check, fixed_point_lefschetz, general_fiber_betti_check,
    inflation_betti_check, kunneth_checks, mobius_betti_check, philip_hall_check, quillen_fiber_check,
    whitney_betti,
)
from src.oracles import (
    TruncatedSeries, alternating_permutations, betti_gf, bouc_betti, catalan, chessboard_connectivity,
    d_euler, d_euler_enumerated, derangements, derangements_enumerated, descent_class,
    descent_class_enumerated, descent_class_q, descent_class_q_enumerated, double_factorial,
    euler_number, exp_series, k_equal_betti, laplacian_eigenvalue, matching_partitions, partitions_of,
    signed_descent_class, signed_descent_class_enumerated, sin_series, tangent_numbers, zigzag_numbers,
)
from src.pipeline.orchestrator import CLI, CheckCase
from src.poset import (
    antichain, chain_poset, dual, from_covers, is_order_isomorphism, mobius, proper_part, random_poset,
)
from src.shelling import (
    FOUND, NONE, all_root_orders, betti_from_el, decreasing_chains, descent_count, find_shelling,
    is_shelling, nbc_bases, rank_selected, search_recursive_atom_ordering, verify_el_labeling,
)

# Set up module logger
logger = logging.getLogger(__name__)

SUITE_NAMES = ("all", "families", "shelling", "identities", "arrangements", "oracles")


# ---------- helpers ----------

def _family(name: str, *params) -> FamilySpec:
    return FamilySpec.from_args(name, [str(p) for p in params])


def _homology_command(spec: FamilySpec, proper: bool = True) -> str:
    return f"{CLI} compute homology --family {spec.describe()}" + (" --proper" if proper else "")


def _all_hold(name: str, checks: Iterable[IdentityCheck], detail: str = "") -> IdentityCheck:
    """Fold many checks into one; the first failing one supplies both sides."""
    count = 0
    for check in checks:
        count += 1
        if not check.holds:
            return IdentityCheck(name, False, check.lhs, check.rhs, f"{detail}; failed at {check.detail}")
    return IdentityCheck(name, True, count, count, f"{detail}; {count} instances")


def _reduced_betti(spec: FamilySpec) -> Dict[int, int]:
    return poset_homology(proper_part(build_family(spec))).betti


def _subsets(ground: Sequence[int]) -> List[tuple]:
    return [s for r in range(len(ground) + 1) for s in combinations(ground, r)]


def crosswise_poset():
    """
    Bounded poset with four atoms a1..a4, c1 > a1, a2 and c2 > a3, a4.

    Its proper part is disconnected with no point joining the two halves, so
    no recursive atom ordering exists.
    """
    labels = ["0^", "a1", "a2", "a3", "a4", "c1", "c2", "1^"]
    covers = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 6), (4, 6), (5, 7), (6, 7)]
    return from_covers(labels, covers)


def v_inflation_map() -> PosetMap:
    """Deflation of the (2,2,2)-inflated V poset a < b, a < c onto V itself."""
    target = from_covers(["a", "b", "c"], [(0, 1), (0, 2)])
    labels = ["a1", "a2", "b1", "b2", "c1", "c2"]
    covers = [(low, high) for low in (0, 1) for high in (2, 3, 4, 5)]
    source = from_covers(labels, covers)
    return PosetMap(source, target, [0, 0, 1, 1, 2, 2])


# ---------- families ----------

def _families(settings: Settings) -> List[CheckCase]:
    cases: List[CheckCase] = []

    def add(name: str, command: str, run: Callable[[], IdentityCheck], size: int = 0) -> None:
        cases.append(CheckCase("families", name, command, run, size))

    for n in range(3, 7):
        spec = _family("partition", n)
        add(f"partition_{n}", _homology_command(spec),
            lambda spec=spec, n=n: compare("partition_betti", poset_homology(proper_part(build_family(spec))).to_dict(),
                                           {"dims": {str(n - 3): {"betti": factorial(n - 1), "torsion": []}}},
                                           f"Pi_{n}, (n-1)! spheres"), n)

    for n in range(2, 5):
        spec = _family("type_b", n)
        add(f"type_b_{n}", _homology_command(spec),
            lambda spec=spec, n=n: compare("type_b_betti", _reduced_betti(spec), {n - 2: double_factorial(2 * n - 1)},
                                           f"type B partitions of rank {n}"), n + 2)

    for points, d in ((4, 2), (6, 2)):
        spec = _family("zero_mod", points, d)
        steps = points // d
        add(f"zero_mod_{points}_{d}", _homology_command(spec),
            lambda spec=spec, steps=steps, d=d: _all_hold("zero_mod_betti", [
                compare("snf_vs_euler", _reduced_betti(spec), {steps - 2: euler_number(steps * d - 1)}, spec.describe()),
                compare("snf_vs_series", _reduced_betti(spec), betti_gf("zero_mod_d", steps, d=d), spec.describe()),
            ], spec.describe()), points)

    spec = _family("one_mod", 5, 2)
    add("one_mod_5_2", _homology_command(spec),
        lambda spec=spec: _all_hold("one_mod_betti", [
            compare("snf_vs_series", _reduced_betti(spec), betti_gf("one_mod_d", 2, d=2), "odd blocks of [5]"),
            compare("snf_vs_antichain", _reduced_betti(spec), poset_homology(antichain(10)).betti, "odd blocks of [5]"),
        ], "odd blocks of [5]"), 5)

    for points, d, k, expected in ((6, 4, 2, {0: 14}), (8, 3, 2, {0: 104})):
        spec = _family("k_mod", points, d, k)
        steps = (points - k) // d
        add(f"k_mod_{points}_{d}_{k}", _homology_command(spec),
            lambda spec=spec, steps=steps, d=d, k=k, expected=expected: _all_hold("k_mod_betti", [
                compare("snf", _reduced_betti(spec), expected, spec.describe()),
                compare("series", betti_gf("k_mod_d", steps, d=d, k=k), expected, spec.describe()),
            ], spec.describe()), points)

    spec = _family("k_equal", 6, 3)
    add("k_equal_6_3", _homology_command(spec),
        lambda spec=spec: compare("k_equal_betti", _reduced_betti(spec), k_equal_betti(6, 3), "Pi_{6,3}"), 6)

    spec = _family("at_least", 6, 3)
    add("at_least_6_3", f"{CLI} compute whitney --family at_least 6 3 --derive dual",
        lambda spec=spec: _all_hold("at_least_betti", [
            compare("whitney_vs_snf", whitney_betti(dual(build_family(spec))), _reduced_betti(spec), "dual recursion"),
            compare("snf_vs_series", _reduced_betti(spec), betti_gf("at_least_k", 6, k=3), "exponential formula"),
        ], "blocks of size >= 3 on [6]"), 6)

    for n in (3, 4):
        spec = _family("injective_words", n, n)
        add(f"injective_words_{n}", _homology_command(spec),
            lambda spec=spec, n=n: compare("injective_words_betti", _reduced_betti(spec), {n - 1: derangements(n)},
                                           f"d_{n} spheres"), n + 1)
    for n, k in ((3, 2), (3, 3), (4, 2)):
        spec = _family("normal_words", n, k)
        add(f"normal_words_{n}_{k}", _homology_command(spec),
            lambda spec=spec, n=n, k=k: compare("normal_words_betti", _reduced_betti(spec), {k - 1: (n - 1) ** k},
                                                "(n-1)^k spheres"), n + k - 1)

    def noncrossing_case() -> IdentityCheck:
        P = noncrossing(4)
        stanley = noncrossing_stanley_labeling(P)
        lhs = {"mobius": mobius(P, P.require_bottom(), P.require_top()),
               "betti": poset_homology(proper_part(P)).betti,
               "stanley_decreasing": len(decreasing_chains(P, stanley))}
        rhs = {"mobius": -catalan(3), "betti": {1: catalan(3)}, "stanley_decreasing": catalan(3)}
        return compare("noncrossing_4", lhs, rhs, "NC_4")
    add("noncrossing_4", f"{CLI} compute mobius --family noncrossing 4", noncrossing_case, 4)

    def chessboard_torsion() -> IdentityCheck:
        result = homology(chessboard_complex(5, 5))
        return compare("chessboard_torsion", {"betti": result.betti_at(2), "torsion": result.torsion_at(2)},
                       {"betti": 0, "torsion": [3]}, "M_{5,5} in dimension 2")
    add("chessboard_5_5_torsion", f"{CLI} compute homology --family chessboard 5 5", chessboard_torsion, 10)

    for n in range(4, 8):
        spec = _family("matching", n)
        add(f"matching_{n}", f"{CLI} compute homology --family matching {n}",
            lambda n=n: _matching_case(n), n)

    for m, n in ((2, 2), (2, 3), (3, 3), (3, 4), (4, 4)):
        add(f"chessboard_{m}_{n}_connectivity", f"{CLI} compute homology --family chessboard {m} {n}",
            lambda m=m, n=n: _chessboard_connectivity_case(m, n), n)
    for m, n in ((2, 3), (3, 5)):
        add(f"chessboard_{m}_{n}_cohen_macaulay", f"{CLI} compute structure --family chessboard {m} {n}",
            lambda m=m, n=n: compare("chessboard_cm", cm_checks(chessboard_complex(m, n)).is_cm, True,
                                     f"M_{{{m},{n}}}, n >= 2m - 1"), n)
    return cases


def outside_contents(values: Iterable, n: int) -> List:
    """Sorted values that are not c_lambda for any lambda in matching_partitions(n)."""
    contents = {laplacian_eigenvalue(lam.parts) for lam in matching_partitions(n)}
    return sorted(value for value in values if value not in contents)


def _matching_case(n: int) -> IdentityCheck:
    delta = matching_complex(n)
    result = homology(delta)
    predicted = {k - 1: bouc_betti(n, k) for k in range(1, n // 2 + 1)}
    kernels = {i: laplacian_betti(delta, i) for i in range(delta.dim + 1)}
    checks = [
        compare("bouc", result.betti, {d: b for d, b in predicted.items() if b}, f"M_{n}"),
        euler_poincare_check(delta),
        compare("laplacian_betti", {i: b for i, b in kernels.items() if b},
                {d: b for d, b in result.betti.items() if d >= 0}, f"M_{n}"),
    ]
    if n <= 6:
        spectrum = (value for i in range(delta.dim + 1) for value in laplacian_spectrum(delta, i))
        outside = outside_contents(spectrum, n)
        checks.append(compare("laplacian_eigenvalues", outside, [], f"M_{n} eigenvalues are contents"))
    return _all_hold("matching_complex", checks, f"M_{n}")


def _chessboard_connectivity_case(m: int, n: int) -> IdentityCheck:
    result = homology(chessboard_complex(m, n))
    nu = chessboard_connectivity(m, n)
    return compare("chessboard_connectivity", min(result.nonzero_dims()), nu, f"M_{{{m},{n}}}")


# ---------- shelling ----------

def _shelling(settings: Settings) -> List[CheckCase]:
    cases: List[CheckCase] = []

    def add(name: str, command: str, run: Callable[[], IdentityCheck], size: int = 0) -> None:
        cases.append(CheckCase("shelling", name, command, run, size))

    def el_case(family: str, params: Sequence[int], labeling: Optional[str] = None) -> Callable[[], IdentityCheck]:
        def run() -> IdentityCheck:
            spec = _family(family, *params)
            P = build_family(spec)
            lab = builtin_el_labeling(family, P, labeling)
            report = verify_el_labeling(P, lab)
            if not report:
                return IdentityCheck("el_consistency", False, report.reason, "EL", spec.describe())
            return compare("el_consistency", betti_from_el(P, lab, verify=False),
                           poset_homology(proper_part(P)).betti, spec.describe())
        return run

    for n in range(3, 6):
        for name in ("lambda1", "lambda2"):
            add(f"el_partition_{n}_{name}", f"{CLI} compute betti-el --family partition {n} --labeling {name}",
                el_case("partition", (n,), name), n)
    add("el_boolean_4", f"{CLI} compute betti-el --family boolean 4", el_case("boolean", (4,)), 4)
    add("el_noncrossing_4", f"{CLI} compute betti-el --family noncrossing 4", el_case("noncrossing", (4,)), 4)
    add("el_k_equal_6_3", f"{CLI} compute betti-el --family k_equal 6 3", el_case("k_equal", (6, 3)), 6)

    def boolean_rank_selection() -> IdentityCheck:
        P = boolean(4)
        lab = builtin_el_labeling("boolean", P)
        checks = []
        for R in _subsets((1, 2, 3)):
            expected = descent_class(4, R)
            checks.append(compare("rank_selected_betti", poset_homology(rank_selected(P, R)).betti,
                                  {len(R) - 1: expected}, f"R = {list(R)}"))
            checks.append(compare("descent_count", descent_count(P, lab, R), expected, f"R = {list(R)}"))
        return _all_hold("boolean_rank_selection", checks, "B_4")
    add("rank_selection_boolean_4", f"{CLI} oracle descent-class 4 1 3", boolean_rank_selection, 4)

    def cross_polytope_rank_selection() -> IdentityCheck:
        P = cross_polytope_face_lattice(3)
        checks = [compare("rank_selected_betti", poset_homology(rank_selected(P, R)).betti,
                          {len(R) - 1: signed_descent_class(3, [3 - r for r in R])}, f"R = {list(R)}")
                  for R in _subsets((1, 2, 3))]
        return _all_hold("cross_polytope_rank_selection", checks, "cross-polytope of dimension 3")
    add("rank_selection_cross_polytope_3", f"{CLI} oracle signed-descent-class 3 0 2",
        cross_polytope_rank_selection, 5)

    def subspace_rank_selection() -> IdentityCheck:
        P = subspace_lattice(3, 2)
        checks = [compare("rank_selected_betti", poset_homology(rank_selected(P, R)).betti,
                          {len(R) - 1: int(descent_class_q(3, R, 2))}, f"R = {list(R)}")
                  for R in _subsets((1, 2))]
        return _all_hold("subspace_rank_selection", checks, "subspaces of GF(2)^3")
    add("rank_selection_subspace_3_2", f"{CLI} oracle descent-class-q 3 2 1", subspace_rank_selection, 4)

    def nbc_case() -> IdentityCheck:
        checks = []
        for family, params in (("boolean", (4,)), ("partition", (4,)), ("subspace", (3, 2))):
            L = build_family(_family(family, *params))
            checks.append(compare("nbc_count", len(nbc_bases(L)), abs(mobius(L, L.require_bottom(), L.require_top())),
                                  f"{family} {params}"))
        return _all_hold("nbc_bases", checks, "geometric lattices")
    add("nbc_bases", f"{CLI} compute mobius --family partition 4", nbc_case, 4)

    def simplex_boundary_orders() -> IdentityCheck:
        delta = simplex_boundary(4)
        checks = [compare("is_shelling", bool(is_shelling(delta, order)), True, str(order))
                  for order in permutations(delta.facets)]
        return _all_hold("simplex_boundary_shellings", checks, "boundary of the 3-simplex")
    add("shellings_simplex_boundary_4", f"{CLI} compute shelling --family simplex_boundary 4",
        simplex_boundary_orders, 4)

    add("nonshellable_disjoint_edges", f"{CLI} compute shelling --input data/two_disjoint_edges.json",
        lambda: compare("find_shelling", find_shelling(from_facets(4, [(0, 1), (2, 3)])).status, NONE,
                        "two disjoint edges"), 2)

    def rao_every_root(family: str, n: int) -> Callable[[], IdentityCheck]:
        def run() -> IdentityCheck:
            P = build_family(_family(family, n))
            checks = [compare("rao_search", search_recursive_atom_ordering(P, root_order=order).status, FOUND,
                              f"root order {list(order)}")
                      for order in all_root_orders(P)]
            return _all_hold("recursive_atom_ordering", checks, f"{family} {n}")
        return run
    add("rao_boolean_4", f"{CLI} compute shelling --family boolean 4", rao_every_root("boolean", 4), 4)
    add("rao_partition_4", f"{CLI} compute shelling --family partition 4", rao_every_root("partition", 4), 4)
    add("rao_crosswise_counterexample", f"{CLI} compute shelling --input data/crosswise.json",
        lambda: compare("rao_search", search_recursive_atom_ordering(crosswise_poset()).status, NONE,
                        "four atoms paired crosswise"), 2)
    return cases


# ---------- identities ----------

def _identities(settings: Settings) -> List[CheckCase]:
    cases: List[CheckCase] = []

    def add(name: str, command: str, run: Callable[[], IdentityCheck], size: int = 0) -> None:
        cases.append(CheckCase("identities", name, command, run, size))

    def philip_hall() -> IdentityCheck:
        checks = (philip_hall_check(random_poset(settings.random_poset_size, seed=settings.seed + i))
                  for i in range(settings.random_posets))
        return _all_hold("philip_hall", checks, f"{settings.random_posets} random posets")
    add("philip_hall_random", f"{CLI} check identities", philip_hall)

    def corpus_complexes():
        yield "matching 5", matching_complex(5)
        yield "chessboard 3 4", chessboard_complex(3, 4)
        yield "simplex_boundary 5", simplex_boundary(5)
        yield "order complex of partition 4", order_complex(proper_part(partition_lattice(4)))
        yield "order complex of boolean 4", order_complex(proper_part(boolean(4)))
        yield "colored chessboard 2 3 2", colored_chessboard_complex(2, 3, 2)

    def boundary_and_euler() -> IdentityCheck:
        checks = []
        for name, delta in corpus_complexes():
            checks.append(compare("boundary_squared", chain_complex(delta).boundary_squared_is_zero(), True, name))
            checks.append(euler_poincare_check(delta))
        return _all_hold("chain_complexes", checks, "corpus complexes")
    add("boundary_squared_and_euler_poincare", f"{CLI} compute homology --family matching 5", boundary_and_euler)

    small = {
        "boolean 2": lambda: boolean(2),
        "partition 3": lambda: partition_lattice(3),
        "antichain 2": lambda: antichain(2),
        "chain 3": lambda: chain_poset(3),
    }
    for (left, build_left), (right, build_right) in [(a, b) for a in small.items() for b in small.items()]:
        def kunneth(build_left=build_left, build_right=build_right, left=left, right=right) -> IdentityCheck:
            P, Q = build_left(), build_right()
            checks = [kunneth_checks(P, Q, "join"), kunneth_checks(P, Q, "ordinary_product")]
            if P.bottom() is not None and Q.bottom() is not None:
                checks.append(kunneth_checks(P, Q, "reduced_product"))
            if P.is_bounded() and Q.is_bounded() and len(P) > 1 and len(Q) > 1:
                checks.append(kunneth_checks(P, Q, "doubly_bounded"))
            return _all_hold("kunneth", checks, f"{left} with {right}")
        add(f"kunneth_{left.replace(' ', '')}_{right.replace(' ', '')}",
            f"{CLI} check identities", kunneth)

    def alexander(predicate: str) -> Callable[[], IdentityCheck]:
        def run() -> IdentityCheck:
            ambient = proper_part(boolean(6))
            edges = edges_of_complete_graph(4)
            wanted = "connected" == predicate
            sub = []
            for x, subset in enumerate(ambient.elements):
                mask = sum(1 << (i - 1) for i in subset)
                graph = to_graph(4, mask, edges)
                if nx.is_connected(graph) == wanted:
                    sub.append(x)
            return alexander_duality_check(ambient, sub)
        return run
    add("alexander_disconnected_graphs_4", f"{CLI} compute homology --family graphs 4 disconnected --proper",
        alexander("disconnected"), 6)
    add("alexander_connected_graphs_4", f"{CLI} compute homology --family graphs 4 connected",
        alexander("connected"), 6)

    def quillen_components() -> IdentityCheck:
        source = proper_part(graph_property_poset(4, "disconnected"))
        target = proper_part(partition_lattice(4))
        mapping = [target.index_of_element(_component_partition(4, edges)) for edges in source.elements]
        return quillen_fiber_check(PosetMap(source, target, mapping))
    add("quillen_disconnected_graphs_4", f"{CLI} compute homology --family graphs 4 disconnected --proper",
        quillen_components, 4)

    add("general_fiber_inflated_v", f"{CLI} compute homology --input data/inflated_v.json",
        lambda: general_fiber_betti_check(v_inflation_map()))

    for n in range(2, 6):
        def lefschetz_boolean(n=n) -> IdentityCheck:
            P = proper_part(boolean(n))
            group = symmetric_group_generators(n) + random_letter_permutations(
                n, settings.random_group_elements, settings.seed)
            checks = (fixed_point_lefschetz(P, GroupElementAction.from_letter_permutation(P, g, "subset"))
                      for g in group)
            return _all_hold("lefschetz", checks, f"proper part of B_{n}")
        add(f"lefschetz_boolean_{n}", f"{CLI} compute mobius --family boolean {n}", lefschetz_boolean, n)

    def lefschetz_words() -> IdentityCheck:
        P = proper_part(word_poset(3, 2, "normal"))
        checks = (fixed_point_lefschetz(P, GroupElementAction.from_letter_permutation(P, g, "word"))
                  for g in permutations((1, 2, 3)))
        return _all_hold("lefschetz", checks, "normal words over [3] of length <= 2")
    add("lefschetz_normal_words_3_2", f"{CLI} compute mobius --family normal_words 3 2", lefschetz_words, 3)

    def mobius_betti() -> IdentityCheck:
        return _all_hold("mobius_betti", (mobius_betti_check(P) for P in (
            boolean(4), partition_lattice(4), noncrossing(4), k_equal_partition_lattice(5, 3))), "bounded lattices")
    add("mobius_betti", f"{CLI} compute mobius --family partition 4", mobius_betti, 5)

    add("crosscut_partition_4", f"{CLI} compute homology --family partition 4 --proper",
        lambda: _all_hold("crosscut", [crosscut_check(partition_lattice(4)), crosscut_check(boolean(3))],
                          "Pi_4 and B_3"), 4)

    def closure() -> IdentityCheck:
        B = boolean(4)
        keep = [x for x in range(len(B)) if B.elements[x] not in ((), (1, 2, 3), (1, 2, 3, 4))]
        P = B.induced(keep)
        index = {element: i for i, element in enumerate(P.elements)}
        cl = [index[tuple(sorted(set(element) | {4}))] for element in P.elements]
        return _all_hold("closure", [closure_check(P, cl), closure_check(P, list(range(len(P))))],
                         "add 4 to every set")
    add("closure_add_element", f"{CLI} compute homology --family boolean 4 --proper", closure, 4)

    def inflation_case() -> IdentityCheck:
        base = chessboard_complex(2, 3)
        m = [2] * base.vertex_count
        return _all_hold("inflation", [
            inflation_betti_check(base, m),
            compare("colored_chessboard", homology(colored_chessboard_complex(2, 3, 2)).to_dict(),
                    homology(inflation(base, m)).to_dict(), "M^2_{2,3}"),
        ], "2-colored M_{2,3}")
    add("inflation_colored_chessboard_2_3", f"{CLI} compute homology --family colored_chessboard 2 3 2",
        inflation_case, 5)
    return cases


def _component_partition(n: int, edges) -> tuple:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(edges)
    return canonical(nx.connected_components(graph))


# ---------- arrangements ----------

def _arrangements(settings: Settings) -> List[CheckCase]:
    cases: List[CheckCase] = []

    def add(name: str, command: str, run: Callable[[], IdentityCheck], size: int = 0) -> None:
        cases.append(CheckCase("arrangements", name, command, run, size))

    for n in range(2, 6):
        def braid_lattice(n=n) -> IdentityCheck:
            L = intersection_semilattice(builtin_arrangement("braid", n))
            partitions = partition_lattice(n)
            mapping = braid_partition_map(L, partitions)
            return compare("braid_lattice_isomorphism", is_order_isomorphism(L, partitions, mapping), True,
                           f"L(braid {n}) and Pi_{n}")
        add(f"braid_lattice_{n}", f"{CLI} compute structure --arrangement braid {n}", braid_lattice, n)

    for kind, n, expected in (("braid", 4, (24, 0)), ("type_b_braid", 2, (8, 0)),
                              ("coordinate", 3, (8, 0)), ("type_b_coordinate", 1, (3, 1))):
        def regions(kind=kind, n=n, expected=expected) -> IdentityCheck:
            A = builtin_arrangement(kind, n)
            count = zaslavsky(A)
            at_minus_one = abs(characteristic_polynomial(A).eval(-1))
            return _all_hold("zaslavsky", [
                compare("regions", (count.regions, count.bounded), expected, f"{kind} {n}"),
                compare("chi_at_minus_one", int(at_minus_one), count.regions, f"{kind} {n}"),
            ], f"{kind} {n}")
        add(f"zaslavsky_{kind}_{n}", f"{CLI} compute zaslavsky --arrangement {kind} {n}", regions, n)

    def orlik_solomon() -> IdentityCheck:
        A = builtin_arrangement("braid", 3, complex_=True)
        betti = orlik_solomon_betti(A)
        coefficients = characteristic_polynomial(A).all_coeffs()
        from_chi = {i: abs(int(c)) for i, c in enumerate(coefficients) if c}
        return _all_hold("orlik_solomon", [
            compare("betti", betti, {0: 1, 1: 3, 2: 2}, "braid 3"),
            compare("poincare_vs_chi", betti, from_chi, "braid 3"),
        ], "complex braid 3")
    add("orlik_solomon_braid_3", f"{CLI} compute os --arrangement braid 3 --complex", orlik_solomon, 3)

    def gm_k_equal() -> IdentityCheck:
        A = builtin_arrangement("k_equal", 4, 3)
        P = k_equal_partition_lattice(4, 3)
        bottom = P.require_bottom()
        totals: Dict[int, int] = {}
        for x in range(len(P)):
            if x == bottom:
                continue
            codim = 4 - len(P.elements[x])
            for j, b in betti_open_interval(P, bottom, x).betti.items():
                totals[codim - 2 - j] = totals.get(codim - 2 - j, 0) + b
        formula = {i: b for i, b in sorted(totals.items()) if b}
        return _all_hold("goresky_macpherson", [
            compare("arrangement_vs_partitions", goresky_macpherson_betti(A), formula, "k_equal 4 3"),
            compare("value", formula, {1: 7}, "k_equal 4 3"),
        ], "real 3-equal arrangement in R^4")
    add("goresky_macpherson_k_equal_4_3", f"{CLI} compute gm --arrangement k_equal 4 3", gm_k_equal, 4)

    def gm_regions() -> IdentityCheck:
        A = builtin_arrangement("braid", 3)
        return compare("reduced_h0_vs_regions", goresky_macpherson_betti(A), {0: zaslavsky(A).regions - 1}, "braid 3")
    add("goresky_macpherson_braid_3", f"{CLI} compute gm --arrangement braid 3", gm_regions, 3)
    return cases


# ---------- oracles ----------

def _oracles(settings: Settings) -> List[CheckCase]:
    cases: List[CheckCase] = []

    def add(name: str, command: str, run: Callable[[], IdentityCheck]) -> None:
        cases.append(CheckCase("oracles", name, command, run))

    add("derangements", f"{CLI} oracle derangements 7",
        lambda: compare("derangements", [derangements(n) for n in range(8)],
                        [derangements_enumerated(n) for n in range(8)], "recurrence vs enumeration"))

    def euler_numbers() -> IdentityCheck:
        order = 8
        triangle = [euler_number(m) for m in range(order + 1)]
        return _all_hold("euler_numbers", [
            compare("boustrophedon_vs_series", triangle, zigzag_numbers(order), "tan + sec"),
            compare("boustrophedon_vs_enumeration", triangle[1:],
                    [alternating_permutations(m) for m in range(1, order + 1)], "alternating permutations"),
            compare("tangent", tangent_numbers(4), [triangle[2 * i - 1] for i in range(1, 5)], "-ln cos"),
        ], "E_0..E_8")
    add("euler_numbers", f"{CLI} oracle euler 8", euler_numbers)

    add("d_euler", f"{CLI} oracle d-euler 3 3",
        lambda: _all_hold("d_euler", (compare("d_euler", d_euler(n, d), d_euler_enumerated(n, d), f"n={n}, d={d}")
                                      for n, d in ((2, 2), (3, 2), (2, 3), (3, 3))), "series vs descent classes"))

    def descent_classes() -> IdentityCheck:
        checks = []
        for R in _subsets((1, 2, 3)):
            checks.append(compare("descent_class", descent_class(4, R), descent_class_enumerated(4, R), str(R)))
            checks.append(compare("descent_class_q", descent_class_q(4, R), descent_class_q_enumerated(4, R), str(R)))
        for R in _subsets((0, 1, 2)):
            checks.append(compare("signed_descent_class", signed_descent_class(3, R),
                                  signed_descent_class_enumerated(3, R), str(R)))
        return _all_hold("descent_classes", checks, "closed forms vs enumeration")
    add("descent_classes", f"{CLI} oracle descent-class 4 2", descent_classes)

    def series_identities() -> IdentityCheck:
        order = settings.series_order
        u = TruncatedSeries.variable(order)
        return _all_hold("series", [
            compare("sin_inverse", sin_series(order).compose(sin_series(order).compositional_inverse()) == u, True,
                    "sin o arcsin"),
            compare("log_exp", exp_series(order).log() == u, True, "log(e^u)"),
        ], f"order {order}")
    add("series_identities", f"{CLI} oracle betti-gf one_mod_d 3 2", series_identities)

    def specht_dimensions() -> IdentityCheck:
        return _all_hold("specht", (compare("sum_of_squares", sum(lam.dim_specht() ** 2 for lam in partitions_of(n)),
                                            factorial(n), f"n = {n}") for n in range(1, 8)), "hook length formula")
    add("hook_length_sum_of_squares", f"{CLI} oracle hook 3 2 1", specht_dimensions)

    def contents() -> IdentityCheck:
        checks = []
        for n in range(1, 8):
            for lam in partitions_of(n):
                checks.append(compare("frobenius_vs_content", laplacian_eigenvalue(lam.parts), lam.content_sum(), str(lam)))
                checks.append(compare("conjugate_negates", laplacian_eigenvalue(lam.conjugate().parts),
                                      -lam.content_sum(), str(lam)))
        return _all_hold("contents", checks, "partitions of n <= 7")
    add("laplacian_eigenvalue_contents", f"{CLI} oracle content 3 1", contents)

    add("catalan_double_factorial", f"{CLI} oracle catalan 5",
        lambda: compare("classical", [catalan(n) for n in range(6)] + [double_factorial(n) for n in (-1, 0, 5, 7)],
                        [1, 1, 2, 5, 14, 42, 1, 1, 15, 105], "Catalan and double factorials"))
    return cases


SUITES: Dict[str, Callable[[Settings], List[CheckCase]]] = {
    "families": _families,
    "shelling": _shelling,
    "identities": _identities,
    "arrangements": _arrangements,
    "oracles": _oracles,
}


def build_suite(name: str, max_size: int, settings: Settings) -> List[CheckCase]:
    """
    Cases of one suite ("all" concatenates them in SUITES order).

    Args:
        name: One of SUITE_NAMES
        max_size: Only used for logging; skipping is the runner's job
        settings: Seeds and counts for the randomized checks

    Raises:
        PosetTopError: For an unknown suite name
    """
    if name not in SUITE_NAMES:
        raise PosetTopError(f"unknown suite {name!r}, expected one of {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if name == "all" else [name]
    cases = [case for suite in names for case in SUITES[suite](settings)]
    logger.debug("Suite %s: %d cases (%d within size %d)", name, len(cases),
                 sum(1 for c in cases if c.size <= max_size), max_size)
    return cases
