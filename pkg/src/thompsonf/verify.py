"""The verification battery.

Each ``check_*`` function runs one family of exact checks and returns a
:class:`CheckResult`.  :func:`run_battery` strings them together into a
:class:`Report`, which the CLI serialises as JSON.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from itertools import combinations
from typing import Callable, Optional

from . import __version__
from .complexes import SimplicialComplex, check_isomorphism, simplex_boundary
from .forest import (
    LEAF,
    Forest,
    elementary_core,
    enumerate_elementary_forests,
    enumerate_forests,
    enumerate_trees,
    exposed_carets,
    contract,
    graft,
    is_elementary,
    is_expansion_of,
    leaf_count,
    minimal_common_expansion,
    replay,
    simple_expansion,
)
from .groupoid import (
    GroupoidElement,
    act,
    closed_interval,
    common_upper_bound,
    compose,
    core_map,
    element,
    elementary_le,
    enumerate_vertices,
    invert,
    le,
    open_interval,
    order_complex,
    split,
    transitivity_failure,
)
from .homology import (
    betti_numbers_rational,
    chain_complex,
    is_acyclic,
    reduced_euler_characteristic,
    reduced_homology,
)
from .matching import connectivity_report, matching_complex, path_graph, star_decomposition
from .stein import (
    Cube,
    cube_faces,
    descending_link,
    descending_link_at,
    descending_link_iso,
    morse_check,
    relative_link,
    suspension_of_interval,
)
from .thompson import (
    IDENTITY,
    evaluate_word,
    generator,
    inverse,
    multiply,
    reduce,
    verify_relation,
)

SCHEMA_VERSION = "1"
DEFAULT_SEED = 20240101

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "tool", "version", "timestamp", "seed", "params", "results", "summary"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "tool": {"type": "string"},
        "version": {"type": "string"},
        "timestamp": {"type": "string"},
        "seed": {"type": "integer", "minimum": 0},
        "params": {"type": "object"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "params", "status", "details", "elapsed_ms"],
                "properties": {
                    "name": {"type": "string"},
                    "params": {"type": "object"},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "details": {"type": "string"},
                    "elapsed_ms": {"type": "number", "minimum": 0},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "pass", "fail", "skipped"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("total", "pass", "fail", "skipped")},
        },
        "connectivity": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "nu", "f_vector", "betti", "torsion", "contractible_expected", "pass"],
                "properties": {
                    "n": {"type": "integer"},
                    "nu": {"type": "integer"},
                    "f_vector": {"type": "array", "items": {"type": "integer"}},
                    "betti": {"type": "array", "items": {"type": "integer"}},
                    "torsion": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                    "contractible_expected": {"type": "boolean"},
                    "pass": {"type": "boolean"},
                },
            },
        },
    },
}


@dataclass
class CheckResult:
    name: str
    params: dict
    status: str
    details: str = ""
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    version: str
    timestamp: str
    seed: int
    params: dict
    results: list = field(default_factory=list)
    connectivity: list = field(default_factory=list)

    def summary(self) -> dict:
        out = {"total": len(self.results), "pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "tool": "thompsonf",
            "version": self.version,
            "timestamp": self.timestamp,
            "seed": self.seed,
            "params": self.params,
            "results": [asdict(r) for r in self.results],
            "summary": self.summary(),
            "connectivity": self.connectivity,
        }


def _run(name: str, params: dict, body: Callable[[Callable[[str], None]], Optional[str]]) -> CheckResult:
    failures: list[str] = []
    t0 = time.perf_counter()
    try:
        info = body(failures.append) or ""
    except Exception as exc:  # a crash is a failed check, not a crashed battery
        failures.append(f"exception {exc!r}")
        info = ""
    elapsed = (time.perf_counter() - t0) * 1000
    if failures:
        details = f"{len(failures)} failure(s); first counterexample: {failures[0]}"
        return CheckResult(name, params, "fail", details, elapsed)
    return CheckResult(name, params, "pass", info, elapsed)


# --- random sampling -----------------------------------------------------------------


def random_tree(rng: random.Random, leaves: int):
    f = Forest.trivial(1)
    for _ in range(leaves - 1):
        f = simple_expansion(f, rng.randint(1, f.leaf_count))
    return f.trees[0]


def random_forest(rng: random.Random, leaves: int, roots: Optional[int] = None) -> Forest:
    if roots is None:
        roots = rng.randint(1, leaves)
    cuts = sorted(rng.sample(range(1, leaves), roots - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [leaves])]
    return Forest(tuple(random_tree(rng, s) for s in sizes))


def random_vertex(rng: random.Random, max_leaves: int = 8, level: Optional[int] = None) -> GroupoidElement:
    lo = 1 if level is None else level
    n = rng.randint(lo, max(lo, max_leaves))
    return element(Forest.of_tree(random_tree(rng, n)), random_forest(rng, n, level))


def random_word(rng: random.Random, max_len: int = 6, max_index: int = 4) -> list[tuple[int, int]]:
    return [(rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))]


# --- forest core ---------------------------------------------------------------------


def check_forest_core(max_leaves: int = 5, core_leaves: int = 6) -> CheckResult:
    def body(fail):
        small = [f for n in range(1, max_leaves + 1) for f in enumerate_forests(n)]
        for f in small:
            for k in range(1, f.leaf_count + 1):
                g = simple_expansion(f, k)
                if g.leaf_count != f.leaf_count + 1 or g.root_count != f.root_count:
                    fail(f"simple_expansion({f}, {k}) = {g}")
        by_roots: dict[int, list] = {}
        for f in small:
            by_roots.setdefault(f.root_count, []).append(f)
        for forests in by_roots.values():
            rel = {}
            for f in forests:
                for g in forests:
                    path = is_expansion_of(g, f)
                    rel[f, g] = path is not None
                    if path is not None and replay(f, path) != g:
                        fail(f"witness {path} does not take {f} to {g}")
            for f in forests:
                if not rel[f, f]:
                    fail(f"{f} is not an expansion of itself")
                for g in forests:
                    if f != g and rel[f, g] and rel[g, f]:
                        fail(f"antisymmetry fails for {f}, {g}")
                    if rel[f, g]:
                        for h in forests:
                            if rel[g, h] and not rel[f, h]:
                                fail(f"transitivity fails for {f}, {g}, {h}")
            for f, g in combinations(forests, 2):
                m = minimal_common_expansion(f, g)
                if is_expansion_of(m, f) is None or is_expansion_of(m, g) is None:
                    fail(f"mce({f}, {g}) = {m} is not a common expansion")
                for h in forests:
                    if rel[f, h] and rel[g, h] and is_expansion_of(h, m) is None:
                        fail(f"common expansion {h} of {f}, {g} does not expand {m}")
        for n in range(1, core_leaves + 1):
            for f in enumerate_forests(n):
                c = elementary_core(f)
                if not is_elementary(c) or is_expansion_of(f, c) is None:
                    fail(f"core({f}) = {c}")
                if not f.is_trivial() and c.is_trivial():
                    fail(f"core of non-trivial {f} is trivial")
                for m in range(f.root_count, f.leaf_count + 1):
                    for e in enumerate_elementary_forests(m):
                        if e.root_count == f.root_count and is_expansion_of(f, e) is not None:
                            if is_expansion_of(c, e) is None:
                                fail(f"elementary {e} below {f} is not below core {c}")
                if Forest.parse(str(f)) != f:
                    fail(f"round trip of {f}")
        return f"{len(small)} forests up to {max_leaves} leaves"

    return _run("forest.core", {"max_leaves": max_leaves, "core_leaves": core_leaves}, body)


# --- group -----------------------------------------------------------------------------


def reduction_normal_forms(minus, plus) -> set:
    """Every terminal pair reachable by removing common carets in any order."""
    seen, out = set(), set()
    stack = [(Forest.of_tree(minus), Forest.of_tree(plus))]
    while stack:
        a, b = stack.pop()
        if (a, b) in seen:
            continue
        seen.add((a, b))
        eb = set(exposed_carets(b))
        moves = [k for k in exposed_carets(a) if k in eb]
        if not moves:
            out.add((a.trees[0], b.trees[0]))
        for k in moves:
            stack.append((contract(a, k), contract(b, k)))
    return out


def check_reduction(max_leaves: int = 5) -> CheckResult:
    def body(fail):
        pairs = 0
        for n in range(1, max_leaves + 1):
            trees = enumerate_trees(n)
            for t in trees:
                for u in trees:
                    pairs += 1
                    forms = reduction_normal_forms(t, u)
                    g = reduce(t, u)
                    if forms != {(g.minus, g.plus)}:
                        fail(f"pair [{Forest.of_tree(t)},{Forest.of_tree(u)}] reduces to {len(forms)} forms")
                    if (g.minus, g.plus) == (t, u):
                        for k in range(1, n + 1):
                            a = simple_expansion(Forest.of_tree(t), k).trees[0]
                            b = simple_expansion(Forest.of_tree(u), k).trees[0]
                            if reduce(a, b) != g:
                                fail(f"expanding {g} at {k} and reducing does not return it")
        return f"{pairs} tree pairs"

    return _run("group.reduction_confluence", {"max_leaves": max_leaves}, body)


def check_relations(max_j: int = 6) -> CheckResult:
    def body(fail):
        count = 0
        for j in range(1, max_j + 1):
            for i in range(j):
                count += 1
                if not verify_relation(i, j):
                    fail(f"x_{j} x_{i} = {multiply(generator(j), generator(i))} "
                         f"but x_{i} x_{j + 1} = {multiply(generator(i), generator(j + 1))}")
        return f"{count} relations"

    return _run("group.relations", {"max_j": max_j}, body)


def check_group_axioms(seed: int = DEFAULT_SEED, samples: int = 200) -> CheckResult:
    def body(fail):
        rng = random.Random(seed)
        for _ in range(samples):
            g, h, k = (evaluate_word(random_word(rng)) for _ in range(3))
            if multiply(multiply(g, h), k) != multiply(g, multiply(h, k)):
                fail(f"associativity for {g}, {h}, {k}")
            if multiply(IDENTITY, g) != g or multiply(g, IDENTITY) != g:
                fail(f"identity law for {g}")
            if not multiply(g, inverse(g)).is_identity() or not multiply(inverse(g), g).is_identity():
                fail(f"inverse law for {g}")
            if inverse(inverse(g)) != g:
                fail(f"inverse is not an involution at {g}")
            gh = multiply(g, h)
            if leaf_count(gh.minus) > leaf_count(g.minus) + leaf_count(h.minus) - 1:
                fail(f"leaf bound for {g} * {h} = {gh}")
        return f"{samples} sampled triples"

    return _run("group.axioms", {"seed": seed, "samples": samples}, body)


# --- groupoid and poset -----------------------------------------------------------------


def up_sets(vertices: list[GroupoidElement], max_leaves: int) -> dict:
    """``{y in vertices | x <= y}`` for each ``x``, generated from splits.

    Any ``y >= x`` with at most ``max_leaves`` leaves is ``x [e, 1]`` for a
    forest ``e`` with ``level(x)`` roots and ``level(y) <= max_leaves``
    leaves, so the enumeration is complete on ``vertices``.
    """
    universe = set(vertices)
    ups = {}
    for x in vertices:
        k = x.level
        up = set()
        for n in range(k, max_leaves + 1):
            for e in enumerate_forests(n, k):
                y = compose(x, split(e))
                if y in universe:
                    up.add(y)
        ups[x] = up
    return ups


def check_partial_order(max_leaves: int = 6, seed: int = DEFAULT_SEED, cross_leaves: int = 4) -> CheckResult:
    def body(fail):
        verts = enumerate_vertices(max_leaves)
        ups = up_sets(verts, max_leaves)
        relations = 0
        for x in verts:
            if x not in ups[x]:
                fail(f"not reflexive at {x}")
            for y in ups[x]:
                relations += 1
                if y != x and x in ups[y]:
                    fail(f"antisymmetry fails for {x}, {y}")
                if not ups[y] <= ups[x]:
                    z = next(iter(ups[y] - ups[x]))
                    fail(f"transitivity fails for {x} <= {y} <= {z}")
                s = le(x, y)
                if s is None or compose(x, s) != y:
                    fail(f"le({x}, {y}) does not recover the split")
        # division-based le against the generated relation
        small = [v for v in verts if v.minus.leaf_count <= cross_leaves]
        for x in small:
            for y in small:
                if (le(x, y) is not None) != (y in ups[x]):
                    fail(f"le({x}, {y}) disagrees with split enumeration")
        rng = random.Random(seed)
        for _ in range(2000):
            x, y = rng.choice(verts), rng.choice(verts)
            if (le(x, y) is not None) != (y in ups[x]):
                fail(f"le({x}, {y}) disagrees with split enumeration")
        # products of splits
        for n in range(1, 4):
            for e1 in enumerate_forests(n + 1):
                for e2 in enumerate_forests(e1.leaf_count + 1, e1.leaf_count):
                    p = compose(split(e1), split(e2))
                    if p != split(graft(e1, e2)) or p.is_identity():
                        fail(f"split product {e1} * {e2} = {p}")
        return f"{len(verts)} vertices, {relations} relations"

    return _run("groupoid.partial_order", {"max_leaves": max_leaves, "seed": seed}, body)


def check_directedness(seed: int = DEFAULT_SEED, samples: int = 200) -> CheckResult:
    def body(fail):
        rng = random.Random(seed)
        for _ in range(samples):
            x, y = random_vertex(rng), random_vertex(rng)
            w = common_upper_bound(x, y)
            if not w.is_split() or w.minus.root_count != 1:
                fail(f"common bound {w} of {x}, {y} is not of the form [v,1]")
            if le(x, w) is None or le(y, w) is None:
                fail(f"{w} does not dominate {x} and {y}")
            if compose(x, split(x.plus)) != split(x.minus):
                fail(f"[t,f][f,1] != [t,1] for {x}")
        return f"{samples} pairs"

    return _run("groupoid.directedness", {"seed": seed, "samples": samples}, body)


def check_freeness_transitivity(seed: int = DEFAULT_SEED, samples: int = 200) -> CheckResult:
    def body(fail):
        rng = random.Random(seed)
        fixed = 0
        for i in range(samples):
            g = IDENTITY if i % 10 == 0 else evaluate_word(random_word(rng))
            x = random_vertex(rng)
            gx = act(g, x)
            if gx.level != x.level:
                fail(f"action of {g} changes the level of {x}")
            if gx == x:
                fixed += 1
                if not g.is_identity():
                    fail(f"{g} fixes {x}")
            x2 = random_vertex(rng, level=x.level)
            h = compose(x2, invert(x))
            if h.source != 1 or h.target != 1:
                fail(f"{x2} x^-1 is not in F for x = {x}")
                continue
            hg = h.to_group_element()
            if act(hg, x) != x2:
                fail(f"{hg} does not carry {x} to {x2}")
            # order is preserved by the action
            s = split(random_forest(rng, x.level + rng.randint(0, 2), x.level))
            if le(act(g, x), act(g, compose(x, s))) != s:
                fail(f"{g} does not preserve {x} <= {x} {s}")
        return f"{samples} samples, {fixed} identity fixes"

    return _run("groupoid.freeness_transitivity", {"seed": seed, "samples": samples}, body)


def interval_base_vertices(max_leaves: int) -> list[GroupoidElement]:
    return enumerate_vertices(max_leaves)


def check_boolean_intervals(max_carets: int = 4, max_level: int = 5, base_leaves: int = 5) -> CheckResult:
    """Closed elementary intervals are boolean lattices of the right size."""

    def body(fail):
        count = 0
        for x in interval_base_vertices(base_leaves):
            if x.level > max_level:
                continue
            for e in enumerate_elementary_forests_roots(x.level, max_carets):
                count += 1
                z = compose(x, split(e))
                p = closed_interval(x, z)
                c = e.caret_count
                if len(p) != 2 ** c:
                    fail(f"[{x}, {z}] has {len(p)} elements, expected {2 ** c}")
                    continue
                subsets = []
                for y in p.elements:
                    s = le(x, y)
                    if s is None or not is_elementary(s.minus) or is_expansion_of(e, s.minus) is None:
                        fail(f"{y} in [{x}, {z}] is not x times a sub-split")
                        break
                    subsets.append(caret_roots_set(s.minus))
                else:
                    n = len(p)
                    if len(set(subsets)) != n:
                        fail(f"[{x}, {z}]: sub-splits are not distinct")
                    for i in range(n):
                        for j in range(n):
                            if p.leq[i][j] != (subsets[i] <= subsets[j]):
                                fail(f"order in [{x}, {z}] is not inclusion")
                    expect = {
                        (i, j) for i in range(n) for j in range(n)
                        if subsets[i] < subsets[j] and len(subsets[j] - subsets[i]) == 1
                    }
                    if set(p.covers()) != expect:
                        fail(f"covering relation of [{x}, {z}] is not boolean")
        return f"{count} intervals"

    return _run(
        "stein.boolean_intervals",
        {"max_carets": max_carets, "max_level": max_level, "base_leaves": base_leaves},
        body,
    )


def caret_roots_set(e: Forest) -> frozenset:
    """Root positions carrying a caret."""
    return frozenset(i for i, t in enumerate(e.trees) if t != LEAF)


def enumerate_elementary_forests_roots(roots: int, max_carets: int) -> list[Forest]:
    return [
        e for c in range(0, min(max_carets, roots) + 1)
        for e in enumerate_elementary_forests(roots + c, c)
        if e.root_count == roots
    ]


def nonelementary_intervals(max_carets: int = 4, max_level: int = 3, base_leaves: int = 3):
    """Pairs ``(x, z)`` with ``x < z``, ``x`` not elementarily below ``z``."""
    for x in enumerate_vertices(base_leaves, max_level):
        k = x.level
        for c in range(2, max_carets + 1):
            for e in enumerate_forests(k + c, k):
                if not is_elementary(e):
                    yield x, compose(x, split(e))


def check_open_intervals(max_carets: int = 4, max_level: int = 3, base_leaves: int = 3) -> CheckResult:
    def body(fail):
        count = 0
        for x, z in nonelementary_intervals(max_carets, max_level, base_leaves):
            count += 1
            p = open_interval(x, z)
            if len(p) == 0:
                fail(f"open interval ({x}, {z}) is empty")
                continue
            hom = reduced_homology(order_complex(p))
            if not is_acyclic(hom):
                fail(f"open interval ({x}, {z}) has homology {[str(h) for h in hom]}")
            phi = {y: core_map(x, y) for y in p.elements}
            top = core_map(x, z)
            if top not in phi:
                fail(f"phi(z) = {top} is not inside ({x}, {z})")
            for y, fy in phi.items():
                if fy not in phi or le(fy, y) is None or phi[fy] != fy:
                    fail(f"phi misbehaves at {y} in ({x}, {z})")
                if le(fy, top) is None:
                    fail(f"phi({y}) is not below phi(z) in ({x}, {z})")
            for i, j in p.covers():
                a, b = p.elements[i], p.elements[j]
                if le(phi[a], phi[b]) is None:
                    fail(f"phi is not monotone on {a} <= {b}")
        return f"{count} intervals"

    return _run(
        "stein.open_interval_contractibility",
        {"max_carets": max_carets, "max_level": max_level, "base_leaves": base_leaves},
        body,
    )


def check_relative_links(max_carets: int = 4, max_level: int = 3, base_leaves: int = 3) -> CheckResult:
    def body(fail):
        count = 0
        for x, z in nonelementary_intervals(max_carets, max_level, base_leaves):
            count += 1
            rel = relative_link(x, z)
            susp = suspension_of_interval(x, z)
            if rel != susp:
                fail(f"relative link of [{x}, {z}] is not the suspension")
            h_rel = reduced_homology(rel)
            h_open = reduced_homology(order_complex(open_interval(x, z)))
            if not h_rel[0].is_zero():
                fail(f"relative link of [{x}, {z}] is disconnected")
            for k in range(1, len(h_rel)):
                below = h_open[k - 1] if k - 1 < len(h_open) else None
                want = (0, ()) if below is None else (below.betti, below.torsion)
                if (h_rel[k].betti, h_rel[k].torsion) != want:
                    fail(f"degree {k} of relative link of [{x}, {z}] does not shift")
        return f"{count} relative links"

    return _run(
        "stein.relative_link_suspension",
        {"max_carets": max_carets, "max_level": max_level, "base_leaves": base_leaves},
        body,
    )


def check_cubes(base_leaves: int = 4, seed: int = DEFAULT_SEED) -> CheckResult:
    def body(fail):
        rng = random.Random(seed)
        count = 0
        for x in enumerate_vertices(base_leaves):
            for e in enumerate_elementary_forests_roots(x.level, 4):
                c = Cube(x, split(e))
                count += 1
                if not morse_check(c):
                    fail(f"Morse conditions fail on cube {x} {e}")
                faces = cube_faces(c)
                if len(faces) != 3 ** c.dim or len(set(faces)) != len(faces):
                    fail(f"cube {x} {e} has {len(faces)} faces")
                verts = set(c.vertices().elements)
                for f in faces:
                    fv = f.vertices().elements
                    if len(fv) != 2 ** f.dim or not set(fv) <= verts:
                        fail(f"face {f.bottom} {f.split} of cube {x} {e}")
                g = evaluate_word(random_word(rng))
                image = {act(g, y) for y in verts}
                if image != set(Cube(act(g, x), c.split).vertices().elements):
                    fail(f"{g} does not carry cube {x} {e} to a cube")
        return f"{count} cubes"

    return _run("stein.cubes", {"base_leaves": base_leaves, "seed": seed}, body)


def check_descending_links(max_n: int = 10, seed: int = DEFAULT_SEED) -> CheckResult:
    def body(fail):
        for n in range(2, max_n + 1):
            iso = descending_link_iso(n)
            if not iso.ok:
                fail(f"descending link at level {n} is not M(L_{n}) ({iso})")
        rng = random.Random(seed)
        for _ in range(20):
            x = random_vertex(rng, max_leaves=7, level=rng.randint(2, 6))
            link = descending_link_at(x)
            abstract = descending_link(x.level)
            mapping = {}
            for y in link.vertices:
                s = le(y, x)
                if s is None or not elementary_le(y, x):
                    fail(f"{y} is not elementarily below {x}")
                    break
                mapping[y] = s.minus
            else:
                if not all(check_isomorphism(link, abstract, mapping).values()):
                    fail(f"descending link at {x} differs from the abstract one")
        return f"levels 2..{max_n}"

    return _run("stein.descending_link_iso", {"max_n": max_n, "seed": seed}, body)


def check_star_decompositions(max_n: int = 12) -> CheckResult:
    def body(fail):
        for n in range(5, max_n + 1):
            d = star_decomposition(n)
            if not d.union_ok:
                fail(f"A ∪ B != M(L_{n})")
            if not d.intersection_ok:
                fail(f"A ∩ B != M(L_{n - 2}) for n = {n}")
        return f"n = 5..{max_n}"

    return _run("matching.star_decomposition", {"max_n": max_n}, body)


def check_connectivity(max_n: int = 12, reports: Optional[list] = None) -> CheckResult:
    def body(fail):
        for n in range(2, max_n + 1):
            r = connectivity_report(n)
            if reports is not None:
                reports.append(r.to_json())
            if not r.passed:
                fail(f"M(L_{n}) homology {[str(h) for h in r.homology]} with nu = {r.nu}")
        return f"n = 2..{max_n}"

    return _run("matching.connectivity", {"max_n": max_n}, body)


def homology_suite(max_n: int = 12) -> list[tuple[str, SimplicialComplex]]:
    out = []
    for n in range(1, 5):
        out.append((f"boundary of {n}-simplex", simplex_boundary(n)))
    for n in range(2, max_n + 1):
        out.append((f"M(L_{n})", matching_complex(path_graph(n))))
        out.append((f"desclink({n})", descending_link(n)))
    for x, z in nonelementary_intervals():
        out.append((f"({x}, {z})", order_complex(open_interval(x, z))))
        out.append((f"rel[{x}, {z}]", relative_link(x, z)))
    return out


def check_homology_engine(max_n: int = 12, oracle_limit: int = 200) -> CheckResult:
    def body(fail):
        compared = 0
        suite = homology_suite(max_n)
        for name, c in suite:
            if not chain_complex(c).boundary_squares_vanish():
                fail(f"boundary squared is non-zero on {name}")
            hom = reduced_homology(c)
            if c.euler_characteristic() - 1 != reduced_euler_characteristic(hom):
                fail(f"Euler characteristic identity fails on {name}")
            if len(c) <= oracle_limit:
                compared += 1
                if [h.betti for h in hom] != betti_numbers_rational(c):
                    fail(f"Betti numbers disagree with the rational oracle on {name}")
        return f"{len(suite)} complexes, {compared} against the rational oracle"

    return _run("homology.self_checks", {"max_n": max_n, "oracle_limit": oracle_limit}, body)


def check_elementary_order() -> CheckResult:
    def body(fail):
        if transitivity_failure() is None:
            fail("no transitivity failure of the elementary order at level <= 3")

    return _run("groupoid.elementary_order", {}, body)


# --- the battery -------------------------------------------------------------------------


def run_battery(max_n: int = 12, seed: int = DEFAULT_SEED, progress: Optional[Callable[[CheckResult], None]] = None) -> Report:
    if max_n < 5:
        raise ValueError(f"max_n must be at least 5, got {max_n}")
    report = Report(
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
        seed=seed,
        params={"max_n": max_n},
    )
    checks = [
        lambda: check_forest_core(),
        lambda: check_reduction(),
        lambda: check_relations(6),
        lambda: check_group_axioms(seed),
        lambda: check_partial_order(6, seed),
        lambda: check_elementary_order(),
        lambda: check_directedness(seed),
        lambda: check_freeness_transitivity(seed),
        lambda: check_boolean_intervals(),
        lambda: check_cubes(seed=seed),
        lambda: check_open_intervals(),
        lambda: check_relative_links(),
        lambda: check_descending_links(max_n, seed),
        lambda: check_star_decompositions(max_n),
        lambda: check_connectivity(max_n, report.connectivity),
        lambda: check_homology_engine(max_n),
    ]
    for check in checks:
        r = check()
        report.results.append(r)
        if progress is not None:
            progress(r)
    return report
