"""Linear tripartite hypergraphs built from progression-free sets.

Three families share one edge shape: pick a base point a and a
direction s from the ingested set S, and connect one vertex per class.

* GF(3) vectors: (a, a+s, a+2s) with lifted directions (s, 1), so every
  edge is an affine line of F_3^{n+1};
* residues mod n = k^2-k+1: (a, a+s, a+ks);
* Eisenstein points: (a, a-s, a+ws) with w the primitive cube root.

Wickets in such a build are governed by a two-relation linear system in
the five direction variables (s, t, u, v, w): labeling the wicket's
columns (x, s), (y, u) and rows (x, w), (y, t), (z, v), the six
row/column incidences force

    base relations   y = x + s - t (shift case) and z from the C-class
                     incidence, leaving
    R0               s - t + k(u - w) = 0          (mod case)
    R1               (k-1)s + t - u - (k-1)v = 0,

with the GF(3) case being k=2 and the Eisenstein case using w in place
of k with adjusted signs. A solution yields a wicket exactly when eight
side inequalities hold; they say the five edges are pairwise distinct
and the rows and columns are disjoint. Those systems are exported here
as EquationSpec values whose triviality rule is "some inequality
fails", so eqfree.has_solution decides wicket existence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .eisenstein import (
    OMEGA,
    ONE,
    ROT60,
    ZERO,
    EisensteinPoint,
    region_points,
)
from .eqfree import EquationSpec, has_solution, iter_nontrivial_solutions
from .errors import WicketDecodeError
from .gf3 import CapSet, Vec, decode, encode, f3_add, f3_scale
from .hypergraph import TripartiteHypergraph, WicketWitness, find_wickets


@dataclass(frozen=True, eq=False)
class F3Build:
    """Edges (a, a+s, a+2s) over F_3^n for every a and every s in a cap."""

    dimension: int
    cap: CapSet
    hypergraph: TripartiteHypergraph
    provenance: tuple  # edge id -> (base vector, direction vector)

    @cached_property
    def edge_index(self) -> dict:
        return {pair: idx for idx, pair in enumerate(self.provenance)}


@dataclass(frozen=True, eq=False)
class ModularBuild:
    """Edges (a, a+s, a+ks) over Z/n, n = k^2 - k + 1."""

    k: int
    n: int
    elements: tuple
    hypergraph: TripartiteHypergraph
    provenance: tuple

    @cached_property
    def edge_index(self) -> dict:
        return {pair: idx for idx, pair in enumerate(self.provenance)}


@dataclass(frozen=True, eq=False)
class EisensteinBuild:
    """Edges (a, a-s, a+ws) with bases in a lattice disc.

    All three vertex classes use the same expanded point list, padded
    so that every edge endpoint has an index even at the boundary.
    """

    bound: int
    norm: str
    elements: tuple
    region: tuple
    vertices: tuple
    hypergraph: TripartiteHypergraph
    provenance: tuple

    @cached_property
    def vertex_index(self) -> dict:
        return {p: i for i, p in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict:
        return {pair: idx for idx, pair in enumerate(self.provenance)}


def build_f3(cap: CapSet) -> F3Build:
    if not cap.verified:
        raise ValueError("build_f3 needs a verified progression-free set")
    n = cap.dimension
    size = 3**n
    edges: list = []
    prov: list = []
    for s in cap.sorted_elements:
        s2 = f3_scale(2, s)
        for a_enc in range(size):
            a = decode(a_enc, n)
            edges.append(
                (a_enc, encode(f3_add(a, s)), encode(f3_add(a, s2)))
            )
            prov.append((a, s))
    h = TripartiteHypergraph(class_sizes=(size, size, size), edges=tuple(edges))
    return F3Build(dimension=n, cap=cap, hypergraph=h, provenance=tuple(prov))


def build_modular(elements: Iterable[int], k: int) -> ModularBuild:
    if k < 2:
        raise ValueError("k must be at least 2")
    n = k * k - k + 1
    elems = tuple(sorted({int(e) % n for e in elements}))
    edges: list = []
    prov: list = []
    for s in elems:
        for a in range(n):
            edges.append((a, (a + s) % n, (a + k * s) % n))
            prov.append((a, s))
    h = TripartiteHypergraph(class_sizes=(n, n, n), edges=tuple(edges))
    return ModularBuild(
        k=k, n=n, elements=elems, hypergraph=h, provenance=tuple(prov)
    )


def build_eisenstein(
    elements: Iterable[EisensteinPoint], bound: int, norm: str = "coordinate"
) -> EisensteinBuild:
    region = region_points(bound, norm=norm)
    elems = tuple(sorted(set(elements)))
    deltas = {ZERO}
    for s in elems:
        deltas.add(-s)
        deltas.add(OMEGA * s)
    vertices = tuple(sorted({p + d for p in region for d in deltas}))
    index = {p: i for i, p in enumerate(vertices)}
    size = len(vertices)
    edges: list = []
    prov: list = []
    for s in elems:
        ws = OMEGA * s
        for a in region:
            edges.append((index[a], index[a - s], index[a + ws]))
            prov.append((a, s))
    h = TripartiteHypergraph(class_sizes=(size, size, size), edges=tuple(edges))
    return EisensteinBuild(
        bound=bound,
        norm=norm,
        elements=elems,
        region=region,
        vertices=vertices,
        hypergraph=h,
        provenance=tuple(prov),
    )


@dataclass(frozen=True)
class PlaneWicketFamily:
    """The six construction edges inside one affine plane of F_3^{n+1}.

    A plane spanned by two lifted directions carries three parallel
    edges per direction; every 5-subset of the six is a wicket (drop
    one edge, the remaining pair from its direction are the columns).
    """

    base: Vec  # minimal-encode point of the plane, dimension n+1
    dir_a: Vec  # base directions, dir_a before dir_b in encode order
    dir_b: Vec
    edges_a: tuple  # 3 edge ids in direction dir_a, sorted
    edges_b: tuple
    wickets: tuple  # 6 witnesses, one per omitted edge

    @property
    def edge_ids(self) -> tuple:
        return tuple(sorted(self.edges_a + self.edges_b))


def _plane_line_edge(build: F3Build, point: Vec, direction: Vec) -> int:
    """Edge id of the construction line through an A-class point."""
    return build.edge_index[(point[:-1], direction)]


def enumerate_plane_wickets(build: F3Build) -> list:
    """All plane families for unordered direction pairs of the cap.

    Planes are cosets of span{lift(s), lift(t)}; the representative is
    the minimal encode, which the ascending scan meets first. With a
    progression-free direction set no plane carries a third direction,
    so families never overlap in more than single edges.
    """
    n = build.dimension
    directions = build.cap.sorted_elements
    if len(directions) < 2:
        return []
    big = n + 1
    total = 3**big
    families: list = []
    for i, s0 in enumerate(directions):
        s1 = s0 + (1,)
        for t0 in directions[i + 1 :]:
            t1 = t0 + (1,)
            seen = bytearray(total)
            for p_enc in range(total):
                if seen[p_enc]:
                    continue
                p = decode(p_enc, big)
                rho = p[-1]
                for ci in range(3):
                    for cj in range(3):
                        q = f3_add(
                            p, f3_add(f3_scale(ci, s1), f3_scale(cj, t1))
                        )
                        seen[encode(q)] = 1
                edges_a = []
                edges_b = []
                for j in range(3):
                    shift = (-rho - j) % 3
                    point_a = f3_add(
                        p, f3_add(f3_scale(shift, s1), f3_scale(j, t1))
                    )
                    edges_a.append(_plane_line_edge(build, point_a, s0))
                    point_b = f3_add(
                        p, f3_add(f3_scale(shift, t1), f3_scale(j, s1))
                    )
                    edges_b.append(_plane_line_edge(build, point_b, t0))
                edges_a.sort()
                edges_b.sort()
                wickets = []
                for omitted in edges_a:
                    cols = tuple(e for e in edges_a if e != omitted)
                    wickets.append(
                        WicketWitness(rows=tuple(edges_b), columns=cols)
                    )
                for omitted in edges_b:
                    cols = tuple(e for e in edges_b if e != omitted)
                    wickets.append(
                        WicketWitness(rows=tuple(edges_a), columns=cols)
                    )
                families.append(
                    PlaneWicketFamily(
                        base=p,
                        dir_a=s0,
                        dir_b=t0,
                        edges_a=tuple(edges_a),
                        edges_b=tuple(edges_b),
                        wickets=tuple(wickets),
                    )
                )
    return families


def build_wickets(build) -> list:
    """Every wicket of a build: structured for GF(3), detector otherwise."""
    if isinstance(build, F3Build):
        return [w for fam in enumerate_plane_wickets(build) for w in fam.wickets]
    return find_wickets(build.hypergraph)


def wicket_dependency_degree(wickets: Sequence[WicketWitness]) -> int:
    """Max number of other wickets sharing at least one edge with one."""
    edge_to: dict = {}
    for idx, witness in enumerate(wickets):
        for e in witness.edge_ids:
            edge_to.setdefault(e, []).append(idx)
    worst = 0
    for idx, witness in enumerate(wickets):
        neighbors: set = set()
        for e in witness.edge_ids:
            neighbors.update(edge_to[e])
        neighbors.discard(idx)
        if len(neighbors) > worst:
            worst = len(neighbors)
    return worst


def decode_wicket(build, witness: WicketWitness) -> dict:
    """Recover the construction labeling of a detected wicket.

    Returns bases x, y, z and directions s, t, u, v, w with columns
    (x, s), (y, u) and rows (x, w), (y, t), (z, v). Both column orders
    are tried; the share pattern is re-verified on raw vertex indices.
    """
    edges = build.hypergraph.edges
    prov = build.provenance
    ordered = (
        (witness.columns[0], witness.columns[1]),
        (witness.columns[1], witness.columns[0]),
    )
    for c1, c2 in ordered:
        x, s = prov[c1]
        y, u = prov[c2]
        r1 = r2 = None
        for r in witness.rows:
            base = prov[r][0]
            if base == x:
                r1 = r
            elif base == y:
                r2 = r
        if r1 is None or r2 is None:
            continue
        rest = [r for r in witness.rows if r != r1 and r != r2]
        if len(rest) != 1:
            continue
        r3 = rest[0]
        z, v = prov[r3]
        w = prov[r1][1]
        t = prov[r2][1]
        ec1, ec2 = edges[c1], edges[c2]
        er1, er2, er3 = edges[r1], edges[r2], edges[r3]
        if (
            er1[0] == ec1[0]
            and er2[1] == ec1[1]
            and er3[2] == ec1[2]
            and er2[0] == ec2[0]
            and er3[1] == ec2[1]
            and er1[2] == ec2[2]
        ):
            return {"x": x, "y": y, "z": z, "s": s, "t": t, "u": u, "v": v, "w": w}
    raise WicketDecodeError(
        f"wicket {witness} does not match the construction labeling"
    )


def modular_wicket_system(k: int) -> EquationSpec:
    """Direction system whose non-degenerate solvability over S is
    equivalent to the modular build containing a wicket.

    Degeneracy: any failed side inequality collapses two of the five
    edges or makes two parallel edges share a vertex, so such solutions
    do not correspond to wickets and count as trivial.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = k * k - k + 1

    def degenerate(assign: dict) -> bool:
        s, t, u, v, w = (assign[name] for name in "stuvw")
        checks = (
            (s - t) % n,  # columns share their A vertex
            (s - v) % n,  # rows 1,3 share their A vertex
            (s - w) % n,  # column 1 equals row 1
            (t - u) % n,  # column 2 equals row 2
            (k * w - s - (k - 1) * t) % n,  # rows 1,2 share their C vertex
            (w - k * s + (k - 1) * v) % n,  # rows 1,3 share their B vertex
            ((k - 1) * s - k * v + t) % n,  # rows 2,3 share their A vertex
            ((k - 1) * s - k * u + t) % n,  # columns share their C vertex
        )
        return any(c == 0 for c in checks)

    return EquationSpec(
        name=f"wicket directions mod {n}",
        variables=("s", "t", "u", "v", "w"),
        relations=(
            (("s", 1), ("t", -1), ("u", k), ("w", -k)),
            (("s", k - 1), ("t", 1), ("u", -1), ("v", -(k - 1))),
        ),
        modulus=n,
        trivial=degenerate,
    )


def eisenstein_wicket_system() -> EquationSpec:
    """Direction system for wickets of the Eisenstein build.

    Base feasibility (all three bases inside the disc) is checked
    separately by eisenstein_wicket_witness; the system itself is about
    directions only.
    """

    def degenerate(assign: dict) -> bool:
        s, t, u, v, w = (assign[name] for name in "stuvw")
        checks = (
            s - t,  # columns share their A vertex
            s - v,  # rows 1,3 share their A vertex
            s - w,  # column 1 equals row 1
            t - u,  # column 2 equals row 2
            ROT60 * s - t - OMEGA * u,  # columns share their C vertex
            s - t - OMEGA * (t - w),  # rows 1,2 share their C vertex
            w - ROT60 * v + OMEGA * s,  # rows 1,3 share their B vertex
            t - s - OMEGA * (s - v),  # rows 2,3 share their A vertex
        )
        return any(c == ZERO for c in checks)

    return EquationSpec(
        name="wicket directions over the Eisenstein lattice",
        variables=("s", "t", "u", "v", "w"),
        relations=(
            (("s", ONE), ("t", -ONE), ("u", -OMEGA), ("w", OMEGA)),
            (("s", ROT60), ("t", -ONE), ("u", ONE), ("v", -ROT60)),
        ),
        trivial=degenerate,
    )


def modular_wicket_witness(elements: Iterable[int], k: int) -> Optional[dict]:
    """Directions plus bases of one wicket of the modular build, or None.

    Bases exist for every solution because the base group is all of
    Z/n: x may sit anywhere, y and z follow from the incidences.
    """
    n = k * k - k + 1
    values = sorted({int(e) % n for e in elements})
    solution = has_solution(values, modular_wicket_system(k))
    if solution is None:
        return None
    s, t, v = solution["s"], solution["t"], solution["v"]
    x = 0
    y = (x + s - t) % n
    z = (x + k * s - k * v) % n
    return {**solution, "x": x, "y": y, "z": z}


def eisenstein_wicket_witness(
    elements: Iterable[EisensteinPoint], region: Sequence[EisensteinPoint]
) -> Optional[dict]:
    """Directions plus in-region bases of one Eisenstein-build wicket.

    Unlike the modular case the bases are constrained: x, y = x - s + t
    and z = x + w(s - v) must all be disc points, so direction
    solutions are filtered through that feasibility scan.
    """
    region = tuple(region)
    region_set = set(region)
    spec = eisenstein_wicket_system()
    for solution in iter_nontrivial_solutions(sorted(set(elements)), spec):
        shift_y = solution["t"] - solution["s"]
        shift_z = OMEGA * (solution["s"] - solution["v"])
        for x in region:
            y = x + shift_y
            z = x + shift_z
            if y in region_set and z in region_set:
                return {**solution, "x": x, "y": y, "z": z}
    return None
