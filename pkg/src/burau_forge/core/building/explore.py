"""Breadth-first exploration of the spanning subcomplex of a finitely generated subgroup."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple
import json
import logging

import networkx as nx

from ..algebra import QQI, SqMatrix
from .generators import BuildingGen, building_gen
from .lattice import LatticeClass, adjacent, lattice_canonical, vertex_type
from .words import format_power_word

logger = logging.getLogger(__name__)


@dataclass
class Vertex:
    """A visited lattice class with the word that reached it"""
    index: int
    word: Tuple[Tuple[str, int], ...]
    matrix: SqMatrix
    lattice: LatticeClass
    distance: int

    @property
    def type(self) -> int:
        return vertex_type(self.lattice)

    def label(self) -> str:
        return format_power_word(self.word)


@dataclass
class SubcomplexReport:
    """Visited vertices of the spanning subcomplex with its edges and triangles"""
    vertices: List[Vertex]
    radius: int
    graph: nx.Graph
    truncated: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def type_counts(self) -> Dict[int, int]:
        counts = {0: 0, 1: 0, 2: 0}
        for v in self.vertices:
            counts[v.type] += 1
        return counts

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    @property
    def triangle_count(self) -> int:
        return sum(nx.triangles(self.graph).values()) // 3

    def link(self, vertex: int = 0) -> List[Vertex]:
        return [self.vertices[j] for j in sorted(self.graph.neighbors(vertex))]

    def link_of_type(self, t: int, vertex: int = 0) -> List[str]:
        return [v.label() for v in self.link(vertex) if v.type == t]

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "truncated": self.truncated,
            "vertex_count": self.vertex_count,
            "type_counts": {str(k): v for k, v in self.type_counts().items()},
            "edge_count": self.edge_count,
            "triangle_count": self.triangle_count,
            "link": [v.label() for v in self.link()],
            "vertices": [
                {"index": v.index, "word": v.label(), "type": v.type, "distance": v.distance,
                 "lattice": v.lattice.rep.to_strings()}
                for v in self.vertices
            ],
            "graph": nx.node_link_data(self.graph, edges="links"),
            "notes": list(self.notes),
        }

    def to_json(self, path: str):
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)

    def to_dot(self) -> str:
        """Vertices labelled by word, type and distance."""
        lines = ["graph subcomplex {"]
        for node, data in self.graph.nodes(data=True):
            lines.append(f'  v{node} [label="{data["word"]}\\ntype {data["type"]}, d {data["distance"]}"];')
        for a, b in sorted(self.graph.edges()):
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def write_dot(self, path: str):
        with open(path, "w") as f:
            f.write(self.to_dot())


def _letters(gens: Sequence[BuildingGen]) -> List[Tuple[str, int, SqMatrix]]:
    out = []
    for g in gens:
        M = building_gen(g, QQI)
        out.append((g.format(), 1, M))
        out.append((g.format(), -1, M.adjugate()))
    return out


def _extend(word: Tuple[Tuple[str, int], ...], name: str, e: int) -> Tuple[Tuple[str, int], ...]:
    if word and word[-1][0] == name:
        total = word[-1][1] + e
        return word[:-1] + (((name, total),) if total else ())
    return word + ((name, e),)


def explore(gens: Sequence[BuildingGen], radius: int = 2, step_budget: int = 200000,
            threads: int = 4) -> SubcomplexReport:
    """Vertices [w] for words w of length <= radius, deduplicated by lattice class.

    Canonical forms of a frontier are computed on a worker pool; the visited
    map is only touched from the calling thread.
    """
    if radius < 0:
        raise ValueError(f"radius must be non-negative, got {radius}")
    identity = SqMatrix.identity(3, QQI)
    root = Vertex(0, (), identity, lattice_canonical(identity), 0)
    vertices = [root]
    seen: Dict[SqMatrix, int] = {root.lattice.rep: 0}
    letters = _letters(gens)
    frontier = [root]
    steps = 0
    truncated = False
    notes: List[str] = []

    def step(job):
        parent, name, e, M = job
        X = parent.matrix * M
        return parent, _extend(parent.word, name, e), X, lattice_canonical(X)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for distance in range(1, radius + 1):
            jobs = [(v, name, e, M) for v in frontier for name, e, M in letters]
            if steps + len(jobs) > step_budget:
                message = (f"radius {distance} needs {steps + len(jobs)} steps, budget is {step_budget}; "
                           f"keeping radius {distance - 1}")
                logger.warning(message)
                notes.append(message)
                truncated = True
                break
            steps += len(jobs)
            nxt = []
            for parent, word, X, L in pool.map(step, jobs):
                if L.rep in seen:
                    continue
                v = Vertex(len(vertices), word, X, L, distance)
                seen[L.rep] = v.index
                vertices.append(v)
                nxt.append(v)
            logger.debug(f"radius {distance}: {len(nxt)} new vertices, {len(vertices)} total")
            frontier = nxt
        graph = _graph(vertices, pool)
    report = SubcomplexReport(vertices, radius, graph, truncated, notes)
    logger.info(f"explored {report.vertex_count} vertices, {report.edge_count} edges, "
                f"{report.triangle_count} triangles")
    return report


def _graph(vertices: List[Vertex], pool: ThreadPoolExecutor) -> nx.Graph:
    graph = nx.Graph()
    for v in vertices:
        graph.add_node(v.index, word=v.label(), type=v.type, distance=v.distance)
    # adjacent classes always differ in type
    pairs = [(a, b) for a, b in combinations(vertices, 2) if a.type != b.type]
    flags = pool.map(lambda ab: adjacent(ab[0].lattice, ab[1].lattice), pairs)
    for (a, b), linked in zip(pairs, flags):
        if linked:
            graph.add_edge(a.index, b.index)
    return graph


def link_type_one(report: SubcomplexReport) -> List[str]:
    return report.link_of_type(1)


def find_vertex(report: SubcomplexReport, L: LatticeClass) -> Optional[Vertex]:
    for v in report.vertices:
        if v.lattice.rep == L.rep:
            return v
    return None
