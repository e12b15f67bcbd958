"""Stallings core graphs of finitely generated subgroups of a free group.

Vertices are merged with a union-find table: ``labels[c] <= c`` points at the
surviving vertex, and ``neighbors[c][d]`` holds the (possibly stale) vertex
reached from ``c`` along direction ``d``. Direction ``2(s-1)`` reads x_s and
``2(s-1)+1`` reads its inverse, so ``d ^ 1`` is the reverse direction.
"""
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple
import hashlib
import json
import logging

import networkx as nx

from ..braids.words import FreeWord, Letter
from ..errors import ParseError

logger = logging.getLogger(__name__)


def direction(letter: Letter) -> int:
    s, e = letter
    return 2 * (s - 1) + (0 if e > 0 else 1)


class CoreGraph:
    """Folded graph with a base vertex; every edge is stored at both ends"""

    def __init__(self, alphabet: int):
        if alphabet < 1:
            raise ParseError(f"alphabet size must be positive, got {alphabet}")
        self.alphabet = alphabet
        self.labels: List[int] = []
        self.neighbors: List[List[Optional[int]]] = []
        self.removed: Set[int] = set()
        self.base = self.add_vertex()

    def add_vertex(self) -> int:
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append([None] * (2 * self.alphabet))
        return c

    def find(self, c: int) -> int:
        root = c
        while self.labels[root] != root:
            root = self.labels[root]
        while self.labels[c] != root:
            self.labels[c], c = root, self.labels[c]
        return root

    def step(self, c: int, d: int) -> Optional[int]:
        n = self.neighbors[self.find(c)][d]
        return None if n is None else self.find(n)

    def unify(self, c1: int, c2: int):
        """Identify two vertices and fold every clash this creates."""
        pending = [(c1, c2)]
        while pending:
            c1, c2 = pending.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            c1, c2 = min(c1, c2), max(c1, c2)
            self.labels[c2] = c1
            for d in range(2 * self.alphabet):
                n1, n2 = self.neighbors[c1][d], self.neighbors[c2][d]
                if n1 is None:
                    self.neighbors[c1][d] = n2
                elif n2 is not None:
                    pending.append((n1, n2))

    def connect(self, u: int, d: int, v: int):
        u, v = self.find(u), self.find(v)
        existing = self.neighbors[u][d]
        if existing is None:
            self.neighbors[u][d] = v
        else:
            self.unify(existing, v)
        u, v = self.find(u), self.find(v)
        back = self.neighbors[v][d ^ 1]
        if back is None:
            self.neighbors[v][d ^ 1] = u
        else:
            self.unify(back, u)

    def add_loop(self, word: FreeWord):
        """Attach a closed path at the base reading ``word`` and fold it in."""
        if word.max_symbol() > self.alphabet:
            raise ParseError(f"word {word.format('l')} uses letters beyond an alphabet of {self.alphabet}")
        if word.is_identity():
            return
        current = self.base
        for k, letter in enumerate(word.letters):
            target = self.base if k == len(word) - 1 else self.add_vertex()
            self.connect(current, direction(letter), target)
            current = target

    def vertices(self) -> List[int]:
        return [c for c in range(len(self.labels)) if self.labels[c] == c and c not in self.removed]

    def degree(self, c: int) -> int:
        return sum(1 for n in self.neighbors[c] if n is not None)

    def trim(self):
        """Remove hanging trees that do not carry the base."""
        base = self.find(self.base)
        queue = deque(c for c in self.vertices() if c != base and self.degree(c) <= 1)
        while queue:
            c = queue.popleft()
            if c in self.removed or c == base or self.degree(c) > 1:
                continue
            self.removed.add(c)
            for d, n in enumerate(self.neighbors[c]):
                if n is None:
                    continue
                u = self.find(n)
                self.neighbors[u][d ^ 1] = None
                self.neighbors[c][d] = None
                if u != base and self.degree(u) <= 1:
                    queue.append(u)

    def edges(self) -> List[Tuple[int, int, int]]:
        """(source, symbol, target) for every positively labelled edge."""
        out = []
        for c in self.vertices():
            for s in range(1, self.alphabet + 1):
                n = self.neighbors[c][2 * (s - 1)]
                if n is not None:
                    out.append((c, s, self.find(n)))
        return out

    def rank(self) -> int:
        return len(self.edges()) - len(self.vertices()) + 1

    def is_folded(self) -> bool:
        # outgoing and incoming labels are both single-valued once both ends are stored
        seen: Dict[Tuple[int, int], int] = {}
        for u, s, v in self.edges():
            if (u, s) in seen or (v, -s) in seen:
                return False
            seen[(u, s)] = v
            seen[(v, -s)] = u
        return True

    def accepts(self, word: FreeWord) -> bool:
        """Membership: ``word`` reads a closed path at the base."""
        c = self.find(self.base)
        for letter in word.letters:
            if letter[0] > self.alphabet:
                return False
            c = self.step(c, direction(letter))
            if c is None:
                return False
        return c == self.find(self.base)

    def canonical_form(self) -> Tuple[Tuple[int, int, int], ...]:
        """Edges relabelled by breadth-first order from the base, directions in label order."""
        base = self.find(self.base)
        order = {base: 0}
        queue = deque([base])
        while queue:
            c = queue.popleft()
            for d in range(2 * self.alphabet):
                n = self.step(c, d)
                if n is not None and n not in order:
                    order[n] = len(order)
                    queue.append(n)
        return tuple(sorted((order[u], s, order[v]) for u, s, v in self.edges()))

    def canonical_hash(self) -> str:
        return hashlib.sha256(json.dumps(self.canonical_form()).encode()).hexdigest()

    def to_networkx(self, prefix: str = "l") -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph(base=self.find(self.base), alphabet=self.alphabet)
        graph.add_nodes_from(self.vertices())
        for u, s, v in self.edges():
            graph.add_edge(u, v, label=f"{prefix}{s}")
        return graph

    def to_dict(self, prefix: str = "l") -> dict:
        return {
            "alphabet": self.alphabet,
            "base": self.find(self.base),
            "rank": self.rank(),
            "vertex_count": len(self.vertices()),
            "edge_count": len(self.edges()),
            "canonical_hash": self.canonical_hash(),
            "graph": nx.node_link_data(self.to_networkx(prefix), edges="links"),
        }

    def to_json(self, path: str, prefix: str = "l"):
        with open(path, "w") as f:
            json.dump(self.to_dict(prefix), f, indent=2)


def fold(gens: Sequence[FreeWord], alphabet: int) -> CoreGraph:
    """Folded, trimmed core graph of the subgroup generated by ``gens`` in F_alphabet."""
    graph = CoreGraph(alphabet)
    for word in gens:
        graph.add_loop(word)
    graph.trim()
    logger.debug(f"folded {len(gens)} generators into {len(graph.vertices())} vertices, rank {graph.rank()}")
    return graph


def rank(graph: CoreGraph) -> int:
    return graph.rank()


def membership(word: FreeWord, graph: CoreGraph) -> bool:
    return graph.accepts(word)


def read_words(lines: Iterable[str], prefix: str = "l") -> List[FreeWord]:
    """One word per non-blank line; '#' starts a comment."""
    words = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(FreeWord.parse(line, prefix))
    return words
