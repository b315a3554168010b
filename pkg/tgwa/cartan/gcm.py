"""
Matrizes de Cartan generalizadas simétricas e o grafo de Coxeter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Set, Tuple

import networkx as nx

from tgwa.errors import InvalidGCM


@dataclass(frozen=True)
class GCM:
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GCM":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def problems(self) -> List[str]:
        n = self.n
        out: List[str] = []
        if any(len(row) != n for row in self.entries):
            return ["matrix is not square"]
        for i in range(n):
            if self.entries[i][i] != 2:
                out.append(f"a_{i + 1}{i + 1} = {self.entries[i][i]} != 2")
            for j in range(n):
                if i == j:
                    continue
                a, b = self.entries[i][j], self.entries[j][i]
                if a > 0:
                    out.append(f"a_{i + 1}{j + 1} = {a} > 0")
                if (a == 0) != (b == 0):
                    out.append(f"a_{i + 1}{j + 1} = {a} but a_{j + 1}{i + 1} = {b}")
                elif i < j and a != b:
                    out.append(f"not symmetric at ({i + 1},{j + 1})")
        return out

    def validate(self) -> "GCM":
        problems = self.problems()
        if problems:
            raise InvalidGCM("; ".join(problems))
        return self

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class CoxeterGraph:
    n: int
    edges: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, C: GCM) -> "CoxeterGraph":
        C.validate()
        edges = tuple(
            (i + 1, j + 1) for i in range(C.n) for j in range(i + 1, C.n) if C[i, j] < 0
        )
        return cls(C.n, edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph


def coxeter_components(C: GCM) -> List[List[int]]:
    """Connected components of the Coxeter graph, 1-based and sorted."""
    graph = CoxeterGraph.of(C).to_networkx()
    components: List[Set[int]] = list(nx.connected_components(graph))
    return sorted((sorted(c) for c in components), key=lambda c: c[0])
