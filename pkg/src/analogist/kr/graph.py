"""Directed labeled graph view of an Experience.

One node per distinct entity and per distinct (sub)expression; one edge per
argument slot, labeled with the slot position. The graph of any experience
is acyclic because arguments are always proper subterms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import EntitySymbol, Experience, Expression

NodeKey = tuple[str, object]


def node_key(item) -> NodeKey:
    if isinstance(item, Expression):
        return ("expr", item.id)
    return ("entity", item.name)


@dataclass(frozen=True)
class Edge:
    src: NodeKey
    dst: NodeKey
    position: int


@dataclass(frozen=True)
class ExpressionGraph:
    experience_id: str
    expression_nodes: tuple[Expression, ...]
    entity_nodes: tuple[EntitySymbol, ...]
    edges: tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_acyclic(self) -> bool:
        """Kahn toposort over expression-to-expression edges."""
        indeg: dict[NodeKey, int] = {node_key(e): 0 for e in self.expression_nodes}
        out: dict[NodeKey, list[NodeKey]] = {k: [] for k in indeg}
        for edge in self.edges:
            if edge.dst in indeg:
                indeg[edge.dst] += 1
                out[edge.src].append(edge.dst)
        queue = [k for k, d in indeg.items() if d == 0]
        seen = 0
        while queue:
            k = queue.pop()
            seen += 1
            for nxt in out[k]:
                indeg[nxt] -= 1
                if indeg[nxt] == 0:
                    queue.append(nxt)
        return seen == len(indeg)


def to_graph(experience: Experience) -> ExpressionGraph:
    edges = []
    for node in experience.nodes:
        for pos, arg in enumerate(node.args):
            edges.append(Edge(node_key(node), node_key(arg), pos))
    return ExpressionGraph(
        experience.id,
        experience.nodes,
        experience.entities(),
        tuple(edges),
    )


def edge_count(experience: Experience) -> int:
    """Total argument slots across distinct (sub)expressions."""
    return sum(len(node.args) for node in experience.nodes)
