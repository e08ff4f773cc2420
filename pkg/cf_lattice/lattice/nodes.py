"""
Nodos del Retículo
Responsabilidad: Los siete subgrupos normales con nombre de GL_cf(ℕ, K), su
diagrama de Hasse (aristas gruesas: cociente ≅ K*, finas: cociente simple),
operaciones de retículo y salida en formato DOT
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class LatticeNode(str, Enum):
    TRIVIAL = "Trivial"
    DSC = "Dsc"
    SLFR = "SLfr"
    GLFR = "GLfr"
    DSC_SLFR = "DscSLfr"
    DSC_GLFR = "DscGLfr"
    GLCF = "GLcf"


class EdgeKind(str, Enum):
    THICK = "thick"  # cociente isomorfo a K*
    THIN = "thin"  # cociente simple


# (inferior, superior, tipo) en el orden de la figura
HASSE_EDGES: Tuple[Tuple[LatticeNode, LatticeNode, EdgeKind], ...] = (
    (LatticeNode.TRIVIAL, LatticeNode.DSC, EdgeKind.THICK),
    (LatticeNode.TRIVIAL, LatticeNode.SLFR, EdgeKind.THIN),
    (LatticeNode.DSC, LatticeNode.DSC_SLFR, EdgeKind.THIN),
    (LatticeNode.SLFR, LatticeNode.GLFR, EdgeKind.THICK),
    (LatticeNode.SLFR, LatticeNode.DSC_SLFR, EdgeKind.THICK),
    (LatticeNode.GLFR, LatticeNode.DSC_GLFR, EdgeKind.THICK),
    (LatticeNode.DSC_SLFR, LatticeNode.DSC_GLFR, EdgeKind.THICK),
    (LatticeNode.DSC_GLFR, LatticeNode.GLCF, EdgeKind.THIN),
)

PAPER_LABELS: Dict[LatticeNode, str] = {
    LatticeNode.TRIVIAL: "{E}",
    LatticeNode.DSC: "D_sc",
    LatticeNode.SLFR: "SL_fr",
    LatticeNode.GLFR: "GL_fr",
    LatticeNode.DSC_SLFR: "D_sc×SL_fr",
    LatticeNode.DSC_GLFR: "D_sc×GL_fr",
    LatticeNode.GLCF: "GL_cf",
}


# ========== ORDEN ==========

@lru_cache(maxsize=None)
def _uppers() -> Dict[LatticeNode, FrozenSet[LatticeNode]]:
    """Cierre transitivo y reflexivo de las aristas de Hasse"""
    adjacency: Dict[LatticeNode, List[LatticeNode]] = {node: [] for node in LatticeNode}
    for low, high, _ in HASSE_EDGES:
        adjacency[low].append(high)

    uppers: Dict[LatticeNode, FrozenSet[LatticeNode]] = {}
    for node in LatticeNode:
        seen = {node}
        stack = [node]
        while stack:
            for successor in adjacency[stack.pop()]:
                if successor not in seen:
                    seen.add(successor)
                    stack.append(successor)
        uppers[node] = frozenset(seen)
    return uppers


def leq(a: LatticeNode, b: LatticeNode) -> bool:
    """a ⊆ b como subgrupos"""
    return b in _uppers()[a]


def uppers(a: LatticeNode) -> FrozenSet[LatticeNode]:
    return _uppers()[a]


def lowers(a: LatticeNode) -> FrozenSet[LatticeNode]:
    return frozenset(node for node in LatticeNode if leq(node, a))


def join(a: LatticeNode, b: LatticeNode) -> LatticeNode:
    """
    Menor cota superior.

    Example:
        >>> join(LatticeNode.GLFR, LatticeNode.DSC_SLFR)
        <LatticeNode.DSC_GLFR: 'DscGLfr'>
    """
    common = uppers(a) & uppers(b)
    return next(node for node in common if all(leq(node, other) for other in common))


def meet(a: LatticeNode, b: LatticeNode) -> LatticeNode:
    common = lowers(a) & lowers(b)
    return next(node for node in common if all(leq(other, node) for other in common))


def covers(a: LatticeNode, b: LatticeNode) -> bool:
    """b cubre a a (arista del diagrama de Hasse)"""
    return any(low == a and high == b for low, high, _ in HASSE_EDGES)


def edge_kind(a: LatticeNode, b: LatticeNode) -> EdgeKind:
    for low, high, kind in HASSE_EDGES:
        if {low, high} == {a, b}:
            return kind
    raise KeyError(f"{a.value} y {b.value} no forman una arista de Hasse")


def quotient_type(a: LatticeNode, b: LatticeNode) -> str:
    """'K*' o 'simple' para el cociente de una arista"""
    return "K*" if edge_kind(a, b) is EdgeKind.THICK else "simple"


def check_partial_order() -> List[str]:
    """
    Valida reflexividad, antisimetría, transitividad, existencia de join/meet
    y que las aristas de Hasse sean exactamente las relaciones de cobertura.

    Returns:
        Lista de problemas (vacía si el orden es consistente)
    """
    problems: List[str] = []
    nodes = list(LatticeNode)
    for a in nodes:
        if not leq(a, a):
            problems.append(f"{a.value} no es reflexivo")
        for b in nodes:
            if a != b and leq(a, b) and leq(b, a):
                problems.append(f"{a.value} y {b.value} violan la antisimetría")
            for c in nodes:
                if leq(a, b) and leq(b, c) and not leq(a, c):
                    problems.append(f"{a.value} ≤ {b.value} ≤ {c.value} no es transitivo")
            try:
                join(a, b)
                meet(a, b)
            except StopIteration:
                problems.append(f"{a.value} y {b.value} sin join o meet")
            strictly_between = [
                c for c in nodes if c not in (a, b) and leq(a, c) and leq(c, b)
            ]
            is_cover = a != b and leq(a, b) and not strictly_between
            if is_cover != covers(a, b):
                problems.append(f"la arista {a.value}–{b.value} no coincide con la relación de cobertura")
    if problems:
        logger.warning(f"⚠️ Orden parcial inconsistente: {len(problems)} problemas")
    return problems


# ========== GRAFO ==========

class GraphEdge(BaseModel):
    low: LatticeNode = Field(description="Subgrupo inferior")
    high: LatticeNode = Field(description="Subgrupo superior")
    kind: EdgeKind = Field(description="thick (≅ K*) o thin (simple)")


class LatticeGraph(BaseModel):
    """Documento del diagrama de Hasse de los subgrupos normales con nombre"""

    nodes: List[LatticeNode] = Field(description="Nodos en orden de declaración")
    edges: List[GraphEdge] = Field(description="Aristas de Hasse")

    def label(self, node: LatticeNode, labels: str = "tags") -> str:
        if labels == "paper":
            return PAPER_LABELS[node]
        if labels == "tags":
            return node.value
        raise ValueError(f"estilo de etiquetas desconocido: {labels}")

    def to_dot(self, labels: str = "tags") -> str:
        """
        Texto DOT no dirigido; las aristas gruesas llevan style=bold.

        Example:
            >>> lattice_graph().to_dot().count("style=bold")
            5
        """
        lines = [
            "/* normal subgroups of GL_cf(N, K): bold = quotient K*, plain = simple quotient */",
            "graph normal_subgroups {",
            "  rankdir=BT;",
            "  node [shape=plaintext];",
        ]
        for node in self.nodes:
            lines.append(f'  {node.value} [label="{self.label(node, labels)}"];')
        for edge in self.edges:
            style = " [style=bold]" if edge.kind is EdgeKind.THICK else ""
            lines.append(f"  {edge.low.value} -- {edge.high.value}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def lattice_graph() -> LatticeGraph:
    """Los 7 nodos y las 8 aristas (5 gruesas, 3 finas) del retículo"""
    return LatticeGraph(
        nodes=list(LatticeNode),
        edges=[GraphEdge(low=low, high=high, kind=kind) for low, high, kind in HASSE_EDGES],
    )
