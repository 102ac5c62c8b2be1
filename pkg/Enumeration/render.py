"""
========================================
ARF ENUMERATION - TREE RENDERING
========================================

Text renderings of a node grid: Graphviz DOT and an indented ASCII tree.
Glued branches share their nodes, so every distinct node is drawn once;
levels run from 1 down to the first level where every node is canonical.

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

from typing import List

from tree import GridNode, NodeGrid


def format_vector(vector) -> str:
    """(a,b,c) with no spaces, as used in node labels."""
    return "(" + ",".join(str(x) for x in vector) + ")"


def _node_id(node: GridNode) -> str:
    return f"n{node.level}_" + "_".join(str(b + 1) for b in node.branches)


def render_dot(grid: NodeGrid, name: str = "tree") -> str:
    """
    Graphviz digraph of the grid.

    Args:
        grid (NodeGrid): nodes to draw
        name (str): graph name

    Returns:
        str: DOT source, one node statement per distinct node then the edges
    """
    lines = [f"digraph {name} {{", "  node [shape=plaintext];"]
    nodes = grid.distinct_nodes()
    for node in nodes:
        lines.append(f'  {_node_id(node)} [label="{format_vector(node.vector)}"];')
    for node in nodes:
        if node.level >= grid.depth:
            continue
        for child in grid.children(node):
            lines.append(f"  {_node_id(node)} -> {_node_id(child)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_ascii(grid: NodeGrid) -> str:
    """
    Indented text drawing of the grid, root first.

    Args:
        grid (NodeGrid): nodes up to the first all-canonical level

    Returns:
        str: one node vector per line, children under box-drawing connectors
    """
    lines: List[str] = []

    def walk(node: GridNode, prefix: str, connector: str, child_prefix: str):
        lines.append(prefix + connector + format_vector(node.vector))
        if node.level >= grid.depth:
            return
        children = grid.children(node)
        for k, child in enumerate(children):
            last = k == len(children) - 1
            walk(
                child,
                prefix + child_prefix,
                "└── " if last else "├── ",
                "    " if last else "│   ",
            )

    walk(grid.root(), "", "", "")
    return "\n".join(lines) + "\n"
