"""DOT text for experience graphs and analogy overlays.

The format is plain text, so the writer is a handful of string templates;
nothing here needs the graphviz toolchain, though its `dot` program renders
the output directly. Deduced hypotheses are drawn dashed, in a cluster,
with edges reaching back into the solid graph wherever a subterm or entity
already exists there.
"""

from __future__ import annotations

import re

from ..kr.model import Experience, Expression
from ..sme.model import Gmap


def _safe(name: str) -> str:
    cleaned = re.sub(r"\W", "_", name)
    if not cleaned or cleaned[0].isdigit():
        cleaned = "g_" + cleaned
    return cleaned


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _entity_node(name: str) -> str:
    return "n_" + _safe(name)


def experience_lines(exp: Experience, indent: str = "  ") -> list[str]:
    lines = []
    entities = sorted({e.name for fact in exp.facts for e in fact.entities()})
    for name in entities:
        lines.append(f"{indent}{_entity_node(name)} [label={_quote(name)} shape=box];")
    for node in exp.nodes:
        lines.append(f"{indent}e{node.id} [label={_quote(node.functor)} shape=ellipse];")
    for node in exp.nodes:
        for pos, arg in enumerate(node.args):
            if isinstance(arg, Expression):
                dst = f"e{arg.id}"
            else:
                dst = _entity_node(arg.name)
            lines.append(f'{indent}e{node.id} -> {dst} [label="{pos}"];')
    return lines


def experience_dot(exp: Experience) -> str:
    lines = [f"digraph {_safe(exp.id)} {{", "  rankdir=TB;"]
    lines += experience_lines(exp)
    lines.append("}")
    return "\n".join(lines) + "\n"


def analogy_dot(target: Experience, gmap: Gmap) -> str:
    """The target graph plus the gmap's candidate inferences drawn dashed."""
    lines = [f"digraph {_safe(target.id)}_analogy {{", "  rankdir=TB;"]
    lines += experience_lines(target)

    target_map = {node: node for node in target.nodes}
    known_entities = {e.name for fact in target.facts for e in fact.entities()}
    hyp_lines: list[str] = []
    edge_lines: list[str] = []
    declared_skolems: set[str] = set()

    for i, hyp in enumerate(gmap.inferences, 1):
        mapping: dict[Expression, str] = {}
        fresh: list[tuple[str, Expression]] = []
        for j, node in enumerate(hyp.expression.walk()):
            if node in target_map:
                mapping[node] = f"e{target_map[node].id}"
            else:
                dot_name = f"h{i}_{j}"
                mapping[node] = dot_name
                fresh.append((dot_name, node))
        for dot_name, node in fresh:
            hyp_lines.append(
                f"    {dot_name} [label={_quote(node.functor)}"
                " shape=ellipse style=dashed];"
            )
            for pos, arg in enumerate(node.args):
                if isinstance(arg, Expression):
                    dst = mapping[arg]
                elif arg.is_skolem:
                    dst = "s_" + _safe(arg.name)
                    if arg.name not in declared_skolems:
                        declared_skolems.add(arg.name)
                        hyp_lines.append(
                            f"    {dst} [label={_quote(arg.name)}"
                            " shape=box style=dashed];"
                        )
                else:
                    dst = _entity_node(arg.name)
                    if arg.name not in known_entities:
                        known_entities.add(arg.name)
                        lines.append(
                            f"  {dst} [label={_quote(arg.name)} shape=box];"
                        )
                edge_lines.append(
                    f'  {dot_name} -> {dst} [label="{pos}" style=dashed];'
                )

    if hyp_lines:
        lines.append("  subgraph cluster_hypotheses {")
        lines.append('    label="deduced"; style=dashed;')
        lines.extend(hyp_lines)
        lines.append("  }")
        lines.extend(edge_lines)

    lines.append("}")
    return "\n".join(lines) + "\n"
