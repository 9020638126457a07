"""Deterministic netlist export: DOT, BLIF and JSON.

BLIF emits 2-input ``.names`` covers (AND ``11 1``; OR ``1- 1`` / ``-1 1``)
in topological order.  ``read_blif`` parses exactly this dialect back and
exists for round-trip testing, not as a general netlist importer.
"""

from __future__ import annotations

import json
import re

from .circuit import Circuit, GateKind

__all__ = ["to_dot", "to_blif", "to_json", "export", "read_blif"]


def _node_names(circuit: Circuit) -> list[str]:
    names = [""] * circuit.num_nodes
    labels = circuit.input_labels()
    seen: set[str] = set()
    for pos, node in enumerate(circuit.input_nodes()):
        base = re.sub(r"[^A-Za-z0-9_]", "_", labels[pos]) or f"x{node}"
        name = base if base not in seen else f"{base}_{node}"
        seen.add(name)
        names[node] = name
    for node in range(circuit.num_nodes):
        if not circuit.is_input(node):
            names[node] = f"n{node}"
    return names


def to_dot(circuit: Circuit) -> str:
    names = _node_names(circuit)
    out_nodes = {node: name for name, node in circuit.outputs}
    lines = ["digraph circuit {"]
    for node in range(circuit.num_nodes):
        if circuit.is_input(node):
            lines.append(f'  {names[node]} [shape=box];')
        else:
            color = "red" if circuit.kind(node) is GateKind.AND else "green"
            op = "AND" if circuit.kind(node) is GateKind.AND else "OR"
            label = names[node]
            if node in out_nodes:
                label += f"\\n[{out_nodes[node]}]"
            lines.append(
                f'  {names[node]} [label="{op}\\n{label}", color={color}];')
    for node in range(circuit.num_nodes):
        if not circuit.is_input(node):
            left, right = circuit.children(node)
            lines.append(f"  {names[left]} -> {names[node]};")
            lines.append(f"  {names[right]} -> {names[node]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_blif(circuit: Circuit, model: str = "circuit") -> str:
    names = _node_names(circuit)
    lines = [f".model {model}"]
    lines.append(".inputs " + " ".join(names[n] for n in circuit.input_nodes()))
    lines.append(".outputs " + " ".join(name for name, _ in circuit.outputs))
    for node in range(circuit.num_nodes):
        if circuit.is_input(node):
            continue
        left, right = circuit.children(node)
        lines.append(f".names {names[left]} {names[right]} {names[node]}")
        if circuit.kind(node) is GateKind.AND:
            lines.append("11 1")
        else:
            lines.append("1- 1")
            lines.append("-1 1")
    for name, node in circuit.outputs:
        # buffer so output names stay stable even when they alias a node
        lines.append(f".names {names[node]} {name}")
        lines.append("1 1")
    lines.append(".end")
    return "\n".join(lines) + "\n"


def to_json(circuit: Circuit) -> str:
    names = _node_names(circuit)
    nodes = []
    for node in range(circuit.num_nodes):
        if circuit.is_input(node):
            nodes.append({"id": node, "type": "input", "name": names[node]})
        else:
            left, right = circuit.children(node)
            nodes.append({
                "id": node,
                "type": "and" if circuit.kind(node) is GateKind.AND else "or",
                "left": left,
                "right": right,
            })
    doc = {
        "nodes": nodes,
        "outputs": [{"name": name, "node": node} for name, node in circuit.outputs],
        "metrics": {
            "inputs": circuit.num_inputs,
            "size": circuit.size(),
            "depth": circuit.depth(),
            "fanout": circuit.fanout(),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


_FORMATS = {"dot": to_dot, "blif": to_blif, "json": to_json}


def export(circuit: Circuit, fmt: str) -> str:
    try:
        return _FORMATS[fmt](circuit)
    except KeyError:
        raise ValueError(f"unknown export format {fmt!r}") from None


def read_blif(text: str) -> Circuit:
    """Rebuild a circuit from BLIF produced by :func:`to_blif`."""
    circuit = Circuit()
    by_name: dict[str, int] = {}
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    i = 0
    inputs: list[str] = []
    outputs: list[str] = []
    pending: list[tuple[list[str], list[str]]] = []
    while i < len(lines):
        ln = lines[i]
        if ln.startswith(".model") or ln == ".end":
            i += 1
        elif ln.startswith(".inputs"):
            inputs = ln.split()[1:]
            i += 1
        elif ln.startswith(".outputs"):
            outputs = ln.split()[1:]
            i += 1
        elif ln.startswith(".names"):
            sig = ln.split()[1:]
            i += 1
            cover = []
            while i < len(lines) and not lines[i].startswith("."):
                cover.append(lines[i])
                i += 1
            pending.append((sig, cover))
        else:
            raise ValueError(f"unsupported BLIF line: {ln!r}")
    for name in inputs:
        by_name[name] = circuit.add_input(name)
    for sig, cover in pending:
        *ins, target = sig
        if len(ins) == 1:
            if cover != ["1 1"]:
                raise ValueError(f"unsupported buffer cover {cover!r}")
            by_name[target] = by_name[ins[0]]
        elif sorted(cover) == ["11 1"]:
            by_name[target] = circuit.add_gate(
                GateKind.AND, by_name[ins[0]], by_name[ins[1]])
        elif sorted(cover) == ["-1 1", "1- 1"]:
            by_name[target] = circuit.add_gate(
                GateKind.OR, by_name[ins[0]], by_name[ins[1]])
        else:
            raise ValueError(f"unsupported cover {cover!r}")
    for name in outputs:
        circuit.set_output(name, by_name[name])
    return circuit
