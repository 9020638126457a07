"""Synthesis of depth-near-optimal, linear-size AND-OR path and adder
circuits over the basis {AND2, OR2}, with functional verification and
depth/size bound checks built in."""

from .adders import (LPartPlan, adder_a1, adder_a2, adder_a3, build_adder,
                     l_part_adder, per_carry_aop_adder, two_part_adder)
from .aop import (AopContext, build_aop, build_extended_aop, gate_report,
                  synth_aop_node, synth_carry_aop, synth_extended_aop)
from .circuit import Circuit, CircuitError, GateKind, NodeId
from .export import export, read_blif, to_blif, to_dot, to_json
from .oracles import aop_reference, carry_reference, extended_aop_reference
from .prefix import (and_prefix_circuit, halved_adder, lf_combined_adder,
                     prefix_plan, ripple_adder)
from .simulate import BACKEND
from .symmetric import (LeftistCircuit, TriangularSet,
                        extract_triangular_subset, flodd, huffman_tree,
                        is_triangular, rho, sym_prep)
from .verify import (Verdict, aop_oracle, carry_oracle, circuit_oracle,
                     extended_aop_oracle, verify_equivalence)

__version__ = "0.1.0"

__all__ = [
    "AopContext", "BACKEND", "Circuit", "CircuitError", "GateKind",
    "LPartPlan", "LeftistCircuit", "NodeId", "TriangularSet", "Verdict",
    "adder_a1", "adder_a2", "adder_a3", "and_prefix_circuit", "aop_oracle",
    "aop_reference", "build_adder", "build_aop", "build_extended_aop",
    "carry_oracle", "carry_reference", "circuit_oracle", "export",
    "extended_aop_oracle", "extended_aop_reference",
    "extract_triangular_subset", "flodd", "gate_report", "halved_adder",
    "huffman_tree", "is_triangular", "l_part_adder", "lf_combined_adder",
    "per_carry_aop_adder", "prefix_plan", "read_blif", "rho", "ripple_adder",
    "sym_prep", "synth_aop_node", "synth_carry_aop", "synth_extended_aop",
    "to_blif", "to_dot", "to_json", "two_part_adder", "verify_equivalence",
]
