"""Certified triangle packings and covers for graphs of maximum average degree below 7."""

from .certificates import Certificate, ReductionStep, find_reducible, lift_wke, verify_certificate
from .engine import TuzaWitness, discharging_audit, redlem_configuration_scan, solve, verify_witness
from .formats import emit_graph6, parse_graph6
from .graph import Graph
from .oracles import OracleRefusal, check_tuza, nu_exact, tau_exact
from .sparsity import mad
from .wke import WkeWitness, find_wke, verify_wke_witness

__all__ = [
    "Certificate",
    "Graph",
    "OracleRefusal",
    "ReductionStep",
    "TuzaWitness",
    "WkeWitness",
    "check_tuza",
    "discharging_audit",
    "emit_graph6",
    "find_reducible",
    "find_wke",
    "lift_wke",
    "mad",
    "nu_exact",
    "parse_graph6",
    "redlem_configuration_scan",
    "solve",
    "tau_exact",
    "verify_certificate",
    "verify_witness",
    "verify_wke_witness",
]
