"""Equality and canonical forms of kappa-terms over DRH."""

from .canon import canonical_form, pi_cf, wrap
from .decider import Verdict, equal_drh, equivalent
from .drhgraph import DrhAutomaton, GraphBuilder, build_graph, measures, to_dot, validate
from .hsolver import HElement, HSolver, get_solver, register_solver
from .kterm import (
    EMPTY,
    Concat,
    Empty,
    KTerm,
    Letter,
    Power,
    concat,
    content,
    length,
    parse_kterm,
    print_kterm,
)
from .pword import PWord, build_overline, factor, parse_pword, prefix, tail

__all__ = [
    "EMPTY",
    "Concat",
    "DrhAutomaton",
    "Empty",
    "GraphBuilder",
    "HElement",
    "HSolver",
    "KTerm",
    "Letter",
    "PWord",
    "Power",
    "Verdict",
    "build_graph",
    "build_overline",
    "canonical_form",
    "concat",
    "content",
    "equal_drh",
    "equivalent",
    "factor",
    "get_solver",
    "length",
    "measures",
    "parse_kterm",
    "parse_pword",
    "pi_cf",
    "prefix",
    "print_kterm",
    "register_solver",
    "tail",
    "to_dot",
    "validate",
    "wrap",
]
