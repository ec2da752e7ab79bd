"""Finite skew braces: tables, orbit graphs, census, Yang-Baxter solutions and isoclinism."""

from .brace import SkewBrace, invariants, optrivial_brace, trivial_brace, validate_brace
from .catalog import build, named_example, parse_spec, pq_brace, pq_family, p2_brace, recognize_one_vertex
from .census import braces_with_additive_group, enumerate_braces, holomorph
from .graphs import (CdGraph, canonical_form, emit_graph, gamma_graph, gamma_hom_image_check,
                     graphs_isomorphic, lambda_graph, theta_graph)
from .groups import CayleyGroup, automorphisms, find_isomorphism, validate_group
from .isoclinism import commutator_maps, is_isoclinic, verify_isoclinism_consequences
from .isomorphism import brace_isomorphism
from .ybe import (generating_subsolution_graph, solution_of, theta_conjugation_identity_check,
                  twist_quotient, verify_ybe)

__all__ = [
    "SkewBrace", "invariants", "optrivial_brace", "trivial_brace", "validate_brace",
    "build", "named_example", "parse_spec", "pq_brace", "pq_family", "p2_brace", "recognize_one_vertex",
    "braces_with_additive_group", "enumerate_braces", "holomorph",
    "CdGraph", "canonical_form", "emit_graph", "gamma_graph", "gamma_hom_image_check",
    "graphs_isomorphic", "lambda_graph", "theta_graph",
    "CayleyGroup", "automorphisms", "find_isomorphism", "validate_group",
    "commutator_maps", "is_isoclinic", "verify_isoclinism_consequences",
    "brace_isomorphism",
    "generating_subsolution_graph", "solution_of", "theta_conjugation_identity_check",
    "twist_quotient", "verify_ybe",
]
