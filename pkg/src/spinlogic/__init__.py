"""Ground-state logic on 2-local Ising Hamiltonians.

spinlogic compiles Boolean circuits and k-local diagonal couplings into the
ground spaces of 2-local Ising models using mediator-qubit penalty gadgets,
and verifies every construction by exhaustive enumeration over exact
rational arithmetic.
"""

from .circuit import (Circuit, CompiledModel, Gate, GapCheckReport,
                      NetlistError, clamp, compile_circuit, format_model,
                      format_netlist, gap_check, parse_model, parse_netlist)
from .gadgets import (Gadget, GadgetReport, catalogue, equality_coupler,
                      inequality_coupler, instantiate, lookup,
                      threelocal_and_gadget, threelocal_sigma_gadget,
                      verify_gadget)
from .kmap import Implicant, gray_code, render_kmap, sop_cover, sop_to_poly
from .poly import (BooleanPoly, Convention, SpinModel, SpinPoly, format_poly,
                   parse_poly, poly_to_truth_vector, truth_vector_to_poly)
from .reduction import (FreshQubit, LevelSpec, ReductionTrace, embed_levels,
                        reduce_poly, reduce_sigma_product)
from .spectrum import (ProjectionLemmaReport, RestrictedLandscape,
                       SpectrumReport, check_projection_lemma,
                       enumerate_spectrum, restrict, spectral_gap)
from .synthesis import (SynthesisProblem, SynthesisResult, synthesize,
                        synthesize_function)

__version__ = "0.1.0"

__all__ = [
    "BooleanPoly", "SpinPoly", "SpinModel", "Convention",
    "format_poly", "parse_poly", "truth_vector_to_poly", "poly_to_truth_vector",
    "SpectrumReport", "RestrictedLandscape", "ProjectionLemmaReport",
    "enumerate_spectrum", "restrict", "spectral_gap", "check_projection_lemma",
    "Implicant", "gray_code", "render_kmap", "sop_cover", "sop_to_poly",
    "Gadget", "GadgetReport", "catalogue", "lookup", "instantiate",
    "verify_gadget", "equality_coupler", "inequality_coupler",
    "threelocal_and_gadget", "threelocal_sigma_gadget",
    "SynthesisProblem", "SynthesisResult", "synthesize", "synthesize_function",
    "Circuit", "Gate", "CompiledModel", "GapCheckReport", "NetlistError",
    "compile_circuit", "clamp", "gap_check",
    "parse_netlist", "format_netlist", "parse_model", "format_model",
    "FreshQubit", "ReductionTrace", "LevelSpec",
    "reduce_poly", "reduce_sigma_product", "embed_levels",
]
