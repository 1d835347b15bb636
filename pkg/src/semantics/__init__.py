"""Exact semantic encoding, decoding and CSED computations."""

from .core import (
    average_cost,
    average_distortion,
    average_distortion_enc,
    bayes_interpretation,
    check_dimensions,
    check_self_consistency,
    expression_encoder,
    interpretation_decoder,
    is_self_consistent,
    phi,
    phi_table,
    semantic_entropy,
    validate_language,
    validate_system,
)
from .csed import (
    check_theorem4,
    compare_strategies,
    csed_distortion_cost_function,
    csed_evaluate,
    csed_operating_points,
    csed_region,
)
from .decoding import (
    baseline_distortion,
    decoder_distortion,
    decoding_gap,
    decoding_region,
    expression_cost,
    hamming_map_distortion,
    hamming_optimality_check,
    map_decoder,
    psi_table,
    received_likelihood,
    refine_interpretation,
    refinement_plan,
    simplex_embed,
)
from .encoding import (
    build_frontier,
    critical_points,
    distortion_cost_function,
    encoder_point,
    region_contains,
    six_subsets,
    six_subsets_sweep,
    slope_G,
    time_share_decompose,
)
from .hull import envelope_value, lower_envelope, upper_envelope
from .oracle import (
    decoder_extremes,
    enumerate_decoders,
    enumerate_encoding_points,
    enumeration_hull,
    global_optimum,
)
from .simulation import simulate

__version__ = "0.1.0"

__all__ = [
    "average_cost",
    "average_distortion",
    "average_distortion_enc",
    "bayes_interpretation",
    "check_dimensions",
    "check_self_consistency",
    "expression_encoder",
    "interpretation_decoder",
    "is_self_consistent",
    "phi",
    "phi_table",
    "semantic_entropy",
    "validate_language",
    "validate_system",
    "check_theorem4",
    "compare_strategies",
    "csed_distortion_cost_function",
    "csed_evaluate",
    "csed_operating_points",
    "csed_region",
    "baseline_distortion",
    "decoder_distortion",
    "decoding_gap",
    "decoding_region",
    "expression_cost",
    "hamming_map_distortion",
    "hamming_optimality_check",
    "map_decoder",
    "psi_table",
    "received_likelihood",
    "refine_interpretation",
    "refinement_plan",
    "simplex_embed",
    "build_frontier",
    "critical_points",
    "distortion_cost_function",
    "encoder_point",
    "region_contains",
    "six_subsets",
    "six_subsets_sweep",
    "slope_G",
    "time_share_decompose",
    "envelope_value",
    "lower_envelope",
    "upper_envelope",
    "decoder_extremes",
    "enumerate_decoders",
    "enumerate_encoding_points",
    "enumeration_hull",
    "global_optimum",
    "simulate",
]
