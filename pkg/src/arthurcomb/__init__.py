"""Combinatorics of Arthur packet translation for real classical groups."""

from .weyl import (
    GroupType,
    Weight,
    WeylElement,
    weight,
    weyl_order,
    weyl_elements,
    simple_roots,
    positive_roots,
    orbit,
    dominant_rep,
    pairing,
    norm_sq,
    half_sum_positive_roots,
    kostant_reps,
)
from .params import (
    ArthurParameter,
    Block,
    ClassicalGroup,
    ComponentGroup,
    EndoscopicSplit,
    InfChar,
    ParameterError,
    ParityError,
    DimensionError,
    DominationError,
    arthur_parameter,
    block,
    canonical_offsets,
    component_group,
    dimension,
    dominate,
    endoscopic_split,
    enumerate_parameters,
    good_parity,
    inf_char,
    quotient_map,
    very_regular_threshold,
)
from .torus import (
    CharacterCombination,
    TranslationDatum,
    character_combination,
    symmetrize,
    tensor_infchar_support,
    transfer_infchar,
    translation_weight,
    uniqueness_check,
    weak_unipotence_norm_test,
)
from .twisted import (
    ExtremalRep,
    TwistedTorusElement,
    extremal_rep,
    kostant_theta_invariance,
    norm_map,
    theta_fixed_weyl,
    torus_element,
    twisted_trace_extremal,
    verify_transfer_identity,
)
from .aq import (
    AqDatum,
    LeviDatum,
    PacketData,
    Sigma,
    aq_datum,
    enumerate_levis,
    evaluate_at,
    filtration_vanishing,
    lambda_tilde,
    packet_data,
    range_check,
    translate_packet,
)

__version__ = "0.1.0"
