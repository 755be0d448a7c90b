"""Secrecy rate regions and binning-code evaluation for two-way wiretap channels.

Two full-duplex users exchange confidential messages over a shared channel
while an eavesdropper listens.  This package computes achievable regions
and converse bounds for the per-message (individual) and combined (joint)
secrecy criteria, closed-form regions and capacities for the standard
binary and degraded Gaussian examples, and exact finite-blocklength
leakage and error figures of the underlying random-binning codes.
"""

from .channels import (
    DegradednessVerdict,
    DiscreteTWC,
    GaussianTWC,
    Mod2Params,
    build_library_channel,
    check_stochastic_degradedness,
    is_same_output,
    load_channel,
    output_marginals_equal,
    save_channel,
    validate_channel,
)
from .codes import (
    Codebook,
    CodeRates,
    LeakageReport,
    WiretapCodeSystem,
    build_system,
    decode,
    derive_randomization_rates,
    encode,
    evaluate_codebook_average,
    exact_evaluation,
    full_space_codebook,
    quantize_rate,
    simulate_trials,
)
from .exceptions import (
    BudgetExceededError,
    ChannelSpecError,
    PreconditionError,
    ValidationError,
)
from .infocalc import (
    ConditionalKernel,
    Pmf,
    binary_convolve,
    binary_entropy,
    conditional_mutual_information,
    entropy,
    joint_from_components,
    mutual_information,
)
from .regions import (
    GeneralOuterAuxiliaries,
    Mod2Regions,
    PowerSplit,
    PrefixedInputs,
    RatePoint,
    RateRegion,
    RegionKind,
    TimeSharedInputs,
    closed_form_binary,
    compare_regions,
    convex_closure,
    frontier_exceedance,
    gaussian_capacity_individual,
    gaussian_inner_rect,
    gaussian_inner_region,
    gaussian_joint_region,
    gaussian_joint_sumrate,
    gaussian_outer_rect,
    gaussian_outer_region,
    gaussian_sumrate_gap,
    hausdorff_distance,
    inner_rect_individual,
    inner_rect_symmetric_output,
    inner_region_individual,
    inner_region_joint_symmetric,
    mod2_regions,
    outer_rect_general,
    outer_rect_time_shared,
    outer_region_individual,
    region_area,
    region_contains,
    region_to_csv,
    region_to_json,
    simplex_grid,
)

__version__ = "0.1.0"
