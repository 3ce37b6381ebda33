"""Partial fidelities of pairs of positive operators and their variational structure."""
from .errors import KFidelityError
from .fidelity import (
    FidelityVector,
    fidelity,
    fidelity_spectrum,
    fidelity_vector,
    partial_fidelity,
    purification_witness,
    transition_probability,
)
from .order import (
    canonical_form,
    equivalent,
    f_dominates,
    find_gamma_witness,
    gamma_transform_states,
    operator_dominates,
    split_extend,
    weakly_submajorized,
)
from .pairs import (
    BiorthogonalSystem,
    DualPair,
    balance,
    gamma_transform_pair,
    make_pair_biorthogonal,
    make_pair_block,
    pair_objective,
    random_dual_pair,
    validate_pair,
)
from .states import (
    DensityOperator,
    PositiveOperator,
    StatePair,
    numeric_rank,
    random_density,
    state_pair,
    validate_positive,
)
from .variational import (
    MinimizerResult,
    biorthogonal_objective,
    geometric_mean_sqrt,
    optimal_pair,
    product_bound,
    random_search_upper_bound,
    stationarity_residual,
)

__version__ = "0.1.0"
