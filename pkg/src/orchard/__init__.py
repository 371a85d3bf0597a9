"""Orchard partitions: two-partitions from signed (anti)symmetric functions and point sets."""

from .antipodal import AntipodalConfiguration, line_structure, projective_structure
from .errors import GenerationError, GenericityError, InputError, InvariantError, TripleConstantError
from .estimators import AntipodalOrchard, BasisLift, OrchardPartitioner
from .geom import (
    Configuration,
    flip_relation,
    geometric_partition,
    is_generic,
    orientation_function,
    random_configuration,
    separating_count,
)
from .lift import basis_from_name, cgeneric_lift, cgeneric_partition, cgeneric_separating, interpolation_basis
from .morphism import exotic_check, flip_delta, mu_phi, mu_tilde_check, orchard_rho, sigma_phi, sigma_table
from .oriented import (
    OrientableSet,
    OrientedSignFunction,
    OrientedTwoPartition,
    ori_make,
    ori_partition_from_pairwise,
    ori_rho,
    ori_sigma_phi,
    semi_orientation_sections,
)
from .predicates import orientation_sign
from .signfn import SignFunction, fn_constant, fn_eval, fn_flip, fn_flip_decompose, fn_multiply, fn_permute, fn_random
from .twopart import (
    GroundSet,
    PairwiseSign,
    TwoPartition,
    complete_components,
    partition_from_pairwise,
    partition_make,
    partition_multiply,
)

__version__ = "0.1.0"
