"""equitau: exact equivariant Riemann-Roch computations on projective-space models."""

from .lattice import (
    GroupDescriptor,
    TorsionCharacterPoint,
    Weight,
    kernel_of_character_point,
    quotient_group,
    smith_normal_form,
)
from .gradedring import (
    BundleRingElement,
    GradedSeries,
    bernoulli_number,
    compose,
    exp,
    pushforward,
    reduce,
    todd_factor,
)
from .reprring import (
    RepRingElement,
    SymmetricElement,
    augmentation,
    augmentation_order,
    chern_character,
    gl_augmentation_generators,
    ideal_membership_certificate,
    lambda_minus_one,
    symmetric_to_laurent,
    torus_group,
)
from .charclass import (
    BundleSum,
    LineTwist,
    ProjSpaceModel,
    TANGENT,
    Tangent,
    chern_character_bundle,
    chern_roots,
    mu_model,
    tensor_line_twists,
    todd_class_bundle,
    torus_model,
)
from .riemannroch import (
    EulerCharacteristicResult,
    chi_with_oracle,
    hrr_chi,
    sections_character_oracle,
    verify_weyl,
    weyl_closed_form,
)
from .finitestab import (
    FixedComponent,
    Sector,
    SectorDecomposition,
    fixed_locus,
    ktheory_free_module_dimension,
    sector_dimensions,
    support_subgroup,
    vistoli_kernel_dimension,
)

__version__ = "0.1.0"
