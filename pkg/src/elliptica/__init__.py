"""elliptica — equivariant elliptic classes of quotient singularities.

Evaluates the localized (resolution-side) and orbifold forms of equivariant
elliptic classes built from the odd Jacobi theta function, and verifies the
theta-function identities relating them, at controlled multiprecision.
"""

from .numeric import (
    DEFAULT_DIGITS,
    ModularParam,
    Numeric,
    PrecisionConfig,
    e_of,
    to_mpc,
    truncation_order,
)
from .theta import (
    PoleProximityError,
    ThetaContext,
    delta,
    lattice_distance,
    lattice_reduce,
    make_context,
    phi,
    psi,
    theta,
    theta_prime,
    theta_prime_zero,
    theta_product,
)
from .series import (
    TruncatedSeries,
    cy_hypersurface_chain,
    cy_residue_coeff_route,
    cy_residue_contour_route,
    delta_series,
    ell_genus_p1,
    ell_genus_p1_closed,
)
from .models import (
    FixedPointDatum,
    ModelFormatError,
    OrbifoldModel,
    OrbifoldPairDatum,
    ResolutionModel,
    dump_model,
    load_model,
    preset_an_orbifold,
    preset_an_resolution,
    preset_blowup,
    preset_d4,
    preset_diagonal_orbifold,
    preset_diagonal_resolution,
    preset_tetrahedral,
    save_model,
)
from .evaluator import (
    TorusPoint,
    hirzebruch_star,
    hirzebruch_star_closed,
    hirzebruch_star_roots,
    localized_class,
    orbifold_class,
    orbifold_class_symplectic,
    q_limit_delta,
    trig_limit_lhs,
    trig_limit_rhs,
)
from .catalog import IdentityDescriptor, Variable, catalog, catalog_ids, get
from .verify import (
    DEFAULT_SEED,
    PersistentPoleError,
    SampleConfig,
    VerificationReport,
    sample_seed,
    verify,
    verify_custom,
)

__version__ = "0.1.0"

__all__ = [
    # precision / conventions
    "DEFAULT_DIGITS",
    "PrecisionConfig",
    "ModularParam",
    "Numeric",
    "e_of",
    "to_mpc",
    "truncation_order",
    # theta kernel
    "ThetaContext",
    "make_context",
    "theta",
    "theta_product",
    "theta_prime",
    "theta_prime_zero",
    "delta",
    "phi",
    "psi",
    "lattice_reduce",
    "lattice_distance",
    "PoleProximityError",
    # truncated series / residue routes
    "TruncatedSeries",
    "delta_series",
    "ell_genus_p1",
    "ell_genus_p1_closed",
    "cy_residue_coeff_route",
    "cy_residue_contour_route",
    "cy_hypersurface_chain",
    # fixed-point / orbifold models
    "ModelFormatError",
    "FixedPointDatum",
    "ResolutionModel",
    "OrbifoldPairDatum",
    "OrbifoldModel",
    "dump_model",
    "save_model",
    "load_model",
    "preset_an_resolution",
    "preset_an_orbifold",
    "preset_blowup",
    "preset_diagonal_resolution",
    "preset_diagonal_orbifold",
    "preset_d4",
    "preset_tetrahedral",
    # evaluator
    "TorusPoint",
    "localized_class",
    "orbifold_class",
    "orbifold_class_symplectic",
    "hirzebruch_star",
    "hirzebruch_star_roots",
    "hirzebruch_star_closed",
    "trig_limit_lhs",
    "trig_limit_rhs",
    "q_limit_delta",
    # identity catalog
    "IdentityDescriptor",
    "Variable",
    "catalog",
    "catalog_ids",
    "get",
    # verification engine
    "DEFAULT_SEED",
    "SampleConfig",
    "VerificationReport",
    "PersistentPoleError",
    "sample_seed",
    "verify",
    "verify_custom",
    "__version__",
]
