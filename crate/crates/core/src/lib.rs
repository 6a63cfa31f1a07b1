//! Exact computations with finite-dimensional Hom-Lie and compatible Hom-Lie
//! algebras: axiom checks, the Nijenhuis–Richardson bracket, Chevalley–Eilenberg
//! and compatible cohomology, abelian extensions and deformations.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod algebra;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod linalg;

pub use algebra::{
    induced_bracket, operator_bracket, rb_companion, rb_pair, semidirect_product, sum_bracket,
    twisted_semidirect, verify_operator, verify_representation, verify_structure, Check,
    CompatibleHomLieAlgebra, HomLieAlgebra, HomLieStructure, LinearOperator, OperatorKind,
    Representation, StructureConstants, ValidationReport, Witness,
};
pub use cochain::{
    evaluate, exterior_power_matrix, hom_cochain_basis, is_mc_pair, lift_to_product, nr_bracket,
    nr_diamond, Cochain, McReport,
};
pub use cohomology::{
    ce_coboundary, cohomology_dimensions, compatible_coboundary, compatible_cohomology,
    compare_cohomology, comparison_map, derivation_space, plain_cohomology, sum_structure, CohomologyDimensions, CohomologyReport,
    CompatibleCochain, DerivationSpace, Structure,
};
pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, Vector};
pub use deformation::{
    check_linear_equivalence, check_linear_generator, infinitesimal_class, is_extensible,
    obstruction, obstruction_class, trivial_deformation_from_nijenhuis, verify_order_p,
    LinearGenerator, LinearGeneratorReport, OrderPDeformation, OrderPReport,
};
pub use extension::{
    build_extension, check_equivalence, ext_class, extract_cocycle, AbelianExtension,
    ExtensionCocycle,
};
