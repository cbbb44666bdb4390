//! Exact-arithmetic toric geometry of Weyl fans.
//!
//! The crate builds the complete nonsingular toric varieties attached to
//! the root systems of GL(n), SL(n), and G2 (maximal cones are Weyl
//! chambers), models torus-equivariant line bundles as orthogonal sets of
//! characters, enumerates the lattice points that span their sections,
//! and measures the failure of section restriction to the divisor over a
//! root hyperplane two independent ways: as the cokernel of the lattice
//! projection and as a topological component count per eigenweight.
//! On top of that sit the projection-equality checks between section
//! polytopes and their Levi averages, including the G2 configuration
//! where the equality fails.
//!
//! All arithmetic is exact rational; nothing here floats.

pub mod cohomology;
pub mod divisor;
pub mod error;
pub mod fan;
pub mod jsonio;
pub mod linalg;
pub mod mazur;
pub mod root_system;

pub use cohomology::{
    h0_points, h1_eigenspace_dim_topological, phi_cokernel, phi_cokernel_with_oracle,
    projected_h0_points, total_topological_h1, vanishing_conditions, CohomologyReport,
    LatticePointSet, LatticeTag, VanishingConditions,
};
pub use divisor::{OrthogonalSet, RestrictedSet, Validation};
pub use error::Error;
pub use fan::{build_weyl_fan, divisor_subfan, Cone, ConeId, Fan, Variety, WallCrossing};
pub use linalg::Rat;
pub use mazur::{
    batch_compositions, compute_p_mu, g2_counterexample, g2_counterexample_set, g2_family_case,
    random_positive_orthogonal_set, random_valid_orthogonal_set, verify_projection_equality,
    verify_projection_equality_staged, G2Family, LeviSpec, ProjectionReport,
};
pub use root_system::{
    datum_name, pairing, parse_datum, Character, Cocharacter, GroupKind, RootDatum,
};
