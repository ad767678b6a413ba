//! Mixed polynomials `f(z, z̄)`: weighted homogeneity, certified winding
//! numbers, root isolation in one variable, degrees of projective mixed
//! hypersurfaces and closed-form invariants of their Milnor fibers.
//!
//! Work over independent trials, cells or contour samples runs on rayon when
//! the `parallel` feature is enabled; see [`Exec`].

pub mod error;
pub mod exec;
pub mod grammar;
pub mod homogeneity;
pub mod invariants;
pub mod poly;
pub mod projective;
pub mod roots;
pub mod univariate;
pub mod winding;

pub use error::{Error, Result};
pub use exec::Exec;
pub use grammar::{format, parse, parse_in};
pub use homogeneity::{analyze, is_mixed_singular, polar_class, WeightAnalysis};
pub use invariants::{build_family, FamilyKind, FamilySpec};
pub use num_complex::Complex64;
pub use poly::{ExponentPair, MixedPolynomial};
pub use projective::{lkn, scan_point_counts, verify_degree, DegreeVerdict, LineSection, ScanReport};
pub use roots::{count_projective_points, solve, CertifiedRoot, RootBox, RootInventory, SolverOptions};
pub use univariate::MixedUnivariate;
pub use winding::{contour_winding, degree_at_infinity, local_index, Contour, WindingReport};
