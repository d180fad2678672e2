//! Linear and quantum error-correcting codes from group ring elements.
//!
//! An element `a = sum alpha_g g` of the group ring `F_q[G]` maps to an
//! `n x n` matrix over `F_q` through the regular representation: the entry in
//! row `i`, column `j` is the coefficient of `g_i^{-1} g_j` in `a`. The row
//! space of that matrix is a linear code of length `n = |G|`, and when `a`
//! satisfies a self-orthogonality identity — Euclidean, Hermitian, or
//! symplectic — the code lands inside the matching dual and certifies a
//! quantum stabilizer code.
//!
//! - [`field`] implements arithmetic in `GF(p^k)` with printable element
//!   literals.
//! - [`group`] builds multiplication tables for cyclic, dihedral, and
//!   quaternion groups plus direct and semidirect products, under explicit
//!   element listings so matrix images have predictable block shapes.
//! - [`ring`] and [`matrix`] provide group ring elements, their matrix
//!   images, and echelon-form linear algebra.
//! - [`code`] computes code parameters, duals under all three forms, and
//!   minimum weights with an explicit enumeration budget.
//! - [`ortho`] checks self-orthogonality certificates and derives stabilizer
//!   code parameters from them.
//! - [`twod`] covers two-dimensional cyclic codes cut out by bivariate
//!   polynomial divisors.
//! - [`search`] enumerates or samples elements and keeps those whose
//!   certificate holds, deterministically under a seed.
//! - [`report`] renders every result as a stable JSON document; the CLI in
//!   `src/main.rs` is a thin wrapper over it.
//!
//! # Example
//!
//! ```
//! use grcodes::{parse_element, parse_field, parse_group};
//! use grcodes::{DistanceOptions, GroupTable, LinearCode, Metric};
//! use std::sync::Arc;
//!
//! let field = parse_field("GF(2)")?;
//! let group = Arc::new(GroupTable::build(&parse_group("C5xC3:inner=2")?)?);
//! let a = parse_element(&field, &group, "1 + y2 + x2 + x2y2 + x3y + x3y2 + x4y + x4y2")?;
//!
//! let code = LinearCode::from_group_ring(&a);
//! let opts = DistanceOptions { budget: 1 << 12, fallback_samples: None, seed: 0, early_stop: None };
//! let params = code.params(Metric::Hamming, &opts)?;
//! assert_eq!((params.length, params.dimension, params.distance), (15, 4, 8));
//!
//! // `a` is Euclidean-self-orthogonal, so the code sits inside its dual and
//! // the gap between the two carries a [[15, 7, 3]] stabilizer code.
//! let derivation = grcodes::ortho::derive_euclidean(&a, &opts)?;
//! assert_eq!(derivation.quantum.length, 15);
//! assert_eq!(derivation.quantum.dimension, 7);
//! assert_eq!(derivation.quantum.distance, 3);
//! # Ok::<(), grcodes::Error>(())
//! ```

pub mod code;
pub mod error;
pub mod expr;
pub mod field;
pub mod group;
pub mod matrix;
pub mod ortho;
pub mod report;
pub mod ring;
pub mod search;
pub mod twod;

pub use code::{CodeParams, Distance, DistanceOptions, LinearCode, Metric};
pub use error::{Error, Result};
pub use expr::{parse_bivar, parse_element, parse_field, parse_group};
pub use field::{Field, FieldElement};
pub use group::{GroupKind, GroupSpec, GroupTable, Listing};
pub use matrix::{Matrix, RowEchelon};
pub use ortho::{CertKind, OrthoCertificate, QeccDerivation, QeccParams};
pub use ring::GroupRingElement;
pub use search::{run_search, to_jsonl, SearchConfig, SearchKind, SearchMode, SearchRecord};
pub use twod::{BivarPoly, TwoDCyclicCode};
