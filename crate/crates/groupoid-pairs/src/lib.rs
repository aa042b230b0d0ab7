//! Exact computations with matched pairs of finite groupoids.
//!
//! A matched pair is a pair of finite groupoids `(V, H)` over a common base
//! of objects, acting on each other compatibly. Everything here is finite
//! and table-driven, and every law is checked exhaustively and exactly:
//!
//! - [`groupoid`] — finite groupoids, morphisms, restricted products,
//!   kernels, bundles;
//! - [`matched_pair`] — matched pairs, their cells, duals and opposites,
//!   and the standard constructions (initial/terminal pairs, `M(X,Y)`,
//!   group factorizations, bundle actions);
//! - [`diagonal`] — the diagonal groupoid `V ⋈ H`, exact factorizations and
//!   the round trip between them, semidirect products;
//! - [`morphism`] / [`double`] — morphisms of matched pairs, generalized
//!   doubles `D(α,β)`, the double `D(V,H)`, functoriality, and the
//!   double–dual isomorphism;
//! - [`rep`] — set-theoretic representations, their strict monoidal tensor
//!   product, distinguished objects, restriction functors;
//! - [`rotation`] — rotations `V → H`, matched pairs of rotations,
//!   exhaustive enumeration, and certified braidings on representations;
//! - [`hopf`] — the weak Hopf algebra `k(V,H)` over exact rationals, its
//!   axioms, duality pairing, quasitriangular structures from rotation
//!   pairs, Drinfeld elements, and the Drinfeld double together with its
//!   isomorphism onto `k(D(V,H))`;
//! - [`io`] — JSON interchange documents and named workspaces;
//! - [`cli`] — the batch command-line surface used by the `groupoid-pairs`
//!   binary.
//!
//! The `examples/` directory of this crate walks through each capability;
//! `tests/acceptance.rs` runs the full exact acceptance suite.

pub mod cli;
pub mod diagonal;
pub mod double;
pub mod error;
pub mod fleet;
pub mod groupoid;
pub mod hopf;
pub mod io;
pub mod iso;
pub mod matched_pair;
pub mod morphism;
pub mod rep;
pub mod report;
pub mod rotation;

pub use error::{Error, Result};
pub use groupoid::{ArrowId, FiniteGroupoid, ObjId};
pub use matched_pair::{Cell, MatchedPair};
pub use report::{ValidationReport, Violation};
