//! Legendrian link invariants from front diagrams.
//!
//! Fronts are words in elementary tangles ([`front`]). Three independent
//! evaluators compute the same invariants:
//!
//! * [`rulings`] enumerates (oriented) rulings by a left-to-right sweep;
//! * [`legskein`] rewrites words with Legendrian skein relations;
//! * [`toposkein`] evaluates Dubrovnik and HOMFLY skein trees on the
//!   topological diagram of the front.

pub mod front;
pub mod legskein;
pub mod poly;
pub mod rulings;
pub mod toposkein;

pub use front::{FrontWord, Letter, OrientedFront, PlanarDiagram};
pub use poly::{Degree, LaurentPoly1, LaurentPoly2};
