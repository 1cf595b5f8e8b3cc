//! Exact commutative algebra for tangent and Rees algebras of Kahler
//! differentials: a Buchberger engine over GF(p) and the rationals, ideal
//! arithmetic, graded free resolutions, and the differential pipeline that
//! builds the tangent algebra of a presented ring, saturates it to the Rees
//! algebra, and decides torsion, Fitting-height, and duality criteria.

pub mod error;
pub mod par;
pub mod polycore;

pub mod groebner;
pub mod idealops;

pub mod diffalg;
pub mod homology;

pub use error::{CaError, CaResult};
