//! Exact arithmetic for weighted projective hypersurfaces and the twist map.
//!
//! The crate is organised by subsystem:
//!
//! - [`wps`]: weight systems, weighted homogeneous polynomials, normalization,
//!   quasismoothness, monomial counts and weighted Bézout numbers.
//! - [`twist`]: the twist map `V1 × V2 ⇢ X` that realizes cyclic quotients of
//!   products as weighted hypersurfaces, its complete-intersection
//!   generalization, and Calabi-Yau bookkeeping.
//! - [`fibration`]: Kodaira fiber classification of constant-modulus
//!   fibrations, α-exponent sums, Milnor numbers, fibration Euler numbers,
//!   fiber extraction and divisor arithmetic on Hirzebruch surfaces.
//! - [`resolve`]: Hirzebruch-Jung continued fractions, self-intersection of
//!   the central curve, blowdown simulation and toric lattice points.
//! - [`euler_hodge`]: orbifold Euler numbers, geometric genus, CY3 Hodge
//!   identities, conifold transitions and complete-intersection curve genus.
//! - [`search`]: bounded enumeration of twist-map tables.
//!
//! Everything is exact: integers are machine or big integers, rationals are
//! [`Rational`] (`BigRational`). No floating point is used anywhere.

pub mod arith;
pub mod euler_hodge;
pub mod fibration;
pub mod io;
pub mod poly;
pub mod reference;
pub mod resolve;
pub mod search;
pub mod twist;
pub mod wps;

mod error;

pub use error::Error;
pub use poly::Poly;
pub use wps::{
    CompleteIntersection, Monomial, WeightSystem, WeightedHypersurface, WeightedPolynomial,
};

/// Exact rational number used for every coefficient and exponent sum.
pub type Rational = num_rational::BigRational;
