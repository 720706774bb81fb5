//! Exact commutative algebra over small prime fields, aimed at Frobenius
//! techniques: Groebner bases with cofactor certificates, Cartier (trace)
//! operators, tight interiors, big test ideals, and conductor ideals of
//! quotient rings `F_p[x_1..x_n]/I`.
//!
//! Everything is exact arithmetic over `F_p`; no floating point is involved.
//! The crate is organized bottom-up:
//!
//! * [`field`], [`monomial`], [`poly`], [`parse`]: polynomial arithmetic.
//! * [`groebner`], [`ideal`], [`ring`]: ideal arithmetic over quotient rings.
//! * [`cartier`]: p^{-e}-linear trace maps and Fedder-style multiplier ideals.
//! * [`semigroup`]: numerical semigroups (gaps, Frobenius number, conductor).
//! * [`interior`], [`conductor`]: tight interiors, big test ideals, Cartier
//!   fixed points, conductor identities.
//! * [`oracle`], [`gradedmod`]: independent brute-force checks via linear
//!   algebra on graded slices, finite-length graded modules and duality.
//!
//! Quick start: the big test ideal of the coordinate cross `F_2[x,y]/(xy)`.
//!
//! ```
//! use taukit_core::{Ideal, MonomialOrder, PolyRing, RingPresentation};
//! use taukit_core::interior::big_test_ideal_for_ring;
//!
//! # fn main() -> Result<(), taukit_core::AlgebraError> {
//! let ring = PolyRing::new(2, &["x", "y"], MonomialOrder::GrevLex)?;
//! let defining = Ideal::parse(&ring, &["x*y"])?;
//! let rp = RingPresentation::new(ring, defining)?;
//! let tau = big_test_ideal_for_ring(&rp, 4, 2)?;
//! assert!(tau.trace.result.equals(&Ideal::parse(rp.ambient(), &["x", "y"])?));
//! # Ok(())
//! # }
//! ```

pub mod cartier;
pub mod conductor;
pub mod error;
pub mod interior;
pub mod linalg;
pub mod field;
pub mod gradedmod;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod semigroup;

pub use error::AlgebraError;
pub use field::{Fp, PrimeField};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
pub use ring::RingPresentation;
