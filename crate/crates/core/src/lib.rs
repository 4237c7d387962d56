//! Exact homogeneous weights, shortened/residual codes and Plotkin- and
//! Singleton-type bounds for linear codes over finite Frobenius rings.
//!
//! Everything is enumerated exhaustively and computed in exact rational
//! arithmetic, so "sharp" always means equality, never closeness.
//!
//! ```
//! use frobcode_core::{families, bounds};
//!
//! let octacode = families::octacode();
//! assert_eq!(octacode.size(), 256);
//! let reports = bounds::check_all(&octacode);
//! assert!(reports.iter().all(|r| !r.applicable || r.satisfied));
//! ```

pub mod bounds;
mod error;
pub mod families;
pub mod homweight;
pub mod lincode;
pub mod rational;
pub mod ring;

pub use error::{Error, Result};
pub use homweight::HomWeightTable;
pub use lincode::{LinearCode, Word};
pub use rational::Rational;
pub use ring::{build_ring, Elem, Ring, RingSpec};
