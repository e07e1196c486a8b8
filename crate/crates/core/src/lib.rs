//! Exact computation of Lah numbers, Stirling numbers, Laguerre polynomials
//! of order -1 and exponential (Bell) polynomials, together with several
//! independent closed forms for the n-th derivative of `exp(c * x^p)` and a
//! checker for the identities connecting all of them.
//!
//! Every value is an exact integer or rational; nothing in this crate rounds.

pub mod derivatives;
pub mod error;
pub mod exact;
pub mod identities;
pub mod polynomials;
pub mod sequences;
pub mod series;

pub use derivatives::{DerivClosedForm, DerivSpec};
pub use error::{Error, Result};
pub use exact::{BigInt, Rational};
pub use identities::{IdentityId, IdentityReport, Status, Suite};
pub use polynomials::Poly;
pub use sequences::{Tables, Triangle, TriangleKind};
pub use series::{Coefficient, TruncSeries};
