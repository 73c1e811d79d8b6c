//! Exact commutative algebra in prime characteristic.
//!
//! The crate is layered bottom-up:
//! - [`scalar`]: F_p and rational function fields F_p(u, ...)
//! - [`polyring`]: polynomials, monomial orders, ring maps
//! - [`ideal`]: Groebner bases and ideal operations
//! - [`quotient`]: quotient rings, parameter predicates, subring presentations
//! - [`frobenius`]: bracket powers, Frobenius preimages and closures
//! - [`tight`]: verdict-based tight-closure membership and product checks
//! - [`oracle`]: brute-force verifiers and seeded instances for tests

pub mod budget;
pub mod error;
pub mod frobenius;
pub mod ideal;
pub mod oracle;
pub mod polyring;
pub mod quotient;
pub mod scalar;
pub mod tight;
pub mod verdict;

pub use budget::Budget;
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingExt, RingMap};
pub use quotient::{QuotientIdeal, QuotientRing, QuotientRingExt, RingPresentation};
pub use scalar::{Field, Scalar};
pub use verdict::{Certificate, Membership, Status, Verdict};

