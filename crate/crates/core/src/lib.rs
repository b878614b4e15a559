//! Weak Gröbner bases of polynomial ideals over effective coefficient rings.
//!
//! Two drivers are provided: [`weak::moeller_weak`], Möller's weak algorithm
//! with multi-reducer top reduction, and [`sigmoeller::sig_moeller`], its
//! signature-based variant with the syzygy, F5 and singular criteria. Both
//! are generic over a [`ring::Ring`] backend; [`run`] dispatches on a
//! runtime [`problem::ProblemFile`] description.
//!
//! ```
//! use sigmoeller::poly::{MonomialOrder, PolyRing};
//! use sigmoeller::ring::Integers;
//! use sigmoeller::sigmoeller::{sig_moeller, SigConfig};
//!
//! let ctx = PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex);
//! let f = vec![ctx.parse("3*x*y + x + y^2").unwrap(), ctx.parse("x^2").unwrap()];
//! let out = sig_moeller(&ctx, &f, &SigConfig::default(), None).unwrap();
//! assert_eq!(out.basis.len(), 7);
//! ```

pub mod error;
pub mod katsura;
pub mod oracle;
pub mod poly;
pub mod problem;
pub mod ring;
pub mod run;
pub mod sig;
pub mod sigmoeller;
pub mod weak;

pub use error::{AlgoError, ParseError, PolyError, ProblemError, RingError, RunError};
pub use weak::RunStats;
