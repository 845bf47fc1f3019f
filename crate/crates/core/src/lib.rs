//! Exact free-oscillator realization of the Laguerre polynomial.
//!
//! Hermite polynomials, the radial Laguerre polynomials `L_n^{(g-1/2)}(x^2)`,
//! ladder and number operators, the pair-lowering operator `(N+1)^{-1} a^2`
//! and the terminating `1F0` operator series are all computed exactly in
//! Q[g][x], with the coupling g kept symbolic. Every identity check compares
//! canonical polynomials structurally, so one passing check certifies the
//! identity for every value of g.

pub mod classical;
pub mod combinat;
pub mod error;
pub mod exact;
pub mod moments;
pub mod oscillator;
pub mod quadrature;
pub mod report;
pub mod suite;
pub mod transforms;

pub use classical::{hermite, laguerre, laguerre_radial, Parity, PolyFamily};
pub use error::{Error, Result};
pub use exact::{EtaPoly, GScalar, MomentValue, Rational, ToJson, XPoly};
pub use report::VerifyReport;
pub use suite::Suite;
