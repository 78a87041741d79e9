//! Exact-arithmetic toolkit for elementary symmetric functions of
//! self-conjugate complex lists with nonnegative real parts, and for the
//! Newton-like inequality families those functions satisfy.
//!
//! The crate is organized around the objects it manipulates:
//!
//! * [`scalar`] — arbitrary-precision rationals and exact comparisons;
//! * [`esf`] — the list data model and exact `e_k`, `E_k`, `P_k` values;
//! * [`mpoly`] — a sparse multivariate polynomial engine over rationals;
//! * [`sym`] — symbolic expansions of `e_k` and the positivity and
//!   coefficient-identity checks built on them;
//! * [`ineq`] — exact checkers for every inequality family, critical-λ
//!   computation and wedge figure data;
//! * [`roots`] — even/odd part extraction, Sturm-chain root counting and
//!   interlacing verification;
//! * [`extremal`] — constructors for the extremal example lists plus a
//!   deterministic random list generator;
//! * [`search`] — randomized descent estimating best-possible constants.
//!
//! All verdicts are exact; floating point appears only in the search
//! objective and figure emission.

pub mod esf;
pub mod extremal;
pub mod ineq;
pub mod mpoly;
pub mod roots;
pub mod scalar;
pub mod search;
pub mod sym;

pub use esf::{elem_sym_all, EsfSequence, SelfConjugateList, WedgeSpec};
pub use scalar::{binomial, cmp_sqrt_scaled, parse_rational, Rational};
