//! Exact production-matrix and branched continued fraction calculus for
//! orthogonal and multiple orthogonal polynomials.
//!
//! Everything is generic over the [`Ring`] contract. The concrete
//! coefficient rings are [`Rational`] and [`MultiPoly`] (polynomials with
//! rational coefficients in named indeterminates), and the aliases below fix
//! the common windows to one of them.

#![allow(non_snake_case)]

pub mod cfrac;
pub mod cli;
pub mod error;
pub mod functionals;
pub mod hessenberg;
pub mod json;
pub mod models;
pub mod mop;
pub mod multipoly;
pub mod paths;
pub mod production;
pub mod scalar;
pub mod series;
pub mod unipoly;

pub use error::{Error, Result};
pub use multipoly::{Monomial, MultiPoly, Var};
pub use scalar::{Rational, Ring};
pub use series::TruncSeries;
pub use unipoly::UniPoly;

pub type QHessWindow = hessenberg::HessWindow<Rational>;
pub type QLowTriWindow = hessenberg::LowTriWindow<Rational>;
pub type QDenseWindow = hessenberg::DenseWindow<Rational>;
pub type QPoly = UniPoly<Rational>;
pub type QPolySeq = functionals::MonicPolySeq<Rational>;
pub type QJFraction = cfrac::JFraction<Rational>;
pub type QSFraction = cfrac::SFraction<Rational>;
pub type QSeries = TruncSeries<Rational>;

pub type SymHessWindow = hessenberg::HessWindow<MultiPoly>;
pub type SymLowTriWindow = hessenberg::LowTriWindow<MultiPoly>;
pub type SymDenseWindow = hessenberg::DenseWindow<MultiPoly>;
pub type SymPoly = UniPoly<MultiPoly>;
pub type SymJFraction = cfrac::JFraction<MultiPoly>;
pub type SymSFraction = cfrac::SFraction<MultiPoly>;
pub type SymSeries = TruncSeries<MultiPoly>;
