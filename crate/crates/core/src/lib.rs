//! Exact constructions for families of quadrics: the Klein correspondence for
//! lines in P³, the genus-2 net of conics coming from the quadratic Higgs-field
//! map, and the genus-3 quadric families built from syzygetic tetrads.
//!
//! Everything is computed over ℚ with arbitrary-precision coefficients. The
//! universal value type is [`Poly`]; matrices of polynomials and rational
//! matrices live in [`matrix`], quadratic forms and linear systems of them in
//! [`quadform`].

pub mod error;
pub mod genus2;
pub mod genus3;
pub mod matrix;
pub mod poly;
pub mod quadform;
pub mod random;
pub mod rational;
pub mod selftest;
pub mod text;
pub mod twistor;

pub use error::{Error, Result};
pub use matrix::{PolyMatrix, RatMatrix};
pub use poly::{Monomial, Poly, PolyRing};
pub use quadform::{QuadForm, QuadricSystem};
pub use rational::Rational;
