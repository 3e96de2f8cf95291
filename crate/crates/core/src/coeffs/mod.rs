//! Exact arithmetic in Q(q).

mod canonical;
mod laurent;
pub mod qnum;
mod ratfunc;
mod scalar;

pub use canonical::{parse_poly, parse_rational};
pub use laurent::LaurentPoly;
pub use num_rational::BigRational as BigRat;
pub use ratfunc::RationalFunction;
pub use scalar::Scalar;
