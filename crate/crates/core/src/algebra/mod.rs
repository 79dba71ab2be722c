//! Exact scalars, sparse polynomials over ℚ and the algorithms built on them.

pub mod interval;
pub mod linalg;
pub mod modp;
mod parse;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod univariate;

pub use interval::{sqrt_interval, RationalInterval, SurdSign};
pub use poly::{Monomial, Polynomial};
pub use rational::Rational;
pub use resultant::resultant;
pub use univariate::{squarefree_decomposition, SquarefreeDecomposition, UniPoly};

/// Which ring operation [`poly_arith`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Applies `op` after unifying the variable lists of the operands by name.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Polynomial {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}
