//! Sylvester resultants with polynomial coefficients.

use num_traits::{One, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};

fn merged_vars(f: &Polynomial, g: &Polynomial, var: &str) -> Vec<String> {
    let mut vars = f.vars().to_vec();
    for v in g.vars() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    if !vars.iter().any(|v| v == var) {
        vars.push(var.to_string());
    }
    vars
}

/// `Res_var(f, g)`, the determinant of the Sylvester matrix. The result lives
/// in the union of both variable lists and no longer involves `var`.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: &str) -> Result<Polynomial> {
    let vars = merged_vars(f, g, var);
    let f = f.reindex(&vars)?;
    let g = g.reindex(&vars)?;
    let v = vars.iter().position(|x| x == var).unwrap();
    let m = f.degree_in(v);
    let n = g.degree_in(v);
    match (m, n) {
        (Some(0) | None, Some(0) | None) => Err(Error::ConstantInputs(var.to_string())),
        (None, _) | (_, None) => Ok(Polynomial::zero_in(&vars)),
        (Some(0), Some(n)) => Ok(f.pow(n)),
        (Some(m), Some(0)) => Ok(g.pow(m)),
        (Some(m), Some(n)) => {
            let (m, n) = (m as usize, n as usize);
            let fc = f.coeffs_in(v);
            let gc = g.coeffs_in(v);
            let size = m + n;
            let zero = Polynomial::zero_in(&vars);
            let mut rows = vec![vec![zero.clone(); size]; size];
            for i in 0..n {
                for (k, c) in fc.iter().enumerate() {
                    rows[i][i + m - k] = c.clone();
                }
            }
            for i in 0..m {
                for (k, c) in gc.iter().enumerate() {
                    rows[n + i][i + n - k] = c.clone();
                }
            }
            Ok(bareiss_det(rows, &vars))
        }
    }
}

/// Fraction-free determinant; every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>, vars: &[String]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one_in(vars);
    }
    let mut sign_neg = false;
    let mut prev = Polynomial::one_in(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Polynomial::zero_in(vars);
            };
            m.swap(k, r);
            sign_neg = !sign_neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if prev.is_one_constant() {
                    num
                } else {
                    num.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            m[i][k] = Polynomial::zero_in(vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_neg {
        -&det
    } else {
        det
    }
}

impl Polynomial {
    fn is_one_constant(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

/// Determinant of a rational matrix (Bareiss over ℚ).
pub fn det_rational(m: &[Vec<super::Rational>]) -> super::Rational {
    let vars: Vec<String> = Vec::new();
    let rows = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| Polynomial::constant_in(&vars, c.clone()))
                .collect()
        })
        .collect();
    bareiss_det(rows, &vars)
        .as_constant()
        .unwrap_or_else(super::Rational::zero)
}
