//! Fulton's algorithm for `I_0(f, g)` in `k[u, v]`.

use num_traits::Zero;

use super::{ord_at_zero, to_uni};
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

fn vanishes_at_origin(p: &Polynomial) -> bool {
    p.eval(&[Rational::zero(), Rational::zero()]).is_zero()
}

/// Intersection multiplicity at the origin of two polynomials in two
/// variables. Errors if they share a component through the origin.
pub fn fulton_at_origin(f: &Polynomial, g: &Polynomial) -> Result<u32> {
    assert_eq!(f.nvars(), 2);
    let df = f.total_degree().unwrap_or(0) as usize;
    let dg = g.total_degree().unwrap_or(0) as usize;
    let mut budget = Budget {
        divisions: df * dg + 1,
        lowerings: 64 * (df + dg + 1).pow(3),
    };
    // A common factor is harmless unless it passes through the origin.
    let h = Polynomial::gcd(f, g);
    if !h.is_constant() {
        if vanishes_at_origin(&h) {
            return Err(Error::NonProperIntersection);
        }
        let (f, g) = (f.div_exact(&h).unwrap(), g.div_exact(&h).unwrap());
        return fulton(f.integer_primitive(), g.integer_primitive(), &mut budget);
    }
    fulton(f.integer_primitive(), g.integer_primitive(), &mut budget)
}

/// Each division by `v` adds at least 1 to a total bounded by Bezout, so
/// `divisions` is a hard bound; `lowerings` is only a safety net.
struct Budget {
    divisions: usize,
    lowerings: usize,
}

impl Budget {
    fn spend(counter: &mut usize, what: &str) -> Result<()> {
        if *counter == 0 {
            return Err(Error::Internal(format!("intersection recursion exhausted its {what} bound")));
        }
        *counter -= 1;
        Ok(())
    }
}

fn fulton(mut f: Polynomial, mut g: Polynomial, budget: &mut Budget) -> Result<u32> {
    let v = Polynomial::variable(f.vars(), 1);
    loop {
        if f.is_zero() && g.is_zero() {
            return Err(Error::NonProperIntersection);
        }
        if !vanishes_at_origin(&f) || !vanishes_at_origin(&g) {
            return Ok(0);
        }
        let fu = to_uni(&f.eval_var(1, &Rational::zero()));
        let gu = to_uni(&g.eval_var(1, &Rational::zero()));
        match (fu.degree(), gu.degree()) {
            (None, None) => return Err(Error::NonProperIntersection),
            (None, _) => {
                // f = v f1: I(v, g) + I(f1, g), with I(v, g) = ord_u g(u, 0).
                Budget::spend(&mut budget.divisions, "division")?;
                let f1 = f.div_exact(&v).expect("v divides f");
                let here = ord_at_zero(&gu).unwrap();
                return Ok(here + fulton(f1, g, budget)?);
            }
            (_, None) => {
                Budget::spend(&mut budget.divisions, "division")?;
                let g1 = g.div_exact(&v).expect("v divides g");
                let here = ord_at_zero(&fu).unwrap();
                return Ok(here + fulton(f, g1, budget)?);
            }
            (Some(r), Some(s)) => {
                let (fu, gu, r, s) = if r > s {
                    std::mem::swap(&mut f, &mut g);
                    (gu, fu, s, r)
                } else {
                    (fu, gu, r, s)
                };
                Budget::spend(&mut budget.lowerings, "reduction")?;
                // Lower deg g(u, 0) below s without changing the ideal.
                let shift = [(s - r) as u32, 0];
                let lowered = &g.scale(&fu.leading()) - &f.mul_monomial(&shift, &gu.leading());
                g = lowered.integer_primitive();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse_in(s, &["u", "v"]).unwrap()
    }

    #[test]
    fn classical_examples() {
        // Fulton's textbook example: (u^2+v^2)^2 + 3u^2 v - v^3 and
        // (u^2+v^2)^3 - 4u^2 v^2 meet with multiplicity 14.
        let f = p("(u^2+v^2)^2 + 3*u^2*v - v^3");
        let g = p("(u^2+v^2)^3 - 4*u^2*v^2");
        assert_eq!(fulton_at_origin(&f, &g).unwrap(), 14);
        assert_eq!(fulton_at_origin(&p("v - u^2"), &p("v")).unwrap(), 2);
        assert_eq!(fulton_at_origin(&p("v^2 - u^3"), &p("u")).unwrap(), 2);
        assert_eq!(fulton_at_origin(&p("v^2 - u^3"), &p("v")).unwrap(), 3);
        assert_eq!(fulton_at_origin(&p("u + 1"), &p("v")).unwrap(), 0);
        let f = p("u - u^2*v");
        let g = p("(u^3 + 2*u^2*v - u*v - v^3)*(u^2*v - u + v^3)");
        assert_eq!(
            fulton_at_origin(&f, &g).unwrap(),
            fulton_at_origin(&f, &p("u^3 + 2*u^2*v - u*v - v^3")).unwrap()
                + fulton_at_origin(&f, &p("u^2*v - u + v^3")).unwrap()
        );
    }

    #[test]
    fn common_component() {
        assert_eq!(
            fulton_at_origin(&p("u*v"), &p("u*(v+1)")),
            Err(Error::NonProperIntersection)
        );
    }
}
