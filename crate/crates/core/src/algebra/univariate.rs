//! Dense univariate polynomials over ℚ: Euclidean algorithm, Yun's
//! squarefree decomposition, exact rational roots (p-adic lifting plus
//! rational reconstruction), and irreducibility evidence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::poly::Polynomial;
use super::rational::{denominator_lcm, Rational};
use crate::error::{Error, Result};

/// Coefficients from low to high degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`.
    pub fn linear_root(a: &Rational) -> Self {
        Self::new(vec![-a.clone(), Rational::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.coeffs.is_empty()).then(|| self.coeffs.len() - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Coprime integer coefficients with the same roots.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = denominator_lcm(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Converts a polynomial in at most one variable.
    pub fn from_polynomial(p: &Polynomial) -> Result<(Self, Option<String>)> {
        let used = p.used_vars();
        if used.len() > 1 {
            return Err(Error::NotUnivariate);
        }
        let Some(&v) = used.first() else {
            let c = p.as_constant().unwrap();
            return Ok((Self::constant(c), None));
        };
        let coeffs = p
            .coeffs_in(v)
            .into_iter()
            .map(|c| c.as_constant().unwrap())
            .collect();
        Ok((Self::new(coeffs), Some(p.vars()[v].clone())))
    }

    pub fn to_polynomial(&self, var: &str) -> Polynomial {
        let vars = vec![var.to_string()];
        Polynomial::from_terms(
            &vars,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    /// Squarefree part (monic), i.e. the product of the distinct irreducible
    /// factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return Self::one();
        }
        let g = Self::gcd(self, &self.derivative());
        self.div_exact(&g).unwrap().monic()
    }

    /// Yun's algorithm: `self = unit * prod f_i^i` with monic, squarefree,
    /// pairwise coprime `f_i`; only nonconstant factors are returned.
    pub fn squarefree(&self) -> (Rational, Vec<(Self, u32)>) {
        assert!(!self.is_zero());
        let unit = self.leading();
        if self.is_constant() {
            return (unit, Vec::new());
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = Self::gcd(&f, &fp);
        let mut b = f.div_exact(&a0).unwrap();
        let c = fp.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while !b.is_constant() {
            let a = Self::gcd(&b, &d);
            let nb = b.div_exact(&a).unwrap();
            let c = d.div_exact(&a).unwrap();
            d = c.sub(&nb.derivative());
            if !a.is_constant() {
                out.push((a, i));
            }
            b = nb;
            i += 1;
        }
        (unit, out)
    }

    /// All rational roots, sorted, without multiplicity.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_constant() {
            return Vec::new();
        }
        let sf = self.squarefree_part();
        let mut roots = Vec::new();
        let mut g = sf.integer_coeffs();
        if g[0].is_zero() {
            roots.push(Rational::zero());
            g.remove(0);
        }
        if g.len() >= 2 {
            roots.extend(nonzero_rational_roots(&g));
        }
        roots.sort();
        roots
    }

    /// Irreducibility over ℚ. `Unknown` means the available evidence (rational
    /// roots, degree patterns modulo up to 40 primes) did not settle it.
    pub fn irreducibility(&self) -> Irreducibility {
        let Some(n) = self.degree() else {
            return Irreducibility::Reducible;
        };
        match n {
            0 => return Irreducibility::Reducible,
            1 => return Irreducibility::Irreducible,
            _ => {}
        }
        let (_, parts) = self.squarefree();
        if parts.len() != 1 || parts[0].1 != 1 {
            return Irreducibility::Reducible;
        }
        if !self.rational_roots().is_empty() {
            return Irreducibility::Reducible;
        }
        if n <= 3 {
            return Irreducibility::Irreducible;
        }
        let g = self.integer_coeffs();
        // possible[k]: a rational factor of degree k is still consistent.
        let mut possible: Vec<bool> = (0..=n).map(|k| k > 0 && k < n).collect();
        let mut tried = 0;
        for p in modp::primes_from(3) {
            if tried >= 40 {
                break;
            }
            if modp::reduce(&g[n], p) == 0 {
                continue;
            }
            let fp = modp::from_big(&g, p);
            if !modp::is_squarefree(&fp, p) {
                continue;
            }
            tried += 1;
            let degs = modp::factor_degrees(&fp, p);
            let mut sums = vec![false; n + 1];
            sums[0] = true;
            for d in degs {
                for s in (d..=n).rev() {
                    if sums[s - d] {
                        sums[s] = true;
                    }
                }
            }
            for k in 0..=n {
                possible[k] = possible[k] && sums[k];
            }
            if !possible.iter().any(|&b| b) {
                return Irreducibility::Irreducible;
            }
        }
        Irreducibility::Unknown
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

fn eval_big(g: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    g.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn rational_reconstruct(r: &BigInt, m: &BigInt, nbound: &BigInt, dbound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > nbound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > *dbound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Rational roots of a squarefree integer polynomial with nonzero constant
/// term, via a simple root modulo a good prime lifted p-adically.
fn nonzero_rational_roots(g: &[BigInt]) -> Vec<Rational> {
    let n = g.len() - 1;
    let a0 = g[0].abs();
    let an = g[n].abs();
    let bound = BigInt::from(2) * &a0 * &an + BigInt::one();
    let gp: Vec<BigInt> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let uni = UniPoly::new(g.iter().map(|c| Rational::from_integer(c.clone())).collect());
    for p in modp::primes_from(101) {
        if modp::reduce(&g[n], p) == 0 {
            continue;
        }
        let fp = modp::from_big(g, p);
        if !modp::is_squarefree(&fp, p) {
            continue;
        }
        let pb = BigInt::from(p);
        let mut out = Vec::new();
        for r0 in 0..p {
            if modp::eval(&fp, r0, p) != 0 {
                continue;
            }
            let mut m = pb.clone();
            let mut r = BigInt::from(r0);
            while m <= bound {
                m = &m * &m;
                let num = eval_big(g, &r, &m);
                let den = eval_big(&gp, &r, &m);
                let inv = inverse_mod(&den, &m).expect("simple root");
                r = (&r - num * inv).mod_floor(&m);
            }
            if let Some(q) = rational_reconstruct(&r, &m, &a0, &an) {
                if uni.eval(&q).is_zero() {
                    out.push(q);
                }
            }
        }
        return out;
    }
    unreachable!("a good prime always exists")
}

/// Squarefree decomposition of a univariate [`Polynomial`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    /// `(factor, multiplicity)` with monic squarefree factors and strictly
    /// increasing multiplicities.
    pub factors: Vec<(Polynomial, u32)>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self, vars: &[String]) -> Polynomial {
        let mut acc = Polynomial::constant_in(vars, self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

pub fn squarefree_decomposition(f: &Polynomial) -> Result<SquarefreeDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (u, var) = UniPoly::from_polynomial(f)?;
    let (unit, parts) = u.squarefree();
    let var = var.unwrap_or_else(|| f.vars().first().cloned().unwrap_or_else(|| "t".into()));
    let factors = parts
        .into_iter()
        .map(|(g, m)| (g.to_polynomial(&var).reindex(f.vars()).unwrap_or_else(|_| g.to_polynomial(&var)), m))
        .collect();
    Ok(SquarefreeDecomposition { unit, factors })
}
