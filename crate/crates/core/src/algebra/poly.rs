//! Sparse multivariate polynomials over ℚ.
//!
//! Terms live in a map from exponent vectors to nonzero coefficients. The
//! variable list is ordered; binary operations unify lists by name, keeping
//! the left operand's order and appending unseen names. Printing uses the
//! graded lexicographic order (highest total degree first, ties broken
//! lexicographically along the variable list) so output is reproducible.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::parse;
use super::rational::Rational;
use crate::error::{Error, Result};

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

fn names(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

impl Polynomial {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_in(&names(vars))
    }

    pub fn zero_in(vars: &[String]) -> Self {
        Polynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &[String], c: Rational) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one_in(vars: &[String]) -> Self {
        Self::constant_in(vars, Rational::one())
    }

    /// The variable `vars[idx]` as a polynomial.
    pub fn variable(vars: &[String], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, e, Rational::one())
    }

    pub fn var_in(vars: &[String], name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::invalid(format!("unknown variable `{name}`")))?;
        Ok(Self::variable(vars, idx))
    }

    pub fn monomial(vars: &[String], exps: Monomial, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse::parse_polynomial(s, None)
    }

    /// Parses with a fixed variable list; unknown names are rejected.
    pub fn parse_in(s: &str, vars: &[&str]) -> Result<Self> {
        parse::parse_polynomial(s, Some(&names(vars)))
    }

    pub fn parse_in_names(s: &str, vars: &[String]) -> Result<Self> {
        parse::parse_polynomial(s, Some(vars))
    }

    fn add_term(&mut self, e: Monomial, c: Rational) {
        debug_assert_eq!(e.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Indices of variables that occur with positive exponent.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that occurs.
    pub fn reindex(&self, target: &[String]) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = Self::zero_in(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => ne[j] = x,
                    None => {
                        return Err(Error::invalid(format!(
                            "variable `{}` missing from target list",
                            self.vars[i]
                        )))
                    }
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Renames variables positionally.
    pub fn rename(&self, new_names: &[String]) -> Self {
        assert_eq!(new_names.len(), self.vars.len());
        Polynomial {
            vars: new_names.to_vec(),
            terms: self.terms.clone(),
        }
    }

    fn unified(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (a.reindex(&vars).unwrap(), b.reindex(&vars).unwrap())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, e: &[u32], c: &Rational) -> Self {
        let mut out = Self::zero_in(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            let ne: Monomial = m.iter().zip(e).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, x * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one_in(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "evaluation point arity");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a rational for one variable, keeping the variable list.
    pub fn eval_var(&self, idx: usize, value: &Rational) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[idx];
            ne[idx] = 0;
            out.add_term(ne, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Replaces variable `i` by `subs[i]`; the result lives in the variable
    /// list of the substitutes.
    pub fn compose(&self, subs: &[Polynomial]) -> Self {
        assert_eq!(subs.len(), self.nvars(), "one substitute per variable");
        let vars = subs
            .first()
            .map(|s| s.vars.clone())
            .unwrap_or_else(Vec::new);
        let subs: Vec<Polynomial> = subs.iter().map(|s| s.reindex(&vars).unwrap()).collect();
        let mut cache: Vec<Vec<Polynomial>> = vec![Vec::new(); subs.len()];
        let mut out = Self::zero_in(&vars);
        for (e, c) in &self.terms {
            let mut t = Self::constant_in(&vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = match cache[i].last() {
                        None => Self::one_in(&vars),
                        Some(p) => p * &subs[i],
                    };
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Coefficients with respect to `vars[idx]`: `result[k]` multiplies
    /// `vars[idx]^k`. Coefficients keep the full variable list.
    pub fn coeffs_in(&self, idx: usize) -> Vec<Polynomial> {
        let deg = match self.degree_in(idx) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![Self::zero_in(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[idx] as usize;
            let mut ne = e.clone();
            ne[idx] = 0;
            out[k].terms.insert(ne, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &[String], idx: usize, coeffs: &[Polynomial]) -> Self {
        let mut out = Self::zero_in(vars);
        for (k, c) in coeffs.iter().enumerate() {
            let c = c.reindex(vars).unwrap();
            for (e, x) in c.terms {
                let mut ne = e;
                ne[idx] += k as u32;
                out.add_term(ne, x);
            }
        }
        out
    }

    pub fn leading_coeff_in(&self, idx: usize) -> Polynomial {
        self.coeffs_in(idx)
            .pop()
            .unwrap_or_else(|| Self::zero_in(&self.vars))
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[idx] -= 1;
            out.add_term(ne, c * Rational::from_integer(BigInt::from(e[idx])));
        }
        out
    }

    /// Leading term in lexicographic order along the variable list.
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Multivariate division with remainder in lex order.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let (a, d) = Self::unified(self, d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let (ld, lc) = {
            let (e, c) = d.lex_leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut p = a.clone();
        let mut q = Self::zero_in(&a.vars);
        let mut r = Self::zero_in(&a.vars);
        while let Some((e, c)) = p.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&ld).all(|(x, y)| x >= y) {
                let te: Monomial = e.iter().zip(&ld).map(|(x, y)| x - y).collect();
                let tc = &c / &lc;
                p = &p - &d.mul_monomial(&te, &tc);
                q.add_term(te, tc);
            } else {
                r.add_term(e.clone(), c);
                p.terms.remove(&e);
            }
        }
        (q, r)
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Multiplies by a rational so that coefficients are coprime integers and
    /// the lex-leading coefficient is positive.
    pub fn integer_primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let l = super::rational::denominator_lcm(self.terms.values());
        let scaled: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = scaled.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        if self.lex_leading().unwrap().1.is_negative() {
            g = -g;
        }
        let factor = Rational::new(l, g);
        self.scale(&factor)
    }

    /// Integer coefficients of the primitive form, in term order.
    pub fn integer_coefficients(&self) -> Option<Vec<(Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer())))
            .collect()
    }

    /// Divides by the lex-leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Gcd over ℚ[vars], normalized to coprime integer coefficients with a
    /// positive lex-leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (a, b) = Self::unified(a, b);
        gcd_rec(&a, &b).integer_primitive()
    }

    /// Content with respect to `vars[idx]`: the gcd of the coefficients.
    pub fn content_in(&self, idx: usize) -> Polynomial {
        let mut g = Self::zero_in(&self.vars);
        for c in self.coeffs_in(idx) {
            g = gcd_rec(&g, &c);
            if g.is_constant() && !g.is_zero() {
                return Self::one_in(&self.vars);
            }
        }
        g
    }

    /// Total-degree homogenization with a new variable appended.
    pub fn homogenize(&self, new_var: &str) -> Polynomial {
        let mut vars = self.vars.clone();
        vars.push(new_var.to_string());
        let d = self.total_degree().unwrap_or(0);
        let mut out = Self::zero_in(&vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.push(d - e.iter().sum::<u32>());
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Drops variables that do not occur (keeps the relative order).
    pub fn trimmed(&self) -> Polynomial {
        let used = self.used_vars();
        let vars: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        self.reindex(&vars).unwrap()
    }

    fn grlex_sorted(&self) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| grlex_cmp(b, a));
        ts
    }
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let mut used = a.used_vars();
    for v in b.used_vars() {
        if !used.contains(&v) {
            used.push(v);
        }
    }
    used.sort_unstable();
    let Some(&v) = used.first() else {
        return Polynomial::one_in(a.vars());
    };
    let a_has = a.degree_in(v).unwrap_or(0) > 0;
    let b_has = b.degree_in(v).unwrap_or(0) > 0;
    if !a_has {
        return gcd_rec(a, &b.content_in(v));
    }
    if !b_has {
        return gcd_rec(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g_cont = gcd_rec(&ca, &cb);
    let (pa, pb) = (pa.integer_primitive(), pb.integer_primitive());
    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&r0, &r1, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v).unwrap_or(0) == 0 {
            return g_cont;
        }
        r0 = r1;
        let c = r.content_in(v);
        // Dropping the integer content keeps coefficient growth linear.
        r1 = r.div_exact(&c).expect("content divides").integer_primitive();
    }
    &g_cont * &r1
}

/// Sparse pseudo-remainder of `a` by `b` with respect to `vars[v]`.
pub fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v).expect("nonzero divisor");
    let lb = b.leading_coeff_in(v);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff_in(v);
        let mut e = vec![0; r.nvars()];
        e[v] = dr - db;
        let shifted = (&lr * b).mul_monomial(&e, &Rational::one());
        r = &(&lb * &r) - &shifted;
    }
    r
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = Self::unified(self, other);
        a.terms == b.terms
    }
}

impl Eq for Polynomial {}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        if self.vars != rhs.vars {
            let (a, b) = Polynomial::unified(self, rhs);
            return &a + &b;
        }
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        if self.vars != rhs.vars {
            let (a, b) = Polynomial::unified(self, rhs);
            return &a - &b;
        }
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.vars != rhs.vars {
            let (a, b) = Polynomial::unified(self, rhs);
            return &a * &b;
        }
        let mut out = Polynomial::zero_in(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.grlex_sorted().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn cancellation_and_identities() {
        assert_eq!(&p("x+y") + &p("x-y"), p("2x"));
        let q = p("y^2-x*z");
        assert_eq!(&q * &Polynomial::one_in(q.vars()), q);
        assert_eq!(&p("x+1") * &p("x-1"), p("x^2-1"));
    }

    #[test]
    fn printing_grlex() {
        assert_eq!(p("3/2*x^2*y - z^3").to_string(), "3/2*x^2*y - z^3");
        assert_eq!(p("1 + x + x^2").to_string(), "x^2 + x + 1");
        assert_eq!(p("-x*y + y^2").to_string(), "-x*y + y^2");
        assert_eq!(p("x - x").to_string(), "0");
    }

    #[test]
    fn unify_by_name() {
        let a = Polynomial::parse_in("x", &["x", "y"]).unwrap();
        let b = Polynomial::parse_in("y", &["y", "x"]).unwrap();
        let s = &a + &b;
        assert_eq!(s.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(s, p("x+y"));
    }

    #[test]
    fn division() {
        let f = p("x^2*y - y^3");
        let d = p("x - y");
        let q = f.div_exact(&d).unwrap();
        assert_eq!(&q * &d, f);
        assert!(p("x^2+1").div_exact(&p("x+1")).is_none());
    }

    #[test]
    fn gcd_multivariate() {
        let a = p("(x+y)^2*(x-z)");
        let b = p("(x+y)*(y+z)");
        let g = Polynomial::gcd(&a, &b);
        assert_eq!(g, p("x+y"));
        let g = Polynomial::gcd(&p("y^2-x*z"), &p("y^2-2*x*z"));
        assert!(g.is_constant());
        let g = Polynomial::gcd(&p("6x^2-6"), &p("4x+4"));
        assert_eq!(g, p("x+1"));
    }

    #[test]
    fn eval_and_compose() {
        let f = p("x^2 + 3/2*y");
        assert_eq!(f.eval(&[int(2), rat(2, 3)]), int(5));
        let vars = f.vars().to_vec();
        let shifted = f.compose(&[
            &Polynomial::variable(&vars, 0) + &Polynomial::one_in(&vars),
            Polynomial::variable(&vars, 1),
        ]);
        assert_eq!(shifted, p("x^2 + 2x + 1 + 3/2*y"));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("y^2 - x*z").homogeneous_degree(), Some(2));
        assert_eq!(p("y^2 - x").homogeneous_degree(), None);
        let h = Polynomial::parse_in("x^2 + y + 1", &["x", "y"])
            .unwrap()
            .homogenize("z");
        assert_eq!(h, p("x^2 + y*z + z^2"));
    }

    #[test]
    fn primitive_form() {
        let f = p("-2/3*x + 4/9*y");
        assert_eq!(f.integer_primitive(), p("3x - 2y"));
    }
}
