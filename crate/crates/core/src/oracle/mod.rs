//! Brute-force section spaces on ℙ² and ℙ¹×ℙ¹: monomial bases of H⁰,
//! filtrations by divisor and point vanishing, adapted bases, and finite-N
//! beta approximants. Everything is exact and independent of the volume
//! engine in [`crate::positivity`].
//!
//! Point conditions are handled by an explicit projective change of
//! coordinates `T` moving the point to a coordinate vertex: there, vanishing
//! conditions are monomial, and a level is the image under `T⁻¹` of the
//! admissible monomials. [`taylor_level_dim`] recomputes the same dimensions
//! as kernels of Taylor-coefficient maps.

mod adapted;
mod classes;

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::local::{BiPoint, ProjPoint};
use crate::par::{self, Exec};

pub use adapted::{adapted_basis, AdaptedBasis};
pub use classes::{beta_finite_n_class, h0_class};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Ambient {
    P2(u32),
    P1xP1(u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AmbientKind {
    P2,
    P1xP1,
}

impl AmbientKind {
    pub fn vars(self) -> Vec<String> {
        let v: &[&str] = match self {
            AmbientKind::P2 => &crate::local::PLANE_VARS,
            AmbientKind::P1xP1 => &crate::local::BI_VARS,
        };
        v.iter().map(|s| s.to_string()).collect()
    }

    /// `N·A` for `A` of degree `a` (one entry on ℙ², two on ℙ¹×ℙ¹).
    pub fn scaled(self, a: &[u32], n: u32) -> Result<Ambient> {
        match (self, a) {
            (AmbientKind::P2, [d]) => Ok(Ambient::P2(d * n)),
            (AmbientKind::P1xP1, [d1, d2]) => Ok(Ambient::P1xP1(d1 * n, d2 * n)),
            _ => Err(Error::invalid("degree vector does not match the ambient")),
        }
    }
}

impl Ambient {
    /// Checked constructor for user-supplied degrees.
    pub fn new(kind: AmbientKind, degrees: &[i64]) -> Result<Self> {
        let nonneg = |d: i64| {
            u32::try_from(d).map_err(|_| Error::invalid(format!("negative degree {d}")))
        };
        match (kind, degrees) {
            (AmbientKind::P2, [n]) => Ok(Ambient::P2(nonneg(*n)?)),
            (AmbientKind::P1xP1, [a, b]) => Ok(Ambient::P1xP1(nonneg(*a)?, nonneg(*b)?)),
            _ => Err(Error::invalid("degree vector does not match the ambient")),
        }
    }

    pub fn kind(self) -> AmbientKind {
        match self {
            Ambient::P2(_) => AmbientKind::P2,
            Ambient::P1xP1(..) => AmbientKind::P1xP1,
        }
    }

    fn degrees(self) -> Vec<u32> {
        match self {
            Ambient::P2(n) => vec![n],
            Ambient::P1xP1(a, b) => vec![a, b],
        }
    }

    fn with_degrees(self, d: &[i64]) -> Option<Ambient> {
        if d.iter().any(|&x| x < 0) {
            return None;
        }
        Some(match self {
            Ambient::P2(_) => Ambient::P2(d[0] as u32),
            Ambient::P1xP1(..) => Ambient::P1xP1(d[0] as u32, d[1] as u32),
        })
    }

    pub fn dim(self) -> usize {
        match self {
            Ambient::P2(n) => ((n as usize + 1) * (n as usize + 2)) / 2,
            Ambient::P1xP1(a, b) => (a as usize + 1) * (b as usize + 1),
        }
    }

    fn monomials(self) -> Vec<Vec<u32>> {
        match self {
            Ambient::P2(n) => (0..=n)
                .rev()
                .flat_map(|a| (0..=n - a).rev().map(move |b| vec![a, b, n - a - b]))
                .collect(),
            Ambient::P1xP1(p, q) => (0..=p)
                .flat_map(|i| (0..=q).map(move |j| vec![p - i, i, q - j, j]))
                .collect(),
        }
    }
}

/// A monomial basis of H⁰ of `O(N)` or `O(N₁, N₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionSpace {
    ambient: Ambient,
    vars: Vec<String>,
    basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

pub fn h0_basis(ambient: Ambient) -> SectionSpace {
    let basis = ambient.monomials();
    let index = basis.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    SectionSpace {
        ambient,
        vars: ambient.kind().vars(),
        basis,
        index,
    }
}

impl SectionSpace {
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Coordinates of a section in the monomial basis.
    pub fn coefficients(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let p = p.reindex(&self.vars)?;
        let mut v = vec![Rational::zero(); self.dim()];
        for (e, c) in p.terms() {
            let i = self
                .index
                .get(e)
                .ok_or_else(|| Error::invalid(format!("`{p}` is not a section of this space")))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }

    pub fn to_polynomial(&self, v: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            &self.vars,
            self.basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e.clone(), c.clone())),
        )
    }
}

/// A point of the ambient surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SectionPoint {
    P2(ProjPoint),
    P1xP1(BiPoint),
}

/// A point together with local coordinates: the chart coordinates at the
/// point, optionally composed with a linear change `(u, v) = M (u', v')`
/// (ℙ² only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFrame {
    pub point: SectionPoint,
    pub change: Option<[[Rational; 2]; 2]>,
}

impl LocalFrame {
    pub fn at(point: SectionPoint) -> Self {
        LocalFrame {
            point,
            change: None,
        }
    }
}

/// The projective change `T` with `T e_i = Q` realizing the frame, the
/// substitution for `s ↦ s ∘ T⁻¹`, and the monomial positions of the local
/// coordinates at the vertex `e_i`.
struct FrameMap {
    forward: Vec<Polynomial>,
    inverse: Vec<Polynomial>,
    local: [usize; 2],
    vertex: Vec<usize>,
}

fn linear_subs(vars: &[String], m: &Matrix) -> Vec<Polynomial> {
    m.iter()
        .map(|row| {
            Polynomial::from_terms(
                vars,
                row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| {
                    let mut e = vec![0u32; vars.len()];
                    e[j] = 1;
                    (e, c.clone())
                }),
            )
        })
        .collect()
}

fn invert(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            linalg::solve(m, &e).ok_or_else(|| Error::invalid("the frame change is singular"))
        })
        .collect::<Result<_>>()?;
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

fn frame_map(space: &SectionSpace, frame: &LocalFrame) -> Result<FrameMap> {
    let vars = space.vars();
    let (t, local, vertex) = match (&frame.point, space.ambient) {
        (SectionPoint::P2(q), Ambient::P2(_)) => {
            let c = q.coords();
            let i = c.iter().position(|x| !x.is_zero()).unwrap();
            let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
            let m = frame.change.clone().unwrap_or([
                [Rational::one(), Rational::zero()],
                [Rational::zero(), Rational::one()],
            ]);
            let mut t = vec![vec![Rational::zero(); 3]; 3];
            t[i][i] = Rational::one();
            for (a, &ja) in others.iter().enumerate() {
                t[ja][i] = c[ja].clone();
                for (b, &jb) in others.iter().enumerate() {
                    t[ja][jb] = m[a][b].clone();
                }
            }
            (t, [others[0], others[1]], vec![i])
        }
        (SectionPoint::P1xP1(q), Ambient::P1xP1(..)) => {
            if frame.change.is_some() {
                return Err(Error::invalid(
                    "linear changes of local coordinates are supported on P2 only",
                ));
            }
            let c = q.coords();
            let mut t = vec![vec![Rational::zero(); 4]; 4];
            let mut local = [0; 2];
            let mut vertex = Vec::new();
            for f in 0..2 {
                let (p0, p1) = (2 * f, 2 * f + 1);
                let (i, j) = if c[p0].is_zero() { (p1, p0) } else { (p0, p1) };
                t[i][i] = Rational::one();
                t[j][j] = Rational::one();
                t[j][i] = &c[j] / &c[i];
                local[f] = j;
                vertex.push(i);
            }
            (t, local, vertex)
        }
        _ => return Err(Error::invalid("point does not lie on the ambient of the space")),
    };
    let tinv = invert(&t)?;
    Ok(FrameMap {
        forward: linear_subs(vars, &t),
        inverse: linear_subs(vars, &tinv),
        local,
        vertex,
    })
}

/// A zero-dimensional monomial ideal in the two local coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    generators: Vec<(u32, u32)>,
}

fn minimalize(mut v: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    v.sort();
    v.dedup();
    let keep: Vec<(u32, u32)> = v
        .iter()
        .filter(|&&(a, b)| !v.iter().any(|&(c, d)| (c, d) != (a, b) && c <= a && d <= b))
        .copied()
        .collect();
    keep
}

impl MonomialIdeal {
    pub fn new(generators: &[(u32, u32)]) -> Result<Self> {
        let g = minimalize(generators.to_vec());
        let pure_u = g.iter().any(|&(_, b)| b == 0);
        let pure_v = g.iter().any(|&(a, _)| a == 0);
        if !pure_u || !pure_v {
            return Err(Error::invalid("the monomial ideal is not zero-dimensional"));
        }
        Ok(MonomialIdeal { generators: g })
    }

    pub fn maximal() -> Self {
        MonomialIdeal {
            generators: vec![(0, 1), (1, 0)],
        }
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            generators: vec![(0, 0)],
        }
    }

    pub fn generators(&self) -> &[(u32, u32)] {
        &self.generators
    }

    pub fn pow(&self, m: u32) -> Self {
        let mut acc = vec![(0u32, 0u32)];
        for _ in 0..m {
            let mut next = Vec::new();
            for &(a, b) in &acc {
                for &(c, d) in &self.generators {
                    next.push((a + c, b + d));
                }
            }
            acc = minimalize(next);
        }
        MonomialIdeal { generators: acc }
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.generators.iter().any(|&(c, d)| a >= c && b >= d)
    }

    /// One more than the largest degree of a monomial outside the ideal.
    pub fn truncation(&self) -> u32 {
        let amax = self.generators.iter().map(|g| g.0).max().unwrap_or(0);
        let bmax = self.generators.iter().map(|g| g.1).max().unwrap_or(0);
        let mut top = 0;
        for a in 0..=amax {
            for b in 0..=bmax {
                if !self.contains(a, b) {
                    top = top.max(a + b + 1);
                }
            }
        }
        top
    }
}

#[derive(Debug, Clone)]
enum LevelRule {
    Divisor { form: Polynomial, degrees: Vec<u32> },
    Frame { inverse: Vec<Polynomial>, local: [usize; 2], ideal: MonomialIdeal },
}

/// A decreasing filtration `W₀ = H⁰ ⊇ W₁ ⊇ …` of a section space.
#[derive(Debug, Clone)]
pub struct Filtration {
    space: SectionSpace,
    rule: LevelRule,
    dims: Vec<usize>,
}

impl Filtration {
    pub fn space(&self) -> &SectionSpace {
        &self.space
    }

    /// Level dimensions, ending with the first zero level.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of nonzero levels.
    pub fn depth(&self) -> usize {
        self.dims.len() - 1
    }

    fn members(&self, m: usize) -> Vec<Vec<u32>> {
        match &self.rule {
            LevelRule::Divisor { degrees, .. } => {
                let shifted: Vec<i64> = self
                    .space
                    .ambient
                    .degrees()
                    .iter()
                    .zip(degrees)
                    .map(|(&n, &d)| n as i64 - m as i64 * d as i64)
                    .collect();
                match self.space.ambient.with_degrees(&shifted) {
                    Some(a) => a.monomials(),
                    None => Vec::new(),
                }
            }
            LevelRule::Frame { local, ideal, .. } => {
                let power = ideal.pow(m as u32);
                self.space
                    .basis
                    .iter()
                    .filter(|e| power.contains(e[local[0]], e[local[1]]))
                    .cloned()
                    .collect()
            }
        }
    }

    /// Independent rows spanning level `m`, as coefficient vectors.
    pub fn level(&self, m: usize) -> Matrix {
        let vars = self.space.vars().to_vec();
        let members = self.members(m);
        members
            .iter()
            .map(|e| {
                let mono = Polynomial::monomial(&vars, e.clone(), Rational::one());
                let section = match &self.rule {
                    LevelRule::Divisor { form, .. } => &mono * &form.pow(m as u32),
                    LevelRule::Frame { inverse, .. } => mono.compose(inverse),
                };
                self.space.coefficients(&section).expect("level sections lie in the space")
            })
            .collect()
    }

    /// Level `m` in reduced row echelon form.
    pub fn reduced_level(&self, m: usize) -> Matrix {
        linalg::row_basis(&self.level(m))
    }

    /// All nonzero levels, built concurrently under `exec`.
    pub fn levels(&self, exec: Exec) -> Vec<Matrix> {
        par::map_range(exec, 0, self.depth(), |m| self.level(m))
    }

    /// Largest `m` with `v ∈ W_m`.
    pub fn tag(&self, v: &[Rational]) -> usize {
        (1..self.depth())
            .rev()
            .find(|&m| linalg::in_span(v, &self.level(m)))
            .unwrap_or(0)
    }
}

fn finish(space: &SectionSpace, rule: LevelRule) -> Filtration {
    let mut f = Filtration {
        space: space.clone(),
        rule,
        dims: Vec::new(),
    };
    let mut m = 0;
    loop {
        let d = f.members(m).len();
        f.dims.push(d);
        if d == 0 {
            break;
        }
        m += 1;
    }
    f
}

/// Level `i` = sections divisible by `fⁱ`, i.e. H⁰(NA − iD).
pub fn filtration_by_divisor(space: &SectionSpace, form: &Polynomial) -> Result<Filtration> {
    let form = form.reindex(space.vars())?;
    if form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degrees: Vec<u32> = match space.ambient {
        Ambient::P2(_) => vec![form
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous(format!(": `{form}`")))?],
        Ambient::P1xP1(..) => {
            let c = crate::local::BiCurve::new(&form)?;
            let (a, b) = c.bidegree();
            vec![a, b]
        }
    };
    if degrees.iter().all(|&d| d == 0) {
        return Err(Error::invalid("the divisor must have positive degree"));
    }
    if degrees.iter().zip(space.ambient.degrees()).any(|(&d, n)| d > n) {
        return Err(Error::invalid("divisor degree exceeds the section degree"));
    }
    Ok(finish(space, LevelRule::Divisor { form, degrees }))
}

/// Level `m` = sections whose local expansion at the frame lies in `Iᵐ`.
pub fn filtration_by_monomial_ideal_power(
    space: &SectionSpace,
    frame: &LocalFrame,
    ideal: &MonomialIdeal,
) -> Result<Filtration> {
    let map = frame_map(space, frame)?;
    Ok(finish(
        space,
        LevelRule::Frame {
            inverse: map.inverse,
            local: map.local,
            ideal: ideal.clone(),
        },
    ))
}

/// Level `m` = sections vanishing to order at least `m` at the point.
pub fn filtration_by_point_power(space: &SectionSpace, point: &SectionPoint) -> Result<Filtration> {
    filtration_by_monomial_ideal_power(space, &LocalFrame::at(point.clone()), &MonomialIdeal::maximal())
}

/// Dimension of `{s : the local expansion of s lies in J}` computed as the
/// kernel of the map to Taylor coefficients of order `< truncation` outside
/// `J`. Independent of the level construction; used to cross-check it.
pub fn taylor_level_dim(
    space: &SectionSpace,
    frame: &LocalFrame,
    j: &MonomialIdeal,
    truncation: u32,
) -> Result<usize> {
    let map = frame_map(space, frame)?;
    let vars = space.vars().to_vec();
    let one = Rational::one();
    // Local expansion in (u', v'): s ∘ T with the vertex coordinates set to 1.
    let expansions: Vec<Polynomial> = space
        .basis
        .iter()
        .map(|e| {
            let mut p = Polynomial::monomial(&vars, e.clone(), one.clone()).compose(&map.forward);
            for &i in &map.vertex {
                p = p.eval_var(i, &one);
            }
            p
        })
        .collect();
    let mut conditions: Matrix = Vec::new();
    for deg in 0..truncation {
        for a in 0..=deg {
            let b = deg - a;
            if j.contains(a, b) {
                continue;
            }
            let row: Vec<Rational> = expansions
                .iter()
                .map(|p| {
                    let mut e = vec![0u32; vars.len()];
                    e[map.local[0]] = a;
                    e[map.local[1]] = b;
                    p.coefficient(&e)
                })
                .collect();
            conditions.push(row);
        }
    }
    Ok(space.dim() - linalg::rank(&conditions))
}

/// What a finite-N beta approximant is measured against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Divisor(Polynomial),
    Point(SectionPoint),
    Ideal { frame: LocalFrame, ideal: MonomialIdeal },
}

fn filtration_for(space: &SectionSpace, target: &Target) -> Result<Filtration> {
    match target {
        Target::Divisor(f) => filtration_by_divisor(space, f),
        Target::Point(p) => filtration_by_point_power(space, p),
        Target::Ideal { frame, ideal } => filtration_by_monomial_ideal_power(space, frame, ideal),
    }
}

/// `Σ_{m≥1} dim W_m / (N · dim W₀)` on H⁰(N·A).
pub fn beta_finite_n(kind: AmbientKind, a: &[u32], target: &Target, n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("N must be positive"));
    }
    let space = h0_basis(kind.scaled(a, n)?);
    let f = filtration_for(&space, target)?;
    Ok(beta_from_dims(f.dims(), n))
}

pub(crate) fn beta_from_dims(dims: &[usize], n: u32) -> Rational {
    let total: usize = dims[1..].iter().sum();
    Rational::new(total.into(), (n as usize * dims[0]).into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: u32,
    #[serde(serialize_with = "crate::algebra::rational::ser")]
    pub beta: Rational,
}

/// `β_N` for each `N` in `ns`, evaluated independently under `exec`.
pub fn beta_sweep(
    kind: AmbientKind,
    a: &[u32],
    target: &Target,
    ns: &[u32],
    exec: Exec,
) -> Result<Vec<SweepRow>> {
    par::map(exec, ns, |&n| {
        beta_finite_n(kind, a, target, n).map(|beta| SweepRow { n, beta })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use num_traits::Signed;

    fn p2pt(x: i64, y: i64, z: i64) -> SectionPoint {
        SectionPoint::P2(ProjPoint::from_ints(x, y, z).unwrap())
    }

    fn form(s: &str, kind: AmbientKind) -> Polynomial {
        let vars = kind.vars();
        Polynomial::parse_in_names(s, &vars).unwrap()
    }

    #[test]
    fn bases() {
        assert_eq!(h0_basis(Ambient::P2(1)).dim(), 3);
        assert_eq!(h0_basis(Ambient::P2(3)).dim(), 10);
        assert_eq!(h0_basis(Ambient::P1xP1(2, 2)).dim(), 9);
        assert!(Ambient::new(AmbientKind::P2, &[-1]).is_err());
    }

    #[test]
    fn divisor_filtrations() {
        let s = h0_basis(Ambient::P2(3));
        let f = filtration_by_divisor(&s, &form("z", AmbientKind::P2)).unwrap();
        assert_eq!(f.dims(), &[10, 6, 3, 1, 0]);
        let s = h0_basis(Ambient::P2(2));
        let f = filtration_by_divisor(&s, &form("x^2 + y^2 - z^2", AmbientKind::P2)).unwrap();
        assert_eq!(f.dims(), &[6, 1, 0]);
        let s = h0_basis(Ambient::P1xP1(1, 1));
        let f = filtration_by_divisor(&s, &form("x0*y0 + x1*y1", AmbientKind::P1xP1)).unwrap();
        assert_eq!(f.dims(), &[4, 1, 0]);
        assert!(filtration_by_divisor(&h0_basis(Ambient::P2(1)), &form("z^2", AmbientKind::P2)).is_err());
    }

    #[test]
    fn point_filtrations() {
        let s = h0_basis(Ambient::P2(1));
        let f = filtration_by_point_power(&s, &p2pt(0, 0, 1)).unwrap();
        assert_eq!(f.dims(), &[3, 2, 0]);
        let lvl = f.reduced_level(1);
        assert_eq!(lvl.len(), 2);
        let z = s.coefficients(&form("z", AmbientKind::P2)).unwrap();
        assert!(!linalg::in_span(&z, &lvl));
        let s = h0_basis(Ambient::P2(2));
        let f = filtration_by_point_power(&s, &p2pt(0, 0, 1)).unwrap();
        assert_eq!(f.dims(), &[6, 5, 3, 0]);
        let s = h0_basis(Ambient::P1xP1(1, 1));
        let q = SectionPoint::P1xP1(BiPoint::affine(int(2), int(-3)));
        let f = filtration_by_point_power(&s, &q).unwrap();
        assert_eq!(f.dims(), &[4, 3, 1, 0]);
        // The order-2 level is the product of the two rulings through Q.
        let rulings = form("(x1 - 2*x0)*(y1 + 3*y0)", AmbientKind::P1xP1);
        assert!(linalg::in_span(&s.coefficients(&rulings).unwrap(), &f.level(2)));
    }

    #[test]
    fn levels_vanish_where_claimed() {
        let s = h0_basis(Ambient::P2(3));
        let q = ProjPoint::from_ints(1, 2, 3).unwrap();
        let f = filtration_by_point_power(&s, &SectionPoint::P2(q.clone())).unwrap();
        for m in 0..f.depth() {
            for row in f.level(m) {
                let c = crate::local::PlaneCurve::new(&s.to_polynomial(&row)).unwrap();
                assert!(crate::local::vanishing_order(&c, &q) >= m as u32);
            }
        }
    }

    #[test]
    fn monomial_ideals() {
        let i = MonomialIdeal::new(&[(1, 0), (0, 2)]).unwrap();
        let i2 = i.pow(2);
        assert_eq!(i2.generators(), &[(0, 4), (1, 2), (2, 0)]);
        assert_eq!(i.truncation(), 2);
        assert_eq!(i2.truncation(), 4);
        assert!(MonomialIdeal::new(&[(1, 1)]).is_err());
        let s = h0_basis(Ambient::P2(2));
        let frame = LocalFrame::at(p2pt(0, 0, 1));
        let f = filtration_by_monomial_ideal_power(&s, &frame, &i).unwrap();
        assert_eq!(f.dims()[1], 4);
        let g = filtration_by_monomial_ideal_power(&s, &frame, &MonomialIdeal::maximal()).unwrap();
        let h = filtration_by_point_power(&s, &p2pt(0, 0, 1)).unwrap();
        assert_eq!(g.dims(), h.dims());
    }

    #[test]
    fn taylor_cross_check() {
        let i = MonomialIdeal::new(&[(1, 0), (0, 2)]).unwrap();
        let s = h0_basis(Ambient::P2(4));
        let frame = LocalFrame {
            point: p2pt(1, -1, 2),
            change: Some([[int(1), int(1)], [int(0), int(2)]]),
        };
        let f = filtration_by_monomial_ideal_power(&s, &frame, &i).unwrap();
        for m in 0..f.dims().len() {
            let j = i.pow(m as u32);
            let t = j.truncation();
            let d = taylor_level_dim(&s, &frame, &j, t).unwrap();
            assert_eq!(d, f.dims()[m]);
            assert_eq!(taylor_level_dim(&s, &frame, &j, t + 2).unwrap(), d);
        }
    }

    #[test]
    fn finite_betas() {
        let line = Target::Divisor(form("z", AmbientKind::P2));
        for n in 1..=8 {
            assert_eq!(beta_finite_n(AmbientKind::P2, &[1], &line, n).unwrap(), rat(1, 3));
        }
        let pt = Target::Point(p2pt(0, 0, 1));
        assert_eq!(beta_finite_n(AmbientKind::P2, &[1], &pt, 2).unwrap(), rat(2, 3));
        let q = Target::Point(SectionPoint::P1xP1(BiPoint::affine(int(1), int(1))));
        let b = beta_finite_n(AmbientKind::P1xP1, &[1, 1], &q, 6).unwrap();
        assert!((b - int(1)).abs() <= rat(2, 6));
    }

    #[test]
    fn sweep_strategies_agree() {
        let pt = Target::Point(p2pt(1, 1, 1));
        let ns: Vec<u32> = (1..=6).collect();
        let a = beta_sweep(AmbientKind::P2, &[1], &pt, &ns, Exec::Sequential).unwrap();
        let b = beta_sweep(AmbientKind::P2, &[1], &pt, &ns, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.beta == rat(2, 3)));
    }
}
