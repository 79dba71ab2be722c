use std::sync::Arc;

use serde::Serialize;

use super::{DivisorClass, SurfaceModel};
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SurfaceKind {
    P2,
    P1xP1,
    Hirzebruch(u32),
    BlowupP2(u32),
    BlowupP1xP1,
    /// `F_n` blown up at a point off the negative section, `n >= 1`.
    BlowupHirzebruch(u32),
    HypersurfaceP3(u32),
    Custom,
}

fn unsupported(surface: &str, detail: impl Into<String>) -> Error {
    Error::UnsupportedParameter {
        surface: surface.to_string(),
        detail: detail.into(),
    }
}

fn one_param(name: &str, params: &[i64]) -> Result<i64> {
    match params {
        [p] => Ok(*p),
        _ => Err(unsupported(name, format!("expected one parameter, got {}", params.len()))),
    }
}

fn no_params(name: &str, params: &[i64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(unsupported(name, "takes no parameters"))
    }
}

fn hirzebruch(n: u32) -> SurfaceModel {
    let n = n as i64;
    SurfaceModel::build(
        format!("Hirzebruch({n})"),
        SurfaceKind::Hirzebruch(n as u32),
        &["C0", "f"],
        vec![vec![-n, 1], vec![1, 0]],
        &[&[0, 1], &[1, n]],
        &[&[1, 0], &[0, 1]],
    )
}

fn blowup_p1xp1() -> SurfaceModel {
    SurfaceModel::build(
        "BlowupP1xP1(1)".into(),
        SurfaceKind::BlowupP1xP1,
        &["f1", "f2", "E"],
        vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]],
        &[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1]],
        &[&[0, 0, 1], &[1, 0, -1], &[0, 1, -1]],
    )
}

/// Looks up a catalogued surface. Names are matched case-insensitively.
pub fn catalogue(name: &str, params: &[i64]) -> Result<Arc<SurfaceModel>> {
    let key = name.to_ascii_lowercase();
    let s = match key.as_str() {
        "p2" => {
            no_params(name, params)?;
            SurfaceModel::build(
                "P2".into(),
                SurfaceKind::P2,
                &["H"],
                vec![vec![1]],
                &[&[1]],
                &[&[1]],
            )
        }
        "p1xp1" => {
            no_params(name, params)?;
            SurfaceModel::build(
                "P1xP1".into(),
                SurfaceKind::P1xP1,
                &["f1", "f2"],
                vec![vec![0, 1], vec![1, 0]],
                &[&[1, 0], &[0, 1]],
                &[&[1, 0], &[0, 1]],
            )
        }
        "hirzebruch" => {
            let n = one_param(name, params)?;
            if !(0..=64).contains(&n) {
                return Err(unsupported(name, "n must lie in 0..=64"));
            }
            hirzebruch(n as u32)
        }
        "blowupp2" => match one_param(name, params)? {
            0 => return catalogue("P2", &[]),
            1 => SurfaceModel::build(
                "BlowupP2(1)".into(),
                SurfaceKind::BlowupP2(1),
                &["H", "E"],
                vec![vec![1, 0], vec![0, -1]],
                &[&[1, 0], &[1, -1]],
                &[&[0, 1], &[1, -1]],
            ),
            2 => SurfaceModel::build(
                "BlowupP2(2)".into(),
                SurfaceKind::BlowupP2(2),
                &["H", "E1", "E2"],
                vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]],
                &[&[1, 0, 0], &[1, -1, 0], &[1, 0, -1]],
                &[&[0, 1, 0], &[0, 0, 1], &[1, -1, -1]],
            ),
            k => return Err(unsupported(name, format!("at most 2 points, got {k}"))),
        },
        "blowupp1xp1" => {
            if one_param(name, params)? != 1 {
                return Err(unsupported(name, "only one point is supported"));
            }
            blowup_p1xp1()
        }
        "blowuphirzebruch" => {
            let n = one_param(name, params)?;
            match n {
                0 => blowup_p1xp1(),
                1..=64 => SurfaceModel::build(
                    format!("BlowupHirzebruch({n})"),
                    SurfaceKind::BlowupHirzebruch(n as u32),
                    &["C0", "f", "E"],
                    vec![vec![-n, 1, 0], vec![1, 0, 0], vec![0, 0, -1]],
                    &[&[0, 1, 0], &[1, n, 0], &[1, n, -1]],
                    &[&[1, 0, 0], &[0, 1, -1], &[0, 0, 1]],
                ),
                _ => return Err(unsupported(name, "n must lie in 0..=64")),
            }
        }
        "hypersurfacep3" => {
            let d = one_param(name, params)?;
            if d < 1 {
                return Err(unsupported(name, "degree must be positive"));
            }
            SurfaceModel::build(
                format!("HypersurfaceP3({d})"),
                SurfaceKind::HypersurfaceP3(d as u32),
                &["H"],
                vec![vec![d]],
                &[&[1]],
                &[&[1]],
            )
        }
        _ => return Err(Error::UnknownSurface(name.to_string())),
    };
    Ok(Arc::new(s))
}

/// Parses a command-line descriptor: `p2`, `p1xp1`, `hirzebruch:n`,
/// `bl-p2:k`, `bl-p1xp1:1`, `bl-hirzebruch:n`, `hyp-p3:d`.
pub fn parse_descriptor(s: &str) -> Result<Arc<SurfaceModel>> {
    let (head, param) = match s.trim().split_once(':') {
        Some((h, p)) => {
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad surface parameter in `{s}`")))?;
            (h.trim(), Some(p))
        }
        None => (s.trim(), None),
    };
    let name = match head.to_ascii_lowercase().as_str() {
        "p2" => "P2",
        "p1xp1" => "P1xP1",
        "hirzebruch" => "Hirzebruch",
        "bl-p2" => "BlowupP2",
        "bl-p1xp1" => "BlowupP1xP1",
        "bl-hirzebruch" => "BlowupHirzebruch",
        "hyp-p3" => "HypersurfaceP3",
        _ => return Err(Error::UnknownSurface(s.to_string())),
    };
    let params: Vec<i64> = param.into_iter().collect();
    catalogue(name, &params)
}

/// The blowup of a catalogued surface at a general point. The basis of the
/// result extends the basis of `s` by the exceptional class `E`.
pub fn blow_up_point(s: &SurfaceModel) -> Result<Arc<SurfaceModel>> {
    match s.kind() {
        SurfaceKind::P2 => catalogue("BlowupP2", &[1]),
        SurfaceKind::P1xP1 => catalogue("BlowupP1xP1", &[1]),
        SurfaceKind::Hirzebruch(n) => catalogue("BlowupHirzebruch", &[n as i64]),
        _ => Err(Error::UnsupportedBlowup(s.name().to_string())),
    }
}

/// `π*D` on a blowup produced by [`blow_up_point`].
pub fn pullback(d: &DivisorClass, blowup: &Arc<SurfaceModel>) -> Result<DivisorClass> {
    let expected = blow_up_point(d.surface())?;
    if *expected != **blowup {
        return Err(Error::SurfaceMismatch(
            expected.name().to_string(),
            blowup.name().to_string(),
        ));
    }
    let mut c = d.coords().to_vec();
    c.push(Rational::from_integer(0.into()));
    blowup.class(c)
}

/// The exceptional class of a one-point blowup from [`blow_up_point`].
pub fn exceptional(blowup: &Arc<SurfaceModel>) -> DivisorClass {
    let mut c = vec![Rational::from_integer(0.into()); blowup.rank()];
    *c.last_mut().unwrap() = Rational::from_integer(1.into());
    blowup.class(c).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    const ENTRIES: &[(&str, &[i64])] = &[
        ("P2", &[]),
        ("P1xP1", &[]),
        ("Hirzebruch", &[0]),
        ("Hirzebruch", &[1]),
        ("Hirzebruch", &[3]),
        ("BlowupP2", &[1]),
        ("BlowupP2", &[2]),
        ("BlowupP1xP1", &[1]),
        ("BlowupHirzebruch", &[1]),
        ("BlowupHirzebruch", &[2]),
        ("HypersurfaceP3", &[4]),
    ];

    #[test]
    fn every_entry_validates() {
        for (n, p) in ENTRIES {
            catalogue(n, p).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn lattice_data() {
        let q = catalogue("P1xP1", &[]).unwrap();
        assert_eq!(q.intersection_matrix(), &[vec![0, 1], vec![1, 0]]);
        let h = catalogue("HypersurfaceP3", &[6]).unwrap();
        assert_eq!(h.rank(), 1);
        let a = h.class_int(&[1]).unwrap();
        assert_eq!(a.self_intersection(), int(6));
        let f1 = catalogue("BlowupP2", &[1]).unwrap();
        assert_eq!(f1.negative_curves().len(), 1);
        assert_eq!(f1.negative_curve(0), &[int(0), int(1)]);
    }

    #[test]
    fn descriptors_and_errors() {
        assert_eq!(parse_descriptor("bl-p2:2").unwrap().name(), "BlowupP2(2)");
        assert_eq!(parse_descriptor("hyp-p3:5").unwrap().name(), "HypersurfaceP3(5)");
        assert!(matches!(parse_descriptor("k3"), Err(Error::UnknownSurface(_))));
        assert!(matches!(
            catalogue("BlowupP2", &[3]),
            Err(Error::UnsupportedParameter { .. })
        ));
        assert!(matches!(catalogue("P2", &[1]), Err(Error::UnsupportedParameter { .. })));
    }

    #[test]
    fn blowups() {
        let p2 = catalogue("P2", &[]).unwrap();
        assert_eq!(blow_up_point(&p2).unwrap().name(), "BlowupP2(1)");
        let q = catalogue("P1xP1", &[]).unwrap();
        let b = blow_up_point(&q).unwrap();
        let negs: Vec<_> = b.negative_curves().iter().map(|&i| b.effective_generators()[i].clone()).collect();
        assert_eq!(negs.len(), 3);
        for c in &negs {
            assert_eq!(b.pair(c, c), int(-1));
        }
        let f1 = blow_up_point(&p2).unwrap();
        assert!(matches!(blow_up_point(&f1), Err(Error::UnsupportedBlowup(_))));
        let h = q.class_int(&[1, 1]).unwrap();
        let ph = pullback(&h, &b).unwrap();
        let e = exceptional(&b);
        assert_eq!(super::super::intersect(&ph, &e).unwrap(), int(0));
        assert_eq!(e.self_intersection(), int(-1));
    }
}
