use std::path::PathBuf;
use std::sync::Arc;

use dpt_core::algebra::rational::{parse_rational, parse_rational_list};
use dpt_core::algebra::univariate::UniPoly;
use dpt_core::checkers::{
    self, check_exp_equation, check_general_pos, check_non_general, check_non_general_p2,
    check_unit_family, search_unit_family_solutions, CheckOptions, CurveTriple, Holds,
};
use dpt_core::heights::{
    bcz_experiment, divisor_height, gcd_height, integrality_defect, probe_main_inequality,
    Place, PlaceSet, ProbeConfig, RationalProjPoint, SampleConfig,
};
use dpt_core::local::{
    intersection_profile, local_mult, triple_locus, BiCurve, BiPoint, PlaneCurve, ProjPoint,
};
use dpt_core::oracle::{beta_finite_n, beta_sweep, AmbientKind, SectionPoint, Target};
use dpt_core::par::Exec;
use dpt_core::positivity::{self as pos, beta_divisor, beta_point, seshadri_point};
use dpt_core::surface::{blow_up_point, parse_descriptor, zariski_decompose, SurfaceModel};
use dpt_core::{regress, Error, Polynomial, Rational};
use serde::Serialize;
use serde_json::json;

use crate::args::*;
use crate::report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
    #[error("config: {0}")]
    Config(String),
    /// The regression table did not match; the report is still emitted.
    #[error("regression mismatch:\n{}", .1.join("\n"))]
    Mismatch(Box<Report>, Vec<String>),
}

impl CliError {
    /// 2 for violated hypotheses, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_hypothesis_violation() => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Global settings after merging the command line over the config file.
#[derive(Debug, Clone)]
pub struct Settings {
    pub output: OutputFormat,
    pub seed: u64,
    pub floor: Rational,
    pub deep: bool,
    pub exec: Exec,
}

impl Settings {
    fn opts(&self) -> CheckOptions {
        CheckOptions {
            seed: self.seed,
            floor: self.floor.clone(),
        }
    }
}

fn read(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn surface(s: &str) -> CliResult<Arc<SurfaceModel>> {
    Ok(parse_descriptor(s)?)
}

fn class(s: &Arc<SurfaceModel>, coords: &str) -> CliResult<dpt_core::surface::DivisorClass> {
    Ok(s.class(parse_rational_list(coords)?)?)
}

fn rational(s: &str) -> CliResult<Rational> {
    Ok(parse_rational(s)?)
}

fn curve(s: &str) -> CliResult<PlaneCurve> {
    Ok(PlaneCurve::parse(s)?)
}

fn curves(t: &TripleArgs) -> CliResult<[PlaneCurve; 3]> {
    Ok([curve(&t.f1)?, curve(&t.f2)?, curve(&t.f3)?])
}

fn u32_list<const N: usize>(s: &str, what: &str) -> CliResult<[u32; N]> {
    let v: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::invalid(format!("bad {what} `{s}`")))?;
    v.try_into()
        .map_err(|_| Error::invalid(format!("{what} needs {N} entries, got `{s}`")).into())
}

fn places(s: &str) -> CliResult<Vec<Place>> {
    Ok(s.split(',').map(|t| Place::parse(t.trim())).collect::<Result<_, _>>()?)
}

fn primes(s: &str) -> CliResult<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::invalid(format!("bad prime list `{s}`")).into())
}

fn verdict_report(v: &checkers::TheoremVerdict) -> Report {
    Report::new(v).with_verdict(v.holds).with_notes(&v.notes)
}

pub fn run(cmd: &Command, s: &Settings) -> CliResult<Report> {
    match cmd {
        Command::Beta(a) => {
            let x = surface(&a.surface)?;
            let r = beta_divisor(&class(&x, &a.a)?, &class(&x, &a.v)?)?;
            Ok(Report::new(&r).with_table(&r.chambers))
        }
        Command::BetaPoint(a) => {
            let x = surface(&a.surface)?;
            let bl = blow_up_point(&x)?;
            let r = beta_point(&class(&x, &a.a)?, &bl)?;
            Ok(Report::new(&r).with_table(&r.chambers))
        }
        Command::Seshadri(a) => {
            let x = surface(&a.surface)?;
            let bl = blow_up_point(&x)?;
            Ok(Report::new(seshadri_point(&class(&x, &a.a)?, &bl)?))
        }
        Command::Zariski(a) => {
            let x = surface(&a.surface)?;
            let d = class(&x, &a.d)?;
            let z = zariski_decompose(&d)?;
            let verified = z.verify(&d);
            Ok(Report::new(json!({
                "decomposition": z,
                "verified": verified,
                "volume": dpt_core::surface::volume(&d).to_string(),
            })))
        }
        Command::Bound(b) => bound(b, s),
        Command::Mult(m) => {
            let (f, g) = (curve(&m.f)?, curve(&m.g)?);
            let q = ProjPoint::parse(&m.at)?;
            let mult = local_mult(&f, &g, &q)?;
            Ok(Report::new(json!({ "point": q, "multiplicity": mult })))
        }
        Command::Profile(p) => {
            let r = intersection_profile(&curve(&p.f)?, &curve(&p.g)?, s.seed)?;
            Ok(Report::new(&r).with_table(&r.rational_points))
        }
        Command::Triple(t) => {
            let [a, b, c] = curves(t)?;
            Ok(Report::new(triple_locus(&a, &b, &c)?))
        }
        Command::Oracle(OracleCmd::Beta {
            ambient,
            a,
            target,
            n,
            sweep,
        }) => oracle(*ambient, a.as_deref(), target, *n, *sweep, s),
        Command::Height(h) => {
            let r = divisor_height(&curve(&h.d)?, &RationalProjPoint::parse(&h.p)?)?;
            Ok(Report::new(&r).with_table(&r.locals))
        }
        Command::GcdHeight(g) => {
            let set = match &g.places {
                Some(p) => PlaceSet::Only(places(p)?),
                None => PlaceSet::All,
            };
            let p = RationalProjPoint::parse(&g.p)?;
            let v = gcd_height(&curve(&g.d)?, &curve(&g.e)?, &p, &set)?;
            Ok(Report::new(json!({ "point": p, "gcd_height": v })))
        }
        Command::Defect(d) => {
            let p = RationalProjPoint::parse(&d.p)?;
            let v = integrality_defect(&curve(&d.d)?, &p, &places(&d.places)?)?;
            Ok(Report::new(json!({ "point": p, "defect": v })))
        }
        Command::Probe(p) => probe(p, s),
        Command::Bcz(b) => {
            let r = bcz_experiment(b.a, b.b, b.nmax, s.exec)?;
            if let Some(path) = &b.csv {
                write_csv(path, &r.rows)?;
            }
            Ok(Report::new(&r).with_table(&r.rows))
        }
        Command::Check(c) => check(c, s),
        Command::Search(SearchCmd::UnitFamily {
            f1,
            f2,
            f3,
            primes: ps,
            ebound,
            tbound,
        }) => {
            let uni = |t: &str| -> CliResult<UniPoly> {
                Ok(UniPoly::from_polynomial(&Polynomial::parse(t)?)?.0)
            };
            let f = [uni(f1)?, uni(f2)?, uni(f3)?];
            let r = search_unit_family_solutions(&f, &primes(ps)?, *ebound, *tbound, s.exec)?;
            Ok(Report::new(&r)
                .with_table(&r.solutions)
                .note("solutions are complete only inside the searched box"))
        }
        Command::Regress => {
            let r = regress::regress(s.deep, s.exec);
            let deltas = r.deltas();
            let rep = Report::new(&r).with_table(&r.entries);
            if r.passed {
                Ok(rep)
            } else {
                Err(CliError::Mismatch(Box::new(rep), deltas))
            }
        }
    }
}

fn write_csv<T: Serialize>(path: &PathBuf, rows: &[T]) -> CliResult<()> {
    let rows = serde_json::to_value(rows).expect("rows serialize");
    let rows = rows.as_array().cloned().unwrap_or_default();
    let file = std::fs::File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut w = csv::Writer::from_writer(file);
    crate::report::write_rows(&mut w, &rows).map_err(|e| CliError::Io(e.to_string()))?;
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

fn bound(b: &BoundCmd, s: &Settings) -> CliResult<Report> {
    let r = match b {
        BoundCmd::Lcm { beta_d, beta_e, m, n } => {
            serde_json::to_value(pos::bound_betalcm(&rational(beta_d)?, &rational(beta_e)?, *m, *n))
        }
        BoundCmd::Seshadri { beta_d, eps, r } => {
            serde_json::to_value(pos::bound_betaseshadri(&rational(beta_d)?, &rational(eps)?, *r))
        }
        BoundCmd::Multsimple { vol, mu, r } => {
            serde_json::to_value(pos::bound_betamultsimple(&rational(vol)?, *mu, *r, &s.floor)?)
        }
        BoundCmd::Multineq { vol, d2, mu } => {
            serde_json::to_value(pos::bound_betamultineq(&rational(vol)?, &rational(d2)?, *mu, &s.floor)?)
        }
        BoundCmd::Exclemma { dn, gamma, delta, n } => serde_json::to_value(pos::exclemma_closed_form(
            &rational(dn)?,
            &rational(gamma)?,
            &rational(delta)?,
            *n,
        )?),
    };
    Ok(Report::new(r.expect("bounds serialize")))
}

fn oracle_target(kind: AmbientKind, t: &str) -> CliResult<Target> {
    let vars = kind.vars();
    let (head, rest) = t
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("bad target `{t}`")))?;
    match head {
        "line" => {
            let i: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad line index `{rest}`")))?;
            let v = vars
                .get(i)
                .ok_or_else(|| Error::invalid(format!("no coordinate {i}")))?;
            Ok(Target::Divisor(Polynomial::parse_in_names(v, &vars)?))
        }
        "divisor" => Ok(Target::Divisor(Polynomial::parse_in_names(rest, &vars)?)),
        "point" => Ok(Target::Point(match kind {
            AmbientKind::P2 => SectionPoint::P2(ProjPoint::parse(rest)?),
            AmbientKind::P1xP1 => SectionPoint::P1xP1(BiPoint::parse(rest)?),
        })),
        _ => Err(Error::invalid(format!("unknown target kind `{head}`")).into()),
    }
}

fn oracle(ambient: AmbientArg, a: Option<&str>, target: &str, n: u32, sweep: bool, s: &Settings) -> CliResult<Report> {
    let kind = match ambient {
        AmbientArg::P2 => AmbientKind::P2,
        AmbientArg::P1xp1 => AmbientKind::P1xP1,
    };
    let degrees: Vec<u32> = match a {
        Some(a) => a
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::invalid(format!("bad degrees `{a}`")))?,
        None => match kind {
            AmbientKind::P2 => vec![1],
            AmbientKind::P1xP1 => vec![1, 1],
        },
    };
    let t = oracle_target(kind, target)?;
    if sweep {
        let ns: Vec<u32> = (1..=n).collect();
        let rows = beta_sweep(kind, &degrees, &t, &ns, s.exec)?;
        Ok(Report::new(&rows).with_table(&rows))
    } else {
        let b = beta_finite_n(kind, &degrees, &t, n)?;
        Ok(Report::new(json!({ "n": n, "beta": b.to_string() })))
    }
}

fn probe(p: &ProbeArgs, s: &Settings) -> CliResult<Report> {
    let cfg: ProbeConfig = match &p.config {
        Some(path) => toml::from_str(&read(path)?).map_err(|e| CliError::Config(e.to_string()))?,
        None => ProbeConfig::coordinate_lines(
            p.epsilon,
            Some(SampleConfig {
                primes: vec![2, 3],
                max_exponent: 8,
                count: 500,
                seed: s.seed,
            }),
        ),
    };
    let extra: Vec<RationalProjPoint> = p
        .points
        .iter()
        .map(|q| RationalProjPoint::parse(q))
        .collect::<Result<_, _>>()?;
    let mut r = probe_main_inequality(&cfg, &extra, s.exec)?;
    let n = r.entries.len();
    let flagged = r.exceedances.len();
    if p.summary {
        r.entries.clear();
    }
    let mut rep = Report::new(&r).with_table(&r.entries);
    rep = rep.note(format!("{n} points evaluated, {flagged} above 1 + epsilon"));
    Ok(rep)
}

fn check(c: &CheckCmd, s: &Settings) -> CliResult<Report> {
    let opts = s.opts();
    match c {
        CheckCmd::P2Triple(t) => Ok(verdict_report(&check_non_general_p2(&curves(t)?, &opts)?)),
        CheckCmd::Gcd { curves: t, pair, mult } => {
            let [i, j] = u32_list::<2>(pair, "pair")?;
            if i == 0 || j == 0 || i > 3 || j > 3 || i == j {
                return Err(Error::invalid(format!("pair must be two distinct indices in 1..3, got `{pair}`")).into());
            }
            let m = u32_list::<3>(mult, "multipliers")?;
            let v = check_general_pos(&curves(t)?, &m, (i as usize - 1, j as usize - 1), &opts)?;
            Ok(verdict_report(&v))
        }
        CheckCmd::NonGeneral { curves: t, ambient, mult } => {
            let triple = match ambient {
                AmbientArg::P2 => CurveTriple::P2(curves(t)?),
                AmbientArg::P1xp1 => CurveTriple::P1xP1([
                    BiCurve::parse(&t.f1)?,
                    BiCurve::parse(&t.f2)?,
                    BiCurve::parse(&t.f3)?,
                ]),
            };
            let m = u32_list::<3>(mult, "multipliers")?;
            Ok(verdict_report(&check_non_general(&triple, &m, &opts)?))
        }
        CheckCmd::UnitFamily { f1, f2, f3 } => {
            let p = |t: &str| -> CliResult<Polynomial> { Ok(Polynomial::parse(t)?) };
            let r = check_unit_family(&p(f1)?, &p(f2)?, &p(f3)?, &opts)?;
            Ok(verdict_report(&r.verdict).with_result(&r))
        }
        CheckCmd::ExpEq { f, a, b } => {
            let v = check_exp_equation(&Polynomial::parse(f)?, *a, *b)?;
            Ok(verdict_report(&v))
        }
    }
}

/// Exit status for a successful run: 3 when the verdict is borderline.
pub fn success_code(r: &Report) -> i32 {
    match r.verdict {
        Some(Holds::Borderline) => 3,
        _ => 0,
    }
}
