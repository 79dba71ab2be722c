use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Parser)]
#[command(name = "dpt", version, about = "Positivity invariants and hypothesis checks for integral points on surfaces")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    /// Seed for coordinate changes and sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Interval refinement floor, as a positive rational.
    #[arg(long, global = true)]
    pub precision: Option<String>,
    /// Run the full sweep where a command has one.
    #[arg(long, global = true)]
    pub deep: bool,
    /// Record wall-clock time in the report. Reports then stop being
    /// byte-reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
    /// TOML file supplying defaults for the global flags.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Beta constant of a divisor class against another.
    Beta(BetaArgs),
    /// Beta constant at a general point.
    BetaPoint(ClassArgs),
    /// Seshadri constant at a general point.
    Seshadri(ClassArgs),
    /// Zariski decomposition of a pseudo-effective class.
    Zariski(ZariskiArgs),
    /// Closed-form lower bounds for beta constants.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Local intersection multiplicity of two plane curves at a point.
    Mult(MultArgs),
    /// Intersection profile of two plane curves.
    Profile(PairArgs),
    /// Common points of three plane curves.
    Triple(TripleArgs),
    /// Finite-N section oracle.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Local and global heights of a point relative to a curve.
    Height(HeightArgs),
    /// Gcd height of a point relative to two curves.
    GcdHeight(GcdHeightArgs),
    /// Integrality defect outside a set of places.
    Defect(DefectArgs),
    /// Ledger of the main inequality on sampled points.
    Probe(ProbeArgs),
    /// log gcd(a^n - 1, b^n - 1) / n for n up to a bound.
    Bcz(BczArgs),
    /// Hypothesis checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Bounded solution searches.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Replay the pinned regression table.
    Regress,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    /// p2, p1xp1, hirzebruch:n, bl-p2:k, bl-p1xp1:1, bl-hirzebruch:n, hyp-p3:d.
    #[arg(long)]
    pub surface: String,
    /// Coordinates of A, comma separated.
    #[arg(long = "A", value_name = "COORDS")]
    pub a: String,
    /// Coordinates of V, comma separated.
    #[arg(long = "V", value_name = "COORDS")]
    pub v: String,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[arg(long)]
    pub surface: String,
    #[arg(long = "A", value_name = "COORDS")]
    pub a: String,
}

#[derive(Debug, Args)]
pub struct ZariskiArgs {
    #[arg(long)]
    pub surface: String,
    #[arg(long = "D", value_name = "COORDS")]
    pub d: String,
}

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    /// m betaD + n betaE.
    Lcm {
        #[arg(long)]
        beta_d: String,
        #[arg(long)]
        beta_e: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// betaD + eps / (r + 1).
    Seshadri {
        #[arg(long)]
        beta_d: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        r: u32,
    },
    /// (r / (r + 1)) (vol / mu)^(1/r).
    Multsimple {
        #[arg(long)]
        vol: String,
        #[arg(long)]
        mu: i64,
        #[arg(long, default_value_t = 2)]
        r: u32,
    },
    /// The two-sided bound from the volume and D^2.
    Multineq {
        #[arg(long)]
        vol: String,
        #[arg(long)]
        d2: String,
        #[arg(long)]
        mu: i64,
    },
    /// Closed form for a twisted exceptional divisor.
    Exclemma {
        #[arg(long)]
        dn: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        delta: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
}

#[derive(Debug, Args)]
pub struct MultArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
    /// Point as x:y:z.
    #[arg(long)]
    pub at: String,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(long)]
    pub f1: String,
    #[arg(long)]
    pub f2: String,
    #[arg(long)]
    pub f3: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AmbientArg {
    P2,
    P1xp1,
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// beta_N from explicit section spaces.
    Beta {
        #[arg(long, value_enum, default_value = "p2")]
        ambient: AmbientArg,
        /// Degree of A: `d` on P2, `a,b` on P1xP1.
        #[arg(long = "A", value_name = "DEGREES")]
        a: Option<String>,
        /// `line:i` (the i-th coordinate, from 0), `divisor:<form>`, or
        /// `point:x:y:z` (P2) / `point:x0:x1,y0:y1` (P1xP1).
        #[arg(long)]
        target: String,
        #[arg(long = "N", value_name = "N")]
        n: u32,
        /// Emit beta_k for every k from 1 to N.
        #[arg(long)]
        sweep: bool,
    },
}

#[derive(Debug, Args)]
pub struct HeightArgs {
    #[arg(long = "D", value_name = "FORM")]
    pub d: String,
    /// Point as x:y:z with rational entries.
    #[arg(long = "P", value_name = "POINT")]
    pub p: String,
}

#[derive(Debug, Args)]
pub struct GcdHeightArgs {
    #[arg(long = "D", value_name = "FORM")]
    pub d: String,
    #[arg(long = "E", value_name = "FORM")]
    pub e: String,
    #[arg(long = "P", value_name = "POINT")]
    pub p: String,
    /// Comma-separated places such as `inf,2,3`; all places when omitted.
    #[arg(long)]
    pub places: Option<String>,
}

#[derive(Debug, Args)]
pub struct DefectArgs {
    #[arg(long = "D", value_name = "FORM")]
    pub d: String,
    #[arg(long = "P", value_name = "POINT")]
    pub p: String,
    #[arg(long)]
    pub places: String,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    /// TOML probe configuration. Without it the coordinate-line ledger is
    /// sampled on S-units for {2, 3}.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Slack for the built-in ledger; a config file sets its own.
    #[arg(long, default_value_t = 1e-6)]
    pub epsilon: f64,
    /// Extra points, x:y:z, may repeat.
    #[arg(long = "point")]
    pub points: Vec<String>,
    /// Keep only the summary and exceedances.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Debug, Args)]
pub struct BczArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[arg(long)]
    pub nmax: u32,
    /// Also write the rows to this CSV file.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Three plane curves and the 4/9 intersection condition.
    P2Triple(TripleArgs),
    /// Gcd inequality hypotheses at a chosen pair.
    Gcd {
        #[command(flatten)]
        curves: TripleArgs,
        /// 1-based pair, e.g. `1,2`.
        #[arg(long)]
        pair: String,
        /// Multipliers making the classes parallel, e.g. `1,1,2`.
        #[arg(long, default_value = "1,1,1")]
        mult: String,
    },
    /// Beta-constant hypotheses for three parallel curves.
    NonGeneral {
        #[command(flatten)]
        curves: TripleArgs,
        #[arg(long, value_enum, default_value = "p2")]
        ambient: AmbientArg,
        #[arg(long, default_value = "1,1,1")]
        mult: String,
    },
    /// Degree conditions for the unit equation family.
    UnitFamily {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
        #[arg(long)]
        f3: String,
    },
    /// Conditions for F(a^n, b^n, z) = 0.
    ExpEq {
        #[arg(long = "F", value_name = "FORM")]
        f: String,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SearchCmd {
    /// u f1(t) + v f2(t) = f3(t) with S-unit u, v and S-integral t.
    UnitFamily {
        #[arg(long, default_value = "1")]
        f1: String,
        #[arg(long, default_value = "1")]
        f2: String,
        #[arg(long, default_value = "1")]
        f3: String,
        #[arg(long, default_value = "2,3")]
        primes: String,
        #[arg(long, default_value_t = 8)]
        ebound: u32,
        #[arg(long, default_value_t = 100)]
        tbound: u64,
    },
}
