use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use triop::format::{format_g17, format_vertices, parse_triangle};
use triop::geom::shoelace_area;
use triop::torus::division_points;
use triop::verify::{run_suite, Suite, DEFAULT_SEED};
use triop::{ApOperator, CirculantOperator, Error, EtaPair, PqPair, RationalAngle, SphereValue};

use crate::parse::parse_complex;
use crate::svg::{render_svg, SvgScene};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

const DEFAULT_TRIANGLE: &str = "0,0,1,0,0.7,0.8";

#[derive(Debug, Parser)]
#[command(
    name = "triop",
    version,
    about = "Two-parameter operators on triangle triples"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operator to a triangle and print the image record and area ratio.
    Apply {
        #[command(flatten)]
        params: ParamArgs,
        /// Triangle record re_a,im_a,re_b,im_b,re_c,im_c.
        #[arg(long, allow_hyphen_values = true)]
        triangle: String,
    },
    /// Print the classification report of an operator as JSON.
    Classify {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Iterate an area-preserving operator with rational angles.
    Orbit(OrbitArgs),
    /// Print the N-division points of the torus group.
    DivisionPoints {
        #[arg(long)]
        n: u32,
    },
    /// Run a named verification suite.
    Verify {
        /// One of routh, napoleon, identities, torus, area, orbits, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Operator parameters, in the (p, q) chart or the (η, η') chart.
#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "q", conflicts_with_all = ["eta", "etap"])]
    pub p: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "p")]
    pub q: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "etap")]
    pub eta: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "eta", conflicts_with_all = ["p", "q"])]
    pub etap: Option<Complex64>,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Moduli rotation angle in turns, as a fraction such as 1/4.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub theta_x: RationalAngle,
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub theta_y: RationalAngle,
    /// Defaults to theta_y − theta_x.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub theta_yp: Option<RationalAngle>,
    /// Number of steps; defaults to the period.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, allow_hyphen_values = true, default_value = DEFAULT_TRIANGLE)]
    pub triangle: String,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

fn parse_angle(s: &str) -> Result<RationalAngle, Error> {
    s.parse()
}

enum Params {
    Pq(PqPair),
    Eta(EtaPair),
}

impl ParamArgs {
    fn resolve(&self) -> Result<Params, Failure> {
        match (self.p, self.q, self.eta, self.etap) {
            (Some(p), Some(q), None, None) => Ok(Params::Pq(PqPair::new(p, q)?)),
            (None, None, Some(eta), Some(etap)) => Ok(Params::Eta(EtaPair { eta, etap })),
            _ => Err(Failure::Usage(
                "give the operator as --p/--q or as --eta/--etap".into(),
            )),
        }
    }
}

impl Params {
    fn operator(&self) -> CirculantOperator {
        match *self {
            Params::Pq(pq) => CirculantOperator::from_pq(pq),
            Params::Eta(e) => CirculantOperator::from_eta(e),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) | Error::InvalidAngle(msg) => Failure::Usage(msg),
            other => Failure::Domain(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command, out, err),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            code
        }
    }
}

pub fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cmd {
        Command::Apply { params, triangle } => apply(&params, &triangle, out),
        Command::Classify { params } => classify(&params, out),
        Command::Orbit(args) => orbit(&args, out),
        Command::DivisionPoints { n } => divide(n, out),
        Command::Verify { suite, seed } => verify(&suite, seed, out),
    };
    let (code, msg) = match result {
        Ok(()) => return EXIT_OK,
        Err(Failure::Verify) => return EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => (EXIT_USAGE, msg),
        Err(Failure::Domain(e)) => (EXIT_DOMAIN, e.to_string()),
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => return EXIT_OK,
        Err(Failure::Io(e)) => (EXIT_DOMAIN, e.to_string()),
    };
    let _ = writeln!(err, "triop: error: {msg}");
    code
}

fn apply(params: &ParamArgs, triangle: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let op = params.resolve()?.operator();
    let tri = parse_triangle(triangle)?;
    let image = op.apply(&tri);
    writeln!(out, "{}", format_vertices(&image.vertices()))?;
    let ratio = shoelace_area(&image.vertices()) / tri.area();
    writeln!(out, "area_ratio={}", format_g17(ratio))?;
    Ok(())
}

fn classify(params: &ParamArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let params = params.resolve()?;
    let op = params.operator();
    let pq = match params {
        Params::Pq(pq) => Some(pq),
        Params::Eta(_) => None,
    };
    writeln!(out, "{:#}", op.classify().report(&op, pq))?;
    Ok(())
}

fn orbit(args: &OrbitArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let ap = match args.theta_yp {
        Some(yp) => ApOperator::new(args.theta_x, args.theta_y, yp)?,
        None => ApOperator::from_xy(args.theta_x, args.theta_y),
    };
    let start = parse_triangle(&args.triangle)?;
    let steps = args.steps.unwrap_or(ap.period() as usize);
    let orbit = ap.orbit(&start, steps)?;

    let mut csv = String::from("n,re_a,im_a,re_b,im_b,re_c,im_c\n");
    for (k, t) in orbit.iter().enumerate() {
        csv.push_str(&format!("{k},{}\n", format_vertices(&t.vertices())));
    }
    if args.svg.is_none() && args.csv.is_none() {
        write!(out, "{csv}")?;
        return Ok(());
    }
    if let Some(path) = &args.csv {
        fs::write(path, &csv)?;
    }
    if let Some(path) = &args.svg {
        let scene = SvgScene::from_orbit(&orbit).expect("orbit holds the start triple");
        fs::write(path, render_svg(&scene))?;
    }
    writeln!(out, "period={} steps={steps}", ap.period())?;
    Ok(())
}

fn divide(n: u32, out: &mut dyn Write) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    for (k, p) in division_points(n).into_iter().enumerate() {
        let t = match p.t() {
            SphereValue::Infinity => "inf".to_string(),
            SphereValue::Finite(z) => format_g17(z.re),
        };
        writeln!(out, "{k},{t}")?;
    }
    Ok(())
}

fn verify(suite: &str, seed: Option<u64>, out: &mut dyn Write) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let reports = run_suite(suite, seed.unwrap_or(DEFAULT_SEED));
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} passed, {failed} failed", reports.len() - failed)?;
    if failed > 0 {
        return Err(Failure::Verify);
    }
    Ok(())
}
