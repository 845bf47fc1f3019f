mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use oscpoly::exact::{parse_rational, specialize_g_xpoly, Rational};
use oscpoly::moments::{gram_f, gram_hermite, gram_radial, HermiteGram};
use oscpoly::quadrature::{QuadRule, RuleKind};
use oscpoly::transforms::{Direction, Route, TransformSpec};
use oscpoly::{Error, PolyFamily, Suite, VerifyReport, XPoly};

use render::{Format, ReportFormat};

#[derive(Parser, Debug)]
#[command(
    name = "oscpoly",
    version,
    about = "Exact Hermite/Laguerre oscillator identities"
)]
struct Cli {
    /// Worker threads for verification sweeps (0 = available parallelism).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hermite polynomial H_n(x).
    Hermite(GenerateArgs),
    /// Radial Laguerre polynomial L_n^(g-1/2)(x^2).
    Laguerre(GenerateArgs),
    /// Hermite <-> Laguerre transform.
    Transform(TransformArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Exact Gram matrix.
    Gram(GramArgs),
    /// Gauss quadrature rule.
    Quad(QuadArgs),
}

#[derive(clap::Args, Debug)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Specialize g to a rational value p/q.
    #[arg(long, value_parser = parse_g)]
    g: Option<Rational>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirectionArg {
    LaguerreFromEven,
    LaguerreFromOdd,
    EvenFromLaguerre,
    OddFromLaguerreV1,
    OddFromLaguerreV2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Direct,
    Operator,
}

#[derive(clap::Args, Debug)]
struct TransformArgs {
    #[arg(long, value_enum)]
    direction: DirectionArg,
    #[arg(long, value_enum, default_value_t = RouteArg::Direct)]
    route: RouteArg,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, value_parser = parse_g)]
    g: Option<Rational>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Ladders,
    Transforms,
    Eigen,
    Gram,
    Identities,
    Quadrature,
    All,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, env = "OSCPOLY_MAX_N", default_value_t = oscpoly::suite::DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Pretty)]
    format: ReportFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GramFamily {
    Radial,
    #[value(name = "F")]
    F,
    HermiteHalflineEven,
    HermiteHalflineOdd,
    HermiteFullline,
}

#[derive(clap::Args, Debug)]
struct GramArgs {
    #[arg(long, value_enum)]
    family: GramFamily,
    #[arg(long, env = "OSCPOLY_MAX_N", default_value_t = oscpoly::suite::DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuadKind {
    Hermite,
    Laguerre,
}

#[derive(clap::Args, Debug)]
struct QuadArgs {
    #[arg(long, value_enum)]
    kind: QuadKind,
    /// Number of nodes.
    #[arg(long)]
    m: usize,
    /// Laguerre weight exponent (weight x^alpha e^-x).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Print the rule as a JSON array of [node, weight] pairs.
    #[arg(long)]
    dump: bool,
}

fn parse_g(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Failure classes mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::Parse(_) | Error::Index(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn specialize(p: XPoly, g: &Option<Rational>) -> XPoly {
    match g {
        Some(v) => specialize_g_xpoly(&p, v),
        None => p,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Hermite(a) => {
            let p = specialize(PolyFamily::Hermite.generate(a.n), &a.g);
            render::write_poly(&mut out, &p, a.format)?;
        }
        Command::Laguerre(a) => {
            let p = specialize(PolyFamily::LaguerreRadial.generate(a.n), &a.g);
            render::write_poly(&mut out, &p, a.format)?;
        }
        Command::Transform(a) => {
            let direction = match a.direction {
                DirectionArg::LaguerreFromEven => Direction::LaguerreFromEven,
                DirectionArg::LaguerreFromOdd => Direction::LaguerreFromOdd,
                DirectionArg::EvenFromLaguerre => Direction::EvenFromLaguerre,
                DirectionArg::OddFromLaguerreV1 => Direction::OddFromLaguerreV1,
                DirectionArg::OddFromLaguerreV2 => Direction::OddFromLaguerreV2,
            };
            let route = match a.route {
                RouteArg::Direct => Route::DirectSum,
                RouteArg::Operator => Route::OperatorSeries,
            };
            let p = TransformSpec { direction, route }.apply(a.n)?;
            render::write_poly(&mut out, &specialize(p, &a.g), a.format)?;
        }
        Command::Verify(a) => {
            let suite = match a.suite {
                SuiteArg::Ladders => Suite::Ladders,
                SuiteArg::Transforms => Suite::Transforms,
                SuiteArg::Eigen => Suite::Eigen,
                SuiteArg::Gram => Suite::Gram,
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Quadrature => Suite::Quadrature,
                SuiteArg::All => Suite::All,
            };
            let mut failed = 0usize;
            let mut total = 0usize;
            let mut io_err = None;
            suite.run(a.max_n, |group, reports: Vec<VerifyReport>| {
                if io_err.is_some() {
                    return;
                }
                total += reports.len();
                failed += reports.iter().filter(|r| !r.pass).count();
                let res = render::write_reports(&mut out, group, &reports, a.format)
                    .and_then(|_| out.flush());
                if let Err(e) = res {
                    io_err = Some(e);
                }
            });
            if let Some(e) = io_err {
                return Err(e.into());
            }
            render::write_totals(&mut out, total, failed, a.format)?;
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Gram(a) => {
            let m = match a.family {
                GramFamily::Radial => gram_radial(a.max_n),
                GramFamily::F => gram_f(a.max_n),
                GramFamily::HermiteHalflineEven => gram_hermite(HermiteGram::HalfLineEven, a.max_n),
                GramFamily::HermiteHalflineOdd => gram_hermite(HermiteGram::HalfLineOdd, a.max_n),
                GramFamily::HermiteFullline => gram_hermite(HermiteGram::FullLine, a.max_n),
            };
            render::write_matrix(&mut out, &m, a.format)?;
        }
        Command::Quad(a) => {
            let kind = match a.kind {
                QuadKind::Hermite => RuleKind::GaussHermite,
                QuadKind::Laguerre => RuleKind::GaussLaguerre { alpha: a.alpha },
            };
            let rule = QuadRule::build(kind, a.m)?;
            render::write_rule(&mut out, &rule, a.dump)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(cli)),
        Err(e) => Err(Failure::Runtime(e.to_string())),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!(
                "{}",
                <Cli as clap::CommandFactory>::command().render_usage()
            );
            ExitCode::from(2)
        }
    }
}
