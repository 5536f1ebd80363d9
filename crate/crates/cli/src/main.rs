mod parse;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewschur::identities::{
    gps_consistency, gps_identity, theorem_identity, verify_identity, Identity, Strategy, VerificationReport,
    DEFAULT_BUDGET,
};
use skewschur::num_bigint::BigInt;
use skewschur::overlay::{all_bicoloured, recolour, trace_bicoloured, BicolouredPath, EmbeddedShape, Level, Overlay};
use skewschur::par::Execution;
use skewschur::paths::endpoints;
use skewschur::render::{render_configuration, render_ferrers, render_overlay, FerrersStyle, RenderSpec};
use skewschur::schur::{skew_schur, skew_schur_eval};
use skewschur::{selftest, Partition, SkewShape, StripSpec};

#[derive(Parser)]
#[command(name = "skewschur", version, about = "Skew Schur polynomials, lattice paths and recolouring identities")]
struct Cli {
    /// Report wall time on standard error.
    #[arg(long, global = true)]
    timing: bool,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand or evaluate a skew Schur polynomial.
    Compute {
        /// Skew shape "a,b,c/d,e".
        #[arg(long, value_parser = parse::shape)]
        shape: SkewShape,
        /// Number of variables.
        #[arg(long)]
        vars: u32,
        #[arg(long, value_enum, default_value_t = ComputeMethod::Enum)]
        method: ComputeMethod,
        /// Evaluation point "x1,x2,...", one entry per variable.
        #[arg(long, value_parser = parse::point)]
        point: Option<std::vec::Vec<i64>>,
    },
    /// Starting and ending points of the path family of a shape.
    Endpoints {
        #[arg(long, value_parser = parse::shape)]
        shape: SkewShape,
        /// Number of paths; defaults to the length of the outer partition.
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long)]
        vars: u32,
    },
    /// Trace bicoloured paths in an overlay and swap their colours.
    Recolour {
        /// Overlay JSON file.
        #[arg(long)]
        overlay: PathBuf,
        /// Coloured point "x,level" a path starts from; repeatable.
        #[arg(long, value_parser = parse::coloured_point, allow_hyphen_values = true, required_unless_present = "all")]
        start: Vec<(i64, Level)>,
        /// Recolour every bicoloured path.
        #[arg(long, conflicts_with = "start")]
        all: bool,
    },
    /// Build and verify the recolouring identity for a product of two shapes.
    IdentityTheorem {
        #[arg(long, value_parser = parse::shape)]
        white: SkewShape,
        #[arg(long, value_parser = parse::shape)]
        black: SkewShape,
        /// Shift of the black family relative to the white one.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long)]
        white_rows: Option<usize>,
        #[arg(long)]
        black_rows: Option<usize>,
        /// Selected inward points "x,level;x,level".
        #[arg(long, value_parser = parse::coloured_points, allow_hyphen_values = true)]
        s: std::vec::Vec<(i64, Level)>,
        #[command(flatten)]
        verify: VerifyArgs,
    },
    /// Build and verify the border-strip identity.
    IdentityGps {
        #[arg(long, value_parser = parse::partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse::partition, default_value = "")]
        mu: Partition,
        /// Strips "t:(r,m);t:(r,m)".
        #[arg(long, value_parser = parse::strips)]
        strips: std::vec::Vec<StripSpec>,
        #[command(flatten)]
        verify: VerifyArgs,
    },
    /// Draw an overlay, its circular configuration, or Ferrers diagrams as SVG.
    Render {
        #[arg(long, required_unless_present = "shapes")]
        overlay: Option<PathBuf>,
        /// Bicoloured paths to highlight, by starting point "x,level;...".
        #[arg(long, value_parser = parse::coloured_points, allow_hyphen_values = true, requires = "overlay")]
        highlight: Option<std::vec::Vec<(i64, Level)>>,
        /// Highlight every bicoloured path.
        #[arg(long, requires = "overlay", conflicts_with = "highlight")]
        all: bool,
        /// Draw the circular configuration with its bicoloured matching instead.
        #[arg(long, requires = "overlay")]
        circle: bool,
        /// Shapes "a/b;c/d" drawn on one board, the first grey.
        #[arg(long, value_parser = parse::shapes, conflicts_with = "overlay")]
        shapes: Option<std::vec::Vec<SkewShape>>,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = 24.0)]
        scale: f64,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in golden checks.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeMethod {
    /// Sum over semistandard tableaux.
    Enum,
    /// Jacobi-Trudi determinant at a point.
    Eval,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMethod {
    Auto,
    Full,
    Multipoint,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of variables; defaults to the largest column height among the terms.
    #[arg(long)]
    vars: Option<u32>,
    #[arg(long, value_enum, default_value_t = VerifyMethod::Auto)]
    method: VerifyMethod,
    /// Evaluation points for multipoint verification.
    #[arg(long, default_value_t = 20)]
    points: usize,
    #[arg(long, env = "SKEWSCHUR_SEED", default_value_t = 42)]
    seed: u64,
    /// Tableau budget for full expansion under `--method auto`.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Include per-point values in the report.
    #[arg(long)]
    verbose: bool,
}

impl VerifyArgs {
    fn strategy(&self) -> Strategy {
        let (count, seed) = (self.points, self.seed);
        match self.method {
            VerifyMethod::Auto => Strategy::Auto { budget: self.budget, count, seed },
            VerifyMethod::Full => Strategy::Full,
            VerifyMethod::Multipoint => Strategy::Multipoint { count, seed },
        }
    }

    fn run(&self, id: &Identity, exec: Execution) -> VerificationReport {
        let mut report = verify_identity(id, self.strategy(), exec);
        if !self.verbose {
            report.values = None;
        }
        report
    }
}

/// What a command prints and how it exits.
enum Outcome {
    Json(Value, bool),
    Text(String),
}

fn big_point(point: &[i64], vars: u32) -> Result<Vec<BigInt>> {
    if point.len() != vars as usize {
        bail!("--point has {} entries but --vars is {vars}", point.len());
    }
    Ok(point.iter().map(|&v| BigInt::from(v)).collect())
}

fn load_overlay(path: &PathBuf) -> Result<Overlay> {
    let text = std::fs::read_to_string(path).with_context(|| format!("--overlay: cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("--overlay: {} is not a valid overlay", path.display()))
}

fn traces(ov: &Overlay, starts: &[(i64, Level)], all: bool, flag: &str) -> Result<Vec<BicolouredPath>> {
    if all {
        return Ok(all_bicoloured(ov)?.0);
    }
    starts
        .iter()
        .map(|&(x, level)| trace_bicoloured(ov, x, level).with_context(|| format!("{flag} {x},{level}")))
        .collect()
}

fn run(command: Command, exec: Execution) -> Result<Outcome> {
    Ok(match command {
        Command::Compute { shape, vars, method, point } => match (method, point) {
            (ComputeMethod::Enum, None) => Outcome::Json(serde_json::to_value(skew_schur(&shape, vars))?, true),
            (ComputeMethod::Enum, Some(p)) => {
                let value = skew_schur(&shape, vars).eval(&big_point(&p, vars)?);
                Outcome::Json(json!({ "shape": shape, "N": vars, "point": p, "value": value.to_string() }), true)
            }
            (ComputeMethod::Eval, Some(p)) => {
                let value = skew_schur_eval(&shape, &big_point(&p, vars)?);
                Outcome::Json(json!({ "shape": shape, "N": vars, "point": p, "value": value.to_string() }), true)
            }
            (ComputeMethod::Eval, None) => bail!("--method eval needs --point"),
        },
        Command::Endpoints { shape, rows, shift, vars } => {
            let rows = rows.unwrap_or(shape.outer().len());
            let e = endpoints(&shape, rows, shift, vars).context("--rows")?;
            Outcome::Json(serde_json::to_value(e)?, true)
        }
        Command::Recolour { overlay, start, all } => {
            let ov = load_overlay(&overlay)?;
            let chosen = traces(&ov, &start, all, "--start")?;
            let out = recolour(&ov, &chosen).context("--start")?;
            Outcome::Json(json!({ "recoloured": chosen, "overlay": out }), true)
        }
        Command::IdentityTheorem { white, black, shift, white_rows, black_rows, s, verify } => {
            let wr = white_rows.unwrap_or(white.outer().len());
            let br = black_rows.unwrap_or(black.outer().len());
            let white = EmbeddedShape::new(white, 0, wr);
            let black = EmbeddedShape::new(black, shift, br);
            let id = theorem_identity(&white, &black, &s, verify.vars).context("--s")?;
            let report = verify.run(&id, exec);
            let ok = report.passed();
            Outcome::Json(json!({ "identity": id, "report": report }), ok)
        }
        Command::IdentityGps { lambda, mu, strips, verify } => {
            let g = gps_identity(&lambda, &mu, &strips).context("--strips")?;
            let agrees = gps_consistency(&lambda, &mu, &strips).context("--strips")?;
            let id = match verify.vars {
                Some(n) => g.identity.clone().with_n(n),
                None => g.identity.clone(),
            };
            let report = verify.run(&id, exec);
            let ok = report.passed() && agrees;
            Outcome::Json(
                json!({ "nu": g.nu, "sigma": g.sigma, "identity": id, "recolouring_agrees": agrees, "report": report }),
                ok,
            )
        }
        Command::Render { overlay, highlight, all, circle, shapes, scale, output } => {
            let spec = RenderSpec::new(scale).context("--scale")?;
            let svg = match (overlay, shapes) {
                (Some(path), _) => {
                    let ov = load_overlay(&path)?;
                    if circle {
                        let (_, matching) = all_bicoloured(&ov)?;
                        render_configuration(ov.configuration(), Some(&matching), &spec)
                    } else {
                        render_overlay(&ov, &traces(&ov, &highlight.unwrap_or_default(), all, "--highlight")?, &spec)
                    }
                }
                (None, Some(shapes)) => {
                    let styled: Vec<_> = shapes
                        .into_iter()
                        .enumerate()
                        .map(|(i, s)| (s, if i == 0 { FerrersStyle::grey() } else { FerrersStyle::black() }))
                        .collect();
                    render_ferrers(&styled, &spec)
                }
                (None, None) => bail!("--overlay or --shapes is required"),
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, &svg).with_context(|| format!("--output: cannot write {}", path.display()))?;
                    Outcome::Json(json!({ "written": path, "bytes": svg.len() }), true)
                }
                None => Outcome::Text(svg),
            }
        }
        Command::Selftest => {
            let cases = selftest::run();
            let ok = cases.iter().all(|c| c.passed);
            Outcome::Json(json!({ "passed": ok, "cases": cases }), ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let started = Instant::now();
    let outcome = run(cli.command, exec);
    if cli.timing {
        eprintln!("elapsed: {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
    }
    match outcome {
        Ok(Outcome::Json(value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("values serialise");
            let _ = writeln!(std::io::stdout(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Text(text)) => {
            let _ = write!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
