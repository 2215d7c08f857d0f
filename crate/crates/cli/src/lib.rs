//! Command implementations behind the `lorentz2d` binary.
//!
//! Exit codes: 0 success, 1 identity verification failed, 2 invalid input,
//! 3 nothing to draw. Every error prints a single line starting with `error:`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use lorentz2d::diagram::render_pair_with_events;
use lorentz2d::identities::{run_identity_suite, Families, SuiteConfig};
use lorentz2d::scenario_file::{BranchName, InfinityWord, TransformSpec, VelSpec};
use lorentz2d::{classify_geometric, DiagramStyle, Metric, Scenario, Transform, TwoVector};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_EMPTY_RENDER: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Kinematics(#[from] lorentz2d::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Kinematics(lorentz2d::Error::EmptyWindow) => EXIT_EMPTY_RENDER,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lorentz2d",
    version,
    about = "Both branches of 1+1D Lorentz transformations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map a vector through Λ(τ,K,V) or L(τ,K,W).
    Transform(TransformArgs),
    /// Report coordinate speed and interval class of a displacement.
    Classify(ClassifyArgs),
    /// Multiply two family transforms and refit the product.
    Compose(ComposeArgs),
    /// Run the identity suite and print maximal residuals.
    Verify(VerifyArgs),
    /// Write a pair of SVG Minkowski diagrams.
    Diagram(DiagramArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Lambda,
    L,
}

fn parse_vec(s: &str) -> Result<TwoVector, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `c1,c2`, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("invalid number `{t}`"))
    };
    Ok(TwoVector::new(parse(a)?, parse(b)?))
}

fn parse_vel(s: &str) -> Result<VelSpec, String> {
    if s.eq_ignore_ascii_case("infinity") || s.eq_ignore_ascii_case("inf") {
        return Ok(VelSpec::Word(InfinityWord::Infinity));
    }
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .map(VelSpec::Number)
        .ok_or_else(|| format!("invalid velocity `{s}`"))
}

/// `branch:tau:k:vel`, e.g. `l:-1:1:2` or `lambda:1:-1:infinity`.
fn parse_transform_spec(s: &str) -> Result<TransformSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [branch, tau, k, vel] = parts[..] else {
        return Err(format!("expected `branch:tau:k:vel`, got `{s}`"));
    };
    let branch = match branch {
        "lambda" => BranchName::Lambda,
        "l" => BranchName::L,
        other => return Err(format!("unknown branch `{other}`")),
    };
    let tau = tau.parse().map_err(|_| format!("invalid tau `{tau}`"))?;
    let k = k
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| format!("invalid k `{k}`"))?;
    Ok(TransformSpec {
        branch,
        tau,
        k,
        vel: parse_vel(vel)?,
    })
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub branch: BranchArg,
    #[arg(long, allow_negative_numbers = true)]
    pub tau: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub k: f64,
    /// Velocity parameter, or `infinity` for the negative-K limit of lambda.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vel)]
    pub vel: VelSpec,
}

impl FamilyArgs {
    pub fn spec(&self) -> TransformSpec {
        let branch = match self.branch {
            BranchArg::Lambda => BranchName::Lambda,
            BranchArg::L => BranchName::L,
        };
        TransformSpec {
            branch,
            tau: self.tau,
            k: self.k,
            vel: self.vel,
        }
    }
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Vector `c1,c2`.
    #[arg(long = "vec", allow_hyphen_values = true, value_parser = parse_vec)]
    pub vector: TwoVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    /// diag(1, -1)
    Standard,
    /// diag(-1, 1)
    #[value(alias = "eta")]
    Swapped,
}

impl MetricArg {
    fn metric(self) -> Metric {
        match self {
            MetricArg::Standard => Metric::STANDARD,
            MetricArg::Swapped => Metric::SWAPPED,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long = "vec", allow_hyphen_values = true, value_parser = parse_vec)]
    pub vector: TwoVector,
    #[arg(long, value_enum, default_value = "standard")]
    pub metric: MetricArg,
}

#[derive(Debug, Args)]
pub struct ComposeArgs {
    /// Applied second, as `branch:tau:k:vel`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_transform_spec)]
    pub first: TransformSpec,
    /// Applied first, as `branch:tau:k:vel`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_transform_spec)]
    pub second: TransformSpec,
    /// K used when refitting the product to a family.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub refit_k: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random displacements per transform.
    #[arg(long, default_value_t = 100_000)]
    pub trials: usize,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct DiagramSource {
    /// One of fig2, fig3, fig4.
    #[arg(long, group = "source")]
    pub builtin: Option<String>,
    /// Scenario JSON file.
    #[arg(long, group = "source")]
    pub scenario: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub source: DiagramSource,
    /// Output prefix; writes `<prefix>-original.svg` and `<prefix>-transformed.svg`.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 600)]
    pub width: u32,
    #[arg(long, default_value_t = 600)]
    pub height: u32,
    #[arg(long, default_value_t = 6)]
    pub decimals: usize,
    #[arg(long, default_value = "blue")]
    pub particle_color: String,
    #[arg(long, default_value = "red")]
    pub lightray_color: String,
}

/// Shortest round-trip decimal, with `-0` printed as `0`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x}")
    }
}

pub fn cmd_transform(args: &TransformArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let t = args.family.spec().build()?;
    let y = t.apply(args.vector);
    let _ = writeln!(out, "{},{}", format_number(y.c1), format_number(y.c2));
    Ok(())
}

pub fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let report = classify_geometric(args.vector, &args.metric.metric())?;
    let _ = writeln!(out, "coord_speed: {}", report.coord_speed);
    let _ = writeln!(out, "coord_superluminal: {}", report.coord_superluminal);
    let _ = writeln!(out, "interval_sq: {}", format_number(report.interval_sq));
    let _ = writeln!(out, "causal_class: {}", report.causal_class);
    let _ = writeln!(
        out,
        "geometric_superluminal: {}",
        report.geometric_superluminal()
    );
    Ok(())
}

pub fn cmd_compose(args: &ComposeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = args.first.build()?;
    let b = args.second.build()?;
    let product = a.compose(&b);
    let [[m00, m01], [m10, m11]] = product.matrix().0;
    let f = format_number;
    let _ = writeln!(
        out,
        "matrix: [[{}, {}], [{}, {}]]",
        f(m00),
        f(m01),
        f(m10),
        f(m11)
    );
    let _ = writeln!(out, "det: {}", f(product.det()));
    match product.refit(args.refit_k) {
        Some(fit) => {
            let _ = writeln!(out, "fit: {}", family_label(&fit));
        }
        None => {
            let _ = writeln!(out, "fit: none");
        }
    }
    Ok(())
}

fn family_label(t: &Transform) -> String {
    let p = t.params().expect("refit returns a family transform");
    let name = match t.branch() {
        lorentz2d::BranchKind::SymmetricLambda => "lambda",
        lorentz2d::BranchKind::AntisymmetricL => "l",
        lorentz2d::BranchKind::Derived => "derived",
    };
    format!(
        "{name} tau={} k={} vel={}",
        p.tau,
        format_number(p.k),
        p.vel
    )
}

/// Runs the identity suite with the given constructors; returns the exit code.
pub fn cmd_verify(args: &VerifyArgs, families: &Families, out: &mut dyn Write) -> u8 {
    let config = SuiteConfig {
        seed: args.seed,
        trials: args.trials,
    };
    let report = run_identity_suite(families, &config);
    let _ = writeln!(out, "seed={} trials={}", config.seed, config.trials);
    let _ = write!(out, "{report}");
    if report.all_passed() {
        let _ = writeln!(out, "result: PASS");
        EXIT_OK
    } else {
        let _ = writeln!(out, "result: FAIL");
        EXIT_VERIFY_FAILED
    }
}

fn load_scenario(source: &DiagramSource) -> Result<Scenario, CliError> {
    match (&source.builtin, &source.scenario) {
        (Some(name), _) => Scenario::builtin(name).ok_or_else(|| {
            CliError::Input(format!(
                "unknown builtin scenario `{name}` (expected fig2, fig3, fig4)"
            ))
        }),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Scenario::from_json(&text)?)
        }
        (None, None) => Err(CliError::Input(
            "either --builtin or --scenario is required".into(),
        )),
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

pub fn cmd_diagram(args: &DiagramArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let scenario = load_scenario(&args.source)?;
    let style = DiagramStyle {
        width: args.width,
        height: args.height,
        particle_color: args.particle_color.clone(),
        lightray_color: args.lightray_color.clone(),
        decimal_places: args.decimals,
        ..DiagramStyle::default()
    };
    let (original, transformed) = render_pair_with_events(&scenario, &style)?;
    for (suffix, doc) in [
        ("-original.svg", original),
        ("-transformed.svg", transformed),
    ] {
        let path = with_suffix(&args.out, suffix);
        fs::write(&path, doc.to_string()).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let _ = writeln!(out, "wrote {}", path.display());
    }
    Ok(())
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Transform(a) => cmd_transform(a, out),
        Command::Classify(a) => cmd_classify(a, out),
        Command::Compose(a) => cmd_compose(a, out),
        Command::Verify(a) => return cmd_verify(a, &Families::default(), out),
        Command::Diagram(a) => cmd_diagram(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {message}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("lorentz2d").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn transform_l_branch() {
        let (code, out, _) = run_args(&[
            "transform",
            "--branch",
            "l",
            "--tau",
            "-1",
            "--k",
            "1",
            "--vel",
            "2",
            "--vec",
            "2,1",
        ]);
        assert_eq!(code, 0);
        let (a, b) = out.trim().split_once(',').unwrap();
        assert_eq!(a, "0");
        assert!((b.parse::<f64>().unwrap() - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn transform_identity_and_domain_error() {
        let (code, out, _) = run_args(&[
            "transform",
            "--branch",
            "lambda",
            "--tau",
            "1",
            "--k",
            "1",
            "--vel",
            "0",
            "--vec",
            "3,4",
        ]);
        assert_eq!((code, out.as_str()), (0, "3,4\n"));

        let (code, _, err) = run_args(&[
            "transform",
            "--branch",
            "lambda",
            "--tau",
            "1",
            "--k",
            "1",
            "--vel",
            "1",
            "--vec",
            "1,0",
        ]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.starts_with("error: domain error"));
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn transform_infinite_limit() {
        let (code, out, _) = run_args(&[
            "transform",
            "--branch",
            "lambda",
            "--tau",
            "1",
            "--k",
            "-1",
            "--vel",
            "infinity",
            "--vec",
            "1,0",
        ]);
        assert_eq!((code, out.as_str()), (0, "0,-1\n"));
    }

    #[test]
    fn classify_examples() {
        let (code, out, _) = run_args(&["classify", "--vec", "2,1", "--metric", "standard"]);
        assert_eq!(code, 0);
        assert!(out.contains("coord_speed: 0.5\n"));
        assert!(out.contains("interval_sq: 3\n"));
        assert!(out.contains("causal_class: Timelike\n"));

        let (_, out, _) = run_args(&["classify", "--vec", "1,1", "--metric", "standard"]);
        assert!(out.contains("causal_class: Lightlike"));

        let (_, out, _) = run_args(&["classify", "--vec", "1,3", "--metric", "standard"]);
        assert!(out.contains("causal_class: Spacelike"));
        assert!(out.contains("coord_superluminal: true"));
        assert!(out.contains("interval_sq: -8\n"));

        let (code, _, err) = run_args(&["classify", "--vec", "0,0"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn classify_swapped_metric_vertical() {
        let (_, out, _) = run_args(&[
            "classify",
            "--vec",
            "0,1.7320508075688772",
            "--metric",
            "eta",
        ]);
        assert!(out.contains("coord_speed: inf"));
        assert!(out.contains("coord_superluminal: true"));
        assert!(out.contains("causal_class: Timelike"));
    }

    #[test]
    fn compose_refits() {
        let (code, out, _) = run_args(&["compose", "--first", "l:-1:1:2", "--second", "l:-1:1:3"]);
        assert_eq!(code, 0);
        let fit = out.lines().find(|l| l.starts_with("fit: ")).unwrap();
        assert!(
            fit.starts_with("fit: lambda tau=1 k=1 vel=0.71428571428571"),
            "{fit}"
        );

        let (_, out, _) = run_args(&[
            "compose",
            "--first",
            "lambda:1:1:0.5",
            "--second",
            "l:-1:1:2",
        ]);
        assert!(out.contains("fit: none") || out.contains("fit: l"));
    }

    #[test]
    fn spec_parsing_errors() {
        assert!(parse_transform_spec("l:-1:1").is_err());
        assert!(parse_transform_spec("x:-1:1:2").is_err());
        assert!(parse_vec("1;2").is_err());
        assert!(parse_vec("nan,2").is_err());
        assert_eq!(parse_vec("-2, 1").unwrap(), TwoVector::new(-2.0, 1.0));
    }

    #[test]
    fn verify_small_run_passes() {
        let (code, out, _) = run_args(&["verify", "--trials", "1000", "--seed", "1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("result: PASS\n"));
    }
}
