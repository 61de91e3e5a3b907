//! Command-line front end. [`run`] returns the exit status and the report
//! text instead of printing, so it can be driven from tests.
//!
//! Exit status: 0 when every check passed, 1 when a check failed, 2 for usage,
//! parse and precondition errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Algebra;
use crate::axioms::{check_suite, SUITES};
use crate::classify::{enumerate_ujla, SearchSpec};
use crate::derivations::{check_derivation, derivation, Formula};
use crate::error::{Error, Result};
use crate::format::{load_algebra, load_operator, serialize_algebra, serialize_operator};
use crate::functors::{check_compatibility, commutator, deform, symmetrize, DeformParams};
use crate::identity::{AxiomReport, Semantics};
use crate::linalg::Vector;
use crate::scalar::{FieldSpec, Scalar};
use crate::yang_baxter::{
    build_assoc_yb, build_lie_yb, center, check_braid, check_qybe, classify_params, compose, twist, LieYBParams,
    TensorSquareOperator, YBFamilyParams,
};

#[derive(Debug, Parser)]
#[command(name = "nonassoc", about = "Exact checks on finite-dimensional algebras given by structure constants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check named axiom suites (assoc, lie, jordan, ujla).
    Check {
        file: PathBuf,
        /// Comma-separated suite names.
        #[arg(long, value_delimiter = ',', required = true)]
        axioms: Vec<String>,
        /// Evaluate on every tuple of field elements instead of formally.
        #[arg(long)]
        pointwise: bool,
    },
    /// Print the commutator, circle or deformed algebra.
    Derive {
        file: PathBuf,
        #[arg(long, value_enum)]
        via: Via,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Check [a, b∘c] + [b, c∘a] + [c, a∘b] = 0.
    Compat { file: PathBuf },
    /// Yang–Baxter operators.
    #[command(subcommand)]
    Yb(YbCommand),
    /// Basis of the center of a Lie algebra.
    Center { file: PathBuf },
    /// Build a derivation from two elements and check the Leibniz rule.
    Derivation {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum)]
        formula: FormulaArg,
    },
    /// Enumerate UJLA structures over a small prime field.
    Classify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        pointwise: bool,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum YbCommand {
    /// a⊗b ↦ α·ab⊗1 + β·1⊗ab − γ·a⊗b on a unital algebra.
    Assoc {
        file: PathBuf,
        #[command(flatten)]
        params: FamilyArgs,
        #[arg(long)]
        verify: bool,
        /// Also write the operator file here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// x⊗y ↦ α[x,y]⊗z + y⊗x on a Lie algebra with central z.
    Lie {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Which parameter regime (α, β, γ) falls in.
    Params {
        #[command(flatten)]
        params: FamilyArgs,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Check the braid relation and QYBE for an operator file.
    Verify { file: PathBuf },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Via {
    Commutator,
    Symmetrize,
    Deform,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormulaArg {
    Six,
    Two,
}

/// Outcome of a subcommand that ran to completion.
struct Outcome {
    passed: bool,
    text: String,
}

impl Outcome {
    fn pass(text: String) -> Self {
        Outcome { passed: true, text }
    }
}

/// Runs the command line `args` (without the program name).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("nonassoc")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(o) => (if o.passed { 0 } else { 1 }, o.text),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn read_algebra(path: &Path) -> Result<Algebra> {
    load_algebra(&std::fs::read_to_string(path)?)
}

fn scalar(field: FieldSpec, text: &str) -> Result<Scalar> {
    field.parse_scalar(text)
}

fn family(field: FieldSpec, p: &FamilyArgs) -> Result<YBFamilyParams> {
    Ok(YBFamilyParams::new(
        scalar(field, &p.alpha)?,
        scalar(field, &p.beta)?,
        scalar(field, &p.gamma)?,
    ))
}

fn coords(alg: &Algebra, text: &str) -> Result<Vector> {
    let v = Vector::parse(alg.field(), text)?;
    if v.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: v.dim(),
        });
    }
    Ok(v)
}

/// Renders a report after re-checking every failure witness.
fn render_checked(report: &AxiomReport, alg: &Algebra) -> Result<String> {
    if let Some(bad) = report.failures().find(|v| !v.revalidate(alg)) {
        return Err(Error::Unsupported(format!(
            "witness for {} did not re-validate; refusing to print it",
            bad.name
        )));
    }
    Ok(report.render(alg))
}

fn header(alg: &Algebra) -> String {
    format!("algebra: {alg}\n")
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Check { file, axioms, pointwise } => {
            let alg = read_algebra(&file)?;
            let semantics = if pointwise { Semantics::Pointwise } else { Semantics::Polynomial };
            let mut report = AxiomReport::new(semantics);
            for name in &axioms {
                let r = check_suite(&alg, name.trim(), semantics).ok_or_else(|| {
                    Error::Parse(format!("unknown axiom suite {name:?} (known: {})", SUITES.join(", ")))
                })??;
                report.extend(r);
            }
            let text = format!(
                "{}semantics: {semantics}\n{}",
                header(&alg),
                render_checked(&report, &alg)?
            );
            Ok(Outcome {
                passed: report.passed(),
                text,
            })
        }
        Command::Derive { file, via, alpha, beta } => {
            let alg = read_algebra(&file)?;
            let derived = match via {
                Via::Commutator => commutator(&alg),
                Via::Symmetrize => symmetrize(&alg)?,
                Via::Deform => {
                    let (Some(a), Some(b)) = (alpha, beta) else {
                        return Err(Error::Parse("--via deform needs --alpha and --beta".into()));
                    };
                    let f = alg.field();
                    deform(&alg, &DeformParams::new(scalar(f, &a)?, scalar(f, &b)?))?
                }
            };
            Ok(Outcome::pass(serialize_algebra(&derived)))
        }
        Command::Compat { file } => {
            let alg = read_algebra(&file)?;
            let report = check_compatibility(&alg)?;
            Ok(Outcome {
                passed: report.passed(),
                text: format!("{}{}", header(&alg), render_checked(&report, &alg)?),
            })
        }
        Command::Yb(yb) => dispatch_yb(yb),
        Command::Center { file } => {
            let alg = read_algebra(&file)?;
            let basis = center(&alg)?;
            let mut text = header(&alg);
            writeln!(text, "center dimension: {}", basis.len()).unwrap();
            for v in &basis {
                writeln!(text, "  {}", alg.render(v)).unwrap();
            }
            Ok(Outcome::pass(text))
        }
        Command::Derivation { file, a, b, formula } => {
            let alg = read_algebra(&file)?;
            let (a, b) = (coords(&alg, &a)?, coords(&alg, &b)?);
            let formula = match formula {
                FormulaArg::Six => Formula::SixTerm,
                FormulaArg::Two => Formula::TwoTerm,
            };
            let d = derivation(&alg, &a, &b, formula)?;
            let mut text = header(&alg);
            writeln!(text, "formula: {formula}").unwrap();
            writeln!(text, "a = {}, b = {}", alg.render(&a), alg.render(&b)).unwrap();
            for (k, label) in alg.basis().iter().enumerate() {
                let image = d.apply(&alg.basis_vector(k))?;
                writeln!(text, "D({label}) = {}", alg.render(&image)).unwrap();
            }
            let report = check_derivation(&alg, &d)?;
            text.push_str(&render_checked(&report, &alg)?);
            Ok(Outcome {
                passed: report.passed(),
                text,
            })
        }
        Command::Classify {
            dim,
            prime,
            pointwise,
            output,
        } => {
            let semantics = if pointwise { Semantics::Pointwise } else { Semantics::Polynomial };
            let result = enumerate_ujla(&SearchSpec::new(dim, prime, semantics)?)?;
            let mut text = String::new();
            writeln!(text, "search: {}", result.spec).unwrap();
            writeln!(text, "scanned: {}", result.scanned).unwrap();
            writeln!(text, "ujla: {}", result.ujla_count()).unwrap();
            writeln!(text, "classes: {}", result.class_count()).unwrap();
            for name in crate::axioms::UJLA_NAMES {
                let n = result.rejections.iter().filter(|r| r.identity == name).count();
                writeln!(text, "rejected first by {name}: {n}").unwrap();
            }
            for (class, alg) in result.classes.iter().zip(result.representatives()) {
                writeln!(text, "\n# {} (orbit size {})", alg.name(), class.orbit_size).unwrap();
                text.push_str(&serialize_algebra(&alg));
            }
            if let Some(path) = output {
                std::fs::write(path, &text)?;
            }
            Ok(Outcome::pass(text))
        }
    }
}

fn write_operator(op: &TensorSquareOperator, output: Option<&Path>) -> Result<String> {
    let text = serialize_operator(op);
    if let Some(path) = output {
        std::fs::write(path, &text)?;
    }
    Ok(text)
}

/// Braid verdict and invertibility, then QYBE for `R∘τ` and `τ∘R`. The exit
/// status follows the braid verdict and invertibility.
fn verify_text(op: &TensorSquareOperator) -> (bool, String) {
    let braid = check_braid(op);
    let mut text = braid.to_string();
    let tau = twist(op.field(), op.dim());
    for (label, composed) in [("R∘τ", compose(op, &tau)), ("τ∘R", compose(&tau, op))] {
        let report = check_qybe(&composed.expect("same dimension"));
        let line = report.to_string();
        let first = line.lines().next().unwrap_or_default();
        writeln!(text, "{}", first.replacen("qybe", &format!("qybe({label})"), 1)).unwrap();
    }
    (braid.is_yang_baxter_operator(), text)
}

fn dispatch_yb(command: YbCommand) -> Result<Outcome> {
    match command {
        YbCommand::Assoc {
            file,
            params,
            verify,
            output,
        } => {
            let alg = read_algebra(&file)?;
            let params = family(alg.field(), &params)?;
            let built = build_assoc_yb(&alg, &params)?;
            let mut text = header(&alg);
            for w in &built.warnings {
                writeln!(text, "warning: {w}").unwrap();
            }
            writeln!(text, "case: {}", classify_params(&params)).unwrap();
            text.push_str(&write_operator(&built.operator, output.as_deref())?);
            let mut passed = true;
            if verify {
                let (ok, report) = verify_text(&built.operator);
                passed = ok;
                text.push_str(&report);
            }
            Ok(Outcome { passed, text })
        }
        YbCommand::Lie {
            file,
            alpha,
            z,
            verify,
            output,
        } => {
            let alg = read_algebra(&file)?;
            let params = LieYBParams {
                alpha: scalar(alg.field(), &alpha)?,
                z: coords(&alg, &z)?,
            };
            let op = build_lie_yb(&alg, &params)?;
            let mut text = header(&alg);
            text.push_str(&write_operator(&op, output.as_deref())?);
            let mut passed = true;
            if verify {
                let (ok, report) = verify_text(&op);
                passed = ok;
                text.push_str(&report);
            }
            Ok(Outcome { passed, text })
        }
        YbCommand::Params { params, field } => {
            let field: FieldSpec = field.parse()?;
            let params = family(field, &params)?;
            Ok(Outcome::pass(format!("case: {}\n", classify_params(&params))))
        }
        YbCommand::Verify { file } => {
            let op = load_operator(&std::fs::read_to_string(file)?)?;
            let (passed, text) = verify_text(&op);
            Ok(Outcome {
                passed,
                text: format!("operator: dim {} over {}\n{text}", op.dim(), op.field()),
            })
        }
    }
}
