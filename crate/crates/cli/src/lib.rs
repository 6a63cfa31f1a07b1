//! Command-line front end: parses algebra documents, dispatches to the
//! library, and renders reports.
//!
//! Exit codes: 0 when every check passes, 1 when a valid run finds a failing
//! check or an unmet precondition, 2 for usage and parse errors.

pub mod document;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cohomlie::cochain::combinations;
use cohomlie::linalg::is_zero_vector;
use cohomlie::{
    build_extension, check_equivalence, check_linear_generator, compare_cohomology,
    compatible_cohomology, derivation_space, ext_class, is_extensible, is_mc_pair, obstruction,
    obstruction_class, operator_bracket, plain_cohomology, verify_operator,
    verify_order_p, verify_representation, verify_structure, Cochain, CompatibleHomLieAlgebra,
    HomLieStructure, LinearGenerator, OperatorKind, OrderPDeformation, Representation,
};
use serde_json::{json, Value};

use crate::document::{format_matrix, format_vector, table_of, Algebra, AlgebraDocument, DocumentError};
use crate::report::{dimensions_json, validation_json, ReportDocument};

#[derive(Parser, Debug)]
#[command(name = "cohomlie", version, about = "Exact computations for compatible Hom-Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Flavor {
    /// Chevalley–Eilenberg cohomology of a single bracket.
    Plain,
    /// Cohomology of the compatible complex.
    Compatible,
    /// Compatible cohomology next to the cohomology of the sum bracket.
    Compare,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the algebra axioms (and the representation, if given).
    Verify { file: PathBuf },
    /// Cohomology dimensions in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Defaults to `compatible` for two brackets and `plain` for one.
        #[arg(long, value_enum)]
        flavor: Option<Flavor>,
    },
    /// Derivations, inner derivations and the first cohomology.
    Derivations { file: PathBuf },
    /// Check a Nijenhuis operator and report its deformed brackets.
    Nijenhuis {
        file: PathBuf,
        #[arg(long)]
        operator: Option<String>,
    },
    /// Check a Rota-Baxter operator and report its induced brackets.
    RotaBaxter {
        file: PathBuf,
        #[arg(long)]
        operator: Option<String>,
    },
    /// Check the identities of a truncated deformation.
    DeformVerify { file: PathBuf },
    /// Obstruction to extending a truncated deformation by one order.
    DeformObstruct { file: PathBuf },
    /// Build the abelian extension of a cocycle.
    ExtensionBuild { file: PathBuf },
    /// Class of an extension, and equivalence with a second cocycle if given.
    ExtensionClassify { file: PathBuf },
    /// Maurer–Cartan equations for the bracket pair.
    McCheck { file: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Cohomology { .. } => "cohomology",
            Command::Derivations { .. } => "derivations",
            Command::Nijenhuis { .. } => "nijenhuis",
            Command::RotaBaxter { .. } => "rota-baxter",
            Command::DeformVerify { .. } => "deform-verify",
            Command::DeformObstruct { .. } => "deform-obstruct",
            Command::ExtensionBuild { .. } => "extension-build",
            Command::ExtensionClassify { .. } => "extension-classify",
            Command::McCheck { .. } => "mc-check",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Verify { file }
            | Command::Cohomology { file, .. }
            | Command::Derivations { file }
            | Command::Nijenhuis { file, .. }
            | Command::RotaBaxter { file, .. }
            | Command::DeformVerify { file }
            | Command::DeformObstruct { file }
            | Command::ExtensionBuild { file }
            | Command::ExtensionClassify { file }
            | Command::McCheck { file } => file,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid document: {0}")]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Library(#[from] cohomlie::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(cohomlie::Error::Precondition { .. })
            | CliError::Library(cohomlie::Error::Contract(_)) => 1,
            _ => 2,
        }
    }
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                exit_code: code,
                stdout: if code == 0 { e.to_string() } else { String::new() },
                stderr: if code == 0 { String::new() } else { e.to_string() },
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let path = cli.command.file();
    let input = match std::fs::read(path) {
        Ok(bytes) => bytes,
        Err(source) => {
            let e = CliError::Io {
                path: path.display().to_string(),
                source,
            };
            return failure(&e);
        }
    };
    let name = cli.command.name();
    let (exit_code, results) = match execute(&cli.command, &input) {
        Ok(pair) => pair,
        Err(e) if e.exit_code() == 2 => return failure(&e),
        Err(e) => (1, error_json(&e)),
    };
    let report = ReportDocument::new(name, &input, exit_code, results);
    Outcome {
        exit_code,
        stdout: match cli.format {
            Format::Machine => report.machine(),
            Format::Human => report.human(),
        },
        stderr: String::new(),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        exit_code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn error_json(e: &CliError) -> Value {
    let mut out = json!({ "error": e.to_string() });
    if let CliError::Library(lib) = e {
        if let Some(r) = lib.report() {
            out["report"] = validation_json(r);
        }
    }
    out
}

type Run = Result<(i32, Value), CliError>;

fn status(passed: bool) -> i32 {
    if passed {
        0
    } else {
        1
    }
}

fn execute(command: &Command, input: &[u8]) -> Run {
    let text = std::str::from_utf8(input).map_err(|_| CliError::Usage("input is not UTF-8".into()))?;
    let doc = AlgebraDocument::parse(text)?;
    let algebra = doc.algebra()?;
    match command {
        Command::Verify { .. } => verify(&doc, &algebra),
        Command::Cohomology { degree, flavor, .. } => cohomology(&doc, &algebra, *degree, *flavor),
        Command::Derivations { .. } => derivations(&doc, &algebra),
        Command::Nijenhuis { operator, .. } => operator_command(&doc, &algebra, operator.as_deref(), false),
        Command::RotaBaxter { operator, .. } => operator_command(&doc, &algebra, operator.as_deref(), true),
        Command::DeformVerify { .. } => deform_verify(&doc, &algebra),
        Command::DeformObstruct { .. } => deform_obstruct(&doc, &algebra),
        Command::ExtensionBuild { .. } => extension_build(&doc, &algebra),
        Command::ExtensionClassify { .. } => extension_classify(&doc, &algebra),
        Command::McCheck { .. } => mc_check(&algebra),
    }
}

fn compatible_only<'a>(algebra: &'a Algebra, what: &str) -> Result<&'a CompatibleHomLieAlgebra, CliError> {
    match algebra {
        Algebra::Compatible(c) => Ok(c),
        Algebra::Plain(_) => Err(CliError::Usage(format!("{what} needs two brackets"))),
    }
}

fn verify(doc: &AlgebraDocument, algebra: &Algebra) -> Run {
    let structure = match algebra {
        Algebra::Plain(l) => verify_structure(l),
        Algebra::Compatible(c) => verify_structure(c),
    };
    let mut passed = structure.passed();
    let mut results = json!({ "structure": validation_json(&structure) });
    if doc.representation.is_some() {
        let rep = doc.representation(algebra)?;
        let r = match algebra {
            Algebra::Plain(l) => verify_representation(l, &rep)?,
            Algebra::Compatible(c) => verify_representation(c, &rep)?,
        };
        passed &= r.passed();
        results["representation"] = validation_json(&r);
    }
    Ok((status(passed), results))
}

fn cohomology(doc: &AlgebraDocument, algebra: &Algebra, degree: usize, flavor: Option<Flavor>) -> Run {
    let rep = doc.representation(algebra)?;
    let flavor = flavor.unwrap_or(match algebra {
        Algebra::Plain(_) => Flavor::Plain,
        Algebra::Compatible(_) => Flavor::Compatible,
    });
    let results = match (flavor, algebra) {
        (Flavor::Plain, Algebra::Plain(l)) => {
            json!({ "flavor": "plain", "dimensions": dimensions_json(&plain_cohomology(l, &rep, degree)?.dimensions()) })
        }
        (Flavor::Plain, Algebra::Compatible(_)) => {
            return Err(CliError::Usage("plain cohomology needs a single bracket; use --flavor compare".into()))
        }
        (Flavor::Compatible, _) => {
            let c = compatible_only(algebra, "compatible cohomology")?;
            json!({ "flavor": "compatible", "dimensions": dimensions_json(&compatible_cohomology(c, &rep, degree)?.dimensions()) })
        }
        (Flavor::Compare, _) => {
            let c = compatible_only(algebra, "comparison")?;
            let (compat, sum) = compare_cohomology(c, &rep, degree)?;
            json!({
                "flavor": "compare",
                "compatible": dimensions_json(&compat),
                "sum": dimensions_json(&sum),
            })
        }
    };
    Ok((0, results))
}

/// Duplicates a one-bracket representation so it acts on the pair `(l, l)`.
fn doubled(rep: &Representation) -> Result<Representation, CliError> {
    if rep.bracket_count() == 2 {
        return Ok(rep.clone());
    }
    let table = rep.action_table(0).to_vec();
    Ok(Representation::new(rep.beta().clone(), vec![table.clone(), table])?)
}

fn derivations(doc: &AlgebraDocument, algebra: &Algebra) -> Run {
    let rep = doubled(&doc.representation(algebra)?)?;
    let c = algebra.as_compatible();
    let report = verify_structure(&c);
    if !report.passed() {
        return Err(cohomlie::Error::Precondition {
            message: "algebra is not valid".into(),
            report: Some(Box::new(report)),
        }
        .into());
    }
    let space = derivation_space(&c, &rep)?;
    let h1 = compatible_cohomology(&c, &rep, 1)?.dim_cohomology;
    Ok((
        0,
        json!({
            "derivations": space.derivations.iter().map(format_matrix).collect::<Vec<_>>(),
            "inner": space.inner.iter().map(format_matrix).collect::<Vec<_>>(),
            "outer_dimension": space.outer_dim,
            "first_cohomology": h1,
        }),
    ))
}

fn operator_command(doc: &AlgebraDocument, algebra: &Algebra, name: Option<&str>, rota_baxter: bool) -> Run {
    let (name, op) = doc.operator(name)?;
    match (&op.kind, rota_baxter) {
        (OperatorKind::Nijenhuis, false) | (OperatorKind::RotaBaxter(_), true) => {}
        _ => {
            return Err(CliError::Usage(format!(
                "operator `{name}` is not a {} operator",
                if rota_baxter { "Rota-Baxter" } else { "Nijenhuis" }
            )))
        }
    }
    let report = match algebra {
        Algebra::Plain(l) => verify_operator(l, &op)?,
        Algebra::Compatible(c) => verify_operator(c, &op)?,
    };
    let mut results = json!({ "operator": name, "identities": validation_json(&report) });
    if let Some(w) = op.weight() {
        results["weight"] = json!(w.to_string());
    }
    if report.passed() {
        let brackets: Vec<Cochain> = match algebra {
            Algebra::Plain(l) => vec![operator_bracket(l.bracket(), &op).as_cochain().clone()],
            Algebra::Compatible(c) => c.brackets().iter().map(|b| operator_bracket(b, &op).as_cochain().clone()).collect(),
        };
        results["induced_brackets"] = json!(brackets.iter().map(table_of).collect::<Vec<_>>());
        if let (OperatorKind::Nijenhuis, Algebra::Compatible(c)) = (&op.kind, algebra) {
            if verify_structure(c).passed() {
                let g = LinearGenerator::new(brackets[0].clone(), brackets[1].clone());
                let r = check_linear_generator(c, &g)?;
                results["generates_linear_deformation"] = json!(r.generates());
            }
        }
    }
    Ok((status(report.passed()), results))
}

fn deformation(doc: &AlgebraDocument, algebra: &Algebra) -> Result<OrderPDeformation, CliError> {
    let c = compatible_only(algebra, "a deformation")?;
    let (h1, h2) = doc.deformation_coefficients()?;
    Ok(OrderPDeformation::new(c, h1, h2)?)
}

fn deform_verify(doc: &AlgebraDocument, algebra: &Algebra) -> Run {
    let d = deformation(doc, algebra)?;
    let report = verify_order_p(&d)?;
    let levels: Vec<Value> = report
        .levels
        .iter()
        .map(|l| {
            json!({
                "power": l.n,
                "passed": l.passed(),
                "identities_vanish": l.identities.iter().map(Cochain::is_zero).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok((
        status(report.passed()),
        json!({
            "order": report.order,
            "passed": report.passed(),
            "first_failure": report.first_failure(),
            "levels": levels,
        }),
    ))
}

/// Nonzero values of a cochain of any arity, by increasing index tuple.
fn cochain_entries(f: &Cochain) -> Vec<Value> {
    combinations(f.source_dim(), f.arity())
        .into_iter()
        .filter_map(|t| {
            let v = f.on_basis(&t);
            (!is_zero_vector(&v)).then(|| json!({ "indices": t, "value": format_vector(&v) }))
        })
        .collect()
}

fn deform_obstruct(doc: &AlgebraDocument, algebra: &Algebra) -> Run {
    let d = deformation(doc, algebra)?;
    let ob = obstruction(&d)?;
    let class = obstruction_class(&d)?;
    let next = is_extensible(&d)?;
    let mut results = json!({
        "order": d.order(),
        "obstruction": ob.components().iter().map(cochain_entries).collect::<Vec<_>>(),
        "class": format_vector(&class),
        "extensible": next.is_some(),
    });
    if let Some((t1, t2)) = &next {
        results["next_coefficients"] = json!([table_of(t1), table_of(t2)]);
    }
    Ok((status(next.is_some()), results))
}

fn extension_build(doc: &AlgebraDocument, algebra: &Algebra) -> Run {
    let c = compatible_only(algebra, "an extension")?;
    let rep = doc.representation(algebra)?;
    let (z, _) = doc.extension_cocycles(algebra)?;
    let e = build_extension(c, &rep, &z)?;
    let total = AlgebraDocument::from_algebra(&Algebra::Compatible(e.total().clone()));
    Ok((
        0,
        json!({
            "total": serde_json::to_value(&total).expect("documents serialize"),
            "inclusion": format_matrix(e.inclusion()),
            "projection": format_matrix(e.projection()),
            "splitting": format_matrix(e.splitting()),
            "class": format_vector(&ext_class(&e)?),
        }),
    ))
}

fn extension_classify(doc: &AlgebraDocument, algebra: &Algebra) -> Run {
    let c = compatible_only(algebra, "an extension")?;
    let rep = doc.representation(algebra)?;
    let (z, compare) = doc.extension_cocycles(algebra)?;
    let e = build_extension(c, &rep, &z)?;
    let h2 = compatible_cohomology(c, &rep, 2)?.dim_cohomology;
    let mut results = json!({
        "second_cohomology": h2,
        "class": format_vector(&ext_class(&e)?),
    });
    let mut exit = 0;
    if let Some(zp) = compare {
        let ep = build_extension(c, &rep, &zp)?;
        let phi = check_equivalence(&e, &ep)?;
        results["compare_class"] = json!(format_vector(&ext_class(&ep)?));
        results["equivalent"] = json!(phi.is_some());
        if let Some(phi) = phi {
            results["isomorphism"] = json!(format_matrix(&phi));
        } else {
            exit = 1;
        }
    }
    Ok((exit, results))
}

fn mc_check(algebra: &Algebra) -> Run {
    let d = algebra.dim();
    let (m1, m2) = match algebra {
        Algebra::Plain(l) => (l.bracket().as_cochain().clone(), Cochain::zero(2, d, d)),
        Algebra::Compatible(c) => (c.bracket1().as_cochain().clone(), c.bracket2().as_cochain().clone()),
    };
    let report = is_mc_pair(&m1, &m2, algebra.alpha(), None)?;
    let names = ["[pi1,pi1]", "[pi2,pi2]", "[pi1,pi2]"];
    let residuals: Vec<Value> = names
        .iter()
        .zip(&report.residuals)
        .map(|(n, r)| json!({ "name": n, "vanishes": r.is_zero(), "entries": cochain_entries(r) }))
        .collect();
    Ok((status(report.is_mc()), json!({ "maurer_cartan": report.is_mc(), "residuals": residuals })))
}
