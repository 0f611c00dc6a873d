//! File-driven front end: one subcommand per library check or construction,
//! with deterministic output for scripting and golden files.
//!
//! Results are printed as a JSON envelope `{diagnostics, payload, status}`
//! with sorted keys; `fca` subcommands can emit raw DOT instead.  The exit
//! code mirrors `status`: 0 ok, 1 law_violation, 2 precondition_error,
//! 3 budget_exceeded, 4 io_error.

mod dispatch;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use galois_kit::error::Error;
use galois_kit::fca::enumerate_concepts;
use galois_kit::files;
use galois_kit::lattice::LatticeSpec;
use galois_kit::operator::{
    apply_induced, boolean_criterion_check, classify_mapping, closure_interior_check,
    compute_adjoint, conjugate_check, decompose_operator, recover_relation, strong_adjoint_check,
    verify_galois, AdjointDirection, DecomposeMode, InducedKind, OperatorTable, RecoverKind,
    DEFAULT_BUDGET,
};
use galois_kit::temporal::{
    check_axioms, check_monadic, frame_correspondence, monadic_from_equivalence,
    monadic_tense_bridge, tense_from_frame, MonadicSuite, Suite, TimeFrame,
};
use galois_kit::vector::FuzzyVector;

const LONG_ABOUT: &str = "\
Finite residuated lattices, fuzzy relations, and the operators they induce.

Commands read lattices, relations, operator tables and contexts from JSON
(contexts also from CSV) and print a JSON envelope with sorted keys, so
identical inputs give byte-identical output.  Enumerations over vector
spaces A^I are capped by --budget (default 10000, or the GALOIS_KIT_BUDGET
environment variable) and fail fast with status budget_exceeded beyond it.";

fn dispatch_help() -> String {
    let mut text = String::from("Subcommand to library operation map:\n");
    for entry in dispatch::DISPATCH {
        text.push_str(&format!("  {:22} {}\n", entry.subcommand, entry.operations.join(", ")));
    }
    text
}

#[derive(Parser)]
#[command(
    name = "galois-kit",
    version,
    about = "Finite residuated lattices and their induced operators",
    long_about = LONG_ABOUT,
    after_long_help = dispatch_help()
)]
struct Cli {
    /// Largest vector-space size |A|^|I| an enumeration may touch.
    #[arg(long, global = true, env = "GALOIS_KIT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Output format; `dot` applies to the fca subcommands only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and classify lattice descriptions.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Work with operator tables and the operators a relation induces.
    #[command(subcommand)]
    Op(OpCmd),
    /// Enumerate and export fuzzy concept lattices.
    #[command(subcommand)]
    Fca(FcaCmd),
    /// Check tense-operator laws over time frames.
    #[command(subcommand)]
    Tense(TenseCmd),
    /// Check quantifier laws over fuzzy equivalences.
    #[command(subcommand)]
    Monadic(MonadicCmd),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Check every residuated-lattice law on the file's tables.
    Validate {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// Report which algebra family a valid lattice belongs to.
    Classify {
        #[arg(long)]
        lattice: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InducedName {
    Phi,
    Rho,
    Delta,
    Epsilon,
}

impl From<InducedName> for InducedKind {
    fn from(name: InducedName) -> InducedKind {
        match name {
            InducedName::Phi => InducedKind::Phi,
            InducedName::Rho => InducedKind::Rho,
            InducedName::Delta => InducedKind::Delta,
            InducedName::Epsilon => InducedKind::Epsilon,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionName {
    #[value(name = "right_of_monotone")]
    RightOfMonotone,
    #[value(name = "left_of_monotone")]
    LeftOfMonotone,
    #[value(name = "reversed_partner")]
    ReversedPartner,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecoverName {
    #[value(name = "from_phi")]
    FromPhi,
    #[value(name = "from_delta")]
    FromDelta,
    #[value(name = "from_rho")]
    FromRho,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    Closure,
    Interior,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    #[value(name = "boolean_B")]
    BooleanB,
    #[value(name = "mv_T")]
    MvT,
    #[value(name = "pavelka_PT")]
    PavelkaPt,
}

#[derive(Clone, Copy, ValueEnum)]
enum MonadicSuiteName {
    #[value(name = "monadic_new")]
    New,
    #[value(name = "monadic_original")]
    Original,
}

#[derive(Subcommand)]
enum OpCmd {
    /// Apply an operator to a vector of element labels.
    Apply {
        /// Lattice file; overrides whatever the other files name.
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Relation file; pairs with --kind to pick an induced operator.
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Operator table file, as an alternative to --relation.
        #[arg(long)]
        operator: Option<PathBuf>,
        /// Which induced operator to read off --relation.
        #[arg(long, value_enum)]
        kind: Option<InducedName>,
        /// Comma-separated element labels, e.g. `0,1/2,1`.
        #[arg(long)]
        vector: String,
    },
    /// Verify the adjunctions a relation induces, their strength, and (on
    /// double-negation lattices) conjugation and the boolean criterion.
    Galois {
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        relation: PathBuf,
    },
    /// Classify an operator table against the three induced shapes.
    Classify {
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Relation file; pairs with --kind to classify an induced operator.
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Operator table file, as an alternative to --relation.
        #[arg(long)]
        operator: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: Option<InducedName>,
    },
    /// Compute the uniquely determined adjoint partner of an operator.
    Adjoint {
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, value_enum)]
        kind: DirectionName,
    },
    /// Read the inducing relation back off an operator.
    Recover {
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Relation file: tabulate its induced operator first, then recover
        /// (a round trip).
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Operator table file, as an alternative to --relation.
        #[arg(long)]
        operator: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: RecoverName,
    },
    /// Split a closure or interior operator into an adjoint round trip over
    /// its image.
    Decompose {
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, value_enum)]
        kind: ModeName,
    },
}

#[derive(Subcommand)]
enum FcaCmd {
    /// Enumerate every concept of a context.
    Concepts {
        /// Lattice file; required for CSV contexts.
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        context: PathBuf,
    },
    /// Emit the concept lattice's cover graph as DOT (always DOT).
    Export {
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        context: PathBuf,
    },
}

#[derive(Subcommand)]
enum TenseCmd {
    /// Check a tense axiom suite over a time frame.
    Check {
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Frame file: a square relation, read row time to column time.
        /// Transpose the frame to swap the two tense operators.
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, value_enum)]
        suite: SuiteName,
    },
    /// Relate frame properties to operator laws, both directions.
    Correspondence {
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        relation: PathBuf,
    },
}

#[derive(Subcommand)]
enum MonadicCmd {
    /// Check a quantifier axiom suite.
    Check {
        #[arg(long)]
        lattice: Option<PathBuf>,
        /// Fuzzy equivalence file; the quantifier is read off it.
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Explicit quantifier table, as an alternative to --relation.
        #[arg(long)]
        operator: Option<PathBuf>,
        #[arg(long, value_enum)]
        suite: MonadicSuiteName,
    },
    /// Test whether the quantifier laws and the tense laws of the induced
    /// pair agree.
    Bridge {
        #[arg(long)]
        lattice: Option<PathBuf>,
        #[arg(long)]
        relation: Option<PathBuf>,
        #[arg(long)]
        operator: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    LawViolation,
    PreconditionError,
    BudgetExceeded,
    IoError,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::LawViolation => "law_violation",
            Status::PreconditionError => "precondition_error",
            Status::BudgetExceeded => "budget_exceeded",
            Status::IoError => "io_error",
        }
    }

    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::LawViolation => 1,
            Status::PreconditionError => 2,
            Status::BudgetExceeded => 3,
            Status::IoError => 4,
        }
    }
}

struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn precondition(message: impl Into<String>) -> Failure {
        Failure { status: Status::PreconditionError, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match &e {
            Error::LawViolation { .. }
            | Error::WrongTypeClass { .. }
            | Error::NotAdjointable { .. }
            | Error::NotDecomposable { .. }
            | Error::NotGaloisPair { .. }
            | Error::NotEquivalence { .. } => Status::LawViolation,
            Error::BudgetExceeded { .. } => Status::BudgetExceeded,
            Error::Io(_) | Error::FileFormat { .. } => Status::IoError,
            _ => Status::PreconditionError,
        };
        Failure { status, message: e.to_string() }
    }
}

/// What a handler produced: a payload, human-readable notes, a law-level
/// verdict, and optionally a DOT rendering.
struct Outcome {
    payload: Value,
    diagnostics: Vec<String>,
    ok: bool,
    dot: Option<String>,
}

impl Outcome {
    fn new(payload: Value) -> Outcome {
        Outcome { payload, diagnostics: Vec::new(), ok: true, dot: None }
    }

    fn note(mut self, line: impl Into<String>) -> Outcome {
        self.diagnostics.push(line.into());
        self
    }

    fn verdict(mut self, ok: bool) -> Outcome {
        self.ok = ok;
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (status, payload, diagnostics, dot) = match execute(&cli) {
        Ok(outcome) => {
            let status = if outcome.ok { Status::Ok } else { Status::LawViolation };
            (status, outcome.payload, outcome.diagnostics, outcome.dot)
        }
        Err(failure) => (failure.status, Value::Null, vec![failure.message], None),
    };

    let text = match dot {
        Some(graph) if status == Status::Ok => graph,
        _ => {
            let envelope = json!({
                "status": status.name(),
                "payload": payload,
                "diagnostics": diagnostics,
            });
            let mut text = serde_json::to_string_pretty(&envelope).expect("envelope is valid json");
            text.push('\n');
            text
        }
    };

    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(Status::IoError.code());
        }
    } else {
        print!("{text}");
    }
    ExitCode::from(status.code())
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Fca(_)) {
        return Err(Failure::precondition("--format dot applies to the fca subcommands only"));
    }
    match &cli.command {
        Command::Lattice(cmd) => run_lattice(cmd),
        Command::Op(cmd) => run_op(cmd, cli.budget),
        Command::Fca(cmd) => run_fca(cmd, cli.budget, cli.format),
        Command::Tense(cmd) => run_tense(cmd, cli.budget),
        Command::Monadic(cmd) => run_monadic(cmd, cli.budget),
    }
}

fn load_lattice_flag(path: &Option<PathBuf>) -> Result<Option<Arc<LatticeSpec>>, Failure> {
    path.as_ref().map(|p| files::load_lattice(p)).transpose().map_err(Failure::from)
}

fn lattice_summary(spec: &LatticeSpec) -> String {
    format!("{}-element {} lattice", spec.n(), spec.kind())
}

fn run_lattice(cmd: &LatticeCmd) -> Result<Outcome, Failure> {
    match cmd {
        LatticeCmd::Validate { lattice } => {
            let spec = files::load_lattice_unvalidated(lattice)?;
            let report = spec.validate();
            let ok = report.is_residuated();
            let mut outcome = Outcome::new(json!({
                "kind": spec.kind().to_string(),
                "labels": spec.labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "report": report,
            }))
            .verdict(ok);
            outcome = if ok {
                outcome.note(format!("every law holds on the {}", lattice_summary(&spec)))
            } else {
                outcome.note(format!("laws fail on the {}", lattice_summary(&spec)))
            };
            Ok(outcome)
        }
        LatticeCmd::Classify { lattice } => {
            let spec = files::load_lattice(lattice)?;
            let report = spec.classify();
            let line = format!(
                "{}: bl {}, mv {}, boolean {}",
                lattice_summary(&spec),
                if report.is_bl { "yes" } else { "no" },
                if report.is_mv { "yes" } else { "no" },
                if spec.is_boolean_algebra() { "yes" } else { "no" },
            );
            Ok(Outcome::new(json!({
                "boolean_algebra": spec.is_boolean_algebra(),
                "kind": spec.kind().to_string(),
                "labels": spec.labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "report": report,
            }))
            .note(line))
        }
    }
}

/// Resolves the `--operator` / `--relation --kind` alternative shared by
/// several `op` subcommands into a concrete table.
fn load_table(
    lattice: &Option<PathBuf>,
    relation: &Option<PathBuf>,
    operator: &Option<PathBuf>,
    kind: Option<InducedName>,
    budget: usize,
) -> Result<OperatorTable, Failure> {
    let lattice = load_lattice_flag(lattice)?;
    match (operator, relation) {
        (Some(_), Some(_)) => {
            Err(Failure::precondition("give either --operator or --relation, not both"))
        }
        (Some(path), None) => Ok(files::load_operator(path, lattice)?),
        (None, Some(path)) => {
            let kind = kind.ok_or_else(|| {
                Failure::precondition("--relation needs --kind to pick an induced operator")
            })?;
            let r = files::load_relation(path, lattice)?;
            Ok(OperatorTable::tabulate_induced(kind.into(), &r, budget)?)
        }
        (None, None) => Err(Failure::precondition("give --operator, or --relation with --kind")),
    }
}

fn parse_vector(
    table_lattice: &Arc<LatticeSpec>,
    index: &Arc<galois_kit::relation::IndexSet>,
    list: &str,
) -> Result<FuzzyVector, Failure> {
    let labels: Vec<&str> = list.split(',').map(str::trim).collect();
    if labels.len() != index.len() {
        return Err(Failure::precondition(format!(
            "--vector names {} values, the index set has {}",
            labels.len(),
            index.len()
        )));
    }
    Ok(FuzzyVector::from_labels(table_lattice.clone(), index.clone(), &labels)?)
}

fn run_op(cmd: &OpCmd, budget: usize) -> Result<Outcome, Failure> {
    match cmd {
        OpCmd::Apply { lattice, relation, operator, kind, vector } => {
            // Induced operators are applied straight off the relation, so no
            // budget is spent tabulating.
            if let (Some(path), None) = (relation, operator) {
                let kind = kind.ok_or_else(|| {
                    Failure::precondition("--relation needs --kind to pick an induced operator")
                })?;
                let kind: InducedKind = kind.into();
                let r = files::load_relation(path, load_lattice_flag(lattice)?)?;
                let index = match kind {
                    InducedKind::Phi | InducedKind::Delta => r.domain(),
                    InducedKind::Rho | InducedKind::Epsilon => r.codomain(),
                };
                let x = parse_vector(r.lattice(), index, vector)?;
                let y = apply_induced(kind, &r, &x)?;
                return Ok(Outcome::new(json!({
                    "input": x.label_strings(),
                    "kind": kind.to_string(),
                    "output": y.label_strings(),
                })));
            }
            let table = load_table(lattice, relation, operator, *kind, budget)?;
            let x = parse_vector(table.lattice(), table.in_index(), vector)?;
            let y = table.apply(&x)?;
            Ok(Outcome::new(json!({
                "input": x.label_strings(),
                "output": y.label_strings(),
            })))
        }
        OpCmd::Galois { lattice, relation } => {
            let r = files::load_relation(relation, load_lattice_flag(lattice)?)?;
            let phi = OperatorTable::tabulate_induced(InducedKind::Phi, &r, budget)?;
            let rho = OperatorTable::tabulate_induced(InducedKind::Rho, &r, budget)?;
            let delta = OperatorTable::tabulate_induced(InducedKind::Delta, &r, budget)?;
            let eps = OperatorTable::tabulate_induced(InducedKind::Epsilon, &r, budget)?;

            let covariant = verify_galois(&phi, &rho, false)?;
            let reversed = verify_galois(&delta, &eps, true)?;
            let strong_covariant = strong_adjoint_check(&phi, &rho, false)?;
            let strong_reversed = strong_adjoint_check(&delta, &eps, true)?;

            let mut ok = covariant.all_ok()
                && reversed.all_ok()
                && strong_covariant.strong
                && strong_reversed.strong;
            let mut outcome_notes = Vec::new();
            let (conjugation, boolean_criterion) = match conjugate_check(&r, budget) {
                Ok(conj) => {
                    let boolean = boolean_criterion_check(&r, budget)?;
                    ok = ok && conj.all_ok() && boolean.equivalent;
                    (serde_json::to_value(&conj).unwrap(), serde_json::to_value(&boolean).unwrap())
                }
                Err(Error::UnsupportedStructure(_)) => {
                    outcome_notes.push(
                        "conjugation and the boolean criterion need double negation; skipped"
                            .to_owned(),
                    );
                    (Value::Null, Value::Null)
                }
                Err(e) => return Err(e.into()),
            };

            let mut outcome = Outcome::new(json!({
                "boolean_criterion": boolean_criterion,
                "conjugation": conjugation,
                "covariant": covariant,
                "reversed": reversed,
                "strong_covariant": strong_covariant,
                "strong_reversed": strong_reversed,
            }))
            .verdict(ok);
            for note in outcome_notes {
                outcome = outcome.note(note);
            }
            Ok(outcome)
        }
        OpCmd::Classify { lattice, relation, operator, kind } => {
            let table = load_table(lattice, relation, operator, *kind, budget)?;
            let report = classify_mapping(&table);
            let line = format!("type class: {:?}", report.type_class);
            Ok(Outcome::new(json!({
                "in_index": table.in_index().names(),
                "out_index": table.out_index().names(),
                "report": report,
            }))
            .note(line.to_lowercase()))
        }
        OpCmd::Adjoint { lattice, operator, kind } => {
            let table = files::load_operator(operator, load_lattice_flag(lattice)?)?;
            let direction = match kind {
                DirectionName::RightOfMonotone => AdjointDirection::RightOfMonotone,
                DirectionName::LeftOfMonotone => AdjointDirection::LeftOfMonotone,
                DirectionName::ReversedPartner => AdjointDirection::ReversedPartner,
            };
            let partner = compute_adjoint(&table, direction, budget)?;
            Ok(Outcome::new(json!({
                "operator": files::operator_to_file(&partner, true),
            })))
        }
        OpCmd::Recover { lattice, relation, operator, kind } => {
            let (tabulate, recover) = match kind {
                RecoverName::FromPhi => (InducedName::Phi, RecoverKind::FromPhi),
                RecoverName::FromDelta => (InducedName::Delta, RecoverKind::FromDelta),
                RecoverName::FromRho => (InducedName::Rho, RecoverKind::FromRho),
            };
            let table = load_table(lattice, relation, operator, Some(tabulate), budget)?;
            let recovered = recover_relation(&table, recover, budget)?;
            Ok(Outcome::new(json!({
                "relation": files::relation_to_file(&recovered, false),
            })))
        }
        OpCmd::Decompose { lattice, operator, kind } => {
            let table = files::load_operator(operator, load_lattice_flag(lattice)?)?;
            let check = closure_interior_check(&table)?;
            let mode = match kind {
                ModeName::Closure => DecomposeMode::Closure,
                ModeName::Interior => DecomposeMode::Interior,
            };
            let decomposition = decompose_operator(&table, mode)?;
            let fixpoints: Vec<String> =
                decomposition.fixpoints.iter().map(FuzzyVector::label_list).collect();
            let line = format!("{} fixpoints over {} columns", fixpoints.len(),
                decomposition.relation.codomain().len());
            Ok(Outcome::new(json!({
                "check": check,
                "fixpoints": fixpoints,
                "mode": mode.name(),
                "relation": files::relation_to_file(&decomposition.relation, false),
            }))
            .note(line))
        }
    }
}

fn run_fca(cmd: &FcaCmd, budget: usize, format: Format) -> Result<Outcome, Failure> {
    match cmd {
        FcaCmd::Concepts { lattice, context } => {
            let ctx = files::load_context(context, load_lattice_flag(lattice)?)?;
            let set = enumerate_concepts(&ctx, budget)?;
            let mut outcome = Outcome::new(json!({
                "concepts": set,
                "count": set.len(),
            }))
            .note(format!("{} concepts", set.len()));
            if format == Format::Dot {
                outcome.dot = Some(set.to_dot());
            }
            Ok(outcome)
        }
        FcaCmd::Export { lattice, context } => {
            let ctx = files::load_context(context, load_lattice_flag(lattice)?)?;
            let set = enumerate_concepts(&ctx, budget)?;
            let mut outcome = Outcome::new(Value::Null);
            outcome.dot = Some(set.to_dot());
            Ok(outcome)
        }
    }
}

/// One diagnostic line per failed law, built from a report's witness map.
fn failure_lines(witnesses: &std::collections::BTreeMap<String, Vec<String>>) -> Vec<String> {
    witnesses
        .iter()
        .map(|(law, parts)| format!("{law} fails at {}", parts.join(", ")))
        .collect()
}

fn run_tense(cmd: &TenseCmd, budget: usize) -> Result<Outcome, Failure> {
    match cmd {
        TenseCmd::Check { lattice, relation, suite } => {
            let r = files::load_relation(relation, load_lattice_flag(lattice)?)?;
            let frame = TimeFrame::new(r)?;
            let ts = tense_from_frame(&frame, budget)?;
            let suite = match suite {
                SuiteName::BooleanB => Suite::BooleanB,
                SuiteName::MvT => Suite::MvT,
                SuiteName::PavelkaPt => Suite::PavelkaPt,
            };
            let report = check_axioms(&ts, suite)?;
            let mut outcome = Outcome::new(serde_json::to_value(&report).unwrap())
                .verdict(report.all_pass);
            if report.all_pass {
                outcome = outcome.note(format!("suite {}: all axioms hold", report.suite));
            } else {
                for line in failure_lines(&report.witnesses) {
                    outcome = outcome.note(line);
                }
            }
            Ok(outcome)
        }
        TenseCmd::Correspondence { lattice, relation } => {
            let r = files::load_relation(relation, load_lattice_flag(lattice)?)?;
            let frame = TimeFrame::new(r)?;
            let report = frame_correspondence(&frame, budget)?;
            let ok = report.all_equivalent;
            Ok(Outcome::new(serde_json::to_value(&report).unwrap()).verdict(ok))
        }
    }
}

/// Resolves the quantifier a monadic subcommand works on: an explicit table,
/// or the one a fuzzy equivalence induces.
fn load_quantifier(
    lattice: &Option<PathBuf>,
    relation: &Option<PathBuf>,
    operator: &Option<PathBuf>,
    budget: usize,
) -> Result<OperatorTable, Failure> {
    let lattice = load_lattice_flag(lattice)?;
    match (operator, relation) {
        (Some(_), Some(_)) => {
            Err(Failure::precondition("give either --operator or --relation, not both"))
        }
        (Some(path), None) => Ok(files::load_operator(path, lattice)?),
        (None, Some(path)) => {
            let r = files::load_relation(path, lattice)?;
            let frame = TimeFrame::new(r)?;
            Ok(monadic_from_equivalence(&frame, budget)?.exists().clone())
        }
        (None, None) => {
            Err(Failure::precondition("give --operator, or --relation with an equivalence"))
        }
    }
}

fn run_monadic(cmd: &MonadicCmd, budget: usize) -> Result<Outcome, Failure> {
    match cmd {
        MonadicCmd::Check { lattice, relation, operator, suite } => {
            let exists = load_quantifier(lattice, relation, operator, budget)?;
            let suite = match suite {
                MonadicSuiteName::New => MonadicSuite::New,
                MonadicSuiteName::Original => MonadicSuite::Original,
            };
            let report = check_monadic(&exists, suite)?;
            let mut outcome = Outcome::new(serde_json::to_value(&report).unwrap())
                .verdict(report.all_pass);
            if report.all_pass {
                outcome = outcome.note(format!("suite {}: all axioms hold", report.suite));
            } else {
                for line in failure_lines(&report.witnesses) {
                    outcome = outcome.note(line);
                }
            }
            Ok(outcome)
        }
        MonadicCmd::Bridge { lattice, relation, operator } => {
            let exists = load_quantifier(lattice, relation, operator, budget)?;
            let report = monadic_tense_bridge(&exists)?;
            let ok = report.biconditional_holds;
            Ok(Outcome::new(serde_json::to_value(&report).unwrap()).verdict(ok))
        }
    }
}
