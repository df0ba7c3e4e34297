//! Command-line surface: `analyze`, `table` and `pldc`.
//!
//! Exit codes: 0 success, 1 other failures, 2 unparsable input or values out
//! of range, 3 a filling that breaks the Le condition, 4 a table cut short by
//! its time budget.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bits;
use crate::diagram::{DiagramJson, LeDiagram};
use crate::enumeration::{emit_table, positroid, version, CountTable, Property, TableOptions};
use crate::error::Error;
use crate::network::{boundary_measurement, build_network, support, WeightAssignment};
use crate::paving::{build_pldc_diagram, classify_paving, is_sparse_paving_f, obstructions, PavingClass, PldcFunction};
use crate::transversal::{
    find_crossing, fundamental_violation, is_minimal_presentation, tau, transversal_violation, AntichainWitness,
    CrossingMode, CrossingWitness, Tau,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_LE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "poslab", version, about = "Exact positroid combinatorics from Le-diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide every property of the positroid of one diagram.
    Analyze {
        /// Diagram file (ASCII rows of `*` and `.`, or JSON); `-` for stdin.
        file: PathBuf,
        /// Ground-set size for ASCII input whose first row is shorter than n - k.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Count positroids with a property for every 1 <= n <= N_MAX.
    Table {
        #[arg(value_enum)]
        property: PropertyArg,
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// JSON-lines cache; defaults to $POSLAB_CACHE when set.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check a function f given as {"k":..,"n":..,"f":[..]}.
    Pldc {
        /// Function file; `-` for stdin.
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    All,
    Transversal,
    Fundamental,
    Paving,
    SparsePaving,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::All => Property::All,
            PropertyArg::Transversal => Property::Transversal,
            PropertyArg::Fundamental => Property::Fundamental,
            PropertyArg::Paving => Property::Paving,
            PropertyArg::SparsePaving => Property::SparsePaving,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
}

/// Everything `analyze` decides about one diagram.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub version: String,
    pub diagram: DiagramJson,
    pub k: usize,
    pub n: usize,
    pub loops: Vec<usize>,
    pub coloops: Vec<usize>,
    pub basis_count: usize,
    pub is_le: bool,
    pub is_sq: bool,
    pub is_transversal: bool,
    pub is_fundamental: bool,
    pub is_paving: bool,
    pub is_sparse_paving: bool,
    /// `τ` of the loopless reduction, rank 2 only.
    pub tau_of_reduction: Option<Tau>,
    pub support: Vec<Vec<usize>>,
    pub support_noncrossing: bool,
    pub support_minimal: bool,
    pub crossing: Option<CrossingWitness>,
    pub transversal_witness: Option<AntichainWitness>,
    pub fundamental_witness: Option<AntichainWitness>,
    pub paving: PavingClass,
    pub obstructions: Vec<Vec<usize>>,
}

pub fn analyze(diagram: &LeDiagram) -> crate::Result<Verdict> {
    if let Some(v) = diagram.le_violation() {
        return Err(Error::Precondition(format!("not a Le-diagram: {v}")));
    }
    let matroid = positroid(diagram)?;
    let transversal_witness = transversal_violation(&matroid)?;
    let fundamental_witness = fundamental_violation(&matroid)?;
    let net = build_network(diagram, &WeightAssignment::Primes)?;
    let system = support(&boundary_measurement(&net)?)?;
    let crossing = find_crossing(&system, CrossingMode::Verbatim);
    let paving = classify_paving(diagram)?;
    let obstruction_sets = match &paving {
        PavingClass::Compliant { f } => obstructions(f)?.hyperplanes().into_iter().map(bits::elements).collect(),
        _ => Vec::new(),
    };
    let tau_of_reduction = if diagram.k() == 2 {
        Some(tau(&diagram.loopless_reduction())?)
    } else {
        None
    };
    Ok(Verdict {
        version: version(),
        diagram: diagram.to_json_value(),
        k: diagram.k(),
        n: diagram.n(),
        loops: diagram.loops(),
        coloops: diagram.coloops(),
        basis_count: matroid.bases().len(),
        is_le: true,
        is_sq: diagram.validate_sq()?,
        is_transversal: transversal_witness.is_none(),
        is_fundamental: fundamental_witness.is_none(),
        is_paving: paving.is_paving(),
        is_sparse_paving: paving.is_sparse_paving(diagram.k(), diagram.n()),
        tau_of_reduction,
        support: system.sets().iter().map(|&s| bits::elements(s)).collect(),
        support_noncrossing: crossing.is_none(),
        support_minimal: is_minimal_presentation(&system),
        crossing,
        transversal_witness,
        fundamental_witness,
        paving,
        obstructions: obstruction_sets,
    })
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn sets_text(sets: &[Vec<usize>]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    parts.join(" ")
}

impl Verdict {
    pub fn to_text(&self, diagram: &LeDiagram) -> String {
        let mut out = String::new();
        out.push_str(&diagram.to_ascii());
        out.push_str(&format!("k = {}, n = {}, bases = {}\n", self.k, self.n, self.basis_count));
        out.push_str(&format!("loops: {:?}, coloops: {:?}\n", self.loops, self.coloops));
        out.push_str(&format!("double-Le (⌐⌐) diagram: {}\n", yes_no(self.is_sq)));
        out.push_str(&format!("transversal: {}\n", yes_no(self.is_transversal)));
        if let Some(w) = &self.transversal_witness {
            out.push_str(&format!(
                "  antichain {} has rank(meet) = {} > {}\n",
                sets_text(&w.flats),
                w.intersection_rank,
                w.alternating_sum
            ));
        }
        out.push_str(&format!("fundamental transversal: {}\n", yes_no(self.is_fundamental)));
        if let Some(t) = &self.tau_of_reduction {
            out.push_str(&format!("tau of loopless reduction: {}\n", t.value));
        }
        out.push_str(&format!(
            "support {} noncrossing: {}, minimal: {}\n",
            sets_text(&self.support),
            yes_no(self.support_noncrossing),
            yes_no(self.support_minimal)
        ));
        if let Some(c) = &self.crossing {
            out.push_str(&format!(
                "  set {} crosses set {} at a={}, b={}, c={}, d={}\n",
                c.i, c.j, c.a, c.b, c.c, c.d
            ));
        }
        out.push_str(&format!("paving: {}\n", yes_no(self.is_paving)));
        match &self.paving {
            PavingClass::Compliant { f } => out.push_str(&format!("  {f}\n")),
            PavingClass::SingleColoop { coloop } => out.push_str(&format!("  single coloop {coloop}\n")),
            PavingClass::Boolean => out.push_str("  Boolean\n"),
            PavingClass::NotPaving => {}
        }
        if !self.obstructions.is_empty() {
            out.push_str(&format!("  dependent hyperplanes: {}\n", sets_text(&self.obstructions)));
        }
        out.push_str(&format!("sparse paving: {}\n", yes_no(self.is_sparse_paving)));
        out
    }
}

/// Report produced by `pldc`.
#[derive(Debug, Clone, Serialize)]
pub struct PldcReport {
    pub version: String,
    pub function: PldcFunction,
    pub ldc: bool,
    pub ldc_violations: Vec<usize>,
    pub pldc: bool,
    pub pldc_violations: Vec<usize>,
    pub diagram: Option<String>,
    pub obstructions: Vec<Vec<usize>>,
    pub sparse_paving: Option<bool>,
}

pub fn pldc_report(f: &PldcFunction) -> crate::Result<PldcReport> {
    let ldc_violations = f.ldc_violations();
    let pldc_violations = f.pldc_violations();
    let ldc = ldc_violations.is_empty();
    let pldc = ldc && pldc_violations.is_empty();
    let diagram = if ldc { Some(build_pldc_diagram(f)?.to_ascii()) } else { None };
    let (obstruction_sets, sparse) = if pldc {
        (
            obstructions(f)?.all().into_iter().map(bits::elements).collect(),
            Some(is_sparse_paving_f(f)?),
        )
    } else {
        (Vec::new(), None)
    };
    Ok(PldcReport {
        version: version(),
        function: f.clone(),
        ldc,
        ldc_violations,
        pldc,
        pldc_violations,
        diagram,
        obstructions: obstruction_sets,
        sparse_paving: sparse,
    })
}

impl PldcReport {
    pub fn to_text(&self) -> String {
        let verdict = |ok: bool, failed: &[usize]| {
            if ok {
                "yes".to_string()
            } else {
                let list: Vec<String> = failed.iter().map(usize::to_string).collect();
                let noun = if failed.len() == 1 { "condition" } else { "conditions" };
                format!("no ({noun} {})", list.join(", "))
            }
        };
        let mut out = format!("{}\n", self.function);
        out.push_str(&format!(
            "ldc: {}, pldc: {}\n",
            verdict(self.ldc, &self.ldc_violations),
            if self.ldc { verdict(self.pldc, &self.pldc_violations) } else { "no".into() }
        ));
        if let Some(d) = &self.diagram {
            out.push_str(d);
        }
        if self.pldc && self.obstructions.is_empty() {
            out.push_str("obstructions: none\n");
        } else if self.pldc {
            out.push_str(&format!("obstructions: {}\n", sets_text(&self.obstructions)));
        }
        if let Some(sparse) = self.sparse_paving {
            out.push_str(&format!("sparse paving: {}\n", yes_no(sparse)));
        }
        out
    }
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Reads a diagram given either as JSON or as ASCII rows.
pub fn parse_diagram(text: &str, n: Option<usize>) -> crate::Result<LeDiagram> {
    if text.trim_start().starts_with('{') {
        LeDiagram::from_json(text)
    } else {
        LeDiagram::from_ascii(text, n)
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Argument(_) | Error::Structure(_) | Error::Domain(_) => EXIT_PARSE,
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> crate::Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<i32> {
    match cli.command {
        Command::Analyze { file, n, json, .. } => {
            let text = read_input(&file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let diagram = parse_diagram(&text, n)?;
            if let Some(v) = diagram.le_violation() {
                let _ = writeln!(err, "error: not a Le-diagram: {v}");
                return Ok(EXIT_NOT_LE);
            }
            let verdict = analyze(&diagram)?;
            if json {
                write_out(out, &(serde_json::to_string(&verdict).expect("verdict serializes") + "\n"))?;
            } else {
                write_out(out, &verdict.to_text(&diagram))?;
            }
            Ok(EXIT_OK)
        }
        Command::Table {
            property,
            n_max,
            format,
            jobs,
            budget,
            cache,
        } => {
            let budget = match budget {
                Some(b) if !(b.is_finite() && b >= 0.0) => {
                    return Err(Error::Argument(format!("budget {b} is not a nonnegative number of seconds")))
                }
                Some(b) => Some(Duration::from_secs_f64(b)),
                None => None,
            };
            let cache = cache.or_else(|| std::env::var_os("POSLAB_CACHE").map(PathBuf::from));
            let options = TableOptions { jobs, budget, cache };
            let table: CountTable = emit_table(property.into(), n_max, &options)?;
            let body = match format {
                Format::Md => table.to_markdown(),
                Format::Csv => table.to_csv(),
            };
            write_out(out, &body)?;
            Ok(if table.is_complete() { EXIT_OK } else { EXIT_BUDGET })
        }
        Command::Pldc { file, json } => {
            let text = read_input(&file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let f = PldcFunction::from_json(&text)?;
            let report = pldc_report(&f)?;
            if json {
                write_out(out, &(serde_json::to_string(&report).expect("report serializes") + "\n"))?;
            } else {
                write_out(out, &report.to_text())?;
            }
            Ok(EXIT_OK)
        }
    }
}
