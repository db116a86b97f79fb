//! Command line front end for the degree calculus: ordinal arithmetic in
//! normal form, degree terms and their adjective names, the canonical model
//! over ordinal notations, and the theorem library.
//!
//! Exit codes: 0 on success, 1 when an operation rejects well-formed input
//! (no name for a term, a query against a missing node, an out-of-fragment
//! degree), 2 on usage errors, including malformed term syntax.

use canonical_model::{class_of, exact_degree, least, member};
use clap::{Args, Parser, Subcommand, ValueEnum};
use degree_names::{DegreeKind, DegreeName};
use hierarchy_kb::{
    kb_implies, kb_load, kb_separations, kb_validate, seed, ImplicationStep, KnowledgeBase,
    QueryError,
};
use metaordinal::MetaOrdinal;
use ordinal::Ordinal;
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "degrees",
    about = "Ordinal degree calculus: terms, names, the canonical model and the theorem library",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Ordinal arithmetic below Gamma_0.
    #[command(subcommand)]
    Ord(OrdCmd),
    /// Degree terms: comparison, names, enumeration, evaluation.
    #[command(subcommand)]
    Deg(DegCmd),
    /// The canonical model interpreting degrees over ordinal notations.
    #[command(subcommand)]
    Model(ModelCmd),
    /// The theorem library of implications and separations.
    #[command(subcommand)]
    Kb(KbCmd),
}

#[derive(Subcommand)]
enum OrdCmd {
    /// Compare two ordinals: LESS, EQUAL or GREATER.
    Cmp { a: String, b: String },
    /// The ordinal sum a+b.
    Add { a: String, b: String },
    /// The ordinal product a*b.
    Mul { a: String, b: String },
    /// Parse an ordinal and reprint it in normal form.
    Normalize { a: String },
}

#[derive(Subcommand)]
enum DegCmd {
    /// Compare two degree terms: LESS, EQUAL or GREATER.
    Cmp { s: String, t: String },
    /// The successor term t+1.
    Succ { t: String },
    /// Parse a degree term and reprint it in normal form.
    Normalize { t: String },
    /// The adjective name of a degree term.
    Name {
        t: String,
        /// Which hierarchy the name belongs to.
        #[arg(long, value_enum, default_value_t = KindArg::Inaccessible)]
        kind: KindArg,
    },
    /// The degree term an adjective name denotes.
    Unname { name: String },
    /// List admissible terms strictly below t in ladder order.
    Enumerate {
        t: String,
        /// Keep all ordinal parameters strictly below this bound.
        #[arg(long, default_value = "w")]
        bound: String,
        /// How many terms to list.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Skip this many terms of the ladder first.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate t with W set to the ordinal k.
    Eval { t: String, k: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Inaccessible,
    Mahlo,
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Whether the class of degree t contains the ordinal k.
    Member { t: String, k: String },
    /// The least element of the class of degree t.
    Least { t: String },
    /// The exact degree of the ordinal k.
    Degree { k: String },
    /// The closed form of the class of degree t.
    Class { t: String },
}

#[derive(Args)]
struct KbSource {
    /// Load the library from this JSON file instead of the embedded seed.
    #[arg(long, value_name = "PATH")]
    kb: Option<PathBuf>,
}

#[derive(Subcommand)]
enum KbCmd {
    /// Derive an implication between two property instances.
    Implies {
        from: String,
        to: String,
        #[command(flatten)]
        source: KbSource,
    },
    /// Separation and non-separability records for a preserved/destroyed pair.
    Separations {
        preserved: String,
        destroyed: String,
        #[command(flatten)]
        source: KbSource,
    },
    /// Editorial checks over the loaded library.
    Validate {
        #[command(flatten)]
        source: KbSource,
    },
    /// List the nodes and edges of the library.
    List {
        #[command(flatten)]
        source: KbSource,
    },
}

/// A failed invocation, split by exit code.
enum Failure {
    /// Malformed input syntax: exit 2, with a grammar reminder.
    Usage(String),
    /// Well-formed input the operation rejects: exit 1.
    Domain(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(2),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ord(cmd) => run_ord(cmd, cli.format),
        Command::Deg(cmd) => run_deg(cmd, cli.format),
        Command::Model(cmd) => run_model(cmd, cli.format),
        Command::Kb(cmd) => run_kb(cmd, cli.format),
    }
}

const ORDINAL_GRAMMAR: &str =
    "ordinal grammar: naturals, w, phi(L,X), sums a+b, products a*b, powers a^b, parentheses";
const DEGREE_GRAMMAR: &str =
    "degree grammar: an ordinal, or W-terms W, W^a, W^a*b joined by + in decreasing exponents, \
     with an ordinal constant last";
const NAME_GRAMMAR: &str = "name grammar: [constant-][word[^exponent]-]*(inaccessible|Mahlo), \
     words hyper, richly, utterly, deeply, truly, eternally, vastly in increasing power order";
const INSTANCE_GRAMMAR: &str = "instance grammar: a node id with concrete parameters as needed, \
     such as mahlo, t-inaccessible(W^2+1) or mitchell-sc-rank-geq(w, 2)";

fn parse_ordinal(text: &str) -> Result<Ordinal, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("cannot read `{text}` as an ordinal: {e}\n{ORDINAL_GRAMMAR}")))
}

fn parse_degree(text: &str) -> Result<MetaOrdinal, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("cannot read `{text}` as a degree term: {e}\n{DEGREE_GRAMMAR}")))
}

fn parse_name(text: &str) -> Result<DegreeName, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("cannot read `{text}` as a degree name: {e}\n{NAME_GRAMMAR}")))
}

fn domain(e: impl Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string(&value).expect("serializable")),
    }
}

fn emit_result(format: Format, result: impl Display) {
    let text = result.to_string();
    let value = json!({ "result": text });
    emit(format, text, value);
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
}

fn run_ord(cmd: OrdCmd, format: Format) -> Result<(), Failure> {
    match cmd {
        OrdCmd::Cmp { a, b } => {
            let (a, b) = (parse_ordinal(&a)?, parse_ordinal(&b)?);
            emit_result(format, ordering_name(a.cmp(&b)));
        }
        OrdCmd::Add { a, b } => {
            emit_result(format, parse_ordinal(&a)?.add(&parse_ordinal(&b)?));
        }
        OrdCmd::Mul { a, b } => {
            emit_result(format, parse_ordinal(&a)?.mul(&parse_ordinal(&b)?));
        }
        OrdCmd::Normalize { a } => {
            emit_result(format, parse_ordinal(&a)?);
        }
    }
    Ok(())
}

fn run_deg(cmd: DegCmd, format: Format) -> Result<(), Failure> {
    match cmd {
        DegCmd::Cmp { s, t } => {
            let (s, t) = (parse_degree(&s)?, parse_degree(&t)?);
            emit_result(format, ordering_name(s.cmp(&t)));
        }
        DegCmd::Succ { t } => {
            emit_result(format, parse_degree(&t)?.succ());
        }
        DegCmd::Normalize { t } => {
            emit_result(format, parse_degree(&t)?);
        }
        DegCmd::Name { t, kind } => {
            let kind = match kind {
                KindArg::Inaccessible => DegreeKind::Inaccessible,
                KindArg::Mahlo => DegreeKind::Mahlo,
            };
            let name = DegreeName::from_term(&parse_degree(&t)?, kind).map_err(domain)?;
            emit_result(format, name);
        }
        DegCmd::Unname { name } => {
            emit_result(format, parse_name(&name)?.to_term());
        }
        DegCmd::Enumerate { t, bound, samples, seed } => {
            let t = parse_degree(&t)?;
            let bound = parse_ordinal(&bound)?;
            let terms = t.enumerate_below(&bound, samples, seed).map_err(domain)?;
            let lines: Vec<String> = terms.iter().map(MetaOrdinal::to_string).collect();
            emit(format, lines.join("\n"), json!({ "result": lines }));
        }
        DegCmd::Eval { t, k } => {
            let value = parse_degree(&t)?.eval_at(&parse_ordinal(&k)?).map_err(domain)?;
            emit_result(format, value);
        }
    }
    Ok(())
}

fn run_model(cmd: ModelCmd, format: Format) -> Result<(), Failure> {
    match cmd {
        ModelCmd::Member { t, k } => {
            let holds = member(&parse_degree(&t)?, &parse_ordinal(&k)?).map_err(domain)?;
            emit(format, holds.to_string(), json!({ "result": holds }));
        }
        ModelCmd::Least { t } => {
            emit_result(format, least(&parse_degree(&t)?).map_err(domain)?);
        }
        ModelCmd::Degree { k } => {
            emit_result(format, exact_degree(&parse_ordinal(&k)?).map_err(domain)?);
        }
        ModelCmd::Class { t } => {
            emit_result(format, class_of(&parse_degree(&t)?).map_err(domain)?);
        }
    }
    Ok(())
}

fn load_kb(source: &KbSource) -> Result<KnowledgeBase, Failure> {
    match &source.kb {
        None => Ok(seed()),
        Some(path) => kb_load(path)
            .map_err(|e| Failure::Domain(format!("cannot load `{}`: {e}", path.display()))),
    }
}

fn query_failure(e: QueryError) -> Failure {
    match e {
        QueryError::BadParameter { .. } => Failure::Usage(format!("{e}\n{INSTANCE_GRAMMAR}")),
        other => Failure::Domain(other.to_string()),
    }
}

fn run_kb(cmd: KbCmd, format: Format) -> Result<(), Failure> {
    match cmd {
        KbCmd::Implies { from, to, source } => {
            let kb = load_kb(&source)?;
            let path = kb_implies(&kb, &from, &to).map_err(query_failure)?;
            emit_implication(format, path);
        }
        KbCmd::Separations { preserved, destroyed, source } => {
            let kb = load_kb(&source)?;
            let results = kb_separations(&kb, &preserved, &destroyed).map_err(query_failure)?;
            emit_separations(format, &results);
        }
        KbCmd::Validate { source } => {
            let kb = load_kb(&source)?;
            emit_report(format, &kb_validate(&kb));
        }
        KbCmd::List { source } => {
            let kb = load_kb(&source)?;
            emit_listing(format, &kb);
        }
    }
    Ok(())
}

fn emit_implication(format: Format, path: Option<Vec<ImplicationStep>>) {
    let Some(steps) = path else {
        emit(
            format,
            "not derivable".to_string(),
            json!({ "result": false, "path": [], "citations": [] }),
        );
        return;
    };
    let mut lines = vec!["derivable".to_string()];
    let mut citations: Vec<&str> = Vec::new();
    let mut rendered = Vec::new();
    for step in &steps {
        match step {
            ImplicationStep::Edge { citation, quote, from, to } => {
                lines.push(format!("  {from} => {to}  [{citation}]"));
                if !citations.contains(&citation.as_str()) {
                    citations.push(citation);
                }
                rendered.push(json!({
                    "kind": "edge",
                    "from": from,
                    "to": to,
                    "citation": citation,
                    "quote": quote,
                }));
            }
            ImplicationStep::Weaken { from, to } => {
                lines.push(format!("  {from} => {to}  (weakening)"));
                rendered.push(json!({ "kind": "weaken", "from": from, "to": to }));
            }
        }
    }
    emit(
        format,
        lines.join("\n"),
        json!({ "result": true, "path": rendered, "citations": citations }),
    );
}

fn emit_separations(format: Format, results: &[hierarchy_kb::SeparationResult]) {
    let mut lines = Vec::new();
    let mut rendered = Vec::new();
    let mut citations = Vec::new();
    for r in results {
        lines.push(format!("{}  [{}]", r.kind, r.citation));
        lines.push(format!("  {}", r.quote));
        let flags: Vec<String> = r.flags.iter().map(|f| f.to_string()).collect();
        if !flags.is_empty() {
            lines.push(format!("  flags: {}", flags.join(", ")));
        }
        citations.push(r.citation.clone());
        rendered.push(json!({
            "kind": r.kind.to_string(),
            "citation": r.citation,
            "quote": r.quote,
            "flags": flags,
        }));
    }
    let text = if lines.is_empty() {
        "no recorded separation".to_string()
    } else {
        lines.join("\n")
    };
    emit(format, text, json!({ "result": rendered, "citations": citations }));
}

fn emit_report(format: Format, report: &hierarchy_kb::ValidationReport) {
    let mut lines = Vec::new();
    if report.violations.is_empty() {
        lines.push("violations: none".to_string());
    } else {
        lines.push("violations:".to_string());
        for v in &report.violations {
            lines.push(format!("  - {v}"));
        }
    }
    if !report.equivalence_classes.is_empty() {
        lines.push("equivalence classes:".to_string());
        for class in &report.equivalence_classes {
            lines.push(format!("  {}", class.join(" = ")));
        }
    }
    emit(
        format,
        lines.join("\n"),
        json!({ "result": {
            "violations": report.violations,
            "equivalence_classes": report.equivalence_classes,
        }}),
    );
}

fn emit_listing(format: Format, kb: &KnowledgeBase) {
    let mut lines = vec!["nodes:".to_string()];
    let mut nodes = Vec::new();
    for n in &kb.nodes {
        lines.push(format!("  {:<24} {:<13} {}", n.id, n.parameter.to_string(), n.family));
        nodes.push(json!({
            "id": n.id,
            "display": n.display,
            "family": n.family.to_string(),
            "parameter": n.parameter.to_string(),
        }));
    }
    lines.push("edges:".to_string());
    let mut edges = Vec::new();
    for e in &kb.edges {
        lines.push(format!("  {:<19} {} => {}  [{}]", e.kind.to_string(), e.from, e.to, e.citation));
        let flags: Vec<String> = e.flags.iter().map(|f| f.to_string()).collect();
        edges.push(json!({
            "from": e.from.to_string(),
            "to": e.to.to_string(),
            "kind": e.kind.to_string(),
            "citation": e.citation,
            "quote": e.quote,
            "flags": flags,
        }));
    }
    emit(format, lines.join("\n"), json!({ "result": { "nodes": nodes, "edges": edges } }));
}
