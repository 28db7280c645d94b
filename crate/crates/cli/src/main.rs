use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use tropval::arrangement::{ArrangementError, ToricArrangement};
use tropval::oracle::{run_oracle_check, OracleConfig, OracleError};
use tropval::report::{analyze, header_rows, pad_table, render_analyze_table, ReportHeader};
use tropval::semiring::{
    very_uniform_closed_form, EngineConfig, Membership, SemiringError, SemiringProfile, DEFAULT_DEGREE_CAP,
};
use tropval::severi::{codim_upper_bound, nodal_codim, reducibility_threshold, threshold_scan, SeveriError, SeveriQuery};
use tropval::tropical::ValVector;

const EXIT_VALIDATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(name = "tropval", version, about = "Value semirings of toric branch arrangements")]
struct Cli {
    /// Arrangement file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest degree any layer may be computed in.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    max_degree: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest r accepted by the exhaustive oracle.
    #[arg(long, global = true, default_value_t = 6)]
    oracle_max_ground: usize,
    /// Drops the first degree-1 circuit before any query.
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Flags, layers, conductor, gaps, genus and generators.
    Analyze,
    /// Circuits of one degree layer, with witness forms.
    Layer {
        #[arg(long)]
        degree: u64,
    },
    /// Decide membership of a value vector such as "[2,1,inf]".
    Membership {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    Conductor,
    Gaps,
    Genus,
    /// Maximal-rank test and closed-form comparison.
    VeryUniform,
    /// Codimension bound against the nodal codimension.
    Severi {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        l: u64,
        /// Curve degree, checked against d > r.
        #[arg(long)]
        d: Option<u64>,
    },
    /// Least r in the reducible regime, with a scan up to --scan-to.
    SeveriThreshold {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        scan_to: Option<u64>,
        #[arg(long, default_value_t = 100)]
        r_max: u64,
    },
    /// Engine against the brute-force oracle.
    OracleCheck,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<ArrangementError> for Failure {
    fn from(e: ArrangementError) -> Self {
        Failure::validation(e.to_string())
    }
}

impl From<SemiringError> for Failure {
    fn from(e: SemiringError) -> Self {
        let code = match &e {
            SemiringError::Budget(_) | SemiringError::DegreeCap { .. } => EXIT_BUDGET,
            SemiringError::Disagreement(_) | SemiringError::GenerationFailed(_) => EXIT_DISAGREEMENT,
            _ => EXIT_VALIDATION,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<SeveriError> for Failure {
    fn from(e: SeveriError) -> Self {
        Failure::validation(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Budget(_) => Self {
                code: EXIT_BUDGET,
                message: e.to_string(),
            },
            OracleError::Engine(inner) => inner.into(),
            OracleError::NotApplicable(_) => Failure::validation(e.to_string()),
        }
    }
}

struct Output {
    json: Value,
    table: String,
    code: u8,
}

impl Output {
    fn ok(json: Value, table: String) -> Self {
        Self { json, table, code: 0 }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

struct Loaded {
    arr: ToricArrangement,
    sha256: String,
}

fn load(cli: &Cli) -> Result<Loaded, Failure> {
    let path = cli.input.as_ref().ok_or_else(|| Failure::validation("this command needs --input PATH"))?;
    let bytes = fs::read(path).map_err(|e| Failure::validation(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure::validation("arrangement file is not UTF-8"))?;
    let arr = ToricArrangement::from_json(&text)?;
    Ok(Loaded {
        arr,
        sha256: hex::encode(Sha256::digest(&bytes)),
    })
}

fn engine_config(cli: &Cli) -> EngineConfig {
    EngineConfig {
        degree_cap: cli.max_degree,
        seed: cli.seed,
        fault_drop_circuit: cli.inject_fault.then_some((1, 0)),
        ..EngineConfig::default()
    }
}

fn profile(cli: &Cli) -> Result<(SemiringProfile, ReportHeader), Failure> {
    let loaded = load(cli)?;
    let header = ReportHeader::new(Some(loaded.sha256), cli.seed, cli.max_degree);
    Ok((SemiringProfile::new(loaded.arr, engine_config(cli))?, header))
}

fn envelope(header: &ReportHeader, command: &str, result: Value) -> Value {
    json!({ "header": header, "command": command, "result": result })
}

fn table_with_header(header: &ReportHeader, body: Vec<Vec<String>>) -> String {
    let mut rows = header_rows(header);
    rows.extend(body);
    pad_table(&rows)
}

fn list<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Analyze => {
            let (p, header) = profile(cli)?;
            if !p.arrangement().is_essential() {
                return Err(ArrangementError::NotEssential.into());
            }
            let rep = analyze(&p, header)?;
            Ok(Output::ok(to_value(&rep), render_analyze_table(&rep)))
        }
        Command::Layer { degree } => {
            let (p, header) = profile(cli)?;
            let layer = p.layer(*degree)?;
            let mut body = vec![
                vec!["degree".into(), degree.to_string()],
                vec!["dimension".into(), layer.basis.len().to_string()],
                vec!["rank".into(), layer.rank.to_string()],
            ];
            for (c, w) in layer.circuits().iter().zip(&layer.witnesses) {
                body.push(vec![format!("circuit {c}"), w.to_string()]);
            }
            Ok(Output::ok(envelope(&header, "layer", to_value(&*layer)), table_with_header(&header, body)))
        }
        Command::Membership { vector } => {
            let (p, header) = profile(cli)?;
            let a = ValVector::parse(vector).map_err(|e| Failure::validation(format!("malformed vector: {e}")))?;
            let (result, body) = match p.contains(&a)? {
                Membership::Member(cert) => (
                    json!({ "vector": a, "member": true, "certificate": cert }),
                    vec![
                        vec!["vector".into(), a.to_string()],
                        vec!["member".into(), "yes".into()],
                        vec!["polynomial".into(), cert.polynomial.to_string()],
                    ],
                ),
                Membership::NonMember { degree, label } => (
                    json!({ "vector": a, "member": false, "failing_degree": degree, "uncovered_label": label + 1 }),
                    vec![
                        vec!["vector".into(), a.to_string()],
                        vec!["member".into(), "no".into()],
                        vec!["failing degree".into(), degree.to_string()],
                        vec!["uncovered label".into(), (label + 1).to_string()],
                    ],
                ),
            };
            Ok(Output::ok(envelope(&header, "membership", result), table_with_header(&header, body)))
        }
        Command::Conductor => {
            let (p, header) = profile(cli)?;
            let rep = p.conductor()?;
            let body = vec![
                vec![
                    "conductor".into(),
                    rep.conductor.as_ref().map_or_else(|| format!("none ({})", rep.diagnostic.clone().unwrap_or_default()), ToString::to_string),
                ],
                vec![
                    "singleton degrees".into(),
                    list(&rep.singleton_degrees.iter().map(|d| d.map_or("-".into(), |d| d.to_string())).collect::<Vec<String>>()),
                ],
                vec!["box points checked".into(), rep.box_points_checked.to_string()],
                vec!["infinity probes".into(), rep.infinity_probes.to_string()],
            ];
            Ok(Output::ok(envelope(&header, "conductor", to_value(&rep)), table_with_header(&header, body)))
        }
        Command::Gaps => {
            let (p, header) = profile(cli)?;
            let conductor = p.conductor_vector()?;
            let gaps = p.gap_sequence()?;
            let non_members = p.staircase_non_members()?;
            let body = vec![
                vec!["conductor".into(), conductor.to_string()],
                vec!["gap sequence".into(), list(&gaps)],
                vec!["staircase non-members".into(), list(&non_members)],
            ];
            let result = json!({ "conductor": conductor, "gap_sequence": gaps, "staircase_non_members": non_members });
            Ok(Output::ok(envelope(&header, "gaps", result), table_with_header(&header, body)))
        }
        Command::Genus => {
            let (p, header) = profile(cli)?;
            let rep = p.genus()?;
            let mut body = vec![vec!["genus".into(), rep.genus.to_string()], vec!["gap sequence".into(), list(&rep.gaps)]];
            if let Some(pi) = &rep.path_independence {
                body.push(vec!["path independent".into(), if pi.independent { "yes" } else { "no" }.into()]);
            }
            if let Some(w) = &rep.warning {
                body.push(vec!["warning".into(), w.clone()]);
            }
            Ok(Output::ok(envelope(&header, "genus", to_value(&rep)), table_with_header(&header, body)))
        }
        Command::VeryUniform => {
            let (p, header) = profile(cli)?;
            let test = p.arrangement().is_very_uniform()?;
            let mut body = vec![vec!["very uniform".into(), if test.very_uniform { "yes" } else { "no" }.into()]];
            for c in &test.checks {
                body.push(vec![format!("rank C_{}", c.degree), format!("{} of {}", c.rank, c.expected)]);
            }
            let cross = if test.very_uniform { Some(p.cross_check_closed_form()?) } else { None };
            let closed = very_uniform_closed_form(p.arrangement().n(), p.r())?;
            body.push(vec!["closed-form conductor".into(), closed.conductor.to_string()]);
            if let Some(x) = &cross {
                body.push(vec![
                    "computed conductor".into(),
                    x.computed_conductor.as_ref().map_or("none".into(), ToString::to_string),
                ]);
                body.push(vec!["computed gaps".into(), list(&x.computed_gaps)]);
                body.push(vec!["gaps outside family".into(), list(&x.gaps_outside_family)]);
                body.push(vec!["consistent".into(), if x.consistent { "yes" } else { "no" }.into()]);
            }
            let result = json!({ "test": test, "closed_form": closed, "cross_check": cross });
            Ok(Output::ok(envelope(&header, "very-uniform", result), table_with_header(&header, body)))
        }
        Command::Severi { n, r, l, d } => {
            let header = ReportHeader::new(None, cli.seed, cli.max_degree);
            let bound = codim_upper_bound(SeveriQuery { n: *n, r: *r, l: *l, d: *d })?;
            let g = r * (r - 1) / 2;
            let nodal = nodal_codim(*n, g);
            let reducible = (bound.value as i64) < nodal;
            let verdict = if reducible { "strictly less: reducible regime" } else { "not strictly less" };
            let mut body = vec![
                vec!["codimension bound".into(), bound.value.to_string()],
                vec![format!("nodal codimension (g = {g})"), nodal.to_string()],
                vec!["comparison".into(), verdict.into()],
            ];
            if let Some(w) = &bound.warning {
                body.push(vec!["warning".into(), w.clone()]);
            }
            let result = json!({ "bound": bound, "genus": g, "nodal_codim": nodal, "reducible": reducible, "verdict": verdict });
            Ok(Output::ok(envelope(&header, "severi", result), table_with_header(&header, body)))
        }
        Command::SeveriThreshold { n, scan_to, r_max } => {
            let header = ReportHeader::new(None, cli.seed, cli.max_degree);
            let t = reducibility_threshold(*n)?;
            let mut body = vec![
                vec!["n".into(), n.to_string()],
                vec!["threshold r".into(), t.r.to_string()],
                vec!["bound at threshold".into(), t.bound.to_string()],
                vec!["nodal at threshold".into(), t.nodal.to_string()],
            ];
            let scan = match scan_to {
                Some(hi) => {
                    let s = threshold_scan(*n, *hi, *r_max)?;
                    for row in &s.rows {
                        body.push(vec![format!("n = {}", row.n), format!("threshold {}", row.threshold)]);
                    }
                    body.push(vec!["inequality holds above threshold".into(), if s.all_hold { "yes" } else { "no" }.into()]);
                    Some(s)
                }
                None => None,
            };
            let result = json!({ "threshold": t, "scan": scan });
            Ok(Output::ok(envelope(&header, "severi-threshold", result), table_with_header(&header, body)))
        }
        Command::OracleCheck => {
            let (p, header) = profile(cli)?;
            let config = OracleConfig {
                max_ground: cli.oracle_max_ground,
                seed: cli.seed,
                max_degree: cli.max_degree,
                ..OracleConfig::default()
            };
            let manifest = run_oracle_check(&p, config)?;
            let mut body: Vec<Vec<String>> = manifest
                .checks
                .iter()
                .map(|c| vec![if c.passed { "pass" } else { "FAIL" }.into(), c.name.clone(), c.checked.to_string()])
                .collect();
            if let Some(ce) = &manifest.counterexample {
                body.push(vec!["counterexample".into(), ce.clone()]);
            }
            let code = if manifest.passed { 0 } else { EXIT_DISAGREEMENT };
            Ok(Output {
                json: envelope(&header, "oracle-check", to_value(&manifest)),
                table: table_with_header(&header, body),
                code,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
                Format::Table => print!("{}", out.table),
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
