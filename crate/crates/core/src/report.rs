//! Full analysis reports and their fixed-width text rendering.

use serde::Serialize;

use crate::arrangement::{ArrangementError, VeryUniformReport};
use crate::semiring::{ConductorReport, DegreeLayer, GeneratorReport, GenusReport, SemiringError, SemiringProfile};
use crate::tropical::ValVector;

pub const TOOL_NAME: &str = "tropval";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Provenance embedded in every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportHeader {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_sha256: Option<String>,
    pub seed: u64,
    pub degree_cap: u64,
}

impl ReportHeader {
    pub fn new(input_sha256: Option<String>, seed: u64, degree_cap: u64) -> Self {
        Self {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            input_sha256,
            seed,
            degree_cap,
        }
    }
}

/// A report section that may be skipped for budget or applicability reasons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome<T> {
    Ok { value: T },
    BudgetExceeded { message: String },
    NotApplicable { message: String },
}

impl<T> Outcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Ok { value } => Some(value),
            _ => None,
        }
    }

    fn status(&self) -> &'static str {
        match self {
            Outcome::Ok { .. } => "ok",
            Outcome::BudgetExceeded { .. } => "budget exceeded",
            Outcome::NotApplicable { .. } => "not applicable",
        }
    }
}

/// Converts budget and applicability failures into skipped sections; other
/// errors propagate.
pub fn outcome<T>(r: Result<T, SemiringError>) -> Result<Outcome<T>, SemiringError> {
    match r {
        Ok(value) => Ok(Outcome::Ok { value }),
        Err(e @ (SemiringError::Budget(_) | SemiringError::DegreeCap { .. })) => Ok(Outcome::BudgetExceeded { message: e.to_string() }),
        Err(e @ (SemiringError::NoConductor | SemiringError::NotApplicable(_))) => Ok(Outcome::NotApplicable { message: e.to_string() }),
        Err(SemiringError::Arrangement(e @ (ArrangementError::NotLineArrangement | ArrangementError::NotEssential))) => {
            Ok(Outcome::NotApplicable { message: e.to_string() })
        }
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementSummary {
    pub n: usize,
    pub r: usize,
    pub field: String,
    pub weights: Vec<u32>,
    pub essential: bool,
    pub distinguished: bool,
    pub line_arrangement: bool,
    pub simple: bool,
    pub uniform: bool,
    pub very_uniform: Outcome<VeryUniformReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub header: ReportHeader,
    pub arrangement: ArrangementSummary,
    pub layers: Vec<DegreeLayer>,
    pub conductor: ConductorReport,
    pub genus: Outcome<GenusReport>,
    pub generators: Outcome<GeneratorReport>,
}

impl AnalyzeReport {
    pub fn conductor_vector(&self) -> Option<&ValVector> {
        self.conductor.conductor.as_ref()
    }
}

/// Layers shown when no conductor bounds the interesting degrees.
const FALLBACK_LAYERS: u64 = 4;

pub fn analyze(profile: &SemiringProfile, header: ReportHeader) -> Result<AnalyzeReport, SemiringError> {
    let arr = profile.arrangement();
    let matroid = arr.matroid();
    let arrangement = ArrangementSummary {
        n: arr.n(),
        r: arr.r(),
        field: arr.field().to_string(),
        weights: profile.weights().to_vec(),
        essential: arr.is_essential(),
        distinguished: arr.is_distinguished(),
        line_arrangement: arr.is_line_arrangement(),
        simple: matroid.is_simple(),
        uniform: matroid.is_uniform(),
        very_uniform: outcome(arr.is_very_uniform().map_err(SemiringError::from))?,
    };
    let conductor = profile.conductor()?;
    let top = match profile.stabilization_degree() {
        Ok(d) => d,
        Err(_) => FALLBACK_LAYERS.min(profile.config().degree_cap),
    };
    let layers = (0..=top).map(|d| profile.layer(d).map(|l| (*l).clone())).collect::<Result<Vec<_>, _>>()?;
    let genus = outcome(profile.genus())?;
    let generators = outcome(profile.generators())?;
    Ok(AnalyzeReport {
        header,
        arrangement,
        layers,
        conductor,
        genus,
        generators,
    })
}

/// Left-aligned columns padded to the widest cell.
pub fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn join<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

pub fn header_rows(h: &ReportHeader) -> Vec<Vec<String>> {
    vec![
        vec!["tool".into(), format!("{} {}", h.tool, h.version)],
        vec!["input sha256".into(), h.input_sha256.clone().unwrap_or_else(|| "-".into())],
        vec!["seed".into(), h.seed.to_string()],
        vec!["degree cap".into(), h.degree_cap.to_string()],
    ]
}

pub fn render_analyze_table(rep: &AnalyzeReport) -> String {
    let a = &rep.arrangement;
    let yes = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut rows = header_rows(&rep.header);
    rows.extend([
        vec!["n, r".into(), format!("{}, {}", a.n, a.r)],
        vec!["field".into(), a.field.clone()],
        vec!["weights".into(), join(&a.weights)],
        vec!["essential".into(), yes(a.essential)],
        vec!["distinguished".into(), yes(a.distinguished)],
        vec!["line arrangement".into(), yes(a.line_arrangement)],
        vec!["simple".into(), yes(a.simple)],
        vec!["uniform".into(), yes(a.uniform)],
        vec![
            "very uniform".into(),
            match &a.very_uniform {
                Outcome::Ok { value } => yes(value.very_uniform),
                other => other.status().into(),
            },
        ],
        vec![
            "conductor".into(),
            rep.conductor.conductor.as_ref().map_or_else(
                || format!("none ({})", rep.conductor.diagnostic.clone().unwrap_or_default()),
                ToString::to_string,
            ),
        ],
    ]);
    match &rep.genus {
        Outcome::Ok { value } => {
            rows.push(vec!["genus".into(), value.genus.to_string()]);
            rows.push(vec!["gap sequence".into(), join(&value.gaps)]);
            if let Some(pi) = &value.path_independence {
                rows.push(vec!["path independent".into(), yes(pi.independent)]);
            }
            if let Some(w) = &value.warning {
                rows.push(vec!["warning".into(), w.clone()]);
            }
        }
        other => rows.push(vec!["genus".into(), other.status().into()]),
    }
    match &rep.generators {
        Outcome::Ok { value } => rows.push(vec!["generators".into(), join(&value.generators)]),
        other => rows.push(vec!["generators".into(), other.status().into()]),
    }
    let mut out = pad_table(&rows);
    out.push('\n');
    let mut layer_rows = vec![vec!["degree".into(), "dim".into(), "rank".into(), "circuits".into()]];
    for l in &rep.layers {
        layer_rows.push(vec![l.degree.to_string(), l.basis.len().to_string(), l.rank.to_string(), join(l.circuits())]);
    }
    out.push_str(&pad_table(&layer_rows));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::ToricArrangement;
    use crate::semiring::EngineConfig;

    #[test]
    fn planar_report() {
        let arr = ToricArrangement::rational_lines(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let p = SemiringProfile::new(arr, EngineConfig::default()).unwrap();
        let rep = analyze(&p, ReportHeader::new(None, 0, 64)).unwrap();
        assert_eq!(rep.conductor_vector(), Some(&ValVector::constant(3, 2)));
        assert_eq!(rep.genus.value().unwrap().genus, 3);
        assert_eq!(rep.layers.len(), 3);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"inf\""));
        let table = render_analyze_table(&rep);
        assert!(table.contains("conductor"));
        assert!(table.contains("(2,2,2)"));
    }

    #[test]
    fn padding() {
        let t = pad_table(&[vec!["a".into(), "bb".into()], vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "a    bb\nccc  d\n");
    }
}
