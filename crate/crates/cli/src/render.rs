//! Human-readable tables and the machine JSON form of check reports.

use avgbi_core::scalar;
use avgbi_core::{CheckReport, Q};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomJson {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub kind: String,
    pub axioms: Vec<AxiomJson>,
    pub verdict: &'static str,
}

fn coords(v: &[Q]) -> Vec<String> {
    v.iter().map(scalar::format).collect()
}

fn witness_labels(indices: &[usize], labels: Option<&[String]>) -> Option<Vec<String>> {
    let labels = labels?;
    if indices.is_empty() || indices.iter().any(|&i| i >= labels.len()) {
        return None;
    }
    Some(indices.iter().map(|&i| labels[i].clone()).collect())
}

pub fn verdict(rep: &CheckReport) -> &'static str {
    if rep.passed() {
        "pass"
    } else {
        "fail"
    }
}

/// `labels` names the basis the witness indices refer to, when there is one.
pub fn report_json(rep: &CheckReport, labels: Option<&[String]>) -> ReportJson {
    let axioms = rep
        .axioms
        .iter()
        .map(|a| AxiomJson {
            id: a.id.clone(),
            pass: a.pass,
            informational: a.informational,
            witness: a.witness.as_ref().map(|w| WitnessJson {
                indices: w.indices.clone(),
                labels: witness_labels(&w.indices, labels),
                lhs: coords(&w.lhs),
                rhs: coords(&w.rhs),
            }),
        })
        .collect();
    ReportJson { kind: rep.kind.clone(), axioms, verdict: verdict(rep) }
}

pub fn table(rep: &CheckReport, labels: Option<&[String]>) -> String {
    let mut out = format!("{}: {}\n", rep.kind, verdict(rep));
    let width = rep.axioms.iter().map(|a| a.id.chars().count()).max().unwrap_or(0).max(6);
    for a in &rep.axioms {
        let tag = match (a.pass, a.informational) {
            (true, _) => "ok",
            (false, true) => "note",
            (false, false) => "FAIL",
        };
        let pad = width - a.id.chars().count();
        out.push_str(&format!("  {}{}  {tag}", a.id, " ".repeat(pad)));
        if let Some(w) = &a.witness {
            let at = match witness_labels(&w.indices, labels) {
                Some(l) => format!("({})", l.join(", ")),
                None => format!("{:?}", w.indices),
            };
            out.push_str(&format!(
                "  at {at}: lhs [{}] rhs [{}]",
                coords(&w.lhs).join(", "),
                coords(&w.rhs).join(", ")
            ));
        }
        out.push('\n');
    }
    out
}
