//! Entry-by-entry comparison of a constructed document with a reference
//! document, matched by basis labels.

use std::collections::BTreeMap;

use avgbi_core::{scalar, Q};
use num_traits::Zero;
use serde::Serialize;

use crate::document::{Document, Entries, Map, Table};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub labels: Vec<String>,
    pub ours: Option<String>,
    pub reference: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SectionDiff {
    pub section: String,
    pub matches: Vec<DiffEntry>,
    pub mismatches: Vec<DiffEntry>,
    /// Nonzero in ours only.
    pub extra: Vec<DiffEntry>,
    /// Nonzero in the reference only.
    pub missing: Vec<DiffEntry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReferenceDiff {
    pub sections: Vec<SectionDiff>,
    /// Sections present in only one of the documents, or not comparable.
    pub skipped: Vec<String>,
}

impl ReferenceDiff {
    pub fn is_identical(&self) -> bool {
        self.sections.iter().all(|s| s.mismatches.is_empty() && s.extra.is_empty() && s.missing.is_empty())
    }

    /// The comparison of one entry, if that section was compared.
    pub fn find(&self, section: &str, labels: &[&str]) -> Option<(&'static str, &DiffEntry)> {
        let s = self.sections.iter().find(|s| s.section == section)?;
        let groups: [(&'static str, &Vec<DiffEntry>); 4] =
            [("match", &s.matches), ("mismatch", &s.mismatches), ("extra", &s.extra), ("missing", &s.missing)];
        groups.into_iter().find_map(|(tag, g)| g.iter().find(|e| e.labels == labels).map(|e| (tag, e)))
    }

    pub fn render(&self) -> String {
        let mut out = String::from("reference diff\n");
        for s in &self.sections {
            out.push_str(&format!(
                "  {}: {} match, {} mismatch, {} extra, {} missing\n",
                s.section,
                s.matches.len(),
                s.mismatches.len(),
                s.extra.len(),
                s.missing.len()
            ));
            let groups = [("match", &s.matches), ("mismatch", &s.mismatches), ("extra", &s.extra), ("missing", &s.missing)];
            for (tag, g) in groups {
                for e in g {
                    let show = |c: &Option<String>| c.clone().unwrap_or_else(|| "0".into());
                    out.push_str(&format!(
                        "    {tag:<8} ({}) ours {} reference {}\n",
                        e.labels.join(", "),
                        show(&e.ours),
                        show(&e.reference)
                    ));
                }
            }
        }
        for s in &self.skipped {
            out.push_str(&format!("  {s}: skipped\n"));
        }
        out
    }
}

fn labelled<const N: usize>(e: &Entries<N>, basis: &[String]) -> BTreeMap<Vec<String>, Q> {
    e.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.iter().map(|&i| basis[i].clone()).collect(), c.clone()))
        .collect()
}

fn compare(section: &str, ours: BTreeMap<Vec<String>, Q>, reference: BTreeMap<Vec<String>, Q>) -> SectionDiff {
    let mut d = SectionDiff { section: section.to_string(), ..Default::default() };
    for (k, c) in &ours {
        let entry = DiffEntry {
            labels: k.clone(),
            ours: Some(scalar::format(c)),
            reference: reference.get(k).map(scalar::format),
        };
        match reference.get(k) {
            Some(r) if r == c => d.matches.push(entry),
            Some(_) => d.mismatches.push(entry),
            None => d.extra.push(entry),
        }
    }
    for (k, r) in &reference {
        if !ours.contains_key(k) {
            d.missing.push(DiffEntry { labels: k.clone(), ours: None, reference: Some(scalar::format(r)) });
        }
    }
    d
}

/// Compares the tables and maps present in both documents. Module, pair and
/// pre-Lie sections are listed as skipped.
pub fn reference_diff(ours: &Document, reference: &Document) -> ReferenceDiff {
    let mut out = ReferenceDiff::default();
    for t in Table::ALL {
        match (ours.tables.get(&t), reference.tables.get(&t)) {
            (Some(a), Some(b)) => {
                out.sections.push(compare(t.name(), labelled(a, &ours.basis), labelled(b, &reference.basis)))
            }
            (None, None) => {}
            _ => out.skipped.push(t.name().to_string()),
        }
    }
    for m in Map::ALL {
        match (ours.maps.get(&m), reference.maps.get(&m)) {
            (Some(a), Some(b)) => {
                out.sections.push(compare(m.name(), labelled(a, &ours.basis), labelled(b, &reference.basis)))
            }
            (None, None) => {}
            _ => out.skipped.push(m.name().to_string()),
        }
    }
    let sections = [
        ("module", ours.module.is_some() || reference.module.is_some()),
        ("pair", ours.pair.is_some() || reference.pair.is_some()),
        ("prelie", ours.prelie.is_some() || reference.prelie.is_some()),
    ];
    out.skipped.extend(sections.iter().filter(|s| s.1).map(|s| s.0.to_string()));
    out
}
