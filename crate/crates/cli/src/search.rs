//! Exhaustive search over one section of a document: every assignment of
//! values from a finite entry set to the chosen slots is built and the ones
//! passing a check kind are kept.

use avgbi_core::Q;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use crate::checks::{find_kind, run_check};
use crate::document::{coefficient, json_coeff, json_string, Document, Entries, Map, ModuleSection, Table};
use crate::error::{CliError, CliResult};
use crate::fixtures;

/// Largest number of candidates enumerated without `--force`.
pub const BUDGET: u128 = 10_000_000;

/// The section whose entries vary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Table(Table),
    Map(Map),
    ModuleP,
    ModuleBeta,
}

impl Target {
    pub fn parse(s: &str) -> Option<Target> {
        match s {
            "module.p" => Some(Target::ModuleP),
            "module.beta" => Some(Target::ModuleBeta),
            _ => Table::from_name(s).map(Target::Table).or_else(|| Map::from_name(s).map(Target::Map)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Table(t) => t.name(),
            Target::Map(m) => m.name(),
            Target::ModuleP => "module.p",
            Target::ModuleBeta => "module.beta",
        }
    }

    /// Label lists for each index of an entry key.
    fn spaces(self, doc: &Document) -> CliResult<Vec<Vec<String>>> {
        let main = doc.basis.clone();
        let module = || {
            doc.module
                .as_ref()
                .map(|m| m.basis.clone())
                .ok_or_else(|| CliError::input("the template document has no module section"))
        };
        Ok(match self {
            Target::Table(_) => vec![main.clone(), main.clone(), main],
            Target::Map(_) => vec![main.clone(), main],
            Target::ModuleP => vec![module()?, main],
            Target::ModuleBeta => vec![module()?, module()?],
        })
    }
}

/// How a two-index slot `(i, j)` fills the mirrored slot `(j, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Free,
    /// `(j, i)` gets the same value; slots have `i ≤ j`.
    Symmetric,
    /// `(j, i)` gets the negated value; slots have `i < j`.
    Antisymmetric,
}

#[derive(Clone, Debug)]
pub struct Template {
    pub document: Document,
    pub target: Target,
    pub entries: Vec<Q>,
    /// Entry keys that vary, in enumeration order (first slot slowest).
    pub slots: Vec<Vec<usize>>,
    pub shape: Shape,
    pub predicate: String,
    pub lambda: Option<Q>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTemplate {
    document: Option<Value>,
    fixture: Option<String>,
    vary: String,
    entries: Vec<Value>,
    slots: Option<Vec<Vec<String>>>,
    shape: Option<String>,
    predicate: String,
    lambda: Option<Value>,
}

fn all_keys(spaces: &[Vec<String>]) -> Vec<Vec<usize>> {
    let mut keys = vec![Vec::new()];
    for s in spaces {
        keys = keys.into_iter().flat_map(|k| (0..s.len()).map(move |i| [k.clone(), vec![i]].concat())).collect();
    }
    keys
}

impl Template {
    /// All slots of the target admitted by the shape.
    pub fn new(document: Document, target: Target, entries: Vec<Q>, shape: Shape, predicate: &str) -> CliResult<Self> {
        let spaces = target.spaces(&document)?;
        let slots = all_keys(&spaces).into_iter().filter(|k| admits(shape, k)).collect();
        let t = Template { document, target, entries, slots, shape, predicate: predicate.to_string(), lambda: None };
        t.validate()?;
        Ok(t)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let raw: RawTemplate =
            serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed search template: {e}")))?;
        let document = match (&raw.document, &raw.fixture) {
            (Some(d), None) => Document::parse(&d.to_string())?,
            (None, Some(name)) => Document::parse(fixtures::get(name)?)?,
            _ => return Err(CliError::input("a search template needs exactly one of `document` and `fixture`")),
        };
        let target = Target::parse(&raw.vary).ok_or_else(|| {
            CliError::input(format!(
                "cannot vary `{}`; use a table, a map, `module.p` or `module.beta`",
                raw.vary
            ))
        })?;
        let entries = raw
            .entries
            .iter()
            .enumerate()
            .map(|(i, v)| {
                coefficient(v).ok_or_else(|| CliError::input(format!("entries item {i} is not a coefficient")))
            })
            .collect::<CliResult<Vec<Q>>>()?;
        let shape = match raw.shape.as_deref() {
            None | Some("free") => Shape::Free,
            Some("symmetric") => Shape::Symmetric,
            Some("antisymmetric") => Shape::Antisymmetric,
            Some(s) => return Err(CliError::input(format!("unknown shape `{s}`; use free, symmetric or antisymmetric"))),
        };
        let mut t = Template::new(document, target, entries, shape, &raw.predicate)?;
        if let Some(slots) = &raw.slots {
            let spaces = target.spaces(&t.document)?;
            t.slots = slots
                .iter()
                .enumerate()
                .map(|(pos, labels)| slot_key(pos, labels, &spaces))
                .collect::<CliResult<_>>()?;
        }
        if let Some(l) = &raw.lambda {
            t.lambda = Some(coefficient(l).ok_or_else(|| CliError::input("lambda is not a coefficient"))?);
        }
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> CliResult<()> {
        if find_kind(&self.predicate).is_none() {
            return Err(CliError::input(format!("unknown predicate `{}`", self.predicate)));
        }
        if self.shape != Shape::Free && !matches!(self.target, Target::Map(_) | Target::ModuleBeta) {
            return Err(CliError::input("symmetric and antisymmetric shapes need a two-index square section"));
        }
        for (pos, s) in self.slots.iter().enumerate() {
            if !admits(self.shape, s) {
                return Err(CliError::input(format!("slot {pos} is not admitted by the shape")));
            }
        }
        Ok(())
    }

    /// `|entries|^slots`, or `None` when it does not fit in 128 bits.
    pub fn candidates(&self) -> Option<u128> {
        let slots = u32::try_from(self.slots.len()).ok()?;
        (self.entries.len() as u128).checked_pow(slots)
    }

    fn assignment(&self, mut index: u128) -> Vec<usize> {
        let base = self.entries.len() as u128;
        let mut digits = vec![0; self.slots.len()];
        for d in digits.iter_mut().rev() {
            *d = (index % base) as usize;
            index /= base;
        }
        digits
    }

    fn section(&self) -> Entries<2> {
        let doc = &self.document;
        match self.target {
            Target::Map(m) => doc.maps.get(&m).cloned().unwrap_or_default(),
            Target::ModuleP => doc.module.as_ref().and_then(|m| m.p.clone()).unwrap_or_default(),
            Target::ModuleBeta => doc.module.as_ref().and_then(|m| m.beta.clone()).unwrap_or_default(),
            Target::Table(_) => Entries::new(),
        }
    }

    /// The candidate document for one assignment and the varied section's
    /// nonzero entries.
    fn candidate(&self, digits: &[usize]) -> (Document, Vec<(Vec<usize>, Q)>) {
        let mut doc = self.document.clone();
        let values = self.slots.iter().zip(digits).map(|(s, &d)| (s.as_slice(), &self.entries[d]));
        let solution: Vec<(Vec<usize>, Q)>;
        if let Target::Table(t) = self.target {
            let mut e = doc.tables.get(&t).cloned().unwrap_or_default();
            for (s, c) in values {
                e.insert([s[0], s[1], s[2]], c.clone());
            }
            e.retain(|_, c| !c.is_zero());
            solution = e.iter().map(|(k, c)| (k.to_vec(), c.clone())).collect();
            doc.tables.insert(t, e);
        } else {
            let mut e = self.section();
            for (s, c) in values {
                e.insert([s[0], s[1]], c.clone());
                match self.shape {
                    Shape::Free => {}
                    Shape::Symmetric => {
                        e.insert([s[1], s[0]], c.clone());
                    }
                    Shape::Antisymmetric => {
                        e.insert([s[1], s[0]], -c.clone());
                    }
                }
            }
            e.retain(|_, c| !c.is_zero());
            solution = e.iter().map(|(k, c)| (k.to_vec(), c.clone())).collect();
            match self.target {
                Target::Map(m) => {
                    doc.maps.insert(m, e);
                }
                Target::ModuleP | Target::ModuleBeta => {
                    let m: &mut ModuleSection = doc.module.as_mut().expect("checked when the template was built");
                    if self.target == Target::ModuleP {
                        m.p = Some(e);
                    } else {
                        m.beta = Some(e);
                    }
                }
                Target::Table(_) => unreachable!(),
            }
        }
        (doc, solution)
    }

    fn test(&self, index: u128) -> CliResult<Option<Vec<(Vec<usize>, Q)>>> {
        let (doc, solution) = self.candidate(&self.assignment(index));
        let rep = run_check(&doc, &self.predicate, self.lambda.as_ref())?;
        Ok(rep.passed().then_some(solution))
    }
}

fn admits(shape: Shape, key: &[usize]) -> bool {
    match shape {
        Shape::Free => true,
        Shape::Symmetric => key[0] <= key[1],
        Shape::Antisymmetric => key[0] < key[1],
    }
}

fn slot_key(pos: usize, labels: &[String], spaces: &[Vec<String>]) -> CliResult<Vec<usize>> {
    if labels.len() != spaces.len() {
        return Err(CliError::input(format!("slot {pos}: expected {} labels", spaces.len())));
    }
    labels
        .iter()
        .zip(spaces)
        .map(|(l, s)| {
            s.iter()
                .position(|x| x == l)
                .ok_or_else(|| CliError::input(format!("slot {pos}: unknown basis label `{l}`")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub predicate: String,
    pub vary: &'static str,
    pub examined: u128,
    /// Nonzero entries of the varied section for every passing candidate, in
    /// enumeration order.
    pub solutions: Vec<Vec<(Vec<usize>, Q)>>,
    /// Labels for each index of an entry key.
    pub spaces: Vec<Vec<String>>,
}

impl SearchOutcome {
    /// A solution as `(labels, coefficient)` pairs.
    pub fn labelled(&self, i: usize) -> Vec<(Vec<String>, Q)> {
        self.solutions[i]
            .iter()
            .map(|(k, c)| (k.iter().zip(&self.spaces).map(|(&x, s)| s[x].clone()).collect(), c.clone()))
            .collect()
    }

    /// Whether some solution has exactly these nonzero entries.
    pub fn contains(&self, entries: &[(&[&str], Q)]) -> bool {
        (0..self.solutions.len()).any(|i| {
            let mut got = self.labelled(i);
            let mut want: Vec<(Vec<String>, Q)> =
                entries.iter().map(|(l, c)| (l.iter().map(|s| s.to_string()).collect(), c.clone())).collect();
            got.sort();
            want.sort();
            got == want
        })
    }

    /// JSON with one solution per line; each solution lists its entries in
    /// the document entry format.
    pub fn render(&self) -> String {
        let lines: Vec<String> = (0..self.solutions.len())
            .map(|i| {
                let items: Vec<String> = self
                    .labelled(i)
                    .iter()
                    .map(|(l, c)| {
                        let mut parts: Vec<String> = l.iter().map(|x| json_string(x)).collect();
                        parts.push(json_coeff(c));
                        format!("[{}]", parts.join(", "))
                    })
                    .collect();
                format!("    [{}]", items.join(", "))
            })
            .collect();
        let body = if lines.is_empty() { "[]".to_string() } else { format!("[\n{}\n  ]", lines.join(",\n")) };
        format!(
            "{{\n  \"predicate\": {},\n  \"vary\": {},\n  \"examined\": {},\n  \"solutions\": {body}\n}}\n",
            json_string(&self.predicate),
            json_string(self.vary),
            self.examined
        )
    }
}

/// Enumerates every candidate on `threads` workers, each taking one
/// contiguous range; results are merged in enumeration order.
pub fn search(t: &Template, threads: usize, force: bool) -> CliResult<SearchOutcome> {
    let total = t
        .candidates()
        .ok_or_else(|| CliError::input("the search space is too large to enumerate"))?;
    if total > BUDGET && !force {
        return Err(CliError::input(format!(
            "{total} candidates exceed the budget of {BUDGET}; pass --force to run anyway"
        )));
    }
    let spaces = t.target.spaces(&t.document)?;
    let threads = threads.max(1) as u128;
    let chunk = total.div_ceil(threads).max(1);
    let ranges: Vec<(u128, u128)> = (0..threads)
        .map(|k| ((k * chunk).min(total), ((k + 1) * chunk).min(total)))
        .filter(|(a, b)| a < b)
        .collect();
    let results: Vec<CliResult<Vec<Vec<(Vec<usize>, Q)>>>> = std::thread::scope(|s| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                s.spawn(move || {
                    let mut found = Vec::new();
                    for i in lo..hi {
                        if let Some(sol) = t.test(i)? {
                            found.push(sol);
                        }
                    }
                    Ok(found)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    let mut solutions = Vec::new();
    for r in results {
        solutions.extend(r?);
    }
    Ok(SearchOutcome { predicate: t.predicate.clone(), vary: t.target.name(), examined: total, solutions, spaces })
}
