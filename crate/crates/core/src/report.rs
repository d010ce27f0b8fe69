//! Per-axiom verification reports.

use std::fmt;

use crate::scalar::{self, Q};

/// First failing instance of an identity: the basis indices it was evaluated
/// at and the coordinates of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Q>,
    pub rhs: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub id: String,
    pub pass: bool,
    pub witness: Option<Witness>,
    /// Reported but ignored by the verdict.
    pub informational: bool,
}

impl AxiomResult {
    pub fn pass(id: impl Into<String>) -> Self {
        AxiomResult { id: id.into(), pass: true, witness: None, informational: false }
    }

    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        AxiomResult { id: id.into(), pass: false, witness: Some(witness), informational: false }
    }

    pub fn renamed(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: String,
    pub axioms: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn new(kind: impl Into<String>) -> Self {
        CheckReport { kind: kind.into(), axioms: Vec::new() }
    }

    pub fn push(&mut self, r: AxiomResult) {
        self.axioms.push(r);
    }

    pub fn with(mut self, r: AxiomResult) -> Self {
        self.push(r);
        self
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.axioms.extend(other.axioms);
    }

    /// True when every non-informational axiom passes.
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.pass || a.informational)
    }

    pub fn get(&self, id: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.id == id)
    }

    /// Whether the named axiom is present and passes.
    pub fn passes(&self, id: &str) -> bool {
        self.get(id).is_some_and(|a| a.pass)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.axioms
            .iter()
            .filter(|a| !a.pass && !a.informational)
            .map(|a| a.id.clone())
            .collect()
    }

    pub fn witness(&self, id: &str) -> Option<&Witness> {
        self.get(id).and_then(|a| a.witness.as_ref())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.kind, if self.passed() { "pass" } else { "fail" })?;
        for a in &self.axioms {
            let tag = match (a.pass, a.informational) {
                (true, _) => "ok",
                (false, true) => "note",
                (false, false) => "FAIL",
            };
            write!(f, "  {:<14} {}", a.id, tag)?;
            if let Some(w) = &a.witness {
                let v = |xs: &[Q]| xs.iter().map(scalar::format).collect::<Vec<_>>().join(", ");
                write!(f, "  at {:?}: [{}] != [{}]", w.indices, v(&w.lhs), v(&w.rhs))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Evaluates `f` on every index tuple in `dims` (first index slowest) and
/// records the first tuple where the two sides differ.
pub(crate) fn check_all(
    id: &str,
    dims: &[usize],
    mut f: impl FnMut(&[usize]) -> (Vec<Q>, Vec<Q>),
) -> AxiomResult {
    let mut idx = vec![0usize; dims.len()];
    if dims.iter().any(|&d| d == 0) {
        return AxiomResult::pass(id);
    }
    loop {
        let (lhs, rhs) = f(&idx);
        if lhs != rhs {
            return AxiomResult::fail(id, Witness { indices: idx, lhs, rhs });
        }
        let mut p = dims.len();
        loop {
            if p == 0 {
                return AxiomResult::pass(id);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < dims[p] {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Like [`check_all`] for identities of the form `expr = 0`.
pub(crate) fn check_vanishes(
    id: &str,
    dims: &[usize],
    mut f: impl FnMut(&[usize]) -> Vec<Q>,
) -> AxiomResult {
    check_all(id, dims, |idx| {
        let v = f(idx);
        let z = vec![scalar::zero(); v.len()];
        (v, z)
    })
}

/// A single equality with no basis arguments.
pub(crate) fn check_once(id: &str, lhs: Vec<Q>, rhs: Vec<Q>) -> AxiomResult {
    check_all(id, &[], |_| (lhs.clone(), rhs.clone()))
}

/// Passes when `m` has trivial kernel; otherwise the witness carries a
/// nonzero kernel vector on the left and zeros on the right.
pub(crate) fn kernel_axiom(id: &str, m: &crate::linalg::Matrix) -> AxiomResult {
    match m.kernel_vector() {
        None => AxiomResult::pass(id),
        Some(v) => {
            let z = vec![scalar::zero(); v.len()];
            check_once(id, v, z)
        }
    }
}
