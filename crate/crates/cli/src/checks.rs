//! The `--as` kinds: which suite runs on which sections of a document.

use avgbi_core::actions::{dual_compat, verify_action, ActionData, ActionKind, PermBimodule};
use avgbi_core::bialgebra::{
    compa_report, frobenius_intertwiner, verify_bialgebra, BialgebraData, BialgebraKind, DoubleData,
    PermBialgebraData, PermManinData,
};
use avgbi_core::factorizable::{check_lr_invariant, classify_r, rb_frobenius_report};
use avgbi_core::structures::{
    rota_baxter_report, verify_structure, Algebra, DendriformData, LieAlgebra, StructureData, StructureKind,
};
use avgbi_core::ybe::{check_avg_ybe, check_coboundary_conditions, check_cybe, check_perm_ybe, verify_o_operator};
use avgbi_core::{CheckReport, Matrix, Q};
use num_traits::Zero;

use crate::document::{actions_of, Document, Map, Table};
use crate::error::{CliError, CliResult};

pub struct CheckKind {
    pub name: &'static str,
    pub summary: &'static str,
    /// Witness indices refer to the main basis.
    pub labelled: bool,
}

const fn kind(name: &'static str, summary: &'static str, labelled: bool) -> CheckKind {
    CheckKind { name, summary, labelled }
}

pub const CHECK_KINDS: &[CheckKind] = &[
    kind("associative", "mul is associative", true),
    kind("commutative", "mul is commutative and associative", true),
    kind("averaging-algebra", "alpha is an averaging operator on mul", true),
    kind("perm", "perm (or mul) is a perm algebra", true),
    kind("dendriform", "succ and prec form a dendriform algebra", true),
    kind("averaging-dendriform", "succ, prec and alpha form an averaging dendriform algebra", true),
    kind("pre-lie", "prelie (or mul) is a pre-Lie algebra", true),
    kind("quadratic-pre-lie", "prelie (or mul, form) is a quadratic pre-Lie algebra", true),
    kind("lie", "bracket (or mul) is a Lie algebra", true),
    kind("assoc-bimodule", "module is a bimodule over mul", false),
    kind("averaging-bimodule", "module is a bimodule over (mul, alpha)", false),
    kind("perm-bimodule", "module is a bimodule over the perm algebra", false),
    kind("coassoc", "comul is coassociative", true),
    kind("cocomm", "comul is coassociative and cocommutative", true),
    kind("averaging-coalgebra", "beta is an averaging operator on comul", true),
    kind("asi", "mul and comul form an ASI bialgebra", true),
    kind("averaging-asi", "(mul, comul, alpha, beta) is an averaging ASI bialgebra", true),
    kind("frobenius-form", "form is nondegenerate, symmetric and invariant", true),
    kind("matched-pair-averaging", "the pair section forms a matched pair with (mul, alpha)", false),
    kind("double-construction", "(mul, alpha, form, split) is a double construction", true),
    kind("perm-bialgebra", "perm (or mul) and comul form a perm bialgebra", true),
    kind("perm-manin-triple", "(perm or mul, form, split) is a Manin triple of perm algebras", true),
    kind("ybe", "r solves the YBE in (mul, alpha)", true),
    kind("beta-ybe", "r solves the beta-YBE in (mul, alpha)", true),
    kind("coboundary", "r satisfies the coboundary conditions COBA-1..8", true),
    kind("o-operator", "module.p is an O-operator (weighted with --lambda)", false),
    kind("rota-baxter", "rota_baxter is a Rota-Baxter operator of weight --lambda", true),
    kind("rb-frobenius", "rota_baxter is Rota-Baxter on the Frobenius algebra (mul, alpha, form)", true),
    kind("perm-ybe", "r solves the YBE in the perm algebra", true),
    kind("cybe", "r solves the classical Yang-Baxter equation in bracket (or mul)", true),
    kind("lr-invariant", "r is (l, r)-invariant", true),
    kind("quasi-triangular", "r is quasi-triangular", true),
    kind("factorizable", "r is factorizable", true),
    kind("compa", "the perm induction compatibility conditions hold", true),
    kind("dual-compat", "the module's dual is compatible with perm induction", false),
    kind("frobenius-intertwiner", "the form intertwines alpha with its adjoint", true),
];

pub fn find_kind(name: &str) -> Option<&'static CheckKind> {
    CHECK_KINDS.iter().find(|k| k.name == name)
}

pub fn kind_list() -> String {
    let width = CHECK_KINDS.iter().map(|k| k.name.len()).max().unwrap_or(0);
    CHECK_KINDS.iter().map(|k| format!("  {:<width$}  {}\n", k.name, k.summary)).collect()
}

/// Failing informational axioms count as failures.
fn strict(mut rep: CheckReport) -> CheckReport {
    for a in &mut rep.axioms {
        a.informational = false;
    }
    rep
}

pub fn run_check(doc: &Document, name: &str, lambda: Option<&Q>) -> CliResult<CheckReport> {
    if find_kind(name).is_none() {
        return Err(CliError::input(format!("unknown kind `{name}`; available kinds:\n{}", kind_list())));
    }
    if let Ok(k) = name.parse::<StructureKind>() {
        return structure_check(doc, k);
    }
    if let Ok(k) = name.parse::<ActionKind>() {
        return action_check(doc, k);
    }
    if let Ok(k) = name.parse::<BialgebraKind>() {
        return bialgebra_check(doc, k);
    }
    let zero = Q::zero();
    let weight = lambda.unwrap_or(&zero);
    let rep = match name {
        "ybe" => {
            let a = doc.averaging()?;
            check_avg_ybe(&a, &a.alpha, &doc.two_tensor()?)?
        }
        "beta-ybe" => check_avg_ybe(&doc.averaging()?, &doc.map(Map::Beta), &doc.two_tensor()?)?,
        "coboundary" => check_coboundary_conditions(&doc.averaging()?, &doc.map(Map::Beta), &doc.two_tensor()?)?,
        "o-operator" => verify_o_operator(&doc.o_operator()?, lambda)?,
        "rota-baxter" => rota_baxter_report(&doc.averaging()?, &doc.map(Map::RotaBaxter), weight)?,
        "rb-frobenius" => rb_frobenius_report(&doc.averaging()?, &doc.form()?, &doc.map(Map::RotaBaxter), weight)?,
        "perm-ybe" => check_perm_ybe(&doc.perm_algebra()?, &doc.two_tensor()?)?,
        "cybe" => check_cybe(&LieAlgebra::new(doc.bracket())?, &doc.two_tensor()?)?,
        "lr-invariant" => check_lr_invariant(&Algebra::new(doc.table(Table::Mul))?, &doc.two_tensor()?)?,
        "quasi-triangular" => {
            let c = classify_r(&doc.averaging()?, &doc.map(Map::Beta), &doc.two_tensor()?)?;
            c.report().clone()
        }
        "factorizable" => {
            let c = classify_r(&doc.averaging()?, &doc.map(Map::Beta), &doc.two_tensor()?)?;
            strict(c.report().clone())
        }
        "compa" => compa_report(&doc.bialgebra()?)?,
        "dual-compat" => {
            let m = doc.bimodule()?;
            dual_compat(&m.base, &m.lact, &m.beta)?
        }
        "frobenius-intertwiner" => frobenius_intertwiner(&doc.averaging()?, &doc.form()?)?,
        other => unreachable!("kind `{other}` is listed but not dispatched"),
    };
    Ok(rep)
}

fn structure_check(doc: &Document, k: StructureKind) -> CliResult<CheckReport> {
    use StructureKind as K;
    let rep = match k {
        K::Associative | K::Commutative => {
            verify_structure(k, StructureData::Algebra(&Algebra::new(doc.table(Table::Mul))?))?
        }
        K::AveragingAlgebra => verify_structure(k, StructureData::Averaging(&doc.averaging()?))?,
        K::Perm => verify_structure(k, StructureData::Perm(&doc.perm_algebra()?))?,
        K::Dendriform | K::AveragingDendriform => {
            let alpha = (k == K::AveragingDendriform).then(|| doc.map(Map::Alpha));
            let d = DendriformData::new(doc.table(Table::Succ), doc.table(Table::Prec), alpha)?;
            verify_structure(k, StructureData::Dendriform(&d))?
        }
        K::PreLie | K::QuadraticPreLie => verify_structure(k, StructureData::PreLie(&doc.prelie()?))?,
        K::Lie => verify_structure(k, StructureData::Lie(&LieAlgebra::new(doc.bracket())?))?,
    };
    Ok(rep)
}

fn action_check(doc: &Document, k: ActionKind) -> CliResult<CheckReport> {
    match k {
        ActionKind::PermBimodule => {
            let m = doc.module.as_ref().ok_or_else(|| CliError::input("the document has no module section"))?;
            let (n, d) = (doc.dim(), m.basis.len());
            let pm = PermBimodule::new(
                doc.perm_algebra()?,
                actions_of(n, d, m.lact.as_ref()),
                actions_of(n, d, m.ract.as_ref()),
            )?;
            Ok(verify_action(k, ActionData::Perm(&pm))?)
        }
        _ => Ok(verify_action(k, ActionData::Averaging(&doc.bimodule()?))?),
    }
}

fn split_of(doc: &Document) -> usize {
    doc.split.unwrap_or(doc.dim() / 2)
}

fn bialgebra_check(doc: &Document, k: BialgebraKind) -> CliResult<CheckReport> {
    use BialgebraKind as K;
    let rep = match k {
        K::Coassoc | K::Cocomm | K::AveragingCoalgebra | K::Asi | K::AveragingAsi => {
            verify_bialgebra(k, BialgebraData::Asi(&doc.bialgebra()?))?
        }
        K::FrobeniusForm => {
            let a = Algebra::new(doc.table(Table::Mul))?;
            verify_bialgebra(k, BialgebraData::Frobenius(&a, &doc.form()?))?
        }
        K::MatchedPairAveraging => verify_bialgebra(k, BialgebraData::MatchedPair(&doc.matched_pair()?))?,
        K::DoubleConstruction => {
            let d = DoubleData { algebra: doc.averaging()?, form: doc.form()?, split: split_of(doc) };
            verify_bialgebra(k, BialgebraData::Double(&d))?
        }
        K::PermBialgebra => {
            let p = PermBialgebraData { mul: doc.perm_algebra()?.mul, comul: doc.table(Table::Comul) };
            verify_bialgebra(k, BialgebraData::Perm(&p))?
        }
        K::PermManinTriple => {
            let d = PermManinData { algebra: doc.perm_algebra()?, form: doc.form()?, split: split_of(doc) };
            verify_bialgebra(k, BialgebraData::PermManin(&d))?
        }
    };
    Ok(rep)
}

/// The suites `report` runs: every suite whose sections are present, plus
/// the declared kind.
pub fn applicable_kinds(doc: &Document) -> Vec<&'static str> {
    let t = |x| doc.has_table(x);
    let m = |x| doc.has_map(x);
    let mut out = Vec::new();
    if t(Table::Mul) {
        out.push("associative");
        if m(Map::Alpha) {
            out.push("averaging-algebra");
        }
    }
    if t(Table::Comul) {
        out.push("coassoc");
        if m(Map::Beta) {
            out.push("averaging-coalgebra");
        }
        if t(Table::Mul) {
            out.push("asi");
            if m(Map::Alpha) && m(Map::Beta) {
                out.push("averaging-asi");
            }
        }
    }
    if t(Table::Succ) && t(Table::Prec) {
        out.push(if m(Map::Alpha) { "averaging-dendriform" } else { "dendriform" });
    }
    if t(Table::Bracket) {
        out.push("lie");
    }
    if t(Table::Perm) {
        out.push("perm");
    }
    if m(Map::R) && t(Table::Mul) {
        out.push(if m(Map::Beta) { "beta-ybe" } else { "ybe" });
    }
    if m(Map::Form) && t(Table::Mul) && !t(Table::Perm) {
        if doc.split.is_some() && m(Map::Alpha) {
            out.push("double-construction");
        } else if doc.split.is_none() {
            out.push("frobenius-form");
        }
    }
    if m(Map::RotaBaxter) {
        out.push("rota-baxter");
    }
    if let Some(module) = &doc.module {
        if module.lact.is_some() || module.ract.is_some() {
            out.push("averaging-bimodule");
        }
        if module.p.is_some() {
            out.push("o-operator");
        }
    }
    if doc.pair.is_some() {
        out.push("matched-pair-averaging");
    }
    if doc.prelie.is_some() {
        out.push("quadratic-pre-lie");
    }
    if let Some(k) = doc.kind.as_deref().and_then(find_kind) {
        if !out.contains(&k.name) {
            out.push(k.name);
        }
    }
    out
}

/// The matrix of a document operator, for callers that take `--beta-file`.
pub fn beta_of(doc: &Document) -> Matrix {
    doc.map(Map::Beta)
}
