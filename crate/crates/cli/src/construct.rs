//! `construct` kinds: build a new document from an input document.

use avgbi_core::actions::{
    dual_averaging_bimodule, induce_perm_bimodule, semidirect_product, verify_action, ActionData, ActionKind,
};
use avgbi_core::bialgebra::{
    adjoint_operator, bowtie, double_bialgebra, induce_perm_bialgebra, matched_pair_from_bialgebra,
    perm_manin_triple, verify_bialgebra, verify_perm_bialgebra, AsiBialgebraData, BialgebraData, BialgebraKind,
    BilinearForm, MatchedPairData, PermBialgebraData, PermInduction,
};
use avgbi_core::factorizable::{
    classify_r, factorizable_from_rb, rb_from_factorizable, twisted_bialgebra, Classification, FactorizableData,
};
use avgbi_core::structures::{
    induce_perm, tensor_lie, verify_structure, AveragingAlgebra, LieAlgebra, StructureData, StructureKind,
};
use avgbi_core::ybe::{check_cybe, coboundary_comultiplication, lift_r_to_lie};
use avgbi_core::{scalar, CheckReport, Q};

use crate::document::{
    action_entries, dual_labels, operator_entries, tensor_entries, tensor_labels, Document, Map, ModuleSection,
    PairSection, Table,
};
use crate::error::{CliError, CliResult};

pub const CONSTRUCT_KINDS: &[(&str, &str)] = &[
    ("semidirect", "A ⋉ M from (mul, alpha) and a module section"),
    ("dual-bimodule", "replace the module section by its dual (M*, r*, l*, beta*)"),
    ("matched-pair", "the matched pair (A, A*) of an averaging ASI bialgebra"),
    ("bowtie", "the algebra A ⋈ B of a pair section, with the pairing when dual"),
    ("double", "the double A ⊕ A* of an averaging ASI bialgebra, with r = Σ e_i⊗e_i*"),
    ("coboundary", "comul = coboundary comultiplication of r"),
    ("induce-perm", "the perm algebra a•b = α(a)b, and the induced perm bimodule of a module section"),
    ("induce-perm-bialgebra", "the perm bialgebra induced by a commutative cocommutative averaging ASI bialgebra"),
    ("manin-triple", "the Manin triple P ⋈ P* of a perm bialgebra (perm or mul, comul)"),
    ("tensor-lie", "the Lie algebra on P⊗Q from a perm algebra and a quadratic pre-Lie algebra"),
    ("lift-r", "the tensor Lie algebra together with the lift of r"),
    ("rb-from-factorizable", "the Rota-Baxter operator and form of a factorizable r (weight --lambda)"),
    ("factorizable-from-rb", "the factorizable r of a Rota-Baxter operator on (mul, alpha, form)"),
    ("twisted", "the twisted bialgebra (A, ·_R, Δ_I) of a factorizable r (weight --lambda)"),
];

pub fn construct_list() -> String {
    let width = CONSTRUCT_KINDS.iter().map(|k| k.0.len()).max().unwrap_or(0);
    CONSTRUCT_KINDS.iter().map(|(k, s)| format!("  {k:<width$}  {s}\n")).collect()
}

/// A constructed document with the reports that certify it, each paired with
/// the labels its witnesses refer to.
pub struct Construction {
    pub document: Document,
    pub reports: Vec<(CheckReport, Option<Vec<String>>)>,
}

impl Construction {
    fn new(document: Document) -> Self {
        Construction { document, reports: Vec::new() }
    }

    fn with(mut self, rep: CheckReport) -> Self {
        let labels = Some(self.document.basis.clone());
        self.reports.push((rep, labels));
        self
    }

    fn with_unlabelled(mut self, rep: CheckReport) -> Self {
        self.reports.push((rep, None));
        self
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|(r, _)| r.passed())
    }
}

pub struct Inputs<'a> {
    pub lambda: Option<&'a Q>,
    /// Replaces the document's `prelie` section.
    pub prelie: Option<&'a Document>,
}

/// Construction failures that come with a report: rejected gates,
/// classifications that are not factorizable, failed perm inductions.
pub enum Outcome {
    Built(Construction),
    Refused { reason: String, report: CheckReport, labels: Option<Vec<String>> },
}

pub fn run_construct(doc: &Document, kind: &str, inputs: &Inputs<'_>) -> CliResult<Outcome> {
    let built = match kind {
        "semidirect" => semidirect(doc)?,
        "dual-bimodule" => dual_bimodule(doc)?,
        "matched-pair" => matched_pair(doc)?,
        "bowtie" => bowtie_doc(doc)?,
        "double" => double(doc)?,
        "coboundary" => coboundary(doc)?,
        "induce-perm" => induce_perm_doc(doc)?,
        "induce-perm-bialgebra" => return induce_perm_bialgebra_doc(doc),
        "manin-triple" => manin_triple(doc)?,
        "tensor-lie" => tensor_lie_doc(doc, inputs, false)?,
        "lift-r" => tensor_lie_doc(doc, inputs, true)?,
        "rb-from-factorizable" => return rb_from_factorizable_doc(doc, &weight(inputs)),
        "factorizable-from-rb" => factorizable_from_rb_doc(doc, &weight(inputs))?,
        "twisted" => return twisted(doc, &weight(inputs)),
        other => {
            return Err(CliError::input(format!(
                "unknown construction `{other}`; available constructions:\n{}",
                construct_list()
            )))
        }
    };
    Ok(Outcome::Built(built))
}

/// Constructions that need a nonzero weight use 1 when none is given.
fn weight(inputs: &Inputs<'_>) -> Q {
    inputs.lambda.cloned().unwrap_or_else(scalar::one)
}

fn averaging_doc(labels: Vec<String>, a: &AveragingAlgebra) -> Document {
    let mut d = Document::new(labels);
    d.kind = Some("averaging-algebra".into());
    d.set_table(Table::Mul, a.mul());
    d.set_map(Map::Alpha, &a.alpha);
    d
}

fn asi_doc(labels: Vec<String>, b: &AsiBialgebraData) -> Document {
    let mut d = Document::new(labels);
    d.kind = Some("averaging-asi".into());
    d.set_table(Table::Mul, &b.mul);
    d.set_table(Table::Comul, &b.comul);
    d.set_map(Map::Alpha, &b.alpha);
    d.set_map(Map::Beta, &b.beta);
    d
}

fn averaging_asi_report(b: &AsiBialgebraData) -> CliResult<CheckReport> {
    Ok(verify_bialgebra(BialgebraKind::AveragingAsi, BialgebraData::Asi(b))?)
}

fn module_labels(doc: &Document) -> Vec<String> {
    doc.module.as_ref().map(|m| m.basis.clone()).unwrap_or_default()
}

fn semidirect(doc: &Document) -> CliResult<Construction> {
    let m = doc.bimodule()?;
    let s = semidirect_product(&m.base, &m)?;
    let labels = [doc.basis.clone(), module_labels(doc)].concat();
    let rep = verify_structure(StructureKind::AveragingAlgebra, StructureData::Averaging(&s))?;
    Ok(Construction::new(averaging_doc(labels, &s)).with(rep))
}

fn dual_bimodule(doc: &Document) -> CliResult<Construction> {
    let m = dual_averaging_bimodule(&doc.bimodule()?);
    let mut out = doc.clone();
    out.kind = Some("averaging-bimodule".into());
    out.module = Some(ModuleSection {
        basis: dual_labels(&module_labels(doc)),
        lact: Some(action_entries(&m.lact)),
        ract: Some(action_entries(&m.ract)),
        beta: Some(operator_entries(&m.beta)),
        p: None,
    });
    let rep = verify_action(ActionKind::AveragingBimodule, ActionData::Averaging(&m))?;
    Ok(Construction::new(out).with_unlabelled(rep))
}

fn pair_section(mp: &MatchedPairData, labels: Vec<String>) -> PairSection {
    PairSection {
        basis: labels,
        mul: Some(tensor_entries(mp.alg_b.mul())),
        alpha: Some(operator_entries(&mp.alg_b.alpha)),
        l_a: Some(action_entries(&mp.l_a)),
        r_a: Some(action_entries(&mp.r_a)),
        l_b: Some(action_entries(&mp.l_b)),
        r_b: Some(action_entries(&mp.r_b)),
        dual: mp.dual,
    }
}

fn matched_pair(doc: &Document) -> CliResult<Construction> {
    let mp = matched_pair_from_bialgebra(&doc.bialgebra()?)?;
    let mut out = averaging_doc(doc.basis.clone(), &mp.alg_a);
    out.kind = Some("matched-pair-averaging".into());
    out.pair = Some(pair_section(&mp, dual_labels(&doc.basis)));
    let rep = verify_bialgebra(BialgebraKind::MatchedPairAveraging, BialgebraData::MatchedPair(&mp))?;
    Ok(Construction::new(out).with_unlabelled(rep))
}

fn bowtie_doc(doc: &Document) -> CliResult<Construction> {
    let mp = doc.matched_pair()?;
    let (alg, form) = bowtie(&mp)?;
    let pair_labels = doc.pair.as_ref().map(|p| p.basis.clone()).unwrap_or_default();
    let mut out = averaging_doc([doc.basis.clone(), pair_labels].concat(), &alg);
    out.split = Some(doc.dim());
    let rep = match form {
        Some(form) => {
            out.kind = Some("double-construction".into());
            out.set_map(Map::Form, &form.b);
            let d = avgbi_core::bialgebra::DoubleData { algebra: alg, form, split: doc.dim() };
            verify_bialgebra(BialgebraKind::DoubleConstruction, BialgebraData::Double(&d))?
        }
        None => verify_structure(StructureKind::AveragingAlgebra, StructureData::Averaging(&alg))?,
    };
    Ok(Construction::new(out).with(rep))
}

fn double(doc: &Document) -> CliResult<Construction> {
    let (d, r) = double_bialgebra(&doc.bialgebra()?)?;
    let labels = [doc.basis.clone(), dual_labels(&doc.basis)].concat();
    let mut out = asi_doc(labels, &d);
    out.split = Some(doc.dim());
    out.set_map(Map::R, r.coeff());
    out.set_map(Map::Form, &BilinearForm::symmetric_pairing(doc.dim()).b);
    let rep = averaging_asi_report(&d)?;
    Ok(Construction::new(out).with(rep))
}

fn coboundary(doc: &Document) -> CliResult<Construction> {
    let a = doc.averaging()?;
    let comul = coboundary_comultiplication(&a.alg, &doc.two_tensor()?)?;
    let mut out = doc.clone();
    out.kind = Some("averaging-asi".into());
    out.set_table(Table::Comul, &comul);
    let b = AsiBialgebraData::new(a.alg.mul, comul, a.alpha, doc.map(Map::Beta))?;
    let rep = averaging_asi_report(&b)?;
    Ok(Construction::new(out).with(rep))
}

fn induce_perm_doc(doc: &Document) -> CliResult<Construction> {
    let a = doc.averaging()?;
    let p = induce_perm(&a)?;
    let mut out = Document::new(doc.basis.clone());
    out.kind = Some("perm".into());
    out.set_table(Table::Mul, &p.mul);
    let rep = verify_structure(StructureKind::Perm, StructureData::Perm(&p))?;
    let mut c = Construction::new(out);
    if let Some(m) = &doc.module {
        let bm = doc.bimodule()?;
        let pm = induce_perm_bimodule(&a, &bm.lact, &bm.beta)?;
        c.document.module = Some(ModuleSection {
            basis: m.basis.clone(),
            lact: Some(action_entries(&pm.lact)),
            ract: Some(action_entries(&pm.ract)),
            beta: None,
            p: None,
        });
        let prep = verify_action(ActionKind::PermBimodule, ActionData::Perm(&pm))?;
        c = c.with_unlabelled(prep);
    }
    Ok(c.with(rep))
}

fn perm_bialgebra_doc(labels: Vec<String>, pb: &PermBialgebraData) -> Document {
    let mut out = Document::new(labels);
    out.kind = Some("perm-bialgebra".into());
    out.set_table(Table::Mul, &pb.mul);
    out.set_table(Table::Comul, &pb.comul);
    out
}

fn induce_perm_bialgebra_doc(doc: &Document) -> CliResult<Outcome> {
    match induce_perm_bialgebra(&doc.bialgebra()?)? {
        PermInduction::Induced { bialgebra, report } => {
            let perm_rep = verify_perm_bialgebra(&bialgebra);
            let out = perm_bialgebra_doc(doc.basis.clone(), &bialgebra);
            Ok(Outcome::Built(Construction::new(out).with(report).with(perm_rep)))
        }
        PermInduction::GateFailure(report) => Ok(Outcome::Refused {
            reason: "the compatibility conditions of the perm induction fail".into(),
            report,
            labels: Some(doc.basis.clone()),
        }),
    }
}

fn manin_triple(doc: &Document) -> CliResult<Construction> {
    let pb = PermBialgebraData { mul: doc.perm_algebra()?.mul, comul: doc.table(Table::Comul) };
    let (p, form, rep) = perm_manin_triple(&pb)?;
    let mut out = Document::new([doc.basis.clone(), dual_labels(&doc.basis)].concat());
    out.kind = Some("perm-manin-triple".into());
    out.split = Some(doc.dim());
    out.set_table(Table::Mul, &p.mul);
    out.set_map(Map::Form, &form.b);
    Ok(Construction::new(out).with(rep))
}

fn tensor_lie_doc(doc: &Document, inputs: &Inputs<'_>, lift: bool) -> CliResult<Construction> {
    let source = inputs.prelie.unwrap_or(doc);
    let section = source
        .prelie
        .as_ref()
        .ok_or_else(|| CliError::input("a prelie section is required (in the document or --prelie-file)"))?;
    let p = doc.perm_algebra()?;
    let q = source.prelie()?;
    let lie = tensor_lie(&p, &q)?;
    let mut out = Document::new(tensor_labels(&doc.basis, &section.basis));
    out.kind = Some("lie".into());
    out.set_table(Table::Bracket, &lie.bracket);
    let lie_rep = verify_structure(StructureKind::Lie, StructureData::Lie(&lie))?;
    let mut c = Construction::new(out).with(lie_rep);
    if lift {
        let r = lift_r_to_lie(&p, &q, &doc.two_tensor()?)?;
        c.document.set_map(Map::R, r.coeff());
        c.document.kind = Some("cybe".into());
        let rep = check_cybe(&LieAlgebra::new(lie.bracket.clone())?, &r)?;
        c = c.with(rep);
    }
    Ok(c)
}

/// The factorizable data of the document's `r`, or the report that explains
/// why it is not factorizable.
fn factorizable(doc: &Document) -> CliResult<Result<Box<FactorizableData>, Outcome>> {
    match classify_r(&doc.averaging()?, &doc.map(Map::Beta), &doc.two_tensor()?)? {
        Classification::Factorizable(f) => Ok(Ok(f)),
        c => {
            let mut report = c.report().clone();
            for a in &mut report.axioms {
                a.informational = false;
            }
            Ok(Err(Outcome::Refused {
                reason: format!("r is {}, not factorizable", c.name()),
                report,
                labels: Some(doc.basis.clone()),
            }))
        }
    }
}

fn rb_from_factorizable_doc(doc: &Document, w: &Q) -> CliResult<Outcome> {
    let fact = match factorizable(doc)? {
        Ok(f) => f,
        Err(refused) => return Ok(refused),
    };
    let rb = rb_from_factorizable(&fact, w)?;
    let mut out = averaging_doc(doc.basis.clone(), &fact.algebra);
    out.kind = Some("rb-frobenius".into());
    out.set_map(Map::Form, &rb.form.b);
    out.set_map(Map::RotaBaxter, &rb.operator);
    Ok(Outcome::Built(Construction::new(out).with(fact.report.clone()).with(rb.report)))
}

fn factorizable_from_rb_doc(doc: &Document, w: &Q) -> CliResult<Construction> {
    let a = doc.averaging()?;
    let form = doc.form()?;
    let r = factorizable_from_rb(&a, &form, &doc.map(Map::RotaBaxter), w)?;
    let beta = adjoint_operator(&a.alpha, &form)?;
    let mut out = averaging_doc(doc.basis.clone(), &a);
    out.kind = Some("factorizable".into());
    out.set_map(Map::Beta, &beta);
    out.set_map(Map::R, r.coeff());
    let c = classify_r(&a, &beta, &r)?;
    let mut rep = c.report().clone();
    for x in &mut rep.axioms {
        x.informational = false;
    }
    Ok(Construction::new(out).with(rep))
}

fn twisted(doc: &Document, w: &Q) -> CliResult<Outcome> {
    let fact = match factorizable(doc)? {
        Ok(f) => f,
        Err(refused) => return Ok(refused),
    };
    let t = twisted_bialgebra(&fact, w)?;
    let mut out = Document::new(doc.basis.clone());
    out.set_table(Table::Mul, &t.product);
    out.set_table(Table::Comul, &t.comul);
    out.set_map(Map::Alpha, &fact.algebra.alpha);
    out.set_map(Map::Beta, &fact.beta);
    Ok(Outcome::Built(Construction::new(out).with(t.report)))
}
