//! JSON documents: a basis registry with sparse coefficient sections.
//!
//! Products and coproducts are lists of `[i, j, k, c]` (`e_i e_j` has `c` on
//! `e_k`, `Δ(e_i)` has `c` on `e_j⊗e_k`), operators are `[src, dst, c]`
//! (`α(e_src)` has `c` on `e_dst`), two-tensors and forms are `[i, j, c]`.
//! Coefficients are integers or strings `"p/q"`. Omitted entries are zero;
//! explicit zeros are kept so that a document round-trips unchanged.

use std::collections::{BTreeMap, HashMap};

use avgbi_core::actions::{AveragingBimodule, OOperatorData};
use avgbi_core::bialgebra::{AsiBialgebraData, BilinearForm, MatchedPairData};
use avgbi_core::scalar::{self, Q};
use avgbi_core::structures::{AveragingAlgebra, PermAlgebra, PreLieQuadratic};
use avgbi_core::{Matrix, Tensor3, TwoTensor, MAX_DIM};
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// Sparse coefficients keyed by basis index tuples.
pub type Entries<const N: usize> = BTreeMap<[usize; N], Q>;

/// Sections holding three-index tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Table {
    Mul,
    Comul,
    Succ,
    Prec,
    Bracket,
    Perm,
}

impl Table {
    pub const ALL: [Table; 6] = [Table::Mul, Table::Comul, Table::Succ, Table::Prec, Table::Bracket, Table::Perm];

    pub fn name(self) -> &'static str {
        match self {
            Table::Mul => "mul",
            Table::Comul => "comul",
            Table::Succ => "succ",
            Table::Prec => "prec",
            Table::Bracket => "bracket",
            Table::Perm => "perm",
        }
    }

    pub fn from_name(s: &str) -> Option<Table> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// Sections holding two-index data: operators and two-tensors/forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Map {
    Alpha,
    Beta,
    RotaBaxter,
    R,
    Form,
}

impl Map {
    pub const ALL: [Map; 5] = [Map::Alpha, Map::Beta, Map::RotaBaxter, Map::R, Map::Form];

    pub fn name(self) -> &'static str {
        match self {
            Map::Alpha => "alpha",
            Map::Beta => "beta",
            Map::RotaBaxter => "rota_baxter",
            Map::R => "r",
            Map::Form => "form",
        }
    }

    pub fn from_name(s: &str) -> Option<Map> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }

    /// Operators list `[src, dst, c]`; two-tensors and forms list `[i, j, c]`.
    pub fn is_operator(self) -> bool {
        matches!(self, Map::Alpha | Map::Beta | Map::RotaBaxter)
    }
}

/// A bimodule `(M, ℓ, 𝔯, β)` over the main algebra and an optional operator
/// `P: M → A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleSection {
    pub basis: Vec<String>,
    /// `[a, m, m', c]`: `ℓ(e_a)m` has `c` on `m'`.
    pub lact: Option<Entries<3>>,
    pub ract: Option<Entries<3>>,
    /// `[src, dst, c]` on `M`.
    pub beta: Option<Entries<2>>,
    /// `[m, a, c]`: `P(m)` has `c` on `e_a`.
    pub p: Option<Entries<2>>,
}

/// The second algebra `B` of a matched pair with the main algebra `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSection {
    pub basis: Vec<String>,
    pub mul: Option<Entries<3>>,
    pub alpha: Option<Entries<2>>,
    /// `[a, b, b', c]`: actions of `A` on `B`.
    pub l_a: Option<Entries<3>>,
    pub r_a: Option<Entries<3>>,
    /// `[b, a, a', c]`: actions of `B` on `A`.
    pub l_b: Option<Entries<3>>,
    pub r_b: Option<Entries<3>>,
    /// `B` is the coordinate dual of `A`.
    pub dual: bool,
}

/// A pre-Lie algebra `(Q, ∘)` with a form `ω` on its own basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PreLieSection {
    pub basis: Vec<String>,
    pub circ: Option<Entries<3>>,
    pub omega: Option<Entries<2>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub kind: Option<String>,
    pub basis: Vec<String>,
    pub split: Option<usize>,
    pub tables: BTreeMap<Table, Entries<3>>,
    pub maps: BTreeMap<Map, Entries<2>>,
    pub module: Option<ModuleSection>,
    pub pair: Option<PairSection>,
    pub prelie: Option<PreLieSection>,
}

type RawEntries = Option<Vec<Vec<Value>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: Option<String>,
    kind: Option<String>,
    basis: Vec<String>,
    split: Option<usize>,
    mul: RawEntries,
    comul: RawEntries,
    succ: RawEntries,
    prec: RawEntries,
    bracket: RawEntries,
    perm: RawEntries,
    alpha: RawEntries,
    beta: RawEntries,
    rota_baxter: RawEntries,
    r: RawEntries,
    form: RawEntries,
    module: Option<RawModule>,
    pair: Option<RawPair>,
    prelie: Option<RawPreLie>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    basis: Vec<String>,
    lact: RawEntries,
    ract: RawEntries,
    beta: RawEntries,
    p: RawEntries,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    basis: Vec<String>,
    mul: RawEntries,
    alpha: RawEntries,
    l_a: RawEntries,
    r_a: RawEntries,
    l_b: RawEntries,
    r_b: RawEntries,
    #[serde(default)]
    dual: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPreLie {
    basis: Vec<String>,
    circ: RawEntries,
    omega: RawEntries,
}

struct Basis<'a> {
    index: HashMap<&'a str, usize>,
}

impl<'a> Basis<'a> {
    fn new(what: &str, labels: &'a [String]) -> CliResult<Self> {
        if labels.is_empty() {
            return Err(CliError::input(format!("{what}: basis must not be empty")));
        }
        if labels.len() > MAX_DIM {
            return Err(CliError::input(format!(
                "{what}: dimension {} exceeds the cap of {MAX_DIM}",
                labels.len()
            )));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(CliError::input(format!("{what}: basis label {i} is empty")));
            }
            if index.insert(l.as_str(), i).is_some() {
                return Err(CliError::input(format!("{what}: duplicate basis label `{l}`")));
            }
        }
        Ok(Basis { index })
    }

    fn get(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn disjoint_from(&self, what: &str, other: &Basis<'_>) -> CliResult<()> {
        let mut shared: Vec<&&str> = self.index.keys().filter(|l| other.index.contains_key(**l)).collect();
        shared.sort();
        match shared.first() {
            Some(l) => Err(CliError::input(format!("{what}: label `{l}` is also a main basis label"))),
            None => Ok(()),
        }
    }
}

pub fn coefficient(v: &Value) -> Option<Q> {
    match v {
        Value::Number(n) => n.as_i64().map(scalar::int),
        Value::String(s) => scalar::parse(s),
        _ => None,
    }
}

fn entries<const N: usize>(section: &str, raw: &RawEntries, spaces: [&Basis<'_>; N]) -> CliResult<Option<Entries<N>>> {
    let Some(raw) = raw else { return Ok(None) };
    let mut out = Entries::new();
    for (pos, e) in raw.iter().enumerate() {
        let at = format!("{section} entry {pos}");
        if e.len() != N + 1 {
            return Err(CliError::input(format!(
                "{at}: expected {N} labels and a coefficient, found {} items",
                e.len()
            )));
        }
        let mut key = [0usize; N];
        for s in 0..N {
            let label = e[s]
                .as_str()
                .ok_or_else(|| CliError::input(format!("{at}: item {s} must be a basis label")))?;
            key[s] = spaces[s]
                .get(label)
                .ok_or_else(|| CliError::input(format!("{at}: unknown basis label `{label}`")))?;
        }
        let c = coefficient(&e[N]).ok_or_else(|| {
            CliError::input(format!("{at}: coefficient must be an integer or a string \"p/q\""))
        })?;
        if out.insert(key, c).is_some() {
            return Err(CliError::input(format!("{at}: duplicate entry for this slot")));
        }
    }
    Ok(Some(out))
}

impl Document {
    pub fn new(basis: Vec<String>) -> Self {
        Document { basis, ..Default::default() }
    }

    pub fn parse(text: &str) -> CliResult<Document> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed document: {e}")))?;
        if let Some(f) = &raw.field {
            if f != "Q" {
                return Err(CliError::input(format!("unsupported field `{f}`, only \"Q\" is available")));
            }
        }
        let main = Basis::new("basis", &raw.basis)?;
        let n = raw.basis.len();
        if let Some(s) = raw.split {
            if s > n {
                return Err(CliError::input(format!("split {s} exceeds the dimension {n}")));
            }
        }
        let mut doc = Document { kind: raw.kind.clone(), basis: raw.basis.clone(), split: raw.split, ..Default::default() };
        let table_raw = [&raw.mul, &raw.comul, &raw.succ, &raw.prec, &raw.bracket, &raw.perm];
        for (t, r) in Table::ALL.into_iter().zip(table_raw) {
            if let Some(e) = entries(t.name(), r, [&main, &main, &main])? {
                doc.tables.insert(t, e);
            }
        }
        let map_raw = [&raw.alpha, &raw.beta, &raw.rota_baxter, &raw.r, &raw.form];
        for (m, r) in Map::ALL.into_iter().zip(map_raw) {
            if let Some(e) = entries(m.name(), r, [&main, &main])? {
                doc.maps.insert(m, e);
            }
        }
        if let Some(m) = &raw.module {
            let mb = Basis::new("module", &m.basis)?;
            mb.disjoint_from("module", &main)?;
            doc.module = Some(ModuleSection {
                basis: m.basis.clone(),
                lact: entries("module.lact", &m.lact, [&main, &mb, &mb])?,
                ract: entries("module.ract", &m.ract, [&main, &mb, &mb])?,
                beta: entries("module.beta", &m.beta, [&mb, &mb])?,
                p: entries("module.p", &m.p, [&mb, &main])?,
            });
        }
        if let Some(p) = &raw.pair {
            let pb = Basis::new("pair", &p.basis)?;
            pb.disjoint_from("pair", &main)?;
            doc.pair = Some(PairSection {
                basis: p.basis.clone(),
                mul: entries("pair.mul", &p.mul, [&pb, &pb, &pb])?,
                alpha: entries("pair.alpha", &p.alpha, [&pb, &pb])?,
                l_a: entries("pair.l_a", &p.l_a, [&main, &pb, &pb])?,
                r_a: entries("pair.r_a", &p.r_a, [&main, &pb, &pb])?,
                l_b: entries("pair.l_b", &p.l_b, [&pb, &main, &main])?,
                r_b: entries("pair.r_b", &p.r_b, [&pb, &main, &main])?,
                dual: p.dual,
            });
        }
        if let Some(q) = &raw.prelie {
            let qb = Basis::new("prelie", &q.basis)?;
            doc.prelie = Some(PreLieSection {
                basis: q.basis.clone(),
                circ: entries("prelie.circ", &q.circ, [&qb, &qb, &qb])?,
                omega: entries("prelie.omega", &q.omega, [&qb, &qb])?,
            });
        }
        Ok(doc)
    }

    /// Canonical text: fixed key order, entries sorted by basis position,
    /// reduced coefficients, integers written as JSON numbers.
    pub fn emit(&self) -> String {
        let main = &self.basis;
        let mut fields = vec!["  \"field\": \"Q\"".to_string()];
        if let Some(k) = &self.kind {
            fields.push(format!("  \"kind\": {}", json_string(k)));
        }
        fields.push(format!("  \"basis\": {}", label_list(main)));
        if let Some(s) = self.split {
            fields.push(format!("  \"split\": {s}"));
        }
        for (t, e) in &self.tables {
            fields.push(entry_block(1, t.name(), e, [main, main, main]));
        }
        for (m, e) in &self.maps {
            fields.push(entry_block(1, m.name(), e, [main, main]));
        }
        if let Some(m) = &self.module {
            let mb = &m.basis;
            let mut inner = vec![format!("    \"basis\": {}", label_list(mb))];
            push_block(&mut inner, "lact", &m.lact, [main, mb, mb]);
            push_block(&mut inner, "ract", &m.ract, [main, mb, mb]);
            push_block(&mut inner, "beta", &m.beta, [mb, mb]);
            push_block(&mut inner, "p", &m.p, [mb, main]);
            fields.push(object_block("module", inner));
        }
        if let Some(p) = &self.pair {
            let pb = &p.basis;
            let mut inner = vec![format!("    \"basis\": {}", label_list(pb))];
            push_block(&mut inner, "mul", &p.mul, [pb, pb, pb]);
            push_block(&mut inner, "alpha", &p.alpha, [pb, pb]);
            push_block(&mut inner, "l_a", &p.l_a, [main, pb, pb]);
            push_block(&mut inner, "r_a", &p.r_a, [main, pb, pb]);
            push_block(&mut inner, "l_b", &p.l_b, [pb, main, main]);
            push_block(&mut inner, "r_b", &p.r_b, [pb, main, main]);
            inner.push(format!("    \"dual\": {}", p.dual));
            fields.push(object_block("pair", inner));
        }
        if let Some(q) = &self.prelie {
            let qb = &q.basis;
            let mut inner = vec![format!("    \"basis\": {}", label_list(qb))];
            push_block(&mut inner, "circ", &q.circ, [qb, qb, qb]);
            push_block(&mut inner, "omega", &q.omega, [qb, qb]);
            fields.push(object_block("prelie", inner));
        }
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn has_table(&self, t: Table) -> bool {
        self.tables.contains_key(&t)
    }

    pub fn has_map(&self, m: Map) -> bool {
        self.maps.contains_key(&m)
    }

    /// The table, zero when the section is absent.
    pub fn table(&self, t: Table) -> Tensor3 {
        let n = self.dim();
        self.tables.get(&t).map_or_else(|| Tensor3::zeros(n), |e| tensor_of(n, e))
    }

    /// Operators in column convention, two-tensors and forms as coefficient
    /// matrices; zero when the section is absent.
    pub fn map(&self, m: Map) -> Matrix {
        let n = self.dim();
        match self.maps.get(&m) {
            None => Matrix::zeros(n, n),
            Some(e) if m.is_operator() => operator_of(n, n, e),
            Some(e) => coeff_of(n, n, e),
        }
    }

    pub fn set_table(&mut self, t: Table, x: &Tensor3) {
        self.tables.insert(t, tensor_entries(x));
    }

    pub fn set_map(&mut self, m: Map, x: &Matrix) {
        let e = if m.is_operator() { operator_entries(x) } else { coeff_entries(x) };
        self.maps.insert(m, e);
    }

    pub fn averaging(&self) -> CliResult<AveragingAlgebra> {
        Ok(AveragingAlgebra::new(self.table(Table::Mul), self.map(Map::Alpha))?)
    }

    pub fn bialgebra(&self) -> CliResult<AsiBialgebraData> {
        Ok(AsiBialgebraData::new(
            self.table(Table::Mul),
            self.table(Table::Comul),
            self.map(Map::Alpha),
            self.map(Map::Beta),
        )?)
    }

    pub fn two_tensor(&self) -> CliResult<TwoTensor> {
        Ok(TwoTensor::new(self.map(Map::R))?)
    }

    pub fn form(&self) -> CliResult<BilinearForm> {
        Ok(BilinearForm::new(self.map(Map::Form))?)
    }

    /// The `perm` table when present, the main product otherwise.
    pub fn perm_algebra(&self) -> CliResult<PermAlgebra> {
        let t = if self.has_table(Table::Perm) { Table::Perm } else { Table::Mul };
        Ok(PermAlgebra::new(self.table(t))?)
    }

    /// The `bracket` table when present, the main product otherwise.
    pub fn bracket(&self) -> Tensor3 {
        self.table(if self.has_table(Table::Bracket) { Table::Bracket } else { Table::Mul })
    }

    /// The `prelie` section when present, otherwise the main product with the
    /// form as `ω`.
    pub fn prelie(&self) -> CliResult<PreLieQuadratic> {
        match &self.prelie {
            Some(q) => {
                let k = q.basis.len();
                let circ = q.circ.as_ref().map_or_else(|| Tensor3::zeros(k), |e| tensor_of(k, e));
                let omega = q.omega.as_ref().map_or_else(|| Matrix::zeros(k, k), |e| coeff_of(k, k, e));
                Ok(PreLieQuadratic::new(circ, omega)?)
            }
            None => Ok(PreLieQuadratic::new(self.table(Table::Mul), self.map(Map::Form))?),
        }
    }

    fn module_section(&self) -> CliResult<&ModuleSection> {
        self.module.as_ref().ok_or_else(|| CliError::input("the document has no module section"))
    }

    pub fn bimodule(&self) -> CliResult<AveragingBimodule> {
        let m = self.module_section()?;
        let (n, d) = (self.dim(), m.basis.len());
        Ok(AveragingBimodule::new(
            self.averaging()?,
            actions_of(n, d, m.lact.as_ref()),
            actions_of(n, d, m.ract.as_ref()),
            m.beta.as_ref().map_or_else(|| Matrix::zeros(d, d), |e| operator_of(d, d, e)),
        )?)
    }

    pub fn o_operator(&self) -> CliResult<OOperatorData> {
        let m = self.module_section()?;
        let (n, d) = (self.dim(), m.basis.len());
        let p = m.p.as_ref().map_or_else(|| Matrix::zeros(n, d), |e| operator_of(n, d, e));
        Ok(OOperatorData::new(self.bimodule()?, p)?)
    }

    pub fn matched_pair(&self) -> CliResult<MatchedPairData> {
        let p = self.pair.as_ref().ok_or_else(|| CliError::input("the document has no pair section"))?;
        let (n, d) = (self.dim(), p.basis.len());
        let mul = p.mul.as_ref().map_or_else(|| Tensor3::zeros(d), |e| tensor_of(d, e));
        let alpha = p.alpha.as_ref().map_or_else(|| Matrix::zeros(d, d), |e| operator_of(d, d, e));
        Ok(MatchedPairData {
            alg_a: self.averaging()?,
            alg_b: AveragingAlgebra::new(mul, alpha)?,
            l_a: actions_of(n, d, p.l_a.as_ref()),
            r_a: actions_of(n, d, p.r_a.as_ref()),
            l_b: actions_of(d, n, p.l_b.as_ref()),
            r_b: actions_of(d, n, p.r_b.as_ref()),
            dual: p.dual,
        })
    }
}

/// Labels `x*` for the dual basis.
pub fn dual_labels(basis: &[String]) -> Vec<String> {
    basis.iter().map(|l| format!("{l}*")).collect()
}

/// Labels `p⊗q` of `P⊗Q`, `p` slowest.
pub fn tensor_labels(p: &[String], q: &[String]) -> Vec<String> {
    p.iter().flat_map(|a| q.iter().map(move |b| format!("{a}⊗{b}"))).collect()
}

pub fn tensor_of(n: usize, e: &Entries<3>) -> Tensor3 {
    let mut t = Tensor3::zeros(n);
    for (&[i, j, k], c) in e {
        t.set(i, j, k, c.clone());
    }
    t
}

/// `[src, dst, c]` entries as a `rows × cols` matrix whose columns are images.
pub fn operator_of(rows: usize, cols: usize, e: &Entries<2>) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (&[s, d], c) in e {
        m[(d, s)] = c.clone();
    }
    m
}

/// `[i, j, c]` entries as a coefficient matrix.
pub fn coeff_of(rows: usize, cols: usize, e: &Entries<2>) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (&[i, j], c) in e {
        m[(i, j)] = c.clone();
    }
    m
}

/// `[a, m, m', c]` entries as one `d × d` matrix per acting basis vector.
pub fn actions_of(k: usize, d: usize, e: Option<&Entries<3>>) -> Vec<Matrix> {
    let mut out = vec![Matrix::zeros(d, d); k];
    for (&[a, m, m2], c) in e.into_iter().flatten() {
        out[a][(m2, m)] = c.clone();
    }
    out
}

pub fn tensor_entries(t: &Tensor3) -> Entries<3> {
    let n = t.dim();
    let mut e = Entries::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = t.get(i, j, k);
                if !c.is_zero() {
                    e.insert([i, j, k], c.clone());
                }
            }
        }
    }
    e
}

pub fn operator_entries(m: &Matrix) -> Entries<2> {
    let mut e = Entries::new();
    for s in 0..m.cols() {
        for d in 0..m.rows() {
            if !m[(d, s)].is_zero() {
                e.insert([s, d], m[(d, s)].clone());
            }
        }
    }
    e
}

pub fn coeff_entries(m: &Matrix) -> Entries<2> {
    let mut e = Entries::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                e.insert([i, j], m[(i, j)].clone());
            }
        }
    }
    e
}

pub fn action_entries(mats: &[Matrix]) -> Entries<3> {
    let mut e = Entries::new();
    for (a, m) in mats.iter().enumerate() {
        for col in 0..m.cols() {
            for row in 0..m.rows() {
                if !m[(row, col)].is_zero() {
                    e.insert([a, col, row], m[(row, col)].clone());
                }
            }
        }
    }
    e
}

pub fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// A coefficient as a JSON number when it is a machine-size integer, as a
/// string otherwise.
pub fn json_coeff(c: &Q) -> String {
    match c.is_integer().then(|| c.numer().to_i64()).flatten() {
        Some(i) => i.to_string(),
        None => json_string(&scalar::format(c)),
    }
}

fn label_list(labels: &[String]) -> String {
    let items: Vec<String> = labels.iter().map(|l| json_string(l)).collect();
    format!("[{}]", items.join(", "))
}

fn entry_rows<const N: usize>(e: &Entries<N>, spaces: [&Vec<String>; N]) -> Vec<String> {
    e.iter()
        .map(|(key, c)| {
            let mut items: Vec<String> = (0..N).map(|s| json_string(&spaces[s][key[s]])).collect();
            items.push(json_coeff(c));
            format!("[{}]", items.join(", "))
        })
        .collect()
}

fn entry_block<const N: usize>(level: usize, name: &str, e: &Entries<N>, spaces: [&Vec<String>; N]) -> String {
    let pad = "  ".repeat(level);
    let rows = entry_rows(e, spaces);
    if rows.is_empty() {
        return format!("{pad}\"{name}\": []");
    }
    let inner = rows.iter().map(|r| format!("{pad}  {r}")).collect::<Vec<_>>().join(",\n");
    format!("{pad}\"{name}\": [\n{inner}\n{pad}]")
}

fn push_block<const N: usize>(out: &mut Vec<String>, name: &str, e: &Option<Entries<N>>, spaces: [&Vec<String>; N]) {
    if let Some(e) = e {
        out.push(entry_block(2, name, e, spaces));
    }
}

fn object_block(name: &str, inner: Vec<String>) -> String {
    format!("  \"{name}\": {{\n{}\n  }}", inner.join(",\n"))
}
