//! JSON Lines dataset: row templates, their parameter expansion, and the
//! concrete [`PairRecord`]s handed to the verifier.
//!
//! A template names `g` and `h` by classical or Cartan names whose ranks may be
//! expressions in square brackets (`A[p*q-1]`, `so[2*n*n+n]`, `sl[p]`). Weights
//! and marked nodes are written per listed factor of `h`, against the
//! standard-representation node of classical names, and lifted to the
//! normalised simple factors with [`AlgebraName::lift_weight`] / `lift_marks`.

use std::collections::BTreeMap;
use std::path::Path;

use niporb::{standard_representation, OrbitLabel, Partition};
use rootcore::{AlgebraName, Basis, ReductiveType, RootSystem};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{eval_bool, eval_int, Env};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatasetError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: field `{field}`: {message}")]
    Schema { line: usize, field: String, message: String },
}

/// An integer literal or an expression string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntSpec {
    Int(i64),
    Expr(String),
}

impl IntSpec {
    fn eval(&self, env: &Env) -> Result<i64, String> {
        match self {
            IntSpec::Int(n) => Ok(*n),
            IntSpec::Expr(s) => eval_int(s, env).map_err(|e| e.to_string()),
        }
    }
}

/// A boolean literal or a condition string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoolSpec {
    Bool(bool),
    Expr(String),
}

impl BoolSpec {
    fn eval(&self, env: &Env) -> Result<bool, String> {
        match self {
            BoolSpec::Bool(b) => Ok(*b),
            BoolSpec::Expr(s) => eval_bool(s, env).map_err(|e| e.to_string()),
        }
    }
}

/// Sparse weight: `(1-based node, coefficient)` pairs; repeated nodes add up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseWeight {
    pub terms: Vec<(IntSpec, IntSpec)>,
}

/// Weight on one listed factor of `h`, in fundamental coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Dense(Vec<IntSpec>),
    Sparse(SparseWeight),
    /// `delta` (highest root) or `delta_short` (dominant short root) of a simple factor.
    Named(String),
}

/// One name or a list of names; a single string may join names with `+`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TypeSpec {
    One(String),
    Many(Vec<String>),
}

impl TypeSpec {
    fn names(&self) -> Vec<String> {
        match self {
            TypeSpec::One(s) => split_top_level(s, '+'),
            TypeSpec::Many(v) => v.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// `g/h` is an irreducible `h`-module.
    #[default]
    Isotropy,
    /// Levi factor of a cominuscule parabolic; `m` is half of `g/l`.
    Hermitian,
    /// `(l' ⊕ l', diag l')`.
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamRange {
    pub min: i64,
    #[serde(default)]
    pub max: Option<i64>,
}

/// Field overrides applied when `when` holds; every matching branch applies in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Branch {
    pub when: String,
    #[serde(default)]
    pub rho: Option<Vec<WeightSpec>>,
    #[serde(default)]
    pub marked_nodes: Option<Vec<Vec<IntSpec>>>,
    #[serde(default, rename = "expected_dim_Om")]
    pub expected_dim_om: Option<IntSpec>,
    #[serde(default)]
    pub z_label: Option<String>,
    #[serde(default)]
    pub z_label_alt: Option<String>,
    #[serde(default, rename = "expected_dim_Zm")]
    pub expected_dim_zm: Option<IntSpec>,
    #[serde(default)]
    pub legendrian: Option<BoolSpec>,
}

/// One line of a dataset file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairTemplate {
    pub id: String,
    pub source: String,
    #[serde(default)]
    pub kind: PairKind,
    pub g: TypeSpec,
    pub h: TypeSpec,
    #[serde(default)]
    pub rho: Option<Vec<WeightSpec>>,
    #[serde(default)]
    pub marked_nodes: Option<Vec<Vec<IntSpec>>>,
    #[serde(rename = "expected_dim_Om")]
    pub expected_dim_om: IntSpec,
    pub z_label: String,
    #[serde(default)]
    pub z_label_alt: Option<String>,
    #[serde(rename = "expected_dim_Zm")]
    pub expected_dim_zm: IntSpec,
    pub legendrian: BoolSpec,
    pub symmetric: bool,
    #[serde(default)]
    pub params: BTreeMap<String, ParamRange>,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default)]
    pub branches: Vec<Branch>,
}

/// A fully instantiated row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    /// Template id, followed by `[p=3,q=2]` for family members.
    pub id: String,
    pub template_id: String,
    pub source: String,
    pub kind: PairKind,
    pub g: ReductiveType,
    pub g_names: Vec<AlgebraName>,
    pub h: ReductiveType,
    pub h_names: Vec<AlgebraName>,
    /// Fundamental coordinates per simple factor of `h`; `None` when it is to be
    /// derived from `marked_nodes`.
    pub rho: Option<Vec<Vec<i64>>>,
    /// 1-based marked nodes per simple factor of `h`.
    pub marked_nodes: Option<Vec<Vec<usize>>>,
    pub expected_dim_om: i64,
    pub z_label: OrbitLabel,
    /// A second name for the same orbit; both must give the same dimension.
    pub z_label_alt: Option<OrbitLabel>,
    pub expected_dim_zm: i64,
    pub legendrian: bool,
    pub symmetric: bool,
    pub params: BTreeMap<String, i64>,
}

impl PairRecord {
    /// Table number from the id prefix `T1.`–`T4.`; `None` for other rows.
    pub fn table(&self) -> Option<u8> {
        let rest = self.id.strip_prefix('T')?;
        let (n, _) = rest.split_once('.')?;
        n.parse().ok()
    }
}

/// How families are expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpandOptions {
    /// Each parameter runs from its minimum to minimum + `params_max`.
    pub params_max: i64,
    /// Instances whose `g` has a standard representation larger than this are skipped.
    pub max_matrix_size: usize,
}

impl Default for ExpandOptions {
    fn default() -> Self {
        ExpandOptions { params_max: 5, max_matrix_size: 200 }
    }
}

/// Parses template lines; blank lines and lines starting with `#` are skipped.
/// Returns `(line number, template)` pairs.
pub fn parse_templates(text: &str) -> Result<Vec<(usize, PairTemplate)>, DatasetError> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| DatasetError::Parse { line: line_no, message: e.to_string() })?;
        let t: PairTemplate = serde_path_to_error::deserialize(value).map_err(|e| {
            let message = e.inner().to_string();
            let path = e.path().to_string();
            let field = if path == "." { offending_field(&message) } else { path };
            DatasetError::Schema { line: line_no, field, message }
        })?;
        out.push((line_no, t));
    }
    Ok(out)
}

/// The field named in a top-level serde message (``missing field `g` ``), or `<record>`.
fn offending_field(message: &str) -> String {
    let mut parts = message.split('`');
    match (parts.next(), parts.next()) {
        (Some(_), Some(f)) if !f.is_empty() => f.to_string(),
        _ => "<record>".to_string(),
    }
}

/// Parses and expands a dataset held in memory.
pub fn load_dataset_str(text: &str, opts: &ExpandOptions) -> Result<Vec<PairRecord>, DatasetError> {
    let mut out = Vec::new();
    for (line, t) in parse_templates(text)? {
        out.extend(expand_template(&t, line, opts)?);
    }
    Ok(out)
}

/// Reads and expands a dataset file with the default expansion policy.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<Vec<PairRecord>, DatasetError> {
    load_dataset_with(path, &ExpandOptions::default())
}

pub fn load_dataset_with(path: impl AsRef<Path>, opts: &ExpandOptions) -> Result<Vec<PairRecord>, DatasetError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| DatasetError::Io { path: path.display().to_string(), message: e.to_string() })?;
    load_dataset_str(&text, opts)
}

/// All parameter assignments of a template satisfying its constraints, in
/// lexicographic order of the (sorted) parameter names.
fn parameter_grid(t: &PairTemplate, line: usize, opts: &ExpandOptions) -> Result<Vec<Env>, DatasetError> {
    let mut grid = vec![Env::new()];
    for (name, range) in &t.params {
        let hi = (range.min + opts.params_max).min(range.max.unwrap_or(i64::MAX));
        grid = grid
            .into_iter()
            .flat_map(|env| {
                (range.min..=hi).map(move |v| {
                    let mut e = env.clone();
                    e.insert(name.clone(), v);
                    e
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for env in grid {
        let mut keep = true;
        for c in &t.constraints {
            keep &= eval_bool(c, &env).map_err(|e| schema(line, "constraints", e.to_string()))?;
        }
        if keep {
            out.push(env);
        }
    }
    Ok(out)
}

fn schema(line: usize, field: &str, message: impl Into<String>) -> DatasetError {
    DatasetError::Schema { line, field: field.to_string(), message: message.into() }
}

/// Expands a template over its parameter grid; a fixed row yields one record.
pub fn expand_template(t: &PairTemplate, line: usize, opts: &ExpandOptions) -> Result<Vec<PairRecord>, DatasetError> {
    let mut out = Vec::new();
    for env in parameter_grid(t, line, opts)? {
        let g_names = instantiate_names(&t.g, &env).map_err(|e| schema(line, "g", e))?;
        let g = normalize_all(&g_names).map_err(|e| schema(line, "g", e))?;
        // Fixed rows are kept whatever their size.
        let too_big = !t.params.is_empty()
            && g
                .simple_factors
                .iter()
                .filter_map(|&s| standard_representation(s))
                .any(|(_, n)| n > opts.max_matrix_size);
        if too_big {
            continue;
        }
        out.push(instantiate(t, &env, line, g_names, g)?);
    }
    Ok(out)
}

fn instantiate(
    t: &PairTemplate,
    env: &Env,
    line: usize,
    g_names: Vec<AlgebraName>,
    g: ReductiveType,
) -> Result<PairRecord, DatasetError> {
    let mut rho = t.rho.clone();
    let mut marks = t.marked_nodes.clone();
    let mut om = t.expected_dim_om.clone();
    let mut label = t.z_label.clone();
    let mut label_alt = t.z_label_alt.clone();
    let mut zm = t.expected_dim_zm.clone();
    let mut legendrian = t.legendrian.clone();
    for b in &t.branches {
        if !eval_bool(&b.when, env).map_err(|e| schema(line, "branches", e.to_string()))? {
            continue;
        }
        if let Some(x) = &b.rho {
            rho = Some(x.clone());
        }
        if let Some(x) = &b.marked_nodes {
            marks = Some(x.clone());
        }
        if let Some(x) = &b.expected_dim_om {
            om = x.clone();
        }
        if let Some(x) = &b.z_label {
            label = x.clone();
        }
        if let Some(x) = &b.z_label_alt {
            label_alt = Some(x.clone());
        }
        if let Some(x) = &b.expected_dim_zm {
            zm = x.clone();
        }
        if let Some(x) = &b.legendrian {
            legendrian = x.clone();
        }
    }

    let h_names = instantiate_names(&t.h, env).map_err(|e| schema(line, "h", e))?;
    let h = normalize_all(&h_names).map_err(|e| schema(line, "h", e))?;
    let rho = rho
        .map(|specs| lift_weights(&h_names, &specs, env))
        .transpose()
        .map_err(|e| schema(line, "rho", e))?;
    let marked_nodes = marks
        .map(|m| lift_all_marks(&h_names, &m, env))
        .transpose()
        .map_err(|e| schema(line, "marked_nodes", e))?;
    if rho.is_none() && marked_nodes.is_none() {
        return Err(schema(line, "rho", "either rho or marked_nodes is required"));
    }
    let z_label = instantiate_label(&label, env).map_err(|e| schema(line, "z_label", e))?;
    let z_label_alt = label_alt
        .map(|l| instantiate_label(&l, env))
        .transpose()
        .map_err(|e| schema(line, "z_label_alt", e))?;

    let id = if env.is_empty() {
        t.id.clone()
    } else {
        let ps: Vec<String> = env.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}[{}]", t.id, ps.join(","))
    };
    Ok(PairRecord {
        id,
        template_id: t.id.clone(),
        source: t.source.clone(),
        kind: t.kind,
        g,
        g_names,
        h,
        h_names,
        rho,
        marked_nodes,
        expected_dim_om: om.eval(env).map_err(|e| schema(line, "expected_dim_Om", e))?,
        z_label,
        z_label_alt,
        expected_dim_zm: zm.eval(env).map_err(|e| schema(line, "expected_dim_Zm", e))?,
        legendrian: legendrian.eval(env).map_err(|e| schema(line, "legendrian", e))?,
        symmetric: t.symmetric,
        params: env.clone(),
    })
}

/// Splits on `sep` outside brackets and parentheses.
fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    out.push(cur.trim().to_string());
    out
}

/// `A[p*q-1]` → `A5`; names without brackets are parsed as they stand.
pub fn instantiate_name(s: &str, env: &Env) -> Result<AlgebraName, String> {
    let text = match s.split_once('[') {
        Some((head, rest)) => {
            let inner = rest.strip_suffix(']').ok_or_else(|| format!("unclosed `[` in `{s}`"))?;
            let n = eval_int(inner, env).map_err(|e| e.to_string())?;
            if n < 0 {
                return Err(format!("`{s}` has negative size {n}"));
            }
            format!("{head}{n}")
        }
        None => s.to_string(),
    };
    text.parse::<AlgebraName>().map_err(|e| format!("`{text}`: {e}"))
}

fn instantiate_names(spec: &TypeSpec, env: &Env) -> Result<Vec<AlgebraName>, String> {
    spec.names().iter().map(|s| instantiate_name(s, env)).collect()
}

fn normalize_all(names: &[AlgebraName]) -> Result<ReductiveType, String> {
    let mut out = ReductiveType::default();
    for n in names {
        out.extend(n.normalize().map_err(|e| format!("{n}: {e}"))?);
    }
    Ok(out)
}

/// Number of fundamental coordinates a weight on `name` is written with:
/// one for `so(3)`/`so(4)` (the standard representation), else the rank.
pub fn dataset_rank(name: &AlgebraName) -> Result<usize, String> {
    match name {
        AlgebraName::So(3) | AlgebraName::So(4) => Ok(1),
        _ => {
            let n = name.normalize().map_err(|e| e.to_string())?;
            Ok(n.simple_factors.first().map_or(0, |t| t.rank()))
        }
    }
}

fn lift_weights(names: &[AlgebraName], specs: &[WeightSpec], env: &Env) -> Result<Vec<Vec<i64>>, String> {
    if names.len() != specs.len() {
        return Err(format!("{} weights for {} factors of h", specs.len(), names.len()));
    }
    let mut out = Vec::new();
    for (name, spec) in names.iter().zip(specs) {
        let rank = dataset_rank(name)?;
        let dense = match spec {
            WeightSpec::Dense(v) => v.iter().map(|x| x.eval(env)).collect::<Result<Vec<_>, _>>()?,
            WeightSpec::Sparse(sp) => {
                let mut d = vec![0; rank];
                for (node, c) in &sp.terms {
                    let node = node.eval(env)?;
                    if node < 1 || node as usize > rank {
                        return Err(format!("node {node} out of range on {name}"));
                    }
                    d[node as usize - 1] += c.eval(env)?;
                }
                d
            }
            WeightSpec::Named(which) => {
                out.push(named_weight(name, which)?);
                continue;
            }
        };
        if dense.len() != rank {
            return Err(format!("{name} takes {rank} coordinates, got {}", dense.len()));
        }
        out.extend(name.lift_weight(&dense).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn named_weight(name: &AlgebraName, which: &str) -> Result<Vec<i64>, String> {
    let t = name
        .normalize()
        .map_err(|e| e.to_string())?
        .as_simple()
        .ok_or_else(|| format!("`{which}` needs a simple factor, got {name}"))?;
    let rs = RootSystem::simple(t);
    let w = match which {
        "delta" => rs.highest_root(0),
        "delta_short" => rs.dominant_short_root(0),
        _ => return Err(format!("unknown named weight `{which}`")),
    }
    .map_err(|e| e.to_string())?;
    let f = rs.convert_basis(&w, Basis::FundamentalWeight).map_err(|e| e.to_string())?;
    f.integer_coords().ok_or_else(|| format!("{which} of {t} is not integral"))
}

fn lift_all_marks(names: &[AlgebraName], marks: &[Vec<IntSpec>], env: &Env) -> Result<Vec<Vec<usize>>, String> {
    if names.len() != marks.len() {
        return Err(format!("{} mark sets for {} factors of h", marks.len(), names.len()));
    }
    let mut out = Vec::new();
    for (name, m) in names.iter().zip(marks) {
        let nodes = m
            .iter()
            .map(|x| {
                let v = x.eval(env)?;
                usize::try_from(v).map_err(|_| format!("negative node {v}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.extend(name.lift_marks(&nodes).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

/// Orbit label with expressions allowed in partition parts and exponents:
/// `partition:2^2,1^(2*l-4)`. Items with exponent 0 vanish.
pub fn instantiate_label(s: &str, env: &Env) -> Result<OrbitLabel, String> {
    let Some(body) = s.trim().strip_prefix("partition:") else {
        return s.parse().map_err(|e: niporb::NilError| e.to_string());
    };
    let mut powers = Vec::new();
    for item in split_top_level(body.trim_start_matches('[').trim_end_matches(']'), ',') {
        let (p, m) = match split_top_level(&item, '^').as_slice() {
            [p] => (p.clone(), "1".to_string()),
            [p, m] => (p.clone(), m.clone()),
            _ => return Err(format!("bad partition item `{item}`")),
        };
        let p = eval_int(&p, env).map_err(|e| e.to_string())?;
        let m = eval_int(&m, env).map_err(|e| e.to_string())?;
        let (p, m) = (usize::try_from(p), usize::try_from(m));
        let (Ok(p), Ok(m)) = (p, m) else {
            return Err(format!("negative value in partition item `{item}`"));
        };
        powers.push((p, m));
    }
    Partition::from_powers(&powers)
        .map(OrbitLabel::ClassicalPartition)
        .map_err(|e| e.to_string())
}
