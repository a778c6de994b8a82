//! The JSON document format: parsing with path-precise diagnostics and
//! canonical serialization (sorted keys, lowest-terms scalar strings).

use std::collections::{BTreeMap, BTreeSet};

use hopfkit_core::algebra::Algebra;
use hopfkit_core::catalog::{self, Entry};
use hopfkit_core::coaction::Coaction;
use hopfkit_core::hopf::HopfAlgebra;
use hopfkit_core::linalg::{Field, Matrix, Scalar, Subspace};
use hopfkit_core::reduction::Bundle;
use serde_json::{json, Map, Value};

use crate::error::CliError;

/// A dense matrix between two named objects. Whether it is an algebra
/// morphism or (with `hopf_matrix`) a bundle morphism depends on the kinds
/// of `source` and `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismObject {
    pub source: String,
    pub target: String,
    pub matrix: Matrix,
    pub hopf_matrix: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(Algebra),
    Hopf(HopfAlgebra),
    Coaction { coaction: Coaction, algebra: String, hopf: String },
    Subspace(Subspace),
    Bundle { bundle: Bundle, coaction: String, seed: Option<String> },
    Morphism(MorphismObject),
    Catalog { name: String, entry: Entry },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Hopf(_) => "hopf",
            Object::Coaction { .. } => "coaction",
            Object::Subspace(_) => "subspace",
            Object::Bundle { .. } => "bundle",
            Object::Morphism(_) => "morphism",
            Object::Catalog { entry: Entry::Hopf(_), .. } => "hopf",
            Object::Catalog { entry: Entry::Algebra(_), .. } => "algebra",
        }
    }

    /// The algebra of an algebra, Hopf or catalog object.
    pub fn as_algebra(&self) -> Option<&Algebra> {
        match self {
            Object::Algebra(a) | Object::Catalog { entry: Entry::Algebra(a), .. } => Some(a),
            Object::Hopf(h) | Object::Catalog { entry: Entry::Hopf(h), .. } => Some(h.algebra()),
            _ => None,
        }
    }

    pub fn as_hopf(&self) -> Option<&HopfAlgebra> {
        match self {
            Object::Hopf(h) | Object::Catalog { entry: Entry::Hopf(h), .. } => Some(h),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub objects: BTreeMap<String, Object>,
    /// Objects flagged `"unchecked": true`, exempt from strict validation.
    pub unchecked: BTreeSet<String>,
}

fn err(path: &str, message: impl Into<String>) -> CliError {
    CliError::Document { path: path.to_string(), message: message.into() }
}

fn core(path: &str, e: hopfkit_core::Error) -> CliError {
    err(path, e.to_string())
}

pub fn parse_field(v: &Value) -> Result<Field, CliError> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rational),
        Value::Object(m) if m.len() == 1 && m.contains_key("Fp") => {
            let p = m["Fp"].as_u64().ok_or_else(|| err("field.Fp", "expected a positive integer"))?;
            Field::prime(p).map_err(|e| core("field.Fp", e))
        }
        _ => Err(err("field", "expected \"Q\" or {\"Fp\": <prime>}")),
    }
}

pub fn field_value(f: Field) -> Value {
    match f {
        Field::Rational => json!("Q"),
        Field::Prime(p) => json!({ "Fp": p }),
    }
}

pub fn parse_scalar(field: Field, v: &Value, path: &str) -> Result<Scalar, CliError> {
    match v {
        Value::String(s) => field.parse(s).map_err(|e| core(path, e)),
        Value::Number(n) if n.is_i64() => Ok(field.from_i64(n.as_i64().expect("checked"))),
        Value::Number(n) if n.is_u64() => field.parse(&n.to_string()).map_err(|e| core(path, e)),
        _ => Err(err(path, "expected a scalar string such as \"-3/4\" or an integer")),
    }
}

pub fn scalar_value(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn index(v: &Value, bound: usize, path: &str) -> Result<usize, CliError> {
    let i = v.as_u64().ok_or_else(|| err(path, "expected a non-negative integer index"))? as usize;
    if i >= bound {
        return Err(err(path, format!("index {i} out of range (dimension {bound})")));
    }
    Ok(i)
}

pub fn parse_vector(field: Field, v: &Value, len: usize, path: &str) -> Result<Vec<Scalar>, CliError> {
    let xs = array(v, path)?;
    if xs.len() != len {
        return Err(err(path, format!("expected {len} coordinates, found {}", xs.len())));
    }
    xs.iter().enumerate().map(|(i, x)| parse_scalar(field, x, &format!("{path}[{i}]"))).collect()
}

pub fn vector_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_value).collect())
}

pub fn parse_matrix(field: Field, v: &Value, path: &str) -> Result<Matrix, CliError> {
    let rows = array(v, path)?;
    let width = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let parsed: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| parse_vector(field, row, width, &format!("{path}[{r}]")))
        .collect::<Result<_, _>>()?;
    Matrix::from_rows(field, width, &parsed).map_err(|e| core(path, e))
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vector_value(r)).collect())
}

fn sparse<const N: usize>(field: Field, v: &Value, bounds: [usize; N], path: &str) -> Result<Vec<([usize; N], Scalar)>, CliError> {
    let mut out = Vec::new();
    for (e, entry) in array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{e}]");
        let parts = array(entry, &p)?;
        if parts.len() != N + 1 {
            return Err(err(&p, format!("expected {} indices and a scalar", N)));
        }
        let mut idx = [0usize; N];
        for (k, slot) in idx.iter_mut().enumerate() {
            *slot = index(&parts[k], bounds[k], &format!("{p}[{k}]"))?;
        }
        out.push((idx, parse_scalar(field, &parts[N], &format!("{p}[{N}]"))?));
    }
    Ok(out)
}

fn get<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, CliError> {
    m.get(key).ok_or_else(|| err(path, format!("missing key {key:?}")))
}

fn get_str<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a str, CliError> {
    get(m, key, path)?.as_str().ok_or_else(|| err(&format!("{path}.{key}"), "expected a string"))
}

fn parse_algebra(field: Field, m: &Map<String, Value>, path: &str) -> Result<Algebra, CliError> {
    let dim = get(m, "dim", path)?.as_u64().ok_or_else(|| err(&format!("{path}.dim"), "expected a positive integer"))? as usize;
    if dim == 0 {
        return Err(err(&format!("{path}.dim"), "dimension must be positive"));
    }
    let names: Vec<String> = match m.get("basis") {
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(b) => {
            let p = format!("{path}.basis");
            let xs = array(b, &p)?;
            if xs.len() != dim {
                return Err(err(&p, format!("expected {dim} names, found {}", xs.len())));
            }
            xs.iter()
                .enumerate()
                .map(|(i, x)| x.as_str().map(str::to_string).ok_or_else(|| err(&format!("{p}[{i}]"), "expected a string")))
                .collect::<Result<_, _>>()?
        }
    };
    let unit = parse_vector(field, get(m, "unit", path)?, dim, &format!("{path}.unit"))?;
    let mult: Vec<(usize, usize, usize, Scalar)> = sparse(field, get(m, "mult", path)?, [dim; 3], &format!("{path}.mult"))?
        .into_iter()
        .map(|([i, j, k], c)| (i, j, k, c))
        .collect();
    let alg = Algebra::from_sparse(field, names, &mult, unit).map_err(|e| core(path, e))?;
    match m.get("augmentation") {
        None => Ok(alg),
        Some(v) => {
            let aug = parse_vector(field, v, dim, &format!("{path}.augmentation"))?;
            alg.with_augmentation(aug).map_err(|e| core(path, e))
        }
    }
}

fn parse_hopf(field: Field, m: &Map<String, Value>, path: &str) -> Result<HopfAlgebra, CliError> {
    let alg = parse_algebra(field, m, path)?.without_augmentation();
    let d = alg.dim();
    let comult: Vec<_> = sparse(field, get(m, "comult", path)?, [d; 3], &format!("{path}.comult"))?
        .into_iter()
        .map(|([i, j, k], c)| (i, j, k, c))
        .collect();
    let counit = parse_vector(field, get(m, "counit", path)?, d, &format!("{path}.counit"))?;
    let antipode: Vec<_> = sparse(field, get(m, "antipode", path)?, [d; 2], &format!("{path}.antipode"))?
        .into_iter()
        .map(|([i, j], c)| (i, j, c))
        .collect();
    HopfAlgebra::from_sparse(alg, &comult, counit, &antipode).map_err(|e| core(path, e))
}

pub fn parse_subspace(field: Field, m: &Map<String, Value>, path: &str) -> Result<Subspace, CliError> {
    let ambient = get(m, "ambient", path)?.as_u64().ok_or_else(|| err(&format!("{path}.ambient"), "expected an integer"))? as usize;
    let p = format!("{path}.vectors");
    let vectors: Vec<Vec<Scalar>> = array(get(m, "vectors", path)?, &p)?
        .iter()
        .enumerate()
        .map(|(i, v)| parse_vector(field, v, ambient, &format!("{p}[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok(Subspace::span_of(field, ambient, &vectors))
}

pub fn subspace_value(s: &Subspace) -> Value {
    json!({
        "kind": "subspace",
        "ambient": s.ambient(),
        "vectors": s.basis_vectors().iter().map(|v| vector_value(v)).collect::<Vec<_>>(),
    })
}

struct Parser<'a> {
    field: Field,
    raw: &'a Map<String, Value>,
    done: BTreeMap<String, Object>,
    visiting: BTreeSet<String>,
}

impl Parser<'_> {
    fn resolve(&mut self, name: &str, from: &str) -> Result<&Object, CliError> {
        if !self.raw.contains_key(name) {
            return Err(err(from, format!("reference to undefined object {name:?}")));
        }
        self.parse_object(name)?;
        Ok(&self.done[name])
    }

    fn parse_object(&mut self, name: &str) -> Result<(), CliError> {
        if self.done.contains_key(name) {
            return Ok(());
        }
        let path = format!("objects.{name}");
        if !self.visiting.insert(name.to_string()) {
            return Err(err(&path, "cyclic reference"));
        }
        let m = self.raw[name].as_object().ok_or_else(|| err(&path, "expected an object"))?;
        let field = self.field;
        let obj = match get_str(m, "kind", &path)? {
            "algebra" => Object::Algebra(parse_algebra(field, m, &path)?),
            "hopf" => Object::Hopf(parse_hopf(field, m, &path)?),
            "subspace" => Object::Subspace(parse_subspace(field, m, &path)?),
            "catalog" => {
                let cname = get_str(m, "name", &path)?;
                let entry = catalog::lookup(cname, field).map_err(|e| core(&format!("{path}.name"), e))?;
                let ef = match &entry {
                    Entry::Hopf(h) => h.field(),
                    Entry::Algebra(a) => a.field(),
                };
                if ef != field {
                    return Err(err(&format!("{path}.name"), format!("catalog entry lives over {ef}, document field is {field}")));
                }
                Object::Catalog { name: cname.to_string(), entry }
            }
            "coaction" => {
                let a_ref = get_str(m, "algebra", &path)?.to_string();
                let h_ref = get_str(m, "hopf", &path)?.to_string();
                let from = format!("{path}.algebra");
                let alg = self
                    .resolve(&a_ref, &from)?
                    .as_algebra()
                    .cloned()
                    .ok_or_else(|| err(&from, format!("{a_ref:?} is not an algebra")))?;
                let from = format!("{path}.hopf");
                let hopf = self
                    .resolve(&h_ref, &from)?
                    .as_hopf()
                    .cloned()
                    .ok_or_else(|| err(&from, format!("{h_ref:?} is not a Hopf algebra")))?;
                let entries: Vec<_> = sparse(field, get(m, "map", &path)?, [alg.dim(), alg.dim(), hopf.dim()], &format!("{path}.map"))?
                    .into_iter()
                    .map(|([i, j, k], c)| (i, j, k, c))
                    .collect();
                let coaction = Coaction::from_sparse(alg, hopf, &entries).map_err(|e| core(&path, e))?;
                Object::Coaction { coaction, algebra: a_ref, hopf: h_ref }
            }
            "bundle" => {
                let c_ref = get_str(m, "coaction", &path)?.to_string();
                let from = format!("{path}.coaction");
                let coaction = match self.resolve(&c_ref, &from)? {
                    Object::Coaction { coaction, .. } => coaction.clone(),
                    _ => return Err(err(&from, format!("{c_ref:?} is not a coaction"))),
                };
                let d = coaction.comodule().dim();
                let p = format!("{path}.calculus");
                let vectors: Vec<Vec<Scalar>> = match m.get("calculus") {
                    None => Vec::new(),
                    Some(v) => array(v, &p)?
                        .iter()
                        .enumerate()
                        .map(|(i, v)| parse_vector(field, v, d * d, &format!("{p}[{i}]")))
                        .collect::<Result<_, _>>()?,
                };
                let calculus = Subspace::span_of(field, d * d, &vectors);
                let seed = match m.get("seed") {
                    None => None,
                    Some(s) => {
                        let from = format!("{path}.seed");
                        let s = s.as_str().ok_or_else(|| err(&from, "expected a subspace name"))?.to_string();
                        match self.resolve(&s, &from)? {
                            Object::Subspace(sub) if sub.ambient() == d => {}
                            _ => return Err(err(&from, format!("{s:?} is not a subspace of the bundle algebra"))),
                        }
                        Some(s)
                    }
                };
                let bundle = Bundle::new(coaction, calculus).map_err(|e| core(&path, e))?;
                Object::Bundle { bundle, coaction: c_ref, seed }
            }
            "morphism" => {
                let source = get_str(m, "source", &path)?.to_string();
                let target = get_str(m, "target", &path)?.to_string();
                self.resolve(&source, &format!("{path}.source"))?;
                self.resolve(&target, &format!("{path}.target"))?;
                let matrix = parse_matrix(field, get(m, "matrix", &path)?, &format!("{path}.matrix"))?;
                let hopf_matrix = match m.get("hopf_matrix") {
                    None => None,
                    Some(v) => Some(parse_matrix(field, v, &format!("{path}.hopf_matrix"))?),
                };
                Object::Morphism(MorphismObject { source, target, matrix, hopf_matrix })
            }
            other => return Err(err(&format!("{path}.kind"), format!("unknown kind {other:?}"))),
        };
        self.visiting.remove(name);
        self.done.insert(name.to_string(), obj);
        Ok(())
    }
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let value: Value = serde_json::from_str(text).map_err(CliError::Json)?;
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> Result<Document, CliError> {
    let top = value.as_object().ok_or_else(|| err("$", "expected a JSON object"))?;
    for key in top.keys() {
        if !matches!(key.as_str(), "field" | "objects" | "report") {
            return Err(err(key, "unknown top-level key"));
        }
    }
    let field = parse_field(get(top, "field", "$")?)?;
    let raw = get(top, "objects", "$")?.as_object().ok_or_else(|| err("objects", "expected an object"))?;
    let mut parser = Parser { field, raw, done: BTreeMap::new(), visiting: BTreeSet::new() };
    let mut unchecked = BTreeSet::new();
    for name in raw.keys() {
        parser.parse_object(name)?;
        if raw[name].get("unchecked") == Some(&Value::Bool(true)) {
            unchecked.insert(name.clone());
        }
    }
    Ok(Document { field, objects: parser.done, unchecked })
}

fn sparse_value<const N: usize>(entries: impl Iterator<Item = ([usize; N], Scalar)>) -> Value {
    Value::Array(
        entries
            .map(|(idx, c)| {
                let mut row: Vec<Value> = idx.iter().map(|&i| json!(i)).collect();
                row.push(scalar_value(&c));
                Value::Array(row)
            })
            .collect(),
    )
}

fn algebra_fields(a: &Algebra) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("dim".into(), json!(a.dim()));
    m.insert("basis".into(), json!(a.names()));
    m.insert("unit".into(), vector_value(a.unit()));
    m.insert("mult".into(), sparse_value(a.sparse_entries().into_iter().map(|(i, j, k, c)| ([i, j, k], c))));
    m
}

pub fn algebra_value(a: &Algebra) -> Value {
    let mut m = algebra_fields(a);
    m.insert("kind".into(), json!("algebra"));
    if let Some(aug) = a.augmentation() {
        m.insert("augmentation".into(), vector_value(aug));
    }
    Value::Object(m)
}

pub fn hopf_value(h: &HopfAlgebra) -> Value {
    let mut m = algebra_fields(h.algebra());
    m.insert("kind".into(), json!("hopf"));
    m.insert("comult".into(), sparse_value(h.comult_entries().into_iter().map(|(i, j, k, c)| ([i, j, k], c))));
    m.insert("counit".into(), vector_value(h.counit()));
    m.insert("antipode".into(), sparse_value(h.antipode_entries().into_iter().map(|(i, j, c)| ([i, j], c))));
    Value::Object(m)
}

pub fn coaction_value(c: &Coaction, algebra: &str, hopf: &str) -> Value {
    json!({
        "kind": "coaction",
        "algebra": algebra,
        "hopf": hopf,
        "map": sparse_value(c.entries().into_iter().map(|(i, j, k, x)| ([i, j, k], x))),
    })
}

pub fn bundle_value(b: &Bundle, coaction: &str, seed: Option<&str>) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("bundle"));
    m.insert("coaction".into(), json!(coaction));
    m.insert("calculus".into(), Value::Array(b.calculus.basis_vectors().iter().map(|v| vector_value(v)).collect()));
    if let Some(s) = seed {
        m.insert("seed".into(), json!(s));
    }
    Value::Object(m)
}

pub fn morphism_value(m: &MorphismObject) -> Value {
    let mut out = Map::new();
    out.insert("kind".into(), json!("morphism"));
    out.insert("source".into(), json!(m.source));
    out.insert("target".into(), json!(m.target));
    out.insert("matrix".into(), matrix_value(&m.matrix));
    if let Some(h) = &m.hopf_matrix {
        out.insert("hopf_matrix".into(), matrix_value(h));
    }
    Value::Object(out)
}

pub fn object_value(o: &Object) -> Value {
    match o {
        Object::Algebra(a) => algebra_value(a),
        Object::Hopf(h) => hopf_value(h),
        Object::Coaction { coaction, algebra, hopf } => coaction_value(coaction, algebra, hopf),
        Object::Subspace(s) => subspace_value(s),
        Object::Bundle { bundle, coaction, seed } => bundle_value(bundle, coaction, seed.as_deref()),
        Object::Morphism(m) => morphism_value(m),
        Object::Catalog { name, .. } => json!({ "kind": "catalog", "name": name }),
    }
}

impl Document {
    pub fn to_value(&self) -> Value {
        let mut objects = Map::new();
        for (name, o) in &self.objects {
            let mut v = object_value(o);
            if self.unchecked.contains(name) {
                v.as_object_mut().expect("objects serialize to maps").insert("unchecked".into(), Value::Bool(true));
            }
            objects.insert(name.clone(), v);
        }
        json!({ "field": field_value(self.field), "objects": objects })
    }
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn serialize_document(doc: &Document) -> String {
    to_canonical_string(&doc.to_value())
}
