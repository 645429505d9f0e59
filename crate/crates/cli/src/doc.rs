//! The JSON interchange format: sparse structure-constant tensors plus just
//! enough metadata to know their shapes.
//!
//! ```json
//! {
//!   "kind": "hopf",
//!   "field": "F7",
//!   "dim": 2,
//!   "basis_names": ["e", "g"],
//!   "tensors": {
//!     "mult": [{"i": 0, "j": 0, "k": 0, "c": 1}, ...],
//!     "unit": [{"i": 0, "c": 1}]
//!   }
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt;

use hayd_core::ayd::Case;
use hayd_core::field::is_prime;
use hayd_core::galois::ComoduleAlgebra;
use hayd_core::hopf::HopfStructure;
use hayd_core::rep::{ActionStructure, CoactionStructure, Side};
use hayd_core::{Field, FieldSpec, FinAlgebra, FinHopfAlgebra, Tensor, TwoSidedStructure, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

const INDEX_KEYS: [&str; 4] = ["i", "j", "k", "l"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Hopf,
    Algebra,
    TwoSided,
    Action,
    Coaction,
    ComoduleAlgebra,
}

impl Kind {
    pub const ALL: [Kind; 6] =
        [Kind::Hopf, Kind::Algebra, Kind::TwoSided, Kind::Action, Kind::Coaction, Kind::ComoduleAlgebra];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Hopf => "hopf",
            Kind::Algebra => "algebra",
            Kind::TwoSided => "two_sided",
            Kind::Action => "action",
            Kind::Coaction => "coaction",
            Kind::ComoduleAlgebra => "comodule_algebra",
        }
    }

    fn from_name(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A scalar as written in a document: residues for prime fields, reduced
/// fractions for the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Residue(u64),
    Rational(Q),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Residue(v) => *v == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn from_field<F: Field>(c: &F) -> Scalar {
        match F::spec() {
            FieldSpec::PrimeField(_) => Scalar::Residue(c.to_string().parse().expect("residues print as integers")),
            FieldSpec::Rationals => Scalar::Rational(c.to_string().parse().expect("rationals print as fractions")),
        }
    }

    pub fn to_field<F: Field>(&self) -> F {
        match self {
            Scalar::Residue(v) => F::from_ratio(&BigInt::from(*v), &BigInt::one()),
            Scalar::Rational(q) => F::from_ratio(q.numer(), q.denom()),
        }
        .expect("document scalars are valid in their field")
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Residue(v) => json!(v),
            Scalar::Rational(q) => json!(q.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub index: Vec<usize>,
    pub c: Scalar,
}

/// A validated document. Entries are sorted by index and nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub field: FieldSpec,
    pub dim: usize,
    /// Dimension of the (co)acting Hopf algebra, for module-like kinds.
    pub hopf_dim: Option<usize>,
    /// Dimension of the acting algebra, for `action`.
    pub algebra_dim: Option<usize>,
    pub case: Option<Case>,
    pub side: Option<Side>,
    pub basis_names: Option<Vec<String>>,
    pub tensors: BTreeMap<String, Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// JSON pointer into the offending document.
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{at}: {}", self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema violations: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Schema(Vec<Violation>),
    #[error("{0}")]
    Mismatch(String),
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = s
        .strip_prefix('F')
        .and_then(|d| d.parse::<u64>().ok())
        .ok_or_else(|| format!("expected \"Q\" or \"F<p>\", got {s:?}"))?;
    if is_prime(p) {
        Ok(FieldSpec::PrimeField(p))
    } else {
        Err(format!("characteristic {p} is not prime"))
    }
}

impl Document {
    fn new(kind: Kind, field: FieldSpec, dim: usize) -> Self {
        Document {
            kind,
            field,
            dim,
            hopf_dim: None,
            algebra_dim: None,
            case: None,
            side: None,
            basis_names: None,
            tensors: BTreeMap::new(),
        }
    }

    /// The side the coaction tensor is laid out for, if any.
    fn coaction_side(&self) -> Option<Side> {
        match self.kind {
            Kind::TwoSided => self.case.map(|c| c.coaction_side()),
            Kind::Coaction => self.side,
            Kind::ComoduleAlgebra => Some(Side::Right),
            _ => None,
        }
    }

    /// Required tensors and their shapes.
    pub fn expected_tensors(&self) -> Vec<(&'static str, Vec<usize>)> {
        let n = self.dim;
        let h = self.hopf_dim.unwrap_or(0);
        let coaction = |side: Side| match side {
            Side::Left => vec![n, h, n],
            Side::Right => vec![n, n, h],
        };
        match self.kind {
            Kind::Hopf => vec![
                ("mult", vec![n, n, n]),
                ("unit", vec![n]),
                ("comult", vec![n, n, n]),
                ("counit", vec![n]),
                ("antipode", vec![n, n]),
            ],
            Kind::Algebra => vec![("mult", vec![n, n, n]), ("unit", vec![n])],
            Kind::TwoSided => vec![
                ("action", vec![h, n, n]),
                ("coaction", coaction(self.coaction_side().unwrap_or(Side::Right))),
            ],
            Kind::Action => vec![("action", vec![self.algebra_dim.unwrap_or(0), n, n])],
            Kind::Coaction => vec![("coaction", coaction(self.coaction_side().unwrap_or(Side::Right)))],
            Kind::ComoduleAlgebra => {
                vec![("mult", vec![n, n, n]), ("unit", vec![n]), ("coaction", coaction(Side::Right))]
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind.name()));
        m.insert("field".into(), json!(self.field.to_string()));
        m.insert("dim".into(), json!(self.dim));
        if let Some(h) = self.hopf_dim {
            m.insert("hopf_dim".into(), json!(h));
        }
        if let Some(a) = self.algebra_dim {
            m.insert("algebra_dim".into(), json!(a));
        }
        if let Some(c) = self.case {
            m.insert("case".into(), json!(c.to_string()));
        }
        if let Some(s) = self.side {
            m.insert("side".into(), json!(side_name(s)));
        }
        if let Some(names) = &self.basis_names {
            m.insert("basis_names".into(), json!(names));
        }
        let mut tensors = Map::new();
        for (name, _) in self.expected_tensors() {
            let entries = self.tensors.get(name).map(Vec::as_slice).unwrap_or(&[]);
            tensors.insert(name.into(), Value::Array(entries.iter().map(entry_json).collect()));
        }
        m.insert("tensors".into(), Value::Object(tensors));
        Value::Object(m)
    }

    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("documents serialize");
        s.push('\n');
        s
    }

    fn check_field<F: Field>(&self) -> Result<(), DocError> {
        if F::spec() != self.field {
            return Err(DocError::Mismatch(format!("document over {} read as {}", self.field, F::spec())));
        }
        Ok(())
    }

    fn expect_kind(&self, kinds: &[Kind]) -> Result<(), DocError> {
        if !kinds.contains(&self.kind) {
            let want: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
            return Err(DocError::Mismatch(format!("expected a {} document, got {}", want.join(" or "), self.kind)));
        }
        Ok(())
    }

    pub fn tensor<F: Field>(&self, name: &str) -> Result<Tensor<F>, DocError> {
        self.check_field::<F>()?;
        let shape = self
            .expected_tensors()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| DocError::Mismatch(format!("{} documents have no tensor {name:?}", self.kind)))?;
        let entries = self.tensors.get(name).map(Vec::as_slice).unwrap_or(&[]);
        let mut t = Tensor::zeros(shape);
        for e in entries {
            t.set(&e.index, e.c.to_field()).map_err(|e| DocError::Mismatch(e.to_string()))?;
        }
        Ok(t)
    }

    fn set_tensor<F: Field>(&mut self, name: &str, t: &Tensor<F>) {
        let entries = t
            .entries()
            .map(|(idx, c)| Entry { index: idx.to_vec(), c: Scalar::from_field(c) })
            .filter(|e| !e.c.is_zero())
            .collect();
        self.tensors.insert(name.to_string(), entries);
    }

    pub fn hopf_structure<F: Field>(&self) -> Result<HopfStructure<F>, DocError> {
        self.expect_kind(&[Kind::Hopf])?;
        Ok(HopfStructure {
            basis_names: self.basis_names.clone().unwrap_or_default(),
            mult: self.tensor("mult")?,
            unit: self.tensor("unit")?,
            comult: self.tensor("comult")?,
            counit: self.tensor("counit")?,
            antipode: self.tensor("antipode")?,
        })
    }

    /// Multiplication and unit of an `algebra`, `hopf` or `comodule_algebra`
    /// document, unverified.
    pub fn algebra<F: Field>(&self) -> Result<FinAlgebra<F>, DocError> {
        self.expect_kind(&[Kind::Algebra, Kind::Hopf, Kind::ComoduleAlgebra])?;
        FinAlgebra::from_tensors_unchecked(&self.tensor("mult")?, &self.tensor("unit")?)
            .map_err(|e| DocError::Mismatch(e.to_string()))
    }

    pub fn action<F: Field>(&self) -> Result<ActionStructure<F>, DocError> {
        self.expect_kind(&[Kind::Action, Kind::TwoSided])?;
        let side = match self.kind {
            Kind::Action => self.side.expect("validated"),
            _ => self.case.expect("validated").action_side(),
        };
        ActionStructure::from_tensor(side, &self.tensor("action")?).map_err(|e| DocError::Mismatch(e.to_string()))
    }

    pub fn coaction<F: Field>(&self) -> Result<CoactionStructure<F>, DocError> {
        self.expect_kind(&[Kind::Coaction, Kind::TwoSided, Kind::ComoduleAlgebra])?;
        let side = self.coaction_side().expect("validated");
        CoactionStructure::from_tensor(side, &self.tensor("coaction")?).map_err(|e| DocError::Mismatch(e.to_string()))
    }

    fn check_over<F: Field>(&self, h: &FinHopfAlgebra<F>) -> Result<(), DocError> {
        if self.hopf_dim != Some(h.dim()) {
            return Err(DocError::Mismatch(format!(
                "{} document is over a Hopf algebra of dim {}, got dim {}",
                self.kind,
                self.hopf_dim.unwrap_or(0),
                h.dim()
            )));
        }
        Ok(())
    }

    /// The structure over `h`, with action and coaction left unverified.
    pub fn two_sided<F: Field>(&self, h: &FinHopfAlgebra<F>) -> Result<TwoSidedStructure<F>, DocError> {
        self.expect_kind(&[Kind::TwoSided])?;
        self.check_over(h)?;
        TwoSidedStructure::new_unchecked(h.clone(), self.action()?, self.coaction()?)
            .map_err(|e| DocError::Mismatch(e.to_string()))
    }

    /// Unverified: the caller decides how to report failures.
    pub fn comodule_algebra<F: Field>(&self, h: &FinHopfAlgebra<F>) -> Result<ComoduleAlgebra<F>, DocError> {
        self.expect_kind(&[Kind::ComoduleAlgebra])?;
        self.check_over(h)?;
        Ok(ComoduleAlgebra { algebra: self.algebra()?, hopf: h.clone(), coaction: self.coaction()? })
    }

    pub fn from_hopf<F: Field>(h: &FinHopfAlgebra<F>) -> Self {
        let mut d = Document::new(Kind::Hopf, F::spec(), h.dim());
        d.basis_names = Some(h.basis_names().to_vec());
        let s = h.structure();
        d.set_tensor("mult", &s.mult);
        d.set_tensor("unit", &s.unit);
        d.set_tensor("comult", &s.comult);
        d.set_tensor("counit", &s.counit);
        d.set_tensor("antipode", &s.antipode);
        d
    }

    pub fn from_algebra<F: Field>(a: &FinAlgebra<F>, names: Option<Vec<String>>) -> Self {
        let mut d = Document::new(Kind::Algebra, F::spec(), a.dim());
        d.basis_names = names;
        d.set_tensor("mult", &a.mult_tensor());
        d.set_tensor("unit", &a.unit_tensor());
        d
    }

    pub fn from_two_sided<F: Field>(m: &TwoSidedStructure<F>) -> Self {
        let mut d = Document::new(Kind::TwoSided, F::spec(), m.dim());
        d.hopf_dim = Some(m.hopf.dim());
        d.case = Some(m.case());
        d.set_tensor("action", &m.action.to_tensor());
        d.set_tensor("coaction", &m.coaction.to_tensor());
        d
    }

    pub fn from_action<F: Field>(a: &ActionStructure<F>) -> Self {
        let mut d = Document::new(Kind::Action, F::spec(), a.dim());
        d.algebra_dim = Some(a.alg_dim());
        d.side = Some(a.side());
        d.set_tensor("action", &a.to_tensor());
        d
    }

    pub fn from_coaction<F: Field>(c: &CoactionStructure<F>) -> Self {
        let mut d = Document::new(Kind::Coaction, F::spec(), c.dim());
        d.hopf_dim = Some(c.hopf_dim());
        d.side = Some(c.side());
        d.set_tensor("coaction", &c.to_tensor());
        d
    }

    pub fn from_comodule_algebra<F: Field>(p: &ComoduleAlgebra<F>) -> Self {
        let mut d = Document::new(Kind::ComoduleAlgebra, F::spec(), p.dim());
        d.hopf_dim = Some(p.hopf.dim());
        d.set_tensor("mult", &p.algebra.mult_tensor());
        d.set_tensor("unit", &p.algebra.unit_tensor());
        d.set_tensor("coaction", &p.coaction.to_tensor());
        d
    }
}

fn entry_json(e: &Entry) -> Value {
    let mut m = Map::new();
    for (k, i) in INDEX_KEYS.iter().zip(&e.index) {
        m.insert((*k).into(), json!(i));
    }
    m.insert("c".into(), e.c.to_json());
    Value::Object(m)
}

/// Parses and validates. All schema violations are collected, not just the
/// first; dimensions above `max_dim` are violations.
pub fn parse_document(text: &str, max_dim: usize) -> Result<Document, DocError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut v = Validator { out: Vec::new(), max_dim };
    match v.document(&value) {
        Some(doc) if v.out.is_empty() => Ok(doc),
        _ => Err(DocError::Schema(v.out)),
    }
}

struct Validator {
    out: Vec<Violation>,
    max_dim: usize,
}

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

impl Validator {
    fn violation(&mut self, pointer: impl Into<String>, message: impl Into<String>) {
        self.out.push(Violation { pointer: pointer.into(), message: message.into() });
    }

    fn document(&mut self, value: &Value) -> Option<Document> {
        let Some(obj) = value.as_object() else {
            self.violation("", "expected a JSON object");
            return None;
        };
        let kind = match obj.get("kind") {
            None => {
                self.violation("/kind", "missing");
                None
            }
            Some(Value::String(s)) => {
                let k = Kind::from_name(s);
                if k.is_none() {
                    let all: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
                    self.violation("/kind", format!("unknown kind {s:?}, expected one of {}", all.join(", ")));
                }
                k
            }
            Some(_) => {
                self.violation("/kind", "expected a string");
                None
            }
        };
        let field = match obj.get("field") {
            None => {
                self.violation("/field", "missing");
                None
            }
            Some(Value::String(s)) => match parse_field(s) {
                Ok(f) => Some(f),
                Err(msg) => {
                    self.violation("/field", msg);
                    None
                }
            },
            Some(_) => {
                self.violation("/field", "expected a string such as \"Q\" or \"F7\"");
                None
            }
        };
        let dim = self.dimension(obj, "dim", true);
        let kind = kind?;

        let mut allowed = vec!["kind", "field", "dim", "basis_names", "tensors"];
        let mut doc = Document::new(kind, field.unwrap_or(FieldSpec::Rationals), dim.unwrap_or(0));
        let mut shapes_known = field.is_some() && dim.is_some();
        match kind {
            Kind::TwoSided | Kind::Coaction | Kind::ComoduleAlgebra => {
                allowed.push("hopf_dim");
                doc.hopf_dim = self.dimension(obj, "hopf_dim", true);
                shapes_known &= doc.hopf_dim.is_some();
            }
            Kind::Action => {
                allowed.push("algebra_dim");
                doc.algebra_dim = self.dimension(obj, "algebra_dim", true);
                shapes_known &= doc.algebra_dim.is_some();
            }
            Kind::Hopf | Kind::Algebra => {}
        }
        match kind {
            Kind::TwoSided => {
                allowed.push("case");
                doc.case = self.case(obj);
                shapes_known &= doc.case.is_some();
            }
            Kind::Action | Kind::Coaction => {
                allowed.push("side");
                doc.side = self.side(obj);
                shapes_known &= doc.side.is_some();
            }
            _ => {}
        }
        for key in obj.keys() {
            if !allowed.contains(&key.as_str()) {
                self.violation(format!("/{}", escape(key)), format!("unexpected key for a {kind} document"));
            }
        }
        if let Some(names) = obj.get("basis_names") {
            doc.basis_names = self.names(names, dim);
        }
        match obj.get("tensors") {
            None => self.violation("/tensors", "missing"),
            Some(Value::Object(t)) => {
                if shapes_known {
                    self.tensors(&mut doc, t);
                }
            }
            Some(_) => self.violation("/tensors", "expected an object of entry lists"),
        }
        Some(doc)
    }

    fn dimension(&mut self, obj: &Map<String, Value>, key: &str, required: bool) -> Option<usize> {
        let ptr = format!("/{key}");
        match obj.get(key) {
            None => {
                if required {
                    self.violation(ptr, "missing");
                }
                None
            }
            Some(v) => match v.as_u64() {
                Some(0) => {
                    self.violation(ptr, "dimension must be positive");
                    None
                }
                Some(d) if d as usize > self.max_dim => {
                    self.violation(ptr, format!("dimension {d} exceeds the limit {} (HAYD_MAX_DIM)", self.max_dim));
                    None
                }
                Some(d) => Some(d as usize),
                None => {
                    self.violation(ptr, "expected a positive integer");
                    None
                }
            },
        }
    }

    fn case(&mut self, obj: &Map<String, Value>) -> Option<Case> {
        match obj.get("case") {
            None => {
                self.violation("/case", "missing");
                None
            }
            Some(Value::String(s)) => match s.parse::<Case>() {
                Ok(c) => Some(c),
                Err(_) => {
                    self.violation("/case", format!("expected ll, lr, rl or rr, got {s:?}"));
                    None
                }
            },
            Some(_) => {
                self.violation("/case", "expected a string");
                None
            }
        }
    }

    fn side(&mut self, obj: &Map<String, Value>) -> Option<Side> {
        match obj.get("side").and_then(Value::as_str) {
            Some("left") => Some(Side::Left),
            Some("right") => Some(Side::Right),
            None if !obj.contains_key("side") => {
                self.violation("/side", "missing");
                None
            }
            _ => {
                self.violation("/side", "expected \"left\" or \"right\"");
                None
            }
        }
    }

    fn names(&mut self, v: &Value, dim: Option<usize>) -> Option<Vec<String>> {
        let Some(arr) = v.as_array() else {
            self.violation("/basis_names", "expected an array of strings");
            return None;
        };
        let mut names = Vec::with_capacity(arr.len());
        for (i, n) in arr.iter().enumerate() {
            match n.as_str() {
                Some(s) => names.push(s.to_string()),
                None => self.violation(format!("/basis_names/{i}"), "expected a string"),
            }
        }
        if let Some(d) = dim {
            if arr.len() != d {
                self.violation("/basis_names", format!("{} names for dimension {d}", arr.len()));
            }
        }
        Some(names)
    }

    fn tensors(&mut self, doc: &mut Document, t: &Map<String, Value>) {
        let expected = doc.expected_tensors();
        for key in t.keys() {
            if !expected.iter().any(|(n, _)| n == key) {
                self.violation(format!("/tensors/{}", escape(key)), format!("unexpected tensor for a {} document", doc.kind));
            }
        }
        for (name, shape) in expected {
            let ptr = format!("/tensors/{name}");
            let Some(v) = t.get(name) else {
                self.violation(ptr, "missing");
                continue;
            };
            let Some(arr) = v.as_array() else {
                self.violation(ptr, "expected an array of entries");
                continue;
            };
            let mut entries: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (pos, e) in arr.iter().enumerate() {
                let eptr = format!("{ptr}/{pos}");
                if let Some((index, c)) = self.entry(&eptr, e, &shape, doc.field) {
                    match entries.entry(index) {
                        std::collections::btree_map::Entry::Occupied(o) => {
                            self.violation(eptr, format!("duplicate entry for index {:?}", o.key()))
                        }
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(c);
                        }
                    }
                }
            }
            let list = entries
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(index, c)| Entry { index, c })
                .collect();
            doc.tensors.insert(name.to_string(), list);
        }
    }

    fn entry(&mut self, ptr: &str, e: &Value, shape: &[usize], field: FieldSpec) -> Option<(Vec<usize>, Scalar)> {
        let Some(obj) = e.as_object() else {
            self.violation(ptr, "expected an entry object");
            return None;
        };
        let keys = &INDEX_KEYS[..shape.len()];
        for key in obj.keys() {
            if key != "c" && !keys.contains(&key.as_str()) {
                self.violation(format!("{ptr}/{}", escape(key)), format!("unexpected key for a rank {} tensor", shape.len()));
            }
        }
        let mut index = Vec::with_capacity(shape.len());
        let mut ok = true;
        for (key, &bound) in keys.iter().zip(shape) {
            match obj.get(*key).map(Value::as_u64) {
                None => {
                    self.violation(format!("{ptr}/{key}"), "missing");
                    ok = false;
                }
                Some(Some(i)) if (i as usize) < bound => index.push(i as usize),
                Some(Some(i)) => {
                    self.violation(format!("{ptr}/{key}"), format!("index {i} out of range 0..{bound}"));
                    ok = false;
                }
                Some(None) => {
                    self.violation(format!("{ptr}/{key}"), "expected a non-negative integer");
                    ok = false;
                }
            }
        }
        let c = match obj.get("c") {
            None => {
                self.violation(format!("{ptr}/c"), "missing");
                None
            }
            Some(v) => match scalar(v, field) {
                Ok(c) => Some(c),
                Err(msg) => {
                    self.violation(format!("{ptr}/c"), msg);
                    None
                }
            },
        };
        match (ok, c) {
            (true, Some(c)) => Some((index, c)),
            _ => None,
        }
    }
}

fn scalar(v: &Value, field: FieldSpec) -> Result<Scalar, String> {
    match field {
        FieldSpec::PrimeField(p) => {
            let n = match v {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .or_else(|| n.as_u64().map(BigInt::from))
                    .ok_or_else(|| format!("expected an integer over F{p}"))?,
                _ => return Err(format!("expected an integer over F{p}")),
            };
            let p = BigInt::from(p);
            let mut r = n % &p;
            if r.is_negative() {
                r += &p;
            }
            Ok(Scalar::Residue(r.to_u64().expect("residue fits")))
        }
        FieldSpec::Rationals => {
            let q = match v {
                Value::String(s) => <Q as Field>::parse(s).map_err(|_| format!("cannot parse {s:?} as a rational"))?,
                Value::Number(n) => {
                    let i = n.as_i64().ok_or("rationals are written as integers or \"num/den\" strings")?;
                    Q::from_integer(BigInt::from(i))
                }
                _ => return Err("expected an integer or a \"num/den\" string".into()),
            };
            Ok(Scalar::Rational(q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hayd_core::hopf::{group_algebra, sweedler, Group};
    use hayd_core::F7;

    fn kc2() -> Document {
        Document::from_hopf(&group_algebra::<F7>(&Group::cyclic(2)))
    }

    fn violations(text: &str) -> Vec<Violation> {
        match parse_document(text, 64) {
            Err(DocError::Schema(v)) => v,
            other => panic!("expected schema violations, got {other:?}"),
        }
    }

    #[test]
    fn exported_kc2_round_trips() {
        let d = kc2();
        let text = d.to_pretty();
        let back = parse_document(&text, 64).unwrap();
        assert_eq!(back, d);
        let h = FinHopfAlgebra::<F7>::new(back.hopf_structure().unwrap()).unwrap();
        assert!(h.structure_eq(&group_algebra(&Group::cyclic(2))));
    }

    #[test]
    fn rationals_are_strings() {
        let d = Document::from_hopf(&sweedler::<Q>());
        let v = d.to_json();
        let anti = v["tensors"]["antipode"].as_array().unwrap();
        assert!(anti.iter().all(|e| e["c"].is_string()));
        assert_eq!(parse_document(&d.to_pretty(), 64).unwrap(), d);
    }

    #[test]
    fn index_out_of_range_points_at_the_entry() {
        let mut v = kc2().to_json();
        v["tensors"]["mult"][3]["j"] = json!(2);
        let errs = violations(&v.to_string());
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].pointer, "/tensors/mult/3/j");
    }

    #[test]
    fn non_prime_characteristic() {
        let mut v = kc2().to_json();
        v["field"] = json!("F6");
        let errs = violations(&v.to_string());
        assert_eq!(errs[0].pointer, "/field");
        assert!(errs[0].message.contains("not prime"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_document("{\n  \"kind\": \"hopf\",\n  oops\n}", 64) {
            Err(DocError::Syntax { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dimension_cap() {
        match parse_document(&kc2().to_pretty(), 1) {
            Err(DocError::Schema(v)) => assert_eq!(v[0].pointer, "/dim"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn collects_several_violations() {
        let mut v = kc2().to_json();
        v["tensors"]["unit"] = json!([{"i": 0, "c": "x"}]);
        v["tensors"]["counit"] = json!([{"i": 0, "c": 1}, {"i": 0, "c": 1}]);
        v["extra"] = json!(1);
        let errs = violations(&v.to_string());
        let ptrs: Vec<&str> = errs.iter().map(|e| e.pointer.as_str()).collect();
        assert_eq!(ptrs, ["/extra", "/tensors/unit/0/c", "/tensors/counit/1"]);
    }

    #[test]
    fn zero_and_negative_residues_are_normalised() {
        let mut v = kc2().to_json();
        v["tensors"]["antipode"] = json!([{"i": 0, "j": 0, "c": 8}, {"i": 1, "j": 1, "c": -6}, {"i": 0, "j": 1, "c": 0}]);
        let d = parse_document(&v.to_string(), 64).unwrap();
        assert_eq!(d, kc2());
    }
}
