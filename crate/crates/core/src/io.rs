//! JSON save/load for algebras, problems, results, candidate matrices and
//! variety systems. All coefficients are exact strings.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::embedding::{EmbeddingProblem, EmbeddingResult};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieElement};
use crate::presets::PresetDescriptor;
use crate::scalar::{
    format_rational, parse_polynomial, parse_rational, parse_rational_function, Rational,
    RationalFunction, Vars,
};
use crate::semidirect::{DElement, TensorElement};
use crate::variety::{CandidateMatrix, VarietySystem};
use crate::vector_field::VectorField;

pub trait JsonIo: Sized {
    fn to_json(&self) -> Result<Value>;
    fn from_json(v: &Value) -> Result<Self>;
}

pub fn to_string<T: JsonIo>(x: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(&x.to_json()?)?)
}

pub fn from_str<T: JsonIo>(s: &str) -> Result<T> {
    T::from_json(&serde_json::from_str(s)?)
}

pub fn save<T: JsonIo>(x: &T, path: &Path) -> Result<()> {
    let mut s = to_string(x)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

pub fn load<T: JsonIo>(path: &Path) -> Result<T> {
    from_str(&std::fs::read_to_string(path)?)
}

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<BracketDoc>,
}

#[derive(Serialize, Deserialize)]
struct BracketDoc {
    i: usize,
    j: usize,
    terms: Vec<(usize, String)>,
}

impl AlgebraDoc {
    fn of(alg: &LieAlgebra) -> Self {
        let brackets = alg
            .brackets()
            .map(|(&(i, j), terms)| BracketDoc {
                i: i + 1,
                j: j + 1,
                terms: terms
                    .iter()
                    .map(|(s, c)| (s + 1, format_rational(c)))
                    .collect(),
            })
            .collect();
        AlgebraDoc {
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            brackets,
        }
    }

    fn build(self, check_jacobi: bool) -> Result<LieAlgebra> {
        if self.dim != self.basis.len() {
            return Err(Error::InvalidAlgebra(format!(
                "dim is {} but {} basis names given",
                self.dim,
                self.basis.len()
            )));
        }
        let one_based = |i: usize| {
            i.checked_sub(1).filter(|&i| i < self.dim).ok_or_else(|| {
                Error::InvalidAlgebra(format!("bracket index {i} out of range 1..={}", self.dim))
            })
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let terms = b
                .terms
                .iter()
                .map(|(s, c)| Ok((one_based(*s)?, parse_rational(c)?)))
                .collect::<Result<Vec<_>>>()?;
            brackets.push(((one_based(b.i)?, one_based(b.j)?), terms));
        }
        if check_jacobi {
            LieAlgebra::new(self.basis, brackets)
        } else {
            LieAlgebra::new_unchecked(self.basis, brackets)
        }
    }
}

fn parse_doc<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    Ok(T::deserialize(v)?)
}

/// Reads an algebra without checking the Jacobi identity, so that broken
/// structure constants can still be diagnosed.
pub fn algebra_from_json_unchecked(v: &Value) -> Result<LieAlgebra> {
    parse_doc::<AlgebraDoc>(v)?.build(false)
}

impl JsonIo for LieAlgebra {
    fn to_json(&self) -> Result<Value> {
        Ok(serde_json::to_value(AlgebraDoc::of(self))?)
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse_doc::<AlgebraDoc>(v)?.build(true)
    }
}

/// An inline algebra or a preset name such as `"sl_3"`.
fn algebra_ref(v: &Value) -> Result<Arc<LieAlgebra>> {
    match v {
        Value::String(name) => PresetDescriptor::parse(name, None)?.algebra(),
        _ => Ok(Arc::new(LieAlgebra::from_json(v)?)),
    }
}

fn basis_index(alg: &LieAlgebra, name: &str) -> Result<usize> {
    alg.index_of(name)
        .ok_or_else(|| Error::Parse(format!("`{name}` is not a basis element")))
}

fn names_of(vars: &Vars) -> Vec<String> {
    vars.names().to_vec()
}

fn rf_strings(rows: &[Vec<RationalFunction>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|f| f.to_string()).collect())
        .collect()
}

fn parse_rf_rows(rows: &[Vec<String>], vars: &Vars) -> Result<Vec<Vec<RationalFunction>>> {
    rows.iter()
        .map(|r| r.iter().map(|s| parse_rational_function(s, vars)).collect())
        .collect()
}

#[derive(Serialize, Deserialize)]
struct ProblemDoc {
    algebra: Value,
    #[serde(default)]
    params: Vec<String>,
    #[serde(rename = "L1")]
    l1: Vec<Vec<String>>,
    complement: Vec<String>,
}

impl JsonIo for EmbeddingProblem {
    fn to_json(&self) -> Result<Value> {
        let alg = self.algebra();
        let doc = ProblemDoc {
            algebra: alg.to_json()?,
            params: names_of(self.params()),
            l1: rf_strings(self.l1_rows()),
            complement: self
                .complement()
                .iter()
                .map(|&c| alg.name(c).to_string())
                .collect(),
        };
        Ok(serde_json::to_value(doc)?)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let doc: ProblemDoc = parse_doc(v)?;
        let alg = algebra_ref(&doc.algebra)?;
        let params = Vars::new(doc.params);
        let l1 = parse_rf_rows(&doc.l1, &params)?;
        let complement = doc
            .complement
            .iter()
            .map(|n| basis_index(&alg, n))
            .collect::<Result<_>>()?;
        EmbeddingProblem::with_params(alg, params, l1, complement)
    }
}

fn tensor_to_map(t: &TensorElement) -> Value {
    let mut map = Map::new();
    for (i, c) in t.coeffs().iter().enumerate() {
        if !c.is_zero() {
            map.insert(
                t.algebra().name(i).to_string(),
                Value::String(c.to_string()),
            );
        }
    }
    Value::Object(map)
}

fn tensor_from_map(v: &Value, alg: &Arc<LieAlgebra>, vars: &Vars) -> Result<TensorElement> {
    let map: Map<String, Value> = parse_doc(v)?;
    let mut coeffs = vec![RationalFunction::zero(vars.clone()); alg.dim()];
    for (name, c) in &map {
        let s = c
            .as_str()
            .ok_or_else(|| Error::Parse(format!("coefficient of `{name}` must be a string")))?;
        coeffs[basis_index(alg, name)?] = parse_rational_function(s, vars)?;
    }
    LieElement::new(alg.clone(), vars.clone(), coeffs)
}

#[derive(Serialize, Deserialize)]
struct ImageDoc {
    vf: String,
    tensor: Value,
}

#[derive(Serialize, Deserialize)]
struct ResultDoc {
    algebra: Value,
    variables: Vec<String>,
    directions: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    jet: Option<u32>,
    phi: Map<String, Value>,
    w: Value,
    images: Vec<ImageDoc>,
    #[serde(rename = "B")]
    b: Vec<Vec<String>>,
    // derived on save, ignored on load
    #[serde(default)]
    rank: Option<usize>,
    #[serde(default)]
    kernel_dim: Option<usize>,
    #[serde(default)]
    tilde_codim: Option<usize>,
}

impl JsonIo for EmbeddingResult {
    fn to_json(&self) -> Result<Value> {
        let summary = self.summary()?;
        let phi = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, f)| {
                (
                    self.algebra.name(i).to_string(),
                    Value::String(f.to_string()),
                )
            })
            .collect();
        let images = self
            .images
            .iter()
            .map(|d| ImageDoc {
                vf: d.vf().to_string(),
                tensor: tensor_to_map(d.tensor()),
            })
            .collect();
        let doc = ResultDoc {
            algebra: self.algebra.to_json()?,
            variables: names_of(&self.vars),
            directions: self.dirs,
            jet: self.jet,
            phi,
            w: tensor_to_map(&self.w),
            images,
            b: rf_strings(&self.b),
            rank: Some(summary.rank),
            kernel_dim: Some(summary.kernel_dim),
            tilde_codim: Some(summary.tilde_codim),
        };
        Ok(serde_json::to_value(doc)?)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let doc: ResultDoc = parse_doc(v)?;
        let algebra = algebra_ref(&doc.algebra)?;
        let vars = Vars::new(doc.variables);
        let dirs = doc.directions;
        if dirs > vars.len() {
            return Err(Error::ShapeMismatch(format!(
                "{dirs} directions over {} variables",
                vars.len()
            )));
        }
        let mut phi = vec![None; algebra.dim()];
        for (name, f) in &doc.phi {
            let s = f
                .as_str()
                .ok_or_else(|| Error::Parse(format!("phi({name}) must be a string")))?;
            phi[basis_index(&algebra, name)?] = Some(VectorField::parse(s, &vars, dirs)?);
        }
        let phi = phi
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                f.ok_or_else(|| Error::Parse(format!("phi({}) is missing", algebra.name(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        let images = doc
            .images
            .iter()
            .map(|d| {
                DElement::new(
                    VectorField::parse(&d.vf, &vars, dirs)?,
                    tensor_from_map(&d.tensor, &algebra, &vars)?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EmbeddingResult {
            w: tensor_from_map(&doc.w, &algebra, &vars)?,
            b: parse_rf_rows(&doc.b, &vars)?,
            algebra,
            vars,
            dirs,
            phi,
            images,
            jet: doc.jet,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CandidateDoc {
    algebra: Value,
    k: usize,
    #[serde(default)]
    params: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl JsonIo for CandidateMatrix<RationalFunction> {
    fn to_json(&self) -> Result<Value> {
        let doc = CandidateDoc {
            algebra: self.algebra().to_json()?,
            k: self.k(),
            params: names_of(self.ctx()),
            rows: rf_strings(self.rows()),
        };
        Ok(serde_json::to_value(doc)?)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let doc: CandidateDoc = parse_doc(v)?;
        let params = Vars::new(doc.params);
        let rows = parse_rf_rows(&doc.rows, &params)?;
        CandidateMatrix::new(algebra_ref(&doc.algebra)?, doc.k, params, rows)
    }
}

impl JsonIo for CandidateMatrix<Rational> {
    fn to_json(&self) -> Result<Value> {
        let doc = CandidateDoc {
            algebra: self.algebra().to_json()?,
            k: self.k(),
            params: Vec::new(),
            rows: self
                .rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        };
        Ok(serde_json::to_value(doc)?)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let doc: CandidateDoc = parse_doc(v)?;
        if !doc.params.is_empty() {
            return Err(Error::Parse("a point must not declare parameters".into()));
        }
        let rows = doc
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        CandidateMatrix::new(algebra_ref(&doc.algebra)?, doc.k, (), rows)
    }
}

#[derive(Serialize, Deserialize)]
struct SystemDoc {
    unknowns: Vec<String>,
    closure_eqs: Vec<String>,
    degeneracy_eqs: Vec<String>,
}

impl JsonIo for VarietySystem {
    fn to_json(&self) -> Result<Value> {
        let strings = |ps: &[crate::scalar::Polynomial]| ps.iter().map(|p| p.to_string()).collect();
        let doc = SystemDoc {
            unknowns: names_of(&self.unknowns),
            closure_eqs: strings(&self.closure_eqs),
            degeneracy_eqs: strings(&self.degeneracy_eqs),
        };
        Ok(serde_json::to_value(doc)?)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let doc: SystemDoc = parse_doc(v)?;
        let unknowns = Vars::new(doc.unknowns);
        let parse = |ss: &[String]| {
            ss.iter()
                .map(|s| parse_polynomial(s, &unknowns))
                .collect::<Result<Vec<_>>>()
        };
        Ok(VarietySystem {
            closure_eqs: parse(&doc.closure_eqs)?,
            degeneracy_eqs: parse(&doc.degeneracy_eqs)?,
            unknowns,
        })
    }
}
