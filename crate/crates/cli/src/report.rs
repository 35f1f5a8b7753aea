use std::fmt::Display;

use liederiv::embedding::{EmbeddingResult, HomViolation, TildeReport};
use liederiv::lie::{latex_basis_name, JacobiViolation, LieAlgebra, Subspace};
use liederiv::scalar::{Rational, Ring};
use liederiv::variety::FamilyReport;
use serde_json::{json, Map, Value};

/// `{name: coefficient}` for the nonzero coordinates.
pub fn coords<S: Ring + Display>(alg: &LieAlgebra, coeffs: &[S]) -> Value {
    let mut map = Map::new();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            map.insert(alg.name(i).to_string(), Value::String(c.to_string()));
        }
    }
    Value::Object(map)
}

pub fn subspace_basis<S: liederiv::scalar::Field + Display>(space: &Subspace<S>) -> Value {
    space
        .rows()
        .iter()
        .map(|r| coords(space.algebra(), r))
        .collect()
}

pub fn jacobi(alg: &LieAlgebra, violations: &[JacobiViolation]) -> Value {
    let list: Vec<Value> = violations
        .iter()
        .map(|v| {
            let mut residual = vec![Rational::from_integer(0.into()); alg.dim()];
            for (s, c) in &v.residual {
                residual[*s] = c.clone();
            }
            json!({
                "triple": [alg.name(v.i), alg.name(v.j), alg.name(v.t)],
                "residual": coords(alg, &residual),
            })
        })
        .collect();
    json!({"ok": violations.is_empty(), "violations": list})
}

pub fn homomorphism(alg: &LieAlgebra, violations: &[HomViolation]) -> Value {
    let list: Vec<Value> = violations
        .iter()
        .map(
            |v| json!({"pair": [alg.name(v.i), alg.name(v.j)], "residual": v.residual.to_string()}),
        )
        .collect();
    json!({"ok": violations.is_empty(), "violations": list})
}

pub fn tilde(report: &TildeReport) -> Value {
    json!({
        "codimension": report.codimension,
        "basis": subspace_basis(&report.space),
        "constant_intersection_dim": report.constant_intersection.dim(),
        "constant_intersection": subspace_basis(&report.constant_intersection),
        "injective": report.constant_intersection.is_zero(),
    })
}

pub fn family(report: &FamilyReport) -> Value {
    json!({
        "closed_generically": report.closed_generically,
        "generic_rank": report.generic_rank,
        "constant_intersection_dim": report.constant_intersection.dim(),
        "constant_intersection": subspace_basis(&report.constant_intersection),
        "embedding_criterion_holds": report.embedding_criterion_holds,
    })
}

fn latex_name(alg: &LieAlgebra, i: usize) -> String {
    latex_basis_name(alg.name(i))
}

fn nonzero_latex(s: String) -> String {
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// A standalone `align*` report: `w`, the images `e^{ad w}`, and `φ`.
pub fn result_latex(r: &EmbeddingResult) -> String {
    let alg = &r.algebra;
    let mut out = String::new();
    out.push_str("% embedding into derivations of Q(");
    out.push_str(&r.vars.names().join(", "));
    out.push_str(")\n");
    if let Some(n) = r.jet {
        out.push_str(&format!("% jet mode, truncated modulo J^{}\n", n + 1));
    }
    out.push_str("\\begin{align*}\n");
    out.push_str(&format!(
        "w &= {}\\\\\n",
        nonzero_latex(r.w.to_latex_tensor())
    ));
    let k = r.dirs;
    for (i, im) in r.images.iter().enumerate() {
        let src = if i < k {
            format!("\\partial_{{x_{}}}", i + 1)
        } else {
            "\\bar b_{".to_string() + &(i + 1).to_string() + "}"
        };
        out.push_str(&format!(
            "e^{{\\operatorname{{ad}} w}} {src} &= {}\\\\\n",
            nonzero_latex(im.to_latex())
        ));
    }
    for (j, f) in r.phi.iter().enumerate() {
        let sep = if j + 1 == r.phi.len() { "\n" } else { "\\\\\n" };
        out.push_str(&format!(
            "\\varphi({}) &= {}{sep}",
            latex_name(alg, j),
            nonzero_latex(f.to_latex())
        ));
    }
    out.push_str("\\end{align*}\n");
    out
}

pub fn tilde_latex(report: &TildeReport) -> String {
    let mut out = format!("% codimension {}\n\\begin{{align*}}\n", report.codimension);
    let basis = report.space.basis();
    for (i, b) in basis.iter().enumerate() {
        let sep = if i + 1 == basis.len() { "\n" } else { "\\\\\n" };
        out.push_str(&format!(
            "\\tilde b_{{{}}} &= {}{sep}",
            i + 1,
            nonzero_latex(b.to_latex())
        ));
    }
    out.push_str("\\end{align*}\n");
    out
}

pub fn homomorphism_latex(alg: &LieAlgebra, violations: &[HomViolation]) -> String {
    if violations.is_empty() {
        return "% homomorphism: all brackets preserved\n".into();
    }
    let mut out = String::from("\\begin{align*}\n");
    for (n, v) in violations.iter().enumerate() {
        let sep = if n + 1 == violations.len() {
            "\n"
        } else {
            "\\\\\n"
        };
        out.push_str(&format!(
            "[\\varphi({a}), \\varphi({b})] - \\varphi([{a}, {b}]) &= {}{sep}",
            v.residual.to_latex(),
            a = latex_name(alg, v.i),
            b = latex_name(alg, v.j)
        ));
    }
    out.push_str("\\end{align*}\n");
    out
}
