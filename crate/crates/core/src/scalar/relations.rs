use std::collections::BTreeMap;

use num_traits::Zero;

use super::{lcm, Monomial, Polynomial, Rational, RationalFunction};
use crate::lie::linalg::nullspace;

/// Basis of `{a ∈ ℚ^n : Σ_i a_i vectors[i] = 0}` for rational-function
/// vectors of equal length.
///
/// Each slot is cleared of denominators and every monomial coefficient of
/// the resulting polynomial identity gives one ℚ-linear equation.
pub fn rational_relations(vectors: &[Vec<RationalFunction>]) -> Vec<Vec<Rational>> {
    let n = vectors.len();
    if n == 0 {
        return Vec::new();
    }
    let slots = vectors[0].len();
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    for d in 0..slots {
        let entries: Vec<&RationalFunction> = vectors.iter().map(|v| &v[d]).collect();
        let Some(first) = entries.iter().find(|f| !f.is_zero()) else {
            continue;
        };
        let mut common = first.denom().clone();
        for f in &entries {
            if !f.is_zero() && f.denom() != &common {
                common = lcm(&common, f.denom());
            }
        }
        let mut rows: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (i, f) in entries.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let mult = common.div_exact(f.denom()).expect("lcm is a multiple");
            let p: Polynomial = f.numer() * &mult;
            for (m, c) in p.terms() {
                rows.entry(m.clone())
                    .or_insert_with(|| vec![Rational::zero(); n])[i] += c;
            }
        }
        eqs.extend(rows.into_values());
    }
    nullspace(&eqs, n, &())
}
