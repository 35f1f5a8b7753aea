#![allow(dead_code)]

use std::sync::Arc;

use liederiv::lie::{LieAlgebra, LieElement};
use liederiv::presets::low_dimensional;
use liederiv::scalar::{Monomial, Polynomial, Rational, RationalFunction, Vars};
use liederiv::vector_field::VectorField;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, prop::sample::select(vec![1i64, 1, 1, 2, 3]))
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn small_int() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(q)
}

pub fn polynomial(vars: Vars, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), rational()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            vars.clone(),
            terms.into_iter().map(|(e, c)| (Monomial::new(e), c)),
        )
    })
}

pub fn poly_rf(vars: Vars) -> impl Strategy<Value = RationalFunction> {
    polynomial(vars, 3, 2).prop_map(RationalFunction::from_polynomial)
}

/// Numerator over a nonzero denominator of small degree.
pub fn rational_function(vars: Vars) -> impl Strategy<Value = RationalFunction> {
    (
        polynomial(vars.clone(), 3, 2),
        polynomial(vars, 2, 1).prop_filter("nonzero", |p| !p.is_zero()),
    )
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn vector_field(vars: Vars, dirs: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(rational_function(vars.clone()), dirs)
        .prop_map(move |c| VectorField::new(vars.clone(), dirs, c).unwrap())
}

pub fn poly_vector_field(vars: Vars, dirs: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(poly_rf(vars.clone()), dirs)
        .prop_map(move |c| VectorField::new(vars.clone(), dirs, c).unwrap())
}

pub fn element(alg: Arc<LieAlgebra>) -> impl Strategy<Value = LieElement<Rational>> {
    prop::collection::vec(small_int(), alg.dim())
        .prop_map(move |c| LieElement::new(alg.clone(), (), c).unwrap())
}

pub fn tensor(
    alg: Arc<LieAlgebra>,
    vars: Vars,
) -> impl Strategy<Value = LieElement<RationalFunction>> {
    prop::collection::vec(poly_rf(vars.clone()), alg.dim())
        .prop_map(move |c| LieElement::new(alg.clone(), vars.clone(), c).unwrap())
}

/// Naive rank over ℚ by elimination on a dense copy; independent of the
/// library's row reduction.
pub fn brute_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..cols {
                    let d = &f * &m[rank][k];
                    m[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `[u, v]` straight from the structure constants.
pub fn brute_bracket(alg: &LieAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let m = alg.dim();
    let mut out = vec![Rational::zero(); m];
    for i in 0..m {
        for j in 0..m {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            for (s, c) in alg.structure(i, j) {
                out[s] += &u[i] * &v[j] * c;
            }
        }
    }
    out
}

/// Every pairwise bracket of the rows lies in their span.
pub fn brute_closed(alg: &LieAlgebra, rows: &[Vec<Rational>]) -> bool {
    let r = brute_rank(rows);
    for p in 0..rows.len() {
        for q in p + 1..rows.len() {
            let mut ext = rows.to_vec();
            ext.push(brute_bracket(alg, &rows[p], &rows[q]));
            if brute_rank(&ext) != r {
                return false;
            }
        }
    }
    true
}

pub fn identity(m: usize) -> Vec<Vec<Rational>> {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// A catalogue algebra of dimension ≤ 4 in a random integer basis.
pub fn random_algebra() -> impl Strategy<Value = Arc<LieAlgebra>> {
    let catalogue = low_dimensional();
    (0..catalogue.len(), prop::collection::vec(-2i64..=2, 16)).prop_map(move |(i, entries)| {
        let alg = &catalogue[i].1;
        let m = alg.dim();
        let mut p: Vec<Vec<Rational>> = (0..m)
            .map(|r| (0..m).map(|c| q(entries[r * 4 + c])).collect())
            .collect();
        if brute_rank(&p) < m {
            p = identity(m);
        }
        let names = (1..=m).map(|i| format!("b{i}")).collect();
        Arc::new(alg.change_basis(names, &p).unwrap())
    })
}
