mod common;

use std::sync::Arc;

use common::*;
use liederiv::lie::LieAlgebra;
use liederiv::presets::{heisenberg_algebra, sl3_paper_algebra, sln_algebra};
use liederiv::scalar::{parse_rational_function, Rational, RationalFunction, Vars};
use liederiv::variety::{
    check_family, check_point, closure_equations, constant_vectors_in_rowspan, CandidateMatrix,
};
use proptest::prelude::*;

fn point_case() -> impl Strategy<Value = (Arc<LieAlgebra>, usize, Vec<Vec<Rational>>)> {
    random_algebra().prop_flat_map(|alg| {
        let m = alg.dim();
        (1..=m).prop_flat_map(move |k| {
            // sparse entries so that rank drops and closed subspaces both occur
            let entry = prop_oneof![3 => Just(q(0)), 2 => small_int()];
            (
                Just(alg.clone()),
                Just(k),
                prop::collection::vec(prop::collection::vec(entry, m), m - k),
            )
        })
    })
}

/// `rank [A; [v_p, v_q]] ≤ m − k` for every pair.
fn brute_in_mk(alg: &LieAlgebra, rows: &[Vec<Rational>]) -> bool {
    for p in 0..rows.len() {
        for r in p + 1..rows.len() {
            let mut ext = rows.to_vec();
            ext.push(brute_bracket(alg, &rows[p], &rows[r]));
            if brute_rank(&ext) > rows.len() {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn point_membership_matches_oracles((alg, k, rows) in point_case()) {
        let a = CandidateMatrix::new(alg.clone(), k, (), rows.clone()).unwrap();
        let rep = check_point(&alg, &a).unwrap();
        let full = brute_rank(&rows) == rows.len();
        prop_assert_eq!(rep.full_rank, full);
        prop_assert_eq!(rep.closed, brute_closed(&alg, &rows));
        prop_assert_eq!(rep.in_mk, brute_in_mk(&alg, &rows));
        prop_assert_eq!(rep.in_m0k, rep.in_mk && !full);
        if full {
            prop_assert_eq!(rep.in_mk, rep.closed);
        }
        let sys = closure_equations(&alg, k).unwrap();
        let flat: Vec<Rational> = rows.iter().flatten().cloned().collect();
        prop_assert_eq!(sys.closure_vanishes_at(&flat), rep.in_mk);
        prop_assert_eq!(sys.degeneracy_vanishes_at(&flat), !full);
    }
}

fn family(alg: &Arc<LieAlgebra>, k: usize, rows: &[&[&str]]) -> CandidateMatrix<RationalFunction> {
    let z = Vars::new(["z1"]);
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_rational_function(s, &z).unwrap())
                .collect()
        })
        .collect();
    CandidateMatrix::new(alg.clone(), k, z, rows).unwrap()
}

/// Specializes at integer points and compares with a closure locus worked
/// out by hand.
fn assert_closed_exactly_at(f: &CandidateMatrix<RationalFunction>, locus: &[i64]) {
    for t in -6..=6 {
        let a = f.specialize(&[q(t)]).unwrap();
        let rep = check_point(f.algebra(), &a).unwrap();
        assert!(rep.full_rank);
        assert_eq!(rep.closed, locus.contains(&t), "z1 = {t}");
    }
}

#[test]
fn conjugated_borel_is_closed_everywhere() {
    // exp(ad z e) applied to span{f, h} in sl_2, basis (e, f, h)
    let sl2 = Arc::new(sln_algebra(2).unwrap());
    let f = family(&sl2, 1, &[&["-z1^2", "1", "z1"], &["-2*z1", "0", "1"]]);
    let rep = check_family(&sl2, &f).unwrap();
    assert!(rep.closed_generically);
    assert_eq!(rep.generic_rank, 2);
    assert!(rep.constant_intersection.is_zero());
    assert!(rep.embedding_criterion_holds);
    assert_closed_exactly_at(&f, &(-6..=6).collect::<Vec<_>>());
}

#[test]
fn families_with_a_special_fibre() {
    // [e + z f, h] = -2e + 2z f lies in the span only at z = 0
    let sl2 = Arc::new(sln_algebra(2).unwrap());
    let f = family(&sl2, 1, &[&["1", "z1", "0"], &["0", "0", "1"]]);
    assert!(!check_family(&sl2, &f).unwrap().closed_generically);
    assert_closed_exactly_at(&f, &[0]);

    // [x, z y + z] = z1 z, in span{x, z1 y + z} only when z1^2 = 0
    let h = Arc::new(heisenberg_algebra());
    let f = family(&h, 1, &[&["1", "0", "0"], &["0", "z1", "1"]]);
    assert!(!check_family(&h, &f).unwrap().closed_generically);
    assert_closed_exactly_at(&f, &[0]);
}

#[test]
fn constant_family_never_qualifies() {
    let alg = Arc::new(sl3_paper_algebra());
    let n = |s: &str| alg.index_of(s).unwrap();
    let l1 = ["h_a", "h_b", "e_b", "e_-b", "e_-a", "e_-a-b"];
    let rows: Vec<Vec<String>> = l1
        .iter()
        .map(|b| {
            (0..8)
                .map(|j| if j == n(b) { "1".into() } else { "0".into() })
                .collect()
        })
        .collect();
    let refs: Vec<Vec<&str>> = rows
        .iter()
        .map(|r| r.iter().map(|s| s.as_str()).collect())
        .collect();
    let slices: Vec<&[&str]> = refs.iter().map(|r| r.as_slice()).collect();
    let f = family(&alg, 2, &slices);
    let rep = check_family(&alg, &f).unwrap();
    assert!(rep.closed_generically);
    assert_eq!(rep.generic_rank, 6);
    assert_eq!(rep.constant_intersection.dim(), 6);
    assert!(!rep.embedding_criterion_holds);
}

fn family_rows() -> impl Strategy<Value = (Vec<Vec<Rational>>, Vec<Vec<RationalFunction>>)> {
    let z = Vars::new(["z1"]);
    (
        prop::collection::vec(prop::collection::vec(small_int(), 4), 0..3),
        prop::collection::vec(prop::collection::vec(poly_rf(z), 4), 0..3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Constant vectors found in a `ℚ(z)` span lie in every specialization,
    /// and the constant rows that went in are found again.
    #[test]
    fn constant_vectors_survive_specialization((consts, moving) in family_rows()) {
        let z = Vars::new(["z1"]);
        let mut rows: Vec<Vec<RationalFunction>> =
            consts.iter().map(|r| r.iter().map(|c| RationalFunction::constant(z.clone(), c.clone())).collect()).collect();
        rows.extend(moving);
        prop_assume!(!rows.is_empty());
        let found = constant_vectors_in_rowspan(&rows, 4);
        prop_assert!(brute_rank(&found) >= brute_rank(&consts));
        for c in &consts {
            let mut ext = found.clone();
            ext.push(c.clone());
            prop_assert_eq!(brute_rank(&ext), brute_rank(&found));
        }
        for t in [-3i64, 2, 5] {
            let Some(at) = rows.iter().map(|r| r.iter().map(|f| f.eval(&[q(t)])).collect::<Option<Vec<_>>>()).collect::<Option<Vec<_>>>() else { continue };
            let base = brute_rank(&at);
            for v in &found {
                let mut ext = at.clone();
                ext.push(v.clone());
                prop_assert_eq!(brute_rank(&ext), base);
            }
        }
    }
}
