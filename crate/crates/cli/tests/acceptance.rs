//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `EXPECTED_FAILURES` are reported but do not fail the
//! process; any other failure exits with status 1.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use liederiv::embedding::{
    build_embedding, kernel, module_rank, tilde_subalgebra, verify_homomorphism, EmbedOptions,
    EmbeddingProblem, EmbeddingResult,
};
use liederiv::io::load;
use liederiv::lie::{validate_jacobi, LieAlgebra, LieElement};
use liederiv::presets::{
    heisenberg_algebra, low_dimensional, make_sl3_paper, make_sln, sl3_paper_algebra,
};
use liederiv::scalar::{
    parse_rational_function, Monomial, Polynomial, Rational, RationalFunction, Vars,
};
use liederiv::semidirect::{d_bracket, exp_ad, standard_w, DElement, JetContext, TensorElement};
use liederiv::variety::{
    check_family, check_point, closure_equations, constant_rows, CandidateMatrix,
};
use liederiv::vector_field::VectorField;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_TIME_LIMIT: Duration = Duration::from_secs(1);
const SLN_TIME_LIMIT: Duration = Duration::from_secs(60);
const AUTOMORPHISM_CASES: usize = 100;
const BRACKET_LAW_CHECKS: usize = 500;
const VARIETY_POINTS: usize = 200;

/// The published `φ` table disagrees in sign with its own `e^{ad w}` lines
/// for `e_-a` and `e_-a-b`; see the criterion-1 report.
const EXPECTED_FAILURES: [usize; 1] = [1];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn xs(k: usize) -> Vars {
    Vars::xs(k)
}

fn rf(s: &str, v: &Vars) -> RationalFunction {
    parse_rational_function(s, v).expect("literal parses")
}

fn vf(s: &str, k: usize) -> VectorField {
    VectorField::parse(s, &xs(k), k).expect("literal parses")
}

// ---------------------------------------------------------------------------
// brute-force oracles, independent of the library's linear algebra

fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
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
                for j in 0..cols {
                    let t = &f * &m[rank][j];
                    m[r][j] = &m[r][j] - &t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn naive_bracket(alg: &LieAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let m = alg.dim();
    let mut out = vec![Rational::zero(); m];
    for i in 0..m {
        for j in 0..m {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            for (s, c) in alg.structure(i, j) {
                out[s] = &out[s] + &(&(&u[i] * &v[j]) * &c);
            }
        }
    }
    out
}

fn naive_closed(alg: &LieAlgebra, rows: &[Vec<Rational>]) -> bool {
    let r = naive_rank(rows);
    (0..rows.len()).all(|p| {
        (p + 1..rows.len()).all(|s| {
            let mut ext = rows.to_vec();
            ext.push(naive_bracket(alg, &rows[p], &rows[s]));
            naive_rank(&ext) == r
        })
    })
}

fn naive_in_mk(alg: &LieAlgebra, rows: &[Vec<Rational>]) -> bool {
    (0..rows.len()).all(|p| {
        (p + 1..rows.len()).all(|s| {
            let mut ext = rows.to_vec();
            ext.push(naive_bracket(alg, &rows[p], &rows[s]));
            naive_rank(&ext) <= rows.len()
        })
    })
}

// ---------------------------------------------------------------------------
// random inputs

fn rand_q(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        rng.gen_range(-4i64..=4).into(),
        rng.gen_range(1i64..=3).into(),
    )
}

fn rand_poly(rng: &mut ChaCha8Rng, vars: &Vars, terms: usize, max_exp: u32) -> Polynomial {
    let n = vars.len();
    let t = rng.gen_range(0..=terms);
    let terms: Vec<_> = (0..t)
        .map(|_| {
            (
                Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()),
                rand_q(rng),
            )
        })
        .collect();
    Polynomial::from_terms(vars.clone(), terms)
}

fn rand_poly_rf(rng: &mut ChaCha8Rng, vars: &Vars) -> RationalFunction {
    RationalFunction::from_polynomial(rand_poly(rng, vars, 3, 2))
}

fn rand_rf(rng: &mut ChaCha8Rng, vars: &Vars) -> RationalFunction {
    let num = rand_poly(rng, vars, 3, 2);
    loop {
        let den = rand_poly(rng, vars, 2, 1);
        if !den.is_zero() {
            return RationalFunction::new(num, den).expect("nonzero denominator");
        }
    }
}

fn rand_vf(rng: &mut ChaCha8Rng, k: usize, poly: bool) -> VectorField {
    let v = xs(k);
    let c = (0..k)
        .map(|_| {
            if poly {
                rand_poly_rf(rng, &v)
            } else {
                rand_rf(rng, &v)
            }
        })
        .collect();
    VectorField::new(v, k, c).expect("shape")
}

fn rand_tensor(
    rng: &mut ChaCha8Rng,
    alg: &Arc<LieAlgebra>,
    support: &[usize],
    k: usize,
) -> TensorElement {
    let v = xs(k);
    let mut c = vec![RationalFunction::zero(v.clone()); alg.dim()];
    for &i in support {
        c[i] = rand_poly_rf(rng, &v);
    }
    LieElement::new(alg.clone(), v, c).expect("shape")
}

fn rand_d(rng: &mut ChaCha8Rng, alg: &Arc<LieAlgebra>, k: usize) -> DElement {
    let all: Vec<usize> = (0..alg.dim()).collect();
    DElement::new(rand_vf(rng, k, true), rand_tensor(rng, alg, &all, k)).expect("shape")
}

/// A catalogue algebra in a random invertible integer basis.
fn rand_algebra(rng: &mut ChaCha8Rng) -> Arc<LieAlgebra> {
    let cat = low_dimensional();
    let (_, base) = &cat[rng.gen_range(0..cat.len())];
    let m = base.dim();
    loop {
        let p: Vec<Vec<Rational>> = (0..m)
            .map(|_| (0..m).map(|_| q(rng.gen_range(-2..=2))).collect())
            .collect();
        if naive_rank(&p) == m {
            let names = (1..=m).map(|i| format!("b{i}")).collect();
            return Arc::new(base.change_basis(names, &p).expect("invertible"));
        }
    }
}

// ---------------------------------------------------------------------------
// criteria

fn sl3_result() -> EmbeddingResult {
    build_embedding(&make_sl3_paper(), EmbedOptions::default()).expect("sl3 embeds")
}

/// The published table, by basis name.
const PAPER_PHI: [(&str, &str); 8] = [
    ("e_a", "-d/dx1"),
    ("e_ab", "-d/dx2"),
    ("h_a", "-2*x1*d/dx1 - x2*d/dx2"),
    ("h_b", "x1*d/dx1 - x2*d/dx2"),
    ("e_b", "-x1*d/dx2"),
    ("e_-b", "-x2*d/dx1"),
    ("e_-a", "-x1^2*d/dx1 - x1*x2*d/dx2"),
    ("e_-a-b", "-x1*x2*d/dx1 - x2^2*d/dx2"),
];

fn criterion_1() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = dir.path().join("result.json");
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_liederiv"))
        .args(["embed", "--preset", "sl3_paper", "--out"])
        .arg(&out)
        .env("LIEDERIV_COLOR", "never")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    if !status.status.success() {
        return outcome(
            false,
            format!("embed exited with {:?}", status.status.code()),
        );
    }
    let r: EmbeddingResult = load(&out).expect("result loads");
    let alg = r.algebra.clone();
    let mut mismatched = Vec::new();
    for (name, expected) in PAPER_PHI {
        let got = &r.phi[alg.index_of(name).expect("basis name")];
        if got != &vf(expected, 2) {
            mismatched.push(format!("{name}: computed {got}, table {expected}"));
        }
    }
    // the table's own entries violate [φ(e_a), φ(e_-a)] = φ(h_a)
    let t = |n: &str| vf(PAPER_PHI.iter().find(|(b, _)| *b == n).expect("entry").1, 2);
    let table_is_hom = t("e_a").bracket(&t("e_-a")).expect("same vars") == t("h_a");
    let matched = PAPER_PHI.len() - mismatched.len();
    let ok = mismatched.is_empty() && elapsed < TABLE_TIME_LIMIT;
    let mut detail = format!("{matched}/8 entries match, {:.3}s", elapsed.as_secs_f64());
    if !mismatched.is_empty() {
        detail.push_str(&format!(
            "; {}; table satisfies [phi(e_a), phi(e_-a)] = phi(h_a): {table_is_hom}; computed phi passes verify: {}",
            mismatched.join("; "),
            verify_homomorphism(&alg, &r.phi).expect("verify").is_empty()
        ));
    }
    outcome(ok, detail)
}

fn criterion_2() -> Outcome {
    let r = sl3_result();
    let alg = r.algebra.clone();
    let v = xs(2);
    // (label, vector field part, tensor part)
    let lines: [(&str, &str, &[(&str, &str)]); 8] = [
        ("d/dx1", "d/dx1", &[("e_a", "-1")]),
        ("d/dx2", "d/dx2", &[("e_ab", "-1")]),
        (
            "h_a",
            "0",
            &[("h_a", "1"), ("e_a", "-2*x1"), ("e_ab", "-x2")],
        ),
        ("h_b", "0", &[("h_b", "1"), ("e_a", "x1"), ("e_ab", "-x2")]),
        ("e_-b", "0", &[("e_-b", "1"), ("e_a", "-x2")]),
        ("e_b", "0", &[("e_b", "1"), ("e_ab", "-x1")]),
        (
            "e_-a",
            "0",
            &[
                ("e_-a", "1"),
                ("h_a", "x1"),
                ("e_b", "x2"),
                ("e_a", "-x1^2"),
                ("e_ab", "-x1*x2"),
            ],
        ),
        (
            "e_-a-b",
            "0",
            &[
                ("e_-a-b", "1"),
                ("e_-b", "x1"),
                ("h_a", "x2"),
                ("h_b", "x2"),
                ("e_ab", "-x2^2"),
                ("e_a", "-x1*x2"),
            ],
        ),
    ];
    let l1_order = ["h_a", "h_b", "e_-a", "e_-b", "e_-a-b", "e_b"];
    let mut bad = Vec::new();
    for (label, field, tensor) in lines {
        let slot = match label {
            "d/dx1" => 0,
            "d/dx2" => 1,
            name => {
                2 + l1_order
                    .iter()
                    .position(|n| *n == name)
                    .expect("L1 element")
            }
        };
        let mut coeffs = vec![RationalFunction::zero(v.clone()); alg.dim()];
        for (name, c) in tensor {
            coeffs[alg.index_of(name).expect("basis name")] = rf(c, &v);
        }
        let expected = DElement::new(
            vf(field, 2),
            LieElement::new(alg.clone(), v.clone(), coeffs).expect("shape"),
        )
        .expect("shape");
        if r.images[slot] != expected {
            bad.push(label);
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{}/8 lines match{}",
            8 - bad.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; differ: {bad:?}")
            }
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 2..=5 {
        let r = build_embedding(&make_sln(n).expect("preset"), EmbedOptions::default())
            .expect("sl_n embeds");
        let hom = verify_homomorphism(&r.algebra, &r.phi)
            .expect("verify")
            .is_empty();
        let ker = kernel(&r.algebra, &r.phi).expect("kernel").dim();
        let rank = module_rank(&r.phi);
        let t = tilde_subalgebra(&r.algebra, &r.phi).expect("tilde");
        let good = hom
            && ker == 0
            && rank == n - 1
            && t.codimension == n - 1
            && t.constant_intersection.is_zero();
        ok &= good;
        notes.push(format!("sl_{n}:{}", if good { "ok" } else { "bad" }));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < SLN_TIME_LIMIT;
    outcome(
        ok,
        format!("{} in {:.1}s", notes.join(" "), elapsed.as_secs_f64()),
    )
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let heis = Arc::new(heisenberg_algebra());
    let sl3 = Arc::new(sl3_paper_algebra());
    let nilradical: Vec<usize> = ["e_a", "e_ab", "e_b"]
        .iter()
        .map(|n| sl3.index_of(n).expect("name"))
        .collect();
    let heis_all: Vec<usize> = (0..3).collect();
    let mut failures = 0;
    for case in 0..AUTOMORPHISM_CASES {
        let (alg, support) = if case % 2 == 0 {
            (&heis, &heis_all)
        } else {
            (&sl3, &nilradical)
        };
        let w = rand_tensor(&mut rng, alg, support, 2);
        let a = rand_d(&mut rng, alg, 2);
        let b = rand_d(&mut rng, alg, 2);
        let e = |x: &TensorElement, y: &DElement| {
            exp_ad(x, y, JetContext::Exact, None).expect("nilpotent")
        };
        let hom = e(&w, &d_bracket(&a, &b).expect("bracket"))
            == d_bracket(&e(&w, &a), &e(&w, &b)).expect("bracket");
        let inv = e(&w.neg(), &e(&w, &a)) == a;
        if !(hom && inv) {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!(
            "{}/{AUTOMORPHISM_CASES} cases exact",
            AUTOMORPHISM_CASES - failures
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v = xs(2);
    let mut passed = 0;
    let br = |a: &VectorField, b: &VectorField| a.bracket(b).expect("same vars");
    let ap = |a: &VectorField, f: &RationalFunction| a.apply(f).expect("same vars");
    for i in 0..BRACKET_LAW_CHECKS {
        let ok = match i % 4 {
            0 => {
                let (a, b) = (rand_vf(&mut rng, 2, false), rand_vf(&mut rng, 2, false));
                br(&a, &b) == -&br(&b, &a)
            }
            1 => {
                let (a, b, c) = (
                    rand_vf(&mut rng, 2, true),
                    rand_vf(&mut rng, 2, true),
                    rand_vf(&mut rng, 2, false),
                );
                (&(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b))).is_zero()
            }
            2 => {
                let d = rand_vf(&mut rng, 2, false);
                let (f, g) = (rand_rf(&mut rng, &v), rand_rf(&mut rng, &v));
                ap(&d, &(&f * &g)) == &(&f * &ap(&d, &g)) + &(&g * &ap(&d, &f))
            }
            _ => {
                let (d1, d2) = (rand_vf(&mut rng, 2, true), rand_vf(&mut rng, 2, true));
                let (r, s) = (rand_rf(&mut rng, &v), rand_rf(&mut rng, &v));
                let lhs = br(&d1.scale(&r), &d2.scale(&s));
                let rhs = &(&d2.scale(&(&r * &ap(&d1, &s))) - &d1.scale(&(&s * &ap(&d2, &r))))
                    + &br(&d1, &d2).scale(&(&r * &s));
                lhs == rhs
            }
        };
        passed += ok as usize;
    }
    outcome(
        passed == BRACKET_LAW_CHECKS,
        format!("{passed}/{BRACKET_LAW_CHECKS} checks exact"),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut closed_agree = 0;
    let mut eqs_agree = 0;
    let mut closed_seen = 0;
    for _ in 0..VARIETY_POINTS {
        let alg = rand_algebra(&mut rng);
        assert!(validate_jacobi(&alg).is_empty());
        let m = alg.dim();
        // at least two rows whenever the dimension allows it
        let k = if m >= 3 { rng.gen_range(1..=m - 2) } else { 1 };
        let rows: Vec<Vec<Rational>> = (0..m - k)
            .map(|_| {
                (0..m)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            q(0)
                        } else {
                            q(rng.gen_range(-3..=3))
                        }
                    })
                    .collect()
            })
            .collect();
        let a = CandidateMatrix::new(alg.clone(), k, (), rows.clone()).expect("shape");
        let rep = check_point(&alg, &a).expect("check");
        closed_agree += (rep.closed == naive_closed(&alg, &rows)) as usize;
        closed_seen += rep.closed as usize;
        let flat: Vec<Rational> = rows.iter().flatten().cloned().collect();
        let vanish = closure_equations(&alg, k)
            .expect("system")
            .closure_vanishes_at(&flat);
        eqs_agree += (vanish == rep.in_mk && rep.in_mk == naive_in_mk(&alg, &rows)) as usize;
    }
    let ok = closed_agree == VARIETY_POINTS && eqs_agree == VARIETY_POINTS;
    outcome(
        ok,
        format!("closed agrees {closed_agree}/{VARIETY_POINTS} ({closed_seen} closed), equations agree {eqs_agree}/{VARIETY_POINTS}"),
    )
}

fn structural_checks(r: &EmbeddingResult) -> bool {
    let k = r.k();
    let t = tilde_subalgebra(&r.algebra, &r.phi).expect("tilde");
    verify_homomorphism(&r.algebra, &r.phi)
        .expect("verify")
        .is_empty()
        && kernel(&r.algebra, &r.phi).expect("kernel").is_zero()
        && module_rank(&r.phi) == k
        && t.codimension == k
        && t.constant_intersection.is_zero()
}

fn criterion_7() -> Outcome {
    let z = Vars::new(["z1"]);
    let mut notes = Vec::new();
    let mut ok = true;

    let abelian = Arc::new(LieAlgebra::abelian(2));
    let fam = CandidateMatrix::new(
        abelian.clone(),
        1,
        z.clone(),
        vec![vec![rf("1", &z), rf("z1", &z)]],
    )
    .expect("shape");
    let holds = check_family(&abelian, &fam)
        .expect("family")
        .embedding_criterion_holds;
    ok &= holds;
    notes.push(format!("abelian (1, z1): {holds}"));
    let emb = build_embedding(
        &EmbeddingProblem::from_family(&fam, vec![1]).expect("problem"),
        EmbedOptions::default(),
    )
    .expect("abelian embeds");
    let good = structural_checks(&emb);
    ok &= good;
    notes.push(format!("abelian embedding checks: {good}"));

    // constant families: preset L1 points and random constant matrices
    let mut constant_false = 0;
    let mut constant_total = 0;
    let mut points: Vec<(Arc<LieAlgebra>, usize, Vec<Vec<Rational>>)> = Vec::new();
    for p in [
        make_sl3_paper(),
        make_sln(2).expect("preset"),
        make_sln(3).expect("preset"),
    ] {
        points.push((
            p.algebra().clone(),
            p.k(),
            p.l1_rational().expect("rational"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while points.len() < 23 {
        let alg = rand_algebra(&mut rng);
        let m = alg.dim();
        let k = rng.gen_range(1..m.max(2));
        if k >= m {
            continue;
        }
        let rows = (0..m - k)
            .map(|_| (0..m).map(|_| q(rng.gen_range(-2..=2))).collect())
            .collect();
        points.push((alg, k, rows));
    }
    for (alg, k, rows) in points {
        let fam = CandidateMatrix::new(alg.clone(), k, z.clone(), constant_rows(&rows, &z))
            .expect("shape");
        constant_total += 1;
        constant_false += !check_family(&alg, &fam)
            .expect("family")
            .embedding_criterion_holds as usize;
    }
    ok &= constant_false == constant_total;
    notes.push(format!(
        "constant families rejected {constant_false}/{constant_total}"
    ));

    // nilpotent branch: heisenberg, L1 = span{x + z1 y}
    let heis = Arc::new(heisenberg_algebra());
    let fam = CandidateMatrix::new(
        heis.clone(),
        2,
        z.clone(),
        vec![vec![rf("1", &z), rf("z1", &z), rf("0", &z)]],
    )
    .expect("shape");
    let holds = check_family(&heis, &fam)
        .expect("family")
        .embedding_criterion_holds;
    let emb = build_embedding(
        &EmbeddingProblem::from_family(&fam, vec![1, 2]).expect("problem"),
        EmbedOptions::default(),
    )
    .expect("heisenberg embeds");
    let good = holds && structural_checks(&emb);
    ok &= good;
    let shown: Vec<String> = emb.phi.iter().map(|f| f.to_string()).collect();
    notes.push(format!("heisenberg: {} [{}]", good, shown.join(", ")));
    outcome(ok, notes.join("; "))
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 2..=5 {
        let p = make_sln(n).expect("preset");
        let alg = p.algebra().clone();
        let k = p.k();
        let v = xs(k);
        let unit = |c: usize| -> Vec<Rational> {
            (0..alg.dim())
                .map(|j| {
                    if j == c {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        };
        let complement: Vec<Vec<Rational>> = p.complement().iter().map(|&c| unit(c)).collect();
        let w = standard_w(&alg, &v, &complement).expect("w");
        let mut good = true;
        for (i, l) in complement.iter().enumerate() {
            let d = DElement::from_vf(alg.clone(), VectorField::partial(v.clone(), k, i));
            let img = exp_ad(&w, &d, JetContext::Truncated(0), None).expect("jet");
            let lt = DElement::constant_tensor(alg.clone(), v.clone(), k, l).expect("shape");
            good &= img == d.sub(&lt).expect("same space");
        }
        for row in p.l1_rational().expect("rational") {
            let b = DElement::constant_tensor(alg.clone(), v.clone(), k, &row).expect("shape");
            good &= exp_ad(&w, &b, JetContext::Truncated(0), None).expect("jet") == b;
        }
        ok &= good;
        notes.push(format!("sl_{n}:{}", if good { "ok" } else { "bad" }));
    }
    outcome(ok, notes.join(" "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("sl3 phi table", criterion_1),
        ("sl3 exp(ad w) lines", criterion_2),
        ("sl_n homomorphism/kernel/rank suite", criterion_3),
        ("exp(ad w) automorphism", criterion_4),
        ("bracket laws", criterion_5),
        ("variety oracle equivalence", criterion_6),
        ("family criterion", criterion_7),
        ("jet congruences at N = 0", criterion_8),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let o = run();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        let expected = EXPECTED_FAILURES.contains(&id);
        if !o.ok && !expected {
            unexpected += 1;
        }
        let note = match (o.ok, expected) {
            (false, true) => " (expected)",
            (true, true) => " (expected to fail, now passes)",
            _ => "",
        };
        println!(
            "{tag} criterion {id}: {name}{note} [{:.1}s] {}",
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
