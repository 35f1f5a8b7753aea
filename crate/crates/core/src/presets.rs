//! Built-in algebras and embedding problems.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::embedding::EmbeddingProblem;
use crate::error::{Error, Result};
use crate::lie::linalg::{solve, transpose};
use crate::lie::LieAlgebra;
use crate::scalar::Rational;

type Mat = Vec<Vec<Rational>>;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn unit_matrix(n: usize, i: usize, j: usize, c: i64) -> Mat {
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[i][j] = q(c);
    m
}

fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Rational::zero();
            for t in 0..n {
                s += &a[i][t] * &b[t][j] - &b[i][t] * &a[t][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Standard sl_n basis: `E_i_j` (i ≠ j, lexicographic) then
/// `h_i = E_ii - E_{i+1,i+1}`. Indices in names are 1-based.
fn sln_standard(n: usize) -> (Vec<String>, Vec<Mat>) {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(format!("E_{}_{}", i + 1, j + 1));
                mats.push(unit_matrix(n, i, j, 1));
            }
        }
    }
    for i in 0..n - 1 {
        names.push(format!("h_{}", i + 1));
        mats.push(mat_add(
            &unit_matrix(n, i, i, 1),
            &unit_matrix(n, i + 1, i + 1, -1),
        ));
    }
    (names, mats)
}

/// Coordinates of a traceless matrix in the standard sl_n basis.
fn sln_coords(x: &Mat) -> Vec<Rational> {
    let n = x.len();
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(x[i][j].clone());
            }
        }
    }
    let mut acc = Rational::zero();
    for i in 0..n - 1 {
        acc += &x[i][i];
        out.push(acc.clone());
    }
    out
}

/// Structure constants of the span of traceless matrices `mats`, which must
/// be a basis of sl_n.
fn algebra_from_matrices(names: Vec<String>, mats: &[Mat]) -> LieAlgebra {
    let m = mats.len();
    let std: Vec<Vec<Rational>> = mats.iter().map(sln_coords).collect();
    // c · std = s  ⇔  stdᵀ cᵀ = sᵀ
    let ident: Mat = (0..m)
        .map(|i| (0..m).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect();
    let inv = solve(&transpose(&std, m), &ident).expect("matrices form a basis");
    let mut brackets = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let s = sln_coords(&commutator(&mats[i], &mats[j]));
            let terms: Vec<(usize, Rational)> = (0..m)
                .map(|t| (t, (0..m).map(|u| &inv[t][u] * &s[u]).sum::<Rational>()))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                brackets.push(((i, j), terms));
            }
        }
    }
    LieAlgebra::new(names, brackets).expect("matrix commutators satisfy Jacobi")
}

pub fn sln_algebra(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::UnknownPreset(format!("sl_{n} (need n ≥ 2)")));
    }
    let (names, mats) = sln_standard(n);
    Ok(algebra_from_matrices(names, &mats))
}

fn unit_row(m: usize, i: usize) -> Vec<Rational> {
    (0..m)
        .map(|j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// `L1` = Cartan + negative root vectors + `E_i_j` with `i < j < n`;
/// complement `E_1_n, …, E_{n-1}_n`.
pub fn make_sln(n: usize) -> Result<EmbeddingProblem> {
    let alg = Arc::new(sln_algebra(n)?);
    let m = alg.dim();
    let idx = |name: String| alg.index_of(&name).expect("basis name");
    let mut l1 = Vec::new();
    for i in 1..n {
        l1.push(unit_row(m, idx(format!("h_{i}"))));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i > j || (i < j && j < n) {
                l1.push(unit_row(m, idx(format!("E_{i}_{j}"))));
            }
        }
    }
    let complement = (1..n).map(|i| idx(format!("E_{i}_{n}"))).collect();
    EmbeddingProblem::new(alg, l1, complement)
}

pub const SL3_PAPER_BASIS: [&str; 8] =
    ["e_a", "e_ab", "h_a", "h_b", "e_b", "e_-b", "e_-a", "e_-a-b"];

/// The matrices behind [`SL3_PAPER_BASIS`], in that order.
pub fn sl3_paper_matrices() -> Vec<Mat> {
    let e = |i, j, c| unit_matrix(3, i, j, c);
    vec![
        e(0, 1, 1),
        e(0, 2, -1),
        mat_add(&e(0, 0, 1), &e(1, 1, -1)),
        mat_add(&e(1, 1, 1), &e(2, 2, -1)),
        e(1, 2, 1),
        e(2, 1, 1),
        e(1, 0, 1),
        e(2, 0, -1),
    ]
}

pub fn sl3_paper_algebra() -> LieAlgebra {
    algebra_from_matrices(
        SL3_PAPER_BASIS.iter().map(|s| s.to_string()).collect(),
        &sl3_paper_matrices(),
    )
}

/// sl_3 with `L1 = ⟨h_a, h_b, e_-a, e_-b, e_-a-b, e_b⟩` and complement
/// `(e_a, e_ab)`.
pub fn make_sl3_paper() -> EmbeddingProblem {
    let alg = Arc::new(sl3_paper_algebra());
    let m = alg.dim();
    let idx = |name: &str| alg.index_of(name).expect("basis name");
    let l1 = ["h_a", "h_b", "e_-a", "e_-b", "e_-a-b", "e_b"]
        .iter()
        .map(|n| unit_row(m, idx(n)))
        .collect();
    EmbeddingProblem::new(alg.clone(), l1, vec![idx("e_a"), idx("e_ab")])
        .expect("fixture is well formed")
}

/// `[x, y] = z`.
pub fn heisenberg_algebra() -> LieAlgebra {
    LieAlgebra::new(
        vec!["x".into(), "y".into(), "z".into()],
        vec![((0, 1), vec![(2, q(1))])],
    )
    .expect("heisenberg")
}

/// `[h, e] = e`.
pub fn borel2_algebra() -> LieAlgebra {
    LieAlgebra::new(
        vec!["h".into(), "e".into()],
        vec![((0, 1), vec![(1, q(1))])],
    )
    .expect("borel2")
}

/// Default problem: `L1 = span{y, z}`, complement `(x)`.
pub fn heisenberg_problem() -> EmbeddingProblem {
    let alg = Arc::new(heisenberg_algebra());
    EmbeddingProblem::new(alg, vec![unit_row(3, 1), unit_row(3, 2)], vec![0])
        .expect("heisenberg problem")
}

/// Default problem: `L1 = span{e}`, complement `(h)`; `ad h` is not
/// nilpotent, so the exact construction fails.
pub fn borel2_problem() -> EmbeddingProblem {
    let alg = Arc::new(borel2_algebra());
    EmbeddingProblem::new(alg, vec![unit_row(2, 1)], vec![0]).expect("borel2 problem")
}

fn small(names: &[&str], brackets: &[(usize, usize, &[(usize, i64)])]) -> LieAlgebra {
    let basis = names.iter().map(|s| s.to_string()).collect();
    let table = brackets
        .iter()
        .map(|&(i, j, t)| ((i, j), t.iter().map(|&(s, c)| (s, q(c))).collect()));
    LieAlgebra::new(basis, table).expect("catalogue algebra")
}

/// A catalogue of Lie algebras of dimension at most 4, abelian and not,
/// solvable and not, used to seed randomized tests.
pub fn low_dimensional() -> Vec<(&'static str, LieAlgebra)> {
    let mut out: Vec<(&'static str, LieAlgebra)> = vec![
        ("abelian_1", LieAlgebra::abelian(1)),
        ("abelian_2", LieAlgebra::abelian(2)),
        ("abelian_3", LieAlgebra::abelian(3)),
        ("abelian_4", LieAlgebra::abelian(4)),
        ("borel2", borel2_algebra()),
        ("heisenberg", heisenberg_algebra()),
        ("sl_2", sln_algebra(2).expect("sl_2")),
    ];
    out.push((
        "solvable3",
        small(&["h", "a", "b"], &[(0, 1, &[(1, 1)]), (0, 2, &[(2, 1)])]),
    ));
    out.push((
        "gl_2",
        small(
            &["e", "f", "h", "c"],
            &[(0, 1, &[(2, 1)]), (2, 0, &[(0, 2)]), (2, 1, &[(1, -2)])],
        ),
    ));
    out.push((
        "filiform4",
        small(
            &["e1", "e2", "e3", "e4"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)])],
        ),
    ));
    out.push((
        "heisenberg_plus_1",
        small(&["x", "y", "z", "c"], &[(0, 1, &[(2, 1)])]),
    ));
    out.push((
        "borel2_squared",
        small(
            &["h1", "e1", "h2", "e2"],
            &[(0, 1, &[(1, 1)]), (2, 3, &[(3, 1)])],
        ),
    ));
    out
}

/// A preset name with its integer parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetDescriptor {
    pub name: String,
    pub n: Option<usize>,
}

/// `(name, description)` for every preset.
pub const PRESETS: [(&str, &str); 5] = [
    ("sl_n", "sl_n, n >= 2 (--n or sl_<n>); L1 = Cartan + negative roots + E_i_j with j < n, complement E_i_n"),
    ("sl3_paper", "sl_3 in the basis e_a, e_ab, h_a, h_b, e_b, e_-b, e_-a, e_-a-b with complement (e_a, e_ab)"),
    ("heisenberg", "3-dim Heisenberg algebra [x,y] = z; L1 = span{y, z}, complement (x)"),
    ("abelian", "n-dim abelian algebra l1..ln (--n or abelian_<n>); algebra only"),
    ("borel2", "2-dim algebra [h,e] = e; L1 = span{e}, complement (h), ad h not nilpotent"),
];

impl PresetDescriptor {
    /// Accepts `sl_n` with `n`, `sl_4`, `sl3_paper`, `heisenberg`,
    /// `abelian` with `n`, `abelian_3` and `borel2`.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Self> {
        let unknown = || Error::UnknownPreset(name.to_string());
        let with_suffix = |prefix: &str| -> Result<Option<usize>> {
            match name.strip_prefix(prefix) {
                Some("n") | Some("") => Ok(n),
                Some(d) => d.parse().map(Some).map_err(|_| unknown()),
                None => Err(unknown()),
            }
        };
        let (base, n) = match name {
            "sl3_paper" | "heisenberg" | "borel2" => (name, None),
            _ if name.starts_with("sl_") => ("sl_n", with_suffix("sl_")?),
            "abelian" => ("abelian", n),
            _ if name.starts_with("abelian_") => ("abelian", with_suffix("abelian_")?),
            _ => return Err(unknown()),
        };
        match (base, n) {
            ("sl_n", None) => Err(Error::UnknownPreset("sl_n needs n".into())),
            ("sl_n", Some(n)) if n < 2 => Err(Error::UnknownPreset(format!("sl_{n} (need n ≥ 2)"))),
            ("abelian", Some(0)) => Err(Error::UnknownPreset("abelian_0".into())),
            _ => Ok(PresetDescriptor {
                name: base.to_string(),
                n: if base == "abelian" {
                    Some(n.unwrap_or(2))
                } else {
                    n
                },
            }),
        }
    }

    pub fn algebra(&self) -> Result<Arc<LieAlgebra>> {
        Ok(Arc::new(match self.name.as_str() {
            "sl_n" => sln_algebra(self.n.unwrap_or(2))?,
            "sl3_paper" => sl3_paper_algebra(),
            "heisenberg" => heisenberg_algebra(),
            "abelian" => LieAlgebra::abelian(self.n.unwrap_or(2)),
            "borel2" => borel2_algebra(),
            other => return Err(Error::UnknownPreset(other.to_string())),
        }))
    }

    pub fn problem(&self) -> Result<EmbeddingProblem> {
        match self.name.as_str() {
            "sl_n" => make_sln(self.n.unwrap_or(2)),
            "sl3_paper" => Ok(make_sl3_paper()),
            "heisenberg" => Ok(heisenberg_problem()),
            "borel2" => Ok(borel2_problem()),
            other => Err(Error::UnknownPreset(format!(
                "{other} has no default embedding problem"
            ))),
        }
    }
}
