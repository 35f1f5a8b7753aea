use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::linalg::{solve, transpose};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// A finite-dimensional Lie algebra over ℚ given by structure constants
/// `[l_i, l_j] = Σ_s c_ij^s l_s`.
///
/// Only pairs `i < j` are stored (zero-based); antisymmetry and `[l_i, l_i] = 0`
/// are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    basis: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

/// A Jacobi triple `i < j < t` whose cyclic sum does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub t: usize,
    /// Nonzero coefficients `(s, c)` of the residual.
    pub residual: Vec<(usize, Rational)>,
}

impl LieAlgebra {
    /// Builds and validates an algebra; fails if the constants break the
    /// Jacobi identity.
    pub fn new<I>(basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Rational)>)>,
    {
        let alg = Self::new_unchecked(basis, brackets)?;
        let violations = validate_jacobi(&alg);
        if violations.is_empty() {
            Ok(alg)
        } else {
            Err(Error::JacobiViolation(violations.len()))
        }
    }

    /// Structural checks only (names, indices, antisymmetry); the Jacobi
    /// identity is left to [`validate_jacobi`].
    pub fn new_unchecked<I>(basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Rational)>)>,
    {
        let m = basis.len();
        if m == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &basis {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(Error::InvalidAlgebra(format!(
                    "basis name `{name}` is empty or repeated"
                )));
            }
        }
        let mut table: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        let mut given = BTreeSet::new();
        for ((i, j), terms) in brackets {
            if i >= m || j >= m {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index ({i}, {j}) out of range"
                )));
            }
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (s, c) in terms {
                if s >= m {
                    return Err(Error::InvalidAlgebra(format!(
                        "term index {s} out of range"
                    )));
                }
                *acc.entry(s).or_insert_with(Rational::zero) += c;
            }
            let sign_flip = i > j;
            let key = (i.min(j), i.max(j));
            let terms: Vec<(usize, Rational)> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(s, c)| (s, if sign_flip { -c } else { c }))
                .collect();
            if i == j {
                if terms.is_empty() {
                    continue;
                }
                return Err(Error::InvalidAlgebra(format!("[l_{i}, l_{i}] must vanish")));
            }
            if !given.insert(key) {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({}, {}) given twice",
                    key.0, key.1
                )));
            }
            if !terms.is_empty() {
                table.insert(key, terms);
            }
        }
        Ok(LieAlgebra {
            basis,
            brackets: table,
        })
    }

    /// The same algebra in the basis whose `i`-th vector has old
    /// coordinates `rows[i]`.
    pub fn change_basis(&self, names: Vec<String>, rows: &[Vec<Rational>]) -> Result<Self> {
        let m = self.dim();
        if names.len() != m || rows.len() != m || rows.iter().any(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!(
                "a change of basis in dimension {m} needs {m} rows of length {m}"
            )));
        }
        // new coordinates x of an old vector v solve x · rows = v
        let ident: Vec<Vec<Rational>> = (0..m)
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
            .collect();
        let inv = solve(&transpose(rows, m), &ident)?;
        let mut brackets = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let v = self.bracket_vectors(&rows[i], &rows[j]);
                let terms: Vec<(usize, Rational)> = (0..m)
                    .map(|t| (t, (0..m).map(|u| &inv[t][u] * &v[u]).sum::<Rational>()))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                brackets.push(((i, j), terms));
            }
        }
        Self::new_unchecked(names, brackets)
    }

    pub fn abelian(n: usize) -> Self {
        let basis = (1..=n).map(|i| format!("l{i}")).collect();
        Self::new_unchecked(basis, std::iter::empty()).expect("abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|n| n == name)
    }

    /// Stored constants, `i < j`, in increasing order.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Rational)>)> {
        self.brackets.iter()
    }

    /// `[l_i, l_j]` as sparse `(s, c_ij^s)` pairs.
    pub fn structure(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|ts| ts.iter().map(|(s, c)| (*s, -c)).collect())
                .unwrap_or_default(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[u, v]` for dense rational coordinate vectors.
    pub(crate) fn bracket_vectors(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j), terms) in &self.brackets {
            let w = &u[i] * &v[j] - &u[j] * &v[i];
            if w.is_zero() {
                continue;
            }
            for (s, c) in terms {
                out[*s] += &w * c;
            }
        }
        out
    }
}

/// Checks `[[l_i,l_j],l_t] + [[l_j,l_t],l_i] + [[l_t,l_i],l_j] = 0` for every
/// `i < j < t`.
pub fn validate_jacobi(alg: &LieAlgebra) -> Vec<JacobiViolation> {
    let m = alg.dim();
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); m];
        v[i] = Rational::from_integer(1.into());
        v
    };
    let basis: Vec<Vec<Rational>> = (0..m).map(unit).collect();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let ij = alg.bracket_vectors(&basis[i], &basis[j]);
            for t in j + 1..m {
                let jt = alg.bracket_vectors(&basis[j], &basis[t]);
                let ti = alg.bracket_vectors(&basis[t], &basis[i]);
                let a = alg.bracket_vectors(&ij, &basis[t]);
                let b = alg.bracket_vectors(&jt, &basis[i]);
                let c = alg.bracket_vectors(&ti, &basis[j]);
                let residual: Vec<(usize, Rational)> = (0..m)
                    .map(|s| (s, &a[s] + &b[s] + &c[s]))
                    .filter(|(_, r)| !r.is_zero())
                    .collect();
                if !residual.is_empty() {
                    out.push(JacobiViolation { i, j, t, residual });
                }
            }
        }
    }
    out
}
