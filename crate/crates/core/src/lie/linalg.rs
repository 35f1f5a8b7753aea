//! Exact Gaussian elimination over any [`Field`].

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Reduced row echelon form: nonzero rows only, each with a unit pivot.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<S> {
    pub rows: Vec<Vec<S>>,
    pub pivots: Vec<usize>,
}

impl<S: Field> Rref<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the rows; the result is zero iff `v` lies in
    /// the row space.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.minus(&f.times(r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(S::is_zero)
    }
}

/// Row reduces `rows`, looking for pivots only in the first `pivot_cols`
/// columns. Among candidate pivots the smallest entry is chosen to limit
/// coefficient growth.
pub fn rref_limited<S: Field>(mut rows: Vec<Vec<S>>, pivot_cols: usize) -> Rref<S> {
    let n = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols.min(ncols) {
        if r == n {
            break;
        }
        let Some(p) = (r..n)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].size())
        else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].minus(&f.times(&pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots }
}

pub fn rref<S: Field>(rows: Vec<Vec<S>>) -> Rref<S> {
    let ncols = rows.first().map_or(0, Vec::len);
    rref_limited(rows, ncols)
}

pub fn rank<S: Field>(rows: &[Vec<S>]) -> usize {
    rref(rows.to_vec()).rank()
}

/// Basis of `{x : A x = 0}` where `A` has `ncols` columns.
pub fn nullspace<S: Field>(rows: &[Vec<S>], ncols: usize, ctx: &S::Ctx) -> Vec<Vec<S>> {
    let red = rref(rows.to_vec());
    let mut is_pivot = vec![false; ncols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut x = vec![S::zero(ctx); ncols];
        x[free] = S::one(ctx);
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            x[p] = row[free].negate();
        }
        out.push(x);
    }
    out
}

/// Basis of `{y : y A = 0}`.
pub fn left_nullspace<S: Field>(rows: &[Vec<S>], ncols: usize, ctx: &S::Ctx) -> Vec<Vec<S>> {
    nullspace(&transpose(rows, ncols), rows.len(), ctx)
}

pub fn transpose<S: Clone>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    (0..ncols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Solves `A X = B` for square invertible `A`; `rhs` holds the columns of
/// `B` as rows of a second matrix with the same row count as `A`.
pub fn solve<S: Field>(a: &[Vec<S>], rhs: &[Vec<S>]) -> Result<Vec<Vec<S>>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || rhs.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "solve expects an {n}x{n} system"
        )));
    }
    let aug: Vec<Vec<S>> = a
        .iter()
        .zip(rhs)
        .map(|(r, b)| r.iter().chain(b).cloned().collect())
        .collect();
    let red = rref_limited(aug, n);
    if red.rank() < n {
        return Err(Error::SingularSystem {
            rank: red.rank(),
            size: n,
        });
    }
    Ok(red.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by Gaussian elimination.
pub fn determinant<S: Field>(a: &[Vec<S>], ctx: &S::Ctx) -> S {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = S::one(ctx);
    for c in 0..n {
        let Some(p) = (c..n)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].size())
        else {
            return S::zero(ctx);
        };
        if p != c {
            m.swap(p, c);
            det = det.negate();
        }
        det = det.times(&m[c][c]);
        let inv = m[c][c].inverse().expect("nonzero pivot");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].times(&inv);
            for j in c..n {
                let t = f.times(&m[c][j]);
                m[i][j] = m[i][j].minus(&t);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_rational_function, Rational, RationalFunction, Ring, Vars};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3, &());
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&ns[0]).map(|(x, y)| x * y).sum();
            assert_eq!(dot, q(0));
        }
    }

    #[test]
    fn solve_and_singular() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &mat(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(x[0][0], Rational::new(3.into(), 5.into()));
        assert_eq!(x[1][0], Rational::new((-1).into(), 5.into()));
        let s = mat(&[&[1, 2], &[2, 4]]);
        assert!(matches!(
            solve(&s, &mat(&[&[1], &[0]])),
            Err(Error::SingularSystem { rank: 1, size: 2 })
        ));
    }

    #[test]
    fn determinant_matches_cofactor() {
        let a = mat(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2*(3*-2 - 4*5) + 1*(1*-2 - 0) = -52 - 2
        assert_eq!(determinant(&a, &()), q(-54));
    }

    #[test]
    fn rank_over_rational_functions() {
        let v = Vars::xs(2);
        let f = |s: &str| parse_rational_function(s, &v).unwrap();
        let a = vec![
            vec![f("x1"), f("x2")],
            vec![f("x1^2"), f("x1*x2")],
            vec![f("1"), f("x2/x1")],
        ];
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 2, &v);
        assert_eq!(ns.len(), 1);
        let dot = a[0][0].times(&ns[0][0]).plus(&a[0][1].times(&ns[0][1]));
        assert!(RationalFunction::is_zero(&dot));
    }

    #[test]
    fn left_nullspace_annihilates() {
        let a = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        let y = left_nullspace(&a, 2, &());
        assert_eq!(y.len(), 1);
        for j in 0..2 {
            let s: Rational = (0..3).map(|i| &y[0][i] * &a[i][j]).sum();
            assert_eq!(s, q(0));
        }
    }
}
