//! Equations and membership tests for the variety of `(m-k)×m` matrices
//! whose rows span a subalgebra.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::linalg::{rank, rref};
use crate::lie::{LieAlgebra, LieElement, Subspace};
use crate::scalar::{
    rational_relations, Field, Polynomial, Rational, RationalFunction, Ring, Vars,
};

/// Rows `v_1..v_{m-k}` of a candidate subalgebra basis over `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateMatrix<S: Field> {
    algebra: Arc<LieAlgebra>,
    k: usize,
    ctx: S::Ctx,
    rows: Vec<Vec<S>>,
}

impl<S: Field> CandidateMatrix<S> {
    pub fn new(algebra: Arc<LieAlgebra>, k: usize, ctx: S::Ctx, rows: Vec<Vec<S>>) -> Result<Self> {
        let m = algebra.dim();
        if k == 0 || k > m {
            return Err(Error::ShapeMismatch(format!("k = {k} must lie in 1..={m}")));
        }
        if rows.len() != m - k {
            return Err(Error::ShapeMismatch(format!(
                "expected {} rows, got {}",
                m - k,
                rows.len()
            )));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!(
                "row of length {} in dimension {m}",
                r.len()
            )));
        }
        if rows.iter().flatten().any(|c| c.context() != ctx) {
            return Err(Error::VariableMismatch(
                "matrix entry over a different variable list".into(),
            ));
        }
        Ok(CandidateMatrix {
            algebra,
            k,
            ctx,
            rows,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    fn elements(&self) -> Vec<LieElement<S>> {
        self.rows
            .iter()
            .map(|r| {
                LieElement::new(self.algebra.clone(), self.ctx.clone(), r.clone())
                    .expect("checked shape")
            })
            .collect()
    }

    /// `[v_p, v_q]` for every `p < q`, in pair order.
    fn pair_brackets(&self) -> Vec<Vec<S>> {
        let els = self.elements();
        let mut out = Vec::new();
        for p in 0..els.len() {
            for q in p + 1..els.len() {
                out.push(els[p].bracket(&els[q]).expect("same algebra").into_coeffs());
            }
        }
        out
    }
}

impl CandidateMatrix<RationalFunction> {
    /// Substitutes a parameter point; `None` where an entry has a pole.
    pub fn specialize(&self, point: &[Rational]) -> Option<CandidateMatrix<Rational>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|f| f.eval(point)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(CandidateMatrix {
            algebra: self.algebra.clone(),
            k: self.k,
            ctx: (),
            rows,
        })
    }
}

/// The polynomial system in unknowns `a_i_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietySystem {
    pub unknowns: Vars,
    /// `(m-k+1)`-minors of `A` stacked with each `[v_p, v_q]`; identically
    /// zero minors are omitted.
    pub closure_eqs: Vec<Polynomial>,
    /// `(m-k)`-minors of `A`; identically zero minors are omitted.
    pub degeneracy_eqs: Vec<Polynomial>,
}

impl VarietySystem {
    /// Whether every closure equation vanishes at `point` (row-major `a_i_j`).
    pub fn closure_vanishes_at(&self, point: &[Rational]) -> bool {
        self.closure_eqs
            .iter()
            .all(|e| num_traits::Zero::is_zero(&e.eval(point)))
    }

    pub fn degeneracy_vanishes_at(&self, point: &[Rational]) -> bool {
        self.degeneracy_eqs
            .iter()
            .all(|e| num_traits::Zero::is_zero(&e.eval(point)))
    }
}

/// `a_1_1 … a_{r}_{m}`, row-major.
pub fn unknown_vars(rows: usize, m: usize) -> Vars {
    Vars::new((1..=rows).flat_map(|i| (1..=m).map(move |j| format!("a_{i}_{j}"))))
}

/// Generic symbolic matrix `A` and the memoized minors of its rows.
struct SymbolicMinors {
    vars: Vars,
    r: usize,
    m: usize,
    memo: HashMap<(usize, Vec<usize>), Polynomial>,
}

impl SymbolicMinors {
    fn new(r: usize, m: usize) -> Self {
        SymbolicMinors {
            vars: unknown_vars(r, m),
            r,
            m,
            memo: HashMap::new(),
        }
    }

    fn entry(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::var(self.vars.clone(), i * self.m + j)
    }

    /// Minor on rows `row..r` and the columns `cols` (`|cols| = r - row`),
    /// by Laplace expansion along the first row.
    fn minor(&mut self, row: usize, cols: &[usize]) -> Polynomial {
        if row == self.r {
            return Polynomial::one(self.vars.clone());
        }
        let key = (row, cols.to_vec());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(self.vars.clone());
        for (pos, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.minor(row + 1, &rest);
            if sub.is_zero() {
                continue;
            }
            let t = &self.entry(row, c) * &sub;
            acc = if pos % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Lazily generated closure equations, in pair-then-column-subset order.
pub struct ClosureEquations {
    minors: SymbolicMinors,
    brackets: Vec<Vec<Polynomial>>,
    subsets: Vec<Vec<usize>>,
    pair: usize,
    subset: usize,
}

impl ClosureEquations {
    pub fn unknowns(&self) -> &Vars {
        &self.minors.vars
    }

    /// Upper bound on the number of equations (zero minors are skipped).
    pub fn candidate_count(&self) -> usize {
        self.brackets.len() * self.subsets.len()
    }
}

impl Iterator for ClosureEquations {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let r = self.minors.r;
        while self.pair < self.brackets.len() {
            if self.subset == self.subsets.len() {
                self.subset = 0;
                self.pair += 1;
                continue;
            }
            let cols = self.subsets[self.subset].clone();
            self.subset += 1;
            let b = &self.brackets[self.pair];
            // expand along the appended last row
            let mut acc = Polynomial::zero(self.minors.vars.clone());
            for (pos, &c) in cols.iter().enumerate() {
                if b[c].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let sub = self.minors.minor(0, &rest);
                if sub.is_zero() {
                    continue;
                }
                let t = &b[c] * &sub;
                acc = if (r + pos) % 2 == 0 {
                    &acc + &t
                } else {
                    &acc - &t
                };
            }
            if !acc.is_zero() {
                return Some(acc);
            }
        }
        None
    }
}

fn check_k(alg: &LieAlgebra, k: usize) -> Result<usize> {
    let m = alg.dim();
    if k == 0 || k > m {
        return Err(Error::ShapeMismatch(format!("k = {k} must lie in 1..={m}")));
    }
    Ok(m - k)
}

/// Streams the closure equations of `M_k(L)`.
pub fn closure_equations_iter(alg: &Arc<LieAlgebra>, k: usize) -> Result<ClosureEquations> {
    let r = check_k(alg, k)?;
    let m = alg.dim();
    let minors = SymbolicMinors::new(r, m);
    let vars = minors.vars.clone();
    let rows: Vec<LieElement<Polynomial>> = (0..r)
        .map(|i| {
            let cs = (0..m).map(|j| minors.entry(i, j)).collect();
            LieElement::new(alg.clone(), vars.clone(), cs).expect("shape")
        })
        .collect();
    let mut brackets = Vec::new();
    for p in 0..r {
        for q in p + 1..r {
            brackets.push(rows[p].bracket(&rows[q])?.into_coeffs());
        }
    }
    Ok(ClosureEquations {
        minors,
        brackets,
        subsets: combinations(m, r + 1),
        pair: 0,
        subset: 0,
    })
}

/// The `(m-k)`-minors of the symbolic matrix.
pub fn degeneracy_equations(alg: &Arc<LieAlgebra>, k: usize) -> Result<Vec<Polynomial>> {
    let r = check_k(alg, k)?;
    let m = alg.dim();
    // with no rows the single empty minor is 1, so the system is never satisfied
    let mut minors = SymbolicMinors::new(r, m);
    Ok(combinations(m, r)
        .into_iter()
        .map(|cols| minors.minor(0, &cols))
        .filter(|p| !p.is_zero())
        .collect())
}

pub fn closure_equations(alg: &Arc<LieAlgebra>, k: usize) -> Result<VarietySystem> {
    let it = closure_equations_iter(alg, k)?;
    let unknowns = it.unknowns().clone();
    let closure_eqs = it.collect();
    Ok(VarietySystem {
        unknowns,
        closure_eqs,
        degeneracy_eqs: degeneracy_equations(alg, k)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub full_rank: bool,
    /// Every `[v_p, v_q]` lies in the row span.
    pub closed: bool,
    /// Every closure minor vanishes, i.e. `rank [A; [v_p, v_q]] ≤ m - k`.
    pub in_mk: bool,
    pub in_m0k: bool,
}

pub fn check_point(alg: &Arc<LieAlgebra>, a: &CandidateMatrix<Rational>) -> Result<PointReport> {
    if !crate::lie::same_algebra(alg, a.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let r = a.rows.len();
    let red = rref(a.rows.clone());
    let full_rank = red.rank() == r;
    let mut closed = true;
    let mut in_mk = true;
    for b in a.pair_brackets() {
        if !red.contains(&b) {
            closed = false;
        }
        let mut stacked = a.rows.clone();
        stacked.push(b);
        if rank(&stacked) > r {
            in_mk = false;
        }
    }
    Ok(PointReport {
        full_rank,
        closed,
        in_mk,
        in_m0k: in_mk && !full_rank,
    })
}

/// Constant vectors lying in the `ℚ(z)`-row span of `rows`.
///
/// With `R` the reduced echelon form and pivot columns `P`, a vector `v`
/// is in the span iff `v_j = Σ_p v_{P_p} R_{pj}` for every column `j`;
/// these identities are linear in `v` with rational-function coefficients.
pub fn constant_vectors_in_rowspan(rows: &[Vec<RationalFunction>], m: usize) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let red = rref(rows.to_vec());
    let vars = rows[0][0].vars().clone();
    let nonpivot: Vec<usize> = (0..m).filter(|j| !red.pivots.contains(j)).collect();
    if nonpivot.is_empty() {
        return (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| Rational::from_integer(((i == j) as i64).into()))
                    .collect()
            })
            .collect();
    }
    let mut g = vec![vec![RationalFunction::zero(vars.clone()); nonpivot.len()]; m];
    for (slot, &j) in nonpivot.iter().enumerate() {
        g[j][slot] = RationalFunction::one(vars.clone());
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            g[p][slot] = -&row[j];
        }
    }
    let sols = rational_relations(&g);
    for v in &sols {
        let lifted: Vec<RationalFunction> = v
            .iter()
            .map(|q| RationalFunction::constant(vars.clone(), q.clone()))
            .collect();
        assert!(
            red.contains(&lifted),
            "constant solution failed the membership re-check"
        );
    }
    sols
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub closed_generically: bool,
    pub generic_rank: usize,
    pub constant_intersection: Subspace<Rational>,
    pub embedding_criterion_holds: bool,
}

pub fn check_family(
    alg: &Arc<LieAlgebra>,
    a: &CandidateMatrix<RationalFunction>,
) -> Result<FamilyReport> {
    if !crate::lie::same_algebra(alg, a.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let m = alg.dim();
    let r = a.rows.len();
    let span = Subspace::span(alg.clone(), a.ctx.clone(), a.rows.clone())?;
    let closed_generically = a.pair_brackets().iter().all(|b| span.contains_coords(b));
    let generic_rank = span.dim();
    let consts = constant_vectors_in_rowspan(&a.rows, m);
    let constant_intersection = Subspace::span(alg.clone(), (), consts)?;
    let embedding_criterion_holds =
        closed_generically && generic_rank == r && constant_intersection.is_zero();
    Ok(FamilyReport {
        closed_generically,
        generic_rank,
        constant_intersection,
        embedding_criterion_holds,
    })
}

/// Lifts rational rows to constant rational functions over `vars`.
pub fn constant_rows(rows: &[Vec<Rational>], vars: &Vars) -> Vec<Vec<RationalFunction>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|q| RationalFunction::from_rational(vars, q))
                .collect()
        })
        .collect()
}
