use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

use super::element::same_algebra;
use super::linalg::{left_nullspace, rref, Rref};
use super::{LieAlgebra, LieElement};

/// A subspace of `L ⊗ S`, stored as a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<S: Field> {
    algebra: Arc<LieAlgebra>,
    ctx: S::Ctx,
    red: Rref<S>,
}

impl<S: Field> PartialEq for Subspace<S> {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.ctx == other.ctx
            && self.red == other.red
    }
}

impl<S: Field> Subspace<S> {
    /// Span of the given coordinate rows.
    pub fn span(algebra: Arc<LieAlgebra>, ctx: S::Ctx, rows: Vec<Vec<S>>) -> Result<Self> {
        let m = algebra.dim();
        if let Some(r) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!(
                "row of length {} in dimension {m}",
                r.len()
            )));
        }
        if rows.iter().flatten().any(|c| c.context() != ctx) {
            return Err(Error::VariableMismatch(
                "row entry over a different variable list".into(),
            ));
        }
        Ok(Subspace {
            red: rref(rows),
            algebra,
            ctx,
        })
    }

    pub fn from_elements(
        algebra: Arc<LieAlgebra>,
        ctx: S::Ctx,
        elems: &[LieElement<S>],
    ) -> Result<Self> {
        if elems.iter().any(|e| !same_algebra(e.algebra(), &algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        Self::span(
            algebra,
            ctx,
            elems.iter().map(|e| e.coeffs().to_vec()).collect(),
        )
    }

    pub fn zero(algebra: Arc<LieAlgebra>, ctx: S::Ctx) -> Self {
        Subspace {
            algebra,
            ctx,
            red: Rref {
                rows: Vec::new(),
                pivots: Vec::new(),
            },
        }
    }

    pub fn full(algebra: Arc<LieAlgebra>, ctx: S::Ctx) -> Self {
        let m = algebra.dim();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { S::one(&ctx) } else { S::zero(&ctx) })
                    .collect()
            })
            .collect();
        Subspace {
            algebra,
            ctx,
            red: Rref {
                rows,
                pivots: (0..m).collect(),
            },
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    /// Echelon rows (unit pivots).
    pub fn rows(&self) -> &[Vec<S>] {
        &self.red.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.red.pivots
    }

    pub fn dim(&self) -> usize {
        self.red.rank()
    }

    pub fn codimension(&self) -> usize {
        self.algebra.dim() - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> Vec<LieElement<S>> {
        self.red
            .rows
            .iter()
            .map(|r| {
                LieElement::new(self.algebra.clone(), self.ctx.clone(), r.clone())
                    .expect("row shape")
            })
            .collect()
    }

    pub fn contains_coords(&self, v: &[S]) -> bool {
        self.red.contains(v)
    }

    pub fn contains(&self, v: &LieElement<S>) -> Result<bool> {
        if !same_algebra(v.algebra(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.red.contains(v.coeffs()))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if self.ctx != other.ctx {
            return Err(Error::VariableMismatch(
                "subspaces over different variable lists".into(),
            ));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let rows = self
            .red
            .rows
            .iter()
            .chain(&other.red.rows)
            .cloned()
            .collect();
        Self::span(self.algebra.clone(), self.ctx.clone(), rows)
    }

    /// `U ∩ W` from the left kernel of the stacked bases: `a U + b W = 0`
    /// gives `a U ∈ U ∩ W`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.algebra.dim();
        let du = self.dim();
        let stacked: Vec<Vec<S>> = self
            .red
            .rows
            .iter()
            .chain(&other.red.rows)
            .cloned()
            .collect();
        let rel = left_nullspace(&stacked, m, &self.ctx);
        let rows = rel
            .iter()
            .map(|a| {
                let mut v = vec![S::zero(&self.ctx); m];
                for (coef, row) in a[..du].iter().zip(&self.red.rows) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, r) in v.iter_mut().zip(row) {
                        *x = x.plus(&coef.times(r));
                    }
                }
                v
            })
            .collect();
        Self::span(self.algebra.clone(), self.ctx.clone(), rows)
    }

    /// First pair of basis rows whose bracket leaves the span, if any.
    pub fn closure_failure(&self) -> Option<(usize, usize)> {
        let basis = self.basis();
        for p in 0..basis.len() {
            for q in p + 1..basis.len() {
                let b = basis[p].bracket(&basis[q]).expect("same algebra");
                if !self.red.contains(b.coeffs()) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self) -> bool {
        self.closure_failure().is_none()
    }
}

/// Outcome of the filtration test `V_0 = L`, `V_{t+1} = [L2, V_t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub nilpotent: bool,
    /// Smallest `N` with `V_N = 0` when nilpotent; otherwise the step at
    /// which the chain stabilized.
    pub index: usize,
    /// `dim V_t` for each computed step, starting with `m`.
    pub chain: Vec<usize>,
}

/// Tests whether `ad: L2 → Der L` is nilpotent in the joint sense: some
/// product of `N` operators `ad b` (`b ∈ L2`) kills all of `L`.
pub fn is_nilpotent_action(l2: &Subspace<Rational>) -> Result<NilpotencyReport> {
    if let Some((p, q)) = l2.closure_failure() {
        return Err(Error::NotASubalgebra(p, q));
    }
    let alg = l2.algebra().clone();
    let gens = l2.basis();
    let mut current = Subspace::<Rational>::full(alg.clone(), ());
    let mut chain = vec![current.dim()];
    loop {
        if current.is_zero() {
            return Ok(NilpotencyReport {
                nilpotent: true,
                index: chain.len() - 1,
                chain,
            });
        }
        let mut rows = Vec::new();
        for b in &gens {
            for v in current.basis() {
                let c = b.bracket(&v)?;
                if !c.is_zero() {
                    rows.push(c.into_coeffs());
                }
            }
        }
        let next = Subspace::span(alg.clone(), (), rows)?;
        chain.push(next.dim());
        if next.dim() == current.dim() {
            // V_{t+1} ⊆ V_t with equal dimension: stuck forever
            return Ok(NilpotencyReport {
                nilpotent: false,
                index: chain.len() - 2,
                chain,
            });
        }
        current = next;
    }
}

/// Smallest subalgebra containing `elems`.
pub fn generated_subalgebra(
    algebra: Arc<LieAlgebra>,
    elems: &[LieElement<Rational>],
) -> Result<Subspace<Rational>> {
    let mut space = Subspace::from_elements(algebra, (), elems)?;
    loop {
        let basis = space.basis();
        let mut new_rows = Vec::new();
        for p in 0..basis.len() {
            for q in p + 1..basis.len() {
                let b = basis[p].bracket(&basis[q])?;
                if !space.contains_coords(b.coeffs()) {
                    new_rows.push(b.into_coeffs());
                }
            }
        }
        if new_rows.is_empty() {
            return Ok(space);
        }
        let mut rows = space.rows().to_vec();
        rows.extend(new_rows);
        space = Subspace::span(space.algebra().clone(), (), rows)?;
    }
}
