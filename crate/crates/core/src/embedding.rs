//! Construction of `φ: L → Der ℚ(x_1, …, x_k)` from a codimension-`k`
//! subalgebra `L1` and a complement, and the checks run on the result.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::linalg::{left_nullspace, rank, solve};
use crate::lie::{
    generated_subalgebra, is_nilpotent_action, LieAlgebra, LieElement, NilpotencyReport, Subspace,
};
use crate::scalar::{rational_relations, Rational, RationalFunction, Vars};
use crate::semidirect::{exp_ad, jet_reduce_rf, standard_w, DElement, JetContext, TensorElement};
use crate::variety::{constant_vectors_in_rowspan, CandidateMatrix};
use crate::vector_field::VectorField;

/// `L = L1 ⊕ span(l_1, …, l_k)`.
///
/// `L1` rows may depend on parameters `z`; they are then read over `ℚ(z)`
/// and the resulting fields live in `ℚ(x_1, …, x_k, z)` with derivations
/// only along the `x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingProblem {
    algebra: Arc<LieAlgebra>,
    params: Vars,
    l1: Vec<Vec<RationalFunction>>,
    complement: Vec<usize>,
}

/// What [`EmbeddingProblem::validate`] found.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemReport {
    pub k: usize,
    /// Filtration test for the subalgebra generated by the complement.
    pub nilpotency: NilpotencyReport,
}

impl EmbeddingProblem {
    pub fn new(
        algebra: Arc<LieAlgebra>,
        l1: Vec<Vec<Rational>>,
        complement: Vec<usize>,
    ) -> Result<Self> {
        let params = Vars::empty();
        let rows = l1
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| RationalFunction::constant(params.clone(), q.clone()))
                    .collect()
            })
            .collect();
        Self::with_params(algebra, params, rows, complement)
    }

    pub fn with_params(
        algebra: Arc<LieAlgebra>,
        params: Vars,
        l1: Vec<Vec<RationalFunction>>,
        complement: Vec<usize>,
    ) -> Result<Self> {
        let m = algebra.dim();
        if let Some(r) = l1.iter().find(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!(
                "L1 row of length {} in dimension {m}",
                r.len()
            )));
        }
        if l1.iter().flatten().any(|f| f.vars() != &params) {
            return Err(Error::VariableMismatch(
                "L1 entry over a different parameter list".into(),
            ));
        }
        if complement.is_empty() {
            return Err(Error::NotComplement("the complement is empty".into()));
        }
        let mut seen = vec![false; m];
        for &c in &complement {
            if c >= m || std::mem::replace(&mut seen[c], true) {
                return Err(Error::NotComplement(format!(
                    "complement index {c} is out of range or repeated"
                )));
            }
        }
        if params
            .names()
            .iter()
            .any(|n| n.starts_with('x') && n[1..].parse::<usize>().is_ok())
        {
            return Err(Error::VariableMismatch(
                "parameter names must not clash with x1, x2, …".into(),
            ));
        }
        Ok(EmbeddingProblem {
            algebra,
            params,
            l1,
            complement,
        })
    }

    /// Uses the rows of a parameterized candidate matrix as `L1`.
    pub fn from_family(
        family: &CandidateMatrix<RationalFunction>,
        complement: Vec<usize>,
    ) -> Result<Self> {
        Self::with_params(
            family.algebra().clone(),
            family.ctx().clone(),
            family.rows().to_vec(),
            complement,
        )
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn params(&self) -> &Vars {
        &self.params
    }

    pub fn l1_rows(&self) -> &[Vec<RationalFunction>] {
        &self.l1
    }

    /// `L1` rows as rationals when they carry no parameters.
    pub fn l1_rational(&self) -> Option<Vec<Vec<Rational>>> {
        self.l1
            .iter()
            .map(|r| r.iter().map(|f| f.constant_value()).collect())
            .collect()
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn k(&self) -> usize {
        self.complement.len()
    }

    fn unit(&self, i: usize) -> Vec<RationalFunction> {
        (0..self.algebra.dim())
            .map(|j| {
                if i == j {
                    RationalFunction::one(self.params.clone())
                } else {
                    RationalFunction::zero(self.params.clone())
                }
            })
            .collect()
    }

    /// Structural checks: `L1` is a subalgebra of codimension `k` and the
    /// complement fills the rest. Nilpotency is reported, not enforced.
    pub fn validate(&self) -> Result<ProblemReport> {
        let m = self.algebra.dim();
        let k = self.k();
        if k > m {
            return Err(Error::NotComplement(format!(
                "{k} complement elements in dimension {m}"
            )));
        }
        let l1 = Subspace::span(self.algebra.clone(), self.params.clone(), self.l1.clone())?;
        if let Some((p, q)) = l1.closure_failure() {
            return Err(Error::NotASubalgebra(p, q));
        }
        if l1.dim() != m - k {
            return Err(Error::NotComplement(format!(
                "L1 has dimension {}, expected {}",
                l1.dim(),
                m - k
            )));
        }
        let mut rows = self.l1.clone();
        rows.extend(self.complement.iter().map(|&c| self.unit(c)));
        if rank(&rows) != m {
            return Err(Error::NotComplement(
                "L1 and the complement do not span L".into(),
            ));
        }
        let gens: Vec<LieElement<Rational>> = self
            .complement
            .iter()
            .map(|&c| LieElement::basis(self.algebra.clone(), (), c))
            .collect();
        let l2 = generated_subalgebra(self.algebra.clone(), &gens)?;
        Ok(ProblemReport {
            k,
            nilpotency: is_nilpotent_action(&l2)?,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Work modulo `J^{N+1}` instead of exactly.
    pub jet: Option<u32>,
    /// Override for the exact-mode nilpotency guard.
    pub max_steps: Option<usize>,
}

/// The constructed map and the intermediate data it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingResult {
    pub algebra: Arc<LieAlgebra>,
    /// `x_1..x_k` followed by any parameters.
    pub vars: Vars,
    pub dirs: usize,
    /// `φ(l_j)` for every basis index `j`.
    pub phi: Vec<VectorField>,
    pub w: TensorElement,
    /// `e^{ad w} ∂_i` for `i ≤ k`, then `e^{ad w}(1 ⊗ b_j)` for the `L1` rows.
    pub images: Vec<DElement>,
    /// `B[i][j]`: coefficient of `l_j` in the tensor part of image `i`.
    pub b: Vec<Vec<RationalFunction>>,
    pub jet: Option<u32>,
}

pub fn build_embedding(p: &EmbeddingProblem, opts: EmbedOptions) -> Result<EmbeddingResult> {
    p.validate()?;
    let alg = p.algebra.clone();
    let m = alg.dim();
    let k = p.k();
    let vars = Vars::xs(k).concat(&p.params);
    let map: Vec<usize> = (k..k + p.params.len()).collect();
    let lift = |f: &RationalFunction| f.lift(&vars, &map);

    let complement: Vec<Vec<Rational>> = p
        .complement
        .iter()
        .map(|&c| {
            (0..m)
                .map(|j| Rational::from_integer(((c == j) as i64).into()))
                .collect()
        })
        .collect();
    let w = standard_w(&alg, &vars, &complement)?;
    let ctx = match opts.jet {
        Some(n) => JetContext::Truncated(n),
        None => JetContext::Exact,
    };

    let mut seeds = Vec::with_capacity(m);
    for i in 0..k {
        seeds.push(DElement::from_vf(
            alg.clone(),
            VectorField::partial(vars.clone(), k, i),
        ));
    }
    for row in &p.l1 {
        let t = TensorElement::new(alg.clone(), vars.clone(), row.iter().map(lift).collect())?;
        seeds.push(DElement::from_tensor(t, k));
    }
    let images = seeds
        .iter()
        .map(|s| exp_ad(&w, s, ctx, opts.max_steps))
        .collect::<Result<Vec<_>>>()?;

    let b: Vec<Vec<RationalFunction>> = images
        .iter()
        .map(|im| im.tensor().coeffs().to_vec())
        .collect();
    // Y B = I, and φ(l_j) = Σ_{i<k} Y[j][i] ∂_i, i.e. the first k columns of B^{-1}
    let rhs: Vec<Vec<RationalFunction>> = (0..m)
        .map(|i| {
            (0..k)
                .map(|c| {
                    if i == c {
                        RationalFunction::one(vars.clone())
                    } else {
                        RationalFunction::zero(vars.clone())
                    }
                })
                .collect()
        })
        .collect();
    let y = solve(&b, &rhs)?;
    let phi = y
        .into_iter()
        .map(|row| {
            let row = match opts.jet {
                Some(n) => row
                    .iter()
                    .map(|f| jet_reduce_rf(f, n, k))
                    .collect::<Result<Vec<_>>>()?,
                None => row,
            };
            VectorField::new(vars.clone(), k, row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EmbeddingResult {
        algebra: alg,
        vars,
        dirs: k,
        phi,
        w,
        images,
        b,
        jet: opts.jet,
    })
}

/// A pair `i < j` with `[φ_i, φ_j] ≠ Σ_s c_ij^s φ_s`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomViolation {
    pub i: usize,
    pub j: usize,
    pub residual: VectorField,
}

fn check_phi(alg: &LieAlgebra, phi: &[VectorField]) -> Result<()> {
    if phi.len() != alg.dim() {
        return Err(Error::ShapeMismatch(format!(
            "φ given on {} of {} basis elements",
            phi.len(),
            alg.dim()
        )));
    }
    if phi
        .windows(2)
        .any(|w| w[0].vars() != w[1].vars() || w[0].dirs() != w[1].dirs())
    {
        return Err(Error::VariableMismatch(
            "φ values over different variables".into(),
        ));
    }
    Ok(())
}

pub fn verify_homomorphism(alg: &LieAlgebra, phi: &[VectorField]) -> Result<Vec<HomViolation>> {
    check_phi(alg, phi)?;
    let m = alg.dim();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut residual = phi[i].bracket(&phi[j])?;
            for (s, c) in alg.structure(i, j) {
                let cf = RationalFunction::constant(residual.vars().clone(), c);
                residual = &residual - &phi[s].scale(&cf);
            }
            if !residual.is_zero() {
                out.push(HomViolation { i, j, residual });
            }
        }
    }
    Ok(out)
}

/// `{a ∈ ℚ^m : Σ a_i φ(l_i) = 0}`.
pub fn kernel(alg: &Arc<LieAlgebra>, phi: &[VectorField]) -> Result<Subspace<Rational>> {
    check_phi(alg, phi)?;
    let vectors: Vec<Vec<RationalFunction>> = phi.iter().map(|v| v.coeffs().to_vec()).collect();
    Subspace::span(alg.clone(), (), rational_relations(&vectors))
}

/// Rank over the function field of the `m × k` coefficient matrix.
pub fn module_rank(phi: &[VectorField]) -> usize {
    let rows: Vec<Vec<RationalFunction>> = phi.iter().map(|v| v.coeffs().to_vec()).collect();
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    rank(&rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TildeReport {
    /// `{r : Σ r_i φ(l_i) = 0}` inside `R ⊗ L`.
    pub space: Subspace<RationalFunction>,
    pub codimension: usize,
    /// Constant vectors in `space`, i.e. `L̃ ∩ 1 ⊗ L`.
    pub constant_intersection: Subspace<Rational>,
}

pub fn tilde_subalgebra(alg: &Arc<LieAlgebra>, phi: &[VectorField]) -> Result<TildeReport> {
    check_phi(alg, phi)?;
    let m = alg.dim();
    let vars = phi[0].vars().clone();
    let mat: Vec<Vec<RationalFunction>> = phi.iter().map(|v| v.coeffs().to_vec()).collect();
    let rel = left_nullspace(&mat, phi[0].dirs(), &vars);
    let space = Subspace::span(alg.clone(), vars, rel)?;
    let consts = constant_vectors_in_rowspan(space.rows(), m);
    let constant_intersection = Subspace::span(alg.clone(), (), consts)?;
    Ok(TildeReport {
        codimension: space.codimension(),
        space,
        constant_intersection,
    })
}

/// Numbers reported alongside a result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingSummary {
    pub rank: usize,
    pub kernel_dim: usize,
    pub tilde_codim: usize,
    pub tilde_meets_constants: bool,
    pub homomorphism_ok: bool,
}

impl EmbeddingResult {
    pub fn k(&self) -> usize {
        self.dirs
    }

    pub fn summary(&self) -> Result<EmbeddingSummary> {
        let tilde = tilde_subalgebra(&self.algebra, &self.phi)?;
        Ok(EmbeddingSummary {
            rank: module_rank(&self.phi),
            kernel_dim: kernel(&self.algebra, &self.phi)?.dim(),
            tilde_codim: tilde.codimension,
            tilde_meets_constants: !tilde.constant_intersection.is_zero(),
            homomorphism_ok: verify_homomorphism(&self.algebra, &self.phi)?.is_empty(),
        })
    }

    fn as_row(&self, vf: &VectorField, t: &[RationalFunction]) -> Vec<RationalFunction> {
        vf.coeffs().iter().chain(t).cloned().collect()
    }

    /// `{φ(l_j) + 1 ⊗ l_j}` spans the same `ℚ(x)`-space as the images, and
    /// the vector-field parts of the first `k` images are independent.
    pub fn check_round_trip(&self) -> bool {
        let m = self.algebra.dim();
        let one = RationalFunction::one(self.vars.clone());
        let zero = RationalFunction::zero(self.vars.clone());
        let imgs: Vec<Vec<RationalFunction>> = self
            .images
            .iter()
            .map(|im| self.as_row(im.vf(), im.tensor().coeffs()))
            .collect();
        let targets: Vec<Vec<RationalFunction>> = (0..m)
            .map(|j| {
                let unit: Vec<RationalFunction> = (0..m)
                    .map(|i| if i == j { one.clone() } else { zero.clone() })
                    .collect();
                self.as_row(&self.phi[j], &unit)
            })
            .collect();
        let r = rank(&imgs);
        let both: Vec<Vec<RationalFunction>> = imgs.iter().chain(&targets).cloned().collect();
        let vf_parts: Vec<Vec<RationalFunction>> = self.images[..self.dirs]
            .iter()
            .map(|im| im.vf().coeffs().to_vec())
            .collect();
        r == m && rank(&targets) == m && rank(&both) == m && rank(&vf_parts) == self.dirs
    }

    /// `φ(l_j) + 1 ⊗ l_j` as an element of the semidirect algebra.
    pub fn lifted(&self, j: usize) -> DElement {
        let t = TensorElement::basis(self.algebra.clone(), self.vars.clone(), j);
        DElement::new(self.phi[j].clone(), t).expect("same variables")
    }
}
