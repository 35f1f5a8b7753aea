use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Ring};

use super::LieAlgebra;

/// An element `Σ c_i l_i` of `L ⊗ S` for a coefficient ring `S`.
///
/// With `S = ℚ` this is an element of `L`; with `S = ℚ(x)` it is an element
/// of the tensor part `R ⊗ L`, where the bracket is extended
/// `S`-bilinearly.
#[derive(Clone, Debug)]
pub struct LieElement<S: Ring> {
    algebra: Arc<LieAlgebra>,
    ctx: S::Ctx,
    coeffs: Vec<S>,
}

pub(crate) fn same_algebra(a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<S: Ring> PartialEq for LieElement<S> {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.ctx == other.ctx
            && self.coeffs == other.coeffs
    }
}

impl<S: Ring> LieElement<S> {
    pub fn new(algebra: Arc<LieAlgebra>, ctx: S::Ctx, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        if coeffs.iter().any(|c| c.context() != ctx) {
            return Err(Error::VariableMismatch(
                "coefficient over a different variable list".into(),
            ));
        }
        Ok(LieElement {
            algebra,
            ctx,
            coeffs,
        })
    }

    pub fn zero(algebra: Arc<LieAlgebra>, ctx: S::Ctx) -> Self {
        let coeffs = vec![S::zero(&ctx); algebra.dim()];
        LieElement {
            algebra,
            ctx,
            coeffs,
        }
    }

    /// `c · l_i`.
    pub fn basis_scaled(algebra: Arc<LieAlgebra>, i: usize, c: S) -> Self {
        let ctx = c.context();
        let mut e = Self::zero(algebra, ctx);
        e.coeffs[i] = c;
        e
    }

    pub fn basis(algebra: Arc<LieAlgebra>, ctx: S::Ctx, i: usize) -> Self {
        let one = S::one(&ctx);
        Self::basis_scaled(algebra, i, one)
    }

    /// Reinterprets rational coordinates over `ctx`.
    pub fn from_rational(
        algebra: Arc<LieAlgebra>,
        ctx: S::Ctx,
        coeffs: &[Rational],
    ) -> Result<Self> {
        let cs = coeffs.iter().map(|q| S::from_rational(&ctx, q)).collect();
        Self::new(algebra, ctx, cs)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if self.ctx != other.ctx {
            return Err(Error::VariableMismatch(
                "elements over different variable lists".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.zip_with(other, S::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.zip_with(other, S::minus))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        LieElement {
            algebra: self.algebra.clone(),
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(S::negate)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.algebra.clone(), self.ctx.clone());
        }
        self.map(|x| if x.is_zero() { x.clone() } else { x.times(c) })
    }

    /// Applies `f` to every coefficient, keeping the context.
    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        LieElement {
            algebra: self.algebra.clone(),
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Changes the coefficient ring.
    pub fn map_into<T: Ring>(&self, ctx: T::Ctx, f: impl Fn(&S) -> T) -> LieElement<T> {
        LieElement {
            algebra: self.algebra.clone(),
            ctx,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `[self, other] = Σ_{i<j} (a_i b_j - a_j b_i) [l_i, l_j]`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = vec![S::zero(&self.ctx); self.algebra.dim()];
        for (&(i, j), terms) in self.algebra.brackets() {
            let (ai, aj, bi, bj) = (
                &self.coeffs[i],
                &self.coeffs[j],
                &other.coeffs[i],
                &other.coeffs[j],
            );
            let p = if ai.is_zero() || bj.is_zero() {
                None
            } else {
                Some(ai.times(bj))
            };
            let q = if aj.is_zero() || bi.is_zero() {
                None
            } else {
                Some(aj.times(bi))
            };
            let w = match (p, q) {
                (None, None) => continue,
                (Some(p), None) => p,
                (None, Some(q)) => q.negate(),
                (Some(p), Some(q)) => p.minus(&q),
            };
            if w.is_zero() {
                continue;
            }
            for (s, c) in terms {
                let t = w.times(&S::from_rational(&self.ctx, c));
                out[*s] = out[*s].plus(&t);
            }
        }
        Ok(LieElement {
            algebra: self.algebra.clone(),
            ctx: self.ctx.clone(),
            coeffs: out,
        })
    }

    /// Writes `c_1*(name_1) + ...` into `out`; nothing for zero.
    pub(crate) fn write_terms(&self, out: &mut String, first: &mut bool) {
        for (i, c) in self.coeffs.iter().enumerate() {
            c.write_term(out, first, &format!("({})", self.algebra.name(i)), false);
        }
    }

    /// With `tensor`, terms render as `c\otimes l` with explicit unit
    /// coefficients; otherwise as `c l`.
    pub(crate) fn write_terms_latex(&self, out: &mut String, first: &mut bool, tensor: bool) {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut coef = String::new();
            let mut f = true;
            c.write_term_latex(&mut coef, &mut f, "");
            let body = coef.strip_prefix('-').unwrap_or(&coef);
            let simple = !body.contains(['+', '-']) || is_single_fraction(body);
            if simple {
                match (*first, coef.starts_with('-')) {
                    (_, true) => out.push('-'),
                    (false, false) => out.push('+'),
                    (true, false) => {}
                }
                if tensor || body != "1" {
                    out.push_str(body);
                }
            } else {
                if !*first {
                    out.push('+');
                }
                out.push('(');
                out.push_str(&coef);
                out.push(')');
            }
            *first = false;
            if tensor {
                out.push_str("\\otimes ");
            }
            out.push_str(&latex_basis_name(self.algebra.name(i)));
        }
    }

    pub fn to_latex(&self) -> String {
        self.latex(false)
    }

    /// `c\otimes l` terms, as elements of `R ⊗ L`.
    pub fn to_latex_tensor(&self) -> String {
        self.latex(true)
    }

    fn latex(&self, tensor: bool) -> String {
        let mut out = String::new();
        let mut first = true;
        self.write_terms_latex(&mut out, &mut first, tensor);
        if first {
            out.push('0');
        }
        out
    }
}

/// `\frac{..}{..}` with nothing after it.
fn is_single_fraction(s: &str) -> bool {
    let Some(rest) = s.strip_prefix("\\frac") else {
        return false;
    };
    let mut depth = 0usize;
    let mut groups = 0;
    for (i, ch) in rest.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    groups += 1;
                    if groups == 2 {
                        return i + 1 == rest.len();
                    }
                }
            }
            _ if depth == 0 => return false,
            _ => {}
        }
    }
    false
}

/// `e_-a-b` → `e_{-a-b}`, `E_1_2` → `E_{1,2}`, `h` → `h`.
pub fn latex_basis_name(name: &str) -> String {
    match name.split_once('_') {
        Some((head, tail)) if !head.is_empty() && !tail.is_empty() => {
            let tail = if tail.chars().all(|c| c.is_ascii_digit() || c == '_') {
                tail.replace('_', ",")
            } else {
                tail.to_string()
            };
            if tail.chars().count() == 1 {
                format!("{head}_{tail}")
            } else {
                format!("{head}_{{{tail}}}")
            }
        }
        _ => name.to_string(),
    }
}

impl<S: Ring> fmt::Display for LieElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        self.write_terms(&mut out, &mut first);
        if first {
            out.push('0');
        }
        f.write_str(&out)
    }
}
