//! Derivations `Σ f_i ∂/∂x_i` of a rational function field.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Parser, RationalFunction, Vars};

/// A vector field with rational-function coefficients.
///
/// Only the first `dirs` variables carry a `∂/∂x_i`; any further variables
/// are parameters that every field treats as constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    vars: Vars,
    dirs: usize,
    coeffs: Vec<RationalFunction>,
}

impl VectorField {
    pub fn new(vars: Vars, dirs: usize, coeffs: Vec<RationalFunction>) -> Result<Self> {
        if dirs > vars.len() || coeffs.len() != dirs {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for {dirs} directions over {} variables",
                coeffs.len(),
                vars.len()
            )));
        }
        if coeffs.iter().any(|c| c.vars() != &vars) {
            return Err(Error::VariableMismatch(
                "coefficient over a different variable list".into(),
            ));
        }
        Ok(VectorField { vars, dirs, coeffs })
    }

    pub fn zero(vars: Vars, dirs: usize) -> Self {
        assert!(dirs <= vars.len(), "more directions than variables");
        let coeffs = vec![RationalFunction::zero(vars.clone()); dirs];
        VectorField { vars, dirs, coeffs }
    }

    /// `∂/∂x_i`.
    pub fn partial(vars: Vars, dirs: usize, i: usize) -> Self {
        Self::scaled_partial(vars.clone(), dirs, i, RationalFunction::one(vars))
    }

    /// `f ∂/∂x_i`.
    pub fn scaled_partial(vars: Vars, dirs: usize, i: usize, f: RationalFunction) -> Self {
        assert!(i < dirs, "direction out of range");
        let mut v = Self::zero(vars, dirs);
        v.coeffs[i] = f;
        v
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn dirs(&self) -> usize {
        self.dirs
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RationalFunction {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RationalFunction::is_zero)
    }

    fn check(&self, other: &VectorField) -> Result<()> {
        if self.vars != other.vars || self.dirs != other.dirs {
            return Err(Error::VariableMismatch(format!(
                "fields over ({}) and ({})",
                self.vars.names().join(", "),
                other.vars.names().join(", ")
            )));
        }
        Ok(())
    }

    /// `D(f) = Σ f_i ∂f/∂x_i`.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        if f.vars() != &self.vars {
            return Err(Error::VariableMismatch(
                "function over a different variable list".into(),
            ));
        }
        let mut out = RationalFunction::zero(self.vars.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.derivative(i);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        Ok(out)
    }

    /// `[a, b]_j = Σ_i (a_i ∂b_j/∂x_i - b_i ∂a_j/∂x_i)`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        self.check(other)?;
        let mut coeffs = Vec::with_capacity(self.dirs);
        for j in 0..self.dirs {
            let ab = self.apply(&other.coeffs[j])?;
            let ba = other.apply(&self.coeffs[j])?;
            coeffs.push(&ab - &ba);
        }
        Ok(VectorField {
            vars: self.vars.clone(),
            dirs: self.dirs,
            coeffs,
        })
    }

    /// `f · D`.
    pub fn scale(&self, f: &RationalFunction) -> VectorField {
        VectorField {
            vars: self.vars.clone(),
            dirs: self.dirs,
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> VectorField {
        VectorField {
            vars: self.vars.clone(),
            dirs: self.dirs,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField> {
        self.check(other)?;
        Ok(self + other)
    }

    /// Parses text such as `-2*x1*d/dx1 - x2*d/dx2` or `0`.
    pub fn parse(src: &str, vars: &Vars, dirs: usize) -> Result<VectorField> {
        let v = Parser::new(src, vars, dirs)?.parse_all()?;
        if !v.scalar.is_zero() {
            return Err(Error::Parse(format!("`{src}` has a term without d/dx")));
        }
        let mut out = Self::zero(vars.clone(), dirs);
        for (i, c) in v.atoms {
            out.coeffs[i] = c;
        }
        Ok(out)
    }

    pub(crate) fn write_terms(&self, out: &mut String, first: &mut bool) {
        for (i, c) in self.coeffs.iter().enumerate() {
            c.fmt_with_suffix(out, first, &format!("d/d{}", self.vars.name(i)), true);
        }
    }

    pub(crate) fn write_terms_latex(&self, out: &mut String, first: &mut bool) {
        for (i, c) in self.coeffs.iter().enumerate() {
            let suffix = format!(
                "\\partial_{{{}}}",
                crate::scalar::latex_name(self.vars.name(i))
            );
            c.fmt_latex_with_suffix(out, first, &suffix);
        }
    }

    /// `-2x_1\partial_{x_1}-x_2\partial_{x_2}`.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        self.write_terms_latex(&mut out, &mut first);
        if first {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for VectorField {
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

// Mixing fields over different variable lists panics, as for polynomials.
impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        assert!(
            self.vars == rhs.vars && self.dirs == rhs.dirs,
            "vector fields over different variables"
        );
        VectorField {
            vars: self.vars.clone(),
            dirs: self.dirs,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        assert!(
            self.vars == rhs.vars && self.dirs == rhs.dirs,
            "vector fields over different variables"
        );
        VectorField {
            vars: self.vars.clone(),
            dirs: self.dirs,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        self.map_coeffs(|c| -c)
    }
}
