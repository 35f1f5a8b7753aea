//! The algebra `M ⋉ (R ⊗ L)` of vector fields acting on `L`-valued
//! functions, and the exponential `e^{ad w}` of a tensor element.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieElement};
use crate::scalar::{Polynomial, Rational, RationalFunction, Vars};
use crate::vector_field::VectorField;

/// `Σ r_j ⊗ l_j` with rational-function coefficients.
pub type TensorElement = LieElement<RationalFunction>;

/// `D + Σ r_j ⊗ l_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DElement {
    vf: VectorField,
    tensor: TensorElement,
}

impl DElement {
    pub fn new(vf: VectorField, tensor: TensorElement) -> Result<Self> {
        if vf.vars() != tensor.ctx() {
            return Err(Error::VariableMismatch(
                "vector field and tensor part over different variables".into(),
            ));
        }
        Ok(DElement { vf, tensor })
    }

    pub fn zero(algebra: Arc<LieAlgebra>, vars: Vars, dirs: usize) -> Self {
        DElement {
            vf: VectorField::zero(vars.clone(), dirs),
            tensor: TensorElement::zero(algebra, vars),
        }
    }

    pub fn from_vf(algebra: Arc<LieAlgebra>, vf: VectorField) -> Self {
        let tensor = TensorElement::zero(algebra, vf.vars().clone());
        DElement { vf, tensor }
    }

    pub fn from_tensor(tensor: TensorElement, dirs: usize) -> Self {
        DElement {
            vf: VectorField::zero(tensor.ctx().clone(), dirs),
            tensor,
        }
    }

    /// `1 ⊗ l` for rational coordinates `l`.
    pub fn constant_tensor(
        algebra: Arc<LieAlgebra>,
        vars: Vars,
        dirs: usize,
        coords: &[Rational],
    ) -> Result<Self> {
        let t = TensorElement::from_rational(algebra, vars, coords)?;
        Ok(Self::from_tensor(t, dirs))
    }

    pub fn vf(&self) -> &VectorField {
        &self.vf
    }

    pub fn tensor(&self) -> &TensorElement {
        &self.tensor
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.tensor.algebra()
    }

    pub fn vars(&self) -> &Vars {
        self.vf.vars()
    }

    pub fn dirs(&self) -> usize {
        self.vf.dirs()
    }

    pub fn is_zero(&self) -> bool {
        self.vf.is_zero() && self.tensor.is_zero()
    }

    pub fn add(&self, other: &DElement) -> Result<DElement> {
        Ok(DElement {
            vf: self.vf.checked_add(&other.vf)?,
            tensor: self.tensor.add(&other.tensor)?,
        })
    }

    pub fn sub(&self, other: &DElement) -> Result<DElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DElement {
        DElement {
            vf: -&self.vf,
            tensor: self.tensor.neg(),
        }
    }

    pub fn scale(&self, f: &RationalFunction) -> DElement {
        DElement {
            vf: self.vf.scale(f),
            tensor: self.tensor.scale(f),
        }
    }

    /// Applies `f` to every coefficient of both parts.
    pub fn map_coeffs(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> DElement {
        DElement {
            vf: self.vf.map_coeffs(&f),
            tensor: self.tensor.map(&f),
        }
    }

    pub fn try_map_coeffs(
        &self,
        f: impl Fn(&RationalFunction) -> Result<RationalFunction>,
    ) -> Result<DElement> {
        let vc = self
            .vf
            .coeffs()
            .iter()
            .map(&f)
            .collect::<Result<Vec<_>>>()?;
        let tc = self
            .tensor
            .coeffs()
            .iter()
            .map(&f)
            .collect::<Result<Vec<_>>>()?;
        Ok(DElement {
            vf: VectorField::new(self.vars().clone(), self.dirs(), vc)?,
            tensor: TensorElement::new(self.algebra().clone(), self.vars().clone(), tc)?,
        })
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        self.vf.write_terms_latex(&mut out, &mut first);
        self.tensor.write_terms_latex(&mut out, &mut first, true);
        if first {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        self.vf.write_terms(&mut out, &mut first);
        self.tensor.write_terms(&mut out, &mut first);
        if first {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `[D1 + t1, D2 + t2] = [D1, D2] + D1(t2) - D2(t1) + [t1, t2]`, with the
/// vector fields acting on tensor coefficients.
pub fn d_bracket(a: &DElement, b: &DElement) -> Result<DElement> {
    let vf = a.vf.bracket(&b.vf)?;
    let mut tensor = a.tensor.bracket(&b.tensor)?;
    let act =
        |d: &VectorField, t: &TensorElement, sign: bool| -> Result<Option<Vec<RationalFunction>>> {
            if d.is_zero() || t.is_zero() {
                return Ok(None);
            }
            let cs = t
                .coeffs()
                .iter()
                .map(|c| {
                    let r = d.apply(c)?;
                    Ok(if sign { r } else { -r })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Some(cs))
        };
    for part in [act(&a.vf, &b.tensor, true)?, act(&b.vf, &a.tensor, false)?]
        .into_iter()
        .flatten()
    {
        let extra = TensorElement::new(a.algebra().clone(), a.vars().clone(), part)?;
        tensor = tensor.add(&extra)?;
    }
    Ok(DElement { vf, tensor })
}

/// Evaluation mode for [`exp_ad`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JetContext {
    /// Exact series; requires `ad w` to be nilpotent on the orbit.
    Exact,
    /// Everything reduced modulo `J^{N+1}`, `J = (x_1, …, x_k)`.
    Truncated(u32),
}

/// `m · (1 + degree bound of the coefficients of a)`, plus one step when
/// `a` has a vector-field part (its first bracket only lands in `R ⊗ L`).
pub fn default_max_steps(a: &DElement) -> usize {
    let deg =
        a.vf.coeffs()
            .iter()
            .chain(a.tensor.coeffs())
            .map(RationalFunction::degree_bound)
            .max()
            .unwrap_or(0) as usize;
    a.algebra().dim() * (1 + deg) + usize::from(!a.vf.is_zero())
}

/// Reduces `f` modulo `J^{n+1}`, where `J` is generated by the first `dirs`
/// variables and the rest are parameters. A denominator that is a unit in
/// the local ring is expanded as a geometric series.
pub fn jet_reduce_rf(f: &RationalFunction, n: u32, dirs: usize) -> Result<RationalFunction> {
    let vars = f.vars().clone();
    let den = f.denom();
    let d0 = den.truncate(0, dirs);
    if d0.is_zero() {
        return Err(Error::JetPole);
    }
    let num = f.numer();
    if &d0 == den {
        let t = num.truncate(n, dirs);
        return Ok(RationalFunction::new(t, den.clone()).expect("nonzero denominator"));
    }
    // 1/den = Σ_k v^k / d0^{k+1} with v = d0 - den ∈ J
    let v = &d0 - den;
    let mut acc = Polynomial::zero(vars.clone());
    let mut vk = Polynomial::one(vars.clone());
    for k in 0..=n {
        let term = (num * &vk).truncate(n, dirs);
        acc = &acc + &(&term * &d0.pow(n - k));
        vk = (&vk * &v).truncate(n, dirs);
        if vk.is_zero() {
            break;
        }
    }
    Ok(RationalFunction::new(acc, d0.pow(n + 1)).expect("nonzero denominator"))
}

/// Whether `f` lies in `J`: no pole at the origin and zero constant part.
pub fn in_ideal_j(f: &RationalFunction, dirs: usize) -> bool {
    !f.denom().truncate(0, dirs).is_zero() && f.numer().truncate(0, dirs).is_zero()
}

pub fn jet_reduce_d(a: &DElement, n: u32) -> Result<DElement> {
    let dirs = a.dirs();
    a.try_map_coeffs(|c| jet_reduce_rf(c, n, dirs))
}

/// `e^{ad w}(a) = Σ_t (ad w)^t(a) / t!` with `ad w(u) = [w, u]`.
///
/// `max_steps` bounds the number of brackets in exact mode; `None` uses
/// [`default_max_steps`].
pub fn exp_ad(
    w: &TensorElement,
    a: &DElement,
    ctx: JetContext,
    max_steps: Option<usize>,
) -> Result<DElement> {
    let dirs = a.dirs();
    let (w, a, limit) = match ctx {
        JetContext::Exact => (
            w.clone(),
            a.clone(),
            max_steps.unwrap_or_else(|| default_max_steps(a)),
        ),
        JetContext::Truncated(n) => {
            if let Some(i) = w.coeffs().iter().position(|c| !in_ideal_j(c, dirs)) {
                return Err(Error::WNotInJ(i));
            }
            // [w, D] = -D(w) differentiates w once, so w is kept one order higher
            let wr = w.map(|c| jet_reduce_rf(c, n + 1, dirs).expect("checked above"));
            // after that first bracket ad w only raises the degree, so n + 2
            // brackets suffice
            (wr, jet_reduce_d(a, n)?, n as usize + 2)
        }
    };
    let wd = DElement::from_tensor(w, dirs);
    let mut sum = a.clone();
    let mut term = a;
    for t in 1..=limit + 1 {
        if term.is_zero() {
            return Ok(sum);
        }
        if t > limit {
            break;
        }
        let inv_t = RationalFunction::constant(
            sum.vars().clone(),
            Rational::new(1.into(), (t as i64).into()),
        );
        term = d_bracket(&wd, &term)?.scale(&inv_t);
        if let JetContext::Truncated(n) = ctx {
            term = jet_reduce_d(&term, n)?;
        }
        if !term.is_zero() {
            sum = sum.add(&term)?;
        }
    }
    Err(Error::NotNilpotent { steps: limit })
}

/// `w = Σ x_i ⊗ l_i` for the given complement elements (rational
/// coordinates), one direction variable per element.
pub fn standard_w(
    algebra: &Arc<LieAlgebra>,
    vars: &Vars,
    complement: &[Vec<Rational>],
) -> Result<TensorElement> {
    let mut w = TensorElement::zero(algebra.clone(), vars.clone());
    for (i, l) in complement.iter().enumerate() {
        let xi = RationalFunction::var(vars.clone(), i);
        let li = TensorElement::from_rational(algebra.clone(), vars.clone(), l)?;
        w = w.add(&li.scale(&xi))?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_rational_function;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sl2() -> Arc<LieAlgebra> {
        Arc::new(
            LieAlgebra::new(
                vec!["h".into(), "e".into(), "f".into()],
                vec![
                    ((0, 1), vec![(1, q(2))]),
                    ((0, 2), vec![(2, q(-2))]),
                    ((1, 2), vec![(0, q(1))]),
                ],
            )
            .unwrap(),
        )
    }

    #[test]
    fn derivation_hits_coefficients() {
        let a = sl2();
        let v = Vars::xs(1);
        let d1 = DElement::from_vf(a.clone(), VectorField::partial(v.clone(), 1, 0));
        let x1e = DElement::from_tensor(
            TensorElement::basis_scaled(a.clone(), 1, RationalFunction::var(v.clone(), 0)),
            1,
        );
        let r = d_bracket(&d1, &x1e).unwrap();
        assert_eq!(r, DElement::from_tensor(TensorElement::basis(a, v, 1), 1));
        assert_eq!(r.to_string(), "1*(e)");
    }

    #[test]
    fn exp_of_nilpotent_w() {
        let a = sl2();
        let v = Vars::xs(1);
        let w = standard_w(&a, &v, &[vec![q(0), q(1), q(0)]]).unwrap();
        let d1 = DElement::from_vf(a.clone(), VectorField::partial(v.clone(), 1, 0));
        let img = exp_ad(&w, &d1, JetContext::Exact, None).unwrap();
        assert_eq!(img.to_string(), "d/dx1 - 1*(e)");
        // e^{ad x e} f = f + x h - x^2 e
        let f = DElement::constant_tensor(a.clone(), v.clone(), 1, &[q(0), q(0), q(1)]).unwrap();
        let img = exp_ad(&w, &f, JetContext::Exact, None).unwrap();
        assert_eq!(img.to_string(), "x1*(h) - x1^2*(e) + 1*(f)");
        assert_eq!(img.to_latex(), "x_1\\otimes h-x_1^2\\otimes e+1\\otimes f");
    }

    #[test]
    fn zero_w_is_identity() {
        let a = sl2();
        let v = Vars::xs(1);
        let w = TensorElement::zero(a.clone(), v.clone());
        let x = DElement::constant_tensor(a, v, 1, &[q(1), q(2), q(3)]).unwrap();
        assert_eq!(exp_ad(&w, &x, JetContext::Exact, None).unwrap(), x);
    }

    #[test]
    fn non_nilpotent_guard() {
        let a = sl2();
        let v = Vars::xs(1);
        let w = standard_w(&a, &v, &[vec![q(1), q(0), q(0)]]).unwrap();
        let e = DElement::constant_tensor(a, v, 1, &[q(0), q(1), q(0)]).unwrap();
        assert!(matches!(
            exp_ad(&w, &e, JetContext::Exact, Some(10)),
            Err(Error::NotNilpotent { steps: 10 })
        ));
        // in jet mode the same series is fine
        let r = exp_ad(&w, &e, JetContext::Truncated(2), None).unwrap();
        assert_eq!(r.to_string(), "2*x1^2*(e) + 2*x1*(e) + 1*(e)");
    }

    #[test]
    fn jet_mode_rejects_w_outside_j() {
        let a = sl2();
        let v = Vars::xs(1);
        let w = TensorElement::basis(a.clone(), v.clone(), 1);
        let x = DElement::zero(a, v, 1);
        assert!(matches!(
            exp_ad(&w, &x, JetContext::Truncated(1), None),
            Err(Error::WNotInJ(1))
        ));
    }

    #[test]
    fn jet_reduction_of_rational_functions() {
        let v = Vars::new(["x1", "z1"]);
        let f = parse_rational_function("1/(1 - x1)", &v).unwrap();
        assert_eq!(
            jet_reduce_rf(&f, 2, 1).unwrap(),
            parse_rational_function("1 + x1 + x1^2", &v).unwrap()
        );
        let g = parse_rational_function("x1/(z1 + x1)", &v).unwrap();
        assert_eq!(
            jet_reduce_rf(&g, 2, 1).unwrap(),
            parse_rational_function("x1/z1 - x1^2/z1^2", &v).unwrap()
        );
        let p = parse_rational_function("1/x1", &v).unwrap();
        assert!(matches!(jet_reduce_rf(&p, 1, 1), Err(Error::JetPole)));
        // parameters do not count toward the degree
        let h = parse_rational_function("z1^5*x1 + x1^3", &v).unwrap();
        assert_eq!(
            jet_reduce_rf(&h, 1, 1).unwrap(),
            parse_rational_function("z1^5*x1", &v).unwrap()
        );
    }
}
