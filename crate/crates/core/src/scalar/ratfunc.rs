use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::{forward_owned, Polynomial, Vars};
use super::Rational;
use crate::error::{Error, Result};

/// A quotient `num / den` of polynomials over ℚ in lowest terms.
///
/// Canonical form: `gcd(num, den) = 1` and `den` has coprime integer
/// coefficients with a positive leading coefficient. Two rational functions
/// are equal exactly when their canonical forms are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if num.vars() != den.vars() {
            return Err(Error::VariableMismatch(format!(
                "{:?} vs {:?}",
                num.vars().names(),
                den.vars().names()
            )));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.vars().clone());
        }
        if let Some(c) = den.constant_value() {
            let one = Polynomial::one(num.vars().clone());
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: one,
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_den(num, den)
    }

    /// Scales so the denominator is a primitive integer polynomial with
    /// positive leading coefficient. Assumes `gcd(num, den) = 1`.
    fn normalize_den(num: Polynomial, den: Polynomial) -> Self {
        let s = den.integer_normalizer();
        if s.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn zero(vars: Vars) -> Self {
        RationalFunction {
            num: Polynomial::zero(vars.clone()),
            den: Polynomial::one(vars),
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(vars.clone(), c),
            den: Polynomial::one(vars),
        }
    }

    pub fn var(vars: Vars, i: usize) -> Self {
        Self::from_polynomial(Polynomial::var(vars, i))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = Polynomial::one(p.vars().clone());
        RationalFunction { num: p, den }
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            self.vars() == other.vars(),
            "rational function arithmetic across different variable lists: {:?} vs {:?}",
            self.vars().names(),
            other.vars().names()
        );
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars().clone());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_vars(other);
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        // lowest terms are preserved by powers
        Self::normalize_den(self.num.pow(e), self.den.pow(e))
    }

    /// Formal partial derivative by the quotient rule.
    pub fn derivative(&self, var: usize) -> Self {
        let dn = self.num.derivative(var);
        if self.is_polynomial() {
            return Self::from_polynomial(dn);
        }
        let dd = self.den.derivative(var);
        if dd.is_zero() {
            return Self::reduce(dn, self.den.clone());
        }
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::reduce(num, &self.den * &self.den)
    }

    /// `None` when the denominator vanishes at `point`.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    /// Substitutes a constant for one variable. `None` when the denominator
    /// becomes zero.
    pub fn substitute(&self, var: usize, value: &Rational) -> Option<Self> {
        let d = self.den.substitute(var, value);
        if d.is_zero() {
            return None;
        }
        Some(Self::reduce(self.num.substitute(var, value), d))
    }

    pub fn lift(&self, target: &Vars, map: &[usize]) -> Self {
        // variable renaming preserves lowest terms
        RationalFunction {
            num: self.num.lift(target, map),
            den: self.den.lift(target, map),
        }
    }

    /// Upper bound on the total degree of numerator and denominator.
    pub fn degree_bound(&self) -> u32 {
        let n = self.num.total_degree().finite().unwrap_or(0);
        let d = self.den.total_degree().finite().unwrap_or(0);
        n.max(d)
    }

    /// Fractions pull the rational content of the numerator to the front:
    /// `-1/(2*x1)` renders as `-\frac{1}{2x_1}`.
    pub fn to_latex(&self) -> String {
        if self.is_polynomial() {
            return self.num.to_latex();
        }
        let k = self.num.integer_normalizer();
        let c = k.recip();
        let prim = self.num.scale(&k);
        let sign = if c.is_negative() { "-" } else { "" };
        let (a, b) = (c.numer().abs(), c.denom().clone());
        let scaled = |n: &BigInt, p: &Polynomial| {
            if n.is_one() {
                p.to_latex()
            } else if p.is_one() {
                n.to_string()
            } else if p.len() == 1 {
                format!("{n}{}", p.to_latex())
            } else {
                format!("{n}({})", p.to_latex())
            }
        };
        format!(
            "{sign}\\frac{{{}}}{{{}}}",
            scaled(&a, &prim),
            scaled(&b, &self.den)
        )
    }

    /// Text form with `*suffix` attached, splitting polynomial coefficients
    /// term by term and parenthesizing genuine fractions.
    pub(crate) fn fmt_with_suffix(
        &self,
        out: &mut String,
        first: &mut bool,
        suffix: &str,
        absorbs_one: bool,
    ) {
        if self.is_zero() {
            return;
        }
        if self.is_polynomial() {
            self.num.fmt_terms_with(out, first, suffix, absorbs_one);
            return;
        }
        if !*first {
            out.push_str(" + ");
        }
        *first = false;
        out.push_str(&format!("({})/({})", self.num, self.den));
        if !suffix.is_empty() {
            out.push('*');
            out.push_str(suffix);
        }
    }

    pub(crate) fn fmt_latex_with_suffix(&self, out: &mut String, first: &mut bool, suffix: &str) {
        if self.is_zero() {
            return;
        }
        if self.is_polynomial() {
            self.num.fmt_latex_terms_with(out, first, suffix);
            return;
        }
        let body = self.to_latex();
        if !*first && !body.starts_with('-') {
            out.push('+');
        }
        *first = false;
        out.push_str(&body);
        out.push_str(suffix);
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        if let Some(c) = self.num.constant_value().filter(|c| !c.is_integer()) {
            let den = if self.den.len() > 1 {
                format!("({})", self.den)
            } else {
                self.den.to_string()
            };
            return write!(f, "{}/({}*{den})", c.numer(), c.denom());
        }
        let num = if self.num.len() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        // a bare `x^e` binds tighter than `/`; anything else needs parentheses
        let atom = self.den.leading_term().is_some_and(|(m, c)| {
            self.den.len() == 1 && c.is_one() && m.exps().iter().filter(|&&e| e > 0).count() == 1
        });
        if atom {
            write!(f, "{num}/{}", self.den)
        } else {
            write!(f, "{num}/({})", self.den)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.check_vars(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.is_polynomial() {
                return RationalFunction::from_polynomial(num);
            }
            return RationalFunction::reduce(num, self.den.clone());
        }
        // a/1 + c/d and a/b + c/1 are already in lowest terms
        if self.is_polynomial() {
            let num = &(&self.num * &rhs.den) + &rhs.num;
            return RationalFunction::normalize_den(num, rhs.den.clone());
        }
        if rhs.is_polynomial() {
            let num = &self.num + &(&rhs.num * &self.den);
            return RationalFunction::normalize_den(num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RationalFunction::normalize_den(num, &self.den * &rhs.den);
        }
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        RationalFunction::reduce(num, &(&b * &d) * &g)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        self.check_vars(rhs);
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.vars().clone());
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction::from_polynomial(&self.num * &rhs.num);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        // cross-cancel: (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1))
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = rhs.den.div_exact(&g1).expect("gcd divides");
        let c = rhs.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        RationalFunction::normalize_den(&a * &c, &b * &d)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

forward_owned!(RationalFunction, Add::add, Sub::sub, Mul::mul);

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_polynomial(p)
    }
}
