//! Exact scalars: rationals, sparse multivariate polynomials over ℚ and
//! normalized rational functions, plus the small ring/field abstraction the
//! linear algebra in [`crate::lie`] is written against.

mod gcd;
mod parse;
mod poly;
mod ratfunc;
mod relations;

use std::fmt;

use num_traits::{One, Signed, Zero};

pub use gcd::{gcd, lcm};
pub(crate) use parse::Parser;
pub use parse::{parse_polynomial, parse_rational, parse_rational_function};
pub(crate) use poly::latex_var as latex_name;
pub use poly::{jet_reduce, Degree, Monomial, Polynomial, Vars};
pub use ratfunc::RationalFunction;
pub use relations::rational_relations;

/// Arbitrary-precision rational numbers, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with unit whose elements may need a context (a variable
/// list) to build constants.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Ctx: Clone + PartialEq + fmt::Debug;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &Rational) -> Self;
    fn context(&self) -> Self::Ctx;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    /// Appends `self*suffix` as a signed term of a sum; zero appends nothing.
    /// With `absorbs_one`, a unit coefficient prints as the suffix alone.
    fn write_term(&self, out: &mut String, first: &mut bool, suffix: &str, absorbs_one: bool);
    fn write_term_latex(&self, out: &mut String, first: &mut bool, suffix: &str);
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// Representation size, used to pick pivots during elimination.
    fn size(&self) -> usize;
}

impl Ring for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_rational(_: &(), q: &Rational) -> Self {
        q.clone()
    }
    fn context(&self) {}
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn write_term(&self, out: &mut String, first: &mut bool, suffix: &str, absorbs_one: bool) {
        if Zero::is_zero(self) {
            return;
        }
        push_sign(out, first, self.is_negative(), " + ", " - ");
        let a = self.abs();
        if suffix.is_empty() || !(a.is_one() && absorbs_one) {
            out.push_str(&a.to_string());
            if !suffix.is_empty() {
                out.push('*');
            }
        }
        out.push_str(suffix);
    }
    fn write_term_latex(&self, out: &mut String, first: &mut bool, suffix: &str) {
        if Zero::is_zero(self) {
            return;
        }
        push_sign(out, first, self.is_negative(), "+", "-");
        let a = self.abs();
        if suffix.is_empty() || !a.is_one() {
            out.push_str(&rational_latex(&a));
        }
        out.push_str(suffix);
    }
}

fn push_sign(out: &mut String, first: &mut bool, negative: bool, plus: &str, minus: &str) {
    match (*first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(minus),
        (false, false) => out.push_str(plus),
    }
    *first = false;
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn size(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Ring for Polynomial {
    type Ctx = Vars;

    fn zero(ctx: &Vars) -> Self {
        Polynomial::zero(ctx.clone())
    }
    fn one(ctx: &Vars) -> Self {
        Polynomial::one(ctx.clone())
    }
    fn from_rational(ctx: &Vars, q: &Rational) -> Self {
        Polynomial::constant(ctx.clone(), q.clone())
    }
    fn context(&self) -> Vars {
        self.vars().clone()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn write_term(&self, out: &mut String, first: &mut bool, suffix: &str, absorbs_one: bool) {
        self.fmt_terms_with(out, first, suffix, absorbs_one);
    }
    fn write_term_latex(&self, out: &mut String, first: &mut bool, suffix: &str) {
        self.fmt_latex_terms_with(out, first, suffix);
    }
}

impl Ring for RationalFunction {
    type Ctx = Vars;

    fn zero(ctx: &Vars) -> Self {
        RationalFunction::zero(ctx.clone())
    }
    fn one(ctx: &Vars) -> Self {
        RationalFunction::one(ctx.clone())
    }
    fn from_rational(ctx: &Vars, q: &Rational) -> Self {
        RationalFunction::constant(ctx.clone(), q.clone())
    }
    fn context(&self) -> Vars {
        self.vars().clone()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn write_term(&self, out: &mut String, first: &mut bool, suffix: &str, absorbs_one: bool) {
        self.fmt_with_suffix(out, first, suffix, absorbs_one);
    }
    fn write_term_latex(&self, out: &mut String, first: &mut bool, suffix: &str) {
        self.fmt_latex_with_suffix(out, first, suffix);
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn size(&self) -> usize {
        self.numer().size() + self.denom().size()
    }
}

/// `p/q` or `p`; the form accepted by [`parse_rational`].
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub(crate) fn rational_latex(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
    }
}
