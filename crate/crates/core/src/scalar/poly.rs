use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_latex, Rational};

/// An ordered list of variable names shared by every polynomial of a ring.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Vars(names.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    /// `x1, …, xk`.
    pub fn xs(k: usize) -> Self {
        Self::prefixed("x", k)
    }

    pub fn prefixed(prefix: &str, k: usize) -> Self {
        Vars::new((1..=k).map(|i| format!("{prefix}{i}")))
    }

    pub fn empty() -> Self {
        Vars::new(Vec::<String>::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Vars) -> Vars {
        Vars::new(self.0.iter().chain(other.0.iter()).cloned())
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl Hash for Vars {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then the larger exponent on the earlier variable wins.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total degree over the first `n` variables.
    pub fn degree_in_first(&self, n: usize) -> u32 {
        self.0[..n.min(self.0.len())].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree of a polynomial; the zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Sparse multivariate polynomial over ℚ. No zero coefficient is ever stored,
/// so the zero polynomial is the empty term map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: Vars) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    pub fn var(vars: Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let m = Monomial::var(vars.len(), i, 1);
        let mut p = Self::zero(vars);
        p.terms.insert(m, Rational::one());
        p
    }

    pub fn monomial(vars: Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), p.vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Degree {
        self.leading_term()
            .map_or(Degree::MinusInfinity, |(m, _)| Degree::Finite(m.degree()))
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|m| m.0[var])
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn occurs(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Bits of all coefficients plus one per term.
    pub fn size(&self) -> usize {
        self.terms
            .values()
            .map(|c| 1 + ((c.numer().bits() + c.denom().bits()) / 64) as usize)
            .sum()
    }

    fn check_vars(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomial arithmetic across different variable lists: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a constant for one variable; the variable stays in the
    /// list with exponent zero everywhere.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut exps = m.0.clone();
            exps[var] = 0;
            out.add_term(
                Monomial(exps),
                c * num_traits::pow(value.clone(), e as usize),
            );
        }
        out
    }

    /// Drops every monomial whose degree in the first `nvars` variables
    /// exceeds `n`.
    pub fn truncate(&self, n: u32, nvars: usize) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in_first(nvars) <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the polynomial over `target`, sending variable `i` to
    /// `target[map[i]]`.
    pub fn lift(&self, target: &Vars, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.vars.len(), "lift map arity");
        let mut out = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_vars(d);
        let (dm, dc) = d.leading_term()?;
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(dm)?;
            let qc = c / dc;
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`;
    /// entry `i` multiplies `var^i` and no longer involves `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = match self.degree_in(var) {
            Degree::MinusInfinity => return Vec::new(),
            Degree::Finite(d) => d as usize,
        };
        let mut out = vec![Polynomial::zero(self.vars.clone()); deg + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::take(&mut exps[var]) as usize;
            out[e].terms.insert(Monomial(exps), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &Vars, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(vars.clone());
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut exps = m.0.clone();
                exps[var] += i as u32;
                out.add_term(Monomial(exps), a.clone());
            }
        }
        out
    }

    /// The positive rational `s` (up to sign) such that `s * self` has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn integer_normalizer(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let s = Rational::new(den_lcm, num_gcd);
        if self.leading_coefficient().is_negative() {
            -s
        } else {
            s
        }
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            let mono = monomial_latex(&self.vars, m);
            if mono.is_empty() {
                out.push_str(&rational_latex(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&rational_latex(&a));
                }
                out.push_str(&mono);
            }
        }
        out
    }

    /// Writes the terms with `suffix` attached to every term, e.g. `*d/dx1`.
    /// A coefficient of ±1 on a constant monomial prints as the suffix alone
    /// when `suffix_absorbs_one` is set.
    pub(crate) fn fmt_terms_with(
        &self,
        out: &mut String,
        first: &mut bool,
        suffix: &str,
        suffix_absorbs_one: bool,
    ) {
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            match (*first, neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            *first = false;
            let a = c.abs();
            let mono = monomial_text(&self.vars, m);
            let mut body = String::new();
            if mono.is_empty() {
                if !(a.is_one() && suffix_absorbs_one) {
                    body.push_str(&a.to_string());
                }
            } else {
                if !a.is_one() {
                    body.push_str(&a.to_string());
                    body.push('*');
                }
                body.push_str(&mono);
            }
            out.push_str(&body);
            if !suffix.is_empty() {
                if !body.is_empty() {
                    out.push('*');
                }
                out.push_str(suffix);
            }
        }
    }

    pub(crate) fn fmt_latex_terms_with(&self, out: &mut String, first: &mut bool, suffix: &str) {
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            match (*first, neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (_, true) => out.push('-'),
                (_, false) => out.push('+'),
            }
            *first = false;
            let a = c.abs();
            let mono = monomial_latex(&self.vars, m);
            if !a.is_one() || (mono.is_empty() && suffix.is_empty()) {
                out.push_str(&rational_latex(&a));
            }
            out.push_str(&mono);
            out.push_str(suffix);
        }
    }
}

fn monomial_text(vars: &Vars, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

fn monomial_latex(vars: &Vars, m: &Monomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        out.push_str(&latex_var(vars.name(i)));
        if e > 1 {
            if e < 10 {
                out.push_str(&format!("^{e}"));
            } else {
                out.push_str(&format!("^{{{e}}}"));
            }
        }
    }
    out
}

/// `x1` → `x_1`, `a_2_3` → `a_{2,3}`, `z12` → `z_{12}`.
pub(crate) fn latex_var(name: &str) -> String {
    let head_len = name
        .find(|c: char| c.is_ascii_digit() || c == '_')
        .unwrap_or(name.len());
    let (head, tail) = name.split_at(head_len);
    let idx: Vec<&str> = tail.split('_').filter(|s| !s.is_empty()).collect();
    if head.is_empty()
        || idx.is_empty()
        || !idx.iter().all(|s| s.chars().all(|c| c.is_ascii_digit()))
    {
        return name.to_string();
    }
    let joined = idx.join(",");
    if joined.len() == 1 {
        format!("{head}_{joined}")
    } else {
        format!("{head}_{{{joined}}}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        self.fmt_terms_with(&mut out, &mut first, "", false);
        f.write_str(&out)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                $tr::$m(&self, rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(Polynomial, Add::add, Sub::sub, Mul::mul);

/// Drops every monomial of total degree greater than `n`.
pub fn jet_reduce(p: &Polynomial, n: u32) -> Polynomial {
    p.truncate(n, p.vars().len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn xy() -> (Polynomial, Polynomial) {
        let v = Vars::xs(2);
        (Polynomial::var(v.clone(), 0), Polynomial::var(v, 1))
    }

    #[test]
    fn grlex_order() {
        // x1^2 > x1*x2 > x2^2 > x1 > x2 > 1
        let ms = [
            Monomial::new(vec![2, 0]),
            Monomial::new(vec![1, 1]),
            Monomial::new(vec![0, 2]),
            Monomial::new(vec![1, 0]),
            Monomial::new(vec![0, 1]),
            Monomial::new(vec![0, 0]),
        ];
        for w in ms.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn printing() {
        let (x1, x2) = xy();
        let p = &(&x1 * &x1).scale(&q(2)) * &x2;
        let p = &p - &Polynomial::constant(x1.vars().clone(), Rational::new(1.into(), 3.into()));
        assert_eq!(p.to_string(), "2*x1^2*x2 - 1/3");
        assert_eq!(p.to_latex(), "2x_1^2x_2 - \\frac{1}{3}");
        assert_eq!((-&x1).to_string(), "-x1");
        assert_eq!(Polynomial::zero(Vars::xs(2)).to_string(), "0");
    }

    #[test]
    fn zero_has_minus_infinity_degree() {
        let z = Polynomial::zero(Vars::xs(2));
        assert_eq!(z.total_degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(
            Polynomial::one(Vars::xs(2)).total_degree(),
            Degree::Finite(0)
        );
    }

    #[test]
    fn derivative_power_rule() {
        let (x1, x2) = xy();
        assert_eq!((&x1 * &x1).derivative(0), x1.scale(&q(2)));
        assert!(x2.derivative(0).is_zero());
    }

    #[test]
    fn exact_division() {
        let (x1, x2) = xy();
        let a = &x1 + &x2;
        let b = &x1 - &x2;
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&x1), None);
    }

    #[test]
    fn jet_truncation() {
        let (x1, x2) = xy();
        let one = Polynomial::one(x1.vars().clone());
        let p = &(&one + &x1) + &(&(&x1 * &x1) * &x2);
        assert_eq!(jet_reduce(&p, 1), &one + &x1);
        let sq = &x1 * &x1;
        assert_eq!(jet_reduce(&sq, 5), sq);
    }

    #[test]
    fn univariate_view_round_trips() {
        let (x1, x2) = xy();
        let p = &(&(&x1 * &x1) * &x2) + &(&x2 - &x1);
        let cs = p.coeffs_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(Polynomial::from_coeffs_in(p.vars(), 0, &cs), p);
    }

    #[test]
    fn latex_variable_names() {
        assert_eq!(latex_var("x1"), "x_1");
        assert_eq!(latex_var("z12"), "z_{12}");
        assert_eq!(latex_var("a_2_3"), "a_{2,3}");
        assert_eq!(latex_var("t"), "t");
    }
}
