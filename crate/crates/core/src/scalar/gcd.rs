//! Multivariate gcd over ℚ: recursive content extraction plus the
//! subresultant polynomial remainder sequence on primitive parts.

use num_traits::One;

use super::poly::Polynomial;

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert!(a.vars() == b.vars(), "gcd across different variable lists");
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars().clone());
    }
    if a == b {
        return a.monic();
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }

    let nvars = a.vars().len();
    let Some(var) = (0..nvars).find(|&v| a.occurs(v) || b.occurs(v)) else {
        return Polynomial::one(a.vars().clone());
    };
    if !b.occurs(var) {
        return gcd(&content_in(a, var), b);
    }
    if !a.occurs(var) {
        return gcd(a, &content_in(b, var));
    }

    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let gc = gcd(&ca, &cb);
    let gp = primitive_prs_gcd(&pa, &pb, var);
    (&gc * &gp).monic()
}

/// Least common multiple, monic.
pub fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.vars().clone());
    }
    let g = gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).monic()
}

fn monomial_gcd(mono: &Polynomial, other: &Polynomial) -> Polynomial {
    let (m, _) = mono.leading_term().expect("nonzero");
    let mut g = m.clone();
    for (n, _) in other.terms() {
        g = g.gcd(n);
        if g.is_one() {
            break;
        }
    }
    Polynomial::monomial(mono.vars().clone(), g, One::one())
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub(crate) fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.vars().clone());
    for c in p.coeffs_in(var).into_iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return Polynomial::one(p.vars().clone());
        }
    }
    g
}

fn degree(coeffs: &[Polynomial]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

fn trim(coeffs: &mut Vec<Polynomial>) {
    while coeffs.last().is_some_and(Polynomial::is_zero) {
        coeffs.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = degree(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r: Vec<Polynomial> = a.to_vec();
    trim(&mut r);
    let da = degree(&r).unwrap_or(0);
    let mut e = (da + 1).saturating_sub(db) as u32;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lead * bc);
        }
        trim(&mut r);
        e = e.saturating_sub(1);
    }
    if e > 0 {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Gcd of two primitive polynomials (in `var`) that both involve `var`.
fn primitive_prs_gcd(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let vars = a.vars().clone();
    let mut f = a.coeffs_in(var);
    let mut g = b.coeffs_in(var);
    if degree(&f) < degree(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    let one = Polynomial::one(vars.clone());
    let mut gg = one.clone();
    let mut h = one;
    loop {
        let df = degree(&f).expect("nonzero");
        let dg = degree(&g).expect("nonzero");
        let delta = (df - dg) as u32;
        let r = pseudo_remainder(&f, &g);
        match degree(&r) {
            None => break,
            Some(0) => return Polynomial::one(vars),
            Some(_) => {}
        }
        let divisor = &gg * &h.pow(delta);
        let next: Vec<Polynomial> = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        f = std::mem::replace(&mut g, next);
        gg = f[degree(&f).expect("nonzero")].clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            d => gg
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant division is exact"),
        };
    }
    let last = Polynomial::from_coeffs_in(&vars, var, &g);
    let cont = content_in(&last, var);
    last.div_exact(&cont).expect("content divides").monic()
}
