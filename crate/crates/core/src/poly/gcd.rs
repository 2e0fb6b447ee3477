//! Multivariate gcd by primitive pseudo-remainder sequences, treating a
//! polynomial as univariate in its highest variable over the others.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{MultiIndex, Polynomial, Rational};

fn degree_in(p: &Polynomial, v: usize) -> u32 {
    p.terms().map(|(a, _)| a.get(v)).max().unwrap_or(0)
}

fn top_var(p: &Polynomial) -> Option<usize> {
    (0..p.nvars()).rev().find(|&v| degree_in(p, v) > 0)
}

/// Coefficients of `x_v^k`, `k = 0..=deg`, as polynomials free of `x_v`.
fn coeffs_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let mut out = alloc::vec![Polynomial::zero(p.nvars()); degree_in(p, v) as usize + 1];
    for (a, c) in p.terms() {
        let mut e = a.entries().to_vec();
        let k = core::mem::replace(&mut e[v], 0);
        out[k as usize].add_term(MultiIndex::new(e), c.clone());
    }
    out
}

fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    coeffs_in(p, v)
        .iter()
        .fold(Polynomial::zero(p.nvars()), |acc, c| poly_gcd(&acc, c))
}

fn primitive_part_in(p: &Polynomial, v: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    p.exact_div(&content_in(p, v))
        .expect("content divides")
        .primitive()
}

fn leading_in(p: &Polynomial, v: usize) -> (u32, Polynomial) {
    let d = degree_in(p, v);
    (d, coeffs_in(p, v).swap_remove(d as usize))
}

/// Pseudo-remainder of `a` by `b` in `x_v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let (db, lb) = leading_in(b, v);
    let mut r = a.clone();
    loop {
        let (dr, lr) = leading_in(&r, v);
        if r.is_zero() || dr < db {
            return r;
        }
        let shift = MultiIndex::unit(r.nvars(), v);
        let mut t = b.clone();
        for _ in 0..dr - db {
            t = t.mul_monomial(&shift, &Rational::from_integer(1.into()));
        }
        r = (&(&lb * &r) - &(&lr * &t)).primitive();
    }
}

/// Coefficients in `x_v` (lowest first) after setting every other variable
/// to a small integer; `None` if the leading coefficient vanishes there.
fn specialize(p: &Polynomial, v: usize, seed: i64) -> Option<Vec<Rational>> {
    let point: Vec<Rational> = (0..p.nvars())
        .map(|j| Rational::from_integer((seed * (j as i64 + 3) + 1).into()))
        .collect();
    let mut out = Vec::new();
    for c in coeffs_in(p, v) {
        out.push(c.evaluate(&point).expect("arity"));
    }
    (!out.last()?.is_zero()).then_some(out)
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree of the gcd of two univariate polynomials with nonzero leading terms.
fn univariate_gcd_degree(mut a: Vec<Rational>, mut b: Vec<Rational>) -> usize {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        while a.len() >= b.len() {
            let q = a.last().unwrap() / b.last().unwrap();
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[i + shift] -= &q * c;
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// Whether a specialization already shows the primitive parts are coprime.
fn coprime_by_specialization(a: &Polynomial, b: &Polynomial, v: usize) -> bool {
    (1..=3).any(
        |seed| match (specialize(a, v, seed), specialize(b, v, seed)) {
            (Some(x), Some(y)) => univariate_gcd_degree(x, y) == 0,
            _ => false,
        },
    )
}

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient. `gcd(0, g)` is `g` normalized.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert_eq!(f.nvars(), g.nvars());
    if f.is_zero() {
        return g.primitive();
    }
    if g.is_zero() {
        return f.primitive();
    }
    let v = match (top_var(f), top_var(g)) {
        (None, _) | (_, None) => return Polynomial::one(f.nvars()),
        (Some(a), Some(b)) if a != b => {
            // the variable missing from one side can only live in the content
            let (hi, lo, v) = if a > b { (f, g, a) } else { (g, f, b) };
            return poly_gcd(&content_in(hi, v), lo);
        }
        (Some(a), _) => a,
    };
    let c = poly_gcd(&content_in(f, v), &content_in(g, v));
    let (mut a, mut b) = (primitive_part_in(f, v), primitive_part_in(g, v));
    if coprime_by_specialization(&a, &b, v) {
        return c;
    }
    if degree_in(&a, v) < degree_in(&b, v) {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if degree_in(&r, v) == 0 {
            return c;
        }
        a = b;
        b = primitive_part_in(&r, v);
    }
    (&c * &b).primitive()
}

/// `f * g / gcd(f, g)`, primitive.
pub fn poly_lcm(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero(f.nvars());
    }
    (f * g)
        .exact_div(&poly_gcd(f, g))
        .expect("gcd divides the product")
        .primitive()
}
