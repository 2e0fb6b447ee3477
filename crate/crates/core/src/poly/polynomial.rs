use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::multi_index::MultiIndex;
use super::PolyError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex order; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "polynomials need at least one variable");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), Rational::one())
    }

    pub fn monomial(alpha: MultiIndex, c: Rational) -> Self {
        let mut p = Polynomial::zero(alpha.len());
        if !c.is_zero() {
            p.terms.insert(alpha, c);
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (a, c) in terms {
            assert_eq!(a.len(), nvars, "term arity mismatch");
            p.add_term(a, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|a| a.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Rational {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Highest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|a| a.degree()).max()
    }

    /// Lowest total degree of a term (order of vanishing at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|a| a.degree()).min()
    }

    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.degree() == k)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of total degree above `k`.
    pub fn truncate(&self, k: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.degree() <= k)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest exponent of variable `i` over all terms.
    pub fn valuation_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|a| a.get(i)).min()
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&alpha) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&alpha);
                }
            }
            None => {
                self.terms.insert(alpha, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, b)| (a.clone(), b * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, alpha: &MultiIndex, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.add(alpha), b * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
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

    /// `d f / d x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            let e = a.get(i);
            if e == 0 {
                continue;
            }
            let mut v = a.clone().into_vec();
            v[i] -= 1;
            out.terms.insert(
                MultiIndex::new(v),
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    /// Iterated partial derivative `∂^α f`.
    pub fn partial_derivative(&self, alpha: &MultiIndex) -> Result<Polynomial, PolyError> {
        self.check_arity(alpha.len())?;
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            let Some(rest) = a.checked_sub(alpha) else {
                continue;
            };
            // falling factorial a!/(a-α)!
            let mut k = BigUint::one();
            for (ai, bi) in a.entries().iter().zip(alpha.entries()) {
                for t in (ai - bi + 1)..=*ai {
                    k *= t;
                }
            }
            out.terms
                .insert(rest, c * Rational::from_integer(BigInt::from(k)));
        }
        Ok(out)
    }

    /// Normalized Taylor coefficient `∂^α f / α!`.
    pub fn taylor_coefficient(&self, alpha: &MultiIndex) -> Result<Polynomial, PolyError> {
        self.check_arity(alpha.len())?;
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            let Some(rest) = a.checked_sub(alpha) else {
                continue;
            };
            // binomial product prod_i C(a_i, α_i)
            let mut k = BigUint::one();
            for (ai, bi) in a.entries().iter().zip(alpha.entries()) {
                k *= binomial_big(*ai, *bi);
            }
            out.terms
                .insert(rest, c * Rational::from_integer(BigInt::from(k)));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        self.check_arity(point.len())?;
        let mut acc = Rational::zero();
        for (a, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(a.entries()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replace each variable by its image and expand.
    pub fn substitute(&self, sigma: &Substitution) -> Result<Polynomial, PolyError> {
        self.check_arity(sigma.len())?;
        let target = sigma.target_nvars();
        // cache powers of each image
        let mut powers: Vec<Vec<Polynomial>> = sigma
            .images
            .iter()
            .map(|p| alloc::vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (a, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in a.entries().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-embed into a ring with `nvars` variables, sending `x_i` to `x_{i + offset}`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Polynomial {
        assert!(offset + self.nvars <= nvars);
        let mut out = Polynomial::zero(nvars);
        for (a, c) in &self.terms {
            let mut v = alloc::vec![0u32; nvars];
            v[offset..offset + self.nvars].copy_from_slice(a.entries());
            out.terms.insert(MultiIndex::new(v), c.clone());
        }
        out
    }

    /// Divide by `x_i^k`; `None` unless every term is divisible.
    pub fn div_var_power(&self, i: usize, k: u32) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            if a.get(i) < k {
                return None;
            }
            let mut v = a.clone().into_vec();
            v[i] -= k;
            out.terms.insert(MultiIndex::new(v), c.clone());
        }
        Some(out)
    }

    /// Multivariate division by a single divisor; returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lm, lc) = divisor.leading_term().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut quo = Polynomial::zero(self.nvars);
        let mut rem = Polynomial::zero(self.nvars);
        let mut h = self.clone();
        while let Some((a, c)) = h.leading_term() {
            let (a, c) = (a.clone(), c.clone());
            match a.checked_sub(&lm) {
                Some(shift) => {
                    let q = &c / &lc;
                    h = &h - &divisor.mul_monomial(&shift, &q);
                    quo.add_term(shift, q);
                }
                None => {
                    h.terms.remove(&a);
                    rem.add_term(a, c);
                }
            }
        }
        (quo, rem)
    }

    /// Exact quotient, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Rescale to an integer polynomial with coprime coefficients and a positive
    /// graded-lex leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        let (_, lc) = self.leading_term().unwrap();
        if lc.is_negative() {
            num = -num;
        }
        self.scale(&Rational::new(den, num))
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    fn check_arity(&self, n: usize) -> Result<(), PolyError> {
        if n != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: n,
            });
        }
        Ok(())
    }

    /// Canonical text with variables named `{prefix}1 .. {prefix}d`,
    /// terms in descending graded-lex order.
    pub fn to_text(&self, prefix: &str) -> String {
        let mut s = String::new();
        self.write_text(&mut s, prefix).unwrap();
        s
    }

    fn write_text<W: fmt::Write>(&self, w: &mut W, prefix: &str) -> fmt::Result {
        if self.is_zero() {
            return w.write_str("0");
        }
        for (k, (a, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    w.write_str("-")?;
                }
            } else {
                w.write_str(if neg { " - " } else { " + " })?;
            }
            let c = c.abs();
            let mut first = true;
            if a.is_zero() || !c.is_one() {
                write!(w, "{c}")?;
                first = false;
            }
            for (i, &e) in a.entries().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    w.write_char('*')?;
                }
                first = false;
                write!(w, "{prefix}{}", i + 1)?;
                if e > 1 {
                    write!(w, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

fn binomial_big(n: u32, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_text(f, "x")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch in add");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (a, c) in &small.terms {
            big.add_term(a.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch in sub");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch in mul");
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, e) in &rhs.terms {
                out.add_term(a.add(b), c * e);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A polynomial map given by the images of `x_1 .. x_d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    images: Vec<Polynomial>,
}

impl Substitution {
    pub fn new(images: Vec<Polynomial>) -> Result<Self, PolyError> {
        let Some(first) = images.first() else {
            return Err(PolyError::EmptySubstitution);
        };
        let n = first.nvars();
        if let Some(bad) = images.iter().find(|p| p.nvars() != n) {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                found: bad.nvars(),
            });
        }
        Ok(Substitution { images })
    }

    pub fn identity(d: usize) -> Self {
        Substitution {
            images: (0..d).map(|i| Polynomial::var(d, i)).collect(),
        }
    }

    /// Number of source variables.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn target_nvars(&self) -> usize {
        self.images[0].nvars()
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// `self ∘ inner`: first apply `self`, then substitute `inner` into the images.
    pub fn then(&self, inner: &Substitution) -> Result<Substitution, PolyError> {
        let images = self
            .images
            .iter()
            .map(|p| p.substitute(inner))
            .collect::<Result<Vec<_>, _>>()?;
        Substitution::new(images)
    }

    /// Whether every image vanishes at the origin.
    pub fn fixes_origin(&self) -> bool {
        self.images.iter().all(|p| p.constant_term().is_zero())
    }

    /// Linear part at the origin as a row-major `d x d` rational matrix
    /// (`[i][j]` = coefficient of `x_j` in image `i`).
    pub fn linear_part(&self) -> Vec<Vec<Rational>> {
        let n = self.target_nvars();
        self.images
            .iter()
            .map(|p| (0..n).map(|j| p.coeff(&MultiIndex::unit(n, j))).collect())
            .collect()
    }
}
