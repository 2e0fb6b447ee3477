//! Dense univariate polynomials over Q, just enough to locate the points
//! where a strict transform meets a new exceptional line.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ResolveError;
use crate::poly::{MultiIndex, Polynomial, Rational};

/// Coefficient of `t^i` at index `i`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Dense(pub Vec<Rational>);

/// Candidate divisors are enumerated by trial division; give up past this.
const TRIAL_LIMIT: u64 = 5_000_000;

impl Dense {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Dense(c)
    }

    /// Restriction of a bivariate polynomial to `x_{fixed} = 0`, as a
    /// polynomial in the other variable.
    pub fn restrict(p: &Polynomial, fixed: usize) -> Self {
        let free = 1 - fixed;
        let mut c: Vec<Rational> = Vec::new();
        for (a, v) in p.terms() {
            if a.get(fixed) != 0 {
                continue;
            }
            let k = a.get(free) as usize;
            if c.len() <= k {
                c.resize(k + 1, Rational::zero());
            }
            c[k] += v;
        }
        Dense::new(c)
    }

    /// The same polynomial as an element of `Q[x_1 .. x_nvars]` in `x_{var}`.
    pub fn to_poly(&self, nvars: usize, var: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.0.iter().enumerate().map(|(k, c)| {
                let mut e = alloc::vec![0u32; nvars];
                e[var] = k as u32;
                (MultiIndex::new(e), c.clone())
            }),
        )
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Dense {
        Dense::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Dense) -> (Dense, Dense) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Dense(Vec::new()), self.clone());
        }
        let mut q = alloc::vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k - dd + j] -= &c * dc;
            }
            q[k - dd] = c;
        }
        (Dense::new(q), Dense::new(r))
    }

    pub fn monic(&self) -> Dense {
        match self.0.last() {
            None => self.clone(),
            Some(l) => Dense(self.0.iter().map(|c| c / l).collect()),
        }
    }

    pub fn gcd(&self, other: &Dense) -> Dense {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divide out `t - r` as often as possible; returns the multiplicity.
    fn strip_root(&mut self, r: &Rational) -> u32 {
        let lin = Dense(alloc::vec![-r.clone(), Rational::one()]);
        let mut k = 0;
        while !self.is_constant() && self.eval(r).is_zero() {
            *self = self.div_rem(&lin).0;
            k += 1;
        }
        k
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, ResolveError> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let limit = n.sqrt();
    let mut i = BigInt::one();
    let mut steps = 0u64;
    while i <= limit {
        steps += 1;
        if steps > TRIAL_LIMIT {
            return Err(ResolveError::CoefficientsTooLarge);
        }
        if n.is_multiple_of(&i) {
            let j = &n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Rational roots with multiplicities (ascending), and the cofactor that has
/// no rational root.
pub(crate) fn rational_roots(p: &Dense) -> Result<(Vec<(Rational, u32)>, Dense), ResolveError> {
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    if rest.is_constant() {
        return Ok((roots, rest));
    }
    let zero = Rational::zero();
    let k = rest.strip_root(&zero);
    if k > 0 {
        roots.push((zero, k));
    }
    if !rest.is_constant() {
        let den = rest
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = rest
            .0
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().unwrap())?;
        let mut cands: Vec<Rational> = Vec::new();
        for pn in &ps {
            for qd in &qs {
                let c = Rational::new(pn.clone(), qd.clone());
                cands.push(c.clone());
                cands.push(-c);
            }
        }
        cands.sort();
        cands.dedup();
        for c in cands {
            if rest.is_constant() {
                break;
            }
            let k = rest.strip_root(&c);
            if k > 0 {
                roots.push((c, k));
            }
        }
    }
    roots.sort();
    Ok((roots, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};
    use alloc::string::ToString;

    fn dense(c: &[i64]) -> Dense {
        Dense::new(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn roots_and_cofactor() {
        // (t - 1)^2 (2t + 3) (t^2 + 1) t
        let p = dense(&[0, 3, -4, 2, -2, -1, 2]);
        let (roots, rest) = rational_roots(&p).unwrap();
        assert_eq!(roots, [(ratio(-3, 2), 1), (rat(0), 1), (rat(1), 2)]);
        assert_eq!(rest.monic(), dense(&[1, 0, 1]));
    }

    #[test]
    fn gcd_and_derivative() {
        let p = dense(&[1, 2, 1]);
        assert_eq!(p.gcd(&p.derivative()), dense(&[1, 1]));
        assert!(dense(&[1, 0, 1]).gcd(&dense(&[-2, 0, 1])).is_constant());
    }

    #[test]
    fn restriction() {
        let p = crate::poly::parse_poly("x1*x2 + x2^2 - 3 + x1", 2).unwrap();
        assert_eq!(Dense::restrict(&p, 0), dense(&[-3, 0, 1]));
        assert_eq!(Dense::restrict(&p, 0).to_poly(2, 1).to_string(), "x2^2 - 3");
    }
}
