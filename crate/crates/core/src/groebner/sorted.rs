//! Working representation for basis computations: terms kept in a vector
//! sorted descending for one fixed monomial order.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::MonomialOrder;
use crate::poly::{MultiIndex, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(MultiIndex, Rational)>,
}

impl SortedPoly {
    pub fn from_poly(p: &Polynomial, ord: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(a, c)| (a.clone(), c.clone())).collect();
        if ord != MonomialOrder::GradedLex {
            terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        SortedPoly { terms }
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &MultiIndex {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    /// Total degree minus degree of the leading monomial.
    pub fn ecart(&self) -> u32 {
        let top = self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        top - self.lm().degree()
    }

    pub fn make_monic(&mut self) {
        if self.is_zero() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for t in &mut self.terms {
            t.1 *= &inv;
        }
    }

    /// `self - c * x^shift * other`, merging in order.
    pub fn sub_scaled(
        &self,
        c: &Rational,
        shift: &MultiIndex,
        other: &SortedPoly,
        ord: MonomialOrder,
    ) -> SortedPoly {
        SortedPoly {
            terms: merge_sub(&self.terms, c, shift, &other.terms, ord),
        }
    }

    /// S-polynomial of two nonzero polynomials.
    pub fn spoly(f: &SortedPoly, g: &SortedPoly, ord: MonomialOrder) -> SortedPoly {
        let l = f.lm().lcm(g.lm());
        let sf = l.checked_sub(f.lm()).unwrap();
        let sg = l.checked_sub(g.lm()).unwrap();
        let cf = f.lc().recip();
        let scaled_f = SortedPoly {
            terms: f.terms.iter().map(|(a, c)| (a.add(&sf), c * &cf)).collect(),
        };
        scaled_f.sub_scaled(&g.lc().recip(), &sg, g, ord)
    }
}

pub(crate) type Term = (MultiIndex, Rational);

/// `a - c * x^shift * b` for term slices sorted descending in `ord`.
pub(crate) fn merge_sub(
    a: &[Term],
    c: &Rational,
    shift: &MultiIndex,
    b: &[Term],
    ord: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut shifted = b.first().map(|t| t.0.add(shift));
    while i < a.len() || j < b.len() {
        let step = match (a.get(i), &shifted) {
            (Some(x), Some(y)) => ord.cmp(&x.0, y),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match step {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((shifted.take().unwrap(), -(c * &b[j].1)));
                j += 1;
                shifted = b.get(j).map(|t| t.0.add(shift));
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((shifted.take().unwrap(), v));
                }
                i += 1;
                j += 1;
                shifted = b.get(j).map(|t| t.0.add(shift));
            }
        }
    }
    out
}
