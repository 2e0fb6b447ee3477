//! Gröbner bases for global orders and standard bases for the local order.

mod buchberger;
mod mora;
mod order;
mod sorted;

use alloc::vec::Vec;

pub use order::MonomialOrder;

use crate::ideal::IdealGens;
use crate::poly::{MultiIndex, PolyError, Polynomial, Substitution};
use sorted::SortedPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("the local order needs a standard basis, not a Gröbner basis")]
    LocalOrder,
}

/// Generators together with a computed basis: the reduced Gröbner basis for a
/// global order, a minimal standard basis for [`MonomialOrder::LocalGraded`].
#[derive(Clone, Debug)]
pub struct OrderedIdeal {
    gens: IdealGens,
    order: MonomialOrder,
    basis: Vec<SortedPoly>,
    corner: Option<u32>,
}

impl OrderedIdeal {
    pub fn gens(&self) -> &IdealGens {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.gens.nvars()
    }

    pub fn basis(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|p| p.to_poly(self.nvars())).collect()
    }

    /// Leading monomials of the basis, in basis order.
    pub fn leading_monomials(&self) -> Vec<MultiIndex> {
        self.basis.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|p| p.lm().is_zero())
    }

    /// Full normal form (global) or Mora weak normal form (local).
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars(), "arity mismatch");
        let h = SortedPoly::from_poly(f, self.order);
        let r = if self.order.is_global() {
            buchberger::reduce_full(&h, &self.basis, self.order)
        } else {
            mora::weak_normal_form(&h, &self.basis, self.corner)
        };
        r.to_poly(self.nvars())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        if self.is_unit() {
            return true;
        }
        self.normal_form(f).is_zero()
    }
}

pub fn groebner_basis(
    ideal: &IdealGens,
    order: MonomialOrder,
) -> Result<OrderedIdeal, GroebnerError> {
    if !order.is_global() {
        return Err(GroebnerError::LocalOrder);
    }
    Ok(OrderedIdeal {
        gens: ideal.clone(),
        order,
        basis: buchberger::reduced_basis(ideal.gens(), order),
        corner: None,
    })
}

pub fn standard_basis(ideal: &IdealGens) -> OrderedIdeal {
    let b = mora::standard_basis(ideal.gens());
    OrderedIdeal {
        gens: ideal.clone(),
        order: MonomialOrder::LocalGraded,
        basis: b.elems,
        corner: b.corner,
    }
}

/// Basis for any order: Buchberger for global orders, Mora for the local one.
pub fn basis_for(ideal: &IdealGens, order: MonomialOrder) -> OrderedIdeal {
    if order.is_global() {
        groebner_basis(ideal, order).expect("global order")
    } else {
        standard_basis(ideal)
    }
}

pub fn membership(f: &Polynomial, ideal: &OrderedIdeal) -> bool {
    ideal.contains(f)
}

/// Ideal equality. In the local order this is equality in the localization
/// at the origin.
pub fn ideal_equal(i: &IdealGens, j: &IdealGens, order: MonomialOrder) -> bool {
    assert_eq!(i.nvars(), j.nvars(), "arity mismatch");
    let bi = basis_for(i, order);
    let bj = basis_for(j, order);
    if order.is_global() {
        return bi.basis == bj.basis;
    }
    j.gens().iter().all(|g| bi.contains(g)) && i.gens().iter().all(|g| bj.contains(g))
}

/// The first generator of `sub` not contained in `sup`, if any.
pub fn first_non_member(sub: &IdealGens, sup: &OrderedIdeal) -> Option<Polynomial> {
    sub.gens().iter().find(|g| !sup.contains(g)).cloned()
}

pub fn ideal_sum(i: &IdealGens, j: &IdealGens) -> IdealGens {
    i.sum(j)
}

pub fn ideal_product(i: &IdealGens, j: &IdealGens) -> IdealGens {
    i.product(j)
}

pub fn ideal_power(i: &IdealGens, k: u32) -> IdealGens {
    i.power(k)
}

pub fn apply_automorphism(i: &IdealGens, sigma: &Substitution) -> Result<IdealGens, PolyError> {
    i.apply(sigma)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite { dim: usize, basis: Vec<MultiIndex> },
    Infinite,
}

impl QuotientDimension {
    pub fn dim(&self) -> Option<usize> {
        match self {
            QuotientDimension::Finite { dim, .. } => Some(*dim),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Standard monomials outside the monomial ideal generated by `lms`,
/// in the matrix enumeration order (degree first).
fn standard_monomials(nvars: usize, lms: &[MultiIndex]) -> QuotientDimension {
    if lms.iter().any(MultiIndex::is_zero) {
        return QuotientDimension::Finite {
            dim: 0,
            basis: Vec::new(),
        };
    }
    let mut bound = alloc::vec![0u32; nvars];
    for (i, b) in bound.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| {
                m.entries()
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| j == i || e == 0)
            })
            .map(|m| m.get(i))
            .min();
        match pure {
            Some(e) => *b = e,
            None => return QuotientDimension::Infinite,
        }
    }
    let max_deg: u32 = bound.iter().map(|b| b - 1).sum();
    let mut basis = Vec::new();
    for k in 0..=max_deg {
        for m in crate::poly::multiindices_of_degree(nvars, k) {
            if m.entries().iter().zip(&bound).all(|(e, b)| e < b)
                && !lms.iter().any(|l| l.divides(&m))
            {
                basis.push(m);
            }
        }
    }
    QuotientDimension::Finite {
        dim: basis.len(),
        basis,
    }
}

/// Vector-space dimension of the local quotient at the origin.
pub fn local_dimension(ideal: &IdealGens) -> QuotientDimension {
    local_dimension_of(&standard_basis(ideal))
}

pub fn local_dimension_of(sb: &OrderedIdeal) -> QuotientDimension {
    assert!(!sb.order.is_global());
    standard_monomials(sb.nvars(), &sb.leading_monomials())
}

/// Vector-space dimension of the global quotient `Q[x]/I`.
pub fn global_dimension(ideal: &IdealGens) -> QuotientDimension {
    let gb = groebner_basis(ideal, MonomialOrder::GradedRevLex).expect("global order");
    standard_monomials(ideal.nvars(), &gb.leading_monomials())
}

/// Least common multiple via the elimination `(t<f> + (1-t)<g>) ∩ Q[x]`.
pub fn lcm_by_elimination(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert_eq!(f.nvars(), g.nvars());
    let d = f.nvars();
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero(d);
    }
    let t = Polynomial::var(d + 1, 0);
    let one_minus_t = &Polynomial::one(d + 1) - &t;
    let gens = [&t * &f.embed(d + 1, 1), &one_minus_t * &g.embed(d + 1, 1)];
    let gb = buchberger::reduced_basis(&gens, MonomialOrder::Lex);
    let elim = gb
        .iter()
        .map(|p| p.to_poly(d + 1))
        .find(|p| p.terms().all(|(a, _)| a.get(0) == 0))
        .expect("intersection of principal ideals is principal and nonzero");
    let mut out = Polynomial::zero(d);
    for (a, c) in elim.terms() {
        out.add_term(MultiIndex::new(a.entries()[1..].to_vec()), c.clone());
    }
    out.primitive()
}

/// Gcd as `f*g / lcm`, with the lcm from elimination. Much slower than
/// [`crate::poly::poly_gcd`]; kept as an independent route for checking it.
pub fn gcd_by_elimination(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.primitive();
    }
    if g.is_zero() {
        return f.primitive();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.nvars());
    }
    let l = lcm_by_elimination(f, g);
    (f * g)
        .exact_div(&l)
        .expect("lcm divides the product")
        .primitive()
}
