use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::poly::{Polynomial, Substitution};

/// A canonical generator list.
///
/// Zero generators are dropped, every generator is scaled to an integer
/// polynomial with content 1 and positive leading coefficient, duplicates are
/// removed and the list is sorted by leading monomial, largest first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdealGens {
    nvars: usize,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut out: Vec<Polynomial> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "generator arity mismatch"))
            .filter(|g| !g.is_zero())
            .map(|g| g.primitive())
            .collect();
        out.sort_by(|a, b| cmp_desc(b, a));
        out.dedup();
        IdealGens { nvars, gens: out }
    }

    pub fn unit(nvars: usize) -> Self {
        IdealGens::new(nvars, [Polynomial::one(nvars)])
    }

    pub fn zero(nvars: usize) -> Self {
        IdealGens {
            nvars,
            gens: Vec::new(),
        }
    }

    /// The maximal ideal at the origin.
    pub fn maximal(nvars: usize) -> Self {
        IdealGens::new(nvars, (0..nvars).map(|i| Polynomial::var(nvars, i)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether some generator is a nonzero constant (the ideal is `<1>`).
    pub fn has_constant(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant())
    }

    pub fn sum(&self, other: &IdealGens) -> IdealGens {
        assert_eq!(self.nvars, other.nvars);
        IdealGens::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &IdealGens) -> IdealGens {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a * b);
            }
        }
        IdealGens::new(self.nvars, out)
    }

    /// `I^k`; the zeroth power is `<1>`.
    pub fn power(&self, k: u32) -> IdealGens {
        let mut acc = IdealGens::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn with(&self, extra: Polynomial) -> IdealGens {
        IdealGens::new(self.nvars, self.gens.iter().cloned().chain([extra]))
    }

    /// Generator-wise substitution.
    pub fn apply(&self, sigma: &Substitution) -> Result<IdealGens, crate::poly::PolyError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute(sigma))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IdealGens::new(sigma.target_nvars(), gens))
    }
}

/// Compare two polynomials term by term from the top (graded-lex).
fn cmp_desc(a: &Polynomial, b: &Polynomial) -> Ordering {
    let mut ia = a.terms();
    let mut ib = b.terms();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((ma, ca)), Some((mb, cb))) => {
                let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
    }
}

impl fmt::Display for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealGens{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use alloc::string::ToString;

    fn ideal(d: usize, gens: &[&str]) -> IdealGens {
        IdealGens::new(d, gens.iter().map(|s| parse_poly(s, d).unwrap()))
    }

    #[test]
    fn canonical_form() {
        let i = ideal(2, &["-2*x2", "3*x1^2", "0", "x2"]);
        assert_eq!(i.to_string(), "<x1^2, x2>");
        let j = ideal(2, &["1/2*x1 - 1/3", "4*x1*x2^2 - 3*x1^4"]);
        assert_eq!(j.to_string(), "<3*x1^4 - 4*x1*x2^2, 3*x1 - 2>");
        assert!(ideal(2, &["0"]).is_empty());
    }

    #[test]
    fn arithmetic() {
        let m = IdealGens::maximal(2);
        assert_eq!(m.power(2), ideal(2, &["x1^2", "x1*x2", "x2^2"]));
        assert_eq!(m.power(0), IdealGens::unit(2));
        assert_eq!(m.product(&IdealGens::unit(2)), m);
        let j1 = ideal(2, &["x1^2", "x2"]);
        assert_eq!(
            j1.power(3),
            ideal(2, &["x1^6", "x1^4*x2", "x1^2*x2^2", "x2^3"])
        );
    }

    #[test]
    fn substitution() {
        let swap = Substitution::new(alloc::vec![
            parse_poly("x2", 2).unwrap(),
            parse_poly("x1", 2).unwrap()
        ])
        .unwrap();
        assert_eq!(ideal(2, &["x1"]).apply(&swap).unwrap(), ideal(2, &["x2"]));
        let i = ideal(2, &["x1^2", "x2"]);
        assert_eq!(i.apply(&Substitution::identity(2)).unwrap(), i);
    }
}
