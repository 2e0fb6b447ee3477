use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::sorted::{merge_sub, SortedPoly, Term};
use super::MonomialOrder;
use crate::poly::{MultiIndex, Polynomial};

/// Full reduction of `h` modulo `basis` (all terms, not just the leading one).
/// Divisors are tried in list order.
pub(crate) fn reduce_full(h: &SortedPoly, basis: &[SortedPoly], ord: MonomialOrder) -> SortedPoly {
    let mut rem: Vec<Term> = Vec::new();
    let mut cur = h.terms.clone();
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let shift = m.checked_sub(g.lm()).unwrap();
                let q = c / g.lc();
                cur = merge_sub(&cur[start..], &q, &shift, &g.terms, ord);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    SortedPoly { terms: rem }
}

/// Pending critical pairs, selected by the normal strategy: smallest lcm
/// degree, then smallest lcm in graded-lex, then by index.
struct Pairs {
    pending: BTreeSet<(u32, MultiIndex, usize, usize)>,
    index: BTreeSet<(usize, usize)>,
}

impl Pairs {
    fn new() -> Self {
        Pairs {
            pending: BTreeSet::new(),
            index: BTreeSet::new(),
        }
    }

    fn push(&mut self, i: usize, j: usize, lcm: MultiIndex) {
        self.pending.insert((lcm.degree(), lcm, i, j));
        self.index.insert((i, j));
    }

    fn pop(&mut self) -> Option<(usize, usize, MultiIndex)> {
        let (_, l, i, j) = self.pending.pop_first()?;
        self.index.remove(&(i, j));
        Some((i, j, l))
    }

    fn contains(&self, a: usize, b: usize) -> bool {
        self.index.contains(&(a.min(b), a.max(b)))
    }
}

/// Reduced Gröbner basis for a global order, sorted by leading monomial
/// (largest first), every element monic.
pub(crate) fn reduced_basis(gens: &[Polynomial], ord: MonomialOrder) -> Vec<SortedPoly> {
    debug_assert!(ord.is_global());
    let mut g: Vec<SortedPoly> = Vec::new();
    for p in gens.iter().filter(|p| !p.is_zero()) {
        let mut s = SortedPoly::from_poly(p, ord);
        s.make_monic();
        g.push(s);
    }
    if g.is_empty() {
        return g;
    }
    let nvars = g[0].lm().len();
    if g.iter().any(|s| s.lm().is_zero()) {
        return alloc::vec![SortedPoly::from_poly(&Polynomial::one(nvars), ord)];
    }

    let mut pairs = Pairs::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push(i, j, g[i].lm().lcm(g[j].lm()));
        }
    }
    while let Some((i, j, l)) = pairs.pop() {
        if g[i].lm().is_coprime(g[j].lm()) {
            continue;
        }
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].lm().divides(&l)
                && !pairs.contains(i, k)
                && !pairs.contains(j, k)
        });
        if chain {
            continue;
        }
        let s = SortedPoly::spoly(&g[i], &g[j], ord);
        let mut h = reduce_full(&s, &g, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_zero() {
            return alloc::vec![h];
        }
        let k = g.len();
        for i in 0..k {
            pairs.push(i, k, g[i].lm().lcm(h.lm()));
        }
        g.push(h);
    }

    // keep only elements whose leading monomial is minimal
    let mut keep: Vec<SortedPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || j < i));
        if !redundant {
            keep.push(p.clone());
        }
    }
    for i in 0..keep.len() {
        let others: Vec<SortedPoly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let r = reduce_full(&keep[i], &others, ord);
        keep[i] = r;
        keep[i].make_monic();
    }
    keep.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    keep
}
