use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{
    covering_units, Blowup, DivisorKind, DivisorRecord, Intersection, Locus, ResolutionGraph,
    ResolveError,
};
use crate::poly::{MultiIndex, Polynomial, Rational, Substitution};

fn subst(a: Polynomial, b: Polynomial) -> Substitution {
    Substitution::new(alloc::vec![a, b]).unwrap()
}

fn linear_part(p: &Polynomial) -> (Rational, Rational) {
    (
        p.coeff(&MultiIndex::new(alloc::vec![1, 0])),
        p.coeff(&MultiIndex::new(alloc::vec![0, 1])),
    )
}

/// Blow up the crossing `x` (removed from the graph by the caller).
fn blow_up_crossing(g: &mut ResolutionGraph, x: &Intersection) -> Result<(), ResolveError> {
    let name = format!("{}.{}", x.a, x.b);
    let (Some(cid), Some(Locus::Point(pa, pb))) = (&x.chart, &x.locus) else {
        return Err(ResolveError::NonRationalCenter {
            divisor: name,
            poly: String::from("(no rational point recorded)"),
        });
    };
    let chart = g
        .chart(cid)
        .ok_or_else(|| ResolveError::MissingChart(cid.clone()))?
        .clone();
    let y1 = Polynomial::var(2, 0);
    let y2 = Polynomial::var(2, 1);
    let center = subst(
        &y1 + &Polynomial::constant(2, pa.clone()),
        &y2 + &Polynomial::constant(2, pb.clone()),
    );
    let map0 = chart.map.then(&center)?;
    let mut branches = Vec::new();
    for id in [&x.a, &x.b] {
        let eq = chart.equation(id).ok_or_else(|| ResolveError::NotVisible {
            divisor: id.clone(),
            chart: cid.clone(),
        })?;
        let eq = eq.substitute(&center)?;
        if !eq.constant_term().is_zero() || eq.order() != Some(1) {
            return Err(ResolveError::NotSnc(name));
        }
        branches.push((id.clone(), eq));
    }
    let (la, lb) = (linear_part(&branches[0].1), linear_part(&branches[1].1));
    if (&la.0 * &lb.1 - &la.1 * &lb.0).is_zero() {
        return Err(ResolveError::NotSnc(name));
    }

    let (da, db) = (
        g.divisor(&x.a)
            .ok_or_else(|| ResolveError::UnknownDivisor(x.a.clone()))?
            .clone(),
        g.divisor(&x.b)
            .ok_or_else(|| ResolveError::UnknownDivisor(x.b.clone()))?
            .clone(),
    );
    let new_id = g.fresh_exceptional_id();
    g.blowups.push(Blowup {
        new: new_id.clone(),
        through: alloc::vec![x.a.clone(), x.b.clone()],
    });
    g.divisors.push(DivisorRecord {
        id: new_id.clone(),
        n: da.n + db.n,
        nu: da.nu + db.nu,
        kind: DivisorKind::Exceptional,
    });

    let sa = subst(y1.clone(), &y1 * &y2);
    let sb = subst(&y1 * &y2, y2.clone());
    let map_a = map0.then(&sa)?;
    g.attach_chart(map_a.clone(), alloc::vec![(new_id.clone(), y1.clone())]);
    for (id, eq) in branches {
        let (l1, l2) = linear_part(&eq);
        let (map, visible, exc) = if !l2.is_zero() {
            // meets the new line at y2 = -l1/l2 of the first chart
            let t = -(&l1 / &l2);
            let shift = subst(y1.clone(), &y2 + &Polynomial::constant(2, t));
            let moved = eq
                .substitute(&sa)?
                .div_var_power(0, 1)
                .expect("smooth branch")
                .substitute(&shift)?;
            (map_a.then(&shift)?, moved, y1.clone())
        } else {
            let moved = eq
                .substitute(&sb)?
                .div_var_power(1, 1)
                .expect("smooth branch");
            (map0.then(&sb)?, moved, y2.clone())
        };
        let c = g.attach_chart(
            map,
            alloc::vec![(new_id.clone(), exc), (id.clone(), visible)],
        );
        g.intersections.push(Intersection {
            a: id,
            b: new_id.clone(),
            chart: Some(c),
            locus: Some(Locus::Point(Rational::zero(), Rational::zero())),
        });
    }
    Ok(())
}

/// Blow up crossings with `N_i + N_j <= m` until none is left. The new
/// divisor over a crossing has `N = N_i + N_j` and `nu = nu_i + nu_j`.
///
/// Only crossings at recorded rational points can be blown up; anything
/// else is reported as an error.
pub fn m_separate(g: &ResolutionGraph, m: u64) -> Result<ResolutionGraph, ResolveError> {
    let mut out = g.clone();
    let mut changed = false;
    loop {
        let n = |out: &ResolutionGraph, id: &str| out.divisor(id).map_or(0, |d| d.n);
        let Some(i) = out
            .intersections
            .iter()
            .position(|x| n(&out, &x.a) + n(&out, &x.b) <= m)
        else {
            break;
        };
        let x = out.intersections.remove(i);
        blow_up_crossing(&mut out, &x)?;
        changed = true;
    }
    if !changed {
        return Ok(out);
    }
    out.canonicalize();
    out.derive_strata();
    out.canonicalize();
    if out.source.is_some() {
        out = covering_units(&out)?;
    }
    Ok(out)
}
