//! Higher Jacobian matrices, their maximal minors, higher Jacobian ideals and
//! Fitting ideals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ideal::IdealGens;
use crate::poly::{binomial, multiindices, MultiIndex, Polynomial, Rational, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixVersion {
    /// Diagonal entries `r_{β,β}` are zero.
    ZeroDiagonal,
    /// Diagonal entries are `f`.
    FDiagonal,
    /// `f` on the diagonal plus a leading `|α| = 0` column.
    JacobiTaylor,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacobianError {
    #[error("order n must be at least 1")]
    OrderTooSmall,
    #[error("matrix has {rows} rows but only {cols} columns")]
    TooManyRows { rows: usize, cols: usize },
    #[error("minor enumeration supports at most 64 columns, got {0}")]
    TooManyColumns(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianMatrix {
    f: Polynomial,
    n: u32,
    version: MatrixVersion,
    rows: Vec<MultiIndex>,
    cols: Vec<MultiIndex>,
    entries: Vec<Vec<Polynomial>>,
}

impl JacobianMatrix {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn version(&self) -> MatrixVersion {
        self.version
    }

    /// Row multi-indices `β`, `0 <= |β| <= n-1`.
    pub fn row_indices(&self) -> &[MultiIndex] {
        &self.rows
    }

    /// Column multi-indices `α`.
    pub fn col_indices(&self) -> &[MultiIndex] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn grid(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }
}

/// Builds `Jac_n(f)`: rows `β` with `|β| <= n-1`, columns `α` with
/// `1 <= |α| <= n` (and `α = 0` first for [`MatrixVersion::JacobiTaylor`]);
/// the entry at `(β, α)` is `∂^{α-β} f / (α-β)!` when `α >= β`, else zero.
pub fn jac_matrix(
    f: &Polynomial,
    n: u32,
    version: MatrixVersion,
) -> Result<JacobianMatrix, JacobianError> {
    if n < 1 {
        return Err(JacobianError::OrderTooSmall);
    }
    let d = f.nvars();
    let rows = multiindices(d, 0, n - 1);
    let lo = if version == MatrixVersion::JacobiTaylor {
        0
    } else {
        1
    };
    let cols = multiindices(d, lo, n);
    let mut cache: BTreeMap<MultiIndex, Polynomial> = BTreeMap::new();
    let mut entries = Vec::with_capacity(rows.len());
    for beta in &rows {
        let mut row = Vec::with_capacity(cols.len());
        for alpha in &cols {
            let e = match alpha.checked_sub(beta) {
                None => Polynomial::zero(d),
                Some(g) if g.is_zero() && version == MatrixVersion::ZeroDiagonal => {
                    Polynomial::zero(d)
                }
                Some(g) => cache
                    .entry(g.clone())
                    .or_insert_with(|| f.taylor_coefficient(&g).expect("arity matches"))
                    .clone(),
            };
            row.push(e);
        }
        entries.push(row);
    }
    Ok(JacobianMatrix {
        f: f.clone(),
        n,
        version,
        rows,
        cols,
        entries,
    })
}

/// Expected `(rows, cols)` of `Jac_n` for `d` variables under `version`.
pub fn expected_shape(d: usize, n: u32, version: MatrixVersion) -> (usize, usize) {
    let d = d as u64;
    let n = n as u64;
    let rows = binomial(d - 1 + n, d) as usize;
    let all = binomial(d + n, d) as usize;
    match version {
        MatrixVersion::JacobiTaylor => (rows, all),
        _ => (rows, all - 1),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Determinants of `rows` (a `k x c` block, `k <= c`) for every `k`-subset of
/// columns, keyed by column bitmask. Laplace expansion along the top row with
/// the sub-minors of the lower rows shared across subsets; only nonzero
/// values are stored.
fn minors_by_mask(rows: &[&[Polynomial]], ncols: usize) -> BTreeMap<u64, Polynomial> {
    let k = rows.len();
    let mut level: BTreeMap<u64, Polynomial> = BTreeMap::new();
    if k == 0 {
        level.insert(0, Polynomial::one(rows_nvars(rows)));
        return level;
    }
    for (j, e) in rows[k - 1].iter().enumerate() {
        if !e.is_zero() {
            level.insert(1u64 << j, e.clone());
        }
    }
    for t in (0..k - 1).rev() {
        let mut next: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (mask, sub) in &level {
            for j in 0..ncols {
                let bit = 1u64 << j;
                if mask & bit != 0 || rows[t][j].is_zero() {
                    continue;
                }
                let below = (mask & (bit - 1)).count_ones();
                let mut term = &rows[t][j] * sub;
                if below % 2 == 1 {
                    term = -term;
                }
                let slot = next
                    .entry(mask | bit)
                    .or_insert_with(|| Polynomial::zero(term.nvars()));
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        level = next;
    }
    level
}

fn rows_nvars(rows: &[&[Polynomial]]) -> usize {
    rows.iter()
        .flat_map(|r| r.iter())
        .map(Polynomial::nvars)
        .next()
        .unwrap_or(1)
}

fn mask_of(cols: &[usize]) -> u64 {
    cols.iter().fold(0u64, |m, &j| m | (1u64 << j))
}

/// All maximal minors of a `k x c` grid with `k <= c`, one per column subset
/// in lexicographic order of subsets.
pub fn grid_maximal_minors(
    grid: &[Vec<Polynomial>],
    nvars: usize,
) -> Result<Vec<(Vec<usize>, Polynomial)>, JacobianError> {
    let k = grid.len();
    let c = grid.first().map_or(0, Vec::len);
    if k > c {
        return Err(JacobianError::TooManyRows { rows: k, cols: c });
    }
    if c > 64 {
        return Err(JacobianError::TooManyColumns(c));
    }
    let rows: Vec<&[Polynomial]> = grid.iter().map(Vec::as_slice).collect();
    let table = minors_by_mask(&rows, c);
    Ok(subsets(c, k)
        .into_iter()
        .map(|s| {
            let v = table
                .get(&mask_of(&s))
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(nvars));
            (s, v)
        })
        .collect())
}

/// All maximal minors of `m`, in lexicographic order of column subsets.
pub fn maximal_minors(m: &JacobianMatrix) -> Result<Vec<Polynomial>, JacobianError> {
    Ok(grid_maximal_minors(&m.entries, m.f.nvars())?
        .into_iter()
        .map(|(_, v)| v)
        .collect())
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn det_bareiss(square: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let k = square.len();
    if k == 0 {
        return Polynomial::one(nvars);
    }
    let mut a: Vec<Vec<Polynomial>> = square.to_vec();
    let mut prev = Polynomial::one(nvars);
    let mut negate = false;
    for p in 0..k - 1 {
        if a[p][p].is_zero() {
            let Some(swap) = (p + 1..k).find(|&r| !a[r][p].is_zero()) else {
                return Polynomial::zero(nvars);
            };
            a.swap(p, swap);
            negate = !negate;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = &(&a[p][p] * &a[i][j]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][p] = Polynomial::zero(nvars);
        }
        prev = a[p][p].clone();
    }
    let det = a[k - 1][k - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Maximal minors computed one subset at a time with [`det_bareiss`].
pub fn maximal_minors_bareiss(m: &JacobianMatrix) -> Result<Vec<Polynomial>, JacobianError> {
    let k = m.nrows();
    let c = m.ncols();
    if k > c {
        return Err(JacobianError::TooManyRows { rows: k, cols: c });
    }
    let d = m.f.nvars();
    Ok(subsets(c, k)
        .into_iter()
        .map(|s| {
            let sq: Vec<Vec<Polynomial>> = m
                .entries
                .iter()
                .map(|row| s.iter().map(|&j| row[j].clone()).collect())
                .collect();
            det_bareiss(&sq, d)
        })
        .collect())
}

/// `J_n(f)` built from the given matrix version.
pub fn jacobian_ideal_with(
    f: &Polynomial,
    n: u32,
    version: MatrixVersion,
) -> Result<IdealGens, JacobianError> {
    let m = jac_matrix(f, n, version)?;
    Ok(IdealGens::new(f.nvars(), maximal_minors(&m)?))
}

/// The n-th higher Jacobian ideal: maximal minors of the zero-diagonal matrix.
pub fn jacobian_ideal(f: &Polynomial, n: u32) -> Result<IdealGens, JacobianError> {
    jacobian_ideal_with(f, n, MatrixVersion::ZeroDiagonal)
}

/// The `i`-th Fitting ideal of the module presented by `a`: rows index the
/// `N` generators, columns the relations, and the ideal is generated by all
/// `(N - i)`-minors. `<1>` when `N <= i`, `<0>` when no minor of that size
/// exists.
pub fn fitting_ideal(
    a: &[Vec<Polynomial>],
    nvars: usize,
    i: usize,
) -> Result<IdealGens, JacobianError> {
    let big_n = a.len();
    if big_n <= i {
        return Ok(IdealGens::unit(nvars));
    }
    let k = big_n - i;
    let c = a.first().map_or(0, Vec::len);
    if k > c {
        return Ok(IdealGens::zero(nvars));
    }
    if c > 64 {
        return Err(JacobianError::TooManyColumns(c));
    }
    let mut gens = Vec::new();
    for rs in subsets(big_n, k) {
        let rows: Vec<&[Polynomial]> = rs.iter().map(|&r| a[r].as_slice()).collect();
        gens.extend(minors_by_mask(&rows, c).into_values());
    }
    Ok(IdealGens::new(nvars, gens))
}

pub fn transpose(a: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let c = a.first().map_or(0, Vec::len);
    (0..c)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Checks that every row of `Jac_n(f)` is a relation: in the ring of `x` and
/// `δ = x' - x`,
/// `Σ_α r_{β,α} δ^α ≡ δ^β (f(x + δ) - f(x))  mod (δ)^{n+1}`.
/// The right-hand side is computed by substitution, independently of the
/// Taylor coefficients used to fill the matrix.
pub fn verify_kernel_identity(f: &Polynomial, n: u32) -> bool {
    let Ok(m) = jac_matrix(f, n, MatrixVersion::ZeroDiagonal) else {
        return false;
    };
    let d = f.nvars();
    let dd = 2 * d;
    let images: Vec<Polynomial> = (0..d)
        .map(|i| &Polynomial::var(dd, i) + &Polynomial::var(dd, d + i))
        .collect();
    let shifted = f
        .substitute(&Substitution::new(images).expect("nonempty"))
        .expect("arity matches");
    let diff = &shifted - &f.embed(dd, 0);
    let delta_mono = |a: &MultiIndex| {
        let mut v = alloc::vec![0u32; dd];
        v[d..].copy_from_slice(a.entries());
        MultiIndex::new(v)
    };
    for (i, beta) in m.rows.iter().enumerate() {
        let mut lhs = Polynomial::zero(dd);
        for (j, alpha) in m.cols.iter().enumerate() {
            let e = &m.entries[i][j];
            if e.is_zero() {
                continue;
            }
            lhs = &lhs
                + &e.embed(dd, 0)
                    .mul_monomial(&delta_mono(alpha), &Rational::one());
        }
        let rhs = diff.mul_monomial(&delta_mono(beta), &Rational::one());
        let gap = &lhs - &rhs;
        let low = gap
            .terms()
            .any(|(a, _)| a.entries()[d..].iter().sum::<u32>() <= n);
        if low {
            return false;
        }
    }
    true
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = &a[r][c] * &inv;
                for k in c..cols {
                    let delta = &factor * &a[rank][k];
                    a[r][k] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Deterministic evaluation points with small, pairwise distinct coordinates.
fn sample_point(d: usize, k: usize) -> Vec<Rational> {
    (0..d)
        .map(|i| {
            let num = (7 * k + 3 * i + 2) as i64;
            let den = (k + 2 * i + 3) as i64;
            Rational::new(num.into(), den.into())
        })
        .collect()
}

/// Rank of a polynomial matrix over the field of fractions. Specializations at
/// a few rational points give a lower bound; when that bound is not already
/// `min(rows, cols)` the rank is settled by symbolic fraction-free elimination.
pub fn generic_rank_of(grid: &[Vec<Polynomial>], nvars: usize) -> usize {
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    let full = rows.min(cols);
    let mut best = 0;
    for k in 0..3 {
        let pt = sample_point(nvars, k);
        let vals: Vec<Vec<Rational>> = grid
            .iter()
            .map(|r| r.iter().map(|e| e.evaluate(&pt).expect("arity")).collect())
            .collect();
        best = best.max(rational_rank(vals));
        if best == full {
            return best;
        }
    }
    symbolic_rank(grid.to_vec(), nvars)
}

fn symbolic_rank(mut a: Vec<Vec<Polynomial>>, nvars: usize) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = Polynomial::one(nvars);
    let mut rank = 0;
    let mut col_done = alloc::vec![false; cols];
    while rank < rows {
        let pivot = (rank..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !col_done[c] && !a[r][c].is_zero());
        let Some((pr, pc)) = pivot else {
            break;
        };
        a.swap(rank, pr);
        col_done[pc] = true;
        for i in rank + 1..rows {
            let factor = core::mem::replace(&mut a[i][pc], Polynomial::zero(nvars));
            for j in 0..cols {
                if col_done[j] {
                    continue;
                }
                let num = &(&a[rank][pc] * &a[i][j]) - &(&factor * &a[rank][j]);
                a[i][j] = num.exact_div(&prev).expect("fraction-free step is exact");
            }
        }
        prev = a[rank][pc].clone();
        rank += 1;
    }
    rank
}

pub fn generic_rank(m: &JacobianMatrix) -> usize {
    generic_rank_of(&m.entries, m.f.nvars())
}
