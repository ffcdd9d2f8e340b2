//! `l`-admissible partitions (no hook equal to `l`) and the bijection with the
//! `(l−1) × r` box given by the row counts of small hooks.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::partition::{enumerate_box, Partition};

fn check_l(l: usize) -> Result<()> {
    if l == 0 {
        return Err(invalid("l must be at least 1"));
    }
    Ok(())
}

/// True iff no cell of `λ` has hook exactly `l`.
pub fn is_admissible(lambda: &Partition, l: usize) -> bool {
    !has_hook(lambda, l)
}

/// True iff some cell of `λ` has hook exactly `d`.
pub fn has_hook(lambda: &Partition, d: usize) -> bool {
    lambda.hooks().any(|h| h == d)
}

/// Per-row count of cells with hook `< l`, padded to `r` entries.
pub fn h_minus(lambda: &Partition, l: usize, r: usize) -> Result<Vec<usize>> {
    check_l(l)?;
    if lambda.len() > r {
        return Err(Error::TooLong {
            partition: lambda.clone(),
            length: lambda.len(),
            limit: r,
        });
    }
    let mut out: Vec<usize> = lambda
        .hook_table()
        .iter()
        .map(|row| row.iter().filter(|&&h| h < l).count())
        .collect();
    out.resize(r, 0);
    Ok(out)
}

/// `h_minus` of the conjugate, padded to `width` entries.
pub fn v_minus(lambda: &Partition, l: usize, width: usize) -> Result<Vec<usize>> {
    h_minus(&lambda.conjugate(), l, width)
}

/// The unique `l`-admissible `λ` with at most `r` rows whose `h_minus` is `ν`.
///
/// Bottom-up recursion `λ_i = λ_{i+l−ν_i} + ν_i` (1-indexed), rows past `r` being 0.
pub fn hat(nu: &[usize], l: usize, r: usize) -> Result<Partition> {
    check_l(l)?;
    if nu.len() > r {
        return Err(invalid(format!("ν has {} entries but r = {r}", nu.len())));
    }
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(nu.to_vec()));
    }
    if let Some(&big) = nu.iter().find(|&&x| x >= l) {
        return Err(invalid(format!("ν has part {big} > l−1 = {}", l - 1)));
    }
    Partition::new(hat_unchecked(nu, l, r))
}

pub(crate) fn hat_unchecked(nu: &[usize], l: usize, r: usize) -> Vec<usize> {
    let mut lam = vec![0usize; r];
    for i in (0..r).rev() {
        let v = nu.get(i).copied().unwrap_or(0);
        let below = i + l - v;
        lam[i] = v + if below < r { lam[below] } else { 0 };
    }
    lam
}

/// `(|ν̂|, #{cells of ν̂ with hook > l})`.
pub fn pq_of(nu: &[usize], l: usize, r: usize) -> Result<(usize, usize)> {
    let lam = hat(nu, l, r)?;
    let q = lam.hooks().filter(|&h| h > l).count();
    Ok((lam.weight(), q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleRecord {
    pub lambda: Partition,
    pub l: usize,
    pub r: usize,
    pub h_minus: Vec<usize>,
    pub v_minus: Vec<usize>,
    pub p: usize,
    pub q: usize,
}

impl AdmissibleRecord {
    /// `v_minus` is padded to `width` (or to `λ_1` when no width is given).
    pub fn new(lambda: Partition, l: usize, r: usize, width: Option<usize>) -> Result<Self> {
        check_l(l)?;
        if !is_admissible(&lambda, l) {
            return Err(invalid(format!("{lambda} is not {l}-admissible")));
        }
        let width = width.unwrap_or(lambda.first());
        if lambda.first() > width {
            return Err(invalid(format!("{lambda} is wider than {width}")));
        }
        let h = h_minus(&lambda, l, r)?;
        let v = v_minus(&lambda, l, width)?;
        let p = lambda.weight();
        let q = p - h.iter().sum::<usize>();
        Ok(AdmissibleRecord {
            lambda,
            l,
            r,
            h_minus: h,
            v_minus: v,
            p,
            q,
        })
    }
}

/// All `l`-admissible partitions with at most `r` rows, as images of `hat`
/// over the `(l−1) × r` box, optionally restricted to first part `≤ width`.
///
/// Records are padded to `width` when given, else to their own first part.
pub fn enumerate_admissible(
    r: usize,
    l: usize,
    width: Option<usize>,
) -> Result<impl Iterator<Item = AdmissibleRecord>> {
    check_l(l)?;
    Ok(enumerate_box(r, l - 1).filter_map(move |nu| {
        let lam = Partition::new(hat_unchecked(&nu.padded(r), l, r)).ok()?;
        if width.is_some_and(|w| lam.first() > w) {
            return None;
        }
        AdmissibleRecord::new(lam, l, r, width).ok()
    }))
}

/// The first `count` elements of the complement in `ℕ` of the hooks of row `i`
/// (zero-based), in increasing order. Starts at 0.
pub fn row_hook_gaps(lambda: &Partition, i: usize, count: usize) -> Vec<usize> {
    let row: Vec<usize> = lambda.hook_table().get(i).cloned().unwrap_or_default();
    (0..).filter(|g| !row.contains(g)).take(count).collect()
}

/// Column (1-based) of the last cell in row `i` whose hook exceeds `g`; 0 if none.
pub fn last_column_above(lambda: &Partition, i: usize, g: usize) -> usize {
    lambda
        .hook_table()
        .get(i)
        .map_or(0, |row| row.iter().take_while(|&&h| h > g).count())
}
