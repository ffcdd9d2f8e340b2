//! Integer partitions and the shape operations everything else is built on.
//!
//! A [`Partition`] is stored without trailing zeros. Callers that need a
//! fixed-length vector (weights of length `e`, row budgets `r`) pad with
//! [`Partition::padded`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Zero-based part access; rows past the length read as 0.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `n` entries. Panics if `n < len()`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len(), "cannot pad {} to length {n}", self);
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut out = Vec::with_capacity(cols);
        for j in 0..cols {
            out.push(self.0.iter().take_while(|&&p| p > j).count());
        }
        Partition(out)
    }

    /// Hook number of the cell in (zero-based) row `i`, column `j`.
    pub fn hook(&self, i: usize, j: usize) -> Option<usize> {
        if j >= self.part(i) {
            return None;
        }
        let below = self.0[i + 1..].iter().take_while(|&&p| p > j).count();
        Some(self.0[i] - j + below)
    }

    /// One row of hook numbers per row of the diagram.
    pub fn hook_table(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + conj.0[j] - i - 1).collect())
            .collect()
    }

    /// All hook numbers, row by row.
    pub fn hooks(&self) -> impl Iterator<Item = usize> {
        self.hook_table().into_iter().flatten()
    }

    /// Largest `d` with `λ_d ≥ d` (side of the Durfee square).
    pub fn durfee_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// `self ⊂ other` row by row.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The `λ(m)` construction: `m` extra parts equal to the Durfee rank,
    /// inserted right after the Durfee square.
    pub fn insert_parts(&self, m: usize) -> Partition {
        let d = self.durfee_rank();
        if d == 0 || m == 0 {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.len() + m);
        out.extend_from_slice(&self.0[..d]);
        out.extend(std::iter::repeat_n(d, m));
        out.extend_from_slice(&self.0[d..]);
        Partition(out)
    }

    /// Cellwise addition of `det^k`: adds `k` to every one of the first `e` rows.
    pub fn twist_by_det(&self, k: usize, e: usize) -> Result<Partition> {
        if self.len() > e {
            return Err(Error::TooLong {
                partition: self.clone(),
                length: self.len(),
                limit: e,
            });
        }
        Partition::new(self.padded(e).into_iter().map(|p| p + k).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `""` and `"0"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("bad partition part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// `r` rows by `w` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxSpec {
    rows: usize,
    cols: usize,
}

impl BoxSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(invalid(format!("box must be at least 1x1, got {rows}x{cols}")));
        }
        Ok(BoxSpec { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.len() <= self.rows && p.first() <= self.cols
    }

    pub fn partitions(&self) -> BoxPartitions {
        BoxPartitions::new(self.rows, self.cols)
    }
}

/// Every partition with at most `rows` parts, each at most `cols`.
///
/// Yields weight by weight (ascending), and lexicographically ascending within
/// a weight, so `(1,1)` comes before `(2)`. Unlike [`BoxSpec`], zero-sized
/// boxes are allowed here and yield only the empty partition.
pub fn enumerate_box(rows: usize, cols: usize) -> BoxPartitions {
    BoxPartitions::new(rows, cols)
}

#[derive(Debug, Clone)]
pub struct BoxPartitions {
    rows: usize,
    cols: usize,
    weight: usize,
    buf: std::vec::IntoIter<Partition>,
}

impl BoxPartitions {
    fn new(rows: usize, cols: usize) -> Self {
        BoxPartitions {
            rows,
            cols,
            weight: 0,
            buf: vec![Partition::empty()].into_iter(),
        }
    }
}

impl Iterator for BoxPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.buf.next() {
                return Some(p);
            }
            if self.weight >= self.rows * self.cols {
                return None;
            }
            self.weight += 1;
            let mut level = partitions_of(self.weight, self.cols, self.rows);
            level.reverse();
            self.buf = level.into_iter();
        }
    }
}

/// Partitions of `n` with parts `≤ max_part` and length `≤ max_len`,
/// lexicographically descending.
pub fn partitions_of(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, max_part, max_len, &mut stack, &mut out);
    out
}

fn fill(n: usize, max_part: usize, max_len: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    if max_len == 0 {
        return;
    }
    for first in (1..=n.min(max_part)).rev() {
        // the rest must fit into max_len - 1 parts of size ≤ first
        if first * max_len < n {
            break;
        }
        stack.push(first);
        fill(n - first, first, max_len - 1, stack, out);
        stack.pop();
    }
}

/// Shape of the hook functor `Z^{α,β}`: `(β−α, 1^α)`.
pub fn hook_functor(alpha: usize, beta: usize) -> Result<Partition> {
    if alpha >= beta {
        return Err(invalid(format!("hook functor needs α < β, got α={alpha}, β={beta}")));
    }
    let mut parts = vec![beta - alpha];
    parts.extend(std::iter::repeat_n(1, alpha));
    Partition::new(parts)
}

/// Dimension of the irreducible `GL(e)`-module `S_λ C^e` (hook-content formula).
pub fn schur_dimension(lambda: &Partition, e: usize) -> Result<u128> {
    if lambda.len() > e {
        return Err(Error::TooLong {
            partition: lambda.clone(),
            length: lambda.len(),
            limit: e,
        });
    }
    let table = lambda.hook_table();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, row) in table.iter().enumerate() {
        for (j, &h) in row.iter().enumerate() {
            let content = (e + j - i) as u128;
            num = num
                .checked_mul(content)
                .ok_or(Error::Overflow("schur dimension"))?;
            den = den
                .checked_mul(h as u128)
                .ok_or(Error::Overflow("schur dimension"))?;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hook_table_examples() {
        assert_eq!(
            p(&[4, 2, 1]).hook_table(),
            vec![vec![6, 4, 2, 1], vec![3, 1], vec![1]]
        );
        assert_eq!(p(&[1]).hook_table(), vec![vec![1]]);
        assert_eq!(p(&[2, 2]).hook_table(), vec![vec![3, 2], vec![2, 1]]);
        assert_eq!(p(&[4, 2, 1]).hook(0, 1), Some(4));
        assert_eq!(p(&[4, 2, 1]).hook(1, 2), None);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[3, 2, 1]).durfee_rank(), 2);
        assert_eq!(Partition::empty().durfee_rank(), 0);
        assert_eq!(p(&[5, 5, 2, 2, 2]).durfee_rank(), 2);
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[2, 1]).is_contained_in(&p(&[3, 2, 1])));
        assert!(!p(&[3]).is_contained_in(&p(&[2, 2])));
        assert!(Partition::empty().is_contained_in(&p(&[1])));
        assert!(Partition::empty().is_contained_in(&Partition::empty()));
    }

    #[test]
    fn insert_parts_examples() {
        assert_eq!(p(&[3, 2, 1]).insert_parts(2), p(&[3, 2, 2, 2, 1]));
        assert_eq!(p(&[3, 2, 1]).insert_parts(0), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 2]).insert_parts(1), p(&[2, 2, 2]));
        assert_eq!(Partition::empty().insert_parts(3), Partition::empty());
    }

    #[test]
    fn box_enumeration() {
        let b = BoxSpec::new(1, 1).unwrap();
        assert_eq!(b.partitions().collect::<Vec<_>>(), vec![Partition::empty(), p(&[1])]);
        assert_eq!(BoxSpec::new(2, 2).unwrap().partitions().count(), 6);
        assert_eq!(BoxSpec::new(3, 2).unwrap().partitions().count(), 10);
        let order: Vec<_> = BoxSpec::new(2, 2).unwrap().partitions().collect();
        assert_eq!(
            order,
            vec![
                Partition::empty(),
                p(&[1]),
                p(&[1, 1]),
                p(&[2]),
                p(&[2, 1]),
                p(&[2, 2])
            ]
        );
        assert!(BoxSpec::new(0, 3).is_err());
        assert_eq!(enumerate_box(0, 3).count(), 1);
    }

    #[test]
    fn hook_functor_shapes() {
        assert_eq!(hook_functor(0, 5).unwrap(), p(&[5]));
        assert_eq!(hook_functor(2, 4).unwrap(), p(&[2, 1, 1]));
        assert_eq!(hook_functor(3, 4).unwrap(), p(&[1, 1, 1, 1]));
        assert!(hook_functor(4, 4).is_err());
    }

    #[test]
    fn schur_dimension_examples() {
        assert_eq!(schur_dimension(&p(&[1]), 2).unwrap(), 2);
        assert_eq!(schur_dimension(&p(&[1, 1]), 2).unwrap(), 1);
        assert_eq!(schur_dimension(&p(&[2]), 2).unwrap(), 3);
        assert_eq!(schur_dimension(&p(&[2, 1]), 3).unwrap(), 8);
        assert!(schur_dimension(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3,0".parse::<Partition>().unwrap(), p(&[3]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 2, 1]).to_string(), "4,2,1");
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
