//! Littlewood–Richardson coefficients by direct enumeration of LR tableaux.

use std::collections::BTreeMap;

use crate::partition::{partitions_of, Partition};

/// Product `S_λ ⊗ S_μ = ⊕ c^ν_{λμ} S_ν`, keeping only `ν` with at most
/// `max_length` parts (`None` keeps everything).
pub fn lr_product(
    lambda: &Partition,
    mu: &Partition,
    max_length: Option<usize>,
) -> BTreeMap<Partition, u64> {
    let n = lambda.weight() + mu.weight();
    let full_len = lambda.len() + mu.len();
    let len = max_length.map_or(full_len, |m| m.min(full_len));
    let widest = lambda.first() + mu.first();
    let mut out = BTreeMap::new();
    for nu in partitions_of(n, widest, len) {
        if !lambda.is_contained_in(&nu) {
            continue;
        }
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// `c^ν_{λμ}`: the number of LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.is_contained_in(nu) || nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // reading order: rows top to bottom, each row right to left
    let mut cells = Vec::with_capacity(mu.weight());
    for i in 0..nu.len() {
        for j in (lambda.part(i)..nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut filler = Filler {
        lambda,
        mu: mu.parts(),
        cells: &cells,
        grid: nu.parts().iter().map(|&w| vec![0usize; w]).collect(),
        counts: vec![0; mu.len() + 1],
    };
    filler.count(0)
}

struct Filler<'a> {
    lambda: &'a Partition,
    mu: &'a [usize],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Filler<'_> {
    fn count(&mut self, at: usize) -> u64 {
        let Some(&(i, j)) = self.cells.get(at) else {
            return 1;
        };
        let mut hi = self.mu.len();
        if j + 1 < self.grid[i].len() {
            hi = hi.min(self.grid[i][j + 1]);
        }
        let lo = if i > 0 && j >= self.lambda.part(i - 1) {
            self.grid[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            if self.counts[v] >= self.mu[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[i][j] = v;
            total += self.count(at + 1);
            self.counts[v] -= 1;
        }
        self.grid[i][j] = 0;
        total
    }
}
