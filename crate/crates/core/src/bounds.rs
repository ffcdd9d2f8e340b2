//! Closed-form vanishing bounds for tensor products of hook functors of an
//! ample bundle, and the counting functions they rest on.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{invalid, Result};

/// `t(x) = x(x+1)/2`.
pub fn triangle(x: u64) -> u64 {
    x * (x + 1) / 2
}

/// `C₂(k) = k(k−1)/2`.
pub fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// The unique `d` with `C₂(d) ≤ x < C₂(d+1)`; `δ(0) = 1`.
pub fn delta(x: u64) -> u64 {
    // C₂(d+1) = t(d) > x; start from the float estimate and correct
    let mut d = (((8 * x + 1) as f64).sqrt() as u64).div_ceil(2);
    d = d.max(1);
    while choose2(d) > x {
        d -= 1;
    }
    while choose2(d + 1) <= x {
        d += 1;
    }
    d
}

/// `(δ(x)+σ, x − C₂(δ(x)), σ)`, compared lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrderKey(pub u64, pub u64, pub u64);

pub fn order_key(x: u64, sigma: u64) -> OrderKey {
    let d = delta(x);
    OrderKey(d + sigma, x - choose2(d), sigma)
}

pub fn compare(a: (u64, u64), b: (u64, u64)) -> Ordering {
    order_key(a.0, a.1).cmp(&order_key(b.0, b.1))
}

/// The first `count` elements of `ℕ²` in key order.
pub fn first_elements(count: usize) -> Vec<(u64, u64)> {
    // every key with first entry m has x < C₂(m+1) and σ ≤ m, so a finite scan suffices
    let mut out = Vec::new();
    let mut level = 1u64;
    while out.len() < count {
        let mut layer: Vec<(u64, u64)> = Vec::new();
        for sigma in 0..level {
            for x in 0..choose2(level + 1) {
                if order_key(x, sigma).0 == level {
                    layer.push((x, sigma));
                }
            }
        }
        layer.sort_by_key(|&(x, s)| order_key(x, s));
        out.extend(layer);
        level += 1;
    }
    out.truncate(count);
    out
}

/// Shared data of the vanishing bounds: dimension `n`, `a` hook factors,
/// rank `e`, `k = Σ k_i`, `σ = Σ α_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundInput {
    pub n: u64,
    pub sigma: u64,
    pub a: u64,
    pub e: u64,
    pub k: u64,
}

impl BoundInput {
    pub fn new(n: u64, sigma: u64, a: u64, e: u64, k: u64) -> Self {
        BoundInput { n, sigma, a, e, k }
    }

    fn slope(&self) -> i64 {
        (self.a * self.e) as i64 - self.k as i64 + 2 * self.sigma as i64
    }

    fn shifted(&self, d: u64) -> i64 {
        let s = self.sigma as i64;
        (delta(d) as i64 + s) * self.slope() - s * (s + 1)
    }

    /// `Q(p,σ) = n − p + [δ(n−p)+σ][ae−k+2σ] − σ(σ+1)`; `H^{p,q}` vanishes for `q > Q`.
    pub fn bound_q(&self, p: u64) -> Result<i64> {
        if p > self.n {
            return Err(invalid(format!("p = {p} exceeds n = {}", self.n)));
        }
        let d = self.n - p;
        Ok(d as i64 + self.shifted(d))
    }

    /// `P(q,σ)`, the mirror of [`bound_q`](Self::bound_q).
    pub fn bound_p(&self, q: u64) -> Result<i64> {
        if q > self.n {
            return Err(invalid(format!("q = {q} exceeds n = {}", self.n)));
        }
        let d = self.n - q;
        Ok(d as i64 + self.shifted(d))
    }

    /// Combined criterion with `min(δ(n−p), δ(n−q))`. Degrees above `n` vanish trivially.
    pub fn vanishes(&self, p: u64, q: u64) -> bool {
        if p > self.n || q > self.n {
            return true;
        }
        let dm = delta(self.n - p).min(delta(self.n - q)) as i64;
        let s = self.sigma as i64;
        let rhs = self.n as i64 + (dm + s) * self.slope() - s * (s + 1);
        (p + q) as i64 > rhs
    }
}

/// `n − p + r(σ+τ) + σ(τ−1)`.
pub fn symmetric_form(n: i64, p: i64, r: i64, sigma: i64, tau: i64) -> i64 {
    n - p + r * (sigma + tau) + sigma * (tau - 1)
}

/// `(r−1)a + rb + (s−1)c + sd` for a pair of brackets `[a,b]`, `[c,d]` of hooks.
pub fn bracket_pair_bound(a: u64, b: u64, c: u64, d: u64, r: u64, s: u64) -> Result<u64> {
    if r == 0 || s == 0 {
        return Err(invalid("bracket pair bound needs r, s ≥ 1"));
    }
    Ok((r - 1) * a + r * b + (s - 1) * c + s * d)
}

/// `π_{r,s} = s(2r−s+1)/2`, the largest sum of `s` distinct elements of `{1..r}`.
pub fn pi_rs(r: u64, s: u64) -> Result<u64> {
    if s > r {
        return Err(invalid(format!("need s ≤ r, got s={s}, r={r}")));
    }
    Ok(s * (2 * r - s + 1) / 2)
}

/// `n_s(π)`: the number of `s`-element subsets of `{1..r}` with sum `π`,
/// counted by walking the subsets.
pub fn n_s_count(r: u64, s: u64, pi: i64) -> Result<u64> {
    pi_rs(r, s)?;
    if pi < 0 {
        return Ok(0);
    }
    Ok(count_subsets(1, r, s, pi as u64))
}

fn count_subsets(from: u64, r: u64, s: u64, target: u64) -> u64 {
    if s == 0 {
        return u64::from(target == 0);
    }
    let mut total = 0;
    for i in from..=r {
        if i > target {
            break;
        }
        if r - i + 1 < s {
            break;
        }
        total += count_subsets(i + 1, r, s - 1, target - i);
    }
    total
}

/// `n_s(π)` for every `π` in `0..=π_{r,s}`.
pub fn n_s_table(r: u64, s: u64) -> Result<Vec<u64>> {
    let top = pi_rs(r, s)?;
    // dp[j][π] over elements seen so far
    let s = s as usize;
    let mut dp = vec![vec![0u64; top as usize + 1]; s + 1];
    dp[0][0] = 1;
    for i in 1..=r as usize {
        for j in (1..=s).rev() {
            for pi in (i..=top as usize).rev() {
                dp[j][pi] += dp[j - 1][pi - i];
            }
        }
    }
    Ok(dp.swap_remove(s))
}

/// `Σ_{π_1+…+π_m = π} Π n_{s_i}(π_i)`, by convolving the per-factor tables.
pub fn n_s_product(r: u64, s_list: &[u64], pi: i64) -> Result<u64> {
    let mut acc = vec![1u64];
    for &s in s_list {
        let t = n_s_table(r, s)?;
        let mut next = vec![0u64; acc.len() + t.len() - 1];
        for (i, &x) in acc.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in t.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    if pi < 0 {
        return Ok(0);
    }
    Ok(acc.get(pi as usize).copied().unwrap_or(0))
}
