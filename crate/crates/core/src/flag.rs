//! Cohomology of the line bundles `Q^{l+1,l}` on two-step flag varieties
//! `M_{s,r}(V)` and of their exterior products, in closed form.
//!
//! Each component is a hook functor `Z^{k−α−1,k} V` with `k = rl + s`. The
//! closed forms are only asserted for `π ≥ Σ π_{r,s_i} − k + l`, where
//! `π = p − λ·t(r)` and `λ = Σ(l_i − 1)`; below that these functions refuse
//! with [`Error::OutsideValidity`] rather than answer zero.

use serde::Serialize;

use crate::bounds::{n_s_product, pi_rs, triangle};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FlagFactor {
    pub s: u64,
    pub l: u64,
}

impl FlagFactor {
    pub fn new(s: u64, l: u64) -> Self {
        FlagFactor { s, l }
    }

    pub fn k(&self, r: u64) -> u64 {
        r * self.l + self.s
    }

    /// Parses `s:l`.
    pub fn parse(text: &str) -> Result<FlagFactor> {
        let (s, l) = text
            .split_once(':')
            .ok_or_else(|| invalid(format!("factor `{text}` is not of the form s:l")))?;
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| invalid(format!("bad number `{t}` in factor `{text}`")))
        };
        Ok(FlagFactor::new(num(s)?, num(l)?))
    }
}

fn check_factors(e: u64, r: u64, factors: &[FlagFactor]) -> Result<()> {
    if factors.is_empty() {
        return Err(invalid("at least one flag factor is needed"));
    }
    for f in factors {
        if !(0 < f.s && f.s < r && r < e) {
            return Err(invalid(format!(
                "need 0 < s < r < e, got s={}, r={r}, e={e}",
                f.s
            )));
        }
        if f.l == 0 {
            return Err(invalid("each factor needs l ≥ 1"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
struct Totals {
    lambda: u64,
    l: u64,
    s: u64,
    k: u64,
    pi_sum: u64,
}

fn totals(r: u64, factors: &[FlagFactor]) -> Result<Totals> {
    let mut t = Totals {
        lambda: 0,
        l: 0,
        s: 0,
        k: 0,
        pi_sum: 0,
    };
    for f in factors {
        t.lambda += f.l - 1;
        t.l += f.l;
        t.s += f.s;
        t.k += f.k(r);
        t.pi_sum += pi_rs(r, f.s)?;
    }
    Ok(t)
}

/// The window check shared by both formulas. Returns `π`.
fn reduced_pi(p: u64, r: u64, t: &Totals) -> Result<i64> {
    let pi = p as i64 - (t.lambda * triangle(r)) as i64;
    let floor = t.pi_sum as i64 - t.k as i64 + t.l as i64;
    if pi < floor {
        return Err(Error::OutsideValidity { pi, floor });
    }
    Ok(pi)
}

/// `H^{p,q}(M_{s,r}(V), Q^{l+1,l})` as a list of `(α, multiplicity)`, where
/// `α` stands for the component `Z^{k−α−1,k} V`.
pub fn single_flag_cohomology(e: u64, r: u64, s: u64, l: u64, p: u64, q: u64) -> Result<Vec<(u64, u64)>> {
    let factor = FlagFactor::new(s, l);
    check_factors(e, r, &[factor])?;
    let t = totals(r, &[factor])?;
    let pi = reduced_pi(p, r, &t)?;
    let k = factor.k(r);
    let mut out = Vec::new();
    for alpha in 0..=l {
        if alpha + 1 > k {
            break;
        }
        let degree = p as i64 - (r * (l - 1)) as i64 - s as i64 + alpha as i64;
        if degree != q as i64 {
            continue;
        }
        let m = n_s_product(r, &[s], pi + (r * alpha) as i64)?;
        if m > 0 {
            out.push((alpha, m));
        }
    }
    Ok(out)
}

/// Nonzero `H^{p,q}` of an exterior product of flag line bundles: the
/// multiplicity `n_s(π + rσ)` shared by every tuple `(α_i)` with `Σ α_i = σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductEntry {
    pub sigma: u64,
    pub multiplicity: u64,
    /// All `(α_i)` with `Σ α_i = σ`, `α_i ≤ l_i` and `α_i < k_i`, lexicographic.
    pub splittings: Vec<Vec<u64>>,
}

pub fn product_flag_cohomology(
    e: u64,
    r: u64,
    factors: &[FlagFactor],
    p: u64,
    q: u64,
) -> Result<Option<ProductEntry>> {
    check_factors(e, r, factors)?;
    let t = totals(r, factors)?;
    let pi = reduced_pi(p, r, &t)?;
    let sigma = q as i64 + (r * t.lambda) as i64 + t.s as i64 - p as i64;
    if sigma < 0 || sigma > t.l as i64 {
        return Ok(None);
    }
    let sigma = sigma as u64;
    let s_list: Vec<u64> = factors.iter().map(|f| f.s).collect();
    let multiplicity = n_s_product(r, &s_list, pi + (r * sigma) as i64)?;
    if multiplicity == 0 {
        return Ok(None);
    }
    let caps: Vec<u64> = factors.iter().map(|f| f.l.min(f.k(r) - 1)).collect();
    let splittings = splittings(sigma, &caps);
    if splittings.is_empty() {
        return Ok(None);
    }
    Ok(Some(ProductEntry {
        sigma,
        multiplicity,
        splittings,
    }))
}

/// Tuples `x` with `x_i ≤ caps_i` and `Σ x_i = total`, lexicographic.
pub fn splittings(total: u64, caps: &[u64]) -> Vec<Vec<u64>> {
    fn go(total: u64, caps: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let Some((&cap, rest)) = caps.split_first() else {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        };
        let room: u64 = rest.iter().sum();
        for x in 0..=cap.min(total) {
            if total - x > room {
                continue;
            }
            cur.push(x);
            go(total - x, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, caps, &mut Vec::new(), &mut out);
    out
}

/// `(P_max, Q_max)` with `P_max = λ·t(r) + Σ π_{r,s_i}` and
/// `Q_max = λ·t(r−1) + Σ π_{r,s_i} − Σ s_i`.
pub fn envelopes(r: u64, factors: &[FlagFactor]) -> Result<(u64, u64)> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let t = totals(r, factors)?;
    let p_max = t.lambda * triangle(r) + t.pi_sum;
    let q_max = t.lambda * triangle(r - 1) + t.pi_sum - t.s;
    Ok((p_max, q_max))
}

/// If `p ≥ P_max − rσ` or `q ≥ Q_max − (r−1)σ`, every component of `H^{p,q}`
/// has `Σ α_i ≤ σ`. Returns whether that holds at `(p, q)`; positions outside
/// the validity window or failing the premise hold vacuously.
pub fn containment(e: u64, r: u64, factors: &[FlagFactor], p: u64, q: u64, sigma: u64) -> Result<bool> {
    let (pm, qm) = envelopes(r, factors)?;
    let premise = p as i64 >= pm as i64 - (r * sigma) as i64
        || q as i64 >= qm as i64 - ((r - 1) * sigma) as i64;
    if !premise {
        return Ok(true);
    }
    match product_flag_cohomology(e, r, factors, p, q) {
        Ok(Some(entry)) => Ok(entry.sigma <= sigma),
        Ok(None) | Err(Error::OutsideValidity { .. }) => Ok(true),
        Err(err) => Err(err),
    }
}
