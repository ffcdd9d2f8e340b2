//! Maximal weight of an `l`-admissible partition in an `r × (n−r)` box.
//!
//! Maximizers are described through the row-count partition `ν = h_minus(λ)`.
//! The extremal shapes are `μ(a,α,β,c,γ)`: `α(l−a)` parts `a`, then
//! `β(l−a+1)` parts `a−1`, then `γ` parts `c`.

use serde::Serialize;

use crate::admissible::{hat_unchecked, is_admissible};
use crate::error::{invalid, Error, Result};
use crate::partition::{enumerate_box, Partition};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyParams {
    pub a: usize,
    pub alpha: usize,
    pub beta: usize,
    pub c: usize,
    pub gamma: usize,
}

impl FamilyParams {
    pub fn new(a: usize, alpha: usize, beta: usize, c: usize, gamma: usize) -> Self {
        FamilyParams {
            a,
            alpha,
            beta,
            c,
            gamma,
        }
    }

    pub fn validate(&self, l: usize) -> Result<()> {
        let FamilyParams {
            a,
            alpha,
            beta,
            c,
            gamma,
        } = *self;
        if l < 2 {
            return Err(invalid(format!("family needs l ≥ 2, got {l}")));
        }
        if alpha + beta > 0 {
            if a == 0 || a >= l {
                return Err(invalid(format!("need 1 ≤ a ≤ l−1, got a={a}, l={l}")));
            }
            if c > a || gamma > l - a {
                return Err(invalid(format!("need c ≤ a and γ ≤ l−a in {self:?}")));
            }
            if (gamma, c) == (l - a, a) {
                return Err(invalid(format!(
                    "(γ,c) = (l−a,a) is excluded; use α+1 instead ({self:?})"
                )));
            }
            if beta > 0 && gamma > 0 && c >= a {
                return Err(invalid(format!("c-block must sit below the a−1 block in {self:?}")));
            }
        } else if c >= l || c + gamma > l {
            // some a with c ≤ a ≤ l−γ must exist
            return Err(invalid(format!("need c ≤ l−1 and c+γ ≤ l in {self:?}")));
        }
        Ok(())
    }

    pub fn len(&self, l: usize) -> usize {
        if self.alpha + self.beta == 0 {
            return if self.c == 0 { 0 } else { self.gamma };
        }
        self.alpha * (l - self.a) + self.beta * (l - self.a + 1) + if self.c == 0 { 0 } else { self.gamma }
    }
}

/// `μ(a,α,β,c,γ)` as a partition.
pub fn family_partition(params: &FamilyParams, l: usize) -> Result<Partition> {
    params.validate(l)?;
    Partition::new(family_parts(params, l))
}

fn family_parts(params: &FamilyParams, l: usize) -> Vec<usize> {
    let mut v = Vec::new();
    if params.alpha + params.beta > 0 {
        v.extend(std::iter::repeat_n(params.a, params.alpha * (l - params.a)));
        v.extend(std::iter::repeat_n(params.a - 1, params.beta * (l - params.a + 1)));
    }
    v.extend(std::iter::repeat_n(params.c, params.gamma));
    v
}

/// First part of `hat(μ(a,α,β,c,γ))`, by the closed form `(α+β)a − β + c`.
/// The family must fit in `r` rows.
pub fn family_first_part(params: &FamilyParams, l: usize, r: usize) -> Result<usize> {
    let nu = family_partition(params, l)?;
    if nu.len() > r {
        return Err(Error::TooLong {
            length: nu.len(),
            partition: nu,
            limit: r,
        });
    }
    let c = if params.gamma == 0 { 0 } else { params.c };
    Ok((params.alpha + params.beta) * params.a - params.beta + c)
}

/// Recognizes `ν` (padded to `r`) as a family member and returns canonical
/// parameters (`a = 0` only when `α+β = 0`, `γ = 0` when `c = 0`).
pub fn decode_family(nu: &[usize], l: usize, r: usize) -> Option<FamilyParams> {
    if l < 2 || nu.len() > r {
        return None;
    }
    let mut target = nu.to_vec();
    target.resize(r, 0);
    let matches = |p: &FamilyParams| {
        if p.validate(l).is_err() {
            return false;
        }
        let mut v = family_parts(p, l);
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.len() > r {
            return false;
        }
        v.resize(r, 0);
        v == target
    };
    // Several parameter sets can spell the same partition; prefer the one whose
    // blocks cover the most rows, then the fewest `a−1` rows, then the largest `a`.
    type Preference = (usize, usize, std::cmp::Reverse<usize>);
    let mut found: Option<(FamilyParams, Preference)> = None;
    for a in 0..l {
        for alpha in 0..=r {
            for beta in 0..=r {
                if (alpha + beta > 0) != (a > 0) {
                    continue;
                }
                for c in 0..l {
                    for gamma in 0..=l {
                        let p = FamilyParams::new(a, alpha, beta, c, gamma);
                        if !matches(&p) {
                            continue;
                        }
                        let loose = if c > 0 { gamma } else { 0 };
                        let key = (loose, beta, std::cmp::Reverse(a));
                        if found.as_ref().is_none_or(|(_, k)| key < *k) {
                            found = Some((p, key));
                        }
                    }
                }
            }
        }
    }
    let mut p = found?.0;
    if p.c == 0 {
        p.gamma = 0;
    }
    Some(p)
}

/// `a_1 = 1`, `a_{i+1} = min(a_i + l − ν_{a_i}, r+1)`; each run `[a_i, a_{i+1})`
/// is filled with `ν_{a_i}`. The result contains `ν` and has the same `hat` first part.
pub fn flatten(nu: &[usize], l: usize, r: usize) -> Result<Vec<usize>> {
    check_nu(nu, l, r)?;
    let mut v = nu.to_vec();
    v.resize(r, 0);
    let mut out = v.clone();
    let mut a = 1;
    while a <= r {
        let val = v[a - 1];
        let next = (a + l - val).min(r + 1);
        for slot in &mut out[a - 1..next - 1] {
            *slot = val;
        }
        a = next;
    }
    Ok(out)
}

fn check_nu(nu: &[usize], l: usize, r: usize) -> Result<()> {
    if l == 0 {
        return Err(invalid("l must be at least 1"));
    }
    if nu.len() > r {
        return Err(invalid(format!("ν has {} rows but r = {r}", nu.len())));
    }
    if nu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(nu.to_vec()));
    }
    if nu.iter().any(|&x| x >= l) {
        return Err(invalid(format!("ν has a part ≥ l = {l}")));
    }
    Ok(())
}

fn run_is(v: &[usize], from: usize, len: usize, val: usize) -> bool {
    from + len <= v.len() && v[from..from + len].iter().all(|&x| x == val)
}

/// Transformation A at offset `i` (rows numbered from 1; the blocks start at row `i+1`).
///
/// Needs rows `i+1..=i+l−a` equal to `a` and rows `i+l−a+1..=i+2(l−a)+1`
/// equal to `b`, with `b + 2 ≤ a`. They become `a−1` and `b+1`.
pub fn transform_a(nu: &[usize], i: usize, a: usize, b: usize, l: usize) -> Result<Vec<usize>> {
    if a < 2 || b + 2 > a || a >= l {
        return Err(Error::ConfigurationAbsent(format!(
            "A needs 2 ≤ a ≤ l−1 and b ≤ a−2 (a={a}, b={b}, l={l})"
        )));
    }
    let k = l - a;
    if !run_is(nu, i, k, a) || !run_is(nu, i + k, k + 1, b) {
        return Err(Error::ConfigurationAbsent(format!(
            "A at i={i}, a={a}, b={b} does not match {nu:?}"
        )));
    }
    let mut out = nu.to_vec();
    out[i..i + k].iter_mut().for_each(|x| *x = a - 1);
    out[i + k..i + 2 * k + 1].iter_mut().for_each(|x| *x = b + 1);
    Ok(out)
}

/// Transformation B at offset `i`.
///
/// Needs `l−a−1` rows equal to `a+1`, then `β(l−a)` rows equal to `a`, then
/// `l−a` rows equal to `b`, with `β ≥ 1`, `b < a`. The first two blocks become
/// `a` and the last `b+1`.
pub fn transform_b(
    nu: &[usize],
    i: usize,
    a: usize,
    b: usize,
    beta: usize,
    l: usize,
) -> Result<Vec<usize>> {
    if beta == 0 || a == 0 || b >= a || a >= l {
        return Err(Error::ConfigurationAbsent(format!(
            "B needs β ≥ 1, b < a ≤ l−1 (a={a}, b={b}, β={beta}, l={l})"
        )));
    }
    let k = l - a;
    let top = k - 1;
    let mid = beta * k;
    if !run_is(nu, i, top, a + 1) || !run_is(nu, i + top, mid, a) || !run_is(nu, i + top + mid, k, b) {
        return Err(Error::ConfigurationAbsent(format!(
            "B at i={i}, a={a}, b={b}, β={beta} does not match {nu:?}"
        )));
    }
    let mut out = nu.to_vec();
    out[i..i + top].iter_mut().for_each(|x| *x = a);
    out[i + top + mid..i + top + mid + k]
        .iter_mut()
        .for_each(|x| *x = b + 1);
    Ok(out)
}

/// Weight of `hat(ν)` on `r` rows.
pub fn hat_weight(nu: &[usize], l: usize, r: usize) -> usize {
    hat_unchecked(nu, l, r).iter().sum()
}

fn hat_first(nu: &[usize], l: usize, r: usize) -> usize {
    hat_unchecked(nu, l, r).first().copied().unwrap_or(0)
}

/// Every applicable A instance on `ν` (padded to `r`), as `(i, a, b)`.
pub fn a_instances(nu: &[usize], l: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..nu.len() {
        let a = nu[i];
        if a < 2 || a >= l {
            continue;
        }
        let k = l - a;
        if i + 2 * k + 1 > nu.len() {
            continue;
        }
        let b = nu[i + k];
        if transform_a(nu, i, a, b, l).is_ok() {
            out.push((i, a, b));
        }
    }
    out
}

/// Every applicable B instance on `ν` (padded to `r`), as `(i, a, b, β)`.
pub fn b_instances(nu: &[usize], l: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..nu.len() {
        for a in [nu[i].saturating_sub(1), nu[i]] {
            if a == 0 || a >= l {
                continue;
            }
            let k = l - a;
            // with k = 1 the top block is empty and a = nu[i]
            if (k == 1) != (a == nu[i]) {
                continue;
            }
            let mut beta = 1;
            while i + k - 1 + (beta + 1) * k <= nu.len() {
                let b = nu[i + k - 1 + beta * k];
                if transform_b(nu, i, a, b, beta, l).is_ok() {
                    out.push((i, a, b, beta));
                }
                beta += 1;
            }
        }
    }
    out
}

/// One greedy step inside the `r × (n−r)` box: add a cell (lowest row first),
/// else apply A at the smallest offset, else B. `None` at a fixpoint.
pub fn greedy_step(nu: &[usize], r: usize, n: usize, l: usize) -> Option<Vec<usize>> {
    let width = n - r;
    let fits = |v: &[usize]| hat_first(v, l, r) <= width;
    for row in (0..r).rev() {
        if nu[row] + 1 < l && (row == 0 || nu[row - 1] > nu[row]) {
            let mut v = nu.to_vec();
            v[row] += 1;
            if fits(&v) {
                return Some(v);
            }
        }
    }
    for (i, a, b) in a_instances(nu, l) {
        let v = transform_a(nu, i, a, b, l).ok()?;
        if fits(&v) {
            return Some(v);
        }
    }
    for (i, a, b, beta) in b_instances(nu, l) {
        let v = transform_b(nu, i, a, b, beta, l).ok()?;
        if fits(&v) {
            return Some(v);
        }
    }
    None
}

/// Runs [`greedy_step`] from `start` until nothing applies. Returns the path,
/// starting with `start` (padded to `r`).
pub fn greedy_path(start: &[usize], r: usize, n: usize, l: usize) -> Result<Vec<Vec<usize>>> {
    check_box(r, n, l)?;
    check_nu(start, l, r)?;
    let mut cur = start.to_vec();
    cur.resize(r, 0);
    if hat_first(&cur, l, r) > n - r {
        return Err(invalid(format!("start {start:?} does not fit the {r}x{} box", n - r)));
    }
    let mut path = vec![cur.clone()];
    while let Some(next) = greedy_step(&cur, r, n, l) {
        path.push(next.clone());
        cur = next;
    }
    Ok(path)
}

fn check_box(r: usize, n: usize, l: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(invalid(format!("need 1 ≤ r < n, got r={r}, n={n}")));
    }
    if l < 2 {
        return Err(invalid(format!("need l ≥ 2, got {l}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Maximum {
    pub params: FamilyParams,
    pub nu: Vec<usize>,
    pub lambda: Partition,
    pub pmax: usize,
}

fn evaluate(p: &FamilyParams, r: usize, n: usize, l: usize) -> Option<Maximum> {
    p.validate(l).ok()?;
    let mut nu = family_parts(p, l);
    // Rows equal to zero are padding and do not count against `r`.
    while nu.last() == Some(&0) {
        nu.pop();
    }
    if nu.len() > r {
        return None;
    }
    nu.resize(r, 0);
    let lam = hat_unchecked(&nu, l, r);
    if lam.first().copied().unwrap_or(0) > n - r {
        return None;
    }
    let lambda = Partition::new(lam).ok()?;
    Some(Maximum {
        params: *p,
        pmax: lambda.weight(),
        nu,
        lambda,
    })
}

fn best(cands: impl Iterator<Item = FamilyParams>, r: usize, n: usize, l: usize) -> Option<Maximum> {
    let mut top: Option<Maximum> = None;
    for p in cands {
        if let Some(m) = evaluate(&p, r, n, l) {
            if top.as_ref().is_none_or(|t| m.pmax > t.pmax) {
                top = Some(m);
            }
        }
    }
    top
}

fn euclid_candidates(m: usize, l: usize) -> impl Iterator<Item = FamilyParams> {
    let (quot, rem) = (m / l, m % l);
    (0..l)
        .flat_map(move |a| {
            (0..=quot).flat_map(move |alpha| {
                (0..=rem).map(move |c| FamilyParams::new(a, alpha, quot - alpha, c, rem - c))
            })
        })
        .filter(move |p| (quot == 0) == (p.a == 0))
}

/// Largest `|λ|` over `l`-admissible `λ` in the `r × (n−r)` box, realized by a
/// family member whose parameters follow the division of `n` by `l`:
/// `α+β = n div l`, `γ+c = n mod l`.
///
/// For some `n > rl` no such member reaches the maximum: every admissible
/// partition with `r` rows already fits a narrower box. The division of
/// `min(n, rl)` is used there instead.
pub fn maximize(r: usize, n: usize, l: usize) -> Result<Maximum> {
    check_box(r, n, l)?;
    let top = family_maximum(r, n, l)?;
    for m in [n, n.min(r * l)] {
        if let Some(found) = best(euclid_candidates(m, l), r, n, l) {
            if found.pmax == top.pmax {
                return Ok(found);
            }
        }
    }
    Ok(top)
}

/// Largest hat weight over every valid parameter tuple fitting the box,
/// without the division constraint.
pub fn family_maximum(r: usize, n: usize, l: usize) -> Result<Maximum> {
    check_box(r, n, l)?;
    let mut cands = Vec::new();
    for a in 0..l {
        for alpha in 0..=r {
            for beta in 0..=r {
                if (alpha + beta > 0) != (a > 0) {
                    continue;
                }
                for c in 0..l {
                    for gamma in 0..=l {
                        cands.push(FamilyParams::new(a, alpha, beta, c, gamma));
                    }
                }
            }
        }
    }
    best(cands.into_iter(), r, n, l)
        .ok_or_else(|| invalid(format!("no family member fits r={r}, n={n}, l={l}")))
}

/// Exhaustive maximum over the `r × (n−r)` box.
pub fn brute_force_pmax(r: usize, n: usize, l: usize) -> Result<usize> {
    check_box(r, n, l)?;
    Ok(enumerate_box(r, n - r)
        .filter(|lam| is_admissible(lam, l))
        .map(|lam| lam.weight())
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let p = FamilyParams::new(2, 1, 0, 1, 1);
        assert_eq!(family_partition(&p, 3).unwrap().parts(), &[2, 1]);
        assert_eq!(family_first_part(&p, 3, 2).unwrap(), 3);
        let p = FamilyParams::new(2, 1, 1, 0, 0);
        assert_eq!(family_partition(&p, 3).unwrap().parts(), &[2, 1, 1]);
        let p = FamilyParams::new(3, 2, 0, 0, 0);
        assert_eq!(family_partition(&p, 5).unwrap().parts(), &[3, 3, 3, 3]);
        assert_eq!(family_first_part(&p, 5, 4).unwrap(), 6);
        assert_eq!(family_first_part(&FamilyParams::default(), 3, 1).unwrap(), 0);
        assert!(family_partition(&FamilyParams::new(2, 1, 0, 2, 1), 3).is_err());
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(
            flatten(&[3, 2, 2, 1, 1, 1], 5, 6).unwrap(),
            vec![3, 3, 2, 2, 2, 1]
        );
        assert_eq!(
            flatten(&[3, 3, 2, 2, 2, 1], 5, 6).unwrap(),
            vec![3, 3, 2, 2, 2, 1]
        );
        assert_eq!(flatten(&[0, 0, 0], 4, 3).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn transformation_witnesses() {
        let v = transform_a(&[2, 0, 0], 0, 2, 0, 3).unwrap();
        assert_eq!(v, vec![1, 1, 1]);
        assert_eq!(hat_weight(&[2, 0, 0], 3, 3), 2);
        assert_eq!(hat_weight(&v, 3, 3), 4);
        assert!(transform_a(&[1, 1, 1], 0, 2, 0, 3).is_err());

        let nu = [2, 1, 1, 0, 0];
        let v = transform_b(&nu, 0, 1, 0, 1, 3).unwrap();
        assert_eq!(v, vec![1, 1, 1, 1, 1]);
        assert_eq!(hat_weight(&nu, 3, 5), 5);
        assert_eq!(hat_weight(&v, 3, 5), 9);
        assert!(transform_b(&[1, 1, 1, 1, 1], 0, 1, 0, 1, 3).is_err());
    }

    #[test]
    fn maximize_examples() {
        assert_eq!(maximize(2, 4, 3).unwrap().pmax, 2);
        for l in 2..6 {
            for n in 2..9 {
                assert_eq!(maximize(1, n, l).unwrap().pmax, (l - 1).min(n - 1));
            }
        }
        assert_eq!(maximize(3, 7, 5).unwrap().pmax, brute_force_pmax(3, 7, 5).unwrap());
        let m = maximize(3, 7, 3).unwrap();
        assert_eq!(m.params.alpha + m.params.beta, 2);
        assert_eq!(m.params.gamma + m.params.c, 1);
    }

    #[test]
    fn decode_canonical() {
        let p = decode_family(&[2, 1], 3, 4).unwrap();
        assert_eq!(p, FamilyParams::new(2, 1, 0, 1, 1));
        let p = decode_family(&[2, 2, 0, 0], 4, 4).unwrap();
        assert_eq!(p, FamilyParams::new(2, 1, 0, 0, 0));
        assert_eq!(decode_family(&[0, 0], 3, 2).unwrap(), FamilyParams::new(0, 0, 0, 0, 0));
        assert!(decode_family(&[3, 1, 1, 1], 4, 4).is_none());
    }
}
