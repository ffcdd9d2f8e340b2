//! Exhaustive property suites, shared by the `verify` subcommand and the tests.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::admissible::{enumerate_admissible, h_minus, hat, is_admissible};
use crate::bott::oracle_table;
use crate::bounds::{delta, n_s_count, order_key, pi_rs, symmetric_form, triangle, BoundInput};
use crate::degeneracy::{lr_identity_checks, resolution_terms, verify_tables};
use crate::extremal::{
    a_instances, b_instances, brute_force_pmax, family_maximum, hat_weight, maximize, transform_a,
    transform_b,
};
use crate::flag::{envelopes, product_flag_cohomology, splittings, FlagFactor};
use crate::grassmann::cohomology_table;
use crate::partition::{binomial, enumerate_box, Partition};

const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    /// Total number of failing cases; only the first few are kept as witnesses.
    pub failed: u64,
    pub witnesses: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            failed: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

pub const SUITES: &[&str] = &[
    "bijection",
    "snow-vs-bott",
    "pmax",
    "kl-admissible",
    "monotonicity",
    "transformations",
    "order",
    "symmetric-form",
    "flags",
    "tables",
    "resolution",
    "lr-identities",
];

pub fn run_suite(name: &str) -> Option<SuiteReport> {
    Some(match name {
        "bijection" => bijection(),
        "snow-vs-bott" => snow_vs_bott(),
        "pmax" => pmax(),
        "kl-admissible" => kl_admissible(),
        "monotonicity" => monotonicity(),
        "transformations" => transformations(),
        "order" => order(),
        "symmetric-form" => symmetric_form_identity(),
        "flags" => flags(),
        "tables" => tables(),
        "resolution" => resolution(),
        "lr-identities" => lr_identities(),
        _ => return None,
    })
}

/// `hat` and `h_minus` are inverse bijections for `r ≤ 4`, `2 ≤ l ≤ 5`.
pub fn bijection() -> SuiteReport {
    let mut rep = SuiteReport::new("bijection");
    for r in 1..=4 {
        for l in 2..=5 {
            let mut count = 0u128;
            for nu in enumerate_box(r, l - 1) {
                count += 1;
                let nu = nu.padded(r);
                let back = hat(&nu, l, r).and_then(|lam| h_minus(&lam, l, r));
                rep.record(back.as_ref() == Ok(&nu), || format!("r={r} l={l} ν={nu:?}: {back:?}"));
            }
            rep.record(count == binomial(r + l - 1, r), || format!("r={r} l={l}: box count {count}"));
            let mut admissible = 0u128;
            for lam in enumerate_box(r, r * (l - 1)) {
                if !is_admissible(&lam, l) {
                    continue;
                }
                admissible += 1;
                let back = h_minus(&lam, l, r).and_then(|h| hat(&h, l, r));
                rep.record(back.as_ref() == Ok(&lam), || format!("r={r} l={l} λ={lam}: {back:?}"));
            }
            rep.record(admissible == binomial(r + l - 1, r), || {
                format!("r={r} l={l}: {admissible} admissible partitions")
            });
        }
    }
    rep
}

/// Admissible-partition tables agree with the Bott computation, `r < e ≤ 6`, `l ≤ 4`.
pub fn snow_vs_bott() -> SuiteReport {
    let mut rep = SuiteReport::new("snow-vs-bott");
    for e in 2..=6 {
        for r in 1..e {
            for l in 1..=4 {
                let (Ok(a), Ok(b)) = (cohomology_table(r, e, l), oracle_table(r, e, l)) else {
                    rep.record(false, || format!("r={r} e={e} l={l}: table failed"));
                    continue;
                };
                rep.record(a.same_weights(&b), || format!("r={r} e={e} l={l}: {:?}", a.diff(&b)));
            }
        }
    }
    rep
}

/// `maximize` matches the box maximum and the unconstrained family maximum for
/// `n ≤ 12`, `2 ≤ l ≤ 6`. Its parameters follow the division of `n` by `l`, or
/// of `rl` when `n > rl` and the former cannot reach the maximum.
pub fn pmax() -> SuiteReport {
    let mut rep = SuiteReport::new("pmax");
    for n in 2..=12 {
        for r in 1..n {
            for l in 2..=6 {
                let brute = brute_force_pmax(r, n, l);
                let fam = family_maximum(r, n, l).map(|m| m.pmax);
                let Ok(m) = maximize(r, n, l) else {
                    rep.record(false, || format!("r={r} n={n} l={l}: maximize failed"));
                    continue;
                };
                rep.record(brute == Ok(m.pmax) && fam == Ok(m.pmax), || {
                    format!("r={r} n={n} l={l}: maximize {} brute {brute:?} family {fam:?}", m.pmax)
                });
                let p = m.params;
                let divides = |m: usize| p.alpha + p.beta == m / l && p.gamma + p.c == m % l;
                rep.record(divides(n) || (n > r * l && divides(r * l)), || {
                    format!("r={r} n={n} l={l}: params {p:?}")
                });
            }
        }
    }
    rep
}

/// `l`-admissible implies `kl`-admissible, boxes up to 6×6, `l ≤ 4`, `k ≤ 3`.
pub fn kl_admissible() -> SuiteReport {
    let mut rep = SuiteReport::new("kl-admissible");
    for lam in enumerate_box(6, 6) {
        for l in 1..=4 {
            if !is_admissible(&lam, l) {
                continue;
            }
            for k in 1..=3 {
                rep.record(is_admissible(&lam, k * l), || format!("λ={lam} l={l} k={k}"));
            }
        }
    }
    rep
}

/// `ν₁ ⊂ ν₂` implies `hat(ν₁) ⊂ hat(ν₂)`, `r ≤ 4`, `l ≤ 5`.
pub fn monotonicity() -> SuiteReport {
    let mut rep = SuiteReport::new("monotonicity");
    for r in 1..=4 {
        for l in 2..=5 {
            let all: Vec<(Partition, Partition)> = enumerate_box(r, l - 1)
                .map(|nu| {
                    let h = hat(&nu.padded(r), l, r).expect("box element");
                    (nu, h)
                })
                .collect();
            for (n1, h1) in &all {
                for (n2, h2) in &all {
                    if n1.is_contained_in(n2) {
                        rep.record(h1.is_contained_in(h2), || format!("r={r} l={l} {n1} ⊂ {n2}"));
                    }
                }
            }
        }
    }
    rep
}

/// Each A instance gains at least `l−a+1`, each B instance at least `2(l−a)`, `r ≤ 6`, `l ≤ 5`.
pub fn transformations() -> SuiteReport {
    let mut rep = SuiteReport::new("transformations");
    for r in 1..=6 {
        for l in 2..=5 {
            for nu in enumerate_box(r, l - 1) {
                let nu = nu.padded(r);
                let before = hat_weight(&nu, l, r);
                for (i, a, b) in a_instances(&nu, l) {
                    let after = transform_a(&nu, i, a, b, l).map(|v| hat_weight(&v, l, r));
                    rep.record(after.as_ref().is_ok_and(|&w| w > before + l - a), || {
                        format!("A r={r} l={l} ν={nu:?} i={i} a={a} b={b}: {before} -> {after:?}")
                    });
                }
                for (i, a, b, beta) in b_instances(&nu, l) {
                    let after = transform_b(&nu, i, a, b, beta, l).map(|v| hat_weight(&v, l, r));
                    rep.record(after.as_ref().is_ok_and(|&w| w >= before + 2 * (l - a)), || {
                        format!("B r={r} l={l} ν={nu:?} i={i} a={a} b={b} β={beta}: {before} -> {after:?}")
                    });
                }
            }
        }
    }
    rep
}

/// `(x + μδ(x), σ − μ) < (x, σ)` for `x ≤ 200`, `σ ≤ 10`, `μ ≠ 0`, staying in `ℕ²`.
pub fn order() -> SuiteReport {
    let mut rep = SuiteReport::new("order");
    for x in 0..=200i64 {
        let d = delta(x as u64) as i64;
        for sigma in 0..=10i64 {
            for mu in -(x / d + 1)..=sigma {
                let (x2, s2) = (x + mu * d, sigma - mu);
                if mu == 0 || x2 < 0 || s2 < 0 {
                    continue;
                }
                let ok = order_key(x2 as u64, s2 as u64) < order_key(x as u64, sigma as u64);
                rep.record(ok, || format!("x={x} σ={sigma} μ={mu}"));
            }
        }
    }
    rep
}

/// `Q(p,σ)` equals `n−p + r(σ+τ) + σ(τ−1)` with `τ = ae−k+σ`, `r = δ(n−p)`.
pub fn symmetric_form_identity() -> SuiteReport {
    let mut rep = SuiteReport::new("symmetric-form");
    let n = 20u64;
    for gap in 0..=8u64 {
        for sigma in 0..=8u64 {
            for p in 0..=n {
                // a = 1, e = k + gap
                let k = 3u64;
                let input = BoundInput::new(n, sigma, 1, k + gap, k);
                let q = input.bound_q(p).expect("p ≤ n");
                let tau = (gap + sigma) as i64;
                let r = delta(n - p) as i64;
                let s = symmetric_form(n as i64, p as i64, r, sigma as i64, tau);
                rep.record(q == s, || format!("n-p={} σ={sigma} ae-k={gap}: {q} vs {s}", n - p));
            }
        }
    }
    rep
}

fn factor_lists(r: u64) -> Vec<Vec<FlagFactor>> {
    let mut singles = Vec::new();
    for s in 1..r {
        for l in 1..=3 {
            singles.push(FlagFactor::new(s, l));
        }
    }
    let mut out: Vec<Vec<FlagFactor>> = singles.iter().map(|&f| vec![f]).collect();
    for (i, &f) in singles.iter().enumerate() {
        for &g in &singles[i..] {
            out.push(vec![f, g]);
        }
    }
    out
}

/// Künneth rebuild of the product groups from the single-factor formula:
/// for each `α` tuple, sums the product of per-factor multiplicities over every
/// split `p = Σ p_i` with `p_i ≥ 0` whose degrees add up to `q`.
pub fn kunneth_by_splitting(r: u64, factors: &[FlagFactor], p: u64, q: u64) -> BTreeMap<Vec<u64>, u64> {
    kunneth_rebuild(r, factors, p, q, true)
}

/// Same sum with the `p_i` ranging over all integers. This is the sum the
/// closed product formula evaluates; it differs from [`kunneth_by_splitting`]
/// only through terms with some `p_i < 0`.
pub fn kunneth_formal(r: u64, factors: &[FlagFactor], p: u64, q: u64) -> BTreeMap<Vec<u64>, u64> {
    kunneth_rebuild(r, factors, p, q, false)
}

fn kunneth_rebuild(r: u64, factors: &[FlagFactor], p: u64, q: u64, nonneg: bool) -> BTreeMap<Vec<u64>, u64> {
    let mut out = BTreeMap::new();
    let caps: Vec<u64> = factors.iter().map(|f| f.l.min(f.k(r) - 1)).collect();
    let top: u64 = caps.iter().sum();
    for sigma in 0..=top {
        for alphas in splittings(sigma, &caps) {
            // x_i = π_i + rα_i runs over the support of n_{s_i}
            let ranges: Vec<(i64, i64)> = factors
                .iter()
                .map(|f| (triangle(f.s) as i64, pi_rs(r, f.s).unwrap_or(0) as i64))
                .collect();
            let mut total = 0u64;
            let mut xs = vec![0i64; factors.len()];
            rebuild_step(r, factors, &alphas, &ranges, 0, &mut xs, p as i64, q as i64, nonneg, &mut total);
            if total > 0 {
                out.insert(alphas, total);
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn rebuild_step(
    r: u64,
    factors: &[FlagFactor],
    alphas: &[u64],
    ranges: &[(i64, i64)],
    i: usize,
    xs: &mut Vec<i64>,
    p: i64,
    q: i64,
    nonneg: bool,
    total: &mut u64,
) {
    if i == factors.len() {
        let mut psum = 0i64;
        let mut degree = 0i64;
        let mut mult = 1u64;
        for ((f, &a), &x) in factors.iter().zip(alphas).zip(xs.iter()) {
            let pi = x - (r * a) as i64;
            let p_i = pi + ((f.l - 1) * triangle(r)) as i64;
            if nonneg && p_i < 0 {
                return;
            }
            psum += p_i;
            degree += p_i - (r * (f.l - 1)) as i64 - f.s as i64 + a as i64;
            mult *= n_s_count(r, f.s, x).unwrap_or(0);
        }
        if psum == p && degree == q {
            *total += mult;
        }
        return;
    }
    let (lo, hi) = ranges[i];
    for x in lo..=hi {
        xs[i] = x;
        rebuild_step(r, factors, alphas, ranges, i + 1, xs, p, q, nonneg, total);
    }
}

/// Flag formulas vanish beyond `(P_max, Q_max)` and agree with the Künneth
/// rebuild inside the validity window, `r ≤ 4`, at most two factors, `l_i ≤ 3`.
pub fn flags() -> SuiteReport {
    let mut rep = SuiteReport::new("flags");
    for r in 2..=4u64 {
        let e = r + 1;
        for factors in factor_lists(r) {
            let Ok((pm, qm)) = envelopes(r, &factors) else {
                rep.record(false, || format!("r={r} {factors:?}: envelopes failed"));
                continue;
            };
            for p in 0..=pm + 3 {
                for q in 0..=qm + 3 {
                    let res = product_flag_cohomology(e, r, &factors, p, q);
                    if p > pm || q > qm {
                        let ok = !matches!(res, Ok(Some(_)));
                        rep.record(ok, || format!("r={r} {factors:?} p={p} q={q}: {res:?}"));
                        continue;
                    }
                    let Ok(entry) = res else { continue };
                    let brute = kunneth_by_splitting(r, &factors, p, q);
                    let ok = match &entry {
                        None => brute.is_empty(),
                        Some(en) => {
                            brute.keys().eq(en.splittings.iter())
                                && brute.values().all(|&m| m == en.multiplicity)
                        }
                    };
                    rep.record(ok, || format!("r={r} {factors:?} p={p} q={q}: {entry:?} vs {brute:?}"));
                }
            }
        }
    }
    rep
}

pub fn tables() -> SuiteReport {
    let mut rep = SuiteReport::new("tables");
    match verify_tables(None) {
        Ok(rows) => {
            for row in rows {
                rep.record(row.passed(), || {
                    format!("line {} ({}): {}", row.line, row.partition, row.failures.join("; "))
                });
            }
        }
        Err(e) => rep.record(false, || e.to_string()),
    }
    rep
}

/// Corank one gives `(2^e)` with twist `−e`; indices stay in `[0, t(e−k)]` for `e−k ≤ 4`.
pub fn resolution() -> SuiteReport {
    let mut rep = SuiteReport::new("resolution");
    for e in 2..=8 {
        let terms = resolution_terms(e, e - 1, 1);
        let ok = matches!(&terms, Ok(t) if t.len() == 1
            && t[0].lambda == Partition::rectangle(e, 2)
            && t[0].twist == -(e as i64));
        rep.record(ok, || format!("e={e}: {terms:?}"));
    }
    for e in 2..=9usize {
        for k in 1..e {
            if e - k > 4 {
                continue;
            }
            let top = (e - k) * (e - k + 1) / 2;
            for i in top + 1..=top + 12 {
                let terms = resolution_terms(e, k, i);
                rep.record(matches!(&terms, Ok(t) if t.is_empty()), || {
                    format!("e={e} k={k} i={i}: {terms:?}")
                });
            }
        }
    }
    rep
}

pub fn lr_identities() -> SuiteReport {
    let mut rep = SuiteReport::new("lr-identities");
    for e in 3..=6 {
        match lr_identity_checks(e) {
            Ok(checks) => {
                for c in checks {
                    rep.record(c.passed, || format!("e={e} {}: {}", c.name, c.detail));
                }
            }
            Err(err) => rep.record(false, || format!("e={e}: {err}")),
        }
    }
    rep
}

/// Admissible enumeration through `hat` agrees with filtering the box.
pub fn enumeration_agrees(r: usize, l: usize, width: usize) -> bool {
    let Ok(fast) = enumerate_admissible(r, l, Some(width)) else {
        return false;
    };
    let mut fast: Vec<Partition> = fast.map(|rec| rec.lambda).collect();
    let mut slow: Vec<Partition> = enumerate_box(r, width).filter(|p| is_admissible(p, l)).collect();
    fast.sort();
    slow.sort();
    fast == slow
}
