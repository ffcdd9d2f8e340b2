//! Independent recomputation of `H^{p,q}(G(r,e), O(l))` with the Bott algorithm.
//!
//! `Ω^p` splits (Cauchy) into `S_λ Q* ⊗ S_{λ*} S` over `λ` in the `r × (e−r)`
//! box with `|λ| = p`, `Q` the rank-`r` quotient and `S` the subbundle. After
//! twisting by `(det Q)^l`, the weight of a component is the `Q`-block
//! `(l − λ_r, …, l − λ_1)` followed by the `S`-block `λ*` padded to `e − r`.
//! The block order was fixed by the regression `oracle_table(1,2,1) = {(0,0): (1,0)}`.

use crate::error::Result;
use crate::grassmann::{check_grassmannian, CohomologyTable};
use crate::partition::{partitions_of, Partition};

/// Components `(λ, λ*)` of `Λ^p` of the cotangent bundle of `G(r, e)`.
pub fn cotangent_components(r: usize, e: usize, p: usize) -> Vec<(Partition, Partition)> {
    if r > e {
        return Vec::new();
    }
    partitions_of(p, e - r, r)
        .into_iter()
        .map(|lam| {
            let conj = lam.conjugate();
            (lam, conj)
        })
        .collect()
}

/// Adds `ρ = (e−1, …, 0)`. A repeated entry means all cohomology vanishes.
/// Otherwise returns the degree (number of inversions) and the dominant weight
/// `sort(c + ρ) − ρ`.
pub fn bott_step(c: &[i64]) -> Option<(usize, Vec<i64>)> {
    let e = c.len();
    let shifted: Vec<i64> = c
        .iter()
        .enumerate()
        .map(|(i, &x)| x + (e - 1 - i) as i64)
        .collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut inversions = 0;
    for i in 0..e {
        for j in i + 1..e {
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    let dominant = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (e - 1 - i) as i64)
        .collect();
    Some((inversions, dominant))
}

/// Weight of `S_λ Q* ⊗ S_{λ*} S ⊗ (det Q)^l` on `G(r, e)`.
pub fn block_weight(lambda: &Partition, r: usize, e: usize, l: usize) -> Vec<i64> {
    let q_block = lambda
        .padded(r)
        .into_iter()
        .rev()
        .map(|x| l as i64 - x as i64);
    let s_block = lambda.conjugate().padded(e - r).into_iter().map(|x| x as i64);
    q_block.chain(s_block).collect()
}

pub fn oracle_table(r: usize, e: usize, l: usize) -> Result<CohomologyTable> {
    check_grassmannian(r, e, l)?;
    let mut table = CohomologyTable::empty(r, e, l);
    for p in 0..=r * (e - r) {
        for (lam, _) in cotangent_components(r, e, p) {
            if let Some((q, dom)) = bott_step(&block_weight(&lam, r, e, l)) {
                table.push(p, q, dom, lam);
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::cohomology_table;
    use std::collections::BTreeMap;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn components() {
        assert_eq!(cotangent_components(2, 4, 1), vec![(p(&[1]), p(&[1]))]);
        let two = cotangent_components(2, 4, 2);
        assert_eq!(two.len(), 2);
        assert!(two.contains(&(p(&[2]), p(&[1, 1]))));
        assert!(two.contains(&(p(&[1, 1]), p(&[2]))));
        assert!(cotangent_components(2, 4, 4).contains(&(p(&[2, 2]), p(&[2, 2]))));
    }

    #[test]
    fn steps() {
        assert_eq!(bott_step(&[3, 1, 0]), Some((0, vec![3, 1, 0])));
        assert_eq!(bott_step(&[0, 1]), None);
        assert_eq!(bott_step(&[0, 2]), Some((1, vec![1, 1])));
    }

    #[test]
    fn regression_tables() {
        let t = oracle_table(1, 2, 1).unwrap();
        assert_eq!(t.weight_multisets(), BTreeMap::from([((0, 0), vec![vec![1, 0]])]));
        let t = oracle_table(1, 2, 2).unwrap();
        assert_eq!(
            t.weight_multisets(),
            BTreeMap::from([((0, 0), vec![vec![2, 0]]), ((1, 0), vec![vec![1, 1]])])
        );
        let t = oracle_table(1, 3, 1).unwrap();
        assert_eq!(t.weight_multisets(), BTreeMap::from([((0, 0), vec![vec![1, 0, 0]])]));
        assert!(oracle_table(2, 4, 3).unwrap().same_weights(&cohomology_table(2, 4, 3).unwrap()));
    }
}
