//! Bookkeeping for the resolution of a symmetric degeneracy locus.
//!
//! Terms are indexed by partitions `(2l, μ, μ*)`: the Durfee square of side
//! `2l` with `μ` glued to its right and `μ*` below it. For corank data `k ≥ 1`,
//! `k−1` extra parts equal to the rank are inserted after the square.

mod identities;
mod lemmas;
mod tables;

pub use identities::{lr_identity_checks, IdentityCheck};
pub use lemmas::{Lemma, Tag};
pub use tables::{parse_tables, verify_rows, verify_tables, RowReport, TableEntry, TableRow, DEFAULT_TABLES};

use serde::Serialize;

use crate::bounds::triangle;
use crate::error::{invalid, Error, Result};
use crate::partition::{partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricDecomposition {
    pub l: usize,
    pub mu: Partition,
}

impl SymmetricDecomposition {
    pub fn new(l: usize, mu: Partition) -> Result<Self> {
        if mu.len() > 2 * l {
            return Err(invalid(format!("μ = {mu} has more than 2l = {} parts", 2 * l)));
        }
        Ok(SymmetricDecomposition { l, mu })
    }

    /// `λ_i = 2l + μ_i` for `i ≤ 2l`, then `μ*`.
    pub fn to_partition(&self) -> Partition {
        let side = 2 * self.l;
        let mut parts: Vec<usize> = (0..side).map(|i| side + self.mu.part(i)).collect();
        parts.extend(self.mu.conjugate().into_parts());
        Partition::new(parts).expect("square plus μ and μ* is a partition")
    }

    /// `i = |μ| + l(2l−1)`.
    pub fn index(&self) -> usize {
        self.mu.weight() + self.l * (2 * self.l).saturating_sub(1)
    }
}

/// Recognizes `λ = (2l, μ, μ*)(k−1)`. Only the empty partition has `l = 0`.
pub fn is_k_symmetric(lambda: &Partition, k: usize) -> Option<SymmetricDecomposition> {
    if k == 0 {
        return None;
    }
    if lambda.is_empty() {
        return Some(SymmetricDecomposition {
            l: 0,
            mu: Partition::empty(),
        });
    }
    let d = lambda.durfee_rank();
    if !d.is_multiple_of(2) {
        return None;
    }
    let extra = k - 1;
    let parts = lambda.parts();
    if parts.len() < d + extra || parts[d..d + extra].iter().any(|&x| x != d) {
        return None;
    }
    let mut core: Vec<usize> = parts[..d].to_vec();
    core.extend_from_slice(&parts[d + extra..]);
    let mu = Partition::new(core[..d].iter().map(|&x| x - d).collect()).ok()?;
    if mu.len() > d || core[d..] != *mu.conjugate().parts() {
        return None;
    }
    Some(SymmetricDecomposition { l: d / 2, mu })
}

/// `i(λ, k)`, the resolution index of a `(k−1)`-symmetric partition.
pub fn i_of(lambda: &Partition, k: usize) -> Result<usize> {
    is_k_symmetric(lambda, k)
        .map(|dec| dec.index())
        .ok_or_else(|| Error::NotSymmetric(lambda.clone()))
}

/// The `(2l, μ, μ*)(−1)` shape used when `k = 0`: `ν_i = 2l + μ_i` for
/// `i < 2l`, `ν_{2l} = μ*_1 + μ_{2l}`, then `μ*_2, μ*_3, …`.
pub fn k0_insert(decomp: &SymmetricDecomposition) -> Result<Partition> {
    let SymmetricDecomposition { l, mu } = decomp;
    let side = 2 * l;
    if mu.len() > side {
        return Err(invalid(format!("μ = {mu} has more than 2l = {side} parts")));
    }
    if side == 0 {
        return Ok(Partition::empty());
    }
    let conj = mu.conjugate();
    let mut parts: Vec<usize> = (0..side - 1).map(|i| side + mu.part(i)).collect();
    parts.push(conj.part(0) + mu.part(side - 1));
    parts.extend(conj.parts().iter().skip(1));
    Partition::new(parts)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResolutionTerm {
    pub i: usize,
    pub lambda: Partition,
    /// Exponent of the line bundle, `−l(2l+k−1)`.
    pub twist: i64,
}

/// All summands `S_λ E ⊗ L^{twist}` of the `i`-th term with at most `e` rows.
/// `k = 0` uses [`k0_insert`] in place of the inserted parts.
pub fn resolution_terms(e: usize, k: usize, i: usize) -> Result<Vec<ResolutionTerm>> {
    if k >= e {
        return Err(invalid(format!("need k < e, got k={k}, e={e}")));
    }
    let mut out = Vec::new();
    for l in 0usize.. {
        let base = l * (2 * l).saturating_sub(1);
        if base > i || 2 * l > e {
            break;
        }
        if l == 0 {
            if i == 0 {
                out.push(ResolutionTerm {
                    i,
                    lambda: Partition::empty(),
                    twist: 0,
                });
            }
            continue;
        }
        for mu in partitions_of(i - base, e, 2 * l) {
            let dec = SymmetricDecomposition::new(l, mu)?;
            let lambda = if k == 0 {
                k0_insert(&dec)?
            } else {
                dec.to_partition().insert_parts(k - 1)
            };
            if lambda.len() <= e {
                let twist = -((l * (2 * l + k)) as i64 - l as i64);
                out.push(ResolutionTerm { i, lambda, twist });
            }
        }
    }
    out.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    Ok(out)
}

/// `ρ = n − t(e−k)`.
pub fn rho(n: u64, e: u64, k: u64) -> Result<i64> {
    if e <= k {
        return Err(invalid(format!("need e > k, got e={e}, k={k}")));
    }
    Ok(n as i64 - triangle(e - k) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn symmetric_examples() {
        let d = is_k_symmetric(&p(&[3, 2, 1]), 1).unwrap();
        assert_eq!((d.l, d.mu.clone()), (1, p(&[1])));
        let d = is_k_symmetric(&p(&[5, 5, 2, 2, 2]), 1).unwrap();
        assert_eq!((d.l, d.mu.clone()), (1, p(&[3, 3])));
        assert!(is_k_symmetric(&p(&[2, 1]), 1).is_none());
        let d = is_k_symmetric(&p(&[3, 2, 2, 2, 1]), 3).unwrap();
        assert_eq!((d.l, d.mu.clone()), (1, p(&[1])));
        assert!(is_k_symmetric(&p(&[3, 2, 1]), 2).is_none());
    }

    #[test]
    fn index_examples() {
        assert_eq!(i_of(&p(&[2, 2]), 1).unwrap(), 1);
        assert_eq!(i_of(&p(&[3, 2, 1]), 1).unwrap(), 2);
        assert_eq!(i_of(&p(&[4, 4, 2, 2]), 1).unwrap(), 5);
        assert!(i_of(&p(&[2, 1]), 1).is_err());
    }

    #[test]
    fn term_examples() {
        let t = resolution_terms(4, 1, 1).unwrap();
        assert_eq!(t, vec![ResolutionTerm { i: 1, lambda: p(&[2, 2]), twist: -2 }]);
        let lams: Vec<_> = resolution_terms(4, 1, 3).unwrap().into_iter().map(|t| t.lambda).collect();
        assert_eq!(lams, vec![p(&[3, 3, 2]), p(&[4, 2, 1, 1])]);
        assert!(resolution_terms(4, 1, 3).unwrap().iter().all(|t| t.twist == -2));
        let t = resolution_terms(5, 2, 0).unwrap();
        assert_eq!(t, vec![ResolutionTerm { i: 0, lambda: Partition::empty(), twist: 0 }]);
        assert!(resolution_terms(3, 3, 1).is_err());
    }

    #[test]
    fn k0_examples() {
        let d = SymmetricDecomposition::new(1, Partition::empty()).unwrap();
        assert_eq!(k0_insert(&d).unwrap(), p(&[2]));
        let d = SymmetricDecomposition::new(1, p(&[1])).unwrap();
        assert_eq!(k0_insert(&d).unwrap(), p(&[3, 1]));
        let bad = SymmetricDecomposition { l: 1, mu: p(&[1, 1, 1]) };
        assert!(k0_insert(&bad).is_err());
        assert!(SymmetricDecomposition::new(1, p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(10, 4, 1).unwrap(), 4);
        assert_eq!(rho(7, 5, 4).unwrap(), 6);
        assert_eq!(rho(6, 4, 1).unwrap(), 0);
        assert_eq!(rho(2, 5, 1).unwrap(), -8);
        assert!(rho(3, 2, 2).is_err());
    }
}
