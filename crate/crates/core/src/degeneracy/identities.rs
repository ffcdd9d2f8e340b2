//! Decompositions of products of bracket Schur powers, checked with the LR engine.
//!
//! `[0,0,x,y]`-type components (first two parts equal to 2) form the remainder
//! terms that the identities leave unspecified; they are matched by shape only.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bracket::Bracket;
use crate::error::Result;
use crate::lr::lr_product;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub e: usize,
    pub passed: bool,
    pub detail: String,
}

type Decomp = BTreeMap<Partition, u64>;

fn shape(b: Bracket, e: usize) -> Result<Partition> {
    b.at(e).to_partition()
}

fn product(x: Bracket, y: Bracket, e: usize) -> Result<Decomp> {
    Ok(lr_product(&shape(x, e)?, &shape(y, e)?, Some(e)))
}

fn is_remainder(p: &Partition) -> bool {
    p.part(0) == 2 && p.part(1) == 2
}

fn without_remainder(d: &Decomp) -> Decomp {
    d.iter()
        .filter(|(p, _)| !is_remainder(p))
        .map(|(p, &m)| (p.clone(), m))
        .collect()
}

fn add(d: &mut Decomp, p: Partition, m: u64) {
    *d.entry(p).or_insert(0) += m;
}

fn show(d: &Decomp) -> String {
    let items: Vec<String> = d.iter().map(|(p, m)| format!("({p}):{m}")).collect();
    format!("{{{}}}", items.join(" "))
}

fn check(name: String, e: usize, lhs: &Decomp, rhs: &Decomp) -> IdentityCheck {
    let passed = lhs == rhs;
    let detail = if passed {
        format!("{} components", lhs.len())
    } else {
        format!("left {} vs right {}", show(lhs), show(rhs))
    };
    IdentityCheck {
        name,
        e,
        passed,
        detail,
    }
}

/// Every decomposition that makes sense at rank `e`:
///
/// * `[1,0] ⊗ [0,1] = (2^e) ⊕ (3,2^{e−2},1)` for `e ≥ 3`;
/// * for `c < d`, `e ≥ c+d+3`: `[1,c+1] ⊗ [0,d] = ⊕_{x ≤ c+1} [1,0,x,c+d+1−x] ⊕ R`
///   and `[0,c] ⊗ [1,d+1] = ⊕_{x ≤ c} [1,0,x,c+d+1−x] ⊕ R`;
/// * for `c ≥ 1`, `e ≥ 2c+4`: `[1,c+1] ⊗ [0,c] = [1,c+2] ⊗ [0,c−1] ⊕ [1,0,c,c+1] ⊕ R`
///   and `[0,c] ⊗ [0,c] = [0,c−1] ⊗ [0,c+1] ⊕ [0,0,c,c]`,
///
/// where `R` stands for `[0,0,x,y]`-type components.
pub fn lr_identity_checks(e: usize) -> Result<Vec<IdentityCheck>> {
    use Bracket::{Rank1, Rank2};
    let mut out = Vec::new();
    if e >= 3 {
        let lhs = product(Rank1 { a: 1, b: 0 }, Rank1 { a: 0, b: 1 }, e)?;
        let mut rhs = Decomp::new();
        add(&mut rhs, Partition::rectangle(e, 2), 1);
        add(&mut rhs, shape(Rank2 { a: 1, b: 0, c: 0, d: 1 }, e)?, 1);
        out.push(check("[1,0]x[0,1]".into(), e, &lhs, &rhs));
    }
    for c in 0..e {
        for d in c + 1..e {
            if c + d + 3 > e {
                continue;
            }
            let top = c + d + 1;
            let lhs = without_remainder(&product(Rank1 { a: 1, b: c + 1 }, Rank1 { a: 0, b: d }, e)?);
            let mut rhs = Decomp::new();
            for x in 0..=c + 1 {
                add(&mut rhs, shape(Rank2 { a: 1, b: 0, c: x, d: top - x }, e)?, 1);
            }
            out.push(check(format!("[1,{}]x[0,{d}]", c + 1), e, &lhs, &rhs));

            let lhs = without_remainder(&product(Rank1 { a: 0, b: c }, Rank1 { a: 1, b: d + 1 }, e)?);
            let mut rhs = Decomp::new();
            for x in 0..=c {
                add(&mut rhs, shape(Rank2 { a: 1, b: 0, c: x, d: top - x }, e)?, 1);
            }
            out.push(check(format!("[0,{c}]x[1,{}]", d + 1), e, &lhs, &rhs));
        }
    }
    for c in 1..e {
        if 2 * c + 4 > e {
            break;
        }
        let lhs = without_remainder(&product(Rank1 { a: 1, b: c + 1 }, Rank1 { a: 0, b: c }, e)?);
        let mut rhs = without_remainder(&product(Rank1 { a: 1, b: c + 2 }, Rank1 { a: 0, b: c - 1 }, e)?);
        add(&mut rhs, shape(Rank2 { a: 1, b: 0, c, d: c + 1 }, e)?, 1);
        out.push(check(format!("[1,{}]x[0,{c}] shift", c + 1), e, &lhs, &rhs));

        let lhs = product(Rank1 { a: 0, b: c }, Rank1 { a: 0, b: c }, e)?;
        let mut rhs = product(Rank1 { a: 0, b: c - 1 }, Rank1 { a: 0, b: c + 1 }, e)?;
        add(&mut rhs, shape(Rank2 { a: 0, b: 0, c, d: c }, e)?, 1);
        out.push(check(format!("[0,{c}]x[0,{c}] shift"), e, &lhs, &rhs));
    }
    Ok(out)
}
