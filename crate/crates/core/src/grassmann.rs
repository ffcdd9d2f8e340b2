//! Hodge cohomology `H^{p,q}(G(r,e), O(l))` from admissible partitions.
//!
//! Each `l`-admissible `λ` in the `r × (e−r)` box contributes one irreducible
//! component `S_μ C^e` at `(|λ|, #{hooks > l})`, where `μ` is the decreasing
//! rearrangement of the `r` values `l − h_minus_i` and the `e − r` values
//! `v_minus_j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::admissible::{enumerate_admissible, v_minus, AdmissibleRecord};
use crate::error::{invalid, Result};
use crate::partition::Partition;

/// One irreducible summand: its highest weight and the partition that produced it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Component {
    pub weight: Vec<i64>,
    pub source: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub r: usize,
    pub e: usize,
    pub l: usize,
    /// `(p, q)` to components, each list sorted by weight then source.
    pub entries: BTreeMap<(usize, usize), Vec<Component>>,
}

impl CohomologyTable {
    pub(crate) fn empty(r: usize, e: usize, l: usize) -> Self {
        CohomologyTable {
            r,
            e,
            l,
            entries: BTreeMap::new(),
        }
    }

    pub(crate) fn push(&mut self, p: usize, q: usize, weight: Vec<i64>, source: Partition) {
        let slot = self.entries.entry((p, q)).or_default();
        let c = Component { weight, source };
        let at = slot.partition_point(|x| x < &c);
        slot.insert(at, c);
    }

    /// The table with sources forgotten: `(p, q)` to the sorted multiset of weights.
    pub fn weight_multisets(&self) -> BTreeMap<(usize, usize), Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|(&k, v)| {
                let mut ws: Vec<Vec<i64>> = v.iter().map(|c| c.weight.clone()).collect();
                ws.sort();
                (k, ws)
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn p_max(&self) -> Option<usize> {
        self.entries.keys().map(|&(p, _)| p).max()
    }

    /// Same `(p, q)` support and the same weight multiset at every position.
    pub fn same_weights(&self, other: &CohomologyTable) -> bool {
        self.weight_multisets() == other.weight_multisets()
    }

    /// Positions where the two tables disagree, with both weight lists.
    #[allow(clippy::type_complexity)]
    pub fn diff(
        &self,
        other: &CohomologyTable,
    ) -> Vec<((usize, usize), Vec<Vec<i64>>, Vec<Vec<i64>>)> {
        let a = self.weight_multisets();
        let b = other.weight_multisets();
        let mut keys: Vec<_> = a.keys().chain(b.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let x = a.get(&k).cloned().unwrap_or_default();
                let y = b.get(&k).cloned().unwrap_or_default();
                (x != y).then_some((k, x, y))
            })
            .collect()
    }
}

pub(crate) fn check_grassmannian(r: usize, e: usize, l: usize) -> Result<()> {
    if r == 0 || r >= e {
        return Err(invalid(format!("need 1 ≤ r < e, got r={r}, e={e}")));
    }
    if l == 0 {
        return Err(invalid("l must be at least 1"));
    }
    Ok(())
}

/// Highest weight attached to an admissible record on `G(r, e)`.
pub fn snow_weight(record: &AdmissibleRecord, e: usize) -> Result<Vec<i64>> {
    if record.r >= e {
        return Err(invalid(format!("record has r={} but e={e}", record.r)));
    }
    let cols = v_minus(&record.lambda, record.l, e - record.r)?;
    let mut w: Vec<i64> = record
        .h_minus
        .iter()
        .map(|&h| record.l as i64 - h as i64)
        .chain(cols.into_iter().map(|v| v as i64))
        .collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    Ok(w)
}

pub fn cohomology_table(r: usize, e: usize, l: usize) -> Result<CohomologyTable> {
    check_grassmannian(r, e, l)?;
    let mut table = CohomologyTable::empty(r, e, l);
    for rec in enumerate_admissible(r, l, Some(e - r))? {
        let w = snow_weight(&rec, e)?;
        table.push(rec.p, rec.q, w, rec.lambda);
    }
    Ok(table)
}

/// Largest `p` with `H^{p,q} ≠ 0` for some `q`.
pub fn p_max(r: usize, e: usize, l: usize) -> Result<usize> {
    check_grassmannian(r, e, l)?;
    Ok(enumerate_admissible(r, l, Some(e - r))?
        .map(|rec| rec.p)
        .max()
        .unwrap_or(0))
}
