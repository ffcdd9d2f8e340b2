//! Threshold tables for `H^{n,q}(X, S_λ E)` and their audit.

use serde::Serialize;

use crate::bounds::triangle;
use crate::bracket::Bracket;
use crate::error::{Error, Result};
use crate::lr::lr_product;
use crate::partition::Partition;

use super::i_of;
use super::lemmas::Tag;

/// The rank-4 and rank-5 tables shipped with the crate.
pub const DEFAULT_TABLES: &str = include_str!("../../data/tables.v1.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub q0: usize,
    pub tag: Tag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub line: usize,
    pub e: usize,
    pub k: usize,
    pub partition: Partition,
    pub bracket: Option<Bracket>,
    pub bound: i64,
    pub entries: Vec<TableEntry>,
}

/// Parses the `e | k | partition | bracket | bound | q0:tag ...` format.
/// Blank lines and `#` comments are skipped.
pub fn parse_tables(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Fixture { line, message };
        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        let [e, k, part, bracket, bound, entries] = fields[..] else {
            return Err(err(format!("expected 6 fields, found {}", fields.len())));
        };
        let num = |t: &str, what: &str| {
            t.parse::<i64>()
                .map_err(|_| err(format!("bad {what} `{t}`")))
        };
        let e = num(e, "rank")?;
        let k = num(k, "k")?;
        if e < 1 || k < 0 {
            return Err(err("rank and k must be nonnegative, rank positive".into()));
        }
        let partition: Partition = part.parse().map_err(|x: Error| err(x.to_string()))?;
        let bracket = match bracket {
            "-" => None,
            b => Some(Bracket::parse(b).map_err(|x| err(x.to_string()))?),
        };
        let bound = num(bound, "bound")?;
        let entries = entries
            .split_whitespace()
            .map(|item| {
                let (q0, tag) = item
                    .split_once(':')
                    .ok_or_else(|| err(format!("entry `{item}` is not q0:tag")))?;
                let q0 = q0
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad q0 `{q0}`")))?;
                let tag = tag.parse::<Tag>().map_err(|x| err(x.to_string()))?;
                Ok(TableEntry { q0, tag })
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(err("row has no q0 entries".into()));
        }
        rows.push(TableRow {
            line,
            e: e as usize,
            k: k as usize,
            partition,
            bracket,
            bound,
            entries,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub line: usize,
    pub e: usize,
    pub partition: Partition,
    pub i: Option<usize>,
    pub failures: Vec<String>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every row: `i(λ,k)` gives the printed bound `t(e−k)+1−i`, each
/// `q0` is at most the bound, the bracket matches the partition, each lemma
/// tag reproduces its `q0`, and the partition occurs in the tensor product the
/// lemma is about.
pub fn verify_rows(rows: &[TableRow]) -> Vec<RowReport> {
    rows.iter().map(verify_row).collect()
}

fn verify_row(row: &TableRow) -> RowReport {
    let mut failures = Vec::new();
    let i = match i_of(&row.partition, row.k) {
        Ok(i) => Some(i),
        Err(e) => {
            failures.push(e.to_string());
            None
        }
    };
    if row.k >= row.e {
        failures.push(format!("k = {} is not below e = {}", row.k, row.e));
    }
    if row.partition.len() > row.e {
        failures.push(format!("{} has more than {} rows", row.partition, row.e));
    }
    if let (Some(i), true) = (i, row.k < row.e) {
        let expected = triangle((row.e - row.k) as u64) as i64 + 1 - i as i64;
        if expected != row.bound {
            failures.push(format!(
                "bound column says {} but t(e−k)+1−i = {expected}",
                row.bound
            ));
        }
    }
    if let Some(b) = row.bracket {
        match b.at(row.e).to_partition() {
            Ok(p) if p == row.partition => {}
            Ok(p) => failures.push(format!("bracket {b} is {p}, not {}", row.partition)),
            Err(e) => failures.push(e.to_string()),
        }
    }
    for entry in &row.entries {
        if entry.q0 as i64 > row.bound {
            failures.push(format!("q0 = {} exceeds bound {}", entry.q0, row.bound));
        }
        let Tag::Lemma(lemma) = entry.tag else {
            continue;
        };
        if lemma.bound() != entry.q0 {
            failures.push(format!(
                "{lemma} gives {} but the row says {}",
                lemma.bound(),
                entry.q0
            ));
        }
        if let Some(factors) = lemma.factors() {
            match occurs_in_product(&row.partition, &factors, row.e) {
                Ok(true) => {}
                Ok(false) => failures.push(format!(
                    "{} does not occur in the product for {lemma}",
                    row.partition
                )),
                Err(e) => failures.push(format!("{lemma}: {e}")),
            }
        }
    }
    RowReport {
        line: row.line,
        e: row.e,
        partition: row.partition.clone(),
        i,
        failures,
    }
}

fn occurs_in_product(target: &Partition, factors: &[Bracket], e: usize) -> Result<bool> {
    let mut acc = std::collections::BTreeMap::from([(Partition::empty(), 1u64)]);
    for b in factors {
        let p = b.at(e).to_partition()?;
        let mut next = std::collections::BTreeMap::new();
        for (nu, m) in &acc {
            for (x, c) in lr_product(nu, &p, Some(e)) {
                *next.entry(x).or_insert(0) += m * c;
            }
        }
        acc = next;
    }
    Ok(acc.contains_key(target))
}

/// Parses and checks `text`, or the shipped tables when `None`.
pub fn verify_tables(text: Option<&str>) -> Result<Vec<RowReport>> {
    let rows = parse_tables(text.unwrap_or(DEFAULT_TABLES))?;
    Ok(verify_rows(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_pass() {
        let reports = verify_tables(None).unwrap();
        assert_eq!(reports.len(), 16);
        for r in &reports {
            assert!(r.passed(), "line {}: {:?}", r.line, r.failures);
        }
    }

    #[test]
    fn detects_bad_rows() {
        let bad = "4 | 1 | 3,2,1 | [1,0,1,2] | 6 | 5:l1(c=1,d=1)\n\
                   4 | 1 | 3,2,1 | - | 5 | 6:A'\n\
                   4 | 1 | 3,2,1 | [1,0,1,2] | 5 | 3:l1(c=1,d=1)\n\
                   4 | 1 | 2,1 | - | 5 | 3:A'\n";
        let reports = verify_tables(Some(bad)).unwrap();
        assert!(reports.iter().all(|r| !r.passed()));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_tables("# c\n4 | 1 | 3,2,1 | - | 5\n").unwrap_err();
        assert!(matches!(err, Error::Fixture { line: 2, .. }));
        assert!(parse_tables("4 | 1 | 3,2,1 | - | 5 | 5:zz\n").is_err());
    }
}
