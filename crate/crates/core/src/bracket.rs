//! Bracket notation for partitions of Durfee rank 1 and 2 relative to a rank `e`.
//!
//! `[a,b]` is the rank-1 partition with first part `a+1` and first column `e−b`.
//! `[a,b,c,d]` is the rank-2 partition with `λ_1 = a+2`, `λ_2 = b+2`,
//! `λ*_1 = e−c`, `λ*_2 = e−d`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bracket {
    Rank1 { a: usize, b: usize },
    Rank2 { a: usize, b: usize, c: usize, d: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BracketShape {
    pub bracket: Bracket,
    pub e: usize,
}

impl Bracket {
    pub fn at(self, e: usize) -> BracketShape {
        BracketShape { bracket: self, e }
    }

    /// Parses `[a,b]` or `[a,b,c,d]` (brackets optional).
    pub fn parse(s: &str) -> Result<Bracket> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let nums = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidBracket(format!("bad entry `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        match nums[..] {
            [a, b] => Ok(Bracket::Rank1 { a, b }),
            [a, b, c, d] => Ok(Bracket::Rank2 { a, b, c, d }),
            _ => Err(Error::InvalidBracket(format!(
                "`{s}` needs 2 or 4 entries"
            ))),
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Rank1 { a, b } => write!(f, "[{a},{b}]"),
            Bracket::Rank2 { a, b, c, d } => write!(f, "[{a},{b},{c},{d}]"),
        }
    }
}

impl BracketShape {
    pub fn to_partition(&self) -> Result<Partition> {
        let e = self.e;
        match self.bracket {
            Bracket::Rank1 { a, b } => {
                if b >= e {
                    return Err(Error::InvalidBracket(format!(
                        "{} at e={e}: need b ≤ e−1",
                        self.bracket
                    )));
                }
                let mut parts = vec![a + 1];
                parts.extend(std::iter::repeat_n(1, e - b - 1));
                Partition::new(parts)
            }
            Bracket::Rank2 { a, b, c, d } => {
                if a < b || c > d || d + 2 > e {
                    return Err(Error::InvalidBracket(format!(
                        "{} at e={e}: need a ≥ b, c ≤ d, d ≤ e−2",
                        self.bracket
                    )));
                }
                let mut parts = vec![a + 2, b + 2];
                parts.extend(std::iter::repeat_n(2, e - d - 2));
                parts.extend(std::iter::repeat_n(1, d - c));
                Partition::new(parts)
            }
        }
    }

    /// Inverse of [`to_partition`](Self::to_partition) for partitions of rank 1 or 2
    /// with at most `e` parts.
    pub fn from_partition(lambda: &Partition, e: usize) -> Option<BracketShape> {
        if lambda.len() > e {
            return None;
        }
        let conj = lambda.conjugate();
        let bracket = match lambda.durfee_rank() {
            1 => Bracket::Rank1 {
                a: lambda.part(0) - 1,
                b: e - conj.part(0),
            },
            2 => Bracket::Rank2 {
                a: lambda.part(0) - 2,
                b: lambda.part(1) - 2,
                c: e - conj.part(0),
                d: e - conj.part(1),
            },
            _ => return None,
        };
        Some(bracket.at(e))
    }
}
