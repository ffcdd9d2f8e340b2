//! Vanishing thresholds for `H^{n,q}` (and `H^{n−1,q}`) of small tensor
//! products of rank-1 and rank-2 Schur powers, indexed by lemma tag.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bracket::Bracket;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum Lemma {
    /// `S_{[1,c+1]} ⊗ S_{[0,d]}`: `q > 2c+d+2`.
    L1 { c: usize, d: usize },
    /// `S_{[1,0,c,c+1]}`: `q > 3c+1`.
    L1Plus { c: usize },
    /// `S_{[a,0]} ⊗ S_{[b+1,1]}`: `q > a+2`.
    L2 { a: usize, b: usize },
    /// `S_{[a+1,a,0,1]}`: `q > a+1`.
    L2Plus { a: usize },
    /// `S_{[1,c+1]} ⊗ S_{[1,c+1]}`: `q > 4c+4`.
    L3 { c: usize },
    /// `S_{[a+1,1]} ⊗ S_{[a+1,1]}`: `q > 2a+4`.
    L4 { a: usize },
    /// `S_{[a,0]} ⊗ S_{[1,c+1]}`: `q > 2c+2`.
    L5First { a: usize, c: usize },
    /// `S_{[a+1,1]} ⊗ S_{[0,c]}`: `q > a+2`.
    L5Second { a: usize, c: usize },
    /// Degree `n−2` companion: `q > a+2c+2`.
    NMinus2 { a: usize, c: usize },
    /// `S_{[a+1,1]} ⊗ S_{[1,c+1]}`: `q > a+2c+4`.
    L6 { a: usize, c: usize },
    /// `S_{[2,1]} ⊗ S_{[1,2]}`: `q > 6`.
    L7,
}

impl Lemma {
    /// Threshold for `H^{n,q}` (for `NMinus2`, for `H^{n−2,q}`).
    pub fn bound(&self) -> usize {
        match *self {
            Lemma::L1 { c, d } => 2 * c + d + 2,
            Lemma::L1Plus { c } => 3 * c + 1,
            Lemma::L2 { a, .. } => a + 2,
            Lemma::L2Plus { a } => a + 1,
            Lemma::L3 { c } => 4 * c + 4,
            Lemma::L4 { a } => 2 * a + 4,
            Lemma::L5First { c, .. } => 2 * c + 2,
            Lemma::L5Second { a, .. } => a + 2,
            Lemma::NMinus2 { a, c } => a + 2 * c + 2,
            Lemma::L6 { a, c } => a + 2 * c + 4,
            Lemma::L7 => 6,
        }
    }

    /// Companion threshold for `H^{n−1,q}`, where the lemma states one.
    pub fn bound_below(&self) -> Option<usize> {
        match *self {
            Lemma::L1 { c, d } => Some(2 * c + d + 1),
            Lemma::L1Plus { c } => Some(3 * c),
            Lemma::L2 { a, .. } => Some(a + 1),
            Lemma::L2Plus { a } => Some(a),
            Lemma::L3 { c } => Some(4 * c + 3),
            Lemma::L4 { a } => Some(2 * a + 3),
            Lemma::L5First { a, c } | Lemma::L5Second { a, c } => Some(a.max(2 * c) + 1),
            Lemma::NMinus2 { .. } | Lemma::L6 { .. } | Lemma::L7 => None,
        }
    }

    /// The brackets whose tensor product the threshold is about.
    pub fn factors(&self) -> Option<Vec<Bracket>> {
        use Bracket::{Rank1, Rank2};
        Some(match *self {
            Lemma::L1 { c, d } => vec![Rank1 { a: 1, b: c + 1 }, Rank1 { a: 0, b: d }],
            Lemma::L1Plus { c } => vec![Rank2 { a: 1, b: 0, c, d: c + 1 }],
            Lemma::L2 { a, b } => vec![Rank1 { a, b: 0 }, Rank1 { a: b + 1, b: 1 }],
            Lemma::L2Plus { a } => vec![Rank2 { a: a + 1, b: a, c: 0, d: 1 }],
            Lemma::L3 { c } => vec![Rank1 { a: 1, b: c + 1 }; 2],
            Lemma::L4 { a } => vec![Rank1 { a: a + 1, b: 1 }; 2],
            Lemma::L5First { a, c } => vec![Rank1 { a, b: 0 }, Rank1 { a: 1, b: c + 1 }],
            Lemma::L5Second { a, c } => vec![Rank1 { a: a + 1, b: 1 }, Rank1 { a: 0, b: c }],
            Lemma::L6 { a, c } => vec![Rank1 { a: a + 1, b: 1 }, Rank1 { a: 1, b: c + 1 }],
            Lemma::L7 => vec![Rank1 { a: 2, b: 1 }, Rank1 { a: 1, b: 2 }],
            Lemma::NMinus2 { .. } => return None,
        })
    }

    fn name(&self) -> &'static str {
        match self {
            Lemma::L1 { .. } => "l1",
            Lemma::L1Plus { .. } => "l1+",
            Lemma::L2 { .. } => "l2",
            Lemma::L2Plus { .. } => "l2+",
            Lemma::L3 { .. } => "l3",
            Lemma::L4 { .. } => "l4",
            Lemma::L5First { .. } => "l5",
            Lemma::L5Second { .. } => "l5b",
            Lemma::NMinus2 { .. } => "n-2",
            Lemma::L6 { .. } => "l6",
            Lemma::L7 => "l7",
        }
    }

    fn params(&self) -> Vec<(char, usize)> {
        match *self {
            Lemma::L1 { c, d } => vec![('c', c), ('d', d)],
            Lemma::L1Plus { c } | Lemma::L3 { c } => vec![('c', c)],
            Lemma::L2 { a, b } => vec![('a', a), ('b', b)],
            Lemma::L2Plus { a } | Lemma::L4 { a } => vec![('a', a)],
            Lemma::L5First { a, c }
            | Lemma::L5Second { a, c }
            | Lemma::NMinus2 { a, c }
            | Lemma::L6 { a, c } => vec![('a', a), ('c', c)],
            Lemma::L7 => vec![],
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        let params = self.params();
        if !params.is_empty() {
            let body: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// A table annotation: either a lemma with parameters, or `A'`, a bound taken
/// as data from outside this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    External,
    Lemma(Lemma),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::External => f.write_str("A'"),
            Tag::Lemma(l) => l.fmt(f),
        }
    }
}

impl FromStr for Tag {
    type Err = Error;

    /// `A'`, `l7`, or `name(k=v,...)`, e.g. `l1(c=1,d=1)`.
    fn from_str(s: &str) -> Result<Tag> {
        let s = s.trim();
        if s == "A'" {
            return Ok(Tag::External);
        }
        let (name, args) = match s.split_once('(') {
            Some((n, rest)) => {
                let body = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::UnknownLemma(s.to_string()))?;
                (n, body)
            }
            None => (s, ""),
        };
        let mut vals = std::collections::BTreeMap::new();
        for kv in args.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::UnknownLemma(s.to_string()))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::UnknownLemma(s.to_string()))?;
            vals.insert(k.trim().to_string(), v);
        }
        let get = |k: &str| {
            vals.get(k)
                .copied()
                .ok_or_else(|| Error::UnknownLemma(format!("{s}: missing `{k}`")))
        };
        let lemma = match name {
            "l1" => Lemma::L1 { c: get("c")?, d: get("d")? },
            "l1+" => Lemma::L1Plus { c: get("c")? },
            "l2" => Lemma::L2 { a: get("a")?, b: get("b")? },
            "l2+" => Lemma::L2Plus { a: get("a")? },
            "l3" => Lemma::L3 { c: get("c")? },
            "l4" => Lemma::L4 { a: get("a")? },
            "l5" => Lemma::L5First { a: get("a")?, c: get("c")? },
            "l5b" => Lemma::L5Second { a: get("a")?, c: get("c")? },
            "n-2" => Lemma::NMinus2 { a: get("a")?, c: get("c")? },
            "l6" => Lemma::L6 { a: get("a")?, c: get("c")? },
            "l7" => Lemma::L7,
            _ => return Err(Error::UnknownLemma(s.to_string())),
        };
        let expected = lemma.params().len();
        if vals.len() != expected {
            return Err(Error::UnknownLemma(format!("{s}: expected {expected} parameters")));
        }
        Ok(Tag::Lemma(lemma))
    }
}
