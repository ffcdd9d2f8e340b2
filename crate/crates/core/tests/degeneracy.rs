use std::collections::BTreeMap;

use grasscoh::bounds::triangle;
use grasscoh::bracket::Bracket;
use grasscoh::degeneracy::{
    i_of, is_k_symmetric, k0_insert, lr_identity_checks, parse_tables, resolution_terms, rho, verify_rows,
    verify_tables, Lemma, SymmetricDecomposition, Tag, DEFAULT_TABLES,
};
use grasscoh::lr::lr_product;
use grasscoh::partition::enumerate_box;
use grasscoh::Partition;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// `(2l, μ, μ*)(k−1)` built cell by cell: square, μ to the right, μ* below, then
/// `k−1` rows of length `2l` inserted under the square.
fn build(l: usize, mu: &Partition, k: usize) -> Partition {
    let side = 2 * l;
    let mut rows = vec![side; side];
    for (i, &m) in mu.parts().iter().enumerate() {
        rows[i] += m;
    }
    rows.extend(std::iter::repeat_n(side, k - 1));
    let conj = mu.conjugate();
    rows.extend(conj.parts().iter().copied());
    Partition::new(rows).unwrap()
}

/// Every `(k−1)`-symmetric partition with `l ≥ 1` that fits in `rows × cols`.
fn symmetric_in_box(rows: usize, cols: usize, k: usize) -> BTreeMap<Partition, (usize, Partition)> {
    let mut out = BTreeMap::new();
    for l in 1..=rows / 2 {
        for mu in enumerate_box(2 * l, cols) {
            let lam = build(l, &mu, k);
            if lam.len() <= rows && lam.first() <= cols {
                out.insert(lam, (l, mu));
            }
        }
    }
    out
}

#[test]
fn recognizer_matches_construction() {
    for k in 1..=3 {
        let want = symmetric_in_box(8, 8, k);
        for lam in enumerate_box(8, 8) {
            let got = is_k_symmetric(&lam, k).filter(|d| d.l > 0);
            match want.get(&lam) {
                Some((l, mu)) => {
                    let d = got.unwrap_or_else(|| panic!("{lam} k={k} missed"));
                    assert_eq!((d.l, &d.mu), (*l, mu));
                    let rebuilt = d.to_partition().insert_parts(k - 1);
                    assert_eq!(rebuilt, lam);
                    assert_eq!(i_of(&lam, k).unwrap(), mu.weight() + l * (2 * l - 1));
                }
                None => assert!(got.is_none(), "{lam} k={k} wrongly recognized"),
            }
        }
    }
    assert!(is_k_symmetric(&p(&[2, 2]), 0).is_none());
}

#[test]
fn symmetric_examples() {
    let d = is_k_symmetric(&p(&[3, 2, 1]), 1).unwrap();
    assert_eq!((d.l, d.mu), (1, p(&[1])));
    let d = is_k_symmetric(&p(&[5, 5, 2, 2, 2]), 1).unwrap();
    assert_eq!((d.l, d.mu), (1, p(&[3, 3])));
    assert!(is_k_symmetric(&p(&[2, 1]), 1).is_none());
    assert_eq!(i_of(&p(&[2, 2]), 1).unwrap(), 1);
    assert_eq!(i_of(&p(&[3, 2, 1]), 1).unwrap(), 2);
    assert_eq!(i_of(&p(&[4, 4, 2, 2]), 1).unwrap(), 5);
    assert!(i_of(&p(&[2, 1]), 1).is_err());
}

#[test]
fn insertion_of_two_parts() {
    assert_eq!(p(&[3, 2, 1]).insert_parts(2), p(&[3, 2, 2, 2, 1]));
    assert_eq!(build(1, &p(&[1]), 3), p(&[3, 2, 2, 2, 1]));
}

#[test]
fn resolution_examples() {
    let t = resolution_terms(4, 1, 1).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!((t[0].lambda.clone(), t[0].twist), (p(&[2, 2]), -2));
    let lams: Vec<Partition> = resolution_terms(4, 1, 3).unwrap().into_iter().map(|t| t.lambda).collect();
    assert_eq!(lams, vec![p(&[3, 3, 2]), p(&[4, 2, 1, 1])]);
    for e in 2..=6 {
        for k in 1..e {
            let t = resolution_terms(e, k, 0).unwrap();
            assert_eq!(t.len(), 1);
            assert!(t[0].lambda.is_empty() && t[0].twist == 0);
        }
    }
    assert!(resolution_terms(3, 3, 0).is_err());
}

#[test]
fn resolution_terms_match_construction() {
    for e in 2..=7 {
        for k in 1..e {
            let want = symmetric_in_box(e, 2 * e, k);
            let mut seen = 0;
            for i in 1..=triangle((e - k) as u64) as usize + 3 {
                for t in resolution_terms(e, k, i).unwrap() {
                    let (l, mu) = &want[&t.lambda];
                    assert_eq!(mu.weight() + l * (2 * l - 1), i);
                    assert_eq!(t.twist, -((l * (2 * l + k - 1)) as i64));
                    assert!(t.lambda.len() <= e);
                    seen += 1;
                }
            }
            // every constructed shape with at most e rows has some index in range
            let in_range = want
                .iter()
                .filter(|(_, (l, mu))| mu.weight() + l * (2 * l - 1) <= triangle((e - k) as u64) as usize + 3)
                .count();
            assert_eq!(seen, in_range, "e={e} k={k}");
        }
    }
}

#[test]
fn corank_one_and_index_range() {
    for e in 2..=8 {
        let t = resolution_terms(e, e - 1, 1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].lambda, Partition::rectangle(e, 2));
        assert_eq!(t[0].twist, -(e as i64));
    }
    for e in 2..=9usize {
        for k in (1..e).filter(|k| e - k <= 4) {
            let top = triangle((e - k) as u64) as usize;
            assert!(!resolution_terms(e, k, top).unwrap().is_empty(), "e={e} k={k}");
            for i in top + 1..top + 10 {
                assert!(resolution_terms(e, k, i).unwrap().is_empty(), "e={e} k={k} i={i}");
            }
        }
    }
}

#[test]
fn k0_shapes() {
    assert_eq!(k0_insert(&SymmetricDecomposition::new(1, Partition::empty()).unwrap()).unwrap(), p(&[2]));
    assert_eq!(k0_insert(&SymmetricDecomposition::new(1, p(&[1])).unwrap()).unwrap(), p(&[3, 1]));
    assert!(SymmetricDecomposition::new(1, p(&[1, 1, 1])).is_err());
    let t = resolution_terms(4, 0, 1).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].lambda, p(&[2]));
}

#[test]
fn rho_examples() {
    assert_eq!(rho(10, 4, 1).unwrap(), 4);
    assert_eq!(rho(6, 4, 1).unwrap(), 0);
    for n in 0..10 {
        for e in 2..8 {
            assert_eq!(rho(n, e, e - 1).unwrap(), n as i64 - 1);
        }
    }
    assert!(rho(5, 3, 3).is_err());
}

#[test]
fn lemma_calculators() {
    assert_eq!("l1(c=1,d=1)".parse::<Tag>().unwrap(), Tag::Lemma(Lemma::L1 { c: 1, d: 1 }));
    assert_eq!(Lemma::L1 { c: 1, d: 1 }.bound(), 5);
    assert_eq!(Lemma::L1Plus { c: 1 }.bound(), 4);
    assert_eq!(Lemma::L7.bound(), 6);
    assert_eq!(Lemma::L3 { c: 0 }.bound(), 4);
    assert_eq!("A'".parse::<Tag>().unwrap(), Tag::External);
    assert!("l8".parse::<Tag>().is_err());
    assert!("l2(a=1)".parse::<Tag>().is_err());
}

#[test]
fn shipped_tables_pass() {
    let rows = parse_tables(DEFAULT_TABLES).unwrap();
    assert_eq!(rows.len(), 16);
    let reports = verify_tables(None).unwrap();
    for r in &reports {
        assert!(r.passed(), "line {}: {:?}", r.line, r.failures);
    }
    let find = |e: usize, lam: &[usize]| reports.iter().find(|r| r.e == e && r.partition == p(lam)).unwrap();
    assert_eq!(find(4, &[3, 3, 2]).i, Some(3));
    assert_eq!(find(5, &[5, 5, 2, 2, 2]).i, Some(7));
    let row = rows.iter().find(|r| r.e == 5 && r.partition == p(&[4, 3, 2, 1])).unwrap();
    assert_eq!(row.bound, 7);
    let q0s: Vec<usize> = row.entries.iter().map(|x| x.q0).collect();
    assert_eq!(q0s, vec![7, 6]);
}

#[test]
fn broken_rows_are_reported() {
    let bad_bound = "4 | 1 | 3,2,1 | [1,0,1,2] | 6 | 5:l1(c=1,d=1)";
    let rows = parse_tables(bad_bound).unwrap();
    assert!(!verify_rows(&rows)[0].passed());
    let bad_q0 = "4 | 1 | 3,2,1 | [1,0,1,2] | 5 | 4:l1(c=1,d=1)";
    assert!(!verify_rows(&parse_tables(bad_q0).unwrap())[0].passed());
    let bad_bracket = "4 | 1 | 3,2,1 | [1,1,1,1] | 5 | 4:A'";
    assert!(!verify_rows(&parse_tables(bad_bracket).unwrap())[0].passed());
    let not_symmetric = "4 | 1 | 2,1 | - | 5 | 1:A'";
    assert!(!verify_rows(&parse_tables(not_symmetric).unwrap())[0].passed());
    assert!(parse_tables("4 | 1 | 3,2,1").is_err());
    assert!(parse_tables("4 | 1 | 3,2,1 | - | 5 | 4:l9").is_err());
    assert!(parse_tables("4 | 1 | 3,2,1 | - | 5 |").is_err());
    assert!(parse_tables("# only a comment\n\n").unwrap().is_empty());
}

#[test]
fn lr_identity_at_rank_three() {
    let one_zero = Bracket::parse("[1,0]").unwrap().at(3).to_partition().unwrap();
    let zero_one = Bracket::parse("[0,1]").unwrap().at(3).to_partition().unwrap();
    let prod = lr_product(&one_zero, &zero_one, Some(3));
    let want = BTreeMap::from([(p(&[2, 2, 2]), 1), (p(&[3, 2, 1]), 1)]);
    assert_eq!(prod, want);
    let checks = lr_identity_checks(3).unwrap();
    assert!(checks.iter().all(|c| c.passed));
}

#[test]
fn lr_identities_hold_at_small_ranks() {
    for e in 3..=6 {
        let checks = lr_identity_checks(e).unwrap();
        assert!(!checks.is_empty());
        for c in checks {
            assert!(c.passed, "e={e} {}: {}", c.name, c.detail);
        }
    }
    let rep = grasscoh::verify::run_suite("lr-identities").unwrap();
    assert!(rep.passed(), "{:?}", rep.witnesses);
}

#[test]
fn verify_suites_pass() {
    for name in ["tables", "resolution"] {
        let rep = grasscoh::verify::run_suite(name).unwrap();
        assert!(rep.passed(), "{name}: {:?}", rep.witnesses);
    }
}
