use std::collections::BTreeMap;

use grasscoh::admissible::{enumerate_admissible, AdmissibleRecord};
use grasscoh::bott::{bott_step, cotangent_components, oracle_table};
use grasscoh::grassmann::{cohomology_table, p_max, snow_weight};
use grasscoh::partition::{binomial, schur_dimension};
use grasscoh::Partition;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn dim(weight: &[i64]) -> u128 {
    // weights here are nonnegative, so they are partitions
    let parts: Vec<usize> = weight.iter().map(|&x| x as usize).collect();
    schur_dimension(&Partition::new(parts).unwrap(), weight.len()).unwrap()
}

#[test]
fn snow_weight_examples() {
    let rec = |lam: Partition, l, r, e| AdmissibleRecord::new(lam, l, r, Some(e - r)).unwrap();
    assert_eq!(snow_weight(&rec(Partition::empty(), 1, 2, 5), 5).unwrap(), vec![1, 1, 0, 0, 0]);
    assert_eq!(snow_weight(&rec(p(&[1]), 2, 1, 2), 2).unwrap(), vec![1, 1]);
    assert_eq!(snow_weight(&rec(p(&[4, 2, 1]), 5, 3, 7), 7).unwrap(), vec![4, 3, 2, 2, 2, 1, 1]);
}

#[test]
fn table_examples() {
    let t = cohomology_table(1, 2, 2).unwrap();
    let w = t.weight_multisets();
    assert_eq!(w.len(), 2);
    assert_eq!(w[&(0, 0)], vec![vec![2, 0]]);
    assert_eq!(w[&(1, 0)], vec![vec![1, 1]]);
    assert_eq!(dim(&[2, 0]), 3);

    let t = cohomology_table(1, 3, 1).unwrap();
    assert_eq!(t.weight_multisets(), BTreeMap::from([((0, 0), vec![vec![1, 0, 0]])]));

    let t = cohomology_table(2, 4, 3).unwrap();
    assert_eq!(t.component_count(), 4);
    assert!(t.entries.keys().all(|&(pp, _)| pp <= 2));
    assert!(cohomology_table(3, 3, 1).is_err());
    assert!(cohomology_table(0, 3, 1).is_err());
}

#[test]
fn p_max_examples() {
    assert_eq!(p_max(2, 4, 3).unwrap(), 2);
    assert_eq!(p_max(1, 2, 1).unwrap(), 0);
    for e in 2..8 {
        for l in 1..6 {
            assert_eq!(p_max(1, e, l).unwrap(), (l - 1).min(e - 1), "e={e} l={l}");
        }
    }
}

#[test]
fn cotangent_examples() {
    assert_eq!(cotangent_components(2, 4, 1), vec![(p(&[1]), p(&[1]))]);
    let two = cotangent_components(2, 4, 2);
    assert_eq!(two.len(), 2);
    assert!(two.contains(&(p(&[2]), p(&[1, 1]))));
    assert!(two.contains(&(p(&[1, 1]), p(&[2]))));
    assert!(cotangent_components(2, 4, 4).contains(&(p(&[2, 2]), p(&[2, 2]))));
    // Λ^p of a rank-d bundle has binomial(d, p) dimension; count through Schur ranks
    for (r, e) in [(1, 3), (2, 4), (2, 5), (3, 5)] {
        let d = r * (e - r);
        for pp in 0..=d {
            let total: u128 = cotangent_components(r, e, pp)
                .iter()
                .map(|(a, b)| schur_dimension(a, r).unwrap_or(0) * schur_dimension(b, e - r).unwrap_or(0))
                .sum();
            assert_eq!(total, binomial(d, pp), "r={r} e={e} p={pp}");
        }
    }
}

#[test]
fn bott_step_examples() {
    assert_eq!(bott_step(&[2, 1, 0]), Some((0, vec![2, 1, 0])));
    assert_eq!(bott_step(&[0, 1]), None);
    assert_eq!(bott_step(&[0, 2]), Some((1, vec![1, 1])));
}

#[test]
fn oracle_examples() {
    assert_eq!(
        oracle_table(1, 2, 1).unwrap().weight_multisets(),
        BTreeMap::from([((0, 0), vec![vec![1, 0]])])
    );
    assert_eq!(
        oracle_table(1, 2, 2).unwrap().weight_multisets(),
        cohomology_table(1, 2, 2).unwrap().weight_multisets()
    );
    assert!(oracle_table(2, 4, 3).unwrap().same_weights(&cohomology_table(2, 4, 3).unwrap()));
}

#[test]
fn table_matches_oracle() {
    for e in 2..=6 {
        for r in 1..e {
            for l in 1..=4 {
                let a = cohomology_table(r, e, l).unwrap();
                let b = oracle_table(r, e, l).unwrap();
                assert!(a.same_weights(&b), "r={r} e={e} l={l}: {:?}", a.diff(&b));
            }
        }
    }
}

#[test]
fn table_invariants() {
    for e in 2..=7 {
        for r in 1..e {
            for l in 1..=4 {
                let t = cohomology_table(r, e, l).unwrap();
                let admissible = enumerate_admissible(r, l, Some(e - r)).unwrap().count();
                assert_eq!(t.component_count(), admissible);
                for comps in t.entries.values() {
                    for c in comps {
                        let w = &c.weight;
                        assert_eq!(w.len(), e);
                        assert!(w.windows(2).all(|x| x[0] >= x[1]));
                        assert!(w.iter().all(|&x| 0 <= x && x <= l as i64));
                        if (e - 1) % l == 0 {
                            assert!(w[e - 1] == 0 || w[0] == l as i64, "{w:?}");
                        }
                        // central character of Λ^p Ω ⊗ det^l does not depend on p
                        assert_eq!(w.iter().sum::<i64>(), (r * l) as i64, "{w:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn full_box_never_contributes_for_divisors() {
    for e in 2..=9 {
        for r in 1..e {
            for d in (1..e).filter(|d| (e - 1) % d == 0) {
                let t = cohomology_table(r, e, d).unwrap();
                let full = Partition::rectangle(r, e - r);
                assert!(t.entries.values().flatten().all(|c| c.source != full), "r={r} e={e} d={d}");
            }
        }
    }
}

/// Bott's formula on projective space: for `k > 0`, `H^q(P^n, Ω^p(k))` vanishes for
/// `q > 0` and `h^0 = C(k+n−p, k)·C(k−1, p)`.
#[test]
fn projective_space_dimensions() {
    for e in 2..=6 {
        let n = e - 1;
        for k in 1..=5 {
            let t = cohomology_table(1, e, k).unwrap();
            assert!(t.entries.keys().all(|&(_, q)| q == 0));
            for pp in 0..=n {
                let got: u128 = t.entries.get(&(pp, 0)).map_or(0, |cs| cs.iter().map(|c| dim(&c.weight)).sum());
                let want = if k > pp { binomial(k + n - pp, k) * binomial(k - 1, pp) } else { 0 };
                assert_eq!(got, want, "e={e} k={k} p={pp}");
            }
        }
    }
}

#[test]
fn euler_characteristics_agree() {
    for e in 2..=6 {
        for r in 1..e {
            for l in 1..=3 {
                let euler = |t: &grasscoh::grassmann::CohomologyTable| {
                    let mut by_p: BTreeMap<usize, i128> = BTreeMap::new();
                    for (&(pp, q), comps) in &t.entries {
                        let sign = if q % 2 == 0 { 1 } else { -1 };
                        *by_p.entry(pp).or_default() += sign * comps.iter().map(|c| dim(&c.weight) as i128).sum::<i128>();
                    }
                    by_p
                };
                assert_eq!(euler(&cohomology_table(r, e, l).unwrap()), euler(&oracle_table(r, e, l).unwrap()));
            }
        }
    }
}

#[test]
fn verify_suite_passes() {
    let rep = grasscoh::verify::run_suite("snow-vs-bott").unwrap();
    assert!(rep.passed(), "{:?}", rep.witnesses);
    assert_eq!(rep.checked, 60);
}
