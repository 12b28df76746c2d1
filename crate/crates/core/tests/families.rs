use std::collections::BTreeSet;

use proptest::prelude::*;
use selfsim::family::{
    build_family, build_over_family, family_size, is_member, is_over_member, total_parts, FamilyId,
};
use selfsim::partition::{partitions_of, Overpartition, Partition};
use selfsim::sequence::seq_value;
use selfsim::verify::{oracle_family, Oracle};

use FamilyId::*;

mod golden;

fn canon(items: &[&str]) -> BTreeSet<String> {
    items
        .iter()
        .map(|s| s.parse::<Partition>().unwrap().to_string())
        .collect()
}

fn built(fid: FamilyId, n: u64) -> BTreeSet<String> {
    build_family(fid, n).unwrap().to_strings().into_iter().collect()
}

fn over_canon(items: &[&str]) -> BTreeSet<String> {
    items
        .iter()
        .map(|s| s.parse::<Overpartition>().unwrap().to_string())
        .collect()
}

fn over_built(fid: FamilyId, n: u64) -> BTreeSet<String> {
    build_over_family(fid, n).unwrap().to_strings().into_iter().collect()
}

#[test]
fn printed_set_tables() {
    for &(fid, n, printed) in golden::SETS {
        let mut want = canon(printed);
        for &(f, m, extra) in golden::MISSING_FROM_PRINT {
            if (f, m) == (fid, n) {
                want.insert(extra.to_string());
            }
        }
        assert_eq!(built(fid, n), want, "{fid}({n})");
        if fid == Hb {
            assert_eq!(built(HbPrime, n), want, "HB'({n})");
        }
    }
    // the printed SPa(15) row repeats an entry; the set has four members
    assert_eq!(family_size(Spa, 15).unwrap(), 4);
    assert_eq!(family_size(Sl, 6).unwrap(), 3);
}

#[test]
fn sf_rows_pair_with_ob_rows_under_rep2() {
    let pairs = [("3", "1+1+1"), ("3+2", "2+1+1+1"), ("5", "1+1+1+1+1"), ("4+1", "4+1")];
    for (a, b) in pairs {
        assert_eq!(a.parse::<Partition>().unwrap().rep2().to_string(), b);
    }
}

#[test]
fn build_examples() {
    assert_eq!(built(St, 5), canon(&["5", "3+2", "4+1", "2+1+1+1"]));
    assert!(built(Spa, 4).is_empty());
    assert_eq!(built(Sl, 3), canon(&["3", "2+1", "1+1+1"]));
    assert_eq!(family_size(Sp, 7).unwrap(), 11);
}

#[test]
fn constrained_binary_examples() {
    assert_eq!(built(Ob1, 7), canon(&["2+2+2+1", "1+1+1+1+1+1+1"]));
    assert_eq!(built(Ob2, 7), canon(&["4+2+1", "2+1+1+1+1+1"]));
    assert_eq!(built(ObR, 9), canon(&["2+2+2+1+1+1", "1+1+1+1+1+1+1+1+1"]));
    assert_eq!(built(Ob13, 7), canon(&["4+2+1", "4+1+1+1", "2+2+2+1"]));
}

#[test]
fn overpartition_examples() {
    assert_eq!(
        over_built(ObBarPrime, 5),
        over_canon(&["4*+1", "4*+1*", "2*+1+1+1", "2*+1*+1+1", "1*+1+1+1+1"])
    );
    assert_eq!(
        over_built(ObBarStar, 5),
        over_canon(&["4+1", "2+1+1+1", "1+1+1+1+1", "1*+1+1+1+1"])
    );
    assert_eq!(
        over_built(ObBarDag, 7),
        over_canon(&[
            "4+2+1",
            "4+1+1+1",
            "4+1*+1+1",
            "2+2+2+1",
            "2+1+1+1+1+1",
            "2+1*+1+1+1+1",
            "1+1+1+1+1+1+1",
        ])
    );
    let lambda: Overpartition = "8+8+8+8+8+4*+4+4+4+4+2+2+2+1*+1+1+1+1".parse().unwrap();
    assert_eq!(lambda.weight(), 71);
    assert!(is_over_member(ObBarDag, &lambda));
    assert!(build_over_family(ObBarDag, 71).unwrap().contains(&lambda));
}

#[test]
fn membership_examples() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert!(is_member(St, &p("4+2+1")));
    assert!(!is_member(St, &p("2+2")));
    assert!(is_member(Sb, &p("8+1")));
    assert!(is_member(Snc, &p("8+3")));
    assert!(!is_member(Snc, &p("5+4")));
    assert!(is_member(St, &p("40+12+6+4+4+3+1+1")));
}

#[test]
fn total_parts_examples() {
    assert_eq!(total_parts(St, 7).unwrap(), 18u32.into());
    assert_eq!(total_parts(Sb, 11).unwrap(), 11u32.into());
    assert_eq!(total_parts(Spa, 4).unwrap(), 0u32.into());
}

#[test]
fn oracle_examples() {
    let st7 = oracle_family(St, 7).unwrap();
    assert_eq!(st7.len(), 7);
    assert!(st7.same_members(&build_family(St, 7).unwrap()));
    let sf5: BTreeSet<String> = oracle_family(Sf, 5).unwrap().to_strings().into_iter().collect();
    assert_eq!(sf5, canon(&["4+1", "3+2", "5"]));
    assert!(oracle_family(Spa, 8).unwrap().is_empty());
    assert!(Oracle::new(10).family(St, 11).is_err());
}

#[test]
fn empty_conventions() {
    assert_eq!(built(Spa, 0), canon(&["()"]));
    assert_eq!(built(Snc, 0), canon(&["()"]));
    assert!(built(St, 0).is_empty());
    assert!(built(SpaPrime, 0).is_empty());
    assert!(built(Sp, 0).is_empty());
    assert!(build_family(Sl, 1).is_err());
    assert!(build_over_family(ObBarStar, 0).is_err());
}

#[test]
fn listing_is_sorted_and_distinct() {
    for fid in FamilyId::ALL.into_iter().filter(|f| !f.is_overpartition()) {
        for n in fid.min_weight()..=40 {
            let set = build_family(fid, n).unwrap();
            for w in set.members().windows(2) {
                assert!(w[0] > w[1], "{fid}({n}): {} then {}", w[0], w[1]);
            }
            assert!(set.iter().all(|l| l.weight() == n));
        }
    }
}

#[test]
fn counts_match_sequences() {
    for fid in FamilyId::ALL {
        let Some(pair) = fid.pairing() else { continue };
        for n in pair.from.max(fid.min_weight())..=60 {
            let want = seq_value(pair.seq, n + pair.offset).unwrap();
            assert_eq!(family_size(fid, n).unwrap(), usize::try_from(want).unwrap(), "{fid}({n})");
        }
    }
}

#[test]
fn predicates_match_construction() {
    for fid in FamilyId::ALL {
        for n in fid.min_weight()..=18 {
            if fid.is_overpartition() {
                let built = build_over_family(fid, n).unwrap();
                for base in partitions_of(n).into_iter().filter(|l| l.is_odd_binary()) {
                    for o in overline_choices(&base) {
                        assert_eq!(is_over_member(fid, &o), built.contains(&o), "{fid}: {o}");
                    }
                }
            } else {
                let built = build_family(fid, n).unwrap();
                for l in partitions_of(n) {
                    assert_eq!(is_member(fid, &l), built.contains(&l), "{fid}: {l}");
                }
            }
        }
    }
}

fn overline_choices(base: &Partition) -> Vec<Overpartition> {
    let distinct: Vec<u64> = base.distinct_values().collect();
    (0u64..1 << distinct.len())
        .map(|mask| {
            let chosen = distinct.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            Overpartition::new(base.clone(), chosen).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn even_weights_double(idx in 0usize..10, n in 2u64..150) {
        let fid = FamilyId::RECURSIVE[idx];
        prop_assume!(fid != Sb && fid != HbPrime);
        let half = build_family(fid, n).unwrap();
        let doubled: BTreeSet<Partition> = half.iter().map(|l| l.scale(2)).collect();
        let whole: BTreeSet<Partition> = build_family(fid, 2 * n).unwrap().iter().cloned().collect();
        prop_assert_eq!(whole, doubled);
    }
}
