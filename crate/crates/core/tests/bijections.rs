use proptest::prelude::*;
use selfsim::bijection::{backward, forward, rb_pair, verify_bijection, BijectionId, Domain, Item};
use selfsim::family::{build_family, FamilyId};
use selfsim::partition::{Overpartition, Partition};
use selfsim::sequence::{seq_value, SequenceId};

use BijectionId::*;

fn part(s: &str) -> Item {
    Item::Partition(s.parse().unwrap())
}

fn over(s: &str) -> Item {
    Item::Overpartition(s.parse().unwrap())
}

fn fwd(bij: BijectionId, x: Item) -> Item {
    forward(bij, &x).unwrap()
}

fn bwd(bij: BijectionId, y: Item) -> Item {
    backward(bij, &y).unwrap()
}

const LAMBDA_71: &str = "8+8+8+8+8+4*+4+4+4+4+2+2+2+1*+1+1+1+1";
const MU_71: &str = "40+12+6+4+4+3+1+1";

#[test]
fn h_st_worked_example() {
    assert_eq!(fwd(HSt, over(LAMBDA_71)), part(MU_71));
    assert_eq!(bwd(HSt, part(MU_71)), over(LAMBDA_71));
}

#[test]
fn forward_examples() {
    assert_eq!(fwd(PhiSpa, part("6+3")), part("6+1+1+1"));
    assert_eq!(fwd(XiSplit, part("4+2+1")), part("2+2+2+1"));
    assert_eq!(fwd(ThetaSb, part("5+4")), part("4+4"));
    assert_eq!(fwd(FMergeSl, part("4+2+1+1+1")), part("6+1+1+1"));
    assert_eq!(fwd(Rep2Sf, part("12+6+3")), part("4+4+4+2+2+2+1+1+1"));
    let mut composition = vec![2; 5];
    composition.push(4);
    composition.extend([8; 3]);
    composition.extend([1; 7]);
    let o = over("8*+8+8+4*+2*+2+2+2+2+1+1+1+1+1+1+1");
    assert_eq!(o.weight(), 45);
    assert_eq!(fwd(UnimodalOc, o.clone()), Item::Composition(composition.clone()));
    assert_eq!(bwd(UnimodalOc, Item::Composition(composition)), o);
}

#[test]
fn backward_examples() {
    assert_eq!(bwd(ThetaSb, part("4+2+2+1")), part("8+2"));
    assert_eq!(bwd(XiSp, over("2*+1*")), part("3"));
    // merging by valuation recovers the source; merging equal parts would not
    assert_eq!(bwd(PhiSpa, part("6+1+1+1")), part("6+3"));
}

#[test]
fn rb_pairs() {
    let pair = |s: &str| rb_pair(&s.parse().unwrap());
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert_eq!(pair("3+2"), (p("2+1+1+1"), p("2+2+1")));
    assert_eq!(pair("4+1"), (p("4+1"), p("4+1")));
    assert_eq!(pair("()"), (p("()"), p("()")));
    assert_eq!(fwd(RbSt, part("3+2")), Item::Pair(p("2+1+1+1"), p("2+2+1")));
}

#[test]
fn out_of_domain_inputs_are_rejected() {
    assert!(forward(ThetaSb, &part("5+3")).is_err());
    assert!(forward(HSt, &part("4+1")).is_err());
    assert!(backward(ThetaSb, &part("3+3+3")).is_err());
    assert!(forward(XiSplit, &part("2+2+2+1")).is_err());
    assert!("nope".parse::<BijectionId>().is_err());
}

#[test]
fn worked_sizes() {
    let st71 = usize::try_from(seq_value(SequenceId::St, 71).unwrap()).unwrap();
    let r = verify_bijection(HSt, 71).unwrap();
    assert!(r.passed(), "{:?}", r.counterexamples);
    assert_eq!(r.checked, st71);

    let r = verify_bijection(ThetaSb, 9).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked, 4);

    let r = verify_bijection(RbSt, 5).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked, 4);
}

#[test]
fn every_map_on_small_weights() {
    for bij in BijectionId::ALL {
        for n in bij.min_n()..=40 {
            let r = verify_bijection(bij, n).unwrap();
            assert!(r.passed(), "{bij} at {n}: {:?}", r.counterexamples);
        }
    }
    assert!(verify_bijection(ThetaSb, 0).is_err());
}

#[test]
fn sources_and_targets_are_equinumerous() {
    for bij in BijectionId::ALL.into_iter().filter(|b| !b.injective_only()) {
        for n in bij.min_n()..=30 {
            let s = bij.source().enumerate(n).unwrap().len();
            let t = bij.target().enumerate(n - bij.weight_drop()).unwrap().len();
            assert_eq!(s, t, "{bij} at {n}");
        }
    }
}

#[test]
fn pair_domain() {
    let d = Domain::PairOfBinary;
    assert!(d.contains(&d.parse("2+1+1 | 4").unwrap()));
    assert!(!d.contains(&d.parse("3 | 2+1").unwrap()));
    assert!(d.enumerate(3).is_err());
}

fn member_of(fid: FamilyId) -> impl Strategy<Value = Partition> {
    (1u64..120, any::<prop::sample::Index>()).prop_filter_map("empty family", move |(n, i)| {
        let set = build_family(fid, n).ok()?;
        (!set.is_empty()).then(|| set.members()[i.index(set.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_st_round_trip(mu in member_of(FamilyId::St)) {
        let x = bwd(HSt, Item::Partition(mu.clone()));
        let o: &Overpartition = x.as_overpartition().unwrap();
        prop_assert_eq!(o.weight(), mu.weight());
        prop_assert_eq!(fwd(HSt, x.clone()), Item::Partition(mu));
    }

    #[test]
    fn theta_sb_lowers_weight_by_one(l in member_of(FamilyId::Sb)) {
        let y = fwd(ThetaSb, Item::Partition(l.clone()));
        prop_assert_eq!(y.weight() + 1, l.weight());
        prop_assert_eq!(bwd(ThetaSb, y), Item::Partition(l));
    }

    #[test]
    fn rep2_sf_inverts(l in member_of(FamilyId::Sf)) {
        let y = fwd(Rep2Sf, Item::Partition(l.clone()));
        prop_assert!(y.as_partition().unwrap().is_odd_binary());
        prop_assert_eq!(bwd(Rep2Sf, y), Item::Partition(l));
    }

    #[test]
    fn rb_st_is_injective(a in member_of(FamilyId::St), b in member_of(FamilyId::St)) {
        prop_assume!(a != b);
        prop_assert_ne!(rb_pair(&a), rb_pair(&b));
    }
}
