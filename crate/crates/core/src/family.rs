//! The partition and overpartition families, built from their recursive
//! definitions, recognised by their non-recursive descriptions, and
//! enumerated directly where they are constrained binary partitions.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{bin, Overpartition, Partition};
use crate::sequence::SequenceId;

/// Identifies a family of partitions or overpartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Sf,
    SfPrime,
    St,
    Spa,
    SpaPrime,
    Sp,
    Snc,
    Dsf,
    Sl,
    Sl3Div,
    Sl3NDiv,
    Sb,
    Hb,
    HbPrime,
    B,
    Ob,
    Ob1,
    Ob2,
    ObR,
    ObRp,
    Ob13,
    ObBarPrime,
    ObBarStar,
    ObBarDag,
}

use FamilyId::*;

/// How a family is produced by [`build_family`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// A recursive definition in terms of smaller weights.
    Recursive,
    /// A filter of another recursively built family.
    Derived,
    /// Direct enumeration of binary partitions with multiplicity constraints.
    ConstrainedBinary,
    /// Odd binary partitions with overline rules.
    Overpartition,
}

/// `|F(n)| = seq(n + offset)` for every `n ≥ from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub seq: SequenceId,
    pub offset: u64,
    pub from: u64,
}

impl FamilyId {
    pub const ALL: [FamilyId; 24] = [
        Sf, SfPrime, St, Spa, SpaPrime, Sp, Snc, Dsf, Sl, Sl3Div, Sl3NDiv, Sb, Hb, HbPrime, B, Ob,
        Ob1, Ob2, ObR, ObRp, Ob13, ObBarPrime, ObBarStar, ObBarDag,
    ];

    /// Families with a recursive definition.
    pub const RECURSIVE: [FamilyId; 10] = [Sf, St, Spa, SpaPrime, Sp, Snc, Dsf, Sl, Sb, HbPrime];

    pub const CONSTRAINED_BINARY: [FamilyId; 8] = [B, Ob, Ob1, Ob2, ObR, ObRp, Ob13, Hb];

    pub const OVERPARTITION: [FamilyId; 3] = [ObBarPrime, ObBarStar, ObBarDag];

    pub fn tag(self) -> &'static str {
        match self {
            Sf => "SF",
            SfPrime => "SF_prime",
            St => "ST",
            Spa => "SPa",
            SpaPrime => "SPa_prime",
            Sp => "SP",
            Snc => "SNc",
            Dsf => "DSF",
            Sl => "SL",
            Sl3Div => "SL_3div",
            Sl3NDiv => "SL_3ndiv",
            Sb => "SB",
            Hb => "HB",
            HbPrime => "HB_prime",
            B => "B",
            Ob => "OB",
            Ob1 => "OB_1",
            Ob2 => "OB_2",
            ObR => "OB_R",
            ObRp => "OB_Rp",
            Ob13 => "OB_13",
            ObBarPrime => "OBbar_prime",
            ObBarStar => "OBbar_star",
            ObBarDag => "OBbar_dag",
        }
    }

    pub fn construction(self) -> Construction {
        match self {
            SfPrime | Sl3Div | Sl3NDiv => Construction::Derived,
            B | Ob | Ob1 | Ob2 | ObR | ObRp | Ob13 | Hb => Construction::ConstrainedBinary,
            ObBarPrime | ObBarStar | ObBarDag => Construction::Overpartition,
            _ => Construction::Recursive,
        }
    }

    pub fn is_overpartition(self) -> bool {
        self.construction() == Construction::Overpartition
    }

    /// Smallest weight at which the family is defined.
    pub fn min_weight(self) -> u64 {
        match self {
            Sl | Sl3Div | Sl3NDiv => 2,
            ObBarStar => 1,
            _ => 0,
        }
    }

    /// The sequence counting the family, if any.
    pub fn pairing(self) -> Option<Pairing> {
        use SequenceId as S;
        let p = |seq, offset, from| Some(Pairing { seq, offset, from });
        match self {
            Sf | Ob => p(S::Sf, 0, 0),
            SfPrime | Spa | ObR => p(S::Spa, 0, 0),
            St | ObBarDag => p(S::St, 0, 0),
            SpaPrime | ObRp => p(S::SpaMod, 0, 0),
            Sp | ObBarPrime => p(S::Sp, 0, 0),
            Snc | Ob13 => p(S::Snc, 0, 0),
            Dsf | Ob1 | Ob2 => p(S::Dsf, 0, 0),
            Sl => p(S::Sl, 0, 2),
            ObBarStar => p(S::Sl, 0, 1),
            Sl3Div => p(S::Dsf, 0, 2),
            Sl3NDiv => p(S::Sf, 0, 2),
            Sb => p(S::Sb, 0, 0),
            Hb | HbPrime => p(S::Sb, 1, 0),
            B => None,
        }
    }

    /// The total-parts sequence of the family, if one is defined.
    pub fn parts_pairing(self) -> Option<Pairing> {
        use SequenceId as S;
        let p = |seq, from| Some(Pairing { seq, offset: 0, from });
        match self {
            Sf => p(S::Psf, 0),
            St => p(S::Pst, 0),
            Spa => p(S::Pspa, 0),
            SpaPrime => p(S::PspaMod, 0),
            Sp => p(S::Psp, 0),
            Snc => p(S::Psnc, 0),
            Dsf => p(S::Pdsf, 0),
            Sl => p(S::Psl, 2),
            Sb => p(S::Psb, 1),
            Hb | HbPrime => p(S::Phb, 1),
            _ => None,
        }
    }

    fn check_domain(self, n: u64) -> Result<()> {
        if n < self.min_weight() {
            return Err(Error::OutOfDomain {
                what: self.tag().to_string(),
                n,
                min: self.min_weight(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .or_else(|| FamilyId::ALL.into_iter().find(|id| id.tag().eq_ignore_ascii_case(s)))
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

/// Something a family can contain.
pub trait Member: Clone + Ord + fmt::Display + fmt::Debug {
    fn weight(&self) -> u64;
    fn num_parts(&self) -> u64;
    /// Listing order: lexicographically descending by the underlying partition.
    fn listing_cmp(&self, other: &Self) -> Ordering;
}

impl Member for Partition {
    fn weight(&self) -> u64 {
        Partition::weight(self)
    }
    fn num_parts(&self) -> u64 {
        self.len()
    }
    fn listing_cmp(&self, other: &Self) -> Ordering {
        other.cmp(self)
    }
}

impl Member for Overpartition {
    fn weight(&self) -> u64 {
        Overpartition::weight(self)
    }
    fn num_parts(&self) -> u64 {
        self.len()
    }
    fn listing_cmp(&self, other: &Self) -> Ordering {
        other
            .base()
            .cmp(self.base())
            .then_with(|| self.overlined().cmp(other.overlined()))
    }
}

/// The members of one family at one weight, without duplicates, in listing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySet<T> {
    family: FamilyId,
    n: u64,
    members: Vec<T>,
}

impl<T: Member> FamilySet<T> {
    /// Sorts and deduplicates; every member must have weight `n`.
    pub fn new(family: FamilyId, n: u64, mut members: Vec<T>) -> Self {
        debug_assert!(members.iter().all(|m| m.weight() == n));
        // A stable sort merges the already ordered pieces the recursions produce.
        members.sort_by(T::listing_cmp);
        members.dedup();
        FamilySet { family, n, members }
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[T] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.members.binary_search_by(|m| m.listing_cmp(x)).is_ok()
    }

    /// Every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &FamilySet<T>) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// Same members, regardless of family labels.
    pub fn same_members(&self, other: &FamilySet<T>) -> bool {
        self.members == other.members
    }

    /// Sum of the numbers of parts over all members.
    pub fn total_parts(&self) -> BigUint {
        self.members.iter().map(|m| BigUint::from(m.num_parts())).sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.members.iter().map(|m| m.to_string()).collect()
    }
}

impl<'a, T> IntoIterator for &'a FamilySet<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

type Shared = Arc<FamilySet<Partition>>;

/// Memo tables for the recursive families.
///
/// Sets up to weight `keep_below` are kept for the life of the builder; larger
/// ones live in a short queue of recent results, which is all an ascending
/// sweep needs since the odd-weight rules only look back one or two steps
/// and the even-weight rules halve the weight.
pub struct FamilyBuilder {
    keep_below: u64,
    recent_cap: usize,
    memo: Mutex<HashMap<FamilyId, Memo>>,
}

#[derive(Default)]
struct Memo {
    kept: HashMap<u64, Shared>,
    recent: VecDeque<(u64, Shared)>,
}

impl Default for FamilyBuilder {
    fn default() -> Self {
        FamilyBuilder::new(128, 12)
    }
}

impl FamilyBuilder {
    pub fn new(keep_below: u64, recent_cap: usize) -> Self {
        FamilyBuilder {
            keep_below,
            recent_cap,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Drops every memoised set.
    pub fn clear(&self) {
        self.memo.lock().expect("family memo").clear();
    }

    fn lookup(&self, fid: FamilyId, n: u64) -> Option<Shared> {
        let memo = self.memo.lock().expect("family memo");
        let m = memo.get(&fid)?;
        m.kept
            .get(&n)
            .cloned()
            .or_else(|| m.recent.iter().find(|(k, _)| *k == n).map(|(_, s)| s.clone()))
    }

    fn store(&self, fid: FamilyId, n: u64, set: &Shared) {
        let mut memo = self.memo.lock().expect("family memo");
        let m = memo.entry(fid).or_default();
        if n <= self.keep_below {
            m.kept.insert(n, set.clone());
        } else if !m.recent.iter().any(|(k, _)| *k == n) {
            if m.recent.len() >= self.recent_cap {
                m.recent.pop_front();
            }
            m.recent.push_back((n, set.clone()));
        }
    }

    /// The partition family `fid` at weight `n`.
    pub fn build(&self, fid: FamilyId, n: u64) -> Result<Shared> {
        fid.check_domain(n)?;
        match fid.construction() {
            Construction::Overpartition => Err(Error::WrongKind(format!(
                "{fid} is a family of overpartitions; use build_over_family"
            ))),
            Construction::ConstrainedBinary => {
                Ok(Arc::new(enumerate_constrained_binary(fid, n)?))
            }
            Construction::Derived => {
                let (base, keep): (FamilyId, fn(&Partition) -> bool) = match fid {
                    SfPrime => (Sf, |l| !l.runs().iter().any(|&(p, _)| p.is_power_of_two())),
                    Sl3Div => (Sl, |l| l.largest().is_some_and(|p| p % 3 == 0)),
                    _ => (Sl, |l| l.largest().is_some_and(|p| p % 3 != 0)),
                };
                let set = self.build(base, n)?;
                let members = set.iter().filter(|l| keep(l)).cloned().collect();
                Ok(Arc::new(FamilySet::new(fid, n, members)))
            }
            Construction::Recursive => {
                if let Some(s) = self.lookup(fid, n) {
                    return Ok(s);
                }
                let members = self.recurse(fid, n)?;
                let set = Arc::new(FamilySet::new(fid, n, members));
                self.store(fid, n, &set);
                Ok(set)
            }
        }
    }

    fn get(&self, fid: FamilyId, n: u64) -> Result<Shared> {
        self.build(fid, n)
    }

    fn recurse(&self, fid: FamilyId, n: u64) -> Result<Vec<Partition>> {
        let p = |parts: &[u64]| Partition::new(parts.iter().copied()).expect("positive parts");
        let half = n / 2;
        let odd = n % 2 == 1;
        let double = |k: u64| -> Result<Vec<Partition>> { Ok(scale2(self.get(fid, k)?.members())) };
        Ok(match fid {
            Sf => match n {
                0 => vec![Partition::empty()],
                1 => vec![p(&[1])],
                _ if !odd => double(half)?,
                _ => [with(self.get(fid, n - 1)?.members(), 1, 1), o_plus_2(self.get(fid, n - 2)?.members())?].concat(),
            },
            St => match n {
                0 => vec![],
                1 => vec![p(&[1])],
                3 => vec![p(&[3]), p(&[2, 1])],
                _ if !odd => double(half)?,
                _ => [
                    with(self.get(fid, n - 1)?.members(), 1, 1),
                    o_plus_2(self.get(fid, n - 2)?.members())?,
                    with(self.get(fid, n - 3)?.members(), 1, 3),
                ]
                .concat(),
            },
            Spa | SpaPrime => match (fid, n) {
                (Spa, 0) => vec![Partition::empty()],
                (Spa, 1) | (SpaPrime, 0) => vec![],
                (Spa, 3) => vec![p(&[3])],
                (SpaPrime, 1) => vec![p(&[1])],
                _ if !odd => double(half)?,
                _ => [o_plus_2(self.get(fid, n - 2)?.members())?, with(self.get(fid, n - 3)?.members(), 1, 3)].concat(),
            },
            Sp => match n {
                0 => vec![],
                1 => vec![p(&[1])],
                _ if !odd => double(half)?,
                _ => {
                    let prev = self.get(fid, n - 1)?;
                    [
                        prev.iter().map(Partition::add11).collect(),
                        with(prev.members(), 1, 1),
                        with(self.get(fid, n - 2)?.members(), 1, 2),
                    ]
                    .concat()
                }
            },
            Snc => match n {
                0 => vec![Partition::empty()],
                1 => vec![p(&[1])],
                _ if !odd => double(half)?,
                _ => [with(self.get(fid, n - 1)?.members(), 1, 1), with(self.get(fid, n - 3)?.members(), 3, 1)].concat(),
            },
            Dsf => match n {
                0..=2 => vec![],
                3 => vec![p(&[2, 1])],
                _ if !odd => double(half)?,
                _ => [with(self.get(fid, n - 1)?.members(), 1, 1), o_plus_2(self.get(fid, n - 2)?.members())?].concat(),
            },
            Sl => match n {
                2 => vec![p(&[2])],
                3 => vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])],
                _ if !odd => double(half)?,
                _ => [with(self.get(fid, n - 1)?.members(), 1, 1), with(self.get(fid, n - 2)?.members(), 1, 2)].concat(),
            },
            Sb => match n {
                0 => vec![],
                1 => vec![p(&[1])],
                _ if !odd => double(half)?,
                _ => {
                    let lower = with(&double(half)?, 1, 1);
                    let upper = double(half + 1)?
                        .iter()
                        .map(|l| l.sub11().expect("doubled parts are at least 2"))
                        .collect();
                    [lower, upper].concat()
                }
            },
            HbPrime => match n {
                0 => vec![Partition::empty()],
                _ if odd => with(&double(half)?, 1, 1),
                _ => [double(half)?, with(&double(half - 1)?, 1, 2)].concat(),
            },
            _ => unreachable!("{fid} is not recursive"),
        })
    }
}

fn scale2(set: &[Partition]) -> Vec<Partition> {
    set.iter().map(|l| l.scale(2)).collect()
}

fn with(set: &[Partition], part: u64, copies: u64) -> Vec<Partition> {
    set.iter().map(|l| l.with_parts(part, copies)).collect()
}

fn o_plus_2(set: &[Partition]) -> Result<Vec<Partition>> {
    set.iter().map(Partition::o_plus_2).collect()
}

/// The process-wide builder behind [`build_family`].
pub fn builder() -> &'static FamilyBuilder {
    static BUILDER: OnceLock<FamilyBuilder> = OnceLock::new();
    BUILDER.get_or_init(FamilyBuilder::default)
}

/// The partition family `fid` at weight `n`.
pub fn build_family(fid: FamilyId, n: u64) -> Result<Arc<FamilySet<Partition>>> {
    builder().build(fid, n)
}

/// Sum of the numbers of parts over `fid(n)`, for partition or overpartition families.
pub fn total_parts(fid: FamilyId, n: u64) -> Result<BigUint> {
    if fid.is_overpartition() {
        Ok(build_over_family(fid, n)?.total_parts())
    } else {
        Ok(build_family(fid, n)?.total_parts())
    }
}

/// Number of members of `fid(n)`.
pub fn family_size(fid: FamilyId, n: u64) -> Result<usize> {
    if fid.is_overpartition() {
        Ok(build_over_family(fid, n)?.len())
    } else {
        Ok(build_family(fid, n)?.len())
    }
}

/// Membership by the non-recursive description of each family.
pub fn is_member(fid: FamilyId, l: &Partition) -> bool {
    let Some(first) = l.largest() else {
        return matches!(fid, Sf | SfPrime | Spa | Snc | Hb | HbPrime | B | Ob | ObR | Ob13);
    };
    let v = l.valuation_profile();
    let v1 = v.first().expect("non-empty");
    // (a) of the tribonacci-type descriptions: the largest valuation occurs once,
    // and every smaller valuation j satisfies `rest(j, multiplicity)`.
    let tri = |rest: &dyn Fn(u32, u64) -> bool| {
        v.multiplicity(v1) == 1
            && v.runs()[1..].iter().all(|&(j, m)| rest(j, m))
    };
    let two_powers = |j: u32| l.multiplicity(1u64 << j) >= 2;
    match fid {
        Sf => l.has_distinct_valuations(),
        SfPrime => l.has_distinct_valuations() && !l.distinct_values().any(u64::is_power_of_two),
        St => tri(&|j, m| m == 1 || (m == 3 && two_powers(j))),
        Spa => tri(&|j, m| m == 3 && two_powers(j)) && !l.has_part(1u64 << v1),
        SpaPrime => tri(&|j, m| m == 3 && two_powers(j)),
        Sp => bin(first).union(&l.without_largest()).is_odd_binary(),
        Snc => {
            l.has_distinct_valuations()
                && l.distinct_values().all(|p| {
                    let o = p >> p.trailing_zeros();
                    o == 1 || o == 3
                })
        }
        Dsf => {
            l.has_distinct_valuations()
                && v1 >= 1
                && l.has_part(1u64 << v1)
                && v.multiplicity(v1 - 1) > 0
        }
        Sl | Sl3Div | Sl3NDiv => {
            let odd = first >> first.trailing_zeros();
            let base = l.weight() >= 2
                && v.runs().iter().all(|&(_, m)| m % 2 == 1)
                && l.without_largest().is_binary()
                && (odd == 1 || odd == 3)
                && first.trailing_zeros() == v1;
            base && match fid {
                Sl3Div => first % 3 == 0,
                Sl3NDiv => first % 3 != 0,
                _ => true,
            }
        }
        Sb => bin(first - 1).contains(&l.without_largest()),
        Hb | HbPrime => l.is_binary() && l.runs().iter().all(|&(_, m)| m <= 2),
        B => l.is_binary(),
        Ob => l.is_odd_binary(),
        Ob1 => l.is_odd_binary() && l.runs()[0].1 > 1,
        Ob2 => l.is_odd_binary() && l.runs()[0].1 == 1 && l.part(1) == Some(first / 2),
        ObR => l.is_odd_binary() && l.runs().iter().all(|&(_, m)| m >= 3),
        ObRp => l.is_odd_binary() && l.runs()[1..].iter().all(|&(_, m)| m >= 3),
        Ob13 => l.is_odd_binary() && l.runs().iter().all(|&(_, m)| m == 1 || m == 3),
        ObBarPrime | ObBarStar | ObBarDag => false,
    }
}

/// Membership of an overpartition in one of the overpartition families.
pub fn is_over_member(fid: FamilyId, o: &Overpartition) -> bool {
    let base = o.base();
    let Some(first) = base.largest() else {
        return false;
    };
    if !base.is_odd_binary() {
        return false;
    }
    match fid {
        ObBarPrime => o.is_overlined(first),
        ObBarStar => {
            o.weight() == 1
                || o.overlined().all(|v| v == first && base.multiplicity(first) > 1)
        }
        ObBarDag => {
            !o.is_overlined(first) && o.overlined().all(|v| base.multiplicity(v) >= 3)
        }
        _ => false,
    }
}

/// All binary partitions of `n` whose multiplicities satisfy `ok`, in listing order.
fn binary_partitions(n: u64, ok: &dyn Fn(u64) -> bool) -> Vec<Partition> {
    fn go(
        rest: u64,
        k: u32,
        ok: &dyn Fn(u64) -> bool,
        acc: &mut Vec<(u64, u64)>,
        out: &mut Vec<Partition>,
    ) {
        if k == 0 {
            // whatever is left has to be made of ones
            if rest > 0 && !ok(rest) {
                return;
            }
            let mut runs = acc.clone();
            if rest > 0 {
                runs.push((1, rest));
            }
            out.push(Partition::from_sorted_runs(runs));
            return;
        }
        let p = 1u64 << k;
        for m in (0..=rest / p).rev() {
            if m == 0 {
                go(rest, k - 1, ok, acc, out);
            } else if ok(m) {
                acc.push((p, m));
                go(rest - m * p, k - 1, ok, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    let top = if n == 0 { 0 } else { 63 - n.leading_zeros() };
    go(n, top, ok, &mut Vec::new(), &mut out);
    out
}

/// Direct enumeration of a constrained binary family.
pub fn enumerate_constrained_binary(fid: FamilyId, n: u64) -> Result<FamilySet<Partition>> {
    let ok: fn(u64) -> bool = match fid {
        B => |_| true,
        Hb => |m| m <= 2,
        Ob | Ob1 | Ob2 | ObRp => |m| m % 2 == 1,
        ObR => |m| m % 2 == 1 && m >= 3,
        Ob13 => |m| m == 1 || m == 3,
        _ => {
            return Err(Error::WrongKind(format!("{fid} is not a constrained binary family")));
        }
    };
    let members = binary_partitions(n, &ok)
        .into_iter()
        .filter(|l| is_member(fid, l))
        .collect();
    Ok(FamilySet::new(fid, n, members))
}

/// Odd binary partitions of `n`.
pub fn odd_binary_partitions(n: u64) -> Vec<Partition> {
    binary_partitions(n, &|m| m % 2 == 1)
}

// Overline sets of one base in listing order: compare the overlined values
// from the largest down. A larger run index is a smaller value, and a set
// that runs out first is smaller.
fn listing_mask_cmp(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (i, j) = (a.trailing_zeros(), b.trailing_zeros());
        if i != j {
            return j.cmp(&i);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// An overpartition family at weight `n`, built from the odd binary partitions of `n`.
pub fn build_over_family(fid: FamilyId, n: u64) -> Result<FamilySet<Overpartition>> {
    if !fid.is_overpartition() {
        return Err(Error::WrongKind(format!("{fid} is not a family of overpartitions")));
    }
    fid.check_domain(n)?;
    let mut members = Vec::new();
    for base in odd_binary_partitions(n) {
        let base = Arc::new(base);
        let runs = base.runs();
        if runs.is_empty() {
            continue;
        }
        // Bits that may be freely overlined, by run index; bit 0 is the largest part.
        let (forced, free): (u64, Vec<u32>) = match fid {
            ObBarPrime => (1, (1..runs.len().min(64) as u32).collect()),
            ObBarStar if n == 1 || runs[0].1 > 1 => (0, vec![0]),
            ObBarStar => (0, vec![]),
            _ => (
                0,
                (1..runs.len().min(64))
                    .filter(|&i| runs[i].1 >= 3)
                    .map(|i| i as u32)
                    .collect(),
            ),
        };
        let mut masks: Vec<u64> = (0u64..1 << free.len())
            .map(|choice| {
                free.iter()
                    .enumerate()
                    .filter(|(j, _)| choice >> j & 1 == 1)
                    .fold(forced, |m, (_, &b)| m | 1 << b)
            })
            .collect();
        // Listing order up front, so the final sort only confirms it.
        masks.sort_by(|&a, &b| listing_mask_cmp(a, b));
        members.extend(masks.into_iter().map(|m| Overpartition::from_mask(Arc::clone(&base), m)));
    }
    Ok(FamilySet::new(fid, n, members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(fid: FamilyId, n: u64) -> Vec<String> {
        let mut v = build_family(fid, n).unwrap().to_strings();
        v.sort();
        v
    }

    fn sorted(items: &[&str]) -> Vec<String> {
        let mut v: Vec<String> = items.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_sets() {
        assert_eq!(strings(St, 5), sorted(&["5", "3+2", "4+1", "2+1+1+1"]));
        assert!(build_family(Spa, 4).unwrap().is_empty());
        assert_eq!(strings(Sb, 9), sorted(&["9", "5+4", "7+2", "8+1"]));
        assert_eq!(strings(Sl, 3), sorted(&["3", "2+1", "1+1+1"]));
        assert_eq!(build_family(Sp, 7).unwrap().len(), 11);
        assert_eq!(strings(HbPrime, 2), sorted(&["2", "1+1"]));
        assert_eq!(strings(Sf, 0), sorted(&["()"]));
        assert!(build_family(St, 0).unwrap().is_empty());
    }

    #[test]
    fn domains() {
        assert!(matches!(build_family(Sl, 1), Err(Error::OutOfDomain { .. })));
        assert!(build_family(ObBarDag, 3).is_err());
        assert!(build_over_family(ObBarStar, 0).is_err());
        assert!(build_over_family(Sf, 3).is_err());
        assert!(enumerate_constrained_binary(St, 3).is_err());
    }

    #[test]
    fn membership() {
        assert!(is_member(St, &p("4+2+1")));
        assert!(!is_member(St, &p("2+2")));
        assert!(is_member(Sb, &p("8+1")));
        assert!(is_member(Snc, &p("8+3")));
        assert!(!is_member(Snc, &p("5+4")));
        assert!(!is_member(St, &Partition::empty()));
        assert!(is_member(Spa, &Partition::empty()));
    }

    #[test]
    fn constrained_binary() {
        let e = |fid, n| {
            let mut v = enumerate_constrained_binary(fid, n).unwrap().to_strings();
            v.sort();
            v
        };
        assert_eq!(e(Ob1, 7), sorted(&["2+2+2+1", "1+1+1+1+1+1+1"]));
        assert_eq!(e(Ob2, 7), sorted(&["4+2+1", "2+1+1+1+1+1"]));
        assert_eq!(e(ObR, 9), sorted(&["2+2+2+1+1+1", "1+1+1+1+1+1+1+1+1"]));
        assert_eq!(e(Ob13, 7), sorted(&["4+2+1", "4+1+1+1", "2+2+2+1"]));
        assert_eq!(e(B, 4).len(), 4);
        assert_eq!(e(Hb, 0), sorted(&["()"]));
    }

    #[test]
    fn overpartition_sets() {
        let s = build_over_family(ObBarPrime, 5).unwrap().to_strings();
        assert_eq!(s, ["4*+1", "4*+1*", "2*+1+1+1", "2*+1*+1+1", "1*+1+1+1+1"]);
        let mut s = build_over_family(ObBarStar, 5).unwrap().to_strings();
        s.sort();
        assert_eq!(s, sorted(&["4+1", "2+1+1+1", "1+1+1+1+1", "1*+1+1+1+1"]));
        assert_eq!(build_over_family(ObBarStar, 1).unwrap().to_strings(), ["1", "1*"]);
        assert_eq!(build_over_family(ObBarDag, 7).unwrap().len(), 7);
    }

    #[test]
    fn totals() {
        assert_eq!(total_parts(St, 7).unwrap(), BigUint::from(18u32));
        assert_eq!(total_parts(Sb, 11).unwrap(), BigUint::from(11u32));
        assert_eq!(total_parts(Spa, 4).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn bounded_memo_rebuilds() {
        let b = FamilyBuilder::new(4, 1);
        let a = b.build(Sp, 21).unwrap();
        b.clear();
        assert_eq!(b.build(Sp, 21).unwrap().members(), a.members());
    }
}
