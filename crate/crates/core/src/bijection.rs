//! The explicit maps between families, applied in either direction and
//! verified exhaustively at a given weight.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{build_family, build_over_family, is_member, is_over_member, FamilyId};
use crate::partition::{bin, Overpartition, Partition};
use crate::report::Status;

/// A value a bijection consumes or produces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Partition(Partition),
    Overpartition(Overpartition),
    /// A pair of binary partitions of the same weight.
    Pair(Partition, Partition),
    /// A composition: parts in order.
    Composition(Vec<u64>),
}

impl Item {
    pub fn weight(&self) -> u64 {
        match self {
            Item::Partition(l) => l.weight(),
            Item::Overpartition(o) => o.weight(),
            Item::Pair(a, _) => a.weight(),
            Item::Composition(c) => c.iter().sum(),
        }
    }

    pub fn as_partition(&self) -> Result<&Partition> {
        match self {
            Item::Partition(l) => Ok(l),
            other => Err(Error::WrongKind(format!("expected a partition, got {other}"))),
        }
    }

    pub fn as_overpartition(&self) -> Result<&Overpartition> {
        match self {
            Item::Overpartition(o) => Ok(o),
            other => Err(Error::WrongKind(format!("expected an overpartition, got {other}"))),
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Partition(l) => write!(f, "{l}"),
            Item::Overpartition(o) => write!(f, "{o}"),
            Item::Pair(a, b) => write!(f, "{a} | {b}"),
            Item::Composition(c) if c.is_empty() => f.write_str("()"),
            Item::Composition(c) => {
                let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                f.write_str(&parts.join("+"))
            }
        }
    }
}

impl From<Partition> for Item {
    fn from(l: Partition) -> Self {
        Item::Partition(l)
    }
}

impl From<Overpartition> for Item {
    fn from(o: Overpartition) -> Self {
        Item::Overpartition(o)
    }
}

/// Where a bijection's inputs or outputs live.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Family(FamilyId),
    /// Pairs of binary partitions of equal weight.
    PairOfBinary,
    /// Weakly unimodal binary compositions in which every part size occurs in
    /// one contiguous block of odd length.
    OddColonyCompositions,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Family(fid) => write!(f, "{fid}"),
            Domain::PairOfBinary => f.write_str("B x B"),
            Domain::OddColonyCompositions => f.write_str("OC"),
        }
    }
}

impl Domain {
    /// Membership, independent of any enumeration.
    pub fn contains(&self, item: &Item) -> bool {
        match (self, item) {
            (Domain::Family(fid), Item::Partition(l)) if !fid.is_overpartition() => {
                l.weight() >= fid.min_weight() && is_member(*fid, l)
            }
            (Domain::Family(fid), Item::Overpartition(o)) if fid.is_overpartition() => {
                is_over_member(*fid, o)
            }
            (Domain::PairOfBinary, Item::Pair(a, b)) => {
                a.is_binary() && b.is_binary() && a.weight() == b.weight()
            }
            (Domain::OddColonyCompositions, Item::Composition(c)) => is_odd_colony(c),
            _ => false,
        }
    }

    /// All members of weight `n`.
    pub fn enumerate(&self, n: u64) -> Result<Vec<Item>> {
        match self {
            Domain::Family(fid) if fid.is_overpartition() => Ok(build_over_family(*fid, n)?
                .iter()
                .cloned()
                .map(Item::Overpartition)
                .collect()),
            Domain::Family(fid) => Ok(build_family(*fid, n)?
                .iter()
                .cloned()
                .map(Item::Partition)
                .collect()),
            Domain::PairOfBinary => Err(Error::WrongKind(
                "pairs of binary partitions are not enumerated".into(),
            )),
            Domain::OddColonyCompositions => {
                Ok(odd_colony_compositions(n).into_iter().map(Item::Composition).collect())
            }
        }
    }

    /// Parses the text form of an item of this domain.
    pub fn parse(&self, text: &str) -> Result<Item> {
        match self {
            Domain::Family(fid) if fid.is_overpartition() => Ok(Item::Overpartition(text.parse()?)),
            Domain::Family(_) => Ok(Item::Partition(text.parse()?)),
            Domain::PairOfBinary => {
                let (a, b) = text.split_once('|').ok_or_else(|| Error::Parse {
                    input: text.to_string(),
                    reason: "expected `a | b`".into(),
                })?;
                Ok(Item::Pair(a.parse()?, b.parse()?))
            }
            Domain::OddColonyCompositions => {
                let ordered = text.replace(',', "+");
                let trimmed = ordered.trim().trim_start_matches('(').trim_end_matches(')');
                if trimmed.trim().is_empty() {
                    return Ok(Item::Composition(Vec::new()));
                }
                let parts = trimmed
                    .split('+')
                    .map(|t| match t.trim().parse::<u64>() {
                        Ok(0) => Err(Error::InvalidPart("0".into())),
                        Ok(p) => Ok(p),
                        Err(e) => Err(Error::Parse {
                            input: text.to_string(),
                            reason: e.to_string(),
                        }),
                    })
                    .collect::<Result<Vec<u64>>>()?;
                Ok(Item::Composition(parts))
            }
        }
    }
}

/// Weakly unimodal, binary, non-empty, and each part size in a single block of odd length.
pub fn is_odd_colony(c: &[u64]) -> bool {
    if c.is_empty() || !c.iter().all(|p| p.is_power_of_two()) {
        return false;
    }
    let peak = c.iter().position(|&p| p == *c.iter().max().expect("non-empty")).expect("max exists");
    let unimodal = c[..=peak].windows(2).all(|w| w[0] <= w[1]) && c[peak..].windows(2).all(|w| w[0] >= w[1]);
    if !unimodal {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut i = 0;
    while i < c.len() {
        let mut j = i;
        while j < c.len() && c[j] == c[i] {
            j += 1;
        }
        if !seen.insert(c[i]) || (j - i) % 2 == 0 {
            return false;
        }
        i = j;
    }
    true
}

/// Every odd-colony composition of `n`, built from the odd binary partitions of `n`
/// by sending each non-maximal part size to the left or right of the peak.
pub fn odd_colony_compositions(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for base in crate::family::odd_binary_partitions(n) {
        let Some(&(top, top_m)) = base.runs().first() else {
            continue;
        };
        let rest = &base.runs()[1..];
        for mask in 0u64..1 << rest.len() {
            out.push(arrange(top, top_m, rest, |i| mask >> i & 1 == 1));
        }
    }
    out.sort();
    out
}

// Parts flagged `left` go before the peak in increasing order, the others after it in decreasing order.
fn arrange(top: u64, top_m: u64, rest: &[(u64, u64)], left: impl Fn(usize) -> bool) -> Vec<u64> {
    let mut c = Vec::new();
    for (i, &(p, m)) in rest.iter().enumerate().rev() {
        if left(i) {
            c.extend(std::iter::repeat(p).take(m as usize));
        }
    }
    c.extend(std::iter::repeat(top).take(top_m as usize));
    for (i, &(p, m)) in rest.iter().enumerate() {
        if !left(i) {
            c.extend(std::iter::repeat(p).take(m as usize));
        }
    }
    c
}

/// The explicit maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BijectionId {
    /// Overlined odd binary overpartitions to semi-tribonacci partitions.
    HSt,
    /// Semi-Fibonacci partitions without power-of-two parts to semi-Padovan partitions.
    PhiSpa,
    /// Modified semi-Padovan partitions to odd binary partitions in which only the largest part may appear once.
    PsiSpaPrime,
    /// Semi-Pell partitions to odd binary overpartitions with the largest part overlined.
    XiSp,
    /// Split the first part in two.
    XiSplit,
    /// Merge the first two parts.
    FMergeSl,
    /// Stern-Brocot partitions of `n` to hyperbinary partitions of `n − 1`.
    ThetaSb,
    Rep2Sf,
    Rep2Snc,
    /// `λ ↦ (rep₂(λ), bin(λ))` on semi-tribonacci partitions.
    RbSt,
    /// Overlined parts to the left of the peak, the rest to the right.
    UnimodalOc,
}

use BijectionId::*;

impl BijectionId {
    pub const ALL: [BijectionId; 11] = [
        HSt, PhiSpa, PsiSpaPrime, XiSp, XiSplit, FMergeSl, ThetaSb, Rep2Sf, Rep2Snc, RbSt,
        UnimodalOc,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            HSt => "h_st",
            PhiSpa => "phi_spa",
            PsiSpaPrime => "psi_spa_prime",
            XiSp => "xi_sp",
            XiSplit => "xi_split",
            FMergeSl => "f_merge_sl",
            ThetaSb => "theta_sb",
            Rep2Sf => "rep2_sf",
            Rep2Snc => "rep2_snc",
            RbSt => "rb_st",
            UnimodalOc => "unimodal_oc",
        }
    }

    pub fn source(self) -> Domain {
        Domain::Family(match self {
            HSt => FamilyId::ObBarDag,
            PhiSpa => FamilyId::SfPrime,
            PsiSpaPrime => FamilyId::SpaPrime,
            XiSp => FamilyId::Sp,
            XiSplit | FMergeSl => FamilyId::Ob2,
            ThetaSb => FamilyId::Sb,
            Rep2Sf => FamilyId::Sf,
            Rep2Snc => FamilyId::Snc,
            RbSt => FamilyId::St,
            UnimodalOc => FamilyId::ObBarPrime,
        })
    }

    pub fn target(self) -> Domain {
        match self {
            HSt => Domain::Family(FamilyId::St),
            PhiSpa => Domain::Family(FamilyId::Spa),
            PsiSpaPrime => Domain::Family(FamilyId::ObRp),
            XiSp => Domain::Family(FamilyId::ObBarPrime),
            XiSplit => Domain::Family(FamilyId::Ob1),
            FMergeSl => Domain::Family(FamilyId::Sl3Div),
            ThetaSb => Domain::Family(FamilyId::Hb),
            Rep2Sf => Domain::Family(FamilyId::Ob),
            Rep2Snc => Domain::Family(FamilyId::Ob13),
            RbSt => Domain::PairOfBinary,
            UnimodalOc => Domain::OddColonyCompositions,
        }
    }

    /// How much the map lowers the weight.
    pub fn weight_drop(self) -> u64 {
        u64::from(self == ThetaSb)
    }

    /// Smallest source weight at which both sides are defined.
    pub fn min_n(self) -> u64 {
        match self {
            FMergeSl => 2,
            ThetaSb => 1,
            _ => 0,
        }
    }

    /// Only injectivity is claimed: the target is not enumerated.
    pub fn injective_only(self) -> bool {
        self == RbSt
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BijectionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BijectionId::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "bijection",
                name: s.to_string(),
            })
    }
}

impl Serialize for BijectionId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

fn not_in(item: &Item, domain: Domain) -> Error {
    Error::NotInFamily {
        item: item.to_string(),
        domain: domain.to_string(),
    }
}

/// `(rep₂(λ), bin(λ))`.
pub fn rb_pair(l: &Partition) -> (Partition, Partition) {
    (l.rep2(), l.bin_map())
}

/// Applies `bij` to a member of its source.
pub fn forward(bij: BijectionId, x: &Item) -> Result<Item> {
    if !bij.source().contains(x) {
        return Err(not_in(x, bij.source()));
    }
    Ok(match bij {
        HSt => Item::Partition(h_forward(x.as_overpartition()?)),
        PhiSpa => Item::Partition(phi_forward(x.as_partition()?)),
        PsiSpaPrime | Rep2Sf | Rep2Snc => Item::Partition(x.as_partition()?.rep2()),
        XiSp => {
            let l = x.as_partition()?;
            let top = bin(l.largest().expect("members are non-empty"));
            let base = top.union(&l.without_largest());
            Item::Overpartition(Overpartition::new(base, top.distinct_values())?)
        }
        XiSplit => {
            let l = x.as_partition()?;
            let top = l.largest().expect("members are non-empty");
            Item::Partition(l.without_largest().with_parts(top / 2, 2))
        }
        FMergeSl => {
            let l = x.as_partition()?;
            let second = l.part(1).expect("members have two parts");
            Item::Partition(l.without_largest().without_largest().with_part(3 * second))
        }
        ThetaSb => {
            let l = x.as_partition()?;
            let top = l.largest().expect("members are non-empty");
            Item::Partition(bin(top - 1).union(&l.without_largest()))
        }
        RbSt => {
            let (a, b) = rb_pair(x.as_partition()?);
            Item::Pair(a, b)
        }
        UnimodalOc => {
            let o = x.as_overpartition()?;
            let runs = o.base().runs();
            let (top, top_m) = runs[0];
            Item::Composition(arrange(top, top_m, &runs[1..], |i| o.is_overlined(runs[i + 1].0)))
        }
    })
}

/// Applies the inverse of `bij` to a member of its target.
pub fn backward(bij: BijectionId, y: &Item) -> Result<Item> {
    if !bij.target().contains(y) {
        return Err(not_in(y, bij.target()));
    }
    let x = match bij {
        HSt => Item::Overpartition(h_backward(y.as_partition()?)),
        PhiSpa => Item::Partition(y.as_partition()?.merge_by_valuation()),
        PsiSpaPrime => Item::Partition(psi_backward(y.as_partition()?)),
        Rep2Sf | Rep2Snc => Item::Partition(y.as_partition()?.merge_equal()),
        XiSp => {
            let o = y.as_overpartition()?;
            let over = o.overlined_parts();
            let rest = o.base().subtract(&over)?;
            Item::Partition(rest.with_part(over.weight()))
        }
        XiSplit => {
            let l = y.as_partition()?;
            let top = l.largest().expect("members are non-empty");
            Item::Partition(l.subtract(&Partition::repeated(top, 2))?.with_part(2 * top))
        }
        FMergeSl => {
            let l = y.as_partition()?;
            let top = l.largest().expect("members are non-empty");
            let low = top / 3;
            Item::Partition(l.without_largest().with_part(2 * low).with_part(low))
        }
        ThetaSb => {
            let l = y.as_partition()?;
            let d = l.distinct();
            Item::Partition(l.subtract(&d)?.with_part(1 + d.weight()))
        }
        RbSt => match y {
            Item::Pair(a, b) => Item::Partition(rb_backward(a, b)?),
            _ => unreachable!("target membership checked"),
        },
        UnimodalOc => match y {
            Item::Composition(c) => Item::Overpartition(oc_backward(c)?),
            _ => unreachable!("target membership checked"),
        },
    };
    // Only meaningful for rb, whose target is larger than its image.
    if !bij.source().contains(&x) {
        return Err(not_in(y, bij.target()));
    }
    Ok(x)
}

fn h_forward(o: &Overpartition) -> Partition {
    let mut runs = Vec::new();
    for &(p, m) in o.base().runs() {
        if o.is_overlined(p) {
            runs.push(((m - 2) * p, 1));
            runs.push((p, 2));
        } else {
            runs.push((m * p, 1));
        }
    }
    Partition::from_runs(runs).expect("positive parts")
}

fn h_backward(l: &Partition) -> Overpartition {
    let v = l.valuation_profile();
    let over: Vec<u64> = v.runs().iter().filter(|&&(_, m)| m == 3).map(|&(k, _)| 1u64 << k).collect();
    Overpartition::new(l.rep2(), over).expect("rep2 contains 2^k for every valuation k")
}

fn phi_forward(l: &Partition) -> Partition {
    let Some(v1) = l.valuation_profile().first() else {
        return Partition::empty();
    };
    let mut runs = Vec::new();
    for &(p, m) in l.runs() {
        let k = p.trailing_zeros();
        if k == v1 {
            runs.push((p, m));
        } else {
            let low = 1u64 << k;
            runs.push((p - 2 * low, m));
            runs.push((low, 2 * m));
        }
    }
    Partition::from_runs(runs).expect("odd parts are at least 3")
}

fn psi_backward(l: &Partition) -> Partition {
    let runs = l.runs();
    let mut out = vec![(runs[0].0 * runs[0].1, 1)];
    for &(p, m) in &runs[1..] {
        out.push(((m - 2) * p, 1));
        out.push((p, 2));
    }
    Partition::from_runs(out).expect("multiplicities below the top are at least 3")
}

// Peels off the parts of smallest 2-adic valuation, which `rep₂` and `bin`
// both keep at the bottom of their images.
fn rb_backward(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    let fail = || Error::NotInFamily {
        item: format!("{alpha} | {beta}"),
        domain: "the image of rb on ST".into(),
    };
    let (mut alpha, mut beta) = (alpha.clone(), beta.clone());
    let mut parts = Vec::new();
    while let Some(&(p, a)) = alpha.runs().last() {
        let used = match beta.multiplicity(p) {
            1 => {
                parts.push(a * p);
                bin(a * p)
            }
            3 if a >= 3 => {
                parts.extend([(a - 2) * p, p, p]);
                bin((a - 2) * p).with_parts(p, 2)
            }
            _ => return Err(fail()),
        };
        alpha = alpha.subtract(&Partition::repeated(p, a))?;
        beta = beta.subtract(&used).map_err(|_| fail())?;
    }
    if !beta.is_empty() {
        return Err(fail());
    }
    Partition::new(parts)
}

fn oc_backward(c: &[u64]) -> Result<Overpartition> {
    let top = *c.iter().max().expect("members are non-empty");
    let peak = c.iter().position(|&p| p == top).expect("max exists");
    let mut over: BTreeSet<u64> = c[..peak].iter().copied().collect();
    over.insert(top);
    Overpartition::new(Partition::new(c.iter().copied())?, over)
}

/// Outcome of verifying one bijection at one weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub bijection: BijectionId,
    pub n: u64,
    pub status: Status,
    /// Number of source elements mapped.
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

const MAX_REPORTED: usize = 20;

/// Checks totality, image membership, weight, injectivity, surjectivity and
/// both round trips at source weight `n` (injectivity and the round trip only for `rb_st`).
pub fn verify_bijection(bij: BijectionId, n: u64) -> Result<BijectionReport> {
    if n < bij.min_n() {
        return Err(Error::OutOfDomain {
            what: bij.tag().to_string(),
            n,
            min: bij.min_n(),
        });
    }
    let m = n - bij.weight_drop();
    let source = bij.source().enumerate(n)?;
    let target: Option<BTreeSet<Item>> = if bij.injective_only() {
        None
    } else {
        Some(bij.target().enumerate(m)?.into_iter().collect())
    };
    let mut bad: Vec<String> = Vec::new();
    let mut note = |s: String| {
        if bad.len() < MAX_REPORTED {
            bad.push(s);
        }
    };
    let mut images = BTreeSet::new();
    for x in &source {
        let y = match forward(bij, x) {
            Ok(y) => y,
            Err(e) => {
                note(format!("forward({x}) failed: {e}"));
                continue;
            }
        };
        if y.weight() != m {
            note(format!("forward({x}) = {y} has weight {}", y.weight()));
        }
        let lands = match &target {
            Some(t) => t.contains(&y),
            None => bij.target().contains(&y),
        };
        if !lands {
            note(format!("forward({x}) = {y} is outside {}", bij.target()));
        }
        match backward(bij, &y) {
            Ok(back) if &back == x => {}
            Ok(back) => note(format!("backward(forward({x})) = {back}")),
            Err(e) => note(format!("backward({y}) failed: {e}")),
        }
        if !images.insert(y.clone()) {
            note(format!("{y} is hit twice"));
        }
    }
    if let Some(t) = &target {
        for y in t.difference(&images) {
            note(format!("{y} is not hit"));
        }
        for y in t {
            match backward(bij, y).and_then(|x| forward(bij, &x)) {
                Ok(yy) if &yy == y => {}
                Ok(yy) => note(format!("forward(backward({y})) = {yy}")),
                Err(e) => note(format!("backward({y}) failed: {e}")),
            }
        }
    }
    Ok(BijectionReport {
        bijection: bij,
        n,
        status: Status::from_ok(bad.is_empty()),
        checked: source.len(),
        counterexamples: bad,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Item {
        Item::Partition(s.parse().unwrap())
    }

    fn o(s: &str) -> Item {
        Item::Overpartition(s.parse().unwrap())
    }

    #[test]
    fn worked_examples() {
        let lambda = o("8*+8+8+8+8+4*+4+4+4+4+2+2+2+1*+1+1+1+1");
        // the largest part of an element of the source may not be overlined
        assert!(forward(HSt, &lambda).is_err());
        let lambda = o("8+8+8+8+8+4*+4+4+4+4+2+2+2+1*+1+1+1+1");
        let mu = p("40+12+6+4+4+3+1+1");
        assert_eq!(forward(HSt, &lambda).unwrap(), mu);
        assert_eq!(backward(HSt, &mu).unwrap(), lambda);
        assert_eq!(forward(PhiSpa, &p("6+3")).unwrap(), p("6+1+1+1"));
        assert_eq!(forward(PhiSpa, &p("7+6")).unwrap(), p("6+5+1+1"));
        assert_eq!(backward(PhiSpa, &p("6+5+1+1")).unwrap(), p("7+6"));
        assert_eq!(forward(XiSplit, &p("4+2+1")).unwrap(), p("2+2+2+1"));
        assert_eq!(forward(ThetaSb, &p("5+4")).unwrap(), p("4+4"));
        assert_eq!(backward(ThetaSb, &p("4+2+2+1")).unwrap(), p("8+2"));
        assert_eq!(forward(FMergeSl, &p("4+2+1+1+1")).unwrap(), p("6+1+1+1"));
        assert_eq!(backward(XiSp, &o("2*+1*")).unwrap(), p("3"));
        let over = o("8*+8+8+4*+2*+2+2+2+2+1+1+1+1+1+1+1");
        let c = forward(UnimodalOc, &over).unwrap();
        let expected: Vec<u64> = [vec![2; 5], vec![4], vec![8; 3], vec![1; 7]].concat();
        assert_eq!(c, Item::Composition(expected));
        assert_eq!(backward(UnimodalOc, &c).unwrap(), over);
    }

    #[test]
    fn rb_examples() {
        let q = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(rb_pair(&q("3+2")), (q("2+1+1+1"), q("2+2+1")));
        assert_eq!(rb_pair(&q("4+1")), (q("4+1"), q("4+1")));
        assert_eq!(rb_pair(&Partition::empty()), (Partition::empty(), Partition::empty()));
        let y = forward(RbSt, &p("40+12+6+4+4+3+1+1")).unwrap();
        assert_eq!(backward(RbSt, &y).unwrap(), p("40+12+6+4+4+3+1+1"));
        assert!(backward(RbSt, &Item::Pair(q("2"), q("1+1"))).is_err());
    }

    #[test]
    fn rejects_outside_source() {
        assert!(matches!(forward(ThetaSb, &p("3+3")), Err(Error::NotInFamily { .. })));
        assert!(forward(HSt, &p("3")).is_err());
        assert!(backward(PhiSpa, &p("6+3")).is_err());
    }

    #[test]
    fn reports() {
        let r = verify_bijection(ThetaSb, 9).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checked, 4);
        let r = verify_bijection(RbSt, 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 4);
        let r = verify_bijection(HSt, 71).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 2748);
    }

    #[test]
    fn odd_colony() {
        assert!(is_odd_colony(&[16, 4, 4, 4, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]));
        let mut c = vec![1; 7];
        c.extend([8, 16]);
        c.extend([2; 7]);
        assert!(is_odd_colony(&c));
        let mut bad = vec![2, 2, 2, 4, 4, 4, 16, 2];
        bad.extend([1; 9]);
        assert!(!is_odd_colony(&bad));
        assert!(!is_odd_colony(&[]));
    }
}
