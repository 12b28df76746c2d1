//! Partitions, overpartitions and the multiset / 2-adic operations on them.
//!
//! A [`Partition`] is stored run-length encoded: a list of `(part, multiplicity)`
//! pairs with strictly decreasing parts. The flat, weakly decreasing part list is
//! always available through [`Partition::parts`]. Families such as the semi-Pell
//! partitions of 199 hold hundreds of thousands of members with dozens of parts
//! each, almost all of them repeated small powers of two, so the encoded form is
//! what keeps exhaustive sweeps in memory.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 2-adic valuation of `k`: the exponent of the largest power of two dividing it.
pub fn val2(k: u64) -> Result<u32> {
    if k == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(k.trailing_zeros())
}

pub fn is_power_of_two(k: u64) -> bool {
    k.is_power_of_two()
}

/// The unique partition of `k` into distinct powers of two.
pub fn bin(k: u64) -> Partition {
    let runs = (0..64)
        .rev()
        .filter(|b| k >> b & 1 == 1)
        .map(|b| (1u64 << b, 1))
        .collect();
    Partition::from_sorted_runs(runs)
}

// Adds `m` copies of `p` to runs sorted by decreasing part.
fn add_run(runs: &mut Vec<(u64, u64)>, p: u64, m: u64) {
    match runs.binary_search_by(|&(q, _)| p.cmp(&q)) {
        Ok(i) => runs[i].1 += m,
        Err(i) => runs.insert(i, (p, m)),
    }
}

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    runs: Vec<(u64, u64)>,
    weight: u64,
    len: u64,
}

impl Partition {
    /// Builds the canonical partition with the given parts, in any order.
    pub fn new<I: IntoIterator<Item = u64>>(parts: I) -> Result<Self> {
        let mut parts: Vec<u64> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(Error::InvalidPart("0".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for p in parts {
            match runs.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        Ok(Self::from_sorted_runs(runs))
    }

    /// Like [`Partition::new`] but accepts signed input, rejecting non-positive entries.
    pub fn from_signed(raw: &[i64]) -> Result<Self> {
        let parts = raw
            .iter()
            .map(|&p| u64::try_from(p).ok().filter(|&p| p > 0).ok_or_else(|| Error::InvalidPart(p.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-part partition `(p)`.
    pub fn single(p: u64) -> Self {
        assert!(p > 0, "parts are positive");
        Self::from_sorted_runs(vec![(p, 1)])
    }

    /// `m` copies of `p`.
    pub fn repeated(p: u64, m: u64) -> Self {
        assert!(p > 0, "parts are positive");
        if m == 0 {
            return Self::empty();
        }
        Self::from_sorted_runs(vec![(p, m)])
    }

    /// Builds from `(part, multiplicity)` pairs in arbitrary order; zero
    /// multiplicities are dropped and equal parts are combined.
    pub fn from_runs<I: IntoIterator<Item = (u64, u64)>>(runs: I) -> Result<Self> {
        let mut runs: Vec<(u64, u64)> = runs.into_iter().filter(|&(_, m)| m > 0).collect();
        if runs.iter().any(|&(p, _)| p == 0) {
            return Err(Error::InvalidPart("0".into()));
        }
        Ok(Self::normalize(&mut runs))
    }

    fn normalize(runs: &mut Vec<(u64, u64)>) -> Self {
        runs.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(u64, u64)> = Vec::with_capacity(runs.len());
        for &(p, m) in runs.iter().filter(|&&(_, m)| m > 0) {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += m,
                _ => out.push((p, m)),
            }
        }
        Self::from_sorted_runs(out)
    }

    // Caller guarantees strictly decreasing parts and positive multiplicities.
    pub(crate) fn from_sorted_runs(runs: Vec<(u64, u64)>) -> Self {
        debug_assert!(runs.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(runs.iter().all(|&(p, m)| p > 0 && m > 0));
        let weight = runs.iter().map(|&(p, m)| p * m).sum();
        let len = runs.iter().map(|&(_, m)| m).sum();
        Partition { runs, weight, len }
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts, counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    /// The parts in weakly decreasing order.
    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat(p).take(m as usize))
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.parts().collect()
    }

    pub fn largest(&self) -> Option<u64> {
        self.runs.first().map(|&(p, _)| p)
    }

    /// The `i`-th part (0-based), if any.
    pub fn part(&self, i: u64) -> Option<u64> {
        let mut seen = 0;
        for &(p, m) in &self.runs {
            seen += m;
            if i < seen {
                return Some(p);
            }
        }
        None
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.runs
            .binary_search_by(|&(p, _)| part.cmp(&p))
            .map(|i| self.runs[i].1)
            .unwrap_or(0)
    }

    // A copy of the runs with space for one more, so an insertion does not reallocate.
    fn runs_with_room(&self) -> Vec<(u64, u64)> {
        let mut runs = Vec::with_capacity(self.runs.len() + 1);
        runs.extend_from_slice(&self.runs);
        runs
    }

    // Index of the run holding `part`.
    pub(crate) fn run_index(&self, part: u64) -> Option<usize> {
        self.runs.binary_search_by(|&(p, _)| part.cmp(&p)).ok()
    }

    pub fn has_part(&self, part: u64) -> bool {
        self.multiplicity(part) > 0
    }

    /// Distinct part values, decreasing.
    pub fn distinct_values(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs.iter().map(|&(p, _)| p)
    }

    /// Multiset union `self ⊔ other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.runs, &other.runs);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self::from_sorted_runs(out)
    }

    /// `self ⊔ (p)`.
    pub fn with_part(&self, p: u64) -> Partition {
        self.with_parts(p, 1)
    }

    /// `self ⊔ (p, p, …, p)` with `m` copies.
    pub fn with_parts(&self, p: u64, m: u64) -> Partition {
        assert!(p > 0, "parts are positive");
        let mut runs = self.runs_with_room();
        if m > 0 {
            add_run(&mut runs, p, m);
        }
        Self::from_sorted_runs(runs)
    }

    /// True when every part of `sub` occurs in `self` with at least the same multiplicity.
    pub fn contains(&self, sub: &Partition) -> bool {
        sub.runs.iter().all(|&(p, m)| self.multiplicity(p) >= m)
    }

    /// Multiset difference `self ∖ sub`.
    pub fn subtract(&self, sub: &Partition) -> Result<Partition> {
        if !self.contains(sub) {
            return Err(Error::NotContained {
                whole: self.to_string(),
                sub: sub.to_string(),
            });
        }
        let runs = self
            .runs
            .iter()
            .filter_map(|&(p, m)| {
                let left = m - sub.multiplicity(p);
                (left > 0).then_some((p, left))
            })
            .collect();
        Ok(Self::from_sorted_runs(runs))
    }

    /// `λ ∖ (λ₁)`: drops one copy of the largest part.
    pub fn without_largest(&self) -> Partition {
        let mut runs = self.runs.clone();
        if let Some(first) = runs.first_mut() {
            first.1 -= 1;
            if first.1 == 0 {
                runs.remove(0);
            }
        }
        Self::from_sorted_runs(runs)
    }

    /// Multiplies every part by `m`.
    pub fn scale(&self, m: u64) -> Partition {
        assert!(m > 0, "scale factor must be positive");
        let runs = self
            .runs
            .iter()
            .map(|&(p, k)| (p.checked_mul(m).expect("part overflows u64"), k))
            .collect();
        Self::from_sorted_runs(runs)
    }

    /// Divides every part by `m`; fails when some part is not divisible.
    pub fn unscale(&self, m: u64) -> Result<Partition> {
        assert!(m > 0, "scale factor must be positive");
        if let Some(&(p, _)) = self.runs.iter().find(|&&(p, _)| p % m != 0) {
            return Err(Error::NotDivisible { part: p, divisor: m });
        }
        Ok(Self::from_sorted_runs(self.runs.iter().map(|&(p, k)| (p / m, k)).collect()))
    }

    /// Adds 1 to the first (largest) part; the empty partition is left alone.
    pub fn add11(&self) -> Partition {
        match self.largest() {
            None => Partition::empty(),
            Some(p) => self.replace_one(p, p + 1),
        }
    }

    /// Subtracts 1 from the first part, the inverse of [`Partition::add11`].
    /// Fails on the empty partition and on a largest part equal to 1.
    pub fn sub11(&self) -> Result<Partition> {
        match self.largest() {
            Some(p) if p > 1 => Ok(self.replace_one(p, p - 1)),
            _ => Err(Error::WrongKind(format!("cannot subtract 1 from the first part of {self}"))),
        }
    }

    /// Adds 2 to the largest odd part (one copy of it).
    pub fn o_plus_2(&self) -> Result<Partition> {
        let p = self
            .runs
            .iter()
            .map(|&(p, _)| p)
            .find(|p| p % 2 == 1)
            .ok_or_else(|| Error::NoOddPart(self.to_string()))?;
        Ok(self.replace_one(p, p + 2))
    }

    // Replaces one copy of `old` (which must be a part) by `new`.
    fn replace_one(&self, old: u64, new: u64) -> Partition {
        let mut runs = self.runs_with_room();
        let i = runs.iter().position(|&(p, _)| p == old).expect("part present");
        runs[i].1 -= 1;
        if runs[i].1 == 0 {
            runs.remove(i);
        }
        add_run(&mut runs, new, 1);
        Self::from_sorted_runs(runs)
    }

    /// The 2-adic valuations of the parts, sorted non-increasingly.
    pub fn valuation_profile(&self) -> ValuationProfile {
        let mut runs: Vec<(u32, u64)> = Vec::new();
        for &(p, m) in &self.runs {
            let v = p.trailing_zeros();
            match runs.iter_mut().find(|(w, _)| *w == v) {
                Some((_, k)) => *k += m,
                None => runs.push((v, m)),
            }
        }
        runs.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        ValuationProfile { runs }
    }

    /// Replaces every part `2^k·o` (o odd) by `o` copies of `2^k`.
    pub fn rep2(&self) -> Partition {
        let mut runs: Vec<(u64, u64)> = self
            .runs
            .iter()
            .map(|&(p, m)| {
                let k = p.trailing_zeros();
                (1u64 << k, m * (p >> k))
            })
            .collect();
        Self::normalize(&mut runs)
    }

    /// Replaces every part by its binary expansion into distinct powers of two.
    pub fn bin_map(&self) -> Partition {
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for &(p, m) in &self.runs {
            runs.extend(bin(p).runs.iter().map(|&(q, _)| (q, m)));
        }
        Self::normalize(&mut runs)
    }

    /// Merges each maximal run of equal parts into a single part equal to its sum.
    pub fn merge_equal(&self) -> Partition {
        let mut runs: Vec<(u64, u64)> = self.runs.iter().map(|&(p, m)| (p * m, 1)).collect();
        Self::normalize(&mut runs)
    }

    /// Merges all parts sharing a 2-adic valuation into a single part.
    pub fn merge_by_valuation(&self) -> Partition {
        let mut sums: Vec<(u32, u64)> = Vec::new();
        for &(p, m) in &self.runs {
            let v = p.trailing_zeros();
            match sums.iter_mut().find(|(w, _)| *w == v) {
                Some((_, s)) => *s += p * m,
                None => sums.push((v, p * m)),
            }
        }
        let mut runs: Vec<(u64, u64)> = sums.into_iter().map(|(_, s)| (s, 1)).collect();
        Self::normalize(&mut runs)
    }

    /// One copy of each distinct part (`μᵈ`).
    pub fn distinct(&self) -> Partition {
        Self::from_sorted_runs(self.runs.iter().map(|&(p, _)| (p, 1)).collect())
    }

    /// All parts are powers of two.
    pub fn is_binary(&self) -> bool {
        self.runs.iter().all(|&(p, _)| p.is_power_of_two())
    }

    /// Binary with every part size occurring an odd number of times.
    pub fn is_odd_binary(&self) -> bool {
        self.is_binary() && self.runs.iter().all(|&(_, m)| m % 2 == 1)
    }

    /// Parts pairwise have distinct 2-adic valuations.
    pub fn has_distinct_valuations(&self) -> bool {
        let mut seen = 0u64;
        for &(p, m) in &self.runs {
            let bit = 1u64 << p.trailing_zeros();
            if m > 1 || seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }
}

impl Ord for Partition {
    /// Lexicographic order on the part sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.runs.iter().zip(&other.runs) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                ord => return ord,
            }
            // Same part value: the one that stops repeating it first moves on to
            // a smaller part (or ends), so it is the smaller sequence.
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.runs.len().cmp(&other.runs.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

// Shared by the Partition and Overpartition parsers: `4*+2+1`, `()` or the empty string.
fn parse_tokens(input: &str) -> Result<Vec<(u64, bool)>> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "()" {
        return Ok(Vec::new());
    }
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    compact
        .split('+')
        .map(|tok| {
            let (digits, over) = match tok.strip_suffix('*') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(&format!("`{tok}` is not a positive integer")));
            }
            match digits.parse::<u64>() {
                Ok(0) => Err(Error::InvalidPart("0".into())),
                Ok(p) => Ok((p, over)),
                Err(e) => Err(err(&e.to_string())),
            }
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = parse_tokens(s)?;
        if tokens.iter().any(|&(_, over)| over) {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "overlined part in a plain partition".into(),
            });
        }
        Partition::new(tokens.into_iter().map(|(p, _)| p))
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    parts: Vec<u64>,
    #[serde(default)]
    overlined: Vec<u64>,
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            parts: self.to_vec(),
            overlined: Vec::new(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = Repr::deserialize(d)?;
        if !repr.overlined.is_empty() {
            return Err(serde::de::Error::custom("plain partition with overlined parts"));
        }
        Partition::new(repr.parts).map_err(serde::de::Error::custom)
    }
}

/// The 2-adic valuations of the parts of a partition, sorted non-increasingly
/// (`v(λ) = (v₁(λ), v₂(λ), …)`), stored as `(valuation, multiplicity)` runs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuationProfile {
    runs: Vec<(u32, u64)>,
}

impl ValuationProfile {
    pub fn values(&self) -> Vec<u32> {
        self.runs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat(v).take(m as usize))
            .collect()
    }

    /// `(valuation, multiplicity)`, valuations strictly decreasing.
    pub fn runs(&self) -> &[(u32, u64)] {
        &self.runs
    }

    /// `v₁(λ)`, the largest valuation.
    pub fn first(&self) -> Option<u32> {
        self.runs.first().map(|&(v, _)| v)
    }

    pub fn multiplicity(&self, v: u32) -> u64 {
        self.runs.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, m)| m)
    }

    pub fn len(&self) -> u64 {
        self.runs.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

/// A partition in which the first occurrence of some part sizes is overlined.
///
/// Only first occurrences can carry an overline, so the overlines are a set
/// of part values, stored as a bit mask over the distinct parts (bit `i` for
/// the `i`-th largest). Only the 64 largest distinct parts can be overlined.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Overpartition {
    // Shared, since a family lists many overlinings of one base.
    base: Arc<Partition>,
    mask: u64,
}

impl Overpartition {
    pub fn new<I: IntoIterator<Item = u64>>(base: Partition, overlined: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in overlined {
            match base.run_index(v) {
                Some(i) if i < 64 => mask |= 1 << i,
                Some(_) => {
                    return Err(Error::WrongKind(format!(
                        "only the 64 largest distinct parts can be overlined, not {v}"
                    )))
                }
                None => {
                    return Err(Error::WrongKind(format!("overlined value {v} is not a part of {base}")));
                }
            }
        }
        Ok(Overpartition { base: Arc::new(base), mask })
    }

    // Bit `i` of `mask` overlines `base.runs()[i]`.
    pub(crate) fn from_mask(base: Arc<Partition>, mask: u64) -> Self {
        debug_assert!(base.runs().len() >= 64 || mask >> base.runs().len() == 0);
        Overpartition { base, mask }
    }

    /// The overpartition with nothing overlined.
    pub fn plain(base: Partition) -> Self {
        Overpartition { base: Arc::new(base), mask: 0 }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    /// The overlined part values, decreasing.
    pub fn overlined(&self) -> impl Iterator<Item = u64> + '_ {
        self.base
            .runs()
            .iter()
            .take(64)
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, &(p, _))| p)
    }

    /// Number of overlined parts.
    pub fn overlined_count(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_overlined(&self, part: u64) -> bool {
        matches!(self.base.run_index(part), Some(i) if i < 64 && self.mask >> i & 1 == 1)
    }

    pub fn weight(&self) -> u64 {
        self.base.weight()
    }

    pub fn len(&self) -> u64 {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// The parts of the overlined first occurrences, as a partition.
    pub fn overlined_parts(&self) -> Partition {
        Partition::from_sorted_runs(self.overlined().map(|v| (v, 1)).collect())
    }
}

impl Ord for Overpartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| self.overlined().cmp(other.overlined()))
    }
}

impl PartialOrd for Overpartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_empty() {
            return f.write_str("()");
        }
        for (i, &(p, m)) in self.base.runs().iter().enumerate() {
            for j in 0..m {
                if i > 0 || j > 0 {
                    f.write_str("+")?;
                }
                write!(f, "{p}")?;
                if j == 0 && i < 64 && self.mask >> i & 1 == 1 {
                    f.write_str("*")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = parse_tokens(s)?;
        let mut overlined = BTreeSet::new();
        for &(p, over) in &tokens {
            if over && !overlined.insert(p) {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: format!("part {p} is overlined twice"),
                });
            }
        }
        let base = Partition::new(tokens.into_iter().map(|(p, _)| p))?;
        Overpartition::new(base, overlined)
    }
}

impl From<Partition> for Overpartition {
    fn from(base: Partition) -> Self {
        Overpartition::plain(base)
    }
}

impl Serialize for Overpartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            parts: self.base.to_vec(),
            overlined: self.overlined().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Overpartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = Repr::deserialize(d)?;
        let base = Partition::new(repr.parts).map_err(serde::de::Error::custom)?;
        Overpartition::new(base, repr.overlined).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(rest: u64, max: u64, acc: &mut Vec<(u64, u64)>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted_runs(acc.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            for m in (1..=rest / p).rev() {
                acc.push((p, m));
                go(rest - p * m, p - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
