//! The self-similar sequences, their total-parts companions and the
//! paper-folding sequence, evaluated exactly or modulo `m` from shared memo tables.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};

/// Identifies one of the built-in sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    Sf,
    St,
    Spa,
    SpaMod,
    Sp,
    Snc,
    Dsf,
    Sl,
    Sb,
    Z,
    Psf,
    Pst,
    Pspa,
    PspaMod,
    Psp,
    Psnc,
    Pdsf,
    Psl,
    Psb,
    Phb,
}

use SequenceId::*;

impl SequenceId {
    pub const ALL: [SequenceId; 20] = [
        Sf, St, Spa, SpaMod, Sp, Snc, Dsf, Sl, Sb, Z, Psf, Pst, Pspa, PspaMod, Psp, Psnc, Pdsf, Psl,
        Psb, Phb,
    ];

    /// The nine counting sequences that have a closed-form generating function.
    pub const COUNTING: [SequenceId; 9] = [Sf, St, Spa, SpaMod, Sp, Snc, Dsf, Sl, Sb];

    /// The ten total-parts sequences.
    pub const TOTAL_PARTS: [SequenceId; 10] =
        [Psf, Pst, Pspa, PspaMod, Psp, Psnc, Pdsf, Psl, Psb, Phb];

    pub fn tag(self) -> &'static str {
        match self {
            Sf => "sf",
            St => "st",
            Spa => "spa",
            SpaMod => "spa_mod",
            Sp => "sp",
            Snc => "snc",
            Dsf => "dsf",
            Sl => "sl",
            Sb => "sb",
            Z => "z",
            Psf => "psf",
            Pst => "pst",
            Pspa => "pspa",
            PspaMod => "pspa_mod",
            Psp => "psp",
            Psnc => "psnc",
            Pdsf => "pdsf",
            Psl => "psl",
            Psb => "psb",
            Phb => "phb",
        }
    }

    /// Smallest index at which the sequence is defined.
    pub fn min_index(self) -> u64 {
        match self {
            Sl | Psb | Phb => 1,
            Psl => 2,
            _ => 0,
        }
    }

    fn deps(self) -> &'static [SequenceId] {
        match self {
            Psf => &[Sf],
            Pst => &[St],
            Pspa => &[Spa],
            PspaMod => &[SpaMod],
            Psp => &[Sp],
            Psnc => &[Snc],
            Pdsf => &[Dsf],
            Psl => &[Sl],
            Psb | Phb => &[Sb],
            _ => &[],
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "spa'" | "spa_prime" => Some(SpaMod),
            "pspa'" | "pspa_prime" => Some(PspaMod),
            _ => None,
        };
        alias
            .or_else(|| SequenceId::ALL.into_iter().find(|id| id.tag() == s))
            .ok_or_else(|| Error::Unknown {
                kind: "sequence",
                name: s.to_string(),
            })
    }
}

/// Coefficient arithmetic for the memo tables. All recurrences have
/// non-negative integer coefficients, so addition and scaling suffice.
pub trait Arith: Send + Sync {
    type V: Clone + PartialEq + fmt::Debug + Send + Sync;
    fn from_u64(&self, k: u64) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn scale(&self, a: &Self::V, k: u64) -> Self::V;
}

/// Exact arithmetic over unbounded non-negative integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl Arith for Exact {
    type V = BigUint;
    fn from_u64(&self, k: u64) -> BigUint {
        BigUint::from(k)
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn scale(&self, a: &BigUint, k: u64) -> BigUint {
        a * k
    }
}

/// Residues modulo `m`.
#[derive(Clone, Copy, Debug)]
pub struct Modular {
    m: u64,
}

impl Modular {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modular { m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }
}

impl Arith for Modular {
    type V = u64;
    fn from_u64(&self, k: u64) -> u64 {
        k % self.m
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.m as u128) as u64
    }
    fn scale(&self, a: &u64, k: u64) -> u64 {
        ((*a as u128 * (k % self.m) as u128) % self.m as u128) as u64
    }
}

/// Lazily extended dense memo of every sequence under one arithmetic.
///
/// Each sequence grows under the write lock, so a reader sees either a
/// complete entry or none; entries below `min_index` hold a zero placeholder.
pub struct SequenceTable<A: Arith> {
    arith: A,
    memo: RwLock<Vec<Vec<A::V>>>,
}

impl<A: Arith> SequenceTable<A> {
    pub fn new(arith: A) -> Self {
        SequenceTable {
            arith,
            memo: RwLock::new(vec![Vec::new(); SequenceId::ALL.len()]),
        }
    }

    pub fn arith(&self) -> &A {
        &self.arith
    }

    /// The value of `id` at `n`.
    pub fn value(&self, id: SequenceId, n: u64) -> Result<A::V> {
        check_domain(id, n)?;
        let i = usize::try_from(n).expect("index fits in memory");
        {
            let memo = self.memo.read().expect("memo lock");
            if let Some(v) = memo[id.index()].get(i) {
                return Ok(v.clone());
            }
        }
        let mut memo = self.memo.write().expect("memo lock");
        self.extend(&mut memo, id, i);
        Ok(memo[id.index()][i].clone())
    }

    /// Values for `lo..=hi`.
    pub fn range(&self, id: SequenceId, lo: u64, hi: u64) -> Result<Vec<A::V>> {
        check_domain(id, lo)?;
        if hi < lo {
            return Ok(Vec::new());
        }
        self.value(id, hi)?;
        let memo = self.memo.read().expect("memo lock");
        Ok(memo[id.index()][lo as usize..=hi as usize].to_vec())
    }

    /// Overwrites a memo entry. Values computed afterwards build on the
    /// altered entry; this exists so verification harnesses can be tested
    /// against a deliberately wrong table.
    pub fn corrupt(&self, id: SequenceId, n: u64, value: A::V) -> Result<()> {
        self.value(id, n)?;
        let mut memo = self.memo.write().expect("memo lock");
        memo[id.index()][n as usize] = value;
        Ok(())
    }

    fn extend(&self, memo: &mut [Vec<A::V>], id: SequenceId, upto: usize) {
        if memo[id.index()].len() > upto {
            return;
        }
        for &d in id.deps() {
            self.extend(memo, d, upto);
        }
        let mut own = std::mem::take(&mut memo[id.index()]);
        own.reserve(upto + 1 - own.len());
        while own.len() <= upto {
            let v = self.step(id, own.len(), &own, memo);
            own.push(v);
        }
        memo[id.index()] = own;
    }

    // One recurrence step: `f` holds indices below `n`, `t` the dependencies.
    fn step(&self, id: SequenceId, n: usize, f: &[A::V], t: &[Vec<A::V>]) -> A::V {
        let a = &self.arith;
        let c = |k: u64| a.from_u64(k);
        let sum = |xs: &[&A::V]| xs.iter().fold(c(0), |acc, x| a.add(&acc, x));
        let dep = |d: SequenceId, i: usize| &t[d.index()][i];
        // Generic self-similar rule with initial values and odd coefficients.
        let generic = |a0: u64, a1: u64, c1: u64, c2: u64, c3: u64| match n {
            0 => c(a0),
            1 => c(a1),
            _ if n % 2 == 0 => f[n / 2].clone(),
            _ => sum(&[
                &a.scale(&f[n - 1], c1),
                &a.scale(&f[n - 2], c2),
                &a.scale(&f[n - 3], c3),
            ]),
        };
        let m = n / 2;
        let odd = n % 2 == 1;
        match id {
            Sf => generic(1, 1, 1, 1, 0),
            St => generic(0, 1, 1, 1, 1),
            Spa => generic(1, 0, 0, 1, 1),
            SpaMod => generic(0, 1, 0, 1, 1),
            Sp => generic(0, 1, 2, 1, 0),
            Snc => generic(1, 1, 1, 0, 1),
            Dsf => match n {
                0..=2 => c(0),
                3 => c(1),
                _ if odd => sum(&[&f[n - 1], &f[n - 2]]),
                _ => f[m].clone(),
            },
            Sl => match n {
                0 => c(0),
                1 => c(2),
                2 => c(1),
                _ if odd => sum(&[&f[n - 1], &f[n - 2]]),
                _ => f[m].clone(),
            },
            Sb => match n {
                0 => c(0),
                1 => c(1),
                _ if odd => sum(&[&f[m + 1], &f[m]]),
                _ => f[m].clone(),
            },
            Z => match n % 4 {
                0 => c(0),
                2 => c(1),
                _ => f[(n - 1) / 2].clone(),
            },
            Psf => match n {
                0 => c(0),
                1 => c(1),
                _ if odd => sum(&[&f[n - 1], dep(Sf, n - 1), &f[n - 2]]),
                _ => f[m].clone(),
            },
            Pst => match n {
                0 => c(0),
                1 | 2 => c(1),
                3 => c(3),
                _ if odd => sum(&[
                    &f[n - 1],
                    dep(St, n - 1),
                    &f[n - 2],
                    &f[n - 3],
                    &a.scale(dep(St, n - 3), 3),
                ]),
                _ => f[m].clone(),
            },
            Pspa | PspaMod => {
                let (base, init) = if id == Pspa { (Spa, [0, 0, 0, 1]) } else { (SpaMod, [0, 1, 1, 1]) };
                match n {
                    0..=3 => c(init[n]),
                    _ if odd => sum(&[&f[n - 2], &f[n - 3], &a.scale(dep(base, n - 3), 3)]),
                    _ => f[m].clone(),
                }
            }
            Psp => match n {
                0 => c(0),
                1 | 2 => c(1),
                _ if odd => sum(&[
                    dep(Sp, n - 1),
                    &a.scale(&f[n - 1], 2),
                    &a.scale(dep(Sp, n - 2), 2),
                    &f[n - 2],
                ]),
                _ => f[m].clone(),
            },
            Psnc => match n {
                0 => c(0),
                1 => c(1),
                _ if odd => sum(&[&f[n - 1], &f[n - 3], dep(Snc, n)]),
                _ => f[m].clone(),
            },
            Pdsf => match n {
                0..=2 => c(0),
                3 => c(2),
                _ if odd => sum(&[dep(Dsf, n - 1), &f[n - 1], &f[n - 2]]),
                _ => f[m].clone(),
            },
            Psl => match n {
                0 | 1 => c(0),
                2 => c(1),
                3 => c(6),
                _ if odd => sum(&[
                    dep(Sl, n - 1),
                    &f[n - 1],
                    &f[n - 2],
                    &a.scale(dep(Sl, n - 2), 2),
                ]),
                _ => f[m].clone(),
            },
            Psb => match n {
                0 => c(0),
                1 | 2 => c(1),
                3 => c(3),
                _ if odd => sum(&[&f[m], dep(Sb, m), &f[m + 1]]),
                _ => f[m].clone(),
            },
            Phb => match n {
                0 => c(0),
                1 => c(1),
                2 => c(3),
                _ if odd => sum(&[&f[m], dep(Sb, m + 1)]),
                _ => sum(&[&f[m], &f[m - 1], &a.scale(dep(Sb, m), 2)]),
            },
        }
    }
}

fn check_domain(id: SequenceId, n: u64) -> Result<()> {
    if n < id.min_index() {
        return Err(Error::OutOfDomain {
            what: id.tag().to_string(),
            n,
            min: id.min_index(),
        });
    }
    Ok(())
}

/// The process-wide exact table.
pub fn exact_table() -> &'static SequenceTable<Exact> {
    static TABLE: OnceLock<SequenceTable<Exact>> = OnceLock::new();
    TABLE.get_or_init(|| SequenceTable::new(Exact))
}

/// The process-wide table of residues modulo `m`.
pub fn modular_table(m: u64) -> Result<Arc<SequenceTable<Modular>>> {
    static TABLES: OnceLock<Mutex<HashMap<u64, Arc<SequenceTable<Modular>>>>> = OnceLock::new();
    let arith = Modular::new(m)?;
    let mut tables = TABLES.get_or_init(Default::default).lock().expect("table registry");
    Ok(tables
        .entry(m)
        .or_insert_with(|| Arc::new(SequenceTable::new(arith)))
        .clone())
}

/// Exact value of sequence `id` at `n`.
pub fn seq_value(id: SequenceId, n: u64) -> Result<BigUint> {
    exact_table().value(id, n)
}

/// `seq_value(id, n) mod m`, computed without big integers.
pub fn seq_value_mod(id: SequenceId, n: u64, m: u64) -> Result<u64> {
    modular_table(m)?.value(id, n)
}

/// Exact values for `lo..=hi`.
pub fn seq_range(id: SequenceId, lo: u64, hi: u64) -> Result<Vec<BigUint>> {
    exact_table().range(id, lo, hi)
}

/// Writes `lo..=hi` as b-file lines `n value`.
pub fn write_bfile<W: Write + ?Sized>(id: SequenceId, lo: u64, hi: u64, out: &mut W) -> io::Result<()> {
    let values = seq_range(id, lo, hi).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
    for (n, v) in (lo..).zip(values) {
        writeln!(out, "{n} {v}")?;
    }
    Ok(())
}

/// `f(0)=a0, f(1)=a1, f(2n)=f(n), f(2n+1)=c1·f(2n)+c2·f(2n−1)+c3·f(2n−2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SelfSimilarSpec {
    pub a0: i64,
    pub a1: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub min_index: u64,
}

impl SelfSimilarSpec {
    pub const fn new(a0: i64, a1: i64, c1: i64, c2: i64, c3: i64) -> Self {
        SelfSimilarSpec { a0, a1, c1, c2, c3, min_index: 0 }
    }

    /// The sequences whose definition is an instance of the generic recurrence.
    pub const BUILT_IN: [SequenceId; 6] = [Sf, St, Spa, SpaMod, Sp, Snc];

    /// The spec of a built-in sequence, if it fits the generic recurrence.
    pub fn for_id(id: SequenceId) -> Option<Self> {
        Some(match id {
            Sf => Self::new(1, 1, 1, 1, 0),
            St => Self::new(0, 1, 1, 1, 1),
            Spa => Self::new(1, 0, 0, 1, 1),
            SpaMod => Self::new(0, 1, 0, 1, 1),
            Sp => Self::new(0, 1, 2, 1, 0),
            Snc => Self::new(1, 1, 1, 0, 1),
            _ => return None,
        })
    }
}

/// Values `f(0..=n)` of a generic spec, evaluated directly over signed big integers.
pub fn from_spec_range(spec: &SelfSimilarSpec, n: u64) -> Vec<BigInt> {
    let n = n as usize;
    let mut f: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let v = match k {
            0 => BigInt::from(spec.a0),
            1 => BigInt::from(spec.a1),
            _ if k % 2 == 0 => f[k / 2].clone(),
            _ => {
                let mut v = BigInt::zero();
                for (c, j) in [(spec.c1, k - 1), (spec.c2, k - 2), (spec.c3, k - 3)] {
                    v += &f[j] * c;
                }
                v
            }
        };
        f.push(v);
    }
    f
}

/// `f(n)` for a generic spec.
pub fn from_spec(spec: &SelfSimilarSpec, n: u64) -> BigInt {
    from_spec_range(spec, n).pop().expect("non-empty")
}
