//! Truncated power series over the integers, the self-similar functional
//! equation `F(x) = A(x) + B(x)·F(x²)`, and the closed-form generating
//! functions of the counting sequences.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::report::{CheckReport, Failures};
use crate::sequence::{exact_table, SelfSimilarSpec, SequenceId};

/// Coefficients `c_0..=c_N` of a power series cut at order `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    /// `c·x^k`, which is zero when `k` exceeds the order.
    pub fn monomial(c: impl Into<BigInt>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// The series with the given coefficients; its order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::WrongKind("a series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Product truncated at the common order. Zero coefficients of either
    /// operand are skipped, so sparse factors are cheap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let (sparse, dense) = if self.nonzeros() <= other.nonzeros() { (self, other) } else { (other, self) };
        let mut out = Self::zero(n);
        for (i, a) in sparse.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in dense.coeffs[..=n - i].iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    fn nonzeros(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * &c).collect() }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        if k <= self.order() {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=self.order() - k]);
        }
        out
    }

    /// `F(x) ↦ F(x²)`, keeping the order.
    pub fn compose_x_pow2(&self) -> Self {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate().take(self.order() / 2 + 1) {
            out.coeffs[2 * i] = c.clone();
        }
        out
    }

    /// Division by the unit `1 − c·x^k` (`k ≥ 1`): `Q[j] = R[j] + c·Q[j−k]`.
    pub fn div_unit(&self, c: i64, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::WrongKind("only 1 − c·x^k with k ≥ 1 is inverted".into()));
        }
        let mut q = self.coeffs.clone();
        if c != 0 {
            for j in k..q.len() {
                let carry = &q[j - k] * c;
                q[j] += carry;
            }
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// `1 / (1 − c·x^k)` to order `order`.
    pub fn geom_factor(c: i64, k: usize, order: usize) -> Result<Self> {
        Self::one(order).div_unit(c, k)
    }

    // self · (1 + Σ coeff·x^exp / (1 − c·x^k)), in linear time.
    fn times_fraction(&self, numer: &[(i64, usize)], c: i64, k: usize) -> Result<Self> {
        let mut frac = Self::zero(self.order());
        for &(a, e) in numer {
            frac = frac.add(&self.shift(e).scale(a))?;
        }
        self.add(&frac.div_unit(c, k)?)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `A(x) = (a1 − a0·c1)·x / (1 − c2·x²)`.
pub fn series_a(spec: &SelfSimilarSpec, order: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(spec.a1 - spec.a0 * spec.c1, 1, order)
        .div_unit(spec.c2, 2)
        .expect("k = 2")
}

/// `B(x) = 1 + (c1·x + c3·x³) / (1 − c2·x²)`.
pub fn series_b(spec: &SelfSimilarSpec, order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order)
        .times_fraction(&[(spec.c1, 1), (spec.c3, 3)], spec.c2, 2)
        .expect("same order")
}

/// Solves `F(x) = A(x) + B(x)·F(x²)` to order `order` by iterating from the
/// constant `a0`. Each pass doubles the number of correct coefficients, so
/// the loop ends once `2^k > order`; later substitutions only reproduce `a0`.
pub fn solve_functional(spec: &SelfSimilarSpec, order: usize) -> TruncatedSeries {
    let a = series_a(spec, order);
    let (c1, c2, c3) = (spec.c1, spec.c2, spec.c3);
    let mut f = TruncatedSeries::constant(spec.a0, order);
    let mut correct = 1usize;
    while correct <= order {
        let g = f.compose_x_pow2();
        f = a.add(&g.times_fraction(&[(c1, 1), (c3, 3)], c2, 2).expect("same order")).expect("same order");
        correct *= 2;
    }
    f
}

/// `F − A − B·F(x²)` computed with a general product, for checking a solution.
pub fn functional_residual(spec: &SelfSimilarSpec, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = f.order();
    let bf = series_b(spec, n).mul(&f.compose_x_pow2())?;
    f.sub(&series_a(spec, n))?.sub(&bf)
}

// Which piece of a closed form a factor belongs to.
enum Shape {
    /// `∏_r (1 + Σ a·x^{e·2^r} / (1 − c·x^{2^{r+1}}))`.
    Product { numer: &'static [(i64, usize)], c: i64 },
    /// `Σ_i x^{h·2^i}/(1 − x^{2^{i+1}}) · ∏_{r<i} (1 + Σ a·x^{e·2^r}/(1 − x^{2^{r+1}}))`.
    Sum { head: usize, numer: &'static [(i64, usize)] },
}

fn expand(shape: &Shape, order: usize) -> TruncatedSeries {
    let scaled = |numer: &[(i64, usize)], p: usize| -> Vec<(i64, usize)> {
        numer.iter().map(|&(a, e)| (a, e * p)).collect()
    };
    match *shape {
        Shape::Product { numer, c } => {
            let mut f = TruncatedSeries::one(order);
            let mut p = 1;
            while p <= order {
                let k = if c == 0 { 1 } else { 2 * p };
                f = f.times_fraction(&scaled(numer, p), c, k).expect("same order");
                p *= 2;
            }
            f
        }
        Shape::Sum { head, numer } => {
            let mut total = TruncatedSeries::zero(order);
            let mut prefix = TruncatedSeries::one(order);
            let mut p = 1;
            while p <= order {
                let term = prefix.shift(head * p).div_unit(1, 2 * p).expect("k ≥ 2");
                total = total.add(&term).expect("same order");
                prefix = prefix.times_fraction(&scaled(numer, p), 1, 2 * p).expect("same order");
                p *= 2;
            }
            total
        }
    }
}

const ONE_OVER: &[(i64, usize)] = &[(1, 1)];

/// The printed closed-form generating function of a counting sequence,
/// expanded to order `order`. Products run over `2^r ≤ order` and sums over
/// `2^i ≤ order`; every omitted factor is `1 + O(x^{order+1})`.
pub fn closed_form_series(id: SequenceId, order: usize) -> Result<TruncatedSeries> {
    use SequenceId::*;
    let s = match id {
        Sf => expand(&Shape::Product { numer: ONE_OVER, c: 1 }, order),
        St => expand(&Shape::Sum { head: 1, numer: &[(1, 1), (1, 3)] }, order),
        Spa => expand(&Shape::Product { numer: &[(1, 3)], c: 1 }, order),
        SpaMod => expand(&Shape::Sum { head: 1, numer: &[(1, 3)] }, order),
        Sp => expand(&Shape::Sum { head: 1, numer: &[(1, 1), (1, 1)] }, order),
        // c = 0 turns the denominator into 1, leaving 1 + x^p + x^{3p}.
        Snc => expand(&Shape::Product { numer: &[(1, 1), (1, 3)], c: 0 }, order),
        Dsf => expand(&Shape::Sum { head: 3, numer: ONE_OVER }, order),
        Sl => {
            let x_minus_one = TruncatedSeries::monomial(1, 1, order).sub(&TruncatedSeries::one(order))?;
            x_minus_one
                .add(&closed_form_series(Sf, order)?)?
                .add(&closed_form_series(Dsf, order)?)?
        }
        Sb => expand(&Shape::Product { numer: &[(1, 1), (1, 2)], c: 0 }, order).shift(1),
        _ => {
            return Err(Error::WrongKind(format!("{id} has no closed-form generating function")));
        }
    };
    Ok(s)
}

/// First index at which a closed form is compared with its sequence.
pub fn compare_from(id: SequenceId) -> usize {
    id.min_index() as usize
}

/// Compares the closed form, and the functional-equation solution where the
/// sequence has a generic spec, with the recurrence values for `n ≤ order`.
pub fn compare_series_to_sequence(id: SequenceId, order: usize) -> Result<CheckReport> {
    compare_series_with(id, order, |n| exact_table().value(id, n))
}

/// [`compare_series_to_sequence`] against values supplied by `value`.
pub fn compare_series_with<F>(id: SequenceId, order: usize, value: F) -> Result<CheckReport>
where
    F: Fn(u64) -> Result<BigUint>,
{
    let closed = closed_form_series(id, order)?;
    let solved = SelfSimilarSpec::for_id(id).map(|spec| solve_functional(&spec, order));
    let mut fails = Failures::default();
    for n in compare_from(id)..=order {
        let v = BigInt::from(value(n as u64)?);
        if closed.coeffs[n] != v {
            fails.record(n as u64, || format!("closed form gives {} at {n}, sequence {v}", closed.coeffs[n]));
        }
        if let Some(s) = &solved {
            if s.coeffs[n] != v {
                fails.record(n as u64, || format!("functional equation gives {} at {n}, sequence {v}", s.coeffs[n]));
            }
        }
    }
    Ok(fails.into_report(format!("series_{}", id.tag()), order as u64))
}
