//! Multivariate power series truncated to a box of exponents.
//!
//! A `TruncSeries<C>` stores coefficients for every multi-exponent bounded
//! componentwise by `bound`; everything outside the box is discarded by all
//! operations.  The formal logarithm and exponential are finite sums here
//! because the argument's lowest total degree grows with each power, so the
//! alternating series `log(1 + t) = sum (-1)^(m+1) t^m / m` terminates after
//! at most `|bound|` steps.
//!
//! The coefficient ring is generic: the quiver series use rational functions
//! in `q`, the graph-counting series use multivariate edge polynomials.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::multi::{add, le};
use crate::ring::{rat, Coeff};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    bound: Vec<u32>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(bound: Vec<u32>) -> Self {
        TruncSeries {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: Vec<u32>) -> Self {
        let mut s = Self::zero(bound);
        let origin = vec![0; s.bound.len()];
        s.terms.insert(origin, C::one());
        s
    }

    /// Builds a series by evaluating `f` at every exponent in the box.
    pub fn from_fn(bound: Vec<u32>, mut f: impl FnMut(&[u32]) -> C) -> Self {
        let mut s = Self::zero(bound.clone());
        for e in crate::multi::box_points(&bound) {
            let c = f(&e);
            if !c.is_zero() {
                s.terms.insert(e, c);
            }
        }
        s
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    /// Coefficient at `e`; zero when absent or outside the box.
    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn set_coeff(&mut self, e: Vec<u32>, c: C) {
        assert!(le(&e, &self.bound), "exponent outside the truncation box");
        if c.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        let mut out = TruncSeries::zero(self.bound.clone());
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(e.clone(), d);
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        self.map(|c| c.scale(factor))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.bound, other.bound, "mismatched truncation boxes");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let cur = out.coeff(e);
            out.set_coeff(e.clone(), cur + c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.bound, other.bound, "mismatched truncation boxes");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let cur = out.coeff(e);
            out.set_coeff(e.clone(), cur - c.clone());
        }
        out
    }

    /// Product truncated to the box.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.bound, other.bound, "mismatched truncation boxes");
        let mut out = Self::zero(self.bound.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = add(e1, e2);
                if !le(&e, &self.bound) {
                    continue;
                }
                let cur = out.coeff(&e);
                out.set_coeff(e, cur + c1.clone() * c2.clone());
            }
        }
        out
    }

    fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.bound.len()])
    }

    /// Removes the constant term.
    fn augmentation(&self) -> Self {
        let mut t = self.clone();
        t.terms.remove(&vec![0; self.bound.len()]);
        t
    }

    /// Formal logarithm; the constant term must be exactly one.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::NonUnitConstantTerm {
                found: format!("{:?}", self.constant_term()),
            });
        }
        let t = self.augmentation();
        let mut acc = Self::zero(self.bound.clone());
        let mut power = t.clone();
        let mut m = 1i64;
        while !power.is_zero() {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&(rat(sign) / rat(m))));
            power = power.mul(&t);
            m += 1;
        }
        Ok(acc)
    }

    /// Formal exponential; the constant term must be zero.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm {
                found: format!("{:?}", self.constant_term()),
            });
        }
        let mut acc = Self::one(self.bound.clone());
        let mut power = self.clone();
        let mut m = 1i64;
        let mut mfact = rat(1);
        while !power.is_zero() {
            acc = acc.add(&power.scale(&(rat(1) / &mfact)));
            power = power.mul(self);
            m += 1;
            mfact *= rat(m);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{factorial, rat};
    use num_rational::BigRational;

    fn single(bound: u32) -> Vec<u32> {
        vec![bound]
    }

    #[test]
    fn log_of_one_plus_t() {
        let mut s = TruncSeries::<BigRational>::one(single(2));
        s.set_coeff(vec![1], rat(1));
        let l = s.log().unwrap();
        assert_eq!(l.coeff(&[0]), rat(0));
        assert_eq!(l.coeff(&[1]), rat(1));
        assert_eq!(l.coeff(&[2]), rat(-1) / rat(2));
    }

    #[test]
    fn log_of_one_is_zero() {
        let s = TruncSeries::<BigRational>::one(single(3));
        assert!(s.log().unwrap().is_zero());
    }

    #[test]
    fn log_of_exponential_series_is_t() {
        // sum_l T^l / l! up to l = 3
        let s = TruncSeries::from_fn(single(3), |e| {
            rat(1) / BigRational::from_integer(factorial(e[0] as u64))
        });
        let l = s.log().unwrap();
        assert_eq!(l.coeff(&[1]), rat(1));
        assert_eq!(l.coeff(&[2]), rat(0));
        assert_eq!(l.coeff(&[3]), rat(0));
    }

    #[test]
    fn log_requires_unit_constant_term() {
        let s = TruncSeries::<BigRational>::zero(single(2));
        assert!(matches!(
            s.log(),
            Err(Error::NonUnitConstantTerm { .. })
        ));
    }

    #[test]
    fn exp_inverts_log() {
        let mut s = TruncSeries::<BigRational>::one(vec![2, 2]);
        s.set_coeff(vec![1, 0], rat(3));
        s.set_coeff(vec![0, 1], rat(-2));
        s.set_coeff(vec![1, 1], rat(5) / rat(7));
        let back = s.log().unwrap().exp().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn multiplication_truncates_to_box() {
        let mut a = TruncSeries::<BigRational>::one(single(2));
        a.set_coeff(vec![2], rat(1));
        let sq = a.mul(&a);
        // (1 + T^2)^2 loses the T^4 term
        assert_eq!(sq.coeff(&[2]), rat(2));
        assert_eq!(sq.coeff(&[0]), rat(1));
        assert_eq!(sq.terms().count(), 2);
    }
}
