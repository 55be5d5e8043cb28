//! Rational functions in `q`, canonical and factored forms.
//!
//! [`RatFunc`] is the canonical quotient of two polynomials: numerator and
//! denominator are coprime with integer coefficients, jointly primitive, and
//! the denominator has a positive leading coefficient.  Equality of values is
//! therefore equality of representations.
//!
//! [`QFrac`] is an internal representation whose denominator is kept as a
//! factored product `q^a * prod_j (q^j - 1)^(m_j)`.  Every denominator
//! produced by the partition sums of `hua` has this shape, and keeping it
//! factored makes sums and products cheap: common denominators come from
//! multiplicity maxima and no polynomial gcd is ever taken.  Conversion to
//! `RatFunc` cancels by trial division with cyclotomic factors, which are
//! irreducible, so the result is fully reduced.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{divisors, Coeff};
use crate::QPoly;

/// The `d`-th cyclotomic polynomial, from `q^d - 1` by dividing out the
/// proper divisors' factors.  Memoized: the same small factors recur in
/// every denominator cancellation.
pub fn cyclotomic(d: u64) -> QPoly {
    static CACHE: Mutex<BTreeMap<u64, Poly<BigRational>>> = Mutex::new(BTreeMap::new());
    assert!(d > 0);
    if let Some(p) = CACHE.lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut rest = QPoly::one();
    for e in divisors(d) {
        if e < d {
            rest = rest.mul_ref(&cyclotomic(e));
        }
    }
    let full = QPoly::monomial(d as usize, BigRational::one()) - QPoly::one();
    let p = full.exact_div(&rest).expect("cyclotomic division is exact");
    CACHE.lock().unwrap().insert(d, p.clone());
    p
}

/// `q^d - 1` expanded.
pub fn q_pow_minus_one(d: u64) -> QPoly {
    QPoly::monomial(d as usize, BigRational::one()) - QPoly::one()
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Canonical form of `num / den`.  Fails only on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: QPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).unwrap();
        let den = den.exact_div(&g).unwrap();
        Ok(Self::scale_coprime(num, den))
    }

    /// Canonicalizes a pair already known to be coprime: clears rational
    /// content jointly and fixes the denominator's sign.
    fn scale_coprime(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num,
                den: QPoly::one(),
            };
        }
        let ratio = num.content() / den.content();
        // gamma * den is the primitive integer part of den times ratio's
        // denominator; gamma * num picks up ratio's numerator.
        let gamma = BigRational::from_integer(ratio.denom().clone()) / den.content();
        let mut num = num.scale(&gamma);
        let mut den = den.scale(&gamma);
        if den.leading().map_or(false, |c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self::scale_coprime(p, QPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(QPoly::from_ints(&[n]))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    /// The polynomial `self` represents, if the denominator is constant.
    pub fn to_polynomial(&self) -> Option<QPoly> {
        (self.den.degree() == Some(0)).then(|| {
            let inv = self.den.coeff(0).recip();
            self.num.scale(&inv)
        })
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::scale_coprime(self.den.clone(), self.num.clone()))
    }

    /// Value at `x`, or `None` on a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Derivative by the quotient rule, renormalized.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul_ref(&self.den) - self.den.derivative().mul_ref(&self.num);
        let d = self.den.mul_ref(&self.den);
        Self::new(n, d).expect("nonzero denominator squared")
    }

    /// Substitutes `q -> q^d` in numerator and denominator, renormalizing.
    pub fn substitute_power(&self, d: usize) -> Self {
        Self::new(self.num.substitute_power(d), self.den.substitute_power(d))
            .expect("denominator stays nonzero under power substitution")
    }

    /// Exact value of `(q-1)^e * self` at `q = 1`, cancelling the pole.
    /// Fails when a pole of positive order remains.
    pub fn limit_at_one(&self, e: u64) -> Result<BigRational> {
        if self.num.is_zero() {
            return Ok(BigRational::zero());
        }
        let qm1 = QPoly::from_ints(&[-1, 1]);
        let mut den = self.den.clone();
        let mut order = 0u64;
        while let Some(d) = den.exact_div(&qm1) {
            den = d;
            order += 1;
        }
        if order > e {
            return Err(Error::PoleAtOne { order: order - e });
        }
        if order < e {
            // the surplus (q-1) factors vanish at 1
            return Ok(BigRational::zero());
        }
        Ok(self.num.eval_at_one() / den.eval_at_one())
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> Self {
        let num = self.num.mul_ref(&rhs.den) + rhs.num.mul_ref(&self.den);
        let den = self.den.mul_ref(&rhs.den);
        RatFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> Self {
        let num = self.num.mul_ref(&rhs.num);
        let den = self.den.mul_ref(&rhs.den);
        RatFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Coeff for RatFunc {
    fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::scale_coprime(self.num.scale(factor), self.den.clone())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num.render("q"));
        }
        write!(f, "({}) / ({})", self.num.render("q"), self.den.render("q"))
    }
}

/// Fraction `num / (q^qpow * prod_j (q^j - 1)^(geo_j))`.
///
/// Not canonical: the same value has many representations.  Equality
/// subtracts and tests for zero.
#[derive(Clone, Debug)]
pub struct QFrac {
    num: QPoly,
    qpow: u64,
    geo: BTreeMap<u64, u64>,
}

impl QFrac {
    pub fn from_poly(num: QPoly) -> Self {
        QFrac {
            num,
            qpow: 0,
            geo: BTreeMap::new(),
        }
    }

    /// `num * q^(-qpow) / prod (q^j - 1)^(m_j)` for `(j, m_j)` in `factors`.
    pub fn from_parts(num: QPoly, qpow: u64, factors: &[(u64, u64)]) -> Self {
        let mut geo = BTreeMap::new();
        for &(j, m) in factors {
            if m > 0 {
                *geo.entry(j).or_insert(0) += m;
            }
        }
        QFrac { num, qpow, geo }
    }

    /// Multiplies a numerator by the denominator factors `self` has in
    /// excess of `(qpow, geo)`; used to bring summands onto a common
    /// denominator.
    fn complement_into(num: &QPoly, qpow: u64, geo: &BTreeMap<u64, u64>, target_qpow: u64, target_geo: &BTreeMap<u64, u64>) -> QPoly {
        let mut out = num.shift_up((target_qpow - qpow) as usize);
        for (&j, &m_target) in target_geo {
            let have = geo.get(&j).copied().unwrap_or(0);
            let factor = q_pow_minus_one(j);
            for _ in have..m_target {
                out = out.mul_ref(&factor);
            }
        }
        out
    }

    pub fn substitute_power(&self, d: u64) -> Self {
        QFrac {
            num: self.num.substitute_power(d as usize),
            qpow: self.qpow * d,
            geo: self.geo.iter().map(|(&j, &m)| (j * d, m)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        QFrac {
            num: self.num.mul_ref(p),
            qpow: self.qpow,
            geo: self.geo.clone(),
        }
    }

    /// Fully reduced canonical form.  The denominator's irreducible factors
    /// are `q` and cyclotomics, so trial division cancels everything the
    /// numerator shares with it.
    pub fn to_ratfunc(&self) -> RatFunc {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        let mut num = self.num.clone();
        let mut qpow = self.qpow;
        let v = num.valuation().unwrap() as u64;
        let cancel = v.min(qpow);
        num = num.shift_down(cancel as usize);
        qpow -= cancel;

        let mut cyclo: BTreeMap<u64, u64> = BTreeMap::new();
        for (&j, &m) in &self.geo {
            for e in divisors(j) {
                *cyclo.entry(e).or_insert(0) += m;
            }
        }
        for (&e, mult) in cyclo.iter_mut() {
            let phi = cyclotomic(e);
            while *mult > 0 {
                match num.exact_div(&phi) {
                    Some(quot) => {
                        num = quot;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
        }
        let mut den = QPoly::monomial(qpow as usize, BigRational::one());
        for (&e, &mult) in &cyclo {
            let phi = cyclotomic(e);
            for _ in 0..mult {
                den = den.mul_ref(&phi);
            }
        }
        RatFunc::new(num, den).expect("factored denominator is nonzero")
    }
}

impl Zero for QFrac {
    fn zero() -> Self {
        QFrac::from_poly(QPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QFrac {
    fn one() -> Self {
        QFrac::from_poly(QPoly::one())
    }
}

impl PartialEq for QFrac {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl Add for QFrac {
    type Output = QFrac;
    fn add(self, rhs: Self) -> Self {
        let qpow = self.qpow.max(rhs.qpow);
        let mut geo = self.geo.clone();
        for (&j, &m) in &rhs.geo {
            let e = geo.entry(j).or_insert(0);
            *e = (*e).max(m);
        }
        let a = Self::complement_into(&self.num, self.qpow, &self.geo, qpow, &geo);
        let b = Self::complement_into(&rhs.num, rhs.qpow, &rhs.geo, qpow, &geo);
        QFrac {
            num: a + b,
            qpow,
            geo,
        }
    }
}

impl Sub for QFrac {
    type Output = QFrac;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QFrac {
    type Output = QFrac;
    fn neg(self) -> Self {
        QFrac {
            num: -self.num,
            qpow: self.qpow,
            geo: self.geo,
        }
    }
}

impl Mul for QFrac {
    type Output = QFrac;
    fn mul(self, rhs: Self) -> Self {
        let mut geo = self.geo;
        for (j, m) in rhs.geo {
            *geo.entry(j).or_insert(0) += m;
        }
        QFrac {
            num: self.num.mul_ref(&rhs.num),
            qpow: self.qpow + rhs.qpow,
            geo,
        }
    }
}

impl Coeff for QFrac {
    fn scale(&self, factor: &BigRational) -> Self {
        QFrac {
            num: self.num.scale(factor),
            qpow: self.qpow,
            geo: self.geo.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_ints(&[1, -1, 1]));
        // product over divisors reassembles q^12 - 1
        let mut prod = QPoly::one();
        for d in divisors(12) {
            prod = prod.mul_ref(&cyclotomic(d));
        }
        assert_eq!(prod, q_pow_minus_one(12));
    }

    #[test]
    fn normalization_cancels_common_factors() {
        let f = RatFunc::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &QPoly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &QPoly::one());
    }

    #[test]
    fn normalization_of_zero() {
        let f = RatFunc::new(QPoly::zero(), QPoly::power(3)).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.den(), &QPoly::one());
    }

    #[test]
    fn normalization_scales_content_jointly() {
        let f = RatFunc::new(QPoly::from_ints(&[2, 2]), QPoly::from_ints(&[4])).unwrap();
        assert_eq!(f.num(), &QPoly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &QPoly::from_ints(&[2]));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RatFunc::new(QPoly::one(), QPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_sign_is_positive() {
        let f = RatFunc::new(QPoly::from_ints(&[1]), QPoly::from_ints(&[1, -1])).unwrap();
        assert_eq!(f.den(), &QPoly::from_ints(&[-1, 1]));
        assert_eq!(f.num(), &QPoly::from_ints(&[-1]));
    }

    #[test]
    fn equality_is_representational() {
        let a = RatFunc::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        let b = RatFunc::new(QPoly::from_ints(&[1, 1]), QPoly::one()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn limit_cancels_simple_pole() {
        // 1/(q-1) with one compensating factor has limit 1
        let f = RatFunc::new(QPoly::one(), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.limit_at_one(1), Ok(rat(1)));
        // without compensation the pole is reported
        assert_eq!(f.limit_at_one(0), Err(Error::PoleAtOne { order: 1 }));
        // extra factors drive the limit to zero
        assert_eq!(f.limit_at_one(2), Ok(rat(0)));
    }

    #[test]
    fn limit_of_regular_function() {
        let f = RatFunc::new(QPoly::power(1), QPoly::one()).unwrap();
        assert_eq!(f.limit_at_one(0), Ok(rat(1)));
        let g = RatFunc::new(QPoly::power(3), QPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(g.limit_at_one(0), Ok(rat(1) / rat(2)));
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = RatFunc::new(QPoly::one(), QPoly::from_ints(&[-1, 1])).unwrap();
        let df = f.derivative();
        assert_eq!(df.num(), &QPoly::from_ints(&[-1]));
        assert_eq!(df.den(), &QPoly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn qfrac_addition_uses_multiplicity_maxima() {
        // 1/(q-1) + 1/(q^2-1) = (q+2)/(q^2-1) after reduction
        let a = QFrac::from_parts(QPoly::one(), 0, &[(1, 1)]);
        let b = QFrac::from_parts(QPoly::one(), 0, &[(2, 1)]);
        let sum = (a + b).to_ratfunc();
        assert_eq!(sum.num(), &QPoly::from_ints(&[2, 1]));
        assert_eq!(sum.den(), &QPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn qfrac_cancellation_is_complete() {
        // (q-1)^2 / ((q-1)(q^2-1)) reduces to 1/(q+1)
        let num = QPoly::from_ints(&[-1, 1]).mul_ref(&QPoly::from_ints(&[-1, 1]));
        let f = QFrac::from_parts(num, 0, &[(1, 1), (2, 1)]);
        let r = f.to_ratfunc();
        assert_eq!(r.num(), &QPoly::one());
        assert_eq!(r.den(), &QPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn qfrac_substitution_scales_factors() {
        let f = QFrac::from_parts(QPoly::power(1), 1, &[(2, 1)]);
        let g = f.substitute_power(3);
        // q^3 / (q^3 (q^6 - 1))
        let r = g.to_ratfunc();
        assert_eq!(r.num(), &QPoly::one());
        assert_eq!(r.den(), &q_pow_minus_one(6));
    }

    #[test]
    fn qfrac_equality_ignores_representation() {
        let a = QFrac::from_parts(QPoly::from_ints(&[-1, 0, 1]), 0, &[(2, 1)]);
        let b = QFrac::from_poly(QPoly::one());
        assert_eq!(a, b);
    }
}
