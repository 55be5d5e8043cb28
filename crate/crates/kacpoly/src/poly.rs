//! Dense univariate polynomials over a generic coefficient ring.
//!
//! `Poly<C>` stores coefficients by ascending exponent with no trailing
//! zeros (the zero polynomial is the empty list).  The crate instantiates it
//! as [`crate::QPoly`] for polynomials in `q` and [`crate::BPoly`] for
//! integer-valued polynomials in an interpolation variable; both use exact
//! rational coefficients.  Division, gcd and evaluation are provided on the
//! rational instantiation only, the generic surface is plain ring arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{falling, Coeff};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C> {
    /// Coefficient of exponent `i` at index `i`; last entry nonzero.
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^e`.
    pub fn monomial(e: usize, c: C) -> Self {
        if c.is_zero() {
            return Poly::new(vec![]);
        }
        let mut coeffs = vec![C::zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of exponent `e` (zero beyond the stored range).
    pub fn coeff(&self, e: usize) -> C {
        self.coeffs.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for zero.
    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Smallest exponent with nonzero coefficient, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact division by `x^k`; panics when the valuation is smaller.
    pub fn shift_down(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        assert!(
            self.valuation().unwrap() >= k,
            "shift_down would truncate low-order terms"
        );
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Substitutes `x -> x^d`, stretching every exponent by `d`.
    pub fn substitute_power(&self, d: usize) -> Self {
        assert!(d > 0, "power substitution needs a positive exponent");
        match self.degree() {
            None => self.clone(),
            Some(deg) => {
                let mut coeffs = vec![C::zero(); deg * d + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[i * d] = c.clone();
                }
                Poly { coeffs }
            }
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(coeffs)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = std::mem::replace(&mut coeffs[i + j], C::zero());
                coeffs[i + j] = t + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn scale(&self, factor: &BigRational) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.scale(factor)).collect())
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&rhs.neg())
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| c.neg()).collect(),
        }
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Operations specific to rational coefficients: the Euclidean structure of
/// `Q[x]` plus evaluation and calculus at `q = 1`.
impl Poly<BigRational> {
    /// Polynomial with the given integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `x^e` with coefficient one.
    pub fn power(e: usize) -> Self {
        Poly::monomial(e, BigRational::one())
    }

    /// `1 + x + ... + x^(m-1)`, the geometric sum with `m` terms.
    pub fn geometric(m: usize) -> Self {
        Poly::new(vec![BigRational::one(); m])
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    /// Value of the `t`-th derivative at `x = 1`, computed exactly as
    /// `sum_e c_e * e (e-1) ... (e-t+1)`.
    pub fn taylor_at_one(&self, t: u64) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            if (e as u64) < t {
                continue;
            }
            acc += c * BigRational::from_integer(falling(e as i64, t));
        }
        acc
    }

    /// Quotient and remainder with `deg r < deg d`.  Panics on zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] / &lead;
            quot[i - dd] = c.clone();
            rem[i] = BigRational::zero();
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                let t = dc * &c;
                rem[i - dd + j] -= t;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient, or `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.into_monic();
        }
        a.into_monic()
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// The positive rational `c` with `self = c * (primitive integer
    /// polynomial)`; zero for the zero polynomial.  The primitive part keeps
    /// the sign of the leading coefficient.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Exponent/coefficient pairs of the nonzero terms, ascending exponent.
    pub fn to_pairs(&self) -> Vec<(u64, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c.clone()))
            .collect()
    }

    pub fn from_pairs(pairs: &[(u64, BigRational)]) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p = p + Poly::monomial(*e as usize, c.clone());
        }
        p
    }

    /// Human-readable rendering with the given variable name, descending
    /// exponents, e.g. `q^5 + q^3` or `2*b^2 - 1/2*b`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = mag.is_one();
            if !unit || e == 0 {
                out.push_str(&mag.to_string());
            }
            if e > 0 {
                if !unit {
                    out.push('*');
                }
                out.push_str(var);
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn q() -> Poly<BigRational> {
        Poly::power(1)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), Some(0));
        let z = Poly::new(vec![rat(0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = Poly::from_ints(&[1, 2, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        let prod = a.mul_ref(&b);
        assert_eq!(prod, Poly::from_ints(&[-1, -1, 1, 1]));
        let (quot, rem) = prod.divrem(&b);
        assert_eq!(quot, a);
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let a = Poly::from_ints(&[-1, 0, 1]); // q^2 - 1
        let b = Poly::from_ints(&[-1, 1]); // q - 1
        assert_eq!(a.gcd(&b), b);
        let c = Poly::from_ints(&[1, 1]); // q + 1
        assert!(b.gcd(&c).is_one());
    }

    #[test]
    fn taylor_at_one_matches_derivatives() {
        // q^5 + q^3: first derivative at 1 is 8, second is 26.
        let p = Poly::from_ints(&[0, 0, 0, 1, 0, 1]);
        assert_eq!(p.taylor_at_one(0), rat(2));
        assert_eq!(p.taylor_at_one(1), rat(8));
        assert_eq!(p.taylor_at_one(1), p.derivative().eval_at_one());
        assert_eq!(p.taylor_at_one(2), p.derivative().derivative().eval_at_one());
        assert_eq!(Poly::power(2).taylor_at_one(3), rat(0));
    }

    #[test]
    fn substitution_stretches_exponents() {
        let p = Poly::from_ints(&[1, 1]); // 1 + q
        assert_eq!(p.substitute_power(3), Poly::from_ints(&[1, 0, 0, 1]));
    }

    #[test]
    fn content_and_integrality() {
        let p = Poly::new(vec![rat(2), rat(4)]);
        assert_eq!(p.content(), rat(2));
        let p = Poly::new(vec![rat(1) / rat(2), rat(3) / rat(4)]);
        assert_eq!(p.content(), rat(1) / rat(4));
        assert!(!p.is_integral());
        assert!(q().is_integral());
    }

    #[test]
    fn rendering() {
        let p = Poly::from_ints(&[0, 0, 0, 1, 0, 1]);
        assert_eq!(p.render("q"), "q^5 + q^3");
        let m = Poly::new(vec![rat(-1), rat(1) / rat(2)]);
        assert_eq!(m.render("b"), "1/2*b - 1");
        assert_eq!(Poly::<BigRational>::zero().render("q"), "0");
    }

    #[test]
    fn pair_round_trip() {
        let p = Poly::from_ints(&[3, 0, -2, 1]);
        assert_eq!(Poly::from_pairs(&p.to_pairs()), p);
    }
}
