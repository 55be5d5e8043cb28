//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so the number of
//! variables is contextual rather than a field: this lets `MPoly` implement
//! the nullary `Zero`/`One` constructors of the coefficient-ring trait and
//! serve as the scalar domain of a truncated series.  Callers that print or
//! export a polynomial supply the intended arity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::Coeff;

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        MPoly { terms }
    }

    /// The variable with index `i` (zero-based).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MPoly { terms }
    }

    /// Coefficient at the given exponent vector (any padding accepted).
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Smallest arity that covers every stored exponent.
    pub fn arity(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Terms with exponents padded to `n` entries, sorted by exponent.
    pub fn terms_padded(&self, n: usize) -> Vec<(Vec<u32>, BigRational)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                assert!(e.len() <= n, "term exceeds requested arity");
                e.resize(n, 0);
                (e, c.clone())
            })
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of the terms of exact total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of total degree above `d`.
    pub fn truncate_total_degree(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Evaluates with `values[i]` substituted for variable `i`.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Human-readable rendering with the given variable names; terms sorted
    /// by descending total degree, then exponent order.
    pub fn render(&self, vars: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut entries: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        entries.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(a.0.cmp(b.0))
        });
        let mut out = String::new();
        for (e, c) in entries {
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
            let mut factors: Vec<String> = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    factors.push(vars[i].to_string());
                } else if exp > 1 {
                    factors.push(format!("{}^{}", vars[i], exp));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&[]).is_one()
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.insert(e, c);
        }
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: Self) -> Self {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let mut e = vec![0u32; n];
                for (i, slot) in e.iter_mut().enumerate() {
                    *slot = e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0);
                }
                out.insert(trim(e), c1 * c2);
            }
        }
        out
    }
}

impl Coeff for MPoly {
    fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly{:?}", self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = MPoly::monomial(vec![1, 0, 0], rat(2));
        let b = MPoly::monomial(vec![1], rat(2));
        assert_eq!(a, b);
        assert_eq!(a.coeff(&[1, 0]), rat(2));
    }

    #[test]
    fn product_of_binomials() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let p = (MPoly::one() + x) * (MPoly::one() + y);
        assert_eq!(p.coeff(&[0, 0]), rat(1));
        assert_eq!(p.coeff(&[1, 1]), rat(1));
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MPoly::var(0);
        let d = x.clone() - x;
        assert!(d.is_zero());
    }

    #[test]
    fn pow_and_degree() {
        let p = (MPoly::one() + MPoly::var(0)).pow(3);
        assert_eq!(p.coeff(&[2]), rat(3));
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(p.truncate_total_degree(1).num_terms(), 2);
        assert_eq!(p.homogeneous_part(3), MPoly::monomial(vec![3], rat(1)));
    }

    #[test]
    fn evaluation() {
        let p = MPoly::var(0) * MPoly::var(1) + MPoly::constant(rat(1));
        assert_eq!(p.eval(&[rat(2), rat(3)]), rat(7));
    }

    #[test]
    fn rendering_orders_by_degree() {
        let p = MPoly::var(0).pow(2).scale(&rat(2)) + MPoly::var(1) - MPoly::one();
        assert_eq!(p.render(&["g11", "g12"]), "2*g11^2 + g12 - 1");
    }
}
