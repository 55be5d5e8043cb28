//! Stirling numbers, Gaussian binomials, and the polynomials governing their
//! q-derivatives at q = 1.
//!
//! `[b choose k]_q` is a polynomial in q for each fixed integer b, but its
//! t-th q-derivative at q = 1, viewed as a function of b, is again a
//! polynomial: of degree k + t with leading coefficient
//! `t!/(k+t)! * S(k+t, k)`.  Likewise the m-th derivative at q = 1 of the
//! geometric-sum ratio `(1 + q + ... + q^(b-i)) / (1 + q + ... + q^(i-1))`
//! is a polynomial in b of degree m + 1 with leading coefficient
//! `1/(i(m+1))`.  Both are constructed here by exact interpolation, with the
//! degree and leading coefficient asserted rather than trusted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::interp::interpolate_at;
use crate::ratfunc::RatFunc;
use crate::ring::{factorial, rat};
use crate::{BPoly, QPoly};

/// Stirling number of the second kind: partitions of an l-set into k
/// nonempty blocks.
pub fn stirling2(l: u64, k: u64) -> BigInt {
    if k > l {
        return BigInt::zero();
    }
    // row-by-row recurrence S(l,k) = k S(l-1,k) + S(l-1,k-1)
    let mut row = vec![BigInt::one()];
    for _ in 1..=l {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += v * BigInt::from(j as u64);
            next[j + 1] += v;
        }
        row = next;
    }
    row.into_iter().nth(k as usize).unwrap_or_else(BigInt::zero)
}

/// Gaussian binomial `[b choose k]_q`, zero when `k > b`.
pub fn qbinom(b: u64, k: u64) -> QPoly {
    if k > b {
        return QPoly::zero();
    }
    // product of geometric-sum ratios; every partial product is a polynomial
    let mut p = QPoly::one();
    for j in 1..=k {
        p = p.mul_ref(&QPoly::geometric((b - k + j) as usize));
        p = p
            .exact_div(&QPoly::geometric(j as usize))
            .expect("Gaussian binomial partial products divide exactly");
    }
    p
}

/// The polynomial `P_{k,t}` with `P_{k,t}(b)` equal to the t-th q-derivative
/// of `[b choose k]_q` at q = 1, for every integer b >= 0.
///
/// Degree k + t, leading coefficient `t!/(k+t)! * S(k+t,k)`; for k = 0 and
/// t >= 1 the polynomial is identically zero and that coefficient vanishes.
pub fn qbinom_derivative_poly(k: u64, t: u64) -> BPoly {
    let deg = (k + t) as usize;
    let values: Vec<BigRational> = (0..=deg as u64)
        .map(|b| qbinom(b, k).taylor_at_one(t))
        .collect();
    let p = interpolate_at(0, &values);
    let lead = BigRational::new(
        factorial(t) * stirling2(k + t, k),
        factorial(k + t),
    );
    assert_eq!(p.coeff(deg), lead, "leading coefficient law for k={k} t={t}");
    p
}

/// The polynomial `p_{i,m}` with `p_{i,m}(b)` equal to the m-th q-derivative
/// at q = 1 of `(sum_{j<=b-i} q^j) / (sum_{j<i} q^j)`, for integers
/// b >= i - 1.  Degree m + 1, leading coefficient `1/(i(m+1))`, and
/// `p_{i,m}(i-1) = 0` since the numerator is empty there.
pub fn ratio_derivative_poly(i: u64, m: u64) -> BPoly {
    assert!(i >= 1, "ratio index must be positive");
    let values: Vec<BigRational> = (i - 1..=i + m)
        .map(|b| {
            let mut r = RatFunc::new(
                QPoly::geometric((b + 1 - i) as usize),
                QPoly::geometric(i as usize),
            )
            .expect("geometric sums are nonzero");
            for _ in 0..m {
                r = r.derivative();
            }
            r.eval(&rat(1)).expect("denominator does not vanish at 1")
        })
        .collect();
    let p = interpolate_at(i as i64 - 1, &values);
    assert_eq!(p.degree(), Some(m as usize + 1), "degree law for i={i} m={m}");
    let lead = rat(1) / rat((i * (m + 1)) as i64);
    assert_eq!(p.leading().unwrap(), &lead, "leading law for i={i} m={m}");
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multi::compositions;
    use crate::ring::int;

    #[test]
    fn stirling_small_values() {
        // the seven 2-block partitions of a 4-set, counted by hand
        assert_eq!(stirling2(4, 2), int(7));
        for l in 1..=6 {
            assert_eq!(stirling2(l, l), int(1));
            assert_eq!(stirling2(l, 0), int(0));
        }
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(3, 5), int(0));
    }

    #[test]
    fn stirling_column_generating_function() {
        // sum_l S(l,k) x^l / l! agrees with (e^x - 1)^k / k! through x^10
        let trunc = 11usize;
        for k in 0..=5u64 {
            // coefficients of (e^x - 1)^k, built by repeated convolution
            let base: Vec<BigRational> = (0..trunc)
                .map(|l| {
                    if l == 0 {
                        BigRational::zero()
                    } else {
                        rat(1) / BigRational::from_integer(factorial(l as u64))
                    }
                })
                .collect();
            let mut pow = vec![BigRational::zero(); trunc];
            pow[0] = rat(1);
            for _ in 0..k {
                let mut next = vec![BigRational::zero(); trunc];
                for a in 0..trunc {
                    if pow[a].is_zero() {
                        continue;
                    }
                    for b in 0..trunc - a {
                        let prod = pow[a].clone() * base[b].clone();
                        next[a + b] = next[a + b].clone() + prod;
                    }
                }
                pow = next;
            }
            let kfact = BigRational::from_integer(factorial(k));
            for (l, c) in pow.iter().enumerate() {
                let egf = c / kfact.clone();
                let direct = BigRational::new(stirling2(l as u64, k), factorial(l as u64));
                assert_eq!(egf, direct, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn qbinom_base_cases() {
        assert_eq!(qbinom(2, 1), QPoly::from_ints(&[1, 1]));
        assert_eq!(qbinom(5, 0), QPoly::one());
        assert_eq!(qbinom(2, 5), QPoly::zero());
        assert_eq!(qbinom(4, 2), QPoly::from_ints(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn qbinom_matches_pascal_recurrence() {
        // independent construction: [b,k] = [b-1,k-1] + q^k [b-1,k]
        let cap = 8usize;
        let mut table = vec![vec![QPoly::zero(); cap + 1]; cap + 1];
        table[0][0] = QPoly::one();
        for b in 1..=cap {
            table[b][0] = QPoly::one();
            for k in 1..=cap {
                let shifted = table[b - 1][k].shift_up(k);
                table[b][k] = table[b - 1][k - 1].clone() + shifted;
            }
        }
        for b in 0..=cap {
            for k in 0..=cap {
                assert_eq!(qbinom(b as u64, k as u64), table[b][k], "b={b} k={k}");
            }
        }
    }

    #[test]
    fn qbinom_degree_symmetry_and_value_at_one() {
        for b in 0..=7u64 {
            for k in 0..=b {
                let p = qbinom(b, k);
                assert_eq!(p.degree(), Some((k * (b - k)) as usize));
                assert_eq!(p, qbinom(b, b - k));
                assert_eq!(
                    p.eval_at_one(),
                    BigRational::from_integer(crate::ring::binomial(b as i64, k as i64))
                );
            }
        }
    }

    #[test]
    fn derivative_poly_hand_cases() {
        // [b choose 1]_q = 1 + ... + q^(b-1): value b at q=1, derivative sum 0..b-1
        assert_eq!(qbinom_derivative_poly(1, 0), BPoly::from_pairs(&[(1, rat(1))]));
        let half = rat(1) / rat(2);
        let b2 = BPoly::from_pairs(&[(2, half.clone()), (1, -half)]);
        assert_eq!(qbinom_derivative_poly(1, 1), b2);
        assert_eq!(qbinom_derivative_poly(2, 0), b2);
        assert_eq!(qbinom_derivative_poly(0, 0), BPoly::one());
        assert!(qbinom_derivative_poly(0, 3).is_zero());
    }

    #[test]
    fn derivative_poly_agrees_beyond_nodes() {
        for k in 0..=3u64 {
            for t in 0..=3u64 {
                let p = qbinom_derivative_poly(k, t);
                // nodes were 0..=k+t; test the next 20 integers
                for b in (k + t + 1)..(k + t + 21) {
                    assert_eq!(
                        p.eval(&rat(b as i64)),
                        qbinom(b, k).taylor_at_one(t),
                        "k={k} t={t} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn ratio_poly_hand_cases() {
        assert_eq!(ratio_derivative_poly(1, 0), BPoly::from_pairs(&[(1, rat(1))]));
        let half = rat(1) / rat(2);
        assert_eq!(
            ratio_derivative_poly(1, 1),
            BPoly::from_pairs(&[(2, half.clone()), (1, -half.clone())])
        );
        // (1 + q + ... + q^(b-2))/(1+q) at q=1 is (b-1)/2
        assert_eq!(
            ratio_derivative_poly(2, 0),
            BPoly::from_pairs(&[(1, half.clone()), (0, -half)])
        );
        assert_eq!(ratio_derivative_poly(2, 0).eval(&rat(3)), rat(1));
    }

    #[test]
    fn ratio_poly_vanishes_at_empty_numerator() {
        for m in 0..=4u64 {
            for b in 0..=5i64 {
                let p = ratio_derivative_poly(b as u64 + 1, m);
                assert!(p.eval(&rat(b)).is_zero(), "m={m} b={b}");
            }
        }
    }

    #[test]
    fn taylor_coefficients_multiply_across_ratio_factors() {
        // [b choose k]_q is the product over i = 1..k of the geometric
        // ratios; its Taylor coefficients at q = 1 are therefore the
        // convolution of the p_{i,m} strings
        for b in 0..=5u64 {
            for k in 1..=b {
                for t in 0..=4u64 {
                    let lhs = qbinom(b, k).taylor_at_one(t)
                        / BigRational::from_integer(factorial(t));
                    let mut rhs = BigRational::zero();
                    for split in compositions(t as u32, k as usize) {
                        let mut prod = rat(1);
                        for (idx, &m) in split.iter().enumerate() {
                            let p = ratio_derivative_poly(idx as u64 + 1, m as u64);
                            prod = prod * p.eval(&rat(b as i64))
                                / BigRational::from_integer(factorial(m as u64));
                        }
                        rhs = rhs + prod;
                    }
                    assert_eq!(lhs, rhs, "b={b} k={k} t={t}");
                }
            }
        }
    }
}
