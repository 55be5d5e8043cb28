//! The top homogeneous component, in the edge multiplicities, of the Kac
//! polynomial derivatives at q = 1.
//!
//! For a fixed dimension vector `alpha`, the value of the s-th q-derivative
//! of the Kac polynomial at q = 1 is a polynomial in the edge multiplicities
//! `g_ij` of total degree `s + |alpha| - 1`.  The top component has an
//! explicit combinatorial expansion: a Stirling-weighted sum of the
//! `c`-coefficients below against connected-graph counts.  This module
//! computes that expansion, and independently recovers the entire
//! `g`-polynomial by exact multidimensional interpolation of Hua-kernel
//! samples, so the two routes can be compared term by term.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::connected_counts;
use crate::hua::kac_derivative_at_one;
use crate::interp::{binomial_poly, forward_differences, tensor_forward_differences};
use crate::mpoly::MPoly;
use crate::multi::{box_points, multi_factorial, weight};
use crate::qcomb::stirling2;
use crate::quiver::{pair_count, pair_index, pairs, DimVector, Quiver};
use crate::ring::{binomial, factorial, is_integer};

/// Top homogeneous component of the s-th derivative at q = 1, as an
/// association of edge-profile exponents `l` (all of weight
/// `s + |alpha| - 1`) to the coefficient of `g^l`.  The `1/alpha!`
/// normalization is folded into the stored values; zero terms are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingComponent {
    alpha: DimVector,
    s: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl LeadingComponent {
    pub fn alpha(&self) -> &DimVector {
        &self.alpha
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Total degree of the component: `s + |alpha| - 1`.
    pub fn degree(&self) -> u32 {
        self.s + self.alpha.weight() - 1
    }

    pub fn coefficient(&self, ell: &[u32]) -> BigRational {
        self.terms.get(ell).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn to_mpoly(&self) -> MPoly {
        let mut p = MPoly::zero();
        for (e, c) in &self.terms {
            p = p + MPoly::monomial(e.clone(), c.clone());
        }
        p
    }
}

/// All relaxations of the profile `k` that keep cross entries fixed and
/// shrink diagonal entries: `p_ii <= k_ii`, `p_ij = k_ij` for `i < j`.
/// Ordered lexicographically by the diagonal entries.
pub fn s_k_set(n: usize, k: &[u32]) -> Vec<Vec<u32>> {
    assert_eq!(k.len(), pair_count(n));
    let diag_caps: Vec<u32> = (0..n).map(|i| k[pair_index(n, i, i)]).collect();
    box_points(&diag_caps)
        .into_iter()
        .map(|diag| {
            let mut p = k.to_vec();
            for (i, &d) in diag.iter().enumerate() {
                p[pair_index(n, i, i)] = d;
            }
            p
        })
        .collect()
}

/// The combinatorial coefficient tying the profile `k` to its relaxation
/// `p`: the product over vertices of
/// `sum_j C(p_ii, j) C(alpha_i, k_ii - p_ii - j) 2^(p_ii - j)`.
pub fn c_coefficient(alpha: &DimVector, k: &[u32], p: &[u32]) -> Result<BigInt> {
    let n = alpha.len();
    assert_eq!(k.len(), pair_count(n));
    let valid = p.len() == k.len()
        && pairs(n).iter().all(|&(i, j)| {
            let idx = pair_index(n, i, j);
            if i == j {
                p[idx] <= k[idx]
            } else {
                p[idx] == k[idx]
            }
        });
    if !valid {
        return Err(Error::NotInRelaxationSet {
            index: format!("{p:?}"),
            base: format!("{k:?}"),
        });
    }
    let mut prod = BigInt::one();
    for i in 0..n {
        let kii = k[pair_index(n, i, i)] as i64;
        let pii = p[pair_index(n, i, i)] as i64;
        let mut sum = BigInt::zero();
        for j in 0..=pii {
            sum += binomial(pii, j)
                * binomial(alpha.get(i) as i64, kii - pii - j)
                * BigInt::from(2u32).pow((pii - j) as u32);
        }
        prod *= sum;
    }
    Ok(prod)
}

/// Top homogeneous component by the Stirling-weighted formula
///
/// ```text
///   C_l = (s!/l!) sum_{k<=l} S(l,k) k! sum_{p in S_k} c(alpha,k,p) G_p
/// ```
///
/// divided by `alpha!`.  At s = 0 this collapses to the direct formula of
/// `leading_component_direct`; both are exercised by tests.
pub fn leading_component(alpha: &DimVector, s: u32) -> LeadingComponent {
    let n = alpha.len();
    let degree = s + alpha.weight() - 1;
    let counts = connected_counts(alpha, degree);
    let alpha_fact = BigRational::from_integer(alpha.factorial());
    let s_fact = BigRational::from_integer(factorial(s as u64));

    let mut terms = BTreeMap::new();
    for ell in crate::multi::compositions(degree, pair_count(n)) {
        let mut total = BigRational::zero();
        for k in box_points(&ell) {
            // S(l_i, 0) = 0 for l_i >= 1, so profiles with a spurious zero
            // entry drop out here
            let mut stirling = BigInt::one();
            for (idx, &li) in ell.iter().enumerate() {
                stirling *= stirling2(li as u64, k[idx] as u64);
            }
            if stirling.is_zero() {
                continue;
            }
            let mut inner = BigInt::zero();
            for p in s_k_set(n, &k) {
                let g = counts.count(&p);
                if g.is_zero() {
                    continue;
                }
                inner += c_coefficient(alpha, &k, &p).expect("p drawn from S_k") * g;
            }
            if inner.is_zero() {
                continue;
            }
            total = total + BigRational::from_integer(stirling * multi_factorial(&k) * inner);
        }
        if total.is_zero() {
            continue;
        }
        let coeff = total * s_fact.clone()
            / BigRational::from_integer(multi_factorial(&ell))
            / alpha_fact.clone();
        terms.insert(ell, coeff);
    }
    LeadingComponent {
        alpha: alpha.clone(),
        s,
        terms,
    }
}

/// The s = 0 component computed without the Stirling machinery:
/// `C_k = 2^t(k) G_k / alpha!` with `t(k)` the diagonal weight.
pub fn leading_component_direct(alpha: &DimVector) -> LeadingComponent {
    let n = alpha.len();
    let degree = alpha.weight() - 1;
    let counts = connected_counts(alpha, degree);
    let alpha_fact = BigRational::from_integer(alpha.factorial());

    let mut terms = BTreeMap::new();
    for (k, g) in counts.entries() {
        if weight(k) != degree {
            continue;
        }
        let t: u32 = (0..n).map(|i| k[pair_index(n, i, i)]).sum();
        let coeff =
            BigRational::from_integer(BigInt::from(2u32).pow(t) * g) / alpha_fact.clone();
        terms.insert(k.clone(), coeff);
    }
    LeadingComponent {
        alpha: alpha.clone(),
        s: 0,
        terms,
    }
}

/// Recovers the full polynomial in the `g_ij` variables whose value at each
/// integer grid point `g` is the s-th derivative of the Kac polynomial at
/// q = 1, by Newton interpolation over the box `{0..degree_cap}^(n(n+1)/2)`.
///
/// Samples extend two steps past the cap in every direction; the mixed
/// differences of order beyond the cap must all vanish there, which is the
/// polynomiality witness.  Fails if they do not.
pub fn fit_polynomial_in_g(alpha: &DimVector, s: u32, degree_cap: u32) -> Result<MPoly> {
    let needed = s + alpha.weight() - 1;
    if degree_cap < needed {
        return Err(Error::DegreeCapTooSmall {
            cap: degree_cap,
            needed,
        });
    }
    let n = alpha.len();
    let dims_len = pair_count(n);
    let samples_per_axis = degree_cap as usize + 3;
    let grid = box_points(&vec![degree_cap + 2; dims_len]);

    let values: Result<Vec<BigRational>> = grid
        .par_iter()
        .map(|g| {
            let quiver = Quiver::new(n, g.clone()).expect("grid point is a valid edge vector");
            kac_derivative_at_one(&quiver, alpha, s as u64)
        })
        .collect();
    let diffs = tensor_forward_differences(&vec![samples_per_axis; dims_len], values?);

    let mut poly = MPoly::zero();
    for (flat, d) in diffs.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        // decode the mixed-difference order from the flat index
        let mut rem = flat;
        let mut order = vec![0u32; dims_len];
        for axis in (0..dims_len).rev() {
            order[axis] = (rem % samples_per_axis) as u32;
            rem /= samples_per_axis;
        }
        if order.iter().any(|&o| o > degree_cap) {
            return Err(Error::NonvanishingDifferences {
                at: format!("{order:?}"),
            });
        }
        let mut term = MPoly::constant(d.clone());
        for (axis, &o) in order.iter().enumerate() {
            term = term * univariate_in(axis, &binomial_poly(o as usize));
        }
        poly = poly + term;
    }
    Ok(poly)
}

fn univariate_in(axis: usize, p: &crate::BPoly) -> MPoly {
    let mut out = MPoly::zero();
    for (e, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exps = vec![0u32; axis + 1];
        exps[axis] = e as u32;
        out = out + MPoly::monomial(exps, c.clone());
    }
    out
}

/// Expansion of the single-vertex value polynomial `g -> d^s/dq^s A(q)|_1`
/// in the binomial basis `C(g, k)`: entry `k` of the result is the basis
/// coefficient, which is asserted to be an integer.
pub fn binomial_basis_coefficients(alpha: u32, s: u32) -> Result<Vec<BigInt>> {
    let dim = DimVector::single(alpha);
    let cap = s + alpha - 1;
    let values: Result<Vec<BigRational>> = (0..=cap as u64 + 2)
        .into_par_iter()
        .map(|g| kac_derivative_at_one(&Quiver::loop_quiver(g as u32), &dim, s as u64))
        .collect();
    let diffs = forward_differences(&values?);
    for (k, d) in diffs.iter().enumerate().skip(cap as usize + 1) {
        if !d.is_zero() {
            return Err(Error::NonvanishingDifferences {
                at: format!("[{k}]"),
            });
        }
    }
    diffs[..=cap as usize]
        .iter()
        .map(|d| {
            if is_integer(d) {
                Ok(d.to_integer())
            } else {
                Err(Error::Integrality {
                    context: "binomial_basis_coefficients".into(),
                    detail: format!("{d}"),
                })
            }
        })
        .collect()
}

/// Coefficient of `g^(alpha-1)` predicted for the single-vertex case:
/// `2^(alpha-1) alpha^(alpha-2) / alpha!`.
pub fn single_vertex_leading(alpha: u32) -> BigRational {
    assert!(alpha >= 1);
    let two = BigInt::from(2u32).pow(alpha - 1);
    let trees = if alpha == 1 {
        // alpha^(alpha-2) at alpha = 1 is the single one-vertex tree
        BigInt::one()
    } else {
        BigInt::from(alpha).pow(alpha - 2)
    };
    BigRational::new(two * trees, factorial(alpha as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn dv(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn relaxation_set_single_vertex() {
        assert_eq!(
            s_k_set(1, &[3]),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn relaxation_set_two_vertices() {
        assert_eq!(
            s_k_set(2, &[1, 2, 0]),
            vec![vec![0, 2, 0], vec![1, 2, 0]]
        );
        let k = [2u32, 1, 3];
        assert_eq!(s_k_set(2, &k).len(), 3 * 4);
    }

    #[test]
    fn c_coefficient_hand_values() {
        let two = dv(&[2]);
        assert_eq!(c_coefficient(&two, &[1], &[1]).unwrap(), int(2));
        assert_eq!(c_coefficient(&two, &[2], &[1]).unwrap(), int(5));
    }

    #[test]
    fn c_coefficient_at_full_diagonal_is_power_of_two() {
        for (alpha, k) in [
            (dv(&[3]), vec![2u32]),
            (dv(&[2, 2]), vec![1, 3, 2]),
            (dv(&[1, 2]), vec![0, 1, 2]),
        ] {
            let t: u32 = (0..alpha.len())
                .map(|i| k[pair_index(alpha.len(), i, i)])
                .sum();
            assert_eq!(
                c_coefficient(&alpha, &k, &k).unwrap(),
                int(2i64.pow(t)),
                "k={k:?}"
            );
        }
    }

    #[test]
    fn c_coefficient_with_zero_diagonal_is_one() {
        let alpha = dv(&[2, 1]);
        assert_eq!(c_coefficient(&alpha, &[0, 3, 0], &[0, 3, 0]).unwrap(), int(1));
    }

    #[test]
    fn c_coefficient_rejects_foreign_profiles() {
        let two = dv(&[2]);
        assert!(matches!(
            c_coefficient(&two, &[1], &[2]),
            Err(Error::NotInRelaxationSet { .. })
        ));
        let err = c_coefficient(&dv(&[1, 1]), &[0, 2, 0], &[0, 1, 0]);
        assert!(err.is_err());
    }

    #[test]
    fn single_vertex_top_coefficients() {
        // 2^(a-1) a^(a-2) / a!
        assert_eq!(single_vertex_leading(2), rat(1));
        assert_eq!(single_vertex_leading(5), BigRational::new(int(50), int(3)));
        for alpha in 1..=6u32 {
            let lc = leading_component(&dv(&[alpha]), 0);
            assert_eq!(
                lc.coefficient(&[alpha - 1]),
                single_vertex_leading(alpha),
                "alpha={alpha}"
            );
            assert_eq!(lc.terms().len(), 1);
        }
    }

    #[test]
    fn derivative_component_alpha_two() {
        // d/dq A at 1 fits 3g^2 - 2g, so the top coefficient is 3
        let lc = leading_component(&dv(&[2]), 1);
        assert_eq!(lc.coefficient(&[2]), rat(3));
    }

    #[test]
    fn kronecker_component_is_single_cross_term() {
        let lc = leading_component(&dv(&[1, 1]), 0);
        assert_eq!(lc.coefficient(&[0, 1, 0]), rat(1));
        assert_eq!(lc.terms().len(), 1);
    }

    #[test]
    fn direct_route_matches_general_formula_at_s_zero() {
        for alpha in [dv(&[2]), dv(&[4]), dv(&[1, 2]), dv(&[2, 2])] {
            assert_eq!(
                leading_component(&alpha, 0),
                leading_component_direct(&alpha),
                "alpha={alpha:?}"
            );
        }
    }

    #[test]
    fn fit_matches_table_row_three() {
        // 4 C(g,2) + C(g,1) = 2g^2 - g
        let p = fit_polynomial_in_g(&dv(&[3]), 0, 2).unwrap();
        let mut expect = MPoly::monomial(vec![2], rat(2));
        expect = expect + MPoly::monomial(vec![1], rat(-1));
        assert_eq!(p, expect);
    }

    #[test]
    fn fit_of_power_quiver_is_falling_factorial() {
        // A = q^g, so the s-th derivative at 1 is g(g-1)...(g-s+1)
        for s in 0..=3u32 {
            let p = fit_polynomial_in_g(&dv(&[1]), s, s.max(1)).unwrap();
            let mut expect = MPoly::one();
            for r in 0..s as i64 {
                expect = expect * (MPoly::var(0) + MPoly::constant(rat(-r)));
            }
            assert_eq!(p, expect, "s={s}");
        }
    }

    #[test]
    fn fit_top_part_matches_component_small_cases() {
        for (alpha, s) in [(dv(&[2]), 0u32), (dv(&[2]), 1), (dv(&[3]), 0), (dv(&[1, 1]), 1)] {
            let cap = s + alpha.weight() - 1;
            let fit = fit_polynomial_in_g(&alpha, s, cap).unwrap();
            let lc = leading_component(&alpha, s);
            assert_eq!(
                fit.homogeneous_part(lc.degree()),
                lc.to_mpoly(),
                "alpha={alpha:?} s={s}"
            );
        }
    }

    #[test]
    fn fit_rejects_insufficient_cap() {
        assert!(matches!(
            fit_polynomial_in_g(&dv(&[3]), 0, 1),
            Err(Error::DegreeCapTooSmall { .. })
        ));
    }

    #[test]
    fn binomial_basis_small_rows() {
        assert_eq!(binomial_basis_coefficients(2, 0).unwrap(), vec![int(0), int(1)]);
        assert_eq!(
            binomial_basis_coefficients(3, 0).unwrap(),
            vec![int(0), int(1), int(4)]
        );
    }
}
