//! Expansion of Kac polynomials in q-binomials of the edge multiplicities.
//!
//! Viewed as a function of the multiplicity vector `g`, the Kac polynomial
//! of a fixed dimension vector admits a finite expansion
//!
//! ```text
//!   A(g; q) = sum_k a_k(q) * prod_ij [g_ij choose k_ij]_q
//! ```
//!
//! with integer polynomial coefficients `a_k`.  The `a_k` are recovered from
//! evaluations on an integer grid by an alternating q-difference sum, the
//! expansion is validated by reconstructing every grid value plus spot
//! checks beyond the grid, and the derivative structure of the `a_k` at
//! q = 1 is checked against the connected-graph-count formula.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::connected_counts;
use crate::hua::kac_polynomial;
use crate::leading::{c_coefficient, s_k_set};
use crate::multi::{box_points, multi_factorial, sub, weight};
use crate::qcomb::qbinom;
use crate::quiver::{pair_count, pair_index, DimVector, Quiver};
use crate::QPoly;

/// `(-1)^|j| q^(sum j_c(j_c-1)/2) prod_c [l_c choose j_c]_q`, the kernel of
/// the q-difference operator, with the sign returned separately.
fn difference_kernel(ell: &[u32], j: &[u32]) -> (QPoly, bool) {
    let mut p = QPoly::one();
    let mut negative = false;
    for (c, &jc) in j.iter().enumerate() {
        let tri = (jc as u64 * (jc as u64).saturating_sub(1) / 2) as usize;
        p = p.mul_ref(&qbinom(ell[c] as u64, jc as u64).shift_up(tri));
        if jc % 2 == 1 {
            negative = !negative;
        }
    }
    (p, negative)
}

/// Extracts the expansion coefficient `c_l(q)` of a grid function by the
/// alternating q-difference sum over `0 <= j <= l`.  The result must have
/// integer coefficients; anything else signals a bug in the caller's grid.
pub fn qdifference_coefficient(
    evaluate: &mut dyn FnMut(&[u32]) -> QPoly,
    ell: &[u32],
) -> Result<QPoly> {
    let mut total = QPoly::zero();
    for j in box_points(ell) {
        let (kernel, negative) = difference_kernel(ell, &j);
        let term = kernel.mul_ref(&evaluate(&sub(ell, &j)));
        total = if negative { total - term } else { total + term };
    }
    if !total.is_integral() {
        return Err(Error::Integrality {
            context: "qdifference_coefficient".into(),
            detail: format!("at {ell:?}: {}", total.render("q")),
        });
    }
    Ok(total)
}

/// The q-binomial expansion of one dimension vector's Kac polynomials over
/// a box of edge profiles.  Zero coefficients are not stored.
#[derive(Clone, Debug)]
pub struct MahlerTable {
    alpha: DimVector,
    box_caps: Vec<u32>,
    coeffs: BTreeMap<Vec<u32>, QPoly>,
}

impl MahlerTable {
    pub fn alpha(&self) -> &DimVector {
        &self.alpha
    }

    pub fn box_caps(&self) -> &[u32] {
        &self.box_caps
    }

    /// `a_k(q)`; zero when `k` is outside the stored support.
    pub fn coefficient(&self, k: &[u32]) -> QPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u32>, QPoly> {
        &self.coeffs
    }

    /// `sum_k a_k(q) prod_c [g_c choose k_c]_q` for any multiplicity vector,
    /// inside the extraction box or not.
    pub fn reconstruct(&self, g: &[u32]) -> QPoly {
        let mut total = QPoly::zero();
        for (k, a) in &self.coeffs {
            let mut basis = QPoly::one();
            for (c, &kc) in k.iter().enumerate() {
                if kc > g[c] {
                    basis = QPoly::zero();
                    break;
                }
                basis = basis.mul_ref(&qbinom(g[c] as u64, kc as u64));
            }
            total = total + basis.mul_ref(a);
        }
        total
    }
}

/// Per-pair support caps `alpha_i * alpha_j` (and `alpha_i^2` on the
/// diagonal): every expansion coefficient vanishes beyond this box, since
/// the Hua pairing exponents cannot grow faster than that in any g_ij.
pub fn support_box(alpha: &DimVector) -> Vec<u32> {
    let n = alpha.len();
    let mut caps = vec![0u32; pair_count(n)];
    for (i, j) in crate::quiver::pairs(n) {
        caps[pair_index(n, i, j)] = alpha.get(i) * alpha.get(j);
    }
    caps
}

fn kac_grid(alpha: &DimVector, points: &[Vec<u32>]) -> Result<BTreeMap<Vec<u32>, QPoly>> {
    let n = alpha.len();
    let values: Result<Vec<QPoly>> = points
        .par_iter()
        .map(|g| kac_polynomial(&Quiver::new(n, g.clone())?, alpha))
        .collect();
    Ok(points.iter().cloned().zip(values?).collect())
}

/// Extracts the full expansion over `0 <= k <= box_caps` and validates it:
/// reconstruction must reproduce the Kac polynomial at every grid point and
/// at three points beyond the box.
pub fn mahler_table(alpha: &DimVector, box_caps: &[u32]) -> Result<MahlerTable> {
    let n = alpha.len();
    assert_eq!(box_caps.len(), pair_count(n), "one cap per vertex pair");
    let points = box_points(box_caps);
    let cache = kac_grid(alpha, &points)?;

    let mut coeffs = BTreeMap::new();
    for k in &points {
        let a = qdifference_coefficient(&mut |b| cache[b].clone(), k)?;
        if !a.is_zero() {
            coeffs.insert(k.clone(), a);
        }
    }
    let table = MahlerTable {
        alpha: alpha.clone(),
        box_caps: box_caps.to_vec(),
        coeffs,
    };

    for (g, expected) in &cache {
        if &table.reconstruct(g) != expected {
            return Err(Error::ReconstructionMismatch {
                at: format!("{g:?}"),
            });
        }
    }
    let spots: Vec<Vec<u32>> = (1..=3u32)
        .map(|t| box_caps.iter().map(|&c| c + t).collect())
        .collect();
    for (g, expected) in kac_grid(alpha, &spots)? {
        if table.reconstruct(&g) != expected {
            return Err(Error::ReconstructionMismatch {
                at: format!("{g:?}"),
            });
        }
    }
    Ok(table)
}

/// Starts from a uniform cap and doubles it whenever validation fails,
/// stopping once the cap covers the support box (past which a failure is a
/// genuine error, not truncation).
pub fn mahler_table_auto(alpha: &DimVector, initial_cap: u32) -> Result<MahlerTable> {
    let n = alpha.len();
    let support_cap = support_box(alpha).into_iter().max().unwrap_or(0);
    let mut cap = initial_cap;
    loop {
        let result = mahler_table(alpha, &vec![cap; pair_count(n)]);
        match result {
            Err(Error::ReconstructionMismatch { .. }) if cap < support_cap => {
                cap = (cap.max(1) * 2).min(support_cap);
            }
            other => return other,
        }
    }
}

/// Verifies the derivative structure of one expansion coefficient:
/// `(q-1)^(|k|-|alpha|+1)` must divide `a_k(q)` exactly, and the quotient at
/// q = 1 must equal `(k!/alpha!) sum_{p in S_k} c(alpha,k,p) G_p`.
pub fn check_coefficient_derivative(alpha: &DimVector, k: &[u32]) -> Result<bool> {
    let n = alpha.len();
    assert_eq!(k.len(), pair_count(n));
    if weight(k) < alpha.weight() {
        return Err(Error::InvalidInput(format!(
            "profile weight {} below dimension weight {}",
            weight(k),
            alpha.weight()
        )));
    }
    let cache = kac_grid(alpha, &box_points(k))?;
    let a = qdifference_coefficient(&mut |b| cache[b].clone(), k)?;

    let e = weight(k) - alpha.weight() + 1;
    let linear = QPoly::from_ints(&[-1, 1]);
    let mut quotient = a;
    for achieved in 0..e {
        quotient = match quotient.exact_div(&linear) {
            Some(next) => next,
            None => {
                return Err(Error::DivisibilityFailure {
                    expected: e as u64,
                    found: achieved as u64,
                })
            }
        };
    }
    let lhs = quotient.eval_at_one();

    let counts = connected_counts(alpha, weight(k));
    let mut inner = num_bigint::BigInt::zero();
    for p in s_k_set(n, k) {
        inner += c_coefficient(alpha, k, &p)? * counts.count(&p);
    }
    let rhs = BigRational::from_integer(multi_factorial(k) * inner)
        / BigRational::from_integer(alpha.factorial());
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn dv(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn differences_of_a_constant_vanish() {
        let f = QPoly::from_ints(&[2, 0, 7]);
        let mut eval = |_: &[u32]| f.clone();
        assert_eq!(qdifference_coefficient(&mut eval, &[0]).unwrap(), f);
        for ell in 1..4u32 {
            assert!(qdifference_coefficient(&mut eval, &[ell]).unwrap().is_zero());
        }
        assert!(qdifference_coefficient(&mut eval, &[1, 1, 0]).unwrap().is_zero());
    }

    #[test]
    fn differences_of_q_power_terminate_at_one() {
        // f(b) = q^b has expansion 1 + (q-1)<x choose 1>
        let mut eval = |b: &[u32]| QPoly::power(b[0] as usize);
        assert_eq!(qdifference_coefficient(&mut eval, &[0]).unwrap(), QPoly::one());
        assert_eq!(
            qdifference_coefficient(&mut eval, &[1]).unwrap(),
            QPoly::from_ints(&[-1, 1])
        );
        for ell in 2..5u32 {
            assert!(
                qdifference_coefficient(&mut eval, &[ell]).unwrap().is_zero(),
                "ell={ell}"
            );
        }
    }

    #[test]
    fn table_for_line_of_powers() {
        let table = mahler_table(&dv(&[1]), &[3]).unwrap();
        assert_eq!(table.coefficient(&[0]), QPoly::one());
        assert_eq!(table.coefficient(&[1]), QPoly::from_ints(&[-1, 1]));
        assert_eq!(table.entries().len(), 2);
        // reconstruction beyond the box
        assert_eq!(table.reconstruct(&[4]), QPoly::power(4));
        assert_eq!(table.reconstruct(&[7]), QPoly::power(7));
    }

    #[test]
    fn support_box_squares_dimensions() {
        assert_eq!(support_box(&dv(&[5])), vec![25]);
        assert_eq!(support_box(&dv(&[2, 3])), vec![4, 6, 9]);
    }

    #[test]
    fn coefficients_vanish_at_one_from_dimension_weight_on() {
        let alpha = dv(&[2]);
        let table = mahler_table(&alpha, &support_box(&alpha)).unwrap();
        for (k, a) in table.entries() {
            assert!(a.is_integral());
            if weight(k) >= alpha.weight() {
                assert!(a.eval_at_one().is_zero(), "k={k:?}");
            }
        }
        // the surviving values at 1 are the binomial-basis row: here C(g,1)
        assert_eq!(table.coefficient(&[1]).eval_at_one(), rat(1));
        assert!(table.coefficient(&[0]).eval_at_one().is_zero());
    }

    #[test]
    fn reconstruction_validates_for_dimension_three() {
        let alpha = dv(&[3]);
        let table = mahler_table(&alpha, &support_box(&alpha)).unwrap();
        // every coefficient is within the support box by construction;
        // check a value in and out of the grid against the Hua kernel
        for g in [2u32, 11] {
            let direct = kac_polynomial(&Quiver::loop_quiver(g), &alpha).unwrap();
            assert_eq!(table.reconstruct(&[g]), direct, "g={g}");
        }
    }

    #[test]
    fn auto_extension_doubles_to_the_support() {
        // cap 2 misses support entries 3 and 4, so the spot checks force
        // one doubling
        let table = mahler_table_auto(&dv(&[2]), 2).unwrap();
        assert_eq!(table.box_caps(), &[4]);
        assert!(!table.coefficient(&[4]).is_zero());
    }

    #[test]
    fn derivative_check_small_profiles() {
        let two = dv(&[2]);
        assert!(check_coefficient_derivative(&two, &[2]).unwrap());
        assert!(check_coefficient_derivative(&two, &[3]).unwrap());
        assert!(check_coefficient_derivative(&two, &[4]).unwrap());
        let three = dv(&[3]);
        assert!(check_coefficient_derivative(&three, &[3]).unwrap());
        assert!(check_coefficient_derivative(&three, &[4]).unwrap());
    }

    #[test]
    fn derivative_check_rejects_light_profiles() {
        assert!(check_coefficient_derivative(&dv(&[3]), &[1]).is_err());
    }

    #[test]
    fn derivative_check_two_vertex_profile() {
        let alpha = dv(&[1, 1]);
        assert!(check_coefficient_derivative(&alpha, &[0, 2, 0]).unwrap());
        assert!(check_coefficient_derivative(&alpha, &[1, 1, 0]).unwrap());
    }
}
