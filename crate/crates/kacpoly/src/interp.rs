//! Newton forward-difference interpolation on integer grids, exact over the
//! rationals.
//!
//! Everything here works with consecutive integer nodes, where divided
//! differences reduce to plain finite differences and the Newton basis
//! reduces to binomial polynomials.  `interpolate_at` handles one variable;
//! `tensor_forward_differences` computes mixed differences over a dense
//! multidimensional grid for callers that assemble their own basis products.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{factorial, rat};
use crate::BPoly;

/// Forward differences at the left node: `d[j] = Δ^j f(x0)` given the values
/// `f(x0), f(x0+1), ...`.
pub fn forward_differences(values: &[BigRational]) -> Vec<BigRational> {
    let mut d = values.to_vec();
    for ord in 1..d.len() {
        for idx in (ord..d.len()).rev() {
            d[idx] = d[idx].clone() - d[idx - 1].clone();
        }
    }
    d
}

/// `(x - start)(x - start - 1) ... (x - start - m + 1)`; the empty product
/// for `m = 0`.
fn falling_from(start: i64, m: usize) -> BPoly {
    let mut p = BPoly::one();
    for r in 0..m as i64 {
        p = p.mul_ref(&BPoly::from_pairs(&[(1, rat(1)), (0, rat(-start - r))]));
    }
    p
}

/// The binomial polynomial `C(x, m) = x(x-1)...(x-m+1)/m!`.
pub fn binomial_poly(m: usize) -> BPoly {
    let inv = rat(1) / BigRational::from_integer(factorial(m as u64));
    falling_from(0, m).map(|c| c * inv.clone())
}

/// The unique polynomial of degree below `values.len()` taking
/// `values[i]` at `start + i`.
pub fn interpolate_at(start: i64, values: &[BigRational]) -> BPoly {
    let diffs = forward_differences(values);
    let mut p = BPoly::zero();
    for (j, d) in diffs.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        let scaled = d / BigRational::from_integer(factorial(j as u64));
        p = p + falling_from(start, j).map(|c| c * scaled.clone());
    }
    p
}

/// Mixed forward differences on a dense grid with `dims[a]` samples along
/// axis `a`, values in lexicographic order with the last axis fastest
/// (matching `multi::box_points`).  Entry `j` of the result is the mixed
/// difference of order `j_a` along each axis, taken at the origin.
pub fn tensor_forward_differences(dims: &[usize], values: Vec<BigRational>) -> Vec<BigRational> {
    let total: usize = dims.iter().product();
    assert_eq!(values.len(), total, "grid size must match dims");
    let mut v = values;
    let mut stride = total;
    for &len in dims {
        stride /= len;
        // lines along this axis start at indices whose axis coordinate is 0
        for block in 0..total / (stride * len) {
            for offset in 0..stride {
                let base = block * stride * len + offset;
                for ord in 1..len {
                    for idx in (ord..len).rev() {
                        let hi = base + idx * stride;
                        let lo = hi - stride;
                        v[hi] = v[hi].clone() - v[lo].clone();
                    }
                }
            }
        }
    }
    v
}
