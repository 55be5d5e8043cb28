//! The partition generating series of a quiver and the Kac polynomials it
//! encodes.
//!
//! For a quiver with multiplicities `g_ij` the series assigns to each
//! dimension vector `beta` the sum over multipartitions `(lambda^1, ...,
//! lambda^n)` of sizes `beta` of
//!
//! ```text
//!   q^(sum_{i<=j} g_ij <lambda^i, lambda^j>)  *  prod_i 1 / (q^<l^i,l^i> b_{l^i}(1/q))
//! ```
//!
//! where `<.,.>` is the transpose pairing and `b_lambda` the standard
//! centralizer factor.  Taking the formal logarithm of this series, scaling
//! the coefficient at `alpha` by `gcd(alpha)`, and applying Moebius inversion
//! over rescalings `q -> q^d` produces a polynomial with integer
//! coefficients: the count of absolutely indecomposable representations over
//! a field with `q` elements.  Integrality and polynomiality are asserted,
//! not assumed.
//!
//! All exact arithmetic runs on factored-denominator fractions; the public
//! surface returns canonical rational functions.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::quiver::{DimVector, Quiver};
use crate::ratfunc::{QFrac, RatFunc};
use crate::ring::{divisors, moebius, rat, Coeff};
use crate::series::TruncSeries;
use crate::QPoly;

/// `1 / (q^<l,l> b_lambda(1/q))` as a canonical rational function.
///
/// With `n_i` parts of size `i` this equals
/// `q^(sum_i n_i (n_i + 1) / 2 - <l,l>) / prod_i prod_{j<=n_i} (q^j - 1)`.
pub fn b_inverse_factor(lambda: &Partition) -> RatFunc {
    b_inverse_qfrac(lambda).to_ratfunc()
}

fn b_inverse_qfrac(lambda: &Partition) -> QFrac {
    let self_pair: i64 = lambda
        .transpose()
        .parts()
        .iter()
        .map(|&c| c as i64 * c as i64)
        .sum();
    let mut geo: Vec<(u64, u64)> = Vec::new();
    let mut tri = 0i64;
    for (_, &count) in &lambda.multiplicities() {
        let c = count as i64;
        tri += c * (c + 1) / 2;
        for j in 1..=count as u64 {
            geo.push((j, 1));
        }
    }
    let e = tri - self_pair;
    if e >= 0 {
        QFrac::from_parts(QPoly::power(e as usize), 0, &geo)
    } else {
        QFrac::from_parts(QPoly::one(), (-e) as u64, &geo)
    }
}

struct PartData {
    size: u32,
    transpose: Vec<u32>,
    b_inv: QFrac,
}

fn pair(a: &PartData, b: &PartData) -> u64 {
    a.transpose
        .iter()
        .zip(b.transpose.iter())
        .map(|(&x, &y)| x as u64 * y as u64)
        .sum()
}

fn part_data(lambda: &Partition) -> PartData {
    PartData {
        size: lambda.size(),
        transpose: lambda.transpose().parts().to_vec(),
        b_inv: b_inverse_qfrac(lambda),
    }
}

/// The partition series truncated to exponents `<= bound`, with
/// factored-fraction coefficients.
fn partition_series(quiver: &Quiver, bound: &[u32]) -> TruncSeries<QFrac> {
    let n = quiver.n();
    assert_eq!(bound.len(), n, "bound arity must match the vertex count");
    let vertex_parts: Vec<Vec<PartData>> = (0..n)
        .map(|i| partitions_up_to(bound[i]).iter().map(part_data).collect())
        .collect();

    let mut series = TruncSeries::zero(bound.to_vec());
    let mut chosen: Vec<usize> = Vec::with_capacity(n);

    fn rec(
        quiver: &Quiver,
        vertex_parts: &[Vec<PartData>],
        chosen: &mut Vec<usize>,
        acc: QFrac,
        series: &mut TruncSeries<QFrac>,
    ) {
        let i = chosen.len();
        if i == vertex_parts.len() {
            let beta: Vec<u32> = chosen
                .iter()
                .enumerate()
                .map(|(v, &k)| vertex_parts[v][k].size)
                .collect();
            let cur = series.coeff(&beta);
            series.set_coeff(beta, cur + acc);
            return;
        }
        for (k, part) in vertex_parts[i].iter().enumerate() {
            // exponent contributed by vertex i against itself and all
            // earlier vertices
            let mut e = quiver.multiplicity(i, i) as u64 * pair(part, part);
            for (h, &hk) in chosen.iter().enumerate() {
                e += quiver.multiplicity(h, i) as u64 * pair(&vertex_parts[h][hk], part);
            }
            let term = (acc.clone() * part.b_inv.clone()).mul_poly(&QPoly::power(e as usize));
            chosen.push(k);
            rec(quiver, vertex_parts, chosen, term, series);
            chosen.pop();
        }
    }

    rec(
        quiver,
        &vertex_parts,
        &mut chosen,
        QFrac::one(),
        &mut series,
    );
    series
}

/// Coefficients of the partition series up to `bound`, as canonical rational
/// functions.  The constant coefficient is one.
pub fn hua_series(quiver: &Quiver, bound: &DimVector) -> TruncSeries<RatFunc> {
    partition_series(quiver, bound.as_slice()).map(QFrac::to_ratfunc)
}

fn log_series(quiver: &Quiver, bound: &[u32]) -> TruncSeries<QFrac> {
    partition_series(quiver, bound)
        .log()
        .expect("partition series has constant term 1")
}

/// `gcd(alpha)` times the coefficient of `T^alpha` in the logarithm of the
/// partition series.
pub fn hua_h(quiver: &Quiver, alpha: &DimVector) -> RatFunc {
    let lg = log_series(quiver, alpha.as_slice());
    lg.coeff(alpha.as_slice())
        .scale(&rat(alpha.gcd() as i64))
        .to_ratfunc()
}

/// The Kac polynomial `A(alpha, q)`: Moebius inversion over `q -> q^d`
/// rescalings of the logarithm coefficients, times `q - 1`.
///
/// Fails with an integrality error when the result is not a polynomial with
/// integer coefficients, which would indicate a bug, never bad input.
pub fn kac_polynomial(quiver: &Quiver, alpha: &DimVector) -> Result<QPoly> {
    let lg = log_series(quiver, alpha.as_slice());
    let abar = alpha.gcd();
    let mut acc = QFrac::zero();
    for d in divisors(abar as u64) {
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let beta = alpha.divided_by(d as u32);
        let c = lg.coeff(beta.as_slice());
        if c.is_zero() {
            continue;
        }
        // mu(d)/d * coefficient, rescaled q -> q^d; summing over divisors
        // and multiplying by (q-1) yields A directly
        acc = acc + c.substitute_power(d).scale(&(rat(mu) / rat(d as i64)));
    }
    let a = acc.mul_poly(&QPoly::from_ints(&[-1, 1])).to_ratfunc();
    let poly = a.to_polynomial().ok_or_else(|| Error::Integrality {
        context: "kac_polynomial".into(),
        detail: format!("residual denominator {}", a.den().render("q")),
    })?;
    if !poly.is_integral() {
        return Err(Error::Integrality {
            context: "kac_polynomial".into(),
            detail: format!("non-integer coefficients in {}", poly.render("q")),
        });
    }
    Ok(poly)
}

/// Value of the `s`-th `q`-derivative of the Kac polynomial at `q = 1`.
pub fn kac_derivative_at_one(quiver: &Quiver, alpha: &DimVector, s: u64) -> Result<BigRational> {
    Ok(kac_polynomial(quiver, alpha)?.taylor_at_one(s))
}

/// Degree the Kac polynomial attains when nonzero:
/// `1 - sum alpha_i^2 + sum_{i<j} g_ij alpha_i alpha_j + sum_i g_ii alpha_i^2`.
pub fn expected_degree(quiver: &Quiver, alpha: &DimVector) -> i64 {
    let n = quiver.n();
    let mut deg = 1i64;
    for i in 0..n {
        let a = alpha.get(i) as i64;
        deg -= a * a;
        deg += quiver.multiplicity(i, i) as i64 * a * a;
        for j in (i + 1)..n {
            deg += quiver.multiplicity(i, j) as i64 * a * alpha.get(j) as i64;
        }
    }
    deg
}
