//! Connected labeled graphs counted by class-refined edge profile.
//!
//! The vertex set splits into classes of sizes `l_1, ..., l_n`; an edge
//! profile `k` records how many edges join class `i` to class `j` (entry
//! `k_ii` counts edges inside class `i`).  Graphs are simple and loop-free,
//! so cross pairs contribute capacity `l_i l_j` and intra pairs `C(l_i, 2)`.
//!
//! The generating polynomial of all graphs on a fixed vertex split is the
//! finite product `prod (1 + x_ij)^capacity`; packaging those over all
//! splits into an exponential generating series and taking its logarithm
//! isolates the connected counts.  A subset-enumeration oracle and a
//! set-partition check of the exponential formula itself keep the series
//! route honest.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::multi::{box_points, multi_factorial, weight};
use crate::quiver::{pair_count, pair_index, DimVector};
use crate::ring::{binomial, is_count, Coeff};
use crate::series::TruncSeries;

/// Connected-graph counts for one vertex split, indexed by edge profile.
/// Only nonzero counts are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCountTable {
    ell: Vec<u32>,
    budget: u32,
    counts: BTreeMap<Vec<u32>, BigInt>,
}

impl GraphCountTable {
    fn new(ell: Vec<u32>, budget: u32, counts: BTreeMap<Vec<u32>, BigInt>) -> Self {
        let n = ell.len();
        let total: u32 = ell.iter().sum();
        for (k, c) in &counts {
            assert!(!c.is_zero());
            assert!(
                weight(k) + 1 >= total,
                "count stored below the connectivity threshold at {k:?}"
            );
            for (i, j) in crate::quiver::pairs(n) {
                let cap = edge_capacity(&ell, i, j);
                assert!(
                    k[pair_index(n, i, j)] as i64 <= cap,
                    "count stored beyond simple-graph capacity at {k:?}"
                );
            }
        }
        GraphCountTable { ell, budget, counts }
    }

    pub fn ell(&self) -> &[u32] {
        &self.ell
    }

    pub fn budget(&self) -> u32 {
        self.budget
    }

    /// `G_k` for this split; zero when absent.
    pub fn count(&self, k: &[u32]) -> BigInt {
        self.counts.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.counts
    }
}

fn edge_capacity(ell: &[u32], i: usize, j: usize) -> i64 {
    if i == j {
        binomial(ell[i] as i64, 2).try_into().unwrap_or(i64::MAX)
    } else {
        ell[i] as i64 * ell[j] as i64
    }
}

fn all_graphs_slice(ell: &[u32], budget: u32) -> MPoly {
    let n = ell.len();
    let mut p = MPoly::one();
    for (i, j) in crate::quiver::pairs(n) {
        let cap = edge_capacity(ell, i, j);
        let v = pair_index(n, i, j);
        let mut factor = MPoly::zero();
        for t in 0..=cap.min(budget as i64) {
            let mut e = vec![0u32; v + 1];
            e[v] = t as u32;
            factor = factor + MPoly::monomial(e, BigRational::from_integer(binomial(cap, t)));
        }
        p = (p * factor).truncate_total_degree(budget);
    }
    p
}

/// `prod_{i<j} (1 + x_ij)^(l_i l_j) * prod_i (1 + x_ii)^C(l_i,2)`, truncated
/// to total degree `budget`: the edge-profile generating polynomial of all
/// simple graphs on the split `ell`.
pub fn all_graphs_generating_polynomial(ell: &DimVector, budget: u32) -> MPoly {
    all_graphs_slice(ell.as_slice(), budget)
}

/// Counts of connected graphs on the split `ell` for every profile of
/// weight at most `budget`, extracted from the logarithm of the exponential
/// generating series of `all_graphs_generating_polynomial`.
pub fn connected_counts(ell: &DimVector, budget: u32) -> GraphCountTable {
    let series = TruncSeries::from_fn(ell.as_slice().to_vec(), |m| {
        let inv = BigRational::from_integer(multi_factorial(m)).recip();
        all_graphs_slice(m, budget).scale(&inv)
    });
    let lg = series.log().expect("graph series has constant term 1");
    let scaled = lg
        .coeff(ell.as_slice())
        .truncate_total_degree(budget)
        .scale(&BigRational::from_integer(multi_factorial(ell.as_slice())));

    let n = ell.len();
    let mut counts = BTreeMap::new();
    for (k, c) in scaled.terms_padded(pair_count(n)) {
        assert!(is_count(&c), "connected count at {k:?} is {c}, not a count");
        counts.insert(k, c.to_integer());
    }
    GraphCountTable::new(ell.as_slice().to_vec(), budget, counts)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Independent oracle: enumerates every edge subset, keeps the connected
/// ones, and tallies by profile.  Guarded by the total pair count.
pub fn connected_counts_bruteforce(ell: &DimVector, budget: u32) -> Result<GraphCountTable> {
    const LIMIT: usize = 24;
    let n = ell.len();
    let total: u32 = ell.as_slice().iter().sum();

    // vertex v belongs to the class whose size range contains it
    let mut class = Vec::with_capacity(total as usize);
    for (i, &li) in ell.as_slice().iter().enumerate() {
        class.extend(std::iter::repeat(i).take(li as usize));
    }

    let mut edges = Vec::new();
    for u in 0..total as usize {
        for v in (u + 1)..total as usize {
            edges.push((u, v, pair_index(n, class[u].min(class[v]), class[u].max(class[v]))));
        }
    }
    if edges.len() > LIMIT {
        return Err(Error::BruteForceTooLarge {
            edges: edges.len() as u64,
            limit: LIMIT as u64,
        });
    }

    let mut counts: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for mask in 0u64..(1u64 << edges.len()) {
        if (mask.count_ones() as u32) > budget {
            continue;
        }
        let mut dsu = Dsu::new(total as usize);
        let mut profile = vec![0u32; pair_count(n)];
        for (b, &(u, v, slot)) in edges.iter().enumerate() {
            if mask >> b & 1 == 1 {
                dsu.union(u, v);
                profile[slot] += 1;
            }
        }
        let connected = (1..total as usize).all(|v| dsu.find(v) == dsu.find(0));
        if connected {
            *counts.entry(profile).or_insert_with(BigInt::zero) += 1;
        }
    }
    Ok(GraphCountTable::new(
        ell.as_slice().to_vec(),
        budget,
        counts,
    ))
}

/// Number of connected simple graphs on `alpha` labeled vertices with
/// exactly `alpha - 1` edges: the labeled trees.
pub fn tree_count(alpha: u32) -> BigInt {
    connected_counts(&DimVector::single(alpha), alpha.saturating_sub(1))
        .count(&[alpha.saturating_sub(1)])
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(previous)
    let mut out = Vec::new();
    let mut a = vec![0usize; n];
    fn rec(a: &mut Vec<usize>, i: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == a.len() {
            out.push(a.clone());
            return;
        }
        for v in 0..=max + 1 {
            a[i] = v;
            rec(a, i + 1, max.max(v), out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(&mut a, 1, 0, &mut out);
    out
}

/// Verifies the multivariate exponential formula for the weight function
/// `f`: the series exponential of `sum f(m) X^m / m!` must match the
/// set-partition sum `g(m) = sum over partitions of prod f(block profile)`
/// coefficient for coefficient, for every profile `m <= bound`.
pub fn exponential_formula_check<C: Coeff>(
    f: &dyn Fn(&[u32]) -> C,
    bound: &DimVector,
) -> Result<bool> {
    const LIMIT: u32 = 8;
    let total = bound.weight();
    if total > LIMIT {
        return Err(Error::GroundSetTooLarge {
            size: total as u64,
            limit: LIMIT as u64,
        });
    }
    let n = bound.len();

    let ef = TruncSeries::from_fn(bound.as_slice().to_vec(), |m| {
        if weight(m) == 0 {
            C::zero()
        } else {
            let inv = BigRational::from_integer(multi_factorial(m)).recip();
            f(m).scale(&inv)
        }
    });
    let via_exp = ef.exp()?;

    for m in box_points(bound.as_slice()) {
        let mut ground = Vec::new();
        for (i, &mi) in m.iter().enumerate() {
            ground.extend(std::iter::repeat(i).take(mi as usize));
        }
        let mut g = C::zero();
        for assignment in set_partitions(ground.len()) {
            let blocks = assignment.iter().max().map_or(0, |&b| b + 1);
            let mut profiles = vec![vec![0u32; n]; blocks];
            for (elem, &b) in assignment.iter().enumerate() {
                profiles[b][ground[elem]] += 1;
            }
            let mut prod = C::one();
            for p in &profiles {
                prod = prod * f(p);
            }
            g = g + prod;
        }
        let inv = BigRational::from_integer(multi_factorial(&m)).recip();
        if via_exp.coeff(&m) != g.scale(&inv) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn dv(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generating_polynomial_smallest_cases() {
        assert_eq!(all_graphs_generating_polynomial(&dv(&[1]), 3), MPoly::one());
        let two = all_graphs_generating_polynomial(&dv(&[2]), 1);
        assert_eq!(two, MPoly::one() + MPoly::var(0));
        let cross = all_graphs_generating_polynomial(&dv(&[1, 1]), 1);
        assert_eq!(cross, MPoly::one() + MPoly::var(1));
    }

    #[test]
    fn generating_polynomial_counts_all_graphs() {
        // coefficients of (1+x)^C(4,2) count graphs on 4 vertices by size
        let p = all_graphs_generating_polynomial(&dv(&[4]), 6);
        for t in 0..=6 {
            assert_eq!(p.coeff(&[t]), rat(binomial(6, t as i64).try_into().unwrap()));
        }
    }

    #[test]
    fn connected_triangle_counts_by_hand() {
        let table = connected_counts(&dv(&[3]), 3);
        assert_eq!(table.count(&[2]), int(3));
        assert_eq!(table.count(&[3]), int(1));
        assert_eq!(table.count(&[0]), int(0));
        assert_eq!(table.count(&[1]), int(0));
    }

    #[test]
    fn connected_single_cross_edge() {
        let table = connected_counts(&dv(&[1, 1]), 2);
        assert_eq!(table.count(&[0, 1, 0]), int(1));
        assert_eq!(table.entries().len(), 1);
    }

    #[test]
    fn vanishing_below_spanning_threshold() {
        for ell in [dv(&[2]), dv(&[3]), dv(&[2, 2])] {
            let budget = ell.weight() + 1;
            let table = connected_counts(&ell, budget);
            for (k, _) in table.entries() {
                assert!(weight(k) >= ell.weight() - 1);
            }
        }
    }

    #[test]
    fn cayley_tree_counts() {
        let expect = [1i64, 1, 1, 3, 16, 125, 1296, 16807];
        for alpha in 1..=7u32 {
            assert_eq!(tree_count(alpha), int(expect[alpha as usize]), "alpha={alpha}");
        }
    }

    #[test]
    fn bruteforce_matches_series_route() {
        for ell in [dv(&[4]), dv(&[2, 1]), dv(&[1, 1, 2]), dv(&[2, 2])] {
            let budget = ell.weight() + 2;
            let fast = connected_counts(&ell, budget);
            let slow = connected_counts_bruteforce(&ell, budget).unwrap();
            assert_eq!(fast, slow, "ell={:?}", ell);
        }
    }

    #[test]
    fn bruteforce_handles_empty_classes() {
        let with_empty = connected_counts_bruteforce(&dv(&[2, 0]), 2).unwrap();
        assert_eq!(with_empty.count(&[1, 0, 0]), int(1));
        assert_eq!(with_empty.entries().len(), 1);
    }

    #[test]
    fn bruteforce_guard_trips() {
        // C(8,2) = 28 pairs exceeds the enumeration budget
        let err = connected_counts_bruteforce(&dv(&[8]), 3).unwrap_err();
        assert!(matches!(err, Error::BruteForceTooLarge { edges: 28, .. }));
    }

    #[test]
    fn class_permutation_equivariance() {
        let a = connected_counts(&dv(&[2, 1]), 3);
        let b = connected_counts(&dv(&[1, 2]), 3);
        // swap classes: profile (k11, k12, k22) becomes (k22, k12, k11)
        for (k, c) in a.entries() {
            assert_eq!(&b.count(&[k[2], k[1], k[0]]), c);
        }
        assert_eq!(a.entries().len(), b.entries().len());
    }

    #[test]
    fn capacity_upper_bound() {
        let ell = dv(&[3, 2]);
        let table = connected_counts(&ell, 5);
        for (k, c) in table.entries() {
            let mut cap = int(1);
            for (i, j) in crate::quiver::pairs(2) {
                let slots = edge_capacity(ell.as_slice(), i, j);
                cap *= binomial(slots, k[pair_index(2, i, j)] as i64);
            }
            assert!(c <= &cap, "k={k:?}");
        }
    }

    #[test]
    fn partition_count_is_bell() {
        assert_eq!(set_partitions(0).len(), 1);
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(5).len(), 52);
    }

    #[test]
    fn exponential_formula_constant_weight() {
        // f = 1 makes g the Bell numbers; the check exercises exactly that
        let f = |_: &[u32]| rat(1);
        assert!(exponential_formula_check(&f, &dv(&[5])).unwrap());
        assert!(exponential_formula_check(&f, &dv(&[2, 2])).unwrap());
    }

    #[test]
    fn exponential_formula_zero_weight() {
        let f = |_: &[u32]| BigRational::zero();
        assert!(exponential_formula_check(&f, &dv(&[3])).unwrap());
    }

    #[test]
    fn exponential_formula_connected_graph_weights() {
        // f = connected-graph count by size; partitions assemble all graphs
        let f = |m: &[u32]| {
            let total = weight(m);
            if total == 0 {
                return rat(0);
            }
            let table = connected_counts(
                &DimVector::new(m.to_vec()).unwrap(),
                total * (total.saturating_sub(1)) / 2,
            );
            let mut acc = BigRational::zero();
            for (_, c) in table.entries() {
                acc = acc + BigRational::from_integer(c.clone());
            }
            acc
        };
        assert!(exponential_formula_check(&f, &dv(&[4])).unwrap());
    }

    #[test]
    fn exponential_formula_guard() {
        let f = |_: &[u32]| rat(1);
        let err = exponential_formula_check(&f, &dv(&[9])).unwrap_err();
        assert!(matches!(err, Error::GroundSetTooLarge { .. }));
    }
}
