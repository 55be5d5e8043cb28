//! Quivers with multiplicity-labeled edges, dimension vectors, and the
//! shared indexing of unordered vertex pairs.
//!
//! Only the underlying undirected multigraph matters for every quantity this
//! crate computes, so a quiver on `n` vertices is stored as the vector of
//! edge multiplicities `g_ij` over unordered pairs `i <= j` (diagonal entries
//! count loops).  Pairs are ordered lexicographically: for `n = 2` the slots
//! are `(0,0), (0,1), (1,1)`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multi::multi_factorial;
use crate::ring::gcd_all;

/// Number of unordered vertex pairs (with repetition) on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Flat index of the unordered pair `(i, j)`, `i <= j`, zero-based.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i <= j && j < n, "pair ({i}, {j}) out of range for n = {n}");
    // i rows of lengths n, n-1, ... precede row i
    i * (2 * n - i + 1) / 2 + (j - i)
}

/// The pairs `(i, j)` with `i <= j < n` in slot order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in i..n {
            out.push((i, j));
        }
    }
    out
}

/// Dimension vector: one nonnegative entry per vertex, not all zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput(
                "dimension vector must have at least one entry".into(),
            ));
        }
        if entries.iter().all(|&a| a == 0) {
            return Err(Error::InvalidInput(
                "dimension vector must be nonzero".into(),
            ));
        }
        Ok(DimVector(entries))
    }

    /// Single-vertex dimension vector.
    pub fn single(a: u32) -> Self {
        DimVector::new(vec![a]).expect("positive single entry")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|alpha|`, the total dimension.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// gcd of the entries.
    pub fn gcd(&self) -> u32 {
        gcd_all(&self.0)
    }

    /// `alpha / d` for a divisor `d` of every entry.
    pub fn divided_by(&self, d: u32) -> Self {
        assert!(self.0.iter().all(|&a| a % d == 0));
        DimVector(self.0.iter().map(|&a| a / d).collect())
    }

    /// `alpha! = prod alpha_i!`.
    pub fn factorial(&self) -> BigInt {
        multi_factorial(&self.0)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        DimVector(perm.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Vector indexed by unordered vertex pairs: edge multiplicities of a graph
/// or quiver, or a multi-exponent over the pair variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeVector(Vec<u32>);

impl EdgeVector {
    pub fn new(entries: Vec<u32>) -> Self {
        EdgeVector(entries)
    }

    /// Zero vector for `n` vertices.
    pub fn zeros(n: usize) -> Self {
        EdgeVector(vec![0; pair_count(n)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, idx: usize) -> u32 {
        self.0[idx]
    }

    pub fn entry(&self, n: usize, i: usize, j: usize) -> u32 {
        self.0[pair_index(n, i.min(j), i.max(j))]
    }

    /// `|k|`, the total number of edges.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `k! = prod k_ij!`.
    pub fn factorial(&self) -> BigInt {
        multi_factorial(&self.0)
    }

    /// Sum of the diagonal entries `k_ii` for `n` vertices.
    pub fn diagonal_weight(&self, n: usize) -> u32 {
        (0..n).map(|i| self.entry(n, i, i)).sum()
    }
}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Quiver with `g[pair_index(i, j)]` arrows between vertices `i` and `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    g: EdgeVector,
}

impl Quiver {
    pub fn new(n: usize, multiplicities: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("quiver needs at least one vertex".into()));
        }
        if multiplicities.len() != pair_count(n) {
            return Err(Error::InvalidInput(format!(
                "expected {} edge multiplicities for {} vertices, got {}",
                pair_count(n),
                n,
                multiplicities.len()
            )));
        }
        Ok(Quiver {
            n,
            g: EdgeVector::new(multiplicities),
        })
    }

    /// Single vertex with `g` loops.
    pub fn loop_quiver(g: u32) -> Self {
        Quiver::new(1, vec![g]).expect("one vertex, one slot")
    }

    /// Two vertices joined by `m` edges, no loops.
    pub fn kronecker(m: u32) -> Self {
        Quiver::new(2, vec![0, m, 0]).expect("two vertices, three slots")
    }

    pub fn from_edges(n: usize, edges: EdgeVector) -> Result<Self> {
        Quiver::new(n, edges.as_slice().to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &EdgeVector {
        &self.g
    }

    /// Multiplicity between `i` and `j` in either order.
    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.g.entry(self.n, i, j)
    }

    /// Relabels vertices by `perm`: vertex `i` of the result is vertex
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = vec![0; pair_count(self.n)];
        for i in 0..self.n {
            for j in i..self.n {
                g[pair_index(self.n, i, j)] = self.multiplicity(perm[i], perm[j]);
            }
        }
        Quiver {
            n: self.n,
            g: EdgeVector::new(g),
        }
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver(n={}, g={:?})", self.n, self.g)
    }
}
