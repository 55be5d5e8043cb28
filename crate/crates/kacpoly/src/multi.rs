//! Small multi-index helpers shared by the series, graph and basis modules.

use num_bigint::BigInt;

use crate::ring::factorial;

/// All integer points `0 <= p <= bound` (componentwise), ascending
/// lexicographic order.
pub fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; bound.len()];
    loop {
        out.push(cur.clone());
        // odometer with the last coordinate fastest
        let mut i = bound.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// All length-`parts` vectors of nonnegative integers with the given sum,
/// ascending lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `|v| = sum of entries`.
pub fn weight(v: &[u32]) -> u32 {
    v.iter().sum()
}

/// Componentwise `a <= b`.
pub fn le(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference; caller guarantees `b <= a`.
pub fn sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `v! = prod v_i!`.
pub fn multi_factorial(v: &[u32]) -> BigInt {
    v.iter().map(|&x| factorial(x as u64)).product()
}
