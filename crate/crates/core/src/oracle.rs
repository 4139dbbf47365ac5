//! Brute-force listing of maximal solutions, used as ground truth.

use crate::engine::{Problem, Solution};
use crate::error::{Error, Result};

/// Largest ground set the oracle accepts by default.
pub const DEFAULT_CAP: usize = 16;

/// Every inclusion-maximal solution of `p`, sorted. Only `is_solution` is
/// consulted.
pub fn brute_force_maximal<P: Problem + ?Sized>(p: &P) -> Result<Vec<Solution>> {
    brute_force_maximal_capped(p, DEFAULT_CAP)
}

pub fn brute_force_maximal_capped<P: Problem + ?Sized>(p: &P, cap: usize) -> Result<Vec<Solution>> {
    let n = p.ground_size();
    if n > cap {
        return Err(Error::OracleCap { size: n, cap });
    }
    let total = 1u64 << n;
    let mut good: Vec<u64> = (0..total).filter(|&bits| p.is_solution(&members(bits))).collect();
    // larger sets first, so a set is kept iff no kept set contains it
    good.sort_by_key(|b| std::cmp::Reverse(b.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for bits in good {
        if !maximal.iter().any(|&m| m & bits == bits) {
            maximal.push(bits);
        }
    }
    let mut out: Vec<Solution> = maximal.into_iter().map(members).collect();
    out.sort();
    Ok(out)
}

fn members(bits: u64) -> Vec<usize> {
    (0..64).filter(|i| bits >> i & 1 == 1).collect()
}
