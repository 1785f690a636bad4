//! Reference rankings used to cross-check the codec. They share no code with
//! [`crate::factoradic`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factoradic::PermutationCode;
use crate::Natural;

/// Largest `n` for which [`brute_force_rank`] enumerates.
pub const BRUTE_FORCE_MAX_LEN: usize = 8;

/// Position of `code` among all permutations of `0..n` listed in lexicographic
/// order, found by stepping through the list one permutation at a time.
pub fn brute_force_rank(code: &PermutationCode) -> Result<Natural> {
    let n = code.len();
    if n > BRUTE_FORCE_MAX_LEN {
        return Err(Error::NotAPermutation { len: n, reason: format!("enumeration is limited to {BRUTE_FORCE_MAX_LEN} entries") });
    }
    let mut current: Vec<usize> = (0..n).collect();
    let mut rank = 0u64;
    loop {
        if current == code.as_slice() {
            return Ok(BigUint::from(rank));
        }
        if !next_permutation(&mut current) {
            unreachable!("every permutation of 0..n occurs in the enumeration");
        }
        rank += 1;
    }
}

/// Lexicographic successor in place; false once `v` is the last permutation.
pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(pivot) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let swap = v.iter().rposition(|&x| x > v[pivot]).expect("pivot has a larger successor");
    v.swap(pivot, swap);
    v[pivot + 1..].reverse();
    true
}

/// Lexicographic rank from inversion counts: entry `k` contributes
/// `#{j > k : q[j] < q[k]} * (n-1-k)!`.
pub fn inversion_rank(code: &PermutationCode) -> Natural {
    let q = code.as_slice();
    let n = q.len();
    let mut weight = BigUint::one();
    let mut total = BigUint::zero();
    for k in (0..n).rev() {
        let smaller_after = q[k + 1..].iter().filter(|&&x| x < q[k]).count();
        total += &weight * smaller_after;
        weight *= n - k;
    }
    total
}
