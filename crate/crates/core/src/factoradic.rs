//! The bijection between naturals below `n!` and permutations of `0..n`.
//!
//! Encoding repeatedly divides the residual by the next lower factorial; the
//! quotient `d_i` picks (and removes) an entry of the remaining list `r`, and
//! the remainder carries on. Decoding looks each entry of the code back up in
//! the remaining list and sums `d_i * (i-1)!`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Natural;

/// A permutation of `0..n`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationCode(Vec<usize>);

impl PermutationCode {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let len = indices.len();
        if len == 0 {
            return Err(Error::NotAPermutation { len, reason: "empty list".into() });
        }
        let mut seen = vec![false; len];
        for &v in &indices {
            if v >= len {
                return Err(Error::NotAPermutation { len, reason: format!("{v} is out of range") });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation { len, reason: format!("{v} appears twice") });
            }
        }
        Ok(Self(indices))
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation codes have at least one entry");
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for PermutationCode {
    /// `[i0,i1,...]` with no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for PermutationCode {
    type Err = Error;

    /// Accepts `[3,1,0,2]`, tolerating whitespace around the brackets and entries.
    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |message: String| Error::Parse { line: 1, message };
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| parse_err(format!("expected a bracketed list, got {:?}", text.trim())))?;
        if inner.trim().is_empty() {
            return Err(parse_err("empty list".into()));
        }
        let raw = inner
            .split(',')
            .map(|item| {
                let item = item.trim();
                item.parse::<i64>()
                    .map_err(|_| parse_err(format!("{item:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let len = raw.len();
        let indices = raw
            .into_iter()
            .map(|v| {
                usize::try_from(v)
                    .map_err(|_| Error::NotAPermutation { len, reason: format!("{v} is negative") })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(indices)
    }
}

/// Smallest `n >= 1` with `n! > s`.
pub fn min_factorial_length(s: &Natural) -> usize {
    let mut n = 1usize;
    let mut fact = BigUint::one();
    while &fact <= s {
        n += 1;
        fact *= n;
    }
    n
}

/// `[0!, 1!, ..., (n-1)!]`.
pub fn factorial_table(n: usize) -> Vec<Natural> {
    assert!(n >= 1, "factorial table needs n >= 1");
    let mut table = Vec::with_capacity(n);
    table.push(BigUint::one());
    for k in 1..n {
        let next = &table[k - 1] * k;
        table.push(next);
    }
    table
}

/// `n!`.
pub fn factorial(n: usize) -> Natural {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// One iteration of the encoding loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeStep {
    /// `i`, the number of entries still in `r` before this step.
    pub remaining: usize,
    /// `s_i`, the residual entering this step.
    pub residual: Natural,
    /// `d_i = floor(s_i / (i-1)!)`, the index taken from `r`.
    pub digit: usize,
}

/// Full record of an encoding run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeTrace {
    pub steps: Vec<EncodeStep>,
    /// `s_0`, the residual after the last step.
    pub final_residual: Natural,
}

/// Encodes `s` as a permutation of `0..n`, with `r` starting in ascending order.
///
/// `n` may exceed [`min_factorial_length`]; the extra leading digits are zero,
/// so the code starts with the prefix `0, 1, 2, ...`.
pub fn encode_permutation(s: &Natural, n: usize) -> Result<PermutationCode> {
    if n == 0 {
        return Err(Error::CapacityExceeded { n });
    }
    encode_with_baseline(s, &PermutationCode::identity(n))
}

/// Encodes `s` with `r` initialised to `baseline` instead of `0..n`.
pub fn encode_with_baseline(s: &Natural, baseline: &PermutationCode) -> Result<PermutationCode> {
    let (code, residual) = run_encoder(s, baseline, None)?;
    assert!(residual.is_zero(), "residual {residual} left after the last step");
    Ok(code)
}

/// Like [`encode_with_baseline`], also returning every intermediate `s_i` and `d_i`.
pub fn encode_traced(s: &Natural, baseline: &PermutationCode) -> Result<(PermutationCode, EncodeTrace)> {
    let mut steps = Vec::with_capacity(baseline.len());
    let (code, final_residual) = run_encoder(s, baseline, Some(&mut steps))?;
    Ok((code, EncodeTrace { steps, final_residual }))
}

fn run_encoder(
    s: &Natural,
    baseline: &PermutationCode,
    mut trace: Option<&mut Vec<EncodeStep>>,
) -> Result<(PermutationCode, Natural)> {
    let n = baseline.len();
    let factorials = factorial_table(n);
    if s >= &(&factorials[n - 1] * n) {
        return Err(Error::CapacityExceeded { n });
    }
    let mut remaining = baseline.as_slice().to_vec();
    let mut residual = s.clone();
    let mut out = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        let (quotient, next) = residual.div_rem(&factorials[i - 1]);
        let digit = quotient.to_usize().filter(|&d| d < i);
        let digit = digit.unwrap_or_else(|| panic!("digit {quotient} out of range for {i} remaining entries"));
        if let Some(steps) = trace.as_deref_mut() {
            steps.push(EncodeStep { remaining: i, residual: residual.clone(), digit });
        }
        out.push(remaining.remove(digit));
        residual = next;
    }
    Ok((PermutationCode(out), residual))
}

/// Decodes a code produced against the ascending baseline `0..n`.
pub fn decode_permutation(code: &PermutationCode) -> Natural {
    decode_with_baseline(code, &PermutationCode::identity(code.len())).expect("lengths match")
}

/// Decodes `code` with `r` initialised to `baseline`.
pub fn decode_with_baseline(code: &PermutationCode, baseline: &PermutationCode) -> Result<Natural> {
    let n = code.len();
    if baseline.len() != n {
        return Err(Error::LengthMismatch { expected: baseline.len(), found: n });
    }
    let factorials = factorial_table(n);
    let mut remaining = baseline.as_slice().to_vec();
    let mut total = BigUint::zero();
    for (pos, item) in code.as_slice().iter().enumerate() {
        let j = remaining
            .iter()
            .position(|v| v == item)
            .expect("both lists are permutations of 0..n");
        total += &factorials[n - 1 - pos] * j;
        remaining.remove(j);
    }
    Ok(total)
}
