//! Monte-Carlo measurements of how much information the channel carries.
//!
//! Every sample draws from its own generator, keyed by `(seed, stream, index)`,
//! and histograms merge by integer addition, so results do not depend on how
//! the work is split across threads.

use std::io;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::factoradic::{self, factorial};
use crate::radix;
use crate::Natural;

/// `log2(n!)`, summed term by term.
pub fn channel_capacity_bits(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).log2()).sum()
}

/// Stirling's estimate `n log2 n - n log2 e` of [`channel_capacity_bits`].
pub fn stirling_capacity_bits(n: usize) -> f64 {
    let n = n as f64;
    n * n.log2() - n * std::f64::consts::LOG2_E
}

/// Shannon entropy in bits of a histogram; empty bins contribute nothing.
pub fn shannon_entropy(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.log2()
        })
        .sum::<f64>()
        .max(0.0)
}

/// Generator for one sample. Streams separate experiments, the index separates samples.
pub fn sample_rng(seed: u64, stream: u32, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(stream) << 40) | index);
    rng
}

/// Uniform draw from `0..bound` by rejection on `bound`'s bit width.
pub fn uniform_below<R: RngCore + ?Sized>(bound: &Natural, rng: &mut R) -> Natural {
    assert!(bound.bits() > 0, "bound must be positive");
    let bits = bound.bits();
    let words = bits.div_ceil(32) as usize;
    let top_mask = match bits % 32 {
        0 => u32::MAX,
        r => (1u32 << r) - 1,
    };
    let mut digits = vec![0u32; words];
    loop {
        rng.fill(&mut digits[..]);
        digits[words - 1] &= top_mask;
        let candidate = BigUint::from_slice(&digits);
        if &candidate < bound {
            return candidate;
        }
    }
}

/// Per-position histograms summed over `samples` indices.
fn histogram<F>(n: usize, samples: u64, per_sample: F) -> Vec<Vec<u64>>
where
    F: Fn(u64) -> Vec<usize> + Sync,
{
    let empty = || vec![vec![0u64; n]; n];
    let add = |mut acc: Vec<Vec<u64>>, code: Vec<usize>| {
        for (pos, &item) in code.iter().enumerate() {
            acc[pos][item] += 1;
        }
        acc
    };
    let merge = |mut a: Vec<Vec<u64>>, b: Vec<Vec<u64>>| {
        for (row_a, row_b) in a.iter_mut().zip(b) {
            for (x, y) in row_a.iter_mut().zip(row_b) {
                *x += y;
            }
        }
        a
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..samples)
            .into_par_iter()
            .fold(empty, |acc, i| add(acc, per_sample(i)))
            .reduce(empty, merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = merge;
        (0..samples).fold(empty(), |acc, i| add(acc, per_sample(i)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositionEntropyTable {
    pub n: usize,
    /// Entropy in bits of the element found at each position.
    pub entropy_bits: Vec<f64>,
    /// `counts[position][element]`.
    pub counts: Vec<Vec<u64>>,
    pub samples: u64,
    pub seed: u64,
}

impl PositionEntropyTable {
    pub fn total_bits(&self) -> f64 {
        self.entropy_bits.iter().sum()
    }

    /// `n log2 n`, the total for a channel with uniform positions.
    pub fn max_bits(&self) -> f64 {
        let n = self.n as f64;
        n * n.log2()
    }
}

/// Samples values that need exactly `n` items (`(n-1)! <= s < n!` for `n >= 2`), encodes
/// them, and measures the entropy of the element at each position.
pub fn estimate_position_entropy(n: usize, samples: u64, seed: u64) -> PositionEntropyTable {
    assert!(n >= 1 && samples >= 1, "need n >= 1 and at least one sample");
    // s = 0 is the only value needing a single item; 0! = 1! leaves no room otherwise.
    let low = if n == 1 { Natural::from(0u32) } else { factorial(n - 1) };
    let width = factorial(n) - &low;
    let counts = histogram(n, samples, |i| {
        let mut rng = sample_rng(seed, n as u32, i);
        let s = &low + uniform_below(&width, &mut rng);
        factoradic::encode_permutation(&s, n)
            .expect("s < n! by construction")
            .into_inner()
    });
    let entropy_bits = counts.iter().map(|row| shannon_entropy(row)).collect();
    PositionEntropyTable { n, entropy_bits, counts, samples, seed }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TotalEntropyRow {
    pub n: usize,
    pub total_bits: f64,
    pub max_bits: f64,
}

impl TotalEntropyRow {
    pub fn deficit(&self) -> f64 {
        self.max_bits - self.total_bits
    }
}

pub fn total_entropy_report(lengths: RangeInclusive<usize>, samples: u64, seed: u64) -> Vec<TotalEntropyRow> {
    lengths
        .map(|n| {
            let table = estimate_position_entropy(n, samples, seed);
            TotalEntropyRow { n, total_bits: table.total_bits(), max_bits: table.max_bits() }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingRecord {
    /// Message length in symbols.
    pub length: usize,
    pub mean_items: f64,
    /// Half-width of the normal-approximation 95% interval around `mean_items`.
    pub ci95_halfwidth: f64,
    pub max_items: usize,
    pub samples: u64,
}

/// For each message length, samples messages with i.i.d. uniform symbols and
/// records the minimal permutation length needed to carry them.
pub fn message_length_scaling(
    lengths: RangeInclusive<usize>,
    alphabet: &Alphabet,
    samples: u64,
    seed: u64,
) -> Vec<ScalingRecord> {
    assert!(samples >= 1, "need at least one sample");
    lengths
        .map(|length| {
            let item_count = |i: u64| {
                let mut rng = sample_rng(seed, length as u32, i);
                let message: String = (0..length)
                    .map(|_| alphabet.symbols()[rng.gen_range(0..alphabet.base())])
                    .collect();
                let s = radix::message_to_natural(&message, alphabet).expect("symbols come from the alphabet");
                factoradic::min_factorial_length(&s)
            };
            #[cfg(feature = "parallel")]
            let items: Vec<usize> = {
                use rayon::prelude::*;
                (0..samples).into_par_iter().map(item_count).collect()
            };
            #[cfg(not(feature = "parallel"))]
            let items: Vec<usize> = (0..samples).map(item_count).collect();
            summarize(length, &items)
        })
        .collect()
}

fn summarize(length: usize, items: &[usize]) -> ScalingRecord {
    let count = items.len() as u64;
    let sum: u64 = items.iter().map(|&x| x as u64).sum();
    let sum_sq: u64 = items.iter().map(|&x| (x as u64) * (x as u64)).sum();
    let mean = sum as f64 / count as f64;
    let ci95_halfwidth = if count > 1 {
        let n = count as f64;
        let variance = ((sum_sq as f64 - (sum as f64) * (sum as f64) / n) / (n - 1.0)).max(0.0);
        1.96 * (variance / n).sqrt()
    } else {
        0.0
    };
    ScalingRecord {
        length,
        mean_items: mean,
        ci95_halfwidth,
        max_items: items.iter().copied().max().unwrap_or(1),
        samples: count,
    }
}

/// Mean minimal permutation length over `words`, each encoded with the sentinel appended.
pub fn mean_code_length<'a, I>(words: I, alphabet: &Alphabet) -> Result<f64>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut total = 0usize;
    let mut count = 0usize;
    for word in words {
        let s = radix::message_to_natural(&radix::append_sentinel(word, alphabet), alphabet)?;
        total += factoradic::min_factorial_length(&s);
        count += 1;
    }
    Ok(if count == 0 { 0.0 } else { total as f64 / count as f64 })
}

pub fn write_position_entropy_csv<W: io::Write>(out: W, tables: &[PositionEntropyTable]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "position", "entropy_bits"])?;
    for table in tables {
        for (pos, h) in table.entropy_bits.iter().enumerate() {
            w.write_record([table.n.to_string(), pos.to_string(), format!("{h:.6}")])?;
        }
    }
    w.flush()
}

pub fn write_total_entropy_csv<W: io::Write>(out: W, rows: &[TotalEntropyRow]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "total_bits", "max_bits"])?;
    for row in rows {
        w.write_record([row.n.to_string(), format!("{:.6}", row.total_bits), format!("{:.6}", row.max_bits)])?;
    }
    w.flush()
}

pub fn write_scaling_csv<W: io::Write>(out: W, records: &[ScalingRecord]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["L", "mean_items", "ci95_halfwidth"])?;
    for r in records {
        w.write_record([r.length.to_string(), format!("{:.6}", r.mean_items), format!("{:.6}", r.ci95_halfwidth)])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity() {
        assert_eq!(channel_capacity_bits(1), 0.0);
        assert!((channel_capacity_bits(10) - 21.79).abs() <= 0.01);
        assert!((channel_capacity_bits(100) - 524.76).abs() <= 0.1);
        for n in 2..=200 {
            let gap = (channel_capacity_bits(n) - stirling_capacity_bits(n)).abs();
            assert!(gap <= 2.0 * (n as f64).log2() + 4.0, "n = {n}, gap = {gap}");
        }
    }

    #[test]
    fn entropy_of_histograms() {
        assert_eq!(shannon_entropy(&[]), 0.0);
        assert_eq!(shannon_entropy(&[0, 7, 0]), 0.0);
        assert!((shannon_entropy(&[5, 5]) - 1.0).abs() < 1e-12);
        assert!((shannon_entropy(&[1, 1, 1, 1]) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn uniform_draws_stay_in_range() {
        let mut rng = sample_rng(3, 0, 0);
        let bound = Natural::from(5u32);
        let mut seen = [0u32; 5];
        for _ in 0..5000 {
            let v: usize = uniform_below(&bound, &mut rng).try_into().unwrap();
            seen[v] += 1;
        }
        assert!(seen.iter().all(|&c| (850..1150).contains(&c)), "{seen:?}");
        let big = factorial(30);
        for _ in 0..200 {
            assert!(uniform_below(&big, &mut rng) < big);
        }
        assert_eq!(uniform_below(&Natural::from(1u32), &mut rng), Natural::from(0u32));
    }

    #[test]
    fn degenerate_lengths() {
        assert_eq!(estimate_position_entropy(1, 100, 1).entropy_bits, vec![0.0]);
        assert_eq!(estimate_position_entropy(2, 100, 1).entropy_bits, vec![0.0, 0.0]);
        let rows = total_entropy_report(1..=2, 50, 1);
        assert_eq!((rows[0].total_bits, rows[0].max_bits), (0.0, 0.0));
        assert_eq!((rows[1].total_bits, rows[1].max_bits), (0.0, 2.0));
    }

    #[test]
    fn position_entropy_properties() {
        for n in 3..=7 {
            let t = estimate_position_entropy(n, 4000, 11);
            assert_eq!(t.counts[0][0], 0);
            for h in &t.entropy_bits {
                assert!(*h >= 0.0 && *h <= (n as f64).log2() + 1e-12);
            }
            assert!(t.entropy_bits[0] <= ((n - 1) as f64).log2() + 1e-12);
            assert!(t.total_bits() <= t.max_bits() + 1e-9);
        }
    }

    #[test]
    fn reproducible() {
        assert_eq!(estimate_position_entropy(6, 3000, 5), estimate_position_entropy(6, 3000, 5));
        let a = Alphabet::latin();
        assert_eq!(message_length_scaling(1..=4, &a, 300, 2), message_length_scaling(1..=4, &a, 300, 2));
    }

    #[test]
    fn scaling_records() {
        let a = Alphabet::latin();
        let recs = message_length_scaling(0..=6, &a, 500, 9);
        assert_eq!(recs[0].mean_items, 1.0);
        assert_eq!(recs[0].ci95_halfwidth, 0.0);
        for r in &recs {
            let bound = factoradic::min_factorial_length(&(BigUint::from(27u32).pow(r.length as u32) - 1u32));
            assert!(r.max_items <= bound);
            assert!(r.mean_items >= 1.0 && r.ci95_halfwidth >= 0.0);
        }
        assert_eq!(summarize(3, &[4]).ci95_halfwidth, 0.0);
        let s = summarize(3, &[2, 4]);
        assert_eq!(s.mean_items, 3.0);
        assert!((s.ci95_halfwidth - 1.96).abs() < 1e-12);
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_total_entropy_csv(&mut buf, &[TotalEntropyRow { n: 2, total_bits: 0.0, max_bits: 2.0 }]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,total_bits,max_bits\n2,0.000000,2.000000\n");
        let mut buf = Vec::new();
        write_scaling_csv(&mut buf, &[summarize(1, &[2, 2])]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "L,mean_items,ci95_halfwidth\n1,2.000000,0.000000\n");
        let mut buf = Vec::new();
        write_position_entropy_csv(&mut buf, &[estimate_position_entropy(1, 1, 0)]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,position,entropy_bits\n1,0,0.000000\n");
    }

    #[test]
    fn word_lengths() {
        let a = Alphabet::latin();
        // "hi" + sentinel: 7 + 8*27 + 1*729 = 952 -> 7 items (6! = 720 <= 952 < 5040).
        assert_eq!(mean_code_length(["hi"], &a).unwrap(), 7.0);
        assert!(mean_code_length(["Hi"], &a).is_err());
    }
}
