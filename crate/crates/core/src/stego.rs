//! The steganographic channel: permutation codes applied to visible lists.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::factoradic::{self, PermutationCode};
use crate::radix;

/// An ordered list of distinct display items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverList(Vec<String>);

impl CoverList {
    pub fn new<I, S>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let items: Vec<String> = items.into_iter().map(Into::into).collect();
        if items.is_empty() {
            return Err(Error::LengthMismatch { expected: 1, found: 0 });
        }
        let mut seen = std::collections::HashSet::with_capacity(items.len());
        for item in &items {
            if !seen.insert(item.as_str()) {
                return Err(Error::DuplicateItem(item.clone()));
            }
        }
        Ok(Self(items))
    }

    /// Reads one item per line. Surrounding whitespace is trimmed; blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        )
    }

    /// Items sorted by byte-wise lexicographic order.
    pub fn canonical(&self) -> Self {
        let mut items = self.0.clone();
        items.sort_unstable();
        Self(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn items(&self) -> &[String] {
        &self.0
    }

    /// Reorders the list so that `output[k] = self[code[k]]`.
    pub fn apply_code(&self, code: &PermutationCode) -> Result<Self> {
        if code.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: code.len() });
        }
        Ok(Self(code.as_slice().iter().map(|&k| self.0[k].clone()).collect()))
    }

    /// The code that turns `self` (the baseline) into `observed`.
    pub fn recover_code(&self, observed: &CoverList) -> Result<PermutationCode> {
        if observed.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: observed.len() });
        }
        let position: HashMap<&str, usize> =
            self.0.iter().enumerate().map(|(k, item)| (item.as_str(), k)).collect();
        let indices = observed
            .0
            .iter()
            .map(|item| position.get(item.as_str()).copied().ok_or_else(|| Error::ItemNotInBaseline(item.clone())))
            .collect::<Result<Vec<_>>>()?;
        PermutationCode::new(indices)
    }
}

impl fmt::Display for CoverList {
    /// One item per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|item| writeln!(f, "{item}"))
    }
}

/// A secret starting order for the encoder's remaining list, bound to one cover length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaselineOrdering(PermutationCode);

impl BaselineOrdering {
    pub fn new(order: PermutationCode) -> Self {
        Self(order)
    }

    /// A uniformly shuffled ordering of `0..n`, deterministic in `seed`.
    pub fn generate(n: usize, seed: u64) -> Self {
        assert!(n >= 1, "keys cover at least one item");
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self(PermutationCode::new(order).expect("a shuffle of 0..n is a permutation"))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_code(&self) -> &PermutationCode {
        &self.0
    }
}

impl fmt::Display for BaselineOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BaselineOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(Self)
    }
}

/// Text recovered from a cover list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub text: String,
    /// Sentinel handling was requested but the decoded text did not end with it.
    /// `text` is then returned unmodified.
    pub sentinel_missing: bool,
}

/// Everything both ends must agree on to use a cover list as a channel.
#[derive(Debug, Clone)]
pub struct Channel {
    alphabet: Alphabet,
    baseline: CoverList,
    key: Option<BaselineOrdering>,
    sentinel: bool,
}

impl Channel {
    /// A channel over `baseline` with no key and sentinel handling on.
    pub fn new(alphabet: Alphabet, baseline: CoverList) -> Self {
        Self { alphabet, baseline, key: None, sentinel: true }
    }

    pub fn with_key(mut self, key: BaselineOrdering) -> Result<Self> {
        if key.len() != self.baseline.len() {
            return Err(Error::KeyLengthMismatch { key: key.len(), cover: self.baseline.len() });
        }
        self.key = Some(key);
        Ok(self)
    }

    pub fn with_sentinel(mut self, sentinel: bool) -> Self {
        self.sentinel = sentinel;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn baseline(&self) -> &CoverList {
        &self.baseline
    }

    fn start_order(&self) -> PermutationCode {
        match &self.key {
            Some(key) => key.as_code().clone(),
            None => PermutationCode::identity(self.baseline.len()),
        }
    }

    /// Minimum cover length needed to carry `message` on this channel.
    pub fn required_length(&self, message: &str) -> Result<usize> {
        let s = radix::message_to_natural(&self.prepare(message), &self.alphabet)?;
        Ok(factoradic::min_factorial_length(&s))
    }

    fn prepare(&self, message: &str) -> String {
        if self.sentinel {
            radix::append_sentinel(message, &self.alphabet)
        } else {
            message.to_owned()
        }
    }

    /// Permutation code for `message` over the full cover length.
    pub fn encode_code(&self, message: &str) -> Result<PermutationCode> {
        let s = radix::message_to_natural(&self.prepare(message), &self.alphabet)?;
        let required = factoradic::min_factorial_length(&s);
        if required > self.baseline.len() {
            return Err(Error::CoverTooSmall { required, available: self.baseline.len() });
        }
        factoradic::encode_with_baseline(&s, &self.start_order())
    }

    /// Reorders the baseline list so that it carries `message`.
    pub fn encode(&self, message: &str) -> Result<CoverList> {
        self.baseline.apply_code(&self.encode_code(message)?)
    }

    /// Recovers the message carried by a rearrangement of the baseline list.
    pub fn decode(&self, observed: &CoverList) -> Result<Decoded> {
        let code = self.baseline.recover_code(observed)?;
        let s = factoradic::decode_with_baseline(&code, &self.start_order())?;
        let raw = radix::natural_to_message(&s, &self.alphabet);
        if !self.sentinel {
            return Ok(Decoded { text: raw, sentinel_missing: false });
        }
        Ok(match radix::strip_sentinel(&raw, &self.alphabet) {
            Ok(stripped) => Decoded { text: stripped.to_owned(), sentinel_missing: false },
            Err(_) => Decoded { text: raw, sentinel_missing: true },
        })
    }
}
