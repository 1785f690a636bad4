//! Hide short text messages in the order of a list.
//!
//! A message over an [`Alphabet`] is read as a base-`b` number, that number is
//! written in the factorial number system, and the resulting
//! [`PermutationCode`] reorders a [`CoverList`]. Decoding reverses each step.
//!
//! ```
//! use permstego::{Alphabet, Channel, CoverList};
//!
//! let movies = CoverList::new((0..12).map(|k| format!("movie {k}"))).unwrap();
//! let channel = Channel::new(Alphabet::latin(), movies);
//! let sent = channel.encode("hi").unwrap();
//! assert_eq!(channel.decode(&sent).unwrap().text, "hi");
//! ```

pub mod alphabet;
pub mod analysis;
pub mod error;
pub mod factoradic;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod radix;
pub mod stego;

pub use num_bigint::BigUint as Natural;

pub use alphabet::{Alphabet, FrequencyTable};
pub use error::{Error, Result};
pub use factoradic::{decode_permutation, encode_permutation, min_factorial_length, PermutationCode};
pub use stego::{BaselineOrdering, Channel, CoverList, Decoded};

/// Bundled word list used to benchmark alphabet orderings.
pub fn english_words() -> impl Iterator<Item = &'static str> {
    include_str!("../data/english_words.txt")
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}
