//! Conversion between messages and naturals, reading a message as a base-`b`
//! number whose least-significant digit is its first character.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::Natural;

/// `s = sum(b^i * index(x_i))`. The empty message is 0.
pub fn message_to_natural(message: &str, alphabet: &Alphabet) -> Result<Natural> {
    let digits = message
        .chars()
        .map(|c| alphabet.index_of(c))
        .collect::<Result<Vec<_>>>()?;
    let base = BigUint::from(alphabet.base());
    // Horner, starting from the most significant (last) character.
    Ok(digits
        .iter()
        .rev()
        .fold(BigUint::zero(), |acc, &d| acc * &base + d))
}

/// Inverse of [`message_to_natural`] up to trailing zero-valued symbols, which
/// are never produced. 0 maps to the empty message.
pub fn natural_to_message(value: &Natural, alphabet: &Alphabet) -> String {
    let base = BigUint::from(alphabet.base());
    let mut rest = value.clone();
    let mut out = String::new();
    while !rest.is_zero() {
        let (quotient, digit) = rest.div_rem(&base);
        let digit = digit.to_usize().expect("remainder is below the base");
        out.push(alphabet.symbol(digit).expect("remainder is below the base"));
        rest = quotient;
    }
    out
}

/// Appends the alphabet's digit-1 symbol so the high-order digit is never zero.
pub fn append_sentinel(message: &str, alphabet: &Alphabet) -> String {
    let mut out = String::with_capacity(message.len() + 1);
    out.push_str(message);
    out.push(alphabet.sentinel());
    out
}

/// Removes exactly one trailing sentinel symbol.
pub fn strip_sentinel<'a>(message: &'a str, alphabet: &Alphabet) -> Result<&'a str> {
    message
        .strip_suffix(alphabet.sentinel())
        .ok_or(Error::SentinelMissing(alphabet.sentinel()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn to_natural() {
        let a = Alphabet::latin();
        assert_eq!(message_to_natural("", &a).unwrap(), n(0));
        assert_eq!(message_to_natural("a", &a).unwrap(), n(0));
        assert_eq!(message_to_natural("hi", &a).unwrap(), n(223));
        assert_eq!(message_to_natural("b", &a).unwrap(), n(1));
        assert_eq!(message_to_natural("ba", &a).unwrap(), n(1));
        assert_eq!(message_to_natural("bury him", &a).unwrap(), n(128_738_347_489));
        assert_eq!(message_to_natural("Hi", &a), Err(Error::SymbolNotInAlphabet('H')));
    }

    #[test]
    fn to_message() {
        let a = Alphabet::latin();
        assert_eq!(natural_to_message(&n(0), &a), "");
        assert_eq!(natural_to_message(&n(223), &a), "hi");
        assert_eq!(natural_to_message(&n(128_738_347_489), &a), "bury him");
    }

    #[test]
    fn sentinel() {
        let a = Alphabet::latin();
        assert_eq!(append_sentinel("banana", &a), "bananab");
        assert_eq!(append_sentinel("", &a), "b");
        assert_eq!(strip_sentinel(&append_sentinel("aaa", &a), &a), Ok("aaa"));
        assert_eq!(strip_sentinel("abb", &a), Ok("ab"));
        assert_eq!(strip_sentinel("ba", &a), Err(Error::SentinelMissing('b')));
        assert_eq!(strip_sentinel("", &a), Err(Error::SentinelMissing('b')));
    }

    fn latin_message(max_len: usize) -> impl Strategy<Value = String> {
        proptest::collection::vec(proptest::sample::select(crate::alphabet::DEFAULT_SYMBOLS.chars().collect::<Vec<_>>()), 0..max_len)
            .prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn roundtrip_without_trailing_zero(msg in latin_message(40)) {
            let a = Alphabet::latin();
            prop_assume!(!msg.ends_with('a'));
            let s = message_to_natural(&msg, &a).unwrap();
            prop_assert_eq!(natural_to_message(&s, &a), msg);
        }

        #[test]
        fn sentinel_roundtrip(msg in latin_message(40)) {
            let a = Alphabet::latin();
            let s = message_to_natural(&append_sentinel(&msg, &a), &a).unwrap();
            let back = natural_to_message(&s, &a);
            prop_assert_eq!(strip_sentinel(&back, &a).unwrap(), msg.as_str());
        }

        #[test]
        fn bounded_by_base_power(msg in latin_message(40)) {
            let a = Alphabet::latin();
            let s = message_to_natural(&msg, &a).unwrap();
            prop_assert!(s < BigUint::from(27u32).pow(msg.chars().count() as u32));
        }

        #[test]
        fn decoded_never_ends_in_zero_symbol(v in any::<u128>()) {
            let a = Alphabet::latin();
            let msg = natural_to_message(&Natural::from(v), &a);
            prop_assert!(!msg.ends_with('a'));
        }
    }
}
