//! Browser bindings for the demo page in `www/`.

use permstego::analysis;
use permstego::{factoradic, radix, Alphabet, BaselineOrdering, Channel, CoverList, Error, PermutationCode};
use wasm_bindgen::prelude::*;

fn js_err(e: Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn alphabet(symbols: &str) -> Result<Alphabet, JsValue> {
    if symbols.is_empty() {
        Ok(Alphabet::latin())
    } else {
        Alphabet::new(symbols.chars()).map_err(js_err)
    }
}

/// Minimal permutation code for `text`, formatted like `[1,5,2,0,4,3]`.
#[wasm_bindgen]
pub fn encode_text(text: &str, symbols: &str) -> Result<String, JsValue> {
    let alphabet = alphabet(symbols)?;
    let s = radix::message_to_natural(text, &alphabet).map_err(js_err)?;
    let code = factoradic::encode_permutation(&s, factoradic::min_factorial_length(&s)).map_err(js_err)?;
    Ok(code.to_string())
}

#[wasm_bindgen]
pub fn decode_text(code: &str, symbols: &str) -> Result<String, JsValue> {
    let alphabet = alphabet(symbols)?;
    let code: PermutationCode = code.parse().map_err(js_err)?;
    Ok(radix::natural_to_message(&factoradic::decode_permutation(&code), &alphabet))
}

/// The integer behind a message, in decimal.
#[wasm_bindgen]
pub fn message_value(text: &str, symbols: &str) -> Result<String, JsValue> {
    let alphabet = alphabet(symbols)?;
    radix::message_to_natural(text, &alphabet).map(|s| s.to_string()).map_err(js_err)
}

fn channel(cover: &str, sort_lex: bool, key: &str, sentinel: bool) -> Result<Channel, JsValue> {
    let cover = CoverList::parse(cover).map_err(js_err)?;
    let baseline = if sort_lex { cover.canonical() } else { cover };
    let channel = Channel::new(Alphabet::latin(), baseline).with_sentinel(sentinel);
    if key.trim().is_empty() {
        return Ok(channel);
    }
    let key: BaselineOrdering = key.parse().map_err(js_err)?;
    channel.with_key(key).map_err(js_err)
}

/// Reorders the cover list (one item per line) so it carries `message`.
#[wasm_bindgen]
pub fn encode_cover(message: &str, cover: &str, sort_lex: bool, key: &str, sentinel: bool) -> Result<String, JsValue> {
    let channel = channel(cover, sort_lex, key, sentinel)?;
    channel.encode(message).map(|c| c.to_string()).map_err(js_err)
}

#[wasm_bindgen]
pub fn decode_cover(observed: &str, cover: &str, sort_lex: bool, key: &str, sentinel: bool) -> Result<String, JsValue> {
    let channel = channel(cover, sort_lex, key, sentinel)?;
    let observed = CoverList::parse(observed).map_err(js_err)?;
    channel.decode(&observed).map(|d| d.text).map_err(js_err)
}

#[wasm_bindgen]
pub fn generate_key(n: usize, seed: u64) -> String {
    BaselineOrdering::generate(n.max(1), seed).to_string()
}

/// Per-position entropy (bits) of minimal-length codes with `n` items.
#[wasm_bindgen]
pub fn position_entropy(n: usize, samples: u32, seed: u64) -> Vec<f64> {
    analysis::estimate_position_entropy(n.max(1), u64::from(samples.max(1)), seed).entropy_bits
}

#[wasm_bindgen]
pub fn capacity_bits(n: usize) -> f64 {
    analysis::channel_capacity_bits(n)
}
