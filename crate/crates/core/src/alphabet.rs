//! Symbol sets that give every character of a message a digit value.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// Lowercase Latin letters followed by a space, the 27-symbol default.
pub const DEFAULT_SYMBOLS: &str = "abcdefghijklmnopqrstuvwxyz ";

/// An ordered set of distinct symbols. The position of a symbol is its digit value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    index: HashMap<char, usize>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        let mut index = HashMap::with_capacity(symbols.len());
        for (k, &c) in symbols.iter().enumerate() {
            if index.insert(c, k).is_some() {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        if symbols.len() < 2 {
            return Err(Error::AlphabetTooSmall(symbols.len()));
        }
        Ok(Self { symbols, index })
    }

    /// The a-z plus space alphabet, `'a' = 0` through `' ' = 26`.
    pub fn latin() -> Self {
        Self::new(DEFAULT_SYMBOLS.chars()).expect("default alphabet is valid")
    }

    /// Orders the table's characters by descending weight, breaking ties by
    /// ascending code point, so the most frequent symbols get the smallest digits.
    pub fn frequency_ordered(table: &FrequencyTable) -> Result<Self> {
        let mut entries: Vec<(char, f64)> = table.entries.iter().map(|(&c, &w)| (c, w)).collect();
        entries.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        Self::new(entries.into_iter().map(|(c, _)| c))
    }

    /// Number of symbols, the base `b` of the positional system.
    pub fn base(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, digit: usize) -> Option<char> {
        self.symbols.get(digit).copied()
    }

    pub fn index_of(&self, c: char) -> Result<usize> {
        self.index.get(&c).copied().ok_or(Error::SymbolNotInAlphabet(c))
    }

    pub fn contains(&self, c: char) -> bool {
        self.index.contains_key(&c)
    }

    /// Symbol with digit value 1, appended to messages so trailing zero digits survive.
    pub fn sentinel(&self) -> char {
        self.symbols[1]
    }
}

impl std::fmt::Display for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// Character weights used to build a frequency-ordered alphabet.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FrequencyTable {
    entries: BTreeMap<char, f64>,
}

impl FrequencyTable {
    pub fn new<I: IntoIterator<Item = (char, f64)>>(entries: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (c, w) in entries {
            if !(w >= 0.0 && w.is_finite()) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("weight for {c:?} must be a finite nonnegative number, got {w}"),
                });
            }
            if map.insert(c, w).is_some() {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        if map.len() < 2 {
            return Err(Error::AlphabetTooSmall(map.len()));
        }
        Ok(Self { entries: map })
    }

    /// Parses `<char><TAB><weight>` lines. Blank lines and `#` comments are skipped;
    /// `#` itself can still be listed as a symbol by following it with a tab.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.is_empty() || (line.starts_with('#') && !line.starts_with("#\t")) {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno + 1, message };
            let mut chars = line.chars();
            let symbol = chars.next().expect("line is nonempty");
            let rest = chars.as_str();
            let weight = rest
                .strip_prefix('\t')
                .ok_or_else(|| err(format!("expected <char><TAB><weight>, got {line:?}")))?;
            let weight: f64 = weight
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid weight {weight:?}")))?;
            entries.push((symbol, weight));
        }
        Self::new(entries).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { line: 0, message },
            other => other,
        })
    }

    /// Letter frequencies of English text bundled with the crate.
    pub fn english() -> Self {
        Self::parse(include_str!("../data/english_letters.tsv")).expect("bundled table is valid")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self, c: char) -> Option<f64> {
        self.entries.get(&c).copied()
    }
}
