//! Cyclic-word universal cycles: weight-constrained word cycles built from an
//! arc digraph (plain de Bruijn cycles are the unconstrained case), plus a
//! multi-mode verifier that checks any cyclic string against an object space.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::euler::ArcDigraph;
use crate::families::{all_partitions, all_permutations};
use crate::report::VerificationReport;

/// Symbols display as 0-9 then a-z, capping alphabets at 36.
pub const MAX_ALPHABET: usize = 36;

pub fn symbol_to_char(symbol: u8) -> char {
    match symbol {
        0..=9 => (b'0' + symbol) as char,
        10..=35 => (b'a' + symbol - 10) as char,
        _ => panic!("symbol {symbol} exceeds the display alphabet"),
    }
}

pub fn char_to_symbol(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        'a'..='z' => Some(c as u8 - b'a' + 10),
        _ => None,
    }
}

/// Fixed-alphabet cyclic string over symbols 0..alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicWord {
    symbols: Vec<u8>,
    alphabet: usize,
}

impl CyclicWord {
    pub fn new(symbols: Vec<u8>, alphabet: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidParameters("cyclic word is empty".into()));
        }
        if alphabet == 0 || alphabet > MAX_ALPHABET {
            return Err(Error::InvalidParameters(format!(
                "alphabet size {alphabet} outside 1..={MAX_ALPHABET}"
            )));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s as usize >= alphabet) {
            return Err(Error::InvalidParameters(format!(
                "symbol {bad} outside alphabet of size {alphabet}"
            )));
        }
        Ok(CyclicWord { symbols, alphabet })
    }

    /// Parses digits 0-9 and lowercase letters a-z as symbol values; the
    /// alphabet size is the largest symbol plus one.
    pub fn from_text(text: &str) -> Result<Self> {
        let symbols = text
            .chars()
            .map(|c| {
                char_to_symbol(c).ok_or_else(|| {
                    Error::InvalidParameters(format!(
                        "character {c:?} is not a symbol (expected 0-9 or a-z)"
                    ))
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        let alphabet = symbols.iter().copied().max().map_or(0, |m| m as usize + 1);
        CyclicWord::new(symbols, alphabet.max(1))
    }

    pub fn from_text_with_alphabet(text: &str, alphabet: usize) -> Result<Self> {
        let word = CyclicWord::from_text(text)?;
        CyclicWord::new(word.symbols, alphabet)
    }

    /// Maps arbitrary case-sensitive characters to symbols in order of first
    /// appearance. Only symbol equality survives this mapping, which is all
    /// the letter-partition mode needs.
    pub fn from_letters(text: &str) -> Result<Self> {
        let mut mapping: BTreeMap<char, u8> = BTreeMap::new();
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            let next = mapping.len() as u8;
            let symbol = *mapping.entry(c).or_insert(next);
            symbols.push(symbol);
        }
        let alphabet = mapping.len().max(1);
        CyclicWord::new(symbols, alphabet)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// The length-m window starting at `start` (0-based), wrapping cyclically.
    pub fn window(&self, start: usize, m: usize) -> Vec<u8> {
        (0..m)
            .map(|offset| self.symbols[(start + offset) % self.symbols.len()])
            .collect()
    }
}

impl std::fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", symbol_to_char(s))?;
        }
        Ok(())
    }
}

/// How to read a window of a cyclic string as a combinatorial object, and
/// which object space to expect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeMode {
    /// The window verbatim, as a q-ary word with weight in [min, max].
    ExactWord {
        alphabet: usize,
        min_weight: usize,
        max_weight: usize,
    },
    /// The multiset of symbols in the window; `ground` is the expected
    /// ground set of symbols.
    WindowMultiset { ground: Vec<u8> },
    /// Positions of 1s in a binary window, as a subset of [m] with size in
    /// [min, max].
    BinarySubset { min_size: usize, max_size: usize },
    /// The window as a multiplicity vector: symbol w_i means w_i copies of
    /// element i, total in [min, max].
    WeightVector {
        alphabet: usize,
        min_total: usize,
        max_total: usize,
    },
    /// The relative-order pattern of a window of distinct symbols, as a
    /// permutation of [m].
    OrderIso,
    /// Window positions grouped by symbol equality, as a partition of [m].
    LetterPartition,
}

fn word_string(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| symbol_to_char(s)).collect()
}

fn multiset_string(elements: &[usize]) -> String {
    let strings: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", strings.join(","))
}

fn weight(symbols: &[u8]) -> usize {
    symbols.iter().map(|&s| s as usize).sum()
}

impl DecodeMode {
    /// Decodes one window to the display form of its object, or explains why
    /// the window represents nothing in the expected space.
    fn decode_window(&self, window: &[u8]) -> std::result::Result<String, String> {
        let m = window.len();
        match self {
            DecodeMode::ExactWord {
                alphabet,
                min_weight,
                max_weight,
            } => {
                if let Some(&bad) = window.iter().find(|&&s| s as usize >= *alphabet) {
                    return Err(format!("symbol {bad} outside alphabet of size {alphabet}"));
                }
                let w = weight(window);
                if w < *min_weight || w > *max_weight {
                    return Err(format!(
                        "weight {w} outside [{min_weight},{max_weight}]"
                    ));
                }
                Ok(word_string(window))
            }
            DecodeMode::WindowMultiset { ground } => {
                if let Some(&bad) = window.iter().find(|&s| !ground.contains(s)) {
                    return Err(format!(
                        "symbol {} outside the ground set",
                        symbol_to_char(bad)
                    ));
                }
                let mut sorted = window.to_vec();
                sorted.sort_unstable();
                Ok(format!(
                    "{{{}}}",
                    sorted
                        .iter()
                        .map(|&s| symbol_to_char(s).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ))
            }
            DecodeMode::BinarySubset { min_size, max_size } => {
                if let Some(&bad) = window.iter().find(|&&s| s > 1) {
                    return Err(format!("symbol {bad} is not binary"));
                }
                let positions: Vec<usize> = window
                    .iter()
                    .enumerate()
                    .filter(|(_, &s)| s == 1)
                    .map(|(i, _)| i + 1)
                    .collect();
                if positions.len() < *min_size || positions.len() > *max_size {
                    return Err(format!(
                        "subset size {} outside [{min_size},{max_size}]",
                        positions.len()
                    ));
                }
                Ok(multiset_string(&positions))
            }
            DecodeMode::WeightVector {
                alphabet,
                min_total,
                max_total,
            } => {
                if let Some(&bad) = window.iter().find(|&&s| s as usize >= *alphabet) {
                    return Err(format!("symbol {bad} outside alphabet of size {alphabet}"));
                }
                let total = weight(window);
                if total < *min_total || total > *max_total {
                    return Err(format!("total {total} outside [{min_total},{max_total}]"));
                }
                let elements: Vec<usize> = window
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &count)| std::iter::repeat_n(i + 1, count as usize))
                    .collect();
                Ok(multiset_string(&elements))
            }
            DecodeMode::OrderIso => {
                let mut sorted: Vec<u8> = window.to_vec();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err("repeated symbol; window has no order pattern".into());
                }
                let pattern: Vec<usize> = window
                    .iter()
                    .map(|s| sorted.iter().position(|t| t == s).expect("present") + 1)
                    .collect();
                Ok(pattern_string(&pattern))
            }
            DecodeMode::LetterPartition => {
                let mut blocks: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
                for (index, &s) in window.iter().enumerate() {
                    blocks.entry(s).or_default().push(index + 1);
                }
                let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
                blocks.sort_by_key(|block| block[0]);
                Ok(partition_string(&blocks, m))
            }
        }
    }

    /// Enumerates the expected object space for windows of length m, in the
    /// same display form as [`Self::decode_window`].
    fn expected_space(&self, m: usize) -> Vec<String> {
        match self {
            DecodeMode::ExactWord {
                alphabet,
                min_weight,
                max_weight,
            } => enumerate_weighted_words(m, *alphabet, *min_weight, *max_weight)
                .iter()
                .map(|word| word_string(word))
                .collect(),
            DecodeMode::WindowMultiset { ground } => {
                let mut ground = ground.clone();
                ground.sort_unstable();
                ground
                    .into_iter()
                    .combinations_with_replacement(m)
                    .map(|elements| {
                        format!(
                            "{{{}}}",
                            elements
                                .iter()
                                .map(|&s| symbol_to_char(s).to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect()
            }
            DecodeMode::BinarySubset { min_size, max_size } => {
                let mut out = Vec::new();
                for size in *min_size..=(*max_size).min(m) {
                    for subset in (1..=m).combinations(size) {
                        out.push(multiset_string(&subset));
                    }
                }
                out
            }
            DecodeMode::WeightVector {
                alphabet,
                min_total,
                max_total,
            } => enumerate_weighted_words(m, *alphabet, *min_total, *max_total)
                .iter()
                .map(|word| {
                    let elements: Vec<usize> = word
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &count)| std::iter::repeat_n(i + 1, count as usize))
                        .collect();
                    multiset_string(&elements)
                })
                .collect(),
            DecodeMode::OrderIso => all_permutations(m)
                .iter()
                .map(|p| pattern_string(p.word()))
                .collect(),
            DecodeMode::LetterPartition => all_partitions(m)
                .iter()
                .map(|p| {
                    let blocks: Vec<Vec<usize>> = p
                        .blocks()
                        .map(|block| block.iter().copied().collect())
                        .collect();
                    partition_string(&blocks, m)
                })
                .collect(),
        }
    }
}

fn pattern_string(pattern: &[usize]) -> String {
    let sep = if pattern.len() <= 9 { "" } else { " " };
    pattern
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn partition_string(blocks: &[Vec<usize>], m: usize) -> String {
    let sep = if m <= 9 { "" } else { " " };
    blocks
        .iter()
        .map(|block| {
            block
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(sep)
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// All q-ary words of length m with weight in [min, max], lexicographic.
fn enumerate_weighted_words(m: usize, q: usize, min: usize, max: usize) -> Vec<Vec<u8>> {
    fn extend(
        m: usize,
        q: usize,
        min: usize,
        max: usize,
        word: &mut Vec<u8>,
        weight_so_far: usize,
        out: &mut Vec<Vec<u8>>,
    ) {
        if word.len() == m {
            if weight_so_far >= min {
                out.push(word.clone());
            }
            return;
        }
        let remaining = m - word.len();
        for symbol in 0..q {
            let w = weight_so_far + symbol;
            if w > max {
                break;
            }
            // even all-maximal remaining symbols cannot reach the minimum
            if w + (remaining - 1) * (q - 1) < min {
                continue;
            }
            word.push(symbol as u8);
            extend(m, q, min, max, word, w, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    extend(m, q, min, max, &mut Vec::new(), 0, &mut out);
    out
}

/// The arc digraph behind [`build_weight_range`]: vertices are (m-1)-letter
/// words, and each word w of weight in [s, t] contributes the arc
/// prefix(w) -> suffix(w) with payload w. Exposed so its degree structure
/// can be inspected directly.
pub fn weight_range_digraph(
    m: usize,
    q: usize,
    s: usize,
    t: usize,
) -> Result<ArcDigraph<Vec<u8>>> {
    validate_weight_range(m, q, s, t)?;
    let mut digraph = ArcDigraph::new();
    // words of weight > t are isolated either way and stay unregistered
    for vertex in enumerate_weighted_words(m - 1, q, 0, t) {
        digraph.add_vertex(vertex);
    }
    for vertex in enumerate_weighted_words(m - 1, q, 0, t) {
        let w = weight(&vertex);
        for symbol in 0..q as u8 {
            let total = w + symbol as usize;
            if total < s || total > t {
                continue;
            }
            let mut payload = vertex.clone();
            payload.push(symbol);
            let head = payload[1..].to_vec();
            digraph.add_arc(&vertex, &head, payload.clone(), payload)?;
        }
    }
    Ok(digraph)
}

fn validate_weight_range(m: usize, q: usize, s: usize, t: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameters("word length m must be >= 1".into()));
    }
    if !(2..=MAX_ALPHABET).contains(&q) {
        return Err(Error::InvalidParameters(format!(
            "alphabet size {q} outside 2..={MAX_ALPHABET}"
        )));
    }
    if s > t || t > m * (q - 1) {
        return Err(Error::InvalidParameters(format!(
            "weight range [{s},{t}] invalid for length {m} over alphabet {q} \
             (need 0 <= s <= t <= {})",
            m * (q - 1)
        )));
    }
    Ok(())
}

/// Builds a cyclic word whose m-windows enumerate, exactly once each, all
/// q-ary words of length m with weight between s and t.
///
/// Construction goes through an Eulerian circuit of [`weight_range_digraph`];
/// parameter ranges with no such cycle (fixed-weight binary words split into
/// disjoint rotation classes, for instance) surface as `NotConnected`.
/// The output is self-verified before being returned.
pub fn build_weight_range(m: usize, q: usize, s: usize, t: usize) -> Result<CyclicWord> {
    let digraph = weight_range_digraph(m, q, s, t)?;
    let circuit = digraph.eulerian_circuit()?;
    if circuit.is_empty() {
        return Err(Error::NotConnected);
    }
    let symbols: Vec<u8> = circuit.iter().map(|word| word[0]).collect();
    let word = CyclicWord::new(symbols, q)?;
    let report = verify_string(
        &word,
        m,
        &DecodeMode::ExactWord {
            alphabet: q,
            min_weight: s,
            max_weight: t,
        },
    )?;
    if !report.valid() {
        return Err(Error::FailedPostVerification(format!(
            "weight-range word for (m={m}, q={q}, s={s}, t={t}): {report}"
        )));
    }
    Ok(word)
}

/// Decodes every length-m window of the word under `mode` and reports
/// whether the expected object space is covered exactly once. The word is
/// cyclic, so windows may wrap around it any number of times; a word of
/// length L always has exactly L windows.
pub fn verify_string(
    word: &CyclicWord,
    m: usize,
    mode: &DecodeMode,
) -> Result<VerificationReport> {
    if m == 0 {
        return Err(Error::InvalidParameters(
            "window length must be at least 1".into(),
        ));
    }
    let expected = mode.expected_space(m);
    let expected_set: std::collections::BTreeSet<&String> = expected.iter().collect();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut invalid: Vec<(usize, String)> = Vec::new();
    for start in 0..word.len() {
        let window = word.window(start, m);
        match mode.decode_window(&window) {
            Ok(object) => {
                if expected_set.contains(&object) {
                    *seen.entry(object).or_insert(0) += 1;
                } else {
                    invalid.push((
                        start + 1,
                        format!("decodes to {object}, which is outside the expected space"),
                    ));
                }
            }
            Err(reason) => invalid.push((start + 1, reason)),
        }
    }
    Ok(VerificationReport::from_coverage(
        word.len(),
        &expected,
        &seen,
        invalid,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn debruijn_words_have_length_q_to_the_m() {
        for (m, q) in [(3, 2), (2, 3), (4, 2), (2, 4), (3, 3)] {
            let word = build_weight_range(m, q, 0, m * (q - 1)).unwrap();
            assert_eq!(word.len(), q.pow(m as u32), "m={m} q={q}");
        }
    }

    #[test]
    fn weight_range_examples_from_worked_strings() {
        assert_eq!(build_weight_range(3, 2, 0, 3).unwrap().len(), 8);
        assert_eq!(build_weight_range(4, 2, 2, 3).unwrap().len(), 10);
        assert_eq!(build_weight_range(3, 3, 0, 2).unwrap().len(), 10);
    }

    #[test]
    fn fixed_weight_binary_words_disconnect() {
        assert!(matches!(
            build_weight_range(4, 2, 2, 2),
            Err(Error::NotConnected)
        ));
    }

    #[test]
    fn single_letter_words_use_a_loop_digraph() {
        let word = build_weight_range(1, 4, 1, 2).unwrap();
        assert_eq!(word.symbols(), &[1, 2]);
    }

    #[test]
    fn known_multiset_string_verifies() {
        let word = CyclicWord::from_text("112233").unwrap();
        let report = verify_string(
            &word,
            2,
            &DecodeMode::WindowMultiset {
                ground: vec![1, 2, 3],
            },
        )
        .unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 6);
    }

    #[test]
    fn known_binary_word_string_verifies() {
        let word = CyclicWord::from_text_with_alphabet("11101000", 2).unwrap();
        let report = verify_string(
            &word,
            3,
            &DecodeMode::ExactWord {
                alphabet: 2,
                min_weight: 0,
                max_weight: 3,
            },
        )
        .unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 8);
    }

    #[test]
    fn known_subset_range_string_verifies() {
        let word = CyclicWord::from_text_with_alphabet("1110011010", 2).unwrap();
        let report = verify_string(
            &word,
            4,
            &DecodeMode::BinarySubset {
                min_size: 2,
                max_size: 3,
            },
        )
        .unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 10);
    }

    #[test]
    fn known_order_iso_string_verifies() {
        let word = CyclicWord::from_text("124324").unwrap();
        let report = verify_string(&word, 3, &DecodeMode::OrderIso).unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 6);
    }

    #[test]
    fn known_letter_partition_string_verifies() {
        let word = CyclicWord::from_letters("abcbccccddcdeec").unwrap();
        let report = verify_string(&word, 4, &DecodeMode::LetterPartition).unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 15);
    }

    #[test]
    fn known_weight_vector_string_verifies() {
        let word = CyclicWord::from_text_with_alphabet("0011010020", 3).unwrap();
        let report = verify_string(
            &word,
            3,
            &DecodeMode::WeightVector {
                alphabet: 3,
                min_total: 0,
                max_total: 2,
            },
        )
        .unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 10);
    }

    #[test]
    fn short_word_reports_missing_words() {
        let word = CyclicWord::from_text_with_alphabet("111000", 2).unwrap();
        let report = verify_string(
            &word,
            3,
            &DecodeMode::ExactWord {
                alphabet: 2,
                min_weight: 0,
                max_weight: 3,
            },
        )
        .unwrap();
        assert!(!report.valid());
        assert_eq!(report.window_count(), 6);
        assert_eq!(report.expected_count(), 8);
        assert_eq!(report.missing(), ["010".to_string(), "101".to_string()]);
    }

    #[test]
    fn order_iso_rejects_tied_windows() {
        let word = CyclicWord::from_text("112").unwrap();
        let report = verify_string(&word, 2, &DecodeMode::OrderIso).unwrap();
        assert_eq!(report.invalid_total(), 1);
        assert!(report.invalid_windows()[0].1.contains("repeated symbol"));
    }

    #[test]
    fn letter_mapping_is_first_appearance_and_case_sensitive() {
        let word = CyclicWord::from_letters("DdCD").unwrap();
        assert_eq!(word.symbols(), &[0, 1, 2, 0]);
        assert_eq!(word.alphabet(), 3);
    }

    #[test]
    fn invalid_parameter_combinations_are_rejected() {
        assert!(matches!(
            build_weight_range(0, 2, 0, 0),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            build_weight_range(3, 2, 2, 1),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            build_weight_range(3, 2, 0, 4),
            Err(Error::InvalidParameters(_))
        ));
        let word = CyclicWord::from_text("01").unwrap();
        assert!(verify_string(&word, 0, &DecodeMode::OrderIso).is_err());
    }

    #[test]
    fn windows_wrap_past_the_word_end() {
        // the lone word of weight 0 cycles as a single symbol
        let word = build_weight_range(2, 2, 0, 0).unwrap();
        assert_eq!(word.symbols(), &[0]);
        let report = verify_string(
            &word,
            2,
            &DecodeMode::ExactWord {
                alphabet: 2,
                min_weight: 0,
                max_weight: 0,
            },
        )
        .unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 1);
    }
}
