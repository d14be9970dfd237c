//! Outcome of a coverage check: which objects a cyclic structure missed,
//! duplicated, or failed to decode.

use std::collections::BTreeMap;
use std::fmt;

/// Reports keep at most this many items per list; totals stay exact.
const ITEM_LIMIT: usize = 50;

/// Result of checking a host graph or cyclic string against a family: every
/// object must be produced by exactly one window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    valid: bool,
    window_count: usize,
    expected_count: usize,
    missing: Vec<String>,
    missing_total: usize,
    duplicated: Vec<String>,
    duplicated_total: usize,
    invalid_windows: Vec<(usize, String)>,
    invalid_total: usize,
}

impl VerificationReport {
    /// Assembles a report from raw coverage data. `expected` is the full
    /// family in canonical order, `seen` maps produced objects to how often
    /// they appeared, and `invalid` lists windows that decoded to nothing.
    pub(crate) fn from_coverage(
        window_count: usize,
        expected: &[String],
        seen: &BTreeMap<String, usize>,
        invalid: Vec<(usize, String)>,
    ) -> Self {
        debug_assert!(seen.keys().all(|k| expected.contains(k)));
        let mut missing = Vec::new();
        let mut missing_total = 0;
        let mut duplicated = Vec::new();
        let mut duplicated_total = 0;
        for object in expected {
            match seen.get(object).copied().unwrap_or(0) {
                0 => {
                    missing_total += 1;
                    if missing.len() < ITEM_LIMIT {
                        missing.push(object.clone());
                    }
                }
                1 => {}
                _ => {
                    duplicated_total += 1;
                    if duplicated.len() < ITEM_LIMIT {
                        duplicated.push(object.clone());
                    }
                }
            }
        }
        let invalid_total = invalid.len();
        let mut invalid_windows = invalid;
        invalid_windows.truncate(ITEM_LIMIT);
        let valid = missing_total == 0
            && duplicated_total == 0
            && invalid_total == 0
            && window_count == expected.len();
        VerificationReport {
            valid,
            window_count,
            expected_count: expected.len(),
            missing,
            missing_total,
            duplicated,
            duplicated_total,
            invalid_windows,
            invalid_total,
        }
    }

    pub fn valid(&self) -> bool {
        self.valid
    }

    /// Number of windows examined (N for a host, word length for a string).
    pub fn window_count(&self) -> usize {
        self.window_count
    }

    /// Cardinality of the expected family.
    pub fn expected_count(&self) -> usize {
        self.expected_count
    }

    /// Objects never produced (truncated; see [`Self::missing_total`]).
    pub fn missing(&self) -> &[String] {
        &self.missing
    }

    pub fn missing_total(&self) -> usize {
        self.missing_total
    }

    /// Objects produced more than once (truncated).
    pub fn duplicated(&self) -> &[String] {
        &self.duplicated
    }

    pub fn duplicated_total(&self) -> usize {
        self.duplicated_total
    }

    /// Windows that decode to no family member, as (index, reason).
    pub fn invalid_windows(&self) -> &[(usize, String)] {
        &self.invalid_windows
    }

    pub fn invalid_total(&self) -> usize {
        self.invalid_total
    }
}

fn write_list(
    f: &mut fmt::Formatter<'_>,
    label: &str,
    shown: usize,
    total: usize,
) -> fmt::Result {
    if shown < total {
        writeln!(f, "  {label} ({total}, showing {shown}):")
    } else {
        writeln!(f, "  {label} ({total}):")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid, {} windows", self.window_count);
        }
        writeln!(
            f,
            "INVALID, {} windows (family has {} members)",
            self.window_count, self.expected_count
        )?;
        if self.missing_total > 0 {
            write_list(f, "missing", self.missing.len(), self.missing_total)?;
            for object in &self.missing {
                writeln!(f, "    {object}")?;
            }
        }
        if self.duplicated_total > 0 {
            write_list(f, "duplicated", self.duplicated.len(), self.duplicated_total)?;
            for object in &self.duplicated {
                writeln!(f, "    {object}")?;
            }
        }
        if self.invalid_total > 0 {
            write_list(
                f,
                "undecodable windows",
                self.invalid_windows.len(),
                self.invalid_total,
            )?;
            for (index, reason) in &self.invalid_windows {
                writeln!(f, "    window {index}: {reason}")?;
            }
        }
        Ok(())
    }
}
