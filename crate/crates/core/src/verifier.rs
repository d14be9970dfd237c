//! Builder-independent universal-cycle checker.
//!
//! Verification only extracts windows, decodes them, and compares against a
//! brute-force enumeration of the family; it knows nothing about backbones
//! or arc digraphs, which makes it a true oracle for every builder.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::error::Result;
use crate::families::{decode, enumerate, FamilyParams};
use crate::format;
use crate::graph::HostGraph;
use crate::report::VerificationReport;

fn decode_range(
    host: &HostGraph,
    params: &FamilyParams,
    expected_set: &BTreeSet<String>,
    range: std::ops::RangeInclusive<usize>,
) -> (BTreeMap<String, usize>, Vec<(usize, String)>) {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut invalid: Vec<(usize, String)> = Vec::new();
    for i in range {
        let window = match host.window(i) {
            Ok(window) => window,
            Err(e) => {
                invalid.push((i, e.to_string()));
                continue;
            }
        };
        match decode(&window, params) {
            Ok(object) => {
                let display = object.to_string();
                if expected_set.contains(&display) {
                    *seen.entry(display).or_insert(0) += 1;
                } else {
                    invalid.push((
                        i,
                        format!("decodes to {display}, which is outside the family"),
                    ));
                }
            }
            Err(e) => invalid.push((i, e.to_string())),
        }
    }
    (seen, invalid)
}

/// Decodes every window of the host and reports whether the family is
/// covered exactly once. `jobs` bounds the number of worker threads; the
/// report is identical for any job count.
pub fn verify_jobs(
    host: &HostGraph,
    params: &FamilyParams,
    jobs: usize,
) -> Result<VerificationReport> {
    params.validate()?;
    let expected: Vec<String> = enumerate(params)?
        .iter()
        .map(|object| object.to_string())
        .collect();
    let expected_set: BTreeSet<String> = expected.iter().cloned().collect();
    let size = host.size();
    let jobs = jobs.clamp(1, size);

    let (seen, invalid) = if jobs == 1 {
        decode_range(host, params, &expected_set, 1..=size)
    } else {
        let chunk = size.div_ceil(jobs);
        let mut partials = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let lo = j * chunk + 1;
                    let hi = ((j + 1) * chunk).min(size);
                    let expected_set = &expected_set;
                    scope.spawn(move || decode_range(host, params, expected_set, lo..=hi))
                })
                .collect();
            for handle in handles {
                partials.push(handle.join().expect("verifier worker panicked"));
            }
        });
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        let mut invalid: Vec<(usize, String)> = Vec::new();
        for (partial_seen, partial_invalid) in partials {
            for (key, count) in partial_seen {
                *seen.entry(key).or_insert(0) += count;
            }
            invalid.extend(partial_invalid);
        }
        invalid.sort_by_key(|&(index, _)| index);
        (seen, invalid)
    };
    Ok(VerificationReport::from_coverage(
        size, &expected, &seen, invalid,
    ))
}

/// Single-threaded [`verify_jobs`].
pub fn verify(host: &HostGraph, params: &FamilyParams) -> Result<VerificationReport> {
    verify_jobs(host, params, 1)
}

/// Parses a GUC v1 file and verifies the host against the family descriptor
/// it carries.
pub fn verify_file(path: &Path) -> Result<(VerificationReport, FamilyParams)> {
    verify_file_jobs(path, 1)
}

pub fn verify_file_jobs(path: &Path, jobs: usize) -> Result<(VerificationReport, FamilyParams)> {
    let text = std::fs::read_to_string(path)?;
    let (host, params) = format::parse(&text)?;
    let report = verify_jobs(&host, &params, jobs)?;
    Ok((report, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::build_gucycle;
    use crate::families::Family;

    fn h3() -> HostGraph {
        HostGraph::new(
            6,
            3,
            [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]
                .into_iter()
                .map(|pair| (pair, 1)),
            true,
        )
        .unwrap()
    }

    #[test]
    fn built_involution_host_verifies() {
        let params = FamilyParams::new(Family::Involutions, 4, None).unwrap();
        let host = build_gucycle(&params).unwrap();
        let report = verify(&host, &params).unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 10);
    }

    #[test]
    fn h3_verifies_as_permutation_host() {
        let params = FamilyParams::new(Family::Permutations, 3, None).unwrap();
        let report = verify(&h3(), &params).unwrap();
        assert!(report.valid(), "{report}");
        assert_eq!(report.window_count(), 6);
    }

    #[test]
    fn deleting_an_edge_invalidates_h3() {
        let params = FamilyParams::new(Family::Permutations, 3, None).unwrap();
        let full = h3();
        for skip in 0..full.edge_pair_count() {
            let edges: Vec<_> = full
                .edges()
                .enumerate()
                .filter(|&(index, _)| index != skip)
                .map(|(_, edge)| edge)
                .collect();
            let host = HostGraph::new(6, 3, edges, true).unwrap();
            let report = verify(&host, &params).unwrap();
            assert!(!report.valid(), "deleting edge {skip} kept the host valid");
        }
    }

    #[test]
    fn edgeless_host_duplicates_the_identity() {
        let params = FamilyParams::new(Family::Permutations, 3, None).unwrap();
        let host = HostGraph::new(6, 3, [], true).unwrap();
        let report = verify(&host, &params).unwrap();
        assert!(!report.valid());
        assert_eq!(report.duplicated(), ["123".to_string()]);
        assert_eq!(report.missing_total(), 5);
        assert_eq!(report.window_count(), 6);
    }

    #[test]
    fn parallel_verification_matches_single_threaded() {
        let params = FamilyParams::new(Family::Partitions, 5, None).unwrap();
        let host = build_gucycle(&params).unwrap();
        let single = verify_jobs(&host, &params, 1).unwrap();
        for jobs in [2, 3, 7] {
            assert_eq!(verify_jobs(&host, &params, jobs).unwrap(), single);
        }
    }

    #[test]
    fn cross_family_verification_reports_not_in_family() {
        // a subsets host read as partitions: adjacent cycle edges form paths,
        // which are not cliques
        let subsets = FamilyParams::new(Family::Subsets, 6, Some(2)).unwrap();
        let host = build_gucycle(&subsets).unwrap();
        let partitions = FamilyParams::new(Family::Partitions, 6, None).unwrap();
        let report = verify(&host, &partitions).unwrap();
        assert!(!report.valid());
        assert!(report.invalid_total() > 0);
    }
}
