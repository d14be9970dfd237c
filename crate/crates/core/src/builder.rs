//! Host graph constructions, one per family.
//!
//! Subsets and multisets ride on a weight-range word backbone: each window
//! of the backbone names the cycle edges e_1..e_{n-1} present in the window
//! graph, and a deficit on the wrap-around edge e_n tops the count up to k.
//! Permutations, involutions, and partitions go through a family arc digraph
//! whose Eulerian circuit lists the objects in window order.
//!
//! Assembly always walks the full window sequence and cross-checks every
//! constraint, so an overlap inconsistency can never be silently absorbed
//! into a host; it surfaces as `ConflictingWindows`. Every built host is
//! re-verified against the family before being returned.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::euler::ArcDigraph;
use crate::families::{
    all_involutions, all_partitions, all_permutations, cycle_edge, Family, FamilyObject,
    FamilyParams,
};
use crate::graph::{HostGraph, LabeledGraph, LabeledMultigraph, WindowGraph};
use crate::strings::build_weight_range;
use crate::verifier::verify;

/// A cyclic sequence of equal-order, equal-kind window graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSequence {
    windows: Vec<WindowGraph>,
}

impl WindowSequence {
    pub fn new(windows: Vec<WindowGraph>) -> Result<Self> {
        let first = windows.first().ok_or_else(|| {
            Error::InvalidParameters("window sequence must be nonempty".into())
        })?;
        let (order, simple) = (first.order(), first.is_simple());
        if order < 2 {
            return Err(Error::InvalidParameters(
                "window graphs must have order >= 2".into(),
            ));
        }
        for window in &windows {
            if window.order() != order || window.is_simple() != simple {
                return Err(Error::InvalidParameters(
                    "window sequence mixes orders or graph kinds".into(),
                ));
            }
        }
        Ok(WindowSequence { windows })
    }

    pub fn len(&self) -> usize {
        self.windows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.windows.is_empty()
    }

    pub fn order(&self) -> usize {
        self.windows[0].order()
    }

    pub fn is_simple(&self) -> bool {
        self.windows[0].is_simple()
    }

    pub fn windows(&self) -> &[WindowGraph] {
        &self.windows
    }
}

/// Realizes a host graph whose i-th window equals the i-th sequence entry,
/// with N = sequence length. Every pair of window positions asserts a
/// multiplicity on a host pair; a pair constrained twice must be constrained
/// identically, otherwise the sequence is not realizable and the two
/// offending windows are reported.
pub fn host_from_window_sequence(seq: &WindowSequence) -> Result<HostGraph> {
    let n = seq.order();
    let size = seq.len();
    if size < n {
        return Err(Error::SequenceTooShort {
            length: size,
            window: n,
        });
    }
    // host pair -> (required multiplicity, first window demanding it)
    let mut constraints: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (index, window) in seq.windows().iter().enumerate() {
        let i = index + 1;
        for a in 1..=n {
            let x = (i - 1 + a - 1) % size + 1;
            for b in (a + 1)..=n {
                let y = (i - 1 + b - 1) % size + 1;
                let pair = (x.min(y), x.max(y));
                let mult = window.multiplicity(a, b);
                match constraints.get(&pair) {
                    None => {
                        constraints.insert(pair, (mult, i));
                    }
                    Some(&(existing, first)) if existing != mult => {
                        return Err(Error::ConflictingWindows {
                            first,
                            second: i,
                            a: pair.0,
                            b: pair.1,
                            first_mult: existing,
                            second_mult: mult,
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let edges = constraints
        .into_iter()
        .filter(|&(_, (mult, _))| mult > 0)
        .map(|(pair, (mult, _))| (pair, mult));
    HostGraph::new(size, n, edges, seq.is_simple())
}

/// The arc digraph whose Eulerian circuit lists all members of the family on
/// [n]: vertices are the family members on [n-1], and each arc extends its
/// tail by the element n, pointing at the extension with element 1 removed
/// and labels shifted down.
///
/// Out-degrees follow the family structure: n for permutations (one arc per
/// insertion position), fixed points plus one for involutions, block count
/// plus one for partitions. In-degrees match by the symmetric argument on
/// element 1, so the digraph is balanced by construction; connectivity is
/// checked at circuit time rather than assumed.
pub fn build_arc_digraph(family: Family, n: usize) -> Result<ArcDigraph<FamilyObject>> {
    if n < 3 {
        return Err(Error::DegenerateParameters(format!(
            "arc digraph for {family} requires n >= 3 (got n={n})"
        )));
    }
    if n > crate::families::MAX_GROUND_SET {
        return Err(Error::InvalidParameters(format!(
            "n={n} exceeds the supported maximum {}",
            crate::families::MAX_GROUND_SET
        )));
    }
    let mut digraph: ArcDigraph<FamilyObject> = ArcDigraph::new();
    match family {
        Family::Permutations => {
            let vertices = all_permutations(n - 1);
            for pi in &vertices {
                digraph.add_vertex(FamilyObject::Permutation(pi.clone()).sort_key());
            }
            for pi in &vertices {
                let tail = FamilyObject::Permutation(pi.clone()).sort_key();
                for position in 1..=n {
                    let extended = pi.insert_max(position);
                    let head =
                        FamilyObject::Permutation(extended.drop_min()).sort_key();
                    let payload = FamilyObject::Permutation(extended);
                    let key = payload.sort_key();
                    digraph.add_arc(&tail, &head, payload, key)?;
                }
            }
        }
        Family::Involutions => {
            let vertices = all_involutions(n - 1);
            for tau in &vertices {
                digraph.add_vertex(FamilyObject::Involution(tau.clone()).sort_key());
            }
            for tau in &vertices {
                let tail = FamilyObject::Involution(tau.clone()).sort_key();
                let mut extensions = vec![tau.extend_fixed()];
                for p in tau.fixed_points() {
                    extensions.push(tau.extend_paired(p));
                }
                for extended in extensions {
                    let head =
                        FamilyObject::Involution(extended.drop_min()).sort_key();
                    let payload = FamilyObject::Involution(extended);
                    let key = payload.sort_key();
                    digraph.add_arc(&tail, &head, payload, key)?;
                }
            }
        }
        Family::Partitions => {
            let vertices = all_partitions(n - 1);
            for rho in &vertices {
                digraph.add_vertex(FamilyObject::Partition(rho.clone()).sort_key());
            }
            for rho in &vertices {
                let tail = FamilyObject::Partition(rho.clone()).sort_key();
                let mut extensions = vec![rho.extend_singleton()];
                for block in 0..rho.block_count() {
                    extensions.push(rho.extend_into_block(block));
                }
                for extended in extensions {
                    let head = FamilyObject::Partition(extended.drop_min()).sort_key();
                    let payload = FamilyObject::Partition(extended);
                    let key = payload.sort_key();
                    digraph.add_arc(&tail, &head, payload, key)?;
                }
            }
        }
        Family::Subsets | Family::Multisets => {
            return Err(Error::InvalidParameters(format!(
                "family {family} is built from a word backbone, not an arc digraph"
            )));
        }
    }
    Ok(digraph)
}

fn subset_windows(params: &FamilyParams) -> Result<WindowSequence> {
    let (n, k) = (params.n, params.k());
    let backbone = build_weight_range(n - 1, 2, k - 1, k)?;
    let mut windows = Vec::with_capacity(backbone.len());
    for start in 0..backbone.len() {
        let bits = backbone.window(start, n - 1);
        let weight: usize = bits.iter().map(|&b| b as usize).sum();
        debug_assert!(weight == k - 1 || weight == k);
        let mut edges: Vec<(usize, usize)> = bits
            .iter()
            .enumerate()
            .filter(|(_, &bit)| bit == 1)
            .map(|(index, _)| cycle_edge(index + 1, n))
            .collect();
        if weight == k - 1 {
            // deficit edge: the wrap-around edge stands in for the k-th element
            edges.push(cycle_edge(n, n));
        }
        windows.push(WindowGraph::Simple(LabeledGraph::new(n, edges)?));
    }
    WindowSequence::new(windows)
}

fn multiset_windows(params: &FamilyParams) -> Result<WindowSequence> {
    let (n, k) = (params.n, params.k());
    let backbone = build_weight_range(n - 1, k + 1, 0, k)?;
    let mut windows = Vec::with_capacity(backbone.len());
    for start in 0..backbone.len() {
        let letters = backbone.window(start, n - 1);
        let total: usize = letters.iter().map(|&c| c as usize).sum();
        debug_assert!(total <= k);
        let mut edges: Vec<((usize, usize), usize)> = letters
            .iter()
            .enumerate()
            .filter(|(_, &count)| count > 0)
            .map(|(index, &count)| (cycle_edge(index + 1, n), count as usize))
            .collect();
        if total < k {
            edges.push((cycle_edge(n, n), k - total));
        }
        windows.push(WindowGraph::Multi(LabeledMultigraph::new(n, edges)?));
    }
    WindowSequence::new(windows)
}

/// Builds the host graph whose windows realize the whole family exactly
/// once. The result is verified against the family before being returned;
/// a verification failure here means a builder bug and is surfaced, never
/// swallowed.
pub fn build_gucycle(params: &FamilyParams) -> Result<HostGraph> {
    params.validate()?;
    let seq = match params.family {
        Family::Subsets => subset_windows(params)?,
        Family::Multisets => multiset_windows(params)?,
        Family::Permutations | Family::Involutions | Family::Partitions => {
            let digraph = build_arc_digraph(params.family, params.n)?;
            let circuit = digraph.eulerian_circuit()?;
            WindowSequence::new(circuit.iter().map(|object| object.encode()).collect())?
        }
    };
    let host = host_from_window_sequence(&seq)?;
    let report = verify(&host, params)?;
    if !report.valid() {
        return Err(Error::FailedPostVerification(format!(
            "{} n={} k={:?}: {report}",
            params.family, params.n, params.k
        )));
    }
    Ok(host)
}
