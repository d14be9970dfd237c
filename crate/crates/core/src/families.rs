//! The five combinatorial families: k-subsets, k-multisets, permutations,
//! involutions, and set partitions of [n], together with their labeled-graph
//! encodings and strict decoders.
//!
//! Encodings (all on n vertices):
//! - subset S: edge e_j = {j, j+1 mod n} of the cycle C_n for each j in S
//! - multiset: multiplicity of e_j = count of element j
//! - permutation: vertices stand for values; edge {i,j} with i < j iff value
//!   i appears after value j in the one-line word
//! - involution: one K_2 per transposition, isolated vertices for fixed points
//! - partition: a clique on each block

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, LabeledMultigraph, WindowGraph};

/// Largest ground-set size: object sort keys store one byte per element.
pub const MAX_GROUND_SET: usize = 255;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Subsets,
    Multisets,
    Permutations,
    Involutions,
    Partitions,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Subsets,
        Family::Multisets,
        Family::Permutations,
        Family::Involutions,
        Family::Partitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Subsets => "subsets",
            Family::Multisets => "multisets",
            Family::Permutations => "permutations",
            Family::Involutions => "involutions",
            Family::Partitions => "partitions",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Whether the family takes a size parameter k besides n.
    pub fn takes_k(self) -> bool {
        matches!(self, Family::Subsets | Family::Multisets)
    }

    /// Whether windows of this family are multigraphs.
    pub fn is_multigraph(self) -> bool {
        matches!(self, Family::Multisets)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its parameters; `n` is both the ground-set size
/// and the window size of any host for the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
}

impl FamilyParams {
    /// Checks structural consistency only (k present exactly when the family
    /// takes one). Range checks live in [`Self::validate`].
    pub fn new(family: Family, n: usize, k: Option<usize>) -> Result<Self> {
        match (family.takes_k(), k) {
            (true, None) => Err(Error::InvalidParameters(format!(
                "family {family} requires a size parameter k"
            ))),
            (false, Some(_)) => Err(Error::InvalidParameters(format!(
                "family {family} takes no size parameter k"
            ))),
            _ => Ok(FamilyParams { family, n, k }),
        }
    }

    /// The k parameter; only meaningful for subsets and multisets.
    pub fn k(&self) -> usize {
        self.k.expect("family takes k")
    }

    /// Enforces the supported parameter ranges. Families at n <= 2 and
    /// one-member subset families (k = 0 or k = n) have no host satisfying
    /// the universal-cycle definition and are rejected as degenerate.
    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::DegenerateParameters(format!(
                "family {} requires n >= 3 (got n={}); at n <= 2 every window of a \
                 host induces the same labeled graph",
                self.family, self.n
            )));
        }
        if self.n > MAX_GROUND_SET {
            return Err(Error::InvalidParameters(format!(
                "n={} exceeds the supported maximum {MAX_GROUND_SET}",
                self.n
            )));
        }
        match self.family {
            Family::Subsets => {
                let k = self.k();
                if k == 0 || k == self.n {
                    return Err(Error::DegenerateParameters(format!(
                        "subsets with k={k} of [{}] form a one-member family with no \
                         universal cycle host",
                        self.n
                    )));
                }
                if k > self.n {
                    return Err(Error::InvalidParameters(format!(
                        "subsets require k <= n (got k={k}, n={})",
                        self.n
                    )));
                }
            }
            Family::Multisets => {
                let k = self.k();
                if k == 0 {
                    return Err(Error::DegenerateParameters(
                        "multisets with k=0 form a one-member family with no universal \
                         cycle host"
                            .into(),
                    ));
                }
                if k > crate::strings::MAX_ALPHABET - 1 {
                    return Err(Error::InvalidParameters(format!(
                        "multisets support k <= {} (got k={k})",
                        crate::strings::MAX_ALPHABET - 1
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// The j-th edge of the cycle C_n: e_j = {j, j+1} for j < n, e_n = {n, 1}.
pub(crate) fn cycle_edge(j: usize, n: usize) -> (usize, usize) {
    debug_assert!((1..=n).contains(&j) && n >= 3);
    if j < n {
        (j, j + 1)
    } else {
        (1, n)
    }
}

/// All n edges of the cycle C_n as normalized pairs.
pub fn cycle_edges(n: usize) -> BTreeSet<(usize, usize)> {
    (1..=n).map(|j| cycle_edge(j, n)).collect()
}

/// Index j such that the pair is e_j of C_n, if any.
fn cycle_edge_index(pair: (usize, usize), n: usize) -> Option<usize> {
    (1..=n).find(|&j| cycle_edge(j, n) == pair)
}

fn comma_join(elements: impl IntoIterator<Item = usize>) -> String {
    elements
        .into_iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Single digits read fine juxtaposed; wider ground sets need a separator.
fn digit_join(elements: impl IntoIterator<Item = usize>, n: usize) -> String {
    let sep = if n <= 9 { "" } else { " " };
    elements
        .into_iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// A k-subset of [n].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subset {
    n: usize,
    members: BTreeSet<usize>,
}

impl Subset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in members {
            if m < 1 || m > n {
                return Err(Error::InvalidParameters(format!(
                    "subset member {m} outside 1..={n}"
                )));
            }
            if !set.insert(m) {
                return Err(Error::InvalidParameters(format!(
                    "subset member {m} repeated"
                )));
            }
        }
        Ok(Subset { n, members: set })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", comma_join(self.members()))
    }
}

/// A k-multiset of [n].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Multiset {
    n: usize,
    counts: BTreeMap<usize, usize>,
}

impl Multiset {
    pub fn new(n: usize, counts: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (element, count) in counts {
            if element < 1 || element > n {
                return Err(Error::InvalidParameters(format!(
                    "multiset element {element} outside 1..={n}"
                )));
            }
            if count == 0 {
                return Err(Error::InvalidParameters(format!(
                    "multiset element {element} has count 0"
                )));
            }
            if map.insert(element, count).is_some() {
                return Err(Error::InvalidParameters(format!(
                    "multiset element {element} listed twice"
                )));
            }
        }
        Ok(Multiset { n, counts: map })
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for element in elements {
            *counts.entry(element).or_insert(0) += 1;
        }
        Multiset::new(n, counts)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, element: usize) -> usize {
        self.counts.get(&element).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&e, &c)| (e, c))
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elements = self
            .counts()
            .flat_map(|(e, c)| std::iter::repeat_n(e, c));
        write!(f, "{{{}}}", comma_join(elements))
    }
}

/// A permutation of [n] in one-line notation: `word[p-1]` is the value at
/// position p.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &value in &word {
            if value < 1 || value > n || seen[value] {
                return Err(Error::InvalidParameters(format!(
                    "word {word:?} is not a permutation of [1,{n}]"
                )));
            }
            seen[value] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// positions[v-1] is the position (1-based) of value v in the word.
    fn positions(&self) -> Vec<usize> {
        let mut positions = vec![0; self.word.len()];
        for (index, &value) in self.word.iter().enumerate() {
            positions[value - 1] = index + 1;
        }
        positions
    }

    /// Word of length n+1 with the new maximum value inserted at `position`
    /// (1-based); existing values keep their relative order.
    pub(crate) fn insert_max(&self, position: usize) -> Permutation {
        debug_assert!((1..=self.len() + 1).contains(&position));
        let mut word = self.word.clone();
        word.insert(position - 1, self.len() + 1);
        Permutation { word }
    }

    /// Removes value 1 and shifts the remaining values down by one,
    /// preserving their relative order.
    pub(crate) fn drop_min(&self) -> Permutation {
        let word = self
            .word
            .iter()
            .filter(|&&v| v != 1)
            .map(|&v| v - 1)
            .collect();
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { " " };
        let strings: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        f.write_str(&strings.join(sep))
    }
}

/// An involution of [n] as a set of disjoint transpositions; unpaired
/// elements are fixed points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Involution {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl Involution {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b || a < 1 || b < 1 || a > n || b > n {
                return Err(Error::InvalidParameters(format!(
                    "transposition ({a},{b}) invalid on [1,{n}]"
                )));
            }
            if used[a] || used[b] {
                return Err(Error::InvalidParameters(format!(
                    "transposition ({a},{b}) overlaps another pair"
                )));
            }
            used[a] = true;
            used[b] = true;
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Involution { n, pairs: set })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            n,
            pairs: BTreeSet::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for &(a, b) in &self.pairs {
            used[a] = true;
            used[b] = true;
        }
        (1..=self.n).filter(|&x| !used[x]).collect()
    }

    /// One-line word of the permutation.
    pub fn word(&self) -> Vec<usize> {
        let mut word: Vec<usize> = (1..=self.n).collect();
        for &(a, b) in &self.pairs {
            word[a - 1] = b;
            word[b - 1] = a;
        }
        word
    }

    /// Extends to [n+1] with the new element fixed.
    pub(crate) fn extend_fixed(&self) -> Involution {
        Involution {
            n: self.n + 1,
            pairs: self.pairs.clone(),
        }
    }

    /// Extends to [n+1] pairing the new element with the fixed point `p`.
    pub(crate) fn extend_paired(&self, p: usize) -> Involution {
        let mut pairs = self.pairs.clone();
        pairs.insert((p, self.n + 1));
        Involution {
            n: self.n + 1,
            pairs,
        }
    }

    /// Removes element 1 (its partner, if any, becomes fixed) and shifts the
    /// remaining labels down by one.
    pub(crate) fn drop_min(&self) -> Involution {
        let pairs = self
            .pairs
            .iter()
            .filter(|&&(a, _)| a != 1)
            .map(|&(a, b)| (a - 1, b - 1))
            .collect();
        Involution {
            n: self.n - 1,
            pairs,
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut partner = vec![0usize; self.n + 1];
        for &(a, b) in &self.pairs {
            partner[a] = b;
            partner[b] = a;
        }
        for (x, &p) in partner.iter().enumerate().skip(1) {
            if p == 0 {
                write!(f, "({x})")?;
            } else if p > x {
                if self.n <= 9 {
                    write!(f, "({x}{p})")?;
                } else {
                    write!(f, "({x} {p})")?;
                }
            }
        }
        Ok(())
    }
}

/// A partition of [n] into disjoint nonempty blocks, stored sorted by their
/// smallest elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<BTreeSet<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        let mut normalized: Vec<BTreeSet<usize>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidParameters("empty partition block".into()));
            }
            let mut set = BTreeSet::new();
            for x in block {
                if x < 1 || x > n {
                    return Err(Error::InvalidParameters(format!(
                        "partition element {x} outside 1..={n}"
                    )));
                }
                if used[x] || !set.insert(x) {
                    return Err(Error::InvalidParameters(format!(
                        "partition element {x} appears twice"
                    )));
                }
                used[x] = true;
            }
            normalized.push(set);
        }
        if used[1..].iter().any(|&u| !u) {
            return Err(Error::InvalidParameters(format!(
                "partition blocks do not cover [1,{n}]"
            )));
        }
        normalized.sort_by_key(|block| *block.first().expect("blocks nonempty"));
        Ok(SetPartition {
            n,
            blocks: normalized,
        })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition::new(n, (1..=n).map(|x| vec![x]).collect())
            .expect("singleton partition is well-formed")
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> impl Iterator<Item = &BTreeSet<usize>> {
        self.blocks.iter()
    }

    /// Restricted growth string: rgs[x-1] is the index of x's block in order
    /// of first appearance. A canonical, lexicographically comparable key.
    pub fn rgs(&self) -> Vec<u8> {
        let mut rgs = vec![0u8; self.n];
        for (index, block) in self.blocks.iter().enumerate() {
            for &x in block {
                rgs[x - 1] = index as u8;
            }
        }
        rgs
    }

    /// Extends to [n+1], adding the new element to the block with index
    /// `block` (in canonical order).
    pub(crate) fn extend_into_block(&self, block: usize) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks[block].insert(self.n + 1);
        SetPartition {
            n: self.n + 1,
            blocks,
        }
    }

    /// Extends to [n+1] with the new element in a block of its own.
    pub(crate) fn extend_singleton(&self) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks.push(BTreeSet::from([self.n + 1]));
        SetPartition {
            n: self.n + 1,
            blocks,
        }
    }

    /// Removes element 1 (dropping its block if it empties) and shifts the
    /// remaining labels down by one.
    pub(crate) fn drop_min(&self) -> SetPartition {
        let mut blocks: Vec<BTreeSet<usize>> = Vec::with_capacity(self.blocks.len());
        for block in &self.blocks {
            let shifted: BTreeSet<usize> =
                block.iter().filter(|&&x| x != 1).map(|&x| x - 1).collect();
            if !shifted.is_empty() {
                blocks.push(shifted);
            }
        }
        blocks.sort_by_key(|block| *block.first().expect("blocks nonempty"));
        SetPartition {
            n: self.n - 1,
            blocks,
        }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self
            .blocks
            .iter()
            .map(|block| digit_join(block.iter().copied(), self.n))
            .collect();
        f.write_str(&strings.join("|"))
    }
}

/// Any member of one of the five families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyObject {
    Subset(Subset),
    Multiset(Multiset),
    Permutation(Permutation),
    Involution(Involution),
    Partition(SetPartition),
}

impl FamilyObject {
    pub fn family(&self) -> Family {
        match self {
            FamilyObject::Subset(_) => Family::Subsets,
            FamilyObject::Multiset(_) => Family::Multisets,
            FamilyObject::Permutation(_) => Family::Permutations,
            FamilyObject::Involution(_) => Family::Involutions,
            FamilyObject::Partition(_) => Family::Partitions,
        }
    }

    /// Canonical byte key; lexicographic order on keys is the family's
    /// deterministic object order.
    pub fn sort_key(&self) -> Vec<u8> {
        match self {
            FamilyObject::Subset(s) => s.members().map(|m| m as u8).collect(),
            FamilyObject::Multiset(m) => m
                .counts()
                .flat_map(|(e, c)| std::iter::repeat_n(e as u8, c))
                .collect(),
            FamilyObject::Permutation(p) => p.word().iter().map(|&v| v as u8).collect(),
            FamilyObject::Involution(i) => i.word().iter().map(|&v| v as u8).collect(),
            FamilyObject::Partition(p) => p.rgs(),
        }
    }

    /// The labeled-graph window encoding of the object.
    pub fn encode(&self) -> WindowGraph {
        match self {
            FamilyObject::Subset(s) => {
                let n = s.ground_size();
                let edges = s.members().map(|j| cycle_edge(j, n));
                WindowGraph::Simple(LabeledGraph::new(n, edges).expect("cycle edges are distinct"))
            }
            FamilyObject::Multiset(m) => {
                let n = m.ground_size();
                let edges = m.counts().map(|(j, c)| (cycle_edge(j, n), c));
                WindowGraph::Multi(
                    LabeledMultigraph::new(n, edges).expect("cycle edges are distinct"),
                )
            }
            FamilyObject::Permutation(p) => {
                let n = p.len();
                let positions = p.positions();
                let mut edges = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        if positions[i - 1] > positions[j - 1] {
                            edges.push((i, j));
                        }
                    }
                }
                WindowGraph::Simple(LabeledGraph::new(n, edges).expect("pairs are distinct"))
            }
            FamilyObject::Involution(i) => WindowGraph::Simple(
                LabeledGraph::new(i.ground_size(), i.pairs()).expect("pairs are disjoint"),
            ),
            FamilyObject::Partition(p) => {
                let mut edges = Vec::new();
                for block in p.blocks() {
                    for pair in block.iter().combinations(2) {
                        edges.push((*pair[0], *pair[1]));
                    }
                }
                WindowGraph::Simple(
                    LabeledGraph::new(p.ground_size(), edges).expect("blocks are disjoint"),
                )
            }
        }
    }
}

impl fmt::Display for FamilyObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyObject::Subset(x) => x.fmt(f),
            FamilyObject::Multiset(x) => x.fmt(f),
            FamilyObject::Permutation(x) => x.fmt(f),
            FamilyObject::Involution(x) => x.fmt(f),
            FamilyObject::Partition(x) => x.fmt(f),
        }
    }
}

/// All permutations of [n] in lexicographic word order. No range validation;
/// the order-isomorphism string mode needs small n too.
pub(crate) fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|word| Permutation { word })
        .collect()
}

/// All involutions of [n], sorted by one-line word.
pub(crate) fn all_involutions(n: usize) -> Vec<Involution> {
    fn extend(n: usize, free: &[usize], pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Involution>) {
        match free.split_first() {
            None => out.push(Involution {
                n,
                pairs: pairs.iter().copied().collect(),
            }),
            Some((&x, rest)) => {
                // x stays fixed
                extend(n, rest, pairs, out);
                // or pairs with any later free element
                for (index, &y) in rest.iter().enumerate() {
                    let remaining: Vec<usize> = rest
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != index)
                        .map(|(_, &v)| v)
                        .collect();
                    pairs.push((x, y));
                    extend(n, &remaining, pairs, out);
                    pairs.pop();
                }
            }
        }
    }
    let free: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    extend(n, &free, &mut Vec::new(), &mut out);
    out.sort_by_key(|i| i.word());
    out
}

/// All partitions of [n] in restricted-growth-string order.
pub(crate) fn all_partitions(n: usize) -> Vec<SetPartition> {
    fn extend(n: usize, rgs: &mut Vec<u8>, max: u8, out: &mut Vec<SetPartition>) {
        if rgs.len() == n {
            let blocks = rgs_to_blocks(rgs);
            out.push(SetPartition { n, blocks });
            return;
        }
        for value in 0..=max + 1 {
            rgs.push(value);
            extend(n, rgs, max.max(value), out);
            rgs.pop();
        }
    }
    fn rgs_to_blocks(rgs: &[u8]) -> Vec<BTreeSet<usize>> {
        let count = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut blocks = vec![BTreeSet::new(); count];
        for (index, &b) in rgs.iter().enumerate() {
            blocks[b as usize].insert(index + 1);
        }
        blocks
    }
    if n == 0 {
        return vec![SetPartition {
            n: 0,
            blocks: Vec::new(),
        }];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0u8];
    extend(n, &mut rgs, 0, &mut out);
    out
}

/// Complete, duplicate-free enumeration of the family in deterministic
/// lexicographic order.
pub fn enumerate(params: &FamilyParams) -> Result<Vec<FamilyObject>> {
    params.validate()?;
    let n = params.n;
    Ok(match params.family {
        Family::Subsets => (1..=n)
            .combinations(params.k())
            .map(|members| {
                FamilyObject::Subset(Subset {
                    n,
                    members: members.into_iter().collect(),
                })
            })
            .collect(),
        Family::Multisets => (1..=n)
            .combinations_with_replacement(params.k())
            .map(|elements| {
                FamilyObject::Multiset(
                    Multiset::from_elements(n, elements).expect("elements are in range"),
                )
            })
            .collect(),
        Family::Permutations => all_permutations(n)
            .into_iter()
            .map(FamilyObject::Permutation)
            .collect(),
        Family::Involutions => all_involutions(n)
            .into_iter()
            .map(FamilyObject::Involution)
            .collect(),
        Family::Partitions => all_partitions(n)
            .into_iter()
            .map(FamilyObject::Partition)
            .collect(),
    })
}

fn require_simple(window: &WindowGraph, what: &str) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for ((a, b), mult) in window.pairs() {
        if mult > 1 {
            return Err(Error::NotInFamily(format!(
                "edge ({a},{b}) has multiplicity {mult}, but {what} are simple graphs"
            )));
        }
        edges.push((a, b));
    }
    Ok(edges)
}

/// Strict left inverse of [`FamilyObject::encode`]: decodes a window graph
/// back to a family member, rejecting anything outside the encode image.
pub fn decode(window: &WindowGraph, params: &FamilyParams) -> Result<FamilyObject> {
    let n = params.n;
    if window.order() != n {
        return Err(Error::NotInFamily(format!(
            "window has order {}, family expects {n}",
            window.order()
        )));
    }
    match params.family {
        Family::Subsets => {
            let edges = require_simple(window, "subset encodings")?;
            let mut members = BTreeSet::new();
            for pair in edges {
                let j = cycle_edge_index(pair, n).ok_or_else(|| {
                    Error::NotInFamily(format!(
                        "edge ({},{}) is not an edge of the cycle C_{n}",
                        pair.0, pair.1
                    ))
                })?;
                members.insert(j);
            }
            if members.len() != params.k() {
                return Err(Error::NotInFamily(format!(
                    "{} cycle edges present, expected k={}",
                    members.len(),
                    params.k()
                )));
            }
            Ok(FamilyObject::Subset(Subset { n, members }))
        }
        Family::Multisets => {
            if n == 2 {
                return Err(Error::NotInFamily(
                    "multiset windows on 2 vertices are ambiguous: the two cycle edge \
                     slots join the same vertex pair"
                        .into(),
                ));
            }
            let mut counts = BTreeMap::new();
            let mut total = 0;
            for (pair, mult) in window.pairs() {
                let j = cycle_edge_index(pair, n).ok_or_else(|| {
                    Error::NotInFamily(format!(
                        "edge ({},{}) is not an edge of the cycle C_{n}",
                        pair.0, pair.1
                    ))
                })?;
                counts.insert(j, mult);
                total += mult;
            }
            if total != params.k() {
                return Err(Error::NotInFamily(format!(
                    "multiplicities sum to {total}, expected k={}",
                    params.k()
                )));
            }
            Ok(FamilyObject::Multiset(Multiset { n, counts }))
        }
        Family::Permutations => {
            let edges = require_simple(window, "permutation graphs")?;
            let edge_set: BTreeSet<(usize, usize)> = edges.into_iter().collect();
            // value a precedes value b in the word iff the pair is a non-edge
            // (a < b) or an edge (a > b)
            let precedes = |a: usize, b: usize| -> bool {
                let pair = (a.min(b), a.max(b));
                edge_set.contains(&pair) == (a > b)
            };
            let mut word: Vec<usize> = (1..=n).collect();
            word.sort_by_key(|&v| (1..=n).filter(|&u| u != v && precedes(u, v)).count());
            for i in 0..n {
                for j in (i + 1)..n {
                    if !precedes(word[i], word[j]) {
                        return Err(Error::NotInFamily(
                            "precedence relation is not a total order; the graph is \
                             not a permutation graph"
                                .into(),
                        ));
                    }
                }
            }
            Ok(FamilyObject::Permutation(Permutation { word }))
        }
        Family::Involutions => {
            let edges = require_simple(window, "transposition graphs")?;
            let mut degree = vec![0usize; n + 1];
            for &(a, b) in &edges {
                degree[a] += 1;
                degree[b] += 1;
            }
            if let Some(v) = (1..=n).find(|&v| degree[v] > 1) {
                return Err(Error::NotInFamily(format!(
                    "vertex {v} has degree {}; components must be single vertices or \
                     single edges",
                    degree[v]
                )));
            }
            Ok(FamilyObject::Involution(Involution {
                n,
                pairs: edges.into_iter().collect(),
            }))
        }
        Family::Partitions => {
            let edges = require_simple(window, "partition encodings")?;
            let mut parent: Vec<usize> = (0..=n).collect();
            fn find(parent: &mut [usize], mut v: usize) -> usize {
                while parent[v] != v {
                    parent[v] = parent[parent[v]];
                    v = parent[v];
                }
                v
            }
            let edge_set: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
            for &(a, b) in &edges {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
            let mut components: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            for v in 1..=n {
                let root = find(&mut parent, v);
                components.entry(root).or_default().insert(v);
            }
            let blocks: Vec<BTreeSet<usize>> = components.into_values().collect();
            for block in &blocks {
                for pair in block.iter().combinations(2) {
                    if !edge_set.contains(&(*pair[0], *pair[1])) {
                        return Err(Error::NotInFamily(format!(
                            "component {{{}}} is not a clique: pair ({},{}) missing",
                            comma_join(block.iter().copied()),
                            pair[0],
                            pair[1]
                        )));
                    }
                }
            }
            let mut blocks = blocks;
            blocks.sort_by_key(|block| *block.first().expect("components nonempty"));
            Ok(FamilyObject::Partition(SetPartition { n, blocks }))
        }
    }
}
