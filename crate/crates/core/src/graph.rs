//! Labeled graphs, multigraphs, and the cyclic host graphs whose relabeled
//! windows spell out a family of combinatorial objects.
//!
//! Vertices are labeled 1..=order. Equality everywhere is exact labeled
//! equality; the only relabeling in the crate is the explicit one performed
//! by window extraction.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

fn normalize_pair(a: usize, b: usize, order: usize) -> Result<(usize, usize)> {
    if a == b {
        return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
    }
    if a < 1 || a > order || b < 1 || b > order {
        return Err(Error::InvalidGraph(format!(
            "edge ({a},{b}) has an endpoint outside 1..={order}"
        )));
    }
    Ok((a.min(b), a.max(b)))
}

/// Simple graph on vertices 1..=order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledGraph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    /// Builds a graph from unordered endpoint pairs. Rejects loops, repeated
    /// pairs, and out-of-range endpoints.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGraph("graph order must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let pair = normalize_pair(a, b, order)?;
            if !set.insert(pair) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) listed twice",
                    pair.0, pair.1
                )));
            }
        }
        Ok(LabeledGraph { order, edges: set })
    }

    pub fn empty(order: usize) -> Self {
        LabeledGraph::new(order, []).expect("empty graph is always well-formed")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (a, b) pairs with a < b, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }
}

/// Multigraph on vertices 1..=order; parallel edges carry a multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledMultigraph {
    order: usize,
    edges: BTreeMap<(usize, usize), usize>,
}

impl LabeledMultigraph {
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGraph("graph order must be positive".into()));
        }
        let mut map = BTreeMap::new();
        for ((a, b), mult) in edges {
            let pair = normalize_pair(a, b, order)?;
            if mult == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) has multiplicity 0",
                    pair.0, pair.1
                )));
            }
            if map.insert(pair, mult).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) listed twice",
                    pair.0, pair.1
                )));
            }
        }
        Ok(LabeledMultigraph { order, edges: map })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Distinct vertex pairs carrying at least one edge.
    pub fn pair_count(&self) -> usize {
        self.edges.len()
    }

    /// Total edge count with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().map(|(&pair, &mult)| (pair, mult))
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        if a == b {
            return 0;
        }
        self.edges
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or(0)
    }
}

/// A window extracted from a host: simple or multi, matching the host kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum WindowGraph {
    Simple(LabeledGraph),
    Multi(LabeledMultigraph),
}

impl WindowGraph {
    pub fn order(&self) -> usize {
        match self {
            WindowGraph::Simple(g) => g.order(),
            WindowGraph::Multi(g) => g.order(),
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, WindowGraph::Simple(_))
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        match self {
            WindowGraph::Simple(g) => usize::from(g.contains_edge(a, b)),
            WindowGraph::Multi(g) => g.multiplicity(a, b),
        }
    }

    /// Edge pairs with positive multiplicity, ascending.
    pub fn pairs(&self) -> Vec<((usize, usize), usize)> {
        match self {
            WindowGraph::Simple(g) => g.edges().map(|pair| (pair, 1)).collect(),
            WindowGraph::Multi(g) => g.edges().collect(),
        }
    }
}

/// Cyclic host graph: N vertices on a cycle, window size n. Its N induced,
/// relabeled n-windows are the payload of the whole crate.
///
/// Edges joining vertices at cyclic distance >= n would be observed by no
/// window, so they are forbidden; this keeps the representation canonical
/// (two hosts with the same window behavior are equal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostGraph {
    size: usize,
    window: usize,
    edges: BTreeMap<(usize, usize), usize>,
    simple: bool,
}

impl HostGraph {
    pub fn new(
        size: usize,
        window: usize,
        edges: impl IntoIterator<Item = ((usize, usize), usize)>,
        simple: bool,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidGraph("host size must be positive".into()));
        }
        if window < 2 || window > size {
            return Err(Error::InvalidGraph(format!(
                "window size {window} outside 2..={size}"
            )));
        }
        let mut map = BTreeMap::new();
        for ((a, b), mult) in edges {
            let pair = normalize_pair(a, b, size)?;
            if mult == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) has multiplicity 0",
                    pair.0, pair.1
                )));
            }
            if simple && mult > 1 {
                return Err(Error::InvalidGraph(format!(
                    "simple host has edge ({},{}) with multiplicity {mult}",
                    pair.0, pair.1
                )));
            }
            let distance = cyclic_distance(pair.0, pair.1, size);
            if distance >= window {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) at cyclic distance {distance} is invisible to every \
                     window of size {window}",
                    pair.0, pair.1
                )));
            }
            if map.insert(pair, mult).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "edge ({},{}) listed twice",
                    pair.0, pair.1
                )));
            }
        }
        Ok(HostGraph {
            size,
            window,
            edges: map,
            simple,
        })
    }

    /// Number of host vertices, N.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Window size, n.
    pub fn window_size(&self) -> usize {
        self.window
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().map(|(&pair, &mult)| (pair, mult))
    }

    pub fn edge_pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        if a == b {
            return 0;
        }
        self.edges
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or(0)
    }

    /// Host vertex at window position `pos` (1-based) of the window starting
    /// at vertex `i`.
    pub fn position_vertex(&self, i: usize, pos: usize) -> usize {
        (i - 1 + pos - 1) % self.size + 1
    }

    /// The i-th n-window: the subgraph induced by host vertices
    /// v_i..v_{i+n-1} (indices wrapping), relabeled so v_{i+j-1} becomes j.
    pub fn window(&self, i: usize) -> Result<WindowGraph> {
        if i < 1 || i > self.size {
            return Err(Error::WindowIndexOutOfRange {
                index: i,
                size: self.size,
            });
        }
        let n = self.window;
        let mut pairs = Vec::new();
        for a in 1..=n {
            let x = self.position_vertex(i, a);
            for b in (a + 1)..=n {
                let y = self.position_vertex(i, b);
                let mult = self.multiplicity(x, y);
                if mult > 0 {
                    pairs.push(((a, b), mult));
                }
            }
        }
        Ok(if self.simple {
            WindowGraph::Simple(LabeledGraph::new(n, pairs.into_iter().map(|(p, _)| p))?)
        } else {
            WindowGraph::Multi(LabeledMultigraph::new(n, pairs)?)
        })
    }
}

/// min(|a-b|, N-|a-b|): distance along the host cycle.
pub fn cyclic_distance(a: usize, b: usize, size: usize) -> usize {
    let diff = a.abs_diff(b);
    diff.min(size - diff)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Host from the all-permutations-of-[3] example: N=6, n=3.
    pub(crate) fn h3() -> HostGraph {
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
    fn window_of_h3_at_1_is_triangle() {
        let window = h3().window(1).unwrap();
        let expected = LabeledGraph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(window, WindowGraph::Simple(expected));
    }

    #[test]
    fn window_of_h3_at_5_is_empty() {
        let window = h3().window(5).unwrap();
        assert_eq!(window, WindowGraph::Simple(LabeledGraph::empty(3)));
    }

    #[test]
    fn window_of_edgeless_host_is_empty() {
        let host = HostGraph::new(7, 3, [], true).unwrap();
        for i in 1..=7 {
            assert_eq!(host.window(i).unwrap(), WindowGraph::Simple(LabeledGraph::empty(3)));
        }
    }

    #[test]
    fn window_index_out_of_range() {
        let host = h3();
        assert!(matches!(
            host.window(0),
            Err(Error::WindowIndexOutOfRange { index: 0, size: 6 })
        ));
        assert!(matches!(
            host.window(7),
            Err(Error::WindowIndexOutOfRange { index: 7, size: 6 })
        ));
    }

    #[test]
    fn host_rejects_invisible_edge() {
        // distance(1,4) = 3 in a 6-cycle, but windows of size 3 only span 2
        let result = HostGraph::new(6, 3, [((1, 4), 1)], true);
        assert!(matches!(result, Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn host_rejects_multiplicity_in_simple() {
        let result = HostGraph::new(6, 3, [((1, 2), 2)], true);
        assert!(matches!(result, Err(Error::InvalidGraph(_))));
        assert!(HostGraph::new(6, 3, [((1, 2), 2)], false).is_ok());
    }

    #[test]
    fn labeled_graph_rejects_duplicates_and_loops() {
        assert!(LabeledGraph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(LabeledGraph::new(3, [(2, 2)]).is_err());
        assert!(LabeledGraph::new(3, [(1, 4)]).is_err());
    }

    #[test]
    fn multigraph_rejects_zero_multiplicity() {
        assert!(LabeledMultigraph::new(3, [((1, 2), 0)]).is_err());
    }

    #[test]
    fn window_equals_naive_edge_scan() {
        // Independent oracle: walk host edges and project them into the window
        // instead of probing window pairs.
        let host = h3();
        for i in 1..=host.size() {
            let mut expected = Vec::new();
            for ((x, y), mult) in host.edges() {
                let px = (x + host.size() - i) % host.size() + 1;
                let py = (y + host.size() - i) % host.size() + 1;
                if px <= host.window_size() && py <= host.window_size() {
                    expected.push(((px.min(py), px.max(py)), mult));
                }
            }
            expected.sort();
            assert_eq!(host.window(i).unwrap().pairs(), expected);
        }
    }
}
