//! Directed multigraph with payload-carrying arcs and a deterministic
//! Eulerian circuit.
//!
//! Vertices are opaque byte keys; parallel arcs and loops are allowed. An
//! Eulerian circuit exists iff the digraph is balanced (in-degree equals
//! out-degree everywhere) and weakly connected on its nonzero-degree
//! vertices, and when it does, the circuit visits every arc exactly once and
//! spells out a universal cycle of the arc payloads.

use std::collections::BTreeMap;

use crate::error::{BalanceOffender, Error, Result};

#[derive(Debug, Clone)]
struct Arc<P> {
    tail: usize,
    head: usize,
    payload: P,
    sort_key: Vec<u8>,
}

/// Directed multigraph whose arcs carry the objects being cycled.
#[derive(Debug, Clone, Default)]
pub struct ArcDigraph<P> {
    key_index: BTreeMap<Vec<u8>, usize>,
    keys: Vec<Vec<u8>>,
    arcs: Vec<Arc<P>>,
    out_arcs: Vec<Vec<usize>>,
    in_degree: Vec<usize>,
}

impl<P: Clone> ArcDigraph<P> {
    pub fn new() -> Self {
        ArcDigraph {
            key_index: BTreeMap::new(),
            keys: Vec::new(),
            arcs: Vec::new(),
            out_arcs: Vec::new(),
            in_degree: Vec::new(),
        }
    }

    /// Registers a vertex; harmless if the key is already present. Vertices
    /// that never receive an arc are ignored by the connectivity check.
    pub fn add_vertex(&mut self, key: impl Into<Vec<u8>>) -> usize {
        let key = key.into();
        if let Some(&index) = self.key_index.get(&key) {
            return index;
        }
        let index = self.out_arcs.len();
        self.key_index.insert(key.clone(), index);
        self.keys.push(key);
        self.out_arcs.push(Vec::new());
        self.in_degree.push(0);
        index
    }

    /// Adds an arc between registered vertices. The sort key fixes the
    /// deterministic traversal order of the circuit.
    pub fn add_arc(
        &mut self,
        tail: &[u8],
        head: &[u8],
        payload: P,
        sort_key: Vec<u8>,
    ) -> Result<()> {
        let tail = *self.key_index.get(tail).ok_or_else(|| {
            Error::InvalidGraph(format!("arc tail {tail:?} is not a registered vertex"))
        })?;
        let head = *self.key_index.get(head).ok_or_else(|| {
            Error::InvalidGraph(format!("arc head {head:?} is not a registered vertex"))
        })?;
        let id = self.arcs.len();
        self.arcs.push(Arc {
            tail,
            head,
            payload,
            sort_key,
        });
        self.out_arcs[tail].push(id);
        self.in_degree[head] += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.out_arcs.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Vertex keys in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = &[u8]> {
        self.key_index.keys().map(|key| key.as_slice())
    }

    pub fn out_degree(&self, key: &[u8]) -> Option<usize> {
        self.key_index.get(key).map(|&v| self.out_arcs[v].len())
    }

    pub fn in_degree(&self, key: &[u8]) -> Option<usize> {
        self.key_index.get(key).map(|&v| self.in_degree[v])
    }

    /// Payloads of the arcs leaving `key`, with their head vertex keys,
    /// ordered by sort key.
    pub fn arcs_from(&self, key: &[u8]) -> Vec<(&[u8], &P)> {
        let Some(&vertex) = self.key_index.get(key) else {
            return Vec::new();
        };
        let mut ids: Vec<usize> = self.out_arcs[vertex].clone();
        ids.sort_by(|&a, &b| self.arcs[a].sort_key.cmp(&self.arcs[b].sort_key).then(a.cmp(&b)));
        ids.iter()
            .map(|&id| {
                let arc = &self.arcs[id];
                (self.key_of(arc.head), &arc.payload)
            })
            .collect()
    }

    fn key_of(&self, vertex: usize) -> &[u8] {
        &self.keys[vertex]
    }

    /// Vertices where in-degree differs from out-degree, ascending by key.
    /// Empty iff the digraph is balanced.
    pub fn balance_offenders(&self) -> Vec<BalanceOffender> {
        self.key_index
            .iter()
            .filter_map(|(key, &v)| {
                let (i, o) = (self.in_degree[v], self.out_arcs[v].len());
                (i != o).then(|| BalanceOffender {
                    vertex: key.clone(),
                    in_degree: i,
                    out_degree: o,
                })
            })
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.out_arcs.len()).all(|v| self.in_degree[v] == self.out_arcs[v].len())
    }

    /// True iff the underlying undirected graph restricted to vertices of
    /// nonzero degree is connected. Zero-degree vertices are ignored.
    pub fn is_weakly_connected(&self) -> bool {
        let n = self.out_arcs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for arc in &self.arcs {
            let (a, b) = (find(&mut parent, arc.tail), find(&mut parent, arc.head));
            if a != b {
                parent[a] = b;
            }
        }
        let mut root = None;
        for v in 0..n {
            if self.in_degree[v] + self.out_arcs[v].len() == 0 {
                continue;
            }
            let r = find(&mut parent, v);
            match root {
                None => root = Some(r),
                Some(existing) if existing != r => return false,
                _ => {}
            }
        }
        true
    }

    /// Deterministic Eulerian circuit: re-checks balance and connectivity,
    /// then walks Hierholzer-style starting from the smallest nonzero-degree
    /// vertex key, always taking the unused arc with the smallest sort key.
    /// The result is rotated so the smallest payload sort key comes first,
    /// and lists every arc's payload exactly once in circuit order.
    pub fn eulerian_circuit(&self) -> Result<Vec<P>> {
        let offenders = self.balance_offenders();
        if !offenders.is_empty() {
            return Err(Error::NotBalanced { offenders });
        }
        if !self.is_weakly_connected() {
            return Err(Error::NotConnected);
        }
        if self.arcs.is_empty() {
            return Ok(Vec::new());
        }

        let mut adjacency = self.out_arcs.clone();
        for list in &mut adjacency {
            list.sort_by(|&a, &b| {
                self.arcs[a].sort_key.cmp(&self.arcs[b].sort_key).then(a.cmp(&b))
            });
        }
        let start = self
            .key_index
            .values()
            .copied()
            .find(|&v| !adjacency[v].is_empty())
            .expect("a nonzero-degree vertex exists");

        let mut next_unused = vec![0usize; adjacency.len()];
        let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
        let mut circuit: Vec<usize> = Vec::with_capacity(self.arcs.len());
        while let Some(&(vertex, _)) = stack.last() {
            if next_unused[vertex] < adjacency[vertex].len() {
                let arc = adjacency[vertex][next_unused[vertex]];
                next_unused[vertex] += 1;
                stack.push((self.arcs[arc].head, Some(arc)));
            } else {
                let (_, via) = stack.pop().expect("stack nonempty");
                if let Some(arc) = via {
                    circuit.push(arc);
                }
            }
        }
        circuit.reverse();
        debug_assert_eq!(circuit.len(), self.arcs.len());

        let first = circuit
            .iter()
            .enumerate()
            .min_by(|(_, &a), (_, &b)| self.arcs[a].sort_key.cmp(&self.arcs[b].sort_key))
            .map(|(i, _)| i)
            .unwrap_or(0);
        circuit.rotate_left(first);
        Ok(circuit
            .into_iter()
            .map(|arc| self.arcs[arc].payload.clone())
            .collect())
    }
}
