use std::collections::VecDeque;
use std::fmt::Write;

use super::{enumerate_sym, Permutation};
use crate::error::{Error, Result};

/// Kendall adjacency graph of `Sym(L)`: permutations joined when they differ
/// by swapping two adjacent entries of the one-line form.
#[derive(Clone, Debug)]
pub struct AdjacencyGraph {
    degree: usize,
    nodes: Vec<Permutation>,
    neighbors: Vec<Vec<usize>>,
}

impl AdjacencyGraph {
    pub const MIN_DEGREE: usize = 2;
    pub const MAX_DEGREE: usize = 6;

    pub fn kendall(degree: usize) -> Result<Self> {
        if !(Self::MIN_DEGREE..=Self::MAX_DEGREE).contains(&degree) {
            return Err(Error::DegreeOutOfRange {
                degree,
                min: Self::MIN_DEGREE,
                max: Self::MAX_DEGREE,
            });
        }
        let nodes = enumerate_sym(degree)?;
        let neighbors = nodes
            .iter()
            .map(|node| {
                (0..degree - 1)
                    .map(|i| {
                        let mut image = node.as_slice().to_vec();
                        image.swap(i, i + 1);
                        Permutation::from_vec_unchecked(image).lex_rank()
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            degree,
            nodes,
            neighbors,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nodes in lexicographic order; a node's index is its `lex_rank`.
    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.neighbors[node]
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Breadth-first hop counts from `source` to every node.
    pub fn shortest_paths_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.shortest_paths_from(0).iter().all(Option::is_some)
    }

    /// Graphviz DOT with one-line forms as node names.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph kendall_sym{} {{\n", self.degree);
        for node in &self.nodes {
            writeln!(out, "  \"{}\";", node.compact()).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.nodes[u].compact(),
                self.nodes[v].compact()
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// One `u<TAB>v` line per edge.
    pub fn to_edge_list(&self) -> String {
        self.edges()
            .map(|(u, v)| format!("{}\t{}\n", self.nodes[u].compact(), self.nodes[v].compact()))
            .collect()
    }
}
