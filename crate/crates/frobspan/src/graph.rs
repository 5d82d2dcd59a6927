//! Finite 1-dimensional CW complexes as multigraphs.
//!
//! Vertices are 0-cells, edges are 1-cells. Loops and parallel edges are
//! first-class: a loop `(u, u)` is one edge incident to one vertex in the
//! Euler formula. The complete homotopy invariant of a component is its
//! first Betti number `b1 = E - V + 1`.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("edge index {index} out of range (edge count {edge_count})")]
    InvalidEdge { index: usize, edge_count: usize },
}

/// A finite multigraph. The edge list order carries no semantic meaning;
/// every invariant computed here is insensitive to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph with `vertex_count` isolated vertices.
    pub fn discrete(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::InvalidVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components. `comp_of[v]` is the component identifier of
    /// vertex `v`, canonically the smallest vertex index in the component.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.canonical_labels()
    }

    /// First Betti number of each component, keyed by component identifier.
    /// For a component K: `b1(K) = |E_K| - |V_K| + 1`.
    pub fn betti_numbers(&self) -> BTreeMap<usize, usize> {
        let comp_of = self.components();
        let mut vertices: BTreeMap<usize, usize> = BTreeMap::new();
        let mut edges: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &comp_of {
            *vertices.entry(c).or_insert(0) += 1;
        }
        for &(u, _) in &self.edges {
            // both endpoints lie in the same component
            *edges.entry(comp_of[u]).or_insert(0) += 1;
        }
        vertices
            .into_iter()
            .map(|(c, v)| (c, edges.get(&c).copied().unwrap_or(0) + 1 - v))
            .collect()
    }

    /// Disjoint union. Returns the combined graph together with the vertex
    /// reindex maps for `self` and `other`.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, Vec<usize>, Vec<usize>) {
        let offset = self.vertex_count;
        let map_left: Vec<usize> = (0..self.vertex_count).collect();
        let map_right: Vec<usize> = (0..other.vertex_count).map(|v| v + offset).collect();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        (
            Graph {
                vertex_count: self.vertex_count + other.vertex_count,
                edges,
            },
            map_left,
            map_right,
        )
    }

    /// Append edges (attach 1-cells). The vertex set is unchanged.
    pub fn attach_edges(&self, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= self.vertex_count {
                    return Err(GraphError::InvalidVertex {
                        vertex: w,
                        vertex_count: self.vertex_count,
                    });
                }
            }
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(pairs);
        Ok(Graph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Replace edge `(u, v)` at `edge_index` by `(u, w), (w, v)` with a
    /// fresh vertex `w`. Homotopy equivalence: all Betti numbers are
    /// preserved.
    pub fn subdivide_edge(&self, edge_index: usize) -> Result<Graph, GraphError> {
        let &(u, v) = self
            .edges
            .get(edge_index)
            .ok_or(GraphError::InvalidEdge {
                index: edge_index,
                edge_count: self.edges.len(),
            })?;
        let w = self.vertex_count;
        let mut edges = self.edges.clone();
        edges[edge_index] = (u, w);
        edges.push((w, v));
        Ok(Graph {
            vertex_count: self.vertex_count + 1,
            edges,
        })
    }
}

/// Union-find with path compression and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }

    /// Label of each element, canonicalized to the smallest element index
    /// in its class.
    pub fn canonical_labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        let mut min_of_root: Vec<usize> = (0..n).collect();
        for x in 0..n {
            if x < min_of_root[roots[x]] {
                min_of_root[roots[x]] = x;
            }
        }
        (0..n).map(|x| min_of_root[roots[x]]).collect()
    }
}
