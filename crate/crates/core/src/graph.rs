//! Simple undirected graphs on vertices `1..=n`.
//!
//! The edge order given at construction is kept: edge `k` is the coordinate
//! `t_k` of the ambient projective space.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted endpoint pairs, in coordinate order.
    edges: Vec<(usize, usize)>,
}

/// One connected component, with its 2-coloring when it is bipartite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl Component {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    /// Components ordered by smallest vertex.
    pub components: Vec<Component>,
}

impl ComponentProfile {
    /// b₀: number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// γ: number of non-bipartite components.
    pub fn non_bipartite_count(&self) -> usize {
        self.components.iter().filter(|c| !c.is_bipartite()).count()
    }
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            stored.push(e);
        }
        Ok(Graph { n, edges: stored })
    }

    /// C_len with edges {1,2}, {2,3}, ..., {len,1}.
    pub fn cycle(len: usize) -> Result<Self> {
        if len < 3 {
            return Err(Error::InvalidSize("cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (1..=len).map(|i| (i, i % len + 1)).collect();
        Self::new(len, &edges)
    }

    /// P_len on `len` vertices with edges {1,2}, ..., {len-1,len}.
    pub fn path(len: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::InvalidSize("path needs at least 2 vertices"));
        }
        let edges: Vec<_> = (1..len).map(|i| (i, i + 1)).collect();
        Self::new(len, &edges)
    }

    /// K_{a,b} with parts `1..=a` and `a+1..=a+b`; edges row by row.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidSize("complete bipartite parts must be nonempty"));
        }
        let mut edges = Vec::with_capacity(a * b);
        for i in 1..=a {
            for j in 1..=b {
                edges.push((i, a + j));
            }
        }
        Self::new(a + b, &edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        Graph { n: self.n + other.n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertices touched by at least one edge, ascending.
    pub fn covered_vertices(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for &(a, b) in &self.edges {
            used[a] = true;
            used[b] = true;
        }
        (1..=self.n).filter(|&v| used[v]).collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Components and bipartiteness by breadth-first 2-coloring.
    pub fn component_profile(&self) -> ComponentProfile {
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; self.n + 1];
        let mut components = Vec::new();
        for start in 1..=self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            let mut vertices = Vec::new();
            let mut bipartite = true;
            while let Some(v) = queue.pop_front() {
                vertices.push(v);
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
            vertices.sort_unstable();
            let bipartition = bipartite.then(|| {
                vertices.iter().partition::<Vec<usize>, _>(|&&v| color[v] == Some(false))
            });
            components.push(Component { vertices, bipartition });
        }
        ComponentProfile { components }
    }

    /// 0/1 exponent vector of length n for each edge monomial x_i x_j, in edge order.
    pub fn edge_monomial_exponents(&self) -> Vec<Vec<u32>> {
        self.edges
            .iter()
            .map(|&(a, b)| {
                let mut v = vec![0u32; self.n];
                v[a - 1] = 1;
                v[b - 1] = 1;
                v
            })
            .collect()
    }
}
