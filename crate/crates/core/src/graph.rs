//! Zero-divisor graphs `Γ(R)` and their invariants.
//!
//! Vertices are the nonzero zero-divisors in ascending carrier order; `x ~ y`
//! iff `x != y` and `xy = 0`. Adjacency is stored as dense bit rows.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diameter {
    Empty,
    Finite(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Girth {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bipartite {
    No,
    /// Part sizes, smaller first.
    Yes(usize, usize),
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Empty => f.write_str("empty"),
            Diameter::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Display for Bipartite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bipartite::No => f.write_str("no"),
            Bipartite::Yes(m, n) => write!(f, "K_{{{m},{n}}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub diameter: Diameter,
    pub girth: Girth,
    pub is_complete: bool,
    pub complete_bipartite: Bipartite,
    pub is_star: bool,
    pub universal_vertices: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ZdGraph {
    vertices: Vec<Elem>,
    labels: Vec<String>,
    position: Vec<Option<usize>>,
    adj: Vec<FixedBitSet>,
}

impl ZdGraph {
    pub fn build(ring: &FiniteRing) -> Self {
        let zero = ring.zero();
        let vertices: Vec<Elem> = ring
            .zero_divisors()
            .iter()
            .map(Elem)
            .filter(|&x| x != zero)
            .collect();
        let mut position = vec![None; ring.order()];
        for (k, v) in vertices.iter().enumerate() {
            position[v.index()] = Some(k);
        }
        let n = vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (p, &x) in vertices.iter().enumerate() {
            for (q, &y) in vertices.iter().enumerate().skip(p + 1) {
                if ring.mul(x, y) == zero {
                    adj[p].insert(q);
                    adj[q].insert(p);
                }
            }
        }
        let labels = vertices.iter().map(|&v| ring.label(v).to_string()).collect();
        ZdGraph {
            vertices,
            labels,
            position,
            adj,
        }
    }

    /// A plain labelled graph, for exercising the graph algorithms directly.
    /// Vertex `k` is reported as `Elem(k)`.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        ZdGraph {
            vertices: (0..n).map(Elem).collect(),
            labels,
            position: (0..n).map(Some).collect(),
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Ring elements that are vertices, in vertex order.
    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Vertex position of a ring element, if it is a vertex.
    pub fn vertex_of(&self, e: Elem) -> Option<usize> {
        self.position.get(e.index()).copied().flatten()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    /// BFS distances (in edges) from vertex position `root`.
    pub fn bfs(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::from([root]);
        dist[root] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].ones() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Elem, v: Elem) -> Result<Distance> {
        let pu = self
            .vertex_of(u)
            .ok_or_else(|| Error::NotAVertex(format!("#{}", u.index())))?;
        let pv = self
            .vertex_of(v)
            .ok_or_else(|| Error::NotAVertex(format!("#{}", v.index())))?;
        Ok(match self.bfs(pu)[pv] {
            Some(d) => Distance::Finite(d),
            None => Distance::Unreachable,
        })
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.bfs(0).iter().all(Option::is_some)
    }

    /// Diameter together with a pair of vertex positions realising it.
    pub fn diameter_with_pair(&self) -> Result<(Diameter, Option<(usize, usize)>)> {
        if self.is_empty() {
            return Ok((Diameter::Empty, None));
        }
        let mut best = (0, (0, 0));
        for u in 0..self.vertex_count() {
            for (v, d) in self.bfs(u).into_iter().enumerate() {
                match d {
                    None => {
                        return Err(Error::Disconnected(
                            self.labels[u].clone(),
                            self.labels[v].clone(),
                        ))
                    }
                    Some(d) if d > best.0 => best = (d, (u, v)),
                    _ => {}
                }
            }
        }
        Ok((Diameter::Finite(best.0), Some(best.1)))
    }

    /// Fails if the graph is disconnected: a zero-divisor graph never is.
    pub fn diameter(&self) -> Result<Diameter> {
        self.diameter_with_pair().map(|(d, _)| d)
    }

    /// Shortest cycle length via a BFS from every root: each non-tree edge
    /// `(u, w)` closes a walk of length `d(u) + d(w) + 1`, and the minimum over
    /// all roots is the girth.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.adj[u].ones() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Every pair of distinct vertices adjacent; vacuously true for 0 or 1 vertices.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| self.degree(u) == n - 1)
    }

    pub fn complete_bipartite(&self) -> Bipartite {
        let n = self.vertex_count();
        if n < 2 {
            return Bipartite::No;
        }
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.adj[u].ones() {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return Bipartite::No,
                        _ => {}
                    }
                }
            }
        }
        let side: Vec<bool> = colour.into_iter().map(Option::unwrap).collect();
        let left = side.iter().filter(|&&s| !s).count();
        let right = n - left;
        if left == 0 || right == 0 {
            return Bipartite::No;
        }
        for u in 0..n {
            let expected = if side[u] { left } else { right };
            if self.degree(u) != expected {
                return Bipartite::No;
            }
        }
        Bipartite::Yes(left.min(right), left.max(right))
    }

    pub fn is_complete_bipartite(&self) -> bool {
        matches!(self.complete_bipartite(), Bipartite::Yes(..))
    }

    pub fn is_star(&self) -> bool {
        matches!(self.complete_bipartite(), Bipartite::Yes(1, _))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<Elem> {
        let n = self.vertex_count();
        (0..n)
            .filter(|&u| self.degree(u) == n - 1)
            .map(|u| self.vertices[u])
            .collect()
    }

    pub fn universal_vertex_labels(&self) -> Vec<String> {
        let n = self.vertex_count();
        (0..n)
            .filter(|&u| self.degree(u) == n - 1)
            .map(|u| self.labels[u].clone())
            .collect()
    }

    pub fn invariants(&self) -> Result<GraphInvariants> {
        let complete_bipartite = self.complete_bipartite();
        Ok(GraphInvariants {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            diameter: self.diameter()?,
            girth: self.girth(),
            is_complete: self.is_complete(),
            complete_bipartite,
            is_star: matches!(complete_bipartite, Bipartite::Yes(1, _)),
            universal_vertices: self.universal_vertex_labels(),
        })
    }

    /// Deterministic Graphviz rendering: nodes in carrier order, then each edge
    /// once with endpoints in ascending order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for l in &self.labels {
            out.push_str(&format!("  \"{l}\";\n"));
        }
        for u in 0..self.vertex_count() {
            for w in self.adj[u].ones().filter(|&w| w > u) {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.labels[u], self.labels[w]));
            }
        }
        out.push_str("}\n");
        out
    }
}
