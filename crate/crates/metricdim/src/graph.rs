//! Simple undirected graphs with bitset adjacency, plus unweighted
//! all-pairs distances and geodesic intervals.

use crate::bits::Bits;
use crate::Error;

/// Hard cap on graph order; products refuse to grow past it.
pub const MAX_VERTICES: usize = 4096;

/// Distance entry type; `UNREACHABLE` marks pairs in different components.
pub type Dist = u16;
pub const UNREACHABLE: Dist = Dist::MAX;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and loop-free by construction; every
/// constructor validates both. Optional per-vertex labels are used by
/// product graphs to display factor coordinates.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are ignored;
    /// loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Bits::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Open neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Bits {
        let mut b = self.adj[v].clone();
        b.set(v);
        b
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// True if both graphs have the same order and identical adjacency
    /// (labels are ignored).
    pub fn adjacency_eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    /// BFS distances from a single source.
    pub fn bfs(&self, source: usize) -> Vec<Dist> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for v in self.adj[u].iter() {
                if dist[v] == UNREACHABLE {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Mutable edge accumulator; `build` freezes it into a validated [`Graph`].
pub struct GraphBuilder {
    n: usize,
    adj: Vec<Bits>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph order must be at least 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(GraphBuilder {
            n,
            adj: vec![Bits::new(n); n],
            labels: None,
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.adj[u].set(v);
        self.adj[v].set(u);
        Ok(())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn build(self) -> Graph {
        let g = Graph {
            n: self.n,
            adj: self.adj,
            labels: self.labels,
        };
        debug_assert!(g.edges().iter().all(|&(u, v)| u != v && g.has_edge(v, u)));
        g
    }
}

/// All-pairs shortest-path distances of a graph, with its diameter and
/// connectivity flag. Rows are indexed by source vertex.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
    diameter: Dist,
    connected: bool,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Maximum finite distance.
    pub fn diameter(&self) -> Dist {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn require_connected(&self) -> Result<(), Error> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

/// BFS from every source. Disconnection is reported in the matrix, not
/// as an error.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = Vec::with_capacity(n * n);
    let mut diameter = 0;
    let mut connected = true;
    for s in 0..n {
        let row = g.bfs(s);
        for &x in &row {
            if x == UNREACHABLE {
                connected = false;
            } else if x > diameter {
                diameter = x;
            }
        }
        d.extend_from_slice(&row);
    }
    DistanceMatrix { n, d, diameter, connected }
}

/// Geodesic interval `I[x, y]`: every vertex on some shortest x–y path,
/// endpoints included.
pub fn interval(g: &Graph, dm: &DistanceMatrix, x: usize, y: usize) -> Result<Bits, Error> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let dxy = dm.get(x, y);
    if dxy == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    let mut out = Bits::new(g.order());
    for w in 0..g.order() {
        let a = dm.get(x, w);
        let b = dm.get(w, y);
        if a != UNREACHABLE && b != UNREACHABLE && a + b == dxy {
            out.set(w);
        }
    }
    Ok(out)
}
