//! Exhaustive enumeration of labeled connected graphs of small order by
//! iterating every edge mask of the complete graph.

use crate::graph::{Graph, GraphBuilder};
use crate::Error;

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Yields every labeled simple connected graph on `n` vertices exactly
/// once (labeled enumeration, not up to isomorphism). Supported for
/// 1 <= n <= 7; the mask space is 2^(n(n-1)/2).
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, Error> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports orders 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mask_count: u64 = 1 << pairs.len();
    Ok((0..mask_count).filter_map(move |mask| {
        if !mask_is_connected(n, &pairs, mask) {
            return None;
        }
        let mut b = GraphBuilder::new(n).expect("valid small order");
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 != 0 {
                b.add_edge(u, v).expect("in-range edge");
            }
        }
        Some(b.build())
    }))
}

/// Connectivity test straight on the edge mask, before any graph is
/// allocated. n <= 7 so one u8 per adjacency row suffices.
fn mask_is_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = [0u8; MAX_ENUMERATION_ORDER];
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 != 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full = (1u8 << n) - 1;
    let mut seen = 1u8;
    loop {
        let mut grown = seen;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            grown |= adj[v];
        }
        if grown == seen {
            return seen == full;
        }
        seen = grown;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_bounds_enforced() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(8).is_err());
    }

    #[test]
    fn single_vertex_and_k2() {
        assert_eq!(enumerate_connected(1).unwrap().count(), 1);
        let graphs: Vec<Graph> = enumerate_connected(2).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].has_edge(0, 1));
    }

    // Counts confirmed by an independent union-find over raw edge masks.
    #[test]
    fn labeled_connected_counts() {
        assert_eq!(enumerate_connected(3).unwrap().count(), brute_count(3));
        assert_eq!(enumerate_connected(3).unwrap().count(), 4);
        assert_eq!(enumerate_connected(4).unwrap().count(), brute_count(4));
        assert_eq!(enumerate_connected(4).unwrap().count(), 38);
        assert_eq!(enumerate_connected(5).unwrap().count(), brute_count(5));
        assert_eq!(enumerate_connected(5).unwrap().count(), 728);
    }

    #[test]
    fn every_yielded_graph_is_connected_and_distinct() {
        let mut seen = std::collections::HashSet::new();
        for g in enumerate_connected(4).unwrap() {
            assert!(g.is_connected());
            assert!(seen.insert(g.edges()));
        }
    }

    fn brute_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len())
            .filter(|&mask| {
                let mut parent: Vec<usize> = (0..n).collect();
                fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                    if parent[x] != x {
                        let root = find(parent, parent[x]);
                        parent[x] = root;
                    }
                    parent[x]
                }
                for (bit, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> bit & 1 != 0 {
                        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                        parent[ru] = rv;
                    }
                }
                let root = find(&mut parent, 0);
                (0..n).all(|v| find(&mut parent, v) == root)
            })
            .count()
    }
}
