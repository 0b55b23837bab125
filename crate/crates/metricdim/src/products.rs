//! Strong and Cartesian graph products with one fixed row-major vertex
//! pairing, and a checker for the strong-product distance identity
//! d((a,b),(c,d)) = max(d(a,c), d(b,d)).

use crate::graph::{all_pairs_distances, Graph, GraphBuilder, MAX_VERTICES};
use crate::Error;

/// The canonical bijection between factor coordinates (i, j) and product
/// vertex indices: `encode(i, j) = i * n2 + j`. Every product, landmark
/// construction, and report in this crate uses this encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexPairing {
    pub n1: usize,
    pub n2: usize,
}

impl VertexPairing {
    pub fn new(n1: usize, n2: usize) -> Self {
        VertexPairing { n1, n2 }
    }

    #[inline]
    pub fn encode(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n1 && j < self.n2);
        i * self.n2 + j
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        debug_assert!(v < self.n1 * self.n2);
        (v / self.n2, v % self.n2)
    }
}

fn product_builder(g: &Graph, h: &Graph) -> Result<(GraphBuilder, VertexPairing), Error> {
    let n1 = g.order();
    let n2 = h.order();
    let n = n1
        .checked_mul(n2)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or(Error::TooLarge { n: n1.saturating_mul(n2), max: MAX_VERTICES })?;
    let pairing = VertexPairing::new(n1, n2);
    let mut b = GraphBuilder::new(n)?;
    let labels = (0..n)
        .map(|v| {
            let (i, j) = pairing.decode(v);
            format!("({},{})", g.label(i), h.label(j))
        })
        .collect();
    b.set_labels(labels);
    Ok((b, pairing))
}

/// Strong product G ⊠ H: (a,b) ~ (c,d) iff the coordinates agree or are
/// adjacent in their factors, and at least one pair differs.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph, Error> {
    let (mut b, pairing) = product_builder(g, h)?;
    for a in 0..g.order() {
        for c in 0..g.order() {
            if a != c && !g.has_edge(a, c) {
                continue;
            }
            for bb in 0..h.order() {
                for d in 0..h.order() {
                    if a == c && bb == d {
                        continue;
                    }
                    if bb != d && !h.has_edge(bb, d) {
                        continue;
                    }
                    b.add_edge(pairing.encode(a, bb), pairing.encode(c, d))?;
                }
            }
        }
    }
    Ok(b.build())
}

/// Cartesian product G □ H: (a,b) ~ (c,d) iff one coordinate agrees and
/// the other is a factor edge.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, Error> {
    let (mut b, pairing) = product_builder(g, h)?;
    for &(a, c) in &g.edges() {
        for j in 0..h.order() {
            b.add_edge(pairing.encode(a, j), pairing.encode(c, j))?;
        }
    }
    for &(x, y) in &h.edges() {
        for i in 0..g.order() {
            b.add_edge(pairing.encode(i, x), pairing.encode(i, y))?;
        }
    }
    Ok(b.build())
}

/// Checks d_{G⊠H}((a,b),(c,d)) = max(d_G(a,c), d_H(b,d)) over every
/// vertex pair of the product, by independent BFS on the product graph.
pub fn verify_distance_law(g: &Graph, h: &Graph) -> Result<bool, Error> {
    let gd = all_pairs_distances(g);
    let hd = all_pairs_distances(h);
    gd.require_connected()?;
    hd.require_connected()?;
    let product = strong_product(g, h)?;
    let pd = all_pairs_distances(&product);
    let pairing = VertexPairing::new(g.order(), h.order());
    for u in 0..product.order() {
        let (a, b) = pairing.decode(u);
        for v in 0..product.order() {
            let (c, d) = pairing.decode(v);
            if pd.get(u, v) != gd.get(a, c).max(hd.get(b, d)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, pseudo_sphere};

    #[test]
    fn k2_strong_k2_is_k4() {
        let k2 = complete(2).unwrap();
        let p = strong_product(&k2, &k2).unwrap();
        assert!(p.adjacency_eq(&complete(4).unwrap()));
    }

    #[test]
    fn k1_is_identity_factor() {
        let k1 = complete(1).unwrap();
        let h = path(3).unwrap();
        let p = strong_product(&k1, &h).unwrap();
        assert!(p.adjacency_eq(&h));
    }

    // |E(G ⊠ H)| = n1*e2 + n2*e1 + 2*e1*e2
    #[test]
    fn strong_product_edge_count() {
        let g = path(3).unwrap();
        let p = strong_product(&g, &g).unwrap();
        assert_eq!(p.order(), 9);
        assert_eq!(p.size(), 3 * 2 + 3 * 2 + 2 * 2 * 2);
        // brute-force adjacency enumeration against the definition
        let pairing = VertexPairing::new(3, 3);
        let mut count = 0;
        for u in 0..9 {
            for v in u + 1..9 {
                let (a, b) = pairing.decode(u);
                let (c, d) = pairing.decode(v);
                let adj = (a == c && g.has_edge(b, d))
                    || (b == d && g.has_edge(a, c))
                    || (g.has_edge(a, c) && g.has_edge(b, d));
                assert_eq!(p.has_edge(u, v), adj);
                count += usize::from(adj);
            }
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn cartesian_product_shapes() {
        let k2 = complete(2).unwrap();
        let q2 = cartesian_product(&k2, &k2).unwrap();
        assert!((0..4).all(|v| q2.degree(v) == 2)); // the 4-cycle
        let p = cartesian_product(&path(2).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.size(), 7);
    }

    #[test]
    fn product_labels_carry_pairs() {
        let p = strong_product(&path(2).unwrap(), &path(2).unwrap()).unwrap();
        assert_eq!(p.label(0), "(0,0)");
        assert_eq!(p.label(3), "(1,1)");
        let nested = strong_product(&p, &path(2).unwrap()).unwrap();
        assert_eq!(nested.label(1), "((0,0),1)");
    }

    #[test]
    fn pairing_round_trip() {
        let pairing = VertexPairing::new(5, 7);
        for i in 0..5 {
            for j in 0..7 {
                assert_eq!(pairing.decode(pairing.encode(i, j)), (i, j));
            }
        }
    }

    #[test]
    fn product_order_cap() {
        let big = path(80).unwrap();
        assert!(strong_product(&big, &big).is_err());
    }

    #[test]
    fn distance_law_holds() {
        assert!(verify_distance_law(&path(4).unwrap(), &cycle(5).unwrap()).unwrap());
        assert!(verify_distance_law(&complete(1).unwrap(), &path(3).unwrap()).unwrap());
        assert!(verify_distance_law(&path(3).unwrap(), &pseudo_sphere(3, 3).unwrap()).unwrap());
    }

    #[test]
    fn distance_law_rejects_disconnected_factor() {
        let disc = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(verify_distance_law(&disc, &path(2).unwrap()).is_err());
    }

    // degree identity: deg(a,b) = deg(a) + deg(b) + deg(a)*deg(b)
    #[test]
    fn strong_degree_identity() {
        let g = cycle(5).unwrap();
        let h = path(4).unwrap();
        let p = strong_product(&g, &h).unwrap();
        let pairing = VertexPairing::new(5, 4);
        for v in 0..p.order() {
            let (a, b) = pairing.decode(v);
            let (da, db) = (g.degree(a), h.degree(b));
            assert_eq!(p.degree(v), da + db + da * db);
        }
    }

    // commutativity up to transposition: equal distance-matrix multisets
    #[test]
    fn strong_product_commutative_multiset() {
        let g = path(3).unwrap();
        let h = cycle(4).unwrap();
        let a = all_pairs_distances(&strong_product(&g, &h).unwrap());
        let b = all_pairs_distances(&strong_product(&h, &g).unwrap());
        let mut am: Vec<_> = (0..12).flat_map(|u| (0..12).map(move |v| (u, v))).map(|(u, v)| a.get(u, v)).collect();
        let mut bm: Vec<_> = (0..12).flat_map(|u| (0..12).map(move |v| (u, v))).map(|(u, v)| b.get(u, v)).collect();
        am.sort_unstable();
        bm.sort_unstable();
        assert_eq!(am, bm);
    }
}
