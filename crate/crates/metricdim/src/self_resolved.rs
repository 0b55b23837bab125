//! The self-k-resolved predicate: a graph is self k-resolved when every
//! vertex pair {x, y} admits a witness w with d(y, w) >= k and x on a
//! shortest y–w path, or symmetrically with x and y swapped.

use serde::Serialize;

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::resolving::{twin_partition, TwinMode};
use crate::Error;

/// Which disjunct of the definition a witness satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessSide {
    /// d(y, w) >= k and x ∈ I[y, w]
    XOnPath,
    /// d(x, w) >= k and y ∈ I[x, w]
    YOnPath,
}

/// Audit record for one resolved pair.
#[derive(Clone, Debug, Serialize)]
pub struct ResolutionCertificate {
    pub x: usize,
    pub y: usize,
    pub witness: usize,
    pub side: WitnessSide,
    pub k: usize,
}

/// Outcome of a self-k-resolution check. `failing_pair` is the first
/// pair with no witness; certificates are collected only on request.
#[derive(Clone, Debug)]
pub struct SelfResolution {
    pub k: usize,
    pub resolved: bool,
    pub failing_pair: Option<(usize, usize)>,
    pub certificates: Option<Vec<ResolutionCertificate>>,
}

/// Checks the predicate for every unordered pair, optionally retaining
/// one certificate per pair. The witness may coincide with x or y.
pub fn self_k_resolution(
    g: &Graph,
    k: usize,
    keep_certificates: bool,
) -> Result<SelfResolution, Error> {
    let dm = all_pairs_distances(g);
    dm.require_connected()?;
    self_k_resolution_with(&dm, k, keep_certificates)
}

fn self_k_resolution_with(
    dm: &DistanceMatrix,
    k: usize,
    keep_certificates: bool,
) -> Result<SelfResolution, Error> {
    let n = dm.order();
    let mut certificates = keep_certificates.then(Vec::new);
    for x in 0..n {
        for y in x + 1..n {
            match find_witness(dm, x, y, k) {
                Some(cert) => {
                    if let Some(list) = certificates.as_mut() {
                        list.push(cert);
                    }
                }
                None => {
                    return Ok(SelfResolution {
                        k,
                        resolved: false,
                        failing_pair: Some((x, y)),
                        certificates: None,
                    })
                }
            }
        }
    }
    Ok(SelfResolution { k, resolved: true, failing_pair: None, certificates })
}

fn find_witness(dm: &DistanceMatrix, x: usize, y: usize, k: usize) -> Option<ResolutionCertificate> {
    let k_dist = k as u64;
    for w in 0..dm.order() {
        // x ∈ I[y, w] iff d(y, x) + d(x, w) = d(y, w)
        if dm.get(y, w) as u64 >= k_dist
            && dm.get(y, x) as u64 + dm.get(x, w) as u64 == dm.get(y, w) as u64
        {
            return Some(ResolutionCertificate { x, y, witness: w, side: WitnessSide::XOnPath, k });
        }
        if dm.get(x, w) as u64 >= k_dist
            && dm.get(x, y) as u64 + dm.get(y, w) as u64 == dm.get(x, w) as u64
        {
            return Some(ResolutionCertificate { x, y, witness: w, side: WitnessSide::YOnPath, k });
        }
    }
    None
}

pub fn is_self_k_resolved(g: &Graph, k: usize) -> Result<bool, Error> {
    Ok(self_k_resolution(g, k, false)?.resolved)
}

/// Largest k for which the graph is self k-resolved. The predicate is
/// monotone decreasing in k (a witness for k serves any smaller k) and
/// impossible beyond the diameter, so a descending scan from the
/// diameter finds the maximum.
pub fn max_self_resolution(g: &Graph) -> Result<usize, Error> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "resolution index needs at least two vertices".into(),
        ));
    }
    let dm = all_pairs_distances(g);
    dm.require_connected()?;
    for k in (1..=dm.diameter() as usize).rev() {
        if self_k_resolution_with(&dm, k, false)?.resolved {
            return Ok(k);
        }
    }
    // k = 1 always holds (take w = x), so the scan cannot fall through.
    unreachable!("every connected nontrivial graph is self 1-resolved")
}

/// Tests, on one graph, that self-2-resolution coincides with having no
/// true twin vertices. Returns true when the two sides agree.
pub fn check_lemma_2resolved(g: &Graph) -> Result<bool, Error> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter("lemma check needs a nontrivial graph".into()));
    }
    let two_resolved = is_self_k_resolved(g, 2)?;
    let twin_free = twin_partition(g, TwinMode::True).all_singletons();
    Ok(two_resolved == twin_free)
}

/// For the cycle C_n: whenever x and y are adjacent and two vertices u,
/// v are equidistant from x, they must be at different distances from
/// y. Returns true iff no quadruple violates this.
pub fn check_cycle_claim(n: usize) -> Result<bool, Error> {
    let g = crate::families::cycle(n)?;
    let dm = all_pairs_distances(&g);
    for x in 0..n {
        for y in 0..n {
            if !g.has_edge(x, y) {
                continue;
            }
            for u in 0..n {
                for v in u + 1..n {
                    if dm.get(u, x) == dm.get(v, x) && dm.get(u, y) == dm.get(v, y) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, grid, hypercube, path, pseudo_sphere};
    use crate::graph::Dist;

    #[test]
    fn any_graph_is_self_1_resolved() {
        for g in [path(2).unwrap(), complete(4).unwrap(), cycle(5).unwrap()] {
            assert!(is_self_k_resolved(&g, 1).unwrap());
            assert!(is_self_k_resolved(&g, 0).unwrap());
        }
    }

    #[test]
    fn p5_is_self_3_resolved() {
        assert!(is_self_k_resolved(&path(5).unwrap(), 3).unwrap());
    }

    #[test]
    fn k3_fails_at_two() {
        let res = self_k_resolution(&complete(3).unwrap(), 2, false).unwrap();
        assert!(!res.resolved);
        assert_eq!(res.failing_pair, Some((0, 1)));
    }

    #[test]
    fn certificates_satisfy_the_definition() {
        let g = cycle(6).unwrap();
        let dm = all_pairs_distances(&g);
        let res = self_k_resolution(&g, 3, true).unwrap();
        assert!(res.resolved);
        let certs = res.certificates.unwrap();
        assert_eq!(certs.len(), 6 * 5 / 2);
        for c in certs {
            let (near, far) = match c.side {
                WitnessSide::XOnPath => (c.x, c.y),
                WitnessSide::YOnPath => (c.y, c.x),
            };
            assert!(dm.get(far, c.witness) >= c.k as Dist);
            assert_eq!(
                dm.get(far, near) + dm.get(near, c.witness),
                dm.get(far, c.witness)
            );
        }
    }

    #[test]
    fn family_claims_at_small_scale() {
        assert!(is_self_k_resolved(&hypercube(3).unwrap(), 3).unwrap());
        assert!(is_self_k_resolved(&grid(2, 4).unwrap(), 3).unwrap());
        assert!(is_self_k_resolved(&pseudo_sphere(4, 3).unwrap(), 4).unwrap());
    }

    // Grids resolve up to floor((n+m)/2): the central pair caps the
    // level at the larger central eccentricity, one more than half the
    // diameter. P2□P3 in particular stops at 2, not ceil(2/2)+ceil(3/2).
    #[test]
    fn grid_resolution_is_floor_of_half_perimeter() {
        for (n, m) in [(2, 3), (3, 3), (2, 4), (4, 4), (3, 5)] {
            let g = grid(n, m).unwrap();
            assert_eq!(max_self_resolution(&g).unwrap(), (n + m) / 2, "grid {n}x{m}");
        }
    }

    #[test]
    fn max_resolution_examples() {
        assert!(max_self_resolution(&hypercube(3).unwrap()).unwrap() >= 3);
        // complete graphs have true twins, so the lemma pins them at 1
        for n in 2..=5 {
            assert_eq!(max_self_resolution(&complete(n).unwrap()).unwrap(), 1);
        }
        assert!(max_self_resolution(&complete(1).unwrap()).is_err());
    }

    #[test]
    fn monotone_in_k() {
        for g in [path(7).unwrap(), cycle(8).unwrap(), grid(3, 3).unwrap()] {
            let dm = all_pairs_distances(&g);
            let mut prev = true;
            for k in 1..=dm.diameter() as usize + 1 {
                let now = is_self_k_resolved(&g, k).unwrap();
                assert!(!(now && !prev), "resolution not monotone at k={k}");
                prev = now;
            }
        }
    }

    #[test]
    fn lemma_agrees_on_named_graphs() {
        assert!(check_lemma_2resolved(&cycle(5).unwrap()).unwrap());
        assert!(check_lemma_2resolved(&complete(4).unwrap()).unwrap());
        assert!(check_lemma_2resolved(&path(2).unwrap()).unwrap());
        assert!(check_lemma_2resolved(&complete(1).unwrap()).is_err());
    }

    #[test]
    fn cycle_claim_small_orders() {
        for n in [4, 5, 12] {
            assert!(check_cycle_claim(n).unwrap(), "claim failed on C{n}");
        }
        assert!(check_cycle_claim(2).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_self_k_resolved(&g, 1).is_err());
        assert!(max_self_resolution(&g).is_err());
    }
}
