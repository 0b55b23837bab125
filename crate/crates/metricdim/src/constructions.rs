//! Explicit landmark-set constructions on strong products. Each returns
//! the landmarks on the product's canonical row-major encoding together
//! with the size its defining formula predicts. Constructions guarantee
//! generator-hood under their preconditions, never minimality.

use crate::families::{cycle, path};
use crate::graph::{all_pairs_distances, Graph};
use crate::products::{strong_product, VertexPairing};
use crate::resolving::{is_metric_generator, LandmarkSet};
use crate::self_resolved::is_self_k_resolved;
use crate::Error;

/// A constructed landmark set on a product graph.
#[derive(Clone, Debug)]
pub struct ConstructionOutput {
    /// The product graph the landmarks live on.
    pub product: Graph,
    pub landmarks: LandmarkSet,
    /// Cardinality predicted by the construction's formula; always
    /// equals `landmarks.len()`.
    pub claimed_size: usize,
    /// All precondition checks ran and passed (construction functions
    /// reject violations as errors, so this is true on every output).
    pub preconditions_met: bool,
}

impl ConstructionOutput {
    fn new(product: Graph, mut vertices: Vec<usize>, claimed_size: usize) -> Result<Self, Error> {
        vertices.sort_unstable();
        let before = vertices.len();
        vertices.dedup();
        if vertices.len() != before {
            // the formulas never produce duplicates on valid inputs;
            // warn and let the size assertion below fail loudly
            eprintln!(
                "warning: construction produced {} duplicate landmark(s)",
                before - vertices.len()
            );
        }
        if vertices.len() != claimed_size {
            return Err(Error::Precondition(format!(
                "construction size {} does not match claimed size {claimed_size}",
                vertices.len()
            )));
        }
        Ok(ConstructionOutput {
            product,
            landmarks: LandmarkSet::new(vertices)?,
            claimed_size,
            preconditions_met: true,
        })
    }
}

/// Landmarks (V1 × S2) ∪ (S1 × V2) on G ⊠ H, of size
/// n1·|S2| + n2·|S1| − |S1|·|S2|, a generator whenever S1 and S2
/// generate their factors.
pub fn upper_bound_generator(
    g: &Graph,
    h: &Graph,
    s1: &LandmarkSet,
    s2: &LandmarkSet,
) -> Result<ConstructionOutput, Error> {
    let (n1, n2) = (g.order(), h.order());
    if n1 < 2 {
        return Err(Error::Precondition("first factor must have order at least 2".into()));
    }
    let gd = all_pairs_distances(g);
    let hd = all_pairs_distances(h);
    gd.require_connected()?;
    hd.require_connected()?;
    s1.check_range(n1)?;
    s2.check_range(n2)?;
    if !is_metric_generator(&gd, s1)? {
        return Err(Error::Precondition(format!("{s1} is not a generator of the first factor")));
    }
    if !is_metric_generator(&hd, s2)? {
        return Err(Error::Precondition(format!("{s2} is not a generator of the second factor")));
    }

    let pairing = VertexPairing::new(n1, n2);
    let mut vertices = Vec::new();
    for i in 0..n1 {
        for j in s2.iter() {
            vertices.push(pairing.encode(i, j));
        }
    }
    for i in s1.iter() {
        for j in 0..n2 {
            if !s2.iter().any(|l| l == j) {
                vertices.push(pairing.encode(i, j));
            }
        }
    }
    let claimed = n1 * s2.len() + n2 * s1.len() - s1.len() * s2.len();
    ConstructionOutput::new(strong_product(g, h)?, vertices, claimed)
}

/// Landmarks S1 × V2 on G ⊠ H, of size |S1|·n2, a generator whenever H
/// is self k-resolved, diam(G) < k, and S1 generates G.
pub fn resolved_generator(
    g: &Graph,
    h: &Graph,
    s1: &LandmarkSet,
    k: usize,
) -> Result<ConstructionOutput, Error> {
    let (n1, n2) = (g.order(), h.order());
    if n1 < 2 {
        // with a trivial factor the landmark set degenerates to the
        // empty set, which cannot resolve more than one vertex
        return Err(Error::Precondition("first factor must have order at least 2".into()));
    }
    let gd = all_pairs_distances(g);
    gd.require_connected()?;
    if gd.diameter() as usize >= k {
        return Err(Error::Precondition(format!(
            "first factor has diameter {} but must stay below k = {k}",
            gd.diameter()
        )));
    }
    if !is_self_k_resolved(h, k)? {
        return Err(Error::Precondition(format!("second factor is not self {k}-resolved")));
    }
    s1.check_range(n1)?;
    if !is_metric_generator(&gd, s1)? {
        return Err(Error::Precondition(format!("{s1} is not a generator of the first factor")));
    }

    let pairing = VertexPairing::new(n1, n2);
    let vertices: Vec<usize> = s1
        .iter()
        .flat_map(|i| (0..n2).map(move |j| pairing.encode(i, j)))
        .collect();
    ConstructionOutput::new(strong_product(g, h)?, vertices, s1.len() * n2)
}

/// Zig-zag landmarks for P_{n1} ⊠ P_{n2} (2 <= n1 < n2): alternating
/// first/last-row landmarks every n1-1 columns, plus one landmark in the
/// final column, ceil((n1+n2-2)/(n1-1)) in total.
pub fn path_path_generator(n1: usize, n2: usize) -> Result<ConstructionOutput, Error> {
    check_path_pair(n1, n2)?;
    let step = n1 - 1;
    let ceil = (n2 - 1).div_ceil(step);
    let alpha = ceil - 1;
    let pairing = VertexPairing::new(n1, n2);
    // rows and columns are 0-based here: column t*step hosts the t-th
    // interior landmark, in the first row for even t, last row for odd
    let mut vertices = Vec::with_capacity(alpha + 2);
    for t in 0..=alpha {
        let row = if t % 2 == 0 { 0 } else { n1 - 1 };
        vertices.push(pairing.encode(row, t * step));
    }
    let last_row = if ceil % 2 == 1 { n1 - 1 } else { 0 };
    vertices.push(pairing.encode(last_row, n2 - 1));

    let claimed = (n1 + n2 - 2).div_ceil(step);
    let product = strong_product(&path(n1)?, &path(n2)?)?;
    ConstructionOutput::new(product, vertices, claimed)
}

/// Floor((n1+n2-2)/(n1-1)), the counting lower bound matching the
/// zig-zag construction's ceiling.
pub fn path_path_lower_bound(n1: usize, n2: usize) -> Result<usize, Error> {
    check_path_pair(n1, n2)?;
    Ok((n1 + n2 - 2) / (n1 - 1))
}

fn check_path_pair(n1: usize, n2: usize) -> Result<(), Error> {
    if n1 < 2 || n1 >= n2 {
        return Err(Error::Precondition(format!(
            "path pair needs 2 <= n1 < n2, got ({n1}, {n2})"
        )));
    }
    Ok(())
}

/// The three corner landmarks {(0,0), (n-1,0), (n-1,n-1)} generating
/// P_n ⊠ P_n for every n >= 2.
pub fn path_path_corner_generator(n: usize) -> Result<ConstructionOutput, Error> {
    if n < 2 {
        return Err(Error::Precondition("corner construction needs n >= 2".into()));
    }
    let pairing = VertexPairing::new(n, n);
    let vertices = vec![
        pairing.encode(0, 0),
        pairing.encode(n - 1, 0),
        pairing.encode(n - 1, n - 1),
    ];
    let p = path(n)?;
    ConstructionOutput::new(strong_product(&p, &p)?, vertices, 3)
}

/// Diagonal landmarks {(i, i mod n2) : i < n1} of size n1 generating
/// P_{n1} ⊠ C_{n2} whenever (n1-1)/2 >= floor(n2/2) >= 2.
pub fn path_cycle_diagonal_generator(n1: usize, n2: usize) -> Result<ConstructionOutput, Error> {
    let half = n2 / 2;
    if half < 2 || n1 < 2 * half + 1 {
        return Err(Error::Precondition(format!(
            "diagonal construction needs (n1-1)/2 >= floor(n2/2) >= 2, got ({n1}, {n2})"
        )));
    }
    let pairing = VertexPairing::new(n1, n2);
    let vertices: Vec<usize> = (0..n1).map(|i| pairing.encode(i, i % n2)).collect();
    let product = strong_product(&path(n1)?, &cycle(n2)?)?;
    ConstructionOutput::new(product, vertices, n1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, hypercube};

    fn assert_generator(out: &ConstructionOutput) {
        assert_eq!(out.landmarks.len(), out.claimed_size);
        assert!(out.preconditions_met);
        let dm = all_pairs_distances(&out.product);
        assert!(is_metric_generator(&dm, &out.landmarks).unwrap());
    }

    fn single(v: usize) -> LandmarkSet {
        LandmarkSet::new(vec![v]).unwrap()
    }

    #[test]
    fn upper_bound_on_k2_k2() {
        let k2 = complete(2).unwrap();
        let out = upper_bound_generator(&k2, &k2, &single(0), &single(0)).unwrap();
        assert_eq!(out.claimed_size, 2 + 2 - 1);
        assert_generator(&out);
    }

    #[test]
    fn upper_bound_on_p3_p3_is_loose() {
        let p3 = path(3).unwrap();
        let out = upper_bound_generator(&p3, &p3, &single(0), &single(0)).unwrap();
        assert_eq!(out.claimed_size, 3 + 3 - 1);
        assert_generator(&out);
    }

    #[test]
    fn upper_bound_on_k3_k2_matches_complete_identity() {
        let k3 = complete(3).unwrap();
        let k2 = complete(2).unwrap();
        let s1 = LandmarkSet::new(vec![0, 1]).unwrap();
        let out = upper_bound_generator(&k3, &k2, &s1, &single(0)).unwrap();
        // 3*1 + 2*2 - 2*1 = 5 = dim(K6)
        assert_eq!(out.claimed_size, 5);
        assert_generator(&out);
    }

    #[test]
    fn upper_bound_rejects_non_generator_inputs() {
        let k3 = complete(3).unwrap();
        let err = upper_bound_generator(&k3, &k3, &single(0), &single(0)).unwrap_err();
        assert!(err.to_string().contains("not a generator"));
    }

    #[test]
    fn resolved_generator_k3_p5() {
        let out = resolved_generator(
            &complete(3).unwrap(),
            &path(5).unwrap(),
            &LandmarkSet::new(vec![0, 1]).unwrap(),
            3,
        )
        .unwrap();
        assert_eq!(out.claimed_size, 10);
        assert_generator(&out);
    }

    #[test]
    fn resolved_generator_k2_on_cycle_and_hypercube() {
        let k2 = complete(2).unwrap();
        let out = resolved_generator(&k2, &cycle(6).unwrap(), &single(0), 3).unwrap();
        assert_eq!(out.claimed_size, 6);
        assert_generator(&out);

        let out = resolved_generator(&k2, &hypercube(3).unwrap(), &single(0), 3).unwrap();
        assert_eq!(out.claimed_size, 8);
        assert_generator(&out);
    }

    #[test]
    fn resolved_generator_reports_which_check_failed() {
        let k2 = complete(2).unwrap();
        // diameter 2 not below k=2
        let err = resolved_generator(&path(3).unwrap(), &cycle(6).unwrap(), &single(0), 2);
        assert!(err.unwrap_err().to_string().contains("diameter"));
        // K3 has true twins, so it is not self 2-resolved
        let err = resolved_generator(&k2, &complete(3).unwrap(), &single(0), 2);
        assert!(err.unwrap_err().to_string().contains("self 2-resolved"));
        let err = resolved_generator(&complete(1).unwrap(), &cycle(6).unwrap(), &LandmarkSet::new(vec![]).unwrap(), 3);
        assert!(err.unwrap_err().to_string().contains("order at least 2"));
    }

    // (3,5): interior columns 0 and 2 alternate rows, final lands back
    // in row 0 at the last column
    #[test]
    fn zig_zag_3_5_reproduces_expected_set() {
        let out = path_path_generator(3, 5).unwrap();
        let pairing = VertexPairing::new(3, 5);
        assert_eq!(
            out.landmarks.vertices(),
            &[
                pairing.encode(0, 0),
                pairing.encode(0, 4),
                pairing.encode(2, 2),
            ]
        );
        assert_eq!(out.claimed_size, 3);
        assert_generator(&out);
    }

    // odd ceiling: (3,6) has ceil((6-1)/2) = 3, so the final landmark
    // sits in the last row
    #[test]
    fn zig_zag_odd_ceiling_final_row() {
        let out = path_path_generator(3, 6).unwrap();
        let pairing = VertexPairing::new(3, 6);
        assert!(out.landmarks.vertices().contains(&pairing.encode(2, 5)));
        assert_eq!(out.claimed_size, 4);
        assert_generator(&out);
    }

    #[test]
    fn zig_zag_sizes() {
        assert_eq!(path_path_generator(2, 5).unwrap().claimed_size, 5);
        assert_eq!(path_path_generator(4, 10).unwrap().claimed_size, 4);
        assert_generator(&path_path_generator(2, 5).unwrap());
        assert_generator(&path_path_generator(4, 10).unwrap());
        assert!(path_path_generator(3, 3).is_err());
        assert!(path_path_generator(1, 4).is_err());
    }

    #[test]
    fn corner_generator() {
        for n in [2, 4, 7] {
            let out = path_path_corner_generator(n).unwrap();
            assert_eq!(out.claimed_size, 3);
            assert_generator(&out);
        }
        assert!(path_path_corner_generator(1).is_err());
    }

    #[test]
    fn diagonal_generator() {
        for (n1, n2) in [(5, 4), (7, 5), (9, 4)] {
            let out = path_cycle_diagonal_generator(n1, n2).unwrap();
            assert_eq!(out.claimed_size, n1);
            assert_generator(&out);
        }
        // hypothesis violations
        assert!(path_cycle_diagonal_generator(4, 4).is_err());
        assert!(path_cycle_diagonal_generator(9, 3).is_err());
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(path_path_lower_bound(3, 5).unwrap(), 3);
        assert_eq!(path_path_lower_bound(2, 3).unwrap(), 3);
        assert_eq!(path_path_lower_bound(3, 6).unwrap(), 3);
        assert_eq!(path_path_generator(3, 6).unwrap().claimed_size, 4);
        assert!(path_path_lower_bound(5, 5).is_err());
    }
}
