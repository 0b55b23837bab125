//! Named graph families, plus a compact text syntax for selecting them
//! on the command line (`P5`, `C6`, `K4`, `Q3`, `S3x2`, `GRID3x4`,
//! `STAR5`, `FAN2+2`, `T8~42`, `CAT4x2`).

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphBuilder};
use crate::products::cartesian_product;
use crate::Error;

/// Path P_n: vertices 0..n in traversal order.
pub fn path(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut b = GraphBuilder::new(n)?;
    for i in 1..n {
        b.add_edge(i - 1, i)?;
    }
    Ok(b.build())
}

/// Cycle C_n: vertices 0..n in traversal order, n >= 3.
pub fn cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let mut b = GraphBuilder::new(n)?;
    for i in 1..n {
        b.add_edge(i - 1, i)?;
    }
    b.add_edge(n - 1, 0)?;
    Ok(b.build())
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v)?;
        }
    }
    Ok(b.build())
}

/// Star K_{1,n-1}: center 0, leaves 1..n.
pub fn star(n: usize) -> Result<Graph, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter("star needs n >= 2".into()));
    }
    let mut b = GraphBuilder::new(n)?;
    for v in 1..n {
        b.add_edge(0, v)?;
    }
    Ok(b.build())
}

/// Caterpillar: a spine path of `spine` vertices with `legs` pendant
/// vertices attached to each spine vertex.
pub fn caterpillar(spine: usize, legs: usize) -> Result<Graph, Error> {
    if spine < 1 {
        return Err(Error::InvalidParameter("caterpillar needs spine >= 1".into()));
    }
    let n = spine + spine * legs;
    let mut b = GraphBuilder::new(n)?;
    for i in 1..spine {
        b.add_edge(i - 1, i)?;
    }
    for s in 0..spine {
        for l in 0..legs {
            b.add_edge(s, spine + s * legs + l)?;
        }
    }
    Ok(b.build())
}

/// Uniform random labeled tree on n vertices, decoded from a seeded
/// Prüfer sequence. The same (n, seed) always yields the same tree.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::InvalidParameter("tree needs n >= 1".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e3779b97f4a7c15));
    let universe: Vec<usize> = (0..n).collect();
    let prufer: Vec<usize> = (0..n - 2)
        .map(|_| *universe.choose(&mut rng).unwrap())
        .collect();

    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut b = GraphBuilder::new(n)?;
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &prufer {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().unwrap();
        b.add_edge(leaf, v)?;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(u) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(v) = leaf_heap.pop().unwrap();
    b.add_edge(u, v)?;
    Ok(b.build())
}

/// Hypercube Q_r, built as the r-fold Cartesian product of K_2.
pub fn hypercube(r: u32) -> Result<Graph, Error> {
    if r < 1 {
        return Err(Error::InvalidParameter("hypercube needs r >= 1".into()));
    }
    let k2 = complete(2)?;
    let mut g = k2.clone();
    for _ in 1..r {
        g = cartesian_product(&g, &k2)?;
    }
    Ok(strip_labels(g))
}

/// Grid P_n □ P_m.
pub fn grid(n: usize, m: usize) -> Result<Graph, Error> {
    let g = cartesian_product(&path(n)?, &path(m)?)?;
    Ok(strip_labels(g))
}

/// Pseudo-sphere S_{k,r}: r paths of order k+1 glued at two poles
/// (index 0 and 1). S_{k,2} is the cycle C_{2k}.
pub fn pseudo_sphere(k: usize, r: usize) -> Result<Graph, Error> {
    pseudo_sphere_with_lengths(k, &vec![k + 1; r])
}

/// Pseudo-sphere variant with an explicit order for each glued path;
/// every order must be at least k+1.
pub fn pseudo_sphere_with_lengths(k: usize, path_orders: &[usize]) -> Result<Graph, Error> {
    let r = path_orders.len();
    if k < 2 || r < 2 {
        return Err(Error::InvalidParameter("pseudo-sphere needs k >= 2 and r >= 2".into()));
    }
    if let Some(&bad) = path_orders.iter().find(|&&len| len < k + 1) {
        return Err(Error::InvalidParameter(format!(
            "pseudo-sphere path order {bad} below minimum {}",
            k + 1
        )));
    }
    let n = 2 + path_orders.iter().map(|len| len - 2).sum::<usize>();
    let mut b = GraphBuilder::new(n)?;
    let mut next = 2;
    for &len in path_orders {
        // chain pole 0 .. internals .. pole 1
        let mut prev = 0;
        for _ in 0..len - 2 {
            b.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        b.add_edge(prev, 1)?;
    }
    Ok(b.build())
}

/// Clique fan K_1 + (K_{r_1} ∪ ... ∪ K_{r_l}): a center vertex joined
/// to l disjoint cliques, each of order r_i >= 2.
pub fn clique_fan(clique_sizes: &[usize]) -> Result<Graph, Error> {
    if clique_sizes.is_empty() {
        return Err(Error::InvalidParameter("clique fan needs at least one clique".into()));
    }
    if let Some(&bad) = clique_sizes.iter().find(|&&r| r < 2) {
        return Err(Error::InvalidParameter(format!("clique fan clique size {bad} below 2")));
    }
    let n = 1 + clique_sizes.iter().sum::<usize>();
    let mut b = GraphBuilder::new(n)?;
    let mut base = 1;
    for &r in clique_sizes {
        for i in 0..r {
            b.add_edge(0, base + i)?;
            for j in i + 1..r {
                b.add_edge(base + i, base + j)?;
            }
        }
        base += r;
    }
    Ok(b.build())
}

fn strip_labels(g: Graph) -> Graph {
    Graph::from_edges(g.order(), &g.edges()).expect("rebuild of valid graph")
}

/// A family selector: pairs a family kind with its parameters, parseable
/// from the compact CLI syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Caterpillar { spine: usize, legs: usize },
    RandomTree { n: usize, seed: u64 },
    Hypercube(u32),
    Grid(usize, usize),
    PseudoSphere { k: usize, r: usize },
    CliqueFan(Vec<usize>),
}

impl Family {
    pub fn build(&self) -> Result<Graph, Error> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::Star(n) => star(*n),
            Family::Caterpillar { spine, legs } => caterpillar(*spine, *legs),
            Family::RandomTree { n, seed } => random_tree(*n, *seed),
            Family::Hypercube(r) => hypercube(*r),
            Family::Grid(n, m) => grid(*n, *m),
            Family::PseudoSphere { k, r } => pseudo_sphere(*k, *r),
            Family::CliqueFan(sizes) => clique_fan(sizes),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Path(n) => format!("P{n}"),
            Family::Cycle(n) => format!("C{n}"),
            Family::Complete(n) => format!("K{n}"),
            Family::Star(n) => format!("STAR{n}"),
            Family::Caterpillar { spine, legs } => format!("CAT{spine}x{legs}"),
            Family::RandomTree { n, seed } => format!("T{n}~{seed}"),
            Family::Hypercube(r) => format!("Q{r}"),
            Family::Grid(n, m) => format!("GRID{n}x{m}"),
            Family::PseudoSphere { k, r } => format!("S{k}x{r}"),
            Family::CliqueFan(sizes) => {
                let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                format!("FAN{}", parts.join("+"))
            }
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let spec = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidParameter(format!("unrecognized family spec {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());

        let (kind, rest) = split_keyword(&spec);
        match kind {
            "STAR" => Ok(Family::Star(num(rest)?)),
            "GRID" | "G" => {
                let (n, m) = rest.split_once('X').ok_or_else(bad)?;
                Ok(Family::Grid(num(n)?, num(m)?))
            }
            "CAT" => {
                let (a, b) = rest.split_once('X').ok_or_else(bad)?;
                Ok(Family::Caterpillar { spine: num(a)?, legs: num(b)? })
            }
            "TREE" | "T" => {
                let (n, seed) = rest.split_once('~').unwrap_or((rest, "0"));
                Ok(Family::RandomTree {
                    n: num(n)?,
                    seed: seed.parse::<u64>().map_err(|_| bad())?,
                })
            }
            "FAN" => {
                let sizes: Result<Vec<usize>, Error> = rest.split('+').map(num).collect();
                Ok(Family::CliqueFan(sizes?))
            }
            "P" => Ok(Family::Path(num(rest)?)),
            "C" => Ok(Family::Cycle(num(rest)?)),
            "K" => Ok(Family::Complete(num(rest)?)),
            "Q" => Ok(Family::Hypercube(num(rest)?.try_into().map_err(|_| bad())?)),
            "S" => {
                let (k, r) = rest
                    .split_once('X')
                    .or_else(|| rest.split_once(','))
                    .ok_or_else(bad)?;
                Ok(Family::PseudoSphere { k: num(k)?, r: num(r)? })
            }
            _ => Err(bad()),
        }
    }
}

fn split_keyword(spec: &str) -> (&str, &str) {
    for kw in ["STAR", "GRID", "TREE", "CAT", "FAN"] {
        if let Some(rest) = spec.strip_prefix(kw) {
            return (kw, rest);
        }
    }
    if spec.is_empty() {
        return ("", "");
    }
    spec.split_at(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;

    #[test]
    fn cycle_every_vertex_degree_two() {
        let g = cycle(4).unwrap();
        assert_eq!(g.order(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn pseudo_sphere_s32_is_c6() {
        // S_{3,2} is the 6-cycle; the construction lays it out as
        // 0-2-3-1-5-4-0, so relabel and compare full matrices.
        let s = pseudo_sphere(3, 2).unwrap();
        let c = cycle(6).unwrap();
        assert_eq!(s.order(), 6);
        assert!((0..6).all(|v| s.degree(v) == 2));
        let perm = [0usize, 2, 3, 1, 5, 4]; // cycle position -> S vertex
        let sd = all_pairs_distances(&s);
        let cd = all_pairs_distances(&c);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(cd.get(i, j), sd.get(perm[i], perm[j]));
            }
        }
    }

    #[test]
    fn pseudo_sphere_poles_and_lengths() {
        let g = pseudo_sphere(4, 3).unwrap();
        assert_eq!(g.order(), 2 + 3 * 3);
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.get(0, 1), 4); // poles k apart
        assert!(pseudo_sphere(1, 2).is_err());
        assert!(pseudo_sphere(2, 1).is_err());
        assert!(pseudo_sphere_with_lengths(3, &[4, 3]).is_err());
        let long = pseudo_sphere_with_lengths(3, &[4, 6]).unwrap();
        assert_eq!(long.order(), 2 + 2 + 4);
        assert_eq!(all_pairs_distances(&long).get(0, 1), 3);
    }

    #[test]
    fn clique_fan_shape() {
        // K_1 + (K_2 ∪ K_2): 5 vertices, center adjacent to all.
        let g = clique_fan(&[2, 2]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree(0), 4);
        assert!(g.has_edge(1, 2) && g.has_edge(3, 4));
        assert!(!g.has_edge(1, 3));
        assert!(clique_fan(&[1, 2]).is_err());
    }

    #[test]
    fn hypercube_edge_count() {
        for r in 1..=5u32 {
            let g = hypercube(r).unwrap();
            assert_eq!(g.order(), 1 << r);
            assert_eq!(g.size(), (r as usize) << (r - 1));
        }
        // Q2 is the 4-cycle
        let q2 = hypercube(2).unwrap();
        assert!((0..4).all(|v| q2.degree(v) == 2));
    }

    #[test]
    fn grid_is_connected_product() {
        let g = grid(3, 4).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 3 * 3 + 4 * 2);
        assert!(g.is_connected());
    }

    #[test]
    fn random_tree_is_a_tree_and_deterministic() {
        for n in [1, 2, 3, 8, 20] {
            let t = random_tree(n, 7).unwrap();
            assert_eq!(t.order(), n);
            assert_eq!(t.size(), n - 1);
            assert!(t.is_connected());
            assert!(t.adjacency_eq(&random_tree(n, 7).unwrap()));
        }
        assert!(!random_tree(8, 1)
            .unwrap()
            .adjacency_eq(&random_tree(8, 2).unwrap()));
    }

    #[test]
    fn caterpillar_shape() {
        let g = caterpillar(3, 2).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 8);
        assert!(g.is_connected());
    }

    #[test]
    fn family_parse_round_trip() {
        for spec in ["P5", "C6", "K4", "Q3", "S3x2", "GRID3x4", "STAR5", "FAN2+2", "T8~42", "CAT4x1"] {
            let fam: Family = spec.parse().unwrap();
            assert_eq!(fam.name(), spec);
            fam.build().unwrap();
        }
        assert_eq!("p7".parse::<Family>().unwrap(), Family::Path(7));
        assert_eq!("s3,2".parse::<Family>().unwrap(), Family::PseudoSphere { k: 3, r: 2 });
        assert!("X9".parse::<Family>().is_err());
        assert!("P".parse::<Family>().is_err());
        assert!("".parse::<Family>().is_err());
    }
}
