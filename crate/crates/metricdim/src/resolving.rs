//! Metric representations, generator checking, twin equivalence classes,
//! and the two lower bounds fed to the exact solver.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::graph::{Dist, DistanceMatrix, Graph};
use crate::Error;

/// An ordered list of distinct landmark vertices. The order defines the
/// coordinates of every metric representation taken against the set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LandmarkSet(Vec<usize>);

impl LandmarkSet {
    pub fn new(vertices: Vec<usize>) -> Result<Self, Error> {
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidLandmarks(format!("duplicate landmark {v}")));
            }
        }
        Ok(LandmarkSet(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn check_range(&self, order: usize) -> Result<(), Error> {
        match self.0.iter().find(|&&v| v >= order) {
            Some(&v) => Err(Error::VertexOutOfRange { vertex: v, order }),
            None => Ok(()),
        }
    }
}

impl std::fmt::Display for LandmarkSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Metric representation r(u|S): distances from `u` to each landmark in
/// landmark order.
pub fn metric_vector(dm: &DistanceMatrix, u: usize, s: &LandmarkSet) -> Result<Vec<Dist>, Error> {
    dm.require_connected()?;
    if u >= dm.order() {
        return Err(Error::VertexOutOfRange { vertex: u, order: dm.order() });
    }
    s.check_range(dm.order())?;
    Ok(s.iter().map(|l| dm.get(u, l)).collect())
}

/// Outcome of a generator check; on failure `witness` is one pair of
/// vertices with identical representations.
#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub is_generator: bool,
    pub witness: Option<(usize, usize)>,
}

/// Tests whether r(·|S) is injective over all vertices.
pub fn check_generator(dm: &DistanceMatrix, s: &LandmarkSet) -> Result<GeneratorCheck, Error> {
    dm.require_connected()?;
    s.check_range(dm.order())?;
    let mut seen: HashMap<Vec<Dist>, usize> = HashMap::with_capacity(dm.order());
    for u in 0..dm.order() {
        let vec: Vec<Dist> = s.iter().map(|l| dm.get(u, l)).collect();
        if let Some(&prev) = seen.get(&vec) {
            return Ok(GeneratorCheck { is_generator: false, witness: Some((prev, u)) });
        }
        seen.insert(vec, u);
    }
    Ok(GeneratorCheck { is_generator: true, witness: None })
}

pub fn is_metric_generator(dm: &DistanceMatrix, s: &LandmarkSet) -> Result<bool, Error> {
    Ok(check_generator(dm, s)?.is_generator)
}

/// Which neighborhood equality defines a twin class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinMode {
    /// u ~ v iff N[u] = N[v].
    True,
    /// u ~ v iff N[u] = N[v] or N(u) = N(v).
    Mixed,
}

/// A partition of the vertex set into twin equivalence classes, sorted
/// by smallest member.
#[derive(Clone, Debug)]
pub struct TwinPartition {
    pub mode: TwinMode,
    pub classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn all_singletons(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Class index of each vertex.
    pub fn class_of(&self, order: usize) -> Vec<usize> {
        let mut out = vec![0; order];
        for (idx, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = idx;
            }
        }
        out
    }
}

/// Groups vertices into twin classes under the chosen relation.
///
/// In mixed mode every non-singleton class is either all true twins or
/// all false twins; a vertex cannot sit in nontrivial classes of both
/// kinds, so merging the two relations still yields a partition.
pub fn twin_partition(g: &Graph, mode: TwinMode) -> TwinPartition {
    let n = g.order();
    let mut leader: Vec<usize> = (0..n).collect();
    let assign = |keys: Vec<Bits>, leader: &mut Vec<usize>| {
        let mut seen: HashMap<Bits, usize> = HashMap::with_capacity(n);
        for (v, key) in keys.into_iter().enumerate() {
            let head = *seen.entry(key).or_insert(v);
            if leader[head] < leader[v] {
                leader[v] = leader[head];
            }
        }
    };
    assign((0..n).map(|v| g.closed_neighborhood(v)).collect(), &mut leader);
    if mode == TwinMode::Mixed {
        assign((0..n).map(|v| g.neighbors(v).clone()).collect(), &mut leader);
    }

    let mut by_leader: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        by_leader.entry(leader[v]).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_leader.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    TwinPartition { mode, classes }
}

/// Lower bound dim(G) >= n - t from the mixed-twin class count t, with
/// the dim >= 1 floor for graphs on at least two vertices. Twins of
/// either kind share distances to every other vertex, so any generator
/// misses at most one vertex per class.
pub fn twin_lower_bound(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    let t = twin_partition(g, TwinMode::Mixed).class_count();
    (n - t).max(1)
}

/// Smallest k such that D^k + k*D^(k-1) >= n: the number of k-tuples
/// over {0..D} with at most one zero coordinate must cover all n
/// vertices, since at most one landmark sits at distance zero.
pub fn counting_lower_bound(n: usize, diameter: Dist) -> usize {
    assert!(n >= 2 && diameter >= 1, "counting bound needs n >= 2, D >= 1");
    let d = diameter as u128;
    let n = n as u128;
    for k in 1.. {
        let pow_km1 = d.checked_pow(k - 1).unwrap_or(u128::MAX);
        let reachable = pow_km1
            .saturating_mul(d)
            .saturating_add(pow_km1.saturating_mul(k as u128));
        if reachable >= n {
            return k as usize;
        }
    }
    unreachable!("bound grows without limit")
}
